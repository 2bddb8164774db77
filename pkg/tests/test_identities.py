import pytest
import sympy as sp

from signedtiling.decide import tile_basis
from signedtiling.groebner import s_poly
from signedtiling.identities import verify_basis
from signedtiling.polyring import Domain, Poly, format_poly
from signedtiling.tilesets import c_polys, tileset

X, Y = sp.symbols("x y")


def to_sympy(p: Poly):
    return sp.Add(*[sp.Rational(c) * X ** a * Y ** b for (a, b), c in p.items()])


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
@pytest.mark.parametrize("plus", [False, True])
def test_verify_basis_passes(n, plus):
    rep = verify_basis(n, plus)
    failed = [c.name for c in rep.checks if not c.passed and not c.informational]
    assert rep.ok, failed
    assert len(rep.checks) >= 4


def test_errata_are_flagged_not_counted():
    rep = verify_basis(8)
    errata = [c for c in rep.checks if c.informational]
    assert errata and all(c.status in ("erratum", "info") for c in errata)


@pytest.mark.parametrize("n, plus", [(4, False), (6, False), (8, False), (10, False),
                                     (4, True), (6, True), (8, True)])
def test_q_basis_matches_sympy(n, plus):
    gens = [to_sympy(p) for p in tileset(n, plus).polys]
    ref = sp.groebner(gens, X, Y, order="grlex", domain=sp.QQ)
    ours = tile_basis(n, plus, Domain.Q)
    assert sorted(sp.srepr(sp.expand(to_sympy(p))) for p in ours) == \
        sorted(sp.srepr(sp.expand(g)) for g in ref.exprs)


@pytest.mark.parametrize("k", [4, 5, 6])
def test_s_polys_of_c_basis_in_sympy(k):
    # every S-polynomial of the closed-form basis lies in the rational ideal
    C = list(c_polys(k).values())
    ref = sp.groebner([to_sympy(c) for c in C], X, Y, order="grlex", domain=sp.QQ)
    for i in range(len(C)):
        for j in range(i + 1, len(C)):
            assert ref.contains(to_sympy(s_poly(C[i], C[j])))


def test_s34_closed_form_in_sympy():
    C = c_polys(5)
    lhs = sp.expand(Y * to_sympy(C["C3"]) - X * to_sympy(C["C4"]))
    assert lhs == sp.expand(to_sympy(C["C4"]) - to_sympy(C["C3"]))
    assert format_poly(s_poly(C["C3"], C["C4"])) == format_poly(C["C4"] - C["C3"])
