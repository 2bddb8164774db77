import random

import pytest

from signedtiling.groebner import (Mode, ResourceCapExceeded, buchberger, d_reduce_step, e_reduce_step,
                                   g_poly, ideal_contains, ideal_equal, is_groebner, normal_form, reduce,
                                   s_poly)
from signedtiling.polyring import Domain, Poly
from signedtiling.tilesets import c_polys, d_polys, named_basis, paper_basis, ribbon_L_generators, tileset

x, y = Poly.x(), Poly.y()
C = c_polys(4)  # n = 8


def test_d_step_examples():
    assert d_reduce_step(2 * x * x * y, C["C3"]) == -2 * x * y + 2 * x + 2
    assert d_reduce_step(x, x * x + 1) is None
    assert d_reduce_step(C["C5"], C["C5"]).is_zero()
    # 3 is not a multiple of 2
    assert d_reduce_step(3 * x * y, C["C5"]) is None


def test_e_step_examples():
    assert e_reduce_step(3 * x * y, C["C5"]) == x * y + 2
    assert e_reduce_step(x * y, C["C5"]) is None
    assert e_reduce_step(-x * y, C["C5"]) == x * y - 2


def test_normal_form_examples():
    c5 = c_polys(5)
    f = s_poly(c5["C3"], c5["C4"])
    assert f == y * c5["C3"] - x * c5["C4"]
    assert reduce(f, [c5["C3"], c5["C4"]]).is_zero()
    assert not reduce(x * y - 1, paper_basis(8)).is_zero()
    tr = normal_form(Poly.zero(), paper_basis(8))
    assert tr.remainder.is_zero() and tr.steps == ()


def test_trace_reconstructs_input():
    G = paper_basis(8)
    f = (x + 2 * y) ** 5 - 7 * x * y ** 3 + 3
    tr = normal_form(f, G)
    assert tr.holds_for(f, G)
    assert tr.reconstruct(G) == f


def test_s_poly_examples():
    b4 = named_basis(4)
    s = s_poly(b4["C1"], b4["C2"])
    assert s == y * y * b4["C1"] - x * x * b4["C2"]
    assert s == x * y * y + y ** 3 + y * y - x ** 3 - x * x * y - x * x
    assert s == (x + y + 1) * (b4["C2"] - b4["C1"])
    assert s_poly(C["C3"], C["C5"]) == C["C5"]
    assert s_poly(C["C1"], C["C1"]).is_zero()


def test_g_poly_bezout():
    f = 4 * x + 1
    g = 6 * y + 1
    h = g_poly(f, g)
    assert h.HT == (1, 1)
    assert abs(h.HC) == 2


@pytest.mark.parametrize("G", [
    paper_basis(8),
    [y * y + 2 * y + 1, x - y],
    [x * x + 1],
])
def test_is_groebner_true(G):
    assert is_groebner(G).is_groebner


def test_is_groebner_false_reports_pair():
    rep = is_groebner(ribbon_L_generators(8))
    assert not rep.is_groebner
    assert rep.failing_pair is not None


def test_buchberger_t4():
    basis = buchberger(ribbon_L_generators(4))
    assert ideal_equal(basis, paper_basis(4))
    assert is_groebner(basis).is_groebner


def test_buchberger_t6_plus_over_q():
    gens = [p.to_domain(Domain.Q) for p in tileset(6, plus=True).polys]
    basis = buchberger(gens)
    assert all(p.domain is Domain.Q for p in basis)
    ref = [p.to_domain(Domain.Q) for p in d_polys(3).values()]
    assert all(ideal_contains(p, basis) for p in ref)
    assert all(ideal_contains(p, ref) for p in basis)


def test_buchberger_idempotent():
    G = paper_basis(10)
    assert ideal_equal(buchberger(G), G)


def test_q_basis_is_monic_and_reduced():
    gens = [p.to_domain(Domain.Q) for p in tileset(8).polys]
    basis = buchberger(gens)
    heads = [p.HT for p in basis]
    assert all(p.HC == 1 for p in basis)
    for i, h in enumerate(heads):
        for j, g in enumerate(heads):
            if i != j:
                assert not (g[0] <= h[0] and g[1] <= h[1])


def test_membership_examples():
    b6 = buchberger(tileset(6).polys)
    assert ideal_contains(x * y - 1, b6)
    H = ribbon_L_generators(6)
    val = (x * y + y - 1) * H[0] - y * H[1]
    assert val == x * x * y + x * y - x - 1
    assert ideal_contains(val, b6)
    assert ideal_equal(paper_basis(8), ribbon_L_generators(8))


def test_step_cap():
    with pytest.raises(ResourceCapExceeded):
        buchberger(ribbon_L_generators(8), step_cap=1)


@pytest.mark.parametrize("n, plus, domain", [
    (4, False, Domain.Z), (8, False, Domain.Z), (10, False, Domain.Z),
    (6, True, Domain.Z), (8, True, Domain.Z), (8, False, Domain.Q),
])
def test_e_normal_form_order_independent(n, plus, domain):
    gens = [p.to_domain(domain) for p in tileset(n, plus).polys]
    G = buchberger(gens)
    rng = random.Random(20261019)
    f = Poly({(rng.randrange(0, n + 2), rng.randrange(0, n + 2)): rng.randrange(-5, 6)
              for _ in range(8)}, domain)
    expected = normal_form(f, G).remainder
    for _ in range(100):
        perm = G[:]
        rng.shuffle(perm)
        tr = normal_form(f, perm, Mode.E, rng=rng)
        assert tr.remainder == expected
        assert tr.holds_for(f, perm)
