"""End-to-end acceptance checks, one test per criterion.

Each test prints one ``criterion N: PASS/FAIL`` line; the same lines are
repeated in the pytest terminal summary.  All comparisons are exact.
"""

import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from signedtiling.decide import (barnes_closed_form, closed_form_inflated, closed_form_rect,
                                 inflated_tileable, rect_tileable, scaled_membership, tile_basis)
from signedtiling.groebner import Mode, ideal_contains, normal_form
from signedtiling.identities import verify_basis
from signedtiling.oracle import solve, verify_certificate
from signedtiling.polyring import Domain, Poly, cmp, geometric
from signedtiling.rectcalc import analyse, divisibility, sign_sum_and_derivative
from signedtiling.tilesets import c_polys, inflated_L_region, rect_region, ribbon_L_generators, tileset

pytestmark = pytest.mark.slow


def grid(n):
    return [(p, q) for p in range(1, 3 * n + 1) for q in range(p, 3 * n + 1)]


def rect_mismatches(n, plus, domain, truth):
    return [(p, q) for p, q in grid(n)
            if rect_tileable(n, plus, p, q, domain).yes != truth(p, q)]


def test_criterion_1_basis_verification(acceptance_record):
    t0 = time.perf_counter()
    failed = []
    for n in (4, 6, 8, 10, 12):
        for plus in (False, True):
            rep = verify_basis(n, plus)
            failed += [f"n={n} plus={plus}: {c.name}" for c in rep.checks
                       if not c.passed and not c.informational]
    elapsed = time.perf_counter() - t0
    ok = not failed and elapsed < 30
    acceptance_record(1, ok, f"10 bases, {len(failed)} failing checks, {elapsed:.1f}s")
    assert ok, failed


def test_criterion_2_integer_rectangles(acceptance_record):
    bad = {n: rect_mismatches(n, False, Domain.Z, lambda p, q, n=n: closed_form_rect(n, False, p, q))
           for n in (6, 8)}
    total = sum(map(len, bad.values()))
    acceptance_record(2, total == 0, f"n in (6, 8), p <= q <= 3n: {total} mismatches")
    assert total == 0, bad


def test_criterion_3_rectangles_with_square(acceptance_record):
    bad = {n: rect_mismatches(n, True, Domain.Z, lambda p, q, n=n: closed_form_rect(n, True, p, q))
           for n in (4, 6, 8)}
    total = sum(map(len, bad.values()))
    acceptance_record(3, total == 0, f"n in (4, 6, 8) with square: {total} mismatches")
    assert total == 0, bad


def test_criterion_4_rational_weights(acceptance_record):
    bad = {}
    for n, plus in [(6, False), (8, False), (6, True), (8, True), (4, True)]:
        bad[(n, plus)] = rect_mismatches(n, plus, Domain.Q,
                                         lambda p, q, n=n, plus=plus: barnes_closed_form(n, plus, p, q))
    scaled_fail = [(n, p, q) for n in (6, 8) for p, q in grid(n)
                   if (p % n == 0 or q % n == 0) and not scaled_membership(n, p, q)]
    total = sum(map(len, bad.values()))
    ok = total == 0 and not scaled_fail
    acceptance_record(4, ok, f"{total} rational mismatches, {len(scaled_fail)} scaled-membership failures")
    assert ok, (bad, scaled_fail)


@pytest.mark.xfail(strict=True, reason="n=8 odd factors: the unit inflation is itself a tile, "
                                       "and the oracle finds verified integer tilings at factors 3 and 5")
def test_criterion_5_inflated_L(acceptance_record):
    bad = [(n, f) for n in (6, 8) for f in range(1, 7)
           if inflated_tileable(n, f).yes != closed_form_inflated(n, f)]
    acceptance_record(5, not bad, f"mismatches (n, factor): {bad}")
    assert not bad


def test_criterion_5_mismatch_is_a_real_tiling():
    # companion check: every disputed case has an independently verified integer tiling
    for f in (1, 3, 5):
        region = inflated_L_region(8, f)
        assert inflated_tileable(8, f).yes
        cert = solve(region, tileset(8), Domain.Z, margin=0)
        assert cert is not None and cert.scale == 1 and verify_certificate(cert, region)
    assert all(inflated_tileable(6, f).yes == closed_form_inflated(6, f) for f in range(1, 7))


def test_criterion_6_univariate_engine(acceptance_record):
    failures = []
    for n in (8, 10):
        k = n // 2
        for p in range(1, 4 * n + 1):
            for q in range(p, 4 * n + 1):
                divisible = divisibility(p, q, n)[0]
                if divisible != (p % n == 0 or q % n == 0):
                    failures.append(("divisibility", n, p, q))
                rep = analyse(p, q, n)
                s_minus, deriv = sign_sum_and_derivative(p, q, n)
                if divisible and s_minus * n != 2 * deriv:
                    failures.append(("sign sum", n, p, q))
                want = {"A": p // 2, "B": q // 2, "C": 0}.get(rep.case)
                if want is not None and deriv != want:
                    failures.append(("derivative", n, p, q))
                predicted = bool(divisible and rep.b_count is not None and rep.b_count % (k - 2) == 0)
                if predicted != closed_form_rect(n, False, p, q):
                    failures.append(("prediction", n, p, q))
    acceptance_record(6, not failures, f"n in (8, 10), p <= q <= 4n: {len(failures)} failures")
    assert not failures, failures[:10]


def test_criterion_7_oracle_cross_check(acceptance_record):
    bad = []
    certs = 0
    for n in (4, 6):
        for domain in (Domain.Z, Domain.Q):
            for p in range(1, 13):
                for q in range(p, 13):
                    region = rect_region(p, q)
                    cert = solve(region, tileset(n), domain, margin=n)
                    yes = rect_tileable(n, False, p, q, domain).yes
                    if cert is not None:
                        certs += 1
                        if not verify_certificate(cert, region):
                            bad.append(("certificate", n, domain.value, p, q))
                    if (cert is not None) != yes:
                        bad.append(("disagree", n, domain.value, p, q))
    acceptance_record(7, not bad, f"{certs} certificates, {len(bad)} problems")
    assert not bad, bad


def test_criterion_8_radical_witnesses(acceptance_record):
    results = {}
    for n in (8, 10):
        k = n // 2
        x = Poly.x()
        C = c_polys(k)
        H3 = ribbon_L_generators(n)[2]
        basis = tile_basis(n, False, Domain.Z)
        fx = (k - 2) * geometric("x", 2 * k)
        fy = fx.swap_xy()
        # the witness: (k-2) * x * H3 - C5 equals (k-2) * (1 + ... + x^(2k-1))
        witness_ok = (k - 2) * x * H3 - C["C5"] == fx
        results[n] = witness_ok and ideal_contains(fx, basis) and ideal_contains(fy, basis)
    ok = all(results.values())
    acceptance_record(8, ok, f"{results}")
    assert ok


coeffs = st.integers(-9, 9)
small_polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeffs,
                              max_size=5).map(lambda d: Poly(d, Domain.Z))


@settings(max_examples=200, derandomize=True, deadline=None)
@given(small_polys, small_polys, small_polys)
def _ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    if a and b:
        assert cmp((a * b).HT, a.HT) >= 0


def test_criterion_9_property_suites(acceptance_record):
    problems = []
    try:
        _ring_axioms()
    except AssertionError as exc:
        problems.append(f"ring axioms: {exc}")

    rng = random.Random(1009)
    for n in (4, 6, 8):
        for plus in (False, True):
            for domain in (Domain.Z, Domain.Q):
                G = list(tile_basis(n, plus, domain))
                f = Poly({(rng.randrange(n + 1), rng.randrange(n + 1)): rng.randrange(-4, 5)
                          for _ in range(6)}, domain)
                ref = normal_form(f, G).remainder
                for _ in range(100):
                    perm = G[:]
                    rng.shuffle(perm)
                    tr = normal_form(f, perm, Mode.E, rng=rng)
                    if tr.remainder != ref or not tr.holds_for(f, perm):
                        problems.append(f"normal form n={n} plus={plus} {domain.value}")
                        break

    for _ in range(60):
        n = rng.choice([4, 6, 8])
        plus = rng.random() < 0.5
        p, q = rng.randint(1, 3 * n), rng.randint(1, 3 * n)
        for domain in (Domain.Z, Domain.Q):
            if rect_tileable(n, plus, p, q, domain).yes != rect_tileable(n, plus, q, p, domain).yes:
                problems.append(f"symmetry {n} {plus} {p}x{q} {domain.value}")
        if rect_tileable(n, plus, p, q).yes and not rect_tileable(n, plus, p, q, Domain.Q).yes:
            problems.append(f"monotonicity {n} {plus} {p}x{q}")

    acceptance_record(9, not problems, f"{len(problems)} property violations")
    assert not problems, problems
