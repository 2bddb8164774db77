"""D- and E-reduction, S-/G-polynomials and Buchberger completion.

Over Z this follows the theory of D-Groebner bases over a principal ideal
domain: a set ``G`` is a Groebner basis when every S-polynomial D-reduces to
zero and every G-polynomial is top-D-reducible.  E-reduction (Euclidean
division of coefficients with remainder in ``[0, m)``) then yields unique
normal forms.  Over Q everything collapses to the usual field algorithm.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .polyring import Domain, DomainError, Monomial, Poly, mono_divides, mono_lcm, order_key

DEFAULT_STEP_CAP = 100_000


class Mode(str, Enum):
    D = "D"
    E = "E"


class ResourceCapExceeded(RuntimeError):
    """Buchberger hit its pair-treatment cap; this is not a mathematical verdict."""


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[Tuple[int, object, Monomial], ...]
    remainder: Poly
    quotients: Tuple[Poly, ...]

    def reconstruct(self, basis: Sequence[Poly]) -> Poly:
        out = self.remainder
        for q, g in zip(self.quotients, basis):
            if q:
                out = out + q * g
        return out

    def holds_for(self, f: Poly, basis: Sequence[Poly]) -> bool:
        """Exact check of ``f = sum(quotients[i] * basis[i]) + remainder``."""
        return self.reconstruct(basis) == f


@dataclass(frozen=True)
class BasisReport:
    basis: Tuple[Poly, ...]
    is_groebner: bool
    failing_pair: Optional[Tuple[int, int, Poly]] = None
    reason: str = ""


def _domain_of(polys: Sequence[Poly]) -> Domain:
    doms = {p.domain for p in polys}
    if len(doms) > 1:
        raise DomainError("basis mixes Z and Q polynomials")
    return doms.pop()


def _quotient(c, hc, domain: Domain, mode: Mode):
    """Quotient used to reduce coefficient ``c`` by head coefficient ``hc``, or 0."""
    if domain is Domain.Q:
        return c / hc
    if mode is Mode.D:
        return c // hc if c % hc == 0 else 0
    # E-mode: hc > 0 here, floor division leaves remainder in [0, hc)
    return c // hc


def d_reduce_step(f: Poly, p: Poly) -> Optional[Poly]:
    """One D-reduction of ``f`` by ``p`` at the largest reducible monomial."""
    if p.is_zero():
        raise ValueError("cannot reduce by the zero polynomial")
    if f.domain is not p.domain:
        raise DomainError("domain mismatch")
    ht, hc = p.leading()
    for t, c in f.items():
        if mono_divides(ht, t):
            q = _quotient(c, hc, f.domain, Mode.D)
            if q:
                return f - p.mul_term(q, (t[0] - ht[0], t[1] - ht[1]))
    return None


def e_reduce_step(f: Poly, p: Poly) -> Optional[Poly]:
    """One E-reduction of ``f`` by ``p`` at the largest reducible monomial.

    A term ``a*t`` with ``HT(p) | t`` is reducible when the Euclidean quotient
    of ``a`` by ``HC(p)`` is nonzero.  ``p`` is sign-normalised first.
    """
    if p.is_zero():
        raise ValueError("cannot reduce by the zero polynomial")
    if f.domain is not p.domain:
        raise DomainError("domain mismatch")
    ht, hc = p.leading()
    if hc < 0:
        p, hc = -p, -hc
    for t, c in f.items():
        if mono_divides(ht, t):
            q = _quotient(c, hc, f.domain, Mode.E)
            if q:
                return f - p.mul_term(q, (t[0] - ht[0], t[1] - ht[1]))
    return None


def _prepare(G: Sequence[Poly], domain: Domain):
    heads, polys, signs = [], [], []
    for g in G:
        if g.is_zero():
            raise ValueError("basis contains the zero polynomial")
        if g.domain is not domain:
            raise DomainError("domain mismatch between polynomial and basis")
        ht, hc = g.leading()
        sgn = 1
        if domain is Domain.Z and hc < 0:
            g, hc, sgn = -g, -hc, -1
        heads.append((ht[0], ht[1], hc))
        polys.append(g._t)
        signs.append(sgn)
    return heads, polys, signs


def normal_form(f: Poly, G: Sequence[Poly], mode: Mode | str = Mode.E,
                rng: Optional[random.Random] = None) -> ReductionTrace:
    """Fully reduce ``f`` modulo ``G``.

    Default strategy: always treat the largest remaining monomial, and at that
    monomial use the first applicable basis element.  Passing ``rng`` switches
    to a randomised strategy (random reducible term, random reducer), which is
    only meant for testing that normal forms do not depend on the order.
    """
    mode = Mode(mode)
    domain = f.domain
    heads, polys, signs = _prepare(G, domain)
    if rng is not None:
        return _normal_form_random(f, G, heads, polys, signs, mode, rng)

    g = dict(f._t)
    quot: List[dict] = [dict() for _ in G]
    steps = []
    heap = [(-(a + b), -a, (a, b)) for (a, b) in g]
    heapq.heapify(heap)
    queued = set(g)
    while heap:
        _, _, t = heapq.heappop(heap)
        queued.discard(t)
        t0, t1 = t
        while True:
            c = g.get(t)
            if c is None:
                break
            for i, (h0, h1, hc) in enumerate(heads):
                if h0 <= t0 and h1 <= t1:
                    q = _quotient(c, hc, domain, mode)
                    if q:
                        break
            else:
                break
            s0, s1 = t0 - h0, t1 - h1
            for (a, b), v in polys[i].items():
                k = (a + s0, b + s1)
                nv = g.get(k, 0) - q * v
                if nv:
                    g[k] = nv
                else:
                    g.pop(k, None)
                if k != t and k not in queued and nv:
                    queued.add(k)
                    heapq.heappush(heap, (-(k[0] + k[1]), -k[0], k))
            s = (s0, s1)
            qi = quot[i]
            qv = qi.get(s, 0) + q * signs[i]
            if qv:
                qi[s] = qv
            else:
                qi.pop(s, None)
            steps.append((i, q * signs[i], Monomial(s0, s1)))
    return ReductionTrace(
        steps=tuple(steps),
        remainder=Poly._raw(g, domain),
        quotients=tuple(Poly._raw(q, domain) for q in quot),
    )


def _normal_form_random(f, G, heads, polys, signs, mode, rng):
    domain = f.domain
    g = dict(f._t)
    quot: List[dict] = [dict() for _ in G]
    steps = []
    while True:
        options = []
        for t, c in g.items():
            for i, (h0, h1, hc) in enumerate(heads):
                if h0 <= t[0] and h1 <= t[1]:
                    q = _quotient(c, hc, domain, mode)
                    if q:
                        options.append((t, i, q))
        if not options:
            break
        options.sort(key=lambda o: (order_key(o[0]), o[1]))
        t, i, q = rng.choice(options)
        h0, h1, _ = heads[i]
        s = (t[0] - h0, t[1] - h1)
        for (a, b), v in polys[i].items():
            k = (a + s[0], b + s[1])
            nv = g.get(k, 0) - q * v
            if nv:
                g[k] = nv
            else:
                g.pop(k, None)
        qv = quot[i].get(s, 0) + q * signs[i]
        if qv:
            quot[i][s] = qv
        else:
            quot[i].pop(s, None)
        steps.append((i, q * signs[i], Monomial(*s)))
    return ReductionTrace(tuple(steps), Poly._raw(g, domain),
                          tuple(Poly._raw(q, domain) for q in quot))


def reduce(f: Poly, G: Sequence[Poly], mode: Mode | str = Mode.E) -> Poly:
    """Remainder only."""
    if not G:
        return f
    return normal_form(f, G, mode).remainder


# -- critical pairs --------------------------------------------------------

def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``g = u*a + v*b`` and ``g >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _pair_data(g1: Poly, g2: Poly):
    if g1.is_zero() or g2.is_zero():
        raise ValueError("S-/G-polynomials need nonzero inputs")
    if g1.domain is not g2.domain:
        raise DomainError("domain mismatch")
    t1, a1 = g1.leading()
    t2, a2 = g2.leading()
    t = mono_lcm(t1, t2)
    s1 = (t[0] - t1[0], t[1] - t1[1])
    s2 = (t[0] - t2[0], t[1] - t2[1])
    return t1, a1, t2, a2, s1, s2


def s_poly(g1: Poly, g2: Poly) -> Poly:
    """``b1*s1*g1 - b2*s2*g2`` with ``b_i*a_i = lcm(a1, a2)``, ``s_i*t_i = lcm(t1, t2)``."""
    t1, a1, t2, a2, s1, s2 = _pair_data(g1, g2)
    if g1.domain is Domain.Q:
        b1, b2 = 1 / Fraction(a1), 1 / Fraction(a2)
    else:
        lcm = abs(a1 * a2) // gcd(a1, a2)
        b1, b2 = lcm // a1, lcm // a2
    return g1.mul_term(b1, s1) - g2.mul_term(b2, s2)


def bezout(a1, a2, domain: Domain = Domain.Z) -> Tuple[object, object]:
    """Coefficients ``(c1, c2)`` with ``gcd(a1, a2) = c1*a1 + c2*a2``.

    When one head coefficient divides the other the complementary coefficient
    is chosen to be zero.
    """
    if domain is Domain.Q:
        return 1 / Fraction(a1), 0
    if a2 % a1 == 0:
        return (1 if a1 > 0 else -1), 0
    if a1 % a2 == 0:
        return 0, (1 if a2 > 0 else -1)
    _, u, v = _ext_gcd(a1, a2)
    return u, v


def g_poly(g1: Poly, g2: Poly) -> Poly:
    t1, a1, t2, a2, s1, s2 = _pair_data(g1, g2)
    c1, c2 = bezout(a1, a2, g1.domain)
    out = g1.mul_term(c1, s1) if c1 else Poly.zero(g1.domain)
    if c2:
        out = out + g2.mul_term(c2, s2)
    return out


def top_d_reducible(h: Poly, G: Sequence[Poly]) -> bool:
    if h.is_zero():
        return True
    ht, hc = h.leading()
    for g in G:
        gt, gc = g.leading()
        if mono_divides(gt, ht) and (h.domain is Domain.Q or hc % gc == 0):
            return True
    return False


def _coefficients_comparable(a1, a2) -> bool:
    return a2 % a1 == 0 or a1 % a2 == 0


def is_groebner(G: Sequence[Poly], mode: Mode | str = Mode.D) -> BasisReport:
    """Check the critical-pair criterion for ``G``.

    Over Z every S-polynomial must reduce to zero (D-reduction by default,
    E-reduction when ``mode="E"``) and every G-polynomial must be
    top-D-reducible.  Over Q only S-polynomials are checked.
    """
    G = tuple(G)
    if not G:
        raise ValueError("empty basis")
    domain = _domain_of(G)
    for j in range(len(G)):
        for i in range(j):
            s = s_poly(G[i], G[j])
            if s and reduce(s, G, mode):
                return BasisReport(G, False, (i, j, s), "S-polynomial does not reduce to zero")
            if domain is Domain.Z:
                a1, a2 = G[i].HC, G[j].HC
                if not _coefficients_comparable(a1, a2):
                    gp = g_poly(G[i], G[j])
                    if not top_d_reducible(gp, G):
                        return BasisReport(G, False, (i, j, gp), "G-polynomial is not top-D-reducible")
    return BasisReport(G, True)


# -- completion ------------------------------------------------------------

def _normalise(p: Poly) -> Poly:
    hc = p.HC
    if p.domain is Domain.Q:
        return p.scale(1 / hc) if hc != 1 else p
    return -p if hc < 0 else p


def _basis_sort_key(p: Poly):
    ht, hc = p.leading()
    return (order_key(ht), abs(hc))


def buchberger(G0: Sequence[Poly], step_cap: int = DEFAULT_STEP_CAP) -> List[Poly]:
    """Complete ``G0`` to a Groebner basis of the ideal it generates.

    Pairs are treated smallest lcm of head terms first.  Over Q the product
    criterion skips pairs with coprime head terms; over Z no pair is skipped.
    Raises :class:`ResourceCapExceeded` after ``step_cap`` pair treatments.
    """
    G: List[Poly] = []
    for p in G0:
        if not p.is_zero():
            p = _normalise(p)
            if p not in G:
                G.append(p)
    if not G:
        raise ValueError("no nonzero generators")
    domain = _domain_of(G)

    pairs: list = []

    def add_pairs(j: int) -> None:
        tj = G[j].HT
        for i in range(j):
            ti = G[i].HT
            if domain is Domain.Q and min(ti[0], tj[0]) == 0 and min(ti[1], tj[1]) == 0:
                continue
            heapq.heappush(pairs, (order_key(mono_lcm(ti, tj)), j, i))

    for j in range(len(G)):
        add_pairs(j)

    treated = 0
    while pairs:
        _, j, i = heapq.heappop(pairs)
        treated += 1
        if treated > step_cap:
            raise ResourceCapExceeded(f"more than {step_cap} critical pairs treated")
        s = s_poly(G[i], G[j])
        if s:
            h = reduce(s, G, Mode.D)
            if h:
                G.append(_normalise(h))
                add_pairs(len(G) - 1)
        if domain is Domain.Z and not _coefficients_comparable(G[i].HC, G[j].HC):
            gp = g_poly(G[i], G[j])
            if not top_d_reducible(gp, G):
                G.append(_normalise(gp))
                add_pairs(len(G) - 1)
    return _self_reduce(G, domain)


def _self_reduce(G: List[Poly], domain: Domain) -> List[Poly]:
    # drop elements whose head monomial is divisible by another head monomial
    G = sorted(G, key=_basis_sort_key)
    keep: List[Poly] = []
    for g in G:
        gt, gc = g.leading()
        redundant = False
        for h in keep:
            ht, hc = h.leading()
            if mono_divides(ht, gt) and (domain is Domain.Q or gc % hc == 0):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    # reduce tails against the rest; head monomials are untouched
    out = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1:]
        ht, hc = g.leading()
        head = Poly.monomial(ht[0], ht[1], hc, domain)
        tail = g - head
        if others and tail:
            tail = reduce(tail, others, Mode.E)
        out.append(head + tail)
    return sorted(out, key=_basis_sort_key)


def ideal_contains(f: Poly, G: Sequence[Poly]) -> bool:
    """Membership test; ``G`` must already be a Groebner basis."""
    if f.is_zero():
        return True
    return reduce(f, G, Mode.E).is_zero()


def ideal_equal(G1: Sequence[Poly], G2: Sequence[Poly], step_cap: int = DEFAULT_STEP_CAP) -> bool:
    B1 = buchberger(G1, step_cap)
    B2 = buchberger(G2, step_cap)
    return all(ideal_contains(g, B2) for g in G1) and all(ideal_contains(g, B1) for g in G2)
