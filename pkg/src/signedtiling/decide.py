"""Signed-tiling decisions: Groebner membership with a test-monomial search,
closed-form predicates for rectangles and inflated L regions, and grid scans."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .groebner import (DEFAULT_STEP_CAP, Mode, ReductionTrace, ResourceCapExceeded,
                       buchberger, ideal_contains, normal_form, reduce)
from .polyring import Domain, Monomial, Poly
from .tilesets import CellSet, TileSet, inflated_L_region, rect_region, region_poly, tileset


class Answer(str, Enum):
    YES = "yes"
    NO = "no"


class Method(str, Enum):
    GROEBNER = "groebner"
    CLOSED_FORM = "closed_form"
    ORACLE = "oracle"


@dataclass(frozen=True)
class Decision:
    answer: Answer
    weight_domain: Domain
    method: Method
    test_monomial: Optional[Monomial] = None
    trace: Optional[ReductionTrace] = None
    test_bound: Optional[int] = None

    @property
    def yes(self) -> bool:
        return self.answer is Answer.YES

    def to_dict(self) -> dict:
        out = {
            "answer": self.answer.value,
            "weight_domain": self.weight_domain.value,
            "method": self.method.value,
            "test_monomial": list(self.test_monomial) if self.test_monomial else None,
        }
        if self.test_bound is not None:
            out["search_box"] = [0, self.test_bound]
        if self.trace is not None:
            out["reduction_steps"] = len(self.trace.steps)
        return out


# -- basis cache -----------------------------------------------------------

_BASIS_CACHE: Dict[Tuple[int, bool, Domain], Tuple[Poly, ...]] = {}


def tile_basis(n: int, plus: bool, domain: Domain | str, step_cap: int = DEFAULT_STEP_CAP) -> Tuple[Poly, ...]:
    """Groebner basis of the tile ideal, completed from the generators once per process."""
    domain = Domain(domain)
    key = (n, plus, domain)
    basis = _BASIS_CACHE.get(key)
    if basis is None:
        gens = [p.to_domain(domain) for p in tileset(n, plus).polys]
        basis = tuple(buchberger(gens, step_cap=step_cap))
        _BASIS_CACHE[key] = basis
    return basis


def clear_basis_cache() -> None:
    _BASIS_CACHE.clear()


# -- Groebner decision -----------------------------------------------------

def membership_search(f: Poly, basis: Tuple[Poly, ...], test_bound: int) -> Optional[Monomial]:
    """First ``(a, b)`` in lexicographic order with ``x^a y^b f`` in the ideal.

    Uses ``m*f in I  <=>  m*NF(f) in I`` so the large polynomial is reduced once.
    """
    r = reduce(f, basis, Mode.E)
    if r.is_zero():
        return Monomial(0, 0)
    for a in range(test_bound + 1):
        for b in range(test_bound + 1):
            if (a, b) == (0, 0):
                continue
            if reduce(r.mul_monomial((a, b)), basis, Mode.E).is_zero():
                return Monomial(a, b)
    return None


def signed_tileable(region: CellSet, tiles: TileSet, domain: Domain | str = Domain.Z,
                    test_bound: Optional[int] = None, step_cap: int = DEFAULT_STEP_CAP,
                    with_trace: bool = True) -> Decision:
    """Decide whether ``region`` has a signed tiling with weights in ``domain``.

    A "no" only means that no test monomial in ``[0, test_bound]^2`` worked.
    """
    if len(region) == 0:
        raise ValueError("region is empty")
    domain = Domain(domain)
    bound = tiles.n if test_bound is None else test_bound
    if bound < 0:
        raise ValueError("test_bound must be nonnegative")
    basis = tile_basis(tiles.n, tiles.plus, domain, step_cap)
    f = region_poly(region, domain)
    hit = membership_search(f, basis, bound)
    if hit is None:
        return Decision(Answer.NO, domain, Method.GROEBNER, test_bound=bound)
    trace = None
    if with_trace:
        trace = normal_form(f.mul_monomial(hit), basis, Mode.E)
        if not trace.remainder.is_zero():
            raise AssertionError("membership shortcut and full reduction disagree")
    return Decision(Answer.YES, domain, Method.GROEBNER, hit, trace, bound)


def rect_tileable(n: int, plus: bool, p: int, q: int, domain: Domain | str = Domain.Z,
                  test_bound: Optional[int] = None, with_trace: bool = False) -> Decision:
    return signed_tileable(rect_region(p, q), tileset(n, plus), domain, test_bound,
                           with_trace=with_trace)


# -- closed forms ----------------------------------------------------------

def _check_even(n: int, minimum: int) -> None:
    if n % 2 or n < minimum:
        raise ValueError(f"n must be even and >= {minimum}")


def closed_form_rect(n: int, plus: bool, p: int, q: int) -> bool:
    """Integer-weight tileability of a p x q rectangle."""
    _check_even(n, 4)
    even = p % 2 == 0 and q % 2 == 0
    if n == 4:
        return even if plus else even and (p % 4 == 0 or q % 4 == 0)
    big = n * (n // 2 - 2)
    odd_case = (p % 2 == 1 and q % big == 0) or (q % 2 == 1 and p % big == 0)
    if plus:
        return even or odd_case
    return (even and (p % n == 0 or q % n == 0)) or odd_case


def closed_form_inflated(n: int, factor: int) -> bool:
    """Integer-weight tileability of the inflated L region."""
    _check_even(n, 6)
    return factor % 2 == 0 or factor % (n // 2 - 2) == 0


def barnes_closed_form(n: int, plus: bool, p: int, q: int) -> bool:
    """Tileability with rational (equivalently complex) weights."""
    if plus:
        _check_even(n, 4)
        if n == 4:
            return p % 2 == 0 and q % 2 == 0
        return p % 2 == 0 or q % 2 == 0
    if n == 4:
        raise ValueError("no complex-weight criterion is known for the four-cell L without the square")
    _check_even(n, 6)
    return p % n == 0 or q % n == 0


def closed_form_for(n: int, plus: bool, domain: Domain | str, p: int, q: int) -> bool:
    if Domain(domain) is Domain.Z:
        return closed_form_rect(n, plus, p, q)
    return barnes_closed_form(n, plus, p, q)


def scaled_membership(n: int, p: int, q: int) -> bool:
    """Is ``(k-2) * f_R`` in the integer tile ideal, for a rectangle with a side divisible by n?"""
    _check_even(n, 6)
    if p % n and q % n:
        raise ValueError("requires a side divisible by n")
    basis = tile_basis(n, False, Domain.Z)
    f = region_poly(rect_region(p, q)) * (n // 2 - 2)
    return ideal_contains(f, basis)


# -- scans -----------------------------------------------------------------

@dataclass(frozen=True)
class ScanRow:
    p: int
    q: int
    groebner: Optional[bool]
    closed_form: bool
    test_monomial: Optional[Monomial] = None
    error: str = ""

    @property
    def agree(self) -> bool:
        return self.groebner is not None and self.groebner == self.closed_form


def _scan_cell(args) -> ScanRow:
    n, plus, domain, p, q, test_bound, step_cap = args
    closed = closed_form_for(n, plus, domain, p, q)
    try:
        basis = tile_basis(n, plus, domain, step_cap)
    except ResourceCapExceeded as exc:
        return ScanRow(p, q, None, closed, error=f"resource: {exc}")
    f = region_poly(rect_region(p, q), domain)
    hit = membership_search(f, basis, n if test_bound is None else test_bound)
    return ScanRow(p, q, hit is not None, closed, hit)


def scan(n: int, plus: bool, domain: Domain | str, p_max: int, q_max: int,
         test_bound: Optional[int] = None, jobs: int = 1,
         step_cap: int = DEFAULT_STEP_CAP) -> List[ScanRow]:
    """Compare the Groebner decision with the closed form on every p x q, 1 <= p <= p_max, 1 <= q <= q_max."""
    domain = Domain(domain)
    cells = [(n, plus, domain, p, q, test_bound, step_cap)
             for p in range(1, p_max + 1) for q in range(1, q_max + 1)]
    if jobs == 0:
        jobs = os.cpu_count() or 1
    if jobs <= 1:
        return [_scan_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_cell, cells, chunksize=max(1, len(cells) // (4 * jobs))))


def inflated_tileable(n: int, factor: int, test_bound: Optional[int] = None) -> Decision:
    return signed_tileable(inflated_L_region(n, factor), tileset(n, False), Domain.Z, test_bound,
                           with_trace=False)
