"""Univariate rectangle arithmetic for n >= 8.

Collapsing ``x`` onto ``y`` turns a p x q rectangle into
``P(y) = (1 + ... + y^(p-1)) (1 + ... + y^(q-1))`` and each tile into a
multiple of ``Q(y) = 1 + ... + y^(n-1)`` modulo ``B = xy - 1``.  The engine
divides P by Q, evaluates the quotient at -1 in two independent ways and
counts how many extra B tiles a tiling would need.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import List, Optional, Tuple

from .polyring import Domain, Poly, format_poly

IntPoly = List[int]  # coefficients, lowest degree first


def _trim(c: IntPoly) -> IntPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _to_poly(c: IntPoly) -> Poly:
    return Poly({(0, j): v for j, v in enumerate(c) if v}, Domain.Z)


def _divmod_monic(num: IntPoly, den: IntPoly) -> Tuple[IntPoly, IntPoly]:
    den = _trim(den)
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dq = len(den) - 1
    if len(rem) <= dq:
        return [], _trim(rem)
    quot = [0] * (len(rem) - dq)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c:
            quot[i - dq] = c
            for j, d in enumerate(den):
                rem[i - dq + j] -= c * d
    return _trim(quot), _trim(rem)


def _eval(c: IntPoly, t: int) -> int:
    acc = 0
    for v in reversed(c):
        acc = acc * t + v
    return acc


def _deriv(c: IntPoly) -> IntPoly:
    return [j * v for j, v in enumerate(c)][1:]


def _check(p: int, q: int, n: int) -> None:
    if n % 2 or n < 8:
        raise ValueError("the rectangle engine needs an even n >= 8")
    if not 1 <= p <= q:
        raise ValueError("need 1 <= p <= q")


def p_coeffs(p: int, q: int) -> IntPoly:
    """Ramp 1..p, plateau at p, ramp back down to 1."""
    if not 1 <= p <= q:
        raise ValueError("need 1 <= p <= q")
    top = p + q - 2
    return [min(j + 1, p, top - j + 1) for j in range(top + 1)]


def build_P(p: int, q: int) -> Poly:
    return _to_poly(p_coeffs(p, q))


def row_sum_P(p: int, q: int) -> Poly:
    """P as the sum of p shifted rows ``y^i (1 + ... + y^(q-1))``."""
    row = Poly({(0, j): 1 for j in range(q)}, Domain.Z)
    out = Poly.zero()
    for i in range(p):
        out = out + row.mul_monomial((0, i))
    return out


def build_Q(n: int) -> Poly:
    if n < 2 or n % 2:
        raise ValueError("n must be even and >= 2")
    return _to_poly([1] * n)


def case_label(p: int, q: int) -> str:
    pe, qe = p % 2 == 0, q % 2 == 0
    if pe and not qe:
        return "A"
    if qe and not pe:
        return "B"
    if pe and qe:
        return "C"
    return "none"


@dataclass(frozen=True)
class RectReport:
    p: int
    q: int
    n: int
    remainder: Poly
    divisible: bool
    deriv_value: int
    case: str
    s_minus: Optional[int] = None
    b_count: Optional[int] = None
    satisfiable: Optional[bool] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["remainder"] = format_poly(self.remainder)
        return d


def divisibility(p: int, q: int, n: int) -> Tuple[bool, Poly, Poly]:
    """``(divisible, quotient, remainder)`` of P by Q."""
    _check(p, q, n)
    quot, rem = _divmod_monic(p_coeffs(p, q), [1] * n)
    return not rem, _to_poly(quot), _to_poly(rem)


def sign_sum_and_derivative(p: int, q: int, n: int) -> Tuple[Optional[int], int]:
    """``(S(-1), P'(-1))``; S(-1) is None when Q does not divide P.

    S(-1) is taken once from the quotient's coefficients (even-index sum minus
    odd-index sum) and once as ``2 P'(-1) / n``; the two must agree.
    """
    _check(p, q, n)
    coeffs = p_coeffs(p, q)
    deriv = _eval(_deriv(coeffs), -1)
    quot, rem = _divmod_monic(coeffs, [1] * n)
    if rem:
        return None, deriv
    direct = sum(quot[0::2]) - sum(quot[1::2])
    if (2 * deriv) % n or direct != 2 * deriv // n:
        raise AssertionError(f"sign sum {direct} disagrees with 2P'(-1)/n for p={p}, q={q}, n={n}")
    return direct, deriv


def expected_derivative(p: int, q: int) -> Optional[int]:
    """Closed-form P'(-1) by parity case; None when both sides are odd."""
    return {"A": p // 2, "B": q // 2, "C": 0}.get(case_label(p, q))


def b_tile_count(p: int, q: int, n: int) -> Tuple[int, bool]:
    """Number of extra B tiles and whether it is a multiple of k - 2."""
    case = case_label(p, q)
    if case == "none":
        raise ValueError("both sides odd: the rectangle polynomial is never divisible")
    s_minus, _ = sign_sum_and_derivative(p, q, n)
    if s_minus is None:
        raise ValueError("Q does not divide P; no B-tile count")
    k = n // 2
    if case == "A":
        count = s_minus - p // 2
        closed = p * (1 - k) // n
    elif case == "B":
        count = s_minus
        closed = q // n
    else:
        count = s_minus - p // 2 + p // 2
        closed = 0
    if count != closed:
        raise AssertionError(f"B-tile count {count} disagrees with case {case} formula {closed}")
    return count, count % (k - 2) == 0


def analyse(p: int, q: int, n: int) -> RectReport:
    divisible, _, rem = divisibility(p, q, n)
    s_minus, deriv = sign_sum_and_derivative(p, q, n)
    case = case_label(p, q)
    count = sat = None
    if divisible and case != "none":
        count, sat = b_tile_count(p, q, n)
    return RectReport(p, q, n, rem, divisible, deriv, case, s_minus, count, sat)


def predicts_tileable(report: RectReport) -> bool:
    return bool(report.divisible and report.satisfiable)
