"""Sparse bivariate polynomials over Z or Q.

Monomials are pairs ``(a, b)`` standing for ``x^a y^b``.  Terms are ordered by
total degree, ties broken lexicographically with ``x > y``::

    1 < y < x < y^2 < xy < x^2 < y^3 < ...

Coefficients are Python ints (domain Z) or ``fractions.Fraction`` (domain Q),
so there is no overflow anywhere in the kernel.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Tuple, Union

Number = Union[int, Fraction]


class Domain(str, Enum):
    Z = "Z"
    Q = "Q"


class DomainError(ValueError):
    """Operands live in different coefficient domains."""


class Monomial(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return _mono_str((self.a, self.b)) or "1"


def order_key(m: Tuple[int, int]) -> Tuple[int, int]:
    """Sort key realising the degree-lexicographic order with x > y."""
    return (m[0] + m[1], m[0])


def cmp(m1: Tuple[int, int], m2: Tuple[int, int]) -> int:
    """Three-way comparison: -1, 0 or 1."""
    k1, k2 = order_key(m1), order_key(m2)
    return (k1 > k2) - (k1 < k2)


def mono_divides(m: Tuple[int, int], t: Tuple[int, int]) -> bool:
    return m[0] <= t[0] and m[1] <= t[1]


def mono_lcm(m1: Tuple[int, int], m2: Tuple[int, int]) -> Monomial:
    return Monomial(max(m1[0], m2[0]), max(m1[1], m2[1]))


def mono_mul(m1: Tuple[int, int], m2: Tuple[int, int]) -> Monomial:
    return Monomial(m1[0] + m2[0], m1[1] + m2[1])


def mono_div(t: Tuple[int, int], m: Tuple[int, int]) -> Monomial:
    if not mono_divides(m, t):
        raise ValueError(f"{Monomial(*m)} does not divide {Monomial(*t)}")
    return Monomial(t[0] - m[0], t[1] - m[1])


def _coerce(c, domain: Domain) -> Number:
    if domain is Domain.Z:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise DomainError(f"non-integer coefficient {c} in Z[x,y]")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            raise TypeError(f"bad coefficient {c!r}")
        return c
    return Fraction(c)


class Poly:
    """Immutable sparse polynomial in ``x, y``.

    ``Poly({(2, 1): 1, (0, 0): -1})`` is ``x^2*y - 1`` over Z.
    """

    __slots__ = ("_t", "domain", "_hash")

    def __init__(self, terms: Mapping[Tuple[int, int], Number] | None = None,
                 domain: Domain | str = Domain.Z):
        domain = Domain(domain)
        clean = {}
        for m, c in (terms or {}).items():
            a, b = m
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in {m}; translate into the first quadrant first")
            c = _coerce(c, domain)
            if c:
                clean[(a, b)] = c
        self._t = clean
        self.domain = domain
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, domain: Domain) -> "Poly":
        # trusted constructor: keys are tuples, values nonzero and in-domain
        p = object.__new__(cls)
        p._t = terms
        p.domain = domain
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, domain: Domain | str = Domain.Z) -> "Poly":
        return cls._raw({}, Domain(domain))

    @classmethod
    def const(cls, c: Number, domain: Domain | str = Domain.Z) -> "Poly":
        return cls({(0, 0): c}, domain)

    @classmethod
    def monomial(cls, a: int, b: int, c: Number = 1, domain: Domain | str = Domain.Z) -> "Poly":
        return cls({(a, b): c}, domain)

    @classmethod
    def x(cls, domain: Domain | str = Domain.Z) -> "Poly":
        return cls({(1, 0): 1}, domain)

    @classmethod
    def y(cls, domain: Domain | str = Domain.Z) -> "Poly":
        return cls({(0, 1): 1}, domain)

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> Mapping[Tuple[int, int], Number]:
        return MappingProxyType(self._t)

    def items(self) -> Iterator[Tuple[Monomial, Number]]:
        """Terms in descending term order."""
        for m in sorted(self._t, key=order_key, reverse=True):
            yield Monomial(*m), self._t[m]

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def coeff(self, a: int, b: int) -> Number:
        return self._t.get((a, b), 0)

    def degree(self) -> int:
        return max((a + b for a, b in self._t), default=-1)

    def leading(self) -> Tuple[Monomial, Number]:
        """``(HT, HC)``; the head monomial is ``HC * HT``."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._t, key=order_key)
        return Monomial(*m), self._t[m]

    @property
    def HT(self) -> Monomial:
        return self.leading()[0]

    @property
    def HC(self) -> Number:
        return self.leading()[1]

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "Poly") -> None:
        if other.domain is not self.domain:
            raise DomainError(f"cannot combine {self.domain.value} and {other.domain.value} polynomials")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(other, self.domain)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for m, c in other._t.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Poly._raw(t, self.domain)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._t.items()}, self.domain)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        t = dict(self._t)
        for m, c in other._t.items():
            v = t.get(m, 0) - c
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Poly._raw(t, self.domain)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        t: dict = {}
        for (a1, b1), c1 in self._t.items():
            for (a2, b2), c2 in other._t.items():
                k = (a1 + a2, b1 + b2)
                t[k] = t.get(k, 0) + c1 * c2
        return Poly._raw({m: c for m, c in t.items() if c}, self.domain)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        out = Poly.const(1, self.domain)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: Number) -> "Poly":
        c = _coerce(c, self.domain)
        if not c:
            return Poly.zero(self.domain)
        return Poly._raw({m: v * c for m, v in self._t.items()}, self.domain)

    def mul_term(self, c: Number, m: Tuple[int, int]) -> "Poly":
        """Multiply by the single term ``c * x^m[0] * y^m[1]``."""
        c = _coerce(c, self.domain)
        if not c:
            return Poly.zero(self.domain)
        s, u = m
        return Poly._raw({(a + s, b + u): v * c for (a, b), v in self._t.items()}, self.domain)

    def mul_monomial(self, m: Tuple[int, int]) -> "Poly":
        s, u = m
        if s < 0 or u < 0:
            raise ValueError("monomial exponents must be nonnegative")
        return Poly._raw({(a + s, b + u): v for (a, b), v in self._t.items()}, self.domain)

    def swap_xy(self) -> "Poly":
        return Poly._raw({(b, a): c for (a, b), c in self._t.items()}, self.domain)

    def to_domain(self, domain: Domain | str) -> "Poly":
        domain = Domain(domain)
        if domain is self.domain:
            return self
        return Poly(self._t, domain)

    def derivative_y(self) -> "Poly":
        return Poly._raw({(a, b - 1): b * c for (a, b), c in self._t.items() if b}, self.domain)

    def derivative_x(self) -> "Poly":
        return Poly._raw({(a - 1, b): a * c for (a, b), c in self._t.items() if a}, self.domain)

    def evaluate(self, x0: Number, y0: Number) -> Number:
        if self.domain is Domain.Z:
            x0, y0 = _coerce(x0, Domain.Z), _coerce(y0, Domain.Z)
        else:
            x0, y0 = Fraction(x0), Fraction(y0)
        total = 0
        for (a, b), c in self._t.items():
            total += c * x0 ** a * y0 ** b
        return total

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.domain is other.domain and self._t == other._t
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return not self._t
            return self._t == {(0, 0): other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain, frozenset(self._t.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r}, {self.domain.value})"

    def __str__(self) -> str:
        return format_poly(self)


def poly_sum(polys: Iterable[Poly], domain: Domain | str = Domain.Z) -> Poly:
    t: dict = {}
    for p in polys:
        for m, c in p._t.items():
            t[m] = t.get(m, 0) + c
    return Poly._raw({m: c for m, c in t.items() if c}, Domain(domain))


# -- text format -------------------------------------------------------------

def _mono_str(m: Tuple[int, int]) -> str:
    a, b = m
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text, e.g. ``x^2*y + x*y - x - 1``."""
    if not p._t:
        return "0"
    out = []
    for i, (m, c) in enumerate(p.items()):
        neg = c < 0
        mag = -c if neg else c
        ms = _mono_str(m)
        if not ms:
            body = str(mag)
        elif mag == 1:
            body = ms
        else:
            body = f"{mag}*{ms}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TERM_SPLIT = re.compile(r"\s*([+-])\s*")
_FACTOR = re.compile(r"^(?:(\d+)(?:/(\d+))?|([xy])(?:\^(\d+))?)$")


def parse_poly(text: str, domain: Domain | str | None = None) -> Poly:
    """Inverse of :func:`format_poly`.

    Accepts ``c*x^a*y^b`` terms joined by ``+``/``-``; factors may come in any
    order and repeat.  The domain defaults to Q when a ``/`` occurs, else Z.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if domain is None:
        domain = Domain.Q if "/" in s else Domain.Z
    domain = Domain(domain)
    if s[0] not in "+-":
        s = "+" + s
    pieces = _TERM_SPLIT.split(s)
    # split yields ['', sign, term, sign, term, ...]
    if pieces[0].strip():
        raise ValueError(f"cannot parse {text!r}")
    terms: dict = {}
    for sign, body in zip(pieces[1::2], pieces[2::2]):
        body = body.strip()
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coef: Number = Fraction(1)
        a = b = 0
        for factor in body.split("*"):
            mt = _FACTOR.match(factor.strip())
            if not mt:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            num, den, var, exp = mt.groups()
            if num is not None:
                coef *= Fraction(int(num), int(den) if den else 1)
            else:
                e = int(exp) if exp else 1
                if var == "x":
                    a += e
                else:
                    b += e
        if sign == "-":
            coef = -coef
        terms[(a, b)] = terms.get((a, b), 0) + coef
    return Poly(terms, domain)


def geometric(var: str, m: int, domain: Domain | str = Domain.Z) -> Poly:
    """``1 + v + ... + v^(m-1)`` for ``v`` in {"x", "y"}."""
    if var == "x":
        return Poly({(i, 0): 1 for i in range(m)}, domain)
    if var == "y":
        return Poly({(0, i): 1 for i in range(m)}, domain)
    raise ValueError(var)
