"""Tile and region geometry together with their polynomial encodings.

Coordinates are ``(column, row)``; the cell at ``(c, r)`` becomes the
monomial ``x^c y^r``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .polyring import Domain, Poly, geometric

Cell = Tuple[int, int]


class RegionSpecError(ValueError):
    """Malformed region spec or region file."""


@dataclass(frozen=True)
class CellSet:
    cells: FrozenSet[Cell]

    @classmethod
    def of(cls, cells: Iterable[Cell]) -> "CellSet":
        return cls(frozenset((int(c), int(r)) for c, r in cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(sorted(self.cells, key=lambda cr: (cr[1], cr[0])))

    def __contains__(self, cell) -> bool:
        return cell in self.cells

    def bbox(self) -> Tuple[int, int, int, int]:
        """``(min_col, min_row, max_col, max_row)``."""
        if not self.cells:
            raise ValueError("empty cell set has no bounding box")
        cols = [c for c, _ in self.cells]
        rows = [r for _, r in self.cells]
        return min(cols), min(rows), max(cols), max(rows)

    @property
    def width(self) -> int:
        c0, _, c1, _ = self.bbox()
        return c1 - c0 + 1

    @property
    def height(self) -> int:
        _, r0, _, r1 = self.bbox()
        return r1 - r0 + 1

    def translate(self, du: int, dv: int) -> "CellSet":
        return CellSet(frozenset((c + du, r + dv) for c, r in self.cells))

    def normalized(self) -> "CellSet":
        c0, r0, _, _ = self.bbox()
        return self.translate(-c0, -r0)

    def is_normalized(self) -> bool:
        c0, r0, _, _ = self.bbox()
        return c0 == 0 and r0 == 0

    def is_ribbon(self) -> bool:
        """No two cells on a common diagonal ``row - col = const``."""
        diags = [r - c for c, r in self.cells]
        return len(diags) == len(set(diags))

    def to_text(self) -> str:
        return "".join(f"{c} {r}\n" for c, r in self)


def cells_to_poly(cells: CellSet, domain: Domain | str = Domain.Z) -> Poly:
    """Sum of ``x^col y^row`` over the cells; coordinates must be nonnegative."""
    if any(c < 0 or r < 0 for c, r in cells.cells):
        raise ValueError("cells must lie in the first quadrant; normalize first")
    return Poly({cell: 1 for cell in cells.cells}, domain)


def region_poly(region: CellSet, domain: Domain | str = Domain.Z) -> Poly:
    """Polynomial of a region after translating it into the first quadrant."""
    return cells_to_poly(region.normalized(), domain)


# -- tiles -----------------------------------------------------------------

def _check_n(n: int, minimum: int = 4) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n % 2 or n < minimum:
        raise ValueError(f"n must be an even integer >= {minimum}, got {n!r}")


def ribbon_L_cells(n: int) -> List[CellSet]:
    """The four translation classes of the ribbon L n-omino."""
    _check_n(n)
    m = n - 1
    return [
        CellSet.of([(0, r) for r in range(m)] + [(1, 0)]),        # tall bar, foot to the right
        CellSet.of([(1, r) for r in range(m)] + [(0, m - 1)]),    # tall bar, cap to the left
        CellSet.of([(c, 0) for c in range(m)] + [(0, 1)]),        # long bar, stem up on the left
        CellSet.of([(c, 1) for c in range(m)] + [(m - 1, 0)]),    # long bar, foot down on the right
    ]


def square_cells() -> CellSet:
    return CellSet.of([(0, 0), (1, 0), (0, 1), (1, 1)])


def _closed_form_generators(n: int) -> List[Poly]:
    x, y = Poly.x(), Poly.y()
    gy, gx = geometric("y", n - 1), geometric("x", n - 1)
    return [gy + x, y ** (n - 2) + x * gy, y + gx, y * gx + x ** (n - 2)]


def ribbon_L_generators(n: int) -> List[Poly]:
    """H1..H4 built from the cell geometry and checked against the closed forms."""
    polys = [cells_to_poly(c) for c in ribbon_L_cells(n)]
    expected = _closed_form_generators(n)
    for i, (got, want) in enumerate(zip(polys, expected), start=1):
        if got != want:
            raise AssertionError(f"H{i} geometry disagrees with its closed form for n={n}")
    return polys


@dataclass(frozen=True)
class TileSet:
    name: str
    n: int
    plus: bool
    generators: Tuple[Tuple[CellSet, Poly], ...]

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def polys(self) -> List[Poly]:
        return [p for _, p in self.generators]

    @property
    def shapes(self) -> List[CellSet]:
        return [c for c, _ in self.generators]


def tileset(n: int, plus: bool = False) -> TileSet:
    shapes = ribbon_L_cells(n)
    ribbon_L_generators(n)  # geometry self-check
    if plus:
        shapes = shapes + [square_cells()]
    gens = tuple((c, cells_to_poly(c)) for c in shapes)
    return TileSet(name=f"T{n}{'+' if plus else ''}", n=n, plus=plus, generators=gens)


# -- closed-form bases -----------------------------------------------------

def c_polys(k: int) -> Dict[str, Poly]:
    """C1(k)..C5(k) for ``k >= 2`` (the general formula; n=4, 6 use their own bases)."""
    x, y = Poly.x(), Poly.y()
    f = (k - 1) // 2
    xy1 = x * y - 1
    return {
        "C1": geometric("y", k + 1) + x * geometric("x", k - 1) + f * xy1,
        "C2": geometric("x", k + 1) + y * geometric("y", k - 1) + f * xy1,
        "C3": x * x * y + x * y - x - 1,
        "C4": x * y * y + x * y - y - 1,
        "C5": (k - 2) * xy1,
    }


def d_polys(k: int) -> Dict[str, Poly]:
    """D1(k)..D3(k), the basis for the family with the 2x2 square, ``k >= 3``."""
    x, y = Poly.x(), Poly.y()
    c = (k - 2) * (k - 1)
    return {
        "D1": y * y + 2 * y + 1,
        "D2": (c - 1) * y + x + c,
        "D3": k * (k - 2) * (y + 1),
    }


def named_basis(n: int, plus: bool = False) -> Dict[str, Poly]:
    _check_n(n)
    k = n // 2
    x, y = Poly.x(), Poly.y()
    if plus:
        if n == 4:
            return {"D1": y * y + 2 * y + 1, "D2": x - y}
        return d_polys(k)
    if n == 4:
        return {"C1": x * x + x + y + 1, "C2": y * y + x + y + 1}
    if n == 6:
        return {
            "C1": x ** 3 + x * x + x + y * y + y + 1,
            "C2": y ** 3 + y * y + y + x * x + x + 1,
            "C3": x * y - 1,
        }
    return c_polys(k)


def paper_basis(n: int, plus: bool = False) -> List[Poly]:
    """Closed-form Groebner basis of the tile ideal over Z."""
    return list(named_basis(n, plus).values())


def aux_tiles(n: int) -> Dict[str, Poly]:
    """Signed tiles ``B = xy - 1`` and ``D = y*H1 - C4``.

    D is a vertical bar of n cells with ``-y*B`` attached.
    """
    _check_n(n, 6)
    x, y = Poly.x(), Poly.y()
    B = x * y - 1
    D = geometric("y", n) - y * B
    H1 = ribbon_L_generators(n)[0]
    if D != y * H1 - c_polys(n // 2)["C4"]:
        raise AssertionError("D tile disagrees with y*H1 - C4")
    return {"B": B, "D": D}


# -- regions ---------------------------------------------------------------

def rect_region(w: int, h: int) -> CellSet:
    if w < 1 or h < 1:
        raise ValueError("rectangle sides must be positive")
    return CellSet(frozenset((i, j) for i in range(w) for j in range(h)))


def inflated_L_region(n: int, factor: int) -> CellSet:
    """Ribbon L with arm along the x-axis and stem up the left, each cell blown up to a block."""
    _check_n(n)
    if factor < 1:
        raise ValueError("factor must be positive")
    base = ribbon_L_cells(n)[2]
    return CellSet(frozenset(
        (c * factor + i, r * factor + j)
        for c, r in base.cells for i in range(factor) for j in range(factor)
    ))


def parse_region_text(text: str) -> CellSet:
    cells = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise RegionSpecError(f"line {lineno}: expected 'col row', got {raw!r}")
        try:
            cells.add((int(parts[0]), int(parts[1])))
        except ValueError:
            raise RegionSpecError(f"line {lineno}: non-integer coordinate in {raw!r}") from None
    if not cells:
        raise RegionSpecError("region has no cells")
    return CellSet(frozenset(cells))


_RECT = re.compile(r"^rect:(\d+)x(\d+)$")
_INFL = re.compile(r"^inflatedL:(\d+):(\d+)$")


def region_from_spec(spec: str) -> CellSet:
    """``rect:WxH``, ``inflatedL:n:factor`` or a path to a region file."""
    m = _RECT.match(spec)
    if m:
        w, h = int(m.group(1)), int(m.group(2))
        if w < 1 or h < 1:
            raise RegionSpecError(f"rectangle sides must be positive: {spec!r}")
        return rect_region(w, h)
    m = _INFL.match(spec)
    if m:
        n, factor = int(m.group(1)), int(m.group(2))
        try:
            return inflated_L_region(n, factor)
        except ValueError as exc:
            raise RegionSpecError(f"{spec!r}: {exc}") from None
    if spec.startswith(("rect:", "inflatedL:")):
        raise RegionSpecError(f"malformed builtin region {spec!r}")
    path = Path(spec)
    if not path.is_file():
        raise RegionSpecError(f"no such region file or builtin: {spec!r}")
    return parse_region_text(path.read_text())
