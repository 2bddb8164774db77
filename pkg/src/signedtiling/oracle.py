"""Brute-force signed-tiling solver.

Every translate of every tile inside a window around the region is a column
of a 0/1 matrix A whose rows are the window cells.  A signed tiling with
integer weights is an integer solution of ``A w = 1_region``; with rational
weights a rational one.  Both are decided exactly from one column echelon
form built with Euclidean column steps, which never leaves the integers.
The column operations are recorded, so a solution comes with explicit
weights.  A missing solution only means none exists inside the window.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Dict, List, NamedTuple, Optional, Tuple

import numpy as np

from .polyring import Domain
from .tilesets import CellSet, TileSet, tileset

Window = Tuple[int, int, int, int]  # min_col, min_row, max_col, max_row (inclusive)


class Placement(NamedTuple):
    tile_index: int
    u: int
    v: int


@dataclass(frozen=True)
class Certificate:
    tileset_name: str
    n: int
    plus: bool
    scale: int
    entries: Tuple[Tuple[Placement, int], ...]
    window: Window

    def to_text(self) -> str:
        c0, r0, c1, r1 = self.window
        lines = [f"# tileset {self.tileset_name} n={self.n} plus={int(self.plus)} "
                 f"scale={self.scale} window={c0},{r0},{c1},{r1}"]
        lines += [f"{p.tile_index} {p.u} {p.v} {w}" for p, w in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("# tileset "):
            raise ValueError("certificate header missing")
        fields = lines[0][len("# tileset "):].split()
        name = fields[0]
        kv = dict(f.split("=", 1) for f in fields[1:])
        window = tuple(int(t) for t in kv["window"].split(","))
        entries = []
        for ln in lines[1:]:
            if ln.lstrip().startswith("#"):
                continue
            i, u, v, w = (int(t) for t in ln.split())
            entries.append((Placement(i, u, v), w))
        return cls(name, int(kv["n"]), kv["plus"] == "1", int(kv["scale"]), tuple(entries), window)


def default_window(region: CellSet, margin: int) -> Window:
    if margin < 0:
        raise ValueError("margin must be nonnegative")
    c0, r0, c1, r1 = region.bbox()
    return c0 - margin, r0 - margin, c1 + margin, r1 + margin


def enumerate_placements(tiles: TileSet, window: Window) -> List[Placement]:
    """All translates fully inside the window, ordered by tile, then u, then v."""
    c0, r0, c1, r1 = window
    out = []
    for i, shape in enumerate(tiles.shapes):
        shape = shape.normalized()
        w, h = shape.width, shape.height
        for u in range(c0, c1 - w + 2):
            for v in range(r0, r1 - h + 2):
                out.append(Placement(i, u, v))
    return out


def _placement_cells(shapes: List[CellSet], p: Placement):
    return [(c + p.u, r + p.v) for c, r in shapes[p.tile_index].cells]


_INT64_SAFE = 2 ** 62


def _as_object(a: np.ndarray) -> np.ndarray:
    return a.astype(object) if a.dtype != object else a


class _ColumnEchelon:
    """Column-style Hermite elimination of a dense integer matrix.

    Rows of A are processed in order; at each row the active columns with a
    nonzero entry are combined by Euclidean column steps until one is left,
    which becomes that row's pivot.  The echelon matrix M equals ``A @ U``
    for a unimodular U that is never formed: the column steps are logged and
    replayed backwards to turn a solution of ``M y = b`` into ``x = U y``.
    M is stored transposed (one contiguous array row per column of A).
    """

    def __init__(self, A: np.ndarray):
        self.MT = np.ascontiguousarray(A.T, dtype=np.int64)
        self.active = np.ones(A.shape[1], dtype=bool)
        self.pivots: Dict[int, int] = {}
        self.log: List[Tuple[int, np.ndarray, np.ndarray]] = []

    def _combine(self, others: np.ndarray, piv: int, q: np.ndarray) -> None:
        mat = self.MT
        block = mat[others]
        if mat.dtype != object:
            bound = float(np.abs(block).max()) + float(np.abs(q).max()) * float(np.abs(mat[piv]).max())
            if bound >= _INT64_SAFE:
                self.MT = mat = _as_object(mat)
                block = mat[others]
                q = q.astype(object)
        mat[others] = block - np.outer(q, mat[piv])
        self.log.append((piv, others, q))

    def eliminate_row(self, r: int) -> None:
        col_r = self.MT[:, r]
        while True:
            idx = np.flatnonzero(self.active & (col_r != 0))
            if idx.size == 0:
                return
            if idx.size == 1:
                j = int(idx[0])
                self.active[j] = False
                self.pivots[r] = j
                return
            vals = col_r[idx]
            piv = int(idx[int(np.argmin(np.abs(vals)))])  # ties go to the lowest column
            others = idx[idx != piv]
            q = col_r[others] // col_r[piv]
            self._combine(others, piv, q)
            col_r = self.MT[:, r]

    def run(self) -> None:
        for r in range(self.MT.shape[1]):
            self.eliminate_row(r)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _apply_u(self, y: List[int]) -> List[int]:
        # column step "col[o] -= q_o * col[piv]" maps y to y[piv] -= sum(q_o * y[o])
        for piv, others, q in reversed(self.log):
            acc = 0
            for o, qo in zip(others.tolist(), q.tolist()):
                if y[o]:
                    acc += qo * y[o]
            if acc:
                y[piv] -= acc
        return y

    def forward_solve(self, b: np.ndarray, integral: bool) -> Optional[Tuple[List[int], int]]:
        """Solve ``A x = b`` through the echelon form.

        Returns ``(x_scaled, s)`` with ``A x_scaled = s b``; ``s == 1`` when
        ``integral``.  None when no solution exists (over Z or Q as asked).
        """
        resid = [int(v) for v in b]
        y = [0] * self.MT.shape[0]
        s = 1
        for r in range(len(resid)):
            v = resid[r]
            if not v:
                continue
            j = self.pivots.get(r)
            if j is None:
                return None  # b leaves the column span: rank([A|b]) > rank(A)
            pv = int(self.MT[j, r])
            if v % pv:
                if integral:
                    return None
                m = abs(pv) // gcd(v, pv)
                resid = [e * m for e in resid]
                y = [e * m for e in y]
                s *= m
                v = resid[r]
            t = v // pv
            col = self.MT[j]
            for i in np.flatnonzero(col):
                resid[i] -= t * int(col[i])
            y[j] += t
        return self._apply_u(y), s


def solve(region: CellSet, tiles: TileSet, domain: Domain | str = Domain.Z,
          margin: Optional[int] = None, window: Optional[Window] = None) -> Optional[Certificate]:
    """Search for a signed tiling inside a window; None means none in this window.

    Over Z the integer column echelon form decides solvability exactly.  Over
    Q the same fraction-free echelon form is used (unimodular column steps
    keep the rational span) and solvability is the rank comparison
    ``rank(A) == rank([A|b])``, read off the forward substitution.
    """
    domain = Domain(domain)
    if len(region) == 0:
        raise ValueError("region is empty")
    if window is None:
        window = default_window(region, tiles.n if margin is None else margin)
    c0, r0, c1, r1 = window
    if any(not (c0 <= c <= c1 and r0 <= r <= r1) for c, r in region.cells):
        raise ValueError("region not contained in window")
    width = c1 - c0 + 1
    nrows = width * (r1 - r0 + 1)
    placements = enumerate_placements(tiles, window)
    if not placements:
        return None
    shapes = [s.normalized() for s in tiles.shapes]

    # sparse incidence first, then one dense matrix for the elimination
    rows, cols = [], []
    for j, p in enumerate(placements):
        for c, r in _placement_cells(shapes, p):
            rows.append((r - r0) * width + (c - c0))
            cols.append(j)
    A = np.zeros((nrows, len(placements)), dtype=np.int64)
    A[rows, cols] = 1
    b = np.zeros(nrows, dtype=np.int64)
    for c, r in region.cells:
        b[(r - r0) * width + (c - c0)] = 1

    ech = _ColumnEchelon(A)
    ech.run()
    sol = ech.forward_solve(b, integral=domain is Domain.Z)
    if sol is None:
        return None
    x, s = sol
    g = s
    for w in x:
        g = gcd(g, w)
    scale = s // g
    entries = tuple((placements[j], w // g) for j, w in enumerate(x) if w)
    cert = Certificate(tiles.name, tiles.n, tiles.plus, scale, entries, window)
    if not verify_certificate(cert, region):
        raise AssertionError("solver produced a certificate that does not verify")
    return cert


def verify_certificate(cert: Certificate, region: CellSet) -> bool:
    """Weighted cell count is ``scale`` on the region and 0 everywhere else."""
    if cert.scale < 1:
        return False
    shapes = [s.normalized() for s in tileset(cert.n, cert.plus).shapes]
    c0, r0, c1, r1 = cert.window
    total: Counter = Counter()
    for p, w in cert.entries:
        if w == 0 or not 0 <= p.tile_index < len(shapes):
            return False
        for c, r in shapes[p.tile_index].cells:
            cell = (c + p.u, r + p.v)
            if not (c0 <= cell[0] <= c1 and r0 <= cell[1] <= r1):
                return False
            total[cell] += w
    for cell in region.cells:
        if total.get(cell, 0) != cert.scale:
            return False
    return all(v == 0 or cell in region.cells for cell, v in total.items())


def solve_rect(n: int, plus: bool, p: int, q: int, domain: Domain | str = Domain.Z,
               margin: Optional[int] = None) -> Optional[Certificate]:
    from .tilesets import rect_region
    return solve(rect_region(p, q), tileset(n, plus), domain, margin)
