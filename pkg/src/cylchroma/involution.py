"""The sign-reversing involution on signed P-arrays behind the cylindric Jacobi-Trudi identity.

Columns and rows are 1-based.  Permutations are tuples ``pi`` with
``pi[i-1] = pi(i)``.
"""
from __future__ import annotations

import hashlib
import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import NoIntersectionError, NotInBError, PreconditionError, SizeError
from .poset import Poset, longest_chain
from .shapes import ColumnDiagram, CylindricShape, Partition, conjugate, padded
from .tableaux import PFilling, enum_p_arrays, glue_filling, is_p_tableau
from .upoly import k_tuples, krange

log = logging.getLogger(__name__)

MAX_B_WIDTH = 4
MAX_B_POSET = 5


def sign(pi: tuple[int, ...]) -> int:
    s = 1
    seen = [False] * len(pi)
    for start in range(len(pi)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = pi[x] - 1
            length += 1
        if length % 2 == 0:
            s = -s
    return s


@dataclass(frozen=True)
class ShiftedColumns:
    pi: tuple[int, ...]
    k: tuple[int, ...]
    lam: Partition
    d: int

    def __post_init__(self):
        if sorted(self.pi) != list(range(1, len(self.pi) + 1)):
            raise ValueError(f"{self.pi} is not a permutation")
        if len(self.k) != len(self.pi) or sum(self.k) != 0:
            raise ValueError("k must have one entry per column and sum to zero")
        if self.lam and len(self.pi) != self.lam[0]:
            raise ValueError("permutation size must be lambda_1")


def shifted_heights(sc: ShiftedColumns) -> tuple[int, ...]:
    """``k_i (lambda_1 + d) + lambda'_{pi(i)} + i - pi(i)`` for each column i."""
    width = len(sc.pi)
    lc = padded(conjugate(sc.lam), width)
    period = width + sc.d
    return tuple(sc.k[i - 1] * period + lc[sc.pi[i - 1] - 1] + i - sc.pi[i - 1]
                 for i in range(1, width + 1))


@dataclass(frozen=True)
class BTriple:
    sc: ShiftedColumns
    mu: Partition
    arr: PFilling

    def __post_init__(self):
        width = len(self.sc.pi)
        expected = ColumnDiagram(shifted_heights(self.sc), padded(conjugate(self.mu), width))
        if self.arr.diagram != expected:
            raise ValueError(f"array shape {self.arr.diagram} differs from {expected}")

    @property
    def sign(self) -> int:
        return sign(self.sc.pi)

    def key(self) -> tuple:
        return self.sc.pi, self.sc.k, self.arr.diagram.alpha, self.arr.columns


class Intersection(NamedTuple):
    i: int
    j: int
    point: tuple[int, int]
    witness: tuple[int, int]


def find_intersections(arr: PFilling, p: Poset, strict: bool = True) -> list[Intersection]:
    """All ``(i, j, (m, j), (m - j + i + 1, i))`` where columns ``i < j`` intersect.

    The witness row must exceed ``beta_i`` (``strict=False`` relaxes this to
    ``>=``, which never changes the result: row ``beta_i`` holds neither an
    entry nor an empty position).
    """
    cd = arr.diagram
    lt = p.lt
    out = []
    for j in range(2, cd.ncols + 1):
        for m in range(cd.beta[j - 1] + 1, cd.alpha[j - 1] + 1):
            x = arr[m, j]
            for i in range(1, j):
                w = m - j + i + 1
                if w < cd.beta[i - 1] or (strict and w == cd.beta[i - 1]):
                    continue
                y = arr[w, i]
                if (y is None and cd.is_empty_at(w, i)) or (y is not None and lt[x][y]):
                    out.append(Intersection(i, j, (m, j), (w, i)))
    return out


def _exchange(arr: PFilling, i: int, j: int, m: int, view: list[tuple[int, int]]) -> PFilling:
    """Swap tails about point row m of view column j and its witness in view column i.

    ``view[c-1] = (a, off)`` says view column c shows column a of ``arr`` pushed
    down by ``off`` rows.
    """
    (ai, oi), (aj, oj) = view[i - 1], view[j - 1]
    cd = arr.diagram
    w = m - j + i + 1

    def rows(a, off):
        top = cd.beta[a - 1] + off
        return [(top + r + 1, x) for r, x in enumerate(arr.columns[a - 1])]

    col_i, col_j = rows(ai, oi), rows(aj, oj)
    kept_i = [x for r, x in col_i if r < w]
    moved_l = [x for r, x in col_i if r >= w]
    kept_j = [x for r, x in col_j if r <= m]
    moved_r = [x for r, x in col_j if r > m]
    if kept_i and cd.beta[ai - 1] + oi + len(kept_i) != w - 1:
        raise ValueError("swap would leave a gap; the point is not the minimal intersection")

    alpha = list(cd.alpha)
    columns = list(arr.columns)
    alpha[ai - 1] = w - 1 + len(moved_r) - oi
    columns[ai - 1] = tuple(kept_i + moved_r)
    alpha[aj - 1] = m + len(moved_l) - oj
    columns[aj - 1] = tuple(kept_j + moved_l)
    return PFilling(ColumnDiagram(tuple(alpha), cd.beta), tuple(columns))


def _minimal_point(arr: PFilling, i: int, j: int, p: Poset) -> int:
    rows = [x.point[0] for x in find_intersections(arr, p) if x.i == i and x.j == j]
    if not rows:
        raise NoIntersectionError(f"columns {i} and {j} do not intersect")
    # column j is a chain, so its topmost intersection point is the P-minimal one
    return min(rows)


def swap(arr: PFilling, i: int, j: int, p: Poset) -> PFilling:
    """Exchange the parts of columns i and j below the P-minimal intersection point
    and its witness."""
    m = _minimal_point(arr, i, j, p)
    view = [(c, 0) for c in range(1, arr.diagram.ncols + 1)]
    return _exchange(arr, i, j, m, view)


def cylindric_swap(arr: PFilling, i: int, j: int, d: int, p: Poset) -> PFilling:
    """Swap on ``arr`` driven by an intersection of columns i and j of ``arr^d``.

    Column ``l + 1`` of the glued array is column 1 of ``arr``; moving cells
    into or out of it changes column 1.
    """
    cd = arr.diagram
    l = cd.ncols
    if l and cd.beta[0] - cd.beta[-1] > d:
        raise PreconditionError(f"beta_1 - beta_l = {cd.beta[0] - cd.beta[-1]} exceeds d = {d}")
    glued = glue_filling(arr, d)
    m = _minimal_point(glued, i, j, p)
    view = [(c, d) for c in range(1, l + 1)] + [(1, 0)]
    return _exchange(arr, i, j, m, view)


def swap_indices(sc: ShiftedColumns, i: int, j: int) -> ShiftedColumns:
    """``(sigma, k')`` for a swap at columns i < j of the glued array."""
    pi, k = list(sc.pi), list(sc.k)
    width = len(pi)
    if j <= width:
        pi[i - 1], pi[j - 1] = pi[j - 1], pi[i - 1]
        k[i - 1], k[j - 1] = k[j - 1], k[i - 1]
    elif j == width + 1:
        pi[0], pi[i - 1] = pi[i - 1], pi[0]
        k[0], k[i - 1] = k[i - 1] + 1, k[0] - 1
    else:
        raise ValueError(f"column {j} is out of range")
    return ShiftedColumns(tuple(pi), tuple(k), sc.lam, sc.d)


class Choice(NamedTuple):
    i: int
    j: int
    point: tuple[int, int]
    witness: tuple[int, int]


def choose_swap(arr: PFilling, d: int, p: Poset) -> Choice:
    """The rightmost P-minimal intersection point of ``arr^d`` and the rightmost
    column intersecting it."""
    glued = glue_filling(arr, d)
    found = find_intersections(glued, p)
    if not found:
        raise NotInBError("the glued array is a P-tableau")
    lt = p.lt
    points = {x.point for x in found}
    value = {pt: glued[pt] for pt in points}
    minimal = [pt for pt in points if not any(lt[value[q]][value[pt]] for q in points)]
    j = max(pt[1] for pt in minimal)
    rows = sorted(pt[0] for pt in minimal if pt[1] == j)
    if len(rows) > 1:
        # entries of one column form a chain, so this cannot happen for P-arrays
        log.warning("tie between P-minimal points %s in column %d; taking the top one", rows, j)
    m = rows[0]
    best = max((x for x in found if x.point == (m, j)), key=lambda x: x.i)
    return Choice(best.i, j, (m, j), best.witness)


def phi(t: BTriple, p: Poset) -> BTriple:
    choice = choose_swap(t.arr, t.sc.d, p)
    new_arr = cylindric_swap(t.arr, choice.i, choice.j, t.sc.d, p)
    return BTriple(swap_indices(t.sc, choice.i, choice.j), t.mu, new_arr)


def in_B(t: BTriple, p: Poset) -> bool:
    return not is_p_tableau(glue_filling(t.arr, t.sc.d), p)


def enumerate_B(cs: CylindricShape, p: Poset, kbound: int | None = None,
                include_fixed: bool = False) -> Iterator[BTriple]:
    """Triples ``(pi, k, A)`` with A a P-array of shape ``col(pi_d^k(lambda), mu')``
    whose glued array is not a P-tableau.

    The k window is the per-column range outside which no P-array exists,
    optionally cut to ``|k_i| <= kbound``.  With ``include_fixed`` the triples
    whose glued array is a P-tableau are produced as well.
    """
    width = cs.width
    if width > MAX_B_WIDTH or p.n > MAX_B_POSET:
        raise SizeError(f"B enumeration is limited to lambda_1 <= {MAX_B_WIDTH}, |P| <= {MAX_B_POSET}")
    h = longest_chain(p)
    mc = padded(conjugate(cs.inner), width)
    ranges = krange(cs, p, "col")
    if kbound is not None:
        ranges = [(max(lo, -kbound), min(hi, kbound)) for lo, hi in ranges]
    for k in k_tuples(ranges):
        for pi in itertools.permutations(range(1, width + 1)):
            sc = ShiftedColumns(pi, k, cs.outer, cs.shift)
            heights = shifted_heights(sc)
            if any(not 0 <= a - b <= h for a, b in zip(heights, mc)):
                continue
            for arr in enum_p_arrays(ColumnDiagram(heights, mc), p):
                t = BTriple(sc, cs.inner, arr)
                if include_fixed or in_B(t, p):
                    yield t


def triple_hash(t: BTriple) -> str:
    return hashlib.sha1(repr(t.key()).encode()).hexdigest()[:12]


def trace_line(t: BTriple, p: Poset) -> str:
    """Tab-separated audit record for one triple of B and its partner."""
    choice = choose_swap(t.arr, t.sc.d, p)
    partner = phi(t, p)
    fields = [
        "pi=" + ",".join(map(str, t.sc.pi)),
        "k=" + ",".join(map(str, t.sc.k)),
        "shape=" + ",".join(map(str, t.arr.diagram.alpha)),
        f"point={choice.point[0]},{choice.point[1]}",
        f"witness={choice.witness[0]},{choice.witness[1]}",
        f"self={triple_hash(t)}",
        f"partner={triple_hash(partner)}",
    ]
    return "\t".join(fields)
