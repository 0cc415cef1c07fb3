"""Partitions, skew and cylindric shapes, column diagrams and notation conversions.

Partitions are plain tuples of positive integers in weakly decreasing order.
All cell coordinates are 1-based ``(row, column)`` in matrix (English) style.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParseError, RibbonError, ShapeError, ShiftError, SizeError

Partition = tuple[int, ...]

MAX_SHAPE_CELLS = 12


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise ``parts``; trailing zeros are dropped."""
    parts = tuple(int(x) for x in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(x <= 0 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ShapeError(f"{parts} is not a partition")
    return parts


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def part(p: Sequence[int], i: int) -> int:
    """1-based part ``p_i``, zero past the end."""
    return p[i - 1] if 1 <= i <= len(p) else 0


def padded(p: Sequence[int], length: int) -> tuple[int, ...]:
    return tuple(p[:length]) + (0,) * max(0, length - len(p))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    return len(inner) <= len(outer) and all(a <= b for a, b in zip(inner, outer))


def size(p: Sequence[int]) -> int:
    return sum(p)


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(n, max_part, max_len)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` dominates ``b`` (both partitions of the same size)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += part(a, i + 1)
        sb += part(b, i + 1)
        if sa < sb:
            return False
    return sa == sb


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.outer, start=1)
                for j in range(part(self.inner, i) + 1, row + 1)]

    def columns(self) -> ColumnDiagram:
        """The shape as ``col(lambda', mu')`` with ``mu'`` padded to ``lambda_1`` columns."""
        width = part(self.outer, 1)
        return ColumnDiagram(conjugate(self.outer), padded(conjugate(self.inner), width))

    def __str__(self):
        return f"{_fmt(self.outer)}/{_fmt(self.inner)}"


@dataclass(frozen=True)
class CylindricShape:
    """A cylindric shape ``lambda/mu/d``.

    Valid iff ``mu`` is inside ``lambda`` and
    ``max(lambda'_1 - lambda'_{lambda_1}, mu'_1 - mu'_{lambda_1}) <= d <= lambda'_1``.
    """

    outer: Partition
    inner: Partition
    shift: int

    def __post_init__(self):
        outer = as_partition(self.outer)
        inner = as_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if not outer:
            raise ShapeError("a cylindric shape needs a nonempty outer partition")
        if not contains(outer, inner):
            raise ShapeError(f"{inner} is not contained in {outer}")
        lo, hi = shift_window(outer, inner)
        if not lo <= self.shift <= hi:
            raise ShapeError(f"shift {self.shift} outside [{lo}, {hi}] for {_fmt(outer)}/{_fmt(inner)}")

    @property
    def skew(self) -> SkewShape:
        return SkewShape(self.outer, self.inner)

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def width(self) -> int:
        return self.outer[0]

    def __str__(self):
        return f"{_fmt(self.outer)}/{_fmt(self.inner)}/{self.shift}"


def shift_window(outer: Sequence[int], inner: Sequence[int]) -> tuple[int, int]:
    """Inclusive range of valid shifts d for ``outer/inner``."""
    lc = conjugate(outer)
    mc = padded(conjugate(inner), outer[0])
    width = outer[0]
    return max(lc[0] - lc[width - 1], mc[0] - mc[width - 1]), lc[0]


@dataclass(frozen=True)
class ColumnDiagram:
    """The cell set ``{(i, j) : beta_j < i <= alpha_j}``: column j occupies rows
    ``beta_j + 1 .. alpha_j``."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self):
        alpha = tuple(self.alpha)
        beta = padded(tuple(self.beta), len(alpha))
        if len(self.beta) > len(alpha) and any(self.beta[len(alpha):]):
            raise ShapeError("beta has more nonzero entries than there are columns")
        if any(b < 0 for b in beta) or any(b > a for a, b in zip(alpha, beta)):
            raise ShapeError(f"invalid column diagram col({alpha}, {beta})")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def ncols(self) -> int:
        return len(self.alpha)

    def height(self, j: int) -> int:
        return self.alpha[j - 1] - self.beta[j - 1]

    @property
    def ncells(self) -> int:
        return sum(a - b for a, b in zip(self.alpha, self.beta))

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= j <= len(self.alpha) and self.beta[j - 1] < i <= self.alpha[j - 1]

    def cells(self) -> list[tuple[int, int]]:
        """Cells in column-major order, top to bottom within a column."""
        return [(i, j) for j in range(1, len(self.alpha) + 1)
                for i in range(self.beta[j - 1] + 1, self.alpha[j - 1] + 1)]

    def is_empty_at(self, i: int, j: int) -> bool:
        """The "empty" predicate: position below the top gap but outside the column."""
        return (i, j) not in self and i > self.beta[j - 1]


def glue_columns(cd: ColumnDiagram, d: int) -> ColumnDiagram:
    """Shape of ``A^d``: columns pushed down by d with a copy of column 1 appended."""
    if not cd.alpha:
        return cd
    alpha = tuple(a + d for a in cd.alpha) + (cd.alpha[0],)
    beta = tuple(b + d for b in cd.beta) + (cd.beta[0],)
    return ColumnDiagram(alpha, beta)


def glue_d(shape: SkewShape, d: int) -> ColumnDiagram:
    """Column diagram of ``T^d`` for a filling T of ``shape``.

    Cell ``(i, j)`` with ``j <= lambda_1`` comes from cell ``(i - d, j)`` of the
    skew shape; column ``lambda_1 + 1`` is column 1 raised by d relative to it.
    """
    return glue_columns(shape.columns(), d)


def to_gessel_krattenthaler(cs: CylindricShape) -> tuple[Partition, Partition, int]:
    """Convert ``lambda/mu/d`` (d > 0) to ``(nu, eta, m)``.

    ``nu_i = lambda_i + lambda_{i+d} + lambda_{i+2d} + ...`` for i = 1..d.
    """
    d = cs.shift
    if d <= 0:
        raise ShiftError("conversion requires d > 0")
    lam = cs.outer
    nu = tuple(sum(lam[i::d]) for i in range(d))
    return as_partition(nu), cs.inner, lam[0]


def rim_walk(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Border cells of ``lam`` from the south-west end to the north-east end."""
    cells = []
    if not lam:
        return cells
    i, j = len(lam), 1
    while i >= 1:
        cells.append((i, j))
        if j < lam[i - 1]:
            j += 1
        else:
            i -= 1
    return cells


def remove_ribbon(lam: Partition, n: int) -> Partition:
    """Strip the n-cell border ribbon that starts at the bottom-left cell."""
    rim = rim_walk(lam)
    if len(rim) < n:
        raise RibbonError(f"border of {_fmt(lam)} has only {len(rim)} cells, need {n}")
    strip = set(rim[:n])
    rows = []
    for i, row in enumerate(lam, start=1):
        kept = [j for j in range(1, row + 1) if (i, j) not in strip]
        if kept != list(range(1, len(kept) + 1)):
            raise RibbonError(f"removing the {n}-ribbon from {_fmt(lam)} leaves a hole in row {i}")
        rows.append(len(kept))
    try:
        return as_partition(rows)
    except ShapeError:
        raise RibbonError(f"removing the {n}-ribbon from {_fmt(lam)} does not leave a partition") from None


def to_postnikov_mcnamara(cs: CylindricShape) -> tuple[Partition, int, Partition, int, int]:
    """Convert ``lambda/mu/d`` (d > 0) to ``(nu, m, theta, k, n)``.

    ``k = d``, ``n = lambda_1 + d``, ``theta = mu`` and ``nu`` is ``lambda`` with
    ``m`` n-ribbons removed from the border, m minimal with ``l(nu) <= k``.
    """
    d = cs.shift
    if d <= 0:
        raise ShiftError("conversion requires d > 0")
    k, n = d, cs.outer[0] + d
    nu, m = cs.outer, 0
    while len(nu) > k:
        try:
            nu = remove_ribbon(nu, n)
        except RibbonError as exc:
            raise RibbonError(f"{cs}: step {m + 1}: {exc}") from None
        m += 1
    return nu, m, cs.inner, k, n


def enumerate_cylindric_shapes(size: int, max_parts: int | None = None,
                               max_cols: int | None = None) -> Iterator[CylindricShape]:
    """Every valid ``lambda/mu/d`` with ``|lambda/mu| = size`` and lambda in the
    ``max_parts x max_cols`` box (both default to ``size``).  ``lambda = mu`` is excluded."""
    if size > MAX_SHAPE_CELLS:
        raise SizeError(f"shape enumeration is limited to {MAX_SHAPE_CELLS} cells")
    if size <= 0:
        return
    rows = size if max_parts is None else max_parts
    cols = size if max_cols is None else max_cols
    for total in range(size, rows * cols + 1):
        for lam in partitions(total, max_part=cols, max_len=rows):
            for mu in partitions(total - size, max_part=lam[0], max_len=len(lam)):
                if not contains(lam, mu):
                    continue
                lo, hi = shift_window(lam, mu)
                for d in range(lo, hi + 1):
                    yield CylindricShape(lam, mu, d)


def _fmt(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def _parse_parts(text: str, lineno=None) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        return as_partition(int(x) for x in text.split(","))
    except (ValueError, ShapeError) as exc:
        raise ParseError(f"bad partition {text!r}: {exc}", lineno) from None


def parse_shape(text: str) -> CylindricShape:
    """Parse ``l1,l2,.../m1,m2,.../d``; an empty middle section means mu is empty."""
    pieces = text.strip().split("/")
    if len(pieces) != 3:
        raise ParseError(f"expected 'lambda/mu/d', got {text!r}")
    lam, mu = _parse_parts(pieces[0]), _parse_parts(pieces[1])
    try:
        d = int(pieces[2])
    except ValueError:
        raise ParseError(f"bad shift {pieces[2]!r}") from None
    try:
        return CylindricShape(lam, mu, d)
    except ShapeError as exc:
        raise ParseError(str(exc)) from None


def format_shape(cs: CylindricShape) -> str:
    return str(cs)
