"""Fillings of column diagrams by poset elements.

A :class:`PFilling` stores one tuple of entries per column, listed top to
bottom.  P-arrays, P-tableaux and cylindric P-tableaux are all PFillings; they
differ only in which constraints hold.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ShapeError, SizeError
from .poset import Poset
from .shapes import ColumnDiagram, CylindricShape, SkewShape, glue_columns

MAX_FILL_CELLS = 12

UMonomial = tuple[int, ...]


@dataclass(frozen=True)
class PFilling:
    diagram: ColumnDiagram
    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        d = self.diagram
        if len(cols) != d.ncols or any(len(c) != d.height(j) for j, c in enumerate(cols, start=1)):
            raise ShapeError("column entries do not match the diagram")

    def __getitem__(self, cell) -> int | None:
        """Entry at 1-based ``(row, col)``, or None off the diagram."""
        i, j = cell
        if (i, j) not in self.diagram:
            return None
        return self.columns[j - 1][i - self.diagram.beta[j - 1] - 1]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for j, col in enumerate(self.columns, start=1):
            top = self.diagram.beta[j - 1]
            for r, x in enumerate(col, start=top + 1):
                yield (r, j), x

    def entries(self) -> list[int]:
        return [x for col in self.columns for x in col]

    def render(self) -> str:
        """Rows top to bottom, entries space separated, ``.`` for non-cells."""
        nrows = max(self.diagram.alpha, default=0)
        lines = []
        for i in range(1, nrows + 1):
            row = [self[i, j] for j in range(1, self.diagram.ncols + 1)]
            lines.append(" ".join("." if x is None else str(x) for x in row))
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def filling_from_rows(shape: SkewShape, rows: Sequence[Sequence[int]]) -> PFilling:
    """Build a filling of ``shape`` from its rows (skipped cells of mu omitted)."""
    cd = shape.columns()
    cols: list[list[int]] = [[] for _ in range(cd.ncols)]
    for i, row in enumerate(rows, start=1):
        start = shape.inner[i - 1] if i <= len(shape.inner) else 0
        if len(row) != shape.outer[i - 1] - start:
            raise ShapeError(f"row {i} has the wrong length")
        for j, x in enumerate(row, start=start + 1):
            cols[j - 1].append(x)
    return PFilling(cd, tuple(tuple(c) for c in cols))


def glue_filling(f: PFilling, d: int) -> PFilling:
    """``A^d``: every column pushed down by d, plus a copy of column 1 on the right."""
    if not f.columns:
        return f
    return PFilling(glue_columns(f.diagram, d), f.columns + (f.columns[0],))


def is_p_array(f: PFilling, p: Poset) -> bool:
    lt = p.lt
    return all(lt[a][b] for col in f.columns for a, b in zip(col, col[1:]))


def adjacent_violation(f: PFilling, p: Poset) -> tuple[int, int] | None:
    """First cell ``(m, c)`` that breaks the tableau condition against column c-1."""
    cd = f.diagram
    lt = p.lt
    for (m, c), x in f.items():
        if c == 1 or m <= cd.beta[c - 2]:
            continue
        left = f[m, c - 1]
        if left is None or lt[x][left]:
            return m, c
    return None


def is_p_tableau(f: PFilling, p: Poset) -> bool:
    """Columns strictly increase, the cells form a skew shape and no row has ``x >_P y``
    with x left of y."""
    beta = f.diagram.beta
    if any(a < b for a, b in zip(beta, beta[1:])):
        return False
    return is_p_array(f, p) and adjacent_violation(f, p) is None


def is_cylindric_p_tableau(f: PFilling, cs: CylindricShape, p: Poset) -> bool:
    if f.diagram != cs.skew.columns():
        raise ShapeError("filling does not have the shape lambda/mu of the cylindric shape")
    return is_p_tableau(glue_filling(f, cs.shift), p)


def is_standard(f: PFilling, p: Poset) -> bool:
    return sorted(f.entries()) == list(range(p.n))


def u_weight(f: PFilling, n: int) -> UMonomial:
    exps = [0] * n
    for x in f.entries():
        exps[x] += 1
    return tuple(exps)


class _Constraints:
    """Variables are the cells of a base diagram in column-major order; a glued
    diagram may alias several of its cells to one variable."""

    def __init__(self, base: ColumnDiagram):
        self.base = base
        self.cells = base.cells()
        self.index = {c: v for v, c in enumerate(self.cells)}
        self.below: list[set[int]] = [set() for _ in self.cells]   # var must be >_P these
        self.right_of: list[set[int]] = [set() for _ in self.cells]  # var must not be <_P these
        self.feasible = True

    def vertical(self, upper: int, lower: int):
        if upper == lower:
            self.feasible = False
            return
        a, b = sorted((upper, lower))
        # store on the later variable; orientation is kept in the sign
        if b == lower:
            self.below[b].add(upper)
        else:
            self.below[b].add(-1 - lower)

    def horizontal(self, left: int, right: int):
        if left == right:
            return
        if right > left:
            self.right_of[right].add(left)
        else:
            self.right_of[left].add(-1 - right)


def _column_constraints(cd: ColumnDiagram) -> _Constraints:
    con = _Constraints(cd)
    for (i, j), v in con.index.items():
        if (i - 1, j) in cd:
            con.vertical(con.index[i - 1, j], v)
    return con


def _glued_constraints(cd: ColumnDiagram, d: int | None) -> _Constraints:
    """Constraints making the filling (or its glued ``A^d`` if d is given) a P-tableau."""
    con = _column_constraints(cd)
    if any(a < b for a, b in zip(cd.beta, cd.beta[1:])):
        con.feasible = False
    if d is None:
        glued, ncol = cd, cd.ncols
    else:
        if not cd.alpha:
            return con
        glued, ncol = glue_columns(cd, d), cd.ncols
        if cd.beta[-1] + d < cd.beta[0]:
            con.feasible = False

    def var(i, j):
        if d is None:
            return con.index[i, j]
        if j <= ncol:
            return con.index[i - d, j]
        return con.index[i, 1]

    for (i, j) in glued.cells():
        if j == 1 or i <= glued.beta[j - 2]:
            continue
        if (i, j - 1) not in glued:
            con.feasible = False
            continue
        con.horizontal(var(i, j - 1), var(i, j))
    return con


def _solve(con: _Constraints, p: Poset, content: Sequence[int] | None = None,
           weights: bool = False) -> Iterator:
    """Backtrack over the variables; yields value lists, or exponent tuples if ``weights``."""
    if not con.feasible:
        return
    nv = len(con.cells)
    if content is not None:
        if len(content) != p.n or sum(content) != nv:
            return
        remaining = list(content)
    full = (1 << p.n) - 1
    up = [sum(1 << b for b in p.up[a]) for a in range(p.n)]
    down = [sum(1 << b for b in p.down[a]) for a in range(p.n)]
    # each constraint becomes a mask lookup on an earlier variable's value
    checks = []
    for v in range(nv):
        rules = []
        for u in con.below[v]:
            rules.append((u, up, False) if u >= 0 else (-1 - u, down, False))
        for u in con.right_of[v]:
            rules.append((u, down, True) if u >= 0 else (-1 - u, up, True))
        checks.append(rules)
    vals = [0] * nv
    exps = [0] * p.n

    def rec(v):
        if v == nv:
            yield tuple(exps) if weights else list(vals)
            return
        mask = full
        for u, table, negate in checks[v]:
            mask &= ~table[vals[u]] if negate else table[vals[u]]
        while mask:
            low = mask & -mask
            x = low.bit_length() - 1
            mask ^= low
            if content is not None:
                if not remaining[x]:
                    continue
                remaining[x] -= 1
            vals[v] = x
            exps[x] += 1
            yield from rec(v + 1)
            exps[x] -= 1
            if content is not None:
                remaining[x] += 1

    yield from rec(0)


def _to_filling(cd: ColumnDiagram, vals: list[int]) -> PFilling:
    cols, pos = [], 0
    for j in range(1, cd.ncols + 1):
        h = cd.height(j)
        cols.append(tuple(vals[pos:pos + h]))
        pos += h
    return PFilling(cd, tuple(cols))


def _guard(ncells: int):
    if ncells > MAX_FILL_CELLS:
        raise SizeError(f"enumeration is limited to {MAX_FILL_CELLS} cells")


def enum_p_tableaux(shape: SkewShape, p: Poset, content: Sequence[int] | None = None) -> Iterator[PFilling]:
    """All P-tableaux of ``shape``; ``content`` optionally fixes the multiplicity of each element."""
    cd = shape.columns()
    _guard(cd.ncells)
    for vals in _solve(_glued_constraints(cd, None), p, content):
        yield _to_filling(cd, vals)


def enum_cylindric_p_tableaux(cs: CylindricShape, p: Poset,
                              content: Sequence[int] | None = None) -> Iterator[PFilling]:
    """All T of shape ``lambda/mu`` whose glued ``T^d`` is a P-tableau."""
    cd = cs.skew.columns()
    _guard(cd.ncells)
    for vals in _solve(_glued_constraints(cd, cs.shift), p, content):
        yield _to_filling(cd, vals)


def enum_p_arrays(cd: ColumnDiagram, p: Poset) -> Iterator[PFilling]:
    _guard(cd.ncells)
    for vals in _solve(_column_constraints(cd), p):
        yield _to_filling(cd, vals)


def _counts(monos) -> dict[UMonomial, int]:
    acc: dict[UMonomial, int] = {}
    for m in monos:
        acc[m] = acc.get(m, 0) + 1
    return acc


def skew_weight_counts(shape: SkewShape, p: Poset) -> dict[UMonomial, int]:
    """Multiplicity of each ``u^T`` over all P-tableaux T of ``shape``."""
    cd = shape.columns()
    _guard(cd.ncells)
    return _counts(_solve(_glued_constraints(cd, None), p, weights=True))


def cylindric_weight_counts(cs: CylindricShape, p: Poset) -> dict[UMonomial, int]:
    """Multiplicity of each ``u^T`` over the cylindric P-tableaux of ``cs``."""
    cd = cs.skew.columns()
    _guard(cd.ncells)
    return _counts(_solve(_glued_constraints(cd, cs.shift), p, weights=True))


def count_standard_cylindric(cs: CylindricShape, p: Poset) -> int:
    """Number of cylindric P-tableaux using every element exactly once."""
    if cs.size != p.n:
        return 0
    return sum(1 for _ in _solve(_glued_constraints(cs.skew.columns(), cs.shift), p, (1,) * p.n))
