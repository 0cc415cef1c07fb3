"""Finite posets on 0..n-1, (3+1)-freeness, chains and incomparability graphs."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import CycleError, ParseError, SizeError

MAX_ENUM_POSETS = 7


@dataclass(frozen=True)
class Poset:
    """A strict partial order on ``range(n)``.

    ``lt[a][b]`` is true iff ``a <_P b``.  The relation is always stored
    transitively closed; use :func:`poset_from_relations` to build one from
    generating pairs.
    """

    n: int
    lt: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.n
        if len(self.lt) != n or any(len(row) != n for row in self.lt):
            raise ValueError("relation matrix must be n x n")
        lt = self.lt
        for a in range(n):
            if lt[a][a]:
                raise CycleError(f"{a} <_P {a}")
            for b in range(n):
                if lt[a][b] and lt[b][a]:
                    raise CycleError(f"{a} and {b} are mutually related")
                if lt[a][b]:
                    for c in range(n):
                        if lt[b][c] and not lt[a][c]:
                            raise ValueError("relation is not transitively closed")

    def less(self, a: int, b: int) -> bool:
        return self.lt[a][b]

    def comparable(self, a: int, b: int) -> bool:
        return self.lt[a][b] or self.lt[b][a]

    def incomparable(self, a: int, b: int) -> bool:
        return a != b and not self.lt[a][b] and not self.lt[b][a]

    @cached_property
    def down(self) -> tuple[frozenset[int], ...]:
        """Strict down-set of each element."""
        return tuple(frozenset(a for a in range(self.n) if self.lt[a][b]) for b in range(self.n))

    @cached_property
    def up(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(b for b in range(self.n) if self.lt[a][b]) for a in range(self.n))

    def relations(self) -> list[tuple[int, int]]:
        """All pairs ``(a, b)`` with ``a <_P b``."""
        return [(a, b) for a in range(self.n) for b in range(self.n) if self.lt[a][b]]

    def cover_relations(self) -> list[tuple[int, int]]:
        rel = self.relations()
        return [(a, b) for a, b in rel
                if not any(self.lt[a][c] and self.lt[c][b] for c in range(self.n))]

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [f"{a} < {b}" for a, b in self.cover_relations()]
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.cover_relations()})"


def poset_from_relations(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Transitive closure of ``pairs`` (each ``(a, b)`` meaning ``a <_P b``)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rel = [[False] * n for _ in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise IndexError(f"relation ({a}, {b}) out of range for n={n}")
        rel[a][b] = True
    # Warshall
    for k in range(n):
        rk = rel[k]
        for a in range(n):
            if rel[a][k]:
                ra = rel[a]
                for b in range(n):
                    if rk[b]:
                        ra[b] = True
    for a in range(n):
        if rel[a][a]:
            raise CycleError(f"relations force {a} <_P {a}")
    return Poset(n, tuple(tuple(row) for row in rel))


def chain(n: int) -> Poset:
    return poset_from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return poset_from_relations(n, [])


def total_order_from(pred, n: int) -> Poset:
    """Poset on ``range(n)`` with ``a <_P b`` iff ``pred(a, b)``; ``pred`` must be a strict order."""
    return poset_from_relations(n, [(a, b) for a in range(n) for b in range(n) if pred(a, b)])


def disjoint_union(p: Poset, q: Poset) -> Poset:
    shift = p.n
    pairs = p.relations() + [(a + shift, b + shift) for a, b in q.relations()]
    return poset_from_relations(p.n + q.n, pairs)


def find_31(p: Poset) -> tuple[int, int, int, int] | None:
    """Return ``(a, b, c, d)`` with ``a < b < c`` and ``d`` incomparable to all three, or None."""
    lt = p.lt
    for b in range(p.n):
        for a in p.down[b]:
            for c in p.up[b]:
                for d in range(p.n):
                    if d in (a, b, c):
                        continue
                    if not (lt[a][d] or lt[d][a] or lt[b][d] or lt[d][b] or lt[c][d] or lt[d][c]):
                        return a, b, c, d
    return None


def is_31_free(p: Poset) -> bool:
    return find_31(p) is None


def longest_chain(p: Poset) -> int:
    """Size of the largest chain; 0 for the empty poset."""
    best = [1] * p.n
    # elements sorted by down-set size form a linear extension
    for b in sorted(range(p.n), key=lambda x: len(p.down[x])):
        for a in p.down[b]:
            if best[a] + 1 > best[b]:
                best[b] = best[a] + 1
    return max(best, default=0)


def chains(p: Poset, k: int) -> Iterator[tuple[int, ...]]:
    """All k-chains ``i_1 <_P ... <_P i_k`` in increasing element order."""
    if k < 0:
        return
    if k == 0:
        yield ()
        return

    def extend(prefix):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        last = prefix[-1]
        for b in sorted(p.up[last]):
            prefix.append(b)
            yield from extend(prefix)
            prefix.pop()

    for a in range(p.n):
        yield from extend([a])


@dataclass(frozen=True)
class IncGraph:
    """Simple undirected graph on ``range(n)``; ``adj[v]`` is the neighbour set of v."""

    n: int
    adj: tuple[frozenset[int], ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in sorted(self.adj[a]) if a < b]

    def has_edge(self, a: int, b: int) -> bool:
        return b in self.adj[a]


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> IncGraph:
    adj = [set() for _ in range(n)]
    for a, b in edges:
        if a == b:
            raise ValueError("loops are not allowed")
        adj[a].add(b)
        adj[b].add(a)
    return IncGraph(n, tuple(frozenset(s) for s in adj))


def inc_graph(p: Poset) -> IncGraph:
    return graph_from_edges(p.n, [(a, b) for a in range(p.n) for b in range(a + 1, p.n)
                                  if p.incomparable(a, b)])


def _signature_classes(lt: Sequence[Sequence[bool]], n: int) -> list[list[int]]:
    sig = [(sum(lt[x][a] for x in range(n)), sum(lt[a][x] for x in range(n))) for a in range(n)]
    # one refinement round: multiset of signatures below and above
    refined = [(sig[a],
                tuple(sorted(sig[x] for x in range(n) if lt[x][a])),
                tuple(sorted(sig[x] for x in range(n) if lt[a][x])))
               for a in range(n)]
    classes: dict = {}
    for a in range(n):
        classes.setdefault(refined[a], []).append(a)
    return [classes[key] for key in sorted(classes)]


def canonical_form(p: Poset) -> tuple[bool, ...]:
    """Isomorphism-invariant key: the minimal relation string over all relabelings
    that respect the (isomorphism-invariant) signature classes."""
    n = p.n
    lt = p.lt
    classes = _signature_classes(lt, n)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        order = [a for part in parts for a in part]
        key = tuple(lt[order[i]][order[j]] for i in range(n) for j in range(n))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def _downsets(p: Poset) -> Iterator[frozenset[int]]:
    for mask in range(1 << p.n):
        s = frozenset(a for a in range(p.n) if mask >> a & 1)
        if all(p.down[a] <= s for a in s):
            yield s


def all_posets(n: int) -> Iterator[Poset]:
    """One representative per isomorphism class of n-element posets.

    Classes are grown by adjoining a new maximal element above every down-set
    of each smaller representative; duplicates are removed by canonical form.
    """
    if n > MAX_ENUM_POSETS:
        raise SizeError(f"all_posets is limited to n <= {MAX_ENUM_POSETS}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    yield from _posets_of_size(n)


_POSET_CACHE: dict[int, tuple[Poset, ...]] = {}


def _posets_of_size(n: int) -> tuple[Poset, ...]:
    if n in _POSET_CACHE:
        return _POSET_CACHE[n]
    if n == 0:
        reps = (Poset(0, ()),)
    else:
        seen = {}
        for q in _posets_of_size(n - 1):
            base = q.relations()
            for ds in _downsets(q):
                cand = poset_from_relations(n, base + [(a, n - 1) for a in ds])
                key = canonical_form(cand)
                if key not in seen:
                    seen[key] = cand
        reps = tuple(seen[k] for k in sorted(seen))
    _POSET_CACHE[n] = reps
    return reps


def parse_poset(text: str) -> Poset:
    """Parse the poset text format: first line ``n``, then lines ``a < b``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"expected element count, got {line!r}", lineno) from None
            if n < 0:
                raise ParseError("element count must be nonnegative", lineno)
            continue
        left, sep, right = line.partition("<")
        try:
            if not sep:
                raise ValueError
            a, b = int(left), int(right)
        except ValueError:
            raise ParseError(f"expected 'a < b', got {line!r}", lineno) from None
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"label out of range 0..{n - 1}", lineno)
        pairs.append((a, b))
    if n is None:
        raise ParseError("missing element count", 1)
    try:
        return poset_from_relations(n, pairs)
    except CycleError as exc:
        raise ParseError(f"relations are cyclic: {exc}") from None


def read_poset(path: str | Path) -> Poset:
    return parse_poset(Path(path).read_text())
