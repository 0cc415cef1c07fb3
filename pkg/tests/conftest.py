"""Shared corpora and brute-force oracles.

The oracles here deliberately avoid the library's constraint solver: they walk
all fillings or colorings and test the defining conditions directly.
"""
import itertools
from collections import Counter

import pytest

from cylchroma.poset import Poset, all_posets, is_31_free, poset_from_relations
from cylchroma.tableaux import filling_from_rows


def free_posets(n):
    return [p for p in all_posets(n) if is_31_free(p)]


def non_free_posets(n):
    return [p for p in all_posets(n) if not is_31_free(p)]


def total_order(n):
    return poset_from_relations(n, [(i, i + 1) for i in range(n - 1)])


def gap_poset(n):
    """``i <_P j`` iff ``j - i > 1``; the poset of the worked swap example."""
    return poset_from_relations(n, [(i, j) for i in range(n) for j in range(n) if j - i > 1])


def skew_cells(lam, mu):
    return [(i, j) for i, row in enumerate(lam, start=1)
            for j in range((mu[i - 1] if i <= len(mu) else 0) + 1, row + 1)]


def is_convex(cells):
    """A finite cell set is a skew diagram iff it is convex in the product order."""
    s = set(cells)
    for (a, b), (c, e) in itertools.combinations(s, 2):
        lo, hi = ((a, b), (c, e)) if a <= c else ((c, e), (a, b))
        if lo[1] <= hi[1]:
            for x in range(lo[0], hi[0] + 1):
                for y in range(lo[1], hi[1] + 1):
                    if (x, y) not in s:
                        return False
    return True


def naive_tableau_ok(entries: dict, p: Poset) -> bool:
    """P-tableau test straight from the definition on an arbitrary cell -> entry map."""
    if not is_convex(entries):
        return False
    for (i, j), x in entries.items():
        below = entries.get((i + 1, j))
        if below is not None and not p.lt[x][below]:
            return False
        right = entries.get((i, j + 1))
        if right is not None and p.lt[right][x]:
            return False
    return True


def naive_cylindric_ok(entries: dict, lam, d, p: Poset) -> bool:
    """Glue a copy of column 1, raised by d rows, to the right of column lam_1."""
    glued = dict(entries)
    for (i, j), x in entries.items():
        if j == 1:
            glued[i - d, lam[0] + 1] = x
    return naive_tableau_ok(glued, p)


def all_fillings(lam, mu, n):
    cells = skew_cells(lam, mu)
    for vals in itertools.product(range(n), repeat=len(cells)):
        yield dict(zip(cells, vals))


def brute_cylindric(lam, mu, d, p):
    """Weight histogram of cylindric P-tableaux by exhaustive filtering."""
    out = Counter()
    for f in all_fillings(lam, mu, p.n):
        if naive_cylindric_ok(f, lam, d, p):
            w = [0] * p.n
            for x in f.values():
                w[x] += 1
            out[tuple(w)] += 1
    return dict(out)


def brute_skew(lam, mu, p):
    out = Counter()
    for f in all_fillings(lam, mu, p.n):
        if naive_tableau_ok(f, p):
            w = [0] * p.n
            for x in f.values():
                w[x] += 1
            out[tuple(w)] += 1
    return dict(out)


def brute_colorings_m(g):
    """m-coefficients of X_G: proper colorings with content exactly x_1^nu_1 x_2^nu_2 ..."""
    n = g.n
    out = Counter()
    for col in itertools.product(range(n), repeat=n):
        if any(col[a] == col[b] for a, b in g.edges):
            continue
        content = Counter(col)
        counts = [content.get(c, 0) for c in range(n)]
        nu = tuple(sorted((c for c in counts if c), reverse=True))
        if counts[:len(nu)] == list(nu):
            out[nu] += 1
    return dict(out)


def brute_sinks(g):
    """Histogram of sink counts over all acyclic orientations, via 2^|E| orientations."""
    edges = g.edges
    hist = Counter()
    for bits in itertools.product((0, 1), repeat=len(edges)):
        out = {v: set() for v in range(g.n)}
        for (a, b), flip in zip(edges, bits):
            if flip:
                a, b = b, a
            out[a].add(b)
        # Kahn's algorithm: acyclic iff every vertex gets removed
        indeg = Counter(w for v in out for w in out[v])
        ready = [v for v in range(g.n) if not indeg[v]]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if not indeg[w]:
                    ready.append(w)
        if seen == g.n:
            hist[sum(1 for v in range(g.n) if not out[v])] += 1
    return dict(hist)


def brute_kostka(lam, nu):
    """Number of SSYT of shape lam with content nu, by filling rows one at a time."""
    n = len(nu)
    count = 0
    cells = skew_cells(lam, ())
    for vals in itertools.product(range(n), repeat=len(cells)):
        if Counter(vals) != Counter({i: c for i, c in enumerate(nu) if c}):
            continue
        f = dict(zip(cells, vals))
        if all((f.get((i, j + 1)) is None or f[i, j + 1] >= x) and
               (f.get((i + 1, j)) is None or f[i + 1, j] > x) for (i, j), x in f.items()):
            count += 1
    return count


def worked_T():
    """The worked-example tableau of shape (5,5,5,4)/(2,1) over the positive integers."""
    from cylchroma.shapes import SkewShape
    rows = [(1, 2, 3), (1, 3, 5, 5), (2, 2, 4, 6, 6), (3, 4, 5, 7)]
    return filling_from_rows(SkewShape((5, 5, 5, 4), (2, 1)), rows)


@pytest.fixture
def chain8():
    return total_order(8)


def strip_blank_rows(text: str) -> str:
    lines = text.split("\n")
    while lines and set(lines[0]) <= {".", " "}:
        lines.pop(0)
    return "\n".join(line.rstrip(" .") for line in lines)
