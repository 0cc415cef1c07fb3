"""Symmetric functions of fixed degree in the m and e bases, chromatic symmetric
functions, cylindric Schur monomial expansions and the sink count check."""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping

from .errors import IntegralityError, SizeError
from .poset import IncGraph, Poset, chain, inc_graph
from .shapes import CylindricShape, Partition, as_partition, conjugate, dominates, partitions
from .tableaux import _glued_constraints, _solve, count_standard_cylindric
from .upoly import apply_psi, coeff_uP, s_P_cylindric

MAX_SYM_DEGREE = 12
MAX_CYL_SCHUR_CELLS = 10
MAX_GRAPH = 9
MAX_SINK_GRAPH = 8
MAX_THEOREM11 = 8
MAX_COROLLARY = 7

BASES = ("m", "e", "s")


@dataclass(frozen=True)
class SymFunc:
    """A homogeneous symmetric function as ``{partition: coefficient}`` in one basis."""

    degree: int
    basis: str
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        clean = {}
        for lam, c in self.coeffs.items():
            lam = as_partition(lam)
            if sum(lam) != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    def __getitem__(self, lam) -> Fraction:
        return self.coeffs.get(tuple(lam), Fraction(0))

    def __add__(self, other: SymFunc) -> SymFunc:
        if (other.degree, other.basis) != (self.degree, self.basis):
            raise ValueError("can only add expansions of equal degree and basis")
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc[k] = acc.get(k, 0) + v
        return SymFunc(self.degree, self.basis, acc)

    def scale(self, c) -> SymFunc:
        return SymFunc(self.degree, self.basis, {k: v * c for k, v in self.coeffs.items()})

    def to_text(self) -> str:
        lines = [f"{self.basis}:{self.degree}"]
        for lam in sorted(self.coeffs):
            lines.append(f"{','.join(map(str, lam))} -> {_fmt_coeff(self.coeffs[lam])}")
        return "\n".join(lines)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else str(c)


def _guard_degree(n: int):
    if n > MAX_SYM_DEGREE:
        raise SizeError(f"symmetric function degree is limited to {MAX_SYM_DEGREE}")


def _times_e(f: dict[Partition, int], k: int, degree: int, nvars: int) -> dict[Partition, int]:
    """m-expansion of ``e_k * f`` in ``nvars`` variables, working on dominant monomials only."""
    out = {}
    for rho in partitions(degree + k, max_len=nvars):
        padded_rho = list(rho) + [0] * (nvars - len(rho))
        total = 0
        support = [i for i in range(nvars) if padded_rho[i] > 0]
        for subset in itertools.combinations(support, k):
            lower = list(padded_rho)
            for i in subset:
                lower[i] -= 1
            total += f.get(tuple(sorted((x for x in lower if x), reverse=True)), 0)
        if total:
            out[rho] = total
    return out


@lru_cache(maxsize=None)
def _e_to_m_cached(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = sum(mu)
    f: dict[Partition, int] = {(): 1}
    degree = 0
    for k in mu:
        f = _times_e(f, k, degree, max(n, 1))
        degree += k
    return tuple(sorted(f.items()))


def e_to_m(mu) -> SymFunc:
    """m-expansion of ``e_mu = e_{mu_1} e_{mu_2} ...``."""
    mu = as_partition(mu)
    _guard_degree(sum(mu))
    return SymFunc(sum(mu), "m", dict(_e_to_m_cached(mu)))


def m_to_e(f: SymFunc) -> SymFunc:
    """e-expansion of an m-basis symmetric function.

    ``e_{nu'}`` has leading term ``m_nu`` in dominance (hence lexicographic)
    order, so repeatedly cancelling the lexicographically largest term solves
    the unitriangular system exactly.
    """
    if f.basis != "m":
        raise ValueError("m_to_e needs an m-basis expansion")
    _guard_degree(f.degree)
    rest = dict(f.coeffs)
    out: dict[Partition, Fraction] = {}
    while rest:
        nu = max(rest)
        c = rest[nu]
        lead = conjugate(nu)
        out[lead] = out.get(lead, 0) + c
        for rho, a in _e_to_m_cached(lead):
            v = rest.get(rho, 0) - c * a
            if v:
                rest[rho] = v
            else:
                rest.pop(rho, None)
    return SymFunc(f.degree, "e", out)


def e_to_m_expansion(f: SymFunc) -> SymFunc:
    """m-expansion of an e-basis symmetric function."""
    if f.basis != "e":
        raise ValueError("needs an e-basis expansion")
    acc: dict[Partition, Fraction] = {}
    for mu, c in f.coeffs.items():
        for rho, a in _e_to_m_cached(mu):
            acc[rho] = acc.get(rho, 0) + c * a
    return SymFunc(f.degree, "m", acc)


def monomial(lam) -> SymFunc:
    lam = as_partition(lam)
    return SymFunc(sum(lam), "m", {lam: 1})


@dataclass(frozen=True)
class EMTransition:
    """``matrix[mu][nu]`` is the coefficient of ``m_nu`` in ``e_mu``; ``inverse[nu][mu]``
    the coefficient of ``e_mu`` in ``m_nu``."""

    degree: int
    parts: tuple[Partition, ...]
    matrix: dict
    inverse: dict

    def is_triangular(self) -> bool:
        return all(dominates(conjugate(mu), nu) for mu, row in self.matrix.items() for nu in row)


@lru_cache(maxsize=None)
def em_transition(n: int) -> EMTransition:
    _guard_degree(n)
    parts = tuple(partitions(n))
    matrix = {mu: dict(_e_to_m_cached(mu)) for mu in parts}
    inverse = {nu: dict(m_to_e(monomial(nu)).coeffs) for nu in parts}
    return EMTransition(n, parts, matrix, inverse)


def cylindric_schur_m(cs: CylindricShape, nvars: int | None = None) -> SymFunc:
    """m-expansion of the cylindric Schur function: ``a_nu`` counts the cylindric
    semistandard tableaux with content exactly ``nu``."""
    n = cs.size
    if n > MAX_CYL_SCHUR_CELLS:
        raise SizeError(f"cylindric Schur expansions are limited to {MAX_CYL_SCHUR_CELLS} cells")
    if nvars is None:
        nvars = n
    if nvars < n:
        raise ValueError("need at least as many variables as cells for a faithful m-expansion")
    total = chain(nvars)
    con = _glued_constraints(cs.skew.columns(), cs.shift)
    coeffs = {}
    for nu in partitions(n, max_len=nvars):
        content = list(nu) + [0] * (nvars - len(nu))
        count = sum(1 for _ in _solve(con, total, content))
        if count:
            coeffs[nu] = count
    return SymFunc(n, "m", coeffs)


def _stable_partition_types(g: IncGraph) -> Counter:
    """Number of set partitions of the vertices into independent sets, by block-size type."""
    n = g.n
    nb = [sum(1 << u for u in g.adj[v]) for v in range(n)]
    types: Counter = Counter()
    blocks: list[int] = []    # vertex masks
    sizes: list[int] = []

    def place(v):
        if v == n:
            types[tuple(sorted(sizes, reverse=True))] += 1
            return
        for b in range(len(blocks)):
            if not blocks[b] & nb[v]:
                blocks[b] |= 1 << v
                sizes[b] += 1
                place(v + 1)
                blocks[b] &= ~(1 << v)
                sizes[b] -= 1
        blocks.append(1 << v)
        sizes.append(1)
        place(v + 1)
        blocks.pop()
        sizes.pop()

    place(0)
    return types


def chromatic_X(g: IncGraph) -> SymFunc:
    """m-expansion of the chromatic symmetric function.

    The coefficient of ``m_nu`` is the number of proper colorings with content
    exactly ``nu``: each partition of the vertices into independent blocks of
    type ``nu`` gives ``prod_i r_i!`` of them, where ``r_i`` counts blocks of size i.
    """
    if g.n > MAX_GRAPH:
        raise SizeError(f"chromatic functions are limited to {MAX_GRAPH} vertices")
    coeffs = {}
    for nu, count in _stable_partition_types(g).items():
        coeffs[nu] = count * prod(factorial(r) for r in Counter(nu).values())
    return SymFunc(g.n, "m", coeffs)


def e_coeffs(g: IncGraph) -> dict[Partition, int]:
    """Coefficients ``c_lambda`` of the chromatic symmetric function in the e-basis."""
    x = m_to_e(chromatic_X(g))
    out = {}
    for lam, c in x.coeffs.items():
        if c.denominator != 1:
            raise IntegralityError(f"e-coefficient of {lam} is {c}")
        out[lam] = c.numerator
    return out


def theorem11_coeff(p: Poset, lam) -> int:
    """Coefficient of ``u_P`` in ``m_lambda^P(u)``."""
    lam = as_partition(lam)
    if sum(lam) != p.n:
        raise ValueError("lambda must be a partition of |P|")
    if p.n > MAX_THEOREM11:
        raise SizeError(f"limited to |P| <= {MAX_THEOREM11}")
    image = apply_psi(m_to_e(monomial(lam)), p, integral=True)
    return coeff_uP(image)


def corollary_sum(p: Poset, cs: CylindricShape) -> tuple[int, int]:
    """``(sum_nu a_nu c_nu, #standard cylindric P-tableaux)`` for ``cs`` of size |P|."""
    if cs.size != p.n:
        raise ValueError("the shape must have |P| cells")
    if p.n > MAX_COROLLARY:
        raise SizeError(f"limited to |P| <= {MAX_COROLLARY}")
    a = cylindric_schur_m(cs, max(p.n, 1))
    c = e_coeffs(inc_graph(p))
    lhs = sum(coef * c.get(nu, 0) for nu, coef in a.coeffs.items())
    rhs = count_standard_cylindric(cs, p)
    return int(lhs), rhs


def corollary_det_side(p: Poset, cs: CylindricShape) -> int:
    """Coefficient of ``u_P`` in the determinantal P-cylindric Schur function."""
    return coeff_uP(s_P_cylindric(cs, p))


def _independent(mask: int, nb: list[int]) -> bool:
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if nb[v] & mask:
            return False
        m ^= low
    return True


def sink_counts(g: IncGraph) -> dict[int, int]:
    """Histogram ``{j: number of acyclic orientations with exactly j sinks}``.

    An acyclic orientation with sink set S is an acyclic orientation of G - S
    whose own sinks all have a neighbour in S (edges into S are forced), which
    gives a recursion over vertex sets.
    """
    n = g.n
    if n > MAX_SINK_GRAPH:
        raise SizeError(f"sink counts are limited to {MAX_SINK_GRAPH} vertices")
    if n == 0:
        return {0: 1}
    nb = [sum(1 << u for u in g.adj[v]) for v in range(n)]

    def neighbours(mask):
        out, m = 0, mask
        while m:
            low = m & -m
            out |= nb[low.bit_length() - 1]
            m ^= low
        return out

    def subsets(mask):
        s = mask
        while s:
            yield s
            s = (s - 1) & mask

    @lru_cache(maxsize=None)
    def allowed_sinks(rest: int, allowed: int) -> int:
        # acyclic orientations of G[rest] whose sinks all lie in `allowed`
        if not rest:
            return 1
        total = 0
        for s in subsets(allowed & rest):
            if _independent(s, nb):
                left = rest & ~s
                total += allowed_sinks(left, neighbours(s) & left)
        return total

    full = (1 << n) - 1
    hist: Counter = Counter()
    for s in subsets(full):
        if _independent(s, nb):
            left = full & ~s
            hist[bin(s).count("1")] += allowed_sinks(left, neighbours(s) & left)
    return {j: v for j, v in sorted(hist.items()) if v}


def sinks_from_e(c: Mapping[Partition, int]) -> dict[int, int]:
    """``{j: sum of c_lambda over l(lambda) = j}``."""
    out: Counter = Counter()
    for lam, v in c.items():
        out[len(lam)] += v
    return {j: v for j, v in sorted(out.items()) if v}
