"""Sparse polynomials in commuting variables u_p and the determinantal P-Schur functions."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence

from .errors import IntegralityError, SizeError
from .poset import Poset, chains, longest_chain
from .shapes import CylindricShape, SkewShape, conjugate, padded
from .tableaux import UMonomial

if TYPE_CHECKING:
    from .symx import SymFunc

MAX_DET_DIM = 10
MAX_CYL_WIDTH = 8


_BITS = 8
_LIMIT = 1 << _BITS


def _pack(mono: Sequence[int]) -> int:
    key = 0
    for i, a in enumerate(mono):
        if not 0 <= a < _LIMIT:
            raise ValueError(f"exponent {a} out of range")
        key |= a << (_BITS * i)
    return key


def _unpack(key: int, nvars: int) -> UMonomial:
    mask = _LIMIT - 1
    return tuple((key >> (_BITS * i)) & mask for i in range(nvars))


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class UPolynomial:
    """Immutable sparse polynomial in ``u_0 .. u_{nvars-1}``.

    Coefficients are Python ints, or Fractions when produced from rational
    input.  Monomials are packed into ints internally (8 bits per exponent) so
    that multiplying monomials is integer addition.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[UMonomial, Rational] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} does not have {nvars} exponents")
                if c:
                    key = _pack(mono)
                    clean[key] = _norm(clean.get(key, 0) + c)
                    if not clean[key]:
                        del clean[key]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[int, Rational]) -> UPolynomial:
        out = cls.__new__(cls)
        out.nvars = nvars
        out._terms = terms
        out._hash = None
        return out

    @classmethod
    def constant(cls, nvars: int, c=1) -> UPolynomial:
        return cls._raw(nvars, {0: _norm(c)} if c else {})

    @classmethod
    def zero(cls, nvars: int) -> UPolynomial:
        return cls._raw(nvars, {})

    @classmethod
    def variable(cls, nvars: int, p: int) -> UPolynomial:
        return cls(nvars, {tuple(int(i == p) for i in range(nvars)): 1})

    @classmethod
    def from_monomials(cls, nvars: int, monos: Iterable[UMonomial]) -> UPolynomial:
        acc: dict = {}
        for m in monos:
            acc[m] = acc.get(m, 0) + 1
        return cls(nvars, acc)

    @property
    def terms(self) -> dict[UMonomial, Rational]:
        return {_unpack(k, self.nvars): c for k, c in self._terms.items()}

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coeff(self, mono: Sequence[int]) -> Rational:
        if len(mono) != self.nvars:
            raise ValueError("monomial length does not match nvars")
        return self._terms.get(_pack(mono), 0)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def _check(self, other):
        if isinstance(other, UPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return UPolynomial.constant(self.nvars, other)
        return NotImplemented

    def _combine(self, other, sign):
        acc = dict(self._terms)
        get = acc.get
        for m, c in other._terms.items():
            v = get(m, 0) + sign * c
            if v:
                acc[m] = v.numerator if type(v) is Fraction and v.denominator == 1 else v
            else:
                acc.pop(m, None)
        return UPolynomial._raw(self.nvars, acc)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._combine(other, 1)

    __radd__ = __add__

    def __neg__(self):
        return UPolynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return UPolynomial.zero(self.nvars)
            return UPolynomial._raw(self.nvars, {m: _norm(c * other) for m, c in self._terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        get = acc.get
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 + m2
                acc[m] = get(m, 0) + c1 * c2
        return UPolynomial._raw(self.nvars, {m: (c.numerator if type(c) is Fraction and c.denominator == 1 else c)
                                             for m, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UPolynomial.constant(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UPolynomial.constant(self.nvars, other)
        if not isinstance(other, UPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[UMonomial, Rational]]:
        return sorted(self.terms.items())

    def to_text(self) -> str:
        """Canonical form: terms by exponent vector, ``c*u0^a0*...`` with zero exponents omitted."""
        if not self._terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms():
            factors = [f"u{i}^{a}" for i, a in enumerate(mono) if a]
            out.append("*".join([str(c)] + factors))
        return " + ".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"UPolynomial({self.nvars}, {self.to_text()!r})"


def diff_terms(a: UPolynomial, b: UPolynomial) -> list[tuple[UMonomial, Rational, Rational]]:
    """Monomials where a and b disagree, as ``(mono, coeff_a, coeff_b)``."""
    ta, tb = a.terms, b.terms
    keys = sorted(set(ta) | set(tb))
    return [(m, ta.get(m, 0), tb.get(m, 0)) for m in keys if ta.get(m, 0) != tb.get(m, 0)]


@lru_cache(maxsize=None)
def _elementary(p: Poset) -> tuple[UPolynomial, ...]:
    h = longest_chain(p)
    out = []
    for k in range(h + 1):
        monos = []
        for ch in chains(p, k):
            e = [0] * p.n
            for x in ch:
                e[x] = 1
            monos.append(tuple(e))
        out.append(UPolynomial.from_monomials(p.n, monos))
    return tuple(out)


def e_k_P(p: Poset, k: int) -> UPolynomial:
    """P-elementary function: sum of ``u_{i_1}...u_{i_k}`` over k-chains of P."""
    es = _elementary(p)
    if 0 <= k < len(es):
        return es[k]
    return UPolynomial.zero(p.n)


def apply_psi(f: SymFunc, p: Poset, integral: bool = False) -> UPolynomial:
    """Image of an e-basis symmetric function under ``e_k -> e_k^P``.

    With ``integral=True`` a non-integral result raises IntegralityError.
    """
    if f.basis != "e":
        raise ValueError("apply_psi needs an e-basis expansion")
    es = _elementary(p)
    total = UPolynomial.zero(p.n)
    for lam, c in f.coeffs.items():
        if any(k >= len(es) for k in lam):
            continue
        term = UPolynomial.constant(p.n, c)
        for k in lam:
            term = term * es[k]
        total = total + term
    if integral and not total.is_integral():
        raise IntegralityError(f"psi image is not integral: {total}")
    return total


def det_upoly(mat: Sequence[Sequence[UPolynomial]], nvars: int | None = None) -> UPolynomial:
    """Exact determinant as the signed sum over permutations.

    The sum is organised as Laplace expansion along the first row with the
    minors on each remaining column set memoised; zero entries are skipped.
    """
    dim = len(mat)
    if dim > MAX_DET_DIM:
        raise SizeError(f"determinants are limited to {MAX_DET_DIM}x{MAX_DET_DIM}")
    if any(len(row) != dim for row in mat):
        raise ValueError("matrix is not square")
    if dim == 0:
        return UPolynomial.constant(nvars or 0)
    nvars = mat[0][0].nvars
    terms = [[entry._terms for entry in row] for row in mat]
    memo: dict[int, dict] = {}

    def minor(row: int, used: int) -> dict:
        if row == dim:
            return {0: 1}
        if used in memo:
            return memo[used]
        acc: dict = {}
        sign = 1
        for col in range(dim):
            if used >> col & 1:
                continue
            entry = terms[row][col]
            if entry:
                sub = minor(row + 1, used | 1 << col)
                if sub:
                    _addmul(acc, entry, sub, sign)
            sign = -sign
        acc = {m: c for m, c in acc.items() if c}
        memo[used] = acc
        return acc

    return UPolynomial._raw(nvars, {m: _norm(c) for m, c in minor(0, 0).items()})


def _addmul(acc: dict, a: dict, b: dict, sign: int) -> None:
    """``acc += sign * a * b`` on packed term dictionaries."""
    get = acc.get
    for m1, c1 in a.items():
        c1 = sign * c1
        for m2, c2 in b.items():
            m = m1 + m2
            acc[m] = get(m, 0) + c1 * c2



def _columns(lam, mu):
    width = lam[0]
    return padded(conjugate(lam), width), padded(conjugate(mu), width)


def s_P_skew(shape: SkewShape, p: Poset) -> UPolynomial:
    """``det[e^P_{lambda'_i - mu'_j - i + j}]`` of size ``l(lambda')``."""
    if not shape.outer:
        return UPolynomial.constant(p.n)
    lc, mc = _columns(shape.outer, shape.inner)
    dim = len(lc)
    if dim > MAX_DET_DIM:
        raise SizeError(f"determinants are limited to {MAX_DET_DIM}x{MAX_DET_DIM}")
    mat = [[e_k_P(p, lc[i] - mc[j] - i + j) for j in range(dim)] for i in range(dim)]
    return det_upoly(mat)


def krange(cs: CylindricShape, p: Poset, by: str = "row") -> list[tuple[int, int]]:
    """Per-index intervals ``[lo, hi]`` of k outside which a whole row (``by="row"``)
    or column (``by="col"``) of the cylindric Jacobi-Trudi matrix vanishes.

    An interval with ``lo > hi`` means that line is always zero.
    """
    h = longest_chain(p)
    lc, mc = _columns(cs.outer, cs.inner)
    width = len(lc)
    period = width + cs.shift
    out = []
    for a in range(width):
        if by == "row":
            offs = [lc[a] - mc[j] - a + j for j in range(width)]
        elif by == "col":
            offs = [lc[i] - mc[a] - i + a for i in range(width)]
        else:
            raise ValueError("by must be 'row' or 'col'")
        # need 0 <= k*period + off <= h for some off
        lo = -((max(offs)) // period)
        hi = (h - min(offs)) // period
        out.append((lo, hi))
    return out


def k_tuples(ranges: Sequence[tuple[int, int]]) -> Iterator[tuple[int, ...]]:
    """Integer tuples with ``k_i`` in ``ranges[i]`` summing to zero."""
    n = len(ranges)
    if any(lo > hi for lo, hi in ranges):
        return
    # suffix bounds for pruning
    min_suf = [0] * (n + 1)
    max_suf = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        min_suf[i] = min_suf[i + 1] + ranges[i][0]
        max_suf[i] = max_suf[i + 1] + ranges[i][1]

    def rec(i, acc, prefix):
        if i == n:
            if acc == 0:
                yield tuple(prefix)
            return
        lo, hi = ranges[i]
        for k in range(lo, hi + 1):
            rest = acc + k
            if min_suf[i + 1] <= -rest <= max_suf[i + 1]:
                prefix.append(k)
                yield from rec(i + 1, rest, prefix)
                prefix.pop()

    yield from rec(0, 0, [])


def cylindric_matrix(cs: CylindricShape, p: Poset, k: Sequence[int], by: str = "row") -> list[list[UPolynomial]]:
    lc, mc = _columns(cs.outer, cs.inner)
    width = len(lc)
    period = width + cs.shift
    if by == "row":
        return [[e_k_P(p, k[i] * period + lc[i] - mc[j] - i + j) for j in range(width)]
                for i in range(width)]
    return [[e_k_P(p, k[j] * period + lc[i] - mc[j] - i + j) for j in range(width)]
            for i in range(width)]


def cylindric_terms(cs: CylindricShape, p: Poset, by: str = "row") -> Iterator[tuple[tuple[int, ...], UPolynomial]]:
    """Nonzero determinants of the k-sum, keyed by k."""
    if cs.width > MAX_CYL_WIDTH:
        raise SizeError(f"cylindric determinants are limited to lambda_1 <= {MAX_CYL_WIDTH}")
    for k in k_tuples(krange(cs, p, by)):
        term = det_upoly(cylindric_matrix(cs, p, k, by))
        if term:
            yield k, term


def s_P_cylindric(cs: CylindricShape, p: Poset) -> UPolynomial:
    """Sum over k with zero sum of ``det[e^P_{k_i(lambda_1+d) + lambda'_i - mu'_j - i + j}]``."""
    total = UPolynomial.zero(p.n)
    for _, term in cylindric_terms(cs, p, "row"):
        total = total + term
    return total


def second_determinant(cs: CylindricShape, p: Poset) -> UPolynomial:
    """The same sum with the shift ``k_j`` attached to columns instead of rows."""
    total = UPolynomial.zero(p.n)
    for _, term in cylindric_terms(cs, p, "col"):
        total = total + term
    return total


def coeff_uP(f: UPolynomial) -> Rational:
    """Coefficient of the squarefree monomial ``u_P``."""
    return f.coeff((1,) * f.nvars)


def weight_sum(fillings: Iterable, n: int) -> UPolynomial:
    """Sum of ``u^T`` over the given fillings."""
    from .tableaux import u_weight

    return UPolynomial.from_monomials(n, (u_weight(f, n) for f in fillings))
