import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cylchroma.errors import SizeError
from cylchroma.poset import all_posets, antichain, chain, disjoint_union, is_31_free, longest_chain
from cylchroma.shapes import CylindricShape, SkewShape, conjugate, enumerate_cylindric_shapes, partitions
from cylchroma.symx import SymFunc
from cylchroma.tableaux import cylindric_weight_counts, enum_cylindric_p_tableaux, is_standard, skew_weight_counts
from cylchroma.upoly import (UPolynomial, apply_psi, coeff_uP, cylindric_terms, det_upoly, diff_terms,
                             e_k_P, krange, s_P_cylindric, s_P_skew, second_determinant)

from conftest import free_posets, total_order


def U(n, terms):
    return UPolynomial(n, terms)


def leibniz(mat, n):
    size = len(mat)
    total = UPolynomial.zero(n)
    for perm in itertools.permutations(range(size)):
        inv = sum(1 for a, b in itertools.combinations(range(size), 2) if perm[a] > perm[b])
        term = UPolynomial.constant(n, -1 if inv % 2 else 1)
        for r, c in enumerate(perm):
            term = term * mat[r][c]
        total = total + term
    return total


def test_polynomial_arithmetic():
    x = UPolynomial.variable(2, 0)
    y = UPolynomial.variable(2, 1)
    f = (x + y) ** 2
    assert f == U(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert f - f == UPolynomial.zero(2)
    assert (f * 0).terms == {}
    assert (x * Fraction(1, 2)).coeff((1, 0)) == Fraction(1, 2)
    assert not (x * Fraction(1, 2)).is_integral()
    assert f.degree() == 2


def test_no_zero_terms_stored():
    f = U(2, {(1, 0): 1, (0, 1): 0})
    assert f.terms == {(1, 0): 1}


def test_canonical_text():
    f = U(3, {(0, 1, 1): 3, (1, 0, 0): -1})
    assert f.to_text() == "3*u1^1*u2^1 + -1*u0^1"
    assert UPolynomial.zero(3).to_text() == "0"


def test_e_k_P_examples():
    assert e_k_P(chain(3), 2) == U(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert e_k_P(antichain(3), 2) == UPolynomial.zero(3)
    for p in all_posets(3):
        assert e_k_P(p, 0) == UPolynomial.constant(3)
        assert e_k_P(p, -1) == UPolynomial.zero(3)
        assert e_k_P(p, longest_chain(p) + 1) == UPolynomial.zero(3)


def test_apply_psi_examples():
    assert apply_psi(SymFunc(2, "e", {(2,): 1}), chain(3)) == e_k_P(chain(3), 2)
    p2 = SymFunc(2, "e", {(1, 1): 1, (2,): -2})
    assert apply_psi(p2, antichain(2)) == U(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert apply_psi(SymFunc(2, "e", {(2,): 1}), chain(2)) == U(2, {(1, 1): 1})


@given(st.sampled_from(list(all_posets(4))),
       st.dictionaries(st.sampled_from(list(partitions(3))), st.integers(-3, 3), max_size=3),
       st.dictionaries(st.sampled_from(list(partitions(2))), st.integers(-3, 3), max_size=2))
@settings(max_examples=30, deadline=None)
def test_psi_is_multiplicative(p, fa, fb):
    f, g = SymFunc(3, "e", fa), SymFunc(2, "e", fb)
    prod = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            key = tuple(sorted(a + b, reverse=True))
            prod[key] = prod.get(key, 0) + ca * cb
    assert apply_psi(SymFunc(5, "e", prod), p) == apply_psi(f, p) * apply_psi(g, p)


def test_det_examples():
    one = UPolynomial.constant(2)
    zero = UPolynomial.zero(2)
    assert det_upoly([[one, zero], [zero, one]]) == one
    assert det_upoly([], nvars=2) == one
    p = chain(1)
    assert det_upoly([[e_k_P(p, 1)]]) == UPolynomial.variable(1, 0)
    q = chain(2)
    m = [[e_k_P(q, 1), one], [e_k_P(q, 2), e_k_P(q, 1)]]
    assert det_upoly(m) == U(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})


def test_det_guard():
    one = UPolynomial.constant(1)
    with pytest.raises(SizeError):
        det_upoly([[one] * 11 for _ in range(11)])


@given(st.integers(1, 5), st.data())
@settings(max_examples=25, deadline=None)
def test_det_matches_leibniz(size, data):
    n = 3
    mono = st.tuples(*[st.integers(0, 2)] * n)
    entry = st.dictionaries(mono, st.integers(-3, 3), max_size=3).map(lambda t: U(n, t))
    mat = [[data.draw(entry) for _ in range(size)] for _ in range(size)]
    assert det_upoly(mat) == leibniz(mat, n)


def test_s_P_skew_examples():
    for p in all_posets(3):
        assert s_P_skew(SkewShape((1,), ()), p) == e_k_P(p, 1)
    assert s_P_skew(SkewShape((1, 1), ()), antichain(2)) == UPolynomial.zero(2)
    want = U(3, skew_weight_counts(SkewShape((2, 1), ()), chain(3)))
    assert s_P_skew(SkewShape((2, 1), ()), chain(3)) == want


def test_krange_bounds():
    cs = CylindricShape((2, 2), (), 0)
    p = chain(4)
    rows = krange(cs, p)
    h, period = 4, 2
    for lo, hi in rows:
        assert hi - lo + 1 <= -(-(h + 2) // period) + 1
    # every k outside the window makes the row vanish
    lc = conjugate(cs.outer)
    for i, (lo, hi) in enumerate(rows, start=1):
        for k in range(lo - 3, hi + 4):
            subs = [k * period + lc[i - 1] - j + i for j in (1, 2)]
            live = any(0 <= s <= h for s in subs)
            assert live == (lo <= k <= hi)


def test_krange_empty_poset():
    cs = CylindricShape((1,), (), 1)
    p = antichain(0)
    assert s_P_cylindric(cs, p) == UPolynomial.zero(0)
    assert s_P_cylindric(CylindricShape((1,), (1,), 1), p) == UPolynomial.constant(0)


def test_cylindric_examples():
    for p in all_posets(3):
        assert s_P_cylindric(CylindricShape((1,), (), 1), p) == e_k_P(p, 1)
        assert second_determinant(CylindricShape((1,), (), 1), p) == e_k_P(p, 1)
    p = total_order(4)
    cs = CylindricShape((2, 2), (), 0)
    tabs = list(enum_cylindric_p_tableaux(cs, p))
    assert all(f.columns[0] == f.columns[1] for f in tabs)
    assert s_P_cylindric(cs, p) == U(4, cylindric_weight_counts(cs, p))


def test_empty_shape_is_one():
    cs = CylindricShape((2, 1), (2, 1), 1)
    for p in all_posets(3):
        assert s_P_cylindric(cs, p) == UPolynomial.constant(3)
        assert second_determinant(cs, p) == UPolynomial.constant(3)


def test_large_d_only_zero_tuple():
    for n in range(1, 5):
        for p in all_posets(n):
            for size in range(1, 5):
                for lam in partitions(size):
                    cs = CylindricShape(lam, (), conjugate(lam)[0])
                    ks = [k for k, _ in cylindric_terms(cs, p)]
                    assert all(not any(k) for k in ks)
                    assert s_P_cylindric(cs, p) == s_P_skew(cs.skew, p)


def test_coeff_uP():
    assert coeff_uP(U(2, {(1, 1): 1, (2, 0): 3})) == 1
    assert coeff_uP(UPolynomial.zero(2)) == 0
    for p in free_posets(4):
        for cs in enumerate_cylindric_shapes(4, max_parts=3, max_cols=3):
            std = sum(1 for f in enum_cylindric_p_tableaux(cs, p) if is_standard(f, p))
            assert coeff_uP(s_P_cylindric(cs, p)) == std


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_main_theorem_small(n):
    for p in free_posets(n):
        for size in range(1, 5):
            for cs in enumerate_cylindric_shapes(size, max_parts=4, max_cols=3):
                det = s_P_cylindric(cs, p)
                assert det == U(n, cylindric_weight_counts(cs, p)), (p, cs)
                assert all(c > 0 for _, c in det.items())


def test_two_determinants_small():
    for n in range(1, 4):
        for p in all_posets(n):
            for cs in enumerate_cylindric_shapes(n):
                assert s_P_cylindric(cs, p) == second_determinant(cs, p)


def test_negative_control_3_plus_1():
    p = disjoint_union(chain(3), chain(1))
    assert not is_31_free(p)
    cs = CylindricShape((2, 2), (), 0)
    det = s_P_cylindric(cs, p)
    tab = U(4, cylindric_weight_counts(cs, p))
    diff = diff_terms(det, tab)
    assert diff, "expected the identity to fail for a (3+1) poset"
    # the failing coefficient is negative, so positivity fails too
    assert any(c < 0 for _, c in det.items())


def test_diff_terms():
    a = U(2, {(1, 0): 2, (0, 1): 1})
    b = U(2, {(1, 0): 2, (1, 1): 5})
    assert diff_terms(a, b) == [((0, 1), 1, 0), ((1, 1), 0, 5)]
