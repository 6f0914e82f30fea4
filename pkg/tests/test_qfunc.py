from fractions import Fraction
from itertools import combinations, product
from math import comb

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from subcount.exact import Decision, compare
from subcount.qfunc import (
    MAIN_CONSTANT,
    bound_f,
    bound_main,
    ceiling_constant,
    euler_product,
    gauss_binom,
    gauss_binom_product,
    sub_ceiling,
    sum_gauss_le_ceiling,
)
from subcount.report import Verdict

mpmath.mp.dps = 50
PRIMES = (2, 3, 5, 7, 11, 13)


def mp(x):
    return mpmath.mpf(x.numerator) / x.denominator


def subspace_count(m, r, p):
    """Brute force: distinct spans of r-subsets of F_p^m with p^r elements."""
    vectors = [v for v in product(range(p), repeat=m) if any(v)]
    spans = set()
    for gens in combinations(vectors, r):
        span = {tuple([0] * m)}
        for g in gens:
            span = {tuple((a + k * b) % p for a, b in zip(s, g)) for s in span for k in range(p)}
        if len(span) == p**r:
            spans.add(frozenset(span))
    return len(spans)


@pytest.mark.parametrize("m,r,p,expected", [(5, 0, 7, 1), (2, 1, 2, 3), (4, 2, 2, 35), (3, 1, 2, 7)])
def test_gauss_examples(m, r, p, expected):
    assert gauss_binom(m, r, p) == expected


@pytest.mark.parametrize("m,r,p", [(2, 1, 2), (3, 1, 2), (4, 2, 2), (3, 1, 3), (3, 2, 3), (4, 1, 2)])
def test_gauss_counts_subspaces(m, r, p):
    if r == 0:
        assert gauss_binom(m, r, p) == 1
    assert gauss_binom(m, r, p) == subspace_count(m, r, p)


def test_gauss_recurrence_step():
    assert gauss_binom(3, 1, 2) == gauss_binom(2, 1, 2) * 2 + gauss_binom(2, 0, 2)


def test_gauss_rejects():
    with pytest.raises(ValueError):
        gauss_binom(3, 1, 4)
    with pytest.raises(ValueError):
        gauss_binom(-1, 0, 2)
    assert gauss_binom(2, 5, 3) == 0


@given(st.integers(0, 16), st.integers(0, 16), st.sampled_from(PRIMES))
def test_gauss_symmetry_and_dominance(m, r, p):
    if r > m:
        return
    g = gauss_binom(m, r, p)
    assert g == gauss_binom(m, m - r, p) == gauss_binom_product(m, r, p)
    assert g >= comb(m, r)


def test_euler_product_matches_mpmath():
    for p in (2, 3, 5, 7, 23, 10007):
        e = euler_product(p, 2)
        t = 1 / mpmath.qp(mpmath.mpf(1) / p)
        assert mp(e.lo) <= t <= mp(e.hi)
    assert euler_product(2, 2).contains(Fraction("3.46274661945"))
    assert abs(float(euler_product(3, 2).mid) - 1.7853) < 1e-4
    big = euler_product(10007, 1)
    assert 1 <= big.lo and big.hi <= Fraction(1001, 1000)


def test_euler_product_refines():
    for p in (2, 3, 5):
        a, b = euler_product(p, 1), euler_product(p, 3)
        assert a.lo <= b.lo and b.hi <= a.hi


def test_ceiling_constant_decreasing():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    cs = [ceiling_constant(p, 2) for p in primes]
    assert all(b.hi <= a.hi for a, b in zip(cs, cs[1:]))


def test_c2_constant():
    c2 = ceiling_constant(2, 3)
    assert c2.hi < MAIN_CONSTANT
    # the published seven digits are a truncation of the enclosed value
    assert str(float(c2.lo))[:8] == str(float(c2.hi))[:8] == "7.372187"
    assert c2.width <= Fraction(1, 10**5)


@pytest.mark.parametrize("p,a,expected", [(2, 0, 1), (2, 1, 2), (3, 2, 6), (2, 3, 16), (2, 5, 374), (2, 4, 67)])
def test_sub_ceiling_polynomials(p, a, expected):
    assert sub_ceiling(p, a).exact_value == expected


def test_sub_ceiling_polynomials_equal_gauss_sums():
    # for a <= 5 the ceiling equals the number of subspaces of F_p^a
    for p in (2, 3, 5, 7):
        for a in range(6):
            assert sub_ceiling(p, a).exact_value == sum(gauss_binom(a, k, p) for k in range(a + 1))


def test_sub_ceiling_large_a():
    s = sub_ceiling(2, 6, 2).value
    t = 2.129 / mpmath.qp(mpmath.mpf(1) / 2) * mpmath.power(2, 9)
    assert mp(s.lo) <= t <= mp(s.hi)
    assert abs(float(s.mid) - 3774.56) < 0.01
    s7 = sub_ceiling(3, 7, 2).value
    t7 = 2.129 / mpmath.qp(mpmath.mpf(1) / 3) * mpmath.power(3, mpmath.mpf(49) / 4)
    assert mp(s7.lo) <= t7 <= mp(s7.hi)


@pytest.mark.parametrize("p,a,total,equal", [(3, 2, 6, True), (2, 3, 16, True), (2, 6, 2825, False)])
def test_sum_gauss_examples(p, a, total, equal):
    rep = sum_gauss_le_ceiling(p, a)
    assert rep.verdict is Verdict.VERIFIED
    assert rep.witnesses[0]["sum"] == total
    assert rep.witnesses[0]["equality"] is equal


def test_bound_f_examples():
    assert bound_f(1).lo == 1
    assert bound_f(6).lo == 24 and bound_f(6).is_exact
    assert bound_f(4).lo == 5  # S(2,2) = 2 + 3
    assert bound_f(12).lo == 120  # 12 * 5 * 2


def test_bound_main_examples():
    assert bound_main(1).is_exact and bound_main(1).lo == MAIN_CONSTANT
    for n, approx in [(2, 32.5367), (8, 1792.547)]:
        e = bound_main(n, 2)
        t = mpmath.mpf("7.3722") * mpmath.power(n, mpmath.log(n, 2) / 4 + mpmath.mpf("1.8919"))
        assert mp(e.lo) <= t <= mp(e.hi)
        assert abs(float(e.mid) - approx) < 1e-3


def test_bound_f_below_main_small_n():
    # sanity: for small indices with no large prime powers the two bounds are ordered
    for n in (2, 6, 12, 30, 64):
        assert compare(lambda lv: bound_f(n, lv), lambda lv: bound_main(n, lv)).decision is Decision.HOLDS
