"""Gaussian binomials, the p-group subgroup ceiling S(p, a) and the two bounds.

``S(p, a)`` is the piecewise ceiling on the number of subgroups above a
subgroup of index ``p**a`` in a p-group.  For ``a <= 5`` it is an explicit
polynomial in ``p``; for ``a >= 6`` it is ``c(p) * p**(a*a/4)`` with
``c(p) = 2.129 * C(p)`` and ``C(p)`` the Euler product
``prod_{i>=1} 1 / (1 - p**-i)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    DEFAULT_MAX_LEVEL,
    CertifiedReal,
    Decision,
    Factorization,
    compare,
    factorize,
    is_prime,
    level_bits,
    log2_enclosure,
    pow_enclosure,
    root_enclosure,
)
from .report import Verdict, VerificationReport

MAIN_CONSTANT = Fraction(73722, 10000)
MAIN_EXPONENT_SHIFT = Fraction(18919, 10000)
CEILING_SCALE = Fraction(2129, 1000)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


@lru_cache(maxsize=1 << 16)
def _gauss_rec(m: int, r: int, p: int) -> int:
    if r == 0 or r == m:
        return 1
    if r > m:
        return 0
    # [m, r] = [m-1, r] p^r + [m-1, r-1]
    return _gauss_rec(m - 1, r, p) * p**r + _gauss_rec(m - 1, r - 1, p)


def gauss_binom(m: int, r: int, p: int) -> int:
    """Gaussian binomial coefficient ``[m choose r]_p`` via the recurrence."""
    if m < 0 or r < 0:
        raise ValueError(f"gauss_binom needs m, r >= 0, got ({m}, {r})")
    _check_prime(p)
    if r > m:
        return 0
    return _gauss_rec(m, r, p)


def gauss_binom_product(m: int, r: int, p: int) -> int:
    """Same coefficient from the closed product formula (independent route)."""
    if r > m:
        return 0
    num = den = 1
    for i in range(r):
        num *= p ** (m - i) - 1
        den *= p ** (i + 1) - 1
    q, rem = divmod(num, den)
    assert rem == 0, (m, r, p)
    return q


# -- Euler product C(p) ------------------------------------------------------

def _euler_terms(p: int, bits: int) -> int:
    # smallest N with 4 p^-N <= 2^-(bits+2)
    n, power = 0, 1
    while power < 1 << (bits + 4):
        power *= p
        n += 1
    return max(n, 2)


@lru_cache(maxsize=256)
def euler_product(p: int, level: int = 0) -> CertifiedReal:
    """Enclosure of ``C(p) = prod_{i>=1} 1/(1 - p**-i)``.

    Lower end: the product up to ``N``.  Upper end: that product times
    ``1 + 4 p**-N``, which dominates the tail because ``1/(1-x) <= 1+2x``
    for ``x <= 1/2``.
    """
    _check_prime(p)
    bits = level_bits(level) + 8
    n = _euler_terms(p, bits)
    num = den = 1
    for i in range(1, n + 1):
        pi = p**i
        num *= pi
        den *= pi - 1
    head = Fraction(num, den)
    tail = 1 + Fraction(4, p**n)
    return CertifiedReal(head, head * tail, level).rounded(bits + 8)


def ceiling_constant(p: int, level: int = 0) -> CertifiedReal:
    """Enclosure of ``c(p) = 2.129 * C(p)``."""
    return CEILING_SCALE * euler_product(p, level)


# -- S(p, a) -----------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupCeiling:
    p: int
    a: int
    value: CertifiedReal

    @property
    def is_exact(self) -> bool:
        return self.value.is_exact

    @property
    def exact_value(self) -> int:
        if not self.value.is_exact:
            raise ValueError(f"S({self.p}, {self.a}) is not an exact integer")
        return int(self.value.lo)


def _ceiling_polynomial(p: int, a: int) -> int:
    if a == 0:
        return 1
    if a == 1:
        return 2
    if a == 2:
        return p + 3
    if a == 3:
        return 2 * p**2 + 2 * p + 4
    if a == 4:
        return p**4 + 3 * p**3 + 4 * p**2 + 3 * p + 5
    if a == 5:
        return 2 * p**6 + 2 * p**5 + 6 * p**4 + 6 * p**3 + 6 * p**2 + 4 * p + 6
    raise ValueError(a)


@lru_cache(maxsize=4096)
def sub_ceiling(p: int, a: int, level: int = 0) -> SubgroupCeiling:
    """``S(p, a)``: exact for ``a <= 5``, an enclosure of ``c(p) p^(a^2/4)`` above."""
    _check_prime(p)
    if a < 0:
        raise ValueError(f"S(p, a) needs a >= 0, got {a}")
    if a <= 5:
        return SubgroupCeiling(p, a, CertifiedReal.exact(_ceiling_polynomial(p, a), level))
    whole, quarter = divmod(a * a, 4)
    power = CertifiedReal.exact(p**whole, level)
    if quarter:
        # a odd: a^2/4 = floor + 1/4
        power = power * root_enclosure(p, 4, level + 1)
    value = (ceiling_constant(p, level + 1) * power).rounded(level_bits(level) + 16)
    return SubgroupCeiling(p, a, CertifiedReal(value.lo, value.hi, level))


def log2_sub_ceiling(p: int, a: int, level: int = 0) -> CertifiedReal:
    """Enclosure of ``log2 S(p, a)``."""
    s = sub_ceiling(p, a, level + 1).value
    return log2_enclosure(s, level + 1)


# -- bounds ------------------------------------------------------------------

def _as_factorization(n) -> Factorization:
    return n if isinstance(n, Factorization) else factorize(n)


def bound_f(n, level: int = 0) -> CertifiedReal:
    """``n**(l-1) * prod S(p_i, c_i)`` over the prime-power factorization of ``n``.

    Returns exact 1 for ``n = 1``.
    """
    fac = _as_factorization(n)
    if fac.value == 1:
        return CertifiedReal.exact(1, level)
    result = CertifiedReal.exact(fac.value ** (fac.length - 1), level)
    for p, c in fac.factors:
        result = result * sub_ceiling(p, c, level + 1).value
    if result.is_exact:
        return CertifiedReal(result.lo, result.hi, level)
    return CertifiedReal(result.lo, result.hi, level).rounded(level_bits(level) + 16)


def main_exponent(n: int, level: int = 0) -> CertifiedReal:
    """``log2(n)/4 + 1.8919``."""
    return log2_enclosure(n, level + 2) / 4 + MAIN_EXPONENT_SHIFT


def bound_main(n: int, level: int = 0) -> CertifiedReal:
    """``7.3722 * n**(log2(n)/4 + 1.8919)``."""
    if n < 1:
        raise ValueError(f"bound_main needs n >= 1, got {n}")
    if n == 1:
        return CertifiedReal.exact(MAIN_CONSTANT, level)
    power = pow_enclosure(n, main_exponent(n, level), level + 1)
    return CertifiedReal(MAIN_CONSTANT * power.lo, MAIN_CONSTANT * power.hi, level)


def sum_gauss_le_ceiling(p: int, a: int, max_level: int = DEFAULT_MAX_LEVEL) -> VerificationReport:
    """Certify ``sum_k [a choose k]_p <= S(p, a)``."""
    total = sum(gauss_binom(a, k, p) for k in range(a + 1))
    cmp = compare(total, lambda level: sub_ceiling(p, a, level).value, max_level)
    verdict = {
        Decision.HOLDS: Verdict.VERIFIED,
        Decision.FAILS: Verdict.COUNTEREXAMPLE,
        Decision.UNDECIDED: Verdict.UNDECIDED,
    }[cmp.decision]
    witnesses = [{"sum": total, "ceiling": cmp.rhs, "equality": cmp.rhs.is_exact and cmp.rhs.lo == total}]
    return VerificationReport(
        "sum-gauss-le-ceiling", {"p": p, "a": a}, verdict, witnesses, cmp.level
    )
