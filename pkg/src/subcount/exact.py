"""Exact integers, rationals and certified real enclosures.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`.
Everything irrational is carried as a :class:`CertifiedReal`, a closed
interval with rational endpoints that provably contains the value.  Each
enclosure is produced at a *precision level*; level ``k`` targets a
relative width of ``2**-(8 + 8k)`` (see :func:`level_bits`).

Comparisons go through :func:`compare` / :func:`decide_leq`, which
re-evaluate both sides at increasing levels until the intervals separate
or the level cap is hit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

BASE_BITS = 8
BITS_PER_LEVEL = 8
DEFAULT_MAX_LEVEL = 16

Number = Union[int, Fraction]


def level_bits(level: int) -> int:
    """Number of correct bits targeted at a precision level."""
    if level < 0:
        raise ValueError(f"precision level must be >= 0, got {level}")
    return BASE_BITS + BITS_PER_LEVEL * level


# -- integers ---------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def valuation(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``n`` (``n != 0``)."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def p_part(n: int, p: int) -> int:
    return p ** valuation(n, p)


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its prime factorization, primes increasing."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors}")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def length(self) -> int:
        """Number of distinct primes."""
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)


def factorize(n: int) -> Factorization:
    """Factor ``n >= 1`` by trial division."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n!r}")
    factors = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of a non-negative integer."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)  # 2**ceil(bits/k) >= root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


# -- directed rounding ------------------------------------------------------

def round_down(x: Fraction, bits: int) -> Fraction:
    """Largest number with ``bits`` significant bits that is ``<= x``."""
    x = Fraction(x)
    if x == 0:
        return x
    shift = bits - (abs(x.numerator).bit_length() - x.denominator.bit_length())
    if shift >= 0:
        return Fraction((x.numerator << shift) // x.denominator, 1 << shift)
    return Fraction((x.numerator // (x.denominator << -shift)) << -shift)


def round_up(x: Fraction, bits: int) -> Fraction:
    return -round_down(-Fraction(x), bits)


# -- enclosures -------------------------------------------------------------

@dataclass(frozen=True)
class CertifiedReal:
    """Closed interval ``[lo, hi]`` with rational endpoints."""

    lo: Fraction
    hi: Fraction
    level: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, x: Number, level: int = 0) -> "CertifiedReal":
        return cls(Fraction(x), Fraction(x), level)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        if isinstance(x, CertifiedReal):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def rounded(self, bits: int) -> "CertifiedReal":
        """Outward rounding to ``bits`` significant bits."""
        return CertifiedReal(round_down(self.lo, bits), round_up(self.hi, bits), self.level)

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        if self.is_exact:
            return f"CertifiedReal({self.lo})"
        return f"CertifiedReal([{float(self.lo):.12g}, {float(self.hi):.12g}], level={self.level})"

    # arithmetic is exact on the endpoints; callers round when sizes matter

    def _lift(self, other) -> "CertifiedReal":
        if isinstance(other, CertifiedReal):
            return other
        if isinstance(other, (int, Fraction)):
            return CertifiedReal.exact(other, self.level)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return CertifiedReal(self.lo + o.lo, self.hi + o.hi, max(self.level, o.level))

    __radd__ = __add__

    def __neg__(self):
        return CertifiedReal(-self.hi, -self.lo, self.level)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        level = max(self.level, o.level)
        if self.lo >= 0 and o.lo >= 0:
            return CertifiedReal(self.lo * o.lo, self.hi * o.hi, level)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return CertifiedReal(min(products), max(products), level)

    __rmul__ = __mul__

    def reciprocal(self) -> "CertifiedReal":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"enclosure {self!r} contains zero")
        return CertifiedReal(1 / self.hi, 1 / self.lo, self.level)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o * self.reciprocal()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        if self.lo >= 0:
            return CertifiedReal(self.lo**k, self.hi**k, self.level)
        result = CertifiedReal.exact(1, self.level)
        for _ in range(k):
            result = result * self
        return result


def as_enclosure(x, level: int = 0) -> CertifiedReal:
    if isinstance(x, CertifiedReal):
        return x
    return CertifiedReal.exact(Fraction(x), level)


# -- log2 -------------------------------------------------------------------

def _log2_bounds(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Enclose log2(x) for rational x > 0 to ``bits`` fractional bits.

    The binary digits of log2(m), m in [1, 2), are read off by repeated
    squaring: a digit is 1 iff m**2 >= 2.  m is tracked in fixed point
    with a lower and an upper copy rounded in opposite directions, so a
    digit is only emitted when both copies agree.
    """
    a, b = x.numerator, x.denominator
    if a <= 0:
        raise ValueError(f"log2 of non-positive value {x}")
    if a & (a - 1) == 0 and b & (b - 1) == 0:
        k = Fraction(a.bit_length() - b.bit_length())
        return k, k
    k = a.bit_length() - b.bit_length()
    if (a if k >= 0 else a << -k) < (b << k if k >= 0 else b):
        k -= 1
    guard = bits + 40
    num, den = a << guard, b
    if k >= 0:
        den <<= k
    else:
        num <<= -k
    m_lo = num // den
    m_hi = -((-num) // den)
    two = 2 << guard
    digits = 0
    known = 0
    for _ in range(bits):
        m_lo = (m_lo * m_lo) >> guard
        m_hi = -((-(m_hi * m_hi)) >> guard)
        if m_lo >= two:
            digits = 2 * digits + 1
            m_lo >>= 1
            m_hi = -((-m_hi) >> 1)
        elif m_hi < two:
            digits = 2 * digits
        else:
            break
        known += 1
    lo = k + Fraction(digits, 1 << known)
    return lo, lo + Fraction(1, 1 << known)


@lru_cache(maxsize=1 << 16)
def _log2_cached(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    return _log2_bounds(x, bits)


def log2_enclosure(x, level: int = 0) -> CertifiedReal:
    """Enclosure of log2(x) for a positive int, Fraction or enclosure.

    Exact powers of two give a degenerate interval.  The width is at most
    ``2**-level_bits(level)`` for rational input.
    """
    bits = level_bits(level)
    if isinstance(x, CertifiedReal):
        if x.lo <= 0:
            raise ValueError(f"log2 of enclosure with non-positive lower end {x!r}")
        lo, _ = _log2_cached(x.lo, bits)
        _, hi = _log2_cached(x.hi, bits)
        return CertifiedReal(lo, hi, level)
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"log2 of non-positive value {x}")
    lo, hi = _log2_cached(x, bits)
    return CertifiedReal(lo, hi, level)


# -- exp2 -------------------------------------------------------------------

@lru_cache(maxsize=64)
def _ln2_bounds(bits: int) -> tuple[Fraction, Fraction]:
    # ln 2 = sum_{k>=1} 1 / (k 2^k); tail after N terms < 1 / ((N+1) 2^N)
    n = bits + 8
    s = sum(Fraction(1, k << k) for k in range(1, n + 1))
    return round_down(s, bits + 8), round_up(s + Fraction(1, (n + 1) << n), bits + 8)


def _exp_lower(y: Fraction, bits: int) -> Fraction:
    # Taylor partial sum with every term floored; y in [0, 1)
    w = bits + 24
    yy = (y.numerator << w) // y.denominator
    one = 1 << w
    term = total = one
    n = 0
    while term:
        n += 1
        term = ((term * yy) >> w) // n
        total += term
    return Fraction(total, one)


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _exp_upper(y: Fraction, bits: int) -> Fraction:
    # every term ceiled; the tail past term n is below term n since y/(n+1) <= 1/2
    w = bits + 24
    yy = -((-(y.numerator << w)) // y.denominator)
    one = 1 << w
    term = total = one
    n = 0
    while term > 1:
        n += 1
        term = _ceil_div(_ceil_div(term * yy, one), n)
        total += term
    return Fraction(total + term, one)


def _exp2_bounds(q: Fraction, bits: int, upper: bool) -> Fraction:
    n = q.numerator // q.denominator
    f = q - n
    if f == 0:
        return Fraction(2) ** n
    ln2_lo, ln2_hi = _ln2_bounds(bits + 8)
    if upper:
        return _exp_upper(round_up(f * ln2_hi, bits + 16), bits + 8) * Fraction(2) ** n
    return _exp_lower(round_down(f * ln2_lo, bits + 16), bits + 8) * Fraction(2) ** n


def exp2_enclosure(x, level: int = 0) -> CertifiedReal:
    """Enclosure of 2**x for a rational or an enclosure."""
    x = as_enclosure(x, level)
    bits = level_bits(level)
    if x.is_exact and x.lo.denominator == 1:
        return CertifiedReal.exact(Fraction(2) ** int(x.lo), level)
    lo = round_down(_exp2_bounds(x.lo, bits, upper=False), bits + 8)
    hi = round_up(_exp2_bounds(x.hi, bits, upper=True), bits + 8)
    return CertifiedReal(lo, hi, level)


# -- roots and powers -------------------------------------------------------

def root_enclosure(x: Number, k: int, level: int = 0) -> CertifiedReal:
    """Enclosure of the k-th root of a non-negative rational by integer roots."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("root of a negative value")
    bits = level_bits(level) + 8
    scaled = x * (1 << (k * bits))
    lo_int = iroot(scaled.numerator // scaled.denominator, k)
    hi_int = lo_int if Fraction(lo_int**k) == scaled else lo_int + 1
    return CertifiedReal(Fraction(lo_int, 1 << bits), Fraction(hi_int, 1 << bits), level)


def pow_enclosure(base, exponent, level: int = 0) -> CertifiedReal:
    """Enclosure of ``base ** exponent`` for a positive base.

    Exact integer powers of exact bases stay exact; otherwise the power is
    evaluated as ``2 ** (exponent * log2(base))`` with outward rounding.
    """
    base = as_enclosure(base, level)
    exponent = as_enclosure(exponent, level)
    if base.lo <= 0:
        raise ValueError(f"pow_enclosure needs a positive base, got {base!r}")
    if base.is_exact and exponent.is_exact:
        e = exponent.lo
        if e.denominator == 1:
            return CertifiedReal.exact(base.lo ** int(e), level)
        if base.lo == 1:
            return CertifiedReal.exact(1, level)
    bits = level_bits(level)
    mag = max(abs(exponent.lo), abs(exponent.hi))
    log_level = level + 1 + (int(mag) + 1).bit_length() // BITS_PER_LEVEL
    logs = log2_enclosure(base, log_level)
    scaled = (exponent * logs).rounded(bits + 24 + (int(mag) + 1).bit_length())
    result = exp2_enclosure(scaled, level)
    return CertifiedReal(result.lo, result.hi, level)


# -- decisions --------------------------------------------------------------

class Decision(enum.Enum):
    HOLDS = "holds"          # certified lhs <= rhs
    FAILS = "fails"          # certified lhs > rhs
    UNDECIDED = "undecided"  # level cap reached without separation


@dataclass(frozen=True)
class Comparison:
    decision: Decision
    level: int
    lhs: CertifiedReal
    rhs: CertifiedReal


Expression = Union[CertifiedReal, int, Fraction, Callable[[int], CertifiedReal]]


def _evaluate(expr: Expression, level: int) -> CertifiedReal:
    if callable(expr):
        return as_enclosure(expr(level), level)
    return as_enclosure(expr, level)


def compare(lhs: Expression, rhs: Expression, max_level: int = DEFAULT_MAX_LEVEL) -> Comparison:
    """Certify ``lhs <= rhs`` or ``lhs > rhs``, escalating precision.

    Callables are re-evaluated at each level ``0..max_level``; constants are
    used as is.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    for level in range(max_level + 1):
        a = _evaluate(lhs, level)
        b = _evaluate(rhs, level)
        if a.hi <= b.lo:
            return Comparison(Decision.HOLDS, level, a, b)
        if a.lo > b.hi:
            return Comparison(Decision.FAILS, level, a, b)
        if not callable(lhs) and not callable(rhs):
            break
    return Comparison(Decision.UNDECIDED, level, a, b)


def decide_leq(lhs: Expression, rhs: Expression, max_level: int = DEFAULT_MAX_LEVEL) -> Decision:
    return compare(lhs, rhs, max_level).decision
