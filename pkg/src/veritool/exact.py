"""Exact integer/rational arithmetic and combinatorial primitives.

Every quantity downstream (binomial sums, harmonic numbers, valuations) is
built on the two substrate types below.  Python's ``int`` is already an exact
sign-magnitude bignum and ``fractions.Fraction`` keeps ``gcd(num, den) == 1``
with a positive denominator, so they satisfy the canonical-form requirements
directly; the aliases exist so call sites say what they mean.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

ExactInt = int
ExactRational = Fraction

_INT_PATTERN = re.compile(r"-?[0-9]+\Z")


def parse_int(text: str) -> int:
    """Parse a decimal integer string ("-?[0-9]+")."""
    if not _INT_PATTERN.match(text):
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def format_int(value: int) -> str:
    return str(value)


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (den omitted when 1) into a canonical fraction."""
    num, sep, den = text.partition("/")
    if not _INT_PATTERN.match(num) or (sep and not _INT_PATTERN.match(den)):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(int(num), int(den)) if sep else Fraction(int(num))


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_prime(n: int) -> bool:
    """Deterministic trial division; meant for desk-scale n (< 10**6)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! with the conventions (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial needs n >= -1, got {n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, extended to negative upper index.

    For n < 0 uses the falling-factorial definition
    C(n, k) = n(n-1)...(n-k+1)/k!, i.e. (-1)^k C(k-n-1, k).
    Returns 0 when k < 0, or when n >= 0 and k > n.
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    return (-1) ** (k & 1) * math.comb(k - n - 1, k)


def rational_binomial(x: Fraction | int, k: int) -> Fraction:
    """C(x, k) = x(x-1)...(x-k+1)/k! for rational x and k >= 0."""
    if k < 0:
        raise ValueError(f"rational binomial needs k >= 0, got {k}")
    x = Fraction(x)
    a, b = x.numerator, x.denominator
    num = 1
    for i in range(k):
        num *= a - i * b
    return Fraction(num, b**k * math.factorial(k))


def legendre_valuation(n: int, p: int) -> int:
    """ord_p(n!) = sum over i >= 1 of floor(n / p^i).

    The sum is finite: terms vanish once p^i > n.
    """
    _require_prime(p)
    if n < 0:
        raise ValueError(f"valuation needs n >= 0, got {n}")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def kummer_carries(m: int, n: int, p: int) -> int:
    """Number of carries when adding m and n in base p.

    Equals ord_p(C(m+n, m)).
    """
    _require_prime(p)
    if m < 0 or n < 0:
        raise ValueError("carry count needs m, n >= 0")
    carries = 0
    carry = 0
    while m or n or carry:
        carry = 1 if m % p + n % p + carry >= p else 0
        carries += carry
        m //= p
        n //= p
    return carries
