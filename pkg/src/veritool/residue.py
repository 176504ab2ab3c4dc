"""Arithmetic in Z/p^e: prime-power moduli, residues, inverses, Legendre symbol."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import is_prime


class NotInvertible(ValueError):
    """Raised when inverting a value divisible by the modulus prime."""


class DenominatorNotCoprime(ValueError):
    """Raised when reducing a fraction whose denominator the prime divides."""


@dataclass(frozen=True)
class PrimePowerModulus:
    p: int
    e: int
    modulus: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus base must be prime, got {self.p}")
        if self.e < 1:
            raise ValueError(f"modulus exponent must be >= 1, got {self.e}")
        object.__setattr__(self, "modulus", self.p**self.e)

    def __str__(self):
        return f"{self.p}^{self.e}" if self.e > 1 else str(self.p)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: PrimePowerModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.modulus:
            raise ValueError(
                f"residue {self.value} outside [0, {self.modulus.modulus})"
            )

    def _check_same(self, other: "Residue") -> None:
        if self.modulus != other.modulus:
            raise ValueError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}"
            )

    def __add__(self, other: "Residue") -> "Residue":
        self._check_same(other)
        return Residue((self.value + other.value) % self.modulus.modulus, self.modulus)

    def __sub__(self, other: "Residue") -> "Residue":
        self._check_same(other)
        return Residue((self.value - other.value) % self.modulus.modulus, self.modulus)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check_same(other)
        return Residue((self.value * other.value) % self.modulus.modulus, self.modulus)

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.modulus.modulus, self.modulus)

    def __pow__(self, k: int) -> "Residue":
        if k < 0:
            raise ValueError("negative exponent; invert first")
        return Residue(pow(self.value, k, self.modulus.modulus), self.modulus)

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


def _egcd(a: int, b: int) -> tuple[int, int]:
    """Return (g, x) with a*x congruent to g modulo b, g = gcd(a, b)."""
    x0, x1 = 1, 0
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
    return a, x0


def mod_inverse(a: int, m: PrimePowerModulus) -> Residue:
    """Inverse of a modulo p^e via extended Euclid."""
    if a % m.p == 0:
        raise NotInvertible(f"{a} is divisible by {m.p}, not invertible mod {m}")
    g, x = _egcd(a % m.modulus, m.modulus)
    assert g == 1
    return Residue(x % m.modulus, m)


def reduce_rational(q: Fraction | int, m: PrimePowerModulus) -> Residue:
    """Reduce an exact rational to num * den^-1 modulo p^e."""
    q = Fraction(q)
    if q.denominator % m.p == 0:
        raise DenominatorNotCoprime(
            f"denominator {q.denominator} shares factor {m.p} with modulus {m}"
        )
    inv = mod_inverse(q.denominator, m)
    return Residue(q.numerator * inv.value % m.modulus, m)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p, via Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"Legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def pow_mod(a: int, k: int, m: PrimePowerModulus) -> Residue:
    """a^k modulo p^e for k >= 0 (square-and-multiply)."""
    if k < 0:
        raise ValueError(f"pow_mod needs k >= 0, got {k}")
    return Residue(pow(a % m.modulus, k, m.modulus), m)
