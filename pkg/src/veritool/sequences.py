"""Euler numbers, harmonic numbers, and prime generation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import _require_prime
from .residue import PrimePowerModulus, Residue


@dataclass(frozen=True)
class EulerTable:
    """Exact Euler numbers E_0, E_2, ..., E_max_index (odd indices are 0)."""

    max_index: int
    values: tuple[int, ...]

    def entry(self, index: int) -> int:
        if index % 2:
            return 0
        if not 0 <= index <= self.max_index:
            raise IndexError(f"index {index} outside table (max {self.max_index})")
        return self.values[index // 2]


def euler_numbers(max_index: int) -> EulerTable:
    """Build the exact Euler table from E_0 = 1 and the recurrence

    sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0, giving E_2 = -1, E_4 = 5, E_6 = -61, ...
    """
    if max_index < 0 or max_index % 2:
        raise ValueError(f"max_index must be even and >= 0, got {max_index}")
    values = [1]
    for n in range(1, max_index // 2 + 1):
        values.append(-sum(math.comb(2 * n, 2 * j) * values[j] for j in range(n)))
    return EulerTable(max_index, tuple(values))


@lru_cache(maxsize=None)
def _euler_mod_p_value(index: int, p: int) -> int:
    if index % 2:
        return 0
    half = index // 2
    # Factorials mod p cover binomial rows directly while 2n < p; larger
    # rows go digit by digit (Lucas), so tables never exceed length p.
    top = index if index < p else p - 1
    fact = [1] * (top + 1)
    for i in range(1, top + 1):
        fact[i] = fact[i - 1] * i % p
    inv_fact = [1] * (top + 1)
    inv_fact[top] = pow(fact[top], p - 2, p)
    for i in range(top, 0, -1):
        inv_fact[i - 1] = inv_fact[i] * i % p

    def binom_mod(n: int, k: int) -> int:
        if n < p:
            return fact[n] * inv_fact[k] % p * inv_fact[n - k] % p
        r = 1
        while n or k:
            nd, kd = n % p, k % p
            if kd > nd:
                return 0
            r = r * fact[nd] % p * inv_fact[kd] % p * inv_fact[nd - kd] % p
            n //= p
            k //= p
        return r

    table = [0] * (half + 1)
    table[0] = 1
    for n in range(1, half + 1):
        acc = 0
        for j in range(n):
            acc += binom_mod(2 * n, 2 * j) * table[j]
        table[n] = -acc % p
    return table[half]


def euler_mod_p(index: int, p: int) -> Residue:
    """E_index mod p, running the defining recurrence entirely mod p."""
    _require_prime(p)
    if p <= 3:
        raise ValueError(f"euler_mod_p needs p > 3, got {p}")
    if index < 0:
        raise ValueError(f"index must be >= 0, got {index}")
    return Residue(_euler_mod_p_value(index, p), PrimePowerModulus(p, 1))


_harmonic_cache: list[Fraction] = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """H_n = sum_{k=1}^{n} 1/k as an exact rational; H_0 = 0."""
    if n < 0:
        raise ValueError(f"harmonic needs n >= 0, got {n}")
    cache = _harmonic_cache
    while len(cache) <= n:
        cache.append(cache[-1] + Fraction(1, len(cache)))
    return cache[n]


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending (sieve of Eratosthenes)."""
    if lo > hi:
        raise ValueError(f"empty range: [{lo}, {hi}]")
    if hi < 2:
        return []
    flags = bytearray(b"\x01") * (hi + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(hi) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(max(lo, 2), hi + 1) if flags[i]]
