"""Exact-rational verification of the combinatorial identities.

All checks here evaluate closed forms pointwise with exact rationals and
compare; nothing is derived symbolically, so each identity is a genuine
cross-check of independent computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial, rational_binomial


@dataclass(frozen=True)
class WZPoint:
    k: int
    j: int
    f_value: Fraction
    g_value: Fraction


def wz_f(k: int, j: int) -> Fraction:
    """First member of the telescoping pair.

    Weight 3k+2j+1: this is what makes the pair relation close and reduces
    the j = 0 slice to (3k+1) C(2k,k)^3 / 16^k.
    """
    return (
        Fraction(3 * k + 2 * j + 1, 16**k)
        * binomial(2 * k, k) ** 2
        * binomial(2 * k + 2 * j, k + j)
        * binomial(2 * k + 2 * j, 2 * j)
        / binomial(2 * j, j)
    )


def wz_g(k: int, j: int) -> Fraction:
    """Second member of the telescoping pair; zero for k = 0."""
    if k == 0:
        return Fraction(0)
    return (
        Fraction(-2 * (2 * k - 1), 16 ** (k - 1))
        * binomial(2 * k - 2, k - 1) ** 2
        * binomial(2 * k + 2 * j - 2, k + j - 1)
        * binomial(2 * k + 2 * j - 2, 2 * j)
        / binomial(2 * j, j)
    )


def wz_point(k: int, j: int) -> WZPoint:
    return WZPoint(k, j, wz_f(k, j), wz_g(k, j))


def wz_pair_relation(k: int, j: int) -> Fraction:
    """Defect F(k,j-1) - F(k,j) - G(k+1,j) + G(k,j); zero when the pair telescopes."""
    if j < 1:
        raise ValueError(f"pair relation needs j >= 1, got {j}")
    return wz_f(k, j - 1) - wz_f(k, j) - wz_g(k + 1, j) + wz_g(k, j)


def telescoped_identity_defect(n: int) -> Fraction:
    """Defect of the doubly-telescoped sum identity

    sum_{k=0}^{N} F(k,0) - sum_{k=0}^{N} F(k,N) - sum_{j=1}^{N} G(N+1,j),

    which must vanish for every N >= 1.
    """
    if n < 1:
        raise ValueError(f"telescoping needs N >= 1, got {n}")
    top = sum(wz_f(k, 0) for k in range(n + 1))
    bottom = sum(wz_f(k, n) for k in range(n + 1))
    boundary = sum(wz_g(n + 1, j) for j in range(1, n + 1))
    return top - bottom - boundary


def lemma25_sides(n: int, x: Fraction | int) -> tuple[Fraction, Fraction]:
    """Both sides of the transformation identity

    sum_k C(n,k)^2 C(x+k, 2n+1)
      = (1 / ((4n+2) C(2n,n))) sum_k (2x-3k) C(x,k)^2 C(2k,k),

    evaluated exactly (non-integer x goes through rational binomials).
    """
    if n < 0:
        raise ValueError(f"needs n >= 0, got {n}")
    x = Fraction(x)
    lhs = sum(
        binomial(n, k) ** 2 * rational_binomial(x + k, 2 * n + 1)
        for k in range(n + 1)
    )
    rhs = sum(
        (2 * x - 3 * k) * rational_binomial(x, k) ** 2 * binomial(2 * k, k)
        for k in range(n + 1)
    ) / ((4 * n + 2) * binomial(2 * n, n))
    return Fraction(lhs), Fraction(rhs)


def staver_sides(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of Staver's identity

    sum_{k=1}^{n} C(2k,k)/k
      = ((n+1)/3) C(2n+1,n) sum_{k=1}^{n} 1/(k^2 C(n,k)^2).
    """
    if n < 1:
        raise ValueError(f"needs n >= 1, got {n}")
    lhs = sum(Fraction(binomial(2 * k, k), k) for k in range(1, n + 1))
    rhs = (
        Fraction(n + 1, 3)
        * binomial(2 * n + 1, n)
        * sum(Fraction(1, k * k * binomial(n, k) ** 2) for k in range(1, n + 1))
    )
    return lhs, rhs


def floor_superadditivity(a: int, b: int, m: int) -> tuple[bool, bool]:
    """Truth of the two floor inequalities at x = a/m, y = b/m:

    floor(2x) + floor(2y) >= floor(x) + floor(y) + floor(x+y)
    floor(x+y) >= floor(x) + floor(y)
    """
    if m < 2:
        raise ValueError(f"needs m >= 2, got {m}")
    if a < 0 or b < 0:
        raise ValueError("needs a, b >= 0")
    fa, fb, fab = a // m, b // m, (a + b) // m
    first = (2 * a) // m + (2 * b) // m >= fa + fb + fab
    second = fab >= fa + fb
    return first, second
