"""Integer-only decisions for quantities involving √2 and √n."""

from __future__ import annotations

from math import isqrt


def sign_with_root(p: int, q: int, r: int) -> int:
    """Sign of ``p + q·√r`` for integers ``p``, ``q`` and ``r >= 0``."""
    if r < 0:
        raise ValueError("radicand must be non-negative")
    if q == 0 or r == 0:
        return (p > 0) - (p < 0)
    sq = 1 if q > 0 else -1
    if p == 0 or (p > 0) == (q > 0):
        return sq
    # opposite signs: compare p² with q²·r
    diff = p * p - q * q * r
    if diff == 0:
        return 0
    return (1 if p > 0 else -1) * (1 if diff > 0 else -1)


def ceil_n_over_sqrt2(n: int) -> int:
    """Least ``k >= 0`` with ``2k² >= n²``, i.e. ⌈n/√2⌉."""
    if n < 0:
        raise ValueError("n must be non-negative")
    k = isqrt(n * n // 2)
    while 2 * k * k < n * n:
        k += 1
    return k


def floor_one_minus_half_sqrt2(n: int) -> int:
    """⌊(1 - √2/2)·n⌋ for ``n >= 0``."""
    return n - ceil_n_over_sqrt2(n)


def threshold_exceeded(delta1: int, n: int) -> bool:
    """Exact test of ``delta1 > (3 - 2√2)/4 · n² - n``."""
    # rearranged: 2√2·n² > 3n² - 4n - 4·delta1
    rhs = 3 * n * n - 4 * n - 4 * delta1
    if rhs <= 0:
        return True
    return 8 * n**4 > rhs * rhs


def _at_least_eq1(k: int, n: int) -> bool:
    # k >= n - n/√2 + √n  <=>  (2k - 2n) + n√2 >= 2√n
    p = 2 * k - 2 * n
    if sign_with_root(p, n, 2) <= 0:
        return False
    # both sides positive: square them
    return sign_with_root(p * p + 2 * n * n - 4 * n, 2 * n * p, 2) >= 0


def eq1_lower_bound(n: int) -> int:
    """⌈(1 - √2/2)·n + √n⌉ by exact comparison."""
    if n < 1:
        raise ValueError("n must be positive")
    k = max(0, int((1 - 2**-0.5) * n + n**0.5) - 2)
    while not _at_least_eq1(k, n):
        k += 1
    return k
