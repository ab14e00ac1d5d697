"""Integer helpers: primality, factorization, prime-power tests."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    k = 2
    while k * k <= n:
        while n % k == 0:
            out[k] = out.get(k, 0) + 1
            n //= k
        k += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def strip_factor(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def is_prime_power_of(n: int, p: int) -> bool:
    """True iff n = p^k for some k >= 0."""
    return n >= 1 and strip_factor(n, p) == 1


def prime_power_base(n: int) -> int | None:
    """The prime p with n = p^k (k >= 1), else None."""
    ps = prime_factors(n)
    return ps[0] if len(ps) == 1 else None
