"""Exact integer arithmetic: deterministic primality and integer roots.

Float cube roots are never trusted for bound decisions; comparisons of the
form m <= c * (n*k)**(1/3) are decided exactly via m**3 <= c**3 * n * k.
"""

from __future__ import annotations

# Witness set deterministic for every n < 3,317,044,064,679,887,385,961,981
# (covers all 64-bit integers).
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_WITNESS_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n below the witness limit."""
    if n >= _WITNESS_LIMIT:
        raise ValueError(f"n={n} exceeds the deterministic witness range")
    if n < 2:
        return False
    for p in _WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime_above(t: int) -> int:
    """Smallest prime strictly greater than t."""
    n = max(t + 1, 2)
    while not is_prime(n):
        n += 1
    return n


def floor_root(n: int, r: int) -> int:
    """Largest x with x**r <= n, computed in integer arithmetic."""
    if n < 0 or r < 1:
        raise ValueError("floor_root requires n >= 0 and r >= 1")
    if n < 2 or r == 1:
        return n
    # Float seed, then correct; exact for any size of n.
    x = int(round(n ** (1.0 / r)))
    while x > 0 and x**r > n:
        x -= 1
    while (x + 1) ** r <= n:
        x += 1
    return x


def ceil_root(n: int, r: int) -> int:
    """Smallest x with x**r >= n."""
    x = floor_root(n, r)
    return x if x**r == n else x + 1


def icbrt(n: int) -> int:
    return floor_root(n, 3)


def ceil_cbrt(n: int) -> int:
    return ceil_root(n, 3)
