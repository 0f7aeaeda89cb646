"""Elementary number theory helpers: Kronecker symbol, primality, divisors.

Everything here is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

from math import isqrt

__all__ = [
    "jacobi_symbol",
    "kronecker_symbol",
    "is_prime",
    "divisors",
    "floor_log_log",
]


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("jacobi_symbol needs odd positive n")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker_symbol(a: int, n: int) -> int:
    """Kronecker symbol (a/n), the extension of Jacobi to all integers n.

    Completely multiplicative in both arguments; (a/2) is 0 for even a and
    +-1 according to a mod 8; (a/0) is 1 only for a = +-1.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out twos from n
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        twos = 0
        while n % 2 == 0:
            n //= 2
            twos += 1
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    return result * jacobi_symbol(a, n)


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n >= 1."""
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


# floor(e^(e^k)) for k = 1..6, precomputed exactly; e^(e^k) is irrational,
# so for integer X:  log log X >= k  <=>  X > _EE_FLOOR[k-1].
_EE_FLOOR = (
    15,
    1618,
    528491311,
    514843556263457213182265,
    28511235679461510605581038657982805983853648817939444953417128836,
    int(
        "16102705667793720748871813987210203836607578067806596499585286935888"
        "65579395883667161456374602792455660140619755977532903150656737657981"
        "9810051020205791261223621323403558912000"
    ),
)


def floor_log_log(x: int) -> int | None:
    """floor(log log x) with natural logs, exactly, for integer x >= 3.

    Returns None for x < 3 (the value would be negative or undefined).
    """
    if x < 3:
        return None
    if x > _EE_FLOOR[-1]:
        raise ValueError("floor_log_log table exhausted")
    k = 0
    for threshold in _EE_FLOOR:
        if x > threshold:
            k += 1
        else:
            break
    return k
