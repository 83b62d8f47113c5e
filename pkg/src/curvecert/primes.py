"""Tiny integer helpers: primality by trial division, sieves, prime-power splitting.

Everything here runs on desk-scale inputs (bounds of a few thousand), so the
naive algorithms are the right tool.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def primes_below(bound: int) -> list[int]:
    """All primes p < bound, ascending (simple sieve)."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(bound) if sieve[i]]


def prime_power_split(n: int) -> tuple[int, int] | None:
    """Return (p, k) with n = p**k and p prime, or None if n is not a prime power."""
    if n < 2:
        return None
    p = n
    for q in primes_below(int(n ** 0.5) + 2):
        if n % q == 0:
            p = q
            break
    k = 0
    m = n
    while m % p == 0:
        m //= p
        k += 1
    if m != 1:
        return None
    return (p, k)


def prime_powers_between(lo: int, hi: int) -> list[int]:
    """All prime powers q with lo <= q <= hi, ascending."""
    return [n for n in range(max(lo, 2), hi + 1) if prime_power_split(n) is not None]
