"""Class numbers of binary quadratic forms and Hurwitz class numbers.

All values are exact rationals; 24 * H(D) is always an integer.
"""

import threading
from fractions import Fraction
from typing import NamedTuple

from .arith import DomainError, kronecker


class DiscriminantDecomposition(NamedTuple):
    d_fund: int      # negative fundamental discriminant
    conductor: int   # f with d_fund * f^2 = -D


def _check_discriminant(d):
    if d >= 0 or d % 4 not in (0, 1):
        raise DomainError(f"{d} is not a negative discriminant")


def class_number(d):
    """Number of reduced primitive binary quadratic forms of discriminant d.

    Reduced: |b| <= a <= c with b >= 0 when |b| = a or a = c;
    primitive: gcd(a, b, c) = 1; b^2 - 4ac = d.
    """
    _check_discriminant(d)
    from math import gcd, isqrt

    count = 0
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a, a + 1):
            if (b - d) % 2 != 0:
                continue
            num = b * b - d
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (b == -a or a == c):
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                count += 1
        a += 1
    return count


def unit_factor(d):
    """Half the number of units of the order of discriminant d."""
    _check_discriminant(d)
    if d == -3:
        return 3
    if d == -4:
        return 2
    return 1


def is_fundamental(d):
    """True for negative fundamental discriminants."""
    if d >= 0:
        return False
    if d % 4 == 1:
        return _squarefree(-d)
    if d % 4 == 0:
        q = d // 4
        return q % 4 in (2, 3) and _squarefree(-q)
    return False


def _squarefree(n):
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def decompose(D):
    """Unique (d_fund, f) with d_fund * f^2 = -D, d_fund fundamental."""
    if D <= 0 or (-D) % 4 not in (0, 1):
        raise DomainError(f"-{D} is not a negative discriminant")
    # squarefree part: D = s * t^2
    s, t = D, 1
    k = 2
    while k * k <= s:
        while s % (k * k) == 0:
            s //= k * k
            t *= k
        k += 1
    if (-s) % 4 == 1:
        return DiscriminantDecomposition(-s, t)
    assert t % 2 == 0
    return DiscriminantDecomposition(-4 * s, t // 2)


_hurwitz_cache = {}
_hurwitz_lock = threading.Lock()


def hurwitz(D):
    """Hurwitz class number H(D) as an exact Fraction.

    H(0) = -1/12; for D > 0 the weighted count sum h(d)/u(d) over all
    d * f^2 = -D with d a negative discriminant (zero for D = 1, 2 mod 4).
    """
    if D < 0:
        raise DomainError(f"hurwitz requires D >= 0, got {D}")
    if D == 0:
        return Fraction(-1, 12)
    with _hurwitz_lock:
        cached = _hurwitz_cache.get(D)
    if cached is not None:
        return cached
    total = Fraction(0)
    if D % 4 in (0, 3):
        f = 1
        while f * f <= D:
            if D % (f * f) == 0:
                d = -(D // (f * f))
                if d % 4 in (0, 1):
                    total += Fraction(class_number(d), unit_factor(d))
            f += 1
    with _hurwitz_lock:
        _hurwitz_cache[D] = total
    return total


def hurwitz_modified(D, p):
    """Modified Hurwitz class number H_p(D).

    Zero if p splits in the order of discriminant -D, H(D) if inert,
    H(D)/2 if ramified (p not dividing the conductor), and H(D/p^2)
    when p divides the conductor.  H_p(0) = (p-1)/24.
    """
    if p < 5 or not _is_prime_cached(p):
        raise DomainError(f"hurwitz_modified requires a prime p >= 5, got {p}")
    if D < 0:
        raise DomainError(f"hurwitz_modified requires D >= 0, got {D}")
    if D == 0:
        return Fraction(p - 1, 24)
    if D % 4 in (1, 2):
        return Fraction(0)  # no order of discriminant -D; H(D) = 0 too
    d_fund, f = decompose(D)
    if f % p == 0:
        return hurwitz(D // (p * p))
    sym = kronecker(d_fund, p)
    if sym == 1:
        return Fraction(0)
    if sym == -1:
        return hurwitz(D)
    return hurwitz(D) / 2


def _is_prime_cached(p, _cache={}):
    r = _cache.get(p)
    if r is None:
        from .arith import is_prime

        r = _cache[p] = is_prime(p)
    return r
