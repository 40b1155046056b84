"""Cyclotomic evaluation, Zsigmondy primitive parts and prime-field helpers.

All arithmetic here is exact arbitrary-precision integer arithmetic.  The
factoring routines are sized for the toolkit's inputs (values up to roughly
2**80); they are not general-purpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


class DomainError(ValueError):
    """Raised when an argument is outside an operation's stated domain."""


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise DomainError(f"divisors: need n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; valid for every n below 3.3 * 10**24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # not reachable for inputs in scope


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: multiplicity}."""
    if n < 1:
        raise DomainError(f"factorize: need n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return dict(sorted(out.items()))


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    ((p, k),) = fac.items()
    return p, k


@lru_cache(maxsize=None)
def cyclotomic_poly_eval(n: int, q: int) -> int:
    """Value of the n-th cyclotomic polynomial at q.

    Computed through the divisor recurrence q**n - 1 = prod_{d|n} Phi_d(q),
    so every intermediate value is an exact integer.
    """
    if n < 1:
        raise DomainError(f"cyclotomic_poly_eval: need n >= 1, got {n}")
    if q < 2:
        raise DomainError(f"cyclotomic_poly_eval: need q >= 2, got {q}")
    value = q**n - 1
    for d in divisors(n):
        if d < n:
            phi_d = cyclotomic_poly_eval(d, q)
            assert value % phi_d == 0
            value //= phi_d
    return value


@dataclass(frozen=True)
class ZsigmondyResult:
    """The primitive part of Phi_n(q) together with its prime support.

    primitive_part is the largest divisor of phi_value coprime to every
    q**k - 1 with 1 <= k < n; primitive_primes are exactly the primes
    dividing q**n - 1 but no earlier q**k - 1.
    """

    q: int
    n: int
    phi_value: int
    primitive_part: int
    primitive_primes: frozenset[int]


def _check_prime_power(q: int) -> tuple[int, int]:
    pk = is_prime_power(q)
    if pk is None:
        raise DomainError(f"q must be a prime power >= 2, got {q}")
    return pk


def zsigmondy_part(q: int, n: int) -> ZsigmondyResult:
    """Primitive part Phi*_n(q) of Phi_n(q) and its primitive primes."""
    _check_prime_power(q)
    if n < 1:
        raise DomainError(f"zsigmondy_part: need n >= 1, got {n}")
    phi = cyclotomic_poly_eval(n, q)
    part = phi
    for k in range(1, n):
        g = gcd(part, q**k - 1)
        while g > 1:
            part //= g
            g = gcd(part, q**k - 1)
    primes = frozenset(factorize(part)) if part > 1 else frozenset()
    return ZsigmondyResult(q=q, n=n, phi_value=phi, primitive_part=part, primitive_primes=primes)


def primitive_prime_divisors(q: int, n: int) -> set[int]:
    """Primes r with r | q**n - 1 and r not dividing q**k - 1 for k < n.

    Any such prime divides Phi_n(q), so only the prime factors of Phi_n(q)
    need to be tested; r is primitive exactly when the multiplicative order
    of q modulo r equals n.
    """
    _check_prime_power(q)
    if n < 1:
        raise DomainError(f"primitive_prime_divisors: need n >= 1, got {n}")
    out = set()
    for r in factorize(cyclotomic_poly_eval(n, q)):
        if pow(q, n, r) != 1:
            continue
        if all(pow(q, n // ell, r) != 1 for ell in factorize(n)):
            out.add(r)
    return out
