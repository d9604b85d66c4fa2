"""Number-theoretic kernel: symbols, multiplicative functions, discriminants.

Everything here is exact integer / rational arithmetic.  Factorization is
trial division against a sieved prime table (inputs are desk-scale), and all
functions are pure, so concurrent use needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

_SIEVE_BOUND = 10**6


@lru_cache(maxsize=1)
def _prime_table() -> tuple[int, ...]:
    """Primes below 10**6 by a sieve of Eratosthenes."""
    bound = _SIEVE_BOUND
    flags = bytearray([1]) * bound
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(bound) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i in range(bound) if flags[i])


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _prime_table():
        if p * p > n:
            return True
        if n % p == 0:
            return False
    # No factor below 10**6, so n is prime whenever n < 10**12.
    if n < _SIEVE_BOUND * _SIEVE_BOUND:
        return True
    raise ValueError(f"primality test out of supported range: {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {p: exponent}."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in _prime_table():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), defined for all integers a and n.

    Extends the Jacobi symbol by (a|2) = 0, 1, -1 for a even, a = +-1 mod 8,
    a = +-3 mod 8, by (a|-1) = sign(a) with (0|-1) = 1, and by (a|0) = 1 if
    a = +-1 and 0 otherwise.
    """
    if n == 0:
        return 1 if a in (1, -1) else 0
    res = 1
    if n < 0:
        n = -n
        if a < 0:
            res = -res
    # Pull the even part out of n.
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            res = -res
    # Jacobi symbol (a|n) for odd n > 0 by quadratic reciprocity.
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                res = -res
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            res = -res
        a %= n
    return res if n == 1 else 0


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError(f"moebius requires n >= 1, got {n}")
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def index_gamma0(n: int) -> int:
    """Index of the upper-left congruence subgroup of level n in SL2(Z).

    Multiplicative formula n * prod_{p | n} (1 + 1/p).
    """
    if n < 1:
        raise ValueError(f"index_gamma0 requires n >= 1, got {n}")
    out = n
    for p in factorize(n):
        out = out // p * (p + 1)
    return out


def is_discriminant(d: int) -> bool:
    """True when d is 0 or 1 mod 4 (the discriminant condition)."""
    return d % 4 in (0, 1)


@dataclass(frozen=True)
class Discriminant:
    """An integer discriminant; construction validates d = 0, 1 mod 4."""

    value: int

    def __post_init__(self) -> None:
        if not is_discriminant(self.value):
            raise ValueError(f"{self.value} is not 0 or 1 mod 4")

    @property
    def is_disc(self) -> bool:
        return True


@lru_cache(maxsize=None)
def fundamental_decomposition(d: int) -> tuple[int, int]:
    """Write a negative discriminant as d = f**2 * d0 with d0 fundamental.

    d0 is the discriminant of the quadratic field containing sqrt(d) and f
    is the conductor of the corresponding order.
    """
    if d >= 0 or not is_discriminant(d):
        raise ValueError(f"expected a negative discriminant, got {d}")
    # Squarefree part m (negative), largest square s**2 dividing d.
    m = -1
    s = 1
    for p, e in factorize(-d).items():
        if e % 2:
            m *= p
        s *= p ** (e // 2)
    if m % 4 == 1:  # m < 0: residue 1 mod 4
        d0 = m
        f = s
    else:
        d0 = 4 * m
        f = s // 2
        if f * f * d0 != d:
            raise ValueError(f"{d} is not a discriminant")  # unreachable
    assert f >= 1 and f * f * d0 == d
    return d0, f


def is_fundamental(d: int) -> bool:
    """True when the negative discriminant d has conductor 1."""
    return fundamental_decomposition(d)[1] == 1


def d_prime(d: int, n: int) -> int:
    """Strip every factor of the prime n from the conductor of d.

    Returns (f')**2 * d0 where f' is the largest factor of the conductor
    coprime to n.
    """
    if not is_prime(n):
        raise ValueError(f"expected a prime level, got {n}")
    d0, f = fundamental_decomposition(d)
    while f % n == 0:
        f //= n
    return f * f * d0


def sqrt_count(a: int, m: int) -> int:
    """Number of x mod 2m with x**2 = a mod 4m."""
    if m < 1:
        raise ValueError(f"sqrt_count requires m >= 1, got {m}")
    fourm = 4 * m
    return sum(1 for x in range(2 * m) if (x * x - a) % fourm == 0)


@dataclass(frozen=True)
class LevelConstants:
    """The four numerator/denominator constants attached to a prime level.

    nHur/dHur is (N+1)/6 in lowest terms and nCoh/dCoh is (N-1)/12 in
    lowest terms.  These drive every integrality statement at level N.
    """

    N: int
    iota: int
    dHur: int
    nHur: int
    dCoh: int
    nCoh: int

    def __post_init__(self) -> None:
        assert gcd(self.dHur, self.nHur) == 1
        assert gcd(self.dCoh, self.nCoh) == 1
        assert self.nHur * 6 == self.dHur * (self.N + 1)
        assert self.nCoh * 12 == self.dCoh * (self.N - 1)
        assert gcd(self.N, self.nCoh) == 1


@lru_cache(maxsize=None)
def level_constants(n: int) -> LevelConstants:
    if not is_prime(n):
        raise ValueError(f"level constants are defined for primes, got {n}")
    hur = Fraction(n + 1, 6)
    coh = Fraction(n - 1, 12)
    return LevelConstants(
        N=n,
        iota=index_gamma0(n),
        dHur=hur.denominator,
        nHur=hur.numerator,
        dCoh=coh.denominator,
        nCoh=coh.numerator,
    )


def primes_up_to(bound: int) -> list[int]:
    """All primes p <= bound (bound below the sieve limit)."""
    if bound >= _SIEVE_BOUND:
        raise ValueError(f"prime table stops below {_SIEVE_BOUND}")
    table = _prime_table()
    return [p for p in table if p <= bound]
