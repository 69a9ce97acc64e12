"""Integer arithmetic used by the prime-coprime graph formulas.

Everything here is deterministic trial division; inputs are desk scale
(n <= 2**32), so there is no need for anything cleverer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple

MAX_N = 2**32


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization ``n = p_1^k_1 ... p_t^k_t``.

    ``pairs`` is sorted by prime; ``n = 1`` has no pairs.
    """

    n: int
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def primes(self) -> List[int]:
        return [p for p, _ in self.pairs]

    @property
    def exponents(self) -> List[int]:
        return [k for _, k in self.pairs]

    @property
    def omega(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.pairs)

    @property
    def big_omega(self) -> int:
        """Number of prime divisors counted with multiplicity."""
        return sum(k for _, k in self.pairs)

    @property
    def squarefree(self) -> bool:
        return all(k == 1 for _, k in self.pairs)

    def value(self) -> int:
        out = 1
        for p, k in self.pairs:
            out *= p**k
        return out


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > MAX_N:
        raise ValueError(f"{n} exceeds the supported bound 2**32")


def factorize(n: int) -> Factorization:
    _check_positive(n)
    pairs = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            pairs.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        pairs.append((m, 1))
    return Factorization(n, tuple(pairs))


def euler_phi(n: int) -> int:
    """Euler's totient via the prime-power product formula."""
    result = 1
    for p, k in factorize(n).pairs:
        result *= p**k - p ** (k - 1)
    return result


def divisors(n: int) -> List[int]:
    """All positive divisors of ``n`` in ascending order."""
    divs = [1]
    for p, k in factorize(n).pairs:
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def is_prime(n: int) -> bool:
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


def is_composite(n: int) -> bool:
    return n > 1 and not is_prime(n)


def is_semiprime(n: int) -> bool:
    """True when n = p*q for primes p, q (p = q allowed)."""
    if n < 4:
        return False
    return factorize(n).big_omega == 2


def semiprime_divisors(n: int) -> List[int]:
    """The set SP(n), ascending. Empty for 1, primes, etc."""
    _check_positive(n)
    fac = factorize(n)
    out = set()
    for i, (p, k) in enumerate(fac.pairs):
        if k >= 2:
            out.add(p * p)
        for q, _ in fac.pairs[i + 1 :]:
            out.add(p * q)
    return sorted(out)


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def split_two_power(n: int) -> Tuple[int, int]:
    """Return ``(k, m)`` with ``n = 2**k * m`` and ``m`` odd."""
    _check_positive(n)
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k, n
