"""Closed-form results: split classification and independence numbers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Tuple

from .groups import GroupSpec, OrderProfile, p_set_size
from .numth import factorize, is_prime, semiprime_divisors, split_two_power

COMPLETE = "CompleteNoComposite"
PRIME_POWER = "PrimePowerTail"
SEMIPRIME = "SemiprimeTail"
NOT_SPLIT = "NotSplit"

EXACT = "Exact"
LOWER_BOUND = "LowerBound"
UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class SplitClassification:
    verdict: str
    primes: Tuple[int, ...] = ()
    witness: Tuple[int, ...] = ()

    @property
    def is_split(self) -> bool:
        return self.verdict != NOT_SPLIT

    def __str__(self) -> str:
        if self.verdict == NOT_SPLIT:
            return f"{NOT_SPLIT}{self.witness}"
        if self.primes:
            return f"{self.verdict}({', '.join(map(str, self.primes))})"
        return self.verdict


@dataclass(frozen=True)
class FormulaResult:
    value: Optional[int]
    kind: str
    provenance: str

    def __post_init__(self) -> None:
        if (self.kind == UNSUPPORTED) != (self.value is None):
            raise ValueError("Unsupported results carry no value; others must")


def _prime_power_base(d: int) -> Optional[int]:
    fac = factorize(d)
    return fac.primes[0] if fac.omega == 1 else None


def classify_split(profile: OrderProfile) -> SplitClassification:
    composites = profile.composite_orders
    if not composites:
        return SplitClassification(COMPLETE)
    bases = {_prime_power_base(d) for d in composites}
    if None not in bases and len(bases) == 1:
        return SplitClassification(PRIME_POWER, (bases.pop(),))
    if len(composites) == 1:
        fac = factorize(composites[0])
        if fac.omega == 2 and fac.squarefree:
            return SplitClassification(SEMIPRIME, tuple(fac.primes))
        return SplitClassification(NOT_SPLIT, witness=(composites[0],))
    # smallest pair that is not two powers of one prime
    for d, e in combinations(composites, 2):
        b = _prime_power_base(d)
        if b is None or b != _prime_power_base(e):
            return SplitClassification(NOT_SPLIT, witness=(d, e))
    raise AssertionError("unreachable: all composites share one prime base")


def alpha_if_split(profile: OrderProfile) -> FormulaResult:
    """alpha is 1 for a complete graph, otherwise |G| - |P(G)|."""
    cls = classify_split(profile)
    if not cls.is_split:
        raise ValueError(f"profile is not split: {cls}")
    if cls.verdict == COMPLETE:
        return FormulaResult(1, EXACT, "split: complete graph")
    return FormulaResult(profile.group_order - p_set_size(profile), EXACT, "split: |G| - |P(G)|")


def i_d_size_cyclic(n: int, d: int) -> int:
    """Number of elements of Z_n whose order is a multiple of the semiprime d."""
    if d not in semiprime_divisors(n):
        raise ValueError(f"{d} is not a semiprime divisor of {n}")
    pairs = factorize(n).pairs
    dfac = factorize(d)
    if dfac.omega == 1:
        p = dfac.primes[0]
        k = dict(pairs)[p]
        rest = 1
        for r, kr in pairs:
            if r != p:
                rest *= r**kr
        return (p**k - p) * rest
    p, q = dfac.primes
    kp, kq = dict(pairs)[p], dict(pairs)[q]
    rest = 1
    for r, kr in pairs:
        if r not in (p, q):
            rest *= r**kr
    return (p**kp - 1) * (q**kq - 1) * rest


def cyclic_lower_bound(n: int) -> FormulaResult:
    if n == 1 or is_prime(n):
        raise ValueError(f"cyclic lower bound needs composite n, got {n}")
    fac = factorize(n)
    value = max(i_d_size_cyclic(n, d) for d in semiprime_divisors(n))
    if fac.squarefree:
        ps = fac.primes
        tail = (ps[-2] - 1) * (ps[-1] - 1)
        for p in ps[:-2]:
            tail *= p
        assert tail == value, "squarefree shortcut disagrees with the general bound"
    return FormulaResult(value, LOWER_BOUND, "max |I_d(Z_n)| over semiprime d")


def _cyclic_exact(n: int) -> FormulaResult:
    fac = factorize(n)
    ps, ks = fac.primes, fac.exponents
    if n == 1 or is_prime(n):
        return FormulaResult(1, EXACT, "complete graph: no composite orders")
    if fac.omega == 1:
        p = ps[0]
        return FormulaResult(n - p, EXACT, "Z_{p^m}: n - p")
    if fac.omega == 2:
        (p, a), (q, b) = fac.pairs
        if a == 1 and b == 1:
            return FormulaResult((p - 1) * (q - 1), EXACT, "Z_{pq}: (p-1)(q-1)")
        if a == 1 or b == 1:
            if a != 1:  # name the exponent-one prime p
                (p, a), (q, b) = (q, b), (p, a)
            return FormulaResult(n - min(p * q, q**b + p - 1), EXACT, "Z_{pq^b}: n - min{pq, q^b+p-1}")
        return FormulaResult(
            n - min(p**a * q, p * q**b, p**a + q**b - 1),
            EXACT,
            "Z_{p^a q^b}: n - min{p^a q, p q^b, p^a+q^b-1}",
        )
    if fac.omega == 3 and fac.squarefree:
        p1, p2, p3 = ps
        return FormulaResult(p1 * (p2 - 1) * (p3 - 1), EXACT, "Z_{p1p2p3}: p1(p2-1)(p3-1)")
    return FormulaResult(None, UNSUPPORTED, f"no closed form for Z_{n} (omega={fac.omega}, exponents={ks})")


def alpha_exact_formula(spec: GroupSpec) -> FormulaResult:
    fam, n = spec.family, spec.n
    if fam == "cyclic":
        return _cyclic_exact(n)
    if fam == "dihedral":
        inner = _cyclic_exact(n)
        return FormulaResult(inner.value, inner.kind, f"D_2n -> Z_n; {inner.provenance}")
    if fam == "dicyclic":
        if n % 2:
            return FormulaResult(2 * n, EXACT, "Q_4n, n odd: 2n")
        _, m = split_two_power(n)
        return FormulaResult(4 * n - 2 * m, EXACT, "Q_4n, n = 2^k m even: 4n - 2m")
    if fam == "semidihedral":
        _, m = split_two_power(n)
        return FormulaResult(6 * n - 2 * m, EXACT, "SD_8n, n = 2^k m: 6n - 2m")
    return FormulaResult(None, UNSUPPORTED, "explicit order lists have no closed form")
