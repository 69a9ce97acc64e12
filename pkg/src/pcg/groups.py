"""Finite groups described by their element orders.

The prime-coprime graph only looks at element orders, so a group here is
either one of four named families (cyclic, dihedral, dicyclic,
semidihedral) or an explicit list of element orders.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from .numth import divisors, euler_phi, factorize, is_prime, semiprime_divisors

FAMILIES = ("cyclic", "dihedral", "dicyclic", "semidihedral", "explicit")
DEFAULT_ENUM_BOUND = 5000


class GroupSpecError(ValueError):
    pass


class LagrangeWarning(UserWarning):
    """An explicit order does not divide the group order."""


@dataclass(frozen=True)
class GroupSpec:
    family: str
    n: Optional[int] = None
    orders: Optional[Tuple[int, ...]] = None
    check_lagrange: bool = field(default=True, compare=False)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GroupSpecError(f"unknown family {self.family!r}")
        if self.family == "explicit":
            self._validate_explicit()
            return
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise GroupSpecError(f"{self.family} needs an integer parameter")
        low = 1 if self.family == "cyclic" else 3
        if self.n < low:
            raise GroupSpecError(f"{self.family} requires n >= {low}, got {self.n}")

    def _validate_explicit(self) -> None:
        if not self.orders:
            raise GroupSpecError("explicit group needs a nonempty order list")
        object.__setattr__(self, "orders", tuple(self.orders))
        if any((not isinstance(o, int)) or o < 1 for o in self.orders):
            raise GroupSpecError("element orders must be positive integers")
        if self.orders[0] != 1:
            raise GroupSpecError("first element order must be 1 (the identity)")
        if self.orders.count(1) != 1:
            raise GroupSpecError("exactly one element may have order 1")
        size = len(self.orders)
        bad = sorted({o for o in self.orders if size % o})
        if bad and self.check_lagrange:
            warnings.warn(
                f"orders {bad} do not divide the group order {size}",
                LagrangeWarning,
                stacklevel=3,
            )

    @property
    def group_order(self) -> int:
        return {
            "cyclic": lambda: self.n,
            "dihedral": lambda: 2 * self.n,
            "dicyclic": lambda: 4 * self.n,
            "semidihedral": lambda: 8 * self.n,
            "explicit": lambda: len(self.orders),
        }[self.family]()

    @property
    def name(self) -> str:
        if self.family == "cyclic":
            return f"Z_{self.n}"
        if self.family == "dihedral":
            return f"D_{2 * self.n}"
        if self.family == "dicyclic":
            return f"Q_{4 * self.n}"
        if self.family == "semidihedral":
            return f"SD_{8 * self.n}"
        return f"explicit({len(self.orders)})"


def cyclic(n: int) -> GroupSpec:
    return GroupSpec("cyclic", n)


def dihedral(n: int) -> GroupSpec:
    return GroupSpec("dihedral", n)


def dicyclic(n: int) -> GroupSpec:
    return GroupSpec("dicyclic", n)


def semidihedral(n: int) -> GroupSpec:
    return GroupSpec("semidihedral", n)


def explicit(orders, check_lagrange: bool = True) -> GroupSpec:
    return GroupSpec("explicit", orders=tuple(orders), check_lagrange=check_lagrange)


def load_orders_file(path: Union[str, Path], check_lagrange: bool = True) -> GroupSpec:
    """Read one element order per line; ``#`` starts a comment."""
    orders = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            orders.append(int(line))
        except ValueError:
            raise GroupSpecError(f"{path}:{lineno}: not an integer: {line!r}") from None
    return explicit(orders, check_lagrange=check_lagrange)


@dataclass(frozen=True)
class OrderProfile:
    """How many elements of each order a group has."""

    group_order: int
    counts: Dict[int, int]

    def __post_init__(self) -> None:
        if sum(self.counts.values()) != self.group_order:
            raise GroupSpecError("order counts do not sum to the group order")
        if self.counts.get(1) != 1:
            raise GroupSpecError("a group has exactly one element of order 1")
        if any(c < 1 for c in self.counts.values()):
            raise GroupSpecError("counts must be positive")

    def __getitem__(self, d: int) -> int:
        return self.counts.get(d, 0)

    @property
    def orders(self) -> List[int]:
        return sorted(self.counts)

    @property
    def composite_orders(self) -> List[int]:
        return [d for d in self.orders if d > 1 and not is_prime(d)]

    def items(self) -> List[Tuple[int, int]]:
        return [(d, self.counts[d]) for d in self.orders]


def order_profile(spec: GroupSpec) -> OrderProfile:
    fam, n = spec.family, spec.n
    if fam == "explicit":
        counts = Counter(spec.orders)
    else:
        counts = Counter()
        for d, c in _cyclic_profile(spec).items():
            counts[d] += c
        if fam == "dihedral":
            counts[2] += n
        elif fam == "dicyclic":
            counts[4] += 2 * n
        elif fam == "semidihedral":
            counts[2] += 2 * n
            counts[4] += 2 * n
    profile = OrderProfile(spec.group_order, dict(sorted(counts.items())))
    if fam != "explicit":
        for p in factorize(profile.group_order).primes:
            assert profile[p] >= 1, f"Cauchy fails for {spec.name} at p={p}"
    return profile


def _cyclic_profile(spec: GroupSpec) -> Dict[int, int]:
    base = {
        "cyclic": spec.n,
        "dihedral": spec.n,
        "dicyclic": 2 * spec.n,
        "semidihedral": 4 * spec.n,
    }[spec.family]
    return {d: euler_phi(d) for d in divisors(base)}


def p_set_size(profile: OrderProfile) -> int:
    """|P(G)|: the identity plus every element of prime order dividing |G|."""
    return 1 + sum(profile[p] for p in factorize(profile.group_order).primes)


def i_d_size(profile: OrderProfile, d: int) -> int:
    """|I_d(G)|: number of elements whose order is a multiple of ``d``."""
    if d not in semiprime_divisors(profile.group_order):
        raise ValueError(f"{d} is not a semiprime divisor of {profile.group_order}")
    return sum(c for order, c in profile.counts.items() if order % d == 0)


def enumerate_elements(spec: GroupSpec, bound: int = DEFAULT_ENUM_BOUND) -> List[Tuple[str, int]]:
    """List every element with its order, labelled by the family presentation."""
    size = spec.group_order
    if size > bound:
        raise ValueError(f"{spec.name} has {size} elements, above the bound {bound}")
    fam, n = spec.family, spec.n
    if fam == "explicit":
        return [(f"g{i}", o) for i, o in enumerate(spec.orders)]

    rot = {"cyclic": n, "dihedral": n, "dicyclic": 2 * n, "semidihedral": 4 * n}[fam]
    elems = [(f"a^{i}", rot // math.gcd(rot, i)) for i in range(rot)]
    if fam == "dihedral":
        elems += [(f"a^{i}*b", 2) for i in range(rot)]
    elif fam == "dicyclic":
        elems += [(f"a^{i}*b", 4) for i in range(rot)]
    elif fam == "semidihedral":
        # (a^i b)^2 = a^(2n*i): trivial exactly when i is even
        elems += [(f"a^{i}*b", 2 if i % 2 == 0 else 4) for i in range(rot)]
    return elems
