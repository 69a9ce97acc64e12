"""Exact independence numbers.

Two independent routes:

* :func:`mis_oracle` works on the full graph (maximum clique of the
  complement, branch and bound with greedy-colouring bounds);
* :func:`mis_quotient` works on the weighted graph of composite order
  classes and is what production code uses.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .groups import OrderProfile, i_d_size
from .numth import semiprime_divisors
from .pcgraph import Graph, QuotientConflictGraph, ThetaGraph, iter_bits

DEFAULT_ORACLE_BOUND = 500


def default_oracle_bound() -> int:
    env = os.environ.get("PCG_MAX_ORDER")
    return int(env) if env else DEFAULT_ORACLE_BOUND


class SolverLimitError(RuntimeError):
    """The oracle refused or abandoned an instance.

    ``best`` holds the largest independent set found so far; it is a lower
    bound only and is never reported as the answer.
    """

    def __init__(self, message: str, best: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.best = best
        self.incomplete = True


class SolverTimeout(SolverLimitError):
    pass


@dataclass(frozen=True)
class MisResult:
    alpha: int
    witness: Tuple[int, ...]
    method: str  # "oracle": vertex indices; "quotient": class orders taken whole


def _greedy_color_order(P: int, adj: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Vertices of P ordered by greedy colour class, with the colour of each."""
    order, colors = [], []
    uncolored = P
    color = 0
    while uncolored:
        color += 1
        Q = uncolored
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~adj[v] & ~low
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def _max_clique(n: int, adj: Sequence[int], deadline: Optional[float]) -> Tuple[int, ...]:
    """Maximum clique, vertices relabelled by non-increasing degree first."""
    rank = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    pos = {v: i for i, v in enumerate(rank)}
    radj = [0] * n
    for v in range(n):
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << pos[u]
        radj[pos[v]] = row

    best: List[int] = []
    current: List[int] = []
    ticks = 0

    def expand(P: int) -> None:
        nonlocal best, ticks
        ticks += 1
        if deadline is not None and ticks % 256 == 0 and time.monotonic() > deadline:
            # the open branch is itself a clique, so it also counts as a lower bound
            partial = max(best, current, key=len)
            raise SolverTimeout("oracle timed out", tuple(sorted(rank[v] for v in partial)))
        order, colors = _greedy_color_order(P, radj)
        for i in range(len(order) - 1, -1, -1):
            if len(current) + colors[i] <= len(best):
                return
            v = order[i]
            current.append(v)
            nxt = P & radj[v]
            if nxt:
                expand(nxt)
            elif len(current) > len(best):
                best = current[:]
            current.pop()
            P &= ~(1 << v)

    if n:
        expand((1 << n) - 1)
    return tuple(sorted(rank[v] for v in best))


def mis_oracle(g: Graph, bound: Optional[int] = None, timeout: Optional[float] = None) -> MisResult:
    """Maximum independent set of the whole graph; validation path only."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    bound = default_oracle_bound() if bound is None else bound
    if g.n > bound:
        raise SolverLimitError(f"{g.n} vertices exceeds the oracle bound {bound}")
    deadline = time.monotonic() + timeout if timeout else None
    comp = g.complement()
    witness = _max_clique(comp.n, comp.adj, deadline)
    if not g.is_independent(witness):
        raise AssertionError("oracle produced a dependent set")
    return MisResult(len(witness), witness, "oracle")


# -- quotient route --------------------------------------------------------


def _max_weight_clique(
    compat: Sequence[int], weights: Sequence[int], P: int, deadline: Optional[float] = None
) -> int:
    """Weight of a heaviest clique inside P of the compatibility graph."""
    best = 0
    ticks = 0

    def expand(P: int, acc: int) -> None:
        nonlocal best, ticks
        ticks += 1
        if deadline is not None and ticks % 256 == 0 and time.monotonic() > deadline:
            raise SolverTimeout("quotient solver timed out")
        if acc > best:
            best = acc
        # colour classes are independent in compat; a clique takes at most one from each
        order, colors = _greedy_color_order(P, compat)
        bound_at = []
        top = {}
        for v, c in zip(order, colors):
            top[c] = max(top.get(c, 0), weights[v])
        running = 0
        seen = set()
        for v, c in zip(order, colors):
            if c not in seen:
                seen.add(c)
                running += top[c]
            bound_at.append(running)
        for i in range(len(order) - 1, -1, -1):
            if acc + bound_at[i] <= best:
                return
            v = order[i]
            expand(P & compat[v], acc + weights[v])
            P &= ~(1 << v)

    expand(P, 0)
    return best


def mis_quotient(q: QuotientConflictGraph, timeout: Optional[float] = None) -> MisResult:
    """Exact alpha from the weighted class graph.

    Elements of prime order and the identity dominate the whole graph, so
    an independent set of size > 1 only uses composite orders; elements of
    one composite order are pairwise non-adjacent, so whole classes are
    taken at once.
    """
    k = len(q.classes)
    if k == 0:
        return MisResult(1, (1,), "quotient")
    deadline = time.monotonic() + timeout if timeout else None
    weights = q.weights
    # explore heavier classes first: relabel in descending weight
    perm = sorted(range(k), key=lambda i: (-weights[i], q.classes[i][0]))
    pos = {c: i for i, c in enumerate(perm)}
    w = [weights[c] for c in perm]
    full = (1 << k) - 1
    compat = []
    for c in perm:
        row = full & ~q.adj[c] & ~(1 << c)
        compat.append(sum(1 << pos[j] for j in iter_bits(row)))
    alpha = _max_weight_clique(compat, w, full, deadline)

    # lexicographically least optimal witness by class order
    chosen: List[int] = []
    acc = 0
    allowed = full
    by_order = sorted(range(k), key=lambda i: q.classes[i][0])
    while acc < alpha:
        for c in by_order:
            v = pos[c]
            if not allowed >> v & 1:
                continue
            rest = allowed & compat[v]
            rest &= sum(1 << pos[j] for j in by_order if q.classes[j][0] > q.classes[c][0])
            if acc + w[v] + _max_weight_clique(compat, w, rest, deadline) == alpha:
                chosen.append(c)
                acc += w[v]
                allowed = rest
                break
        else:  # pragma: no cover - alpha is attained by construction
            raise AssertionError("failed to rebuild an optimal class set")
    witness = tuple(q.classes[c][0] for c in chosen)
    return MisResult(max(1, alpha), witness, "quotient")


def quotient_witness_is_independent(q: QuotientConflictGraph, orders: Sequence[int]) -> bool:
    idx = {d: i for i, (d, _) in enumerate(q.classes)}
    picked = [idx[d] for d in orders]
    return all(not (q.adj[i] >> j & 1) for i in picked for j in picked)


# -- I_d sets and the semiprime lower bound --------------------------------


def i_d_set(g: ThetaGraph, d: int) -> Tuple[int, ...]:
    """Vertices whose order is a multiple of the semiprime ``d``.

    Checks independence and inclusion-maximality before returning.
    """
    if d not in semiprime_divisors(g.n):
        raise ValueError(f"{d} is not a semiprime divisor of {g.n}")
    members = tuple(v for v, o in enumerate(g.orders) if o % d == 0)
    if not members:
        return members
    assert g.is_independent(members), f"I_{d} is not independent"
    mask = sum(1 << v for v in members)
    for x in range(g.n):
        if not mask >> x & 1:
            assert g.adj[x] & mask, f"I_{d} is not maximal: vertex {x} can be added"
    return members


def sp_lower_bound(profile: OrderProfile) -> int:
    """max |I_d(G)| over semiprime divisors d of |G| (0 if there are none)."""
    return max((i_d_size(profile, d) for d in semiprime_divisors(profile.group_order)), default=0)
