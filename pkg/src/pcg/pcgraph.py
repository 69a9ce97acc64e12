"""Prime-coprime graphs, their order-class quotient, and small graph tools.

Adjacency is a list of Python ints used as bitsets: bit ``j`` of
``adj[i]`` is set when ``i`` and ``j`` are adjacent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .groups import OrderProfile
from .numth import is_composite, is_prime

DEFAULT_ISO_BOUND = 200


def orders_adjacent(a: int, b: int) -> bool:
    """Adjacency rule of the prime-coprime graph: gcd is 1 or a prime."""
    g = math.gcd(a, b)
    return g == 1 or is_prime(g)


def orders_independent(orders: Iterable[int]) -> bool:
    """True when elements of these orders are pairwise non-adjacent.

    Same-order elements must also be non-adjacent, so every order has to
    be composite (or the class has a single element; callers pass orders
    whose classes are taken whole).
    """
    orders = list(orders)
    if any(not is_composite(d) for d in orders):
        return False
    return all(not orders_adjacent(a, b) for a, b in combinations(orders, 2))


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, n: int, adj: Sequence[int]):
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        self.n = n
        self.adj = list(adj)
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row >> n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
        for u, v in self.edges():
            if not self.adj[v] >> u & 1:
                raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_count(self) -> int:
        return sum(bin(row).count("1") for row in self.adj) // 2

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, [full & ~row & ~(1 << v) for v, row in enumerate(self.adj)])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(idx[u], idx[v]) for u, v in combinations(vertices, 2) if self.has_edge(u, v)],
        )

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.edge_count()})"


# The plain graph type carries no labels.
PlainGraph = Graph


class ThetaGraph(Graph):
    """Prime-coprime graph with a label and element order per vertex."""

    def __init__(self, labels: Sequence[str], orders: Sequence[int], adj: Sequence[int]):
        if len(labels) != len(orders):
            raise ValueError("labels and orders differ in length")
        super().__init__(len(orders), adj)
        self.labels = list(labels)
        self.orders = list(orders)


def build_theta(elements: Sequence[Tuple[str, int]]) -> ThetaGraph:
    """Build the prime-coprime graph from ``(label, order)`` pairs."""
    if not elements:
        raise ValueError("a group has at least one element")
    labels = [lab for lab, _ in elements]
    orders = [o for _, o in elements]
    if any(o < 1 for o in orders):
        raise ValueError("element orders must be positive")
    # adjacency depends only on the pair of orders
    by_order: Dict[int, int] = {}
    for i, o in enumerate(orders):
        by_order[o] = by_order.get(o, 0) | (1 << i)
    row_for: Dict[int, int] = {}
    for a in by_order:
        row = 0
        for b, mask in by_order.items():
            if orders_adjacent(a, b):
                row |= mask
        row_for[a] = row
    adj = [row_for[o] & ~(1 << i) for i, o in enumerate(orders)]
    return ThetaGraph(labels, orders, adj)


@dataclass(frozen=True)
class QuotientConflictGraph:
    """Composite order classes weighted by their element counts.

    Two classes are joined when their elements are adjacent in the
    prime-coprime graph.
    """

    classes: Tuple[Tuple[int, int], ...]
    adj: Tuple[int, ...]

    @property
    def orders(self) -> List[int]:
        return [d for d, _ in self.classes]

    @property
    def weights(self) -> List[int]:
        return [w for _, w in self.classes]

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as pairs of class orders."""
        out = []
        for i, j in combinations(range(len(self.classes)), 2):
            if self.adj[i] >> j & 1:
                out.append((self.classes[i][0], self.classes[j][0]))
        return out


def build_quotient(profile: OrderProfile) -> QuotientConflictGraph:
    classes = tuple((d, profile[d]) for d in profile.composite_orders)
    adj = []
    for i, (d, _) in enumerate(classes):
        row = 0
        for j, (e, _) in enumerate(classes):
            if i != j and orders_adjacent(d, e):
                row |= 1 << j
        adj.append(row)
    return QuotientConflictGraph(classes, tuple(adj))


# -- constructions ---------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def h_join(h: Graph, parts: Sequence[Graph]) -> Graph:
    """Replace vertex ``i`` of ``h`` by ``parts[i]``; edges of ``h`` become complete bipartite joins."""
    if len(parts) != h.n:
        raise ValueError(f"template has {h.n} vertices but {len(parts)} parts were given")
    offsets = []
    total = 0
    for g in parts:
        offsets.append(total)
        total += g.n
    blocks = [((1 << g.n) - 1) << off for g, off in zip(parts, offsets)]
    adj = []
    for i, (g, off) in enumerate(zip(parts, offsets)):
        cross = 0
        for j in iter_bits(h.adj[i]):
            cross |= blocks[j]
        for row in g.adj:
            adj.append((row << off) | cross)
    return Graph(total, adj)


def join(g1: Graph, g2: Graph) -> Graph:
    return h_join(complete_graph(2), [g1, g2])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return h_join(empty_graph(2), [g1, g2])


# -- induced pattern search ------------------------------------------------

PATTERNS: Dict[str, Graph] = {
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "2K2": Graph.from_edges(4, [(0, 1), (2, 3)]),
}


def _pair_mask(k: int, edges: Iterable[Tuple[int, int]]) -> int:
    """Encode a graph on k labelled vertices as a bitmask over ordered pairs i<j."""
    mask = 0
    for u, v in edges:
        if u > v:
            u, v = v, u
        mask |= 1 << (u * k + v)
    return mask


def _canon(k: int, edges: Tuple[Tuple[int, int], ...]) -> int:
    return min(
        _pair_mask(k, [(p[u], p[v]) for u, v in edges]) for p in permutations(range(k))
    )


@lru_cache(maxsize=None)
def _allowed_forms(pattern: str) -> Tuple[frozenset, ...]:
    """Canonical forms of induced subgraphs of the pattern, by vertex count."""
    g = PATTERNS[pattern]
    forms = [frozenset() for _ in range(g.n + 1)]
    for k in range(1, g.n + 1):
        seen = set()
        for sub in combinations(range(g.n), k):
            h = g.induced(sub)
            seen.add(_canon(k, tuple(h.edges())))
        forms[k] = frozenset(seen)
    return tuple(forms)


@lru_cache(maxsize=None)
def _extensions(pattern: str, prefix_edges: Tuple[Tuple[int, int], ...], k: int) -> Tuple[int, ...]:
    """Adjacency vectors a new vertex may have towards a k-vertex prefix."""
    allowed = _allowed_forms(pattern)[k + 1]
    out = []
    for s in range(1 << k):
        edges = prefix_edges + tuple((i, k) for i in range(k) if s >> i & 1)
        if _canon(k + 1, edges) in allowed:
            out.append(s)
    return tuple(out)


def find_induced(g: Graph, pattern: str) -> Optional[Tuple[int, ...]]:
    """Lexicographically least sorted vertex tuple inducing ``pattern``, or None.

    ``pattern`` is one of ``"C4"``, ``"C5"``, ``"2K2"``.
    """
    if pattern not in PATTERNS:
        raise ValueError(f"unknown pattern {pattern!r}")
    size = PATTERNS[pattern].n
    if g.n < size:
        return None
    full = g.full
    # none of the patterns has a dominating vertex
    alive = 0
    for v in range(g.n):
        if g.adj[v] | (1 << v) != full:
            alive |= 1 << v
    prefix: List[int] = []

    def search(cands: int, edges: Tuple[Tuple[int, int], ...]) -> Optional[Tuple[int, ...]]:
        k = len(prefix)
        for v in iter_bits(cands):
            new_edges = edges + tuple((i, k) for i, u in enumerate(prefix) if g.has_edge(u, v))
            prefix.append(v)
            if k + 1 == size:
                return tuple(prefix)
            nxt = 0
            above = alive & ~((1 << (v + 1)) - 1)
            for s in _extensions(pattern, new_edges, k + 1):
                m = above
                for i, u in enumerate(prefix):
                    m &= g.adj[u] if s >> i & 1 else ~g.adj[u]
                nxt |= m
            if nxt:
                found = search(nxt, new_edges)
                if found:
                    return found
            prefix.pop()
        return None

    return search(alive, ())


def split_obstruction(g: Graph) -> Optional[Tuple[str, Tuple[int, ...]]]:
    """First forbidden induced subgraph found (C4, then C5, then 2K2)."""
    for name in ("C4", "C5", "2K2"):
        w = find_induced(g, name)
        if w is not None:
            return name, w
    return None


def is_split_graph(g: Graph) -> bool:
    return split_obstruction(g) is None


# -- isomorphism -----------------------------------------------------------


def _refine(graphs: Sequence[Graph]) -> List[List[int]]:
    """Colour refinement run jointly so colour ids are comparable across graphs."""
    colors = [[g.degree(v) for v in range(g.n)] for g in graphs]
    n_classes = len({c for cs in colors for c in cs})
    while True:
        table: Dict[tuple, int] = {}
        new = []
        for g, cs in zip(graphs, colors):
            row = []
            for v in range(g.n):
                sig = (cs[v], tuple(sorted(cs[u] for u in iter_bits(g.adj[v]))))
                row.append(table.setdefault(sig, len(table)))
            new.append(row)
        colors = new
        if len(table) == n_classes:
            return colors
        n_classes = len(table)


def is_isomorphic(g1: Graph, g2: Graph, bound: int = DEFAULT_ISO_BOUND) -> bool:
    """Exact isomorphism test by refinement plus backtracking."""
    if max(g1.n, g2.n) > bound:
        raise ValueError(f"isomorphism test limited to {bound} vertices")
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(map(g1.degree, range(g1.n))) != sorted(map(g2.degree, range(g2.n))):
        return False
    c1, c2 = _refine([g1, g2])
    if sorted(c1) != sorted(c2):
        return False

    by_color: Dict[int, List[int]] = {}
    for w, c in enumerate(c2):
        by_color.setdefault(c, []).append(w)
    size = {c: len(ws) for c, ws in by_color.items()}
    order = sorted(range(g1.n), key=lambda v: (size[c1[v]], c1[v], v))
    image = [-1] * g1.n
    used = 0
    mapped1 = 0

    def extend(pos: int) -> bool:
        nonlocal used, mapped1
        if pos == len(order):
            return True
        v = order[pos]
        want = 0
        for u in iter_bits(g1.adj[v] & mapped1):
            want |= 1 << image[u]
        for w in by_color[c1[v]]:
            if used >> w & 1:
                continue
            if g2.adj[w] & used != want:
                continue
            image[v] = w
            used |= 1 << w
            mapped1 |= 1 << v
            if extend(pos + 1):
                return True
            used &= ~(1 << w)
            mapped1 &= ~(1 << v)
            image[v] = -1
        return False

    return extend(0)


# -- queries and export ----------------------------------------------------


def is_dominating(g: Graph, v: int) -> bool:
    if not 0 <= v < g.n:
        raise IndexError(f"no vertex {v}")
    return g.adj[v] | (1 << v) == g.full


def _vertex_names(g: Graph) -> List[str]:
    if isinstance(g, ThetaGraph):
        return list(g.labels)
    return [str(v) for v in range(g.n)]


def export_edges(g: Graph) -> str:
    """Plain-text edge list preceded by a vertex header."""
    names = _vertex_names(g)
    lines = [f"# vertices {g.n} edges {g.edge_count()}"]
    if isinstance(g, ThetaGraph):
        lines.append("# " + " ".join(f"{lab}({o})" for lab, o in zip(g.labels, g.orders)))
    else:
        lines.append("# " + " ".join(names))
    lines += [f"{names[u]} {names[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def export_dot(g: Graph, name: str = "G") -> str:
    lines = [f'graph "{name}" {{']
    for v in range(g.n):
        if isinstance(g, ThetaGraph):
            label = f"{g.labels[v]}({g.orders[v]})"
        else:
            label = str(v)
        lines.append(f'  {v} [label="{label}"];')
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
