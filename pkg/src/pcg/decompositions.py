"""Join and H-join models of prime-coprime graphs.

Each function returns a plain graph that should be isomorphic to the
prime-coprime graph of the named group, built only from complete and
empty pieces.
"""

from __future__ import annotations

from typing import Optional, Tuple

from .numth import factorize
from .pcgraph import Graph, complete_graph, empty_graph, h_join, join

# Template graphs, vertex 0 is the dominating clique block.
# pq^b: blocks [K, q-powers, pq, p*q-powers]
H_PQB = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
# p1p2p3: blocks [K, p1p2, p2p3, p1p3, p1p2p3]
H_PQR = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3)])
# p^a q^b: blocks [K, p-powers, q-powers, pq, p^s q, p q^s, p^s q^t]
H_PAQB = Graph.from_edges(
    7,
    [(0, i) for i in range(1, 7)] + [(1, 2), (1, 3), (2, 3), (1, 5), (2, 4)],
)


def dihedral_join_model(n: int, theta_cyclic: Graph) -> Graph:
    """Theta(Z_n) joined with K_n."""
    return join(theta_cyclic, complete_graph(n))


def dicyclic_join_model(n: int, theta_cyclic_2n: Graph) -> Graph:
    """Theta(Z_2n) joined with E_2n; valid for odd n."""
    if n % 2 == 0:
        raise ValueError("the join model of Q_4n needs odd n")
    return join(theta_cyclic_2n, empty_graph(2 * n))


def cyclic_hjoin_model(n: int) -> Optional[Tuple[Graph, list]]:
    """Template and parts for Z_n when n is pq^b, p1p2p3 or p^a q^b."""
    fac = factorize(n)
    K, E = complete_graph, empty_graph
    if fac.omega == 3 and fac.squarefree:
        p1, p2, p3 = fac.primes
        parts = [
            K(p1 + p2 + p3 - 2),
            E((p1 - 1) * (p2 - 1)),
            E((p2 - 1) * (p3 - 1)),
            E((p1 - 1) * (p3 - 1)),
            E((p1 - 1) * (p2 - 1) * (p3 - 1)),
        ]
        return H_PQR, parts
    if fac.omega != 2:
        return None
    (p, a), (q, b) = fac.pairs
    if a == 1 and b == 1:
        return None
    if a == 1 or b == 1:
        if a != 1:
            (p, a), (q, b) = (q, b), (p, a)
        parts = [K(p + q - 1), E(q**b - q), E((p - 1) * (q - 1)), E((p - 1) * (q**b - q))]
        return H_PQB, parts
    parts = [
        K(p + q - 1),
        E(p**a - p),
        E(q**b - q),
        E((p - 1) * (q - 1)),
        E((p**a - p) * (q - 1)),
        E((p - 1) * (q**b - q)),
        E((p**a - p) * (q**b - q)),
    ]
    return H_PAQB, parts


def cyclic_hjoin_graph(n: int) -> Optional[Graph]:
    model = cyclic_hjoin_model(n)
    if model is None:
        return None
    return h_join(*model)
