import pytest

from pcg.decompositions import (
    H_PAQB,
    H_PQB,
    H_PQR,
    cyclic_hjoin_graph,
    cyclic_hjoin_model,
    dicyclic_join_model,
    dihedral_join_model,
)
from pcg.groups import cyclic, dicyclic, dihedral, enumerate_elements
from pcg.pcgraph import build_theta, is_isomorphic

from oracles import group_elements_with_orders, theta_edges


def theta(spec):
    return build_theta(enumerate_elements(spec))


def test_templates_are_small_and_connected_to_block_zero():
    for h in (H_PQB, H_PQR, H_PAQB):
        assert h.degree(0) == h.n - 1


def test_dihedral_join():
    for n in range(3, 25):
        assert is_isomorphic(theta(dihedral(n)), dihedral_join_model(n, theta(cyclic(n)))), n


def test_dicyclic_join_odd_only():
    for n in range(3, 16, 2):
        assert is_isomorphic(theta(dicyclic(n)), dicyclic_join_model(n, theta(cyclic(2 * n)))), n
    with pytest.raises(ValueError):
        dicyclic_join_model(4, theta(cyclic(8)))


def test_dicyclic_even_is_not_that_join():
    # for even n the b-coset has order-4 elements tied to the cyclic part, so the model breaks
    assert not is_isomorphic(theta(dicyclic(4)), dicyclic_join_model(5, theta(cyclic(10))))


def test_z12_parts():
    h, parts = cyclic_hjoin_model(12)
    assert h is H_PQB
    assert [(p.n, p.edge_count()) for p in parts] == [(4, 6), (2, 0), (2, 0), (4, 0)]


def test_model_sizes_add_up():
    for n in range(2, 300):
        g = cyclic_hjoin_graph(n)
        if g is not None:
            assert g.n == n


def test_hjoin_models_match_brute_edges():
    # compare against the brute-force edge set built from real element orders
    for n in range(2, 200):
        model = cyclic_hjoin_graph(n)
        if model is None:
            continue
        orders = [o for _, o in group_elements_with_orders("cyclic", n)]
        assert model.edge_count() == len(theta_edges(orders)), n
        assert is_isomorphic(model, theta(cyclic(n))), n


def test_unsupported_shapes_return_none():
    for n in (1, 7, 15, 210, 900):
        assert cyclic_hjoin_model(n) is None, n
