"""Truncated simplicial machinery: diag, codiagonal, comparison map, products."""

import pytest

from nervelab.errors import CapMismatch
from nervelab.fixtures import sigma_cyclic, terminal, walking_two_cell
from nervelab.nerves import double_nerve
from nervelab.simplicial import (
    SimplicialMap,
    audit_bisimplicial,
    audit_simplicial,
    codiagonal_wbar,
    diag,
    disjoint_union,
    external_product,
    identity_map,
    point,
    product,
    standard_simplex,
    validate_simplicial_map,
    vertically_constant,
    zisman_eta,
)


def count_monotone(k, n):
    """Independent oracle: weakly monotone maps [k] -> [n]."""
    return sum(1 for t in _tuples(k + 1, n) if all(a <= b for a, b in zip(t, t[1:])))


def _tuples(length, n):
    if length == 0:
        yield ()
        return
    for t in _tuples(length - 1, n):
        for v in range(n + 1):
            yield t + (v,)


def test_standard_simplex_counts():
    assert point(4).counts() == (1, 1, 1, 1, 1)
    D1 = standard_simplex(1, 4)
    assert len(D1.simplices(1)) == 3 == count_monotone(1, 1)
    D2 = standard_simplex(2, 4)
    assert len(D2.simplices(2)) == 10 == count_monotone(2, 2)
    for S in (point(4), D1, D2):
        assert audit_simplicial(S).ok


def test_product_counts_and_units():
    D1 = standard_simplex(1, 4)
    P = product(D1, point(4))
    assert P.counts() == D1.counts()
    # 5 nondegenerate 1-simplices: all 9 pairs minus the 4 degenerate ones
    PP = product(D1, D1)
    pairs = [(a, b) for a in D1.simplices(1) for b in D1.simplices(1)]
    degenerate = [(a, b) for (a, b) in pairs
                  if D1.is_degenerate(1, a) and D1.is_degenerate(1, b)]
    assert len(PP.nondegenerate(1)) == len(pairs) - len(degenerate) == 5
    Q = product(point(4), point(4))
    assert Q.counts() == point(4).counts()


def test_product_cap_mismatch():
    with pytest.raises(CapMismatch):
        product(point(3), point(4))


def test_diag_of_external_square():
    D1 = standard_simplex(1, 4)
    B = external_product(D1, D1)
    assert audit_bisimplicial(B).ok
    D = diag(B)
    assert len(D.simplices(1)) == 9
    assert audit_simplicial(D).ok


def test_diag_of_terminal_double_nerve_is_point():
    NN = double_nerve(terminal(), 4)
    D = diag(NN)
    assert D.counts() == (1, 1, 1, 1, 1)
    assert D.nondegenerate_counts() == (1, 0, 0, 0, 0)


def test_diag_of_vertically_constant():
    X = standard_simplex(2, 4)
    V = vertically_constant(X)
    assert audit_bisimplicial(V).ok
    D = diag(V)
    # the diagonal is literally X again in this encoding
    assert D.counts() == X.counts()
    for n in range(5):
        assert set(D.simplices(n)) == set(X.simplices(n))


def test_wbar_of_vertically_constant_matches_x():
    X = standard_simplex(1, 4)
    V = vertically_constant(X)
    W = codiagonal_wbar(V)
    assert audit_simplicial(W).ok
    assert W.counts() == X.counts()
    # the tuple is determined by its last component
    mapping = {}
    for p in range(5):
        for t in W.simplices(p):
            mapping[(p, t)] = t[-1]
    f = SimplicialMap(W, X, mapping)
    assert validate_simplicial_map(f).ok
    assert f.is_bijection_levelwise()


def test_wbar_counts_for_z2_double_nerve():
    Z2 = sigma_cyclic(2)
    NN = double_nerve(Z2, 4)
    W = codiagonal_wbar(NN)
    # vertically constant with X_p = (Z/2)^p, so Wbar has 2^p p-simplices
    assert len(W.simplices(2)) == 4
    assert W.counts() == (1, 2, 4, 8, 16)
    assert audit_simplicial(W).ok


def test_wbar_simplicial_identity_spot_check():
    Z2 = sigma_cyclic(2)
    W = codiagonal_wbar(double_nerve(Z2, 4))
    for t in W.simplices(2):
        assert W.face(1, 0, W.face(2, 2, t)) == W.face(1, 1, W.face(2, 0, t))


def test_eta_is_valid_and_collapses_on_vertically_constant():
    X = standard_simplex(1, 4)
    V = vertically_constant(X)
    D = diag(V)
    W = codiagonal_wbar(V)
    eta = zisman_eta(V, W, D)
    assert validate_simplicial_map(eta).ok
    # under the canonical identifications the map is the identity
    for p in range(5):
        for t in D.simplices(p):
            assert eta.apply(p, t)[-1] == t


def test_eta_formula_on_a_chosen_simplex():
    Z2 = sigma_cyclic(2)
    NN = double_nerve(Z2, 4)
    D = diag(NN)
    W = codiagonal_wbar(NN)
    eta = zisman_eta(NN, W, D)
    t = sorted(D.simplices(2), key=repr)[-1]
    # hand expansion: components (d1^h d1^h t, d2^h d0^v t, d0^v d0^v t)
    m0 = NN.hface(1, 2, 1, NN.hface(2, 2, 1, t))
    m1 = NN.hface(2, 1, 2, NN.vface(2, 2, 0, t))
    m2 = NN.vface(2, 1, 0, NN.vface(2, 2, 0, t))
    assert eta.apply(2, t) == (m0, m1, m2)


def test_disjoint_union_audit():
    U = disjoint_union(point(4), standard_simplex(1, 4))
    assert audit_simplicial(U).ok
    assert len(U.simplices(0)) == 3


def test_identity_map_validates():
    S = standard_simplex(2, 3)
    assert validate_simplicial_map(identity_map(S)).ok
