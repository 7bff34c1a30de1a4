"""Smith normal form, chain complexes, homology and comparison reports."""

import random

import pytest

from nervelab.errors import CapMismatch
from nervelab.fixtures import sigma_cyclic, walking_two_cell
from nervelab.invariants import (
    chain_complex,
    chain_map,
    chain_map_commutes,
    homology,
    homology_compare,
    identity_matrix,
    is_point_homology,
    is_zero_matrix,
    kernel_basis,
    mat_mul,
    pi0,
    smith_normal_form,
    solve_integer,
)
from nervelab.nerves import double_nerve, geometric_nerve, nerve_category
from nervelab.simplicial import (
    diag,
    disjoint_union,
    identity_map,
    point,
    standard_simplex,
)
from nervelab.twocat import Category


def test_snf_zero_matrix():
    D, rank, factors = smith_normal_form([[0]])
    assert rank == 0 and factors == [] and D == [[0]]


def test_snf_identity():
    _, rank, factors = smith_normal_form(identity_matrix(3))
    assert rank == 3 and factors == [1, 1, 1]


def test_snf_example_with_torsion():
    # d1 = gcd of entries = 2, d1 d2 = |det| = 8
    _, rank, factors = smith_normal_form([[2, 4], [6, 8]])
    assert rank == 2 and factors == [2, 4]


def test_snf_transforms_are_unimodular_witnesses():
    rng = random.Random(7)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        M = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        D, rank, factors, U, V = smith_normal_form(M, transforms=True)
        assert mat_mul(mat_mul(U, M), V) == D
        for i, d in enumerate(factors[:-1]):
            assert factors[i + 1] % d == 0


def test_kernel_and_solve():
    M = [[2, 4], [6, 8]]
    assert kernel_basis(M) == []
    assert solve_integer(M, [2, 6]) == [1, 0]
    assert solve_integer(M, [1, 1]) is None
    K = kernel_basis([[1, 1, 0], [0, 0, 0]])
    assert len(K) == 2
    for col in K:
        assert col[0] + col[1] == 0 or col[0] + col[1] == 0


def test_chain_complex_point():
    cc = chain_complex(point(4))
    assert cc.ranks == [1, 0, 0, 0, 0]
    assert all(is_zero_matrix(cc.boundary(n)) for n in range(1, 5))


def test_chain_complex_interval():
    cc = chain_complex(standard_simplex(1, 4))
    assert cc.ranks[:2] == [2, 1]
    col = [cc.boundary(1)[r][0] for r in range(2)]
    assert sorted(col) == [-1, 1]


def test_chain_ranks_for_z2_nerve():
    S = geometric_nerve(sigma_cyclic(2), 4)
    cc = chain_complex(S)
    assert cc.ranks == [1, 1, 1, 1, 1]


def test_group_homology_oracles():
    # classifying-space homology of cyclic groups through degree 3
    S2 = geometric_nerve(sigma_cyclic(2), 4)
    h2 = homology(S2)
    assert [h2.group(n) for n in range(4)] == [(1, ()), (0, (2,)), (0, ()), (0, (2,))]
    C3 = Category(["*"], {"a": ("*", "*"), "b": ("*", "*")},
                  {("a", "a"): "b", ("a", "b"): ("id", "*"), ("b", "a"): ("id", "*"),
                   ("b", "b"): "a"}, name="Z3")
    S3 = nerve_category(C3, 4)
    h3 = homology(S3)
    assert [h3.group(n) for n in range(4)] == [(1, ()), (0, (3,)), (0, ()), (0, (3,))]


def test_point_homology_predicate():
    assert is_point_homology(homology(point(4)))
    assert not is_point_homology(homology(geometric_nerve(sigma_cyclic(2), 4)))


def test_pi0():
    assert pi0(standard_simplex(1, 4)) == 1
    assert pi0(disjoint_union(point(4), standard_simplex(1, 4))) == 2
    assert pi0(geometric_nerve(sigma_cyclic(3), 2)) == 1


def test_homology_compare_reflexive_with_map():
    S = geometric_nerve(walking_two_cell(), 3)
    rep = homology_compare(S, S, via=identity_map(S))
    assert rep.ok and rep.pi0_pair == (1, 1)


def test_homology_compare_cap_mismatch():
    with pytest.raises(CapMismatch):
        homology_compare(point(3), point(4))


def test_untrusted_degree_refused():
    h = homology(point(4))
    with pytest.raises(CapMismatch):
        h.group(4)


def test_induced_chain_map_commutes():
    E = walking_two_cell()
    S = diag(double_nerve(E, 3))
    T = geometric_nerve(E, 3)
    cc_s, cc_t = chain_complex(S), chain_complex(T)
    f = identity_map(S)
    mats = chain_map(f, cc_s, cc_s)
    assert chain_map_commutes(mats, cc_s, cc_s)


def test_determinism_under_shuffled_construction():
    # same 2-category declared in two different orders gives identical reports
    cells1 = {"u": (1, 0), "v": (1, 0)}
    cells2 = {"al": ("u", "v")}
    from nervelab.twocat import TwoCategory

    A = TwoCategory([0, 1], cells1, cells2, name="E")
    B = TwoCategory([1, 0], dict(reversed(list(cells1.items()))), cells2, name="E")
    ha = homology(geometric_nerve(A, 3))
    hb = homology(geometric_nerve(B, 3))
    assert [ha.group(n) for n in range(3)] == [hb.group(n) for n in range(3)]
    ga = geometric_nerve(A, 3)
    gb = geometric_nerve(B, 3)
    assert ga.counts() == gb.counts()
    assert [set(ga.simplices(n)) for n in range(4)] == [set(gb.simplices(n)) for n in range(4)]
