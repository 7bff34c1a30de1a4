"""Nerve constructions, the geometric nerve enumerator and the cylinder."""

import pytest

from nervelab.errors import EnumerationBudgetExceeded
from nervelab.fixtures import (
    idempotent_monoidal,
    one_object_from_monoidal,
    sigma_cyclic,
    terminal,
    walking_two_cell,
)
from nervelab.invariants import homology, homology_compare
from nervelab.nerves import (
    audit_simplicial_category,
    cylinder_lax_functor,
    double_nerve,
    end_inclusion,
    geometric_nerve,
    geometric_nerve_map,
    make_simplex,
    nerve_category,
    nerve_two_category,
    simplex_as_lax,
)
from nervelab.simplicial import (
    audit_bisimplicial,
    audit_simplicial,
    diag,
    standard_simplex,
)
from nervelab.twocat import (
    Category,
    LaxTransformation,
    TwoFunctor,
    as_two_category,
    identity_two_functor,
    ordinal,
    ordinal_two_category,
    product_with_category,
    two_functor_as_lax,
    validate_lax_functor,
    validate_lax_transformation,
)
from nervelab.simplicial import validate_simplicial_map


def monotone_count(k, n):
    from math import comb
    return comb(n + k + 1, k + 1)


def test_nerve_of_terminal_category_is_point():
    N = nerve_category(Category(["*"], {}, {}), 4)
    assert N.nondegenerate_counts() == (1, 0, 0, 0, 0)


def test_nerve_of_interval_counts():
    N = nerve_category(ordinal(1), 4)
    assert len(N.simplices(2)) == 4 == monotone_count(2, 1)
    assert N.counts() == standard_simplex(1, 4).counts()


def test_nerve_of_group_counts():
    C = Category(["*"], {"a": ("*", "*")}, {("a", "a"): ("id", "*")}, name="Z2cat")
    N = nerve_category(C, 4)
    assert [len(N.simplices(n)) for n in range(5)] == [1, 2, 4, 8, 16]


def test_discrete_collapse_is_exact_equality():
    # functor-string enumeration and lax-functor backtracking agree on the nose
    for D in (ordinal(1), ordinal(2), Category(["*"], {"a": ("*", "*")},
                                               {("a", "a"): ("id", "*")})):
        N = nerve_category(D, 3)
        G = geometric_nerve(as_two_category(D), 3)
        assert G.same_as(N)


def test_nerve_two_category_of_z2_is_bar_construction():
    SC = nerve_two_category(sigma_cyclic(2), 4)
    assert audit_simplicial_category(SC).ok
    for p in range(5):
        assert len(SC.levels[p].objects) == 2 ** p
        assert all(SC.levels[p].is_identity(a) for a in SC.levels[p].arrows)


def test_nerve_two_category_level_one_of_walking_cell():
    SC = nerve_two_category(walking_two_cell(), 4)
    assert len(SC.levels[1].arrows) == 5
    assert audit_simplicial_category(SC).ok


def test_double_nerve_discrete_is_vertically_constant():
    D = ordinal_two_category(2)
    NN = double_nerve(D, 3)
    assert audit_bisimplicial(NN).ok
    for p in range(4):
        base = len(NN.at(p, 0))
        for q in range(4):
            assert len(NN.at(p, q)) == base


def test_double_nerve_counts():
    NN = double_nerve(sigma_cyclic(2), 4)
    assert all(len(NN.at(p, q)) == 2 ** p for p in range(5) for q in range(5))
    NNE = double_nerve(walking_two_cell(), 4)
    assert len(NNE.at(1, 1)) == 5
    assert audit_bisimplicial(NNE).ok


def brute_force_two_simplices(C):
    """Independent oracle: triangles (x01, x12, x02, t) straight off the tables."""
    out = 0
    for x01 in C.cells1:
        for x12 in C.cells1:
            if C.src1(x01) != C.tgt1(x12):
                continue
            comp = C.hc1(x01, x12)
            for x02 in C.cells1:
                if C.cells1[x02] != (C.src1(x12), C.tgt1(x01)):
                    continue
                out += len(C.cells2_between(comp, x02))
    return out


def test_geometric_nerve_of_walking_cell():
    E = walking_two_cell()
    S = geometric_nerve(E, 4)
    assert audit_simplicial(S).ok
    assert len(S.simplices(2)) == 8 == brute_force_two_simplices(E)
    for n in range(5):
        for s in S.simplices(n):
            assert validate_lax_functor(simplex_as_lax(E, s)).ok


def test_geometric_nerve_budget():
    with pytest.raises(EnumerationBudgetExceeded):
        geometric_nerve(walking_two_cell(), 4, budget=5)


def test_monoidal_geometric_nerve_is_reduced():
    for M in (sigma_cyclic(2), one_object_from_monoidal(idempotent_monoidal())):
        S = geometric_nerve(M, 3)
        assert len(S.simplices(0)) == 1


def test_monoidal_geometric_nerve_is_3_coskeletal_at_dim_4():
    # every compatible 5-tuple of 3-simplices bounds exactly one 4-simplex
    for M in (sigma_cyclic(2), one_object_from_monoidal(idempotent_monoidal())):
        S = geometric_nerve(M, 4)
        tri = S.simplices(3)

        def compatible(faces):
            for j in range(5):
                for i in range(j):
                    if S.face(3, i, faces[j]) != S.face(3, j - 1, faces[i]):
                        return False
            return True

        boundaries = set()
        stack = [()]
        while stack:
            partial = stack.pop()
            if len(partial) == 5:
                boundaries.add(partial)
                continue
            j = len(partial)
            for cand in tri:
                ok = True
                for i in range(j):
                    if S.face(3, i, cand) != S.face(3, j - 1, partial[i]):
                        ok = False
                        break
                if ok:
                    stack.append(partial + (cand,))
        filler_boundaries = [tuple(S.face(4, i, x) for i in range(5))
                             for x in S.simplices(4)]
        assert len(set(filler_boundaries)) == len(filler_boundaries)
        assert set(filler_boundaries) == boundaries


def test_homology_agreement_diag_double_nerve_vs_geometric():
    for C in (terminal(), walking_two_cell(), sigma_cyclic(2)):
        D = diag(double_nerve(C, 4))
        G = geometric_nerve(C, 4)
        assert homology_compare(D, G).groups_agree


def test_geometric_nerve_map_identity():
    E = walking_two_cell()
    S = geometric_nerve(E, 3)
    f = geometric_nerve_map(identity_two_functor(E), 3, src=S, tgt=S)
    assert validate_simplicial_map(f).ok
    assert all(f.apply(n, s) == s for n in range(4) for s in S.simplices(n))


def test_geometric_nerve_map_of_forgetful_functor():
    from nervelab.fibres import fibre_over, phi_forget

    E = walking_two_cell()
    fib = fibre_over(identity_two_functor(E), 1)
    phi = phi_forget(fib, E)
    f = geometric_nerve_map(phi, 3)
    assert validate_simplicial_map(f).ok


# -- cylinder ------------------------------------------------------------------


def _interval_functors():
    """F, G: [1] -> E picking u and v, with the lax comparison along al."""
    E = walking_two_cell()
    O = ordinal_two_category(1)

    def functor(cell, name):
        omap = {0: 0, 1: 1}
        map1 = {O.id1[0]: E.id1[0], O.id1[1]: E.id1[1], (1, 0): cell}
        map2 = {a: E.id2[map1[O.src2(a)]] for a in O.cells2}
        return TwoFunctor(O, E, omap, map1, map2, name=name)

    return E, O, functor("u", "Fu"), functor("v", "Fv")


def test_cylinder_lax_case():
    E, O, F, G = _interval_functors()
    t = LaxTransformation("lax", two_functor_as_lax(F), two_functor_as_lax(G),
                          {0: E.id1[0], 1: E.id1[1]},
                          {O.id1[0]: E.id2[E.id1[0]], O.id1[1]: E.id2[E.id1[1]],
                           (1, 0): "al"}, name="al-dir")
    assert validate_lax_transformation(t).ok
    H = cylinder_lax_functor(t)
    assert validate_lax_functor(H).ok
    P = H.src
    for d, side in ((1, F), (0, G)):
        inc = end_inclusion(side.src, P, d)
        from nervelab.twocat import compose_lax_with_functor, two_functors_equal
        comp = {}
        for x in side.src.objects:
            assert H.omap[inc.omap[x]] == side.omap[x]
        for u in side.src.cells1:
            assert H.map1[inc.map1[u]] == side.map1[u]
        for a in side.src.cells2:
            assert H.map2[inc.map2[a]] == side.map2[a]


def test_cylinder_oplax_case():
    E, O, F, G = _interval_functors()
    # oplax comparison goes from the v-picking functor to the u-picking one
    t = LaxTransformation("oplax", two_functor_as_lax(G), two_functor_as_lax(F),
                          {0: E.id1[0], 1: E.id1[1]},
                          {O.id1[0]: E.id2[E.id1[0]], O.id1[1]: E.id2[E.id1[1]],
                           (1, 0): "al"}, name="al-op")
    assert validate_lax_transformation(t).ok
    H = cylinder_lax_functor(t)
    assert validate_lax_functor(H).ok


def test_cylinder_point_example():
    # terminal source: the cross arrow goes to the component itself
    E = walking_two_cell()
    T = terminal()
    F = TwoFunctor(T, E, {"*": 1}, {T.id1["*"]: E.id1[1]},
                   {T.id2[T.id1["*"]]: E.id2[E.id1[1]]}, name="pick1")
    G = TwoFunctor(T, E, {"*": 0}, {T.id1["*"]: E.id1[0]},
                   {T.id2[T.id1["*"]]: E.id2[E.id1[0]]}, name="pick0")
    for direction in ("lax", "oplax"):
        t = LaxTransformation(direction, two_functor_as_lax(F), two_functor_as_lax(G),
                              {"*": "u"}, {T.id1["*"]: E.id2["u"]})
        assert validate_lax_transformation(t).ok
        H = cylinder_lax_functor(t)
        assert validate_lax_functor(H).ok
        cross = ((T.id1["*"], (1, 0)))
        assert H.map1[cross] == "u"


def test_cylinder_of_identity_transformation():
    E = walking_two_cell()
    F = two_functor_as_lax(identity_two_functor(E))
    from nervelab.twocat import identity_transformation
    H = cylinder_lax_functor(identity_transformation(F))
    assert validate_lax_functor(H).ok
    # both ends restrict to the identity
    P = H.src
    for d in (0, 1):
        inc = end_inclusion(E, P, d)
        assert all(H.map1[inc.map1[u]] == u for u in E.cells1)


def test_cylinder_homotopy_witness_on_nerves():
    # Delta H composed with the end inclusions equals Delta F and Delta G
    E, O, F, G = _interval_functors()
    t = LaxTransformation("lax", two_functor_as_lax(F), two_functor_as_lax(G),
                          {0: E.id1[0], 1: E.id1[1]},
                          {O.id1[0]: E.id2[E.id1[0]], O.id1[1]: E.id2[E.id1[1]],
                           (1, 0): "al"})
    H = cylinder_lax_functor(t)
    P = H.src
    cap = 3
    SP = geometric_nerve(P, cap)
    SB = geometric_nerve(O, cap)
    SE = geometric_nerve(E, cap)
    dH = geometric_nerve_map(H, cap, src=SP, tgt=SE)
    assert validate_simplicial_map(dH).ok
    for d, side in ((1, F), (0, G)):
        dinc = geometric_nerve_map(end_inclusion(O, P, d), cap, src=SB, tgt=SP)
        both = dH.compose(dinc)
        dside = geometric_nerve_map(side, cap, src=SB, tgt=SE)
        assert both.mapping == dside.mapping
