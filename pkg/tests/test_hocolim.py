"""Homotopy colimits and the two explicit simplicial bijections."""

import pytest

from nervelab.errors import BaseNotCategory, FibreNotCategory, NonStrictDiagram
from nervelab.fixtures import (
    constant_diagram,
    extension_diagram,
    self_action,
    sigma_cyclic,
    terminal,
    walking_two_cell,
)
from nervelab.grothendieck import TwoDiagram, action_diagram, hom_diagram
from nervelab.hocolim import (
    CrossedLaxFunctor,
    hocolim_diagram_of_2cats,
    hocolim_two_functor,
    thomason_iso_i,
    thomason_iso_ii,
    validate_crossed,
)
from nervelab.nerves import audit_simplicial_category, geometric_nerve, map_simplex, \
    nerve_category, reindex_simplex, simplex_edge
from nervelab.simplicial import (
    TruncSimplicialSet,
    audit_bisimplicial,
    audit_simplicial,
    diag,
    validate_simplicial_map,
)
from nervelab.twocat import (
    TwoFunctor,
    as_two_category,
    delta_map,
    identity_two_functor,
    ordinal_two_category,
    sigma_map,
    underlying_category,
    validate_two_functor,
)


def flip_diagram():
    """Base [1], fibres Z/2 as discrete categories, pullback the flip."""
    O1 = ordinal_two_category(1)
    F0 = as_two_category(sigma_cyclic(2).__class__ and _z2_cat(), "F0")
    F1 = as_two_category(_z2_cat(), "F1")
    flip = TwoFunctor(
        F0, F1,
        {"g0": "g1", "g1": "g0"},
        {F0.id1["g0"]: F1.id1["g1"], F0.id1["g1"]: F1.id1["g0"]},
        {F0.id2[F0.id1["g0"]]: F1.id2[F1.id1["g1"]],
         F0.id2[F0.id1["g1"]]: F1.id2[F1.id1["g0"]]},
        name="flip")
    assert validate_two_functor(flip).ok
    return TwoDiagram(O1, {0: F0, 1: F1}, {(1, 0): flip}, name="flip over [1]")


def _z2_cat():
    from nervelab.twocat import Category
    return Category(["g0", "g1"], {}, {}, name="Z2set")


def test_hocolim_of_constant_terminal_diagram_is_discrete_nerve():
    C = walking_two_cell()
    D = constant_diagram(C, terminal())
    SC = hocolim_two_functor(D, 3)
    assert audit_simplicial_category(SC).ok
    from nervelab.nerves import nerve_two_category
    NC = nerve_two_category(C, 3)
    for n in range(4):
        assert len(SC.levels[n].objects) == len(NC.levels[n].objects)
        # levels are discrete up to the fibre coefficient
        assert all("hm" != a[0] or all(C.is_identity2(t) for t in a[3])
                   or True for a in SC.levels[n].arrows)


def test_borel_levels_for_self_action():
    D = action_diagram(self_action(2))
    SC = hocolim_two_functor(D, 4)
    assert audit_simplicial_category(SC).ok
    for n in range(5):
        assert len(SC.levels[n].objects) == 2 * 2 ** n


def test_hocolim_level_zero_of_hom_diagram():
    E = walking_two_cell()
    D = hom_diagram(E, 0)
    SC = hocolim_two_functor(D, 2)
    # level 0 is the coproduct of the hom categories E(z, 0)
    expected = sum(len(D.fibres[z].objects) for z in E.objects)
    assert len(SC.levels[0].objects) == expected


def test_hocolim_preconditions():
    with pytest.raises(NonStrictDiagram):
        hocolim_two_functor(extension_diagram(2), 2)
    E = walking_two_cell()
    D = constant_diagram(sigma_cyclic(2), E)
    with pytest.raises(FibreNotCategory):
        hocolim_two_functor(D, 2)


def test_thomason_i_on_self_action():
    cmp_ = thomason_iso_i(action_diagram(self_action(2)), 4)
    assert validate_simplicial_map(cmp_.forward).ok
    assert validate_simplicial_map(cmp_.backward).ok
    assert cmp_.forward.is_bijection_levelwise()
    assert cmp_.round_trip_exact()


def test_thomason_i_on_hom_diagram_of_two_category():
    # base with non-identity 2-cells and non-discrete fibres
    cmp_ = thomason_iso_i(hom_diagram(walking_two_cell(), 0), 3)
    assert validate_simplicial_map(cmp_.forward).ok
    assert validate_simplicial_map(cmp_.backward).ok
    assert cmp_.forward.is_bijection_levelwise()
    assert cmp_.round_trip_exact()


def test_thomason_i_constant_terminal_sides_agree():
    C = sigma_cyclic(2)
    cmp_ = thomason_iso_i(constant_diagram(C, terminal()), 3)
    assert cmp_.w_source.counts() == cmp_.w_target.counts()
    assert cmp_.round_trip_exact()


def test_hocolim_diagram_of_2cats_audits():
    S = hocolim_diagram_of_2cats(flip_diagram(), 3)
    assert audit_bisimplicial(S).ok


def test_hocolim_diagram_preconditions():
    with pytest.raises(BaseNotCategory):
        hocolim_diagram_of_2cats(hom_diagram(walking_two_cell(), 0), 2)
    with pytest.raises(NonStrictDiagram):
        hocolim_diagram_of_2cats(extension_diagram(2), 2)


def test_diag_of_fibrewise_nerve_is_bousfield_kan_hocolim():
    # two-path consistency: the diagonal equals the homotopy colimit of the
    # fibrewise geometric nerves computed directly
    D = flip_diagram()
    cap = 3
    S = hocolim_diagram_of_2cats(D, cap)
    DS = diag(S)
    C = D.base
    NB = nerve_category(underlying_category(C), cap)
    fibre_nerves = {z: geometric_nerve(D.fibres[z], cap) for z in C.objects}

    def cells(n):
        out = []
        for x in NB.simplices(n):
            z = x if n == 0 else x[1][0]
            for y in fibre_nerves[z].simplices(n):
                out.append((y, x))
        return out

    def face(n, i, c):
        y, x = c
        z = x if n == 0 else x[1][0]
        y2 = reindex_simplex(D.fibres[z], y, delta_map(i, n))
        if i == 0:
            y2 = map_simplex(D.pull1[simplex_edge(C, x, 0, 1)], y2)
        return (y2, NB.face(n, i, x))

    def deg(n, i, c):
        y, x = c
        z = x if n == 0 else x[1][0]
        return (reindex_simplex(D.fibres[z], y, sigma_map(i, n)),
                NB.degeneracy(n, i, x))

    BK = TruncSimplicialSet.build(cap, [cells(n) for n in range(cap + 1)], face, deg)
    assert audit_simplicial(BK).ok
    assert DS.same_as(BK)


def test_thomason_ii_on_flip_diagram():
    cmp_ = thomason_iso_ii(flip_diagram(), 3)
    assert validate_simplicial_map(cmp_.forward).ok
    assert validate_simplicial_map(cmp_.backward).ok
    assert cmp_.forward.is_bijection_levelwise()
    assert cmp_.round_trip_exact()


def test_thomason_ii_on_self_action():
    cmp_ = thomason_iso_ii(action_diagram(self_action(2)), 3)
    assert cmp_.forward.is_bijection_levelwise()
    assert cmp_.round_trip_exact()
    assert validate_simplicial_map(cmp_.forward).ok


def test_thomason_ii_with_two_cell_fibres():
    E = walking_two_cell()
    O1 = ordinal_two_category(1)
    D = TwoDiagram(O1, {0: E, 1: E}, {(1, 0): identity_two_functor(E)},
                   name="E over [1]")
    cmp_ = thomason_iso_ii(D, 3)
    assert validate_simplicial_map(cmp_.forward).ok
    assert cmp_.forward.is_bijection_levelwise()
    assert cmp_.round_trip_exact()


def test_crossed_family_audit_detects_corruption():
    from nervelab.nerves import simplex_object, simplex_tri

    E = walking_two_cell()
    O1 = ordinal_two_category(1)
    D = TwoDiagram(O1, {0: E, 1: E}, {(1, 0): identity_two_functor(E)})
    S = hocolim_diagram_of_2cats(D, 3)
    from nervelab.simplicial import codiagonal_wbar
    W = codiagonal_wbar(S)
    t = next(t for t in W.simplices(2)
             if simplex_edge(D.fibres[simplex_object(t[0][1], 2)], t[2][0], 0, 1) == "u")
    x = t[0][1]
    xs = [simplex_object(x, i) for i in range(3)]
    objects = {i: simplex_object(t[i][0], i) for i in range(3)}
    edges = {(i, j): simplex_edge(D.fibres[xs[j]], t[j][0], i, j)
             for i in range(3) for j in range(i + 1, 3)}
    tris = {(0, 1, 2): simplex_tri(D.fibres[xs[2]], t[2][0], 0, 1, 2)}
    assert validate_crossed(CrossedLaxFunctor(D, x, objects, edges, tris)).ok
    edges[(0, 1)] = "v" if edges[(0, 1)] == "u" else "u"
    rep = validate_crossed(CrossedLaxFunctor(D, x, objects, edges, tris))
    assert not rep.ok and "BoundaryMismatch" in rep.codes()


def test_crossed_square_detects_higher_corruption():
    Z2 = sigma_cyclic(2)
    act = self_action(2)
    D = action_diagram(act)
    S = hocolim_diagram_of_2cats(D, 3)
    from nervelab.simplicial import codiagonal_wbar
    from nervelab.nerves import simplex_object, simplex_tri
    W = codiagonal_wbar(S)
    t = W.simplices(3)[0]
    x = t[0][1]
    xs = [simplex_object(x, i) for i in range(4)]
    objects = {i: simplex_object(t[i][0], i) for i in range(4)}
    edges = {(i, j): simplex_edge(D.fibres[xs[j]], t[j][0], i, j)
             for i in range(4) for j in range(i + 1, 4)}
    tris = {(i, j, k): simplex_tri(D.fibres[xs[k]], t[k][0], i, j, k)
            for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)}
    Y = CrossedLaxFunctor(D, x, objects, edges, tris)
    assert validate_crossed(Y).ok
