"""2-diagrams, the Grothendieck construction and its comparison functors."""

import pytest

from nervelab.errors import ActionAxiomViolation, DiagramInvalid
from nervelab.fibres import comma_over_object
from nervelab.fixtures import (
    constant_diagram,
    extension_diagram,
    flagged_extension_diagram,
    self_action,
    sigma_cyclic,
    terminal,
    translation_action_on_set,
    walking_two_cell,
)
from nervelab.grothendieck import (
    Natural2,
    action_diagram,
    action_grothendieck,
    check_two_iso,
    fibre_embedding,
    grothendieck,
    hom_comma_iso,
    hom_diagram,
    iota_p_pair,
    projection,
    validate_action,
    validate_two_diagram,
)
from nervelab.invariants import homology, is_point_homology, pi0
from nervelab.nerves import geometric_nerve
from nervelab.twocat import (
    compose_two_functors,
    identity_two_functor,
    ordinal_two_category,
    two_functors_equal,
    validate_lax_transformation,
    validate_two_category,
    validate_two_functor,
)


def test_constant_terminal_diagram_is_valid():
    D = constant_diagram(walking_two_cell(), terminal())
    assert validate_two_diagram(D).ok


def test_hom_diagram_is_valid():
    D = hom_diagram(walking_two_cell(), 0)
    assert validate_two_diagram(D).ok


def test_corrupted_zeta_is_caught_and_names_the_witness():
    D = extension_diagram(3)
    fib = D.fibres["*"]
    # unit corruption: zeta at (g1, identity) redirected off the identity
    bad_unit = Natural2(D.zeta[("g1", D.base.id1["*"])].src,
                        D.zeta[("g1", D.base.id1["*"])].tgt,
                        {a: "g1" for a in fib.objects})
    D.zeta[("g1", D.base.id1["*"])] = bad_unit
    rep = validate_two_diagram(D)
    assert not rep.ok and "UnitViolation" in rep.codes()

    D2 = extension_diagram(3)
    # cocycle corruption at a nonunit pair
    old = D2.zeta[("g1", "g2")]
    D2.zeta[("g1", "g2")] = Natural2(old.src, old.tgt, {a: "g2" for a in fib.objects})
    rep2 = validate_two_diagram(D2)
    assert not rep2.ok and "ZetaCocycleViolation" in rep2.codes()
    witnessed = {w for f in rep2.findings for w in f.witness}
    assert {"g1", "g2"} & witnessed


def test_grothendieck_of_constant_terminal_is_base():
    for C in (walking_two_cell(), sigma_cyclic(2)):
        G = grothendieck(constant_diagram(C, terminal()))
        assert validate_two_category(G.cat).ok
        assert check_two_iso(projection(G))


def test_grothendieck_validates_with_nontrivial_zeta():
    for D in (extension_diagram(2), extension_diagram(3), flagged_extension_diagram()):
        G = grothendieck(D)
        assert validate_two_category(G.cat).ok


def test_extension_diagram_total_category_is_cyclic():
    G = grothendieck(extension_diagram(2))
    A = G.cat
    gen = next(c for c in A.cells1 if not A.is_identity1(c) and c[1] == "g1"
               and isinstance(c[0], tuple) and c[0][0] == "id")
    power = gen
    order = 1
    while not A.is_identity1(power):
        power = A.hc1(gen, power)
        order += 1
    assert order == 4
    h = homology(geometric_nerve(A, 4))
    assert [h.group(n) for n in range(4)] == [(1, ()), (0, (4,)), (0, ()), (0, (4,))]


def test_grothendieck_of_invalid_diagram_raises():
    D = extension_diagram(3)
    old = D.zeta[("g1", "g2")]
    D.zeta[("g1", "g2")] = Natural2(old.src, old.tgt,
                                    {a: "g2" for a in D.fibres["*"].objects})
    with pytest.raises(DiagramInvalid):
        grothendieck(D)


def test_hom_diagram_total_category_counts_and_contractibility():
    E = walking_two_cell()
    G = grothendieck(hom_diagram(E, 0))
    assert len(G.cat.objects) == 3
    assert validate_two_category(G.cat).ok
    assert is_point_homology(homology(geometric_nerve(G.cat, 4)))


def test_projection_and_embedding():
    E = walking_two_cell()
    G = grothendieck(hom_diagram(E, 0))
    pi = projection(G)
    assert validate_two_functor(pi).ok
    j = fibre_embedding(G, 0)
    assert validate_two_functor(j).ok
    pj = compose_two_functors(pi, j)
    assert all(v == 0 for v in pj.omap.values())
    # j is injective on every level and lands in the fibre over 0
    assert len(set(j.omap.values())) == len(j.omap)
    assert len(set(j.map1.values())) == len(j.map1)
    image_objects = {ob for ob in G.cat.objects if ob[1] == 0}
    assert set(j.omap.values()) == image_objects


def test_projection_fibre_matches_hom_category():
    # the preimage of 0 in int_E E(-, 0) is the endo hom-category of 0
    E = walking_two_cell()
    G = grothendieck(hom_diagram(E, 0))
    objs = [ob for ob in G.cat.objects if ob[1] == 0]
    cells = [m for m in G.cat.cells1
             if G.cat.src1(m) in objs and G.cat.tgt1(m) in objs
             and (G.cat.is_identity1(m) or m[1] == E.id1[0])]
    assert len(objs) == len(E.hom(0, 0)) == 1
    assert len(cells) == 1


def test_iota_p_pair_identities_and_theta():
    E = walking_two_cell()
    G = grothendieck(hom_diagram(E, 0))
    for z in (0, 1):
        i, p, theta, fib = iota_p_pair(G, z)
        assert validate_two_functor(i).ok and validate_two_functor(p).ok
        assert two_functors_equal(compose_two_functors(p, i),
                                  identity_two_functor(i.src))
        assert validate_lax_transformation(theta).ok


def test_iota_p_on_constant_terminal_diagram():
    C = sigma_cyclic(2)
    G = grothendieck(constant_diagram(C, terminal()))
    i, p, theta, fib = iota_p_pair(G, "*")
    assert two_functors_equal(compose_two_functors(p, i), identity_two_functor(i.src))
    assert validate_lax_transformation(theta).ok


def test_theta_component_formula():
    # the component at (a, x, v) is ((1_{v*a}, v), 1_v)
    from nervelab.nerves import simplex_edge, simplex_tri

    E = walking_two_cell()
    G = grothendieck(hom_diagram(E, 0))
    i, p, theta, fib = iota_p_pair(G, 1)
    K = fib.cat
    for ob in K.objects:
        (a, x), v = fib.witnesses[ob]
        comp = theta.at_obj[ob]
        vedge = simplex_edge(E, v, 0, 1)
        if K.is_identity1(comp):
            assert E.is_identity1(vedge)
            continue
        U, y = fib.morphism_data[comp]
        assert U[1] == vedge
        assert simplex_tri(E, y, 0, 1, 2) == E.id2[vedge]


def test_hom_comma_iso_on_discrete_hom_fixtures():
    for C, x in ((sigma_cyclic(2), "*"), (ordinal_two_category(1), 0)):
        G = grothendieck(hom_diagram(C, x))
        K = comma_over_object(C, x)
        iso = hom_comma_iso(C, x, G, K)
        assert check_two_iso(iso)


def test_hom_comma_iso_refuses_nondiscrete_homs():
    E = walking_two_cell()
    G = grothendieck(hom_diagram(E, 0))
    K = comma_over_object(E, 0)
    with pytest.raises(DiagramInvalid):
        hom_comma_iso(E, 0, G, K)


def test_hom_comma_same_shape_for_walking_cell():
    # with non-discrete homs the identification is only a homology equivalence
    E = walking_two_cell()
    G = grothendieck(hom_diagram(E, 0))
    K = comma_over_object(E, 0)
    assert G.cat.counts() == K.cat.counts()
    hg = homology(geometric_nerve(G.cat, 4))
    hk = homology(geometric_nerve(K.cat, 4))
    assert [hg.group(n) for n in range(4)] == [hk.group(n) for n in range(4)]


def test_action_axioms_validated():
    act = self_action(2)
    assert validate_action(act).ok
    act.act_obj[("g0", "g0")] = "g1"
    assert not validate_action(act).ok
    with pytest.raises(ActionAxiomViolation):
        action_diagram(act)


def test_self_action_total_category_is_contractible():
    G = action_grothendieck(self_action(2))
    assert validate_two_category(G.cat).ok
    assert is_point_homology(homology(geometric_nerve(G.cat, 4)))


def test_trivial_action_gives_module_back():
    act = translation_action_on_set(1, 3)
    G = action_grothendieck(act)
    assert len(G.cat.objects) == 3
    assert check_two_iso(projection(G)) is False  # base is a point, module is not
    assert len(G.cat.cells1) == 3  # identities only
    assert validate_two_category(G.cat).ok


def test_translation_action_on_two_points():
    G = action_grothendieck(translation_action_on_set(2, 2))
    assert len(G.cat.objects) == 2
    S = geometric_nerve(G.cat, 4)
    assert pi0(S) == 1
    assert homology(S).group(0) == (1, ())


def test_action_morphism_description():
    # morphisms a -> b are pairs (f, u) with f: a -> b (x) u in the module
    act = self_action(2)
    G = action_grothendieck(act)
    A = G.cat
    for m in A.cells1:
        if A.is_identity1(m):
            continue
        f, u = m
        (b, _), (a, _) = A.cells1[m]
        assert act.act_obj[(a, "g1" if u == "g1" else "g0")] is not None
