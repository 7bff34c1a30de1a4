"""Homotopy-fibre 2-categories and their structural functors."""

from nervelab.fixtures import sigma_cyclic, terminal, walking_two_cell
from nervelab.fibres import (
    audit_theorem_b,
    comma_over_object,
    comma_under_object,
    edge_simplex,
    fibre_over,
    fibre_under,
    gamma_theta,
    phi_forget,
    psi_label,
    q_comma,
    simplex_fibre,
    w_star,
    xi_star,
)
from nervelab.invariants import homology, is_point_homology
from nervelab.nerves import geometric_nerve, simplex_edge
from nervelab.twocat import (
    TwoFunctor,
    compose_two_functors,
    identity_two_functor,
    two_functors_equal,
    validate_lax_transformation,
    validate_two_category,
    validate_two_functor,
)


def terminal_to_z2():
    Z2 = sigma_cyclic(2)
    T = terminal()
    return TwoFunctor(T, Z2, {"*": "*"}, {T.id1["*"]: Z2.id1["*"]},
                      {T.id2[T.id1["*"]]: Z2.id2[Z2.id1["*"]]}, name="t")


def test_fibre_over_walking_cell_at_0_is_terminal():
    fib = fibre_over(identity_two_functor(walking_two_cell()), 0)
    assert validate_two_category(fib.cat).ok
    assert fib.cat.counts() == (1, 1, 1)


def test_fibre_over_walking_cell_at_1_has_three_objects():
    E = walking_two_cell()
    fib = fibre_over(identity_two_functor(E), 1)
    assert validate_two_category(fib.cat).ok
    witnesses = sorted((x, simplex_edge(E, v, 0, 1))
                       for (x, v) in fib.witnesses.values())
    assert witnesses == [(0, "u"), (0, "v"), (1, ("id", 1))]


def test_fibre_under_examples():
    E = walking_two_cell()
    u0 = fibre_under(identity_two_functor(E), 0)
    assert len(u0.cat.objects) == 3 and validate_two_category(u0.cat).ok
    u1 = fibre_under(identity_two_functor(E), 1)
    assert u1.cat.counts() == (1, 1, 1)


def test_terminal_into_z2_fibre_is_discrete_two_points():
    fib = fibre_over(terminal_to_z2(), "*")
    assert fib.cat.counts() == (2, 2, 2)
    assert validate_two_category(fib.cat).ok


def test_simplex_fibre_at_q0_matches_object_fibre():
    E = walking_two_cell()
    F = identity_two_functor(E)
    direct = fibre_over(F, 1)
    via_simplex = simplex_fibre(F, 1, "over")
    assert set(direct.cat.objects) == set(via_simplex.cat.objects)
    assert direct.cat.cells1 == via_simplex.cat.cells1
    assert direct.cat.cells2 == via_simplex.cat.cells2


def test_simplex_fibre_over_an_edge():
    E = walking_two_cell()
    F = identity_two_functor(E)
    fib = simplex_fibre(F, edge_simplex(E, "u"), "over")
    # enumeration oracle: lax extensions [2] ~> E of the edge u with v_0 = x
    assert len(fib.cat.objects) == 2
    assert validate_two_category(fib.cat).ok
    under = simplex_fibre(F, edge_simplex(E, "u"), "under")
    assert validate_two_category(under.cat).ok


def test_gamma_theta_retraction_identities():
    E = walking_two_cell()
    F = identity_two_functor(E)
    for side in ("over", "under"):
        for z in (edge_simplex(E, "u"), edge_simplex(E, "v")):
            g, th, r = gamma_theta(F, z, side)
            assert validate_two_functor(g).ok and validate_two_functor(th).ok
            tg = compose_two_functors(th, g)
            assert two_functors_equal(tg, identity_two_functor(g.src))
            assert validate_lax_transformation(r).ok


def test_gamma_theta_retraction_on_q0_is_mutual_inverse():
    E = walking_two_cell()
    F = identity_two_functor(E)
    g, th, r = gamma_theta(F, 1, "over")
    assert two_functors_equal(compose_two_functors(th, g), identity_two_functor(g.src))
    assert two_functors_equal(compose_two_functors(g, th), identity_two_functor(g.tgt))


def test_gamma_sends_homology_isomorphically():
    # retract: H(Delta(z0//F)) = H(Delta(z//F)) through the section
    from nervelab.invariants import homology_compare
    from nervelab.nerves import geometric_nerve_map

    E = walking_two_cell()
    F = identity_two_functor(E)
    z = edge_simplex(E, "u")
    g, th, r = gamma_theta(F, z, "over")
    S0 = geometric_nerve(g.src, 3)
    S1 = geometric_nerve(g.tgt, 3)
    dg = geometric_nerve_map(g, 3, src=S0, tgt=S1)
    rep = homology_compare(S0, S1, via=dg)
    assert rep.ok


def test_w_star_formula_and_functoriality():
    E = walking_two_cell()
    F = identity_two_functor(E)
    f0 = fibre_over(F, 0)
    f1 = fibre_over(F, 1)
    ws = w_star(F, "u", f0, f1)
    assert validate_two_functor(ws).ok
    ob = next(iter(f0.cat.objects))
    x, v = f1.witnesses[ws.omap[ob]]
    assert simplex_edge(E, v, 0, 1) == "u"
    # identity 1-cell gives the identity relabeling
    wid = w_star(F, E.id1[0], f0, f0)
    assert two_functors_equal(wid, identity_two_functor(f0.cat))


def test_w_star_contravariant_on_composites():
    Z2 = sigma_cyclic(2)
    F = identity_two_functor(Z2)
    fib = fibre_over(F, "*")
    a_star = w_star(F, "g1", fib, fib)
    aa = compose_two_functors(a_star, a_star)
    ee = w_star(F, Z2.hc1("g1", "g1"), fib, fib)
    assert two_functors_equal(aa, ee)
    assert two_functors_equal(ee, identity_two_functor(fib.cat))


def test_xi_star_identity_and_composition():
    E = walking_two_cell()
    F = identity_two_functor(E)
    S2 = geometric_nerve(E, 2)
    z = next(s for s in S2.simplices(2) if not S2.is_degenerate(2, s))
    ident = xi_star(F, z, (0, 1, 2))
    assert two_functors_equal(ident, identity_two_functor(ident.src))
    # (xi o xi')* = xi'* o xi* for xi: [1] -> [2] and xi': [0] -> [1]
    from nervelab.nerves import reindex_simplex

    xi = (0, 2)
    xi_p = (1,)
    first = xi_star(F, z, xi)
    zxi = reindex_simplex(E, z, xi)
    second = xi_star(F, zxi, xi_p)
    composite = compose_two_functors(second, first)
    direct = xi_star(F, z, (2,))
    assert two_functors_equal(composite, direct)


def test_q_comma_partition_and_phi():
    E = walking_two_cell()
    F = identity_two_functor(E)
    qc = q_comma(F, 1, "over")
    assert validate_two_category(qc.cat).ok
    labels = psi_label(qc)
    # the labels partition the objects, with the fibre sizes adding up
    total = sum(len(fib.cat.objects) for fib in qc.fibres.values())
    assert total == len(qc.cat.objects) == len(labels)
    phi = phi_forget_union(qc, E)
    assert validate_two_functor(phi).ok


def phi_forget_union(qc, B):
    from nervelab.fibres import FibreCategory

    merged = FibreCategory(qc.cat, None, qc.side,
                           {ob: fib.witnesses[ob] for z, fib in qc.fibres.items()
                            for ob in fib.cat.objects},
                           {m: fib.morphism_data[m] for z, fib in qc.fibres.items()
                            for m in fib.morphism_data})
    return phi_forget(merged, B)


def test_psi_compatible_with_xi_star():
    # the label of the image of an object under xi* is the restricted label
    from nervelab.fibres import _witness_face
    from nervelab.nerves import reindex_simplex

    E = walking_two_cell()
    F = identity_two_functor(E)
    z = edge_simplex(E, "u")
    fibz = simplex_fibre(F, z, "over")
    xi = (1,)
    target = simplex_fibre(F, reindex_simplex(E, z, xi), "over")
    xs = xi_star(F, z, xi, fibz, target)
    for ob in fibz.cat.objects:
        _, v = fibz.witnesses[ob]
        _, v_img = target.witnesses[xs.omap[ob]]
        assert _witness_face(E, v_img, "over", 0) == \
            reindex_simplex(E, _witness_face(E, v, "over", 1), xi)


def test_comma_contractibility_homology():
    E = walking_two_cell()
    Z2 = sigma_cyclic(2)
    Z3 = sigma_cyclic(3)
    cases = [(E, 0), (E, 1), (Z2, "*"), (Z3, "*")]
    for C, z in cases:
        under = comma_under_object(C, z)
        over = comma_over_object(C, z)
        for fib in (under, over):
            assert validate_two_category(fib.cat).ok
            h = homology(geometric_nerve(fib.cat, 4))
            assert is_point_homology(h)


def test_audit_theorem_b_for_terminal_to_z2():
    F = terminal_to_z2()
    audit = audit_theorem_b(F, cap=4)
    assert audit.all_equivalences
    h = audit.fibre_homology["*"]
    assert h.group(0) == (2, ()) and all(h.group(n) == (0, ()) for n in range(1, 4))
