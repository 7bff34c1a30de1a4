"""Axioms, constructions and validators for finite 2-categories."""

import pytest

from nervelab.errors import NonStrictTensor
from nervelab.fixtures import (
    cyclic_monoidal,
    idempotent_monoidal,
    sigma_cyclic,
    sigma_flagged_cyclic,
    terminal,
    walking_two_cell,
)
from nervelab.twocat import (
    MonoidalCategory,
    Category,
    TwoCategory,
    TwoFunctor,
    as_two_category,
    identity_transformation,
    identity_two_functor,
    one_object_from_monoidal,
    opposite,
    ordinal,
    product_with_category,
    two_functor_as_lax,
    validate_lax_functor,
    validate_lax_transformation,
    validate_two_category,
    validate_two_functor,
)


def test_terminal_is_valid():
    assert validate_two_category(terminal()).ok


def test_walking_two_cell_is_valid():
    E = walking_two_cell()
    assert validate_two_category(E).ok
    assert E.counts() == (2, 4, 5)


def test_corrupted_interchange_is_detected():
    E = walking_two_cell()
    # redirect the forced whisker (1_{1_0}) o al to the identity on u
    E.hcomp2[(E.id2[E.id1[0]], "al")] = E.id2["u"]
    rep = validate_two_category(E)
    assert not rep.ok
    assert "InterchangeViolation" in rep.codes()


def test_missing_table_entry_is_reported():
    E = walking_two_cell()
    del E.hcomp2[("al", E.id2[E.id1[1]])]
    rep = validate_two_category(E)
    assert "MissingTableEntry" in rep.codes()


# -- one_object_from_monoidal ------------------------------------------------


def test_trivial_monoidal_gives_terminal():
    cat = Category(["I"], {}, {})
    M = MonoidalCategory(cat, "I", {("I", "I"): "I"},
                         {(cat.identity["I"], cat.identity["I"]): cat.identity["I"]})
    C = one_object_from_monoidal(M)
    assert validate_two_category(C).ok
    assert C.counts() == (1, 1, 1)


def test_z2_monoidal_counts():
    C = sigma_cyclic(2)
    assert validate_two_category(C).ok
    assert C.counts() == (1, 2, 2)


def test_idempotent_monoidal_counts():
    # one object e, arrows {1, f} with f.f = f and f(x)f = f
    C = one_object_from_monoidal(idempotent_monoidal())
    assert validate_two_category(C).ok
    assert C.counts() == (1, 1, 2)


def test_non_strict_tensor_rejected():
    cat = Category(["I", "a"], {}, {})
    tens = {("I", "I"): "I", ("I", "a"): "a", ("a", "I"): "I", ("a", "a"): "a"}
    ids = cat.identity
    tens_a = {(ids[x], ids[y]): ids[tens[(x, y)]] for x in cat.objects for y in cat.objects}
    M = MonoidalCategory(cat, "I", tens, tens_a)
    with pytest.raises(NonStrictTensor):
        one_object_from_monoidal(M)


# -- opposite ----------------------------------------------------------------


def test_opposite_is_involution():
    E = walking_two_cell()
    OO = opposite(opposite(E))
    assert set(OO.cells1) == set(E.cells1)
    assert OO.cells1 == E.cells1
    assert OO.hcomp1 == E.hcomp1 and OO.hcomp2 == E.hcomp2 and OO.vcomp == E.vcomp


def test_opposite_swaps_homs():
    E = walking_two_cell()
    O = opposite(E)
    assert validate_two_category(O).ok
    assert sorted(O.hom(0, 1)) == ["u", "v"]
    assert O.hom(1, 0) == []


def test_opposite_of_terminal():
    T = opposite(terminal())
    assert validate_two_category(T).ok
    assert T.counts() == (1, 1, 1)


# -- product with a category --------------------------------------------------


def test_terminal_times_ordinal_is_discrete_interval():
    P = product_with_category(terminal(), ordinal(1))
    assert validate_two_category(P).ok
    assert len(P.objects) == 2
    # one non-identity 1-cell, no non-identity 2-cells
    assert P.counts() == (2, 3, 3)


def test_product_object_count():
    P = product_with_category(walking_two_cell(), ordinal(1))
    assert len(P.objects) == 4


def test_product_one_cell_count_by_enumeration():
    E = walking_two_cell()
    D = ordinal(1)
    # oracle: pairs of a 1-cell of E and an arrow of [1]
    expected = len(E.cells1) * len(D.arrows)
    P = product_with_category(E, D)
    assert validate_two_category(P).ok
    assert len(P.cells1) == expected == 12


# -- lax functors -------------------------------------------------------------


def test_two_functor_as_lax_is_valid():
    E = walking_two_cell()
    F = two_functor_as_lax(identity_two_functor(E))
    assert validate_lax_functor(F).ok


def test_simplex_into_z2_is_valid_lax_functor():
    # [2] ~> SZ2 with x01 = x12 = a, x02 = e and identity constraint
    from nervelab.nerves import make_simplex, simplex_as_lax

    Z2 = sigma_cyclic(2)
    e = Z2.id1["*"]
    s = make_simplex(("*", "*", "*"), {(0, 1): "g1", (1, 2): "g1", (0, 2): e},
                     {(0, 1, 2): Z2.id2[e]})
    F = simplex_as_lax(Z2, s)
    assert validate_lax_functor(F).ok


def test_corrupted_cocycle_is_detected():
    # fully degenerate 3-simplex of the flagged Z2 fixture, with one triangle
    # redirected onto the idempotent 2-cell: exactly one cocycle square breaks
    from nervelab.nerves import make_simplex, simplex_as_lax

    Z = sigma_flagged_cyclic(2)
    e = Z.id1["*"]
    edges = {(i, j): e for i in range(4) for j in range(i + 1, 4)}
    tris = {t: Z.id2[e] for t in
            [(i, j, k) for i in range(4) for j in range(i + 1, 4) for k in range(j + 1, 4)]}
    s = make_simplex(("*",) * 4, edges, tris)
    F = simplex_as_lax(Z, s)
    assert validate_lax_functor(F).ok
    F.con[((1, 0), (2, 1))] = "t0"
    rep = validate_lax_functor(F)
    assert not rep.ok
    assert "CocycleViolation" in rep.codes()


def test_lax_with_identity_constraints_iff_two_functor():
    E = walking_two_cell()
    F = two_functor_as_lax(identity_two_functor(E))
    assert validate_lax_functor(F).ok
    # corrupt the underlying maps so the 2-functor axioms fail
    F.map1["u"] = "v"
    F.map1["v"] = "u"
    assert not validate_lax_functor(F).ok
    G = TwoFunctor(E, E, dict(F.omap), dict(F.map1), dict(F.map2))
    assert not validate_two_functor(G).ok


# -- transformations ----------------------------------------------------------


def test_identity_transformation_valid_both_directions():
    E = walking_two_cell()
    F = two_functor_as_lax(identity_two_functor(E))
    assert validate_lax_transformation(identity_transformation(F)).ok
    assert validate_lax_transformation(identity_transformation(F, "oplax")).ok


def test_canonical_oplax_contraction_of_comma():
    from nervelab.fibres import comma_contraction, comma_under_object

    E = walking_two_cell()
    for z in (0, 1):
        fib = comma_under_object(E, z)
        ct, theta = comma_contraction(E, fib)
        assert validate_two_functor(ct).ok
        assert validate_lax_transformation(theta).ok


def test_broken_component_names_the_pair():
    from nervelab.fibres import comma_contraction, comma_under_object

    E = walking_two_cell()
    fib = comma_under_object(E, 1)
    ct, theta = comma_contraction(E, fib)
    A = fib.cat
    broken = next(m for m in A.cells1
                  if not A.is_identity1(m) and not A.is_identity2(theta.at_cell1[m]))
    theta.at_cell1[broken] = A.id2[A.src2(theta.at_cell1[broken])]
    rep = validate_lax_transformation(theta)
    assert not rep.ok
    witnesses = {w for f in rep.findings for w in f.witness}
    assert broken in witnesses
