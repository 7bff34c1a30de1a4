"""Small 2-categories and diagrams used by the test suite and the CLI docs."""

from __future__ import annotations

from .twocat import (
    Category,
    MonoidalCategory,
    TwoCategory,
    as_two_category,
    one_object_from_monoidal,
    ordinal_two_category,
    terminal_two_category,
)


def walking_two_cell() -> TwoCategory:
    """Objects 0, 1; parallel 1-cells u, v: 1 -> 0; one 2-cell al: u => v."""
    cells1 = {"u": (1, 0), "v": (1, 0)}
    cells2 = {"al": ("u", "v")}
    hcomp1 = {}
    vcomp = {}
    hcomp2 = {}
    return TwoCategory([0, 1], cells1, cells2, hcomp1, vcomp, hcomp2, name="E")


def cyclic_monoidal(n: int) -> MonoidalCategory:
    """The cyclic group Z/n as a discrete strict monoidal category."""
    objects = [f"g{i}" for i in range(n)]
    cat = Category(objects, {}, {}, name=f"Z{n}")
    tens_o = {(f"g{i}", f"g{j}"): f"g{(i + j) % n}" for i in range(n) for j in range(n)}
    tens_a = {}
    for i in range(n):
        for j in range(n):
            tens_a[(cat.identity[f"g{i}"], cat.identity[f"g{j}"])] = \
                cat.identity[f"g{(i + j) % n}"]
    return MonoidalCategory(cat, "g0", tens_o, tens_a, name=f"(Z{n},+)")


def sigma_cyclic(n: int) -> TwoCategory:
    """One-object 2-category of the cyclic group Z/n (discrete homs)."""
    return one_object_from_monoidal(cyclic_monoidal(n), name=f"SZ{n}")


def idempotent_monoidal() -> MonoidalCategory:
    """One object e, arrows {1, f} with f.f = f and f(x)f = f."""
    cat = Category(["e"], {"f": ("e", "e")}, {("f", "f"): "f"}, name="Idem")
    i = cat.identity["e"]
    tens_o = {("e", "e"): "e"}
    tens_a = {(i, i): i, (i, "f"): "f", ("f", i): "f", ("f", "f"): "f"}
    return MonoidalCategory(cat, "e", tens_o, tens_a, name="(Idem,.)")


def flagged_cyclic_monoidal(n: int) -> MonoidalCategory:
    """Z/n on objects, with one idempotent endomorphism on every object.

    Arrows are pairs (degree, flag); tensor adds degrees and or-s flags, so
    the result is strict and has non-identity arrows in every hom.
    """
    objects = [f"g{i}" for i in range(n)]
    arrows = {f"t{i}": (f"g{i}", f"g{i}") for i in range(n)}
    comp = {(f"t{i}", f"t{i}"): f"t{i}" for i in range(n)}
    cat = Category(objects, arrows, comp, name=f"Z{n}t")

    def arr(i, flag):
        return f"t{i}" if flag else cat.identity[f"g{i}"]

    tens_o = {(f"g{i}", f"g{j}"): f"g{(i + j) % n}" for i in range(n) for j in range(n)}
    tens_a = {}
    for i in range(n):
        for j in range(n):
            for fi in (False, True):
                for fj in (False, True):
                    tens_a[(arr(i, fi), arr(j, fj))] = arr((i + j) % n, fi or fj)
    return MonoidalCategory(cat, "g0", tens_o, tens_a, name=f"(Z{n}t,+)")


def sigma_flagged_cyclic(n: int) -> TwoCategory:
    """One-object 2-category with 1-cells Z/n and an idempotent 2-cell each."""
    return one_object_from_monoidal(flagged_cyclic_monoidal(n), name=f"SZ{n}t")


def discrete_ordinal(n: int) -> TwoCategory:
    return ordinal_two_category(n)


def terminal() -> TwoCategory:
    return terminal_two_category()


def walking_cospan_two_cells() -> TwoCategory:
    """Objects 0, 1; 1-cells u, v, w: 1 -> 0; 2-cells a: u => w, b: v => w."""
    cells1 = {"u": (1, 0), "v": (1, 0), "w": (1, 0)}
    cells2 = {"a": ("u", "w"), "b": ("v", "w")}
    return TwoCategory([0, 1], cells1, cells2, {}, {}, {}, name="Cospan")


def poset_category(relation, objects, name="") -> Category:
    """Category of a poset given as a set of (lower, upper) related pairs."""
    closure = set(relation) | {(x, x) for x in objects}
    arrows = {(b, a): (b, a) for (a, b) in closure if a != b}
    comp = {}
    for (b, a) in list(arrows):
        for (c, bb) in list(arrows):
            if bb == b:
                comp[((b, a), (c, b))] = (c, a)
    return Category(objects, arrows, comp, name=name)


def constant_diagram(C, fibre, name=""):
    """Constant strict 2-diagram over C with the given fibre everywhere."""
    from .grothendieck import Natural2, TwoDiagram, identity_natural
    from .twocat import compose_two_functors, identity_two_functor

    idf = identity_two_functor(fibre)
    pull1 = {u: idf for u in C.cells1}
    pull2 = {a: identity_natural(idf) for a in C.cells2}
    zeta = {pair: identity_natural(idf) for pair in C.hcomp1}
    fibres = {x: fibre for x in C.objects}
    return TwoDiagram(C, fibres, pull1, pull2, zeta,
                      name=name or f"const {fibre.name} over {C.name}")


def cocycle_diagram(base, fibre, kappa, name=""):
    """Diagram over a one-object base with identity pullbacks and zeta given
    by central 1-cells of the fibre: kappa maps nonunit composable pairs of
    base 1-cells to a 1-cell of the (one-object) fibre."""
    from .grothendieck import Natural2, TwoDiagram, identity_natural
    from .twocat import identity_two_functor

    idf = identity_two_functor(fibre)
    pull1 = {u: idf for u in base.cells1}
    pull2 = {a: identity_natural(idf) for a in base.cells2}
    zeta = {}
    for (g, f) in base.hcomp1:
        if base.is_identity1(g) or base.is_identity1(f):
            continue
        t = kappa[(g, f)]
        zeta[(g, f)] = Natural2(idf, idf, {a: t for a in fibre.objects})
    fibres = {x: fibre for x in base.objects}
    return TwoDiagram(base, fibres, pull1, pull2, zeta, name=name)


def extension_diagram(n, name=""):
    """Base and fibre Z/n with the carry 2-cocycle; the total 2-category is
    the cyclic group of order n^2."""
    base = sigma_cyclic(n)
    fibre = sigma_cyclic(n)

    def cell(i):
        return fibre.id1["*"] if i % n == 0 else f"g{i % n}"

    kappa = {}
    for i in range(1, n):
        for j in range(1, n):
            kappa[(f"g{i}", f"g{j}")] = cell((i + j) // n)
    return cocycle_diagram(base, fibre, kappa, name=name or f"Z{n} carry extension")


def flagged_extension_diagram(name=""):
    """Base Z/2, fibre the flagged Z/2 one-object 2-category (which has
    non-identity 2-cells), zeta the carry cocycle."""
    base = sigma_cyclic(2)
    fibre = sigma_flagged_cyclic(2)
    kappa = {("g1", "g1"): "g1"}
    return cocycle_diagram(base, fibre, kappa, name=name or "flagged Z2 extension")


def self_action(n):
    """Z/n acting on itself by translation."""
    from .grothendieck import ModuleAction

    M = cyclic_monoidal(n)
    N = M.category
    act_obj = {(a, u): M.tens_o(a, u) for a in N.objects for u in N.objects}
    act_arr = {(N.identity[a], N.identity[u]): N.identity[M.tens_o(a, u)]
               for a in N.objects for u in N.objects}
    return ModuleAction(M, N, act_obj, act_arr, name=f"Z{n} on itself")


def translation_action_on_set(n, size):
    """Z/n acting on a discrete category with `size` objects by cyclic
    translation (indices mod size must be stable: use size = n or divisors)."""
    from .grothendieck import ModuleAction

    M = cyclic_monoidal(n)
    N = Category([f"n{i}" for i in range(size)], {}, {}, name=f"set{size}")
    act_obj = {}
    act_arr = {}
    for i in range(size):
        for j in range(n):
            tgt = f"n{(i + j) % size}"
            act_obj[(f"n{i}", f"g{j}")] = tgt
            act_arr[(N.identity[f"n{i}"], M.category.identity[f"g{j}"])] = N.identity[tgt]
    return ModuleAction(M, N, act_obj, act_arr, name=f"Z{n} on {size} points")
