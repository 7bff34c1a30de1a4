"""Finite 2-categories, 2-functors, normal lax functors and transformations.

Conventions used throughout the package:

* a 1-cell ``u`` with source ``x`` and target ``y`` is written ``u: x -> y``;
* ``hc1(g, f)`` is the composite "g after f" of ``f: x -> y`` and ``g: y -> z``;
* a 2-cell ``a: u => v`` lives between parallel 1-cells, ``src2(a) = u``;
* ``vc(b, a)`` is "b after a" for ``a: u => v`` and ``b: v => w``;
* ``hc2(b, a)`` composes ``a`` over hom(x, y) with ``b`` over hom(y, z) and
  lies over ``hc1`` of the underlying 1-cells.

Ordinal categories follow the convention that ``[n]`` has exactly one arrow
``j -> i`` whenever ``i <= j``, so a functor ``[n] -> C`` is a string of
composable arrows pointing towards the lower index.

Identity cells are generated by the constructors under the reserved ids
``("id", x)`` and ``("id2", u)``.  Table entries forced by the unit laws (and
the identity entries of horizontal 2-cell composition) are filled in
automatically; supplying a conflicting entry is a construction error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BoundaryMismatch,
    MissingTableEntry,
    NonMonotone,
    NonStrictTensor,
    UnknownCell,
    UnknownObject,
    ValidationReport,
)


def id1_of(x):
    return ("id", x)


def id2_of(u):
    return ("id2", u)


def _merge_forced(table, key, value, what):
    old = table.get(key)
    if old is not None and old != value:
        raise ValueError(f"{what} entry {key!r} redefines forced value {value!r} as {old!r}")
    table[key] = value


class Category:
    """Finite category with a total composition table."""

    def __init__(self, objects, arrows=None, comp=None, name=""):
        self.name = name
        self.objects = list(objects)
        self.arrows = {}
        self.identity = {}
        for x in self.objects:
            i = id1_of(x)
            self.arrows[i] = (x, x)
            self.identity[x] = i
        for a, (s, t) in (arrows or {}).items():
            if a in self.arrows:
                raise ValueError(f"arrow id {a!r} is reserved or duplicated")
            self.arrows[a] = (s, t)
        self.comp = {}
        for (g, f), h in (comp or {}).items():
            self.comp[(g, f)] = h
        for a, (s, t) in self.arrows.items():
            _merge_forced(self.comp, (a, self.identity[s]), a, "comp")
            _merge_forced(self.comp, (self.identity[t], a), a, "comp")

    def src(self, a):
        return self.arrows[a][0]

    def tgt(self, a):
        return self.arrows[a][1]

    def compose(self, g, f):
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise MissingTableEntry(f"comp({g!r}, {f!r}) in category {self.name!r}")

    def hom(self, x, y):
        return [a for a, (s, t) in self.arrows.items() if s == x and t == y]

    def is_identity(self, a):
        s, t = self.arrows[a]
        return s == t and self.identity[s] == a


def validate_category(C: Category) -> ValidationReport:
    rep = ValidationReport(subject=f"category {C.name!r}")
    for a, (s, t) in C.arrows.items():
        if s not in C.objects or t not in C.objects:
            rep.add("BoundaryMismatch", "arrow with undeclared endpoint", (a,))
    for g, (gs, gt) in C.arrows.items():
        for f, (fs, ft) in C.arrows.items():
            if ft != gs:
                continue
            h = C.comp.get((g, f))
            if h is None:
                rep.add("MissingTableEntry", "composable pair without entry", (g, f))
                continue
            if h not in C.arrows or C.arrows[h] != (fs, gt):
                rep.add("BoundaryMismatch", "composite has wrong boundary", (g, f, h))
    for f in C.arrows:
        s, t = C.arrows[f]
        if C.comp.get((f, C.identity[s])) != f or C.comp.get((C.identity[t], f)) != f:
            rep.add("UnitViolation", "unit law fails", (f,))
    for h in C.arrows:
        for g in C.arrows:
            if C.arrows[g][1] != C.arrows[h][0]:
                continue
            for f in C.arrows:
                if C.arrows[f][1] != C.arrows[g][0]:
                    continue
                left = C.comp.get((C.comp.get((h, g)), f))
                right = C.comp.get((h, C.comp.get((g, f))))
                if left != right or left is None:
                    rep.add("AssociativityViolation", "composition not associative", (h, g, f))
    return rep


class TwoCategory:
    """Finite 2-category with fully materialized composition tables."""

    def __init__(self, objects, cells1=None, cells2=None, hcomp1=None, vcomp=None,
                 hcomp2=None, name=""):
        self.name = name
        self.objects = list(objects)
        self.cells1 = {}
        self.id1 = {}
        for x in self.objects:
            i = id1_of(x)
            self.cells1[i] = (x, x)
            self.id1[x] = i
        for u, (s, t) in (cells1 or {}).items():
            if u in self.cells1:
                raise ValueError(f"1-cell id {u!r} is reserved or duplicated")
            self.cells1[u] = (s, t)

        self.cells2 = {}
        self.id2 = {}
        for u in self.cells1:
            i = id2_of(u)
            self.cells2[i] = (u, u)
            self.id2[u] = i
        for a, (s, t) in (cells2 or {}).items():
            if a in self.cells2:
                raise ValueError(f"2-cell id {a!r} is reserved or duplicated")
            self.cells2[a] = (s, t)

        self.hcomp1 = dict(hcomp1 or {})
        for u, (s, t) in self.cells1.items():
            _merge_forced(self.hcomp1, (u, self.id1[s]), u, "hcomp1")
            _merge_forced(self.hcomp1, (self.id1[t], u), u, "hcomp1")

        self.vcomp = dict(vcomp or {})
        for a, (s, t) in self.cells2.items():
            _merge_forced(self.vcomp, (a, self.id2[s]), a, "vcomp")
            _merge_forced(self.vcomp, (self.id2[t], a), a, "vcomp")

        self.hcomp2 = dict(hcomp2 or {})
        # identity 2-cells compose to the identity 2-cell of the composite
        for (g, f), h in self.hcomp1.items():
            _merge_forced(self.hcomp2, (self.id2[g], self.id2[f]), self.id2[h], "hcomp2")
        # whiskering with the identity 2-cell on an identity 1-cell is trivial
        for a, (u, v) in self.cells2.items():
            x = self.cells1[u][0]
            y = self.cells1[u][1]
            _merge_forced(self.hcomp2, (a, self.id2[self.id1[x]]), a, "hcomp2")
            _merge_forced(self.hcomp2, (self.id2[self.id1[y]], a), a, "hcomp2")

    # -- accessors ---------------------------------------------------------

    def src1(self, u):
        return self.cells1[u][0]

    def tgt1(self, u):
        return self.cells1[u][1]

    def src2(self, a):
        return self.cells2[a][0]

    def tgt2(self, a):
        return self.cells2[a][1]

    def hom(self, x, y):
        return [u for u, (s, t) in self.cells1.items() if s == x and t == y]

    def cells2_between(self, u, v):
        return [a for a, (s, t) in self.cells2.items() if s == u and t == v]

    def cells2_on(self, u):
        """2-cells whose source or target 1-cell is parallel to u."""
        x, y = self.cells1[u]
        return [a for a, (s, t) in self.cells2.items()
                if self.cells1[s] == (x, y)]

    def hc1(self, g, f):
        try:
            return self.hcomp1[(g, f)]
        except KeyError:
            raise MissingTableEntry(f"hcomp1({g!r}, {f!r}) in {self.name!r}")

    def vc(self, b, a):
        try:
            return self.vcomp[(b, a)]
        except KeyError:
            raise MissingTableEntry(f"vcomp({b!r}, {a!r}) in {self.name!r}")

    def hc2(self, b, a):
        try:
            return self.hcomp2[(b, a)]
        except KeyError:
            raise MissingTableEntry(f"hcomp2({b!r}, {a!r}) in {self.name!r}")

    def is_identity1(self, u):
        s, t = self.cells1[u]
        return s == t and self.id1[s] == u

    def is_identity2(self, a):
        s, t = self.cells2[a]
        return s == t and self.id2[s] == a

    def one_cells(self):
        return list(self.cells1)

    def two_cells(self):
        return list(self.cells2)

    def require_object(self, x):
        if x not in self.id1:
            raise UnknownObject(f"object {x!r} not in {self.name!r}")

    def require_cell1(self, u):
        if u not in self.cells1:
            raise UnknownCell(f"1-cell {u!r} not in {self.name!r}")

    def counts(self):
        return (len(self.objects), len(self.cells1), len(self.cells2))


def validate_two_category(C: TwoCategory) -> ValidationReport:
    """Exhaustive audit of the enriched-category axioms, table by table."""
    rep = ValidationReport(subject=f"2-category {C.name!r}")

    for u, (s, t) in C.cells1.items():
        if s not in C.objects or t not in C.objects:
            rep.add("BoundaryMismatch", "1-cell with undeclared endpoint", (u,))
    for a, (u, v) in C.cells2.items():
        if u not in C.cells1 or v not in C.cells1:
            rep.add("BoundaryMismatch", "2-cell on undeclared 1-cell", (a,))
        elif C.cells1[u] != C.cells1[v]:
            rep.add("BoundaryMismatch", "2-cell between non-parallel 1-cells", (a,))

    # horizontal composition of 1-cells
    cells1 = list(C.cells1)
    for g in cells1:
        for f in cells1:
            if C.tgt1(f) != C.src1(g):
                continue
            h = C.hcomp1.get((g, f))
            if h is None:
                rep.add("MissingTableEntry", "composable 1-cells without entry", (g, f))
            elif C.cells1.get(h) != (C.src1(f), C.tgt1(g)):
                rep.add("BoundaryMismatch", "1-cell composite has wrong boundary", (g, f, h))
    for h in cells1:
        for g in cells1:
            if C.tgt1(g) != C.src1(h):
                continue
            for f in cells1:
                if C.tgt1(f) != C.src1(g):
                    continue
                left = C.hcomp1.get((C.hcomp1.get((h, g)), f))
                right = C.hcomp1.get((h, C.hcomp1.get((g, f))))
                if left is None or left != right:
                    rep.add("AssociativityViolation", "hcomp1 not associative", (h, g, f))

    # vertical composition inside each hom-category
    cells2 = list(C.cells2)
    for b in cells2:
        for a in cells2:
            if C.tgt2(a) != C.src2(b):
                continue
            c = C.vcomp.get((b, a))
            if c is None:
                rep.add("MissingTableEntry", "vertically composable pair without entry", (b, a))
            elif C.cells2.get(c) != (C.src2(a), C.tgt2(b)):
                rep.add("BoundaryMismatch", "vertical composite has wrong boundary", (b, a, c))
    for c in cells2:
        for b in cells2:
            if C.tgt2(b) != C.src2(c):
                continue
            for a in cells2:
                if C.tgt2(a) != C.src2(b):
                    continue
                left = C.vcomp.get((C.vcomp.get((c, b)), a))
                right = C.vcomp.get((c, C.vcomp.get((b, a))))
                if left is None or left != right:
                    rep.add("AssociativityViolation", "vcomp not associative", (c, b, a))

    # horizontal composition of 2-cells: totality, boundaries, associativity
    def hcomposable2(b, a):
        return C.tgt1(C.src2(a)) == C.src1(C.src2(b))

    for b in cells2:
        for a in cells2:
            if not hcomposable2(b, a):
                continue
            c = C.hcomp2.get((b, a))
            if c is None:
                rep.add("MissingTableEntry", "horizontally composable pair without entry", (b, a))
                continue
            want = (C.hcomp1.get((C.src2(b), C.src2(a))), C.hcomp1.get((C.tgt2(b), C.tgt2(a))))
            if C.cells2.get(c) != want:
                rep.add("BoundaryMismatch", "horizontal composite has wrong boundary", (b, a, c))
    for c in cells2:
        for b in cells2:
            if not hcomposable2(c, b):
                continue
            for a in cells2:
                if not hcomposable2(b, a):
                    continue
                left = C.hcomp2.get((C.hcomp2.get((c, b)), a))
                right = C.hcomp2.get((c, C.hcomp2.get((b, a))))
                if left is None or left != right:
                    rep.add("AssociativityViolation", "hcomp2 not associative", (c, b, a))

    # unit laws
    for u in cells1:
        s, t = C.cells1[u]
        if C.hcomp1.get((u, C.id1[s])) != u or C.hcomp1.get((C.id1[t], u)) != u:
            rep.add("UnitViolation", "hcomp1 unit law fails", (u,))
    for a in cells2:
        s, t = C.cells2[a]
        if C.vcomp.get((a, C.id2[s])) != a or C.vcomp.get((C.id2[t], a)) != a:
            rep.add("UnitViolation", "vcomp unit law fails", (a,))

    # functoriality of horizontal composition: identities and interchange
    for a in cells2:
        x, y = C.cells1[C.src2(a)]
        if C.hcomp2.get((a, C.id2[C.id1[x]])) != a or \
           C.hcomp2.get((C.id2[C.id1[y]], a)) != a:
            rep.add("InterchangeViolation", "whiskering by an identity fails", (a,))
    for (g, f), h in C.hcomp1.items():
        if C.hcomp2.get((C.id2[g], C.id2[f])) != C.id2[h]:
            rep.add("InterchangeViolation", "identity 2-cells compose wrongly", (g, f))
    vpairs = [(b, a) for b in cells2 for a in cells2 if C.tgt2(a) == C.src2(b)]
    for (b2, b1) in vpairs:
        for (a2, a1) in vpairs:
            if not hcomposable2(b1, a1):
                continue
            lhs = C.hcomp2.get((C.vcomp.get((b2, b1)), C.vcomp.get((a2, a1))))
            h1 = C.hcomp2.get((b1, a1))
            h2 = C.hcomp2.get((b2, a2))
            rhs = None if h1 is None or h2 is None else C.vcomp.get((h2, h1))
            if lhs is None or lhs != rhs:
                rep.add("InterchangeViolation", "interchange law fails", (b2, b1, a2, a1))
    return rep


# ---------------------------------------------------------------------------
# basic constructions


def as_two_category(D: Category, name="") -> TwoCategory:
    """A category regarded as a 2-category with identity 2-cells only."""
    cells1 = {a: st for a, st in D.arrows.items() if not D.is_identity(a)}
    hcomp1 = dict(D.comp)
    return TwoCategory(D.objects, cells1, {}, hcomp1, {}, {}, name=name or D.name)


def underlying_category(C: TwoCategory, name="") -> Category:
    """The category of objects and 1-cells; requires all 2-cells identity."""
    from .errors import FibreNotCategory

    for a in C.cells2:
        if not C.is_identity2(a):
            raise FibreNotCategory(f"{C.name!r} has non-identity 2-cell {a!r}")
    arrows = {u: st for u, st in C.cells1.items() if not C.is_identity1(u)}
    return Category(C.objects, arrows, dict(C.hcomp1), name=name or C.name)


def terminal_two_category(name="terminal") -> TwoCategory:
    return TwoCategory(["*"], name=name)


def ordinal(n: int) -> Category:
    """The ordinal [n] with one arrow j -> i for each i <= j."""
    objects = list(range(n + 1))
    arrows = {(j, i): (j, i) for i in objects for j in objects if i < j}
    comp = {}
    for i in objects:
        for j in objects:
            for k in objects:
                if i < j < k:
                    comp[((j, i), (k, j))] = (k, i)
    return Category(objects, arrows, comp, name=f"[{n}]")


def ordinal_two_category(n: int) -> TwoCategory:
    return as_two_category(ordinal(n))


def opposite(C: TwoCategory, name="") -> TwoCategory:
    """Reverse 1-cells; 2-cells and vertical composition are unchanged."""
    cells1 = {u: (t, s) for u, (s, t) in C.cells1.items() if not C.is_identity1(u)}
    cells2 = {a: st for a, st in C.cells2.items() if not C.is_identity2(a)}
    hcomp1 = {(f, g): h for (g, f), h in C.hcomp1.items()}
    vcomp = dict(C.vcomp)
    hcomp2 = {(a, b): c for (b, a), c in C.hcomp2.items()}
    return TwoCategory(C.objects, cells1, cells2, hcomp1, vcomp, hcomp2,
                       name=name or f"{C.name}^op")


def product_with_category(B: TwoCategory, D: Category, name="") -> TwoCategory:
    """Product 2-category B x D; arrows of D contribute identity 2-cells."""
    objects = [(b, d) for b in B.objects for d in D.objects]
    cells1, cells2, hcomp1, vcomp, hcomp2 = {}, {}, {}, {}, {}

    def c1(u, f):
        if B.is_identity1(u) and D.is_identity(f):
            return id1_of((B.src1(u), D.src(f)))
        return (u, f)

    def c2(a, f):
        u = B.src2(a)
        if B.is_identity2(a):
            return id2_of(c1(u, f))
        return (a, f)

    for u, (s, t) in B.cells1.items():
        for f, (fs, ft) in D.arrows.items():
            if B.is_identity1(u) and D.is_identity(f):
                continue
            cells1[(u, f)] = ((s, fs), (t, ft))
    for a, (u, v) in B.cells2.items():
        if B.is_identity2(a):
            continue
        for f in D.arrows:
            cells2[(a, f)] = (c1(u, f), c1(v, f))
    for (g, f1), h in B.hcomp1.items():
        for (g2, f2), h2 in D.comp.items():
            hcomp1[(c1(g, g2), c1(f1, f2))] = c1(h, D.comp[(g2, f2)])
    for (b, a), c in B.vcomp.items():
        for f in D.arrows:
            vcomp[(c2(b, f), c2(a, f))] = c2(c, f)
    for (b, a), c in B.hcomp2.items():
        for (g2, f2) in D.comp:
            hcomp2[(c2(b, g2), c2(a, f2))] = c2(c, D.comp[(g2, f2)])
    return TwoCategory(objects, cells1, cells2, hcomp1, vcomp, hcomp2,
                       name=name or f"{B.name}x{D.name}")


@dataclass
class MonoidalCategory:
    """Strict monoidal category given by explicit tensor tables."""

    category: Category
    unit: object
    tensor_obj: dict
    tensor_arr: dict
    name: str = ""

    def tens_o(self, a, b):
        return self.tensor_obj[(a, b)]

    def tens_a(self, f, g):
        return self.tensor_arr[(f, g)]


def validate_monoidal(M: MonoidalCategory) -> ValidationReport:
    rep = validate_category(M.category)
    rep.subject = f"monoidal category {M.name!r}"
    C = M.category
    obs = C.objects
    for a in obs:
        if M.tensor_obj.get((a, M.unit)) != a or M.tensor_obj.get((M.unit, a)) != a:
            rep.add("NonStrictTensor", "unit law fails on objects", (a,))
    for a in obs:
        for b in obs:
            if (a, b) not in M.tensor_obj:
                rep.add("MissingTableEntry", "object tensor entry missing", (a, b))
    for a in obs:
        for b in obs:
            for c in obs:
                l = M.tensor_obj.get((M.tensor_obj.get((a, b)), c))
                r = M.tensor_obj.get((a, M.tensor_obj.get((b, c))))
                if l is None or l != r:
                    rep.add("NonStrictTensor", "tensor not associative on objects", (a, b, c))
    arrs = list(C.arrows)
    for f in arrs:
        for g in arrs:
            h = M.tensor_arr.get((f, g))
            if h is None:
                rep.add("MissingTableEntry", "arrow tensor entry missing", (f, g))
                continue
            want = (M.tensor_obj[(C.src(f), C.src(g))], M.tensor_obj[(C.tgt(f), C.tgt(g))])
            if C.arrows.get(h) != want:
                rep.add("BoundaryMismatch", "arrow tensor has wrong boundary", (f, g))
    for f in arrs:
        for g in arrs:
            for h in arrs:
                l = M.tensor_arr.get((M.tensor_arr.get((f, g)), h))
                r = M.tensor_arr.get((f, M.tensor_arr.get((g, h))))
                if l is None or l != r:
                    rep.add("NonStrictTensor", "tensor not associative on arrows", (f, g, h))
    for a in obs:
        for b in obs:
            if M.tensor_arr.get((C.identity[a], C.identity[b])) != C.identity[M.tensor_obj[(a, b)]]:
                rep.add("NonStrictTensor", "tensor of identities is not an identity", (a, b))
    # interchange between tensor and composition
    comp_pairs = [(g, f) for g in arrs for f in arrs if C.tgt(f) == C.src(g)]
    for (g, f) in comp_pairs:
        for (g2, f2) in comp_pairs:
            l = M.tensor_arr.get((C.comp[(g, f)], C.comp[(g2, f2)]))
            tg, tf = M.tensor_arr.get((g, g2)), M.tensor_arr.get((f, f2))
            r = None if tg is None or tf is None else C.comp.get((tg, tf))
            if l is None or l != r:
                rep.add("NonStrictTensor", "tensor does not respect composition", (g, f, g2, f2))
    return rep


def one_object_from_monoidal(M: MonoidalCategory, name="") -> TwoCategory:
    """View a strict monoidal category as a one-object 2-category.

    Objects of M become 1-cells with horizontal composition the tensor,
    arrows become 2-cells with vertical composition the arrow composition.
    The unit object and the identity arrows are renamed onto the reserved
    identity ids of the single object "*".
    """
    rep = validate_monoidal(M)
    if not rep.ok:
        raise NonStrictTensor(str(rep))
    C = M.category
    star = "*"

    def r1(a):
        return id1_of(star) if a == M.unit else a

    def r2(f):
        for x in C.objects:
            if C.identity[x] == f:
                return id2_of(r1(x))
        return f

    cells1 = {a: (star, star) for a in C.objects if a != M.unit}
    cells2 = {}
    for f, (s, t) in C.arrows.items():
        if r2(f) == f:
            cells2[f] = (r1(s), r1(t))
    hcomp1 = {(r1(a), r1(b)): r1(M.tens_o(a, b)) for a in C.objects for b in C.objects}
    vcomp = {(r2(g), r2(f)): r2(h) for (g, f), h in C.comp.items()}
    hcomp2 = {(r2(f), r2(g)): r2(M.tens_a(f, g)) for f in C.arrows for g in C.arrows}
    return TwoCategory([star], cells1, cells2, hcomp1, vcomp, hcomp2, name=name or M.name)


# ---------------------------------------------------------------------------
# 2-functors


class TwoFunctor:
    def __init__(self, src: TwoCategory, tgt: TwoCategory, omap, map1, map2, name=""):
        self.src = src
        self.tgt = tgt
        self.omap = dict(omap)
        self.map1 = dict(map1)
        self.map2 = dict(map2)
        self.name = name

    def on_obj(self, x):
        return self.omap[x]

    def on1(self, u):
        return self.map1[u]

    def on2(self, a):
        return self.map2[a]


def identity_two_functor(C: TwoCategory) -> TwoFunctor:
    return TwoFunctor(C, C, {x: x for x in C.objects},
                      {u: u for u in C.cells1}, {a: a for a in C.cells2},
                      name=f"1_{C.name}")


def compose_two_functors(G: TwoFunctor, F: TwoFunctor, name="") -> TwoFunctor:
    return TwoFunctor(F.src, G.tgt,
                      {x: G.omap[y] for x, y in F.omap.items()},
                      {u: G.map1[v] for u, v in F.map1.items()},
                      {a: G.map2[b] for a, b in F.map2.items()},
                      name=name or f"{G.name}.{F.name}")


def two_functors_equal(F: TwoFunctor, G: TwoFunctor) -> bool:
    return F.omap == G.omap and F.map1 == G.map1 and F.map2 == G.map2


def validate_two_functor(F: TwoFunctor) -> ValidationReport:
    rep = ValidationReport(subject=f"2-functor {F.name!r}")
    B, C = F.src, F.tgt
    for x in B.objects:
        if x not in F.omap or F.omap[x] not in C.id1:
            rep.add("MissingTableEntry", "object without image", (x,))
    for u in B.cells1:
        v = F.map1.get(u)
        if v is None or v not in C.cells1:
            rep.add("MissingTableEntry", "1-cell without image", (u,))
            continue
        s, t = B.cells1[u]
        if C.cells1[v] != (F.omap.get(s), F.omap.get(t)):
            rep.add("BoundaryMismatch", "1-cell image has wrong boundary", (u,))
    for a in B.cells2:
        b = F.map2.get(a)
        if b is None or b not in C.cells2:
            rep.add("MissingTableEntry", "2-cell without image", (a,))
            continue
        s, t = B.cells2[a]
        if C.cells2[b] != (F.map1.get(s), F.map1.get(t)):
            rep.add("BoundaryMismatch", "2-cell image has wrong boundary", (a,))
    if not rep.ok:
        return rep
    for x in B.objects:
        if F.map1[B.id1[x]] != C.id1[F.omap[x]]:
            rep.add("IdentityViolation", "identity 1-cell not preserved", (x,))
    for u in B.cells1:
        if F.map2[B.id2[u]] != C.id2[F.map1[u]]:
            rep.add("IdentityViolation", "identity 2-cell not preserved", (u,))
    for (g, f), h in B.hcomp1.items():
        if C.hcomp1.get((F.map1[g], F.map1[f])) != F.map1[h]:
            rep.add("CompositionViolation", "hcomp1 not preserved", (g, f))
    for (b, a), c in B.vcomp.items():
        if C.vcomp.get((F.map2[b], F.map2[a])) != F.map2[c]:
            rep.add("CompositionViolation", "vcomp not preserved", (b, a))
    for (b, a), c in B.hcomp2.items():
        if C.hcomp2.get((F.map2[b], F.map2[a])) != F.map2[c]:
            rep.add("CompositionViolation", "hcomp2 not preserved", (b, a))
    return rep


# ---------------------------------------------------------------------------
# normal lax functors


class NormalLaxFunctor:
    """Normal lax functor between 2-categories.

    ``con[(u, v)]`` is the structure 2-cell  F(u) o F(v) => F(u o v)  for each
    composable pair of 1-cells; normality forces the entries on identity
    pairs, and the constructor fills those in.
    """

    def __init__(self, src: TwoCategory, tgt: TwoCategory, omap, map1, map2,
                 con=None, name=""):
        self.src = src
        self.tgt = tgt
        self.omap = dict(omap)
        self.map1 = dict(map1)
        self.map2 = dict(map2)
        self.con = dict(con or {})
        self.name = name
        for (g, f) in src.hcomp1:
            if (g, f) in self.con:
                continue
            if src.is_identity1(g) or src.is_identity1(f):
                img = self.map1.get(src.hcomp1[(g, f)])
                if img is not None and img in tgt.id2:
                    self.con[(g, f)] = tgt.id2[img]

    def constraint(self, g, f):
        return self.con[(g, f)]


def two_functor_as_lax(F: TwoFunctor) -> NormalLaxFunctor:
    con = {(g, f): F.tgt.id2[F.map1[h]] for (g, f), h in F.src.hcomp1.items()}
    return NormalLaxFunctor(F.src, F.tgt, F.omap, F.map1, F.map2, con, name=F.name)


def compose_lax_with_functor(G: TwoFunctor, F: NormalLaxFunctor, name="") -> NormalLaxFunctor:
    """Composite G o F of a normal lax functor followed by a 2-functor."""
    con = {pair: G.map2[c] for pair, c in F.con.items()}
    return NormalLaxFunctor(F.src, G.tgt,
                            {x: G.omap[y] for x, y in F.omap.items()},
                            {u: G.map1[v] for u, v in F.map1.items()},
                            {a: G.map2[b] for a, b in F.map2.items()},
                            con, name=name or f"{G.name}.{F.name}")


def validate_lax_functor(F: NormalLaxFunctor) -> ValidationReport:
    rep = ValidationReport(subject=f"normal lax functor {F.name!r}")
    B, C = F.src, F.tgt
    for x in B.objects:
        if F.omap.get(x) not in C.id1:
            rep.add("MissingTableEntry", "object without image", (x,))
    for u in B.cells1:
        v = F.map1.get(u)
        if v is None or v not in C.cells1:
            rep.add("MissingTableEntry", "1-cell without image", (u,))
        else:
            s, t = B.cells1[u]
            if C.cells1[v] != (F.omap.get(s), F.omap.get(t)):
                rep.add("BoundaryMismatch", "1-cell image has wrong boundary", (u,))
    for a in B.cells2:
        b = F.map2.get(a)
        if b is None or b not in C.cells2:
            rep.add("MissingTableEntry", "2-cell without image", (a,))
        else:
            s, t = B.cells2[a]
            if C.cells2[b] != (F.map1.get(s), F.map1.get(t)):
                rep.add("BoundaryMismatch", "2-cell image has wrong boundary", (a,))
    if not rep.ok:
        return rep

    # the per-hom maps must be functors
    for x in B.objects:
        if F.map1[B.id1[x]] != C.id1[F.omap[x]]:
            rep.add("NormalizationViolation", "F(1_x) != 1_Fx", (x,))
    for u in B.cells1:
        if F.map2[B.id2[u]] != C.id2[F.map1[u]]:
            rep.add("NormalizationViolation", "F(1_u) != 1_Fu", (u,))
    for (b, a), c in B.vcomp.items():
        if C.vcomp.get((F.map2[b], F.map2[a])) != F.map2[c]:
            rep.add("CompositionViolation", "vertical composition not preserved", (b, a))

    # structure 2-cells: totality, boundary, normality
    for (g, f), h in B.hcomp1.items():
        c = F.con.get((g, f))
        if c is None:
            rep.add("MissingTableEntry", "constraint missing", (g, f))
            continue
        want = (C.hcomp1.get((F.map1[g], F.map1[f])), F.map1[h])
        if C.cells2.get(c) != want:
            rep.add("BoundaryMismatch", "constraint has wrong boundary", (g, f))
        if (B.is_identity1(g) or B.is_identity1(f)) and not C.is_identity2(c):
            rep.add("NormalizationViolation", "unit constraint not identity", (g, f))
    if not rep.ok:
        return rep

    # naturality of the constraints in both arguments
    for b in B.cells2:
        for a in B.cells2:
            u, u2 = B.cells2[b]
            v, v2 = B.cells2[a]
            if B.tgt1(v) != B.src1(u):
                continue
            lhs = C.vcomp.get((F.con[(u2, v2)], C.hcomp2.get((F.map2[b], F.map2[a]))))
            rhs = C.vcomp.get((F.map2[B.hc2(b, a)], F.con[(u, v)]))
            if lhs is None or lhs != rhs:
                rep.add("NaturalityViolation", "constraint not natural", (b, a))

    # cocycle condition on composable triples
    for u in B.cells1:
        for v in B.cells1:
            if B.tgt1(v) != B.src1(u):
                continue
            for w in B.cells1:
                if B.tgt1(w) != B.src1(v):
                    continue
                lhs = C.vcomp.get((F.con[(u, B.hc1(v, w))],
                                   C.hcomp2.get((C.id2[F.map1[u]], F.con[(v, w)]))))
                rhs = C.vcomp.get((F.con[(B.hc1(u, v), w)],
                                   C.hcomp2.get((F.con[(u, v)], C.id2[F.map1[w]]))))
                if lhs is None or lhs != rhs:
                    rep.add("CocycleViolation", "cocycle square does not commute", (u, v, w))
    return rep


def lax_is_two_functor(F: NormalLaxFunctor) -> bool:
    return all(F.tgt.is_identity2(c) for c in F.con.values())


# ---------------------------------------------------------------------------
# lax and oplax transformations


class LaxTransformation:
    """Lax or oplax transformation between normal lax functors F => G.

    ``at_obj[x]`` is the component 1-cell  F(x) -> G(x).  For ``u: x -> y``
    the component ``at_cell1[u]`` is a 2-cell

    * lax:    G(u) o at_obj[x]  <=  at_obj[y] o F(u)
    * oplax:  G(u) o at_obj[x]  =>  at_obj[y] o F(u)   reversed.
    """

    def __init__(self, direction, F: NormalLaxFunctor, G: NormalLaxFunctor,
                 at_obj, at_cell1, name=""):
        if direction not in ("lax", "oplax"):
            raise ValueError("direction must be 'lax' or 'oplax'")
        self.direction = direction
        self.F = F
        self.G = G
        self.at_obj = dict(at_obj)
        self.at_cell1 = dict(at_cell1)
        self.name = name


def identity_transformation(F: NormalLaxFunctor, direction="lax") -> LaxTransformation:
    C = F.tgt
    at_obj = {x: F.map1[F.src.id1[x]] for x in F.src.objects}
    at_cell1 = {u: C.id2[F.map1[u]] for u in F.src.cells1}
    return LaxTransformation(direction, F, F, at_obj, at_cell1, name=f"1_{F.name}")


def validate_lax_transformation(t: LaxTransformation) -> ValidationReport:
    rep = ValidationReport(subject=f"{t.direction} transformation {t.name!r}")
    B = t.F.src
    C = t.F.tgt
    F, G = t.F, t.G
    for x in B.objects:
        c = t.at_obj.get(x)
        if c is None or c not in C.cells1:
            rep.add("MissingTableEntry", "object component missing", (x,))
            continue
        if C.cells1[c] != (F.omap[x], G.omap[x]):
            rep.add("BoundaryMismatch", "object component has wrong boundary", (x,))
    for u, (x, y) in B.cells1.items():
        a = t.at_cell1.get(u)
        if a is None or a not in C.cells2:
            rep.add("MissingTableEntry", "1-cell component missing", (u,))
            continue
        lax_side = C.hcomp1.get((t.at_obj[y], F.map1[u]))
        other = C.hcomp1.get((G.map1[u], t.at_obj[x]))
        want = (lax_side, other) if t.direction == "lax" else (other, lax_side)
        if C.cells2.get(a) != want:
            rep.add("BoundaryMismatch", "1-cell component has wrong boundary", (u,))
    if not rep.ok:
        return rep

    for x in B.objects:
        if t.at_cell1[B.id1[x]] != C.id2[t.at_obj[x]]:
            rep.add("NormalizationViolation", "component at identity not identity", (x,))

    # naturality in u
    for phi, (u, u2) in B.cells2.items():
        x, y = B.cells1[u]
        if t.direction == "lax":
            lhs = C.vcomp.get((t.at_cell1[u2], C.hcomp2.get((C.id2[t.at_obj[y]], F.map2[phi]))))
            rhs = C.vcomp.get((C.hcomp2.get((G.map2[phi], C.id2[t.at_obj[x]])), t.at_cell1[u]))
        else:
            lhs = C.vcomp.get((t.at_cell1[u2], C.hcomp2.get((G.map2[phi], C.id2[t.at_obj[x]]))))
            rhs = C.vcomp.get((C.hcomp2.get((C.id2[t.at_obj[y]], F.map2[phi])), t.at_cell1[u]))
        if lhs is None or lhs != rhs:
            rep.add("NaturalityViolation", "component not natural in u", (phi,))

    # the hexagon for composable pairs v: x -> y, u: y -> z
    for u in B.cells1:
        for v in B.cells1:
            if B.tgt1(v) != B.src1(u):
                continue
            x = B.src1(v)
            z = B.tgt1(u)
            uv = B.hc1(u, v)
            if t.direction == "lax":
                lhs = C.vcomp.get((t.at_cell1[uv],
                                   C.hcomp2.get((C.id2[t.at_obj[z]], F.con[(u, v)]))))
                step = C.vcomp.get((C.hcomp2.get((C.id2[G.map1[u]], t.at_cell1[v])),
                                    C.hcomp2.get((t.at_cell1[u], C.id2[F.map1[v]]))))
                rhs = C.vcomp.get((C.hcomp2.get((G.con[(u, v)], C.id2[t.at_obj[x]])), step))
            else:
                step = C.vcomp.get((C.hcomp2.get((t.at_cell1[u], C.id2[F.map1[v]])),
                                    C.hcomp2.get((C.id2[G.map1[u]], t.at_cell1[v]))))
                lhs = C.vcomp.get((C.hcomp2.get((C.id2[t.at_obj[z]], F.con[(u, v)])), step))
                rhs = C.vcomp.get((t.at_cell1[uv],
                                   C.hcomp2.get((G.con[(u, v)], C.id2[t.at_obj[x]]))))
            if lhs is None or lhs != rhs:
                rep.add("HexagonViolation", "composition hexagon does not commute", (u, v))
    return rep


# ---------------------------------------------------------------------------
# monotone maps of ordinals


def check_monotone(xi, n):
    """xi is a tuple giving a weakly monotone map [len(xi)-1] -> [n]."""
    if any(xi[i] > xi[i + 1] for i in range(len(xi) - 1)):
        raise NonMonotone(f"{xi!r} is not monotone")
    if any(v < 0 or v > n for v in xi):
        raise NonMonotone(f"{xi!r} does not land in [{n}]")


def delta_map(i, n):
    """The injection [n-1] -> [n] skipping i."""
    return tuple(j if j < i else j + 1 for j in range(n))


def sigma_map(i, n):
    """The surjection [n+1] -> [n] repeating i."""
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def compose_monotone(xi, tau):
    """xi after tau, as tuples."""
    return tuple(xi[j] for j in tau)


def shift_monotone(xi, p, n):
    """The map xi + p : [q+p] -> [n+p] fixing 0..p-1 and shifting xi above."""
    return tuple(range(p)) + tuple(v + p for v in xi)
