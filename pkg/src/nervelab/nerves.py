"""Nerve constructions: ordinary nerve, nerve of a 2-category, double nerve,
geometric nerve, and the cylinder lax functor used for homotopies.

A geometric n-simplex of a 2-category C is encoded as a normal-form family

    ("lax", (x_0, ..., x_n), (x_{ij})_{i<j lex}, (x_{ijk})_{i<j<k lex})

for n >= 1, and as the bare object id for n = 0.  Entries with repeated
indices are never stored; the accessors return the forced identities.  The
nerve of an ordinary category emits the same encoding (with identity
triangles), so the geometric nerve of a discrete 2-category is literally the
same simplicial set.
"""

from __future__ import annotations

from .errors import (
    EnumerationBudgetExceeded,
    InvalidTransformation,
    TargetSimplexMissing,
    ValidationReport,
)
from .simplicial import TruncBisimplicialSet, TruncSimplicialSet, SimplicialMap
from .twocat import (
    Category,
    LaxTransformation,
    NormalLaxFunctor,
    TwoCategory,
    TwoFunctor,
    as_two_category,
    delta_map,
    ordinal,
    product_with_category,
    sigma_map,
    validate_lax_transformation,
)


# ---------------------------------------------------------------------------
# geometric simplex encoding


def _pairs(n):
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


def _triples(n):
    return [(i, j, k) for i in range(n + 1)
            for j in range(i + 1, n + 1) for k in range(j + 1, n + 1)]


def make_simplex(objs, edges, tris):
    """edges: dict (i,j) -> 1-cell for i < j; tris: dict (i,j,k) -> 2-cell."""
    n = len(objs) - 1
    if n == 0:
        return objs[0]
    return ("lax", tuple(objs),
            tuple(edges[p] for p in _pairs(n)),
            tuple(tris[t] for t in _triples(n)))


def simplex_dim(s):
    return len(s[1]) - 1 if isinstance(s, tuple) and s and s[0] == "lax" else 0


def simplex_object(s, i):
    if simplex_dim(s) == 0:
        return s
    return s[1][i]


def simplex_edge(C: TwoCategory, s, i, j):
    if i == j:
        return C.id1[simplex_object(s, i)]
    n = simplex_dim(s)
    return s[2][_pairs(n).index((i, j))]


def simplex_tri(C: TwoCategory, s, i, j, k):
    if i == j or j == k:
        return C.id2[simplex_edge(C, s, i, k) if i == j else simplex_edge(C, s, i, j)]
    n = simplex_dim(s)
    return s[3][_triples(n).index((i, j, k))]


def reindex_simplex(C: TwoCategory, s, xi):
    """Precompose the simplex with a monotone map given as a value tuple."""
    m = len(xi) - 1
    if m == 0:
        return simplex_object(s, xi[0])
    objs = tuple(simplex_object(s, xi[a]) for a in range(m + 1))
    edges = {(a, b): simplex_edge(C, s, xi[a], xi[b]) for (a, b) in _pairs(m)}
    tris = {(a, b, c): simplex_tri(C, s, xi[a], xi[b], xi[c]) for (a, b, c) in _triples(m)}
    return make_simplex(objs, edges, tris)


def simplex_as_lax(C: TwoCategory, s, name="") -> NormalLaxFunctor:
    """The simplex as a normal lax functor out of the ordinal 2-category."""
    n = simplex_dim(s)
    O = as_two_category(ordinal(n))
    omap = {i: simplex_object(s, i) for i in range(n + 1)}
    map1, map2, con = {}, {}, {}
    for u, (src, tgt) in O.cells1.items():
        j, i = (src, tgt)
        map1[u] = simplex_edge(C, s, i, j)
    for a in O.cells2:
        map2[a] = C.id2[map1[O.src2(a)]]
    for (g, f) in O.hcomp1:
        j, i = O.cells1[g][0], O.cells1[g][1]
        k = O.cells1[f][0]
        con[(g, f)] = simplex_tri(C, s, i, j, k)
    return NormalLaxFunctor(O, C, omap, map1, map2, con, name=name or f"simplex{n}")


def lax_as_simplex(F: NormalLaxFunctor, n: int):
    """Inverse of simplex_as_lax for a lax functor out of the ordinal [n]."""
    O, C = F.src, F.tgt
    objs = tuple(F.omap[i] for i in range(n + 1))
    if n == 0:
        return objs[0]
    edges = {}
    for (i, j) in _pairs(n):
        edges[(i, j)] = F.map1[(j, i)] if (j, i) in O.cells1 else F.map1[O.id1[i]]
    tris = {}
    for (i, j, k) in _triples(n):
        tris[(i, j, k)] = F.con[((j, i), (k, j))]
    return make_simplex(objs, edges, tris)


# ---------------------------------------------------------------------------
# nerves of categories and 2-categories


def nerve_category(D: Category, cap: int, name="") -> TruncSimplicialSet:
    """Nerve of a category in the geometric-simplex encoding.

    n-simplices are composable strings of n arrows, stored as the functor
    family they generate: all composites x_{ij} plus the identity triangles
    the category acquires as a discrete 2-category.
    """
    A = as_two_category(D)
    dims = [sorted(D.objects, key=repr)]
    strings = []
    for n in range(1, cap + 1):
        if n == 1:
            strings = [(f,) for f in sorted(D.arrows, key=repr)]
        else:
            strings = [s + (f,) for s in strings
                       for f in sorted(D.arrows, key=repr) if D.src(s[-1]) == D.tgt(f)]
        level = []
        for s in strings:
            objs = [D.tgt(s[0])] + [D.src(f) for f in s]
            edges = {}
            for i in range(n + 1):
                for j in range(i + 1, n + 1):
                    e = s[i]
                    for m in range(i + 1, j):
                        e = D.comp[(e, s[m])]
                    edges[(i, j)] = e
            tris = {(i, j, k): A.id2[edges[(i, k)]] for (i, j, k) in _triples(n)}
            level.append(make_simplex(tuple(objs), edges, tris))
        dims.append(level)

    def face(n, i, x):
        return reindex_simplex(A, x, delta_map(i, n))

    def deg(n, i, x):
        return reindex_simplex(A, x, sigma_map(i, n))

    return TruncSimplicialSet.build(cap, dims, face, deg, name=name or f"N {D.name}")


class SimplicialCategory:
    """Levelwise categories with face/degeneracy functors given by tables."""

    def __init__(self, cap, levels, face_obj, face_arr, deg_obj, deg_arr, name=""):
        self.cap = cap
        self.levels = levels          # list of Category
        self.face_obj = face_obj      # (p, i) -> dict obj -> obj, p >= 1
        self.face_arr = face_arr
        self.deg_obj = deg_obj        # (p, i) -> dict obj -> obj, p < cap
        self.deg_arr = deg_arr
        self.name = name


def audit_simplicial_category(SC: SimplicialCategory) -> ValidationReport:
    rep = ValidationReport(subject=f"simplicial category {SC.name!r}")
    for p, level in enumerate(SC.levels):
        from .twocat import validate_category
        sub = validate_category(level)
        for f in sub.findings:
            rep.add(f.code, f"[level {p}] {f.message}", f.witness)

    def check_functor(tag, src, tgt, omap, amap):
        for a, (s, t) in src.arrows.items():
            fa = amap.get(a)
            if fa is None or tgt.arrows.get(fa) != (omap[s], omap[t]):
                rep.add("FunctorViolation", f"{tag}: arrow image broken", (a,))
                return
        for x in src.objects:
            if amap[src.identity[x]] != tgt.identity[omap[x]]:
                rep.add("FunctorViolation", f"{tag}: identity not preserved", (x,))
                return
        for (g, f), h in src.comp.items():
            if tgt.comp.get((amap[g], amap[f])) != amap[h]:
                rep.add("FunctorViolation", f"{tag}: composition not preserved", (g, f))
                return

    for p in range(1, SC.cap + 1):
        for i in range(p + 1):
            check_functor(f"d_{i} at {p}", SC.levels[p], SC.levels[p - 1],
                          SC.face_obj[(p, i)], SC.face_arr[(p, i)])
    for p in range(SC.cap):
        for i in range(p + 1):
            check_functor(f"s_{i} at {p}", SC.levels[p], SC.levels[p + 1],
                          SC.deg_obj[(p, i)], SC.deg_arr[(p, i)])
    if not rep.ok:
        return rep

    # simplicial identities on object and arrow tables
    def table(kind, p, i):
        return (SC.face_obj if kind == "d" else SC.deg_obj)[(p, i)], \
               (SC.face_arr if kind == "d" else SC.deg_arr)[(p, i)]

    for p in range(2, SC.cap + 1):
        for j in range(p + 1):
            for i in range(j):
                for which in (0, 1):
                    lhs = {k: table("d", p - 1, i)[which].get(v)
                           for k, v in table("d", p, j)[which].items()}
                    rhs = {k: table("d", p - 1, j - 1)[which].get(v)
                           for k, v in table("d", p, i)[which].items()}
                    if lhs != rhs:
                        rep.add("SimplicialIdentity", f"d_{i} d_{j} fails at level {p}")
    for p in range(SC.cap):
        for j in range(p + 1):
            dj_obj, dj_arr = table("s", p, j)
            for i in range(p + 2):
                for which, src_tab in ((0, dj_obj), (1, dj_arr)):
                    for k, v in src_tab.items():
                        got = table("d", p + 1, i)[which].get(v)
                        if i in (j, j + 1):
                            want = k
                        elif i < j:
                            want = table("s", p - 1, j - 1)[which].get(
                                table("d", p, i)[which][k]) if p >= 1 else None
                        else:
                            want = table("s", p - 1, j)[which].get(
                                table("d", p, i - 1)[which][k]) if p >= 1 else None
                        if want is not None and got != want:
                            rep.add("SimplicialIdentity", f"d_{i} s_{j} fails at level {p}")
    for p in range(SC.cap - 1):
        for j in range(p + 1):
            for i in range(j + 1):
                for which in (0, 1):
                    lhs = {k: table("s", p + 1, i)[which].get(v)
                           for k, v in table("s", p, j)[which].items()}
                    rhs = {k: table("s", p + 1, j + 1)[which].get(v)
                           for k, v in table("s", p, i)[which].items()}
                    if lhs != rhs:
                        rep.add("SimplicialIdentity", f"s_{i} s_{j} fails at level {p}")
    return rep


def _string_objects(C: TwoCategory, comps):
    """Vertex objects x_0..x_p of a composable 1-cell string."""
    if not comps:
        return ()
    objs = [C.tgt1(comps[0])]
    for u in comps:
        objs.append(C.src1(u))
    return tuple(objs)


def nerve_two_category(C: TwoCategory, cap: int, name="") -> SimplicialCategory:
    """The simplicial category with level p the coproduct over object tuples
    of products of hom-categories; arrows are strings of 2-cells."""

    def norm_arrow(comps):
        if all(C.is_identity2(a) for a in comps):
            return ("id", tuple(C.src2(a) for a in comps))
        return tuple(comps)

    levels = []
    for p in range(cap + 1):
        if p == 0:
            levels.append(Category(list(C.objects), {}, {}, name=f"N_0 {C.name}"))
            continue
        strings = [()]
        for _ in range(p):
            strings = [s + (u,) for s in strings for u in C.cells1
                       if not s or C.src1(s[-1]) == C.tgt1(u)]
        arrows = {}
        for s in strings:
            choices = [()]
            for u in s:
                choices = [c + (a,) for c in choices for a in C.cells2 if C.src2(a) == u]
            for comps in choices:
                if all(C.is_identity2(x) for x in comps):
                    continue
                arrows[tuple(comps)] = (s, tuple(C.tgt2(x) for x in comps))
        # componentwise vertical composition; unit entries are forced later
        comp = {}
        for b, (bs, bt) in arrows.items():
            for a, (as_, at) in arrows.items():
                if at != bs:
                    continue
                comp[(b, a)] = norm_arrow(tuple(C.vc(x, y) for x, y in zip(b, a)))
        levels.append(Category(strings, arrows, comp, name=f"N_{p} {C.name}"))

    def obj_face(p, i, s):
        if p == 1:
            return C.src1(s[0]) if i == 0 else C.tgt1(s[0])
        if i == 0:
            return s[1:]
        if i == p:
            return s[:-1]
        return s[:i - 1] + (C.hc1(s[i - 1], s[i]),) + s[i + 1:]

    def arrow_face(p, i, a, level_src, level_tgt):
        if a[0] == "id" and a[1] in set(level_src.objects):
            return level_tgt.identity[obj_face(p, i, a[1])]
        comps = a
        if p == 1:
            x = C.src1(C.src2(comps[0])) if i == 0 else C.tgt1(C.src2(comps[0]))
            return level_tgt.identity[x]
        if i == 0:
            new = comps[1:]
        elif i == p:
            new = comps[:-1]
        else:
            new = comps[:i - 1] + (C.hc2(comps[i - 1], comps[i]),) + comps[i + 1:]
        out = tuple(new)
        if all(C.is_identity2(x) for x in out):
            return level_tgt.identity[tuple(C.src2(x) for x in out)]
        return out

    def obj_deg(p, i, s):
        if p == 0:
            return (C.id1[s],)
        objs = _string_objects(C, s)
        return s[:i] + (C.id1[objs[i]],) + s[i:]

    def arrow_deg(p, i, a, level_src, level_tgt):
        if a[0] == "id" and a[1] in set(level_src.objects):
            return level_tgt.identity[obj_deg(p, i, a[1])]
        comps = a
        src_string = tuple(C.src2(x) for x in comps)
        objs = _string_objects(C, src_string)
        new = comps[:i] + (C.id2[C.id1[objs[i]]],) + comps[i:]
        if all(C.is_identity2(x) for x in new):
            return level_tgt.identity[tuple(C.src2(x) for x in new)]
        return tuple(new)

    face_obj, face_arr, deg_obj, deg_arr = {}, {}, {}, {}
    for p in range(1, cap + 1):
        for i in range(p + 1):
            src, tgt = levels[p], levels[p - 1]
            face_obj[(p, i)] = {s: obj_face(p, i, s) for s in src.objects}
            face_arr[(p, i)] = {a: arrow_face(p, i, a, src, tgt) for a in src.arrows}
    for p in range(cap):
        for i in range(p + 1):
            src, tgt = levels[p], levels[p + 1]
            deg_obj[(p, i)] = {s: obj_deg(p, i, s) for s in src.objects}
            deg_arr[(p, i)] = {a: arrow_deg(p, i, a, src, tgt) for a in src.arrows}
    return SimplicialCategory(cap, levels, face_obj, face_arr, deg_obj, deg_arr,
                              name=name or f"N {C.name}")


def nerve_of_simplicial_category(SC: SimplicialCategory, cap: int, name="") -> TruncBisimplicialSet:
    """Apply the categorical nerve levelwise: S_{p,q} = N_q(level p).

    A (p, q)-cell with q = 0 is a level-p object; with q >= 1 it is a tuple
    of q composable level-p arrows (each arrow pointing to the lower index).
    Horizontal operators are the level functors applied entrywise.
    """

    def cells(p, q):
        A = SC.levels[p]
        if q == 0:
            return [("o", y) for y in A.objects]
        rows = [(f,) for f in A.arrows]
        for _ in range(q - 1):
            rows = [r + (f,) for r in rows for f in A.arrows
                    if A.tgt(f) == A.src(r[-1])]
        return [("m", r) for r in rows]

    def hmap(kind):
        def op(p, q, i, x):
            omap = (SC.face_obj if kind == "d" else SC.deg_obj)[(p, i)]
            amap = (SC.face_arr if kind == "d" else SC.deg_arr)[(p, i)]
            if x[0] == "o":
                return ("o", omap[x[1]])
            return ("m", tuple(amap[f] for f in x[1]))
        return op

    def vface(p, q, j, x):
        A = SC.levels[p]
        rows = x[1]
        if q == 1:
            return ("o", A.src(rows[0]) if j == 0 else A.tgt(rows[0]))
        if j == 0:
            return ("m", rows[1:])
        if j == q:
            return ("m", rows[:-1])
        return ("m", rows[:j - 1] + (A.comp[(rows[j - 1], rows[j])],) + rows[j:][1:])

    def vdeg(p, q, j, x):
        A = SC.levels[p]
        if q == 0:
            return ("m", (A.identity[x[1]],))
        rows = x[1]
        objs = [A.tgt(rows[0])]
        for f in rows:
            objs.append(A.src(f))
        return ("m", rows[:j] + (A.identity[objs[j]],) + rows[j:])

    return TruncBisimplicialSet.build(cap, cells, hmap("d"), hmap("s"), vface, vdeg,
                                      name=name or f"N {SC.name}")


def double_nerve(C: TwoCategory, cap: int, name="") -> TruncBisimplicialSet:
    return nerve_of_simplicial_category(nerve_two_category(C, cap), cap,
                                        name=name or f"NN {C.name}")


# ---------------------------------------------------------------------------
# geometric nerve


def geometric_nerve(C: TwoCategory, cap: int, budget: int = 10 ** 6, name="") -> TruncSimplicialSet:
    """n-simplices are the normal lax functors [n] -> C, enumerated by
    extending each (n-1)-simplex with a last vertex.

    The tetrahedron condition is checked incrementally while the new
    triangles are chosen, so invalid branches are pruned early.
    """
    spent = [0]

    def charge(k=1):
        spent[0] += k
        if spent[0] > budget:
            raise EnumerationBudgetExceeded(f"budget {budget} exceeded")

    objects = sorted(C.objects, key=repr)
    cells1_by_pair = {}
    for u in C.cells1:
        cells1_by_pair.setdefault(C.cells1[u], []).append(u)
    for v in cells1_by_pair.values():
        v.sort(key=repr)
    cells2_by_pair = {}
    for a in C.cells2:
        cells2_by_pair.setdefault(C.cells2[a], []).append(a)
    for v in cells2_by_pair.values():
        v.sort(key=repr)

    dims = [list(objects)]
    if cap >= 1:
        one = []
        for u in sorted(C.cells1, key=repr):
            s, t = C.cells1[u]
            one.append(make_simplex((t, s), {(0, 1): u}, {}))
        dims.append(one)

    for n in range(2, cap + 1):
        out = []
        for base in dims[n - 1]:
            bobjs = tuple(simplex_object(base, i) for i in range(n))
            for xn in objects:
                # choose the edges x_{i,n}: x_n -> x_i
                edge_choices = [{}]
                for i in range(n):
                    nxt = []
                    for ed in edge_choices:
                        for u in cells1_by_pair.get((xn, bobjs[i]), ()):
                            charge()
                            e2 = dict(ed)
                            e2[i] = u
                            nxt.append(e2)
                    edge_choices = nxt
                    if not edge_choices:
                        break
                for ed in edge_choices:
                    # choose the triangles x_{i,j,n} in lex order with pruning
                    def extend(assign, pairs):
                        if not pairs:
                            objs = bobjs + (xn,)
                            edges = {(i, j): simplex_edge(C, base, i, j)
                                     for (i, j) in _pairs(n) if j < n}
                            for i in range(n):
                                edges[(i, n)] = ed[i]
                            tris = {(i, j, k): simplex_tri(C, base, i, j, k)
                                    for (i, j, k) in _triples(n) if k < n}
                            for (i, j), t in assign.items():
                                tris[(i, j, n)] = t
                            out.append(make_simplex(objs, edges, tris))
                            return
                        (i, j) = pairs[0]
                        src = C.hc1(simplex_edge(C, base, i, j), ed[j])
                        for t in cells2_by_pair.get((src, ed[i]), ()):
                            charge()
                            ok = True
                            for i0 in range(i):
                                # tetrahedron (i0, i, j, n)
                                lhs = C.vc(assign[(i0, i)],
                                           C.hc2(C.id2[simplex_edge(C, base, i0, i)], t))
                                rhs = C.vc(assign[(i0, j)],
                                           C.hc2(simplex_tri(C, base, i0, i, j), C.id2[ed[j]]))
                                if lhs != rhs:
                                    ok = False
                                    break
                            if ok:
                                assign[(i, j)] = t
                                extend(assign, pairs[1:])
                                del assign[(i, j)]

                    extend({}, _pairs(n - 1))
        dims.append(out)

    def face(n, i, x):
        return reindex_simplex(C, x, delta_map(i, n))

    def deg(n, i, x):
        return reindex_simplex(C, x, sigma_map(i, n))

    return TruncSimplicialSet.build(cap, dims, face, deg, name=name or f"Delta {C.name}")


def map_simplex(F: TwoFunctor, s):
    """Push a geometric simplex through a 2-functor."""
    n = simplex_dim(s)
    if n == 0:
        return F.omap[s]
    B = F.src
    objs = tuple(F.omap[simplex_object(s, i)] for i in range(n + 1))
    edges = {(i, j): F.map1[simplex_edge(B, s, i, j)] for (i, j) in _pairs(n)}
    tris = {(i, j, k): F.map2[simplex_tri(B, s, i, j, k)] for (i, j, k) in _triples(n)}
    return make_simplex(objs, edges, tris)


def geometric_nerve_map(F, cap: int, src: TruncSimplicialSet | None = None,
                        tgt: TruncSimplicialSet | None = None,
                        budget: int = 10 ** 6, name="") -> SimplicialMap:
    """Simplicial map induced on geometric nerves by a 2-functor or a normal
    lax functor; simplex families are pushed through the maps, with the
    composite constraints of a lax functor folded into the triangles."""
    if isinstance(F, TwoFunctor):
        from .twocat import two_functor_as_lax
        F = two_functor_as_lax(F)
    B, C = F.src, F.tgt
    src = src if src is not None else geometric_nerve(B, cap, budget)
    tgt = tgt if tgt is not None else geometric_nerve(C, cap, budget)
    mapping = {}
    for n in range(cap + 1):
        for s in src.simplices(n):
            if n == 0:
                y = F.omap[s]
            else:
                objs = tuple(F.omap[simplex_object(s, i)] for i in range(n + 1))
                edges = {(i, j): F.map1[simplex_edge(B, s, i, j)] for (i, j) in _pairs(n)}
                tris = {}
                for (i, j, k) in _triples(n):
                    tris[(i, j, k)] = C.vc(
                        F.map2[simplex_tri(B, s, i, j, k)],
                        F.con[(simplex_edge(B, s, i, j), simplex_edge(B, s, j, k))])
                y = make_simplex(objs, edges, tris)
            if not tgt.has(n, y):
                raise TargetSimplexMissing(f"image of {s!r} in dim {n} is not a simplex")
            mapping[(n, s)] = y
    return SimplicialMap(src, tgt, mapping, name=name or f"Delta {F.name}")


# ---------------------------------------------------------------------------
# cylinder


def cylinder_lax_functor(t: LaxTransformation, name="") -> NormalLaxFunctor:
    """Normal lax functor H: B x [1] -> C restricting to F and G on the ends.

    The [1] factor has its single non-identity arrow tau: 1 -> 0; vertex 1
    carries F and vertex 0 carries G.  A cross morphism (u, tau) goes to
    G(u) o alpha_x in the lax case and to alpha_y o F(u) in the oplax case.
    """
    rep = validate_lax_transformation(t)
    if not rep.ok:
        raise InvalidTransformation(str(rep))
    F, G = t.F, t.G
    B, C = F.src, F.tgt
    D = ordinal(1)
    P = product_with_category(B, D, name=f"{B.name}x[1]")
    tau = (1, 0)
    lax = t.direction == "lax"

    def vertex(d):
        return F if d == 1 else G

    def p1(u, f):
        key = (u, f)
        return key if key in P.cells1 else P.id1[(B.src1(u), D.src(f))]

    omap = {(x, d): vertex(d).omap[x] for x in B.objects for d in (0, 1)}
    map1, map2, con = {}, {}, {}
    for w in P.cells1:
        if P.is_identity1(w):
            x, d = P.src1(w)
            map1[w] = C.id1[vertex(d).omap[x]]
            continue
        u, f = w
        if f == D.identity[1]:
            map1[w] = F.map1[u]
        elif f == D.identity[0]:
            map1[w] = G.map1[u]
        else:
            x, y = B.cells1[u]
            if lax:
                map1[w] = C.hc1(G.map1[u], t.at_obj[x])
            else:
                map1[w] = C.hc1(t.at_obj[y], F.map1[u])
    for a in P.cells2:
        if P.is_identity2(a):
            map2[a] = C.id2[map1[P.src2(a)]]
            continue
        phi, f = a
        u = B.src2(phi)
        x, y = B.cells1[u]
        if f == D.identity[1]:
            map2[a] = F.map2[phi]
        elif f == D.identity[0]:
            map2[a] = G.map2[phi]
        elif lax:
            map2[a] = C.hc2(G.map2[phi], C.id2[t.at_obj[x]])
        else:
            map2[a] = C.hc2(C.id2[t.at_obj[y]], F.map2[phi])
    for (g, f) in P.hcomp1:
        u2, d2 = g if not P.is_identity1(g) else (B.id1[P.src1(g)[0]], D.identity[P.src1(g)[1]])
        u1, d1 = f if not P.is_identity1(f) else (B.id1[P.src1(f)[0]], D.identity[P.src1(f)[1]])
        x = B.src1(u1)
        z = B.tgt1(u2)
        if d2 == tau and d1 == D.identity[1]:
            if lax:
                con[(g, f)] = C.vc(
                    C.hc2(G.con[(u2, u1)], C.id2[t.at_obj[x]]),
                    C.hc2(C.id2[G.map1[u2]], t.at_cell1[u1]))
            else:
                con[(g, f)] = C.hc2(C.id2[t.at_obj[z]], F.con[(u2, u1)])
        elif d2 == D.identity[0] and d1 == tau:
            if lax:
                con[(g, f)] = C.hc2(G.con[(u2, u1)], C.id2[t.at_obj[x]])
            else:
                con[(g, f)] = C.vc(
                    C.hc2(C.id2[t.at_obj[z]], F.con[(u2, u1)]),
                    C.hc2(t.at_cell1[u2], C.id2[F.map1[u1]]))
        elif d2 == D.identity[1] and d1 == D.identity[1]:
            con[(g, f)] = F.con[(u2, u1)]
        elif d2 == D.identity[0] and d1 == D.identity[0]:
            con[(g, f)] = G.con[(u2, u1)]
    return NormalLaxFunctor(P, C, omap, map1, map2, con,
                            name=name or f"cyl {t.name}")


def end_inclusion(B: TwoCategory, P: TwoCategory, d: int) -> TwoFunctor:
    """The 2-functor B -> B x [1] onto vertex d."""
    D = ordinal(1)

    def o(x):
        return (x, d)

    def c1(u):
        return P.id1[(B.src1(u), d)] if B.is_identity1(u) else (u, D.identity[d])

    def c2(a):
        return P.id2[c1(B.src2(a))] if B.is_identity2(a) else (a, D.identity[d])

    return TwoFunctor(B, P, {x: o(x) for x in B.objects},
                      {u: c1(u) for u in B.cells1},
                      {a: c2(a) for a in B.cells2}, name=f"end{d}")
