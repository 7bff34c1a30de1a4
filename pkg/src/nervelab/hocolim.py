"""Homotopy colimits of 2-diagrams of categories, the Borel-style simplicial
category, and the two explicit simplicial bijections that identify the
codiagonal models built from a homotopy colimit with the models built from
the Grothendieck construction.

Both bijections are computed through the same normal form: a p-simplex of
the codiagonal of the nerve of a simplicial category L is freely determined
by the top object A in L_p together with one arrow g_m of L_{p-m} for each
1 <= m <= p, with targets chained by the 0-th face functor of L:

    tgt(g_1) = d_0 A,   tgt(g_m) = d_0 src(g_{m-1}).

The translation rewrites that free data between the two simplicial
categories and re-expands it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BaseNotCategory,
    CapTooSmall,
    NonStrictDiagram,
    FibreNotCategory,
    TargetSimplexMissing,
    ValidationReport,
)
from .grothendieck import GrothendieckCategory, TwoDiagram, grothendieck
from .nerves import (
    SimplicialCategory,
    double_nerve,
    geometric_nerve,
    map_simplex,
    make_simplex,
    nerve_category,
    nerve_of_simplicial_category,
    nerve_two_category,
    reindex_simplex,
    simplex_dim,
    simplex_edge,
    simplex_object,
    simplex_tri,
    _pairs,
    _triples,
)
from .simplicial import SimplicialMap, TruncBisimplicialSet, TruncSimplicialSet
from .twocat import Category, delta_map, id1_of, id2_of, sigma_map, underlying_category


def _check_strict(D: TwoDiagram, need_category_fibres=True):
    for pair, z in D.zeta.items():
        for a, c in z.comp.items():
            x = D.base.src1(pair[1])
            if not D.fibres[x].is_identity1(c):
                raise NonStrictDiagram(f"zeta at {pair!r} is not the identity")
    if need_category_fibres:
        for x, F in D.fibres.items():
            for a in F.cells2:
                if not F.is_identity2(a):
                    raise FibreNotCategory(f"fibre over {x!r} has a non-identity 2-cell")


def hocolim_two_functor(D: TwoDiagram, cap: int, name="") -> SimplicialCategory:
    """Simplicial category with level n the coproduct over object tuples of
    F_{x_0} x C(x_1, x_0) x ... x C(x_n, x_{n-1}).

    The 0-th face twists by the diagram: on arrows it sends (f, a_1, rest)
    to (a_1*_b o u_1* f, rest).  Fibres must be categories and zeta identity;
    the base may be a 2-category.
    """
    _check_strict(D)
    C = D.base

    def fib(x):
        return D.fibres[x]

    levels = []
    level_objs = []
    for n in range(cap + 1):
        if n == 0:
            objs = [(x, a, ()) for x in C.objects for a in fib(x).objects]
        else:
            objs = []
            for (x0, a, us) in level_objs[n - 1]:
                tail = x0 if not us else C.src1(us[-1])
                for u in C.cells1:
                    if C.tgt1(u) != tail:
                        continue
                    objs.append((x0, a, us + (u,)))
        level_objs.append(objs)

        def norm(x0, f, als):
            if fib(x0).is_identity1(f) and all(C.is_identity2(t) for t in als):
                return ("id", (x0, fib(x0).src1(f), tuple(C.src2(t) for t in als)))
            return ("hm", x0, f, tuple(als))

        arrows = {}
        for (x0, a, us) in objs:
            fcands = [f for f in fib(x0).cells1 if fib(x0).src1(f) == a]
            choices = [(f, ()) for f in fcands]
            for u in us:
                choices = [(f, als + (t,)) for (f, als) in choices
                           for t in C.cells2 if C.src2(t) == u]
            for f, als in choices:
                if fib(x0).is_identity1(f) and all(C.is_identity2(t) for t in als):
                    continue
                arrows[("hm", x0, f, als)] = (
                    (x0, a, us),
                    (x0, fib(x0).tgt1(f), tuple(C.tgt2(t) for t in als)))
        comp = {}
        for b, (bs, bt) in arrows.items():
            for a2, (as_, at) in arrows.items():
                if at != bs:
                    continue
                x0 = b[1]
                f = fib(x0).hc1(b[2], a2[2])
                als = tuple(C.vc(t2, t1) for t2, t1 in zip(b[3], a2[3]))
                comp[(b, a2)] = norm(x0, f, als)
        levels.append(Category(objs, arrows, comp, name=f"hocolim_{n}"))

    def arr_data(n, m):
        """(x0, fibre arrow, 2-cell tuple) for any arrow id of level n."""
        if m[0] == "id":
            x0, a, us = m[1]
            return (x0, fib(x0).id1[a], tuple(C.id2[u] for u in us))
        return (m[1], m[2], m[3])

    def norm_arrow(n, x0, f, als):
        if fib(x0).is_identity1(f) and all(C.is_identity2(t) for t in als):
            return ("id", (x0, fib(x0).src1(f), tuple(C.src2(t) for t in als)))
        return ("hm", x0, f, tuple(als))

    def obj_face(n, i, o):
        x0, a, us = o
        if i == 0:
            u = us[0]
            x1 = C.src1(u)
            return (x1, D.pull1[u].omap[a], us[1:])
        if i == n:
            return (x0, a, us[:-1])
        return (x0, a, us[:i - 1] + (C.hc1(us[i - 1], us[i]),) + us[i + 1:])

    def arr_face(n, i, m):
        x0, f, als = arr_data(n, m)
        _, a, us = levels[n].arrows[m][0]
        if i == 0:
            u = us[0]
            t = als[0]
            x1 = C.src1(u)
            b = fib(x0).tgt1(f)
            f1 = fib(x1).hc1(D.pull2[t].comp[b], D.pull1[u].map1[f])
            return norm_arrow(n - 1, x1, f1, als[1:])
        if i == n:
            return norm_arrow(n - 1, x0, f, als[:-1])
        merged = als[:i - 1] + (C.hc2(als[i - 1], als[i]),) + als[i + 1:]
        return norm_arrow(n - 1, x0, f, merged)

    def obj_deg(n, i, o):
        x0, a, us = o
        if i == 0:
            return (x0, a, (C.id1[x0],) + us)
        objs = [x0]
        for u in us:
            objs.append(C.src1(u))
        return (x0, a, us[:i] + (C.id1[objs[i]],) + us[i:])

    def arr_deg(n, i, m):
        x0, f, als = arr_data(n, m)
        _, a, us = levels[n].arrows[m][0]
        objs = [x0]
        for u in us:
            objs.append(C.src1(u))
        new = als[:i] + (C.id2[C.id1[objs[i]]],) + als[i:]
        return norm_arrow(n + 1, x0, f, new)

    face_obj, face_arr, deg_obj, deg_arr = {}, {}, {}, {}
    for n in range(1, cap + 1):
        for i in range(n + 1):
            face_obj[(n, i)] = {o: obj_face(n, i, o) for o in levels[n].objects}
            face_arr[(n, i)] = {m: arr_face(n, i, m) for m in levels[n].arrows}
    for n in range(cap):
        for i in range(n + 1):
            deg_obj[(n, i)] = {o: obj_deg(n, i, o) for o in levels[n].objects}
            deg_arr[(n, i)] = {m: arr_deg(n, i, m) for m in levels[n].arrows}
    return SimplicialCategory(cap, levels, face_obj, face_arr, deg_obj, deg_arr,
                              name=name or f"hocolim {D.name}")


# ---------------------------------------------------------------------------
# codiagonal normal form


def _wbar_free_data(t):
    """(top object, [last arrow of each component]) of a codiagonal tuple of
    a transposed nerve-of-simplicial-category."""
    A = t[0][1]
    gs = [t[m][1][-1] for m in range(1, len(t))]
    return A, gs


def _wbar_expand(p, A, gs, face_arr):
    """Rebuild the codiagonal tuple from its free data; face_arr(q) is the
    0-th face functor on arrows of level q."""
    comps = [("o", A)]
    rows = []
    for m in range(1, p + 1):
        rows = [face_arr(p - m + 1)[r] for r in rows]
        rows.append(gs[m - 1])
        comps.append(("m", tuple(rows)))
    return tuple(comps)


@dataclass
class ThomasonComparison:
    forward: SimplicialMap
    backward: SimplicialMap
    w_source: TruncSimplicialSet
    w_target: TruncSimplicialSet

    def round_trip_exact(self) -> bool:
        for n in range(self.w_source.cap + 1):
            for x in self.w_source.simplices(n):
                if self.backward.apply(n, self.forward.apply(n, x)) != x:
                    return False
            for y in self.w_target.simplices(n):
                if self.forward.apply(n, self.backward.apply(n, y)) != y:
                    return False
        return True


def thomason_iso_i(D: TwoDiagram, cap: int, budget=10 ** 6,
                   G: GrothendieckCategory | None = None) -> ThomasonComparison:
    """Dimensionwise bijection between the codiagonal of N hocolim and the
    codiagonal of the double nerve of the Grothendieck construction.

    The chained arrows of the first normal form carry fibre arrows
    f_m: a_m -> u* a_{m-1}; the corresponding string of 1-cells of the total
    2-category collects the corrected arrows, with each base 2-cell acting
    through its pullback component.
    """
    if cap < 1:
        raise CapTooSmall("need cap >= 1")
    _check_strict(D)
    C = D.base
    G = G if G is not None else grothendieck(D)
    A2 = G.cat
    HC = hocolim_two_functor(D, cap)
    SC2 = nerve_two_category(A2, cap)
    S1 = nerve_of_simplicial_category(HC, cap).transpose(name="S1^T")
    S2 = nerve_of_simplicial_category(SC2, cap).transpose(name="S2^T")
    from .simplicial import codiagonal_wbar
    W1 = codiagonal_wbar(S1, name="Wbar S1")
    W2 = codiagonal_wbar(S2, name="Wbar S2")

    def fib(x):
        return D.fibres[x]

    def hoc_arr_data(q, m):
        if m[0] == "id":
            x0, a, us = m[1]
            return (x0, fib(x0).id1[a], tuple(C.id2[u] for u in us))
        return (m[1], m[2], m[3])

    def groth_c1_data(U):
        if isinstance(U, tuple) and U[0] == "id":
            a, x = U[1]
            return (fib(x).id1[a], C.id1[x])
        return U

    def groth_norm_c1(f, u):
        y = C.src1(u)
        if C.is_identity1(u) and fib(y).is_identity1(f):
            return id1_of((fib(y).src1(f), y))
        return (f, u)

    def groth_c2_data(Phi):
        if isinstance(Phi, tuple) and Phi[0] == "id2":
            f, u = groth_c1_data(Phi[1])
            return (fib(C.src1(u)).id2[f], C.id2[u], f)
        return Phi

    def groth_norm_c2(phi, alpha, f):
        y = C.src1(C.src2(alpha))
        if C.is_identity2(alpha) and fib(y).is_identity2(phi):
            return id2_of(groth_norm_c1(f, C.src2(alpha)))
        return (phi, alpha, f)

    def nerve_norm_arrow(comps, srcs):
        if all(A2.is_identity2(c) for c in comps):
            return ("id", tuple(srcs))
        return tuple(comps)

    def forward_tuple(p, t):
        if p == 0:
            x0, a, _ = t[0][1]
            return (("o", (a, x0)),)
        A, gs = _wbar_free_data(t)
        x0, a0, us = A
        xs = [x0] + [C.src1(u) for u in us]
        data = [hoc_arr_data(p - m, gs[m - 1]) for m in range(1, p + 1)]
        a = [a0] + [fib(xs[m]).src1(data[m - 1][1]) for m in range(1, p + 1)]
        # chains of corrected 1-cells and fibre arrows per string position
        u_chain = {}
        f_chain = {}
        for j in range(1, p + 1):
            u_chain[(j, 0)] = us[j - 1]
            for m in range(1, j):
                u_chain[(j, m)] = C.src2(data[m - 1][2][j - m - 1])
            f_chain[(j, j - 1)] = data[j - 1][1]
            for m in range(j - 1, 0, -1):
                alpha = data[m - 1][2][j - m - 1]
                f_chain[(j, m - 1)] = fib(xs[j]).hc1(
                    D.pull2[alpha].comp[a[j - 1]], f_chain[(j, m)])
        H = {j: groth_norm_c1(f_chain[(j, 0)], u_chain[(j, 0)]) for j in range(1, p + 1)}
        Astr = tuple(H[j] for j in range(1, p + 1))
        gs2 = []
        for m in range(1, p + 1):
            if m == p:
                # level-0 arrows are identities at the last total object
                gs2.append(("id", (a[p], xs[p])))
                continue
            comps = []
            srcs = []
            for s in range(1, p - m + 1):
                j = m + s
                alpha = data[m - 1][2][s - 1]
                srcs.append(groth_norm_c1(f_chain[(j, m)], u_chain[(j, m)]))
                phi = fib(xs[j]).id2[f_chain[(j, m - 1)]]
                comps.append(groth_norm_c2(phi, alpha, f_chain[(j, m)]))
            gs2.append(nerve_norm_arrow(comps, srcs))
        return _wbar_expand(p, Astr, gs2, lambda q: SC2.face_arr[(q, 0)])

    def level_components(g, q):
        """The q-tuple of 2-cells of an arrow of the nerve level category."""
        if g[0] == "id":
            return tuple(A2.id2[c] for c in g[1])
        return g

    def backward_tuple(p, t):
        if p == 0:
            a, x0 = t[0][1]
            return (("o", (x0, a, ())),)
        A, gs = _wbar_free_data(t)
        Hs = list(A)
        data = [[groth_c2_data(Phi) for Phi in level_components(gs[m - 1], p - m)]
                if p - m >= 1 else [] for m in range(1, p + 1)]
        f_top = {}
        u_top = {}
        for j in range(1, p + 1):
            fj, uj = groth_c1_data(Hs[j - 1])
            f_top[(j, 0)], u_top[(j, 0)] = fj, uj
        for m in range(1, p + 1):
            for s in range(1, p - m + 1):
                j = m + s
                _, alpha, f = data[m - 1][s - 1]
                f_top[(j, m)] = f
                u_top[(j, m)] = C.src2(alpha)
        us = tuple(u_top[(j, 0)] for j in range(1, p + 1))
        xs = [C.tgt1(us[0])] + [C.src1(u) for u in us]
        a0 = A2.cells1[Hs[0]][1][0]
        A1 = (xs[0], a0, us)
        gs1 = []
        for m in range(1, p + 1):
            f = f_top[(m, m - 1)]
            als = tuple(data[m - 1][s - 1][1] for s in range(1, p - m + 1))
            if fib(xs[m]).is_identity1(f) and all(C.is_identity2(t) for t in als):
                gs1.append(("id", (xs[m], fib(xs[m]).src1(f),
                                   tuple(C.src2(t) for t in als))))
            else:
                gs1.append(("hm", xs[m], f, als))
        return _wbar_expand(p, A1, gs1, lambda q: HC.face_arr[(q, 0)])

    fwd = {}
    for p in range(cap + 1):
        for t in W1.simplices(p):
            image = forward_tuple(p, t)
            if not W2.has(p, image):
                raise TargetSimplexMissing(f"forward image missing in dim {p}")
            fwd[(p, t)] = image
    bwd = {}
    for p in range(cap + 1):
        for t in W2.simplices(p):
            image = backward_tuple(p, t)
            if not W1.has(p, image):
                raise TargetSimplexMissing(f"backward image missing in dim {p}")
            bwd[(p, t)] = image
    return ThomasonComparison(SimplicialMap(W1, W2, fwd, name="thomason-i"),
                              SimplicialMap(W2, W1, bwd, name="thomason-i-inv"),
                              W1, W2)


# ---------------------------------------------------------------------------
# diagrams of 2-categories over a category base


def hocolim_diagram_of_2cats(D: TwoDiagram, cap: int, budget=10 ** 6,
                             name="") -> TruncBisimplicialSet:
    """Bisimplicial set with (p, q)-cells the pairs (y, x) of a base nerve
    q-simplex x and a geometric p-simplex y of the fibre over the first
    vertex; the 0-th vertical face pulls y back along the first base edge."""
    C = D.base
    for a in C.cells2:
        if not C.is_identity2(a):
            raise BaseNotCategory(f"base 2-cell {a!r} is not an identity")
    _check_strict(D, need_category_fibres=False)
    Cb = underlying_category(C)
    NB = nerve_category(Cb, cap)
    fibre_nerves = {z: geometric_nerve(D.fibres[z], cap, budget=budget)
                    for z in C.objects}

    def first_vertex(x, q):
        return simplex_object(x, 0)

    def cells(p, q):
        out = []
        for x in NB.simplices(q):
            z = first_vertex(x, q)
            for y in fibre_nerves[z].simplices(p):
                out.append((y, x))
        return out

    def hface(p, q, i, c):
        y, x = c
        z = first_vertex(x, q)
        return (reindex_simplex(D.fibres[z], y, delta_map(i, p)), x)

    def hdeg(p, q, i, c):
        y, x = c
        z = first_vertex(x, q)
        return (reindex_simplex(D.fibres[z], y, sigma_map(i, p)), x)

    def vface(p, q, j, c):
        y, x = c
        if j == 0:
            z = first_vertex(x, q)
            edge = simplex_edge(C, x, 0, 1)
            return (map_simplex(D.pull1[edge], y), NB.face(q, 0, x))
        return (y, NB.face(q, j, x))

    def vdeg(p, q, j, c):
        y, x = c
        return (y, NB.degeneracy(q, j, x))

    return TruncBisimplicialSet.build(cap, cells, hface, hdeg, vface, vdeg,
                                      name=name or f"hocolim-2cat {D.name}")


@dataclass
class CrossedLaxFunctor:
    """Fibrewise lax-functor data indexed by a base nerve simplex."""

    diagram: TwoDiagram
    base_simplex: object
    objects: dict     # i -> fibre object over x_i
    edges: dict       # (i, j) -> 1-cell y'_{ij}: y'_j -> x_{ij}* y'_i
    triangles: dict   # (i, j, k) -> 2-cell in the fibre over x_k


def validate_crossed(Y: CrossedLaxFunctor) -> ValidationReport:
    rep = ValidationReport(subject="crossed lax functor")
    D = Y.diagram
    C = D.base
    x = Y.base_simplex
    p = simplex_dim(x)

    def pull(i, j):
        return D.pull1[simplex_edge(C, x, i, j)]

    def edge(i, j):
        if i == j:
            return D.fibres[simplex_object(x, i)].id1[Y.objects[i]]
        return Y.edges[(i, j)]

    def tri(i, j, k):
        F = D.fibres[simplex_object(x, k)]
        if i == j:
            return F.id2[edge(i, k)]
        if j == k:
            return F.id2[edge(i, j)]
        return Y.triangles[(i, j, k)]

    for (i, j) in _pairs(p):
        F = D.fibres[simplex_object(x, j)]
        want = (Y.objects[j], pull(i, j).omap[Y.objects[i]])
        if F.cells1.get(Y.edges[(i, j)]) != want:
            rep.add("BoundaryMismatch", "edge has wrong boundary", (i, j))
    if not rep.ok:
        return rep
    for (i, j, k) in _triples(p):
        F = D.fibres[simplex_object(x, k)]
        src = F.hcomp1.get((pull(j, k).map1[edge(i, j)], edge(j, k)))
        if F.cells2.get(Y.triangles[(i, j, k)]) != (src, edge(i, k)):
            rep.add("BoundaryMismatch", "triangle has wrong boundary", (i, j, k))
    if not rep.ok:
        return rep
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            for k in range(j + 1, p + 1):
                for l in range(k + 1, p + 1):
                    F = D.fibres[simplex_object(x, l)]
                    lhs = F.vcomp.get((tri(i, k, l),
                                       F.hcomp2.get((pull(k, l).map2[tri(i, j, k)],
                                                     F.id2[edge(k, l)]))))
                    rhs = F.vcomp.get((tri(i, j, l),
                                       F.hcomp2.get((F.id2[pull(j, l).map1[edge(i, j)]],
                                                     tri(j, k, l)))))
                    if lhs is None or lhs != rhs:
                        rep.add("CrossedSquareViolation", "square fails", (i, j, k, l))
    return rep


def thomason_iso_ii(D: TwoDiagram, cap: int, budget=10 ** 6,
                    G: GrothendieckCategory | None = None,
                    audit_crossed=True) -> ThomasonComparison:
    """Dimensionwise bijection between the codiagonal of the fibrewise nerve
    and the geometric nerve of the Grothendieck construction.

    A codiagonal tuple ((y^0, x^0), ..., (y^p, x^p)) is determined by the
    crossed family y'_i = y^i_i, y'_{ij} = y^j_{ij}, y'_{ijk} = y^k_{ijk}
    over x = x^0, and conversely y^m is the x_{.,m}-pullback of the family.
    """
    if cap < 1:
        raise CapTooSmall("need cap >= 1")
    C = D.base
    G = G if G is not None else grothendieck(D)
    A2 = G.cat
    S = hocolim_diagram_of_2cats(D, cap, budget)
    from .simplicial import codiagonal_wbar
    W = codiagonal_wbar(S, name="Wbar S")
    DG = geometric_nerve(A2, cap, budget=budget)

    def fib(x):
        return D.fibres[x]

    def groth_c1_data(U):
        if isinstance(U, tuple) and U[0] == "id":
            a, x = U[1]
            return (fib(x).id1[a], C.id1[x])
        return U

    def groth_norm_c1(f, u):
        y = C.src1(u)
        if C.is_identity1(u) and fib(y).is_identity1(f):
            return id1_of((fib(y).src1(f), y))
        return (f, u)

    def groth_c2_data(Phi):
        if isinstance(Phi, tuple) and Phi[0] == "id2":
            f, u = groth_c1_data(Phi[1])
            return (fib(C.src1(u)).id2[f], C.id2[u], f)
        return Phi

    def groth_norm_c2(phi, alpha, f):
        y = C.src1(C.src2(alpha))
        if C.is_identity2(alpha) and fib(y).is_identity2(phi):
            return id2_of(groth_norm_c1(f, C.src2(alpha)))
        return (phi, alpha, f)

    def forward_tuple(p, t):
        x = t[0][1]
        if p == 0:
            y0 = t[0][0]
            return (y0, x)
        xs = [simplex_object(x, i) for i in range(p + 1)]
        objs = []
        edges = {}
        tris = {}
        crossed_objects = {}
        crossed_edges = {}
        crossed_tris = {}
        for i in range(p + 1):
            yi = t[i][0]
            crossed_objects[i] = simplex_object(yi, i)
            objs.append((crossed_objects[i], xs[i]))
        for (i, j) in _pairs(p):
            yj = t[j][0]
            crossed_edges[(i, j)] = simplex_edge(fib(xs[j]), yj, i, j)
            edges[(i, j)] = groth_norm_c1(crossed_edges[(i, j)],
                                          simplex_edge(C, x, i, j))
        for (i, j, k) in _triples(p):
            yk = t[k][0]
            crossed_tris[(i, j, k)] = simplex_tri(fib(xs[k]), yk, i, j, k)
            src_f, _ = groth_c1_data(A2.hc1(edges[(i, j)], edges[(j, k)]))
            tris[(i, j, k)] = groth_norm_c2(crossed_tris[(i, j, k)],
                                            C.id2[simplex_edge(C, x, i, k)], src_f)
        if audit_crossed and p >= 1:
            Y = CrossedLaxFunctor(D, x, crossed_objects, crossed_edges, crossed_tris)
            rep = validate_crossed(Y)
            if not rep.ok:
                raise TargetSimplexMissing(f"crossed family invalid: {rep}")
        return make_simplex(tuple(objs), edges, tris)

    def backward_tuple(p, s):
        if p == 0:
            a, x0 = s
            return ((a, x0),)
        objs = [simplex_object(s, i) for i in range(p + 1)]
        xs = [ob[1] for ob in objs]
        x_edges = {}
        for (i, j) in _pairs(p):
            _, u = groth_c1_data(simplex_edge(A2, s, i, j))
            x_edges[(i, j)] = u
        x = make_simplex(tuple(xs), x_edges,
                         {(i, j, k): C.id2[x_edges[(i, k)]] for (i, j, k) in _triples(p)})
        yprime_obj = {i: objs[i][0] for i in range(p + 1)}
        yprime_edge = {}
        for (i, j) in _pairs(p):
            f, _ = groth_c1_data(simplex_edge(A2, s, i, j))
            yprime_edge[(i, j)] = f
        yprime_tri = {}
        for (i, j, k) in _triples(p):
            phi, _, _ = groth_c2_data(simplex_tri(A2, s, i, j, k))
            yprime_tri[(i, j, k)] = phi
        comps = []
        for m in range(p + 1):
            yobjs = tuple(D.pull1[simplex_edge(C, x, i, m)].omap[yprime_obj[i]]
                          for i in range(m + 1))
            yedges = {(i, j): D.pull1[simplex_edge(C, x, j, m)].map1[yprime_edge[(i, j)]]
                      for (i, j) in _pairs(m)}
            ytris = {(i, j, k): D.pull1[simplex_edge(C, x, k, m)].map2[yprime_tri[(i, j, k)]]
                     for (i, j, k) in _triples(m)}
            ym = yobjs[0] if m == 0 else make_simplex(yobjs, yedges, ytris)
            xm_simplex = reindex_simplex(C, x, tuple(range(m, p + 1)))
            comps.append((ym, xm_simplex))
        return tuple(comps)

    fwd = {}
    for p in range(cap + 1):
        for t in W.simplices(p):
            image = forward_tuple(p, t)
            if not DG.has(p, image):
                raise TargetSimplexMissing(f"forward image missing in dim {p}")
            fwd[(p, t)] = image
    bwd = {}
    for p in range(cap + 1):
        for s in DG.simplices(p):
            image = backward_tuple(p, s)
            if not W.has(p, image):
                raise TargetSimplexMissing(f"backward image missing in dim {p}")
            bwd[(p, s)] = image
    return ThomasonComparison(SimplicialMap(W, DG, fwd, name="thomason-ii"),
                              SimplicialMap(DG, W, bwd, name="thomason-ii-inv"),
                              W, DG)
