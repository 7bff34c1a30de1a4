"""Homotopy-fibre and comma 2-categories of a 2-functor, and the structural
2-functors between them (restriction, embedding, retraction, relabeling).

The fibre of F: B -> C at a geometric q-simplex z of C has

* objects ("fo", x, v) with v a (q+1)-simplex witness: over-side when the
  face away from vertex 0 is z and v_0 = F(x), under-side dually;
* 1-cells ("fm", u, y) with y a (q+2)-simplex whose two inner faces are the
  source and target witnesses and whose extreme edge is F(u);
* 2-cells ("fd", a, src, tgt) with a a 2-cell of B satisfying the triangle
  conditions against the stored witness triangles.

Everything is materialized by exhaustive enumeration against the geometric
nerve of the target, so each witness is a validated simplex by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidSimplex, UnknownCell, UnknownObject
from .nerves import (
    geometric_nerve,
    geometric_nerve_map,
    make_simplex,
    reindex_simplex,
    simplex_dim,
    simplex_edge,
    simplex_object,
    simplex_tri,
    _pairs,
    _triples,
)
from .simplicial import TruncSimplicialSet
from .twocat import (
    LaxTransformation,
    TwoCategory,
    TwoFunctor,
    check_monotone,
    compose_two_functors,
    delta_map,
    id1_of,
    id2_of,
    identity_two_functor,
    shift_monotone,
    sigma_map,
    two_functor_as_lax,
)


def vertex_simplex(z):
    """An object of C viewed as a 0-simplex of its geometric nerve."""
    return z


def edge_simplex(C: TwoCategory, u):
    """A 1-cell of C viewed as a 1-simplex of its geometric nerve."""
    return make_simplex((C.tgt1(u), C.src1(u)), {(0, 1): u}, {})


def _witness_face(C, v, side, q):
    """The face of the witness that must match the base simplex z."""
    if side == "over":
        return reindex_simplex(C, v, delta_map(0, q + 1))
    return reindex_simplex(C, v, delta_map(q + 1, q + 1))


def _morphism_witness(F: TwoFunctor, side, q, v_src, v_tgt, u, ts):
    """Assemble the (q+2)-simplex witness of a fibre morphism."""
    C = F.tgt
    if side == "over":
        objs = (simplex_object(v_tgt, 0), simplex_object(v_src, 0)) + \
            tuple(simplex_object(v_src, i + 1) for i in range(q + 1))
        edges = {(0, 1): F.map1[u]}
        for i in range(q + 1):
            edges[(0, i + 2)] = simplex_edge(C, v_tgt, 0, i + 1)
            edges[(1, i + 2)] = simplex_edge(C, v_src, 0, i + 1)
        for i in range(q + 1):
            for j in range(i + 1, q + 1):
                edges[(i + 2, j + 2)] = simplex_edge(C, v_src, i + 1, j + 1)
        tris = {}
        for i in range(q + 1):
            tris[(0, 1, i + 2)] = ts[i]
        for i in range(q + 1):
            for j in range(i + 1, q + 1):
                tris[(0, i + 2, j + 2)] = simplex_tri(C, v_tgt, 0, i + 1, j + 1)
                tris[(1, i + 2, j + 2)] = simplex_tri(C, v_src, 0, i + 1, j + 1)
        for (a, b, c) in _triples(q):
            tris[(a + 2, b + 2, c + 2)] = simplex_tri(C, v_src, a + 1, b + 1, c + 1)
        return make_simplex(objs, edges, tris)
    # under side
    objs = tuple(simplex_object(v_src, i) for i in range(q + 1)) + \
        (simplex_object(v_tgt, q + 1), simplex_object(v_src, q + 1))
    edges = {(q + 1, q + 2): F.map1[u]}
    for (i, j) in _pairs(q):
        edges[(i, j)] = simplex_edge(C, v_src, i, j)
    for i in range(q + 1):
        edges[(i, q + 1)] = simplex_edge(C, v_tgt, i, q + 1)
        edges[(i, q + 2)] = simplex_edge(C, v_src, i, q + 1)
    tris = {}
    for (a, b, c) in _triples(q):
        tris[(a, b, c)] = simplex_tri(C, v_src, a, b, c)
    for (i, j) in _pairs(q):
        tris[(i, j, q + 1)] = simplex_tri(C, v_tgt, i, j, q + 1)
        tris[(i, j, q + 2)] = simplex_tri(C, v_src, i, j, q + 1)
    for i in range(q + 1):
        tris[(i, q + 1, q + 2)] = ts[i]
    return make_simplex(objs, edges, tris)


def _witness_triangles(C, side, q, y):
    """Extract the free triangle family from a morphism witness."""
    if side == "over":
        return tuple(simplex_tri(C, y, 0, 1, i + 2) for i in range(q + 1))
    return tuple(simplex_tri(C, y, i, q + 1, q + 2) for i in range(q + 1))


def _identity_witness(C, side, q, v):
    sig = sigma_map(0, q + 1) if side == "over" else sigma_map(q + 1, q + 1)
    return reindex_simplex(C, v, sig)


class FibreCategory:
    """A simplex fibre together with its bookkeeping maps."""

    def __init__(self, cat, base_simplex, side, witnesses, morphism_data):
        self.cat = cat                  # the TwoCategory
        self.base_simplex = base_simplex
        self.side = side
        self.witnesses = witnesses      # object id -> (x, v)
        self.morphism_data = morphism_data  # 1-cell id -> (u, y)


def simplex_fibre(F: TwoFunctor, z, side="over", budget=10 ** 6, name="") -> FibreCategory:
    """The fibre 2-category of F at a geometric simplex z of the target."""
    if side not in ("over", "under"):
        raise ValueError("side must be 'over' or 'under'")
    B, C = F.src, F.tgt
    q = simplex_dim(z)
    nerve = geometric_nerve(C, q + 2, budget=budget)
    if not nerve.has(q, z):
        raise InvalidSimplex(f"{z!r} is not a {q}-simplex of {C.name!r}")

    objects = []
    witnesses = {}
    for v in nerve.simplices(q + 1):
        if _witness_face(C, v, side, q) != z:
            continue
        anchor = simplex_object(v, 0 if side == "over" else q + 1)
        for x in B.objects:
            if F.omap[x] == anchor:
                ob = ("fo", x, v)
                objects.append(ob)
                witnesses[ob] = (x, v)

    valid = set(nerve.simplices(q + 2))
    cells1 = {}
    morphism_data = {}
    id_witness = {ob: _identity_witness(C, side, q, v) for ob, (x, v) in witnesses.items()}

    def c1_id(ob, u, y):
        x, v = witnesses[ob]
        return id1_of(ob) if u == B.id1[x] and y == id_witness[ob] else ("fm", u, y)

    for src_ob in objects:
        x, v = witnesses[src_ob]
        for tgt_ob in objects:
            x2, v2 = witnesses[tgt_ob]
            for u in B.hom(x, x2):
                choices = [()]
                for i in range(q + 1):
                    if side == "over":
                        s = C.hc1(F.map1[u], simplex_edge(C, v, 0, i + 1))
                        t = simplex_edge(C, v2, 0, i + 1)
                    else:
                        s = C.hc1(simplex_edge(C, v2, i, q + 1), F.map1[u])
                        t = simplex_edge(C, v, i, q + 1)
                    choices = [c + (a,) for c in choices for a in C.cells2_between(s, t)]
                for ts in choices:
                    y = _morphism_witness(F, side, q, v, v2, u, ts)
                    if y not in valid:
                        continue
                    m = c1_id(src_ob, u, y)
                    if m in cells1 or (isinstance(m, tuple) and m[0] == "id"):
                        continue
                    cells1[m] = (src_ob, tgt_ob)
                    morphism_data[m] = (u, y)

    all_c1 = dict(cells1)
    for ob, (x, v) in witnesses.items():
        i = id1_of(ob)
        all_c1[i] = (ob, ob)
        morphism_data[i] = (B.id1[x], id_witness[ob])

    def tri_of(m):
        return _witness_triangles(C, side, q, morphism_data[m][1])

    def triangle_ok(a, m_src, m_tgt):
        u, _ = morphism_data[m_src]
        ts, ts2 = tri_of(m_src), tri_of(m_tgt)
        _, v2 = witnesses[all_c1[m_src][1]]
        _, v1 = witnesses[all_c1[m_src][0]]
        for i in range(q + 1):
            if side == "over":
                got = C.vc(ts2[i], C.hc2(F.map2[a], C.id2[simplex_edge(C, v1, 0, i + 1)]))
            else:
                got = C.vc(ts2[i], C.hc2(C.id2[simplex_edge(C, v2, i, q + 1)], F.map2[a]))
            if got != ts[i]:
                return False
        return True

    cells2 = {}
    deformation_data = {}
    for m1, (s1, t1) in all_c1.items():
        u1 = morphism_data[m1][0]
        for m2, (s2, t2) in all_c1.items():
            if (s1, t1) != (s2, t2):
                continue
            u2 = morphism_data[m2][0]
            for a in B.cells2_between(u1, u2):
                if not triangle_ok(a, m1, m2):
                    continue
                if m1 == m2 and B.is_identity2(a):
                    continue
                d = ("fd", a, m1, m2)
                cells2[d] = (m1, m2)
                deformation_data[d] = a

    all_c2 = dict(cells2)
    for m in all_c1:
        i = id2_of(m)
        all_c2[i] = (m, m)
        deformation_data[i] = B.id2[morphism_data[m][0]]

    def norm_c1(src_ob, u, y):
        return c1_id(src_ob, u, y)

    def norm_c2(a, m_src, m_tgt):
        if m_src == m_tgt and B.is_identity2(a):
            return id2_of(m_src)
        return ("fd", a, m_src, m_tgt)

    hcomp1 = {}
    for m2, (s2, t2) in all_c1.items():
        u2, y2 = morphism_data[m2]
        for m1, (s1, t1) in all_c1.items():
            if t1 != s2:
                continue
            u1, y1 = morphism_data[m1]
            uu = B.hc1(u2, u1)
            t_a, t_b = tri_of(m1), tri_of(m2)
            ts = []
            for i in range(q + 1):
                if side == "over":
                    ts.append(C.vc(t_b[i], C.hc2(C.id2[F.map1[u2]], t_a[i])))
                else:
                    ts.append(C.vc(t_a[i], C.hc2(t_b[i], C.id2[F.map1[u1]])))
            y = _morphism_witness(F, side, q, witnesses[s1][1], witnesses[t2][1], uu, tuple(ts))
            hcomp1[(m2, m1)] = norm_c1(s1, uu, y)

    vcomp = {}
    for d2, (m2s, m2t) in all_c2.items():
        for d1, (m1s, m1t) in all_c2.items():
            if m1t != m2s:
                continue
            a = B.vc(deformation_data[d2], deformation_data[d1])
            vcomp[(d2, d1)] = norm_c2(a, m1s, m2t)

    hcomp2 = {}
    for d2, (m2s, m2t) in all_c2.items():
        for d1, (m1s, m1t) in all_c2.items():
            if all_c1[m1s][1] != all_c1[m2s][0]:
                continue
            a = B.hc2(deformation_data[d2], deformation_data[d1])
            hcomp2[(d2, d1)] = norm_c2(a, hcomp1[(m2s, m1s)], hcomp1[(m2t, m1t)])

    cat = TwoCategory(objects, cells1, cells2, hcomp1, vcomp, hcomp2,
                      name=name or f"fibre[{side}] {F.name}")
    return FibreCategory(cat, z, side, witnesses, morphism_data)


def fibre_over(F: TwoFunctor, z, budget=10 ** 6, name="") -> FibreCategory:
    F.tgt.require_object(z)
    return simplex_fibre(F, vertex_simplex(z), "over", budget,
                         name=name or f"{z}//{F.name}")


def fibre_under(F: TwoFunctor, z, budget=10 ** 6, name="") -> FibreCategory:
    F.tgt.require_object(z)
    return simplex_fibre(F, vertex_simplex(z), "under", budget,
                         name=name or f"{F.name}//{z}")


def comma_under_object(C: TwoCategory, z, budget=10 ** 6) -> FibreCategory:
    """The comma 2-category z//C of objects under z."""
    return fibre_over(identity_two_functor(C), z, budget, name=f"{z}//{C.name}")


def comma_over_object(C: TwoCategory, z, budget=10 ** 6) -> FibreCategory:
    """The comma 2-category C//z of objects over z."""
    return fibre_under(identity_two_functor(C), z, budget, name=f"{C.name}//{z}")


# ---------------------------------------------------------------------------
# structural 2-functors


def _map_from_cells(src: FibreCategory, tgt: FibreCategory, obj_fn, c1_fn, name=""):
    """Assemble a TwoFunctor between fibre categories from cellwise rules."""
    A, Bc = src.cat, tgt.cat
    omap = {ob: obj_fn(ob) for ob in A.objects}
    map1 = {}
    for m in A.cells1:
        if A.is_identity1(m):
            map1[m] = Bc.id1[omap[A.src1(m)]]
        else:
            map1[m] = c1_fn(m)
    map2 = {}
    for d in A.cells2:
        if A.is_identity2(d):
            map2[d] = Bc.id2[map1[A.src2(d)]]
        else:
            _, a, m1, m2 = d
            map2[d] = _norm_fibre_c2(Bc, a, map1[m1], map1[m2])
    return TwoFunctor(A, Bc, omap, map1, map2, name=name)


def _norm_fibre_c2(cat: TwoCategory, a, m1, m2):
    d = ("fd", a, m1, m2)
    if d in cat.cells2:
        return d
    return cat.id2[m1]


def w_star(F: TwoFunctor, w, fib0: FibreCategory | None = None,
           fib1: FibreCategory | None = None, budget=10 ** 6) -> TwoFunctor:
    """Relabeling 2-functor w*: z0//F -> z1//F along w: z1 -> z0."""
    C = F.tgt
    if w not in C.cells1:
        raise UnknownCell(f"{w!r} is not a 1-cell of {C.name!r}")
    z1, z0 = C.cells1[w]
    fib0 = fib0 if fib0 is not None else fibre_over(F, z0, budget)
    fib1 = fib1 if fib1 is not None else fibre_over(F, z1, budget)

    def on_obj(ob):
        x, v = fib0.witnesses[ob]
        edge = simplex_edge(C, v, 0, 1)
        v2 = make_simplex((simplex_object(v, 0), z1), {(0, 1): C.hc1(edge, w)}, {})
        return ("fo", x, v2)

    def on_c1(m):
        u, y = fib0.morphism_data[m]
        beta = simplex_tri(C, y, 0, 1, 2)
        src_ob = on_obj(fib0.cat.src1(m))
        x, v = fib1.witnesses[src_ob]
        x2, v2 = fib1.witnesses[on_obj(fib0.cat.tgt1(m))]
        ts = (C.hc2(beta, C.id2[w]),)
        y2 = _morphism_witness(F, "over", 0, v, v2, u, ts)
        if u == F.src.id1[x] and y2 == _identity_witness(C, "over", 0, v):
            return fib1.cat.id1[src_ob]
        return ("fm", u, y2)

    return _map_from_cells(fib0, fib1, on_obj, on_c1, name=f"{w}*")


def xi_star(F: TwoFunctor, z, xi, fib_n: FibreCategory | None = None,
            fib_q: FibreCategory | None = None, budget=10 ** 6) -> TwoFunctor:
    """Restriction 2-functor z//F -> (z o xi)//F for monotone xi: [q] -> [n]."""
    C = F.tgt
    n = simplex_dim(z)
    check_monotone(xi, n)
    fib_n = fib_n if fib_n is not None else simplex_fibre(F, z, "over", budget)
    zxi = reindex_simplex(C, z, xi)
    fib_q = fib_q if fib_q is not None else simplex_fibre(F, zxi, "over", budget)
    xi1 = shift_monotone(xi, 1, n)
    xi2 = shift_monotone(xi, 2, n)

    def on_obj(ob):
        x, v = fib_n.witnesses[ob]
        return ("fo", x, reindex_simplex(C, v, xi1))

    def on_c1(m):
        u, y = fib_n.morphism_data[m]
        y2 = reindex_simplex(C, y, xi2)
        src_ob = on_obj(fib_n.cat.src1(m))
        x, v = fib_q.witnesses[src_ob]
        if u == F.src.id1[x] and y2 == _identity_witness(C, "over", len(xi) - 1, v):
            return fib_q.cat.id1[src_ob]
        return ("fm", u, y2)

    return _map_from_cells(fib_n, fib_q, on_obj, on_c1, name="xi*")


def gamma_theta(F: TwoFunctor, z, side="over", budget=10 ** 6,
                fib_simplex: FibreCategory | None = None,
                fib_vertex: FibreCategory | None = None):
    """The section Gamma, retraction Theta with Theta Gamma = 1, and the
    2-natural transformation r: Gamma Theta => 1 with identity 2-cell parts."""
    B, C = F.src, F.tgt
    q = simplex_dim(z)
    anchor = simplex_object(z, 0 if side == "over" else q)
    fib_z = fib_simplex if fib_simplex is not None else simplex_fibre(F, z, side, budget)
    fib_0 = fib_vertex if fib_vertex is not None else simplex_fibre(F, anchor, side, budget)

    def gamma_obj(ob):
        x, v0 = fib_0.witnesses[ob]
        w = simplex_edge(C, v0, 0, 1)
        if side == "over":
            objs = (F.omap[x],) + tuple(simplex_object(z, i) for i in range(q + 1))
            edges = {(0, i + 1): C.hc1(w, simplex_edge(C, z, 0, i)) for i in range(q + 1)}
            for (i, j) in _pairs(q):
                edges[(i + 1, j + 1)] = simplex_edge(C, z, i, j)
            tris = {}
            for (i, j) in _pairs(q):
                tris[(0, i + 1, j + 1)] = C.hc2(C.id2[w], simplex_tri(C, z, 0, i, j))
            for (a, b, c) in _triples(q):
                tris[(a + 1, b + 1, c + 1)] = simplex_tri(C, z, a, b, c)
        else:
            objs = tuple(simplex_object(z, i) for i in range(q + 1)) + (F.omap[x],)
            edges = {(i, q + 1): C.hc1(simplex_edge(C, z, i, q), w) for i in range(q + 1)}
            for (i, j) in _pairs(q):
                edges[(i, j)] = simplex_edge(C, z, i, j)
            tris = {}
            for (i, j) in _pairs(q):
                tris[(i, j, q + 1)] = C.hc2(simplex_tri(C, z, i, j, q), C.id2[w])
            for (a, b, c) in _triples(q):
                tris[(a, b, c)] = simplex_tri(C, z, a, b, c)
        return ("fo", x, make_simplex(objs, edges, tris))

    def gamma_c1(m):
        u, y0 = fib_0.morphism_data[m]
        beta = _witness_triangles(C, side, 0, y0)[0]
        src_ob = gamma_obj(fib_0.cat.src1(m))
        tgt_ob = gamma_obj(fib_0.cat.tgt1(m))
        x, v = fib_z.witnesses[src_ob]
        _, v2 = fib_z.witnesses[tgt_ob]
        if side == "over":
            ts = tuple(C.hc2(beta, C.id2[simplex_edge(C, z, 0, i)]) for i in range(q + 1))
        else:
            ts = tuple(C.hc2(C.id2[simplex_edge(C, z, i, q)], beta) for i in range(q + 1))
        y = _morphism_witness(F, side, q, v, v2, u, ts)
        if u == B.id1[x] and y == _identity_witness(C, side, q, v):
            return fib_z.cat.id1[src_ob]
        return ("fm", u, y)

    gamma = _map_from_cells(fib_0, fib_z, gamma_obj, gamma_c1, name="Gamma")

    theta_xi1 = (0, 1) if side == "over" else (q, q + 1)
    theta_xi2 = (0, 1, 2) if side == "over" else (q, q + 1, q + 2)

    def theta_obj(ob):
        x, v = fib_z.witnesses[ob]
        return ("fo", x, reindex_simplex(C, v, theta_xi1))

    def theta_c1(m):
        u, y = fib_z.morphism_data[m]
        y0 = reindex_simplex(C, y, theta_xi2)
        src_ob = theta_obj(fib_z.cat.src1(m))
        x, v0 = fib_0.witnesses[src_ob]
        if u == B.id1[x] and y0 == _identity_witness(C, side, 0, v0):
            return fib_0.cat.id1[src_ob]
        return ("fm", u, y0)

    theta = _map_from_cells(fib_z, fib_0, theta_obj, theta_c1, name="Theta")

    # the canonical comparison is Gamma Theta => 1 over-side and 1 => Gamma
    # Theta under-side (the witness triangles only compose that way round)
    gt = compose_two_functors(gamma, theta, name="GammaTheta")
    ident = identity_two_functor(fib_z.cat)
    src_f, tgt_f = (gt, ident) if side == "over" else (ident, gt)
    at_obj = {}
    for ob in fib_z.cat.objects:
        x, v = fib_z.witnesses[ob]
        _, v_other = fib_z.witnesses[gt.omap[ob]]
        if side == "over":
            v_src, v_tgt = v_other, v
            ts = tuple(simplex_tri(C, v, 0, 1, i + 1) for i in range(q + 1))
        else:
            v_src, v_tgt = v, v_other
            ts = tuple(simplex_tri(C, v, i, q, q + 1) for i in range(q + 1))
        y = _morphism_witness(F, side, q, v_src, v_tgt, B.id1[x], ts)
        src_ob = ob if side == "under" else gt.omap[ob]
        if y == _identity_witness(C, side, q, v_src):
            at_obj[ob] = fib_z.cat.id1[src_ob]
        else:
            at_obj[ob] = ("fm", B.id1[x], y)
    at_cell1 = {m: fib_z.cat.id2[fib_z.cat.hc1(at_obj[fib_z.cat.tgt1(m)], src_f.map1[m])]
                for m in fib_z.cat.cells1}
    r = LaxTransformation("lax", two_functor_as_lax(src_f), two_functor_as_lax(tgt_f),
                          at_obj, at_cell1, name="r")
    return gamma, theta, r


def phi_forget(fib: FibreCategory, B: TwoCategory, name="Phi") -> TwoFunctor:
    """Forget the witness: (x, v) -> x on all cell levels."""
    A = fib.cat
    omap = {ob: fib.witnesses[ob][0] for ob in A.objects}
    map1 = {}
    for m in A.cells1:
        map1[m] = B.id1[omap[A.src1(m)]] if A.is_identity1(m) else fib.morphism_data[m][0]
    map2 = {}
    for d in A.cells2:
        if A.is_identity2(d):
            map2[d] = B.id2[map1[A.src2(d)]]
        else:
            map2[d] = d[1]
    return TwoFunctor(A, B, omap, map1, map2, name=name)


@dataclass
class QComma:
    """The level-q comma 2-category, its fibres and the labeling map."""

    cat: TwoCategory
    fibres: dict          # z-simplex -> FibreCategory
    labels: dict          # object id -> z-simplex
    side: str = "over"


def q_comma(F: TwoFunctor, q: int, side="over", budget=10 ** 6) -> QComma:
    """The 2-category [q]//F: disjoint union of the fibres over all geometric
    q-simplices of the target."""
    C = F.tgt
    nerve = geometric_nerve(C, max(q, 1), budget=budget)
    objects, cells1, cells2 = [], {}, {}
    hcomp1, vcomp, hcomp2 = {}, {}, {}
    fibres, labels = {}, {}
    for z in nerve.simplices(q):
        fib = simplex_fibre(F, z, side, budget)
        fibres[z] = fib
        A = fib.cat
        objects.extend(A.objects)
        for ob in A.objects:
            labels[ob] = z
        cells1.update({m: st for m, st in A.cells1.items() if not A.is_identity1(m)})
        cells2.update({d: st for d, st in A.cells2.items() if not A.is_identity2(d)})
        hcomp1.update(A.hcomp1)
        vcomp.update(A.vcomp)
        hcomp2.update(A.hcomp2)
    cat = TwoCategory(objects, cells1, cells2, hcomp1, vcomp, hcomp2,
                      name=f"[{q}]//{F.name}")
    return QComma(cat, fibres, labels, side)


def psi_label(qc: QComma):
    """The labeling of [q]//F by geometric q-simplices; constant on fibres."""
    return dict(qc.labels)


def comma_contraction(C: TwoCategory, fib: FibreCategory):
    """For the comma z//C, the constant 2-functor at (z, 1_z) together with
    the canonical oplax transformation Ct_z => 1 that contracts it.

    The component at an object (x, v) is the morphism (v, 1_v), and at a
    morphism (u, beta) it is beta itself.
    """
    F = identity_two_functor(C)
    A = fib.cat
    z = fib.base_simplex
    zob = ("fo", z, make_simplex((z, z), {(0, 1): C.id1[z]}, {}))
    if zob not in A.id1:
        raise UnknownObject(f"({z!r}, 1) is not an object of {A.name!r}")
    ct = TwoFunctor(A, A, {ob: zob for ob in A.objects},
                    {m: A.id1[zob] for m in A.cells1},
                    {d: A.id2[A.id1[zob]] for d in A.cells2}, name=f"Ct_{z}")
    at_obj = {}
    for ob in A.objects:
        x, v = fib.witnesses[ob]
        w = simplex_edge(C, v, 0, 1)
        y = _morphism_witness(F, "over", 0, fib.witnesses[zob][1], v, w, (C.id2[w],))
        if y == _identity_witness(C, "over", 0, fib.witnesses[zob][1]):
            at_obj[ob] = A.id1[zob]
        else:
            at_obj[ob] = ("fm", w, y)
    at_c1 = {}
    for m in A.cells1:
        if A.is_identity1(m):
            at_c1[m] = A.id2[at_obj[A.src1(m)]]
            continue
        _, y = fib.morphism_data[m]
        beta = simplex_tri(C, y, 0, 1, 2)
        src1 = A.hc1(m, at_obj[A.src1(m)])
        tgt1 = A.hc1(at_obj[A.tgt1(m)], A.id1[zob])
        at_c1[m] = _norm_fibre_c2(A, beta, src1, tgt1)
    theta = LaxTransformation("oplax", two_functor_as_lax(ct),
                              two_functor_as_lax(identity_two_functor(A)),
                              at_obj, at_c1, name="Ct=>1")
    return ct, theta


# ---------------------------------------------------------------------------
# precondition audit for the fibre-sequence theorem


@dataclass
class TheoremBAudit:
    functor: str
    cap: int
    per_cell: dict = field(default_factory=dict)   # w -> EquivalenceReport
    fibre_homology: dict = field(default_factory=dict)  # z -> HomologyReport

    @property
    def all_equivalences(self):
        return all(rep.ok for rep in self.per_cell.values())

    def lines(self):
        out = []
        for w in sorted(self.per_cell, key=repr):
            rep = self.per_cell[w]
            tag = "OK" if rep.ok else "FAIL"
            out.append(f"{tag} w* for {w!r}: homology equivalence "
                       f"{'holds' if rep.ok else 'fails'} through degree {rep.cap - 1}")
        for z in sorted(self.fibre_homology, key=repr):
            out.append(f"INFO fibre at {z!r}: {self.fibre_homology[z]}")
        return out


def audit_theorem_b(F: TwoFunctor, cap: int = 4, budget=10 ** 6) -> TheoremBAudit:
    """For every 1-cell w of the target, check that the relabeling w* induces
    isomorphisms on homology (H_0, H_1 via the induced map, higher degrees by
    group comparison) and equal pi0; also report each object fibre's homology.
    """
    from .invariants import homology, homology_compare

    C = F.tgt
    fibs = {z: fibre_over(F, z, budget) for z in C.objects}
    nerves = {z: geometric_nerve(fibs[z].cat, cap, budget=budget) for z in C.objects}
    audit = TheoremBAudit(functor=F.name, cap=cap)
    for z in C.objects:
        audit.fibre_homology[z] = homology(nerves[z])
    for w in C.cells1:
        if C.is_identity1(w):
            continue
        z1, z0 = C.cells1[w]
        ws = w_star(F, w, fibs[z0], fibs[z1], budget)
        dmap = geometric_nerve_map(ws, cap, src=nerves[z0], tgt=nerves[z1])
        audit.per_cell[w] = homology_compare(nerves[z0], nerves[z1], via=dmap)
    return audit
