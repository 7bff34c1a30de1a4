"""Dimension-truncated simplicial and bisimplicial sets.

Everything is materialized up to a truncation cap: simplex sets per dimension
and total face/degeneracy tables.  Operators never fabricate simplices above
the cap, and homology downstream is trusted only strictly below it.
"""

from __future__ import annotations

from .errors import CapMismatch, CapTooSmall, ValidationReport


class TruncSimplicialSet:
    def __init__(self, cap, simplices, faces, degeneracies, name=""):
        self.cap = cap
        self.name = name
        self._simplices = [list(s) for s in simplices]
        self._sets = [set(s) for s in self._simplices]
        self.faces = faces            # (n, i, x) -> face, 1 <= n <= cap
        self.degeneracies = degeneracies  # (n, i, x) -> degeneracy, 0 <= n < cap
        self._degenerate = [set() for _ in range(cap + 1)]
        for n in range(cap):
            for x in self._simplices[n]:
                for i in range(n + 1):
                    y = degeneracies.get((n, i, x))
                    if y is not None:
                        self._degenerate[n + 1].add(y)

    @classmethod
    def build(cls, cap, dim_sets, face_fn, deg_fn, name=""):
        """Materialize tables from callables face_fn(n, i, x), deg_fn(n, i, x)."""
        simplices = [list(dim_sets[n]) for n in range(cap + 1)]
        faces = {}
        degeneracies = {}
        for n in range(1, cap + 1):
            for x in simplices[n]:
                for i in range(n + 1):
                    faces[(n, i, x)] = face_fn(n, i, x)
        for n in range(cap):
            for x in simplices[n]:
                for i in range(n + 1):
                    degeneracies[(n, i, x)] = deg_fn(n, i, x)
        return cls(cap, simplices, faces, degeneracies, name=name)

    def simplices(self, n):
        return self._simplices[n]

    def has(self, n, x):
        return 0 <= n <= self.cap and x in self._sets[n]

    def face(self, n, i, x):
        return self.faces[(n, i, x)]

    def degeneracy(self, n, i, x):
        return self.degeneracies[(n, i, x)]

    def is_degenerate(self, n, x):
        return x in self._degenerate[n]

    def nondegenerate(self, n):
        return [x for x in self._simplices[n] if x not in self._degenerate[n]]

    def counts(self):
        return tuple(len(s) for s in self._simplices)

    def nondegenerate_counts(self):
        return tuple(len(self.nondegenerate(n)) for n in range(self.cap + 1))

    def same_as(self, other) -> bool:
        """Dimensionwise set equality including all operator tables."""
        if self.cap != other.cap:
            return False
        if any(self._sets[n] != other._sets[n] for n in range(self.cap + 1)):
            return False
        return self.faces == other.faces and self.degeneracies == other.degeneracies


def audit_simplicial(S: TruncSimplicialSet) -> ValidationReport:
    """Exhaustive simplicial-identity audit up to the cap."""
    rep = ValidationReport(subject=f"simplicial set {S.name!r}")
    cap = S.cap
    for n in range(1, cap + 1):
        for x in S.simplices(n):
            for i in range(n + 1):
                y = S.faces.get((n, i, x))
                if y is None or not S.has(n - 1, y):
                    rep.add("MissingFace", f"d_{i} missing or out of range in dim {n}", (x,))
    for n in range(cap):
        for x in S.simplices(n):
            for i in range(n + 1):
                y = S.degeneracies.get((n, i, x))
                if y is None or not S.has(n + 1, y):
                    rep.add("MissingDegeneracy", f"s_{i} missing in dim {n}", (x,))
    if not rep.ok:
        return rep

    for n in range(2, cap + 1):
        for x in S.simplices(n):
            for j in range(n + 1):
                for i in range(j):
                    # d_i d_j = d_{j-1} d_i for i < j
                    if S.face(n - 1, i, S.face(n, j, x)) != S.face(n - 1, j - 1, S.face(n, i, x)):
                        rep.add("SimplicialIdentity", f"d_{i} d_{j} failure in dim {n}", (x,))
    for n in range(cap):
        for x in S.simplices(n):
            for j in range(n + 1):
                y = S.degeneracy(n, j, x)
                for i in range(n + 2):
                    # face of a degeneracy
                    if i < j:
                        want = S.degeneracy(n - 1, j - 1, S.face(n, i, x)) if n >= 1 else None
                    elif i in (j, j + 1):
                        want = x
                    else:
                        want = S.degeneracy(n - 1, j, S.face(n, i - 1, x)) if n >= 1 else None
                    if want is None:
                        continue
                    if S.face(n + 1, i, y) != want:
                        rep.add("SimplicialIdentity", f"d_{i} s_{j} failure in dim {n}", (x,))
    for n in range(cap - 1):
        for x in S.simplices(n):
            for j in range(n + 1):
                for i in range(j + 1):
                    # s_i s_j = s_{j+1} s_i for i <= j
                    lhs = S.degeneracy(n + 1, i, S.degeneracy(n, j, x))
                    rhs = S.degeneracy(n + 1, j + 1, S.degeneracy(n, i, x))
                    if lhs != rhs:
                        rep.add("SimplicialIdentity", f"s_{i} s_{j} failure in dim {n}", (x,))
    return rep


class SimplicialMap:
    def __init__(self, src: TruncSimplicialSet, tgt: TruncSimplicialSet, mapping, name=""):
        self.src = src
        self.tgt = tgt
        self.mapping = mapping  # (n, x) -> y
        self.name = name

    def apply(self, n, x):
        return self.mapping[(n, x)]

    def compose(self, other, name=""):
        """self after other."""
        mapping = {(n, x): self.mapping[(n, y)] for (n, x), y in other.mapping.items()}
        return SimplicialMap(other.src, self.tgt, mapping, name=name)

    def is_bijection_levelwise(self) -> bool:
        for n in range(self.src.cap + 1):
            image = {self.mapping[(n, x)] for x in self.src.simplices(n)}
            if len(image) != len(self.src.simplices(n)):
                return False
            if image != set(self.tgt.simplices(n)):
                return False
        return True


def identity_map(S: TruncSimplicialSet) -> SimplicialMap:
    return SimplicialMap(S, S, {(n, x): x for n in range(S.cap + 1) for x in S.simplices(n)},
                         name="id")


def validate_simplicial_map(f: SimplicialMap) -> ValidationReport:
    rep = ValidationReport(subject=f"simplicial map {f.name!r}")
    S, T = f.src, f.tgt
    if S.cap != T.cap:
        rep.add("CapMismatch", "source and target caps differ")
        return rep
    for n in range(S.cap + 1):
        for x in S.simplices(n):
            y = f.mapping.get((n, x))
            if y is None or not T.has(n, y):
                rep.add("MissingValue", f"no image in dim {n}", (x,))
    if not rep.ok:
        return rep
    for n in range(1, S.cap + 1):
        for x in S.simplices(n):
            for i in range(n + 1):
                if f.mapping[(n - 1, S.face(n, i, x))] != T.face(n, i, f.mapping[(n, x)]):
                    rep.add("FaceCommutation", f"d_{i} not preserved in dim {n}", (x,))
    for n in range(S.cap):
        for x in S.simplices(n):
            for i in range(n + 1):
                if f.mapping[(n + 1, S.degeneracy(n, i, x))] != T.degeneracy(n, i, f.mapping[(n, x)]):
                    rep.add("DegeneracyCommutation", f"s_{i} not preserved in dim {n}", (x,))
    return rep


# ---------------------------------------------------------------------------
# bisimplicial sets


class TruncBisimplicialSet:
    """Bisimplicial set stored on the full (p, q) grid with p, q <= cap."""

    def __init__(self, cap, cells, hfaces, hdegs, vfaces, vdegs, name=""):
        self.cap = cap
        self.name = name
        self.cells = {pq: list(v) for pq, v in cells.items()}
        self._sets = {pq: set(v) for pq, v in self.cells.items()}
        self.hfaces = hfaces  # (p, q, i, x) -> x', p >= 1, 0 <= i <= p
        self.hdegs = hdegs    # (p, q, i, x) -> x', p < cap
        self.vfaces = vfaces  # (p, q, j, x) -> x', q >= 1
        self.vdegs = vdegs    # (p, q, j, x) -> x', q < cap

    @classmethod
    def build(cls, cap, cell_sets, hface_fn, hdeg_fn, vface_fn, vdeg_fn, name=""):
        cells = {(p, q): list(cell_sets(p, q)) for p in range(cap + 1) for q in range(cap + 1)}
        hfaces, hdegs, vfaces, vdegs = {}, {}, {}, {}
        for (p, q), xs in cells.items():
            for x in xs:
                if p >= 1:
                    for i in range(p + 1):
                        hfaces[(p, q, i, x)] = hface_fn(p, q, i, x)
                if p < cap:
                    for i in range(p + 1):
                        hdegs[(p, q, i, x)] = hdeg_fn(p, q, i, x)
                if q >= 1:
                    for j in range(q + 1):
                        vfaces[(p, q, j, x)] = vface_fn(p, q, j, x)
                if q < cap:
                    for j in range(q + 1):
                        vdegs[(p, q, j, x)] = vdeg_fn(p, q, j, x)
        return cls(cap, cells, hfaces, hdegs, vfaces, vdegs, name=name)

    def at(self, p, q):
        return self.cells[(p, q)]

    def has(self, p, q, x):
        return x in self._sets.get((p, q), ())

    def hface(self, p, q, i, x):
        return self.hfaces[(p, q, i, x)]

    def hdeg(self, p, q, i, x):
        return self.hdegs[(p, q, i, x)]

    def vface(self, p, q, j, x):
        return self.vfaces[(p, q, j, x)]

    def vdeg(self, p, q, j, x):
        return self.vdegs[(p, q, j, x)]

    def transpose(self, name=""):
        cells = {(q, p): v for (p, q), v in self.cells.items()}
        hfaces = {(q, p, j, x): y for (p, q, j, x), y in self.vfaces.items()}
        hdegs = {(q, p, j, x): y for (p, q, j, x), y in self.vdegs.items()}
        vfaces = {(q, p, i, x): y for (p, q, i, x), y in self.hfaces.items()}
        vdegs = {(q, p, i, x): y for (p, q, i, x), y in self.hdegs.items()}
        return TruncBisimplicialSet(self.cap, cells, hfaces, hdegs, vfaces, vdegs,
                                    name=name or f"{self.name}^T")


def audit_bisimplicial(S: TruncBisimplicialSet) -> ValidationReport:
    rep = ValidationReport(subject=f"bisimplicial set {S.name!r}")
    cap = S.cap

    def row(q):
        """The horizontal simplicial set at fixed vertical degree q."""
        return TruncSimplicialSet(
            cap,
            [S.at(p, q) for p in range(cap + 1)],
            {(p, i, x): y for (p, qq, i, x), y in S.hfaces.items() if qq == q},
            {(p, i, x): y for (p, qq, i, x), y in S.hdegs.items() if qq == q},
            name=f"{S.name}[*,{q}]",
        )

    def col(p):
        return TruncSimplicialSet(
            cap,
            [S.at(p, q) for q in range(cap + 1)],
            {(q, j, x): y for (pp, q, j, x), y in S.vfaces.items() if pp == p},
            {(q, j, x): y for (pp, q, j, x), y in S.vdegs.items() if pp == p},
            name=f"{S.name}[{p},*]",
        )

    for q in range(cap + 1):
        sub = audit_simplicial(row(q))
        for f in sub.findings:
            rep.add(f.code, f"[row {q}] {f.message}", f.witness)
    for p in range(cap + 1):
        sub = audit_simplicial(col(p))
        for f in sub.findings:
            rep.add(f.code, f"[col {p}] {f.message}", f.witness)
    if not rep.ok:
        return rep

    # horizontal operators commute with vertical operators
    for (p, q), xs in S.cells.items():
        for x in xs:
            for i in range(p + 1):
                for j in range(q + 1):
                    if p >= 1 and q >= 1:
                        if S.vface(p - 1, q, j, S.hface(p, q, i, x)) != \
                           S.hface(p, q - 1, i, S.vface(p, q, j, x)):
                            rep.add("BisimplicialCommutation", "d^h d^v mismatch", (p, q, i, j, x))
                    if p >= 1 and q < cap:
                        if S.vdeg(p - 1, q, j, S.hface(p, q, i, x)) != \
                           S.hface(p, q + 1, i, S.vdeg(p, q, j, x)):
                            rep.add("BisimplicialCommutation", "d^h s^v mismatch", (p, q, i, j, x))
                    if p < cap and q >= 1:
                        if S.vface(p + 1, q, j, S.hdeg(p, q, i, x)) != \
                           S.hdeg(p, q - 1, i, S.vface(p, q, j, x)):
                            rep.add("BisimplicialCommutation", "s^h d^v mismatch", (p, q, i, j, x))
                    if p < cap and q < cap:
                        if S.vdeg(p + 1, q, j, S.hdeg(p, q, i, x)) != \
                           S.hdeg(p, q + 1, i, S.vdeg(p, q, j, x)):
                            rep.add("BisimplicialCommutation", "s^h s^v mismatch", (p, q, i, j, x))
    return rep


# ---------------------------------------------------------------------------
# operations


def diag(S: TruncBisimplicialSet, name="") -> TruncSimplicialSet:
    """Diagonal simplicial set: n-simplices S_{n,n}, d_i = d_i^h d_i^v."""
    cap = S.cap
    return TruncSimplicialSet.build(
        cap,
        [S.at(n, n) for n in range(cap + 1)],
        lambda n, i, x: S.hface(n, n - 1, i, S.vface(n, n, i, x)),
        lambda n, i, x: S.hdeg(n, n + 1, i, S.vdeg(n, n, i, x)),
        name=name or f"diag {S.name}",
    )


def codiagonal_wbar(S: TruncBisimplicialSet, name="") -> TruncSimplicialSet:
    """Codiagonal (total complex) of a bisimplicial set.

    A p-simplex is a tuple (t_0, ..., t_p) with t_m in S_{m,p-m} matched by
    d_0^v t_m = d_{m+1}^h t_{m+1}.  Faces apply d^v with a shifted index on
    the left part and d_i^h on the right part; degeneracies likewise:

        d_i(t) = (d_i^v t_0, ..., d_1^v t_{i-1}, d_i^h t_{i+1}, ..., d_i^h t_p)
        s_i(t) = (s_i^v t_0, ..., s_0^v t_i, s_i^h t_i, ..., s_i^h t_p)
    """
    if S.cap < 1:
        raise CapTooSmall("codiagonal needs cap >= 1")
    cap = S.cap

    dim_sets = []
    for p in range(cap + 1):
        tuples = [()]
        for m in range(p + 1):
            extended = []
            for t in tuples:
                for x in S.at(m, p - m):
                    if m > 0 and S.vface(m - 1, p - m + 1, 0, t[-1]) != S.hface(m, p - m, m, x):
                        continue
                    extended.append(t + (x,))
            tuples = extended
        dim_sets.append(tuples)

    def face(p, i, t):
        left = tuple(S.vface(m, p - m, i - m, t[m]) for m in range(i))
        right = tuple(S.hface(m, p - m, i, t[m]) for m in range(i + 1, p + 1))
        return left + right

    def deg(p, i, t):
        left = tuple(S.vdeg(m, p - m, i - m, t[m]) for m in range(i + 1))
        right = tuple(S.hdeg(m, p - m, i, t[m]) for m in range(i, p + 1))
        return left + right

    return TruncSimplicialSet.build(cap, dim_sets, face, deg,
                                    name=name or f"Wbar {S.name}")


def zisman_eta(S: TruncBisimplicialSet, W: TruncSimplicialSet | None = None,
               D: TruncSimplicialSet | None = None) -> SimplicialMap:
    """Comparison map diag S -> Wbar S.

    The m-th component of the image of t in S_{p,p} is
    (d_{m+1}^h)^{p-m} (d_0^v)^m t.
    """
    D = D if D is not None else diag(S)
    W = W if W is not None else codiagonal_wbar(S)
    mapping = {}
    for p in range(S.cap + 1):
        for t in D.simplices(p):
            comps = []
            for m in range(p + 1):
                x = t
                q = p
                for _ in range(m):
                    x = S.vface(p, q, 0, x)
                    q -= 1
                pp = p
                for _ in range(p - m):
                    x = S.hface(pp, q, m + 1, x)
                    pp -= 1
                comps.append(x)
            mapping[(p, t)] = tuple(comps)
    return SimplicialMap(D, W, mapping, name=f"eta {S.name}")


def product(S: TruncSimplicialSet, T: TruncSimplicialSet, name="") -> TruncSimplicialSet:
    if S.cap != T.cap:
        raise CapMismatch(f"caps {S.cap} and {T.cap} differ")
    cap = S.cap
    return TruncSimplicialSet.build(
        cap,
        [[(x, y) for x in S.simplices(n) for y in T.simplices(n)] for n in range(cap + 1)],
        lambda n, i, xy: (S.face(n, i, xy[0]), T.face(n, i, xy[1])),
        lambda n, i, xy: (S.degeneracy(n, i, xy[0]), T.degeneracy(n, i, xy[1])),
        name=name or f"{S.name}x{T.name}",
    )


def disjoint_union(S: TruncSimplicialSet, T: TruncSimplicialSet, name="") -> TruncSimplicialSet:
    if S.cap != T.cap:
        raise CapMismatch(f"caps {S.cap} and {T.cap} differ")
    cap = S.cap
    return TruncSimplicialSet.build(
        cap,
        [[("L", x) for x in S.simplices(n)] + [("R", y) for y in T.simplices(n)]
         for n in range(cap + 1)],
        lambda n, i, x: (x[0], (S if x[0] == "L" else T).face(n, i, x[1])),
        lambda n, i, x: (x[0], (S if x[0] == "L" else T).degeneracy(n, i, x[1])),
        name=name or f"{S.name}+{T.name}",
    )


def external_product(S: TruncSimplicialSet, T: TruncSimplicialSet, name="") -> TruncBisimplicialSet:
    """Bisimplicial set with cells S_p x T_q; horizontal operators act on S."""
    if S.cap != T.cap:
        raise CapMismatch(f"caps {S.cap} and {T.cap} differ")
    cap = S.cap
    return TruncBisimplicialSet.build(
        cap,
        lambda p, q: [(x, y) for x in S.simplices(p) for y in T.simplices(q)],
        lambda p, q, i, xy: (S.face(p, i, xy[0]), xy[1]),
        lambda p, q, i, xy: (S.degeneracy(p, i, xy[0]), xy[1]),
        lambda p, q, j, xy: (xy[0], T.face(q, j, xy[1])),
        lambda p, q, j, xy: (xy[0], T.degeneracy(q, j, xy[1])),
        name=name or f"{S.name}(x){T.name}",
    )


def vertically_constant(X: TruncSimplicialSet, name="") -> TruncBisimplicialSet:
    """Bisimplicial set with S_{p,q} = X_p and identity vertical operators."""
    cap = X.cap
    return TruncBisimplicialSet.build(
        cap,
        lambda p, q: X.simplices(p),
        lambda p, q, i, x: X.face(p, i, x),
        lambda p, q, i, x: X.degeneracy(p, i, x),
        lambda p, q, j, x: x,
        lambda p, q, j, x: x,
        name=name or f"const {X.name}",
    )


def standard_simplex(n: int, cap: int, name="") -> TruncSimplicialSet:
    """Delta[n] truncated at cap; k-simplices are monotone tuples in [n]."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def monotone(k):
        tuples = [()]
        for _ in range(k + 1):
            tuples = [t + (v,) for t in tuples for v in range(n + 1) if not t or v >= t[-1]]
        return tuples

    return TruncSimplicialSet.build(
        cap,
        [monotone(k) for k in range(cap + 1)],
        lambda k, i, t: t[:i] + t[i + 1:],
        lambda k, i, t: t[:i + 1] + t[i:],
        name=name or f"Delta[{n}]",
    )


def point(cap: int) -> TruncSimplicialSet:
    return standard_simplex(0, cap, name="point")
