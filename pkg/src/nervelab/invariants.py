"""Exact verification backend: integer Smith normal form, normalized chains,
integral homology, pi0 and equivalence reports.

All matrices are dense lists of Python int rows; no floating point and no
modular shortcuts anywhere.  Homology of a simplicial set truncated at cap is
trusted only for degrees <= cap - 1 and comparisons outside that range are
refused.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AuditFailed, CapMismatch
from .simplicial import SimplicialMap, TruncSimplicialSet, audit_simplicial


# ---------------------------------------------------------------------------
# integer matrices


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def identity_matrix(n):
    M = zeros(n, n)
    for i in range(n):
        M[i][i] = 1
    return M


def mat_mul(A, B):
    if not A or not B:
        return [[0] * (len(B[0]) if B else 0) for _ in A]
    n, k, m = len(A), len(B), len(B[0])
    C = zeros(n, m)
    for i in range(n):
        Ai = A[i]
        Ci = C[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    Ci[j] += a * Bt[j]
    return C


def is_zero_matrix(A):
    return all(all(v == 0 for v in row) for row in A)


def smith_normal_form(M, transforms=False):
    """Smith normal form over the integers.

    Returns (D, rank, factors) where D is the diagonalized matrix, rank the
    number of nonzero diagonal entries and factors the nonzero invariant
    factors in divisibility order.  With transforms=True also returns (U, V)
    with U M V = D, both unimodular.  Pivoting picks a minimal nonzero
    absolute value; everything stays in arbitrary-precision integers.
    """
    A = [row[:] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    U = identity_matrix(rows) if transforms else None
    V = identity_matrix(cols) if transforms else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        if V is not None:
            for r in V:
                r[i], r[j] = r[j], r[i]

    def add_row(i, j, c):
        # row_i += c * row_j
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        if U is not None:
            U[i] = [a + c * b for a, b in zip(U[i], U[j])]

    def add_col(i, j, c):
        for r in A:
            r[i] += c * r[j]
        if V is not None:
            for r in V:
                r[i] += c * r[j]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        if U is not None:
            U[i] = [-a for a in U[i]]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # minimal nonzero pivot in the remaining block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = A[i][j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        if A[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, rows):
            if A[i][t]:
                q = A[i][t] // A[t][t]
                add_row(i, t, -q)
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            if A[t][j]:
                q = A[t][j] // A[t][t]
                add_col(j, t, -q)
                if A[t][j]:
                    dirty = True
        if dirty:
            continue
        # ensure the pivot divides the rest of the block
        culprit = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if A[i][j] % A[t][t]:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            add_row(t, culprit, 1)
            continue
        t += 1

    rank = sum(1 for k in range(limit) if A[k][k])
    factors = [A[k][k] for k in range(limit) if A[k][k]]
    if transforms:
        return A, rank, factors, U, V
    return A, rank, factors


def kernel_basis(M):
    """Columns generating the integer kernel of M (a saturated sublattice)."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return [col[:] for col in identity_matrix(cols)]
    _, rank, _, _, V = smith_normal_form(M, transforms=True)
    return [[V[r][j] for r in range(cols)] for j in range(rank, cols)]


def solve_integer(M, b):
    """Some integer solution x of M x = b, or None."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    D, rank, _, U, V = smith_normal_form(M, transforms=True)
    c = [sum(U[i][k] * b[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(min(rows, cols)):
        d = D[i][i]
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    for i in range(min(rows, cols), rows):
        if c[i]:
            return None
    return [sum(V[i][j] * y[j] for j in range(cols)) for i in range(cols)]


def cokernel_invariants(M, ambient_rank):
    """Free rank and torsion factors of Z^ambient_rank / column span of M."""
    if not M or not M[0]:
        return ambient_rank, []
    _, rank, factors = smith_normal_form(M)
    torsion = [f for f in factors if f not in (0, 1)]
    return ambient_rank - rank, torsion


# ---------------------------------------------------------------------------
# chain complexes


@dataclass
class ChainComplex:
    cap: int
    ranks: list
    boundaries: dict  # n -> matrix (rank_{n-1} x rank_n), 1 <= n <= cap
    bases: list       # per-degree list of nondegenerate simplices
    name: str = ""

    def boundary(self, n):
        return self.boundaries[n]


def chain_complex(S: TruncSimplicialSet, audited=False, name="") -> ChainComplex:
    """Normalized chains: degenerate simplices are dropped, faces landing on
    degenerate simplices contribute zero.  Verifies dd = 0 exactly."""
    if not audited:
        rep = audit_simplicial(S)
        if not rep.ok:
            raise AuditFailed(str(rep))
    bases = [S.nondegenerate(n) for n in range(S.cap + 1)]
    index = [{x: i for i, x in enumerate(b)} for b in bases]
    boundaries = {}
    for n in range(1, S.cap + 1):
        M = zeros(len(bases[n - 1]), len(bases[n]))
        for j, x in enumerate(bases[n]):
            for i in range(n + 1):
                y = S.face(n, i, x)
                r = index[n - 1].get(y)
                if r is not None:
                    M[r][j] += 1 if i % 2 == 0 else -1
        boundaries[n] = M
    for n in range(2, S.cap + 1):
        if not is_zero_matrix(mat_mul(boundaries[n - 1], boundaries[n])):
            raise AuditFailed(f"dd != 0 in degree {n} for {S.name!r}")
    return ChainComplex(S.cap, [len(b) for b in bases], boundaries, bases,
                        name=name or S.name)


@dataclass
class HomologyReport:
    cap: int
    betti: dict = field(default_factory=dict)     # n -> free rank
    torsion: dict = field(default_factory=dict)   # n -> divisibility-ordered list
    name: str = ""

    @property
    def trusted_degrees(self):
        return range(self.cap)

    def group(self, n):
        if n >= self.cap:
            raise CapMismatch(f"degree {n} is above the trusted range (cap {self.cap})")
        return (self.betti[n], tuple(self.torsion[n]))

    def describe(self, n):
        b, tors = self.group(n)
        parts = []
        if b == 1:
            parts.append("Z")
        elif b > 1:
            parts.append(f"Z^{b}")
        parts.extend(f"Z/{t}" for t in tors)
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        degs = ", ".join(f"H_{n} = {self.describe(n)}" for n in self.trusted_degrees)
        return f"{degs} (degrees above {self.cap - 1} untrusted)"


def homology(S: TruncSimplicialSet, complex_=None, name="") -> HomologyReport:
    cc = complex_ if complex_ is not None else chain_complex(S)
    rep = HomologyReport(cap=cc.cap, name=name or cc.name)
    for n in range(cc.cap):
        if n == 0:
            kernel_rank = cc.ranks[0]
        else:
            _, rank_n, _ = smith_normal_form(cc.boundary(n))
            kernel_rank = cc.ranks[n] - rank_n
        _, rank_next, factors = smith_normal_form(cc.boundary(n + 1))
        rep.betti[n] = kernel_rank - rank_next
        rep.torsion[n] = [f for f in factors if f > 1]
    return rep


def pi0(S: TruncSimplicialSet) -> int:
    parent = {x: x for x in S.simplices(0)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in S.simplices(1):
        a, b = find(S.face(1, 0, e)), find(S.face(1, 1, e))
        if a != b:
            parent[a] = b
    return len({find(x) for x in S.simplices(0)})


# ---------------------------------------------------------------------------
# induced maps and comparison reports


def chain_map(f: SimplicialMap, src_cc: ChainComplex, tgt_cc: ChainComplex):
    """Matrices of the induced map on normalized chains, degree by degree."""
    mats = {}
    for n in range(src_cc.cap + 1):
        index = {x: i for i, x in enumerate(tgt_cc.bases[n])}
        M = zeros(len(tgt_cc.bases[n]), len(src_cc.bases[n]))
        for j, x in enumerate(src_cc.bases[n]):
            y = f.mapping[(n, x)]
            r = index.get(y)
            if r is not None:
                M[r][j] = 1
        mats[n] = M
    return mats


def chain_map_commutes(f_mats, src_cc: ChainComplex, tgt_cc: ChainComplex) -> bool:
    for n in range(1, src_cc.cap + 1):
        lhs = mat_mul(tgt_cc.boundary(n), f_mats[n])
        rhs = mat_mul(f_mats[n - 1], src_cc.boundary(n))
        if lhs != rhs:
            return False
    return True


def _presentation(cc: ChainComplex, n):
    """Generators and relations of H_n: cycle basis K (columns, expressed in
    the chain basis) and the matrix R of im d_{n+1} in K coordinates."""
    if n == 0:
        return identity_matrix(cc.ranks[0]), cc.boundary(1)
    K = kernel_basis(cc.boundary(n))
    Kmat = [[K[c][r] for c in range(len(K))] for r in range(cc.ranks[n])]
    B = cc.boundary(n + 1)
    cols = len(B[0]) if B and B[0] else 0
    R = zeros(len(K), cols)
    for j in range(cols):
        b = [B[r][j] for r in range(cc.ranks[n])]
        sol = solve_integer(Kmat, b)
        if sol is None:
            raise AuditFailed("boundary image not contained in cycle lattice")
        for r in range(len(K)):
            R[r][j] = sol[r]
    return Kmat, R


def induced_map_is_iso(f_mats, src_cc: ChainComplex, tgt_cc: ChainComplex, n) -> bool:
    """Whether the induced map H_n(src) -> H_n(tgt) is an isomorphism.

    Strategy: the groups must have equal invariants, and the map must be
    surjective; a surjection between isomorphic finitely generated abelian
    groups is an isomorphism.
    """
    K_s, R_s = _presentation(src_cc, n)
    K_t, R_t = _presentation(tgt_cc, n)
    ks = len(K_s[0]) if K_s and K_s[0] else 0
    kt = len(K_t[0]) if K_t and K_t[0] else 0
    free_s, tor_s = cokernel_invariants(R_s, ks)
    free_t, tor_t = cokernel_invariants(R_t, kt)
    if (free_s, tor_s) != (free_t, tor_t):
        return False
    # image of the source cycle basis, in target kernel coordinates
    A = zeros(kt, ks)
    for j in range(ks):
        cycle = [K_s[r][j] for r in range(len(K_s))] if K_s else []
        image = [sum(f_mats[n][r][m] * cycle[m] for m in range(len(cycle)))
                 for r in range(len(f_mats[n]))]
        sol = solve_integer(K_t, image) if K_t else ([] if not any(image) else None)
        if sol is None:
            raise AuditFailed("image of a cycle is not a cycle")
        for r in range(kt):
            A[r][j] = sol[r]
    combined = [A[r] + R_t[r] for r in range(kt)] if kt else []
    free_c, tor_c = cokernel_invariants(combined, kt)
    return free_c == 0 and not tor_c


@dataclass
class EquivalenceReport:
    cap: int
    degrees: dict = field(default_factory=dict)   # n -> (desc_a, desc_b, equal)
    pi0_pair: tuple = ()
    map_iso: dict = field(default_factory=dict)   # n -> bool, degrees 0 and 1
    name: str = ""

    @property
    def groups_agree(self):
        return all(eq for (_, _, eq) in self.degrees.values()) and \
            self.pi0_pair[0] == self.pi0_pair[1]

    @property
    def ok(self):
        return self.groups_agree and all(self.map_iso.values())

    def lines(self):
        out = []
        for n in sorted(self.degrees):
            a, b, eq = self.degrees[n]
            tag = "OK" if eq else "FAIL"
            out.append(f"{tag} H_{n}: {a} vs {b}")
        tag = "OK" if self.pi0_pair[0] == self.pi0_pair[1] else "FAIL"
        out.append(f"{tag} pi0: {self.pi0_pair[0]} vs {self.pi0_pair[1]}")
        for n in sorted(self.map_iso):
            tag = "OK" if self.map_iso[n] else "FAIL"
            out.append(f"{tag} induced H_{n} map is an isomorphism" if self.map_iso[n]
                       else f"{tag} induced H_{n} map is not an isomorphism")
        return out


def homology_compare(S: TruncSimplicialSet, T: TruncSimplicialSet,
                     via: SimplicialMap | None = None, name="") -> EquivalenceReport:
    """Per-degree comparison of integral homology below the cap, with the
    induced H_0 and H_1 maps checked when a simplicial map is supplied."""
    if S.cap != T.cap:
        raise CapMismatch(f"caps {S.cap} and {T.cap} differ")
    cc_s = chain_complex(S)
    cc_t = chain_complex(T)
    h_s = homology(S, cc_s)
    h_t = homology(T, cc_t)
    rep = EquivalenceReport(cap=S.cap, name=name)
    for n in range(S.cap):
        rep.degrees[n] = (h_s.describe(n), h_t.describe(n),
                          h_s.group(n) == h_t.group(n))
    rep.pi0_pair = (pi0(S), pi0(T))
    if via is not None:
        mats = chain_map(via, cc_s, cc_t)
        if not chain_map_commutes(mats, cc_s, cc_t):
            raise AuditFailed("induced chain map does not commute with boundaries")
        for n in (0, 1):
            if n < S.cap:
                rep.map_iso[n] = induced_map_is_iso(mats, cc_s, cc_t, n)
    return rep


def is_point_homology(report: HomologyReport) -> bool:
    if report.group(0) != (1, ()):
        return False
    return all(report.group(n) == (0, ()) for n in range(1, report.cap))
