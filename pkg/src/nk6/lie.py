"""Lie algebras by structure constants and reductive homogeneous geometry.

A homogeneous space enters as a Lie algebra g with a distinguished index
splitting g = h (+) m satisfying [h,h] c h and [h,m] c m.  Invariant
tensors on the space are constant tensors on m; this module evaluates the
invariant-form differential, the Levi-Civita connection via Nomizu's
formula, the canonical Hermitian connection and its torsion, the normal
connection, order-3 symmetries and their almost complex structures, and
curvature/Ricci.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import smallmat
from .exterior import KForm, index_tuples
from .scalars import EPS, QSqrt3, exact_div, is_exact


class NotInvariant(ValueError):
    pass


class HasFixedVector(ValueError):
    pass


class LieAlgebraData:
    """Structure constants c[i][j][k] with [X_i, X_j] = sum_k c[i][j][k] X_k."""

    def __init__(self, constants, labels=None, check=True, tol=EPS):
        self.dim = len(constants)
        self.c = [[list(constants[i][j]) for j in range(self.dim)]
                  for i in range(self.dim)]
        self.labels = list(labels) if labels else [f"X{i+1}" for i in range(self.dim)]
        if check:
            self._check_antisymmetry(tol)
            if not check_jacobi(self, tol=tol):
                raise ValueError("structure constants violate the Jacobi identity")

    @classmethod
    def from_sparse(cls, dim, triples, labels=None, check=True, tol=EPS):
        """Build from entries (i, j, k, value) given for i < j only."""
        c = [[[0] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in triples:
            if i == j:
                raise ValueError(f"diagonal bracket entry [{i},{i}]")
            c[i][j][k] = c[i][j][k] + v
            c[j][i][k] = c[j][i][k] - v
        return cls(c, labels=labels, check=check, tol=tol)

    def _check_antisymmetry(self, tol):
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    d = self.c[i][j][k] + self.c[j][i][k]
                    if is_exact(d):
                        ok = d == 0
                    else:
                        ok = abs(float(d)) <= tol
                    if not ok:
                        raise ValueError("structure constants are not antisymmetric")

    def bracket(self, x, y):
        """Bracket of two coefficient vectors."""
        out = [0] * self.dim
        for i, xi in enumerate(x):
            if _z(xi):
                continue
            for j, yj in enumerate(y):
                if _z(yj):
                    continue
                cij = self.c[i][j]
                coef = xi * yj
                for k in range(self.dim):
                    if not _z(cij[k]):
                        out[k] = out[k] + coef * cij[k]
        return out

    def basis_vector(self, i, one=1):
        v = [0] * self.dim
        v[i] = one
        return v


def _z(x):
    if is_exact(x):
        return x == 0
    return x == 0.0


def check_jacobi(L, tol=EPS):
    """True iff [[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0 on all basis triples."""
    d = L.dim
    for i in range(d):
        ei = L.basis_vector(i)
        for j in range(i + 1, d):
            ej = L.basis_vector(j)
            bij = L.bracket(ei, ej)
            for k in range(j + 1, d):
                ek = L.basis_vector(k)
                total = L.bracket(bij, ek)
                total = smallmat.vec_add(total, L.bracket(L.bracket(ej, ek), ei))
                total = smallmat.vec_add(total, L.bracket(L.bracket(ek, ei), ej))
                for t in total:
                    if is_exact(t):
                        if t != 0:
                            return False
                    elif abs(float(t)) > tol:
                        return False
    return True


class ReductiveSpace:
    """g = h (+) m along basis indices, with Ad(H)-invariance at bracket level."""

    def __init__(self, algebra, h_indices, m_indices, check=True):
        self.algebra = algebra
        self.h_idx = list(h_indices)
        self.m_idx = list(m_indices)
        if sorted(self.h_idx + self.m_idx) != list(range(algebra.dim)):
            raise ValueError("h and m indices must partition the basis")
        self.dim_h = len(self.h_idx)
        self.dim_m = len(self.m_idx)
        self._tables()
        if check:
            self._check_reductive()

    def _tables(self):
        L = self.algebra
        m, h = self.m_idx, self.h_idx
        # m x m brackets split into m- and h-components
        self.bm = [[None] * self.dim_m for _ in range(self.dim_m)]
        self.bh = [[None] * self.dim_m for _ in range(self.dim_m)]
        for a, ia in enumerate(m):
            for b, ib in enumerate(m):
                w = L.bracket(L.basis_vector(ia), L.basis_vector(ib))
                self.bm[a][b] = [w[i] for i in m]
                self.bh[a][b] = [w[i] for i in h]
        # ad of h-basis acting on m
        self.ad_h = []
        self.ad_h_h = []
        for ih in h:
            rows_m = []
            rows_h = []
            for ia in m:
                w = L.bracket(L.basis_vector(ih), L.basis_vector(ia))
                rows_m.append([w[i] for i in m])
                rows_h.append([w[i] for i in h])
            # column-action matrix: ad(h) X_a = sum_b M[b][a] X_b
            self.ad_h.append(smallmat.transpose(rows_m))
            self.ad_h_h.append(rows_h)

    def _check_reductive(self):
        L = self.algebra
        for ih in self.h_idx:
            for jh in self.h_idx:
                w = L.bracket(L.basis_vector(ih), L.basis_vector(jh))
                if any(not _z(w[i]) for i in self.m_idx):
                    raise ValueError("[h,h] is not contained in h")
        for rows in self.ad_h_h:
            for row in rows:
                if any(not _z(x) for x in row):
                    raise ValueError("[h,m] is not contained in m")

    # -- m-level operations -------------------------------------------------
    def bracket_m(self, x, y):
        """m-projection of the bracket of two m-vectors."""
        out = [0] * self.dim_m
        for a, xa in enumerate(x):
            if _z(xa):
                continue
            for b, yb in enumerate(y):
                if _z(yb):
                    continue
                w = self.bm[a][b]
                coef = xa * yb
                for k in range(self.dim_m):
                    if not _z(w[k]):
                        out[k] = out[k] + coef * w[k]
        return out

    def bracket_h(self, x, y):
        """h-projection of the bracket of two m-vectors."""
        out = [0] * self.dim_h
        for a, xa in enumerate(x):
            if _z(xa):
                continue
            for b, yb in enumerate(y):
                if _z(yb):
                    continue
                w = self.bh[a][b]
                coef = xa * yb
                for k in range(self.dim_h):
                    if not _z(w[k]):
                        out[k] = out[k] + coef * w[k]
        return out

    def ad_h_action(self, h_coeffs):
        """Matrix of ad(sum h_i H_i) acting on m."""
        n = self.dim_m
        out = [[0] * n for _ in range(n)]
        for coef, mat in zip(h_coeffs, self.ad_h):
            if _z(coef):
                continue
            for r in range(n):
                row = mat[r]
                for s in range(n):
                    if not _z(row[s]):
                        out[r][s] = out[r][s] + coef * row[s]
        return out


# ---------------------------------------------------------------------------
def is_invariant(space, alpha, tol=EPS):
    """True iff the form on m is annihilated by every ad(h), h in h."""
    n = space.dim_m
    if alpha.n != n:
        raise ValueError("form dimension does not match dim m")
    tuples, _ = index_tuples(n, alpha.k)
    for mat in space.ad_h:
        for idx in tuples:
            total = 0
            for slot in range(len(idx)):
                for s in range(n):
                    coef = mat[s][idx[slot]]
                    if _z(coef):
                        continue
                    replaced = idx[:slot] + (s,) + idx[slot + 1:]
                    total = total + coef * alpha.coeff(replaced)
            if is_exact(total):
                if total != 0:
                    return False
            elif abs(float(total)) > tol:
                return False
    return True


def is_invariant_endo(space, J, tol=EPS):
    """True iff the endomorphism of m commutes with every ad(h)."""
    for mat in space.ad_h:
        d = smallmat.mat_sub(smallmat.mat_mul(mat, J), smallmat.mat_mul(J, mat))
        if smallmat.is_float_data(d):
            if smallmat.mat_max_abs(d) > tol:
                return False
        elif any(x != 0 for row in d for x in row):
            return False
    return True


def is_invariant_metric(space, g, tol=EPS):
    """g([h,X],Y) + g(X,[h,Y]) = 0 for all basis h, X, Y."""
    for mat in space.ad_h:
        d = smallmat.mat_add(
            smallmat.mat_mul(smallmat.transpose(mat), g),
            smallmat.mat_mul(g, mat))
        if smallmat.is_float_data(d):
            if smallmat.mat_max_abs(d) > tol:
                return False
        elif any(x != 0 for row in d for x in row):
            return False
    return True


def ce_differential(space, alpha, tol=EPS, check_invariance=True):
    """Differential of an invariant form on the homogeneous space.

    (d a)(X_0..X_p) = sum_{i<j} (-1)^{i+j} a([X_i,X_j]_m, X_0..^i..^j..X_p).
    The sign convention is pinned by the cyclic co-frame requirement
    d e_1 = e_2 ^ e_3 on the S^3 x S^3 model algebra.
    """
    n = space.dim_m
    if check_invariance and not is_invariant(space, alpha, tol=tol):
        raise NotInvariant("form is not h-invariant")
    k = alpha.k
    out = KForm.zero(n, k + 1)
    if k + 1 > n:
        return out
    tuples, pos = index_tuples(n, k + 1)
    for t_out in tuples:
        total = 0
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                w = space.bm[t_out[a]][t_out[b]]
                rest = t_out[:a] + t_out[a + 1:b] + t_out[b + 1:]
                sgn = -1 if (a + b) % 2 else 1
                for s in range(n):
                    if _z(w[s]):
                        continue
                    val = alpha.coeff((s,) + rest)
                    if not _z(val):
                        total = total + sgn * (w[s] * val)
        out.c[pos[t_out]] = total
    return out


# ---------------------------------------------------------------------------
def nomizu_levi_civita(space, g, tol=EPS):
    """Levi-Civita connection of an invariant metric, as the Nomizu operator.

    Returns Gamma with Gamma[i][j] the m-vector of the covariant derivative
    of X_j along X_i at the base point:
        Gamma(X,Y) = [X,Y]_m / 2 + U(X,Y),
        2 g(U(X,Y), Z) = g([Z,X]_m, Y) + g(X, [Z,Y]_m).
    """
    if not is_invariant_metric(space, g, tol=tol):
        raise ValueError("metric is not h-invariant")
    n = space.dim_m
    half = Fraction(1, 2) if not smallmat.is_float_data(g) else 0.5
    gamma = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rhs = []
            for z in range(n):
                t1 = smallmat.vec_dot(smallmat.mat_vec(g, space.bm[z][i]), _mvec(n, j))
                t2 = smallmat.vec_dot(list(g[i]), space.bm[z][j])
                rhs.append(half * (t1 + t2))
            u = smallmat.solve(g, rhs)
            gamma[i][j] = [half * space.bm[i][j][r] + u[r] for r in range(n)]
    return gamma


def _mvec(n, i, one=1):
    v = [0] * n
    v[i] = one
    return v


def connection_applies(gamma, x, y):
    """Gamma(x, y) for coefficient vectors x, y (bilinear extension)."""
    n = len(gamma)
    out = [0] * n
    for i, xi in enumerate(x):
        if _z(xi):
            continue
        for j, yj in enumerate(y):
            if _z(yj):
                continue
            w = gamma[i][j]
            coef = xi * yj
            for k in range(n):
                if not _z(w[k]):
                    out[k] = out[k] + coef * w[k]
    return out


def _nomizu_matrix(gamma, x):
    """Matrix of Y -> Gamma(x, Y)."""
    n = len(gamma)
    cols = []
    for j in range(n):
        cols.append(connection_applies(gamma, x, _mvec(n, j)))
    return smallmat.transpose(cols)


def _random_vectors(n, count, exact, rng):
    out = []
    for _ in range(count):
        if exact:
            out.append([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)])
        else:
            out.append([rng.uniform(-1, 1) for _ in range(n)])
    return out


def nearly_kahler_residual(space, g, J, tol=EPS, samples=25, seed=7):
    """Max residual of (nabla_X J) X over basis and random X.

    Checks the preconditions (J^2 = -Id, orthogonality, invariance) and
    reports them distinctly, then evaluates the defining identity through
    the Nomizu operator.  Returns (ok, residual).
    """
    n = space.dim_m
    j2 = smallmat.mat_mul(J, J)
    d = smallmat.mat_add(j2, smallmat.identity(n, _one_like(J)))
    if smallmat.mat_max_abs(d) > tol:
        raise ValueError("J^2 differs from -Id")
    jgj = smallmat.mat_mul(smallmat.transpose(J), smallmat.mat_mul(g, J))
    if smallmat.mat_max_abs(smallmat.mat_sub(jgj, g)) > tol:
        raise ValueError("J is not orthogonal for g")
    if not is_invariant_endo(space, J, tol=tol):
        raise ValueError("J is not an invariant tensor")
    gamma = nomizu_levi_civita(space, g, tol=tol)
    exact = not (smallmat.is_float_data(g) or smallmat.is_float_data(J))
    rng = random.Random(seed)
    vectors = [_mvec(n, i) for i in range(n)]
    vectors += _random_vectors(n, samples, exact, rng)
    worst = 0.0
    for x in vectors:
        jx = smallmat.mat_vec(J, x)
        resid = smallmat.vec_sub(
            connection_applies(gamma, x, jx),
            smallmat.mat_vec(J, connection_applies(gamma, x, x)))
        worst = max(worst, max(abs(float(r)) for r in resid))
    return worst <= tol, worst


def _one_like(mat):
    for row in mat:
        for x in row:
            if isinstance(x, float):
                return 1.0
            if isinstance(x, QSqrt3):
                return Fraction(1)
    return Fraction(1)


def intrinsic_eta(space, g, J, tol=EPS):
    """Torsion of the canonical Hermitian connection:  eta_X = J (nabla_X J)/2.

    Returns eta[i][j] = the m-vector eta_{X_i} X_j.
    """
    gamma = nomizu_levi_civita(space, g, tol=tol)
    n = space.dim_m
    half = Fraction(1, 2) if not smallmat.is_float_data(g) else 0.5
    eta = [[None] * n for _ in range(n)]
    for i in range(n):
        x = _mvec(n, i)
        for j in range(n):
            y = _mvec(n, j)
            nj = smallmat.vec_sub(
                connection_applies(gamma, x, smallmat.mat_vec(J, y)),
                smallmat.mat_vec(J, connection_applies(gamma, x, y)))
            eta[i][j] = [half * c for c in smallmat.mat_vec(J, nj)]
    return eta


def eta_total_skew_residual(g, eta):
    """Max deviation of (X,Y,Z) -> g(eta_X Y, Z) from total skew-symmetry."""
    n = len(eta)
    t = [[[smallmat.vec_dot(smallmat.mat_vec(g, eta[i][j]), _mvec(n, k))
           for k in range(n)] for j in range(n)] for i in range(n)]
    worst = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                worst = max(worst,
                            abs(float(t[i][j][k] + t[j][i][k])),
                            abs(float(t[i][j][k] + t[i][k][j])))
    return worst


def eta_parallel_residual(space, g, J, tol=EPS):
    """Max coefficient of the canonical-connection derivative of eta.

    The canonical Hermitian connection is nabla - eta; its torsion eta is
    parallel exactly on nearly Kahler structures.
    """
    gamma = nomizu_levi_civita(space, g, tol=tol)
    eta = intrinsic_eta(space, g, J, tol=tol)
    n = space.dim_m
    gbar = [[smallmat.vec_sub(gamma[i][j], eta[i][j]) for j in range(n)]
            for i in range(n)]
    worst = 0.0
    for w in range(n):
        lam = _nomizu_matrix(gbar, _mvec(n, w))
        for i in range(n):
            for j in range(n):
                term = smallmat.mat_vec(lam, eta[i][j])
                lx = smallmat.mat_vec(lam, _mvec(n, i))
                ly = smallmat.mat_vec(lam, _mvec(n, j))
                e_lx = _eta_applied(eta, lx, _mvec(n, j))
                e_ly = _eta_applied(eta, _mvec(n, i), ly)
                resid = smallmat.vec_sub(smallmat.vec_sub(term, e_lx), e_ly)
                worst = max(worst, max(abs(float(r)) for r in resid))
    return worst


def _eta_applied(eta, x, y):
    n = len(eta)
    out = [0] * n
    for i, xi in enumerate(x):
        if _z(xi):
            continue
        for j, yj in enumerate(y):
            if _z(yj):
                continue
            w = eta[i][j]
            coef = xi * yj
            for k in range(n):
                if not _z(w[k]):
                    out[k] = out[k] + coef * w[k]
    return out


def normal_torsion_curvature(space):
    """Torsion and curvature of the normal connection, as bracket projections.

    T(X,Y) = -[X,Y]_m (m-valued), R_{X,Y} = [X,Y]_h (h-valued).
    """
    n = space.dim_m
    t = [[[-c for c in space.bm[i][j]] for j in range(n)] for i in range(n)]
    r = [[list(space.bh[i][j]) for j in range(n)] for i in range(n)]
    return t, r


def is_naturally_reductive(space, g, tol=EPS):
    """g([X,Y]_m, Z) = -g([X,Z]_m, Y) over all basis triples."""
    n = space.dim_m
    for i in range(n):
        for j in range(n):
            gij = smallmat.mat_vec(g, space.bm[i][j])
            for k in range(n):
                lhs = gij[k]
                rhs = smallmat.vec_dot(smallmat.mat_vec(g, space.bm[i][k]), _mvec(n, j))
                d = lhs + rhs
                if is_exact(d):
                    if d != 0:
                        return False
                elif abs(float(d)) > tol:
                    return False
    return True


# ---------------------------------------------------------------------------
def _cplx_pair_bracket(space, u, v, s, t):
    """Full bracket of (u + i v) and (s + i t), m-vectors, split parts.

    Returns ((re_m, im_m), (re_h, im_h)).
    """
    re_m = smallmat.vec_sub(space.bracket_m(u, s), space.bracket_m(v, t))
    im_m = smallmat.vec_add(space.bracket_m(u, t), space.bracket_m(v, s))
    re_h = smallmat.vec_sub(space.bracket_h(u, s), space.bracket_h(v, t))
    im_h = smallmat.vec_add(space.bracket_h(u, t), space.bracket_h(v, s))
    return (re_m, im_m), (re_h, im_h)


def _max_vec(*vecs):
    return max((abs(float(x)) for v in vecs for x in v), default=0.0)


def check_3symmetric(space, J, tol=EPS):
    """Eigenspace bracket conditions of an order-3 splitting.

    With m+ spanned by X + i J X over the basis, verifies
    [m+, m+] c m-,  [m-, m-] c m+,  [m+, m-] c complexified h,
    entirely in real arithmetic.  Raises unless J^2 = -Id.
    """
    n = space.dim_m
    j2 = smallmat.mat_mul(J, J)
    dd = smallmat.mat_add(j2, smallmat.identity(n, _one_like(J)))
    if smallmat.mat_max_abs(dd) > tol:
        raise ValueError("J^2 differs from -Id")
    worst = 0.0
    for i in range(n):
        x = _mvec(n, i)
        jx = smallmat.mat_vec(J, x)
        for j in range(n):
            y = _mvec(n, j)
            jy = smallmat.mat_vec(J, y)
            # [m+, m+] c m-
            (am, bm), (ah, bh) = _cplx_pair_bracket(space, x, jx, y, jy)
            plus_re = smallmat.vec_sub(am, smallmat.mat_vec(J, bm))
            plus_im = smallmat.vec_add(bm, smallmat.mat_vec(J, am))
            worst = max(worst, _max_vec(ah, bh, plus_re, plus_im))
            # [m-, m-] c m+
            (cm, dm), (ch, dh) = _cplx_pair_bracket(
                space, x, [-c for c in jx], y, [-c for c in jy])
            minus_re = smallmat.vec_add(cm, smallmat.mat_vec(J, dm))
            minus_im = smallmat.vec_sub(dm, smallmat.mat_vec(J, cm))
            worst = max(worst, _max_vec(ch, dh, minus_re, minus_im))
            # [m+, m-] c h (x) C
            (em, fm), _ = _cplx_pair_bracket(space, x, jx, y, [-c for c in jy])
            worst = max(worst, _max_vec(em, fm))
    return worst <= tol


def is_complex_subalgebra(space, J, tol=EPS):
    """True iff m+ = span{X + i J X} is closed under bracket mod h (x) C.

    Closure of the (1,0)-distribution characterizes the integrable invariant
    almost complex structures.
    """
    n = space.dim_m
    worst = 0.0
    for i in range(n):
        x = _mvec(n, i)
        jx = smallmat.mat_vec(J, x)
        for j in range(n):
            y = _mvec(n, j)
            jy = smallmat.mat_vec(J, y)
            (am, bm), _ = _cplx_pair_bracket(space, x, jx, y, jy)
            # m- component of [w, w'] must vanish: P-(A + iB) = 0
            minus_re = smallmat.vec_add(am, smallmat.mat_vec(J, bm))
            minus_im = smallmat.vec_sub(bm, smallmat.mat_vec(J, am))
            worst = max(worst, _max_vec(minus_re, minus_im))
    return worst <= tol


def acs_from_automorphism(S, tol=1e-12):
    """Almost complex structure of an order-3 symmetry:  J = (2 S + Id)/sqrt 3.

    Requires S^3 = Id with 1 not an eigenvalue; the returned J satisfies
    J^2 = -Id (exactly over Q(sqrt 3) for exact S).
    """
    n = len(S)
    exact = not smallmat.is_float_data(S)
    one = Fraction(1) if exact else 1.0
    s3 = smallmat.mat_mul(S, smallmat.mat_mul(S, S))
    d = smallmat.mat_sub(s3, smallmat.identity(n, one))
    if smallmat.mat_max_abs(d) > (0 if exact else tol):
        raise ValueError("S^3 differs from the identity")
    dsi = smallmat.mat_sub(S, smallmat.identity(n, one))
    dets = smallmat.det(dsi)
    if (exact and dets == 0) or (not exact and abs(float(dets)) <= tol):
        raise HasFixedVector("1 is an eigenvalue of S")
    if exact:
        coef = QSqrt3(0, Fraction(2, 3))  # 2/sqrt(3)
        half = Fraction(1, 2)
    else:
        coef = 2.0 / (3.0 ** 0.5)
        half = 0.5
    J = [[coef * (S[i][j] + (half if i == j else 0)) for j in range(n)]
         for i in range(n)]
    j2 = smallmat.mat_add(smallmat.mat_mul(J, J), smallmat.identity(n, one))
    if smallmat.mat_max_abs(j2) > (0 if exact else tol):
        raise ValueError("derived J does not square to -Id")
    return J


# ---------------------------------------------------------------------------
def curvature_operator(space, gamma, i, j):
    """R(X_i, X_j) as a matrix on m.

    R(X,Y) = [Lambda(X), Lambda(Y)] - Lambda([X,Y]_m) - ad([X,Y]_h),
    the curvature of the invariant connection with Nomizu operator Lambda.
    """
    n = space.dim_m
    li = _nomizu_matrix(gamma, _mvec(n, i))
    lj = _nomizu_matrix(gamma, _mvec(n, j))
    out = smallmat.mat_sub(smallmat.mat_mul(li, lj), smallmat.mat_mul(lj, li))
    out = smallmat.mat_sub(out, _nomizu_matrix(gamma, space.bm[i][j]))
    out = smallmat.mat_sub(out, space.ad_h_action(space.bh[i][j]))
    return out


def ricci(space, g, tol=EPS):
    """Ricci tensor of an invariant metric plus the Einstein verdict.

    Returns (ric, scal, einstein_ok, max_rel_dev): einstein_ok is the check
    Ric = (scal / dim m) g at relative tolerance 1e-8.
    """
    gamma = nomizu_levi_civita(space, g, tol=tol)
    n = space.dim_m
    ric = [[0] * n for _ in range(n)]
    ops = {}
    for i in range(n):
        for j in range(n):
            key = (min(i, j), max(i, j))
            if key not in ops and i != j:
                ops[key] = curvature_operator(space, gamma, key[0], key[1])
    for j in range(n):
        for k in range(n):
            s = 0
            for i in range(n):
                if i == j:
                    continue
                op = ops[(min(i, j), max(i, j))]
                v = [op[r][k] for r in range(n)]
                if i > j:
                    v = [-x for x in v]
                s = s + v[i]
            ric[j][k] = s
    ginv = smallmat.inv(g)
    scal = smallmat.trace(smallmat.mat_mul(ginv, ric))
    lam = exact_div(scal, n)
    dev = smallmat.mat_max_abs(smallmat.mat_sub(ric, smallmat.mat_scale(lam, g)))
    scale = max(smallmat.mat_max_abs(ric), 1e-30)
    rel = dev / scale
    return ric, scal, rel <= 1e-8, rel
