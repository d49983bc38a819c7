"""Small dense linear algebra over generic scalars.

Matrices are lists of row lists, vectors plain lists.  The same Gaussian
elimination serves exact scalars (pivot on any nonzero entry, arithmetic
stays exact) and floats (partial pivoting, zero test against a tolerance).
Dimensions never exceed a few dozen here, so nothing clever is needed.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import EPS, exact_div, is_exact


class SingularMatrix(ValueError):
    pass


def zeros(n, m):
    return [[0 for _ in range(m)] for _ in range(n)]


def identity(n, one=1):
    return [[one if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[_dot(row, col) for col in bt] for row in a]


def mat_vec(a, v):
    return [_dot(row, v) for row in a]


def _dot(u, v):
    s = 0
    for x, y in zip(u, v):
        s = s + x * y
    return s


vec_dot = _dot


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(c, u):
    return [c * x for x in u]


def mat_add(a, b):
    return [vec_add(r, s) for r, s in zip(a, b)]


def mat_sub(a, b):
    return [vec_sub(r, s) for r, s in zip(a, b)]


def mat_scale(c, a):
    return [vec_scale(c, r) for r in a]


def trace(a):
    s = 0
    for i in range(len(a)):
        s = s + a[i][i]
    return s


def mat_max_abs(a):
    return max((abs(float(x)) for row in a for x in row), default=0.0)


def is_float_data(a):
    for row in a:
        for x in row:
            if not is_exact(x):
                return True
    return False


def _is_zero(x, float_mode, tol):
    if float_mode:
        return abs(float(x)) <= tol
    return x == 0


def _forward_eliminate(m, ncols, float_mode, tol):
    """Row-reduce in place; returns list of pivot column indices."""
    pivots = []
    row = 0
    nrows = len(m)
    for col in range(ncols):
        if row >= nrows:
            break
        # pick pivot
        best = None
        if float_mode:
            cand = max(range(row, nrows), key=lambda r: abs(float(m[r][col])))
            if not _is_zero(m[cand][col], True, tol):
                best = cand
        else:
            for r in range(row, nrows):
                if m[r][col] != 0:
                    best = r
                    break
        if best is None:
            continue
        m[row], m[best] = m[best], m[row]
        piv = m[row][col]
        m[row] = [exact_div(x, piv) for x in m[row]]
        for r in range(nrows):
            if r != row and not _is_zero(m[r][col], float_mode, tol):
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    return pivots


def solve(a, b, tol=EPS):
    """Solve a x = b for square a; b a vector or a matrix of columns."""
    n = len(a)
    vector_rhs = not isinstance(b[0], list)
    rhs = [[x] for x in b] if vector_rhs else [list(r) for r in b]
    width = len(rhs[0])
    m = [list(a[i]) + rhs[i] for i in range(n)]
    float_mode = is_float_data(m)
    pivots = _forward_eliminate(m, n, float_mode, tol)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    sol = [row[n:] for row in m]
    if vector_rhs:
        return [row[0] for row in sol]
    return sol


def inv(a):
    n = len(a)
    one = Fraction(1) if not is_float_data(a) else 1.0
    return solve(a, identity(n, one))


def det(a):
    n = len(a)
    m = [list(row) for row in a]
    float_mode = is_float_data(m)
    sign = 1
    out = 1
    for col in range(n):
        best = None
        if float_mode:
            cand = max(range(col, n), key=lambda r: abs(float(m[r][col])))
            if abs(float(m[cand][col])) > 0.0:
                best = cand
        else:
            for r in range(col, n):
                if m[r][col] != 0:
                    best = r
                    break
        if best is None:
            return 0 if not float_mode else 0.0
        if best != col:
            m[col], m[best] = m[best], m[col]
            sign = -sign
        piv = m[col][col]
        out = out * piv
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = exact_div(m[r][col], piv)
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return sign * out


def solve_in_span(columns, target, tol=EPS):
    """Coordinates of ``target`` in the span of ``columns``.

    ``columns`` is a list of vectors (same length as ``target``).  Raises
    SingularMatrix when the system is inconsistent, i.e. the target is not
    in the span.
    """
    nrows = len(target)
    ncols = len(columns)
    m = [[columns[j][i] for j in range(ncols)] + [target[i]]
         for i in range(nrows)]
    float_mode = is_float_data(m)
    pivots = _forward_eliminate(m, ncols, float_mode, tol)
    coords = [0] * ncols
    for row, col in enumerate(pivots):
        coords[col] = m[row][ncols]
    for row in range(len(pivots), nrows):
        if not _is_zero(m[row][ncols], float_mode, max(tol, 1e-8)):
            raise SingularMatrix("target not in span")
    return coords


def nullspace(a, tol=EPS):
    """Basis of the kernel of a (list of vectors)."""
    nrows = len(a)
    if nrows == 0:
        return []
    ncols = len(a[0])
    m = [list(row) for row in a]
    float_mode = is_float_data(m)
    pivots = _forward_eliminate(m, ncols, float_mode, tol)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    one = 1.0 if float_mode else Fraction(1)
    for f in free:
        v = [0] * ncols
        v[f] = one
        for row, col in enumerate(pivots):
            v[col] = -m[row][f]
        basis.append(v)
    return basis


def leading_principal_minors(a):
    return [det([row[: k + 1] for row in a[: k + 1]]) for k in range(len(a))]


def is_positive_definite(a, tol=0.0):
    """Sylvester criterion on the leading principal minors."""
    for mk in leading_principal_minors(a):
        if is_exact(mk):
            if mk <= 0:
                return False
        elif float(mk) <= tol:
            return False
    return True


def is_symmetric(a, tol=EPS):
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            d = a[i][j] - a[j][i]
            if is_exact(d):
                if d != 0:
                    return False
            elif abs(float(d)) > tol:
                return False
    return True
