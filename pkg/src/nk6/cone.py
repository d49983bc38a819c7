"""Forms on the metric cone over a 6-dimensional link.

A cone form is a sum of terms r^a * beta and r^a dr ^ alpha with alpha,
beta constant-coefficient forms on the link.  The differential needs only
the link differential; the Hodge star of the cone metric r^2 g + dr^2 has
a closed form per term, so the parallel-form test (d rho = 0, d *rho = 0
for rho = r^2 dr ^ omega + r^3 psi) runs exactly in exact scalar mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from . import smallmat
from .exterior import KForm, hodge_star, metric_volume, wedge
from .hitchin import SU3Candidate, build_su3, form_dot, mu_volume_fit
from .scalars import EPS, exact_div, simplify


class ConeForm:
    """Formal sum of terms r^a * beta (no dr) and r^a dr ^ alpha."""

    def __init__(self):
        self.terms = {}

    @classmethod
    def monomial(cls, exponent, with_dr, form):
        out = cls()
        out.add(exponent, with_dr, form)
        return out

    def add(self, exponent, with_dr, form):
        if exponent < 0:
            raise ValueError("cone exponents must be nonnegative integers")
        if form.is_zero():
            return self
        key = (int(exponent), bool(with_dr), form.k)
        if key in self.terms:
            self.terms[key] = self.terms[key] + form
            if self.terms[key].is_zero():
                del self.terms[key]
        else:
            self.terms[key] = form
        return self

    def __add__(self, other):
        out = ConeForm()
        for (a, dr, _), f in self.terms.items():
            out.add(a, dr, f)
        for (a, dr, _), f in other.terms.items():
            out.add(a, dr, f)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        out = ConeForm()
        for (a, dr, _), f in self.terms.items():
            out.add(a, dr, f.scale(s))
        return out

    def max_abs(self):
        return max((f.max_abs() for f in self.terms.values()), default=0.0)

    def is_zero(self, tol=None):
        if tol is None:
            return all(f.is_zero() for f in self.terms.values())
        return self.max_abs() <= tol

    def term(self, exponent, with_dr, degree):
        return self.terms.get((exponent, with_dr, degree))

    def __repr__(self):
        bits = []
        for (a, dr, _), f in sorted(self.terms.items()):
            head = f"r^{a} dr^" if dr else f"r^{a} "
            bits.append(f"{head}{f!r}")
        return "ConeForm[" + "; ".join(bits) + "]"


def cone_rho(omega, psi):
    """rho = r^2 dr ^ omega + r^3 psi."""
    out = ConeForm()
    out.add(2, True, omega)
    out.add(3, False, psi)
    return out


def cone_differential(c, link_d):
    """d(r^a b) = a r^(a-1) dr^b + r^a d b;  d(r^a dr^al) = -r^a dr^(d al)."""
    out = ConeForm()
    for (a, dr, _), f in c.terms.items():
        if dr:
            out.add(a, True, link_d(f).scale(-1))
        else:
            if a > 0:
                out.add(a - 1, True, f.scale(a))
            out.add(a, False, link_d(f))
    return out


def cone_hodge(c, g, vol=None):
    """Hodge star of the cone metric r^2 g + dr^2, term by term.

    With p the degree of the link form:
      *(r^a beta)      = (-1)^p r^(a+6-2p) dr ^ *6(beta)
      *(r^a dr^alpha)  =        r^(a+6-2p) *6(alpha)
    where *6 is the link star of (g, vol).  Exponents must stay >= 0.
    """
    if vol is None:
        vol = metric_volume(g)
    out = ConeForm()
    for (a, dr, _), f in c.terms.items():
        star = hodge_star(f, g, vol)
        p = f.k
        exponent = a + 6 - 2 * p
        if dr:
            out.add(exponent, False, star)
        else:
            sign = -1 if p % 2 else 1
            out.add(exponent, True, star.scale(sign))
    return out


def u_basis_expansion(c, radius=1):
    """The cone form at fixed radius as a 7-form-algebra element.

    Index 0 is the radial co-vector (dr); link indices shift up by one.
    At radius 1 the orthonormal co-frame of the cone metric restricts to
    (dr, e1..e6), so rho = r^2 dr^omega + r^3 psi expands into the signed
    sum of unit monomials.
    """
    degrees = {k[2] + (1 if k[1] else 0) for k in c.terms}
    if len(degrees) > 1:
        raise ValueError("mixed total degrees in u-basis expansion")
    deg = degrees.pop() if degrees else 0
    total = KForm.zero(7, deg)
    for (a, dr, _), f in c.terms.items():
        scale = radius ** a
        for idx, v in f.terms():
            shifted = tuple(i + 1 for i in idx)
            if dr:
                shifted = (0,) + shifted
            total = total + KForm.basis(7, shifted, scale * v)
    return total


def complex_orientation(s):
    """Sign of omega^3: the orientation the almost complex structure induces.

    The link star is taken in this orientation, which is what makes
    *psi = phi and hence  *rho = -r^3 dr ^ phi + (1/2) r^4 omega^omega.
    """
    o3 = wedge(wedge(s.omega, s.omega), s.omega)
    v = o3.c[0]
    return 1 if float(v) > 0 else -1


# ---------------------------------------------------------------------------
@dataclass
class ConeReport:
    d_rho_residual: float
    d_star_rho_residual: float
    omega2_coefficient: object
    phi_term_residual: float
    normalization: object
    verdict: bool


def cone_check(s, link_d, tol=EPS):
    """Closed-and-coclosed test for the cone 3-form of an SU(3)-structure.

    The structure is first rescaled to unit metric normalization (the
    least-squares constant of d phi = -2 c omega^2 becomes 1), the scale a
    cone can absorb into the radius; then rho is built and d rho, d *rho
    are evaluated with the link differential and the term-wise cone star.
    Also reports the fitted coefficient of the r^4 omega^omega term of
    *rho (1/2 for a parallel cone form) and the residual of its r^3 dr
    term against -phi.
    """
    c, _ = mu_volume_fit(s, link_d)
    scale = None
    if (not isinstance(c, float) and c > 0) or (isinstance(c, float) and float(c) > tol):
        scale = c
        omega = s.omega.scale(scale)
        psi = s.psi.scale(scale)
        rebuilt = build_su3(SU3Candidate(omega, psi, s.vol), tol=tol)
    else:
        scale = 1
        rebuilt = s

    rho = cone_rho(rebuilt.omega, rebuilt.psi)
    d_rho = cone_differential(rho, link_d)
    vol_g = metric_volume(rebuilt.g, orientation=complex_orientation(rebuilt))
    star_rho = cone_hodge(rho, rebuilt.g, vol_g)
    d_star_rho = cone_differential(star_rho, link_d)

    r1 = d_rho.max_abs()
    r2 = d_star_rho.max_abs()

    o2 = wedge(rebuilt.omega, rebuilt.omega)
    quartic_term = star_rho.term(4, False, 4)
    if quartic_term is None:
        coeff = 0
    else:
        coeff = simplify(exact_div(form_dot(quartic_term, o2), form_dot(o2, o2)))
    phi_term = star_rho.term(3, True, 3)
    if phi_term is None:
        phi_resid = rebuilt.phi.max_abs()
    else:
        phi_resid = (phi_term + rebuilt.phi).max_abs()

    return ConeReport(
        d_rho_residual=r1,
        d_star_rho_residual=r2,
        omega2_coefficient=coeff,
        phi_term_residual=phi_resid,
        normalization=scale,
        verdict=r1 <= tol and r2 <= tol,
    )


def g2_metric_identity(rho7, tol=1e-8):
    """Fitted constant of  i_X rho ^ i_Y rho ^ rho = c <X, Y> vol7.

    Evaluated on the standard basis of R^7; returns (c, max deviation from
    c * identity).  For the unit cone form of a parallel structure the
    standard identity gives |c| = 6 (recorded by callers, not asserted).
    """
    from .exterior import interior

    n = 7
    q = [[0] * n for _ in range(n)]
    for i in range(n):
        ei = [0] * n
        ei[i] = 1
        ri = interior(ei, rho7)
        for j in range(i, n):
            ej = [0] * n
            ej[j] = 1
            rj = interior(ej, rho7)
            top = wedge(wedge(ri, rj), rho7)
            q[i][j] = q[j][i] = top.c[0]
    c = exact_div(smallmat.trace(q), n)
    dev = smallmat.mat_max_abs(
        smallmat.mat_sub(q, smallmat.mat_scale(c, smallmat.identity(n))))
    return simplify(c), dev


# ---------------------------------------------------------------------------
class SpanDifferential:
    """Link differential defined on an explicit invariant span.

    Pairs (form, derivative) fix the operator; an input is decomposed in
    the span (exactly in exact mode) and mapped linearly.  Raises when the
    input is outside the span.
    """

    def __init__(self, pairs):
        self.by_degree = {}
        for form, deriv in pairs:
            self.by_degree.setdefault(form.k, []).append((form, deriv))

    def __call__(self, form):
        pairs = self.by_degree.get(form.k)
        if form.k == 0 or (pairs is None and form.is_zero()):
            return KForm.zero(form.n, form.k + 1)
        if pairs is None:
            raise ValueError(f"no invariant forms of degree {form.k} in the span")
        columns = [list(f.c) for f, _ in pairs]
        coords = smallmat.solve_in_span(columns, list(form.c))
        out = KForm.zero(form.n, form.k + 1)
        for x, (_, deriv) in zip(coords, pairs):
            out = out + deriv.scale(x)
        return out


def s6_link_differential(candidate_structure):
    """The sphere differential on the invariant span at a point of S^6.

    The values are pinned by flat 7-space calculus:  the radial-contraction
    identity d(i_E alpha) = k alpha for constant k-forms (verified exactly
    in the octonion module's tests) gives d omega = 3 psi and
    d phi = -2 omega^2, and pullback of a constant form gives d psi = 0;
    d(omega^2) follows by Leibniz.
    """
    s = candidate_structure
    o2 = wedge(s.omega, s.omega)
    zero4 = KForm.zero(6, 4)
    zero5 = KForm.zero(6, 5)
    d_omega2 = wedge(s.psi.scale(3), s.omega) + wedge(s.omega, s.psi.scale(3))
    pairs = [
        (s.omega, s.psi.scale(3)),
        (s.psi, zero4),
        (s.phi, o2.scale(-2)),
        (o2, d_omega2),
        (metric_volume(s.g), KForm.zero(6, 7)),
    ]
    return SpanDifferential(pairs)
