"""SU(3)-structures from a stable pair of forms in dimension 6.

A 2-form omega and a 3-form psi determine, when psi lies in the open
GL(6)-orbit with stabilizer SL(3,C) and the compatibility conditions hold,
an almost complex structure J, a metric g and a second 3-form phi with
psi + i phi of type (3,0).  The nearly Kahler property is then the first
order system  d omega = 3 psi,  d phi = -2 mu omega ^ omega.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import smallmat
from .exterior import KForm, index_tuples, interior, lambda5_to_vector, wedge
from .scalars import EPS, exact_div, is_exact, simplify, sqrt_scalar


class StructureError(ValueError):
    """A named algebraic condition of the construction failed."""

    label = "structure"

    def __init__(self, message=""):
        super().__init__(message or self.__doc__)


class NotStable(StructureError):
    """psi is not stable: the quartic invariant tau(psi) is >= 0."""

    label = "NotStable"


class NotType11(StructureError):
    """omega ^ psi != 0, so omega is not of type (1,1) for J(psi)."""

    label = "NotType11"


class DegenerateOmega(StructureError):
    """omega ^ omega ^ omega = 0, so omega is degenerate."""

    label = "DegenerateOmega"


class NotPositive(StructureError):
    """The symmetric form omega(., J .) is not positive definite."""

    label = "NotPositive"


class SlotInconsistent(StructureError):
    """psi(J.,.,.) depends on the slot, so psi is not of pure type for J."""

    label = "SlotInconsistent"


@dataclass
class SU3Candidate:
    """A 2-form and a 3-form on the same 6-dimensional space, plus an
    orientation (a reference nonzero 6-form)."""

    omega: KForm
    psi: KForm
    vol: KForm

    def __post_init__(self):
        if self.omega.n != 6 or self.psi.n != 6 or self.vol.n != 6:
            raise ValueError("candidate forms must live in dimension 6")
        if self.omega.k != 2 or self.psi.k != 3 or self.vol.k != 6:
            raise ValueError("candidate degrees must be (2, 3, 6)")
        if self.vol.is_zero():
            raise ValueError("reference volume form vanishes")


@dataclass
class SU3Structure:
    """Validated bundle (omega, psi, phi, J, g, kappa, tau0, vol)."""

    omega: KForm
    psi: KForm
    phi: KForm
    J: list
    g: list
    kappa: object
    tau0: object
    vol: KForm


@dataclass
class NKReport:
    """Residuals of the first-order system plus the fitted constant mu."""

    residual_r1: float
    residual_r2: float
    mu: object
    verdict: bool


# ---------------------------------------------------------------------------
def hitchin_K(psi, vol, tol=EPS):
    """Endomorphism K with K(X) the vector of  interior(X, psi) ^ psi.

    Normalized against the given orientation form; returns (K, tau0) where
    K^2 = tau0 * Id (verified) and tau0 = trace(K^2)/6.
    """
    if psi.n != 6 or psi.k != 3:
        raise ValueError("expected a 3-form in dimension 6")
    n = 6
    cols = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        sigma = wedge(interior(e, psi), psi)
        cols.append(lambda5_to_vector(sigma, vol))
    K = smallmat.transpose(cols)
    K2 = smallmat.mat_mul(K, K)
    tau0 = exact_div(smallmat.trace(K2), 6)
    dev = smallmat.mat_sub(K2, smallmat.mat_scale(tau0, smallmat.identity(n, _one(K2))))
    if smallmat.is_float_data(K2):
        scale = max(smallmat.mat_max_abs(K2), 1.0)
        if smallmat.mat_max_abs(dev) > 1e-8 * scale:
            raise ArithmeticError("K^2 is not a multiple of the identity")
    elif any(x != 0 for row in dev for x in row):
        raise ArithmeticError("K^2 is not a multiple of the identity")
    return K, simplify(tau0)


def _one(mat):
    return 1.0 if smallmat.is_float_data(mat) else Fraction(1)


def tau(psi, vol):
    """Quartic invariant tau0 with tau(psi) = tau0 vol^2; stable iff < 0."""
    _, tau0 = hitchin_K(psi, vol)
    return tau0


def phi_from(psi, J, tol=EPS):
    """The partner 3-form phi with  interior(X, psi) = interior(JX, phi).

    Computed as phi(X,Y,Z) = -psi(JX,Y,Z); the three slot placements are
    compared and must agree (exactly in exact mode), which holds precisely
    when psi is of type (3,0)+(0,3) for J.
    """
    n = 6
    tuples, _ = index_tuples(n, 3)
    phis = []
    for slot in range(3):
        coeffs = []
        for t in tuples:
            total = 0
            for s in range(n):
                js = J[s][t[slot]]
                if _is_zero_scalar(js):
                    continue
                replaced = t[:slot] + (s,) + t[slot + 1:]
                val = psi.coeff(replaced)
                if not _is_zero_scalar(val):
                    total = total + js * val
            coeffs.append(-total)
        phis.append(KForm(n, 3, coeffs))
    exact = not (smallmat.is_float_data(J) or any(isinstance(c, float) for c in psi.c))
    for other in phis[1:]:
        d = phis[0] - other
        if exact:
            if not d.is_zero():
                raise SlotInconsistent()
        elif d.max_abs() > max(tol, 1e-8 * max(phis[0].max_abs(), 1.0)):
            raise SlotInconsistent()
    return phis[0]


def _is_zero_scalar(x):
    if is_exact(x):
        return x == 0
    return x == 0.0


def build_su3(cand, tol=EPS):
    """Assemble the full SU(3)-structure from a candidate pair, or raise.

    Errors name the violated condition: NotStable (stability of psi),
    NotType11 (omega ^ psi != 0), DegenerateOmega (omega^3 = 0),
    NotPositive (the induced symmetric form is not positive definite).
    """
    omega, psi, vol = cand.omega, cand.psi, cand.vol
    n = 6
    exact = not any(isinstance(c, float)
                    for c in (*omega.c, *psi.c, *vol.c))

    K, tau0 = hitchin_K(psi, vol, tol=tol)
    if exact:
        stable = tau0 < 0
    else:
        stable = float(tau0) < 0
    if not stable:
        raise NotStable(f"tau0 = {tau0} is not negative")

    op = wedge(omega, psi)
    op_zero = op.is_zero() if exact else op.max_abs() <= tol
    if not op_zero:
        raise NotType11(f"omega ^ psi has size {op.max_abs()}")

    o3 = wedge(wedge(omega, omega), omega)
    o3_zero = o3.is_zero() if exact else o3.max_abs() <= tol
    if o3_zero:
        raise DegenerateOmega()

    kappa = sqrt_scalar(-tau0)
    if isinstance(kappa, float) and exact:
        # no exact square root in Q(sqrt 3); continue in floats
        K = [[float(x) for x in row] for row in K]
        omega = omega.to_float()
        psi = psi.to_float()
        vol = vol.to_float()
        exact = False
    J = [[exact_div(x, kappa) for x in row] for row in K]

    j2 = smallmat.mat_add(smallmat.mat_mul(J, J), smallmat.identity(n, _one(J)))
    if smallmat.is_float_data(J):
        if smallmat.mat_max_abs(j2) > 1e-8:
            raise ArithmeticError("J^2 differs from -Id")
    elif any(x != 0 for row in j2 for x in row):
        raise ArithmeticError("J^2 differs from -Id")

    # g(X, Y) = omega(X, JY)
    g = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            jy = [J[r][j] for r in range(n)]
            val = 0
            for r in range(n):
                if not _is_zero_scalar(jy[r]):
                    val = val + omega.coeff((i, r)) * jy[r]
            g[i][j] = simplify(val)
    if not smallmat.is_symmetric(g, tol=1e-8):
        raise ArithmeticError("induced bilinear form is not symmetric")
    if not smallmat.is_positive_definite(g):
        raise NotPositive()
    jgj = smallmat.mat_mul(smallmat.transpose(J), smallmat.mat_mul(g, J))
    dev = smallmat.mat_sub(jgj, g)
    if smallmat.mat_max_abs(dev) > (0 if exact else 1e-8):
        raise ArithmeticError("J is not orthogonal for the induced metric")

    phi = phi_from(psi, J, tol=tol)
    # interior(X, psi) = interior(JX, phi) on the basis
    for i in range(n):
        e = [0] * n
        e[i] = 1
        je = [J[r][i] for r in range(n)]
        d = interior(e, psi) - interior(je, phi)
        if exact:
            if not d.is_zero():
                raise ArithmeticError("contraction identity for phi fails")
        elif d.max_abs() > 1e-8 * max(psi.max_abs(), 1.0):
            raise ArithmeticError("contraction identity for phi fails")

    return SU3Structure(omega=omega, psi=psi, phi=phi, J=J, g=g,
                        kappa=kappa, tau0=tau0, vol=vol)


def form_dot(a, b):
    """Flat coefficient pairing used for least-squares fits."""
    a._check_compatible(b)
    total = 0
    for x, y in zip(a.c, b.c):
        total = total + x * y
    return total


def nk_check(cand, differential, tol=EPS):
    """Decide the nearly Kahler system for a candidate pair.

    ``differential`` maps k-forms on the space to (k+1)-forms (for a
    homogeneous space, the invariant-form differential).  mu is fitted by
    least squares over the degree-4 coefficients, so a dphi that is not
    proportional to omega^omega shows up as a residual instead of being
    divided away.  Build errors propagate.

    The constant is quoted at the scale of d(omega): with both structure
    equations written  d omega = 3 psi  and  d(3 phi) = -2 mu omega^omega,
    the diagonal family on S^3 x S^3 has mu = 1/(2 lambda sqrt 3), the
    classical value.  (The fit itself runs on d phi; only the quoted mu
    and residual carry the factor 3.)
    """
    s = build_su3(cand, tol=tol)
    domega = differential(s.omega)
    r1_form = domega - s.psi.scale(3)
    r1 = r1_form.max_abs()
    mu_fit, r2_fit = mu_volume_fit(s, differential)
    mu = simplify(3 * mu_fit)
    r2 = 3 * r2_fit
    verdict = r1 <= tol and r2 <= tol
    return NKReport(residual_r1=r1, residual_r2=r2, mu=mu, verdict=verdict)


def mu_volume_fit(s, differential):
    """Least-squares constant in  d phi = -2 c omega^omega  and its residual.

    This is the metric-normalization scalar: c = 1 exactly when the cone
    over the structure is parallel (the structure equations at unit scale).
    """
    dphi = differential(s.phi)
    o2 = wedge(s.omega, s.omega)
    denom = form_dot(o2, o2)
    c = simplify(exact_div(-form_dot(dphi, o2), 2 * denom))
    resid = (dphi + o2.scale(2 * c)).max_abs()
    return c, resid
