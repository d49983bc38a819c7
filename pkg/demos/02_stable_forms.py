"""From a pair of forms to a full SU(3)-structure.

A stable 3-form in dimension 6 knows a complex structure: the operator
K(X) built from interior(X, psi) ^ psi squares to a negative multiple of
the identity, and J = K / sqrt(-tau) is an honest almost complex
structure.  Together with a compatible 2-form it determines the metric.
"""

from fractions import Fraction

from nk6 import KForm, SU3Candidate, build_su3, hitchin_K, tau
from nk6.hitchin import NotStable

VOL = KForm.basis(6, tuple(range(6)))

# the model pair: omega = e12 + e34 + e56, psi = Re((e1+ie2)(e3+ie4)(e5+ie6))
omega = KForm.from_terms(6, 2, [((0, 1), 1), ((2, 3), 1), ((4, 5), 1)])
psi = KForm.from_terms(6, 3, [((0, 2, 4), 1), ((0, 3, 5), -1),
                              ((1, 2, 5), -1), ((1, 3, 4), -1)])

K, tau0 = hitchin_K(psi, VOL)
print("tau(psi) =", tau0, "< 0, so psi is stable")

s = build_su3(SU3Candidate(omega, psi, VOL.scale(Fraction(-1))))
print("kappa    =", s.kappa)
print("metric   = identity?", s.g == [[1 if i == j else 0 for j in range(6)]
                                      for i in range(6)])
print("J X1     =", [s.J[r][0] for r in range(6)])
print("phi      =", s.phi)

# a decomposable 3-form is never stable
try:
    tau0 = tau(KForm.basis(6, (0, 1, 2)), VOL)
    print("decomposable form: tau =", tau0, "-> not stable")
    build_su3(SU3Candidate(omega, KForm.basis(6, (0, 1, 2)), VOL))
except NotStable as ex:
    print("build rejects it:", ex)
