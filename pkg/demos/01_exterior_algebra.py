"""A tour of the exterior algebra layer.

Forms carry exact rational coefficients by default, so every identity
printed below is an equality of fractions, not a float coincidence.
"""

from fractions import Fraction

from nk6 import KForm, wedge, interior, hodge_star
from nk6.smallmat import identity

# wedge products on a 6-dimensional space
e1 = KForm.basis(6, (0,))
e2 = KForm.basis(6, (1,))
print("e1 ^ e2       =", wedge(e1, e2))
e12 = KForm.basis(6, (0, 1))
print("e12 ^ e12     =", wedge(e12, e12))

# the symplectic form of C^3 and its top power
omega = KForm.from_terms(6, 2, [((0, 1), 1), ((2, 3), 1), ((4, 5), 1)])
omega3 = wedge(wedge(omega, omega), omega)
print("omega^3       =", omega3, " (6 times the volume form)")

# contraction is an antiderivation
x1 = [1, 0, 0, 0, 0, 0]
psi = KForm.from_terms(6, 3, [((0, 2, 4), 1), ((0, 3, 5), -1)])
print("i_X1 psi      =", interior(x1, psi))

# Euclidean Hodge star, exact
vol = KForm.basis(6, tuple(range(6)))
g = identity(6, Fraction(1))
print("star(e1)      =", hodge_star(e1, g, vol))
star_omega = hodge_star(omega, g, vol)
print("star(omega)   =", star_omega)
print("omega^2 / 2   =", wedge(omega, omega) / 2, " (they agree)")
