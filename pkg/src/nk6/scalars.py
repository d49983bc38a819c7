"""Coefficient scalars.

All algebra in this package is generic over its scalars by duck typing.
Exact computations use ``int``/``Fraction``; when a square root of 3 is
unavoidable (cube roots of unity, the canonical almost complex structure
of a 3-symmetric space) the quadratic extension Q(sqrt 3) is available as
:class:`QSqrt3`.  Anything past an irrational square root that does not
live in Q(sqrt 3) falls back to floats, compared against a tolerance
(default ``EPS``).
"""

from __future__ import annotations

import math
from fractions import Fraction

EPS = 1e-10

_EXACT = (int, Fraction)


class QSqrt3:
    """Element a + b*sqrt(3) of the field Q(sqrt 3), with a, b rational."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    # ------------------------------------------------------------------
    def __repr__(self):
        if self.b == 0:
            return f"QSqrt3({self.a})"
        return f"QSqrt3({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt3"
        return f"({self.a} + {self.b}*sqrt3)"

    # ------------------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, QSqrt3):
            return x
        if isinstance(x, _EXACT):
            return QSqrt3(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QSqrt3(self.a * o.a + 3 * self.b * o.b,
                      self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - 3 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 3)")
        return QSqrt3(self.a / n, -self.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QSqrt3(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return self if self >= 0 else -self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QSqrt3(1)
        for _ in range(n):
            out = out * self
        return out

    # ------------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QSqrt3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, _EXACT):
            return self.b == 0 and self.a == other
        if isinstance(other, float):
            return float(self) == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self):
        """Exact sign of a + b*sqrt(3): -1, 0 or +1."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Opposite signs: compare a^2 with 3 b^2.
        d = a * a - 3 * b * b
        big_is_a = d > 0
        if d == 0:
            raise ArithmeticError("sqrt(3) is irrational")
        return (1 if a > 0 else -1) if big_is_a else (1 if b > 0 else -1)

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return float(self) < other
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return float(self) <= other
        return (self - o).sign() <= 0

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return float(self) > other
        return (self - o).sign() > 0

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return float(self) >= other
        return (self - o).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(3.0)


SQRT3 = QSqrt3(0, 1)


# ----------------------------------------------------------------------
def is_exact(x):
    """True for scalars whose arithmetic and equality are exact."""
    return isinstance(x, _EXACT) or isinstance(x, QSqrt3)


def to_float(x):
    return float(x)


def scalar_abs(x):
    """Absolute value in the same scalar realization."""
    return abs(x)


def simplify(x):
    """Collapse a QSqrt3 with zero irrational part back to Fraction."""
    if isinstance(x, QSqrt3) and x.b == 0:
        return x.a
    return x


def _frac_sqrt(q):
    """Exact square root of a nonnegative Fraction, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_sqrt(x):
    """Square root inside Q(sqrt 3) when one exists, else None.

    Handles rational inputs (root rational or rational*sqrt3) and the
    general a + b*sqrt3 case by solving (c + d*sqrt3)^2 = x.
    """
    if isinstance(x, QSqrt3):
        a, b = x.a, x.b
    else:
        a, b = Fraction(x), Fraction(0)
    if b == 0:
        r = _frac_sqrt(a)
        if r is not None:
            return r
        r = _frac_sqrt(a / 3)
        if r is not None:
            return QSqrt3(0, r)
        return None
    # c^2 + 3 d^2 = a and 2 c d = b, so c^2 solves 4 t^2 - 4 a t + 3 b^2 = 0.
    disc = _frac_sqrt(a * a - 3 * b * b)
    if disc is None:
        return None
    for root in ((a + disc) / 2, (a - disc) / 2):
        c = _frac_sqrt(root)
        if c is None or c == 0:
            continue
        d = b / (2 * c)
        cand = QSqrt3(c, d)
        if cand * cand == QSqrt3(a, b):
            return cand if cand.sign() > 0 else -cand
    return None


def sqrt_scalar(x):
    """Square root, exact when representable, float otherwise."""
    if is_exact(x):
        r = exact_sqrt(x)
        if r is not None:
            return r
    v = float(x)
    if v < 0:
        raise ValueError("square root of a negative scalar")
    return math.sqrt(v)


def exact_div(x, y):
    """Division that keeps int/int exact instead of decaying to float."""
    if isinstance(x, int) and isinstance(y, int):
        return Fraction(x, y)
    return x / y


def parse_rational(text):
    """Parse 'p/q' or 'p' into a Fraction (used by the JSON space format)."""
    return Fraction(text)
