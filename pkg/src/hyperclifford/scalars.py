"""Arithmetic of the hyperbolic-complex commutative ring.

The ring is spanned over the reals by ``1``, ``i``, ``j`` and ``ij`` with

    i*i = -1,   j*j = +1,   (ij)*(ij) = -1,

and ``i``, ``j`` commuting with everything.  Restricting coefficients gives
the familiar subrings: the reals (only ``1``), the complex numbers
(``1, i``), and the hyperbolic (split-complex) numbers (``1, j``).

Two coefficient backends are supported.  The exact backend stores
:class:`fractions.Fraction` coefficients and is used wherever a structural
claim is verified bit-exactly (multiplication tables, dimensions,
commutators).  The float backend is used for exponentials and rotor
numerics.  Backends never mix implicitly; converting exact values to float
is explicit and one-directional via :meth:`HScalar.to_float`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "BackendMismatch",
    "ZeroDivisor",
    "HScalar",
    "NullPair",
    "trig_tilde",
    "to_null",
    "from_null",
    "ZERO_DIVISOR_RTOL",
]

# Relative threshold below which the float backend treats the quadratic-form
# modulus as vanishing (the element sits on the null cone and has no inverse).
ZERO_DIVISOR_RTOL = 1e-12


class BackendMismatch(TypeError):
    """Raised when exact and float operands meet in one operation."""


class ZeroDivisor(ZeroDivisionError):
    """Raised when inverting an element on (or numerically near) the null cone."""


def _coerce(value, exact: bool):
    if exact:
        if isinstance(value, float):
            raise BackendMismatch("float coefficient in exact-backend scalar")
        return Fraction(value)
    return float(value)


class HScalar:
    """An element x + y*i + v*j + w*ij of the hyperbolic-complex ring.

    Immutable.  The backend is carried by the coefficient types: all four
    coefficients are either :class:`Fraction` (exact) or :class:`float`.
    """

    __slots__ = ("x", "y", "v", "w")

    def __init__(self, x, y, v, w):
        self.x = x
        self.y = y
        self.v = v
        self.w = w

    # -- construction ---------------------------------------------------

    @classmethod
    def exact(cls, x=0, y=0, v=0, w=0) -> "HScalar":
        return cls(Fraction(x), Fraction(y), Fraction(v), Fraction(w))

    @classmethod
    def flt(cls, x=0.0, y=0.0, v=0.0, w=0.0) -> "HScalar":
        return cls(float(x), float(y), float(v), float(w))

    @classmethod
    def make(cls, x=0, y=0, v=0, w=0, exact: bool = True) -> "HScalar":
        return cls.exact(x, y, v, w) if exact else cls.flt(x, y, v, w)

    @classmethod
    def zero(cls, exact: bool = True) -> "HScalar":
        return cls.make(exact=exact)

    @classmethod
    def one(cls, exact: bool = True) -> "HScalar":
        return cls.make(1, exact=exact)

    @classmethod
    def unit(cls, name: str, exact: bool = True) -> "HScalar":
        try:
            spot = {"1": 0, "i": 1, "j": 2, "ij": 3}[name]
        except KeyError:
            raise ValueError(f"unknown unit {name!r}") from None
        coeffs = [0, 0, 0, 0]
        coeffs[spot] = 1
        return cls.make(*coeffs, exact=exact)

    # -- backend --------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.x, float)

    def to_float(self) -> "HScalar":
        return HScalar(float(self.x), float(self.y), float(self.v), float(self.w))

    def _peer(self, other) -> "HScalar":
        """Coerce a numeric operand onto this scalar's backend."""
        if isinstance(other, HScalar):
            if other.is_exact != self.is_exact:
                raise BackendMismatch("mixed exact/float scalar operands")
            return other
        if isinstance(other, Rational):
            return HScalar.make(other, exact=self.is_exact)
        if isinstance(other, float) and not self.is_exact:
            return HScalar.flt(other)
        raise BackendMismatch(f"cannot combine {type(other).__name__} with this backend")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        try:
            o = self._peer(other)
        except BackendMismatch:
            raise
        return HScalar(self.x + o.x, self.y + o.y, self.v + o.v, self.w + o.w)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._peer(other))

    def __rsub__(self, other):
        return self._peer(other) + (-self)

    def __neg__(self):
        return HScalar(-self.x, -self.y, -self.v, -self.w)

    def __mul__(self, other):
        o = self._peer(other)
        x1, y1, v1, w1 = self.x, self.y, self.v, self.w
        x2, y2, v2, w2 = o.x, o.y, o.v, o.w
        # complex-subring fast path (the dominant case in matrix work)
        if v1 == 0 and w1 == 0 and v2 == 0 and w2 == 0:
            return HScalar(x1 * x2 - y1 * y2, x1 * y2 + y1 * x2, v1, w1)
        return HScalar(
            x1 * x2 - y1 * y2 + v1 * v2 - w1 * w2,
            x1 * y2 + y1 * x2 + v1 * w2 + w1 * v2,
            x1 * v2 + v1 * x2 - y1 * w2 - w1 * y2,
            x1 * w2 + w1 * x2 + y1 * v2 + v1 * y2,
        )

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.v == 0 and self.w == 0

    def __eq__(self, other):
        if not isinstance(other, HScalar):
            return NotImplemented
        return (
            self.x == other.x
            and self.y == other.y
            and self.v == other.v
            and self.w == other.w
        )

    def __hash__(self):
        return hash((self.x, self.y, self.v, self.w))

    # -- structure -------------------------------------------------------

    def coeffs(self):
        return (self.x, self.y, self.v, self.w)

    def conjugate(self) -> "HScalar":
        """Send i to -i and j to -j; consequently ij stays fixed."""
        return HScalar(self.x, -self.y, -self.v, self.w)

    def qform(self) -> "HScalar":
        """The quadratic form z * conjugate(z).

        Always lands in the subring spanned by 1 and ij.
        """
        return self * self.conjugate()

    def modulus(self):
        """N(z) = a^2 + b^2 where z*conjugate(z) = a + b*ij.

        Vanishes exactly on the null cone; an element is invertible iff
        its modulus is nonzero.
        """
        q = self.qform()
        return q.x * q.x + q.w * q.w

    def invert(self, rtol: float = ZERO_DIVISOR_RTOL) -> "HScalar":
        """Multiplicative inverse conjugate(z) / (z*conjugate(z)).

        The quadratic form lies in the span of 1 and ij where inversion is
        complex-style division.  Raises :class:`ZeroDivisor` on (near-)null
        elements; for floats the threshold scales with the squared
        coefficient magnitudes.
        """
        n = self.modulus()
        if self.is_exact:
            if n == 0:
                raise ZeroDivisor("element lies on the null cone")
        else:
            mag = self.x * self.x + self.y * self.y + self.v * self.v + self.w * self.w
            if n <= rtol * (1.0 + mag):
                raise ZeroDivisor("quadratic-form modulus below threshold")
        q = self.qform()
        zero = n - n
        inv_q = HScalar(q.x / n, zero, zero, -q.w / n)
        return self.conjugate() * inv_q

    def exp(self) -> "HScalar":
        """Exponential, float backend.

        exp(x)(cos y + i sin y)(cosh v + j sinh v)(cos w + ij sin w); the
        four factors commute so the order is irrelevant.
        """
        z = self if not self.is_exact else self.to_float()
        base = math.exp(z.x)
        fi = HScalar.flt(math.cos(z.y), math.sin(z.y))
        fj = HScalar.flt(math.cosh(z.v), 0.0, math.sinh(z.v))
        fk = HScalar.flt(math.cos(z.w), 0.0, 0.0, math.sin(z.w))
        return fi * fj * fk * HScalar.flt(base)

    def abs_max(self) -> float:
        return max(abs(float(self.x)), abs(float(self.y)), abs(float(self.v)), abs(float(self.w)))

    def is_close(self, other: "HScalar", tol: float = 1e-12) -> bool:
        d = self - other
        return d.abs_max() <= tol

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return f"HScalar({self.x!r}, {self.y!r}, {self.v!r}, {self.w!r})"

    def __str__(self):
        parts = []
        for c, tag in zip(self.coeffs(), ("", "i", "j", "ij")):
            if c == 0:
                continue
            s = str(c)
            if tag:
                if s == "1":
                    s = tag
                elif s == "-1":
                    s = "-" + tag
                else:
                    s = s + tag
            parts.append(s)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += "+" + p if not p.startswith("-") else p
        return out


@dataclass(frozen=True)
class NullPair:
    """Null-basis (double field) form of a hyperbolic-complex number.

    Components are stored as complex-restricted scalars (no j or ij part)
    so the same type serves the real and the complex double field; ``real``
    marks the restriction to real components.
    """

    a: HScalar
    b: HScalar
    real: bool

    def __post_init__(self):
        for c in (self.a, self.b):
            if c.v != 0 or c.w != 0:
                raise ValueError("null-pair components must be complex (no j part)")

    def swap(self) -> "NullPair":
        return NullPair(self.b, self.a, self.real)

    def conjugate(self) -> "NullPair":
        """Swap the components and conjugate each; for real pairs this is
        the plain coordinate swap."""
        return NullPair(self.b.conjugate(), self.a.conjugate(), self.real)

    def __mul__(self, other: "NullPair") -> "NullPair":
        return NullPair(self.a * other.a, self.b * other.b, self.real and other.real)


def to_null(z: HScalar) -> NullPair:
    """Coordinates of z over the idempotents e = (1+j)/2, ebar = (1-j)/2.

    Writing z = c1 + j*c2 with complex c1, c2 gives z = (c1+c2) e + (c1-c2) ebar.
    """
    zero = z.x - z.x
    a = HScalar(z.x + z.v, z.y + z.w, zero, zero)
    b = HScalar(z.x - z.v, z.y - z.w, zero, zero)
    return NullPair(a, b, real=(z.y == 0 and z.w == 0))


def from_null(p: NullPair) -> HScalar:
    half = Fraction(1, 2) if p.a.is_exact else 0.5
    return HScalar(
        (p.a.x + p.b.x) * half,
        (p.a.y + p.b.y) * half,
        (p.a.x - p.b.x) * half,
        (p.a.y - p.b.y) * half,
    )


def trig_tilde(phi: float, xi: float) -> tuple[HScalar, HScalar]:
    """Cosine and sine of the complexified angle phi + ij*xi.

    cos -> cos(phi)cosh(xi) - ij sin(phi)sinh(xi)
    sin -> sin(phi)cosh(xi) + ij cos(phi)sinh(xi)

    and cos^2 + sin^2 = 1 in the ring.
    """
    c = HScalar.flt(math.cos(phi) * math.cosh(xi), 0.0, 0.0, -math.sin(phi) * math.sinh(xi))
    s = HScalar.flt(math.sin(phi) * math.cosh(xi), 0.0, 0.0, math.cos(phi) * math.sinh(xi))
    return c, s
