"""Paravector spaces: scalar-plus-vector slices of the representations.

A paravector space fixes an ordered basis of algebra elements whose first
member is the unity, together with the diagonal metric the basis induces
through the quadratic form x*bar(x).  Four real spaces are provided

    m4   (1, j*sigma_1..3)                over c30bar, metric (+,-,-,-)
    e6   (1, i*sigma_01..05)              over h05bar, metric (+ x6)
    r66  (1, i*sigma_0k, ij, -j*sigma_0k) over h05bar, metric (+ x6, - x6)
    h1   (1, i, j, ij)                    over c10bar, metric (+,+,-,-)

plus hm4, the m4 basis with hyperbolic-complex coordinates (sixteen real
degrees of freedom), which carries extended momenta q + i*o + j*s + ij*u.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .algebra import AlgebraRep, Multivector, get_rep, ring_unit_multivectors
from .matrices import HMatrix
from .scalars import HScalar

__all__ = [
    "ParavectorSpace",
    "Paravector",
    "get_space",
    "SPACE_NAMES",
    "dot",
    "wedge2",
    "wedge3",
    "wedge4",
    "quasi_sphere_contains",
    "embed_momentum",
]

SPACE_NAMES = ("m4", "e6", "r66", "h1", "hm4")


def _wants_exact(values) -> bool:
    for c in values:
        if isinstance(c, HScalar):
            if not c.is_exact:
                return False
        elif isinstance(c, float):
            return False
    return True


def _single_blade_slot(mv: Multivector) -> tuple:
    """(blade, component attribute, sign) of a one-term unit realization."""
    ((blade, coeff),) = mv.coeffs.items()
    for attr in ("x", "y", "v", "w"):
        val = getattr(coeff, attr)
        if val != 0:
            return blade, attr, 1 if val > 0 else -1
    raise ValueError("zero unit realization")


class ParavectorSpace:
    """An ordered paravector basis with its induced diagonal metric."""

    def __init__(self, name: str, rep: AlgebraRep, basis, hyper_coords: bool = False):
        self.name = name
        self.rep = rep
        self.basis = tuple(basis)
        self.hyper_coords = hyper_coords
        self.dim = len(self.basis)
        self._basis_mats = tuple(b.to_matrix() for b in self.basis)
        self._basis_mats_float = tuple(m.to_float() for m in self._basis_mats)
        self._norms = tuple(
            HMatrix.real_pairing(m, m) for m in self._basis_mats
        )
        self.metric = tuple(self._metric_signs())
        unit_mvs = ring_unit_multivectors(rep)
        self._unit_slots = {
            name: _single_blade_slot(mv) for name, mv in unit_mvs.items()
        }
        if hyper_coords:
            # Unit-times-basis grid for hyperbolic-complex coordinates; the
            # non-coefficient units act through their blade realizations.
            units = tuple(unit_mvs[u] for u in ("1", "i", "j", "ij"))
            self._ext = tuple(
                tuple(u.gp_blades(b) for b in self.basis) for u in units
            )
            self._ext_mats_float = tuple(
                tuple(mv.to_matrix().to_float() for mv in row) for row in self._ext
            )
            self._ext_norms = tuple(
                tuple(float(HMatrix.real_pairing(mv.to_matrix(), mv.to_matrix())) for mv in row)
                for row in self._ext
            )

    def _metric_signs(self):
        for k, b in enumerate(self.basis):
            q = b.gp_blades(b.bar())
            z = q.scalar_part()
            if q.nonscalar_max_abs() != 0 or z.y != 0 or z.v != 0 or z.w != 0 or z.x * z.x != 1:
                raise ValueError(f"basis element {k} of {self.name} is not metric-unit")
            yield 1 if z.x > 0 else -1

    # -- paravector construction ------------------------------------------------

    def paravector(self, coords) -> "Paravector":
        """Coordinates may be floats (numeric work) or ints/Fractions
        (bit-exact work); the backend follows the inputs."""
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"{self.name} expects {self.dim} coordinates")
        exact = _wants_exact(coords)
        if self.hyper_coords:
            coords = tuple(
                c if isinstance(c, HScalar) else HScalar.make(c, exact=exact)
                for c in coords
            )
        elif exact:
            coords = tuple(Fraction(c) for c in coords)
        else:
            coords = tuple(float(c) for c in coords)
        return Paravector(self, coords)

    def basis_vector(self, index: int, scale: float = 1.0) -> "Paravector":
        coords = [0.0] * self.dim
        coords[index] = scale
        return self.paravector(coords)

    def ring_value(self, mv: Multivector) -> HScalar:
        """Value of an algebra element lying in the span of 1, i, j, ij.

        The units i and ij may sit on blades (pseudoscalar realizations),
        so the value is collected slot by slot rather than read off the
        scalar coefficient alone.
        """
        zero = HScalar.zero(mv.is_exact).x
        comps = []
        for unit in ("1", "i", "j", "ij"):
            blade, attr, sign = self._unit_slots[unit]
            c = mv.coeffs.get(blade)
            val = getattr(c, attr) if c is not None else zero
            comps.append(val if sign > 0 else -val)
        return HScalar(*comps)

    def ring_residual(self, mv: Multivector) -> float:
        """Largest component of an element outside the span of the four
        scalar units; zero exactly when the element is ring-valued."""
        residual = 0.0
        slots = {
            (blade, attr): sign for blade, attr, sign in self._unit_slots.values()
        }
        for blade, coeff in mv.coeffs.items():
            for attr in ("x", "y", "v", "w"):
                if (blade, attr) in slots:
                    continue
                residual = max(residual, abs(float(getattr(coeff, attr))))
        return residual

    # -- multivector conversion ----------------------------------------------------

    def to_multivector(self, x: "Paravector") -> Multivector:
        exact = _wants_exact(x.coords)
        acc = None
        if self.hyper_coords:
            for a, z in enumerate(x.coords):
                for k, comp in enumerate(z.coeffs()):
                    if comp == 0:
                        continue
                    ext = self._ext[k][a]
                    term = (ext if exact else ext.to_float()).scale(comp)
                    acc = term if acc is None else acc + term
            return acc if acc is not None else self.basis[0].scale(0).to_float()
        for c, b in zip(x.coords, self.basis):
            if not isinstance(c, HScalar):
                c = HScalar.make(c, exact=exact)
            term = (b if exact else b.to_float()).scale(c)
            acc = term if acc is None else acc + term
        return acc

    def project_matrix(self, m: HMatrix) -> tuple[tuple, float]:
        """Coordinates of a matrix over the paravector basis plus the
        largest leftover component outside the span."""
        if self.hyper_coords:
            comps = []
            for unit_row, norm_row in zip(self._ext_mats_float, self._ext_norms):
                comps.append(
                    tuple(
                        float(HMatrix.real_pairing(um, m)) / nn
                        for um, nn in zip(unit_row, norm_row)
                    )
                )
            coords = tuple(
                HScalar.flt(comps[0][a], comps[1][a], comps[2][a], comps[3][a])
                for a in range(self.dim)
            )
            recon = self.to_multivector(Paravector(self, coords)).to_matrix()
            return coords, (m - recon).max_abs()
        coords = tuple(
            float(HMatrix.real_pairing(bm, m)) / float(norm)
            for bm, norm in zip(self._basis_mats_float, self._norms)
        )
        acc = HMatrix.zeros(self.rep.n, exact=False)
        for c, bm in zip(coords, self._basis_mats_float):
            acc = acc + bm.scale(HScalar.flt(c))
        return coords, (m - acc).max_abs()

    def __repr__(self):
        return f"ParavectorSpace({self.name}, dim={self.dim})"


class Paravector:
    """Coordinates over a paravector basis.  Immutable."""

    __slots__ = ("space", "coords")

    def __init__(self, space: ParavectorSpace, coords):
        self.space = space
        self.coords = tuple(coords)

    def to_multivector(self) -> Multivector:
        return self.space.to_multivector(self)

    def qform(self) -> HScalar:
        """The quadratic form x * bar(x); lies in the span of 1 and ij."""
        mv = self.to_multivector()
        q = mv.gp_blades(mv.bar())
        return self.space.ring_value(q)

    def __repr__(self):
        return f"Paravector({self.space.name}, {list(self.coords)})"


@lru_cache(maxsize=None)
def get_space(name: str) -> ParavectorSpace:
    unit_j = HScalar.unit("j")
    unit_i = HScalar.unit("i")
    if name == "m4" or name == "hm4":
        rep = get_rep("c30bar")
        basis = [rep.scalar(1)] + [rep.blade((k,)) for k in (1, 2, 3)]
        return ParavectorSpace(name, rep, basis, hyper_coords=(name == "hm4"))
    if name == "e6":
        rep = get_rep("h05bar")
        basis = [rep.scalar(1)] + [rep.generator(k) for k in range(1, 6)]
        return ParavectorSpace(name, rep, basis)
    if name == "r66":
        rep = get_rep("h05bar")
        minus_i = rep.blade((1, 2, 3, 4, 5))
        ij = minus_i.scale(-unit_j)
        basis = [rep.scalar(1)] + [rep.generator(k) for k in range(1, 6)]
        basis.append(ij)
        for k in range(1, 6):
            # -j*sigma_0k with sigma_0k = -i*e_k
            basis.append(minus_i.gp_blades(rep.generator(k)).scale(-unit_j))
        return ParavectorSpace(name, rep, basis)
    if name == "h1":
        rep = get_rep("c10bar")
        basis = [
            rep.scalar(1),
            rep.scalar(unit_i),
            rep.generator(1),
            rep.blade((1,), unit_i),
        ]
        return ParavectorSpace(name, rep, basis)
    raise ValueError(f"unknown paravector space {name!r}")


# -- products -------------------------------------------------------------------


def _require_same_space(x: Paravector, y: Paravector):
    if x.space is not y.space:
        raise ValueError("paravectors belong to different spaces")


def dot(x: Paravector, y: Paravector) -> HScalar:
    """Symmetric product (x*bar(y) + y*bar(x)) / 2; equals the metric on
    basis pairs and the quadratic form on the diagonal."""
    _require_same_space(x, y)
    mx, my = x.to_multivector(), y.to_multivector()
    s = mx.gp_blades(my.bar()) + my.gp_blades(mx.bar())
    return x.space.ring_value(s.scale(Fraction(1, 2) if s.is_exact else 0.5))


def wedge2(x: Paravector, y: Paravector) -> Multivector:
    """Antisymmetric part (x*bar(y) - y*bar(x)) / 2, a biparavector."""
    _require_same_space(x, y)
    mx, my = x.to_multivector(), y.to_multivector()
    s = mx.gp_blades(my.bar()) - my.gp_blades(mx.bar())
    return s.scale(Fraction(1, 2) if s.is_exact else 0.5)


def _alternating_sum(mvs) -> Multivector:
    """Sum over all argument permutations with sign, bars on even slots."""
    k = len(mvs)
    total = None
    for perm in permutations(range(k)):
        inversions = sum(
            1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b]
        )
        term = None
        for slot in range(k):
            f = mvs[perm[slot]]
            if slot % 2 == 1:
                f = f.bar()
            term = f if term is None else term.gp_blades(f)
        if inversions % 2 == 1:
            term = -term
        total = term if total is None else total + term
    if total.is_exact:
        return total.scale(Fraction(1, math.factorial(k)))
    return total.scale(1.0 / math.factorial(k))


def wedge3(x: Paravector, y: Paravector, v: Paravector) -> Multivector:
    """Triparavector: alternating sum of the six products a*bar(b)*c."""
    _require_same_space(x, y)
    _require_same_space(x, v)
    return _alternating_sum([p.to_multivector() for p in (x, y, v)])


def wedge4(x: Paravector, y: Paravector, v: Paravector, w: Paravector) -> Multivector:
    """Pseudoscalar part: alternating sum of the 24 products
    a*bar(b)*c*bar(d)."""
    _require_same_space(x, y)
    _require_same_space(x, v)
    _require_same_space(x, w)
    return _alternating_sum([p.to_multivector() for p in (x, y, v, w)])


def quasi_sphere_contains(x: Paravector, r: float, tol: float = 1e-10) -> bool:
    """Whether x*bar(x) equals r^2 as a real number, all four scalar
    components within tol."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    q = x.qform()
    return (
        abs(float(q.x) - r * r) <= tol
        and abs(float(q.y)) <= tol
        and abs(float(q.v)) <= tol
        and abs(float(q.w)) <= tol
    )


def embed_momentum(q, o, s, u) -> Paravector:
    """Hyperbolic-complex momentum paravector q + i*o + j*s + ij*u from
    four real 4-vectors.  Int or Fraction inputs stay exact."""
    for vec in (q, o, s, u):
        if len(vec) != 4:
            raise ValueError("momentum components must be 4-vectors")
    exact = _wants_exact([*q, *o, *s, *u])
    space = get_space("hm4")
    coords = [
        HScalar.make(q[a], o[a], s[a], u[a], exact=exact) for a in range(4)
    ]
    return space.paravector(coords)
