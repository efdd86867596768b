"""Clifford algebra representations over the hyperbolic-complex scalars.

Each representation carries a set of anticommuting generator matrices, an
optional adjoined central unit (``i`` or ``j``), and the blade machinery
used to move between matrices and coefficient expansions.  Six named
representations are provided:

====== =============================== ======================== =========
name   generators                      adjoined unit            elements
====== =============================== ======================== =========
r01    [i]              (1x1)          -                        2
r10    [j]              (1x1)          -                        2
c10bar [j]              (1x1)          i                        4
r30    j*sigma_k        (2x2)          -                        8
c30bar j*sigma_k        (2x2)          j                        16
r05    i*sigma_0k       (4x4)          -                        32
h05bar i*sigma_0k       (4x4)          j                        64
====== =============================== ======================== =========

The three involutions act on the blade expansion by grade signs:
graduation (hat) multiplies a grade-g blade by (-1)^g, reversion (dagger)
by (-1)^(g(g-1)/2) and conjugation (bar) by (-1)^(g(g+1)/2).  Hat and bar
additionally conjugate the adjoined-unit part of each coefficient, dagger
leaves coefficients untouched.  Units that the tables list but that are
not generators (sigma_k, the complex unit inside r30, ...) are realized as
blade expressions and inherit their signs from those expressions; this
single mechanism reproduces all three published sign tables without
special cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .matrices import HMatrix, pauli2, sigma_ab
from .scalars import HScalar

__all__ = [
    "NonOrthogonalBasis",
    "Signature",
    "AlgebraRep",
    "Multivector",
    "get_rep",
    "REP_NAMES",
    "blade_mul",
    "involution_sign",
    "involution_table",
    "TableRow",
    "enumerate_algebra",
    "even_subalgebra",
    "porteous_conjugate_2x2",
    "porteous_dagger_4x4",
    "porteous_hat_4x4",
]

REP_NAMES = ("r01", "r10", "c10bar", "r30", "c30bar", "r05", "h05bar")

Blade = tuple


class NonOrthogonalBasis(ValueError):
    """Raised when a representation's basis matrices fail the pairing check."""


@dataclass(frozen=True)
class Signature:
    """Counts of generators squaring to +1 (p) and to -1 (q).

    The scalar product of the underlying quadratic space carries a minus
    sign on the p-part and a plus sign on the q-part; combined with
    e*conj(e) = -e^2 this fixes e^2 = +1 for the first p generators and
    e^2 = -1 for the remaining q.
    """

    p: int
    q: int

    @property
    def n(self) -> int:
        return self.p + self.q

    def square(self, index: int) -> int:
        """Square of generator ``index`` (1-based)."""
        if not 1 <= index <= self.n:
            raise ValueError("generator index out of range")
        return 1 if index <= self.p else -1


def blade_mul(b1: Blade, b2: Blade, signature: Signature) -> tuple[Blade, int]:
    """Product of two canonical blades: resulting blade and overall sign.

    Canonical form is strictly increasing generator indices; the sign
    tracks adjacent-transposition parity plus generator squares.
    """
    seq = list(b1) + list(b2)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    out = []
    k = 0
    while k < len(seq):
        if k + 1 < len(seq) and seq[k] == seq[k + 1]:
            sign *= signature.square(seq[k])
            k += 2
        else:
            out.append(seq[k])
            k += 1
    return tuple(out), sign


def involution_sign(kind: str, grade: int) -> int:
    if kind == "hat":
        return -1 if grade % 2 else 1
    if kind == "dagger":
        return -1 if (grade * (grade - 1) // 2) % 2 else 1
    if kind == "bar":
        return -1 if (grade * (grade + 1) // 2) % 2 else 1
    raise ValueError(f"unknown involution {kind!r}")


class AlgebraRep:
    """A validated matrix representation of one of the named algebras."""

    def __init__(self, name: str, signature: Signature, gens, adjoined: str = ""):
        if adjoined not in ("", "i", "j"):
            raise ValueError("adjoined unit must be '', 'i' or 'j'")
        self.name = name
        self.signature = signature
        self.gens = tuple(gens)
        self.adjoined = adjoined
        self.n = self.gens[0].n if self.gens else 1
        self._validate_generators()

        self.blades = tuple(
            sorted(
                (tuple(c) for g in range(signature.n + 1)
                 for c in combinations(range(1, signature.n + 1), g)),
                key=lambda b: (len(b), b),
            )
        )
        self._blade_mat = {(): HMatrix.identity(self.n)}
        for blade in self.blades:
            if blade:
                m = self.gens[blade[0] - 1]
                for idx in blade[1:]:
                    m = m @ self.gens[idx - 1]
                self._blade_mat[blade] = m
        self.units = ("1",) + ((adjoined,) if adjoined else ())
        self.basis = tuple((b, u) for b in self.blades for u in self.units)
        self._basis_mat = {}
        for blade, unit in self.basis:
            m = self._blade_mat[blade]
            if unit != "1":
                m = m.scale(HScalar.unit(unit))
            self._basis_mat[(blade, unit)] = m
        self._basis_mat_float = {
            k: m.to_float() for k, m in self._basis_mat.items()
        }
        self._basis_norm = {}
        self._validate_orthogonality()

    # -- construction-time validation -------------------------------------

    def _validate_generators(self):
        idm = HMatrix.identity(self.n)
        for k, g in enumerate(self.gens, start=1):
            sq = g @ g
            want = idm if self.signature.square(k) > 0 else -idm
            if sq != want:
                raise ValueError(f"generator {k} squares incorrectly in {self.name}")
        for a in range(len(self.gens)):
            for b in range(a + 1, len(self.gens)):
                anti = self.gens[a] @ self.gens[b] + self.gens[b] @ self.gens[a]
                if anti != HMatrix.zeros(self.n):
                    raise ValueError(f"generators {a+1},{b+1} fail to anticommute in {self.name}")

    def _validate_orthogonality(self):
        keys = list(self.basis)
        sparse = {}
        for k in keys:
            vec = {
                idx: c
                for idx, c in enumerate(self._basis_mat[k].real_coords())
                if c != 0
            }
            if not vec:
                raise NonOrthogonalBasis(f"degenerate basis element {k} in {self.name}")
            sparse[k] = vec
            self._basis_norm[k] = sum(c * c for c in vec.values())
        for a in range(len(keys)):
            va = sparse[keys[a]]
            for b in range(a + 1, len(keys)):
                vb = sparse[keys[b]]
                small, large = (va, vb) if len(va) <= len(vb) else (vb, va)
                if any(idx in large for idx in small):
                    dot = sum(c * large[idx] for idx, c in small.items() if idx in large)
                    if dot != 0:
                        raise NonOrthogonalBasis(
                            f"basis elements {keys[a]} and {keys[b]} are not pairing-orthogonal"
                        )

    # -- coefficient subring ------------------------------------------------

    def check_coeff(self, z: HScalar):
        bad = []
        if self.adjoined != "i" and z.y != 0:
            bad.append("i")
        if self.adjoined != "j" and z.v != 0:
            bad.append("j")
        if z.w != 0:
            bad.append("ij")
        if bad:
            raise ValueError(
                f"coefficient {z} uses units {bad} outside the {self.name} subring"
            )

    def coeff_components(self, z: HScalar):
        """Split a coefficient into its per-unit real parts."""
        out = {"1": z.x}
        if self.adjoined == "i":
            out["i"] = z.y
        elif self.adjoined == "j":
            out["j"] = z.v
        return out

    # -- blade/matrix conversion ---------------------------------------------

    def blade_matrix(self, blade: Blade, exact: bool = True) -> HMatrix:
        m = self._blade_mat[blade]
        return m if exact else self._basis_mat_float[(blade, "1")]

    def decompose(self, m: HMatrix) -> "Multivector":
        """Coefficients of a matrix over the basis via the real pairing.

        The basis is pairing-orthogonal (checked at construction), so each
        coefficient is an independent normalized projection.  Matrices
        outside the algebra's span lose their orthogonal complement; use
        :meth:`decompose_residual` when that matters.
        """
        exact = m.is_exact
        mats = self._basis_mat if exact else self._basis_mat_float
        coeffs = {}
        for blade in self.blades:
            parts = {}
            for unit in self.units:
                key = (blade, unit)
                num = HMatrix.real_pairing(mats[key], m)
                den = self._basis_norm[key] if exact else float(self._basis_norm[key])
                parts[unit] = num / den
            zero = parts["1"] - parts["1"]
            z = HScalar(
                parts["1"],
                parts.get("i", zero),
                parts.get("j", zero),
                zero,
            )
            if z.abs_max() != 0:
                coeffs[blade] = z
        return Multivector(self, coeffs)

    def decompose_residual(self, m: HMatrix) -> tuple["Multivector", float]:
        mv = self.decompose(m)
        return mv, (m - mv.to_matrix()).max_abs()

    # -- convenience -----------------------------------------------------------

    def scalar(self, z, exact: bool = True) -> "Multivector":
        if not isinstance(z, HScalar):
            z = HScalar.make(z, exact=exact)
        return Multivector(self, {(): z})

    def generator(self, index: int, exact: bool = True) -> "Multivector":
        return Multivector(self, {(index,): HScalar.one(exact)})

    def blade(self, blade: Blade, coeff=None, exact: bool = True) -> "Multivector":
        c = coeff if isinstance(coeff, HScalar) else HScalar.make(
            1 if coeff is None else coeff, exact=exact
        )
        return Multivector(self, {tuple(blade): c})

    def __repr__(self):
        return f"AlgebraRep({self.name})"


class Multivector:
    """Blade-coefficient expansion of an algebra element.

    Coefficients live in the subring generated by the representation's
    adjoined unit (real for plain representations).  Values are immutable;
    all operations return new instances.
    """

    __slots__ = ("rep", "coeffs")

    def __init__(self, rep: AlgebraRep, coeffs):
        pruned = {}
        for blade, z in coeffs.items():
            rep.check_coeff(z)
            if z.abs_max() != 0:
                pruned[tuple(blade)] = z
        self.rep = rep
        self.coeffs = pruned

    # -- backend ---------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        for z in self.coeffs.values():
            return z.is_exact
        return True

    def to_float(self) -> "Multivector":
        return Multivector(self.rep, {b: z.to_float() for b, z in self.coeffs.items()})

    # -- linear structure ---------------------------------------------------

    def _require_same_rep(self, other: "Multivector"):
        if self.rep is not other.rep:
            raise ValueError("multivectors belong to different representations")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._require_same_rep(other)
        out = dict(self.coeffs)
        for b, z in other.coeffs.items():
            out[b] = out[b] + z if b in out else z
        return Multivector(self.rep, out)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(self.rep, {b: -z for b, z in self.coeffs.items()})

    def scale(self, z) -> "Multivector":
        if not isinstance(z, HScalar):
            z = HScalar.make(z, exact=self.is_exact)
        return Multivector(self.rep, {b: z * c for b, c in self.coeffs.items()})

    # -- products -------------------------------------------------------------

    def gp(self, other: "Multivector") -> "Multivector":
        """Geometric product: matrix product then blade decomposition."""
        self._require_same_rep(other)
        return self.rep.decompose(self.to_matrix() @ other.to_matrix())

    def gp_blades(self, other: "Multivector") -> "Multivector":
        """Geometric product computed directly on blades.

        Independent of the matrix route: uses only anticommutation,
        generator squares and coefficient arithmetic.
        """
        self._require_same_rep(other)
        sig = self.rep.signature
        out = {}
        for b1, z1 in self.coeffs.items():
            for b2, z2 in other.coeffs.items():
                blade, sign = blade_mul(b1, b2, sig)
                term = z1 * z2
                if sign < 0:
                    term = -term
                out[blade] = out[blade] + term if blade in out else term
        return Multivector(self.rep, out)

    # -- involutions -----------------------------------------------------------

    def involution(self, kind: str) -> "Multivector":
        """Apply bar, dagger or hat.

        Blade of grade g picks up the grade sign; bar and hat conjugate
        the coefficient (they negate the adjoined unit), dagger does not.
        """
        conj = kind in ("bar", "hat")
        out = {}
        for blade, z in self.coeffs.items():
            c = z.conjugate() if conj else z
            if involution_sign(kind, len(blade)) < 0:
                c = -c
            out[blade] = c
        return Multivector(self.rep, out)

    def bar(self) -> "Multivector":
        return self.involution("bar")

    def dagger(self) -> "Multivector":
        return self.involution("dagger")

    def hat(self) -> "Multivector":
        return self.involution("hat")

    # -- structure ---------------------------------------------------------------

    def to_matrix(self) -> HMatrix:
        exact = self.is_exact
        mats = self.rep._basis_mat if exact else self.rep._basis_mat_float
        acc = HMatrix.zeros(self.rep.n, exact=exact)
        for blade, z in self.coeffs.items():
            acc = acc + mats[(blade, "1")].scale(z)
        return acc

    def grades(self):
        return sorted({len(b) for b in self.coeffs})

    def grade_part(self, g: int) -> "Multivector":
        return Multivector(self.rep, {b: z for b, z in self.coeffs.items() if len(b) == g})

    def scalar_part(self) -> HScalar:
        return self.coeffs.get((), HScalar.zero(self.is_exact))

    def max_abs(self) -> float:
        if not self.coeffs:
            return 0.0
        return max(z.abs_max() for z in self.coeffs.values())

    def nonscalar_max_abs(self) -> float:
        rest = {b: z for b, z in self.coeffs.items() if b != ()}
        if not rest:
            return 0.0
        return max(z.abs_max() for z in rest.values())

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.rep is other.rep and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.rep), tuple(sorted(self.coeffs.items()))))

    def is_close(self, other: "Multivector", tol: float = 1e-12) -> bool:
        self._require_same_rep(other)
        return (self - other).max_abs() <= tol

    def __repr__(self):
        if not self.coeffs:
            return "<0>"
        parts = []
        for blade in sorted(self.coeffs, key=lambda b: (len(b), b)):
            name = "".join(f"e{i}" for i in blade) or "1"
            parts.append(f"({self.coeffs[blade]}){name}")
        return " + ".join(parts)


# -- named representations ------------------------------------------------------


def _unit_1x1(name: str) -> HMatrix:
    return HMatrix([[HScalar.unit(name)]])


@lru_cache(maxsize=None)
def get_rep(name: str) -> AlgebraRep:
    """Shared, construction-validated representation instances."""
    unit_j = HScalar.unit("j")
    unit_i = HScalar.unit("i")
    if name == "r01":
        return AlgebraRep("r01", Signature(0, 1), [_unit_1x1("i")])
    if name == "r10":
        return AlgebraRep("r10", Signature(1, 0), [_unit_1x1("j")])
    if name == "c10bar":
        return AlgebraRep("c10bar", Signature(1, 0), [_unit_1x1("j")], adjoined="i")
    if name in ("r30", "c30bar"):
        gens = [pauli2(k).scale(unit_j) for k in (1, 2, 3)]
        adj = "j" if name == "c30bar" else ""
        return AlgebraRep(name, Signature(3, 0), gens, adjoined=adj)
    if name in ("r05", "h05bar"):
        gens = [sigma_ab(0, k).scale(unit_i) for k in range(1, 6)]
        adj = "j" if name == "h05bar" else ""
        return AlgebraRep(name, Signature(0, 5), gens, adjoined=adj)
    raise ValueError(f"unknown representation {name!r}")


def pseudoscalar(rep: AlgebraRep) -> Multivector:
    """Ordered product of all generators (the highest-grade blade)."""
    acc = rep.scalar(1)
    for k in range(1, rep.signature.n + 1):
        acc = acc.gp_blades(rep.generator(k))
    return acc


def ring_unit_multivectors(rep: AlgebraRep) -> dict[str, Multivector]:
    """Realizations of 1, i, j, ij inside a complexified representation.

    The adjoined unit is a coefficient; the other unit comes from the
    pseudoscalar (i j = e1 e2 e3 in the 2x2 algebra, -i = e1..e5 in the
    4x4 algebra).
    """
    one = rep.scalar(1)
    if rep.adjoined == "i":
        i_mv = rep.scalar(HScalar.unit("i"))
        j_mv = rep.generator(1)
    elif rep.adjoined == "j":
        j_mv = rep.scalar(HScalar.unit("j"))
        if rep.signature == Signature(3, 0):
            i_mv = rep.blade((1, 2, 3), HScalar.unit("j"))
        elif rep.signature == Signature(0, 5):
            i_mv = -rep.blade((1, 2, 3, 4, 5))
        else:
            raise ValueError(f"no complex-unit realization for {rep.name}")
    else:
        raise ValueError(f"{rep.name} does not contain all four scalar units")
    return {"1": one, "i": i_mv, "j": j_mv, "ij": i_mv.gp_blades(j_mv)}


# -- dimension counting -----------------------------------------------------------


class _ExactEchelon:
    """Incremental row echelon over the rationals with sparse rows."""

    def __init__(self):
        self.rows = {}  # pivot column -> normalized sparse row

    def reduce(self, vec: dict) -> dict:
        vec = {k: Fraction(v) for k, v in vec.items() if v != 0}
        for pivot in sorted(self.rows):
            c = vec.get(pivot)
            if not c:
                continue
            for k, val in self.rows[pivot].items():
                nxt = vec.get(k, Fraction(0)) - c * val
                if nxt:
                    vec[k] = nxt
                else:
                    vec.pop(k, None)
        return vec

    def try_add(self, vec: dict) -> bool:
        """Insert if independent of the current span; returns True if new."""
        red = self.reduce(vec)
        if not red:
            return False
        pivot = min(red)
        inv = 1 / red[pivot]
        self.rows[pivot] = {k: v * inv for k, v in red.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def _sparse_coords(m: HMatrix) -> dict:
    out = {}
    for idx, c in enumerate(m.real_coords()):
        if c != 0:
            out[idx] = Fraction(c)
    return out


def enumerate_algebra(rep: AlgebraRep) -> int:
    """Count of real-linearly independent elements generated by the
    representation's generators and adjoined unit.

    Closes the generating set under multiplication; independence over the
    reals is decided by exact rank of the real coordinate vectors.
    """
    multipliers = list(rep.gens)
    if rep.adjoined:
        multipliers.append(HMatrix.identity(rep.n).scale(HScalar.unit(rep.adjoined)))
    echelon = _ExactEchelon()
    start = HMatrix.identity(rep.n)
    echelon.try_add(_sparse_coords(start))
    queue = [start]
    while queue:
        current = queue.pop()
        for mult in multipliers:
            candidate = current @ mult
            if echelon.try_add(_sparse_coords(candidate)):
                queue.append(candidate)
    return echelon.rank


def even_subalgebra(rep: AlgebraRep) -> tuple[tuple[Multivector, ...], int]:
    """Basis of the graduation-fixed part, and its count.

    For plain representations these are the even-grade blades, 2^(n-1) of
    them; with an adjoined unit the odd blades paired with the unit are
    fixed as well.
    """
    fixed = []
    for blade, unit in rep.basis:
        blade_sign = involution_sign("hat", len(blade))
        unit_sign = 1 if unit == "1" else -1
        if blade_sign * unit_sign > 0:
            coeff = HScalar.one() if unit == "1" else HScalar.unit(unit)
            fixed.append(Multivector(rep, {blade: coeff}))
    return tuple(fixed), len(fixed)


# -- explicit entry-permutation involutions ----------------------------------------


def porteous_conjugate_2x2(a: HMatrix) -> HMatrix:
    """Conjugation of a 2x2 matrix by entry permutation alone.

    Fixes the identity and negates each Pauli matrix without touching the
    hypercomplex units inside the entries.
    """
    if a.n != 2:
        raise ValueError("expects a 2x2 matrix")
    (a11, a12), (a21, a22) = a.rows
    return HMatrix([[a22, -a12], [-a21, a11]])


_DAGGER_SRC = (
    ((2, 2, 1), (1, 2, -1), (4, 2, 1), (3, 2, -1)),
    ((2, 1, -1), (1, 1, 1), (4, 1, -1), (3, 1, 1)),
    ((2, 4, 1), (1, 4, -1), (4, 4, 1), (3, 4, -1)),
    ((2, 3, -1), (1, 3, 1), (4, 3, -1), (3, 3, 1)),
)

_HAT_SRC = (
    ((2, 2, 1), (2, 1, -1), (2, 4, 1), (2, 3, -1)),
    ((1, 2, -1), (1, 1, 1), (1, 4, -1), (1, 3, 1)),
    ((4, 2, 1), (4, 1, -1), (4, 4, 1), (4, 3, -1)),
    ((3, 2, -1), (3, 1, 1), (3, 4, -1), (3, 3, 1)),
)


def _permute_4x4(a: HMatrix, table, conjugate_entries: bool) -> HMatrix:
    if a.n != 4:
        raise ValueError("expects a 4x4 matrix")
    rows = []
    for r in range(4):
        line = []
        for c in range(4):
            sr, sc, sign = table[r][c]
            z = a.rows[sr - 1][sc - 1]
            if conjugate_entries:
                z = z.conjugate()
            line.append(-z if sign < 0 else z)
        rows.append(line)
    return HMatrix(rows)


def porteous_dagger_4x4(a: HMatrix) -> HMatrix:
    """Reversion of a 4x4 matrix as a signed entry permutation."""
    return _permute_4x4(a, _DAGGER_SRC, conjugate_entries=False)


def porteous_hat_4x4(a: HMatrix) -> HMatrix:
    """Graduation of a 4x4 matrix: signed permutation of the entrywise
    scalar conjugates, chosen so that bar = hat-then-dagger is plain
    conjugate-transposition."""
    return _permute_4x4(a, _HAT_SRC, conjugate_entries=True)


# -- published sign tables ------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    unit: str
    bar: int
    dagger: int
    hat: int
    derived: bool = False


def _sign_of(mv: Multivector, image: Multivector) -> int:
    if image == mv:
        return 1
    if image == -mv:
        return -1
    raise ValueError(f"involution image of {mv!r} is not +-itself")


def _unit_signs(mv: Multivector) -> tuple[int, int, int]:
    return tuple(_sign_of(mv, mv.involution(k)) for k in ("bar", "dagger", "hat"))


def _catalog(rep_name: str):
    """Units displayed for each representation, as blade realizations."""
    rep = get_rep(rep_name)
    unit_j = HScalar.unit("j")
    if rep_name == "r01":
        return rep, [("i", rep.generator(1), False)]
    if rep_name == "r10":
        return rep, [("j", rep.generator(1), False)]
    if rep_name == "c10bar":
        return rep, [
            ("i", rep.scalar(HScalar.unit("i")), False),
            ("j", rep.generator(1), False),
            ("ij", rep.blade((1,), HScalar.unit("i")), True),
        ]
    if rep_name == "c30bar":
        rows = [(f"e{k}", rep.generator(k), False) for k in (1, 2, 3)]
        rows += [(f"sigma{k}", rep.blade((k,), unit_j), False) for k in (1, 2, 3)]
        rows.append(("i", rep.blade((1, 2, 3), unit_j), False))
        rows.append(("j", rep.scalar(unit_j), False))
        rows.append(("ij", rep.blade((1, 2, 3)), True))
        return rep, rows
    if rep_name == "h05bar":
        minus_i = rep.blade((1, 2, 3, 4, 5))  # i = -e1e2e3e4e5
        rows = [(f"e{k}", rep.generator(k), False) for k in range(1, 6)]
        for k in range(1, 6):
            rows.append((f"sigma0{k}", minus_i.gp_blades(rep.generator(k)), False))
        for k in range(1, 6):
            for l in range(k + 1, 6):
                mv = (-minus_i).gp_blades(rep.blade((k, l)))
                rows.append((f"sigma{k}{l}", mv, False))
        rows.append(("i", -minus_i, False))
        rows.append(("j", rep.scalar(unit_j), False))
        rows.append(("ij", minus_i.scale(-unit_j), True))
        return rep, rows
    raise ValueError(f"no published sign table for representation {rep_name!r}")


# cmd-facing aliases: the tables cover the plain and the complexified
# algebra alike, and the listed units need the complexified coefficients.
_TABLE_ALIAS = {"r30": "c30bar", "r05": "h05bar"}


def involution_table(rep_name: str) -> list[TableRow]:
    """Computed bar/dagger/hat signs for every displayed unit.

    Rows marked derived have no published counterpart; they follow from
    the blade realization and are printed for completeness.
    """
    _, catalog = _catalog(_TABLE_ALIAS.get(rep_name, rep_name))
    out = []
    for unit_name, mv, derived in catalog:
        b, d, h = _unit_signs(mv)
        out.append(TableRow(unit_name, b, d, h, derived))
    return out
