"""Verification suites behind the ``verify`` command.

Every suite returns a list of :class:`CheckReport` records.  A check
either passes, fails, or is marked ``deviation-documented``: the last
status is reserved for the two commutator right-hand sides and the
literal generator-split formula, where the computed algebra demonstrably
differs from the published closed form and the harness reports the
discrepancy instead of silently siding with either.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from .algebra import (
    Multivector,
    _ExactEchelon,
    _sparse_coords,
    enumerate_algebra,
    even_subalgebra,
    get_rep,
    involution_table,
    porteous_conjugate_2x2,
    porteous_dagger_4x4,
    porteous_hat_4x4,
    pseudoscalar,
)
from .matrices import HMatrix, pauli2, pauli4, pauli4_literal, sigma_ab, sigma_ab_entry
from .paravectors import dot, embed_momentum, get_space, wedge2, wedge3, wedge4
from .physics import (
    Linearization,
    MomentumHM4,
    hermiticity_check,
    interfere,
    linearize,
    mass_qform,
    reconstruct_probability,
    stabilizer_check,
)
from .rotors import (
    RotorParams,
    act,
    h1_null_pair,
    hyperbolic_generator,
    lorentz_generators,
    null_factorize,
    null_reconstruct,
    quasi_sphere_point_r66,
    quasi_sphere_point_r66_via_rotors,
    rotor_from_params,
    sphere_point,
    sphere_point_via_rotors,
    su4_generator,
    verify_index_commutators,
    verify_lorentz_commutators,
    verify_null_split,
)
from .scalars import HScalar, from_null, to_null

__all__ = ["CheckReport", "run_suite", "run_all", "summarize", "SUITE_NAMES"]

SUITE_NAMES = (
    "tables",
    "dims",
    "commutators",
    "involutions",
    "sphere",
    "wedge",
    "rotations",
    "quantum",
)

DEFAULT_TOL = 1e-10
_SEED = 20070816


@dataclass
class CheckReport:
    check_id: str
    description: str
    claim: str
    status: str
    max_error: float
    elapsed_ms: float

    def to_dict(self) -> dict:
        return asdict(self)


def _run(check_id: str, description: str, claim: str, fn) -> CheckReport:
    t0 = time.perf_counter()
    try:
        result = fn()
    except Exception as exc:  # a crashing check is a failing check
        elapsed = (time.perf_counter() - t0) * 1000.0
        return CheckReport(
            check_id, f"{description} [error: {exc}]", claim, "fail", math.inf, elapsed
        )
    elapsed = (time.perf_counter() - t0) * 1000.0
    if isinstance(result, tuple):
        ok, err = result
        status = "pass" if ok else "fail"
    else:
        status, err = result["status"], result.get("max_error", 0.0)
    return CheckReport(check_id, description, claim, status, float(err), elapsed)


def _rng() -> random.Random:
    return random.Random(_SEED)


def _random_mv(rep, rng, scale=1.0) -> Multivector:
    coeffs = {}
    for blade in rep.blades:
        x = rng.uniform(-scale, scale)
        second = rng.uniform(-scale, scale) if rep.adjoined else 0.0
        if rep.adjoined == "i":
            coeffs[blade] = HScalar.flt(x, second, 0.0, 0.0)
        elif rep.adjoined == "j":
            coeffs[blade] = HScalar.flt(x, 0.0, second, 0.0)
        else:
            coeffs[blade] = HScalar.flt(x)
    return Multivector(rep, coeffs)


def _random_exact_mv(rep, rng, span=4) -> Multivector:
    coeffs = {}
    for blade in rep.blades:
        x = Fraction(rng.randint(-span, span), rng.randint(1, 3))
        second = Fraction(rng.randint(-span, span), rng.randint(1, 3)) if rep.adjoined else 0
        if rep.adjoined == "i":
            coeffs[blade] = HScalar.exact(x, second)
        elif rep.adjoined == "j":
            coeffs[blade] = HScalar.exact(x, 0, second)
        else:
            coeffs[blade] = HScalar.exact(x)
    return Multivector(rep, coeffs)


# ---------------------------------------------------------------- tables ----

_TABLE1_EXPECT = {"i": (-1, 1, -1), "j": (-1, 1, -1)}
_TABLE2_EXPECT = {
    "e": (-1, 1, -1),
    "sigma": (1, 1, 1),
    "i": (-1, -1, 1),
    "j": (-1, 1, -1),
}
_TABLE3_EXPECT = {
    "e": (-1, 1, -1),
    "sigma0": (1, 1, 1),
    "sigmakl": (1, -1, -1),
    "i": (-1, 1, -1),
    "j": (-1, 1, -1),
}


def _classify_unit(name: str, five_dim: bool) -> str:
    if name.startswith("e"):
        return "e"
    if name.startswith("sigma"):
        if not five_dim:
            return "sigma"
        return "sigma0" if name.startswith("sigma0") else "sigmakl"
    return name


def _table_check(rep_name: str, expect: dict, five_dim: bool):
    def body():
        bad = 0
        for row in involution_table(rep_name):
            if row.derived:
                continue
            want = expect[_classify_unit(row.unit, five_dim)]
            if (row.bar, row.dagger, row.hat) != want:
                bad += 1
        return bad == 0, float(bad)

    return body


def _table_one_dim():
    bad = 0
    for rep_name in ("r10", "r01"):
        for row in involution_table(rep_name):
            if row.derived:
                continue
            if (row.bar, row.dagger, row.hat) != _TABLE1_EXPECT[row.unit]:
                bad += 1
    return bad == 0, float(bad)


def run_tables(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    return [
        _run(
            "tables.one_dim",
            "involution signs of the one-dimensional algebra units",
            "both i and j transform as (-, +, -) under bar/dagger/hat",
            _table_one_dim,
        ),
        _run(
            "tables.three_dim",
            "involution signs of the units in the 2x2 hyperbolic Pauli algebra",
            "e_k (-,+,-), sigma_k (+,+,+), i (-,-,+), j (-,+,-)",
            _table_check("r30", _TABLE2_EXPECT, False),
        ),
        _run(
            "tables.five_dim",
            "involution signs of the units in the 4x4 algebra",
            "e_k (-,+,-), sigma_0k (+,+,+), sigma_kl (+,-,-), i (-,+,-), j (-,+,-)",
            _table_check("r05", _TABLE3_EXPECT, True),
        ),
    ]


# ------------------------------------------------------------------ dims ----


def run_dims(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    reports = []
    for name, want in (
        ("r01", 2),
        ("r10", 2),
        ("r30", 8),
        ("r05", 32),
        ("c30bar", 16),
        ("h05bar", 64),
    ):
        reports.append(
            _run(
                f"dims.{name}",
                f"real dimension of the generated algebra {name}",
                f"multiplicative closure spans exactly {want} independent elements",
                lambda name=name, want=want: (
                    enumerate_algebra(get_rep(name)) == want,
                    0.0,
                ),
            )
        )

    def even_body():
        rep = get_rep("r05")
        basis, count = even_subalgebra(rep)
        if count != 16:
            return False, float(count)
        # closed under multiplication: products stay graduation-fixed
        for a in basis:
            for b in basis:
                prod = a.gp_blades(b)
                if prod.hat() != prod:
                    return False, 1.0
        # generated by the rotation generators i*sigma_kl = -e_k e_l
        echelon = _ExactEchelon()
        seeds = [rep.scalar(1).to_matrix()]
        mults = [
            (-rep.blade((k, l))).to_matrix()
            for k in range(1, 6)
            for l in range(k + 1, 6)
        ]
        echelon.try_add(_sparse_coords(seeds[0]))
        queue = list(seeds)
        while queue:
            cur = queue.pop()
            for m in mults:
                cand = cur @ m
                if echelon.try_add(_sparse_coords(cand)):
                    queue.append(cand)
        ok = echelon.rank == 16
        return ok, 0.0 if ok else float(echelon.rank)

    reports.append(
        _run(
            "dims.even_r05",
            "graduation-fixed subalgebra of the five-generator algebra",
            "sixteen elements (even blades), closed under the product",
            even_body,
        )
    )

    def pseudo(name, unit):
        def body():
            rep = get_rep(name)
            ps = pseudoscalar(rep)
            want = HMatrix.identity(rep.n).scale(HScalar.unit(unit) if unit[0] != "-" else -HScalar.unit(unit[1:]))
            return ps.to_matrix() == want, 0.0

        return body

    reports.append(
        _run(
            "dims.pseudoscalar_r30",
            "highest-grade element of the 2x2 hyperbolic algebra",
            "e1 e2 e3 = ij",
            pseudo("r30", "ij"),
        )
    )
    reports.append(
        _run(
            "dims.pseudoscalar_r05",
            "highest-grade element of the 4x4 algebra",
            "e1 e2 e3 e4 e5 = -i",
            pseudo("r05", "-i"),
        )
    )
    reports.append(
        _run(
            "dims.pseudoscalar_r01",
            "highest-grade element of the complex numbers",
            "the single generator is i",
            pseudo("r01", "i"),
        )
    )
    return reports


# ----------------------------------------------------------- commutators ----


def run_commutators(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    reports = [
        _run(
            "commutators.pauli_literals",
            "tensor-product 4x4 Pauli matrices against their entry tables",
            "all fifteen matrices agree entrywise with the transcriptions",
            lambda: (
                all(pauli4(k) == pauli4_literal(k) for k in range(1, 16)),
                0.0,
            ),
        ),
        _run(
            "commutators.trace_orthogonality",
            "pairwise trace products of the fifteen 4x4 Pauli matrices",
            "trace(sigma_k sigma_l) = 4 delta_kl exactly",
            _trace_orthogonality,
        ),
        _run(
            "commutators.sigma_table",
            "antisymmetry and spot values of the index-pair assignment",
            "sigma_ab = -sigma_ba; (0,1)->sigma_1, (1,0)->-sigma_1, (4,5)->sigma_4",
            _sigma_table,
        ),
    ]

    memo = {}

    def _index() -> dict:
        if "index" not in memo:
            memo["index"] = verify_index_commutators()
        return memo["index"]

    def _lor() -> dict:
        if "lor" not in memo:
            memo["lor"] = verify_lorentz_commutators()
        return memo["lor"]

    reports.append(
        _run(
            "commutators.index_jj",
            "index-pair commutators of the J generators, 900 combinations",
            "[J_ab, J_cd] = i(d_ac J_bd - d_ad J_bc - d_bc J_ad + d_bd J_ac)",
            lambda: (_index()["failures_jj"] == 0, float(_index()["failures_jj"])),
        )
    )
    reports.append(
        _run(
            "commutators.index_jk",
            "mixed commutators with the hyperbolic extension K = ij J",
            "[J_ab, K_cd] = i(d_ac K_bd - d_ad K_bc - d_bc K_ad + d_bd K_ac)",
            lambda: (_index()["failures_jk"] == 0, float(_index()["failures_jk"])),
        )
    )
    reports.append(
        _run(
            "commutators.index_kk_computed",
            "K-K commutators against the computed right-hand side",
            "[K_ab, K_cd] = -i(d J) with J on the right, verified exactly",
            lambda: (
                _index()["failures_kk_computed"] == 0,
                float(_index()["failures_kk_computed"]),
            ),
        )
    )
    reports.append(
        _run(
            "commutators.index_kk_printed",
            "K-K commutators against the published right-hand side",
            "published -i(d K) form is not satisfied by this representation;"
            " the computed -i(d J) form is",
            lambda: {
                "status": "deviation-documented"
                if _index()["printed_kk_failures"] > 0
                and _index()["failures_kk_computed"] == 0
                else "fail",
                "max_error": float(_index()["printed_kk_failures"]),
            },
        )
    )
    reports.append(
        _run(
            "commutators.lorentz",
            "rotation/boost generator commutators of the 2x2 algebra",
            "[J,J] = i e J, [J,K] = i e K, computed [K,K] = -i e J, exactly",
            lambda: (
                all(v == 0 for v in _lor()["failures"].values()),
                float(sum(_lor()["failures"].values())),
            ),
        )
    )
    reports.append(
        _run(
            "commutators.lorentz_kk_printed",
            "boost-boost commutators against the published right-hand side",
            "published -i e K form fails for every distinct pair;"
            " the computed -i e J form holds",
            lambda: {
                "status": "deviation-documented"
                if _lor()["printed_kk_failures"] == 6
                and _lor()["failures"]["kk_computed"] == 0
                else "fail",
                "max_error": float(_lor()["printed_kk_failures"]),
            },
        )
    )

    def split_lorentz():
        rot, boo = lorentz_generators()
        unit_i = HScalar.unit("i")

        def struct(gens, a, b):
            acc = HMatrix.zeros(2)
            for c in range(3):
                e = _levi(a, b, c)
                if e:
                    acc = acc + gens[c].scale(e)
            return acc.scale(unit_i)

        res = verify_null_split(rot, boo, struct)
        bad = res["cross_failures"] + res["structure_failures"] + res["reconstruction_failures"]
        return bad == 0, float(bad)

    reports.append(
        _run(
            "commutators.split_lorentz",
            "idempotent split of the 2x2 generators into commuting copies",
            "A = (1+j)/2 J, B = (1-j)/2 J: [A,B] = 0, A+B = J, i(A-B) = K,"
            " and each copy keeps the structure constants",
            split_lorentz,
        )
    )

    def split_index():
        pairs = [(a, b) for a in range(6) for b in range(a + 1, 6)]
        jg = [su4_generator(a, b) for a, b in pairs]
        kg = [hyperbolic_generator(a, b) for a, b in pairs]
        unit_i = HScalar.unit("i")
        idx = {p: k for k, p in enumerate(pairs)}

        def struct(gens, x, y):
            (a, b), (c, d) = pairs[x], pairs[y]
            acc = HMatrix.zeros(4)
            for coef, (p, q) in (
                (1 if a == c else 0, (b, d)),
                (-1 if a == d else 0, (b, c)),
                (-1 if b == c else 0, (a, d)),
                (1 if b == d else 0, (a, c)),
            ):
                if not coef or p == q:
                    continue
                if (p, q) in idx:
                    acc = acc + gens[idx[(p, q)]].scale(coef)
                else:
                    acc = acc + gens[idx[(q, p)]].scale(-coef)
            return acc.scale(unit_i)

        res = verify_null_split(jg, kg, struct)
        bad = res["cross_failures"] + res["structure_failures"] + res["reconstruction_failures"]
        return bad == 0, float(bad)

    reports.append(
        _run(
            "commutators.split_index",
            "idempotent split of the fifteen index-pair generators",
            "both commuting copies reproduce the index structure constants",
            split_index,
        )
    )

    def split_literal():
        rot, boo = lorentz_generators()
        res = verify_null_split(rot, boo, lambda g, a, b: HMatrix.zeros(2))
        # only the literal-form count matters here
        degenerate = res["literal_form_nonzero"] == 0
        return {
            "status": "deviation-documented" if degenerate else "fail",
            "max_error": float(res["literal_form_nonzero"]),
        }

    reports.append(
        _run(
            "commutators.split_literal",
            "published closed form (J + ij K)/2 of the commuting split",
            "literal substitution of K = ij J collapses to zero;"
            " the idempotent form (1 +- j)/2 J realizes the intended pair",
            split_literal,
        )
    )
    return reports


def _levi(a, b, c) -> int:
    perm = (a, b, c)
    if sorted(perm) != [0, 1, 2]:
        return 0
    inv = sum(1 for x in range(3) for y in range(x + 1, 3) if perm[x] > perm[y])
    return -1 if inv % 2 else 1


def _trace_orthogonality():
    four = HScalar.exact(4)
    zero = HScalar.exact(0)
    for k in range(1, 16):
        for l in range(1, 16):
            t = (pauli4(k) @ pauli4(l)).trace()
            if t != (four if k == l else zero):
                return False, 1.0
    return True, 0.0


def _sigma_table():
    for a in range(6):
        for b in range(6):
            if a == b:
                continue
            if sigma_ab(a, b) != -sigma_ab(b, a):
                return False, 1.0
    ok = (
        sigma_ab(0, 1) == pauli4(1)
        and sigma_ab(1, 0) == -pauli4(1)
        and sigma_ab(4, 5) == pauli4(4)
        and sigma_ab_entry(0, 2) == (3, -1)
    )
    return ok, 0.0


# ------------------------------------------------------------ involutions ----


def run_involutions(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    rng = _rng()
    reports = []

    def product_rules():
        worst = 0.0
        for name in ("r30", "c30bar", "r05", "h05bar"):
            rep = get_rep(name)
            for _ in range(500):
                u, v = _random_mv(rep, rng), _random_mv(rep, rng)
                uv = u.gp_blades(v)
                worst = max(
                    worst,
                    (uv.dagger() - v.dagger().gp_blades(u.dagger())).max_abs(),
                    (uv.hat() - u.hat().gp_blades(v.hat())).max_abs(),
                    (uv.bar() - v.bar().gp_blades(u.bar())).max_abs(),
                )
        return worst <= tol, worst

    reports.append(
        _run(
            "involutions.product_rules",
            "reversion/conjugation reverse products, graduation preserves them",
            "(uv)^dagger = v^dagger u^dagger, hat(uv) = hat(u) hat(v),"
            " bar(uv) = bar(v) bar(u) on 500 random pairs per representation",
            product_rules,
        )
    )

    def composition():
        for name in ("r01", "r10", "c10bar", "r30", "c30bar", "r05", "h05bar"):
            rep = get_rep(name)
            for _ in range(500):
                u = _random_exact_mv(rep, rng)
                if u.bar() != u.hat().dagger() or u.bar() != u.dagger().hat():
                    return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "involutions.bar_composition",
            "conjugation as the composite of graduation and reversion",
            "bar = hat-then-dagger = dagger-then-hat, bit-exact",
            composition,
        )
    )

    def bar_adjoint():
        for name in ("r30", "c30bar", "r05", "h05bar"):
            rep = get_rep(name)
            for _ in range(25):
                u = _random_exact_mv(rep, rng)
                if u.bar().to_matrix() != u.to_matrix().adjoint():
                    return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "involutions.bar_is_adjoint",
            "conjugation on the matrix image",
            "bar equals conjugate-transposition with i -> -i, j -> -j",
            bar_adjoint,
        )
    )

    def gp_dual_route():
        worst = 0.0
        for name in ("r30", "c30bar", "r05", "h05bar", "c10bar"):
            rep = get_rep(name)
            for _ in range(100):
                u, v = _random_mv(rep, rng), _random_mv(rep, rng)
                worst = max(worst, (u.gp(v) - u.gp_blades(v)).max_abs())
        return worst <= 1e-11, worst

    reports.append(
        _run(
            "involutions.gp_dual_route",
            "geometric product via matrices against the blade-level product",
            "matrix-multiply-then-decompose agrees with anticommutation"
            " bookkeeping on 500 random pairs",
            gp_dual_route,
        )
    )

    def porteous_2():
        idm = HMatrix.identity(2)
        if porteous_conjugate_2x2(idm) != idm:
            return False, 1.0
        for k in (1, 2, 3):
            if porteous_conjugate_2x2(pauli2(k)) != -pauli2(k):
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "involutions.porteous_2x2",
            "entry-permutation conjugation of 2x2 matrices",
            "fixes the identity and negates each Pauli matrix",
            porteous_2,
        )
    )

    def porteous_4():
        rep = get_rep("h05bar")
        for _ in range(25):
            u = _random_exact_mv(rep, rng)
            m = u.to_matrix()
            if porteous_dagger_4x4(m) != u.dagger().to_matrix():
                return False, 1.0
            if porteous_hat_4x4(m) != u.hat().to_matrix():
                return False, 1.0
            if porteous_dagger_4x4(porteous_hat_4x4(m)) != m.adjoint():
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "involutions.porteous_4x4",
            "explicit 4x4 entry formulas for reversion and graduation",
            "the displayed permutations equal the blade-level involutions"
            " and compose to conjugate-transposition",
            porteous_4,
        )
    )

    def quaternions():
        q = [pauli2(k).scale(HScalar.unit("i")) for k in (1, 2, 3)]
        idm = HMatrix.identity(2)
        for qk in q:
            if qk @ qk != -idm:
                return False, 1.0
        if q[0] @ q[1] @ q[2] != idm:
            return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "involutions.quaternions",
            "the quaternion subalgebra inside the 2x2 matrices",
            "q_k = i sigma_k satisfy q_k^2 = -1 and q_1 q_2 q_3 = +1",
            quaternions,
        )
    )

    def null_scalar():
        for _ in range(1000):
            z1 = HScalar.exact(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), 0,
                               Fraction(rng.randint(-9, 9), rng.randint(1, 4)), 0)
            z2 = HScalar.exact(Fraction(rng.randint(-9, 9), rng.randint(1, 4)), 0,
                               Fraction(rng.randint(-9, 9), rng.randint(1, 4)), 0)
            p1, p2 = to_null(z1), to_null(z2)
            prod = to_null(z1 * z2)
            if prod.a != p1.a * p2.a or prod.b != p1.b * p2.b:
                return False, 1.0
            if to_null(z1.conjugate()) != p1.swap():
                return False, 1.0
            if from_null(p1) != z1:
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "involutions.null_scalar",
            "null-basis coordinates of hyperbolic numbers",
            "componentwise product law and conjugation-as-swap,"
            " bit-exact on 1000 samples",
            null_scalar,
        )
    )
    return reports


# ---------------------------------------------------------------- sphere ----


def run_sphere(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    rng = _rng()
    reports = []

    def closed_vs_rotor():
        worst = 0.0
        for k in range(100):
            angles = [rng.uniform(-math.pi, math.pi) for _ in range(5)]
            r = (0.5, 1.0, 3.0)[k % 3]
            a = sphere_point(r, angles)
            b = sphere_point_via_rotors(r, angles)
            worst = max(worst, max(abs(x - y) for x, y in zip(a, b)))
            norm = math.sqrt(sum(x * x for x in a))
            worst = max(worst, abs(norm - r))
        return worst <= tol, worst

    reports.append(
        _run(
            "sphere.closed_vs_rotor",
            "five-sphere parametrization against the five-rotation path",
            "closed form equals the composed-rotor action on (0,...,0,r),"
            " and the Euclidean norm equals r",
            closed_vs_rotor,
        )
    )

    def membership():
        space = get_space("r66")
        worst = 0.0
        for k in range(100):
            phis = [rng.uniform(-math.pi, math.pi) for _ in range(5)]
            xis = [rng.uniform(-2.0, 2.0) for _ in range(5)]
            r = (0.5, 1.0, 3.0)[k % 3]
            coords = quasi_sphere_point_r66(r, phis, xis)
            q = space.paravector(coords).qform()
            worst = max(
                worst,
                abs(float(q.x) - r * r),
                abs(float(q.y)),
                abs(float(q.v)),
                abs(float(q.w)),
            )
        return worst <= tol, worst

    reports.append(
        _run(
            "sphere.r66_membership",
            "hyperbolic quasi-sphere points in the split twelve-space",
            "substituted complexified angles give qform = r^2 with no"
            " imaginary or hyperbolic residue",
            membership,
        )
    )

    def rotor_path():
        worst = 0.0
        for _ in range(50):
            phis = [rng.uniform(-math.pi, math.pi) for _ in range(5)]
            xis = [rng.uniform(-1.5, 1.5) for _ in range(5)]
            a = quasi_sphere_point_r66(1.0, phis, xis)
            b = quasi_sphere_point_r66_via_rotors(1.0, phis, xis)
            worst = max(worst, max(abs(x - y) for x, y in zip(a, b)))
        return worst <= tol, worst

    reports.append(
        _run(
            "sphere.r66_rotor_path",
            "generalized five-rotation composition in the twelve-space",
            "complexified-angle substitution equals the generalized rotor"
            " action coordinatewise",
            rotor_path,
        )
    )

    def reduction():
        worst = 0.0
        for _ in range(25):
            phis = [rng.uniform(-math.pi, math.pi) for _ in range(5)]
            a = quasi_sphere_point_r66(2.0, phis, [0.0] * 5)
            b = sphere_point(2.0, phis)
            worst = max(worst, max(abs(x - y) for x, y in zip(a[:6], b)))
            worst = max(worst, max(abs(x) for x in a[6:]))
        return worst <= tol, worst

    reports.append(
        _run(
            "sphere.r66_reduction",
            "vanishing hyperbolic angles reduce to the real five-sphere",
            "last six coordinates vanish and the first six match the"
            " closed sphere form",
            reduction,
        )
    )
    return reports


# ----------------------------------------------------------------- wedge ----


def run_wedge(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    rng = _rng()
    space = get_space("m4")
    reports = []

    def rand_exact_vec():
        return space.paravector([Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(4)])

    def split():
        for _ in range(500):
            x, y = rand_exact_vec(), rand_exact_vec()
            mx, my = x.to_multivector(), y.to_multivector()
            lhs = mx.gp_blades(my.bar())
            rhs = space.rep.scalar(dot(x, y)) + wedge2(x, y)
            if lhs != rhs:
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "wedge.split",
            "product x bar(y) against its symmetric/antisymmetric parts",
            "x bar(y) = dot(x,y) + wedge(x,y), bit-exact on 500 random pairs",
            split,
        )
    )

    def antisym():
        for _ in range(12):
            xs = [rand_exact_vec() for _ in range(3)]
            base = wedge3(*xs)
            for a in range(3):
                for b in range(a + 1, 3):
                    sw = list(xs)
                    sw[a], sw[b] = sw[b], sw[a]
                    if wedge3(*sw) != -base:
                        return False, 1.0
            ys = [rand_exact_vec() for _ in range(4)]
            base4 = wedge4(*ys)
            for a in range(4):
                for b in range(a + 1, 4):
                    sw = list(ys)
                    sw[a], sw[b] = sw[b], sw[a]
                    if wedge4(*sw) != -base4:
                        return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "wedge.antisymmetry",
            "triple and quadruple wedge under argument transpositions",
            "every transposition flips the sign, bit-exact",
            antisym,
        )
    )

    def degenerate():
        for _ in range(12):
            x, y, v = (rand_exact_vec() for _ in range(3))
            lam = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            mu = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            dep = space.paravector(
                [lam * a + mu * b for a, b in zip(x.coords, y.coords)]
            )
            if wedge4(x, y, v, dep).coeffs:
                return False, 1.0
            if wedge2(x, x).coeffs or wedge3(x, y, x).coeffs:
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "wedge.degenerate",
            "wedge of linearly dependent arguments",
            "vanishes identically",
            degenerate,
        )
    )

    def basis_constant():
        # exact coordinates so the 24-term sum is bit-exact
        e = [space.paravector([1 if i == k else 0 for i in range(4)]) for k in range(4)]
        total = wedge4(*e)
        ij = space.rep.blade((1, 2, 3))
        if total != ij:
            return False, 1.0
        # the anchor product with alternating bars
        mats = [v.to_multivector() for v in e]
        anchor = mats[0].gp_blades(mats[1].bar()).gp_blades(mats[2]).gp_blades(mats[3].bar())
        return anchor == ij, 0.0

    reports.append(
        _run(
            "wedge.basis_constant",
            "wedge of the four basis paravectors",
            "equals ij exactly; constant fixed by the 24-term alternating sum",
            basis_constant,
        )
    )
    return reports


# ------------------------------------------------------------- rotations ----


def _random_rotor(space: str, rng):
    if space == "h1":
        return rotor_from_params(
            RotorParams.h1(rng.uniform(-math.pi, math.pi), rng.uniform(-2, 2))
        )
    if space == "m4":
        return rotor_from_params(
            RotorParams.m4(
                phi=[rng.uniform(-math.pi, math.pi) for _ in range(3)],
                xi=[rng.uniform(-2, 2) for _ in range(3)],
            )
        )
    pairs = [(a, b) for a in range(6) for b in range(a + 1, 6)]
    chosen = rng.sample(pairs, rng.randint(1, 4))
    phi = {p: rng.uniform(-math.pi, math.pi) for p in chosen}
    if space == "e6":
        return rotor_from_params(RotorParams.e6(phi))
    xi = {p: rng.uniform(-1.5, 1.5) for p in rng.sample(pairs, rng.randint(1, 4))}
    return rotor_from_params(RotorParams.r66(phi, xi))


def _random_point(space_name: str, rng):
    space = get_space(space_name)
    return space.paravector([rng.uniform(-2, 2) for _ in range(space.dim)])


def run_rotations(tol: float = DEFAULT_TOL, samples: int = 200) -> list[CheckReport]:
    rng = _rng()
    reports = []
    spaces = ("h1", "m4", "e6", "r66")
    pool = {}

    def rotors() -> dict:
        if not pool:
            pool.update(
                {s: [_random_rotor(s, rng) for _ in range(samples)] for s in spaces}
            )
        return pool

    def spin():
        worst = max(r.spin_residual for rs in rotors().values() for r in rs)
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "rotations.spin_condition",
            "group-membership certificates of all random rotors",
            "g bar(g) = 1 within 1e-12 for every constructed rotor",
            spin,
        )
    )

    def hat_dagger():
        worst = max(r.dagger_residual for rs in rotors().values() for r in rs)
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "rotations.hat_inverse_dagger",
            "inverse-of-graduation against reversion",
            "hat(g)^-1 = dagger(g) within 1e-12 for every rotor",
            hat_dagger,
        )
    )

    def qform_invariance():
        worst = 0.0
        for s in spaces:
            for r in rotors()[s]:
                x = _random_point(s, rng)
                before = x.qform()
                after = act(r, x).qform()
                worst = max(worst, (before - after).abs_max())
        return worst <= tol, worst

    reports.append(
        _run(
            "rotations.qform_invariance",
            "quadratic-form preservation under the rotation action",
            "qform(g x hat(g)^-1) = qform(x) within 1e-10 per space",
            qform_invariance,
        )
    )

    def boost():
        space = get_space("m4")
        worst = 0.0
        for xi in (-2.0, -0.5, 0.5, 2.0):
            for m in (1.0, 2.0):
                r = rotor_from_params(RotorParams.m4(xi=(0, 0, xi)))
                out = act(r, space.paravector([m, 0, 0, 0]))
                want = (m * math.cosh(xi), 0.0, 0.0, m * math.sinh(xi))
                worst = max(worst, max(abs(a - b) for a, b in zip(out.coords, want)))
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "rotations.boost",
            "pure boost acting on a rest-frame vector",
            "(m, 0, 0, 0) -> (m cosh xi, 0, 0, m sinh xi) within 1e-12",
            boost,
        )
    )

    def metric():
        cross = {
            "m4": {},
            "e6": {},
            "h1": {(0, 3): 1, (1, 2): -1},
            "r66": {(a, a + 6): 1 for a in range(6)},
        }
        for name in ("m4", "e6", "r66", "h1"):
            space = get_space(name)
            for a in range(space.dim):
                for b in range(space.dim):
                    ea = space.paravector([1 if k == a else 0 for k in range(space.dim)])
                    eb = space.paravector([1 if k == b else 0 for k in range(space.dim)])
                    if a == b:
                        want = HScalar.exact(space.metric[a])
                    else:
                        pair = (a, b) if a < b else (b, a)
                        want = HScalar.exact(0, 0, 0, cross[name].get(pair, 0))
                    if dot(ea, eb) != want:
                        return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "rotations.metric",
            "basis scalar products against the diagonal metric",
            "e_a . e_b = g_ab on the diagonal and for every distinct pair"
            " in the Minkowski and Euclidean spaces; hyperbolic dual pairs"
            " carry their ij cross term",
            metric,
        )
    )

    def pure_forms():
        worst = 0.0
        r = rotor_from_params(RotorParams.m4(phi=(0.4, -0.9, 1.2)))
        worst = max(worst, (r.g.hat() - r.g).max_abs())
        b = rotor_from_params(RotorParams.m4(xi=(0.3, -1.1, 0.7)))
        binv = b.g.rep.decompose(b.g.to_matrix().inverse())
        worst = max(worst, (b.g.hat() - binv).max_abs())
        g2 = rotor_from_params(RotorParams.e6({(0, 2): 0.8}))
        worst = max(worst, (g2.ghat_inv - g2.g).max_abs())
        rot = rotor_from_params(RotorParams.e6({(2, 5): 0.8, (3, 4): -0.4}))
        worst = max(worst, (rot.g.hat() - rot.g).max_abs())
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "rotations.pure_forms",
            "graduation of pure rotations and pure boosts",
            "even-generated rotors have hat(g) = g; boost-like rotors have"
            " hat(g) = g^-1",
            pure_forms,
        )
    )

    def null_roundtrip():
        worst = 0.0
        for _ in range(40):
            r = _random_rotor("h1", rng)
            rec = null_reconstruct(null_factorize(r))
            worst = max(worst, (rec - r.g.to_matrix()).max_abs())
            phi, xi = r.params.phi[0], r.params.xi[0]
            cp, cm = h1_null_pair(phi, xi)
            plus, minus = null_factorize(r)
            worst = max(worst, abs(plus.entry(0, 0).x - cp.real), abs(plus.entry(0, 0).y - cp.imag))
            worst = max(worst, abs(minus.entry(0, 0).x - cm.real), abs(minus.entry(0, 0).y - cm.imag))
        for _ in range(10):
            r = _random_rotor("r66", rng)
            rec = null_reconstruct(null_factorize(r))
            worst = max(worst, (rec - r.g.to_matrix()).max_abs())
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "rotations.null_roundtrip",
            "null-basis factorization of rotors",
            "idempotent components reconstruct the rotor within 1e-12;"
            " the scalar case matches exp(-i phi/2) exp(+- xi/2)",
            null_roundtrip,
        )
    )
    return reports


# --------------------------------------------------------------- quantum ----


def run_quantum(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    rng = _rng()
    reports = []

    def interference():
        worst = 0.0
        worst = max(worst, abs(interfere(0.25, 0.25, 1.0) - 1.0))
        worst = max(worst, abs(interfere(0.3, 0.4, 0.0) - 0.7))
        for _ in range(200):
            p1, p2 = rng.uniform(0, 1), rng.uniform(0, 1)
            lam = rng.uniform(-3, 3)
            worst = max(worst, abs(interfere(p1, p2, lam) - interfere(p2, p1, lam)))
            if interfere(p1, p2, lam + 0.25) < interfere(p1, p2, lam) - 1e-15:
                return False, 1.0
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "quantum.interference",
            "interference formula: symmetry and monotonicity",
            "P = P1 + P2 + 2 sqrt(P1 P2) lambda, symmetric in the"
            " probabilities and increasing in lambda",
            interference,
        )
    )

    def linearize_roundtrip():
        worst = 0.0
        for _ in range(1000):
            p1 = rng.uniform(1e-6, 1.0)
            p2 = rng.uniform(1e-6, 1.0)
            lam = rng.uniform(-3.0, 3.0)
            lin = linearize(p1, p2, lam)
            want_regime = "complex" if abs(lam) <= 1 else "hyperbolic"
            if lin.regime != want_regime:
                return False, 1.0
            worst = max(
                worst,
                abs(reconstruct_probability(lin, p1, p2) - interfere(p1, p2, lam)),
            )
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "quantum.linearize",
            "amplitude linearization across both regimes",
            "the complex modulus (|lambda| <= 1) and the hyperbolic"
            " quadratic form (|lambda| >= 1) both reproduce the"
            " interference value within 1e-12",
            linearize_roundtrip,
        )
    )

    def boundary():
        worst = 0.0
        for p1, p2 in ((0.25, 0.25), (0.7, 0.1)):
            # lambda = 1: theta vanishes and both regimes coincide
            lin = linearize(p1, p2, 1.0)
            if lin.theta != 0.0:
                return False, abs(lin.theta)
            cval = reconstruct_probability(Linearization("complex", 0.0, 1), p1, p2)
            hval = reconstruct_probability(Linearization("hyperbolic", 0.0, 1), p1, p2)
            worst = max(worst, abs(cval - hval), abs(cval - interfere(p1, p2, 1.0)))
            # lambda = -1: complex phase pi against hyperbolic sign -1
            cval = reconstruct_probability(Linearization("complex", math.pi, 1), p1, p2)
            hval = reconstruct_probability(Linearization("hyperbolic", 0.0, -1), p1, p2)
            worst = max(worst, abs(cval - hval), abs(cval - interfere(p1, p2, -1.0)))
        return worst <= 1e-12, worst

    reports.append(
        _run(
            "quantum.regime_boundary",
            "agreement of the two regimes at lambda = +-1",
            "theta = 0 on the boundary and both amplitude squares coincide",
            boundary,
        )
    )

    def mass_reduction():
        space = get_space("m4")
        for _ in range(50):
            q = [Fraction(rng.randint(-8, 8), rng.randint(1, 3)) for _ in range(4)]
            p = embed_momentum(q, (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0))
            if p.qform() != space.paravector(q).qform():
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "quantum.mass_reduction",
            "squared mass of a real momentum",
            "reduces bit-exactly to the Minkowski quadratic form",
            mass_reduction,
        )
    )

    def hermiticity():
        for _ in range(40):
            p = MomentumHM4(q=tuple(rng.uniform(-2, 2) for _ in range(4)))
            if not hermiticity_check(p, tol):
                return False, 1.0
        # boosted real momenta stay on the real quasi-sphere
        space = get_space("m4")
        for _ in range(20):
            r = _random_rotor("m4", rng)
            x = act(r, space.paravector([rng.uniform(0.5, 2), 0, 0, 0]))
            p = MomentumHM4(q=x.coords)
            if not hermiticity_check(p, tol):
                return False, 1.0
        # the q0 u0 family fails
        for _ in range(20):
            q0, u0 = rng.uniform(0.2, 2), rng.uniform(0.2, 2)
            p = MomentumHM4(q=(q0, 0, 0, 0), u=(u0, 0, 0, 0))
            if hermiticity_check(p, tol):
                return False, 1.0
            q = mass_qform(p)
            if abs(float(q.w) - 2 * q0 * u0) > 1e-12:
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "quantum.hermiticity",
            "reality of the squared mass over momentum families",
            "real and boosted-real momenta pass; a nonzero ij component"
            " 2 q0 u0 fails as it must",
            hermiticity,
        )
    )

    def stabilizer():
        p = MomentumHM4.rest(1.5)
        ident = rotor_from_params(RotorParams.e6({}))
        if not stabilizer_check(ident, p, samples=4):
            return False, 1.0
        for _ in range(4):
            if not stabilizer_check(_random_rotor("e6", rng), p, samples=4):
                return False, 1.0
            if not stabilizer_check(_random_rotor("r66", rng), p, samples=4):
                return False, 1.0
        return True, 0.0

    reports.append(
        _run(
            "quantum.stabilizer",
            "fiber transformations against the standard momentum",
            "identity and random fiber rotors preserve the split-space"
            " quadratic form and leave the base scalar untouched",
            stabilizer,
        )
    )
    return reports


# ----------------------------------------------------------------- driver ----

_SUITES = {
    "tables": run_tables,
    "dims": run_dims,
    "commutators": run_commutators,
    "involutions": run_involutions,
    "sphere": run_sphere,
    "wedge": run_wedge,
    "rotations": run_rotations,
    "quantum": run_quantum,
}


def run_suite(name: str, tol: float = DEFAULT_TOL) -> list[CheckReport]:
    if name not in _SUITES:
        raise KeyError(name)
    return _SUITES[name](tol)


def run_all(tol: float = DEFAULT_TOL) -> list[CheckReport]:
    reports = []
    for name in SUITE_NAMES:
        reports.extend(run_suite(name, tol))
    return reports


def summarize(reports) -> dict:
    return {
        "pass": sum(1 for r in reports if r.status == "pass"),
        "fail": sum(1 for r in reports if r.status == "fail"),
        "deviation": sum(1 for r in reports if r.status == "deviation-documented"),
    }
