"""Axiom suites: mechanical checks of the root group data axioms.

Each suite runs a deterministic, seeded batch of exact checks against one
concrete group model and returns an AxiomReport.  A failure record carries
the offending inputs plus expected and actual values as strings, so reports
are reproducible byte for byte under a fixed configuration.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .affine import (
    AffineRoot,
    affine_reflect,
    affine_root,
    chamber_oracle,
    half_space_contains,
    is_positive,
    is_prenilpotent,
    open_interval,
    prenilpotent_oracle,
    reflect_point,
    simple_affine_roots,
)
from .errors import (
    ConfigError,
    NotInRootGroup,
    PeelFailure,
    RankOneSolveFailed,
    ResidueNotIdentity,
)
from .laurent import LaurentMatrix, LaurentPoly
from .models import (
    GroupModel,
    RootGroupCoords,
    coords_neg,
    generator_coords,
)
from .roots import pairing

Q = Fraction

ALL_SUITES = (
    "rgd0",
    "rgd1",
    "rgd2",
    "rgd3",
    "rgd4",
    "rgd5",
    "coroot-shift",
    "q2-additive",
    "combinatorics",
)

_AXIOM_NAMES = {
    "rgd0": "RGD0",
    "rgd1": "RGD1",
    "rgd2": "RGD2",
    "rgd3": "RGD3",
    "rgd4": "RGD4",
    "rgd5": "RGD5",
    "coroot-shift": "CorootShift",
    "q2-additive": "Q2Additive",
    "combinatorics": "Combinatorics",
}


@dataclass(frozen=True)
class SuiteConfig:
    level_min: int = -2
    level_max: int = 2
    samples: int = 8
    seed: int = 0
    suites: tuple[str, ...] = ALL_SUITES

    def __post_init__(self):
        if not (self.level_min <= 0 <= self.level_max):
            raise ConfigError(
                f"level range [{self.level_min}, {self.level_max}] must contain 0"
            )
        if self.samples < 1:
            raise ConfigError(f"samples {self.samples} < 1")
        unknown = [s for s in self.suites if s not in ALL_SUITES]
        if unknown:
            raise ConfigError(f"unknown suites {unknown}; known: {list(ALL_SUITES)}")


@dataclass
class AxiomReport:
    axiom: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, inputs: str, expected: str, actual: str) -> None:
        self.failures.append(
            {"inputs": inputs, "expected": expected, "actual": actual}
        )

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "cases": self.cases,
            "failures": list(self.failures),
            "pass": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


# -- shared helpers ----------------------------------------------------------


def in_range_affine_roots(model: GroupModel, cfg: SuiteConfig) -> list[AffineRoot]:
    return [
        affine_root(a, l)
        for a in model.system.roots
        for l in range(cfg.level_min, cfg.level_max + 1)
    ]


def _rand_q(rng: random.Random) -> Q:
    return Q(rng.randint(-6, 6), rng.randint(1, 4))


def sample_coords(
    model: GroupModel, alpha: AffineRoot, rng: random.Random, idx: int
) -> RootGroupCoords:
    """Deterministic nonzero coordinate sample; the first three draws are the
    mandatory values 1, -1 and 1/2 on every slot."""
    nc, nd = model.coord_lengths(alpha.root)
    total = nc + nd
    if idx == 0:
        vals = [Q(1)] * total
    elif idx == 1:
        vals = [Q(-1)] * total
    elif idx == 2:
        vals = [Q(1, 2)] * total
    else:
        vals = [_rand_q(rng) for _ in range(total)]
        while all(v == 0 for v in vals):
            vals = [_rand_q(rng) for _ in range(total)]
    return RootGroupCoords(alpha, tuple(vals[:nc]), tuple(vals[nc:]))


def _basis_generators(
    model: GroupModel, alpha: AffineRoot
) -> list[RootGroupCoords]:
    return generator_coords(model, alpha, [Q(1)])


def _timed(fn):
    def run(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
        start = time.perf_counter()
        report = fn(model, cfg)
        report.elapsed_ms = (time.perf_counter() - start) * 1000.0
        return report

    return run


# -- the suites ------------------------------------------------------------------


@_timed
def check_rgd0(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Every affine root group in range has nontrivial elements."""
    report = AxiomReport("RGD0")
    for alpha in in_range_affine_roots(model, cfg):
        for coords in _basis_generators(model, alpha):
            g = model.relative_pinning(coords)
            report.cases += 1
            if g.is_identity():
                report.fail(f"alpha={alpha} coords={coords}", "nonidentity", "identity")
    return report


@_timed
def check_rgd1(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Commutators of prenilpotent pairs peel over the open interval."""
    report = AxiomReport("RGD1")
    rng = random.Random(cfg.seed + 1)
    groups = in_range_affine_roots(model, cfg)
    for i, alpha in enumerate(groups):
        for beta in groups[i + 1 :]:
            if not is_prenilpotent(alpha, beta):
                continue
            interval = open_interval(model.system, alpha, beta)
            for s in range(cfg.samples):
                u = sample_coords(model, alpha, rng, s)
                v = sample_coords(model, beta, rng, s)
                gu = model.relative_pinning(u)
                gv = model.relative_pinning(v)
                com = (
                    gu
                    @ gv
                    @ model.relative_pinning(coords_neg(u))
                    @ model.relative_pinning(coords_neg(v))
                )
                report.cases += 1
                try:
                    model.peel_product(com, interval)
                except (ResidueNotIdentity, NotInRootGroup) as exc:
                    report.fail(
                        f"alpha={alpha} beta={beta} u={u.c}+{u.d} v={v.c}+{v.d}",
                        f"commutator in product over {[str(g) for g in interval]}",
                        str(exc),
                    )
    return report


@_timed
def check_rgd2(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Weyl representatives m(u) for the simple affine roots.

    For sampled u in U_alpha the representative must factor through
    U_(-alpha) x U_(-alpha), conjugate every in-range root group onto the
    reflected one, and differ between samples by a torus centralizer element.
    """
    report = AxiomReport("RGD2")
    rng = random.Random(cfg.seed + 2)
    groups = in_range_affine_roots(model, cfg)
    n_samples = max(cfg.samples, 4)
    for alpha in simple_affine_roots(model.system):
        reps = []
        for s in range(n_samples):
            u = sample_coords(model, alpha, rng, s)
            try:
                w, v1, v2, x = model.w_element_parts(alpha.root, u, alpha.level)
            except RankOneSolveFailed as exc:
                report.cases += 1
                report.fail(f"alpha={alpha} u={u.c}+{u.d}", "representative", str(exc))
                continue
            reps.append(w)
            # membership: w = v1 x v2 with v1, v2 in U_(-alpha)
            report.cases += 1
            try:
                p1 = model.peel(v1, -alpha)
                p2 = model.peel(v2, -alpha)
                rebuilt = (
                    model.relative_pinning(p1) @ x @ model.relative_pinning(p2)
                )
                if rebuilt != w:
                    report.fail(
                        f"alpha={alpha} u={u.c}+{u.d}",
                        "w = v1 x v2",
                        "factorization mismatch",
                    )
            except NotInRootGroup as exc:
                report.fail(
                    f"alpha={alpha} u={u.c}+{u.d}", "v1, v2 in U_(-alpha)", str(exc)
                )
            # conjugation: w U_beta w^-1 = U_(reflected beta)
            winv = w.inverse()
            for beta in groups:
                target = affine_reflect(model.system, alpha, beta)
                for coords in _basis_generators(model, beta):
                    g = model.relative_pinning(coords)
                    report.cases += 1
                    try:
                        model.peel(w @ g @ winv, target)
                    except NotInRootGroup as exc:
                        report.fail(
                            f"alpha={alpha} u={u.c}+{u.d} beta={beta} "
                            f"gen={coords.c}+{coords.d}",
                            f"conjugate in U_{target}",
                            str(exc),
                        )
        # different samples differ by a torus centralizer element
        for k in range(1, len(reps)):
            report.cases += 1
            quot = reps[k - 1] @ reps[k].inverse()
            if not model.is_centralizer_element(quot):
                report.fail(
                    f"alpha={alpha} samples {k - 1},{k}",
                    "m(u) m(u')^-1 centralizes the split torus",
                    "not a torus centralizer element",
                )
    return report


def rgd3_case(model: GroupModel, alpha: AffineRoot) -> str:
    """Triangular profile class of U_alpha: which corner of the group it fills."""
    pos = model.system.is_positive_root(alpha.root)
    if pos:
        return "upper-nonneg" if alpha.level >= 0 else "upper-strict-t"
    return "lower-strict-tinv" if alpha.level >= 1 else "lower-nonneg"


def _triangular_profile(g: LaurentMatrix, upper: bool, exp_ok) -> bool:
    for p in range(g.n):
        for q in range(g.n):
            e = g.entry(p, q)
            if p == q:
                if not e.is_one():
                    return False
            elif (q > p) == upper:
                if not all(exp_ok(x) for x in e.coeffs):
                    return False
            elif not e.is_zero():
                return False
    return True


_PROFILE_TESTS = {
    # positive gradient, level >= 0: upper triangular over k[t^-1]
    "upper-nonneg": lambda g: _triangular_profile(g, True, lambda e: e <= 0),
    # positive gradient, level <= -1: upper triangular over t k[t]
    "upper-strict-t": lambda g: _triangular_profile(g, True, lambda e: e >= 4),
    # negative gradient, level >= 1: lower triangular over t^-1 k[t^-1]
    "lower-strict-tinv": lambda g: _triangular_profile(g, False, lambda e: e <= -4),
    # negative gradient, level <= 0: lower triangular over k[t]
    "lower-nonneg": lambda g: _triangular_profile(g, False, lambda e: e >= 0),
}


def positive_side_profile(g: LaurentMatrix) -> bool:
    """Profile satisfied by everything in the group generated by the positive
    affine root groups: entries in k[t^-1] whose value at t^-1 = 0 is upper
    unipotent."""
    for row in g.rows:
        for e in row:
            if not e.in_inv_poly_ring():
                return False
    return _triangular_profile(g.constant_part(), True, lambda e: e == 0)


@_timed
def check_rgd3(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Negative simple root groups escape the positive side.

    First classifies every in-range root group into its triangular profile,
    then exhibits, for each simple affine root, a generator of the opposite
    group violating the shared profile of the positive side.
    """
    report = AxiomReport("RGD3")
    for alpha in in_range_affine_roots(model, cfg):
        case = rgd3_case(model, alpha)
        test = _PROFILE_TESTS[case]
        for coords in _basis_generators(model, alpha):
            g = model.relative_pinning(coords)
            report.cases += 1
            if not test(g):
                report.fail(
                    f"alpha={alpha} gen={coords.c}+{coords.d}",
                    f"profile {case}",
                    "profile violated",
                )
    for alpha in simple_affine_roots(model.system):
        for coords in _basis_generators(model, -alpha):
            g = model.relative_pinning(coords)
            report.cases += 1
            if g.is_identity() or positive_side_profile(g):
                report.fail(
                    f"-alpha={-alpha} gen={coords.c}+{coords.d}",
                    "witness escapes the positive-side profile",
                    "witness fits the positive side",
                )
    return report


@_timed
def check_rgd4(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Structural generation check: sampled words in root group elements and
    torus centralizer elements stay inside the model group.  Generation of
    the full group is not decidable at this scale and is not attempted."""
    report = AxiomReport("RGD4")
    rng = random.Random(cfg.seed + 4)
    groups = in_range_affine_roots(model, cfg)
    torus = model.sample_centralizer_elements(rng, max(2, cfg.samples // 2))
    for s in range(cfg.samples):
        word = LaurentMatrix.identity(model.n)
        for _ in range(3 + s % 3):
            alpha = groups[rng.randrange(len(groups))]
            word = word @ model.relative_pinning(
                sample_coords(model, alpha, rng, 3 + s)
            )
        word = word @ torus[s % len(torus)]
        report.cases += 1
        if not model.contains(word):
            report.fail(f"sample {s}", "word stays in the group", "membership fails")
    return report


@_timed
def check_rgd5(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Torus centralizer elements normalize every affine root group."""
    report = AxiomReport("RGD5")
    rng = random.Random(cfg.seed + 5)
    torus = model.sample_centralizer_elements(rng, max(8, cfg.samples))
    groups = in_range_affine_roots(model, cfg)
    for h in torus:
        hinv = h.inverse()
        for alpha in groups:
            for coords in _basis_generators(model, alpha):
                g = model.relative_pinning(coords)
                report.cases += 1
                try:
                    model.peel(h @ g @ hinv, alpha)
                except NotInRootGroup as exc:
                    report.fail(
                        f"alpha={alpha} gen={coords.c}+{coords.d}",
                        "conjugate stays in the same root group",
                        str(exc),
                    )
    return report


@_timed
def check_coroot_shift(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Conjugating U_(b, n) by the coroot of a at t^(-l/2) shifts the level
    by l * <b, a^vee> / 2 and preserves coordinates; conjugating back returns
    the original element."""
    report = AxiomReport("CorootShift")
    system = model.system
    for a_rel in system.roots:
        for l in range(cfg.level_min, cfg.level_max + 1):
            if l == 0:
                continue
            kappa = model.coroot(a_rel, LaurentPoly.t_power(Q(-l, 2)))
            kinv = kappa.inverse()
            for b_rel in system.roots:
                shift = Q(l) * pairing(b_rel, a_rel) / 2
                for n in range(cfg.level_min, cfg.level_max + 1):
                    alpha = affine_root(b_rel, n)
                    target = affine_root(b_rel, n + shift)
                    for coords in _basis_generators(model, alpha):
                        g = model.relative_pinning(coords)
                        conj = kappa @ g @ kinv
                        report.cases += 1
                        try:
                            got = model.peel(conj, target)
                            if got.c != coords.c or got.d != coords.d:
                                report.fail(
                                    f"a={a_rel} l={l} b={b_rel} n={n}",
                                    f"coordinates preserved at level {target.level}",
                                    f"{got.c}+{got.d}",
                                )
                            elif kinv @ conj @ kappa != g:
                                report.fail(
                                    f"a={a_rel} l={l} b={b_rel} n={n}",
                                    "round trip returns the original",
                                    "round trip mismatch",
                                )
                        except NotInRootGroup as exc:
                            report.fail(
                                f"a={a_rel} l={l} b={b_rel} n={n} "
                                f"gen={coords.c}+{coords.d}",
                                f"conjugate in U_{target}",
                                str(exc),
                            )
    return report


@_timed
def check_q2_additive(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Additivity defect of the pinnings.

    On non-multipliable roots the pinning is strictly additive.  On
    multipliable roots the defect is the doubled-root coordinate q2, which
    must be biadditive-skew: q2(v, w) = -q2(w, v), and scale quadratically:
    q2(r v, r w) = r^2 q2(v, w)."""
    report = AxiomReport("Q2Additive")
    rng = random.Random(cfg.seed + 6)
    n_pairs = max(cfg.samples, 16)
    for a_rel in model.system.roots:
        nc, _ = model.coord_lengths(a_rel)
        multipliable = model.system.is_multipliable(a_rel)
        for s in range(n_pairs):
            v = tuple(_rand_q(rng) for _ in range(nc))
            w = tuple(_rand_q(rng) for _ in range(nc))
            level = rng.randint(cfg.level_min, cfg.level_max)
            report.cases += 1
            try:
                q2vw = model.q2_additive(a_rel, v, w, level)
                if multipliable:
                    q2wv = model.q2_additive(a_rel, w, v, level)
                    if tuple(-x for x in q2vw) != q2wv:
                        report.fail(
                            f"a={a_rel} v={v} w={w}",
                            "q2(v, w) = -q2(w, v)",
                            f"{q2vw} vs {q2wv}",
                        )
                    r = Q(3, 2)
                    scaled = model.q2_additive(
                        a_rel,
                        tuple(r * x for x in v),
                        tuple(r * x for x in w),
                        level,
                    )
                    if tuple(r * r * x for x in q2vw) != scaled:
                        report.fail(
                            f"a={a_rel} v={v} w={w} r={r}",
                            "q2(r v, r w) = r^2 q2(v, w)",
                            f"{scaled}",
                        )
            except PeelFailure as exc:
                report.fail(f"a={a_rel} v={v} w={w}", "additive law", str(exc))
    return report


@_timed
def check_combinatorics(model: GroupModel, cfg: SuiteConfig) -> AxiomReport:
    """Affine root combinatorics cross-checked against half-space geometry.

    Covers the reflection involution, point-set equivariance of reflections,
    positivity against the fundamental chamber point, prenilpotency against
    the interior-point oracle, and the half-space containments of open
    intervals.
    """
    report = AxiomReport("Combinatorics")
    system = model.system
    rng = random.Random(cfg.seed + 7)
    groups = in_range_affine_roots(model, cfg)
    dim = len(system.roots[0])
    n_points = max(cfg.samples, 8)

    # positivity against the chamber oracle
    for alpha in groups:
        report.cases += 1
        if is_positive(system, alpha) != chamber_oracle(system, alpha):
            report.fail(f"alpha={alpha}", "sign matches chamber oracle", "mismatch")

    points = [
        tuple(Q(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(dim))
        for _ in range(n_points)
    ]
    for alpha in groups:
        refl = [reflect_point(alpha, v) for v in points]
        # reflection is an involution on points
        report.cases += 1
        if any(reflect_point(alpha, rv) != v for v, rv in zip(points, refl)):
            report.fail(f"alpha={alpha}", "point involution", "mismatch")
        for beta in groups:
            rbeta = affine_reflect(system, alpha, beta)
            report.cases += 1
            if affine_reflect(system, alpha, rbeta) != beta:
                report.fail(
                    f"alpha={alpha} beta={beta}", "root involution", f"{rbeta}"
                )
                continue
            # half-space equivariance: v in beta iff s(v) in s(beta)
            for v, rv in zip(points, refl):
                if half_space_contains(beta, v) != half_space_contains(rbeta, rv):
                    report.fail(
                        f"alpha={alpha} beta={beta} v={v}",
                        "membership equivariance",
                        "mismatch",
                    )
                    break

    for i, alpha in enumerate(groups):
        for beta in groups[i:]:
            report.cases += 1
            algebraic = is_prenilpotent(alpha, beta)
            geometric = prenilpotent_oracle(alpha, beta)
            if algebraic != geometric:
                report.fail(
                    f"alpha={alpha} beta={beta}",
                    f"prenilpotent oracle {algebraic}",
                    f"{geometric}",
                )
                continue
            if not algebraic or alpha == beta:
                continue
            interval = open_interval(system, alpha, beta)
            if not interval:
                continue
            report.cases += 1
            for v in points:
                inside = half_space_contains(alpha, v) and half_space_contains(beta, v)
                outside = half_space_contains(-alpha, v) and half_space_contains(
                    -beta, v
                )
                for gamma in interval:
                    if inside and not half_space_contains(gamma, v):
                        report.fail(
                            f"alpha={alpha} beta={beta} gamma={gamma} v={v}",
                            "interval member contains the intersection",
                            "point escapes",
                        )
                    if outside and not half_space_contains(-gamma, v):
                        report.fail(
                            f"alpha={alpha} beta={beta} gamma={gamma} v={v}",
                            "negated member contains the negated intersection",
                            "point escapes",
                        )
    return report


_SUITE_FNS = {
    "rgd0": check_rgd0,
    "rgd1": check_rgd1,
    "rgd2": check_rgd2,
    "rgd3": check_rgd3,
    "rgd4": check_rgd4,
    "rgd5": check_rgd5,
    "coroot-shift": check_coroot_shift,
    "q2-additive": check_q2_additive,
    "combinatorics": check_combinatorics,
}


def run_suites(model: GroupModel, cfg: SuiteConfig) -> list[AxiomReport]:
    return [_SUITE_FNS[tag](model, cfg) for tag in ALL_SUITES if tag in cfg.suites]
