"""Concrete matrix models carrying affine root group data.

Two families are implemented over the rational Laurent ring:

  * split_sl(rank): SL_(rank+1) over Q[t, t^-1]; the relative roots are the
    type A roots e_i - e_j and the root groups are elementary matrices.
  * special_unitary(dim, witt, disc): SU of a skew-hermitian form over
    Q(sqrt(disc))[t, t^-1], built on a basis with `witt` hyperbolic pairs at
    the outer indices and an anisotropic diagonal sqrt(disc) block in the
    middle.  The relative roots form BC_witt; root groups for the short
    relative roots are two-step unipotent and carry a quadratic correction.

Coordinates on a root group are rational tuples: for each relative root a
the group U_(a, level) is parametrized by RootGroupCoords(alpha, c, d) where
c has one rational slot per k-basis vector of the root module of a, and d
(possibly empty) covers the module of the doubled root 2a.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .affine import AffineRoot, affine_root
from .errors import (
    IndexOutOfRange,
    MembershipViolation,
    NotInRootGroup,
    NotMonomial,
    RankOneSolveFailed,
    ResidueNotIdentity,
    PeelFailure,
    ReflectionLeftSystem,
    UnsupportedType,
    WrongKind,
)
from .laurent import ZERO, LaurentMatrix, LaurentPoly
from .roots import (
    RootSystem,
    Vector,
    build_root_system,
    dot,
    is_zero,
    reflect_vector,
    scale,
    sub,
    vec,
)
from .scalars import FieldScalar, sqrt_of

Q = Fraction


class RootGroupCoords(NamedTuple):
    """Coordinates of one affine root group element.

    c: rational coordinates on the root module of alpha.root
    d: rational coordinates on the module of the doubled root (empty if none)
    """

    alpha: AffineRoot
    c: tuple[Q, ...]
    d: tuple[Q, ...] = ()

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c) and all(x == 0 for x in self.d)


def coords_zero(alpha: AffineRoot, nc: int, nd: int) -> RootGroupCoords:
    return RootGroupCoords(alpha, (Q(0),) * nc, (Q(0),) * nd)


def coords_neg(x: RootGroupCoords) -> RootGroupCoords:
    """Coordinates of the inverse element: the quadratic correction is skew,
    so negating every coordinate inverts the pinning exactly."""
    return RootGroupCoords(
        x.alpha, tuple(-a for a in x.c), tuple(-a for a in x.d)
    )


def coords_add(x: RootGroupCoords, y: RootGroupCoords) -> RootGroupCoords:
    if x.alpha != y.alpha:
        raise ValueError("adding coordinates of different affine roots")
    return RootGroupCoords(
        x.alpha,
        tuple(a + b for a, b in zip(x.c, y.c)),
        tuple(a + b for a, b in zip(x.d, y.d)),
    )


class RootLayout:
    """Matrix entry positions and module data of one relative root group."""

    __slots__ = (
        "rtype",
        "mdim",
        "corner",
        "secondary",
        "sec_sign",
        "z_pos",
        "w_pos",
        "sfac",
        "double_root",
    )

    def __init__(
        self,
        rtype: str,
        mdim: int,
        corner: tuple[int, int],
        secondary: tuple[int, int] | None = None,
        sec_sign: int = 1,
        z_pos: tuple[tuple[int, int], ...] = (),
        w_pos: tuple[tuple[int, int], ...] = (),
        sfac: FieldScalar | None = None,
        double_root: Vector | None = None,
    ):
        self.rtype = rtype  # "elementary", "double", "pair" or "single"
        self.mdim = mdim  # k-dimension of the root module
        self.corner = corner  # main entry (elementary/pair primary, else corner)
        self.secondary = secondary
        self.sec_sign = sec_sign
        self.z_pos = z_pos
        self.w_pos = w_pos
        self.sfac = sfac
        self.double_root = double_root


def _exp4_of_level(level: Q) -> int:
    e = -4 * Q(level)
    if e.denominator != 1:
        raise ValueError(f"level {level} off the quarter-exponent lattice")
    return int(e)


class GroupModel:
    """Common interface of the concrete matrix models."""

    kind: str
    n: int
    disc: int | None
    system: RootSystem

    # -- per-model hooks -------------------------------------------------------

    def layout(self, a_rel: Vector) -> RootLayout:
        raise NotImplementedError

    def slot_weight(self, slot: int) -> Vector:
        """Weight of a basis vector under the maximal split torus."""
        raise NotImplementedError

    def contains(self, g: LaurentMatrix) -> bool:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def sample_centralizer_elements(self, rng, count: int) -> list[LaurentMatrix]:
        raise NotImplementedError

    # -- shared operations -------------------------------------------------------

    def coord_lengths(self, a_rel: Vector) -> tuple[int, int]:
        lay = self.layout(a_rel)
        return lay.mdim, (1 if lay.double_root is not None else 0)

    def coroot(self, a_rel: Vector, lam: LaurentPoly) -> LaurentMatrix:
        """The coroot cocharacter of the relative root, evaluated at lam.

        lam must be a unit monomial with rational coefficient; the result is
        the diagonal matrix acting on each weight slot by lam^<weight, a^vee>.
        """
        if not self.system.contains(a_rel):
            raise ReflectionLeftSystem(f"{a_rel} is not a relative root")
        if not lam.is_monomial():
            raise NotMonomial(f"coroot argument {lam} is not a unit monomial")
        _, cval = lam.monomial_parts()
        if not cval.is_rational:
            raise NotMonomial("coroot argument must have a rational coefficient")
        dvec = scale(Q(2) / dot(a_rel, a_rel), a_rel)
        diag = []
        for p in range(self.n):
            e = dot(dvec, self.slot_weight(p))
            if e.denominator != 1:
                raise NotMonomial(f"non-integral coroot exponent {e}")
            diag.append(lam.monomial_pow(int(e)))
        g = LaurentMatrix.diagonal(diag)
        if not self.contains(g):
            raise MembershipViolation("coroot value left the group")
        return g

    def relative_pinning(self, coords: RootGroupCoords) -> LaurentMatrix:
        """The canonical element of U_alpha with the given coordinates."""
        a_rel, level = coords.alpha
        lay = self.layout(a_rel)
        nd = 1 if lay.double_root is not None else 0
        if len(coords.c) != lay.mdim or len(coords.d) != nd:
            raise MembershipViolation(
                f"expected {lay.mdim}+{nd} coordinates, got "
                f"{len(coords.c)}+{len(coords.d)}"
            )
        e4 = _exp4_of_level(level)
        entries: dict[tuple[int, int], LaurentPoly] = {}
        if lay.rtype == "elementary":
            entries[lay.corner] = LaurentPoly({e4: FieldScalar(coords.c[0])})
        elif lay.rtype == "double":
            entries[lay.corner] = LaurentPoly({e4: FieldScalar(coords.c[0])})
        elif lay.rtype == "pair":
            z = FieldScalar(coords.c[0], coords.c[1], self.disc)
            entries[lay.corner] = LaurentPoly({e4: z})
            entries[lay.secondary] = LaurentPoly({e4: lay.sec_sign * z.conj()})
        elif lay.rtype == "single":
            zs = [
                FieldScalar(coords.c[2 * h], coords.c[2 * h + 1], self.disc)
                for h in range(len(lay.z_pos))
            ]
            p2 = FieldScalar(0)
            for h, z in enumerate(zs):
                w = -z.conj() * lay.sfac
                p2 = p2 + z * z.conj()
                if not z.is_zero():
                    entries[lay.z_pos[h]] = LaurentPoly({e4: z})
                if not w.is_zero():
                    entries[lay.w_pos[h]] = LaurentPoly({e4: w})
            p2 = p2 * lay.sfac * Q(-1, 2)
            corner = FieldScalar(coords.d[0]) + p2
            if not corner.is_zero():
                entries[lay.corner] = LaurentPoly({2 * e4: corner})
        else:
            raise WrongKind(f"unknown layout {lay.rtype}")
        g = LaurentMatrix.from_entries(self.n, entries)
        if not self.contains(g):
            raise MembershipViolation(f"pinning of {coords} left the group")
        return g

    def quadratic_correction(self, a_rel: Vector, c: tuple[Q, ...]) -> FieldScalar:
        """The canonical corner scalar p2 determined by the linear part."""
        lay = self.layout(a_rel)
        if lay.rtype != "single":
            return FieldScalar(0)
        p2 = FieldScalar(0)
        for h in range(len(lay.z_pos)):
            z = FieldScalar(c[2 * h], c[2 * h + 1], self.disc)
            p2 = p2 + z * z.conj()
        return p2 * lay.sfac * Q(-1, 2)

    def _read_coords(
        self, g: LaurentMatrix, alpha: AffineRoot, strict: bool
    ) -> RootGroupCoords:
        """Raw coordinate reads at the designated entries, without verification."""
        a_rel, level = alpha
        lay = self.layout(a_rel)
        e4 = _exp4_of_level(level)

        def rational(val: FieldScalar) -> Q:
            if strict and not val.is_rational:
                raise NotInRootGroup(f"coefficient {val} is not rational")
            return val.base

        if lay.rtype in ("elementary", "double"):
            val = g.entry(*lay.corner).coeff(e4)
            return RootGroupCoords(alpha, (rational(val),))
        if lay.rtype == "pair":
            val = g.entry(*lay.corner).coeff(e4)
            return RootGroupCoords(alpha, (val.base, val.ext))
        # single
        c: list[Q] = []
        for pos in lay.z_pos:
            val = g.entry(*pos).coeff(e4)
            c.extend((val.base, val.ext))
        corner = g.entry(*lay.corner).coeff(2 * e4)
        d0 = corner - self.quadratic_correction(a_rel, tuple(c))
        return RootGroupCoords(alpha, tuple(c), (rational(d0),))

    def peel(self, g: LaurentMatrix, alpha: AffineRoot) -> RootGroupCoords:
        """Coordinates of g as an element of U_alpha, or NotInRootGroup."""
        coords = self._read_coords(g, alpha, strict=True)
        if self.relative_pinning(coords) != g:
            raise NotInRootGroup(f"{alpha}: matrix is not in this root group")
        return coords

    def peel_product(
        self, g: LaurentMatrix, order: list[AffineRoot]
    ) -> list[RootGroupCoords]:
        """Coordinates of g as an ordered product over the given affine roots.

        Entry reads alone are wrong for orders that put a sum root before its
        summands, so this refines a coordinate vector until the rebuilt
        product matches g exactly; each pass moves the discrepancy strictly
        deeper into the unipotent filtration.
        """
        coords = []
        for alpha in order:
            nc, nd = self.coord_lengths(alpha.root)
            coords.append(coords_zero(alpha, nc, nd))
        cap = 3 * len(order) + 6
        for _ in range(cap):
            prod = LaurentMatrix.identity(self.n)
            for cs in coords:
                prod = prod @ self.relative_pinning(cs)
            if prod == g:
                return coords
            delta = prod.inverse() @ g
            coords = [
                coords_add(cs, self._read_coords(delta, cs.alpha, strict=False))
                for cs in coords
            ]
        raise ResidueNotIdentity(
            f"residue left after peeling along {[str(a) for a in order]}"
        )

    def q2_additive(
        self, a_rel: Vector, v: tuple[Q, ...], w: tuple[Q, ...], level
    ) -> tuple[Q, ...]:
        """Failure of additivity: x(v) x(w) = x(v + w) x_double(q2).

        Returns the coordinates of the doubled-root factor; empty when the
        root is not multipliable, in which case additivity must be strict.
        """
        alpha = affine_root(a_rel, level)
        lay = self.layout(a_rel)
        nd = 1 if lay.double_root is not None else 0
        cv = RootGroupCoords(alpha, tuple(v), (Q(0),) * nd)
        cw = RootGroupCoords(alpha, tuple(w), (Q(0),) * nd)
        csum = coords_add(cv, cw)
        g = self.relative_pinning(csum).inverse() @ (
            self.relative_pinning(cv) @ self.relative_pinning(cw)
        )
        if lay.double_root is None:
            if not g.is_identity():
                raise PeelFailure(f"additivity fails on non-multipliable {a_rel}")
            return ()
        try:
            rest = self.peel(g, affine_root(lay.double_root, 2 * Q(level)))
        except NotInRootGroup as exc:
            raise PeelFailure(str(exc)) from exc
        return rest.c

    # -- rank one Weyl representatives ---------------------------------------------

    def w_element(self, a_rel: Vector, u: RootGroupCoords, level) -> LaurentMatrix:
        """The Weyl representative m(u) attached to a nontrivial u in U_alpha."""
        return self.w_element_parts(a_rel, u, level)[0]

    def w_element_parts(
        self, a_rel: Vector, u: RootGroupCoords, level
    ) -> tuple[LaurentMatrix, LaurentMatrix, LaurentMatrix, LaurentMatrix]:
        """m(u) together with its factors: returns (w, v1, v2, x) where
        x = pinning(u), v1 and v2 lie in U_(-alpha), and w = v1 x v2
        induces the affine reflection in the wall of alpha."""
        level = Q(level)
        alpha = affine_root(a_rel, level)
        if u.alpha != alpha:
            raise RankOneSolveFailed(f"coordinates {u.alpha} do not match {alpha}")
        if u.is_zero():
            raise RankOneSolveFailed("w_element needs a nontrivial element")
        u0 = RootGroupCoords(affine_root(a_rel, 0), u.c, u.d)
        v1_0, v2_0 = self._rank_one_witnesses(u0)
        w0 = v1_0 @ self.relative_pinning(u0) @ v2_0
        self._check_reflection_shape(a_rel, w0)
        if level == 0:
            return w0, v1_0, v2_0, self.relative_pinning(u0)
        kappa = self.coroot(a_rel, LaurentPoly.t_power(-level / 2))
        kinv = kappa.inverse()
        conj = lambda m: kappa @ m @ kinv
        return conj(w0), conj(v1_0), conj(v2_0), self.relative_pinning(u)

    def _rank_one_witnesses(
        self, u0: RootGroupCoords
    ) -> tuple[LaurentMatrix, LaurentMatrix]:
        """Level-zero v1, v2 in U_(-a) with v1 u v2 inducing the reflection."""
        a_rel = u0.alpha.root
        lay = self.layout(a_rel)
        neg = affine_root(tuple(-x for x in a_rel), 0)
        if lay.rtype in ("elementary", "double"):
            cval = u0.c[0]
            if cval == 0:
                raise RankOneSolveFailed("zero coordinate on a one-parameter group")
            v = self.relative_pinning(RootGroupCoords(neg, (Q(-1) / cval,)))
            return v, v
        if lay.rtype == "pair":
            z = FieldScalar(u0.c[0], u0.c[1], self.disc)
            if z.is_zero():
                raise RankOneSolveFailed("zero coordinate on a pair root group")
            par = -z.inverse()
            v = self.relative_pinning(RootGroupCoords(neg, (par.base, par.ext)))
            return v, v
        # single relative root
        zs = [
            FieldScalar(u0.c[2 * h], u0.c[2 * h + 1], self.disc)
            for h in range(len(lay.z_pos))
        ]
        if all(z.is_zero() for z in zs):
            # pure doubled part: delegate to the corner one-parameter group,
            # whose reflection fixes the same wall
            dbl = affine_root(lay.double_root, 0)
            return self._rank_one_witnesses(RootGroupCoords(dbl, u0.d))
        corner = FieldScalar(u0.d[0]) + self.quadratic_correction(a_rel, u0.c)
        if corner.is_zero():
            raise RankOneSolveFailed("degenerate corner on a single root group")
        cinvn = -corner.inverse()  # -1/c
        cinvt = -corner.conj().inverse()  # -1/tau(c)
        ws = [-z.conj() * lay.sfac for z in zs]
        # k'-parameters of the two witnesses on the opposite root group
        if self._is_positive_single(a_rel):
            y1 = [w * cinvn for w in ws]  # -w_h / c
            y2 = [-w * cinvt for w in ws]  # +w_h / tau(c)
        else:
            y1 = [-w * cinvt for w in ws]
            y2 = [w * cinvn for w in ws]
        v1 = self._single_coords_from_parts(neg, y1, cinvt)
        v2 = self._single_coords_from_parts(neg, y2, cinvt)
        return self.relative_pinning(v1), self.relative_pinning(v2)

    def _is_positive_single(self, a_rel: Vector) -> bool:
        return sum(a_rel) > 0

    def _single_coords_from_parts(
        self, alpha: AffineRoot, ys: list[FieldScalar], corner: FieldScalar
    ) -> RootGroupCoords:
        """Coordinates of a single-root element with given linear part and corner."""
        c: list[Q] = []
        for y in ys:
            c.extend((y.base, y.ext))
        d0 = corner - self.quadratic_correction(alpha.root, tuple(c))
        if not d0.is_rational:
            raise RankOneSolveFailed(f"corner {corner} misses the canonical form")
        return RootGroupCoords(alpha, tuple(c), (d0.base,))

    def _check_reflection_shape(self, a_rel: Vector, w0: LaurentMatrix) -> None:
        """w0 must vanish outside the entries allowed by the reflection s_a."""
        for p in range(self.n):
            wp = self.slot_weight(p)
            for q in range(self.n):
                if reflect_vector(a_rel, self.slot_weight(q)) != wp:
                    if not w0.entry(p, q).is_zero():
                        raise RankOneSolveFailed(
                            f"entry ({p},{q}) of the representative should vanish"
                        )

    # -- torus centralizer ----------------------------------------------------------

    def is_centralizer_element(self, g: LaurentMatrix) -> bool:
        """Member of C_G(S)(k): constant entries, block-diagonal over weights."""
        if not self.contains(g):
            return False
        for p in range(self.n):
            for q in range(self.n):
                e = g.entry(p, q)
                if e.is_zero():
                    continue
                if not e.is_constant():
                    return False
                if self.slot_weight(p) != self.slot_weight(q):
                    return False
        return True


class SplitSLModel(GroupModel):
    """SL_n over Q[t, t^-1] with its diagonal torus, n = rank + 1."""

    def __init__(self, rank: int):
        if rank < 1:
            raise UnsupportedType(f"sl rank {rank} < 1")
        self.kind = "sl"
        self.rank = rank
        self.n = rank + 1
        self.disc = None
        self.system = build_root_system("A", rank)
        self.gram = None
        self.witt = None

    def slot_weight(self, slot: int) -> Vector:
        w = [Q(0)] * self.n
        w[slot] = Q(1)
        return tuple(w)

    def layout(self, a_rel: Vector) -> RootLayout:
        if not self.system.contains(a_rel):
            raise ReflectionLeftSystem(f"{a_rel} is not a relative root")
        i = a_rel.index(Q(1))
        j = a_rel.index(Q(-1))
        return RootLayout("elementary", 1, (i, j))

    def contains(self, g: LaurentMatrix) -> bool:
        return g.n == self.n and g.det().is_one()

    def split_pinning(self, a_rel: Vector, lam: LaurentPoly) -> LaurentMatrix:
        """x_a(lam) = identity + lam at the elementary entry of the root a."""
        lay = self.layout(a_rel)
        return LaurentMatrix.from_entries(self.n, {lay.corner: lam})

    def project_root(self, absolute: Vector) -> Vector | None:
        _ = self._absolute_pair(absolute)
        return tuple(absolute)

    def _absolute_pair(self, absolute: Vector) -> tuple[int, int]:
        if len(absolute) != self.n:
            raise IndexOutOfRange(f"absolute root must live in Q^{self.n}")
        try:
            i = absolute.index(Q(1))
            j = absolute.index(Q(-1))
        except ValueError as exc:
            raise IndexOutOfRange(f"{absolute} is not elementary") from exc
        check = [Q(0)] * self.n
        check[i], check[j] = Q(1), Q(-1)
        if tuple(check) != tuple(absolute):
            raise IndexOutOfRange(f"{absolute} is not elementary")
        return i, j

    def descriptor(self) -> dict:
        dims = {}
        for a in self.system.roots:
            key = ",".join(str(x) for x in a)
            dims[key] = 1
        return {
            "kind": "sl",
            "rank": self.rank,
            "matrix_size": self.n,
            "relative_system": f"A{self.rank}",
            "module_dims": dict(sorted(dims.items())),
        }

    def sample_centralizer_elements(self, rng, count: int) -> list[LaurentMatrix]:
        out = []
        for _ in range(count):
            diag = []
            prod = Q(1)
            for _ in range(self.n - 1):
                x = Q(0)
                while x == 0:
                    x = Q(rng.randint(-5, 5), rng.randint(1, 4))
                diag.append(x)
                prod *= x
            diag.append(1 / prod)
            g = LaurentMatrix.diagonal([LaurentPoly.const(x) for x in diag])
            assert self.is_centralizer_element(g)
            out.append(g)
        return out


class SUModel(GroupModel):
    """SU(dim) of a skew-hermitian form over Q(sqrt(disc))[t, t^-1].

    The Gram matrix pairs index i with index dim-1-i for the first `witt`
    indices (entries +1 above, -1 below) and is sqrt(disc) times the identity
    on the middle block; disc must be a negative squarefree integer so the
    middle block is anisotropic.
    """

    def __init__(self, dim: int, witt: int, disc: int = -1):
        if witt < 1:
            raise UnsupportedType(f"witt index {witt} < 1")
        if dim < 2 * witt + 1:
            raise UnsupportedType(f"dim {dim} < 2*witt+1 = {2 * witt + 1}")
        if disc >= 0:
            raise UnsupportedType(f"disc {disc} must be negative")
        self.kind = "su"
        self.n = dim
        self.witt = witt
        self.disc = disc
        self.s = sqrt_of(disc)
        self.system = build_root_system("BC", witt)
        self.middles = tuple(range(witt, dim - witt))
        gram: dict[tuple[int, int], LaurentPoly] = {}
        for i in range(witt):
            gram[(i, dim - 1 - i)] = LaurentPoly.const(1)
            gram[(dim - 1 - i, i)] = LaurentPoly.const(-1)
        for h in self.middles:
            gram[(h, h)] = LaurentPoly.const(self.s)
        rows = [[gram.get((p, q), ZERO) for q in range(dim)] for p in range(dim)]
        self.gram = LaurentMatrix(rows)

    def _mirror(self, x: int) -> int:
        return self.n - 1 - x

    def slot_weight(self, slot: int) -> Vector:
        w = [Q(0)] * self.witt
        if slot < self.witt:
            w[slot] = Q(1)
        elif slot >= self.n - self.witt:
            w[self._mirror(slot)] = Q(-1)
        return tuple(w)

    def layout(self, a_rel: Vector) -> RootLayout:
        if not self.system.contains(a_rel):
            raise ReflectionLeftSystem(f"{a_rel} is not a relative root")
        nz = [(idx, x) for idx, x in enumerate(a_rel) if x != 0]
        mir = self._mirror
        if len(nz) == 1:
            i, x = nz[0]
            if x == 2:
                return RootLayout("double", 1, (i, mir(i)))
            if x == -2:
                return RootLayout("double", 1, (mir(i), i))
            if x == 1:
                return RootLayout(
                    "single",
                    2 * len(self.middles),
                    (i, mir(i)),
                    z_pos=tuple((i, h) for h in self.middles),
                    w_pos=tuple((h, mir(i)) for h in self.middles),
                    sfac=self.s.inverse(),
                    double_root=scale(2, a_rel),
                )
            return RootLayout(
                "single",
                2 * len(self.middles),
                (mir(i), i),
                z_pos=tuple((h, i) for h in self.middles),
                w_pos=tuple((mir(i), h) for h in self.middles),
                sfac=self.s,
                double_root=scale(2, a_rel),
            )
        (i, xi), (j, xj) = nz
        if xi == 1 and xj == 1:
            return RootLayout("pair", 2, (i, mir(j)), (j, mir(i)), 1)
        if xi == -1 and xj == -1:
            return RootLayout("pair", 2, (mir(j), i), (mir(i), j), 1)
        if xi == 1 and xj == -1:
            return RootLayout("pair", 2, (i, j), (mir(j), mir(i)), -1)
        return RootLayout("pair", 2, (j, i), (mir(i), mir(j)), -1)

    def contains(self, g: LaurentMatrix) -> bool:
        if g.n != self.n or not g.det().is_one():
            return False
        return g.conj_transpose() @ self.gram @ g == self.gram

    def project_root(self, absolute: Vector) -> Vector | None:
        """Restriction of an absolute root e_i - e_j to the split torus.

        Returns the relative root, or None when the restriction vanishes
        (both indices in the anisotropic middle block).
        """
        if len(absolute) != self.n:
            raise IndexOutOfRange(f"absolute root must live in Q^{self.n}")
        try:
            i = list(absolute).index(Q(1))
            j = list(absolute).index(Q(-1))
        except ValueError as exc:
            raise IndexOutOfRange(f"{absolute} is not of shape e_i - e_j") from exc
        check = [Q(0)] * self.n
        check[i], check[j] = Q(1), Q(-1)
        if tuple(check) != tuple(absolute):
            raise IndexOutOfRange(f"{absolute} is not of shape e_i - e_j")
        w = sub(self.slot_weight(i), self.slot_weight(j))
        if is_zero(w):
            return None
        if not self.system.contains(w):
            raise IndexOutOfRange(f"projection {w} is not a relative root")
        return w

    def descriptor(self) -> dict:
        dims = {}
        for a in self.system.roots:
            key = ",".join(str(x) for x in a)
            dims[key] = self.layout(a).mdim
        return {
            "kind": "su",
            "dim": self.n,
            "witt": self.witt,
            "disc": self.disc,
            "matrix_size": self.n,
            "relative_system": f"BC{self.witt}",
            "gram": [[str(e) for e in row] for row in self.gram.rows],
            "module_dims": dict(sorted(dims.items())),
        }

    def sample_centralizer_elements(self, rng, count: int) -> list[LaurentMatrix]:
        out = []
        for idx in range(count):
            entries: list[FieldScalar] = [FieldScalar(0)] * self.n
            det = FieldScalar(1)
            for i in range(self.witt):
                lam = FieldScalar(0)
                while lam.is_zero():
                    lam = FieldScalar(
                        Q(rng.randint(-4, 4), rng.randint(1, 3)),
                        Q(rng.randint(-4, 4), rng.randint(1, 3)),
                        self.disc,
                    )
                entries[i] = lam
                entries[self._mirror(i)] = lam.conj().inverse()
                det = det * lam * lam.conj().inverse()
            # middle block: norm-one diagonal entries z / tau(z), with the
            # last one correcting the determinant back to 1
            for h in self.middles[:-1]:
                z = FieldScalar(0)
                while z.is_zero():
                    z = FieldScalar(
                        Q(rng.randint(-4, 4), rng.randint(1, 3)),
                        Q(rng.randint(-4, 4), rng.randint(1, 3)),
                        self.disc,
                    )
                mu = z * z.conj().inverse()
                entries[h] = mu
                det = det * mu
            entries[self.middles[-1]] = det.inverse()
            g = LaurentMatrix.diagonal([LaurentPoly.const(x) for x in entries])
            if len(self.middles) >= 2 and idx % 3 == 2:
                # mix in a rational rotation of the first two middle slots,
                # which is unitary for the scalar middle form
                h0, h1 = self.middles[0], self.middles[1]
                rot = LaurentMatrix.from_entries(
                    self.n,
                    {
                        (h0, h0): LaurentPoly.const(Q(3, 5)),
                        (h0, h1): LaurentPoly.const(Q(4, 5)),
                        (h1, h0): LaurentPoly.const(Q(-4, 5)),
                        (h1, h1): LaurentPoly.const(Q(3, 5)),
                    },
                )
                g = g @ rot
            if not self.is_centralizer_element(g):
                raise MembershipViolation("centralizer sample left the group")
            out.append(g)
        return out


def split_sl(rank: int) -> SplitSLModel:
    return SplitSLModel(rank)


def special_unitary(dim: int, witt: int, disc: int = -1) -> SUModel:
    return SUModel(dim, witt, disc)


def affine_root_group_generators(
    model: GroupModel, alpha: AffineRoot, coeffs
) -> list[LaurentMatrix]:
    """One-parameter generators of U_alpha at each basis slot and coefficient."""
    return [model.relative_pinning(cs) for cs in generator_coords(model, alpha, coeffs)]


def generator_coords(
    model: GroupModel, alpha: AffineRoot, coeffs
) -> list[RootGroupCoords]:
    nc, nd = model.coord_lengths(alpha.root)
    out = []
    for val in coeffs:
        val = Q(val)
        if val == 0:
            continue
        for slot in range(nc):
            c = [Q(0)] * nc
            c[slot] = val
            out.append(RootGroupCoords(alpha, tuple(c), (Q(0),) * nd))
        for slot in range(nd):
            out.append(RootGroupCoords(alpha, (Q(0),) * nc, (val,)))
    return out


def split_pinning(model: GroupModel, a_rel: Vector, lam: LaurentPoly) -> LaurentMatrix:
    """Elementary pinning of the split model; WrongKind elsewhere."""
    if not isinstance(model, SplitSLModel):
        raise WrongKind("split_pinning needs the split special linear model")
    return model.split_pinning(a_rel, lam)


def build_model(kind: str, **kw) -> GroupModel:
    if kind == "sl":
        return split_sl(kw["rank"])
    if kind == "su":
        return special_unitary(kw["dim"], kw["witt"], kw.get("disc", -1))
    raise UnsupportedType(f"model kind {kind!r}")
