"""Affine roots as half-spaces over a finite root system.

An affine root alpha_(a, l) is the half-space {v : (a, v) >= -l} attached to
the gradient root a and the level l; levels are integers except on doubled
roots of BC systems, where proper half-integers occur.  The reflection in the
wall of alpha_(a, l) acts on points by v -> s_a(v) - l * a^vee and on affine
roots by alpha_(b, m) -> alpha_(s_a(b), m - l * <b, a^vee>).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .errors import HalfIntegerLevel, NotPrenilpotent, ReflectionLeftSystem
from .roots import (
    RootSystem,
    Vector,
    add,
    dot,
    is_zero,
    neg,
    pairing,
    proportionality,
    scale,
    sub,
)

Q = Fraction


class AffineRoot(NamedTuple):
    root: Vector
    level: Q

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(neg(self.root), -self.level)

    def __str__(self):
        coords = ",".join(str(x) for x in self.root)
        return f"a[({coords}), {self.level}]"


def affine_root(a: Vector, level) -> AffineRoot:
    level = Q(level)
    if (2 * level).denominator != 1:
        raise HalfIntegerLevel(f"level {level} is not a half-integer")
    return AffineRoot(tuple(Q(x) for x in a), level)


def half_space_contains(alpha: AffineRoot, v: Vector, strict: bool = False) -> bool:
    """Membership of the point v in the half-space alpha."""
    s = dot(alpha.root, v) + alpha.level
    return s > 0 if strict else s >= 0


def reflect_point(alpha: AffineRoot, v: Vector) -> Vector:
    """Reflection of an ambient point in the wall of alpha."""
    a, l = alpha.root, alpha.level
    coroot = scale(Q(2) / dot(a, a), a)
    return sub(v, scale(dot(a, v) + l, coroot))


def affine_reflect(system: RootSystem, alpha: AffineRoot, beta: AffineRoot) -> AffineRoot:
    """Image of beta under the reflection in the wall of alpha."""
    a, l = alpha.root, alpha.level
    b, m = beta.root, beta.level
    c = system.reflect_root(a, b)
    return AffineRoot(c, m - l * pairing(b, a))


def is_positive(system: RootSystem, alpha: AffineRoot) -> bool:
    """Positivity: gradient positive and level >= 0, or gradient negative and level >= 1.

    Only defined for integer levels; doubled-root half-levels have no sign.
    """
    if alpha.level.denominator != 1:
        raise HalfIntegerLevel(f"positivity undefined at level {alpha.level}")
    if system.is_positive_root(alpha.root):
        return alpha.level >= 0
    return alpha.level >= 1


def is_prenilpotent(alpha: AffineRoot, beta: AffineRoot) -> bool:
    """True unless some positive multiples satisfy k*a = -n*b.

    Positive multiples of the gradients collide exactly when the gradients
    are proportional with a negative ratio.
    """
    r = proportionality(alpha.root, beta.root)
    return r is None or r > 0


def open_interval(
    system: RootSystem, alpha: AffineRoot, beta: AffineRoot
) -> list[AffineRoot]:
    """The affine roots alpha_(p*a + q*b, p*l + q*m) with integers p, q > 0.

    This is the index set of the commutator law for the pair (alpha, beta):
    [U_alpha, U_beta] lands in the product of these groups.  The endpoints
    themselves never appear since p, q >= 1.  Requires a prenilpotent pair.
    """
    if not is_prenilpotent(alpha, beta):
        raise NotPrenilpotent(f"{alpha} and {beta} share opposed gradient rays")
    a, l = alpha.root, alpha.level
    b, m = beta.root, beta.level
    found = []
    seen = set()
    bound = 6
    for total in range(2, 2 * bound + 1):
        for p in range(1, total):
            q = total - p
            if q < 1 or q > bound or p > bound:
                continue
            c = add(scale(p, a), scale(q, b))
            if is_zero(c) or not system.contains(c):
                continue
            gamma = AffineRoot(c, p * l + q * m)
            if gamma not in seen:
                seen.add(gamma)
                found.append(gamma)
    return found


def simple_affine_roots(system: RootSystem) -> list[AffineRoot]:
    """The simple affine roots: (a_i, 0) for simple a_i, then (-theta, 1)."""
    out = [AffineRoot(a, Q(0)) for a in system.simple]
    out.append(AffineRoot(neg(system.highest), Q(1)))
    return out


# -- independent oracles ------------------------------------------------------
#
# These re-derive positivity and prenilpotency from the half-space geometry
# alone, with no reference to the sign conventions above, so the two routes
# can be compared in tests.


def chamber_oracle(system: RootSystem, alpha: AffineRoot, strict: bool = True) -> bool:
    """Does alpha contain the fundamental chamber point?

    The fundamental point v0 satisfies 0 < (a, v0) < 1 for every positive
    root a, so alpha_(a, l) contains it exactly when alpha is a positive
    affine root.
    """
    return half_space_contains(alpha, system.fundamental_point, strict=strict)


def _interior_point(alpha: AffineRoot, beta: AffineRoot) -> Vector | None:
    """A rational point interior to both half-spaces, or None if none exists."""
    a, l = alpha.root, alpha.level
    b, m = beta.root, beta.level
    r = proportionality(a, b)
    if r is None:
        # independent gradients: solve (a,v) = 1 - l, (b,v) = 1 - m exactly
        # on the 2-plane spanned by a and b
        aa, ab, bb = dot(a, a), dot(a, b), dot(b, b)
        det = aa * bb - ab * ab
        # det > 0 by Cauchy-Schwarz for independent vectors
        ta, tb = 1 - l, 1 - m
        x = (ta * bb - tb * ab) / det
        y = (tb * aa - ta * ab) / det
        v = add(scale(x, a), scale(y, b))
        return v
    # parallel walls: (a,v) must exceed -l and r*(a,v) must exceed -m
    if r > 0:
        # both constraints open upward: any large enough value works
        s = max(-l, -m / r) + 1
    else:
        # opposite orientations: -l < (a,v) < -m/r needed
        lo, hi = -l, -m / r
        if lo >= hi:
            return None
        s = (lo + hi) / 2
    return scale(s / dot(a, a), a)


def prenilpotent_oracle(alpha: AffineRoot, beta: AffineRoot) -> bool:
    """Geometric prenilpotency: both intersections of interiors are nonempty.

    The pair is prenilpotent exactly when alpha and beta share an interior
    point and so do their negatives.
    """
    for pair in ((alpha, beta), (-alpha, -beta)):
        v = _interior_point(*pair)
        if v is None:
            return False
        assert all(half_space_contains(g, v, strict=True) for g in pair)
    return True


def translation_parts(system: RootSystem, alpha: AffineRoot) -> tuple[AffineRoot, Q]:
    """Split alpha_(a, l) as the linear root alpha_(a, 0) plus the level l."""
    if not system.contains(alpha.root):
        raise ReflectionLeftSystem(f"{alpha.root} is not a root")
    return AffineRoot(alpha.root, Q(0)), alpha.level
