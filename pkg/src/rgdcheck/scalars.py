"""Exact scalars in Q or in a quadratic extension Q(sqrt(d)).

A scalar is base + ext * sqrt(d) with base, ext rational and d a fixed
squarefree integer.  Plain rationals are scalars with no extension part;
they mix freely with scalars from any one extension.  The involution tau
fixes Q and sends sqrt(d) to -sqrt(d).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch

Q = Fraction


def is_squarefree(d: int) -> bool:
    if d == 0:
        return False
    n = abs(d)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


class FieldScalar:
    """base + ext * sqrt(disc); disc None means a plain rational."""

    __slots__ = ("base", "ext", "disc")

    def __init__(self, base, ext=0, disc: int | None = None):
        base = Q(base)
        ext = Q(ext)
        if disc is not None:
            if not is_squarefree(disc) or disc == 1:
                raise FieldMismatch(f"discriminant {disc} is not squarefree != 1")
            if ext == 0:
                disc = None
        elif ext != 0:
            raise FieldMismatch("extension part requires a discriminant")
        self.base = base
        self.ext = ext
        self.disc = disc

    # -- field bookkeeping ------------------------------------------------

    @staticmethod
    def coerce(value) -> "FieldScalar":
        if isinstance(value, FieldScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return FieldScalar(value)
        raise TypeError(f"cannot make a scalar from {value!r}")

    def _join(self, other: "FieldScalar") -> int | None:
        if self.disc is None:
            return other.disc
        if other.disc is None or other.disc == self.disc:
            return self.disc
        raise FieldMismatch(f"sqrt({self.disc}) vs sqrt({other.disc})")

    @property
    def is_rational(self) -> bool:
        return self.ext == 0

    def is_zero(self) -> bool:
        return self.base == 0 and self.ext == 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = FieldScalar.coerce(other)
        d = self._join(other)
        return FieldScalar(self.base + other.base, self.ext + other.ext, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldScalar(-self.base, -self.ext, self.disc)

    def __sub__(self, other):
        return self + (-FieldScalar.coerce(other))

    def __rsub__(self, other):
        return FieldScalar.coerce(other) - self

    def __mul__(self, other):
        other = FieldScalar.coerce(other)
        d = self._join(other)
        dd = d if d is not None else 0
        base = self.base * other.base + dd * self.ext * other.ext
        ext = self.base * other.ext + self.ext * other.base
        return FieldScalar(base, ext, d)

    __rmul__ = __mul__

    def conj(self) -> "FieldScalar":
        """The involution tau: sqrt(d) -> -sqrt(d), identity on Q."""
        return FieldScalar(self.base, -self.ext, self.disc)

    def norm(self) -> Fraction:
        """self * conj(self) as a rational: base^2 - d * ext^2."""
        dd = self.disc if self.disc is not None else 0
        return self.base * self.base - dd * self.ext * self.ext

    def inverse(self) -> "FieldScalar":
        if self.is_zero():
            raise DivisionByZero("scalar inverse of zero")
        n = self.norm()
        # norm vanishes on nonzero elements only if d were a rational square,
        # which the squarefree check excludes
        return FieldScalar(self.base / n, -self.ext / n, self.disc)

    def __truediv__(self, other):
        return self * FieldScalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return FieldScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = FieldScalar(1)
        acc = self
        while n:
            if n & 1:
                out = out * acc
            acc = acc * acc
            n >>= 1
        return out

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldScalar(other)
        if not isinstance(other, FieldScalar):
            return NotImplemented
        if self.ext != 0 and other.ext != 0 and self.disc != other.disc:
            return False
        return self.base == other.base and self.ext == other.ext

    def __hash__(self):
        return hash((self.base, self.ext, self.disc))

    def __repr__(self):
        return f"FieldScalar({self})"

    def __str__(self):
        if self.ext == 0:
            return str(self.base)
        return f"{self.base}+{self.ext}*sqrt({self.disc})"


def sqrt_of(disc: int) -> FieldScalar:
    """The scalar sqrt(disc)."""
    return FieldScalar(0, 1, disc)


def scalar(base, ext=0, disc: int | None = None) -> FieldScalar:
    return FieldScalar(base, ext, disc)
