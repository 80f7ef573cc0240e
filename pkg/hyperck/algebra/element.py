"""
Exact algebra elements and the *-algebra operations on them.

Coefficients are fractions.Fraction throughout; no floating point is ever
introduced, so every identity is checked by exact equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from hyperck.algebra.descriptor import AlgebraDescriptor
from hyperck.errors import AlgebraMismatchError, HyperckError

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Fraction | int | str


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"Cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class AlgebraElement:
    """Coefficient vector over the basis of an algebra."""
    algebra: AlgebraDescriptor
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.algebra.dim:
            raise HyperckError(
                f"Element of {self.algebra.name} needs {self.algebra.dim} coefficients, "
                f"got {len(self.coeffs)}"
            )
        if not all(type(c) is Fraction for c in self.coeffs):
            object.__setattr__(self, "coeffs", tuple(as_fraction(c) for c in self.coeffs))

    # Constructors

    @classmethod
    def zero(cls, algebra: AlgebraDescriptor) -> AlgebraElement:
        return cls(algebra, (ZERO,) * algebra.dim)

    @classmethod
    def scalar(cls, algebra: AlgebraDescriptor, value: RationalLike) -> AlgebraElement:
        coeffs = [ZERO] * algebra.dim
        coeffs[0] = as_fraction(value)
        return cls(algebra, tuple(coeffs))

    @classmethod
    def one(cls, algebra: AlgebraDescriptor) -> AlgebraElement:
        return cls.scalar(algebra, 1)

    @classmethod
    def basis(cls, algebra: AlgebraDescriptor, index: int, value: RationalLike = 1) -> AlgebraElement:
        coeffs = [ZERO] * algebra.dim
        coeffs[index] = as_fraction(value)
        return cls(algebra, tuple(coeffs))

    @classmethod
    def from_labels(
        cls, algebra: AlgebraDescriptor, values: Mapping[str, RationalLike]
    ) -> AlgebraElement:
        """Build an element from {"1": "3/2", "e12": -1} style maps."""
        coeffs = [ZERO] * algebra.dim
        for label, value in values.items():
            coeffs[algebra.label_index(label)] += as_fraction(value)
        return cls(algebra, tuple(coeffs))

    @classmethod
    def from_sparse(
        cls, algebra: AlgebraDescriptor, items: Iterable[tuple[int, Fraction]]
    ) -> AlgebraElement:
        coeffs = [ZERO] * algebra.dim
        for idx, value in items:
            coeffs[idx] += value
        return cls(algebra, tuple(coeffs))

    # Queries

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_real(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def real_part(self) -> Fraction:
        return self.coeffs[0]

    def support(self) -> list[tuple[int, Fraction]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def to_labels(self) -> dict[str, str]:
        labels = self.algebra.blade_labels
        return {labels[i]: str(c) for i, c in self.support()}

    # Arithmetic

    def _check(self, other: AlgebraElement) -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"Cannot combine elements of {self.algebra.name} and {other.algebra.name}"
            )

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.algebra, tuple(-a for a in self.coeffs))

    def scale(self, factor: RationalLike) -> AlgebraElement:
        factor = as_fraction(factor)
        return AlgebraElement(self.algebra, tuple(factor * a for a in self.coeffs))

    def __mul__(self, other: object) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> AlgebraElement:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def conj(self) -> AlgebraElement:
        return conj(self)

    def __str__(self) -> str:
        parts = []
        for idx, c in self.support():
            label = self.algebra.blade_labels[idx]
            parts.append(str(c) if idx == 0 else f"{c}*{label}")
        return " + ".join(parts) if parts else "0"


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the basis multiplication table."""
    a._check(b)
    alg = a.algebra
    out = [ZERO] * alg.dim
    b_support = b.support()
    if not b_support:
        return AlgebraElement(alg, tuple(out))
    for i, ai in a.support():
        row_index = alg.product_index[i]
        row_sign = alg.product_sign[i]
        for j, bj in b_support:
            k = row_index[j]
            if row_sign[j] > 0:
                out[k] += ai * bj
            else:
                out[k] -= ai * bj
    return AlgebraElement(alg, tuple(out))


def conj(a: AlgebraElement) -> AlgebraElement:
    """The *-involution a -> a^c."""
    signs = a.algebra.conj_sign
    return AlgebraElement(a.algebra, tuple(c if s > 0 else -c for c, s in zip(a.coeffs, signs)))


def trace_norm(a: AlgebraElement) -> tuple[AlgebraElement, AlgebraElement]:
    """Return (t(a), n(a)) = (a + a^c, a a^c)."""
    ac = conj(a)
    return a + ac, mul(a, ac)


def associator(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> AlgebraElement:
    """[a, b, c] = (ab)c - a(bc)."""
    return mul(mul(a, b), c) - mul(a, mul(b, c))


def inverse(a: AlgebraElement) -> AlgebraElement:
    """
    Inverse a^c / n(a) for elements with real trace and nonzero real norm.

    Raises:
        HyperckError: if t(a) or n(a) is not real, or n(a) = 0
    """
    t, n = trace_norm(a)
    if not (t.is_real() and n.is_real()) or n.real_part == 0:
        raise HyperckError(f"Element {a} has no quadratic inverse")
    return conj(a).scale(1 / n.real_part)


@dataclass(frozen=True)
class ConeMembership:
    """Membership of an element in the quadratic cone and the unit sphere of imaginary units."""
    in_QA: bool
    in_SA: bool


def cone_membership(a: AlgebraElement) -> ConeMembership:
    """
    Decide membership in the quadratic cone Q_A and in S_A.

    Q_A: a is real, or t(a), n(a) are real with 4 n(a) > t(a)^2.
    S_A: t(a) = 0 and n(a) = 1.
    """
    t, n = trace_norm(a)
    real_tn = t.is_real() and n.is_real()
    in_qa = a.is_real() or (real_tn and 4 * n.real_part > t.real_part**2)
    in_sa = t.is_zero() and real_tn and n.real_part == 1
    return ConeMembership(in_QA=in_qa, in_SA=in_sa)
