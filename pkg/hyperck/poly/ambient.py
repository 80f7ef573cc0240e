"""
Sparse multivariate polynomials with algebra-valued coefficients.

A polynomial is a map from exponent tuples to AlgebraElements. Variables are
real, so they commute with every coefficient; only the coefficient products
see the (possibly non-associative) algebra table.

ASSUMPTIONS:
- Zero coefficients are never stored; the zero polynomial is the empty map.
- Terms are listed in graded order: total degree first, then exponent tuple.
- AmbientPoly is the polynomial in x_0..x_m of a HypercomplexSetting; the bare
  AlgebraPoly is used for stem slots (x_0..x_p, u) and kernel numerators.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import TYPE_CHECKING

from hyperck.algebra.descriptor import AlgebraDescriptor
from hyperck.algebra.element import ZERO, AlgebraElement, RationalLike, as_fraction, conj
from hyperck.errors import AlgebraMismatchError, SettingMismatchError, VariableRangeError

if TYPE_CHECKING:
    from hyperck.algebra.setting import HypercomplexSetting

Monomial = tuple[int, ...]


def graded_key(mon: Monomial) -> tuple[int, Monomial]:
    return sum(mon), mon


class _Accumulator:
    """Mutable coefficient vectors keyed by monomial."""

    __slots__ = ("algebra", "_rows")

    def __init__(self, algebra: AlgebraDescriptor):
        self.algebra = algebra
        self._rows: dict[Monomial, list[Fraction]] = {}

    def _row(self, mon: Monomial) -> list[Fraction]:
        row = self._rows.get(mon)
        if row is None:
            row = [ZERO] * self.algebra.dim
            self._rows[mon] = row
        return row

    def add(self, mon: Monomial, elem: AlgebraElement, factor: Fraction | int = 1) -> None:
        row = self._row(mon)
        for idx, c in elem.support():
            row[idx] += factor * c

    def add_product(
        self, mon: Monomial, a: AlgebraElement, b: AlgebraElement, factor: Fraction | int = 1
    ) -> None:
        """Add factor * (a b) without building the intermediate element."""
        alg = self.algebra
        row = self._row(mon)
        b_support = b.support()
        for i, ai in a.support():
            row_index = alg.product_index[i]
            row_sign = alg.product_sign[i]
            for j, bj in b_support:
                term = factor * ai * bj
                if row_sign[j] > 0:
                    row[row_index[j]] += term
                else:
                    row[row_index[j]] -= term

    def finish(self) -> dict[Monomial, AlgebraElement]:
        return {
            mon: AlgebraElement(self.algebra, tuple(row))
            for mon, row in self._rows.items()
            if any(row)
        }


class AlgebraPoly:
    """Polynomial in nvars real variables with coefficients in an algebra."""

    __slots__ = ("algebra", "nvars", "_terms")

    def __init__(
        self,
        algebra: AlgebraDescriptor,
        nvars: int,
        terms: Mapping[Sequence[int], AlgebraElement] | None = None,
    ):
        self.algebra = algebra
        self.nvars = nvars
        clean: dict[Monomial, AlgebraElement] = {}
        for mon, coeff in (terms or {}).items():
            mon = tuple(int(e) for e in mon)
            if len(mon) != nvars or any(e < 0 for e in mon):
                raise VariableRangeError(f"Monomial {mon} invalid for {nvars} variables")
            if coeff.algebra != algebra:
                raise AlgebraMismatchError(
                    f"Coefficient in {coeff.algebra.name}, polynomial over {algebra.name}"
                )
            if mon in clean:
                coeff = clean[mon] + coeff
            if coeff.is_zero():
                clean.pop(mon, None)
            else:
                clean[mon] = coeff
        self._terms = clean

    # Construction helpers

    def _spawn(self, terms: dict[Monomial, AlgebraElement]) -> AlgebraPoly:
        """New polynomial of the same kind from already clean terms."""
        out = object.__new__(type(self))
        self._copy_context(out)
        out._terms = {mon: c for mon, c in terms.items() if not c.is_zero()}
        return out

    def _copy_context(self, out: AlgebraPoly) -> None:
        out.algebra = self.algebra
        out.nvars = self.nvars

    def _accumulator(self) -> _Accumulator:
        return _Accumulator(self.algebra)

    def zero_like(self) -> AlgebraPoly:
        return self._spawn({})

    def constant_like(self, value: AlgebraElement | RationalLike) -> AlgebraPoly:
        if not isinstance(value, AlgebraElement):
            value = AlgebraElement.scalar(self.algebra, value)
        return self._spawn({(0,) * self.nvars: value})

    def variable_like(self, index: int, coeff: AlgebraElement | RationalLike = 1) -> AlgebraPoly:
        if not 0 <= index < self.nvars:
            raise VariableRangeError(f"Variable index {index} outside 0..{self.nvars - 1}")
        if not isinstance(coeff, AlgebraElement):
            coeff = AlgebraElement.scalar(self.algebra, coeff)
        mon = tuple(1 if i == index else 0 for i in range(self.nvars))
        return self._spawn({mon: coeff})

    @classmethod
    def zero(cls, algebra: AlgebraDescriptor, nvars: int) -> AlgebraPoly:
        return AlgebraPoly(algebra, nvars)

    @classmethod
    def constant(
        cls, algebra: AlgebraDescriptor, nvars: int, value: AlgebraElement | RationalLike
    ) -> AlgebraPoly:
        return AlgebraPoly(algebra, nvars).constant_like(value)

    @classmethod
    def variable(
        cls, algebra: AlgebraDescriptor, nvars: int, index: int, coeff: AlgebraElement | RationalLike = 1
    ) -> AlgebraPoly:
        return AlgebraPoly(algebra, nvars).variable_like(index, coeff)

    # Queries

    @property
    def terms(self) -> dict[Monomial, AlgebraElement]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, AlgebraElement]]:
        """Terms in canonical graded order."""
        return sorted(self._terms.items(), key=lambda item: graded_key(item[0]))

    def __iter__(self) -> Iterator[tuple[Monomial, AlgebraElement]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mon: Sequence[int]) -> AlgebraElement:
        return self._terms.get(tuple(mon), AlgebraElement.zero(self.algebra))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(mon) for mon in self._terms), default=-1)

    def max_exponent(self, index: int) -> int:
        return max((mon[index] for mon in self._terms), default=0)

    def uses_only(self, indices: Sequence[int]) -> bool:
        allowed = set(indices)
        return all(e == 0 for mon in self._terms for i, e in enumerate(mon) if i not in allowed)

    def has_real_coefficients(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    def _check(self, other: AlgebraPoly) -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"Polynomials over {self.algebra.name} and {other.algebra.name}"
            )
        if self.nvars != other.nvars:
            raise VariableRangeError(
                f"Polynomials in {self.nvars} and {other.nvars} variables cannot be combined"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraPoly):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    # Linear structure

    def __add__(self, other: AlgebraPoly) -> AlgebraPoly:
        if not isinstance(other, AlgebraPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for mon, c in other._terms.items():
            terms[mon] = terms[mon] + c if mon in terms else c
        return self._spawn(terms)

    def __sub__(self, other: AlgebraPoly) -> AlgebraPoly:
        if not isinstance(other, AlgebraPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> AlgebraPoly:
        return self._spawn({mon: -c for mon, c in self._terms.items()})

    def scale(self, factor: RationalLike) -> AlgebraPoly:
        factor = as_fraction(factor)
        if factor == 0:
            return self.zero_like()
        return self._spawn({mon: c.scale(factor) for mon, c in self._terms.items()})

    def left_mul(self, a: AlgebraElement) -> AlgebraPoly:
        """Multiply every coefficient on the left by a."""
        acc = self._accumulator()
        for mon, c in self._terms.items():
            acc.add_product(mon, a, c)
        return self._spawn(acc.finish())

    def right_mul(self, a: AlgebraElement) -> AlgebraPoly:
        """Multiply every coefficient on the right by a."""
        acc = self._accumulator()
        for mon, c in self._terms.items():
            acc.add_product(mon, c, a)
        return self._spawn(acc.finish())

    def map_coefficients(self, fn: Callable[[AlgebraElement], AlgebraElement]) -> AlgebraPoly:
        return self._spawn({mon: fn(c) for mon, c in self._terms.items()})

    def conj(self) -> AlgebraPoly:
        return self.map_coefficients(conj)

    # Products

    def mul(self, other: AlgebraPoly) -> AlgebraPoly:
        """Binary product: coefficients multiply in order (self coeff) * (other coeff)."""
        self._check(other)
        acc = self._accumulator()
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                acc.add_product(tuple(a + b for a, b in zip(m1, m2)), c1, c2)
        return self._spawn(acc.finish())

    def __mul__(self, other: object) -> AlgebraPoly:
        if isinstance(other, AlgebraPoly):
            return self.mul(other)
        if isinstance(other, AlgebraElement):
            return self.right_mul(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> AlgebraPoly:
        if isinstance(other, AlgebraElement):
            return self.left_mul(other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def times_monomial(self, shift: Sequence[int], factor: RationalLike = 1) -> AlgebraPoly:
        """Multiply by factor * x^shift (a real monomial)."""
        factor = as_fraction(factor)
        shift = tuple(shift)
        return self._spawn(
            {tuple(a + b for a, b in zip(mon, shift)): c.scale(factor) for mon, c in self._terms.items()}
        )

    def times_variable(self, index: int, power: int = 1) -> AlgebraPoly:
        shift = [0] * self.nvars
        shift[index] = power
        return self.times_monomial(shift)

    # Calculus

    def derivative(self, index: int) -> AlgebraPoly:
        """Formal partial derivative in variable `index`."""
        if not 0 <= index < self.nvars:
            raise VariableRangeError(f"Variable index {index} outside 0..{self.nvars - 1}")
        terms = {}
        for mon, c in self._terms.items():
            e = mon[index]
            if e:
                lowered = mon[:index] + (e - 1,) + mon[index + 1 :]
                terms[lowered] = c.scale(e)
        return self._spawn(terms)

    def evaluate(self, point: Sequence[RationalLike]) -> AlgebraElement:
        """Exact substitution of a rational point."""
        if len(point) != self.nvars:
            raise VariableRangeError(f"Point needs {self.nvars} coordinates, got {len(point)}")
        values = [as_fraction(x) for x in point]
        acc = [ZERO] * self.algebra.dim
        for mon, c in self._terms.items():
            weight = Fraction(1)
            for x, e in zip(values, mon):
                if e:
                    weight *= x**e
            if weight:
                for idx, ci in c.support():
                    acc[idx] += weight * ci
        return AlgebraElement(self.algebra, tuple(acc))

    def negate_variables(self, indices: Sequence[int]) -> AlgebraPoly:
        """Substitute x_s -> -x_s for the given indices."""
        idx = tuple(indices)
        terms = {}
        for mon, c in self._terms.items():
            odd = sum(mon[i] for i in idx) & 1
            terms[mon] = -c if odd else c
        return self._spawn(terms)

    def restrict_zero(self, indices: Sequence[int]) -> AlgebraPoly:
        """Set the given variables to zero."""
        idx = tuple(indices)
        return self._spawn({mon: c for mon, c in self._terms.items() if not any(mon[i] for i in idx)})

    # Display

    def format(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for mon, c in self.items():
            support = c.support()
            if len(support) == 1 and support[0][0] == 0:
                coeff = str(support[0][1])
            else:
                coeff = f"({c})"
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mon) if e]
            parts.append("*".join([coeff] + factors) if factors else coeff)
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()})"


class AmbientPoly(AlgebraPoly):
    """Polynomial in x_0..x_m of a hypercomplex setting (a function M -> A)."""

    __slots__ = ("setting",)

    def __init__(
        self,
        setting: HypercomplexSetting,
        terms: Mapping[Sequence[int], AlgebraElement] | None = None,
    ):
        super().__init__(setting.algebra, setting.nvars, terms)
        self.setting = setting

    def _copy_context(self, out: AlgebraPoly) -> None:
        super()._copy_context(out)
        out.setting = self.setting  # type: ignore[attr-defined]

    def _check(self, other: AlgebraPoly) -> None:
        if isinstance(other, AmbientPoly) and other.setting != self.setting:
            raise SettingMismatchError(
                f"Polynomials in settings {self.setting.name} and {other.setting.name}"
            )
        super()._check(other)

    @classmethod
    def zero_in(cls, setting: HypercomplexSetting) -> AmbientPoly:
        return cls(setting)

    @classmethod
    def constant_in(cls, setting: HypercomplexSetting, value: AlgebraElement | RationalLike) -> AmbientPoly:
        return cls(setting).constant_like(value)  # type: ignore[return-value]

    @classmethod
    def variable_in(
        cls, setting: HypercomplexSetting, index: int, coeff: AlgebraElement | RationalLike = 1
    ) -> AmbientPoly:
        setting.check_variable(index)
        return cls(setting).variable_like(index, coeff)  # type: ignore[return-value]

    @classmethod
    def vector_part(cls, setting: HypercomplexSetting) -> AmbientPoly:
        """x_q = sum_{s>p} x_s v_s."""
        total = cls(setting)
        for s in range(setting.p + 1, setting.m + 1):
            total = total + cls.variable_in(setting, s, setting.v[s])
        return total

    @classmethod
    def paravector(cls, setting: HypercomplexSetting) -> AmbientPoly:
        """x = sum_s x_s v_s."""
        total = cls(setting)
        for s in range(setting.m + 1):
            total = total + cls.variable_in(setting, s, setting.v[s])
        return total

    @classmethod
    def from_algebra_poly(cls, setting: HypercomplexSetting, poly: AlgebraPoly) -> AmbientPoly:
        if poly.nvars != setting.nvars:
            raise VariableRangeError(f"Expected {setting.nvars} variables, got {poly.nvars}")
        return cls(setting, poly.terms)

    def is_seed(self) -> bool:
        """True when only the slice-base variables x_0..x_p occur."""
        return self.uses_only(range(self.setting.p + 1))

    def reflect(self) -> AmbientPoly:
        return self.negate_variables(range(self.setting.p + 1, self.setting.m + 1))  # type: ignore[return-value]


# Module-level operations

def poly_add(f: AlgebraPoly, g: AlgebraPoly) -> AlgebraPoly:
    return f + g


def poly_scale(f: AlgebraPoly, factor: RationalLike) -> AlgebraPoly:
    return f.scale(factor)


def poly_mul(f: AlgebraPoly, g: AlgebraPoly) -> AlgebraPoly:
    return f.mul(g)


def partial_derivative(f: AlgebraPoly, s: int) -> AlgebraPoly:
    return f.derivative(s)


def evaluate(f: AlgebraPoly, point: Sequence[RationalLike]) -> AlgebraElement:
    return f.evaluate(point)


def reflect(f: AmbientPoly) -> AmbientPoly:
    """x_diamond: x_s -> -x_s for every s > p."""
    return f.reflect()


@lru_cache(maxsize=256)
def power_sum_expansion(nvars: int, power: int) -> tuple[tuple[Monomial, int], ...]:
    """(y_1^2 + ... + y_n^2)^power as (exponent tuple, integer coefficient) pairs."""
    return tuple(_power_sum(nvars, power))


def _power_sum(nvars: int, power: int) -> Iterator[tuple[Monomial, int]]:
    if nvars == 0:
        if power == 0:
            yield (), 1
        return
    if nvars == 1:
        yield (2 * power,), 1
        return
    for first in range(power, -1, -1):
        head = comb(power, first)
        for tail, coeff in _power_sum(nvars - 1, power - first):
            yield (2 * first,) + tail, head * coeff
