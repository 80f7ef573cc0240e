"""
Kelvin-type functions N(x) |x|^-s.

The space is closed under differentiation:

    d_i (N rho^-s) = ((d_i N) R - s x_i N) rho^-(s+2),   R = sum_i x_i^2 = rho^2

so every derivative raises s by exactly 2. A function is stored as a single
numerator over the largest power; sums fold lower powers up by multiplying
with R. Terms whose powers differ by an odd amount cannot be folded.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from hyperck.algebra.element import AlgebraElement, RationalLike
from hyperck.errors import AlgebraMismatchError, KelvinParityError, VariableRangeError
from hyperck.poly.ambient import AlgebraPoly


def norm_squared(template: AlgebraPoly) -> AlgebraPoly:
    """R = sum_i x_i^2 in the variables of template."""
    total = template.zero_like()
    one = template.constant_like(1)
    for i in range(template.nvars):
        total = total + one.times_variable(i, 2)
    return total


def _raise_power(numerator: AlgebraPoly, steps: int) -> AlgebraPoly:
    """numerator * R^steps."""
    if steps == 0 or numerator.is_zero():
        return numerator
    r2 = norm_squared(numerator)
    for _ in range(steps):
        numerator = numerator.mul(r2)
    return numerator


@dataclass(frozen=True, eq=False)
class KelvinFunction:
    """
    numerator * |x|^-s with a Dirac frame.

    Attributes:
        units: frame e_0..e_{nu-1} used by the Dirac operators, one per variable
        numerator: polynomial in nu variables
        s: power of |x| in the denominator
    """
    units: tuple[AlgebraElement, ...]
    numerator: AlgebraPoly
    s: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "units", tuple(self.units))
        if len(self.units) != self.numerator.nvars:
            raise VariableRangeError(
                f"Frame has {len(self.units)} units for {self.numerator.nvars} variables"
            )
        if self.s < 0:
            raise VariableRangeError(f"Kelvin exponent must be >= 0, got {self.s}")
        for unit in self.units:
            if unit.algebra != self.numerator.algebra:
                raise AlgebraMismatchError("Frame and numerator live in different algebras")

    @property
    def nvars(self) -> int:
        return self.numerator.nvars

    @classmethod
    def from_terms(
        cls, units: Sequence[AlgebraElement], terms: Sequence[tuple[AlgebraPoly, int]]
    ) -> KelvinFunction:
        """
        Fold sum_j N_j rho^-s_j into one numerator over the largest s.

        Raises:
            KelvinParityError: two nonzero terms with s of different parity
        """
        live = [(n, s) for n, s in terms if not n.is_zero()]
        if not live:
            template = terms[0][0]
            return cls(tuple(units), template.zero_like(), max(s for _, s in terms))
        top = max(s for _, s in live)
        parities = {s % 2 for _, s in live}
        if len(parities) > 1:
            raise KelvinParityError(f"Cannot fold powers {sorted(s for _, s in live)} of mixed parity")
        total = live[0][0].zero_like()
        for n, s in live:
            total = total + _raise_power(n, (top - s) // 2)
        return cls(tuple(units), total, top)

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def _same_frame(self, other: KelvinFunction) -> None:
        if self.units != other.units:
            raise AlgebraMismatchError("Kelvin functions with different Dirac frames")

    def __add__(self, other: KelvinFunction) -> KelvinFunction:
        self._same_frame(other)
        return KelvinFunction.from_terms(self.units, [(self.numerator, self.s), (other.numerator, other.s)])

    def __sub__(self, other: KelvinFunction) -> KelvinFunction:
        return self + (-other)

    def __neg__(self) -> KelvinFunction:
        return KelvinFunction(self.units, -self.numerator, self.s)

    def scale(self, factor: RationalLike) -> KelvinFunction:
        return KelvinFunction(self.units, self.numerator.scale(factor), self.s)

    def __eq__(self, other: object) -> bool:
        """Equality as functions: cross-multiply by powers of R."""
        if not isinstance(other, KelvinFunction):
            return NotImplemented
        if self.units != other.units:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if (self.s - other.s) % 2:
            return False
        top = max(self.s, other.s)
        return _raise_power(self.numerator, (top - self.s) // 2) == _raise_power(
            other.numerator, (top - other.s) // 2
        )

    __hash__ = None  # type: ignore[assignment]

    def format(self, names: Sequence[str] | None = None) -> str:
        return f"({self.numerator.format(names)}) * |x|^-{self.s}"

    def __str__(self) -> str:
        return self.format()


def kelvin_derivative(K: KelvinFunction, i: int) -> KelvinFunction:
    """d_i K; the result has exponent s + 2."""
    N = K.numerator
    if not 0 <= i < N.nvars:
        raise VariableRangeError(f"Variable index {i} outside 0..{N.nvars - 1}")
    numerator = N.derivative(i).mul(norm_squared(N)) - N.times_variable(i).scale(K.s)
    return KelvinFunction(K.units, numerator, K.s + 2)


def _frame_sum(K: KelvinFunction, units: Sequence[AlgebraElement], right: bool) -> KelvinFunction:
    total = K.numerator.zero_like()
    for i, unit in enumerate(units):
        d = kelvin_derivative(K, i).numerator
        total = total + (d.right_mul(unit) if right else d.left_mul(unit))
    return KelvinFunction(K.units, total, K.s + 2)


def kelvin_dirac(K: KelvinFunction) -> KelvinFunction:
    """sum_i e_i d_i K."""
    return _frame_sum(K, K.units, right=False)


def kelvin_dirac_right(K: KelvinFunction) -> KelvinFunction:
    """sum_i (d_i K) e_i."""
    return _frame_sum(K, K.units, right=True)


def kelvin_laplacian(K: KelvinFunction) -> KelvinFunction:
    """sum_i d_i^2 K; exponent s + 4."""
    total = K.numerator.zero_like()
    for i in range(K.nvars):
        total = total + kelvin_derivative(kelvin_derivative(K, i), i).numerator
    return KelvinFunction(K.units, total, K.s + 4)


def kelvin_dirac_power(K: KelvinFunction, n: int, right: bool = False) -> KelvinFunction:
    """n-fold Dirac operator, left or right."""
    if n < 0:
        raise VariableRangeError(f"Dirac power needs n >= 0, got {n}")
    step = kelvin_dirac_right if right else kelvin_dirac
    for _ in range(n):
        K = step(K)
    return K


def radial_power(units: Sequence[AlgebraElement], s: int) -> KelvinFunction:
    """|x|^-s with a constant unit numerator."""
    algebra = units[0].algebra
    return KelvinFunction(tuple(units), AlgebraPoly.constant(algebra, len(units), 1), s)
