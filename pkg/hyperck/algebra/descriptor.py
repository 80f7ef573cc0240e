"""
Basis multiplication tables for real alternative *-algebras.

Two families are supported:
- Clifford algebras R_{0,n} with negative definite generators (e_i e_i = -1),
  blades indexed by bit masks.
- The octonions, built by Cayley-Dickson doubling of the quaternions, which are
  in turn doubled from the complex numbers.

ASSUMPTIONS:
- Basis index 0 is the unity in both families.
- Conjugation is the standard *-involution: Clifford conjugation on blades,
  negation of every imaginary unit for the octonions.
- Tables are built once per (kind, n) and shared; descriptors are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from hyperck.errors import DimensionLimitError, UnsupportedAlgebraError
from hyperck.limits import MAX_GENERATORS, max_algebra_dim


class AlgebraKind(str, Enum):
    """Supported algebra families."""
    CLIFFORD = "clifford"
    OCTONION = "octonion"


OCTONION_GENERATORS = 7


@dataclass(frozen=True)
class AlgebraDescriptor:
    """
    A finite-dimensional real algebra given by its basis multiplication table.

    Two descriptors are equal when they describe the same (kind, n); the tables
    are derived data and do not take part in comparisons.
    """
    kind: AlgebraKind
    n: int
    blade_labels: tuple[str, ...] = field(compare=False)
    product_index: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    product_sign: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)
    conj_sign: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.blade_labels)

    @property
    def name(self) -> str:
        if self.kind is AlgebraKind.CLIFFORD:
            return f"clifford:n={self.n}"
        return "octonion"

    def mul_table(self, i: int, j: int) -> tuple[int, int]:
        """Return (sign, k) with e_i e_j = sign * e_k."""
        return self.product_sign[i][j], self.product_index[i][j]

    def label_index(self, label: str) -> int:
        """Return the basis index of a blade label."""
        try:
            return self._label_map()[label]
        except KeyError:
            raise UnsupportedAlgebraError(
                f"Unknown basis label {label!r} for {self.name}"
            ) from None

    def _label_map(self) -> dict[str, int]:
        return _label_lookup(self.blade_labels)

    def generator_index(self, i: int) -> int:
        """Basis index of the i-th imaginary generator e_i (1-based)."""
        if not 1 <= i <= self.n:
            raise UnsupportedAlgebraError(f"{self.name} has no generator e{i}")
        if self.kind is AlgebraKind.CLIFFORD:
            return 1 << (i - 1)
        return i

    def __str__(self) -> str:
        return self.name


@lru_cache(maxsize=None)
def _label_lookup(labels: tuple[str, ...]) -> dict[str, int]:
    return {label: idx for idx, label in enumerate(labels)}


# Clifford tables

def _blade_label(mask: int, n: int) -> str:
    if mask == 0:
        return "1"
    gens = [i + 1 for i in range(n) if mask >> i & 1]
    sep = "_" if n >= 10 else ""
    return "e" + sep.join(str(g) for g in gens)


def _reordering_sign(a: int, b: int) -> int:
    """Sign of sorting the generators of blade a followed by blade b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _clifford_tables(n: int) -> tuple[tuple[str, ...], list[list[int]], list[list[int]], list[int]]:
    dim = 1 << n
    labels = tuple(_blade_label(mask, n) for mask in range(dim))
    index = [[0] * dim for _ in range(dim)]
    sign = [[0] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            s = _reordering_sign(a, b)
            # every shared generator squares to -1
            if bin(a & b).count("1") & 1:
                s = -s
            index[a][b] = a ^ b
            sign[a][b] = s
    conj = []
    for mask in range(dim):
        k = bin(mask).count("1")
        conj.append(-1 if (k * (k + 1) // 2) & 1 else 1)
    return labels, index, sign, conj


# Cayley-Dickson tables

def _cd_conj(x: list[int]) -> list[int]:
    if len(x) == 1:
        return list(x)
    half = len(x) // 2
    return _cd_conj(x[:half]) + [-c for c in x[half:]]


def _cd_mul(x: list[int], y: list[int]) -> list[int]:
    """(a, b)(c, d) = (ac - d^c b, da + b c^c)."""
    if len(x) == 1:
        return [x[0] * y[0]]
    half = len(x) // 2
    a, b = x[:half], x[half:]
    c, d = y[:half], y[half:]
    left = [s - t for s, t in zip(_cd_mul(a, c), _cd_mul(_cd_conj(d), b))]
    right = [s + t for s, t in zip(_cd_mul(d, a), _cd_mul(b, _cd_conj(c)))]
    return left + right


def _cayley_dickson_tables(levels: int) -> tuple[list[list[int]], list[list[int]]]:
    dim = 1 << levels
    index = [[0] * dim for _ in range(dim)]
    sign = [[0] * dim for _ in range(dim)]
    units = [[1 if k == i else 0 for k in range(dim)] for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            prod = _cd_mul(units[i], units[j])
            nonzero = [(k, c) for k, c in enumerate(prod) if c]
            if len(nonzero) != 1 or abs(nonzero[0][1]) != 1:
                raise UnsupportedAlgebraError("Cayley-Dickson basis product is not a signed unit")
            k, c = nonzero[0]
            index[i][j] = k
            sign[i][j] = c
    return index, sign


def _freeze(table: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(row) for row in table)


@lru_cache(maxsize=None)
def _build(kind: AlgebraKind, n: int) -> AlgebraDescriptor:
    if kind is AlgebraKind.CLIFFORD:
        labels, index, sign, conj = _clifford_tables(n)
    else:
        index, sign = _cayley_dickson_tables(3)
        labels = ("1",) + tuple(f"e{i}" for i in range(1, 8))
        conj = [1] + [-1] * 7
    return AlgebraDescriptor(
        kind=kind,
        n=n,
        blade_labels=labels,
        product_index=_freeze(index),
        product_sign=_freeze(sign),
        conj_sign=tuple(conj),
    )


def make_algebra(kind: AlgebraKind | str, n: int | None = None) -> AlgebraDescriptor:
    """
    Build (or fetch the cached) descriptor for an algebra.

    Args:
        kind: "clifford" or "octonion"
        n: Clifford generator count (1..12); ignored for octonions

    Returns:
        AlgebraDescriptor with its multiplication table and conjugation signs

    Raises:
        UnsupportedAlgebraError: unknown kind or bad generator count
        DimensionLimitError: dimension above HYPERCK_MAX_DIM
    """
    try:
        kind = AlgebraKind(kind)
    except ValueError:
        raise UnsupportedAlgebraError(f"Unsupported algebra kind: {kind!r}") from None

    if kind is AlgebraKind.OCTONION:
        n = OCTONION_GENERATORS
        dim = 8
    else:
        if n is None or n < 1:
            raise UnsupportedAlgebraError("Clifford algebras need n >= 1 generators")
        if n > MAX_GENERATORS:
            raise UnsupportedAlgebraError(
                f"Clifford generator count {n} exceeds the table guard ({MAX_GENERATORS})"
            )
        dim = 1 << n

    cap = max_algebra_dim()
    if dim > cap:
        raise DimensionLimitError(f"Algebra dimension {dim} exceeds HYPERCK_MAX_DIM={cap}")
    return _build(kind, n)
