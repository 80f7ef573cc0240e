"""
Constants of the Fueter-Sce map.

    C_q(k)  = (q-1)(q-3) ... (q-2k+1),   C_q(0) = 1
    gamma_q = (-1)^((q-1)/2) (q-1)!! / (q-2)!!,   (-1)!! = 0!! = 1
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from hyperck.errors import OddQRequiredError


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def c_q(q: int, k: int) -> int:
    """C_q(k) = prod_{j<k} (q - 1 - 2j)."""
    out = 1
    for j in range(k):
        out *= q - 1 - 2 * j
    return out


def gamma_q(q: int) -> Fraction:
    require_odd_q(q)
    sign = -1 if ((q - 1) // 2) % 2 else 1
    return Fraction(sign * double_factorial(q - 1), double_factorial(q - 2))


def require_odd_q(q: int) -> None:
    if q < 1 or q % 2 == 0:
        raise OddQRequiredError(f"odd q required (the Fueter-Sce map is defined for odd q), got q={q}")


@dataclass(frozen=True)
class FSConstants:
    """C_q(0..(q+1)/2) and gamma_q for an odd q."""
    q: int
    C: tuple[int, ...]
    gamma: Fraction

    @property
    def exponent(self) -> int:
        """(q-1)/2, the Laplacian power of the map."""
        return (self.q - 1) // 2


def fs_constants(q: int) -> FSConstants:
    """
    Exact constants for odd q.

    Raises:
        OddQRequiredError: q even or q < 1
    """
    require_odd_q(q)
    return FSConstants(
        q=q,
        C=tuple(c_q(q, k) for k in range((q + 1) // 2 + 1)),
        gamma=gamma_q(q),
    )
