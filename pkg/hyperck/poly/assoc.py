"""
Association trees for products in non-associative algebras.

A tree is either a leaf or a pair (left, right). Leaves are consumed by the
operands in order, so ((. .) .) is the left comb (a_1 a_2 ... a_k)_L and
(. (. .)) is the right comb (a_1 a_2 ... a_k)_R.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import TypeVar

from hyperck.errors import AssocTreeError
from hyperck.poly.ambient import AlgebraPoly

T = TypeVar("T")


@dataclass(frozen=True)
class AssocTree:
    """Binary parenthesization over leaf_count operands; a leaf has no children."""
    left: AssocTree | None = None
    right: AssocTree | None = None

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise AssocTreeError("A tree node needs both children or none")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def leaf_count(self) -> int:
        if self.left is None or self.right is None:
            return 1
        return self.left.leaf_count + self.right.leaf_count

    @classmethod
    def leaf(cls) -> AssocTree:
        return cls()

    @classmethod
    def left_comb(cls, k: int) -> AssocTree:
        """((a_1 a_2) a_3) ... a_k."""
        if k < 1:
            raise AssocTreeError("A tree needs at least one leaf")
        tree = cls.leaf()
        for _ in range(k - 1):
            tree = cls(tree, cls.leaf())
        return tree

    @classmethod
    def right_comb(cls, k: int) -> AssocTree:
        """a_1 (a_2 (... a_k))."""
        if k < 1:
            raise AssocTreeError("A tree needs at least one leaf")
        tree = cls.leaf()
        for _ in range(k - 1):
            tree = cls(cls.leaf(), tree)
        return tree

    @classmethod
    def from_nested(cls, spec: object) -> AssocTree:
        """Build from nested pairs, e.g. ((0, 1), 2); any non-sequence is a leaf."""
        if isinstance(spec, (list, tuple)):
            if len(spec) != 2:
                raise AssocTreeError(f"Tree nodes must have two children, got {spec!r}")
            return cls(cls.from_nested(spec[0]), cls.from_nested(spec[1]))
        return cls.leaf()

    def fold(self, operands: Sequence[T], combine: Callable[[T, T], T]) -> T:
        """Combine operands along the tree."""
        if len(operands) != self.leaf_count:
            raise AssocTreeError(
                f"Tree has {self.leaf_count} leaves but {len(operands)} operands were given"
            )
        it = iter(operands)

        def walk(node: AssocTree) -> T:
            if node.left is None or node.right is None:
                return next(it)
            lhs = walk(node.left)
            return combine(lhs, walk(node.right))

        return walk(self)

    def __str__(self) -> str:
        if self.left is None or self.right is None:
            return "."
        return f"({self.left} {self.right})"


@lru_cache(maxsize=32)
def _trees(k: int) -> tuple[AssocTree, ...]:
    if k == 1:
        return (AssocTree.leaf(),)
    out = []
    for split in range(1, k):
        for lhs in _trees(split):
            for rhs in _trees(k - split):
                out.append(AssocTree(lhs, rhs))
    return tuple(out)


def all_trees(k: int) -> Iterator[AssocTree]:
    """Every parenthesization of k operands (Catalan number many)."""
    if k < 1:
        raise AssocTreeError("A tree needs at least one leaf")
    return iter(_trees(k))


def assoc_product(factors: Sequence[AlgebraPoly], tree: AssocTree | None = None) -> AlgebraPoly:
    """
    Product of polynomials folded along an association tree.

    Args:
        factors: one or more polynomials over the same algebra and variables
        tree: parenthesization; defaults to the left comb

    Raises:
        AssocTreeError: empty factor list or leaf count mismatch
    """
    if not factors:
        raise AssocTreeError("assoc_product needs at least one factor")
    if tree is None:
        tree = AssocTree.left_comb(len(factors))
    return tree.fold(list(factors), lambda a, b: a.mul(b))
