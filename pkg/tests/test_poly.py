"""
Tests for algebra-valued polynomials and association trees.
"""

from fractions import Fraction
from itertools import product

import pytest

from hyperck.algebra.descriptor import make_algebra
from hyperck.algebra.element import AlgebraElement, associator
from hyperck.errors import (
    AlgebraMismatchError,
    AssocTreeError,
    SettingMismatchError,
    VariableRangeError,
)
from hyperck.poly.ambient import AlgebraPoly, AmbientPoly, power_sum_expansion
from hyperck.poly.assoc import AssocTree, all_trees, assoc_product
from tests.helpers import ambient, element, seed


class TestArithmetic:
    """Tests for the linear structure and products."""

    def test_zero_coefficients_are_dropped(self):
        """x0 - x0 is the empty polynomial."""
        alg = make_algebra("clifford", 2)
        x0 = AlgebraPoly.variable(alg, 2, 0)
        assert (x0 - x0).is_zero()
        assert (x0 - x0).degree() == -1

    def test_zero_coefficient_not_stored(self):
        """Explicit zero coefficients vanish on construction."""
        alg = make_algebra("clifford", 2)
        f = AlgebraPoly(alg, 1, {(1,): AlgebraElement.zero(alg), (2,): element(alg, 3)})
        assert len(f) == 1
        assert f.coefficient((1,)).is_zero()

    def test_coefficients_multiply_in_order(self):
        """(e1 x0)(e2 x1) = e12 x0 x1, and the reverse order flips the sign."""
        alg = make_algebra("clifford", 2)
        a = AlgebraPoly.variable(alg, 2, 0, element(alg, {"e1": 1}))
        b = AlgebraPoly.variable(alg, 2, 1, element(alg, {"e2": 1}))
        assert (a * b).coefficient((1, 1)) == element(alg, {"e12": 1})
        assert (b * a).coefficient((1, 1)) == element(alg, {"e12": -1})

    def test_scalar_and_element_multiplication(self):
        """Rationals scale, elements multiply on the matching side."""
        alg = make_algebra("clifford", 2)
        e1 = element(alg, {"e1": 1})
        e2 = element(alg, {"e2": 1})
        f = AlgebraPoly.variable(alg, 1, 0, e1)
        assert (f * Fraction(1, 2)).coefficient((1,)) == element(alg, {"e1": Fraction(1, 2)})
        assert (e2 * f).coefficient((1,)) == element(alg, {"e12": -1})
        assert (f * e2).coefficient((1,)) == element(alg, {"e12": 1})

    def test_mismatched_variable_counts(self):
        """Polynomials in different numbers of variables do not combine."""
        alg = make_algebra("clifford", 2)
        with pytest.raises(VariableRangeError):
            _ = AlgebraPoly.variable(alg, 1, 0) + AlgebraPoly.variable(alg, 2, 0)

    def test_mismatched_algebras(self):
        """Coefficients must belong to the polynomial's algebra."""
        alg = make_algebra("clifford", 2)
        other = make_algebra("clifford", 3)
        with pytest.raises(AlgebraMismatchError):
            AlgebraPoly(alg, 1, {(1,): AlgebraElement.one(other)})

    def test_mismatched_settings(self, r03_p0, r03_p1):
        """Ambient polynomials of different settings do not combine."""
        with pytest.raises(SettingMismatchError):
            _ = AmbientPoly.variable_in(r03_p0, 0) + AmbientPoly.variable_in(r03_p1, 0)

    def test_invalid_monomial(self):
        """Negative exponents and wrong lengths are rejected."""
        alg = make_algebra("clifford", 2)
        with pytest.raises(VariableRangeError):
            AlgebraPoly(alg, 2, {(1,): AlgebraElement.one(alg)})
        with pytest.raises(VariableRangeError):
            AlgebraPoly(alg, 1, {(-1,): AlgebraElement.one(alg)})

    def test_ambient_spawns_keep_setting(self, r03_p0):
        """Arithmetic on AmbientPoly returns AmbientPoly in the same setting."""
        f = AmbientPoly.paravector(r03_p0)
        g = (f * f).scale(3) - f
        assert isinstance(g, AmbientPoly)
        assert g.setting == r03_p0


class TestCalculus:
    """Tests for derivatives and evaluation."""

    def test_derivative(self, r02_p0):
        """d/dx0 of 3 x0^2 x1 e1 is 6 x0 x1 e1."""
        f = ambient(r02_p0, {(2, 1, 0): {"e1": 3}})
        assert f.derivative(0) == ambient(r02_p0, {(1, 1, 0): {"e1": 6}})
        assert f.derivative(2).is_zero()

    def test_derivative_range(self, r02_p0):
        """Derivative indices must name a variable."""
        with pytest.raises(VariableRangeError):
            AmbientPoly.paravector(r02_p0).derivative(3)

    def test_leibniz_rule(self, r03_p0):
        """d(fg) = (df) g + f (dg) with noncommuting coefficients."""
        f = ambient(r03_p0, {(1, 1, 0, 0): {"e1": 1}, (0, 0, 2, 0): {"e23": 2}})
        g = ambient(r03_p0, {(0, 1, 0, 1): {"e2": 1, "1": 1}, (2, 0, 0, 0): {"e3": -1}})
        for s in range(r03_p0.nvars):
            assert (f * g).derivative(s) == f.derivative(s) * g + f * g.derivative(s)

    def test_evaluate(self, r02_p0):
        """x at (1, 2, 3) is 1 + 2 e1 + 3 e2."""
        x = AmbientPoly.paravector(r02_p0)
        assert x.evaluate([1, 2, 3]) == element(r02_p0.algebra, {"1": 1, "e1": 2, "e2": 3})

    def test_evaluate_rational_point(self, r02_p0):
        """x0^2 x1 at (1/2, 3) is 3/4."""
        f = ambient(r02_p0, {(2, 1, 0): 1})
        assert f.evaluate([Fraction(1, 2), 3, 0]) == element(r02_p0.algebra, Fraction(3, 4))

    def test_evaluate_wrong_length(self, r02_p0):
        """Points need one coordinate per variable."""
        with pytest.raises(VariableRangeError):
            AmbientPoly.paravector(r02_p0).evaluate([1, 2])

    def test_evaluation_is_multiplicative(self, oct_p1):
        """(fg)(x) = f(x) g(x) over the octonions."""
        f = ambient(oct_p1, {(1, 0, 1, 0, 0): {"e1": 1, "e3": 2}, (0, 0, 0, 0, 0): {"e5": 1}})
        g = ambient(oct_p1, {(0, 1, 0, 0, 1): {"e2": 1}, (0, 0, 0, 1, 0): {"e6": -1}})
        point = [Fraction(1, 2), 2, -1, 3, Fraction(2, 3)]
        assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)


class TestReflection:
    """Tests for x_diamond = x_p - x_q."""

    def test_reflect_negates_vector_variables(self, r03_p1):
        """Only variables with index above p change sign."""
        f = ambient(r03_p1, {(1, 1, 1, 0): 1, (0, 0, 0, 2): 1})
        assert f.reflect() == ambient(r03_p1, {(1, 1, 1, 0): -1, (0, 0, 0, 2): 1})

    def test_reflect_is_involution(self, r05_p2):
        """Reflecting twice is the identity."""
        f = AmbientPoly.paravector(r05_p2) * AmbientPoly.vector_part(r05_p2)
        assert f.reflect().reflect() == f

    def test_seed_detection(self, r03_p1):
        """Seeds use x_0..x_p only."""
        assert seed(r03_p1, {(2, 1): 1}).is_seed()
        assert not AmbientPoly.paravector(r03_p1).is_seed()


class TestFormatting:
    """Tests for human-readable output."""

    def test_graded_order(self):
        """Lower total degree comes first."""
        alg = make_algebra("clifford", 2)
        f = AlgebraPoly(alg, 2, {(2, 0): element(alg, 3), (0, 1): element(alg, 1)})
        assert f.format() == "1*x1 + 3*x0^2"

    def test_algebra_coefficients_in_parentheses(self):
        """Non-real coefficients are parenthesized; custom names are used."""
        alg = make_algebra("clifford", 2)
        f = AlgebraPoly(alg, 1, {(1,): element(alg, {"e1": 2})})
        assert f.format(["u"]).startswith("(")
        assert f.format(["u"]).endswith(")*u")

    def test_zero(self):
        """The zero polynomial prints as 0."""
        assert AlgebraPoly.zero(make_algebra("clifford", 1), 3).format() == "0"


class TestPowerSums:
    """Tests for (y_1^2 + ... + y_n^2)^k."""

    def test_square_of_two_squares(self):
        """(y1^2 + y2^2)^2 = y1^4 + 2 y1^2 y2^2 + y2^4."""
        assert dict(power_sum_expansion(2, 2)) == {(4, 0): 1, (2, 2): 2, (0, 4): 1}

    def test_zeroth_power(self):
        """Power zero is the constant 1."""
        assert dict(power_sum_expansion(3, 0)) == {(0, 0, 0): 1}

    def test_coefficients_sum_to_n_to_the_k(self):
        """Evaluating at y = (1, ..., 1) gives n^k."""
        assert sum(c for _, c in power_sum_expansion(3, 3)) == 27


class TestAssociationTrees:
    """Tests for parenthesizations and ordered products."""

    def test_catalan_counts(self):
        """1, 1, 2, 5, 14 trees for 1..5 leaves."""
        assert [len(list(all_trees(k))) for k in range(1, 6)] == [1, 1, 2, 5, 14]

    def test_combs(self):
        """Left and right combs print as nested pairs."""
        assert str(AssocTree.left_comb(3)) == "((. .) .)"
        assert str(AssocTree.right_comb(3)) == "(. (. .))"

    def test_from_nested(self):
        """Nested pairs describe trees."""
        assert AssocTree.from_nested(((0, 1), 2)) == AssocTree.left_comb(3)
        with pytest.raises(AssocTreeError):
            AssocTree.from_nested((0, 1, 2))

    def test_half_node_rejected(self):
        """A node needs both children."""
        with pytest.raises(AssocTreeError):
            AssocTree(AssocTree.leaf(), None)

    def test_leaf_count_mismatch(self):
        """fold checks the operand count."""
        alg = make_algebra("clifford", 2)
        one = AlgebraPoly.constant(alg, 1, 1)
        with pytest.raises(AssocTreeError):
            assoc_product([one, one], AssocTree.left_comb(3))
        with pytest.raises(AssocTreeError):
            assoc_product([])

    def test_trees_agree_in_clifford(self, r03_p0):
        """All parenthesizations give the same product in an associative algebra."""
        x = AmbientPoly.paravector(r03_p0)
        xq = AmbientPoly.vector_part(r03_p0)
        factors = [x, xq, x, xq]
        products = {repr(assoc_product(factors, tree)) for tree in all_trees(4)}
        assert len(products) == 1

    def test_trees_differ_in_octonions(self):
        """Some triple of constant octonion polynomials depends on the tree."""
        alg = make_algebra("octonion")
        units = [AlgebraElement.basis(alg, i) for i in range(1, 8)]
        a, b, c = next(t for t in product(units, repeat=3) if not associator(*t).is_zero())
        factors = [AlgebraPoly.constant(alg, 1, e) for e in (a, b, c)]
        left = assoc_product(factors, AssocTree.left_comb(3))
        right = assoc_product(factors, AssocTree.right_comb(3))
        assert left != right
        assert left - right == AlgebraPoly.constant(alg, 1, associator(a, b, c))

    def test_real_factor_associates(self, oct_p0):
        """A real-coefficient factor can move between trees."""
        x = AmbientPoly.paravector(oct_p0)
        h = ambient(oct_p0, {(0, 1, 0, 0, 1): {"e2": 1, "e4": 1}})
        r = ambient(oct_p0, {(1, 0, 0, 0, 0): 2, (0, 0, 1, 0, 0): -1})
        for factors in ([r, x, h], [x, r, h], [x, h, r]):
            left = assoc_product(factors, AssocTree.left_comb(3))
            right = assoc_product(factors, AssocTree.right_comb(3))
            assert left == right
