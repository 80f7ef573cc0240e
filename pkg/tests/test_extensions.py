"""
Tests for the CK, GCK and HGCK extensions and the Fueter polynomials.
"""

from fractions import Fraction

import pytest

from hyperck.algebra.element import conj
from hyperck.errors import SettingMismatchError, VariableRangeError
from hyperck.extensions.ck import ck_extend, ck_extend_right, restrict_to_base
from hyperck.extensions.fueter import (
    fueter_polynomial,
    fueter_variable,
    fueter_variable_right,
    multi_indices,
    seed_monomial,
    v_polynomial,
)
from hyperck.extensions.gck import (
    even_weight,
    gck_coefficients,
    gck_extend,
    gck_stem,
    hgck_extend,
    hgck_stem,
    initial_data,
    odd_weight,
)
from hyperck.operators.dirac import dirac, laplacian
from hyperck.operators.stem_ops import cr_check, vekua_check
from hyperck.poly.ambient import AmbientPoly
from hyperck.poly.assoc import AssocTree
from hyperck.stem.pair import materialize, materialize_right
from tests.helpers import ambient, rho, seed, stem, vector_part


class TestCK:
    """Tests for the Cauchy-Kovalevskaya extension."""

    def test_x0_squared(self, r03_p0):
        """CK[x0^2] = (x0^2 - u, 2 x0)."""
        assert ck_extend(seed(r03_p0, {(2,): 1})) == stem(r03_p0, {(2, 0): 1, (0, 1): -1}, {(1, 0): 2})

    def test_constant(self, r05_p2):
        """Constants extend to themselves."""
        S = ck_extend(seed(r05_p2, {(0, 0, 0): {"e4": 3}}))
        assert materialize(S) == ambient(r05_p2, {(0,) * 6: {"e4": 3}})

    def test_trace_and_regularity(self, r05_p2):
        """CK[f0] restricts to f0 and is GPS-regular."""
        f0 = seed(r05_p2, {(2, 1, 0): {"e1": 1, "e3": -2}, (0, 0, 3): Fraction(1, 2)})
        S = ck_extend(f0)
        assert restrict_to_base(materialize(S)) == f0
        assert cr_check(S)

    def test_octonion_regularity(self, oct_p1):
        """Regularity holds coefficientwise over the octonions."""
        f0 = seed(oct_p1, {(3, 1): {"e5": 1, "e7": 1}, (1, 0): {"e6": 2}})
        assert cr_check(ck_extend(f0))

    def test_seed_must_not_use_vector_variables(self, r03_p0):
        with pytest.raises(VariableRangeError):
            ck_extend(vector_part(r03_p0))

    def test_right_extension(self, r05_p2):
        """The right extension of x_1 is the right Fueter variable."""
        x1 = seed(r05_p2, {(0, 1, 0): 1})
        assert materialize_right(ck_extend_right(x1)) == fueter_variable_right(r05_p2, 1)

    def test_right_extension_of_x0_power(self, r03_p0):
        """For p = 0 the right and left extensions of x0^3 agree."""
        f0 = seed(r03_p0, {(3,): 1})
        assert materialize_right(ck_extend_right(f0)) == materialize(ck_extend(f0))


class TestGCK:
    """Tests for the generalized CK extension."""

    def test_weights(self):
        """c_1 = 1/(2q), d_1 = 1/(2(q+2)) and c_0 = d_0 = 1."""
        assert even_weight(3, 0) == odd_weight(3, 0) == 1
        assert even_weight(3, 1) == Fraction(1, 6)
        assert odd_weight(3, 1) == Fraction(1, 10)
        assert even_weight(3, 2) == Fraction(1, 6 * 4 * 5)

    def test_x0_in_q2(self, r02_p0):
        """GCK[x0] = x0 + x_q / 2 in R_{0,2}."""
        f = gck_extend(seed(r02_p0, {(1,): 1}))
        assert f == seed(r02_p0, {(1,): 1}) + vector_part(r02_p0, Fraction(1, 2))
        assert dirac(f).is_zero()

    def test_coefficients(self, r02_p0):
        """A_0 = x0 and A_1 = D_p x0 / q = 1/2."""
        coeffs = gck_coefficients(seed(r02_p0, {(1,): 1}))
        assert coeffs == [seed(r02_p0, {(1,): 1}), seed(r02_p0, {(0,): Fraction(1, 2)})]

    def test_monogenic_with_algebra_coefficients(self, r05_p2):
        """GCK of a Clifford-valued seed is monogenic and has trace A0."""
        A0 = seed(r05_p2, {(3, 0, 1): {"e2": 1}, (1, 2, 0): {"e13": 1, "1": 2}})
        f = gck_extend(A0)
        assert dirac(f).is_zero()
        assert restrict_to_base(f) == A0
        assert vekua_check(gck_stem(A0))

    def test_q1_is_ck(self, r02_p1):
        """With q = 1 the GCK and CK extensions coincide."""
        A0 = seed(r02_p1, {(2, 1): {"e1": 1}})
        assert gck_stem(A0) == ck_extend(A0)


class TestHGCK:
    """Tests for the harmonic generalized CK extension."""

    def test_x0_squared(self, r03_p0):
        """HGCK[x0^2, 0] = x0^2 - rho / q."""
        zero = AmbientPoly.zero_in(r03_p0)
        f = hgck_extend(seed(r03_p0, {(2,): 1}), zero)
        assert f == seed(r03_p0, {(2,): 1}) - rho(r03_p0).scale(Fraction(1, 3))
        assert laplacian(f).is_zero()

    def test_initial_data(self, r03_p0):
        """HGCK[A0, A1] has trace A0 and x_q-slope -q A1."""
        A0 = seed(r03_p0, {(2,): 1})
        A1 = seed(r03_p0, {(1,): 1})
        f = hgck_extend(A0, A1)
        trace, slope = initial_data(f)
        assert trace == A0
        assert slope == seed(r03_p0, {(1,): -3})

    def test_stem(self, r03_p0):
        """The stem carries the even and odd weights."""
        S = hgck_stem(seed(r03_p0, {(2,): 1}), seed(r03_p0, {(1,): 1}))
        assert S == stem(r03_p0, {(2, 0): 1, (0, 1): Fraction(-1, 3)}, {(1, 0): 1})

    def test_harmonic_in_octonions(self, oct_p1):
        """Harmonicity holds for octonion-valued seeds."""
        A0 = seed(oct_p1, {(2, 2): {"e5": 1}})
        A1 = seed(oct_p1, {(3, 0): {"e6": 1}, (0, 1): 1})
        assert laplacian(hgck_extend(A0, A1)).is_zero()

    def test_settings_must_agree(self, r03_p0, r03_p1):
        with pytest.raises(SettingMismatchError):
            hgck_stem(AmbientPoly.zero_in(r03_p0), AmbientPoly.zero_in(r03_p1))


class TestFueterVariables:
    """Tests for z_l and its right counterpart."""

    def test_z0_is_paravector(self, r03_p0):
        """z_0 = x."""
        assert fueter_variable(r03_p0, 0) == AmbientPoly.paravector(r03_p0)

    def test_variable_is_ck(self, r05_p2):
        """z_l = CK[x_l]."""
        for ell in range(3):
            x_ell = seed(r05_p2, {tuple(1 if i == ell else 0 for i in range(3)): 1})
            assert fueter_variable(r05_p2, ell) == materialize(ck_extend(x_ell))

    def test_right_variable_is_conjugate(self, r05_p2):
        """z_l^R is the coefficientwise conjugate of z_l for l >= 1."""
        for ell in (1, 2):
            assert fueter_variable_right(r05_p2, ell) == fueter_variable(r05_p2, ell).map_coefficients(conj)

    def test_index_range(self, r03_p0):
        with pytest.raises(VariableRangeError):
            fueter_variable(r03_p0, 1)


class TestFueterPolynomials:
    """Tests for P_k and V_k."""

    def test_degree_zero(self, r05_p2):
        """P_0 = 1."""
        assert fueter_polynomial(r05_p2, [0, 0, 0]) == AmbientPoly.constant_in(r05_p2, 1)

    def test_single_variable(self, r05_p2):
        """P_{e_l} = z_l."""
        assert fueter_polynomial(r05_p2, [0, 1, 0]) == fueter_variable(r05_p2, 1)

    def test_p_equals_v(self, r05_p2):
        """P_k = V_k = CK[x_p^k] / k!."""
        for k in ([1, 1, 0], [0, 2, 1], [1, 0, 1]):
            assert fueter_polynomial(r05_p2, k) == v_polynomial(r05_p2, k)

    def test_comb_independent_in_octonions(self, oct_p1):
        """Left and right combs give the same P_k."""
        k = [1, 2]
        left = fueter_polynomial(oct_p1, k, AssocTree.left_comb(3))
        right = fueter_polynomial(oct_p1, k, AssocTree.right_comb(3))
        assert left == right

    def test_negative_index(self, r05_p2):
        """Negative entries give the zero polynomial."""
        assert fueter_polynomial(r05_p2, [2, -1, 0]).is_zero()
        assert v_polynomial(r05_p2, [-1, 0, 0]).is_zero()

    def test_wrong_length(self, r05_p2):
        with pytest.raises(VariableRangeError):
            fueter_polynomial(r05_p2, [1, 1])

    def test_seed_monomial(self, r03_p1):
        """x_p^k as an ambient polynomial."""
        assert seed_monomial(r03_p1, [2, 1]) == seed(r03_p1, {(2, 1): 1})

    def test_multi_indices(self):
        """All multi-indices of a given order over 0..p."""
        assert multi_indices(1, 2) == [(0, 2), (1, 1), (2, 0)]
        assert len(multi_indices(2, 3)) == 10
