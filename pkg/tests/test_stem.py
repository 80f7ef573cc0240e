"""
Tests for stem pairs: materialization, extraction and the representation formula.
"""

from fractions import Fraction

import pytest

from hyperck.algebra.setting import rational_sphere_point, sphere_point_from_parameters
from hyperck.errors import NotSliceFormError, VariableRangeError
from hyperck.poly.ambient import AmbientPoly
from hyperck.stem.pair import (
    StemPair,
    extract,
    is_slice_form,
    materialize,
    materialize_right,
    partial_even_odd,
    representation_check,
    representation_identity,
    seed_to_slots,
    slots_to_seed,
    spherical_parts,
    stem_coefficients,
    vector_power_times,
)
from tests.helpers import ambient, rho, seed, slots, stem, vector_part


def x_squared_stem(setting):
    """Stem of x^2 for p = 0: (x0^2 - u, 2 x0)."""
    return stem(setting, {(2, 0): 1, (0, 1): -1}, {(1, 0): 2})


class TestStemPair:
    """Tests for construction guards and evaluation."""

    def test_wrong_slot_count(self, r03_p0, r05_p2):
        """Components must have p + 2 slots."""
        with pytest.raises(VariableRangeError):
            StemPair(r03_p0, slots(r05_p2, {}), slots(r03_p0, {}))

    def test_values(self, r03_p0):
        """(F1, F2) at (x0, r) = (G1(x0, r^2), r G2(x0, r^2))."""
        F1, F2 = x_squared_stem(r03_p0).values([3], 2)
        assert F1.real_part == 5
        assert F2.real_part == 12

    def test_arithmetic(self, r03_p0):
        """Stems form a vector space."""
        S = x_squared_stem(r03_p0)
        assert (S - S).is_zero()
        assert (S + S) == S.scale(2)
        assert (-S).G2 == S.G2.scale(-1)


class TestMaterialize:
    """Tests for stem -> ambient."""

    def test_x_squared(self, r03_p0):
        """(x0^2 - u, 2 x0) materializes to x^2."""
        x = AmbientPoly.paravector(r03_p0)
        assert materialize(x_squared_stem(r03_p0)) == x * x

    def test_constant_stem(self, r05_p2):
        """A constant G1 with G2 = 0 stays constant."""
        S = StemPair.constant(r05_p2, 7)
        assert materialize(S) == AmbientPoly.constant_in(r05_p2, 7)

    def test_right_materialization(self, oct_p1):
        """G2 x_q against x_q G2 for a noncommuting coefficient."""
        S = stem(oct_p1, {}, {(0, 0, 0): {"e4": 1}})
        assert materialize(S) != materialize_right(S)
        assert materialize(S) + materialize_right(S) == ambient(oct_p1, {(0, 0, 0, 0, 1): -2})

    def test_vector_powers(self, r03_p0):
        """x_q^2 = -rho and x_q^3 = -rho x_q."""
        one = AmbientPoly.constant_in(r03_p0, 1)
        assert vector_power_times(r03_p0, 2, one) == -rho(r03_p0)
        assert vector_power_times(r03_p0, 3, one) == -(rho(r03_p0) * vector_part(r03_p0))


class TestExtract:
    """Tests for ambient -> stem."""

    def test_roundtrip_x_squared(self, r03_p0):
        """extract(x^2) recovers the stem."""
        x = AmbientPoly.paravector(r03_p0)
        assert extract(x * x) == x_squared_stem(r03_p0)

    def test_roundtrip_with_base_variables(self, r05_p2):
        """A stem with p = 2 and algebra coefficients survives materialize -> extract."""
        S = stem(
            r05_p2,
            {(1, 2, 0, 1): {"e1": 2, "1": Fraction(1, 3)}, (0, 0, 1, 0): {"e23": 1}},
            {(0, 1, 1, 2): {"e12": -1}, (2, 0, 0, 0): 5},
        )
        assert extract(materialize(S)) == S

    def test_single_vector_variable_is_not_slice(self, r02_p0):
        """x1 alone is not x_q times a function of rho when q = 2."""
        f = ambient(r02_p0, {(0, 1, 0): 1})
        with pytest.raises(NotSliceFormError) as excinfo:
            extract(f)
        assert excinfo.value.monomial is not None
        assert not is_slice_form(f)

    def test_q1_vector_variable_is_slice(self, r02_p1):
        """With q = 1, x2 e2 is the slice function x_q."""
        assert is_slice_form(vector_part(r02_p1))

    def test_non_radial_even_part(self, r03_p0):
        """x1^2 alone is not a polynomial in rho."""
        assert not is_slice_form(ambient(r03_p0, {(0, 2, 0, 0): 1}))


class TestEvenOdd:
    """Tests for the partial even and odd parts."""

    def test_x_squared_split(self, r03_p0):
        """PE[x^2] = x0^2 - rho and PO[x^2] = 2 x0 x_q."""
        x = AmbientPoly.paravector(r03_p0)
        even, odd = partial_even_odd(x * x)
        assert even == seed(r03_p0, {(2,): 1}) - rho(r03_p0)
        assert odd == vector_part(r03_p0) * ambient(r03_p0, {(1, 0, 0, 0): 2})

    def test_parts_sum_to_function(self, r05_p2):
        """PE + PO = f."""
        f = AmbientPoly.paravector(r05_p2) * ambient(r05_p2, {(0, 0, 1, 1, 0, 2): {"e5": 1}})
        even, odd = partial_even_odd(f)
        assert even + odd == f


class TestStemCoefficients:
    """Tests for the signed u-coefficients A_k."""

    def test_x_squared(self, r03_p0):
        """A_0 = x0^2, A_1 = 2 x0, A_2 = 1."""
        coeffs = stem_coefficients(x_squared_stem(r03_p0))
        assert coeffs == [
            seed(r03_p0, {(2,): 1}),
            seed(r03_p0, {(1,): 2}),
            seed(r03_p0, {(0,): 1}),
        ]

    def test_zero_stem(self, r03_p0):
        """The zero stem has no coefficients."""
        assert stem_coefficients(StemPair.zero(r03_p0)) == []


class TestSeedSlots:
    """Tests for moving seeds in and out of stem slots."""

    def test_roundtrip(self, r05_p2):
        """seed -> slots -> seed is the identity."""
        f0 = seed(r05_p2, {(1, 0, 2): {"e3": 1}, (0, 1, 0): 4})
        assert slots_to_seed(r05_p2, seed_to_slots(f0)) == f0

    def test_vector_variable_rejected(self, r03_p0):
        """A seed may not mention x_q."""
        with pytest.raises(VariableRangeError):
            seed_to_slots(vector_part(r03_p0))

    def test_u_rejected(self, r03_p0):
        """Slot polynomials containing u are not seeds."""
        with pytest.raises(VariableRangeError):
            slots_to_seed(r03_p0, slots(r03_p0, {(0, 1): 1}))


class TestSphericalParts:
    """Tests for the spherical value and derivative."""

    def test_x_squared(self, r03_p0):
        """f_s^o = x0^2 - rho and f_s' = 2 x0."""
        S = x_squared_stem(r03_p0)
        parts = spherical_parts(S)
        assert parts.value.G1 == S.G1
        assert parts.derivative.G1 == S.G2
        assert parts.value.G2.is_zero() and parts.derivative.G2.is_zero()


class TestRepresentationFormula:
    """Tests for the representation formula."""

    def test_holds_for_slice_stem(self, r03_p0):
        """A slice function is determined by two antipodal slice values."""
        omega = rational_sphere_point(r03_p0, 1)
        eta = rational_sphere_point(r03_p0, 2)
        assert representation_check(x_squared_stem(r03_p0), [Fraction(1, 2)], 3, omega, eta)

    def test_holds_in_octonions(self, oct_p1):
        """The formula is coefficientwise and holds for non-associative coefficients."""
        S = stem(oct_p1, {(1, 0, 1): {"e5": 1}}, {(0, 1, 0): {"e6": 2, "e7": 1}})
        omega = rational_sphere_point(oct_p1, 5)
        eta = rational_sphere_point(oct_p1, 6)
        assert representation_check(S, [2, Fraction(-1, 3)], Fraction(3, 2), omega, eta)

    def test_fails_for_non_slice_function(self, r02_p0):
        """x1 does not satisfy the formula in q = 2."""
        f = ambient(r02_p0, {(0, 1, 0): 1})
        omega = sphere_point_from_parameters([0])
        eta = sphere_point_from_parameters([Fraction(1, 2)])
        assert not representation_identity(f, [1], 2, omega, eta).holds

    def test_base_point_length(self, r03_p0):
        """The base point needs p + 1 coordinates."""
        omega = rational_sphere_point(r03_p0, 1)
        with pytest.raises(VariableRangeError):
            representation_check(x_squared_stem(r03_p0), [1, 2], 1, omega, omega)
