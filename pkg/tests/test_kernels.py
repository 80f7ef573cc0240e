"""
Tests for Kelvin-type functions and the Cauchy kernels.
"""

import pytest

from hyperck.algebra.element import AlgebraElement
from hyperck.algebra.setting import rational_sphere_point
from hyperck.errors import KelvinParityError, VariableRangeError
from hyperck.kernels.cauchy import (
    poly_kernel,
    slice_cauchy_kernel,
    slice_frame,
    slice_poly_kernel,
    slice_unit,
)
from hyperck.kernels.kelvin import (
    KelvinFunction,
    kelvin_derivative,
    kelvin_dirac,
    kelvin_dirac_power,
    kelvin_dirac_right,
    kelvin_laplacian,
    norm_squared,
    radial_power,
)
from hyperck.poly.ambient import AlgebraPoly


class TestKelvinSpace:
    """Tests for arithmetic on N |x|^-s."""

    def test_derivative_raises_exponent(self, r03_p0):
        """d_0 |x|^-2 = -2 x0 |x|^-4."""
        K = radial_power(r03_p0.v, 2)
        d = kelvin_derivative(K, 0)
        assert d.s == 4
        expected = AlgebraPoly.variable(r03_p0.algebra, 4, 0, -2)
        assert d == KelvinFunction(K.units, expected, 4)

    def test_fundamental_solution(self, r03_p0):
        """|x|^-(m-1) is harmonic in m+1 variables."""
        assert kelvin_laplacian(radial_power(r03_p0.v, 2)).is_zero()
        assert not kelvin_laplacian(radial_power(r03_p0.v, 1)).is_zero()

    def test_sums_fold_to_common_power(self, r03_p0):
        """N |x|^-2 + N |x|^-4 keeps the larger power."""
        units = r03_p0.v
        a = radial_power(units, 2)
        b = radial_power(units, 4)
        total = a + b
        assert total.s == 4
        assert total.numerator == norm_squared(a.numerator) + a.numerator

    def test_mixed_parity(self, r03_p0):
        """Powers differing by an odd amount do not fold."""
        with pytest.raises(KelvinParityError):
            _ = radial_power(r03_p0.v, 2) + radial_power(r03_p0.v, 3)

    def test_equality_across_powers(self, r03_p0):
        """R |x|^-4 equals |x|^-2 as a function."""
        units = r03_p0.v
        low = radial_power(units, 2)
        high = KelvinFunction(units, norm_squared(low.numerator), 4)
        assert low == high
        assert low != radial_power(units, 3)

    def test_frame_size(self, r03_p0):
        """The frame needs one unit per variable."""
        with pytest.raises(VariableRangeError):
            KelvinFunction(r03_p0.v[:2], AlgebraPoly.constant(r03_p0.algebra, 4, 1), 0)

    def test_negative_dirac_power(self, r03_p0):
        with pytest.raises(VariableRangeError):
            kelvin_dirac_power(poly_kernel(r03_p0), -1)


class TestPolyKernels:
    """Tests for E^[k] on M."""

    def test_cauchy_kernel_is_monogenic(self, r03_p0):
        """conj(x) |x|^-(m+1) is annihilated by D from both sides."""
        E = poly_kernel(r03_p0)
        assert E.s == 4
        assert kelvin_dirac(E).is_zero()
        assert kelvin_dirac_right(E).is_zero()

    def test_cauchy_kernel_octonions(self, oct_p0):
        """The octonionic Cauchy kernel is monogenic."""
        assert kelvin_dirac(poly_kernel(oct_p0)).is_zero()

    def test_lowering(self, r05_p2):
        """D^n E^[k] = E^[k-n] for n < k and zero for n = k."""
        for k in range(1, 4):
            E = poly_kernel(r05_p2, k)
            for n in range(k):
                assert kelvin_dirac_power(E, n) == poly_kernel(r05_p2, k - n)
                assert kelvin_dirac_power(E, n, right=True) == poly_kernel(r05_p2, k - n)
            assert kelvin_dirac_power(E, k).is_zero()

    def test_order_guard(self, r03_p0):
        with pytest.raises(VariableRangeError):
            poly_kernel(r03_p0, 0)


class TestSliceKernels:
    """Tests for the slice Cauchy kernel in (x_0..x_p, r)."""

    def test_default_unit(self, r05_p2):
        """Without a sphere point the slice unit is v_{p+1}."""
        assert slice_unit(r05_p2) == r05_p2.v[3]
        assert len(slice_frame(r05_p2)) == 4

    def test_sphere_point_unit(self, r05_p2):
        """A sphere point gives an imaginary unit."""
        omega = rational_sphere_point(r05_p2, 11)
        w = slice_unit(r05_p2, omega)
        assert w * w == AlgebraElement.scalar(r05_p2.algebra, -1)

    def test_annihilated(self, r05_p2):
        """D_w kills the slice Cauchy kernel from both sides."""
        K = slice_cauchy_kernel(r05_p2)
        assert K.s == 4
        assert kelvin_dirac(K).is_zero()
        assert kelvin_dirac_right(K).is_zero()

    def test_annihilated_at_sphere_point(self, oct_p1):
        """The kernel with a rational sphere point is also regular."""
        omega = rational_sphere_point(oct_p1, 3)
        assert kelvin_dirac(slice_cauchy_kernel(oct_p1, omega)).is_zero()

    @pytest.mark.parametrize("seed", [1, 7, 11, "kernels"])
    def test_identities_at_any_sphere_point(self, r05_p2, seed):
        """Regularity and lowering hold with w from any rational sphere point, as with v_{p+1}."""
        omega = rational_sphere_point(r05_p2, seed)
        K = slice_cauchy_kernel(r05_p2, omega)
        assert kelvin_dirac(K).is_zero()
        assert kelvin_dirac_right(K).is_zero()
        K3 = slice_poly_kernel(r05_p2, 3, omega)
        assert kelvin_dirac(K3) == slice_poly_kernel(r05_p2, 2, omega)
        assert kelvin_dirac_power(K3, 2) == K

    def test_slice_lowering(self, r03_p1):
        """D_w lowers the slice kernel order by one."""
        K3 = slice_poly_kernel(r03_p1, 3)
        assert kelvin_dirac(K3) == slice_poly_kernel(r03_p1, 2)
        assert kelvin_dirac_power(K3, 2) == slice_cauchy_kernel(r03_p1)
        assert kelvin_dirac_power(K3, 3).is_zero()
