"""
Property-based tests for the algebra and polynomial laws.
"""

from hypothesis import assume, given, settings

from hyperck.algebra.descriptor import make_algebra
from hyperck.algebra.element import AlgebraElement, associator, conj, inverse, mul
from tests.strategies import elements, points, polys

CLIFFORD = make_algebra("clifford", 3)
OCTONIONS = make_algebra("octonion")

exact = settings(max_examples=40, deadline=None)


class TestCliffordLaws:
    """R_{0,3} is associative with an anti-involutive conjugation."""

    @exact
    @given(elements(CLIFFORD), elements(CLIFFORD), elements(CLIFFORD))
    def test_associative(self, a, b, c):
        assert mul(mul(a, b), c) == mul(a, mul(b, c))

    @exact
    @given(elements(CLIFFORD), elements(CLIFFORD))
    def test_conjugation_reverses_products(self, a, b):
        assert conj(mul(a, b)) == mul(conj(b), conj(a))

    @exact
    @given(elements(CLIFFORD), elements(CLIFFORD), elements(CLIFFORD))
    def test_distributive(self, a, b, c):
        assert mul(a, b + c) == mul(a, b) + mul(a, c)


class TestOctonionLaws:
    """The octonions are alternative, flexible and satisfy the Moufang identities."""

    @exact
    @given(elements(OCTONIONS), elements(OCTONIONS))
    def test_alternative(self, a, b):
        zero = AlgebraElement.zero(OCTONIONS)
        assert associator(a, a, b) == zero
        assert associator(a, b, b) == zero
        assert associator(a, b, a) == zero

    @exact
    @given(elements(OCTONIONS), elements(OCTONIONS), elements(OCTONIONS))
    def test_moufang(self, a, b, c):
        """a(b(ac)) = ((ab)a)c."""
        assert mul(a, mul(b, mul(a, c))) == mul(mul(mul(a, b), a), c)

    @exact
    @given(elements(OCTONIONS), elements(OCTONIONS), elements(OCTONIONS))
    def test_associator_alternates(self, a, b, c):
        assert associator(a, b, c) == -associator(b, a, c)

    @exact
    @given(elements(OCTONIONS), elements(OCTONIONS))
    def test_conjugation_reverses_products(self, a, b):
        assert conj(mul(a, b)) == mul(conj(b), conj(a))

    @exact
    @given(elements(OCTONIONS))
    def test_inverse(self, a):
        """Nonzero octonions are invertible from both sides."""
        assume(not a.is_zero())
        one = AlgebraElement.one(OCTONIONS)
        assert mul(a, inverse(a)) == one
        assert mul(inverse(a), a) == one


class TestPolynomialLaws:
    """Calculus and evaluation on polynomials with octonion coefficients."""

    @exact
    @given(polys(OCTONIONS, 2), polys(OCTONIONS, 2))
    def test_leibniz(self, f, g):
        for i in range(2):
            assert (f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i)

    @exact
    @given(polys(OCTONIONS, 3, degree=3))
    def test_derivatives_commute(self, f):
        assert f.derivative(0).derivative(2) == f.derivative(2).derivative(0)

    @exact
    @given(polys(OCTONIONS, 2), polys(OCTONIONS, 2), points(2))
    def test_evaluation_multiplicative(self, f, g, point):
        """Real variables commute and associate with every coefficient."""
        assert (f * g).evaluate(point) == mul(f.evaluate(point), g.evaluate(point))

    @exact
    @given(polys(CLIFFORD, 2), polys(CLIFFORD, 2), polys(CLIFFORD, 2))
    def test_clifford_products_associate(self, f, g, h):
        assert (f * g) * h == f * (g * h)

    @exact
    @given(polys(CLIFFORD, 3))
    def test_conjugation_is_involutive(self, f):
        assert f.conj().conj() == f
