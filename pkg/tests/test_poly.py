"""Polynomial layer: exact ring operations, derived operations, gcd and
the two pinned resultant conventions."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from foliant.errors import DegenerateResultantError, PolynomialSyntaxError
from foliant.poly import (MINUS_INFINITY, MPoly, dehomogenize, divide_exact,
                          format_poly, gcd_bivariate, gcd_multivariate,
                          homogeneous_decomposition, order_of_vanishing,
                          parse_poly, partial_derivative, primitive_scale,
                          rational_root, resultant_binary_forms,
                          resultant_in_variable, substitute_linear)
from foliant import linalg

from conftest import rand_frac, rand_mpoly, rand_nonzero_mpoly, rand_homogeneous

X = MPoly.variable(3, 0)
Y = MPoly.variable(3, 1)
Z = MPoly.variable(3, 2)
y = MPoly.variable(2, 0)
z = MPoly.variable(2, 1)


class TestRingOps:
    def test_difference_of_squares(self):
        assert (y + z) * (y - z) == y ** 2 - z ** 2

    def test_binomial_fourth_power(self):
        assert (y + 2 * z) ** 4 == (y ** 4 + 8 * y ** 3 * z
                                    + 24 * y ** 2 * z ** 2
                                    + 32 * y * z ** 3 + 16 * z ** 4)

    def test_additive_identity(self):
        p = 3 * y ** 2 - z
        assert p + MPoly.zero(2) == p

    def test_mixed_variable_counts_rejected(self):
        with pytest.raises(ValueError):
            _ = y + X

    def test_scalar_ops(self):
        p = y ** 2
        assert 2 * p - p == p
        assert (p / 2) * 2 == p
        assert -p + p == MPoly.zero(2)


@st.composite
def mpolys(draw, nvars=2, max_deg=3):
    n = draw(st.integers(min_value=1, max_value=4))
    terms = {}
    for _ in range(n):
        e = tuple(draw(st.integers(min_value=0, max_value=max_deg))
                  for _ in range(nvars))
        if sum(e) > max_deg:
            continue
        terms[e] = F(draw(st.integers(min_value=-6, max_value=6)),
                     draw(st.integers(min_value=1, max_value=3)))
    return MPoly(nvars, terms)


class TestRingAxioms:
    @settings(max_examples=60, deadline=None)
    @given(mpolys(), mpolys(), mpolys())
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=60, deadline=None)
    @given(mpolys(), mpolys())
    def test_commutativity(self, a, b):
        assert a + b == b + a
        assert a * b == b * a


class TestDerivative:
    def test_power_rule(self):
        assert partial_derivative(X ** 3, 0) == 3 * X ** 2

    def test_linearity(self):
        assert partial_derivative(Y ** 3 + X * Y * Z, 1) == 3 * Y ** 2 + X * Z

    def test_constant(self):
        assert partial_derivative(MPoly.const(3, 5), 2) == MPoly.zero(3)


class TestSubstitution:
    def test_identity(self):
        assert substitute_linear(X, linalg.identity(3)) == X

    def test_permutation(self):
        m = linalg.mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
        assert substitute_linear(Y ** 3, m) == X ** 3

    def test_diagonal(self):
        m = linalg.mat([[2, 0, 0], [0, F(1, 2), 0], [0, 0, 1]])
        assert substitute_linear(X + Y, m) == 2 * X + Y / 2

    def test_inverse_round_trip(self):
        rng = random.Random(11)
        for _ in range(25):
            p = rand_mpoly(rng, 3, 3)
            while True:
                m = [[rand_frac(rng) for _ in range(3)] for _ in range(3)]
                if linalg.det(linalg.mat(m)) != 0:
                    break
            m = linalg.mat(m)
            q = substitute_linear(substitute_linear(p, m), linalg.inverse(m))
            assert q == p


class TestDehomogenize:
    def test_chart_zero(self):
        assert dehomogenize(X ** 2 * Y, 0) == y

    def test_paper_cubic(self):
        p = Y ** 3 + Y ** 2 * Z - Y * Z ** 2 + Z ** 3
        assert dehomogenize(p, 0) == y ** 3 + y ** 2 * z - y * z ** 2 + z ** 3

    def test_chart_two(self):
        assert dehomogenize(Z ** 3, 2) == MPoly.const(2, 1)

    def test_commutes_with_relabeling(self):
        # swapping y and z upstairs matches swapping the two chart
        # variables downstairs
        rng = random.Random(5)
        swap = linalg.mat([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
        for _ in range(20):
            p = rand_mpoly(rng, 3, 3)
            lhs = dehomogenize(substitute_linear(p, swap), 0)
            q = dehomogenize(p, 0)
            rhs = MPoly(2, {(e[1], e[0]): c for e, c in q.terms.items()})
            assert lhs == rhs


class TestDecomposition:
    def test_three_parts(self):
        assert homogeneous_decomposition(y + y ** 2 + z ** 3) == [y, y ** 2, z ** 3]

    def test_zero(self):
        assert homogeneous_decomposition(MPoly.zero(2)) == []

    def test_sum_reconstructs(self, rng):
        for _ in range(30):
            p = rand_mpoly(rng, 2, 4, n_terms=6)
            total = MPoly.zero(2)
            degs = []
            for part in homogeneous_decomposition(p):
                assert part.is_homogeneous() and not part.is_zero()
                degs.append(part.degree)
                total = total + part
            assert total == p
            assert degs == sorted(degs)


class TestOrders:
    def test_total_order(self):
        p = z ** 3 - y ** 4 - y ** 3 * z + y ** 2 * z ** 2 - y * z ** 3
        assert order_of_vanishing(p) == 3

    def test_in_variable(self):
        assert order_of_vanishing(y ** 2 * z ** 3 + y * z ** 4, 1) == 3

    def test_zero_polynomial(self):
        assert order_of_vanishing(MPoly.zero(2)) is MINUS_INFINITY
        assert MPoly.zero(2).degree is MINUS_INFINITY


class TestGcd:
    def test_linear_factor(self):
        assert gcd_bivariate(y ** 2 - z ** 2, y - z) == y - z

    def test_coprime_variables(self):
        assert gcd_bivariate(y, z) == MPoly.const(2, 1)

    def test_cube_against_product(self):
        a = (y + z) ** 3
        b = z * (y + z + y ** 2 + z ** 2)
        assert gcd_bivariate(a, b) == MPoly.const(2, 1)

    def test_common_factor_extracted(self):
        a = (y + z) ** 2 * (y - z) * F(3, 7)
        b = (y + z) * z * 5
        assert gcd_bivariate(a, b) == y + z

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd_bivariate(MPoly.zero(2), MPoly.zero(2))

    def test_trivariate(self):
        a = (X + Y) * (Y - Z)
        b = (X + Y) * Z
        g = gcd_multivariate(a, b)
        assert g == X + Y

    def test_random_products(self, rng):
        for _ in range(20):
            g = rand_nonzero_mpoly(rng, 2, 2, n_terms=3)
            a = g * rand_nonzero_mpoly(rng, 2, 2, n_terms=2)
            b = g * rand_nonzero_mpoly(rng, 2, 2, n_terms=2)
            d = gcd_bivariate(a, b)
            divide_exact(a, d)
            divide_exact(b, d)
            divide_exact(d, gcd_bivariate(d, g))  # g divides the gcd

    def test_primitive_scale(self):
        p = F(3, 2) * y + F(9, 4) * z
        q = primitive_scale(p)
        assert q == 2 * y + 3 * z


class TestResultants:
    def test_linear_pair_pinned_value(self):
        assert resultant_in_variable(y + z, y - z, 1) == -2 * y

    def test_common_root(self):
        assert resultant_in_variable(z ** 2, z ** 3, 1) == MPoly.zero(2)

    def test_degenerate(self):
        with pytest.raises(DegenerateResultantError):
            resultant_in_variable(y, y - z, 1)

    def test_binary_forms_pinned_value(self):
        assert resultant_binary_forms(y + 2 * z, y ** 3) == -8

    def test_binary_forms_shared_root(self):
        q = -8 * y ** 2 * z - 24 * y * z ** 2 - 16 * z ** 3
        assert resultant_binary_forms(y + 2 * z, q) == 0

    def test_binary_forms_no_shared_root(self):
        assert resultant_binary_forms(y + z, y ** 2 + z ** 2) != 0

    def test_zero_form_rejected(self):
        with pytest.raises(ValueError):
            resultant_binary_forms(MPoly.zero(2), y)

    def test_root_at_infinity(self):
        # both forms divisible by y: shared projective root [0:1]
        assert resultant_binary_forms(y, y * z) == 0

    def test_vanishes_iff_gcd_nonconstant(self, rng):
        hits = 0
        for _ in range(60):
            f = rand_homogeneous(rng, 2, rng.randint(1, 4))
            g = rand_homogeneous(rng, 2, rng.randint(1, 4))
            if f.is_zero() or g.is_zero():
                continue
            res = resultant_binary_forms(f, g)
            common = gcd_bivariate(f, g).degree > 0
            assert (res == 0) == common
            hits += common
        assert hits > 0  # the sample exercised both branches


class TestParsePrint:
    def test_round_trip(self, rng):
        for _ in range(40):
            p = rand_mpoly(rng, 3, 4, n_terms=5)
            assert parse_poly(format_poly(p), 3) == p

    def test_fraction_coefficients(self):
        p = parse_poly("-3/2*x^2*y + z^3", 3)
        assert p.coefficient((2, 1, 0)) == F(-3, 2)
        assert p.coefficient((0, 0, 3)) == 1

    def test_implicit_star(self):
        assert parse_poly("2x", 3) == 2 * X
        assert parse_poly("3y^2z", 2) == 3 * y ** 2 * z

    def test_syntax_error_position(self):
        with pytest.raises(PolynomialSyntaxError) as exc:
            parse_poly("y + w", 2)
        assert exc.value.position == 4

    def test_float_rejected(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_poly("1.5*y", 2)

    def test_zero_denominator(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_poly("1/0*y", 2)


class TestRationalRoot:
    def test_exact_roots(self):
        assert rational_root(F(8, 27), 3) == F(2, 3)
        assert rational_root(F(-8), 3) == -2
        assert rational_root(F(9, 4), 2) == F(3, 2)

    def test_no_root(self):
        assert rational_root(F(2), 2) is None
        assert rational_root(F(-4), 2) is None
