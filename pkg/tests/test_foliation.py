"""Vector fields, the radial equivalence, coordinate changes and the
local representation."""

import random
from fractions import Fraction as F

import pytest

from foliant import linalg
from foliant.errors import (MixedDegreeError, NullFoliationError,
                            PolynomialSyntaxError)
from foliant.foliation import (E0, E1, E2, Foliation, Frame, ProjPoint,
                               VectorField, act, divergence, dual_form,
                               foliations_equal, format_vector_field,
                               frame_to_point, gamma_basis, is_singular_at,
                               local_representation, parse_vector_field,
                               radial_field, z_reduce)
from foliant.poly import MPoly, parse_poly
from foliant.stability import weight_of_monomial

from conftest import rand_frame, rand_homogeneous

X = MPoly.variable(3, 0)
Y = MPoly.variable(3, 1)
Z = MPoly.variable(3, 2)


class TestParsing:
    def test_omitted_component(self):
        v = parse_vector_field("(y^3) d/dx + (z^3) d/dy")
        assert v.P == Y ** 3 and v.Q == Z ** 3 and v.R.is_zero()
        assert v.degree == 3

    def test_radial(self):
        v = parse_vector_field("(x) d/dx + (y) d/dy + (z) d/dz")
        assert v.degree == 1
        assert foliations_equal == foliations_equal  # sanity import
        with pytest.raises(NullFoliationError):
            z_reduce(v)

    def test_mixed_degrees_rejected(self):
        with pytest.raises(MixedDegreeError):
            parse_vector_field("(x^2) d/dx + (y^3) d/dy")

    def test_inhomogeneous_rejected(self):
        with pytest.raises(MixedDegreeError):
            parse_vector_field("(x^2 + y) d/dx")

    def test_comments_and_repeats(self):
        v = parse_vector_field("# a comment\n(y^2) d/dx\n + (z^2) d/dx")
        assert v.P == Y ** 2 + Z ** 2

    def test_round_trip(self):
        text = "(x*y^2 - 2*x*y*z) d/dx + (y^3 + 3*z^3) d/dy + (x^2*y) d/dz"
        v = parse_vector_field(text)
        assert parse_vector_field(format_vector_field(v)) == v

    def test_syntax_errors(self):
        with pytest.raises(PolynomialSyntaxError):
            parse_vector_field("(y^2 d/dx")
        with pytest.raises(PolynomialSyntaxError):
            parse_vector_field("(y^2) d/dw")
        with pytest.raises(NullFoliationError):
            parse_vector_field("(0) d/dx")


class TestDivergence:
    def test_single_component(self):
        v = VectorField(3, X ** 3, MPoly.zero(3), MPoly.zero(3))
        assert divergence(v) == 3 * X ** 2

    def test_no_diagonal_terms(self):
        v = parse_vector_field("(y^3) d/dx + (z^3) d/dy")
        assert divergence(v).is_zero()

    def test_euler_identity_radial_multiples(self, rng):
        # div(G * E) = (deg G + 3) * G
        for deg in (1, 2, 3):
            g = rand_homogeneous(rng, 3, deg)
            if g.is_zero():
                continue
            e = radial_field()
            v = VectorField(deg + 1, g * e.P, g * e.Q, g * e.R)
            assert divergence(v) == (deg + 3) * g


class TestZReduce:
    def test_already_reduced(self):
        v = parse_vector_field("(z^3) d/dx + (y^3) d/dz")
        assert z_reduce(v).rep == v

    def test_radial_is_null(self):
        with pytest.raises(NullFoliationError):
            z_reduce(radial_field())

    def test_degree_two_example(self):
        # R = z^2 forces G = z; the reduced representative follows the
        # formula (P - xG, Q - yG, R|_{z=0}) and stays equivalent
        v = parse_vector_field("(-y^2) d/dx + (y*z - z^2) d/dy + (z^2) d/dz")
        red = z_reduce(v).rep
        assert red.P == -Y ** 2 - X * Z
        assert red.Q == -Z ** 2
        assert red.R.is_zero()
        # re-adding z * E recovers the input exactly
        assert red.P + X * Z == v.P
        assert red.Q + Y * Z == v.Q
        assert red.R + Z * Z == v.R

    def test_idempotent_and_class_invariant(self, rng):
        for _ in range(20):
            d = rng.choice((2, 3))
            comps = [rand_homogeneous(rng, 3, d) for _ in range(3)]
            try:
                v = VectorField(d, *comps)
                fol = z_reduce(v)
            except NullFoliationError:
                continue
            assert z_reduce(fol.rep).rep == fol.rep
            g = rand_homogeneous(rng, 3, d - 1)
            e = radial_field()
            shifted = VectorField(d, v.P + g * e.P, v.Q + g * e.Q,
                                  v.R + g * e.R)
            try:
                fol2 = z_reduce(shifted)
            except NullFoliationError:
                continue
            assert foliations_equal(fol.rep, fol2.rep)


class TestAct:
    def test_identity(self, rng):
        v = parse_vector_field("(y^3) d/dx + (z^3) d/dy")
        assert act(Frame.identity(), v) == v

    def test_permutation_relabels(self):
        v = VectorField(3, Y ** 3, MPoly.zero(3), MPoly.zero(3))
        g = Frame.permutation((1, 0, 2))  # swap x and y
        w = act(g, v)
        assert w.Q == X ** 3 and w.P.is_zero()

    def test_torus_scaling_matches_weights(self):
        # acting by diag(t, 1, 1/t) scales each monomial coordinate by
        # t to the pairing of its weight with (1, 0, -1)
        t = F(2)
        g = Frame.diagonal(t, 1, 1 / t)
        for b in gamma_basis(3):
            w = act(g, b)
            for comp, (c, c2) in enumerate(zip(b.components, w.components)):
                for e, coeff in c.terms.items():
                    wt = weight_of_monomial(e, comp)
                    pairing = wt.w[0] - wt.w[2]
                    assert c2.coefficient(e) == coeff * t ** pairing

    def test_group_action_on_classes(self, rng):
        v = parse_vector_field(
            "(x*y^2 - y^3) d/dx + (y^3 + x*z^2) d/dy + (x^2*y) d/dz")
        for _ in range(10):
            g, h = rand_frame(rng), rand_frame(rng)
            lhs = act(g.compose(h), v)
            rhs = act(g, act(h, v))
            assert foliations_equal(lhs, rhs)
        s = Frame.diagonal(3, 3, 3)
        assert foliations_equal(act(s, v), v)

    def test_degree_preserved(self, rng):
        v = parse_vector_field("(y^3 + y^2*z) d/dx + (z^3) d/dy")
        for _ in range(5):
            assert act(rand_frame(rng), v).degree == 3


class TestSingularAt:
    def test_mult3_example_origin_chart(self):
        v = parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy")
        assert is_singular_at(v, E0)

    def test_ss_example_not_singular_at_e1(self):
        from foliant.families import catalog_entry

        v = catalog_entry("deg3-ss").field
        # the y^3 coefficient of P is nonzero, so [0:1:0] is regular
        assert v.P.coefficient((0, 3, 0)) != 0
        assert not is_singular_at(v, E1)

    def test_proportional_value(self):
        v = radial_field()
        assert is_singular_at(v, ProjPoint.of(1, 2, 3))

    def test_equivariance(self, rng):
        v = parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy")
        pts = [E0, E1, E2, ProjPoint.of(1, 2, 3), ProjPoint.of(1, -1, 2)]
        for _ in range(10):
            g = rand_frame(rng)
            w = act(g, v)
            for p in pts:
                assert is_singular_at(v, p) == is_singular_at(w, g.apply_point(p))


class TestFrameToPoint:
    def test_origin_point_identity(self):
        assert frame_to_point(E0).matrix == linalg.identity(3)

    def test_coordinate_point_permutation(self):
        m = frame_to_point(E2).matrix
        assert sorted(m) == sorted(linalg.permutation_matrix((1, 2, 0)))
        assert frame_to_point(E2).apply_point(E0) == E2

    def test_generic_point(self):
        p = ProjPoint.of(1, 2, 3)
        g = frame_to_point(p)
        assert g.apply_point(E0) == p
        assert tuple(row[0] for row in g.matrix) == p.coords


class TestLocalRepresentation:
    def test_mult3_example(self):
        v = parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy")
        pair = local_representation(v)
        assert pair.f == parse_poly("-y^4 - y^3*z + y^2*z^2 - y*z^3 + z^3", 2)
        assert pair.g == parse_poly("-y^3*z - y^2*z^2 + y*z^3 - z^4", 2)

    def test_ss_example(self):
        from foliant.families import catalog_entry

        pair = local_representation(catalog_entry("deg3-ss").field)
        assert pair.f == parse_poly(
            "5*y^4 + 12*y^3*z + y^2*z^2 + 10*y*z^3 + 4*y^2*z + 3*y*z^2"
            " + 3*z^3 + y*z + z^2", 2)
        assert pair.g == parse_poly(
            "5*y^3*z + 12*y^2*z^2 + y*z^3 + 10*z^4 - y^2*z + 2*y*z^2"
            " + 3*z^3", 2)

    def test_pure_p_component(self):
        v = VectorField(2, X ** 2, MPoly.zero(3), MPoly.zero(3))
        pair = local_representation(v)
        assert pair.f == -MPoly.variable(2, 0)
        assert pair.g == -MPoly.variable(2, 1)

    def test_vanishing_iff_singular(self, rng):
        for _ in range(15):
            comps = [rand_homogeneous(rng, 3, 2) for _ in range(3)]
            try:
                v = VectorField(2, *comps)
            except NullFoliationError:
                continue
            pair = local_representation(v)
            vanishes = (pair.f.coefficient((0, 0)) == 0
                        and pair.g.coefficient((0, 0)) == 0)
            assert vanishes == is_singular_at(v, E0)

    def test_radial_shift_invariance(self, rng):
        v = parse_vector_field("(y^3) d/dx + (z^3) d/dy")
        g = rand_homogeneous(rng, 3, 2)
        e = radial_field()
        w = VectorField(3, v.P + g * e.P, v.Q + g * e.Q, v.R + g * e.R)
        p1, p2 = local_representation(v), local_representation(w)
        assert p1.f == p2.f and p1.g == p2.g


class TestGammaBasis:
    @pytest.mark.parametrize("d,count", [(1, 8), (2, 15), (3, 24)])
    def test_counts(self, d, count):
        basis = gamma_basis(d)
        assert len(basis) == count == d * d + 4 * d + 3

    def test_z_reduced_and_distinct(self):
        seen = set()
        for b in gamma_basis(3):
            fol = Foliation(b)  # raises if not z-reduced
            (coords,) = [fol.coordinates()]
            assert len(coords) == 1
            seen.add((coords[0][0], coords[0][1]))
        assert len(seen) == 24


class TestDualForm:
    def test_euler_relation(self, rng):
        for _ in range(10):
            comps = [rand_homogeneous(rng, 3, 3) for _ in range(3)]
            try:
                v = VectorField(3, *comps)
            except NullFoliationError:
                continue
            a, b, c = dual_form(v)
            assert (X * a + Y * b + Z * c).is_zero()

    def test_radial_blind(self, rng):
        v = parse_vector_field("(y^3) d/dx + (z^3) d/dy")
        g = rand_homogeneous(rng, 3, 2)
        e = radial_field()
        w = VectorField(3, v.P + g * e.P, v.Q + g * e.Q, v.R + g * e.R)
        assert dual_form(v) == dual_form(w)
