"""Local invariants: the intersection-multiplicity reduction, its
axioms, the Groebner oracle, and the uniqueness certificate."""

import random

import pytest

from foliant.errors import NotIsolatedError, NotSingularError
from foliant.foliation import (E0, E1, E2, ProjPoint, VectorField,
                               parse_vector_field)
from foliant.localgeom import (INFINITE, LocalPair, buchberger_oracle,
                               groebner_basis, has_isolated_singularities,
                               intersection_index_origin, milnor_at_point,
                               multiplicity_at_origin, oracle_groebner_basis,
                               singularity_report,
                               unique_singularity_certificate)
from foliant.poly import MPoly, gcd_bivariate, parse_poly

from conftest import rand_frame, rand_nonzero_mpoly

y = MPoly.variable(2, 0)
z = MPoly.variable(2, 1)


def _pair(f, g):
    return LocalPair(f, g)


class TestIntersectionIndexBasics:
    def test_coordinate_axes(self):
        assert intersection_index_origin(_pair(y, z)) == 1

    def test_multiplicativity(self):
        assert intersection_index_origin(_pair(y ** 2, z ** 3)) == 6

    def test_substitution(self):
        assert intersection_index_origin(_pair(y, y + z ** 2)) == 2

    def test_missing_origin(self):
        assert intersection_index_origin(_pair(y + 1, z)) == 0

    def test_common_branch_infinite(self):
        assert intersection_index_origin(_pair(y * z, y)) is INFINITE
        assert intersection_index_origin(_pair(MPoly.zero(2), y)) is INFINITE

    def test_unit_times_branch(self):
        # common factor not through the origin is harmless
        f = (y + 1) * z
        g = (y + 1) * (y - z)
        d = gcd_bivariate(f, g)
        assert d.coefficient((0, 0)) != 0
        assert intersection_index_origin(_pair(f, g)) == 1


class TestFultonAxioms:
    def test_symmetry(self, rng):
        for _ in range(50):
            f = rand_nonzero_mpoly(rng, 2, 3, vanish_at_origin=True)
            g = rand_nonzero_mpoly(rng, 2, 3, vanish_at_origin=True)
            assert (intersection_index_origin(_pair(f, g))
                    == intersection_index_origin(_pair(g, f)))

    def test_additivity_under_products(self, rng):
        for _ in range(40):
            f = rand_nonzero_mpoly(rng, 2, 3, vanish_at_origin=True)
            g = rand_nonzero_mpoly(rng, 2, 2, vanish_at_origin=True)
            h = rand_nonzero_mpoly(rng, 2, 2, vanish_at_origin=True)
            i_gh = intersection_index_origin(_pair(f, g * h))
            i_g = intersection_index_origin(_pair(f, g))
            i_h = intersection_index_origin(_pair(f, h))
            if INFINITE in (i_gh, i_g, i_h):
                assert i_gh is INFINITE and (i_g is INFINITE or i_h is INFINITE)
            else:
                assert i_gh == i_g + i_h

    def test_invariance_under_combination(self, rng):
        for _ in range(40):
            f = rand_nonzero_mpoly(rng, 2, 3, vanish_at_origin=True)
            g = rand_nonzero_mpoly(rng, 2, 3, vanish_at_origin=True)
            a = rand_nonzero_mpoly(rng, 2, 2)
            before = intersection_index_origin(_pair(f, g))
            after = intersection_index_origin(_pair(f, g + a * f))
            assert before == after or (before is INFINITE and after is INFINITE)

    def test_order_lower_bound(self, rng):
        from foliant.poly import order_of_vanishing

        for _ in range(40):
            f = rand_nonzero_mpoly(rng, 2, 3, vanish_at_origin=True)
            g = rand_nonzero_mpoly(rng, 2, 3, vanish_at_origin=True)
            i = intersection_index_origin(_pair(f, g))
            if i is INFINITE:
                continue
            of, og = order_of_vanishing(f), order_of_vanishing(g)
            assert i >= of * og
            lf = f.homogeneous_part(of)
            lg = g.homogeneous_part(og)
            if gcd_bivariate(lf, lg).degree == 0:
                assert i == of * og


class TestMultiplicity:
    def test_mult3_example(self):
        v = parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy")
        from foliant.foliation import local_representation

        pair = local_representation(v)
        assert multiplicity_at_origin(pair) == 3
        assert intersection_index_origin(pair) == 13

    def test_coordinate_pair(self):
        assert multiplicity_at_origin(_pair(y, z)) == 1

    def test_not_singular_rejected(self):
        with pytest.raises(NotSingularError):
            multiplicity_at_origin(_pair(y + 1, z))


class TestPaperValues:
    def test_all_catalog_milnor_numbers(self):
        from foliant.families import catalog

        for e in catalog():
            rep = singularity_report(e.field, e.point)
            assert rep.milnor == e.milnor
            assert rep.multiplicity == e.multiplicity
            assert rep.unique

    def test_milnor_requires_singular_point(self):
        v = parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy")
        with pytest.raises(NotSingularError):
            milnor_at_point(v, E2)

    def test_milnor_frame_invariance(self, rng):
        v = parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy")
        from foliant.foliation import act

        for _ in range(8):
            g = rand_frame(rng)
            assert milnor_at_point(act(g, v), g.apply_point(E0)) == 13


class TestUniqueness:
    def test_certificates(self):
        v = parse_vector_field("(y^3 + y^2*z - y*z^2 + z^3) d/dx + (z^3) d/dy")
        assert unique_singularity_certificate(v, E0)

    def test_multiple_singular_points(self):
        # singular at [0:0:1] and elsewhere, so no single point carries
        # the whole Milnor budget
        v = parse_vector_field("(y^3) d/dx + (x^3) d/dy")
        mu = milnor_at_point(v, E2)
        assert mu is not INFINITE and mu < 13
        assert unique_singularity_certificate(v, E2) is False

    def test_non_isolated_rejected(self):
        # components share the factor z
        v = parse_vector_field("(y^2*z) d/dx + (z^3) d/dy")
        assert not has_isolated_singularities(v)
        with pytest.raises(NotIsolatedError):
            unique_singularity_certificate(v, E0)


class TestOracle:
    def test_reduced_lex_basis_of_the_mult1_example(self):
        v = parse_vector_field(
            "(5*x*y*z - y^3 + 2*z^3) d/dx"
            " + (-3/2*x^2*y - 3/2*x*z^2 + 9/2*y^2*z) d/dy"
            " + (-3*x*y^2) d/dz")
        from foliant.foliation import local_representation

        pair = local_representation(v)
        basis = oracle_groebner_basis(pair)
        expected = sorted([z ** 13, y + z ** 2 - z ** 5 + 3 * z ** 11],
                          key=lambda q: max(q.terms))
        assert basis == expected
        assert buchberger_oracle(pair) == 13

    def test_axes(self):
        assert buchberger_oracle(_pair(y, z)) == 1

    def test_away_from_origin_component_discarded(self):
        # V(f, g) also contains (1, 1), (0, 1), (1, 0); only the origin
        # contributes to the local count
        f = y * (y - 1)
        g = z * (z - 1)
        assert buchberger_oracle(_pair(f, g)) == 1

    def test_matches_reduction_on_random_pairs(self, rng):
        checked = 0
        while checked < 30:
            f = rand_nonzero_mpoly(rng, 2, 4, n_terms=4, vanish_at_origin=True)
            g = rand_nonzero_mpoly(rng, 2, 4, n_terms=4, vanish_at_origin=True)
            if gcd_bivariate(f, g).degree != 0:
                continue
            assert buchberger_oracle(_pair(f, g)) == \
                intersection_index_origin(_pair(f, g))
            checked += 1

    def test_groebner_engine_basics(self):
        basis = groebner_basis([y ** 2 - z, z ** 2 - y])
        # lex basis eliminates y: contains a pure-z element
        assert any(all(e[0] == 0 for e in b.terms) for b in basis)
