import random
from fractions import Fraction as F

import pytest

from singvol import (
    DomainError,
    InputError,
    MonomialIdeal,
    ToricCone,
    ToricDivisor,
    UnsupportedDimensionError,
    defect_ideal,
    envelope_certificate,
    envelope_value,
    hilbert_basis,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_numerically_cartier,
    izumi_constant,
    log_discrepancy_value,
    maximal_ideal,
    mixed_multiplicity,
    module_generators,
    ord_value,
    samuel_multiplicity,
    z_value,
)

from conftest import random_m_primary_ideal

D_SUM = (2, 1, 2, 1)
D_ONE = (1, 1, 1, 0)
D_TWO = (1, 0, 1, 1)


class TestConeConstruction:
    def test_quadric_facets(self, quadric):
        assert set(quadric.facet_normals) == {
            (1, 0, 0),
            (0, 1, 0),
            (0, 1, 1),
            (1, 0, 1),
        }
        assert quadric.isolated_checked

    def test_plane_is_self_dual(self, plane):
        assert set(plane.facet_normals) == {(1, 0), (0, 1)}

    def test_rejects_non_primitive_ray(self):
        with pytest.raises(InputError, match="divide by gcd"):
            ToricCone([(2, 2), (0, 1)])

    def test_rejects_duplicates(self):
        with pytest.raises(InputError, match="duplicate"):
            ToricCone([(1, 0), (1, 0), (0, 1)])

    def test_rejects_lower_dimensional(self):
        with pytest.raises(DomainError, match="full-dimensional"):
            ToricCone([(1, 0)])

    def test_rejects_line(self):
        with pytest.raises(DomainError, match="strongly convex|line"):
            ToricCone([(1, 0), (-1, 0), (0, 1)])

    def test_rejects_redundant_ray(self, quadric):
        with pytest.raises(DomainError, match="extreme"):
            ToricCone([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1), (1, 1, 0)])

    def test_rejects_non_isolated_three_fold(self):
        # An A1 surface singularity times a line: one facet is not smooth.
        with pytest.raises(DomainError, match="not isolated|singular"):
            ToricCone([(1, 0, 0), (1, 2, 0), (0, 0, 1)])

    def test_higher_dimension_skips_isolated_check(self):
        cone = ToricCone([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        assert not cone.isolated_checked

    def test_membership(self, quadric):
        assert quadric.contains((1, 1, 0))
        assert quadric.interior_contains((1, 1, 0))
        assert quadric.contains((1, 0, 0))
        assert not quadric.interior_contains((1, 0, 0))
        assert not quadric.contains((0, 0, -1))


class TestEnvelope:
    def test_cartier_sum_value(self, quadric):
        divisor = ToricDivisor(quadric, D_SUM)
        assert envelope_value(quadric, divisor, (1, 1, 0)) == 3

    def test_zero_divisor(self, quadric):
        divisor = ToricDivisor(quadric, (0, 0, 0, 0))
        for v in [(1, 1, 0), (1, 0, 0), (2, 3, -1)]:
            if quadric.contains(v):
                assert envelope_value(quadric, divisor, v) == 0

    def test_summand_values(self, quadric):
        assert envelope_value(quadric, ToricDivisor(quadric, D_ONE), (1, 1, 0)) == 1
        assert envelope_value(quadric, ToricDivisor(quadric, D_TWO), (1, 1, 0)) == 1

    def test_outside_cone_raises(self, quadric):
        with pytest.raises(DomainError, match="outside"):
            envelope_value(quadric, ToricDivisor(quadric, D_SUM), (0, 0, -1))

    def test_trace_property(self, quadric):
        for coeffs in [D_SUM, D_ONE, D_TWO, (3, -2, 5, 0)]:
            divisor = ToricDivisor(quadric, coeffs)
            for ray, d in zip(quadric.rays, coeffs):
                assert envelope_value(quadric, divisor, ray) == d

    def test_superadditivity_with_strict_case(self, quadric):
        d1 = ToricDivisor(quadric, D_ONE)
        d2 = ToricDivisor(quadric, D_TWO)
        total = d1 + d2
        for v in [(1, 1, 0), (1, 1, 1), (2, 1, 0), (1, 2, -1)]:
            lhs = envelope_value(quadric, total, v)
            rhs = envelope_value(quadric, d1, v) + envelope_value(quadric, d2, v)
            assert lhs >= rhs
        gap = envelope_value(quadric, total, (1, 1, 0)) - (
            envelope_value(quadric, d1, (1, 1, 0))
            + envelope_value(quadric, d2, (1, 1, 0))
        )
        assert gap == 1

    def test_homogeneity(self, quadric):
        divisor = ToricDivisor(quadric, D_ONE)
        value = envelope_value(quadric, divisor, (1, 1, 0))
        for t in [F(2), F(1, 2), F(7, 3), F(0)]:
            assert envelope_value(quadric, divisor.scale(t), (1, 1, 0)) == t * value

    def test_monotonicity(self, quadric):
        smaller = ToricDivisor(quadric, (1, 0, 1, 0))
        larger = ToricDivisor(quadric, (2, 1, 2, 1))
        for v in [(1, 1, 0), (1, 1, 1), (1, 0, 1)]:
            assert envelope_value(quadric, smaller, v) <= envelope_value(
                quadric, larger, v
            )

    def test_certificate_is_feasible(self, quadric):
        divisor = ToricDivisor(quadric, D_SUM)
        value, point = envelope_certificate(quadric, divisor, (1, 1, 0))
        assert value == 3
        for ray, d in zip(quadric.rays, divisor.coeffs):
            assert sum(m * x for m, x in zip(point, ray)) <= d


class TestEnvelopeFunction:
    def test_wrapper_matches_free_functions(self, quadric):
        from singvol import EnvelopeFunction

        divisor = ToricDivisor(quadric, D_SUM)
        env = EnvelopeFunction(quadric, divisor)
        assert env.value((1, 1, 0)) == 3
        value, point = env.certificate((1, 1, 0))
        assert value == 3
        for ray, d in zip(quadric.rays, divisor.coeffs):
            assert sum(m * x for m, x in zip(point, ray)) <= d


class TestNumericallyCartier:
    def test_cartier_certificate(self, quadric):
        result = is_numerically_cartier(quadric, ToricDivisor(quadric, D_SUM))
        assert result.is_numerically_cartier
        assert result.certificate == (2, 1, 2)

    def test_non_cartier_witness(self, quadric):
        result = is_numerically_cartier(quadric, ToricDivisor(quadric, D_ONE))
        assert not result.is_numerically_cartier
        assert quadric.interior_contains(result.witness)
        assert result.gap < 0
        recomputed = envelope_value(
            quadric, ToricDivisor(quadric, D_ONE), result.witness
        ) + envelope_value(quadric, ToricDivisor(quadric, tuple(-c for c in D_ONE)), result.witness)
        assert recomputed == result.gap

    def test_smooth_cone_everything_cartier(self, plane):
        for coeffs in [(0, 0), (3, -2), (F(1, 2), F(5, 7))]:
            result = is_numerically_cartier(plane, ToricDivisor(plane, coeffs))
            assert result.is_numerically_cartier

    def test_negation_symmetry(self, quadric):
        divisor = ToricDivisor(quadric, D_ONE)
        assert not is_numerically_cartier(quadric, divisor).is_numerically_cartier
        assert not is_numerically_cartier(quadric, -divisor).is_numerically_cartier

    def test_witnesses_on_cone_over_cube(self):
        # Eight rays in dimension four; relations live inside the square
        # facets, so the raw inconsistency combination often lands on the
        # boundary and the witness needs the interior shift.
        rays = [(x, y, z, 1) for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
        cone = ToricCone(rays)
        assert len(cone.facet_normals) == 6
        for index in range(8):
            coeffs = tuple(int(i == index) for i in range(8))
            result = is_numerically_cartier(cone, ToricDivisor(cone, coeffs))
            assert not result.is_numerically_cartier
            assert cone.interior_contains(result.witness)
            assert result.gap < 0
        linear = ToricDivisor(cone, tuple(r[0] + 2 * r[3] for r in cone.rays))
        assert is_numerically_cartier(cone, linear).certificate == (1, 0, 0, 2)


class TestMonomialIdeals:
    def test_minimalization(self, plane):
        ideal = MonomialIdeal(plane, [(1, 0), (0, 2), (2, 2), (1, 0)])
        assert ideal.gens == ((1, 0), (0, 2))

    def test_unit_ideal(self, plane):
        ideal = MonomialIdeal(plane, [(0, 0), (1, 0)])
        assert ideal.is_unit
        assert not ideal.is_m_primary

    def test_m_primary_detection(self, plane, quadric):
        assert MonomialIdeal(plane, [(1, 0), (0, 1)]).is_m_primary
        assert MonomialIdeal(plane, [(1, 0), (0, 2)]).is_m_primary
        assert not MonomialIdeal(plane, [(1, 0)]).is_m_primary
        assert not MonomialIdeal(plane, [(1, 1), (2, 0)]).is_m_primary
        assert maximal_ideal(quadric).is_m_primary

    def test_m_primary_needs_all_dual_rays(self):
        orthant = ToricCone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        ideal = MonomialIdeal(orthant, [(1, 1, 0), (0, 0, 1)])
        assert not ideal.is_m_primary

    def test_rejects_exponent_outside_dual_cone(self, quadric):
        with pytest.raises(DomainError, match="dual cone"):
            MonomialIdeal(quadric, [(0, 0, 1)])

    def test_power_example(self, plane):
        ideal = MonomialIdeal(plane, [(1, 0), (0, 2)])
        assert set(ideal_power(ideal, 2).gens) == {(2, 0), (1, 2), (0, 4)}
        assert ideal_power(ideal, 0).is_unit

    def test_ord_and_z_values(self, plane):
        m = MonomialIdeal(plane, [(1, 0), (0, 1)])
        assert z_value(m, (1, 1)) == -1
        a = MonomialIdeal(plane, [(1, 0), (0, 2)])
        assert z_value(a, (2, 1)) == -2
        assert z_value(a, (1, 1)) == -1
        assert ord_value(a, (1, 1)) == 1
        with pytest.raises(DomainError):
            z_value(a, (-1, 0))


class TestHilbertBasis:
    def test_smooth_plane(self, plane):
        assert set(hilbert_basis(plane)) == {(1, 0), (0, 1)}

    def test_quadric(self, quadric):
        assert set(hilbert_basis(quadric)) == {
            (1, 0, 0),
            (0, 1, 0),
            (1, 0, 1),
            (0, 1, 1),
        }

    def test_quotient_singularity(self):
        cone = ToricCone([(1, 0), (1, 2)])
        assert set(hilbert_basis(cone)) == {(0, 1), (1, 0), (2, -1)}


class TestSamuelMultiplicity:
    def test_maximal_ideal_of_plane(self, plane):
        assert samuel_multiplicity(plane, maximal_ideal(plane)) == 1

    def test_plane_example(self, plane):
        assert samuel_multiplicity(plane, MonomialIdeal(plane, [(1, 0), (0, 2)])) == 2

    def test_quadric_maximal_ideal(self, quadric):
        assert samuel_multiplicity(quadric, maximal_ideal(quadric)) == 2

    def test_staircase(self, plane):
        ideal = MonomialIdeal(plane, [(3, 0), (1, 1), (0, 3)])
        assert samuel_multiplicity(plane, ideal) == 6

    def test_pure_powers(self, plane):
        ideal = MonomialIdeal(plane, [(4, 0), (0, 7)])
        assert samuel_multiplicity(plane, ideal) == 28

    def test_one_dimensional(self):
        line = ToricCone([(1,)])
        ideal = MonomialIdeal(line, [(3,), (5,)])
        assert samuel_multiplicity(line, ideal) == 3

    def test_agrees_with_hull_volume_on_convex_complements(self, plane, quadric):
        # When the region between the dual cone and the Newton polyhedron is
        # itself convex, its covolume is also computable by the generic hull
        # engine, giving a second exact route.
        from singvol import polytope_volume

        for a, b in [(1, 1), (3, 2), (4, 7)]:
            ideal = MonomialIdeal(plane, [(a, 0), (0, b)])
            hull = polytope_volume([(0, 0), (a, 0), (0, b)], 2)
            assert samuel_multiplicity(plane, ideal) == 2 * hull
        pyramid = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)]
        assert samuel_multiplicity(quadric, maximal_ideal(quadric)) == 6 * polytope_volume(
            pyramid, 3
        )

    def test_requires_m_primary(self, plane):
        with pytest.raises(DomainError, match="m-primary"):
            samuel_multiplicity(plane, MonomialIdeal(plane, [(1, 0)]))

    def test_dimension_cap(self):
        cone = ToricCone([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        ideal = MonomialIdeal(cone, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        with pytest.raises(UnsupportedDimensionError):
            samuel_multiplicity(cone, ideal)


class TestMixedMultiplicity:
    def test_diagonal_case(self, plane):
        a = MonomialIdeal(plane, [(1, 0), (0, 2)])
        assert mixed_multiplicity(plane, [a, a]) == samuel_multiplicity(plane, a)

    def test_staircase_pair(self, plane):
        a = MonomialIdeal(plane, [(1, 0), (0, 2)])
        b = MonomialIdeal(plane, [(2, 0), (0, 1)])
        assert samuel_multiplicity(plane, ideal_product(a, b)) == 6
        assert mixed_multiplicity(plane, [a, b]) == 1

    def test_maximal_against_example(self, plane):
        a = MonomialIdeal(plane, [(1, 0), (0, 2)])
        assert mixed_multiplicity(plane, [maximal_ideal(plane), a]) == 1

    def test_symmetry(self, plane):
        rng = random.Random(23)
        for _ in range(10):
            a = random_m_primary_ideal(rng, plane)
            b = random_m_primary_ideal(rng, plane)
            assert mixed_multiplicity(plane, [a, b]) == mixed_multiplicity(plane, [b, a])

    def test_multilinearity(self, plane):
        rng = random.Random(29)
        for _ in range(10):
            a = random_m_primary_ideal(rng, plane, max_degree=5)
            b = random_m_primary_ideal(rng, plane, max_degree=5)
            c = random_m_primary_ideal(rng, plane, max_degree=5)
            assert mixed_multiplicity(plane, [ideal_product(a, b), c]) == (
                mixed_multiplicity(plane, [a, c]) + mixed_multiplicity(plane, [b, c])
            )

    def test_three_dimensional_diagonal(self, quadric):
        mx = maximal_ideal(quadric)
        assert mixed_multiplicity(quadric, [mx, mx, mx]) == 2

    def test_khovanskii_teissier_samples(self, plane):
        rng = random.Random(31)
        for _ in range(25):
            a = random_m_primary_ideal(rng, plane)
            b = random_m_primary_ideal(rng, plane)
            mixed = mixed_multiplicity(plane, [a, b])
            assert mixed * mixed <= samuel_multiplicity(plane, a) * samuel_multiplicity(plane, b)

    def test_wrong_count_raises(self, plane):
        a = MonomialIdeal(plane, [(1, 0), (0, 1)])
        with pytest.raises(InputError):
            mixed_multiplicity(plane, [a])


class TestDefectIdeal:
    def test_zero_divisor_gives_unit(self, quadric):
        assert defect_ideal(quadric, ToricDivisor(quadric, (0, 0, 0, 0)), 1).is_unit

    def test_cartier_divisor_gives_unit(self, quadric):
        divisor = ToricDivisor(quadric, D_SUM)
        for m in (1, 2, 3):
            assert defect_ideal(quadric, divisor, m).is_unit

    def test_non_cartier_divisor_detects_defect(self, quadric):
        ideal = defect_ideal(quadric, ToricDivisor(quadric, D_ONE), 1)
        assert not ideal.is_unit
        assert z_value(ideal, (1, 1, 0)) == -1

    def test_module_generator_box_is_stable_under_doubling(self, quadric, plane):
        cases = [
            (quadric, [-1, -1, -1, 0]),
            (quadric, [1, 1, 1, 0]),
            (quadric, [-2, -1, -2, -1]),
            (plane, [-3, 2]),
            (plane, [0, 0]),
        ]
        for cone, bounds in cases:
            assert module_generators(cone, bounds) == module_generators(
                cone, bounds, margin_scale=2
            )

    def test_section_module_of_trivial_divisor(self, quadric):
        assert module_generators(quadric, [0, 0, 0, 0]) == ((0, 0, 0),)

    def test_rejects_fractional_divisor(self, quadric):
        with pytest.raises(InputError):
            defect_ideal(quadric, ToricDivisor(quadric, (F(1, 2), 0, 0, 0)), 1)

    def test_numerically_cartier_divisor_with_proper_defect(self):
        # On the A1 quotient cone, D = (1, 0) is numerically Cartier with a
        # half-integral certificate, so only 2D is Cartier: the defect ideal
        # is proper at m = 1 and unit at m = 2, and the scaled divisor values
        # climb to the vanishing envelope sum.
        cone = ToricCone([(2, -1), (0, 1)])
        divisor = ToricDivisor(cone, (1, 0))
        assert is_numerically_cartier(cone, divisor).certificate == (F(1, 2), 0)
        first = defect_ideal(cone, divisor, 1)
        assert set(first.gens) == {(1, 0), (1, 1), (1, 2)}
        assert defect_ideal(cone, divisor, 2).is_unit
        v = cone.interior_point()
        bound = envelope_value(cone, divisor, v) + envelope_value(cone, -divisor, v)
        assert bound == 0
        assert z_value(first, v) <= bound

    def test_defect_convergence(self, quadric):
        divisor = ToricDivisor(quadric, D_ONE)
        v = (1, 1, 0)
        bound = envelope_value(quadric, divisor, v) + envelope_value(quadric, -divisor, v)
        values = {
            m: z_value(defect_ideal(quadric, divisor, m), v) / m for m in (1, 2, 4, 8)
        }
        assert values[1] <= values[2] <= values[4] <= values[8] <= bound
        assert bound - values[8] <= bound - values[1]


class TestIzumi:
    def test_plane_example(self, plane):
        assert izumi_constant(plane, (1, 1), (1, 2)) == 2

    def test_equal_vectors(self, plane, quadric):
        assert izumi_constant(plane, (2, 3), (2, 3)) == 1
        assert izumi_constant(quadric, (1, 1, 1), (1, 1, 1)) == 1

    def test_quadric_pair(self, quadric):
        assert izumi_constant(quadric, (1, 1, 1), (1, 1, 0)) == 1
        assert izumi_constant(quadric, (1, 1, 0), (1, 1, 1)) == 2

    def test_non_interior_raises(self, quadric):
        with pytest.raises(DomainError):
            izumi_constant(quadric, (1, 0, 0), (1, 1, 0))

    def test_membership_and_minimality(self, plane, quadric):
        rng = random.Random(37)
        for cone in (plane, quadric):
            for _ in range(10):
                v = tuple(
                    sum(rng.randint(1, 3) * r[j] for r in cone.rays)
                    for j in range(cone.dim)
                )
                w = tuple(
                    sum(rng.randint(1, 3) * r[j] for r in cone.rays)
                    for j in range(cone.dim)
                )
                c = izumi_constant(cone, v, w)
                scaled = tuple(
                    c.numerator * x - c.denominator * y for x, y in zip(v, w)
                )
                assert cone.contains(scaled)
                assert not cone.interior_contains(scaled)

    def test_bounds_orders_of_ideals(self, plane):
        rng = random.Random(41)
        for _ in range(25):
            a = random_m_primary_ideal(rng, plane)
            v = (rng.randint(1, 4), rng.randint(1, 4))
            w = (rng.randint(1, 4), rng.randint(1, 4))
            c = izumi_constant(plane, v, w)
            assert ord_value(a, w) <= c * ord_value(a, v)


class TestLogDiscrepancy:
    def test_smooth_point(self, plane):
        assert log_discrepancy_value(plane, (1, 1)) == 2
        assert log_discrepancy_value(plane, (2, 3)) == 5

    def test_quadric_value(self, quadric):
        assert log_discrepancy_value(quadric, (1, 1, 0)) == 2

    def test_nonnegative_on_random_interior_points(self, quadric):
        rng = random.Random(43)
        from singvol.exactmath import primitive_vector

        for _ in range(20):
            v = primitive_vector(
                tuple(
                    sum(rng.randint(1, 4) * r[j] for r in quadric.rays)
                    for j in range(3)
                )
            )
            assert log_discrepancy_value(quadric, v) >= 0

    def test_rejects_boundary_and_imprimitive(self, quadric):
        with pytest.raises(DomainError):
            log_discrepancy_value(quadric, (1, 0, 0))
        with pytest.raises(DomainError):
            log_discrepancy_value(quadric, (2, 2, 0))


class TestIncreasingNets:
    def test_multiplicity_stabilizes(self, plane):
        a = MonomialIdeal(plane, [(1, 0), (0, 3)])
        values = []
        for k in range(1, 7):
            truncated = ideal_sum(a, ideal_power(maximal_ideal(plane), k))
            values.append(samuel_multiplicity(plane, truncated))
        assert values == [1, 2, 3, 3, 3, 3]
        assert all(x <= y for x, y in zip(values, values[1:]))
