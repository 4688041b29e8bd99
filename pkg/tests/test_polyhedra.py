"""Newton polyhedra: support function, fan partition, zeta values."""
import itertools
import random

import pytest

from motivic.errors import DimensionUnsupported
from motivic.grring import (LaurentPoly, MotClass, expand_completion, mot_eq)
from motivic.polyhedra import (NewtonPolyhedron, linearity_partition,
                               support_eval, z_of_delta, z_truncated)


class TestNewtonPolyhedron:
    def test_entries_must_be_positive(self):
        with pytest.raises(ValueError):
            NewtonPolyhedron(2, [(0, 1)])

    def test_dominated_generators_removed(self):
        delta = NewtonPolyhedron(2, [(1, 1), (2, 3)])
        assert delta.minimal_generators() == ((1, 1),)

    def test_support_eval(self):
        delta = NewtonPolyhedron(2, [(2, 1), (1, 3)])
        assert support_eval(delta, (1, 1)) == 3
        assert support_eval(delta, (3, 1)) == 6
        assert support_eval(delta, (1, 2)) == 4


class TestLinearityPartition:
    def _check_partition(self, delta, box):
        cones = linearity_partition(delta)
        for xi in itertools.product(range(1, box + 1), repeat=delta.k):
            hits = [c for c in cones if c.contains(xi)]
            assert len(hits) == 1, f"point {xi} hit {len(hits)} cones"
            assert hits[0].value_at(xi) == support_eval(delta, xi)

    def test_single_vertex_2d(self):
        self._check_partition(NewtonPolyhedron(2, [(2, 3)]), 12)

    def test_two_vertices_2d(self):
        self._check_partition(NewtonPolyhedron(2, [(2, 1), (1, 3)]), 12)

    def test_three_vertices_2d(self):
        self._check_partition(NewtonPolyhedron(2, [(4, 1), (2, 2), (1, 5)]), 10)

    def test_1d(self):
        self._check_partition(NewtonPolyhedron(1, [(3,)]), 20)

    def test_3d(self):
        self._check_partition(NewtonPolyhedron(3, [(2, 1, 1), (1, 1, 3)]), 6)

    def test_random_3d(self):
        rng = random.Random(20240815)
        for _ in range(3):
            gens = [tuple(rng.randint(1, 4) for _ in range(3))
                    for _ in range(rng.randint(1, 3))]
            self._check_partition(NewtonPolyhedron(3, gens), 5)

    def test_unimodularity(self):
        from motivic.polyhedra import _det, _solve_coords

        delta = NewtonPolyhedron(3, [(2, 1, 1), (1, 3, 1), (1, 1, 4)])
        for cone in linearity_partition(delta):
            if len(cone.rays) == 3:
                assert abs(_det(cone.rays)) == 1

    def test_dimension_unsupported(self):
        with pytest.raises(DimensionUnsupported):
            linearity_partition(NewtonPolyhedron(4, [(1, 1, 1, 1)]))


class TestZeta:
    def test_single_vertex_closed_form(self):
        # one generator (a, b): Z = (L-1)^2 / ((L^a-1)(L^b-1)) ... via cones
        delta = NewtonPolyhedron(2, [(2, 3)])
        want = (MotClass(LaurentPoly.binom(1), (2,))
                * MotClass(LaurentPoly.binom(1), (3,)))
        assert mot_eq(z_of_delta(delta), want)

    def test_documented_two_vertex_value(self):
        delta = NewtonPolyhedron(2, [(2, 1), (1, 3)])
        want = MotClass(LaurentPoly({4: 1, 3: -1, 2: 1, 0: -1}), (5,))
        assert mot_eq(z_of_delta(delta), want)

    def test_truncated_oracle_all_dimensions(self):
        rng = random.Random(7)
        for k in (1, 2, 3):
            for _ in range(3):
                gens = [tuple(rng.randint(1, 5) for _ in range(k))
                        for _ in range(rng.randint(1, 3))]
                delta = NewtonPolyhedron(k, gens)
                closed = expand_completion(z_of_delta(delta), 30)
                assert closed.matches(z_truncated(delta, 30))

    def test_truncated_is_plain_enumeration(self):
        # k = 1, vertex (2,): sum over xi >= 1 of (L-1) L^{-2 xi},
        # i.e. the expansion of (L-1)/(L^2-1): u - u^2 + u^3 - u^4 + ...
        delta = NewtonPolyhedron(1, [(2,)])
        tr = z_truncated(delta, 12)
        for n in range(1, 13):
            assert tr.coeff(n) == (1 if n % 2 else -1)
