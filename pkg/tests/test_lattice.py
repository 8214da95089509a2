"""
Unit tests for lattice enumeration helpers.
"""
import itertools
from fractions import Fraction

import pytest

from app.utils.lattice import (
    QuadraticForm,
    binomial2,
    coverage_box,
    finite_range,
    line_points,
    octant_points,
    parabola_range,
    parabola_value,
    sg,
    sg2,
    sg3,
)


@pytest.mark.unit
class TestParabola:
    """Test one-dimensional parabola enumeration."""

    def test_binomial2_extends_to_negatives(self):
        assert binomial2(0) == 0
        assert binomial2(1) == 0
        assert binomial2(4) == 6
        assert binomial2(-1) == 1
        assert binomial2(-3) == 6

    @pytest.mark.parametrize('quad,lin,budget', [(1, 0, 20), (3, -7, 15), (2, 5, -3), (15, 9, 60), (1, -20, 0)])
    def test_parabola_range_matches_brute_force(self, quad, lin, budget):
        """The range holds exactly the integers whose value is within budget."""
        expected = [n for n in range(-200, 201) if parabola_value(quad, lin, n) <= budget]
        assert list(parabola_range(quad, lin, budget)) == expected

    def test_parabola_range_respects_bounds(self):
        values = list(parabola_range(1, 0, 10, lower=0))
        assert values == [n for n in range(0, 50) if binomial2(n) <= 10]
        assert list(parabola_range(1, 0, 10, upper=-1)) == [n for n in range(-50, 0) if binomial2(n) <= 10]

    def test_parabola_range_empty_when_budget_too_small(self):
        assert len(parabola_range(2, 3, -100)) == 0

    def test_parabola_range_rejects_nonpositive_quad(self):
        with pytest.raises(ValueError, match="positive leading coefficient"):
            parabola_range(0, 1, 10)


@pytest.mark.unit
class TestFiniteRange:
    """Test the signed finite-sum convention."""

    def test_positive_count(self):
        assert list(finite_range(3)) == [(0, 1), (1, 1), (2, 1)]

    def test_zero_count(self):
        assert list(finite_range(0)) == []

    def test_negative_count_reverses_with_minus_sign(self):
        assert list(finite_range(-2)) == [(-2, -1), (-1, -1)]

    def test_convention_is_additive(self):
        """sum_{0}^{a-1} + sum_{a}^{a+b-1} = sum_{0}^{a+b-1} for any signs of a, b."""
        c = lambda n: n * n + 3 * n + 1
        for a in range(-4, 5):
            for b in range(-4, 5):
                first = sum(w * c(n) for n, w in finite_range(a))
                second = sum(w * c(n + a) for n, w in finite_range(b))
                total = sum(w * c(n) for n, w in finite_range(a + b))
                assert first + second == total


@pytest.mark.unit
class TestQuadraticForm:
    """Test quadratic form substitution and shifting."""

    def test_fix_matches_value(self):
        form = QuadraticForm.triple(1, 2, 3, 1, 2, 1, (1, -2, 3), 4)
        sub = form.fix(1, 5)
        for r, t in itertools.product(range(-3, 4), repeat=2):
            assert sub.value((r, t)) == form.value((r, 5, t))

    def test_shifted_matches_value(self):
        form = QuadraticForm.double(2, 3, 1, (1, -1))
        moved = form.shifted((2, -3))
        for r, s in itertools.product(range(-4, 5), repeat=2):
            assert moved.value((r, s)) == form.value((r + 2, s - 3))


@pytest.mark.unit
class TestOctantPoints:
    """Test octant enumeration against brute force."""

    @pytest.mark.parametrize('negative', [False, True])
    def test_triple_octant_matches_brute_force(self, negative):
        form = QuadraticForm.triple(1, 2, 1, 2, 2, 1, (1, -1, 2))
        budget = 12
        box = range(-12, 0) if negative else range(0, 13)
        expected = sorted(
            (p, form.value(p)) for p in itertools.product(box, repeat=3) if form.value(p) <= budget
        )
        assert sorted(octant_points(form, budget, negative=negative)) == expected

    def test_rejects_negative_cross_terms(self):
        form = QuadraticForm((1, 1), ((0, -1), (-1, 0)), (0, 0))
        with pytest.raises(ValueError, match="nonnegative cross"):
            list(octant_points(form, 5))

    def test_line_points(self):
        points = dict(line_points(1, 0, 2, 5))
        assert points == {n: 2 + binomial2(n) for n in range(-10, 11) if 2 + binomial2(n) <= 5}

    def test_coverage_box_contains_all_points(self):
        form = QuadraticForm.double(1, 3, 1, (-2, 1))
        bound = coverage_box(form, 20)
        for negative in (False, True):
            for point, _ in octant_points(form, 20, negative=negative):
                assert all(abs(n) <= bound for n in point)


@pytest.mark.unit
class TestSignWeights:
    """Test the sg weights defining the summation cones."""

    def test_sg(self):
        assert sg(0) == 1
        assert sg(-1) == -1

    def test_sg2(self):
        assert sg2(0, 3) == 1
        assert sg2(-1, -5) == -1
        assert sg2(-1, 2) == Fraction(0)

    def test_sg3_is_cone_indicator(self):
        for point in itertools.product(range(-2, 3), repeat=3):
            same = len({sg(n) for n in point}) == 1
            assert sg3(*point) == (1 if same else 0)
