"""
Unit tests for Hecke-type double and triple sums.

Tests cover:
- Octant enumeration against the sg-weighted box oracles
- Known product evaluations
- Flip and shift functional equations
"""
import pytest

from app.models import HeckeParams2, HeckeParams3, QMonomial
from app.services.hecke import (
    f_flip,
    f_shift,
    g_flip,
    g_shift,
    generic_shift_check,
    hecke_f,
    hecke_f_box,
    hecke_g,
    hecke_g_box,
    triple_sum,
)
from app.services.series import equal_to_order, monomial_times
from app.services.theta import eta_product

ORDER = 30
TRIPLE_ORDER = 20


def _monomial(rng, low=-3, high=3):
    return QMonomial(rng.choice((1, -1)), rng.randint(low, high))


@pytest.mark.unit
class TestDoubleSum:
    """Test f_{a,b,c}(x, y, q)."""

    def test_f121_is_eta_squared(self):
        result = hecke_f(HeckeParams2(1, 2, 1), QMonomial(1, 1), QMonomial(1, 1), ORDER)
        assert equal_to_order(result, eta_product(1, ORDER) * eta_product(1, ORDER), ORDER)

    def test_matches_box_oracle(self, rng):
        for _ in range(25):
            p = HeckeParams2(rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4))
            x, y = _monomial(rng), _monomial(rng)
            assert equal_to_order(hecke_f(p, x, y, ORDER), hecke_f_box(p, x, y, ORDER), ORDER), f'{p} {x} {y}'

    def test_rejects_nonpositive_parameters(self):
        with pytest.raises(ValueError, match="positive integers"):
            HeckeParams2(1, 0, 1)

    def test_flip(self, rng):
        for _ in range(10):
            p = HeckeParams2(rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3))
            x, y = _monomial(rng), _monomial(rng)
            prefactor, (fx, fy) = f_flip(p, x, y)
            rhs = monomial_times(prefactor, lambda n: hecke_f(p, fx, fy, n), ORDER)
            assert equal_to_order(hecke_f(p, x, y, ORDER), rhs, ORDER), f'{p} {x} {y}'

    @pytest.mark.parametrize('l,k', [(1, 0), (0, 1), (2, 1), (-1, 2), (-2, -1)])
    def test_shift(self, l, k):
        p = HeckeParams2(1, 2, 3)
        x, y = QMonomial(-1, 1), QMonomial(1, 2)
        decomposition = f_shift(p, x, y, l, k, ORDER)
        assert equal_to_order(hecke_f(p, x, y, ORDER), decomposition.total(), ORDER)
        assert len(decomposition.added) == 2


@pytest.mark.unit
class TestTripleSum:
    """Test g_{a,b,c,d,e,f}(x, y, z, q)."""

    def test_matches_box_oracle(self, rng):
        for _ in range(25):
            p = HeckeParams3(*(rng.randint(1, 3) for _ in range(6)))
            x, y, z = _monomial(rng), _monomial(rng), _monomial(rng)
            assert equal_to_order(
                hecke_g(p, x, y, z, TRIPLE_ORDER),
                hecke_g_box(p, x, y, z, TRIPLE_ORDER),
                TRIPLE_ORDER,
            ), f'{p} {x} {y} {z}'

    def test_builder_matches_direct_call(self):
        p = HeckeParams3(1, 2, 1, 2, 2, 1)
        q = QMonomial(1, 1)
        assert triple_sum(p, q, q, q)(TRIPLE_ORDER) == hecke_g(p, q, q, q, TRIPLE_ORDER)

    def test_flip(self, rng):
        for _ in range(10):
            p = HeckeParams3(*(rng.randint(1, 3) for _ in range(6)))
            x, y, z = _monomial(rng), _monomial(rng), _monomial(rng)
            prefactor, moved = g_flip(p, x, y, z)
            rhs = monomial_times(prefactor, lambda n: hecke_g(p, *moved, n), TRIPLE_ORDER)
            assert equal_to_order(hecke_g(p, x, y, z, TRIPLE_ORDER), rhs, TRIPLE_ORDER)

    @pytest.mark.parametrize('shift', [(0, 0, 1), (1, 0, 0), (0, 1, 1), (1, 1, 1), (-1, 0, 1), (0, -1, -1)])
    def test_shift(self, shift):
        p = HeckeParams3(1, 2, 1, 2, 2, 1)
        x, y, z = QMonomial(1, 1), QMonomial(1, 2), QMonomial(-1, 1)
        decomposition = g_shift(p, x, y, z, *shift, TRIPLE_ORDER)
        assert equal_to_order(hecke_g(p, x, y, z, TRIPLE_ORDER), decomposition.total(), TRIPLE_ORDER)
        assert len(decomposition.added) == 3
        assert len(decomposition.subtracted) == 3

    @pytest.mark.parametrize('shift', [(1, 1, 1), (2, -1, 1), (0, 0, -2)])
    def test_generic_shift_rearrangement(self, shift):
        report = generic_shift_check(HeckeParams3(1, 7, 1, 1, 1, 1), QMonomial(1, 2), QMonomial(1, 3),
                                     QMonomial(1, 1), *shift, TRIPLE_ORDER)
        assert report.passed, report.first_mismatch
