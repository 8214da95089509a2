"""
Pytest configuration and fixtures for the q-series test suite.
"""
import random

import pytest

from app import create_app
from app.services.series import QSeries


@pytest.fixture(scope='session')
def app():
    """Create Flask application for testing."""
    app = create_app('test')
    app.config.update({
        'TESTING': True,
        'PROPERTY_SAMPLES': 10,
    })
    return app


@pytest.fixture(scope='function')
def app_ctx(app):
    """Push an application context so services read the test configuration."""
    with app.app_context():
        yield app


@pytest.fixture(scope='function')
def runner(app):
    """Create Flask CLI test runner."""
    return app.test_cli_runner()


@pytest.fixture(scope='function')
def rng():
    """Deterministic generator for randomized properties."""
    return random.Random(20201221)


def series(coeffs, valuation=0, order=None):
    """Shorthand for building a QSeries in tests."""
    if order is None:
        order = valuation + len(coeffs) - 1
    return QSeries(coeffs, valuation, order)


def brute_pochhammer(x_sign, x_exp, n, order):
    """Dense product prod_{i<n} (1 - x q^i) with x = x_sign q^x_exp, x_exp >= 0."""
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for i in range(n):
        d = x_exp + i
        if d > order:
            continue
        for k in range(order, d - 1, -1):
            coeffs[k] -= x_sign * coeffs[k - d]
    return QSeries(coeffs, 0, order)
