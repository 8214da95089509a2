"""
Tests for the identity registry and the batch verifier.

Tests cover:
- Registry lookups and per-identity orders
- Verification of individual identities
- Failure and error reporting
- Serial and parallel batch runs
"""
import logging

import pytest

from app.models import VerificationReport
from app.services.identities import (
    IDENTITY_REGISTRY,
    BaseIdentity,
    IdentityCase,
    IdentityEvaluationError,
    UnknownIdentity,
    apply_order_overrides,
    default_order_for,
    get_identity,
    list_identities,
)
from app.services.identities.base import register
from app.services.series import DivideByZeroSeries, QSeries
from app.services.verifier import verify, verify_all


def _constant(value):
    return lambda n: QSeries.constant(value, n)


class BrokenIdentity(BaseIdentity):
    """Second case disagrees in the constant term; the third is never reached."""

    NAME = 'test-broken'
    SOURCE = '1 = 2'

    def cases(self):
        return [
            IdentityCase('agrees', _constant(1), _constant(1)),
            IdentityCase('disagrees', _constant(1), _constant(2)),
            IdentityCase('unreached', _constant(3), _constant(4)),
        ]


class RaisingIdentity(BaseIdentity):
    NAME = 'test-raising'

    def cases(self):
        def fail(n):
            raise DivideByZeroSeries('denominator vanished')
        return [IdentityCase('only', fail, _constant(0))]


class UnbuildableIdentity(BaseIdentity):
    NAME = 'test-unbuildable'

    def cases(self):
        raise ValueError('bad parameters')


@pytest.fixture
def extra_identities(monkeypatch):
    """Temporarily register the test identities."""
    for identity_class in (BrokenIdentity, RaisingIdentity, UnbuildableIdentity):
        monkeypatch.setitem(IDENTITY_REGISTRY, identity_class.NAME, identity_class)


@pytest.mark.unit
class TestRegistry:
    """Test registry lookups."""

    def test_catalog_is_populated(self):
        names = [identity_class.NAME for identity_class in list_identities()]
        assert len(names) == len(set(names))
        for expected in ('newid-1', 'newid-5', 'chi0-appell', 'thm-main-vs-direct',
                         'kl-generic-B', 'generic-shift', 'prop-f111-zero', 'j-elliptic'):
            assert expected in names

    def test_every_identity_describes_itself(self, app_ctx):
        for identity_class in list_identities():
            info = identity_class.describe()
            assert info['name'] == identity_class.NAME
            assert info['source']
            assert info['default_order'] > 0

    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentity, match="no-such-identity"):
            get_identity('no-such-identity')

    def test_duplicate_registration_rejected(self):
        class Duplicate(BaseIdentity):
            NAME = 'newid-1'

            def cases(self):
                return []

        with pytest.raises(ValueError, match="registered twice"):
            register(Duplicate)

    def test_registration_needs_name(self):
        class Nameless(BaseIdentity):
            def cases(self):
                return []

        with pytest.raises(ValueError, match="has no NAME"):
            register(Nameless)

    def test_case_needs_both_sides(self):
        with pytest.raises(ValueError, match="needs both builders"):
            IdentityCase('half', lhs=_constant(1))


@pytest.mark.unit
class TestOrders:
    """Test per-identity default orders."""

    def test_seeded_override(self, app_ctx):
        assert default_order_for('chi0-appell') == 100

    def test_suite_order_fallback(self, app_ctx):
        assert default_order_for('newid-1') == app_ctx.config['SUITE_ORDER']

    def test_override_and_restore(self, app_ctx):
        original = default_order_for('newid-2')
        try:
            assert apply_order_overrides({'newid-2': 17}) == 1
            assert default_order_for('newid-2') == 17
        finally:
            apply_order_overrides({'newid-2': original})

    def test_unknown_override_is_skipped(self, caplog):
        with caplog.at_level(logging.WARNING, logger='app.services.identities.base'):
            assert apply_order_overrides({'no-such-identity': 10}) == 0
        assert 'no-such-identity' in caplog.text


@pytest.mark.integration
class TestVerify:
    """Test verification of single identities."""

    @pytest.mark.parametrize('name', ['newid-3', 'newid-5', 'zwegers-chi0', 'kl-eulerian-A'])
    def test_identity_passes(self, app_ctx, name):
        report = verify(name, 30)
        assert report.passed
        assert report.first_mismatch is None
        assert report.order_checked == 30

    def test_property_batch_checks_every_case(self, app_ctx):
        report = verify('prop-f111-zero', 30)
        assert report.passed
        assert report.cases_checked == 10

    def test_default_order_used(self, app_ctx):
        assert verify('newid-4').order_checked == default_order_for('newid-4')

    def test_first_mismatch_stops_the_run(self, app_ctx, extra_identities):
        report = verify('test-broken', 5)
        assert not report.passed
        assert report.cases_checked == 2
        mismatch = report.first_mismatch
        assert (mismatch.case, mismatch.exponent, mismatch.lhs, mismatch.rhs) == ('disagrees', 0, 1, 2)

    def test_report_dict_roundtrip(self, app_ctx, extra_identities):
        report = verify('test-broken', 5)
        assert VerificationReport.from_dict(report.to_dict()).first_mismatch == report.first_mismatch

    def test_case_error_names_identity_and_case(self, app_ctx, extra_identities):
        with pytest.raises(IdentityEvaluationError, match=r"test-raising \[only\]"):
            verify('test-raising', 5)

    def test_case_construction_error(self, app_ctx, extra_identities):
        with pytest.raises(IdentityEvaluationError, match="could not build cases"):
            verify('test-unbuildable', 5)

    def test_unknown_name(self, app_ctx):
        with pytest.raises(UnknownIdentity):
            verify('no-such-identity')


@pytest.mark.slow
class TestVerifyAll:
    """Test the whole catalog in one batch."""

    def test_catalog_passes_and_parallel_run_is_deterministic(self, app_ctx):
        serial = verify_all(order=20, jobs=1)
        parallel = verify_all(order=20, jobs=2)
        assert [r.name for r in serial] == [c.NAME for c in list_identities()]
        assert all(r.passed for r in serial), [r.name for r in serial if not r.passed]

        def strip(report):
            data = report.to_dict()
            data.pop('wall_time')
            return data

        assert [strip(r) for r in serial] == [strip(r) for r in parallel]

    @pytest.mark.parametrize('name', [
        'zwegers-chi0', 'zwegers-chi1', 'lemma-a0', 'lemma-a1', 'lemma-a2',
        'lemma-a3', 'lemma-b0', 'lemma-b1', 'lemma-b2',
    ])
    def test_endpoint_constants_through_sixty(self, app_ctx, name):
        assert verify(name, order=60).passed
