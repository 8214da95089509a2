"""
Tests for the application factory, configuration and logging setup.
"""
import logging

import pytest

from app import create_app, load_identity_orders
from app.services.identities import default_order_for
from config import ReleaseConfig, get_config


@pytest.mark.unit
class TestConfiguration:
    """Test configuration selection."""

    def test_test_config_is_loaded(self, app):
        assert app.config['TESTING'] is True
        assert app.config['SUITE_ORDER'] == 40
        assert app.config['DEFAULT_ORDER'] == 100

    def test_unknown_name_falls_back_to_default(self):
        assert get_config('nonexistent') is get_config(None)

    def test_release_config(self):
        release = create_app('release')
        try:
            assert release.config['SUITE_ORDER'] == ReleaseConfig.SUITE_ORDER == 100
        finally:
            create_app('test')

    def test_logging_goes_to_package_logger(self, app):
        package_logger = logging.getLogger('app')
        assert package_logger.level == logging.DEBUG
        assert len(package_logger.handlers) == 1


@pytest.mark.unit
class TestIdentityOrders:
    """Test loading of per-identity orders."""

    def test_missing_file(self, tmp_path):
        assert load_identity_orders(str(tmp_path / 'absent.yaml')) == {}
        assert load_identity_orders(None) == {}

    def test_valid_file(self, tmp_path):
        path = tmp_path / 'orders.yaml'
        path.write_text('# orders\nnewid-1: 25\nchi0-appell: 80\n', encoding='utf-8')
        assert load_identity_orders(str(path)) == {'newid-1': 25, 'chi0-appell': 80}

    @pytest.mark.parametrize('content', ['- newid-1\n- newid-2\n', 'newid-1: deep\n'])
    def test_invalid_file(self, tmp_path, content):
        path = tmp_path / 'orders.yaml'
        path.write_text(content, encoding='utf-8')
        with pytest.raises(ValueError, match="must map identity names"):
            load_identity_orders(str(path))

    def test_factory_applies_seed_file(self, app_ctx):
        assert default_order_for('thm-main-vs-direct') == 40
        assert default_order_for('chi1-appell') == 100
