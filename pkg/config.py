"""
Configuration module for the q-series engine.

Settings are plain class attributes loaded with ``app.config.from_object``.
Nothing is read from the environment: every run with the same config name is
reproducible.
"""
import os

BASE_DIR = os.path.abspath(os.path.dirname(__file__))


class Config:
    """Base configuration class with default settings."""

    # Series arithmetic
    DEFAULT_ORDER = 100  # working order when a call passes order=None

    # Identity verification
    SUITE_ORDER = 60
    VERIFY_JOBS = 1
    PROPERTY_SAMPLES = 10  # randomized instances per property batch
    RANDOM_SEED = 20201221
    IDENTITY_ORDERS_FILE = os.path.join(BASE_DIR, 'seeds', 'identity_orders.yaml')

    # Output
    DISPLAY_TERMS = 20  # human-readable series printing cap

    # Logging
    LOG_LEVEL = 'WARNING'
    LOG_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True
    TESTING = False
    LOG_LEVEL = 'INFO'


class ReleaseConfig(Config):
    """Release acceptance configuration: deeper suite order."""
    DEBUG = False
    TESTING = False
    SUITE_ORDER = 100


class TestConfig(Config):
    """Test configuration."""
    TESTING = True
    DEBUG = True
    SUITE_ORDER = 40
    LOG_LEVEL = 'DEBUG'


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'release': ReleaseConfig,
    'test': TestConfig,
    'default': DevelopmentConfig
}


def get_config(name=None):
    """Get configuration class by name, falling back to the default."""
    return config.get(name or 'default', config['default'])
