"""
Flask application factory module.
"""
import logging
import os
import sys

import yaml
from flask import Flask


def configure_logging(app):
    """Send package logs to stderr so JSON on stdout stays machine-readable."""
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(app.config['LOG_FORMAT']))
    package_logger = logging.getLogger('app')
    package_logger.handlers = [handler]
    package_logger.setLevel(app.config['LOG_LEVEL'])
    app.logger.setLevel(app.config['LOG_LEVEL'])


def load_identity_orders(path):
    """
    Read the per-identity default orders.

    Returns:
        Mapping of identity name to order; empty if the file does not exist

    Raises:
        ValueError: if the file is not a mapping of names to integers
    """
    if not path or not os.path.exists(path):
        return {}
    with open(path, encoding='utf-8') as fh:
        data = yaml.safe_load(fh) or {}
    if not isinstance(data, dict) or not all(isinstance(v, int) for v in data.values()):
        raise ValueError(f"{path} must map identity names to integer orders")
    return data


def create_app(config_name=None):
    """
    Flask application factory.

    Args:
        config_name: Configuration name ('development', 'release', 'test');
                     None uses the default configuration

    Returns:
        Flask application instance
    """
    app = Flask(__name__)

    # Load configuration
    from config import get_config
    app.config.from_object(get_config(config_name))

    configure_logging(app)

    # Per-identity verification orders
    from app.services.identities import apply_order_overrides, clear_order_overrides
    clear_order_overrides()
    orders = load_identity_orders(app.config.get('IDENTITY_ORDERS_FILE'))
    applied = apply_order_overrides(orders)
    app.logger.debug(f"Loaded {applied} identity order override(s)")

    # Register CLI commands
    from app import cli
    cli.init_app(app)

    return app
