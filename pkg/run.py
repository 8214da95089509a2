#!/usr/bin/env python3
"""Command-line entry point: ``python run.py verify --all``."""
from flask.cli import FlaskGroup

from app import create_app

cli = FlaskGroup(create_app=create_app, help='Exact q-series expansion and identity verification.')

if __name__ == '__main__':
    cli()
