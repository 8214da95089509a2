"""
Utility modules for the application.
"""
from app.utils.lattice import (
    binomial2,
    finite_range,
    parabola_range,
    QuadraticForm,
    octant_points,
)
from app.utils.serialization import (
    format_rational,
    parse_rational,
    to_json_line,
)

__all__ = [
    'binomial2',
    'finite_range',
    'parabola_range',
    'QuadraticForm',
    'octant_points',
    'format_rational',
    'parse_rational',
    'to_json_line',
]
