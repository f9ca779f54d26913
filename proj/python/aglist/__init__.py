# Copyright 2026 The aglist authors
# License: Apache License 2.0
"""Interpolation-based list decoding for one-point evaluation codes."""

try:
    from ._core import Code, Curve, load_curve, make_code, parse_curve
except ImportError:  # development tree: extension built outside the package
    from _core import Code, Curve, load_curve, make_code, parse_curve

__all__ = ["Code", "Curve", "load_curve", "make_code", "parse_curve"]
