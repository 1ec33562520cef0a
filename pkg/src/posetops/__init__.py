"""Poset interval machinery: graded posets, flag invariants, triangulations,
and the transforms connecting them, all in exact rational arithmetic."""

from . import complexes, errors, flags, ncpoly, operators, posets, verify  # noqa: F401

__version__ = "0.1.0"
