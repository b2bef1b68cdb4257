"""Exact generalized third-order Jacobsthal sequences, matrices and identity checks.

Values are exact: rational results come back as strings such as ``"1/2"``,
symbolic results as Laurent polynomials in ``k`` such as ``"k^2 - k"``, and
classic integer sequences as Python ``int``.
"""

import json

from ._core import (
    ConsistencyError,
    DomainError,
    UsageError,
    binet,
    det_J,
    det_j,
    identity_names,
    jac3_classic,
    jac3_multi_index,
    lucas3_classic,
    matrix,
    modified_lucas_classic,
    residue_y,
    residue_z,
    term,
)
from . import _core

__all__ = [
    "ConsistencyError",
    "DomainError",
    "UsageError",
    "binet",
    "det_J",
    "det_j",
    "identity_names",
    "jac3_classic",
    "jac3_multi_index",
    "lucas3_classic",
    "matrix",
    "modified_lucas_classic",
    "residue_y",
    "residue_z",
    "term",
    "verify",
    "verify_all",
]


def verify(identity, k=None, n=(1, 10), m=None):
    """Check one identity over a grid; returns the report as a dict.

    ``k`` is a list of strings (rationals or ``"sym"``); ``None`` selects the
    default set. ``n`` and ``m`` are inclusive ``(lo, hi)`` pairs.
    """
    return json.loads(_core._verify_json(identity, k, tuple(n), None if m is None else tuple(m)))


def verify_all(k=None, n=(1, 10), m=(1, 10)):
    """Check every registered identity; returns a list of report dicts."""
    return json.loads(_core._verify_all_json(k, tuple(n), tuple(m)))
