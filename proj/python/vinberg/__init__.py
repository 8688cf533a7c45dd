"""Reflectivity of -p x0^2 + x1^2 + ... + xn^2 with certificates.

Reports, certificates and search states are plain dicts following the JSON
schemas written by the ``vinberg`` command-line tool.
"""

import json

from ._vinberg import (
    SCHEMA_VERSION,
    VinbergError,
    admissible_norms,
    diagram,
    is_root,
    norm,
    norm_angle_sequence,
    table,
)
from . import _vinberg

__all__ = [
    "SCHEMA_VERSION",
    "VinbergError",
    "admissible_norms",
    "classify",
    "classify_family",
    "diagram",
    "is_root",
    "norm",
    "norm_angle_sequence",
    "resume",
    "table",
    "verify",
]


def classify(p, n, max_height="400", max_roots=64, check_every="root"):
    """Classification report for (p, n)."""
    return json.loads(_vinberg.classify_json(p, n, str(max_height), max_roots, check_every))


def resume(state, max_height="400", max_roots=64, check_every="root"):
    """Continue an undecided search from its saved state or undecided report."""
    if isinstance(state.get("state"), dict):
        state = state["state"]
    return json.loads(_vinberg.resume_json(json.dumps(state), str(max_height), max_roots, check_every))


def classify_family(p, n_max, jobs=1, max_height="400", max_roots=64):
    return json.loads(_vinberg.family_json(p, n_max, jobs, str(max_height), max_roots))


def verify(certificate):
    """(ok, failures) after re-deriving every claim of the certificate."""
    ok, failures = _vinberg.check_certificate_json(json.dumps(certificate))
    return ok, list(failures)
