"""Exact verification of delta-type nonassociative algebras.

The heavy lifting is in the C++ core; results come back as plain dicts.
"""

import json

from . import _core
from ._core import (
    Algebra,
    Error,
    ParseError,
    UnknownEntry,
    UnknownName,
    corpus_algebra,
    corpus_ids,
    identity_names,
    load_algebra,
    mutate_commutator,
    parse_algebra,
)

__all__ = [
    "Algebra", "Error", "ParseError", "UnknownEntry", "UnknownName",
    "analyze", "check", "corpus_algebra", "corpus_ids", "identity_names", "implies",
    "load_algebra", "mutate_commutator", "parse_algebra", "passing_deltas", "run_cli", "verify",
]


def _frac(x):
    return None if x is None else str(x)


def check(algebra, identity, delta=None):
    return json.loads(_core.check_json(algebra, identity, _frac(delta)))


def passing_deltas(algebra, identity):
    return json.loads(_core.passing_deltas_json(algebra, identity))


def analyze(algebra):
    return json.loads(_core.analyze_json(algebra))


def implies(hypotheses, conclusion, degree=None, delta=None):
    return json.loads(_core.implies_json(list(hypotheses), conclusion, degree, _frac(delta)))


def verify(table=None, entry=None):
    return json.loads(_core.verify_json(table, entry))


def run_cli(*args):
    """Run one CLI command in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
