"""Exact Witt-algebra weight-module supports: classification, checks and verification suites."""

import json as _json

from . import _core
from ._core import REPORT_SCHEMA, VERIFY_SCHEMA, convex_hull_contains, run_cli, suite_names

__all__ = [
    "REPORT_SCHEMA",
    "VERIFY_SCHEMA",
    "bracket",
    "catalog",
    "classify",
    "convex_hull_contains",
    "generates_monoid",
    "run_cli",
    "semigroup_generators_for",
    "separating_hyperplane",
    "suite_names",
    "validate_report",
    "verify",
    "weight_dims",
    "window_csv",
]


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def classify(descriptor, checks=(), box=None, radii=None):
    """Report dict for a family descriptor (dict or JSON string)."""
    return _json.loads(_core.classify(_text(descriptor), list(checks), box, tuple(radii) if radii else None))


def validate_report(report):
    """(ok, problems) after re-verifying the certificate and regenerating the report."""
    return _core.validate_report(_text(report))


def verify(suites=(), seed=7, inject_negative=False):
    return _json.loads(_core.verify(list(suites), seed, inject_negative))


def catalog():
    return _json.loads(_core.catalog())


def bracket(x, y, n):
    """Elements as lists of {"alpha": [...], "u": [...]}."""
    return _json.loads(_core.bracket(_text(x), _text(y), n))


def semigroup_generators_for(beta, a):
    return _json.loads(_core.semigroup_generators_for(list(beta), [str(q) for q in a]))


def generates_monoid(s, search_bound):
    return _json.loads(_core.generates_monoid([list(v) for v in s], search_bound))


def weight_dims(descriptor, offsets):
    return _core.weight_dims(_text(descriptor), [list(x) for x in offsets])


def window_csv(descriptor, box=None):
    return _core.window_csv(_text(descriptor), box)


def separating_hyperplane(points, mu):
    """Integer functional a with a·(x - mu) > 0 on points, or None."""
    return _json.loads(_core.separating_hyperplane_json([list(v) for v in points], list(mu)))
