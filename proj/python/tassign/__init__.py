"""Assignments on torus-action fixed-point data.

Documents (spaces, assignments, verdicts) use the same JSON layout as the
``tassign`` command line tool.
"""

import json

from ._core import Space, TassignError, basis_json, check_json, defect, localization_sum, pullback_json

__all__ = ["Space", "TassignError", "basis", "check", "defect", "localization_sum", "pullback", "summary"]


def _dump(assignment):
    return assignment if isinstance(assignment, str) else json.dumps(assignment)


def summary(space, xi=None):
    """GKM flag, Betti numbers, Morse data and one-skeleton as a dict."""
    return json.loads(space.summary_json(xi))


def basis(space, k):
    """Echelon basis of the assignments of polynomial degree k."""
    return [json.loads(b) for b in basis_json(space, k)]


def check(space, assignment, eta_library="all", xi=None):
    """Cohomologicality verdict for an assignment given as a dict or JSON text."""
    return json.loads(check_json(space, _dump(assignment), eta_library, xi))


def pullback(map_path, assignment):
    return json.loads(pullback_json(map_path, _dump(assignment)))
