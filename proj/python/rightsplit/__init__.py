"""Finite-group toolkit: right-split exact sequences, induced representations
and twisted products, over exact arithmetic in GF(p^r)."""

import json as _json

from rightsplit._core import (  # noqa: F401
    Group,
    ToolkitError,
    __version__,
    dirichlet_condition_search,
    fq_make,
    is_nth_power,
    unit_generator,
)
from rightsplit import _core as _impl


def run_suite(name, seed=42, samples=10000):
    """Run a verification suite ("section2", "induce", "repalg", "all") and
    return the report as a dict."""
    return _json.loads(_impl._run_suite_json(name, seed, samples))


def cyclic_transversal_search(group, subgroup_members):
    """Search for x with x^n = 1 whose powers represent the cosets; returns
    the split report as a dict."""
    return _json.loads(group.cyclic_transversal_search(list(subgroup_members)))


def pgl_psl_analysis(p):
    """Group-level PGL2/PSL2 analysis at p in {5, 7, 11, 13}."""
    return _json.loads(_impl._pgl_psl_analysis_json(p))


def induce_check(group, subgroup_members, images=None, ell=5):
    """Induce the representation given by generator images (a dict mapping
    parent element indices inside the subgroup to square matrices; empty for
    the trivial character) and return block matrices, image orders and the
    splitting verdict."""
    return _json.loads(
        _impl._induce_json(group, list(subgroup_members), dict(images or {}), ell))
