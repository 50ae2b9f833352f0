"""Exact computations with vanishing-cycle lattices.

Matrices are lists of rows of Python ints; nothing is converted to floats.
"""

import json

from ._vctk import (  # noqa: F401
    Service,
    VctkError,
    apply_word,
    bou_coxeter,
    catalog_gram,
    catalog_names,
    char_poly,
    coxeter_element,
    cyclotomic_factors,
    group_order,
    intersection_from_seifert,
    ll_degree,
    monodromy_from_seifert,
    seifert_from_intersection,
    seifert_from_monodromy,
    signature,
    stored_constant,
    suite_names,
)
from . import _vctk


def catalog_entry(name, n=2):
    """Catalog entry as a dict (canonical JSON decoded)."""
    return json.loads(_vctk.catalog_entry_json(name, n))


def braid_orbit(name, n=2, budget=100000):
    """Summary of the braid orbit of a catalog basis."""
    return json.loads(_vctk.orbit_json(name, n, budget))


def run_suite(name, seed=42, random=100):
    """Runs a verification suite and returns its report."""
    return json.loads(_vctk.run_suite_json(name, seed, random))


__all__ = [
    "Service",
    "VctkError",
    "apply_word",
    "bou_coxeter",
    "braid_orbit",
    "catalog_entry",
    "catalog_gram",
    "catalog_names",
    "char_poly",
    "coxeter_element",
    "cyclotomic_factors",
    "group_order",
    "intersection_from_seifert",
    "ll_degree",
    "monodromy_from_seifert",
    "run_suite",
    "seifert_from_intersection",
    "seifert_from_monodromy",
    "signature",
    "stored_constant",
    "suite_names",
]
