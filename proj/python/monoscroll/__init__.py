"""Monomial curves, their canonical models and the scrolls containing them."""

import json as _json

from ._core import (
    MonomialCurve,
    MonoscrollError,
    NumericalSemigroup,
    analyze,
    canonical_exponents,
    check_surface_items,
    enumerate_genus,
    euler_characteristic,
    fixture_names,
    genus_on_surface,
    gonality,
    h0,
    isomorphic_via_canonical,
    min_scroll_dimension,
    pa_from_bundle,
    pencil_degree,
    recover_from_kappa_star,
    representative_curve,
    scroll_structures,
)
from . import _core


def catalog(lo, hi=None, *, non_gorenstein=False, scroll_dim=None, singular_points=None):
    """Catalog rows for genus lo..hi as a list of dicts."""
    hi = lo if hi is None else hi
    return _json.loads(_core.catalog_json(lo, hi, non_gorenstein, scroll_dim, singular_points))


def audit(fixture):
    """Recompute a stored table; returns {"matched": n, "flagged": [...]}."""
    return _json.loads(_core.audit_json(fixture))


__all__ = [name for name in dir() if not name.startswith("_")]
