"""G2 acting on the six-sphere: octonions, Samelson structures and the sphere tensor."""

import json

from . import _octosphere
from ._octosphere import (
    ConsistencyError,
    DomainError,
    IndeterminateError,
    ModeError,
    NonTangentError,
    best_chart,
    chart_contains,
    f_matrix,
    f_pullback,
    f_pushforward,
    frame_at,
    intersection_dims,
    is_orthogonal_structure,
    j_matrix,
    j_operator,
    j_tensor,
    nijenhuis_algebra_max,
    nijenhuis_sphere,
    octonion_mul,
    octonion_table,
    random_g2_group,
    real_basis,
    root_basis,
    theta,
)


def extract_polys(alpha="1", b="1"):
    """Exact polynomial matrix elements; alpha and b as exact strings such as "1/3" or "2/sqrt3"."""
    return json.loads(_octosphere._polys_json(str(alpha), str(b)))


def verify(seed=1, samples=100, tol=None, exact=False, moduli=None):
    """Run the verification suites and return the report as a dict."""
    return json.loads(_octosphere._verify_json(seed, samples, dict(tol or {}), exact, list(moduli or [])))

