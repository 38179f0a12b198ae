"""Moment curves, the orbitope B_4 and metric thickenings of the circle."""

import numpy as np

from ._core import (
    InternalError,
    OrbitopeError,
    bu_circle_search,
    chi_counts,
    classify_face,
    det_direct,
    diameter,
    edge_predicate_b2k,
    eval_poly,
    from_roots,
    gauge,
    geodesic_dist,
    homotopy_probe,
    miss_origin_bound,
    nullspace_lambda,
    origin_in_conv,
    pushforward_sm,
    radial_project,
    regular_simplex,
    same_sign_condition,
    sign_pattern,
    simplex_diameter,
    sine_product,
    sm,
    verify_miss_origin,
    wasserstein1,
)


def sample_circle_map(f, grid):
    """Rows f(2 pi i / grid) for i in range(grid)."""
    return np.array([np.asarray(f(2.0 * np.pi * i / grid), dtype=float) for i in range(grid)])


__all__ = [name for name in dir() if not name.startswith("_") and name != "np"]
