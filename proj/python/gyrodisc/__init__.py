"""Möbius gyrovector arithmetic and Menelaus-type identities in the Poincaré disc."""

from ._core import (
    GyroError,
    SceneError,
    canonical_scene,
    collinear,
    converse_check,
    distance,
    euclidean_limit_sweep,
    f_eval,
    gamma_correct,
    gyr,
    gyroline_point,
    gyroline_through,
    intersect,
    mobius_add,
    mobius_neg,
    quad_menelaus,
    render_svg,
    run_campaign,
    scalar_mul,
    transversal_product,
    triangle_menelaus,
    verify_scene,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
