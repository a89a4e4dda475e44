"""Classical action variables evaluated on quantum eigenvalues."""

from .windows import turning_points, window_action
from .image import image_boundary, inside_image
from .actions import (
    EtildeMode,
    actions_ellipsoidal,
    actions_prolate,
    actions_oblate,
    actions_lame,
    actions_spherical,
    actions_cylindrical,
    spherical_quadrature,
    cylindrical_quadrature,
    focus_focus_actions,
    state_etilde,
    state_actions,
)

__all__ = [
    "turning_points",
    "window_action",
    "image_boundary",
    "inside_image",
    "EtildeMode",
    "actions_ellipsoidal",
    "actions_prolate",
    "actions_oblate",
    "actions_lame",
    "actions_spherical",
    "actions_cylindrical",
    "spherical_quadrature",
    "cylindrical_quadrature",
    "focus_focus_actions",
    "state_etilde",
    "state_actions",
]
