"""Repulsion gathering in convex polygons."""

from ._repulse import (
    Polygon,
    RepulseError,
    accumulation_map,
    count_acute,
    find_gather_point,
    first_accumulation,
    flow,
    flow_svg,
    gather_target,
    kernel,
    plan,
    simulate,
    slab_membership,
)

__all__ = [
    "Polygon",
    "RepulseError",
    "accumulation_map",
    "count_acute",
    "find_gather_point",
    "first_accumulation",
    "flow",
    "flow_svg",
    "gather_target",
    "kernel",
    "plan",
    "simulate",
    "slab_membership",
]
