"""Named demo control polygons shipped with the CLI.

Nine planar cubics, labelled "a" through "i", chosen to exercise loops,
cusps, symmetric shapes and repeated control points.
"""

from __future__ import annotations

from .curve import ControlPolygon
from .errors import ArgumentError

PRESET_POLYGONS: dict[str, tuple[tuple[float, float], ...]] = {
    "a": ((0.0, 2.0), (3.5, 0.0), (3.5, 4.0), (0.0, 0.0)),
    "b": ((0.0, 1.0), (3.5, 0.0), (3.5, 4.0), (0.0, 1.0)),
    "c": ((0.0, 1.0), (4.5, 4.0), (5.5, 0.0), (3.5, 1.0)),
    "d": ((0.0, 1.0), (4.0, 0.5), (2.5, 3.0), (6.0, 3.0)),
    "e": ((0.0, 1.5), (4.0, 0.5), (5.0, 4.0), (3.0, 2.0)),
    "f": ((0.0, 3.5), (4.0, 0.5), (5.0, 4.0), (0.0, 0.0)),
    "g": ((0.0, 3.5), (4.0, 0.5), (4.5, 2.5), (0.0, 0.0)),
    "h": ((0.0, 0.0), (2.0, 2.5), (4.5, 3.0), (6.5, 1.5)),
    "i": ((0.0, 3.5), (5.0, 1.0), (5.0, 1.0), (0.0, 0.0)),
}


def preset_polygon(name: str) -> ControlPolygon:
    """Look up one of the named demo polygons."""
    try:
        return ControlPolygon(PRESET_POLYGONS[name])
    except KeyError:
        known = ", ".join(sorted(PRESET_POLYGONS))
        raise ArgumentError(f"unknown preset {name!r}; choose one of {known}") from None
