"""Reflection-law check that does not use the parametric derivatives.

Normals come from the gradient of the implicit function |x|^p + |y|^p, so
a bug in the curve derivatives or the Hessian cannot hide here.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePolygonError
from .functional import MIN_CHORD, as_params
from .geometry import BoundarySpec, boundary_point


@dataclass(frozen=True)
class ReflectionReport:
    max_residual: float
    per_vertex: np.ndarray


def inward_normal(spec: BoundarySpec, xy) -> np.ndarray:
    xy = np.asarray(xy, dtype=float)
    g = np.sign(xy) * np.abs(xy) ** (spec.p - 1.0)
    return -g / np.linalg.norm(g, axis=-1, keepdims=True)


def reflect(u, n):
    return u - 2.0 * np.sum(u * n, axis=-1, keepdims=True) * n


def reflection_residual(spec: BoundarySpec, theta) -> ReflectionReport:
    pts = boundary_point(spec, as_params(theta))
    out = np.roll(pts, -1, axis=0) - pts
    lengths = np.linalg.norm(out, axis=1)
    if lengths.min() < MIN_CHORD:
        raise DegeneratePolygonError("consecutive vertices coincide")
    v = out / lengths[:, None]
    u = np.roll(v, 1, axis=0)  # incoming direction at vertex i is the previous chord
    res = np.linalg.norm(reflect(u, inward_normal(spec, pts)) - v, axis=1)
    return ReflectionReport(float(res.max()), res)
