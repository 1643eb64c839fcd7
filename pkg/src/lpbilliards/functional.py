"""Perimeter of inscribed polygons with exact gradient and Hessian."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneratePolygonError, InvalidInputError
from .geometry import BoundarySpec, boundary_jet, boundary_point, wrap_unit

MIN_CHORD = 1e-9


def as_params(theta) -> np.ndarray:
    """Validate a parameter vector and reduce it into [0, 1)."""
    theta = np.asarray(theta, dtype=float)
    if theta.ndim != 1 or theta.size < 2:
        raise InvalidInputError("parameter vector needs at least 2 entries")
    if not np.all(np.isfinite(theta)):
        raise InvalidInputError("parameter vector has non-finite entries")
    return wrap_unit(theta)


@dataclass(frozen=True)
class FunctionalEval:
    value: float
    gradient: np.ndarray
    hessian: np.ndarray
    chords: np.ndarray


def _chords(points):
    d = np.roll(points, -1, axis=0) - points
    lengths = np.hypot(d[:, 0], d[:, 1])
    if lengths.min() < MIN_CHORD:
        i = int(lengths.argmin())
        raise DegeneratePolygonError(
            f"chord {i} has length {lengths[i]:.3e} < {MIN_CHORD:g}"
        )
    return d, lengths


def perimeter(spec: BoundarySpec, theta) -> float:
    theta = as_params(theta)
    _, lengths = _chords(boundary_point(spec, theta))
    # fsum is order independent, so cyclic shifts and reversal give identical values
    return math.fsum(lengths)


def evaluate(spec: BoundarySpec, theta) -> FunctionalEval:
    """Perimeter, gradient and Hessian at ``theta``.

    Chord i joins vertex i to vertex i+1. With u the chord direction and
    P = I - u u^T its normal projector, the second derivatives of the chord
    length are v_a^T P v_b / l plus the curvature terms u . gamma''.
    """
    theta = as_params(theta)
    n = theta.size
    pts, vel, acc = boundary_jet(spec, theta)
    d, lengths = _chords(pts)
    u = d / lengths[:, None]
    nxt = np.roll(np.arange(n), -1)

    va, vb = vel, vel[nxt]
    ua = np.einsum("ij,ij->i", u, va)
    ub = np.einsum("ij,ij->i", u, vb)
    grad = -ua + np.roll(ub, 1)

    def proj(x, ux, y, uy):
        return (np.einsum("ij,ij->i", x, y) - ux * uy) / lengths

    h_aa = proj(va, ua, va, ua) - np.einsum("ij,ij->i", u, acc)
    h_bb = proj(vb, ub, vb, ub) + np.einsum("ij,ij->i", u, acc[nxt])
    h_ab = -proj(va, ua, vb, ub)

    hess = np.zeros((n, n))
    for i in range(n):
        j = nxt[i]
        hess[i, i] += h_aa[i]
        hess[j, j] += h_bb[i]
        hess[i, j] += h_ab[i]
        hess[j, i] += h_ab[i]
    hess = 0.5 * (hess + hess.T)
    return FunctionalEval(math.fsum(lengths), grad, hess, lengths)
