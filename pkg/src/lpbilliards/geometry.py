"""Boundary curve of the planar L^p ball and its exact derivatives.

The curve is

    t -> (sgn(c) (|c| + eps)^(2/p), sgn(s) (|s| + eps)^(2/p)),
    c = cos(2 pi t), s = sin(2 pi t),

and all derivatives are taken of this regularized formula, so the
regularization is consistent between position, velocity and acceleration.
Every function accepts scalars or numpy arrays of parameters; the output
has a trailing axis of length 2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class BoundarySpec:
    p: float
    eps: float = 1e-14

    def __post_init__(self):
        if not np.isfinite(self.p) or self.p < 2:
            raise InvalidInputError(f"exponent p must be >= 2, got {self.p}")
        if not (0 < self.eps <= 1e-8):
            raise InvalidInputError(f"eps must lie in (0, 1e-8], got {self.eps}")

    @property
    def power(self) -> float:
        return 2.0 / self.p


def wrap_unit(t):
    """Reduce parameters into [0, 1).

    ``np.mod`` can return exactly 1.0 for tiny negative inputs; those are
    folded back to 0.
    """
    t = np.mod(np.asarray(t, dtype=float), 1.0)
    return np.where(t >= 1.0, 0.0, t)


def _check_finite(t):
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)):
        raise InvalidInputError("boundary parameter must be finite")
    return wrap_unit(t)


def _signed_power(c, a, eps):
    """Value and first two derivatives of sgn(c) (|c| + eps)^a in c."""
    sgn = np.sign(c)
    m = np.abs(c) + eps
    f0 = sgn * m**a
    # d/dc of sgn(c)|c| is 1 away from c = 0; the regularized branch keeps it finite at 0
    f1 = a * m ** (a - 1.0)
    f2 = sgn * a * (a - 1.0) * m ** (a - 2.0)
    return f0, f1, f2


def boundary_jet(spec: BoundarySpec, t):
    """Return (point, velocity, acceleration) at parameter(s) ``t``."""
    t = _check_finite(t)
    a, eps = spec.power, spec.eps
    c = np.cos(TWO_PI * t)
    s = np.sin(TWO_PI * t)
    fx, fx1, fx2 = _signed_power(c, a, eps)
    fy, fy1, fy2 = _signed_power(s, a, eps)
    dc, ds = -TWO_PI * s, TWO_PI * c
    ddc, dds = -(TWO_PI**2) * c, -(TWO_PI**2) * s
    point = np.stack([fx, fy], axis=-1)
    vel = np.stack([fx1 * dc, fy1 * ds], axis=-1)
    acc = np.stack([fx2 * dc**2 + fx1 * ddc, fy2 * ds**2 + fy1 * dds], axis=-1)
    return point, vel, acc


def boundary_point(spec: BoundarySpec, t):
    return boundary_jet(spec, t)[0]


def boundary_velocity(spec: BoundarySpec, t):
    return boundary_jet(spec, t)[1]


def boundary_acceleration(spec: BoundarySpec, t):
    return boundary_jet(spec, t)[2]


def implicit_level(spec: BoundarySpec, xy):
    """|x|^p + |y|^p, equal to 1 on the boundary."""
    xy = np.asarray(xy, dtype=float)
    return np.sum(np.abs(xy) ** spec.p, axis=-1)
