"""Morse signature and rotation number of critical polygons."""
from __future__ import annotations

from math import gcd
from typing import NamedTuple

import numpy as np

from .errors import ClassificationError


class MorseSignature(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    def __str__(self):
        return f"({self.n_plus},{self.n_minus},{self.n_zero})"


class RotationNumber(NamedTuple):
    r: int
    s: int

    def __str__(self):
        return f"{self.r}/{self.s}"


def morse_signature(hessian, zero_tol_rel: float = 1e-8) -> MorseSignature:
    h = np.asarray(hessian, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ClassificationError(f"expected a square matrix, got shape {h.shape}")
    if not np.allclose(h, h.T, rtol=0, atol=1e-10):
        raise ClassificationError("Hessian is not symmetric")
    try:
        lam = np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise ClassificationError(str(exc)) from exc
    if not np.all(np.isfinite(lam)):
        raise ClassificationError("non-finite eigenvalues")
    band = zero_tol_rel * max(1.0, float(np.abs(lam).max()))
    zero = np.abs(lam) < band
    return MorseSignature(
        int(np.sum((lam > 0) & ~zero)),
        int(np.sum((lam < 0) & ~zero)),
        int(np.sum(zero)),
    )


def winding(theta) -> float:
    """Sum of forward parameter increments around the polygon."""
    t = np.asarray(theta, dtype=float)
    return float(np.sum(np.mod(np.roll(t, -1) - t, 1.0)))


def rotation_number(theta) -> RotationNumber:
    t = np.asarray(theta, dtype=float)
    n = t.size
    w = winding(t)
    k = round(w)
    if abs(w - k) > 1e-6:
        raise ClassificationError(f"winding {w!r} is not an integer")
    k %= n
    if k == 0:
        return RotationNumber(0, 1)
    g = gcd(k, n)
    return RotationNumber(k // g, n // g)
