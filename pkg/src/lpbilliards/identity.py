"""Canonical representatives of parameter vectors and near-duplicate merging."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import wrap_unit


@dataclass(frozen=True)
class CanonicalForm:
    theta: np.ndarray
    orientation_flipped: bool
    shift_applied: int


def canonicalize(theta) -> CanonicalForm:
    """Lexicographically smallest of the 2N cyclic shifts of the vector and
    of its reversal, after reduction mod 1.

    ``shift_applied`` is the k with ``canonical = roll(source, -k)``, where
    source is the (possibly reversed) reduced input.
    """
    t = wrap_unit(np.asarray(theta, dtype=float))
    n = t.size
    best = None
    for flipped, seq in ((False, t), (True, t[::-1])):
        for k in range(n):
            cand = tuple(np.roll(seq, -k).tolist())
            if best is None or cand < best[0]:
                best = (cand, flipped, k)
    cand, flipped, k = best
    return CanonicalForm(np.array(cand), flipped, k)


def circular_distance(a, b) -> float:
    d = np.abs(np.asarray(a, dtype=float) - np.asarray(b, dtype=float))
    d = np.minimum(d, 1.0 - d)
    return float(np.linalg.norm(d))


def _order_key(item):
    return (item.alpha, tuple(np.asarray(item.theta).tolist()))


def coalesce_groups(orbits: Sequence) -> list[tuple[object, list]]:
    """Greedy merge in ascending-alpha order.

    Items need ``theta`` (canonical), ``alpha`` and ``perimeter``
    attributes. A candidate joins the first kept orbit closer than the sum
    of the two alphas; otherwise it is kept. Returns (survivor, members)
    pairs sorted by (perimeter, theta).
    """
    groups: list[tuple[object, list]] = []
    for item in sorted(orbits, key=_order_key):
        for kept, members in groups:
            if circular_distance(item.theta, kept.theta) < item.alpha + kept.alpha:
                members.append(item)
                break
        else:
            groups.append((item, [item]))
    groups.sort(key=lambda g: (g[0].perimeter, tuple(np.asarray(g[0].theta).tolist())))
    return groups


def coalesce(orbits: Sequence) -> list:
    return [kept for kept, _ in coalesce_groups(orbits)]
