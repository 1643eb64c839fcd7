import numpy as np

from lpbilliards.functional import evaluate, perimeter


def random_theta(rng, n, min_gap=0.02, axis_margin=0.0):
    """Random vertices with a minimum circular gap, optionally kept
    ``axis_margin`` away from the axis points (multiples of 1/4)."""
    while True:
        t = rng.random(n)
        s = np.sort(t)
        if np.diff(s, append=s[0] + 1).min() <= min_gap:
            continue
        r = (4 * t) % 1
        if axis_margin and np.minimum(r, 1 - r).min() < 4 * axis_margin:
            continue
        return t


def fd_gradient(spec, theta, h=1e-7):
    g = np.empty(theta.size)
    for i in range(theta.size):
        e = np.zeros(theta.size)
        e[i] = h
        g[i] = (perimeter(spec, theta + e) - perimeter(spec, theta - e)) / (2 * h)
    return g


def fd_hessian(spec, theta, h=1e-6):
    n = theta.size
    H = np.empty((n, n))
    for i in range(n):
        e = np.zeros(n)
        e[i] = h
        H[:, i] = (evaluate(spec, theta + e).gradient - evaluate(spec, theta - e).gradient) / (2 * h)
    return H


def rel_err(approx, exact):
    return np.linalg.norm(approx - exact) / max(np.linalg.norm(exact), 1.0)
