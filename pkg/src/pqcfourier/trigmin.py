"""Global minimum of a real trigonometric polynomial over one period.

The derivative of a degree ``n`` polynomial has at most ``2n`` zeros per
period.  A scan on ``32 n + 17`` equispaced points brackets every sign change
``- -> +`` of the derivative; each bracket is refined by Newton's method with
a bisection safeguard, and the best refined point wins.
"""

from __future__ import annotations

import math

import numpy as np

from .fourier import TWO_PI, TrigPolynomial

NEWTON_TOL = 1e-13
NEWTON_MAXITER = 60


def minimize_degree1(a0: float, beta: float, gamma: float) -> tuple[float, float]:
    """Minimum of ``a0 + beta sin t + gamma cos t``.

    The minimum sits opposite to ``atan2(beta, gamma)`` and equals
    ``a0 - hypot(beta, gamma)``.
    """
    r = math.hypot(beta, gamma)
    if r == 0:
        return 0.0, float(a0)
    t = (math.atan2(beta, gamma) + math.pi) % TWO_PI
    return t, float(a0 - r)


class _Normalized:
    # g(s) and its derivatives on the integer-frequency axis
    def __init__(self, p: TrigPolynomial):
        self.k = np.asarray(p.freqs, dtype=float)
        self.c = p.coeffs
        self.scale = float(np.sum(np.abs(self.k * self.c))) + 1e-300

    def _e(self, s):
        return np.exp(1j * np.multiply.outer(np.asarray(s, dtype=float), self.k))

    def value(self, s):
        return (self._e(s) @ self.c).real

    def d1(self, s):
        return (self._e(s) @ (1j * self.k * self.c)).real

    def d2(self, s):
        return (self._e(s) @ (-(self.k**2) * self.c)).real


def _refine(g: _Normalized, lo: float, hi: float) -> float:
    x = 0.5 * (lo + hi)
    for _ in range(NEWTON_MAXITER):
        d = g.d1(x)
        if abs(d) <= NEWTON_TOL * g.scale or hi - lo <= 4e-16 * max(1.0, abs(x)):
            break
        if d < 0:
            lo = x
        else:
            hi = x
        curv = g.d2(x)
        x_new = x - d / curv if curv > 0 else None
        x = x_new if x_new is not None and lo < x_new < hi else 0.5 * (lo + hi)
    return x


def local_minima(p: TrigPolynomial) -> list[tuple[float, float]]:
    """Refined local-minimum candidates ``(s, g(s))`` on the normalized axis.

    Returns at most ``max(1, 2 * max_freq)`` entries, sorted by ``s`` in
    ``[0, 2 pi)``.
    """
    g = _Normalized(p)
    n = p.max_freq
    if n == 0 or not np.any(np.abs(g.k * g.c) > 0):
        return [(0.0, float(g.value(0.0)))]
    count = 32 * n + 17
    grid = np.arange(count + 1) * (TWO_PI / count)
    d = g.d1(grid)
    d[-1] = d[0]
    found = []
    for i in range(count):
        if d[i] < 0 <= d[i + 1]:
            found.append(_refine(g, grid[i], grid[i + 1]))
    # the discrete minimum catches close root pairs hidden inside one cell
    vals = g.value(grid[:-1])
    i = int(np.argmin(vals))
    if not found or min(g.value(np.asarray(found))) > vals[i]:
        lo, hi = grid[i] - TWO_PI / count, grid[i] + TWO_PI / count
        if g.d1(lo) < 0 <= g.d1(hi):
            found.append(_refine(g, lo, hi))
        else:
            found.append(grid[i])
    s = np.unique(np.mod(found, TWO_PI))
    return [(float(x), float(v)) for x, v in zip(s, g.value(s))]


def minimize_trig(p: TrigPolynomial) -> tuple[float, float]:
    """``(t_star, value)`` with ``t_star`` in ``[0, 2 pi / alpha)`` on the caller's axis.

    Equal minima are resolved toward the smallest ``t_star``.
    """
    cands = local_minima(p)
    best = min(v for _, v in cands)
    slack = 1e-12 * (1 + abs(best))
    s, v = min((x, v) for x, v in cands if v <= best + slack)
    return s / p.alpha, v
