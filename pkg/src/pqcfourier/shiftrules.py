"""Closed-form derivative rules for the two smallest difference sets.

``shift_rule_2ev`` needs ``D = {0, +-1}`` (two distinct eigenvalues) and two
evaluations; ``four_point_rule_3ev`` needs ``D = {0, +-1, +-2}`` (three evenly
spaced eigenvalues) and four.  Wider supports go through :mod:`.fourier`.
Both rules take ``alpha`` so they can act on the caller's parameter axis.
"""

from __future__ import annotations

import math

from .fourier import Evaluator


def shift_rule_2ev(f: Evaluator, t: float = 0.0, *, alpha: float = 1.0) -> float:
    """``alpha * (f(t + pi/(2 alpha)) - f(t - pi/(2 alpha))) / 2``."""
    h = math.pi / (2 * alpha)
    return alpha * (f(t + h) - f(t - h)) / 2


def four_point_rule_3ev(f: Evaluator, t: float = 0.0, *, alpha: float = 1.0) -> tuple[float, float, float]:
    """Derivative at ``t`` from samples at ``t +- pi/4`` and ``t +- 3pi/4`` (normalized).

    With ``f(t + s) = a + b1 sin s + b2 sin 2s + g1 cos s + g2 cos 2s`` the
    four points cancel ``g2`` and give

        b1 = [f(pi/4) - f(-pi/4) + f(3pi/4) - f(-3pi/4)] / (2 sqrt 2)
        b2 = [f(pi/4) - f(-pi/4) - f(3pi/4) + f(-3pi/4)] / 4

    Returns ``(derivative, b1, b2)``; the derivative is ``alpha * (b1 + 2 b2)``.
    """
    q = math.pi / (4 * alpha)
    fp1, fm1 = f(t + q), f(t - q)
    fp3, fm3 = f(t + 3 * q), f(t - 3 * q)
    b1 = (fp1 - fm1 + fp3 - fm3) / (2 * math.sqrt(2))
    b2 = (fp1 - fm1 - fp3 + fm3) / 4
    return alpha * (b1 + 2 * b2), b1, b2
