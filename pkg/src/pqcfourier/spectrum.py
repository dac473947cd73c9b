"""Canonical integer spectra and frequency supports.

A generator ``H`` with eigenvalues ``lambda_j`` is brought to the form
``lambda_j = shift + alpha * k_j`` with nonnegative integer levels ``k_j``,
``min k = 0`` and ``gcd(k) = 1``.  The shift only contributes a global phase,
so the restricted expectation ``f(t) = F(theta + t e_j)`` satisfies
``f(t) = g(alpha t)`` where ``g`` is a trigonometric polynomial whose
frequencies lie in the difference set ``D = {k_i - k_j}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import NotCommensurable
from .linalg import HermitianOperator, eigendecompose

DEFAULT_TOL = 1e-9
DEFAULT_MAX_DENOMINATOR = 10**6


@dataclass(frozen=True)
class FrequencySet:
    """Integer levels (ascending, starting at 0) and the scale ``alpha``."""

    alpha: float
    levels: tuple[int, ...]

    def __post_init__(self):
        levels = tuple(sorted({int(k) for k in self.levels}))
        if not levels or levels[0] != 0:
            raise ValueError(f"levels must start at 0, got {levels}")
        if reduce(math.gcd, levels, 0) > 1:
            raise ValueError(f"levels {levels} are not gcd-normalized")
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "alpha", float(self.alpha))

    @cached_property
    def D(self) -> tuple[int, ...]:
        return tuple(sorted({a - b for a in self.levels for b in self.levels}))

    @property
    def max_freq(self) -> int:
        return self.levels[-1]

    @property
    def size(self) -> int:
        return len(self.D)

    @property
    def is_trivial(self) -> bool:
        return self.D == (0,)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "levels": list(self.levels),
            "D": list(self.D),
            "max_freq": self.max_freq,
            "evaluations_needed": self.size,
        }


def _convergents(x: Fraction):
    h0, h1, k0, k1 = 0, 1, 1, 0
    while True:
        a = math.floor(x)
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        yield h1, k1
        x -= a
        if x == 0:
            return
        x = 1 / x


def _best_fraction(r: float, tol: float, max_denominator: int) -> tuple[int, int]:
    # accept p/q once the error is within tol of the 1/q grid spacing
    for p, q in _convergents(Fraction(r)):
        if q > max_denominator:
            break
        if q * abs(r - p / q) <= tol:
            return p, q
    raise NotCommensurable(
        f"ratio {r!r} has no rational approximation with denominator <= {max_denominator} at tol={tol:g}"
    )


def rationalize(
    values: Sequence[float], tol: float = DEFAULT_TOL, max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> tuple[float, list[int]]:
    """Find ``alpha > 0`` and coprime integers ``k`` with ``values ~= alpha * k``.

    Every value is divided by the one of largest magnitude and the ratio is
    expanded as a continued fraction.  A convergent ``p/q`` is accepted once
    ``q * |r - p/q| <= tol``, i.e. once the residual is small compared to the
    level spacing it implies.  Irrational ratios thus need denominators of
    order ``1/tol`` and are rejected when those exceed ``max_denominator``.

    Raises:
        NotCommensurable: no common scale within ``tol`` and ``max_denominator``.
    """
    if tol <= 0 or max_denominator < 1:
        raise ValueError("tol must be positive and max_denominator >= 1")
    v = np.asarray(values, dtype=float)
    ref = v[np.argmax(np.abs(v))]
    if ref == 0:
        raise ValueError("cannot rationalize an all-zero list")
    fracs = [_best_fraction(float(x / ref), tol, max_denominator) for x in v]
    lcm = reduce(math.lcm, (q for _, q in fracs), 1)
    ints = [p * (lcm // q) for p, q in fracs]
    g = reduce(math.gcd, ints, 0)
    ints = [k // g for k in ints]
    alpha = ref * g / lcm
    if alpha < 0:
        alpha, ints = -alpha, [-k for k in ints]
    resid = np.max(np.abs(v - alpha * np.asarray(ints, dtype=float)))
    if resid > tol * np.max(np.abs(v)):
        raise NotCommensurable(f"residual {resid:.3g} exceeds tolerance")
    return float(alpha), ints


def _distinct_shifted(eigenvalues: Iterable[float], tol: float) -> np.ndarray:
    ev = np.sort(np.asarray(list(eigenvalues), dtype=float))
    shifted = ev - ev[0]
    span = shifted[-1]
    if span <= tol * max(float(np.max(np.abs(ev))), 1e-300):
        return np.zeros(1)
    out = [0.0]
    start = 0.0
    for x in shifted[1:]:
        if x - start > tol * span:
            out.append(x)
            start = x
    return np.asarray(out)


def _as_operator(h) -> HermitianOperator:
    return h if isinstance(h, HermitianOperator) else eigendecompose(h)


def difference_set(
    h, tol: float = DEFAULT_TOL, max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> FrequencySet:
    """Canonical :class:`FrequencySet` of one generator.

    Eigenvalues are shifted so the smallest is 0, merged when closer than
    ``tol`` times the spectral range, rationalized, and divided by the gcd.
    A scalar generator gives ``D = {0}`` with ``alpha = 1``.
    """
    return combined_difference_set([h], tol, max_denominator)


def combined_difference_set(
    generators: Sequence, tol: float = DEFAULT_TOL, max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> FrequencySet:
    """Frequency support for a parameter shared by several generators.

    All spectra are rationalized against one common ``alpha``; the levels
    of the result are the Minkowski sum of the individual level sets, so its
    difference set is the sumset of the individual difference sets.
    """
    if not generators:
        raise ValueError("no generators given")
    spectra = [_distinct_shifted(_as_operator(h).eigenvalues, tol) for h in generators]
    flat = np.concatenate(spectra)
    if not np.any(flat):
        return FrequencySet(1.0, (0,))
    alpha, ints = rationalize(flat, tol, max_denominator)
    levels = {0}
    pos = 0
    for s in spectra:
        ks = ints[pos : pos + len(s)]
        pos += len(s)
        levels = {a + b for a in levels for b in ks}
    return FrequencySet(alpha, tuple(levels))


def parameter_frequencies(
    circuit, index: int, tol: float = DEFAULT_TOL, max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> FrequencySet:
    """:class:`FrequencySet` of parameter ``index`` of a circuit."""
    return combined_difference_set(circuit.generators(index), tol, max_denominator)


def circuit_frequencies(
    circuit, tol: float = DEFAULT_TOL, max_denominator: int = DEFAULT_MAX_DENOMINATOR
) -> list[FrequencySet]:
    return [parameter_frequencies(circuit, j, tol, max_denominator) for j in range(circuit.num_params)]
