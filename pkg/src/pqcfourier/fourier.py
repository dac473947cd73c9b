"""Trigonometric reconstruction of a restricted expectation function.

Coefficient convention: ``f(t) = sum_k c_k exp(i k alpha t)`` over the
integer support ``k in D``.  ``alpha`` is the spectral scale of the
generator, so ``g(s) = f(s / alpha)`` is 2*pi periodic with integer
frequencies.  All sampling happens on the normalized ``s`` axis; every
public function that takes or returns an angle uses the caller's ``t`` axis.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import AliasingFallback, DuplicatePoints, InputError, PersistentIllConditioning
from .linalg import ILL_CONDITIONED, condition_number, solve_linear
from .spectrum import FrequencySet

TWO_PI = 2 * np.pi
MAX_REDRAWS = 16

Evaluator = Callable[[float], float]


@dataclass(frozen=True, eq=False)
class TrigPolynomial:
    """``f(t) = sum_k coeffs[k] * exp(i k alpha t)`` for ``k`` in ``freqs``.

    ``samples_used``, ``condition`` and ``attempts`` record how the
    polynomial was obtained (circuit evaluations, condition number of the
    final linear system, number of point draws).
    """

    freqs: tuple[int, ...]
    coeffs: np.ndarray
    alpha: float = 1.0
    samples_used: int = 0
    condition: float = 1.0
    attempts: int = 1

    def __post_init__(self):
        freqs = tuple(int(k) for k in self.freqs)
        coeffs = np.asarray(self.coeffs, dtype=complex).ravel()
        if len(freqs) != len(coeffs):
            raise InputError("one coefficient per frequency required")
        if len(set(freqs)) != len(freqs):
            raise InputError("duplicate frequencies")
        order = np.argsort(freqs)
        object.__setattr__(self, "freqs", tuple(freqs[i] for i in order))
        object.__setattr__(self, "coeffs", coeffs[order])

    @classmethod
    def from_dict(cls, coeffs: dict[int, complex], alpha: float = 1.0) -> "TrigPolynomial":
        return cls(tuple(coeffs), np.array(list(coeffs.values()), dtype=complex), alpha)

    @classmethod
    def from_real(cls, a0: float, beta: Sequence[float] = (), gamma: Sequence[float] = (), alpha: float = 1.0):
        """Build ``a0 + sum_k beta_k sin(k s) + gamma_k cos(k s)``, ``k = 1, 2, ...``."""
        n = max(len(beta), len(gamma))
        beta = np.pad(np.asarray(beta, dtype=float), (0, n - len(beta)))
        gamma = np.pad(np.asarray(gamma, dtype=float), (0, n - len(gamma)))
        c = {0: complex(a0)}
        for k in range(1, n + 1):
            c[k] = (gamma[k - 1] - 1j * beta[k - 1]) / 2
            c[-k] = np.conj(c[k])
        return cls.from_dict(c, alpha)

    def coefficient(self, k: int) -> complex:
        try:
            return complex(self.coeffs[self.freqs.index(k)])
        except ValueError:
            return 0j

    def real_form(self) -> tuple[float, dict[int, float], dict[int, float]]:
        """``(a0, beta, gamma)`` with ``beta_k = -2 Im c_k`` and ``gamma_k = 2 Re c_k``."""
        pos = [k for k in self.freqs if k > 0]
        beta = {k: -2 * self.coefficient(k).imag for k in pos}
        gamma = {k: 2 * self.coefficient(k).real for k in pos}
        return self.coefficient(0).real, beta, gamma

    @property
    def max_freq(self) -> int:
        return max(abs(k) for k in self.freqs)

    @property
    def period(self) -> float:
        return TWO_PI / self.alpha

    def __call__(self, t):
        return eval_trig(self, t)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "coefficients": {str(k): [c.real, c.imag] for k, c in zip(self.freqs, self.coeffs)},
            "samples_used": self.samples_used,
            "condition": self.condition,
        }


def _phases(freqs, s) -> np.ndarray:
    return np.exp(1j * np.multiply.outer(np.asarray(s, dtype=float), np.asarray(freqs, dtype=float)))


def eval_trig(p: TrigPolynomial, t):
    """Value of ``p`` at ``t`` (scalar or array) on the caller's axis."""
    v = _phases(p.freqs, p.alpha * np.asarray(t, dtype=float)) @ p.coeffs
    return float(v.real) if np.ndim(v) == 0 else v.real


def derivative_trig(p: TrigPolynomial, t):
    """``d/dt p(t) = alpha * g'(alpha t)``."""
    k = np.asarray(p.freqs, dtype=float)
    v = _phases(p.freqs, p.alpha * np.asarray(t, dtype=float)) @ (1j * k * p.coeffs)
    v = p.alpha * v
    return float(v.real) if np.ndim(v) == 0 else v.real


def second_derivative_trig(p: TrigPolynomial, t):
    k = np.asarray(p.freqs, dtype=float)
    v = _phases(p.freqs, p.alpha * np.asarray(t, dtype=float)) @ (-(k**2) * p.coeffs)
    v = p.alpha**2 * v
    return float(v.real) if np.ndim(v) == 0 else v.real


def _symmetrize(freqs: Sequence[int], c: np.ndarray) -> np.ndarray:
    idx = {k: i for i, k in enumerate(freqs)}
    out = c.copy()
    for k, i in idx.items():
        j = idx.get(-k)
        if j is not None:
            out[i] = (c[i] + np.conj(c[j])) / 2
    return out


def _fit(freqs, s, values, *, warn=True) -> tuple[np.ndarray, float]:
    a = _phases(freqs, s)
    c, cond = solve_linear(a, np.asarray(values, dtype=complex), warn=warn)
    return _symmetrize(freqs, c), cond


def _sample(f: Evaluator, s, alpha: float) -> np.ndarray:
    return np.array([f(x / alpha) for x in s], dtype=float)


def equispaced_points(count: int, offset: int = 0) -> np.ndarray:
    """``2 pi (offset + j) / count`` for ``j = 0 .. count-1``."""
    return TWO_PI * (offset + np.arange(count)) / count


def reconstruct_generic(
    f: Evaluator, max_freq: int, points: Sequence[float] | None = None, *, alpha: float = 1.0
) -> TrigPolynomial:
    """Fit all frequencies ``-max_freq .. max_freq`` from ``2*max_freq + 1`` samples.

    ``points`` live on the normalized axis (``f`` is sampled at
    ``points / alpha``) and must be distinct modulo ``2*pi``; they default
    to an equispaced grid.
    """
    n = int(max_freq)
    if n < 0:
        raise InputError("max_freq must be nonnegative")
    s = equispaced_points(2 * n + 1) if points is None else np.asarray(points, dtype=float).ravel()
    if len(s) != 2 * n + 1:
        raise InputError(f"need exactly {2 * n + 1} points for max_freq={n}, got {len(s)}")
    wrapped = np.sort(np.mod(s, TWO_PI))
    if len(s) > 1:
        gaps = np.diff(np.append(wrapped, wrapped[0] + TWO_PI))
        if np.min(gaps) <= 1e-12:
            raise DuplicatePoints("sample points must be pairwise distinct modulo 2*pi")
    freqs = tuple(range(-n, n + 1))
    y = _sample(f, s, alpha)
    c, cond = _fit(freqs, s, y)
    return TrigPolynomial(freqs, c, alpha, samples_used=len(s), condition=cond)


def aliases(freqs: FrequencySet | Sequence[int], modulus: int | None = None) -> bool:
    """True if two frequencies coincide modulo ``modulus`` (default ``|D|``)."""
    d = freqs.D if isinstance(freqs, FrequencySet) else tuple(freqs)
    m = len(d) if modulus is None else modulus
    return len({k % m for k in d}) < len(d)


def reconstruct_equidistant(
    f: Evaluator, freqs: FrequencySet, a: int = 0, *, value_at_zero: float | None = None
) -> TrigPolynomial:
    """Reconstruct from ``S = |D|`` samples at ``2 pi (a + j) / S``.

    The system is the Vandermonde matrix ``z_k ** j`` with
    ``z_k = exp(2 pi i k / S)``, columns scaled by ``z_k ** a``.  It is only
    invertible when ``D`` has distinct residues modulo ``S``; otherwise an
    :class:`AliasingFallback` warning is issued and the full grid of
    ``2*max_freq + 1`` points is used instead.

    ``value_at_zero``, if known, replaces the evaluation at ``t = 0`` when
    that is one of the sample points.
    """
    d = freqs.D
    size = len(d)
    if aliases(d):
        warnings.warn(
            f"D={list(d)} aliases modulo {size}; using {2 * freqs.max_freq + 1} equispaced points",
            AliasingFallback,
            stacklevel=2,
        )
        s = equispaced_points(2 * freqs.max_freq + 1, a)
        kk = range(-freqs.max_freq, freqs.max_freq + 1)
    else:
        s = equispaced_points(size, a)
        kk = d
    y = np.empty(len(s))
    used = 0
    for j, x in enumerate(s):
        if value_at_zero is not None and (a + j) % len(s) == 0:
            y[j] = value_at_zero
        else:
            y[j] = f(x / freqs.alpha)
            used += 1
    z = np.exp(2j * np.pi * np.asarray(kk, dtype=float) / len(s))
    vander = np.power.outer(z, np.arange(len(s))).T * z**a
    c, cond = solve_linear(vander, y.astype(complex))
    c = _symmetrize(tuple(kk), c)
    return TrigPolynomial(tuple(kk), c, freqs.alpha, samples_used=used, condition=cond)


def reconstruct_random(
    f: Evaluator,
    freqs: FrequencySet,
    seed: int | np.random.Generator | None = None,
    *,
    max_attempts: int = MAX_REDRAWS,
    cond_threshold: float = ILL_CONDITIONED,
) -> TrigPolynomial:
    """Reconstruct from ``|D|`` points drawn uniformly from ``[0, 2 pi)``.

    The draw is repeated (before any evaluation of ``f``) while the
    condition number of ``exp(i k t_j)`` is at least ``cond_threshold``.

    Raises:
        PersistentIllConditioning: after ``max_attempts`` bad draws.
    """
    rng = np.random.default_rng(seed)
    d = freqs.D
    cond = np.inf
    for attempt in range(1, max_attempts + 1):
        s = rng.uniform(0.0, TWO_PI, len(d))
        cond = condition_number(_phases(d, s))
        if cond < cond_threshold:
            break
    else:
        raise PersistentIllConditioning(
            f"{max_attempts} random draws all had condition number >= {cond_threshold:g} (last {cond:.3g})"
        )
    y = _sample(f, s, freqs.alpha)
    c, cond = _fit(d, s, y, warn=False)
    return TrigPolynomial(d, c, freqs.alpha, samples_used=len(s), condition=cond, attempts=attempt)


def reconstruct(f: Evaluator, freqs: FrequencySet, method: str = "equidistant", *, seed=None, offset: int = 0):
    """Dispatch on ``method``: ``equidistant``, ``random`` or ``generic``."""
    if method == "equidistant":
        return reconstruct_equidistant(f, freqs, offset)
    if method == "random":
        return reconstruct_random(f, freqs, seed)
    if method == "generic":
        return reconstruct_generic(f, freqs.max_freq, equispaced_points(2 * freqs.max_freq + 1, offset), alpha=freqs.alpha)
    raise InputError(f"unknown reconstruction method {method!r}")
