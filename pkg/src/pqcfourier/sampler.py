"""Shot-noise estimates of expectation values.

Each shot is a projective measurement of the observable itself: the outcome
is an eigenvalue ``m_i`` of ``M`` drawn with probability ``<e_i|rho(theta)|e_i>``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Observable, ParameterizedCircuit, QuantumState
from .errors import DimensionMismatch, IndexOutOfRange, InputError


@dataclass(frozen=True)
class ShotConfig:
    shots: int
    seed: int = 0

    def __post_init__(self):
        if int(self.shots) < 1:
            raise InputError("shots must be >= 1")


def outcome_distribution(circuit: ParameterizedCircuit, theta, state: QuantumState, obs: Observable):
    """Eigenvalues of ``M`` and their probabilities in the final state."""
    if obs.dim != circuit.dim:
        raise DimensionMismatch(f"observable of dimension {obs.dim} for a {circuit.dim}-dimensional circuit")
    out = circuit.run(theta, state)
    v = obs.operator.eigenvectors
    if out.ndim == 1:
        probs = np.abs(v.conj().T @ out) ** 2
    else:
        probs = np.einsum("ij,ik,kj->j", v.conj(), out, v).real
    probs = np.clip(probs, 0.0, None)
    return obs.operator.eigenvalues, probs / probs.sum()


def draw(values: np.ndarray, probs: np.ndarray, shots: int, rng: np.random.Generator) -> tuple[float, float]:
    """Sample mean and standard error of ``shots`` i.i.d. outcomes."""
    counts = rng.multinomial(shots, probs)
    mean = float(counts @ values) / shots
    if shots == 1:
        return mean, 0.0
    var = (float(counts @ values**2) - shots * mean**2) / (shots - 1)
    return mean, float(np.sqrt(max(var, 0.0) / shots))


def sample_expectation(circuit, theta, state, obs, config: ShotConfig, rng: np.random.Generator | None = None):
    """``(estimate, stderr)`` from ``config.shots`` measurements.

    A fresh generator seeded with ``config.seed`` is used unless ``rng`` is given.
    """
    rng = np.random.default_rng(config.seed) if rng is None else rng
    values, probs = outcome_distribution(circuit, theta, state, obs)
    return draw(values, probs, int(config.shots), rng)


class SampledRestriction:
    """Shot-noise version of :class:`~pqcfourier.circuit.Restriction`.

    Successive calls draw from one generator, so repeated evaluations at the
    same ``t`` give independent estimates.
    """

    def __init__(self, circuit, theta, state, obs, index: int, config: ShotConfig, rng=None):
        if not 0 <= index < circuit.num_params:
            raise IndexOutOfRange(f"parameter index {index} outside 0..{circuit.num_params - 1}")
        self.circuit, self.state, self.obs, self.index = circuit, state, obs, index
        self.theta = circuit._check_theta(theta).copy()
        self.config = config
        self.rng = np.random.default_rng(config.seed) if rng is None else rng
        self.calls = 0
        self.last_stderr = 0.0

    def __call__(self, t: float) -> float:
        self.calls += 1
        theta = self.theta.copy()
        theta[self.index] += t
        est, self.last_stderr = sample_expectation(
            self.circuit, theta, self.state, self.obs, self.config, rng=self.rng
        )
        return est
