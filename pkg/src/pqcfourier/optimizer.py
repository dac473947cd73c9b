"""Coordinate descent that jumps to the exact minimum along each parameter.

For every parameter in turn the restriction ``f(t) = F(theta + t e_j)`` is
reconstructed from ``|D_j|`` evaluations, its global minimum is located, and
``theta_j`` is moved there.  Sweeps repeat until a full sweep lowers the
energy by less than ``improvement_tol``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .circuit import ParameterizedCircuit, Restriction, expectation
from .errors import InputError
from .fourier import TrigPolynomial, reconstruct_equidistant, reconstruct_random
from .sampler import SampledRestriction, ShotConfig
from .spectrum import FrequencySet, circuit_frequencies
from .trigmin import minimize_trig


@dataclass(frozen=True)
class TrainerConfig:
    max_sweeps: int = 100
    improvement_tol: float = 1e-8
    reconstruction: str = "equidistant"
    seed: int = 0
    reuse_current_value: bool = False

    def __post_init__(self):
        if self.max_sweeps < 1:
            raise InputError("max_sweeps must be >= 1")
        if not (self.improvement_tol > 0 and np.isfinite(self.improvement_tol)):
            raise InputError("improvement_tol must be positive and finite")
        if self.reconstruction not in ("equidistant", "random"):
            raise InputError(f"unknown reconstruction {self.reconstruction!r}")


@dataclass
class StepRecord:
    sweep: int
    index: int
    samples: int
    poly: TrigPolynomial
    t0: float
    energy: float

    def to_dict(self) -> dict:
        return {
            "sweep": self.sweep,
            "index": self.index,
            "samples": self.samples,
            "t0": self.t0,
            "energy": self.energy,
            "polynomial": self.poly.to_dict(),
        }


@dataclass
class TrainReport:
    theta: np.ndarray
    energy: float
    initial_energy: float
    evaluations: int
    sweeps: int
    status: str
    steps: list[StepRecord] = field(default_factory=list)

    @property
    def energies(self) -> list[float]:
        """Initial energy followed by the energy after every coordinate update."""
        return [self.initial_energy] + [s.energy for s in self.steps]

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "theta": [float(x) for x in self.theta],
            "energy": self.energy,
            "initial_energy": self.initial_energy,
            "evaluations": self.evaluations,
            "sweeps": self.sweeps,
            "steps": [s.to_dict() for s in self.steps],
        }


def coordinate_descent(
    circuit: ParameterizedCircuit,
    state,
    obs,
    theta0,
    freqs: Sequence[FrequencySet] | None = None,
    config: TrainerConfig | None = None,
    shots: ShotConfig | None = None,
) -> TrainReport:
    """Minimize ``F(theta) = tr(M U(theta) rho U(theta)^H)`` coordinate by coordinate.

    ``freqs`` defaults to the canonical frequency set of every parameter.
    Coordinates with ``D = {0}`` are skipped.  With ``shots`` every circuit
    evaluation becomes a shot-noise estimate.

    The energy recorded after each update is the minimum of the
    reconstructed polynomial, so no extra circuit evaluation is spent on it.
    """
    config = config or TrainerConfig()
    theta = np.array(theta0, dtype=float).ravel()
    if len(theta) != circuit.num_params:
        raise InputError(f"theta0 has {len(theta)} entries, circuit has {circuit.num_params} parameters")
    freqs = list(circuit_frequencies(circuit) if freqs is None else freqs)
    if len(freqs) != circuit.num_params:
        raise InputError("one FrequencySet per parameter required")

    point_rng = np.random.default_rng(config.seed)
    shot_rng = np.random.default_rng(shots.seed) if shots is not None else None
    reuse = config.reuse_current_value and config.reconstruction == "equidistant"

    steps: list[StepRecord] = []
    evaluations = 0
    current = None
    initial = None
    status = "max_sweeps_reached"
    sweep = 0
    for sweep in range(1, config.max_sweeps + 1):
        start = current
        for j, fs in enumerate(freqs):
            if fs.is_trivial:
                continue
            if shots is None:
                f = Restriction(circuit, theta, state, obs, j)
            else:
                f = SampledRestriction(circuit, theta, state, obs, j, shots, rng=shot_rng)
            if config.reconstruction == "equidistant":
                p = reconstruct_equidistant(f, fs, 0, value_at_zero=current if reuse else None)
            else:
                p = reconstruct_random(f, fs, point_rng)
            evaluations += f.calls
            if current is None:
                current = initial = start = float(p(0.0))
            t0, value = minimize_trig(p)
            here = float(p(0.0))
            if here - value <= 1e-12 * (1 + abs(here)):
                # flat or already optimal: stay put instead of jumping along round-off
                t0, value = 0.0, here
            elif t0 > p.period / 2:
                t0 -= p.period
            theta[j] += t0
            current = value
            steps.append(StepRecord(sweep, j, f.calls, p, t0, value))
        if current is None:
            # every coordinate is trivial: F is constant
            current = initial = expectation(circuit, theta, state, obs)
            evaluations += 1
            status = "converged"
            break
        if start - current < config.improvement_tol:
            status = "converged"
            break
    return TrainReport(theta, float(current), float(initial), evaluations, sweep, status, steps)
