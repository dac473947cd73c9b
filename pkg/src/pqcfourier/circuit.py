"""Parameterized circuits ``U(theta) = exp(-i theta_m H_m) V_{m-1} ... exp(-i theta_1 H_1)``
and exact expectation values ``tr(M U rho U^H)`` on a dense simulator.

Parameter indices are 0-based.  Qubit 0 is the most significant (leftmost)
tensor factor, matching the reading order of Pauli words like ``"XZ"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Sequence, Union

import numpy as np

from .errors import DimensionMismatch, ImaginaryResidual, IndexOutOfRange, InputError
from .linalg import HermitianOperator, apply_evolution, eigendecompose, evolve, is_unitary

MAX_QUBITS = 10

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_matrix(word: str) -> np.ndarray:
    try:
        return reduce(np.kron, (PAULI[c] for c in word.upper()))
    except KeyError as exc:
        raise InputError(f"invalid Pauli letter {exc.args[0]!r} in word {word!r}") from None
    except TypeError:
        raise InputError("empty Pauli word") from None


def embed(op, targets: Sequence[int], qubits: int) -> np.ndarray:
    """Lift a ``k``-qubit operator acting on ``targets`` to the full register."""
    op = np.asarray(op, dtype=complex)
    targets = list(targets)
    k = len(targets)
    if op.shape != (2**k, 2**k):
        raise DimensionMismatch(f"operator of shape {op.shape} does not act on {k} qubit(s)")
    if len(set(targets)) != k or any(not 0 <= q < qubits for q in targets):
        raise InputError(f"invalid targets {targets} for a {qubits}-qubit register")
    if targets == list(range(qubits)):
        return op
    rest = [q for q in range(qubits) if q not in targets]
    full = np.kron(op, np.eye(2 ** len(rest)))
    perm = list(np.argsort(targets + rest))
    t = full.reshape([2] * (2 * qubits)).transpose(perm + [qubits + p for p in perm])
    return t.reshape(2**qubits, 2**qubits)


@dataclass(frozen=True)
class PauliTerm:
    coefficient: float
    word: str

    def __post_init__(self):
        if not np.isfinite(self.coefficient):
            raise InputError("Pauli coefficient must be finite")
        if not self.word or any(c not in "IXYZ" for c in self.word.upper()):
            raise InputError(f"invalid Pauli word {self.word!r}")

    @property
    def qubits(self) -> int:
        return len(self.word)

    def matrix(self) -> np.ndarray:
        return self.coefficient * pauli_matrix(self.word)


def pauli_sum_matrix(terms: Sequence[PauliTerm]) -> np.ndarray:
    if not terms:
        raise InputError("empty Pauli sum")
    n = terms[0].qubits
    if any(t.qubits != n for t in terms):
        raise DimensionMismatch("Pauli words of different lengths in one sum")
    return sum(t.matrix() for t in terms)


class Observable:
    """Hermitian observable given as a matrix or as a sum of Pauli terms."""

    def __init__(self, matrix=None, pauli_sum: Sequence[PauliTerm] | None = None):
        if (matrix is None) == (pauli_sum is None):
            raise InputError("give exactly one of matrix or pauli_sum")
        self.pauli_sum = tuple(pauli_sum) if pauli_sum is not None else None
        self._matrix = None if matrix is None else np.asarray(matrix, dtype=complex)

    @classmethod
    def from_pauli(cls, *terms: tuple[float, str]) -> "Observable":
        """``Observable.from_pauli((1.0, "ZI"), (0.5, "XX"))``."""
        return cls(pauli_sum=[PauliTerm(float(c), w) for c, w in terms])

    @cached_property
    def operator(self) -> HermitianOperator:
        m = self._matrix if self._matrix is not None else pauli_sum_matrix(self.pauli_sum)
        return eigendecompose(m)

    @property
    def matrix(self) -> np.ndarray:
        return self.operator.matrix

    @property
    def dim(self) -> int:
        if self._matrix is not None:
            return self._matrix.shape[0]
        return 2 ** self.pauli_sum[0].qubits


class QuantumState:
    """Pure state vector or density matrix."""

    def __init__(self, vector=None, density=None, tol: float = 1e-10):
        if (vector is None) == (density is None):
            raise InputError("give exactly one of vector or density")
        if vector is not None:
            v = np.asarray(vector, dtype=complex).ravel()
            if abs(np.linalg.norm(v) - 1) > tol:
                raise InputError("state vector is not normalized")
            self.vector, self._density = v, None
        else:
            rho = np.asarray(density, dtype=complex)
            if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
                raise DimensionMismatch("density matrix must be square")
            if np.max(np.abs(rho - rho.conj().T)) > tol:
                raise InputError("density matrix is not Hermitian")
            if abs(np.trace(rho) - 1) > tol:
                raise InputError("density matrix does not have unit trace")
            if np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0] < -tol:
                raise InputError("density matrix is not positive semidefinite")
            self.vector, self._density = None, rho

    @classmethod
    def basis(cls, bits: str) -> "QuantumState":
        if not bits or any(b not in "01" for b in bits):
            raise InputError(f"invalid basis label {bits!r}")
        v = np.zeros(2 ** len(bits), dtype=complex)
        v[int(bits, 2)] = 1
        return cls(vector=v)

    @property
    def is_pure(self) -> bool:
        return self.vector is not None

    @property
    def dim(self) -> int:
        return len(self.vector) if self.is_pure else self._density.shape[0]

    def density(self) -> np.ndarray:
        if self.is_pure:
            return np.outer(self.vector, self.vector.conj())
        return self._density

    def to_density(self) -> "QuantumState":
        return QuantumState(density=self.density())


@dataclass(frozen=True, eq=False)
class Fixed:
    unitary: np.ndarray

    def __post_init__(self):
        if not is_unitary(self.unitary):
            raise InputError("fixed element is not unitary within 1e-10")


@dataclass(frozen=True, eq=False)
class Parameterized:
    """``exp(-i theta[index] * generator)``."""

    generator: HermitianOperator
    index: int


CircuitElement = Union[Fixed, Parameterized]


@dataclass(frozen=True, eq=False)
class ParameterizedCircuit:
    """Ordered elements, applied left to right in time."""

    qubits: int
    elements: tuple
    num_params: int = field(default=-1)
    max_qubits: int = MAX_QUBITS

    def __post_init__(self):
        if self.qubits < 1:
            raise InputError("qubit count must be positive")
        if self.qubits > self.max_qubits:
            raise InputError(f"{self.qubits} qubits exceed the configured limit of {self.max_qubits}")
        object.__setattr__(self, "elements", tuple(self.elements))
        dim = 2**self.qubits
        used = set()
        for el in self.elements:
            if isinstance(el, Fixed):
                shape = np.shape(el.unitary)
            elif isinstance(el, Parameterized):
                shape = el.generator.matrix.shape
                if el.index < 0:
                    raise IndexOutOfRange(f"negative parameter index {el.index}")
                used.add(el.index)
            else:
                raise InputError(f"unknown circuit element {el!r}")
            if shape != (dim, dim):
                raise DimensionMismatch(f"element of shape {shape} in a {self.qubits}-qubit circuit")
        m = self.num_params if self.num_params >= 0 else (max(used) + 1 if used else 0)
        missing = set(range(m)) - used
        if missing or (used and max(used) >= m):
            raise IndexOutOfRange(f"parameters must be 0..{m - 1}, each used at least once")
        object.__setattr__(self, "num_params", m)

    @property
    def dim(self) -> int:
        return 2**self.qubits

    def generators(self, index: int) -> list[HermitianOperator]:
        """Every generator driven by parameter ``index``."""
        return [el.generator for el in self.elements if isinstance(el, Parameterized) and el.index == index]

    def unitary(self, theta) -> np.ndarray:
        theta = self._check_theta(theta)
        u = np.eye(self.dim, dtype=complex)
        for el in self.elements:
            op = el.unitary if isinstance(el, Fixed) else evolve(el.generator, theta[el.index])
            u = op @ u
        return u

    def _check_theta(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=float).ravel()
        if len(theta) != self.num_params:
            raise DimensionMismatch(f"theta has {len(theta)} entries, circuit has {self.num_params} parameters")
        return theta

    def run(self, theta, state: QuantumState) -> np.ndarray:
        """Final state vector (pure input) or density matrix (mixed input)."""
        theta = self._check_theta(theta)
        if state.dim != self.dim:
            raise DimensionMismatch(f"state of dimension {state.dim} for a {self.dim}-dimensional circuit")
        if state.is_pure:
            psi = state.vector
            for el in self.elements:
                if isinstance(el, Fixed):
                    psi = el.unitary @ psi
                else:
                    psi = apply_evolution(el.generator, theta[el.index], psi)
            return psi
        rho = state.density()
        for el in self.elements:
            op = el.unitary if isinstance(el, Fixed) else evolve(el.generator, theta[el.index])
            rho = op @ rho @ op.conj().T
        return rho


def expectation(circuit: ParameterizedCircuit, theta, state: QuantumState, obs: Observable) -> float:
    """Exact ``tr(M U(theta) rho U(theta)^H)``."""
    if obs.dim != circuit.dim:
        raise DimensionMismatch(f"observable of dimension {obs.dim} for a {circuit.dim}-dimensional circuit")
    out = circuit.run(theta, state)
    m = obs.matrix
    if out.ndim == 1:
        value = np.vdot(out, m @ out)
    else:
        value = np.trace(m @ out)
    if abs(value.imag) > 1e-9 * max(1.0, float(np.max(np.abs(m)))):
        raise ImaginaryResidual(f"expectation has imaginary part {value.imag:.3g}")
    return float(value.real)


class Restriction:
    """``f(t) = F(theta + t e_j)``; counts how often it has been called."""

    def __init__(self, circuit, theta, state, obs, index: int):
        if not 0 <= index < circuit.num_params:
            raise IndexOutOfRange(f"parameter index {index} outside 0..{circuit.num_params - 1}")
        self.circuit, self.state, self.obs, self.index = circuit, state, obs, index
        self.theta = circuit._check_theta(theta).copy()
        self.calls = 0

    def __call__(self, t: float) -> float:
        self.calls += 1
        theta = self.theta.copy()
        theta[self.index] += t
        return expectation(self.circuit, theta, self.state, self.obs)


def restrict(circuit, theta, state, obs, index: int) -> Restriction:
    return Restriction(circuit, theta, state, obs, index)


class CountingEvaluator:
    """Wrap any univariate callable and count its invocations."""

    def __init__(self, f):
        self.f = f
        self.calls = 0

    def __call__(self, t: float) -> float:
        self.calls += 1
        return self.f(t)
