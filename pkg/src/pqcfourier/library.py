"""Named gates, standard generators and random circuit builders."""

from __future__ import annotations

import numpy as np

from .circuit import PAULI, Fixed, Parameterized, ParameterizedCircuit, embed, pauli_matrix
from .errors import InputError
from .linalg import HermitianOperator, eigendecompose

_S2 = 1 / np.sqrt(2)

GATES = {
    "H": np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    "X": PAULI["X"],
    "Y": PAULI["Y"],
    "Z": PAULI["Z"],
    "S": np.diag([1, 1j]).astype(complex),
    "T": np.diag([1, np.exp(1j * np.pi / 4)]).astype(complex),
    "CNOT": np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
}


def gate(name: str, targets, qubits: int) -> Fixed:
    try:
        u = GATES[name.upper()]
    except KeyError:
        raise InputError(f"unknown gate {name!r}; known gates: {', '.join(GATES)}") from None
    return Fixed(embed(u, targets, qubits))


def pauli_generator(word: str, scale: float = 0.5) -> HermitianOperator:
    """``scale * P`` for a Pauli word ``P``; the default gives ``exp(-i t P / 2)`` rotations."""
    return eigendecompose(scale * pauli_matrix(word))


def transmon_generator(b: float, c: float) -> HermitianOperator:
    """Cross-resonance generator ``X(x)1 - b Z(x)X + c 1(x)X``.

    Its eigenvalues are ``+-c +- sqrt(b^2 + 1)``.
    """
    return eigendecompose(pauli_matrix("XI") - b * pauli_matrix("ZX") + c * pauli_matrix("IX"))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_state_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (a + a.conj().T) / 2


def random_pauli_word(qubits: int, rng: np.random.Generator) -> str:
    while True:
        word = "".join(rng.choice(list("IXYZ"), size=qubits))
        if set(word) != {"I"}:
            return word


def random_circuit(qubits: int, generators, rng: np.random.Generator) -> ParameterizedCircuit:
    """``V_m exp(-i t_m H_m) ... V_1 exp(-i t_1 H_1) V_0`` with Haar-random ``V_j``.

    ``generators`` is a list of :class:`HermitianOperator` on the full
    register, one per parameter.
    """
    dim = 2**qubits
    elements = [Fixed(random_unitary(dim, rng))]
    for j, h in enumerate(generators):
        elements.append(Parameterized(h, j))
        elements.append(Fixed(random_unitary(dim, rng)))
    return ParameterizedCircuit(qubits, elements)


def random_pauli_circuit(qubits: int, num_params: int, rng: np.random.Generator) -> ParameterizedCircuit:
    """Random circuit whose generators are random Pauli words divided by 2."""
    gens = [pauli_generator(random_pauli_word(qubits, rng)) for _ in range(num_params)]
    return random_circuit(qubits, gens, rng)
