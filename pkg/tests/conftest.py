import numpy as np
import pytest

from pqcfourier import Observable, Parameterized, ParameterizedCircuit, QuantumState
from pqcfourier.library import pauli_generator


@pytest.fixture
def rng():
    return np.random.default_rng(20181231)


def rx_problem():
    """exp(-i t X/2) on |0>, measured in Z: F(t) = cos t."""
    circuit = ParameterizedCircuit(1, [Parameterized(pauli_generator("X"), 0)])
    return circuit, QuantumState.basis("0"), Observable.from_pauli((1.0, "Z"))


def ry_rz_problem(measure="X"):
    """RY(t1) then RZ(t2) on |0>: <X> = sin t1 cos t2, <Z> = cos t1."""
    circuit = ParameterizedCircuit(
        1, [Parameterized(pauli_generator("Y"), 0), Parameterized(pauli_generator("Z"), 1)]
    )
    return circuit, QuantumState.basis("0"), Observable.from_pauli((1.0, measure))


def central_difference(f, t, h=1e-5):
    return (f(t + h) - f(t - h)) / (2 * h)


def generator_pool():
    """Commensurable two-qubit generators with D of size 3, 5 and 9."""
    from pqcfourier.circuit import pauli_matrix
    from pqcfourier.library import transmon_generator
    from pqcfourier.linalg import eigendecompose

    return [
        eigendecompose(pauli_matrix("XI") / 2),
        eigendecompose(pauli_matrix("YZ") / 2),
        eigendecompose(pauli_matrix("ZZ")),
        eigendecompose((pauli_matrix("ZI") + pauli_matrix("IZ")) / 2),
        eigendecompose((pauli_matrix("XI") + pauli_matrix("IY")) * 1.5),
        transmon_generator(0.75, 0.25),
    ]


def random_problem(rng, num_params=1, pool=None):
    """Random 2-qubit circuit with generators drawn from ``pool`` plus random state and observable."""
    from pqcfourier import Observable, QuantumState
    from pqcfourier.library import random_circuit, random_hermitian, random_state_vector

    pool = generator_pool() if pool is None else pool
    gens = [pool[i] for i in rng.integers(len(pool), size=num_params)]
    circuit = random_circuit(2, gens, rng)
    state = QuantumState(vector=random_state_vector(4, rng))
    obs = Observable(matrix=random_hermitian(4, rng))
    return circuit, state, obs


GRID_POINTS = 100_000


def grid_minimum(values):
    """``(raw, refined)`` minimum of periodic samples on a uniform grid.

    ``refined`` fits a parabola through every discrete local minimum and its
    two neighbours; the raw grid minimum overshoots the true one by up to
    ``f'' h^2 / 8`` which is ~1e-8 at 1e5 points for degree-6 polynomials.
    """
    import numpy as np

    y = np.asarray(values)
    left, right = np.roll(y, 1), np.roll(y, -1)
    best = float(y.min())
    for i in np.flatnonzero((y <= left) & (y <= right)):
        a, b, c = left[i], y[i], right[i]
        den = a - 2 * b + c
        if den > 0:
            best = min(best, b - (a - c) ** 2 / (8 * den))
    return float(y.min()), best


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
