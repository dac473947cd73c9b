"""Fourier calculus for parameterized quantum circuits.

Exact restriction of a circuit expectation to one parameter, reconstruction
of its trigonometric expansion from a handful of evaluations, ancilla-free
derivatives, and coordinate descent that jumps to each coordinate's minimum.
"""

from .circuit import (
    CountingEvaluator,
    Fixed,
    Observable,
    Parameterized,
    ParameterizedCircuit,
    PauliTerm,
    QuantumState,
    expectation,
    pauli_matrix,
    restrict,
)
from .errors import (
    AliasingFallback,
    DimensionMismatch,
    DuplicatePoints,
    IllConditioned,
    ImaginaryResidual,
    IndexOutOfRange,
    InputError,
    NoConvergence,
    NotCommensurable,
    NotHermitian,
    NumericalError,
    PersistentIllConditioning,
    PQCError,
    Singular,
)
from .fourier import (
    TrigPolynomial,
    derivative_trig,
    eval_trig,
    reconstruct,
    reconstruct_equidistant,
    reconstruct_generic,
    reconstruct_random,
)
from .linalg import HermitianOperator, eigendecompose, evolve, solve_linear
from .optimizer import TrainerConfig, TrainReport, coordinate_descent
from .sampler import SampledRestriction, ShotConfig, sample_expectation
from .shiftrules import four_point_rule_3ev, shift_rule_2ev
from .spectrum import FrequencySet, circuit_frequencies, difference_set, parameter_frequencies, rationalize
from .trigmin import minimize_degree1, minimize_trig

__version__ = "0.1.0"
