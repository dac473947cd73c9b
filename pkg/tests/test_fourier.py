import warnings

import numpy as np
import pytest

from conftest import central_difference, generator_pool, random_problem
from pqcfourier import (
    AliasingFallback,
    DuplicatePoints,
    TrigPolynomial,
    derivative_trig,
    eval_trig,
    reconstruct_equidistant,
    reconstruct_generic,
    reconstruct_random,
    restrict,
)
from pqcfourier.circuit import CountingEvaluator
from pqcfourier.fourier import TWO_PI, aliases, equispaced_points
from pqcfourier.linalg import condition_number
from pqcfourier.spectrum import FrequencySet, parameter_frequencies

D1 = FrequencySet(1.0, (0, 1))
D2 = FrequencySet(1.0, (0, 1, 2))
CONST = FrequencySet(1.0, (0,))


def coeffs(p):
    return {k: p.coefficient(k) for k in p.freqs}


def test_generic_cos():
    p = reconstruct_generic(np.cos, 1, [0, 2 * np.pi / 3, 4 * np.pi / 3])
    c = coeffs(p)
    assert c[1] == pytest.approx(0.5, abs=1e-14) and c[-1] == pytest.approx(0.5, abs=1e-14)
    assert abs(c[0]) < 1e-14
    assert p.samples_used == 3


def test_generic_constant():
    p = reconstruct_generic(lambda t: 0.7, 0, [1.234])
    assert p.freqs == (0,) and p.coefficient(0) == pytest.approx(0.7)


def test_generic_sin2():
    p = reconstruct_generic(lambda t: np.sin(2 * t), 2)
    # sin 2t = (e^{2it} - e^{-2it}) / 2i
    assert p.coefficient(2) == pytest.approx(-0.5j, abs=1e-14)
    assert p.coefficient(-2) == pytest.approx(0.5j, abs=1e-14)
    for k in (-1, 0, 1):
        assert abs(p.coefficient(k)) < 1e-14


def test_generic_arbitrary_points_match_samples(rng):
    f = lambda t: 0.3 + np.cos(t) - 2 * np.sin(3 * t)
    pts = rng.uniform(0, TWO_PI, 7)
    p = reconstruct_generic(f, 3, pts)
    assert np.allclose(p(pts), f(pts), atol=1e-8 * 3)
    assert all(abs(k) <= 3 for k in p.freqs)


def test_generic_errors():
    with pytest.raises(DuplicatePoints):
        reconstruct_generic(np.cos, 1, [0.0, 1.0, 1.0])
    with pytest.raises(DuplicatePoints):
        reconstruct_generic(np.cos, 1, [0.0, 1.0, TWO_PI])
    with pytest.raises(ValueError):
        reconstruct_generic(np.cos, 1, [0.0, 1.0])


def test_equidistant_cos():
    f = CountingEvaluator(np.cos)
    p = reconstruct_equidistant(f, D1, 0)
    assert f.calls == 3
    assert p.coefficient(1) == pytest.approx(0.5, abs=1e-14)
    assert p.coefficient(-1) == pytest.approx(0.5, abs=1e-14)


def test_equidistant_points_and_offset():
    seen = []
    reconstruct_equidistant(lambda t: seen.append(t) or np.cos(t), D2, 3)
    assert np.allclose(seen, TWO_PI * (3 + np.arange(5)) / 5)
    p = reconstruct_equidistant(lambda t: np.sin(t) + 0.2 * np.cos(2 * t), D2, -2)
    assert p.coefficient(2) == pytest.approx(0.1, abs=1e-14)
    assert p.coefficient(1) == pytest.approx(-0.5j, abs=1e-14)


def test_equidistant_constant():
    f = CountingEvaluator(lambda t: -0.25)
    p = reconstruct_equidistant(f, CONST)
    assert f.calls == 1 and p.coefficient(0) == -0.25


def test_equidistant_value_at_zero_saves_a_call():
    f = CountingEvaluator(np.cos)
    p = reconstruct_equidistant(f, D2, 0, value_at_zero=1.0)
    assert f.calls == 4 and p.samples_used == 4
    assert p.coefficient(1) == pytest.approx(0.5, abs=1e-14)


def test_transmon_equidistant_aliases_and_falls_back(rng):
    circuit, state, obs = random_problem(rng, pool=[generator_pool()[-1]])
    fs = parameter_frequencies(circuit, 0)
    assert aliases(fs)  # 5 = -4 (mod 9)
    f = restrict(circuit, [0.4], state, obs, 0)
    with pytest.warns(AliasingFallback):
        p = reconstruct_equidistant(f, fs)
    assert f.calls == 13
    probe = np.linspace(0, TWO_PI / fs.alpha, 1000)
    oracle = reconstruct_generic(restrict(circuit, [0.4], state, obs, 0), fs.max_freq, alpha=fs.alpha)
    assert np.max(np.abs(p(probe) - oracle(probe))) <= 1e-7


def test_transmon_random_uses_nine(rng):
    circuit, state, obs = random_problem(rng, pool=[generator_pool()[-1]])
    fs = parameter_frequencies(circuit, 0)
    f = restrict(circuit, [0.4], state, obs, 0)
    p = reconstruct_random(f, fs, seed=5)
    assert f.calls == 9
    probe = np.linspace(0, TWO_PI / fs.alpha, 1000)
    exact = np.array([f(t) for t in probe])
    assert np.max(np.abs(p(probe) - exact)) <= 1e-7


def test_random_cos_any_seed():
    for seed in range(20):
        p = reconstruct_random(np.cos, D1, seed)
        assert p.coefficient(1) == pytest.approx(0.5, abs=1e-7)
        assert p.coefficient(-1) == pytest.approx(0.5, abs=1e-7)


def test_random_constant():
    p = reconstruct_random(lambda t: 2.5, CONST, 3)
    assert p.samples_used == 1 and p.coefficient(0) == 2.5


def test_random_agrees_with_equidistant_over_seeds():
    from pqcfourier.circuit import pauli_matrix
    from pqcfourier.linalg import eigendecompose

    rng = np.random.default_rng(7)
    gen = eigendecompose((pauli_matrix("ZI") + pauli_matrix("IZ")) / 2)
    circuit, state, obs = random_problem(rng, pool=[gen])
    fs = parameter_frequencies(circuit, 0)
    assert fs.D == D2.D
    f = restrict(circuit, [1.1], state, obs, 0)
    ref = reconstruct_equidistant(f, fs)
    for seed in range(200):
        p = reconstruct_random(f, fs, seed)
        assert np.max(np.abs(p.coeffs - ref.coeffs)) <= 1e-7


def test_random_persistent_ill_conditioning():
    from pqcfourier import PersistentIllConditioning

    with pytest.raises(PersistentIllConditioning):
        reconstruct_random(np.cos, D2, 0, cond_threshold=1.0)


def test_eval_trig_basics(rng):
    p = TrigPolynomial.from_dict({0: 1.0})
    assert eval_trig(p, rng.uniform()) == 1.0
    cos = TrigPolynomial.from_dict({-1: 0.5, 1: 0.5})
    assert eval_trig(cos, np.pi) == pytest.approx(-1.0)
    assert derivative_trig(cos, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert derivative_trig(cos, np.pi / 2) == pytest.approx(-1.0)
    assert derivative_trig(p, 1.3) == 0.0


def test_real_form_roundtrip():
    p = TrigPolynomial.from_real(0.3, [1.0, -2.0], [0.5, 0.25])
    a0, beta, gamma = p.real_form()
    assert a0 == pytest.approx(0.3)
    assert beta == pytest.approx({1: 1.0, 2: -2.0}) and gamma == pytest.approx({1: 0.5, 2: 0.25})
    t = 0.77
    assert p(t) == pytest.approx(0.3 + np.sin(t) - 2 * np.sin(2 * t) + 0.5 * np.cos(t) + 0.25 * np.cos(2 * t))


def test_eval_matches_simulator(rng):
    circuit, state, obs = random_problem(rng, pool=generator_pool()[:2])
    fs = parameter_frequencies(circuit, 0)
    f = restrict(circuit, [0.0], state, obs, 0)
    p = reconstruct_equidistant(f, fs)
    ts = rng.uniform(-10, 10, 50)
    assert max(abs(p(t) - f(t)) for t in ts) <= 1e-7


def test_derivative_vs_finite_difference(rng):
    for _ in range(10):
        circuit, state, obs = random_problem(rng)
        fs = parameter_frequencies(circuit, 0)
        f = restrict(circuit, [0.0], state, obs, 0)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", AliasingFallback)
            p = reconstruct_equidistant(f, fs)
        for t in rng.uniform(-np.pi, np.pi, 20):
            assert abs(derivative_trig(p, t) - central_difference(f, t)) <= 1e-6


def test_hermitian_symmetry_and_realness(rng):
    circuit, state, obs = random_problem(rng)
    fs = parameter_frequencies(circuit, 0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", AliasingFallback)
        p = reconstruct_equidistant(restrict(circuit, [0.0], state, obs, 0), fs)
    for k in p.freqs:
        assert abs(p.coefficient(-k) - np.conj(p.coefficient(k))) <= 1e-9
    ts = rng.uniform(-5, 5, 20)
    imag = np.exp(1j * np.outer(p.alpha * ts, p.freqs)) @ p.coeffs
    assert np.max(np.abs(imag.imag)) <= 1e-9


def test_method_equivalence(rng):
    for _ in range(20):
        circuit, state, obs = random_problem(rng, pool=generator_pool()[:5])
        fs = parameter_frequencies(circuit, 0)
        f = restrict(circuit, [0.0], state, obs, 0)
        eq = reconstruct_equidistant(f, fs)
        rnd = reconstruct_random(f, fs, int(rng.integers(1 << 31)))
        gen = reconstruct_generic(f, fs.max_freq, alpha=fs.alpha)
        for k in range(-fs.max_freq, fs.max_freq + 1):
            assert abs(eq.coefficient(k) - gen.coefficient(k)) <= 1e-7
            assert abs(rnd.coefficient(k) - gen.coefficient(k)) <= 1e-7


def test_prop1_matrix_nonsingular(rng):
    for _ in range(1000):
        n = int(rng.integers(0, 5))
        pts = rng.uniform(0, TWO_PI, 2 * n + 1)
        a = np.exp(1j * np.outer(pts, np.arange(-n, n + 1)))
        assert np.isfinite(condition_number(a))


def test_mean_is_constant_term(rng):
    circuit, state, obs = random_problem(rng)
    fs = parameter_frequencies(circuit, 0)
    f = restrict(circuit, [0.0], state, obs, 0)
    p = reconstruct_random(f, fs, 11)
    grid = equispaced_points(4096) / fs.alpha
    assert abs(np.mean([f(t) for t in grid]) - p.coefficient(0).real) <= 1e-6


def test_alpha_scaling_of_derivative():
    # f(t) = cos(2t): FrequencySet alpha = 2, levels (0, 1)
    fs = FrequencySet(2.0, (0, 1))
    p = reconstruct_equidistant(lambda t: np.cos(2 * t), fs)
    assert p.coefficient(1) == pytest.approx(0.5)
    for t in (0.1, 0.9, 2.0):
        assert p(t) == pytest.approx(np.cos(2 * t))
        assert derivative_trig(p, t) == pytest.approx(-2 * np.sin(2 * t))
