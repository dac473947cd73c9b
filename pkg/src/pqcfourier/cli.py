"""Command line front end; every command prints one JSON document.

Exit status: 0 success, 1 input error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from .circuit import Restriction, expectation
from .circuit_io import load_circuit
from .errors import InputError, NumericalError
from .fourier import derivative_trig, reconstruct
from .optimizer import TrainerConfig, coordinate_descent
from .sampler import SampledRestriction, ShotConfig, sample_expectation
from .shiftrules import four_point_rule_3ev, shift_rule_2ev
from .spectrum import DEFAULT_MAX_DENOMINATOR, DEFAULT_TOL, parameter_frequencies

D_2EV = (-1, 0, 1)
D_3EV = (-2, -1, 0, 1, 2)


def _vector(text: str) -> np.ndarray:
    try:
        return np.array([float(x) for x in text.split(",") if x.strip()], dtype=float)
    except ValueError:
        raise InputError(f"cannot parse parameter vector {text!r}") from None


def _shots(args):
    if args.shots is None:
        return None
    return ShotConfig(args.shots, args.seed if args.seed is not None else 0)


def _evaluator(prob, theta, j, shots, rng):
    if shots is None:
        return Restriction(prob.circuit, theta, prob.state, prob.observable, j)
    return SampledRestriction(prob.circuit, theta, prob.state, prob.observable, j, shots, rng=rng)


def _freqs(prob, j, args):
    return parameter_frequencies(prob.circuit, j, args.tol, args.max_den)


def cmd_eval(args, prob):
    theta = _vector(args.theta)
    shots = _shots(args)
    if shots is None:
        return {"value": expectation(prob.circuit, theta, prob.state, prob.observable), "evaluations": 1}
    est, err = sample_expectation(prob.circuit, theta, prob.state, prob.observable, shots)
    return {"value": est, "stderr": err, "shots": shots.shots, "evaluations": 1}


def cmd_spectrum(args, prob):
    indices = range(prob.circuit.num_params) if args.param is None else [args.param]
    out = []
    for j in indices:
        if not 0 <= j < prob.circuit.num_params:
            raise InputError(f"parameter index {j} out of range")
        out.append({"param": j, **_freqs(prob, j, args).to_dict()})
    return {"parameters": out}


def cmd_fourier(args, prob):
    theta = _vector(args.theta)
    fs = _freqs(prob, args.param, args)
    shots = _shots(args)
    rng = np.random.default_rng(shots.seed) if shots else None
    f = _evaluator(prob, theta, args.param, shots, rng)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        p = reconstruct(f, fs, args.method, seed=args.seed, offset=args.offset)
    return {
        "param": args.param,
        "D": list(fs.D),
        "frequencies": list(p.freqs),
        **p.to_dict(),
        "evaluations": f.calls,
        "notices": [str(w.message) for w in caught],
    }


def cmd_grad(args, prob):
    theta = _vector(args.theta)
    shots = _shots(args)
    rng = np.random.default_rng(shots.seed) if shots else None
    grad, total = [], 0
    for j in range(prob.circuit.num_params):
        fs = _freqs(prob, j, args)
        if fs.is_trivial:
            grad.append(0.0)
            continue
        f = _evaluator(prob, theta, j, shots, rng)
        if args.method == "shift2":
            if fs.D != D_2EV:
                raise InputError(f"shift2 needs D = {{0, +-1}} but parameter {j} has D = {list(fs.D)}")
            grad.append(shift_rule_2ev(f, 0.0, alpha=fs.alpha))
        elif args.method == "shift4":
            if fs.D != D_3EV:
                raise InputError(f"shift4 needs D = {{0, +-1, +-2}} but parameter {j} has D = {list(fs.D)}")
            grad.append(four_point_rule_3ev(f, 0.0, alpha=fs.alpha)[0])
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                p = reconstruct(f, fs, "equidistant")
            grad.append(derivative_trig(p, 0.0))
        total += f.calls
    return {"gradient": grad, "evaluations": total, "method": args.method}


def cmd_train(args, prob):
    theta0 = _vector(args.theta0)
    config = TrainerConfig(
        max_sweeps=args.max_sweeps,
        improvement_tol=args.tol,
        reconstruction=args.method,
        seed=args.seed if args.seed is not None else 0,
        reuse_current_value=args.reuse,
    )
    freqs = [parameter_frequencies(prob.circuit, j, args.spectral_tol, args.max_den) for j in range(prob.circuit.num_params)]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = coordinate_descent(prob.circuit, prob.state, prob.observable, theta0, freqs, config, _shots(args))
    return report.to_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pqcfourier", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--circuit", required=True, help="circuit JSON file")
        p.add_argument("--max-qubits", type=int, default=None)
        p.add_argument("--shots", type=int, default=None, help="estimate every evaluation from this many shots")
        p.add_argument("--seed", type=int, default=None)
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "expectation value at theta")
    p.add_argument("--theta", required=True)

    p = add("spectrum", cmd_spectrum, "frequency sets of the parameters")
    p.add_argument("--param", type=int, default=None)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-den", type=int, default=DEFAULT_MAX_DENOMINATOR)

    p = add("fourier", cmd_fourier, "Fourier coefficients along one parameter")
    p.add_argument("--theta", required=True)
    p.add_argument("--param", type=int, required=True)
    p.add_argument("--method", choices=["equidistant", "random", "generic"], default="equidistant")
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-den", type=int, default=DEFAULT_MAX_DENOMINATOR)

    p = add("grad", cmd_grad, "gradient at theta")
    p.add_argument("--theta", required=True)
    p.add_argument("--method", choices=["fourier", "shift2", "shift4"], default="fourier")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-den", type=int, default=DEFAULT_MAX_DENOMINATOR)

    p = add("train", cmd_train, "coordinate descent from theta0")
    p.add_argument("--theta0", required=True)
    p.add_argument("--max-sweeps", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-8, help="stop when a sweep improves less than this")
    p.add_argument("--method", choices=["equidistant", "random"], default="equidistant")
    p.add_argument("--reuse", action="store_true", help="reuse the known current energy as the t=0 sample")
    p.add_argument("--spectral-tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--max-den", type=int, default=DEFAULT_MAX_DENOMINATOR)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    try:
        prob = load_circuit(args.circuit, args.max_qubits)
        report = args.func(args, prob)
    except (InputError, OSError) as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return 2
    print(json.dumps(report))
    return 0


def main():
    sys.exit(run())
