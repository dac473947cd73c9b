"""JSON circuit documents.

Schema (version 1)::

    {
      "version": 1,
      "qubits": 2,
      "state": {"basis": "00"} | {"amplitudes": [[re, im], ...]} | {"density": [[[re, im], ...], ...]},
      "observable": {"pauli_sum": [{"coeff": 1.0, "word": "ZI"}, ...]} | {"matrix": [[[re, im], ...], ...]},
      "elements": [
        {"fixed": {"gate": "H", "targets": [0]}},
        {"fixed": {"matrix": [[...]], "targets": [0, 1]}},
        {"param": {"index": 0, "generator": {"pauli_sum": [...]} | {"matrix": [[...]]}, "targets": [1]}}
      ]
    }

Matrix entries are ``[re, im]`` pairs or plain reals.  Qubits and parameter
indices count from 0; ``targets`` defaults to the whole register.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .circuit import Fixed, Observable, Parameterized, ParameterizedCircuit, PauliTerm, QuantumState, embed, pauli_sum_matrix
from .errors import InputError, PQCError
from .library import gate
from .linalg import eigendecompose


class CircuitFormatError(InputError):
    pass


@dataclass
class CircuitProblem:
    circuit: ParameterizedCircuit
    state: QuantumState
    observable: Observable


def _fail(where: str, msg: str):
    raise CircuitFormatError(f"{where}: {msg}")


def _get(obj, key, where):
    if not isinstance(obj, dict):
        _fail(where, "expected an object")
    if key not in obj:
        _fail(where, f"missing field {key!r}")
    return obj[key]


def _complex(x, where) -> complex:
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(x)
    if isinstance(x, list) and len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
        return complex(x[0], x[1])
    _fail(where, f"expected a number or [re, im] pair, got {x!r}")


def _vector(data, where) -> np.ndarray:
    if not isinstance(data, list) or not data:
        _fail(where, "expected a non-empty list")
    return np.array([_complex(x, f"{where}[{i}]") for i, x in enumerate(data)])


def _matrix(data, where) -> np.ndarray:
    if not isinstance(data, list) or not data:
        _fail(where, "expected a non-empty list of rows")
    rows = [_vector(r, f"{where}[{i}]") for i, r in enumerate(data)]
    if any(len(r) != len(rows) for r in rows):
        _fail(where, "matrix must be square")
    return np.array(rows)


def _pauli_terms(data, where) -> list[PauliTerm]:
    if not isinstance(data, list) or not data:
        _fail(where, "expected a non-empty list of terms")
    terms = []
    for i, t in enumerate(data):
        w = f"{where}[{i}]"
        coeff, word = _get(t, "coeff", w), _get(t, "word", w)
        if not isinstance(coeff, (int, float)) or not isinstance(word, str):
            _fail(w, "coeff must be a number and word a string")
        try:
            terms.append(PauliTerm(float(coeff), word))
        except PQCError as exc:
            _fail(w, str(exc))
    return terms


def _operator_matrix(spec, where) -> np.ndarray:
    if isinstance(spec, dict) and "pauli_sum" in spec:
        try:
            return pauli_sum_matrix(_pauli_terms(spec["pauli_sum"], f"{where}.pauli_sum"))
        except CircuitFormatError:
            raise
        except PQCError as exc:
            _fail(where, str(exc))
    if isinstance(spec, dict) and "matrix" in spec:
        return _matrix(spec["matrix"], f"{where}.matrix")
    _fail(where, "expected 'pauli_sum' or 'matrix'")


def _targets(spec, qubits, where, default_all=True):
    t = spec.get("targets")
    if t is None:
        if default_all:
            return list(range(qubits))
        _fail(where, "missing field 'targets'")
    if not isinstance(t, list) or not all(isinstance(q, int) for q in t):
        _fail(f"{where}.targets", "expected a list of qubit indices")
    return t


def _state(spec, qubits) -> QuantumState:
    where = "state"
    try:
        if isinstance(spec, dict) and "basis" in spec:
            bits = spec["basis"]
            if not isinstance(bits, str) or len(bits) != qubits:
                _fail(f"{where}.basis", f"expected a {qubits}-character bit string")
            return QuantumState.basis(bits)
        if isinstance(spec, dict) and "amplitudes" in spec:
            return QuantumState(vector=_vector(spec["amplitudes"], f"{where}.amplitudes"))
        if isinstance(spec, dict) and "density" in spec:
            return QuantumState(density=_matrix(spec["density"], f"{where}.density"))
    except CircuitFormatError:
        raise
    except PQCError as exc:
        _fail(where, str(exc))
    _fail(where, "expected 'basis', 'amplitudes' or 'density'")


def _element(spec, qubits, where):
    if isinstance(spec, dict) and "fixed" in spec:
        body = spec["fixed"]
        w = f"{where}.fixed"
        targets = _targets(body, qubits, w)
        try:
            if "gate" in body:
                return gate(str(body["gate"]), targets, qubits)
            if "matrix" in body:
                return Fixed(embed(_matrix(body["matrix"], f"{w}.matrix"), targets, qubits))
        except CircuitFormatError:
            raise
        except PQCError as exc:
            _fail(w, str(exc))
        _fail(w, "expected 'gate' or 'matrix'")
    if isinstance(spec, dict) and "param" in spec:
        body = spec["param"]
        w = f"{where}.param"
        index = _get(body, "index", w)
        if not isinstance(index, int) or isinstance(index, bool):
            _fail(f"{w}.index", "expected an integer")
        targets = _targets(body, qubits, w)
        h = _operator_matrix(_get(body, "generator", w), f"{w}.generator")
        try:
            return Parameterized(eigendecompose(embed(h, targets, qubits)), index)
        except PQCError as exc:
            _fail(w, str(exc))
    _fail(where, "expected 'fixed' or 'param'")


def parse_circuit(doc: dict, max_qubits: int | None = None) -> CircuitProblem:
    if not isinstance(doc, dict):
        _fail("document", "expected a JSON object")
    version = doc.get("version", 1)
    if version != 1:
        _fail("version", f"unsupported version {version!r}")
    qubits = _get(doc, "qubits", "document")
    if not isinstance(qubits, int) or qubits < 1:
        _fail("qubits", "expected a positive integer")
    state = _state(_get(doc, "state", "document"), qubits)
    obs = Observable(matrix=_operator_matrix(_get(doc, "observable", "document"), "observable"))
    raw = _get(doc, "elements", "document")
    if not isinstance(raw, list):
        _fail("elements", "expected a list")
    elements = [_element(e, qubits, f"elements[{i}]") for i, e in enumerate(raw)]
    kwargs = {} if max_qubits is None else {"max_qubits": max_qubits}
    try:
        circuit = ParameterizedCircuit(qubits, elements, **kwargs)
        obs.operator  # noqa: B018 - validate Hermiticity now
    except PQCError as exc:
        _fail("circuit", str(exc))
    if state.dim != circuit.dim or obs.dim != circuit.dim:
        _fail("document", "state/observable dimension does not match the qubit count")
    return CircuitProblem(circuit, state, obs)


def load_circuit(path, max_qubits: int | None = None) -> CircuitProblem:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_circuit(doc, max_qubits)
