import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from pqcfourier.circuit_io import CircuitFormatError, load_circuit, parse_circuit
from pqcfourier.cli import run

CIRCUITS = Path(__file__).resolve().parents[1] / "demos" / "circuits"
RX = str(CIRCUITS / "rx.json")
TRANSMON = str(CIRCUITS / "transmon.json")
ZZ = str(CIRCUITS / "zz_sum.json")


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_eval(capsys):
    code, rep, _ = call(capsys, "eval", "--circuit", RX, "--theta", "0")
    assert code == 0 and rep["value"] == pytest.approx(1.0, abs=1e-12)


def test_eval_bit_stable(capsys):
    a = call(capsys, "eval", "--circuit", ZZ, "--theta", "0.3,1.7")[1]
    b = call(capsys, "eval", "--circuit", ZZ, "--theta", "0.3,1.7")[1]
    assert a == b


def test_eval_with_shots(capsys):
    code, rep, _ = call(capsys, "eval", "--circuit", RX, "--theta", "1.0471975511965976", "--shots", "40000", "--seed", "2")
    assert code == 0 and abs(rep["value"] - 0.5) <= 5 * rep["stderr"]


def test_grad_fourier_and_shift2(capsys):
    for method in ("fourier", "shift2"):
        code, rep, _ = call(capsys, "grad", "--circuit", RX, "--theta", str(np.pi / 2), "--method", method)
        assert code == 0
        assert rep["gradient"][0] == pytest.approx(-1.0, abs=1e-8)
    assert rep["evaluations"] == 2


def test_grad_shift_rules_refuse_wrong_support(capsys):
    code, rep, err = call(capsys, "grad", "--circuit", ZZ, "--theta", "0,0", "--method", "shift2")
    assert code == 1 and rep is None and "shift2" in err
    code, _, err = call(capsys, "grad", "--circuit", RX, "--theta", "0", "--method", "shift4")
    assert code == 1


def test_grad_shift4_matches_fourier(capsys, tmp_path):
    # parameter 1 is an X/2 rotation, so shift4 refuses; keep only parameter 0
    doc = json.loads(Path(ZZ).read_text())
    doc["elements"] = doc["elements"][:4]
    path = tmp_path / "zz_only.json"
    path.write_text(json.dumps(doc))
    _, four, _ = call(capsys, "grad", "--circuit", str(path), "--theta", "0.4", "--method", "shift4")
    _, fourier, _ = call(capsys, "grad", "--circuit", str(path), "--theta", "0.4")
    assert four["evaluations"] == 4 and fourier["evaluations"] == 5
    assert four["gradient"][0] == pytest.approx(fourier["gradient"][0], abs=1e-8)


def test_spectrum_transmon(capsys):
    code, rep, _ = call(capsys, "spectrum", "--circuit", TRANSMON, "--param", "0")
    assert code == 0
    (p,) = rep["parameters"]
    assert p["D"] == [-6, -5, -4, -1, 0, 1, 4, 5, 6]
    assert p["evaluations_needed"] == 9
    assert p["alpha"] == pytest.approx(0.5) and p["levels"] == [0, 1, 5, 6]


def test_spectrum_all_params(capsys):
    _, rep, _ = call(capsys, "spectrum", "--circuit", TRANSMON)
    assert [p["param"] for p in rep["parameters"]] == [0, 1]
    assert rep["parameters"][1]["D"] == [-1, 0, 1]


def test_fourier_methods(capsys):
    _, rnd, _ = call(capsys, "fourier", "--circuit", TRANSMON, "--theta", "0.2,0.9", "--param", "0", "--method", "random", "--seed", "4")
    assert rnd["samples_used"] == 9
    _, gen, _ = call(capsys, "fourier", "--circuit", TRANSMON, "--theta", "0.2,0.9", "--param", "0", "--method", "generic")
    assert gen["samples_used"] == 13
    _, eq, _ = call(capsys, "fourier", "--circuit", TRANSMON, "--theta", "0.2,0.9", "--param", "0")
    assert eq["samples_used"] == 13 and eq["notices"]
    for k, (re, im) in gen["coefficients"].items():
        got = rnd["coefficients"].get(k, [0.0, 0.0])
        assert abs(complex(re, im) - complex(*got)) <= 1e-7


def test_train(capsys):
    code, rep, _ = call(capsys, "train", "--circuit", ZZ, "--theta0", "0,0", "--max-sweeps", "50")
    assert code == 0
    e = [rep["initial_energy"]] + [s["energy"] for s in rep["steps"]]
    assert all(b <= a + 1e-9 for a, b in zip(e, e[1:]))
    assert rep["evaluations"] == sum(s["samples"] for s in rep["steps"])
    code, ev, _ = call(capsys, "eval", "--circuit", ZZ, "--theta", ",".join(map(str, rep["theta"])))
    assert ev["value"] == pytest.approx(rep["energy"], abs=1e-9)


def test_train_with_shots(capsys):
    code, rep, _ = call(capsys, "train", "--circuit", RX, "--theta0", "0.5", "--shots", "1000", "--seed", "3", "--max-sweeps", "2")
    assert code == 0 and rep["energy"] < -0.8


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"version": 1,\n "qubits": 1,\n ]')
    code, _, err = call(capsys, "eval", "--circuit", str(bad), "--theta", "0")
    assert code == 1 and "line 3" in err
    doc = json.loads(Path(RX).read_text())
    doc["elements"].insert(0, {"fixed": {"gate": "FOO", "targets": [0]}})
    bad.write_text(json.dumps(doc))
    code, _, err = call(capsys, "eval", "--circuit", str(bad), "--theta", "0")
    assert code == 1 and "FOO" in err and "elements[0]" in err
    code, _, _ = call(capsys, "eval", "--circuit", RX, "--theta", "0,1")
    assert code == 1
    code, _, _ = call(capsys, "eval", "--circuit", str(tmp_path / "missing.json"), "--theta", "0")
    assert code == 1
    assert run(["nonsense"]) == 1


def test_numerical_failure_exit_code(capsys, tmp_path):
    doc = json.loads(Path(TRANSMON).read_text())
    doc["elements"][2]["param"]["generator"]["pauli_sum"][1]["coeff"] = -1.0  # b = 1: sqrt(2) vs 1/4
    path = tmp_path / "irrational.json"
    path.write_text(json.dumps(doc))
    code, _, err = call(capsys, "spectrum", "--circuit", str(path))
    assert code == 2 and "NotCommensurable" in err


def test_parse_formats():
    doc = {
        "qubits": 1,
        "state": {"density": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]]},
        "observable": {"matrix": [[1, 0], [0, -1]]},
        "elements": [
            {"fixed": {"matrix": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]], "targets": [0]}},
            {"param": {"index": 0, "generator": {"matrix": [[0, [0, -0.5]], [[0, 0.5], 0]]}}},
        ],
    }
    prob = parse_circuit(doc)
    assert prob.circuit.num_params == 1 and not prob.state.is_pure
    amp = {**doc, "state": {"amplitudes": [[1, 0], [0, 0]]}}
    assert parse_circuit(amp).state.is_pure
    with pytest.raises(CircuitFormatError, match="state.basis"):
        parse_circuit({**doc, "state": {"basis": "00"}})
    with pytest.raises(CircuitFormatError, match="observable"):
        parse_circuit({**doc, "observable": {}})


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "pqcfourier", "eval", "--circuit", RX, "--theta", "3.141592653589793"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(out.stdout)["value"] == pytest.approx(-1.0)
