import json
from fractions import Fraction as F

import jsonschema
import pytest

from torusrho import cli, schemas
from torusrho.signature import dd_link_step_function, step_function_pqr
from torusrho.stepfunction import StepFunction


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, schema, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    data = json.loads(out)
    jsonschema.validate(data, schema)
    # round trip: re-serialising the parsed document reproduces it
    assert json.loads(json.dumps(data)) == data
    return data


def test_signature_csv(capsys):
    code, out, _ = run(capsys, "signature", "--knot", "(2,3)", "--format", "csv")
    assert code == 0
    assert StepFunction.from_csv(out) == step_function_pqr(2, 3)
    assert out.splitlines()[0] == ",".join(schemas.CSV_STEP_FUNCTION_HEADER)


def test_signature_json(capsys):
    data = run_json(capsys, schemas.SIGNATURE, "signature", "--knot", "(2,5);(2,3)")
    assert data["integral"] == "-56/15"
    data = run_json(capsys, schemas.SIGNATURE, "signature", "--newton", "N:(2,3)")
    assert data["intervals"][1] == {"x_start": "1/6", "x_end": "5/6", "value": -2}


def test_signature_at(capsys):
    data = run_json(capsys, schemas.SIGNATURE_AT, "signature", "--knot", "(2,3)", "--at", "1/6")
    assert data["value"] == "-1/1" and data["jump"] is True


def test_rho(capsys):
    data = run_json(capsys, schemas.RHO, "rho", "--knot", "(2,5);(2,3)")
    assert data == {"knot": "(2,5);(2,3)", "rho": "-56/15", "method": "closed"}
    data = run_json(capsys, schemas.RHO, "rho", "--knot", "(2,5);(2,3)", "--method", "integral")
    assert data["rho"] == "-56/15"


def test_fourier(capsys):
    data = run_json(capsys, schemas.FOURIER_BETA, "fourier", "--triple", "2,3,1", "--beta", "1")
    assert data["closed"]["im"] == pytest.approx(-1.1026577908435844, rel=1e-12)
    assert data["numeric"]["im"] == pytest.approx(data["closed"]["im"], rel=1e-12)
    data = run_json(capsys, schemas.FOURIER_BETA, "fourier", "--triple", "2,3,2",
                    "--beta", "1.5+0.25j")
    assert data["beta"] == {"re": 1.5, "im": 0.25}
    data = run_json(capsys, schemas.FOURIER_T, "fourier", "--triple", "2,3,1", "--t", "3.141592653589793")
    assert data["pole"] is True and data["n"] is None


def test_compare_litherland(capsys):
    data = run_json(capsys, schemas.COMPARE, "compare", "--left", "6,5,1",
                    "--right", "2,3,1;3,5,1;2,5,1;2,3,5")
    assert data["verdict"] is True and data["pointwise_confirmed"] is True
    assert data["period"] == 30
    assert all(r["magnitude"] < 1e-9 for r in data["residues"])


def test_compare_negative(capsys):
    data = run_json(capsys, schemas.COMPARE, "compare", "--left", "2,3,1", "--right", "2,5,1")
    assert data["verdict"] is False and data["condition_a"] is False


def test_algebraic(capsys):
    data = run_json(capsys, schemas.ALGEBRAIC, "algebraic", "--newton", "N:(2,3);(2,1)")
    assert data["a"] == [3, 13]
    assert data["kd_squared"] == 22 and data["h_squared"] == "70/3"
    assert data["delta"] == "2/39" and data["within_bound"] is True


def test_link_dd(capsys):
    data = run_json(capsys, schemas.LINK_DD, "link-dd", "--d", "3")
    assert data["integral"] == "-8/3" and data["delta"] == "7/1"
    assert data["within_bound"] is False
    code, out, _ = run(capsys, "link-dd", "--d", "3", "--format", "csv")
    assert StepFunction.from_csv(out) == dd_link_step_function(3)


def test_oracle_check(capsys):
    data = run_json(capsys, schemas.ORACLE_CHECK, "oracle-check", "--p-max", "4",
                    "--q-max", "5", "--samples", "5")
    assert data["all_pass"] is True
    assert {(r["p"], r["q"]) for r in data["rows"]} == {(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)}
    code, out, _ = run(capsys, "oracle-check", "--p-max", "3", "--q-max", "4", "--format", "csv")
    assert code == 0 and out.startswith("p,q,size")


def test_output_file(capsys, tmp_path):
    path = tmp_path / "rho.json"
    code, out, _ = run(capsys, "--output", str(path), "rho", "--knot", "(2,3)")
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["rho"] == "-4/3"


@pytest.mark.parametrize("argv", [
    ["rho", "--knot", "(4,6)"],
    ["rho", "--knot", "(2,3"],
    ["rho"],
    ["signature", "--knot", "(2,3)", "--at", "3/2"],
    ["fourier", "--triple", "2,3,1", "--beta", "2"],
    ["fourier", "--triple", "2,3,1", "--beta", "abc"],
    ["fourier", "--triple", "2,3,1;2,5,1", "--beta", "1"],
    ["compare", "--left", "2,4,1", "--right", "2,3,1"],
    ["algebraic", "--newton", "N:(3,2)"],
    ["algebraic", "--newton", "(2,3)"],
    ["link-dd", "--d", "1"],
    ["signature", "--knot", "(2,3)", "--plot", "--samples", "1"],
    ["nonsense"],
    ["rho", "--knot", "(2,3)", "--method", "magic"],
])
def test_invalid_input_exits_1(capsys, argv):
    # argparse-level errors leave through SystemExit, the rest return the code
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 1
    assert capsys.readouterr().err.strip()


def test_argparse_errors_exit_1(capsys):
    for argv in (["rho", "--method", "magic"], ["link-dd"], []):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 1


def test_bound_violation_exits_2(capsys, monkeypatch):
    import torusrho.singularity as sing
    monkeypatch.setattr(sing, "h_squared", lambda np_: F(100))
    code, _, err = run(capsys, "algebraic", "--newton", "N:(2,3)")
    assert code == 2 and "invariant" in err


def test_oracle_failure_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli, "s_pq", lambda p, q, x: 999)
    code, out, _ = run(capsys, "oracle-check", "--p-max", "2", "--q-max", "3", "--samples", "2")
    assert code == 2
    assert json.loads(out)["all_pass"] is False


def test_plot_data_trefoil():
    rows = cli.emit_plot_data(step_function_pqr(2, 3), 10)
    assert (F(1, 6), 0) in rows and (F(1, 6), -2) in rows
    assert rows.index((F(1, 6), 0)) + 1 == rows.index((F(1, 6), -2))
    xs = [x for x, _ in rows]
    assert xs == sorted(xs) and xs[0] == 0 and xs[-1] == 1


def test_plot_data_constant_and_dd():
    assert cli.emit_plot_data(StepFunction.constant(0), 2) == [(F(0), 0), (F(1), 0)]
    rows = cli.emit_plot_data(dd_link_step_function(3), 2)
    assert rows == [(0, -2), (F(1, 3), -2), (F(1, 3), -4), (F(2, 3), -4), (F(2, 3), -2), (1, -2)]


def test_plot_csv(capsys):
    code, out, _ = run(capsys, "signature", "--knot", "(2,3)", "--plot", "--samples", "3")
    lines = out.splitlines()
    assert lines[0] == ",".join(schemas.CSV_PLOT_HEADER)
    assert "0.16666666666666666,1/6,0" in lines and "0.16666666666666666,1/6,-2" in lines
