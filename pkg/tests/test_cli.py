from fractions import Fraction as F
import json
import subprocess
import sys

import pytest

from apostol_bernoulli.apostol import beta_bivariate, beta_lambda
from apostol_bernoulli.cli import main
from apostol_bernoulli.exact import GaussianRational, Polynomial, RationalFunction
from apostol_bernoulli.polyfamilies import derivative_poly, geometric_poly
from apostol_bernoulli.render import from_json, to_json, to_text


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.rstrip("\n"), err


# --- golden outputs -------------------------------------------------------


def test_emit_golden(capsys):
    assert run(capsys, "emit", "beta-lambda", "2", "--format", "latex")[:2] == (0, r"\frac{-2\lambda}{(\lambda - 1)^{2}}")
    code, out, _ = run(capsys, "emit", "geometric", "3", "--format", "json")
    assert code == 0 and json.loads(out) == {"variable": "x", "coefficients": ["0", "1", "6", "6"]}
    assert out == '{"variable":"x","coefficients":["0","1","6","6"]}'
    assert run(capsys, "emit", "derivative", "2", "--kind", "tanh", "--format", "text")[:2] == (0, "2z^3 - 2z")


def test_emit_routes(capsys):
    outs = {run(capsys, "emit", "beta-lambda", "6", "--route", r)[1] for r in ("recursion", "stirling", "geometric", "eulerian")}
    assert len(outs) == 1
    outs = {run(capsys, "emit", "beta", "5", "--route", r)[1] for r in ("convolution", "stirling", "geometric", "eulerian")}
    assert len(outs) == 1
    assert run(capsys, "emit", "derivative", "4", "--kind", "sech", "--route", "closed")[1] == run(
        capsys, "emit", "derivative", "4", "--kind", "sech"
    )[1]


def test_eval_golden(capsys):
    assert run(capsys, "eval", "lerch", "--lambda", "1/2", "-m", "0", "-a", "1")[:2] == (0, "2")
    assert run(capsys, "eval", "beta", "-n", "2", "-a", "1", "--lambda", "1/2")[:2] == (0, "-8")
    code, out, err = run(capsys, "eval", "lerch", "--lambda", "1", "-m", "1", "-a", "1")
    assert code == 1 and out == "" and "pole at lambda=1" in err
    assert run(capsys, "eval", "power-sum", "-n", "2", "-x", "1/2")[:2] == (0, "6")


def test_eval_float_outputs(capsys):
    code, out, _ = run(capsys, "eval", "hermite", "--lambda", "0.5", "-s", "-1", "-a", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and abs(doc["value"] - 4.0) < 1e-8 and doc["tolerance"] == 1e-8
    code, out, _ = run(capsys, "eval", "F", "-x", "1/4", "-m", "1", "--format", "json")
    v = json.loads(out)["value"]
    assert code == 0 and complex(v["re"], v["im"]) == pytest.approx(1j / (1j - 1) ** 2, abs=1e-12)


def test_table_golden(capsys):
    assert run(capsys, "table", "eulerian", "3")[1].splitlines() == ["1", "x", "x^2 + x", "x^3 + 4x^2 + x"]
    assert run(capsys, "table", "beta-lambda", "3")[1].splitlines() == [
        "0",
        "1/(λ - 1)",
        "-2λ/(λ - 1)^2",
        "3(λ^2 + λ)/(λ - 1)^3",
    ]
    assert run(capsys, "table", "geometric", "0")[1] == "1"
    assert run(capsys, "table", "bernoulli", "2")[1].splitlines() == ["1", "x - 1/2", "x^2 - x + 1/6"]


def test_metadata(capsys):
    code, out, _ = run(capsys, "emit", "eulerian", "2", "--format", "json", "--metadata")
    doc = json.loads(out)
    assert doc["format"] == "json" and doc["metadata"]["version"] == "0.1.0"
    assert doc["metadata"]["command"] == "emit eulerian 2 --format json --metadata"
    assert from_json(doc["payload"]) == Polynomial([0, 1, 1])


# --- exit codes -----------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ("emit", "foo", "1"),
        ("emit", "beta", "65"),
        ("emit", "derivative", "2"),
        ("emit", "derivative", "2", "--kind", "cosh"),
        ("emit", "geometric", "2", "--route", "stirling"),
        ("emit", "beta", "2", "--route", "bogus"),
        ("table", "eulerian", "99"),
        ("eval", "beta", "-n", "2"),
        ("eval", "lerch", "--lambda", "abc", "-m", "0", "-a", "1"),
        ("eval", "F", "-x", "1", "-m", "1"),
        ("verify", "--max-n", "65"),
        ("verify", "--suite", "section9"),
        (),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert main(list(argv)) == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "section2", "--max-n", "12")
    assert code == 0 and " 0 fail" in out
    code, out, _ = run(capsys, "verify", "--suite", "section7", "--tol", "1e-8")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "all", "--max-n", "0")
    assert code == 0 and out.splitlines()[-1].endswith("0 fail, 5 noted")


def test_verify_json_reports_caveats(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "section5", "--max-n", "3", "--format", "json")
    doc = json.loads(out)
    noted = [r for r in doc["results"] if r["status"] == "noted"]
    assert code == 0 and {r["tag"] for r in noted} >= {"tanh-closed-forms"}
    assert noted[0]["witnesses"]["geometric"] == "x + 1"


def test_console_script_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "apostol_bernoulli.cli", "eval", "lerch", "--lambda", "1", "-m", "1", "-a", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1 and "pole at lambda=1" in proc.stderr and proc.stdout == ""


# --- JSON round trip ------------------------------------------------------


def test_json_round_trip_every_class():
    objects = [
        F(-7, 3),
        GaussianRational(F(1, 2), -3),
        geometric_poly(5),
        derivative_poly("tan", 4),
        Polynomial([GaussianRational(0, 1), 2]),
        beta_lambda(7).value,
        RationalFunction(Polynomial([0, 1]), Polynomial([1, 1])),
        beta_bivariate(6).value,
        beta_bivariate(0).value,
    ]
    for obj in objects:
        text = json.dumps(to_json(obj))
        assert from_json(json.loads(text)) == obj
    z = 0.25 - 1.5j
    assert from_json(json.loads(json.dumps(to_json(z)))) == z


def test_text_rendering_samples():
    assert to_text(beta_lambda(1).value) == "1/(λ - 1)"
    assert to_text(beta_lambda(4).value) == "-4(λ^3 + 4λ^2 + λ)/(λ - 1)^4"
    assert to_text(F(-1, 6), latex=True) == r"-\frac{1}{6}"
    assert to_text(beta_bivariate(2).value) == "(2/(λ - 1))a - 2λ/(λ - 1)^2"
