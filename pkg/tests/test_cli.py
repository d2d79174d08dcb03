import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from multiutility.axioms import Axiom, verify_certificate
from multiutility.cli import INPUT_ERROR, main, run
from multiutility.core import Lottery
from multiutility.documents import emit_profile, parse_profile, profile_doc
from multiutility.geometry import check_certificate

from conftest import FIXTURES

P1, P2, P5 = (str(FIXTURES / f) for f in ("p1.json", "p2.json", "p5.json"))


def _lottery(strings):
    return Lottery(tuple(F(s) for s in strings))


def test_check_axiom_p2_reports_witness():
    report, status = run(["check-axiom", "pareto-star", P2])
    assert status == 1
    cert = report["certificate"]
    assert cert["l"] == ["1/3", "1/3", "1/3"] and cert["l_prime"] == ["1/3", "2/3", "0"]
    assert report["hypotheses"]["no_conflict_pair"] == ["a", "c"]


def test_report_certificate_reverifies():
    for path in (P2, P5):
        report, status = run(["check-axiom", "pareto-star", path])
        assert status == 1
        # round-trip through JSON text, as a second process would see it
        cert = json.loads(json.dumps(report))["certificate"]
        profile = parse_profile(open(path).read())
        assert verify_certificate(profile, Axiom.PARETO_STAR, _lottery(cert["l"]), _lottery(cert["l_prime"]))


def test_condition_failure_certificate_reverifies():
    from multiutility.representation import check_theorem1_condition

    report, status = run(["check-condition", "theorem1", P2])
    assert status == 1
    cert = [F(x) for x in report["failures"][0]["certificate"]]
    system = check_theorem1_condition(parse_profile(open(P2).read())).failures[0].system
    assert check_certificate(system, cert)


def test_check_condition_theorem1_p1():
    report, status = run(["check-condition", "theorem1", P1])
    assert status == 0
    assert report["solutions"][0]["alpha"] == ["1", "1"]


def test_prop1_strict_flag():
    report, status = run(["check-condition", "prop1", P1, "--strict"])
    assert status == 0 and report["condition"] == "prop1-strict"


def test_equiv():
    report, status = run(["equiv", str(FIXTURES / "set_a.json"), str(FIXTURES / "set_b.json")])
    assert status == 0 and report["equivalent"] is True


def test_aggregate_and_normalize():
    report, status = run(["aggregate", "minkowski", str(FIXTURES / "agents_p5.json"), "--weights", "1,1"])
    assert status == 0
    assert sorted(report["vertices"]) == [["2", "3", "0"], ["3", "2", "0"]]
    report, status = run(["normalize", str(FIXTURES / "set_b.json")])
    assert report["vertices"][0] == ["2/3", "-1/3", "-1/3"]


def test_oracle_and_witness():
    report, status = run(["oracle", "pareto-star", P2, "--denominator", "3"])
    assert status == 1 and report["violations"] > 0
    report, status = run(["witness", "non-reversal", P5])
    assert status == 0 and report["witness"] is None


@pytest.mark.parametrize(
    "doc, needle",
    [
        ({"outcomes": ["a", "b", "c"], "agents": [{"id": "1", "vertices": [[1, 1, 1]]},
          {"id": "2", "vertices": [[1, 0, 0]]}], "social": {"vertices": [[1, 0, 0]]}}, "constant"),
        ({"outcomes": ["a", "b", "c"], "agents": [{"id": "1", "vertices": [["1/0", 0, 0]]},
          {"id": "2", "vertices": [[1, 0, 0]]}], "social": {"vertices": [[1, 0, 0]]}}, "1/0"),
        ({"outcomes": ["a", "b", "c"], "agents": [{"id": "1", "vertices": [[0.5, 0, 0]]},
          {"id": "2", "vertices": [[1, 0, 0]]}], "social": {"vertices": [[1, 0, 0]]}}, "0.5"),
        ({"outcomes": ["a", "b", "c"], "agents": [{"id": "1", "vertices": [[1, 0, 0]]}],
          "social": {"vertices": [[1, 0, 0]]}}, "two"),
        ({"outcomes": ["a", "b", "c"], "agents": [{"id": "1", "vertices": [[1, 0]]},
          {"id": "2", "vertices": [[1, 0, 0]]}], "social": {"vertices": [[1, 0, 0]]}}, "coordinates"),
    ],
)
def test_input_errors(tmp_path, doc, needle):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    report, status = run(["check-axiom", "pareto", str(path)])
    assert status == INPUT_ERROR
    assert needle in report["error"]


def test_missing_file_and_unknown_command(capsys):
    report, status = run(["check-axiom", "pareto", "/nonexistent.json"])
    assert status == INPUT_ERROR
    assert run(["frobnicate"])[1] == INPUT_ERROR
    capsys.readouterr()


def test_round_trip():
    for path in (P1, P2, P5):
        profile = parse_profile(open(path).read())
        again = parse_profile(emit_profile(profile))
        assert again == profile
        assert profile_doc(again) == profile_doc(profile)


def test_pretty_output(capsys):
    assert main(["--pretty", "check-axiom", "pareto", P1]) == 0
    assert capsys.readouterr().out.startswith("check-axiom: OK")


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "multiutility", "check-axiom", "pareto-star", P5],
                         capture_output=True, text=True)
    assert out.returncode == 1
    assert json.loads(out.stdout)["certificate"]["l_prime"] == ["1/9", "2/3", "2/9"]


def test_exit_status_stable():
    assert [run(["check-axiom", "pareto-star", P5])[0]["certificate"] for _ in range(3)].count(
        run(["check-axiom", "pareto-star", P5])[0]["certificate"]) == 3
