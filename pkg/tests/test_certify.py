import json

import pytest

from symcube.certify import (
    CAVEATS,
    check_hypotheses,
    run_bk_certificate,
    run_imc_report,
    validate_certificate,
)
from symcube.certify.cli import main
from symcube.certify.certificate import TOP_LEVEL_KEYS
from symcube.errors import ReportRefusedError


def test_checklist_examples():
    ok = check_hypotheses(12, 11)
    assert ok.all_pass()
    assert ok.surrogate_irreducibility["label"].startswith("surrogate certificate")
    bad5 = check_hypotheses(12, 5)
    assert not bad5.ordinary and not bad5.all_pass()
    bad3 = check_hypotheses(12, 3)
    assert not bad3.p_greater_3 and bad3.corank_check["corank"] == 2
    assert not bad3.surrogate_irreducibility["irreducible"]
    assert not check_hypotheses(14, 11).weight_supported
    assert not check_hypotheses(12, 12).all_pass()


@pytest.fixture(scope="module")
def cert12():
    return run_bk_certificate(12, 11, 30)


def test_certificate_shape(cert12):
    data = cert12.data
    assert tuple(data) == TOP_LEVEL_KEYS
    assert data["schema"] == 1 and data["meta"]["status"] == "complete"
    assert len(data["critical_values"]) == 11
    assert data["caveats"] == list(CAVEATS)
    assert validate_certificate(data) == []


def test_conclusions_follow_nonvanishing(cert12):
    rows = cert12.data["critical_values"]
    central = [r for r in rows if r["central"]]
    assert len(central) == 1 and central[0]["j_offset"] == 5
    assert "not automatic" in central[0]["annotation"]
    assert all("automatic" in r["annotation"] for r in rows)
    concluded = {c["j_offset"] for c in cert12.conclusions}
    assert concluded == {r["j_offset"] for r in rows if r["nonvanishing"]}
    assert all("conditional on" in c["statement"] and "V(-j-rho)" in c["statement"] for c in cert12.conclusions)


def test_validator_catches_tampering(cert12):
    data = json.loads(cert12.to_json())
    data["conclusions"].append({"j_offset": 5, "statement": "H^1_f(Q, V(-j-rho)) = 0"})
    problems = validate_certificate(data)
    assert any("j=5" in p for p in problems)
    data = json.loads(cert12.to_json())
    data["caveats"] = []
    assert validate_certificate(data)
    assert validate_certificate({"schema": 1}) != []


def test_non_ordinary_certificate_has_no_conclusions():
    cert = run_bk_certificate(12, 5, 30)
    assert cert.status == "complete"
    assert cert.conclusions == []
    assert cert.data["checklist"]["ordinary"] is False
    with pytest.raises(ReportRefusedError):
        run_imc_report(12, 5, 30, certificate=cert)


def test_unsupported_weight_is_incomplete():
    cert = run_bk_certificate(14, 11, 30)
    assert cert.status == "incomplete"
    assert cert.data["meta"]["errors"][0]["type"] == "UnsupportedWeightError"
    assert validate_certificate(cert.data) == []
    with pytest.raises(ReportRefusedError):
        run_imc_report(14, 11, 30, certificate=cert)


def test_shortfall_recorded_with_counts():
    cert = run_bk_certificate(12, 11, 30, n_terms=100)
    assert cert.status == "incomplete"
    err = cert.data["meta"]["errors"][0]
    assert err["type"] == "InsufficientPrecisionError" and err["available"] == 100 and err["needed"] > 100


def test_imc_report(cert12):
    import copy

    cert = run_imc_report(12, 11, 60, 20)
    interp = cert.data["interpolation"]
    assert len(interp["records"]) == 11
    assert len({r["tag"] for r in interp["records"]}) == 1
    assert all(r["audit_ok"] for r in interp["records"])
    assert interp["unit_root"]["check"]
    pairs = [c["pair"] for c in cert.data["congruences"]]
    assert pairs == [[0, 10]]
    assert cert.data["congruences"][0]["audit"]["records"][0]["j_offset"] == 0
    assert validate_certificate(cert.data) == []
    assert copy.deepcopy(cert12.data) == cert12.data


def test_certificate_determinism():
    a = run_bk_certificate(12, 11, 20).to_json()
    b = run_bk_certificate(12, 11, 20).to_json()
    assert a == b


def test_cli_certify(tmp_path, capsys):
    out = tmp_path / "cert.json"
    dump = tmp_path / "lv.json"
    code = main(["certify", "--weight", "12", "--p", "11", "--digits", "30", "--out", str(out),
                 "--cache", str(tmp_path / "cache"), "--dump-lvalues", str(dump)])
    assert code == 0
    data = json.loads(out.read_text())
    assert validate_certificate(data) == []
    rows = json.loads(dump.read_text())
    assert set(rows[0]) == {"j_offset", "s", "re", "im", "radius"}
    assert (tmp_path / "cache" / "weight12.coeffs").exists()


def test_cli_usage_errors(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["certify", "--weight", "13", "--p", "11", "--out", str(tmp_path / "x.json")])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["bogus"])
    assert err.value.code == 2


def test_cli_incomplete_exit_status(tmp_path):
    code = main(["certify", "--weight", "14", "--p", "11", "--out", str(tmp_path / "c.json"),
                 "--cache", str(tmp_path)])
    assert code == 1


def test_cli_other_commands(tmp_path, capsys):
    assert main(["eigenform", "--weight", "12", "--terms", "5", "--cache", str(tmp_path)]) == 0
    assert capsys.readouterr().out.splitlines()[:3] == ["1 1", "2 -24", "3 252"]
    dump = tmp_path / "padic.json"
    assert main(["padic", "--weight", "12", "--p", "11", "--digits", "60", "--cache", str(tmp_path),
                 "--dump-padic", str(dump), "--out", str(tmp_path / "p.txt")]) == 0
    assert json.loads(dump.read_text())["congruences"][0]["pair"] == [0, 10]
    assert main(["padic", "--weight", "12", "--p", "5", "--digits", "30", "--cache", str(tmp_path)]) == 1


def test_cli_selftest(capsys):
    assert main(["selftest"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)
