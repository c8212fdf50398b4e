import json
import subprocess
import sys

import pytest

from suhiggs.cli import (
    emit_report,
    execute,
    higgs_to_payload,
    main,
    make_request,
    parse_report,
    parse_request,
    to_wire,
)
from suhiggs.errors import ParseError, SchemaError
from suhiggs.exactnum import scalar_to_wire
from suhiggs.lie_core import HiggsPoint, cartan_m_element


def wire(xs):
    return [scalar_to_wire(x) for x in xs]


@pytest.fixture
def cartan_doc(tmp_path):
    phi = HiggsPoint.from_matrix(cartan_m_element([2]))
    path = tmp_path / "phi.json"
    path.write_text(make_request("analyze-higgs", higgs_to_payload(phi)))
    return path


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_higgs(cartan_doc, capsys):
    code, out, _ = run(["analyze-higgs", "--input", str(cartan_doc), "--format", "machine"], capsys)
    assert code == 0
    doc = parse_report(out)
    r = doc["result"]
    assert r["char_coefficients"] == [-4]
    assert r["is_regular"] and r["odd_vanishing"] and r["jacobian_rank"] == 1
    assert r["branch_type"] == "none"


def test_analyze_zero_field(tmp_path, capsys):
    path = tmp_path / "z.json"
    path.write_text(make_request("analyze-higgs", higgs_to_payload(HiggsPoint.zero(2))))
    code, out, _ = run(["analyze-higgs", "--input", str(path), "--format", "machine"], capsys)
    r = parse_report(out)["result"]
    assert code == 0 and not r["is_regular"] and r["char_coefficients"] == [0, 0]


def test_wrong_beta_shape_is_schema_error(tmp_path, capsys):
    payload = higgs_to_payload(HiggsPoint.zero(1))
    payload["beta"] = payload["beta"][:1]
    path = tmp_path / "bad.json"
    path.write_text(make_request("analyze-higgs", payload))
    code, _, err = run(["analyze-higgs", "--input", str(path)], capsys)
    assert code == 2
    assert "(p+1)x p = 2x1" in err


def test_malformed_scalar_reports_position():
    payload = higgs_to_payload(HiggsPoint.zero(1))
    payload["gamma"][0][1] = ["1", "x", "0", "1"]
    with pytest.raises(SchemaError, match=r"\['gamma'\]\[0\]\[1\]\[1\]"):
        parse_request(make_request("analyze-higgs", payload))


def test_bad_json_is_parse_error():
    with pytest.raises(ParseError, match="line 1"):
        parse_request("{not json")


def test_zero_denominator_is_parse_error(tmp_path, capsys):
    doc = {"p": 1, "omega": [["1", "0", "0", "1"]], "roots": wire([0, 2, -2])}
    path = tmp_path / "s.json"
    path.write_text(make_request("spectral-fiber", doc))
    code, _, err = run(["spectral-fiber", "--input", str(path)], capsys)
    assert code == 2 and "omega'][0]" in err


def test_spectral_and_cameral(tmp_path, capsys):
    doc = {"p": 1, "omega": wire([-4]), "roots": wire([0, 2, -2])}
    for cmd in ("spectral-fiber", "cameral-fiber"):
        path = tmp_path / f"{cmd}.json"
        path.write_text(make_request(cmd, doc))
        code, out, _ = run([cmd, "--input", str(path), "--format", "machine"], capsys)
        assert code == 0
        r = parse_report(out)["result"]
        if cmd == "cameral-fiber":
            assert (r["size"], r["real_subcover_size"]) == (6, 2)
        else:
            assert r["zero_multiplicity"] == 1 and not r["on_intersection"]


def test_bad_roots_are_domain_errors(tmp_path, capsys):
    doc = {"p": 1, "omega": wire([-4]), "roots": wire([0, 1, -1])}
    path = tmp_path / "s.json"
    path.write_text(make_request("spectral-fiber", doc))
    assert run(["spectral-fiber", "--input", str(path)], capsys)[0] == 3


def test_command_mismatch(cartan_doc, capsys):
    assert run(["spectral-fiber", "--input", str(cartan_doc)], capsys)[0] == 2


def test_missing_file(capsys):
    assert run(["analyze-higgs", "--input", "/nonexistent/x.json"], capsys)[0] == 2


def test_degree_audit(capsys):
    code, out, _ = run(["degree-audit", "--p", "2", "--g", "2", "--deg-f-minus", "4", "--format", "machine"], capsys)
    d = parse_report(out)["result"]["derived"]
    assert code == 0
    assert (d["deg_W"], d["stable"], d["component_count"], d["torsor_rank"]) == (0, True, 3, 8)
    code, _, err = run(["degree-audit", "--p", "2", "--g", "1"], capsys)
    assert code == 3 and "genus" in err


def test_degree_audit_dimension_only(capsys):
    code, out, _ = run(["degree-audit", "--p", "1", "--g", "2", "--format", "machine"], capsys)
    d = parse_report(out)["result"]["derived"]
    assert (d["base_dim"], d["fiber_dim"], d["moduli_dim"], d["dimension_identity_ok"]) == (3, 5, 8, True)


def test_dimension_report_human(capsys):
    code, out, _ = run(["dimension-report", "--p", "2", "--g", "2"], capsys)
    assert code == 0 and "identity_ok  true" in out


def test_missing_flag_is_schema_error(capsys):
    assert run(["dimension-report", "--p", "2"], capsys)[0] == 2


def test_weyl_check(capsys):
    code, out, _ = run(["weyl-check", "--p", "1", "--format", "machine"], capsys)
    r = parse_report(out)["result"]
    assert code == 0
    assert (r["restricted_weyl_order"], r["coset_count"], r["cocycle_pairs"]) == (2, 3, 36)
    assert r["cocycle_ok"] and r["w0_acts_as_theta"] and r["w0"] == "(1,3)"


def test_weyl_check_capacity(capsys):
    assert run(["weyl-check", "--p", "4"], capsys)[0] == 3


def test_su21(capsys):
    code, out, _ = run(["su21-example", "--format", "machine"], capsys)
    r = parse_report(out)["result"]
    assert code == 0 and r["sigma2"] == -3 and r["sigma2_matches"] is False


def test_property_suite_exit_codes(capsys, monkeypatch):
    code, out, _ = run(["property-suite", "--seed", "1", "--p", "1", "--trials", "2"], capsys)
    assert code == 0 and "all asserted properties hold" in out
    from suhiggs import properties

    monkeypatch.setitem(properties.PROPERTIES, "broken", lambda rng, p: False)
    assert run(["property-suite", "--trials", "1", "--p", "1"], capsys)[0] == 4


def test_property_suite_byte_identical(capsys):
    argv = ["property-suite", "--seed", "42", "--p", "2", "--trials", "3", "--format", "machine"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ["dimension-report", "--p", "3", "--g", "4"],
        ["degree-audit", "--p", "2", "--g", "3", "--deg-f-minus", "9", "--deg-f-plus", "11"],
        ["weyl-check", "--p", "2"],
        ["su21-example"],
        ["property-suite", "--trials", "2", "--p", "2"],
    ],
)
def test_machine_reports_round_trip(argv, capsys):
    code, out, _ = run(argv + ["--format", "machine"], capsys)
    assert code == 0
    doc = parse_report(out)
    assert emit_report(doc["command"], doc["result"]) == out


def test_analyze_report_round_trip(cartan_doc, capsys):
    _, out, _ = run(["analyze-higgs", "--input", str(cartan_doc), "--format", "machine"], capsys)
    doc = parse_report(out)
    assert emit_report(doc["command"], doc["result"]) == out
    assert json.loads(out)["result"]["char_coefficients"] == [["-4", "1", "0", "1"]]


def test_request_round_trip():
    phi = HiggsPoint.from_matrix(cartan_m_element([1, 2]))
    cmd, payload = parse_request(make_request("analyze-higgs", higgs_to_payload(phi)))
    assert execute(cmd, payload)[0]["char_coefficients"] == [-5, 4]
    assert to_wire(payload) == payload


def test_module_entry_point(cartan_doc):
    proc = subprocess.run(
        [sys.executable, "-m", "suhiggs", "analyze-higgs", "--input", str(cartan_doc)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "jacobian_rank" in proc.stdout
