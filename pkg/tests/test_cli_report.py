import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bnk3.cli_report import ReportDocument, run, serialize


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_rho_command():
    code, out, _ = invoke("rho", "--g", "14", "--r", "2", "--d", "11")
    assert code == 0
    header, row = out.splitlines()
    assert dict(zip(header.split(), row.split()))["rho"] == "-1"


def test_lifts_json_five_candidates():
    code, out, _ = invoke("lifts", "--g", "18", "--r", "3", "--d", "16", "--gamma-c", "8", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1"
    assert [(r["r_p"], r["d_p"]) for r in doc["rows"]] == [(3, 16), (4, 16), (4, 17), (5, 18), (6, 20)]


def test_lifts_default_gamma_c_and_box():
    _, plain, _ = invoke("lifts", "--g", "18", "--r", "3", "--d", "16", "--format", "json")
    _, box, _ = invoke("lifts", "--g", "18", "--r", "3", "--d", "16", "--box", "--format", "json")
    assert json.loads(plain)["inputs"]["gamma_c"] == 8
    assert json.loads(plain)["rows"] == json.loads(box)["rows"]
    assert json.loads(box)["flags"] == ["box_oracle"]


def test_noncomputing_empty():
    code, out, _ = invoke("noncomputing", "--g", "13")
    assert code == 0
    assert out == "(no rows)\n"
    code, out, _ = invoke("noncomputing", "--g", "13", "--format", "json")
    assert json.loads(out)["rows"] == []


def test_exit_codes():
    assert invoke("rho", "--g", "1", "--r", "1", "--d", "1")[0] == 1
    code, _, err = invoke("rho", "--g", "14", "--r", "2", "--dd", "11")
    assert code == 2 and "--dd" in err
    assert invoke("frobnicate")[0] == 2
    assert invoke("audit")[0] == 2
    assert invoke("lifts", "--g", "18", "--r", "3", "--d", "18")[0] == 1


def test_audit_exit_and_rows():
    code, out, _ = invoke("audit", "--from", "14", "--to", "19", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 15
    assert {r["verdict"] for r in rows} == {"true"}
    code, out, _ = invoke("audit", "--g", "18", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4 and all(r["verdict"] == "true" for r in rows)


def test_audit_exit_nonzero_on_false_verdict(monkeypatch):
    from bnk3 import dm_lifting

    monkeypatch.setattr(dm_lifting.AuditCase, "verdict", property(lambda self: False))
    assert invoke("audit", "--g", "15")[0] == 1


def test_audit_genus_20_fails():
    code, out, _ = invoke("audit", "--g", "20")
    assert code == 1
    assert "g_20_r_4_d_19_reduction_unavailable" in out


def test_mukai_and_bounds():
    code, out, _ = invoke("mukai", "--rank", "3", "--c1-sq", "6", "--c2", "5", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert code == 0 and row["pairing"] == 0 and row["min_c2_for_stable"] == 5
    code, out, _ = invoke("bounds", "--g", "18", "--r", "3", "--gamma", "8", "--m", "4", "--mu", "4", "--k", "2")
    assert code == 0 and "35/2" in out and "33/2" in out


def test_delta_and_classify():
    _, out, _ = invoke("delta", "--g", "18", "--r", "3", "--d", "16", "--format", "json")
    row = json.loads(out)["rows"][0]
    assert row["delta_bound"] == "15/4" and row["delta_upper"] == 3
    _, out, _ = invoke("classify-nl", "--g", "5", "--format", "csv")
    assert out.splitlines()[1] == "1,1,-5,-1,true"


@pytest.mark.parametrize("fmt", ["json", "csv", "table"])
def test_rational_rendering(fmt):
    doc = ReportDocument("bounds", {}, [{"name": "x", "value": Fraction(35, 2)}, {"name": "y", "value": Fraction(6, 3)}])
    text = serialize(doc, fmt).decode()
    assert "35/2" in text and "17.5" not in text
    assert "2/1" not in text


def test_empty_json_shape():
    assert json.loads(serialize(ReportDocument("noncomputing"), "json"))["rows"] == []


def test_unknown_format():
    with pytest.raises(ValueError):
        serialize(ReportDocument("rho"), "xml")


def test_json_round_trip():
    _, out, _ = invoke("audit", "--from", "14", "--to", "19", "--format", "json")
    doc = ReportDocument.from_dict(json.loads(out))
    assert serialize(doc, "json").decode() == out
    assert doc.to_dict() == json.loads(out)


@pytest.mark.parametrize("fmt", ["json", "csv", "table"])
def test_determinism(fmt):
    argv = ["lifts", "--g", "19", "--r", "3", "--d", "17", "--format", fmt]
    assert invoke(*argv)[1] == invoke(*argv)[1]


def test_csv_tokens():
    _, out, _ = invoke("audit", "--from", "14", "--to", "19", "--format", "csv")
    import re

    for line in out.splitlines():
        for field in line.split(","):
            assert re.fullmatch(r"-?\d+(/\d+)?|[a-z_0-9]*", field), field


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bnk3.cli_report", "audit", "--from", "14", "--to", "19"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.count("true") >= 15
