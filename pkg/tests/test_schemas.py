"""The shipped JSON schemas parse and name the keys the code actually writes."""
import json
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator, ValidationError
from referencing import Registry, Resource

from mfspectra import mfsgate, wells
from mfspectra.cli import main
from mfspectra.polystruct import leading_structure

DOCS = Path(__file__).resolve().parents[1] / "docs"


def schema(name):
    return json.loads((DOCS / f"{name}.schema.json").read_text())


REGISTRY = Registry().with_resources(
    (f"mfspectra/{p.name}", Resource.from_contents(json.loads(p.read_text()))) for p in DOCS.glob("*.schema.json"))


def validate(name, data):
    Draft202012Validator(schema(name), registry=REGISTRY).validate(data)


def cli_json(capsys, *argv):
    assert main(list(argv) + ["--output", "json"]) == 0
    return json.loads(capsys.readouterr().out)


def test_all_schemas_parse():
    names = sorted(p.name for p in DOCS.glob("*.schema.json"))
    for n in names:
        Draft202012Validator.check_schema(json.loads((DOCS / n).read_text()))
    assert names == ["audit_row.schema.json", "branch_result.schema.json", "triangularity_report.schema.json",
                     "weight.schema.json", "well.schema.json"]


def test_branch_result(capsys):
    data = cli_json(capsys, "branch", "--pair", "B4:D4", "--rule", "oracle", "-w", "1,0,0,0")
    validate("branch_result", data)
    s = schema("branch_result")
    item = s["properties"]["constituents"]["items"]
    assert all(set(item["required"]) <= set(c) for c in data["constituents"])


def test_well():
    data = json.loads(wells.build_well(wells.spsp_pair(2, 2), (0, 1, 0), 3).to_json())
    validate("well", data)
    s = schema("well")
    item = s["properties"]["elements"]["items"]
    assert all(set(item["required"]) <= set(e) for e in data["elements"])


def test_triangularity_report():
    pair = wells.sln_diag_pair(2)
    rep = json.loads(leading_structure(pair, (1, 0), (0, 0), 1)[0].to_json())
    validate("triangularity_report", rep)
    s = schema("triangularity_report")
    assert set(s["required"]) == set(rep)


def test_audit_row(capsys):
    rows = cli_json(capsys, "audit")
    s = schema("audit_row")
    assert s["required"] == mfsgate.CSV_HEADER
    for row in rows:
        validate("audit_row", row)
        assert set(row) == set(s["required"])
        assert row["gate_verdict"] in s["properties"]["gate_verdict"]["enum"]


def test_weight_schema_rejects_floats():
    validate("weight", [1, 0, 2])
    validate("weight", ["1/2", "-1/2"])
    with pytest.raises(ValidationError):
        validate("weight", [0.5, 1])


def test_bottom_output_and_eps_branch(capsys):
    validate("well", cli_json(capsys, "well", "--pair", "spsp", "--ell", "2", "--bottom"))
    validate("branch_result", cli_json(capsys, "branch", "--pair", "D4:B3", "--rule", "interlace",
                                       "--eps", "-w", "1,1,1,-1"))
