import io
import json
import subprocess
import sys

import pytest

from nearness import InputError
from nearness.cli import main, run
from nearness.document import (
    ReportDocument,
    document_from_dict,
    example_text,
    load_example,
    parse_document,
    render_report,
)

from helpers import DATA


def raw_example():
    return json.loads(example_text())


def test_bundled_example_parses():
    doc = load_example()
    assert doc.system.objects == ("o", "p", "r", "s", "t", "v", "w", "x")
    assert doc.subset("R") == {"r", "t", "w"}


@pytest.mark.parametrize("mutate,path", [
    (lambda d: d["operations"]["add"].pop(), "operations.add"),
    (lambda d: d["operations"]["add"][2].pop(), "operations.add[2]"),
    (lambda d: d["operations"]["mul"][0].__setitem__(3, "zz"), "operations.mul[0][3]"),
    (lambda d: d["objects"].__setitem__(1, "o"), "objects"),
    (lambda d: d["subsets"]["R"].append("q"), "subsets.R[3]"),
    (lambda d: d["features"]["phi1"].pop("x"), "features.phi1"),
    (lambda d: d.__setitem__("extra", 1), "extra"),
    (lambda d: d.pop("operations"), "operations"),
    (lambda d: d.__setitem__("r", 3), "r"),
])
def test_semantic_errors_carry_paths(mutate, path):
    data = raw_example()
    mutate(data)
    with pytest.raises(InputError) as info:
        document_from_dict(data)
    assert info.value.path == path


def test_malformed_json():
    with pytest.raises(InputError):
        parse_document("{not json")


def test_report_round_trip():
    code, text = run(["--format", "json", "quotient", "--sub", "S"])
    assert code == 0
    rep = ReportDocument.from_json(text)
    assert rep.to_json() + "\n" == text
    assert json.loads(text) == json.loads(rep.to_json())
    assert list(json.loads(text)) == sorted(json.loads(text))


def test_empty_report_text():
    assert "no checks requested" in render_report(ReportDocument("noop"))


def test_approx_command():
    code, text = run(["--format", "json", "approx", "--set", "R"])
    data = json.loads(text)
    assert code == 0
    assert data["witnesses"]["upper"] == ["o", "r", "t", "w"]
    assert data["witnesses"]["lower"] == ["r", "t"]


def test_verify_ring_command():
    code, text = run(["verify", "ring", "--carrier", "R", "--format", "json"])
    data = json.loads(text)
    assert code == 0
    assert {k: data["verdicts"][k] for k in ("NR1", "NR2", "NR3", "NR4", "NR5")} == {
        "NR1": "pass", "NR2": "pass", "NR3": "pass", "NR4": "pass", "NR5": "fail"}
    assert data["witnesses"]["zero"] == "o"
    assert data["deviations"] == []


def test_verify_failures_exit_one():
    assert run(["verify", "near-group", "--carrier", "O"])[0] == 1
    assert run(["verify", "subring", "--sub", "T"])[0] == 1
    assert run(["verify", "hom", "--map", "collapse"])[0] == 1


def test_subring_ideal_units_exit_zero():
    assert run(["verify", "subring", "--sub", "S"])[0] == 0
    assert run(["verify", "ideal", "--sub", "S", "--side", "left"])[0] == 0
    assert run(["verify", "units"])[0] == 0
    assert run(["verify", "intersection", "--parts", "R,S"])[0] == 0


def test_input_errors_exit_two():
    assert run(["approx", "--set", "nope"])[0] == 2
    assert run(["verify", "subring"])[0] == 2
    assert run(["verify", "hom", "--map", "nope"])[0] == 2
    assert run(["--input", str(DATA / "missing.json"), "approx", "--set", "R"])[0] == 2
    assert run(["search", "--size", "6"])[0] == 2
    assert run(["search", "--size", "4", "--exhaustive"])[0] == 2


def test_cosets_deviation_block():
    code, text = run(["--format", "json", "cosets", "--sub", "S", "--extended"])
    data = json.loads(text)
    assert data["witnesses"]["cosets"]["r+S"] == ["r", "t"]
    items = {d["item"]: d for d in data["deviations"]}
    assert items["r+S members"]["printed"] == ["r"]
    assert items["r+S members"]["computed"] == ["r", "t"]
    assert "description of t+S" in items
    assert len(items) == 2


def test_quotient_text_layout():
    code, text = run(["quotient", "--sub", "S"])
    assert code == 0
    assert "  ⊕ | r+S t+S w+S" in text
    assert "r+S | t+S w+S o+S" in text
    assert "  ⊙ | r+S t+S w+S" in text


def test_quotient_hypothesis_failure_exit_one():
    code, text = run(["--input", str(DATA / "hypothesis_fails.json"), "quotient", "--sub", "S"])
    assert code == 1 and "u+S" in text


def test_cross_document_commands():
    args = ["--input", str(DATA / "z4.json"), "--map", "reduce", "--to", str(DATA / "z2.json")]
    assert run(["verify", "hom", *args])[0] == 0
    code, text = run(["iso-check", *args, "--format", "json"])
    assert code == 0
    assert json.loads(text)["verdicts"]["restricted_iso"] == "pass"


def test_search_determinism():
    first = run(["--format", "json", "search", "--size", "2", "--seed", "7"])
    second = run(["--format", "json", "search", "--size", "2", "--seed", "7"])
    assert first == second and first[0] == 0


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(example_text()))
    assert main(["--input", "-", "approx", "--set", "S"]) == 0
    assert "upper: [o, r, t, w]" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nearness", "verify", "ring"], capture_output=True, text=True)
    assert proc.returncode == 0 and "NR3" in proc.stdout
