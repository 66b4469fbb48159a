import json
import subprocess
import sys

import pytest

from ceswb import verify
from ceswb.cli import main, parse_seq, CLIError
from ceswb.serialize import diagram_from_json, diagram_to_json, dumps

A4_C = [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, -1, 0], [0, 1, 1, 1]]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_parse_seq():
    assert parse_seq("1,3", 3) == [0, 2]
    assert parse_seq("", 3) == []
    with pytest.raises(CLIError):
        parse_seq("0", 3)
    with pytest.raises(CLIError):
        parse_seq("1,x", 3)


def test_mutate_a3(capsys):
    data = run_json(capsys, "mutate", "--n", "3", "--seq", "1,3", "--format", "json")
    steps = data["steps"]
    assert [s["cmatrix"] for s in steps[1:]] == [
        [[-1, 0, 0], [1, 1, 0], [0, 0, 1]],
        [[-1, 0, 0], [1, 1, 0], [0, 0, -1]],
    ]
    assert steps[1]["branches"] == ["i", "ii"]
    assert steps[1]["rewrites"] == [{"row": 2, "case": "c"}]
    assert steps[2]["branches"] == ["ii"]


def test_mutate_text_mentions_unaffected(capsys):
    code, out, _ = run(capsys, "mutate", "--n", "3", "--seq", "1,3")
    assert code == 0
    assert "branch i fired: row 2 case c" in out
    assert "no other chord affected" in out
    assert "diagram = {1->0:1, 0->2:2, 3->2:3}" in out


def test_mutate_involution(capsys):
    data = run_json(capsys, "mutate", "--n", "2", "--seq", "1,1", "--format", "json")
    assert data["steps"][-1]["cmatrix"] == [[1, 0], [0, 1]]


def test_mutate_a4(capsys):
    data = run_json(capsys, "mutate", "--n", "4", "--seq", "2,3", "--format", "json")
    assert data["steps"][-1]["cmatrix"] == A4_C


def test_mutate_dot(capsys):
    code, out, _ = run(capsys, "mutate", "--n", "2", "--seq", "1", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


@pytest.mark.parametrize("seq", ["4", "0", "a"])
def test_mutate_bad_index(capsys, seq):
    code, _, err = run(capsys, "mutate", "--n", "3", "--seq", seq)
    assert code != 0 and "error" in err


@pytest.mark.parametrize(
    "argv,count",
    [
        (("enum", "--n", "3", "ces", "--count-only"), "16"),
        (("enum", "--n", "2", "cmatrices", "--count-only"), "5"),
        (("enum", "--n", "3", "diagrams", "--count-only"), "12"),
        (("enum", "--n", "4", "ncchains", "--count-only"), "125"),
        (("enum", "--n", "4", "diagrams", "--k", "2", "--count-only"), "40"),
    ],
)
def test_enum_counts(capsys, argv, count):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == count + "\n"


def test_enum_json_listing(capsys):
    data = run_json(capsys, "enum", "--n", "2", "ces")
    assert data["count"] == 3 == len(data["items"])
    assert all(len(seq) == 2 for seq in data["items"])
    assert data["items"] == sorted(data["items"], key=lambda s: [(x["i"], x["j"]) for x in s])


def test_enum_diagram_items_round_trip(capsys):
    data = run_json(capsys, "enum", "--n", "3", "diagrams")
    for item in data["items"]:
        assert dumps(diagram_to_json(diagram_from_json(item))) == dumps(item)


def test_enum_bound(capsys, monkeypatch):
    monkeypatch.setenv("CESWB_BOUND", "3")
    code, _, err = run(capsys, "enum", "--n", "4", "diagrams", "--count-only")
    assert code != 0 and "bound" in err
    code, out, _ = run(capsys, "enum", "--n", "4", "diagrams", "--count-only", "--bound", "4")
    assert code == 0 and out == "55\n"


def test_enum_is_deterministic(capsys):
    first = run(capsys, "enum", "--n", "3", "ces")[1]
    assert run(capsys, "enum", "--n", "3", "ces")[1] == first


def test_classify_positive_and_round_trip(capsys, tmp_path):
    data = run_json(capsys, "mutate", "--n", "4", "--seq", "2,3", "--format", "json")
    diagram = data["steps"][-1]["diagram"]
    result = run_json(capsys, "classify", "--input", write(tmp_path, "d.json", diagram))
    assert result["is_cmatrix"] is True
    assert result["cmatrix"] == A4_C
    assert result["witness_ces"] == [{"i": 1, "j": 3}, {"i": 2, "j": 3}, {"i": 1, "j": 4}, {"i": 0, "j": 1}]
    # the emitted c-matrix is accepted by perms
    perms = run_json(capsys, "perms", "--input", write(tmp_path, "c.json", result["cmatrix"]))
    assert perms["cmatrix"] == A4_C


def test_classify_negative(capsys, tmp_path):
    d = {"n_points": 3, "chords": [{"a": 0, "b": 1, "dir": "ba"}, {"a": 1, "b": 2, "dir": "ab"}]}
    result = run_json(capsys, "classify", "--input", write(tmp_path, "d.json", d))
    assert result == {"is_cmatrix": False, "cmatrix": None, "witness_ces": None}


def test_classify_needs_orientation(capsys, tmp_path):
    d = {"n_points": 3, "chords": [{"a": 0, "b": 1}, {"a": 1, "b": 2}]}
    code, _, err = run(capsys, "classify", "--input", write(tmp_path, "d.json", d))
    assert code != 0 and "oriented" in err


def test_perms_a4(capsys, tmp_path):
    data = run_json(capsys, "perms", "--input", write(tmp_path, "c.json", A4_C))
    assert {p["cycles"] for p in data["permutations"]} == {"(243)", "(12)(34)", "(34)"}
    ces = {tuple((x["i"], x["j"]) for x in p["ces"]) for p in data["permutations"]}
    assert ces == {
        ((1, 3), (2, 3), (1, 4), (0, 1)),
        ((1, 3), (1, 4), (0, 1), (2, 3)),
        ((1, 3), (1, 4), (2, 3), (0, 1)),
    }


def test_perms_identity(capsys, tmp_path):
    data = run_json(capsys, "perms", "--input", write(tmp_path, "c.json", {"rows": [[1, 0], [0, 1]]}))
    assert data["permutations"] == [{"one_line": [1, 2], "cycles": "()", "ces": [{"i": 1, "j": 2}, {"i": 0, "j": 1}]}]


def test_perms_incoherent(capsys, tmp_path):
    code, _, err = run(capsys, "perms", "--input", write(tmp_path, "c.json", [[1, -1], [0, 1]]))
    assert code != 0 and "sign-coherent" in err


def test_poset_formats(capsys, tmp_path):
    d = {"n_points": 4, "chords": [{"a": 0, "b": 1}, {"a": 1, "b": 3}, {"a": 2, "b": 3}]}
    path = write(tmp_path, "d.json", d)
    data = run_json(capsys, "poset", "--input", path)
    assert data["linear_extensions"] == 2 and data["conditions_hold"] is True
    code, out, _ = run(capsys, "poset", "--input", path, "--format", "dot")
    assert code == 0 and "rankdir=BT" in out


def test_ncchains_both_directions(capsys, tmp_path):
    d = {"n_points": 4, "chords": [{"a": 0, "b": 1, "label": 1}, {"a": 1, "b": 3, "label": 3}, {"a": 2, "b": 3, "label": 2}]}
    code, chain_text, _ = run(capsys, "ncchains", "--input", write(tmp_path, "d.json", d))
    assert code == 0
    code, diagram_text, _ = run(capsys, "ncchains", "--input", write(tmp_path, "ch.json", json.loads(chain_text)))
    assert code == 0 and json.loads(diagram_text) == d
    # re-emission is byte-identical
    code, again, _ = run(capsys, "ncchains", "--input", write(tmp_path, "d2.json", json.loads(diagram_text)))
    assert again == chain_text


def test_ncchains_listing(capsys):
    data = run_json(capsys, "ncchains", "--n", "2")
    assert data["count"] == 3


def test_trees(capsys):
    data = run_json(capsys, "trees", "--n", "3")
    assert data["trees"] == data["diagrams"] == {"2": 12, "3": 4}
    assert data["equal"] is True


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2")
    assert code == 0
    assert out.count("PASS") == len(verify.GATES)


def test_verify_jobs_identical_bytes(capsys):
    one = run(capsys, "verify", "--n", "3", "--jobs", "1")
    two = run(capsys, "verify", "--n", "3", "--jobs", "2")
    assert one == two


def test_verify_fault_injection(capsys, monkeypatch):
    monkeypatch.setitem(verify.FIXTURES["ces_count"], 3, 17)
    code, out, err = run(capsys, "verify", "--n", "3")
    assert code == 1
    assert "FAIL cayley" in out and "cayley" in err
    assert "PASS commuting-square" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "enum", "--n", "3", "ces", "--count-only", "--output", str(target))
    assert code == 0 and out == "" and target.read_text() == "16\n"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ceswb", "enum", "--n", "2", "cmatrices", "--count-only"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "5\n"


def test_help_mentions_one_based(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    assert "1-based" in capsys.readouterr().out
