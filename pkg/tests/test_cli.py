import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from patchwork.cli import main

TRIANGLE = {"omega": ["x", "y", "z"], "sets": [["x", "y"], ["y", "z"], ["x", "z"]]}
CHAIN = {"omega": ["1", "2", "3"], "sets": [["1"], ["1", "2"], ["1", "2", "3"]]}


def schema(name):
    return json.loads(resources.files("patchwork").joinpath(f"schemas/{name}.json").read_text())


@pytest.fixture
def write(tmp_path):
    def _write(obj, name="in.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_close(capsys, write):
    code, out, _ = run(capsys, "close", write(TRIANGLE))
    data = json.loads(out)
    assert code == 0 and data["size"] == 8 and not data["exceeded"]
    jsonschema.validate(data, schema("close"))

    code, out, _ = run(capsys, "close", write(CHAIN))
    data = json.loads(out)
    assert {tuple(s) for s in CHAIN["sets"]} <= {tuple(s) for s in data["sets"]}

    code, out, _ = run(capsys, "close", "--bound", "4", write(TRIANGLE))
    data = json.loads(out)
    assert data["exceeded"] and data["bound"] == 4
    jsonschema.validate(data, schema("close"))


def test_decide(capsys, write):
    code, out, _ = run(capsys, "decide", write(TRIANGLE))
    data = json.loads(out)
    assert code == 3 and data["certificate"]["kind"] == "adjacent_triple"
    assert data["certificate"]["sets"] == [["x"], ["y"], ["z"]]
    jsonschema.validate(data, schema("decide"))

    code, out, _ = run(capsys, "decide", write(CHAIN))
    data = json.loads(out)
    assert code == 0 and data["order"] is not None
    jsonschema.validate(data, schema("decide"))


def test_decide_bound_and_triple(capsys):
    code, inst, _ = run(capsys, "extremal", "--kind", "powerset", "--n", "3")
    sys_stdin = sys.stdin
    try:
        sys.stdin = io.StringIO(inst)
        code, out, _ = run(capsys, "decide")
        data = json.loads(out)
        assert code == 3 and data["certificate"] == {"kind": "closure_bound_exceeded", "bound": 17, "reached": 18}
        jsonschema.validate(data, schema("decide"))
        sys.stdin = io.StringIO(inst)
        code, out, _ = run(capsys, "decide", "--find-triple", "-")
        assert json.loads(out)["certificate"]["kind"] == "adjacent_triple"
    finally:
        sys.stdin = sys_stdin


def test_decide_errors(capsys, write):
    code, out, err = run(capsys, "decide", write("{nope"))
    assert code == 1 and out == "" and "error" in err
    code, _, _ = run(capsys, "decide", write({"omega": ["a"], "sets": [["b"]]}))
    assert code == 1
    code, _, _ = run(capsys, "decide", "/nonexistent/file.json")
    assert code == 1


def test_decide_figure(capsys, write, tmp_path):
    fig = tmp_path / "model.png"
    code, out, _ = run(capsys, "decide", "--figure", str(fig), write(CHAIN))
    assert code == 0 and fig.stat().st_size > 0
    fig2 = tmp_path / "none.png"
    code, _, err = run(capsys, "decide", "--figure", str(fig2), write(TRIANGLE))
    assert code == 3 and not fig2.exists() and "not orderable" in err


def test_analyze(capsys, write):
    code, inst, _ = run(capsys, "extremal", "--kind", "interval", "--n", "3")
    code, out, _ = run(capsys, "analyze", write(inst))
    data = json.loads(out)
    jsonschema.validate(data, schema("analyze"))
    assert data["closure_size"] == 17
    assert [c["case"] for c in data["case_labels"]].count("path") == 1
    inner = data["tree"]["children"][0]
    assert [c["set"] for c in inner["children"]] == [["-2"], ["-1"], ["0"], ["1"], ["2"]]

    code, out, _ = run(capsys, "analyze", write({"omega": ["x", "y", "z"], "sets": [["x", "y"]]}))
    data = json.loads(out)
    assert len(data["case_labels"]) == 2

    code, inst, _ = run(capsys, "extremal", "--kind", "powerset", "--n", "2")
    code, out, _ = run(capsys, "analyze", write(inst))
    data = json.loads(out)
    leaves = [c for c in data["case_labels"] if len(c["set"]) == 1]
    assert len(leaves) == 3

    code, out, _ = run(capsys, "analyze", write({"omega": [], "sets": []}))
    assert json.loads(out)["tree"] is None


def test_synth(capsys, write):
    spec = {"node": {"kind": "path", "children": [{"kind": "edgeless", "labels": [x]} for x in "abc"]}}
    jsonschema.validate(spec, schema("treespec"))
    code, out, _ = run(capsys, "synth", write(spec))
    data = json.loads(out)
    jsonschema.validate(data, schema("instance"))
    assert code == 0 and len(data["sets"]) == 7
    code, _, err = run(capsys, "synth", write({"node": {"kind": "path", "children": []}}))
    assert code == 1 and "path" in err


def test_graph(capsys, write):
    code, out, _ = run(capsys, "graph", write(TRIANGLE))
    assert out.startswith("graph G {") and out.count(" -- ") == 9
    code, out, _ = run(capsys, "graph", "--format", "json", write(TRIANGLE))
    data = json.loads(out)
    jsonschema.validate(data, schema("graph"))
    assert len(data["vertices"]) == 6


def test_extremal_and_oracle(capsys, write, tmp_path):
    code, out, _ = run(capsys, "extremal", "--kind", "interval", "--n", "2")
    data = json.loads(out)
    jsonschema.validate(data, schema("instance"))
    assert data["omega"] == ["-2", "-1", "0", "1", "2"]
    fig = tmp_path / "sizes.png"
    code, _, _ = run(capsys, "extremal", "--kind", "powerset", "--n", "3", "--figure", str(fig))
    assert code == 0 and fig.exists()

    code, out, _ = run(capsys, "oracle", write(TRIANGLE))
    assert code == 3 and json.loads(out)["orderable"] is False
    code, out, _ = run(capsys, "oracle", write(CHAIN))
    assert code == 0
    big = {"omega": [str(i) for i in range(9)], "sets": []}
    code, _, _ = run(capsys, "oracle", write(big))
    assert code == 1


@pytest.mark.parametrize("cmd", [["close"], ["decide"], ["analyze"], ["graph"], ["graph", "--format", "json"]])
def test_deterministic(capsys, write, cmd):
    path = write(TRIANGLE)
    first = run(capsys, *cmd, path)
    second = run(capsys, *cmd, path)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "patchwork", "decide"],
        input=json.dumps(CHAIN), capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["orderable"] is True
