import json
import subprocess
import sys

import pytest

from blockstable.cli import main
from blockstable.explosion import descriptor_of
from blockstable.graph import pendant_triangle_graph, parse_graph

TRI = "5 5\n1 2\n2 3\n3 4\n4 2\n2 5\n"


@pytest.fixture
def tri_file(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text(TRI)
    return p


@pytest.fixture
def desc_file(tmp_path):
    p = tmp_path / "desc.json"
    p.write_text(descriptor_of(pendant_triangle_graph()).to_json())
    return p


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "blockstable", *args], input=stdin, capture_output=True, text=True
    )


def test_decompose(tri_file, capsys):
    assert main(["decompose", str(tri_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"blocks": [[1, 2], [2, 3, 4], [2, 5]], "cut_vertices": [2]}


def test_decompose_stdin():
    r = run("decompose", "-", stdin=TRI)
    assert r.returncode == 0
    assert json.loads(r.stdout)["cut_vertices"] == [2]


def test_explode_then_decode(tri_file, tmp_path, capsys):
    assert main(["explode", str(tri_file)]) == 0
    out = capsys.readouterr().out
    data = json.loads(out)
    assert data["descriptor"]["f"] == [1, 2, 3, 3, 4]
    assert data["skeleton_tree"] == [[1, 2], [2, 3], [2, 4]]
    d = tmp_path / "explode.json"
    d.write_text(out)
    assert main(["decode", "--descriptor", str(d), "--word", "3 4"]) == 0
    g = parse_graph(capsys.readouterr().out)
    assert sorted(g.edges) == [(1, 3), (2, 4), (3, 4), (3, 5), (4, 5)]


def test_encode(tri_file, desc_file, capsys):
    assert main(["encode", str(tri_file)]) == 0
    assert capsys.readouterr().out.strip() == "2 2"
    assert main(["encode", str(tri_file), "--descriptor", str(desc_file)]) == 0
    assert capsys.readouterr().out.strip() == "2 2"


def test_encode_mismatch(tmp_path, desc_file, capsys):
    p = tmp_path / "p.txt"
    p.write_text("5 4\n1 2\n2 3\n3 4\n4 5\n")
    assert main(["encode", str(p), "--descriptor", str(desc_file)]) == 2
    assert "not in this explosion neighbourhood" in capsys.readouterr().err


def test_sample_deterministic(desc_file):
    a = run("sample", "--descriptor", str(desc_file), "--seed", "5", "--count", "4")
    b = run("sample", "--descriptor", str(desc_file), "--seed", "5", "--count", "4")
    assert a.returncode == 0 and a.stdout == b.stdout
    docs = a.stdout.split("\n\n")
    assert len(docs) == 4
    for doc in docs:
        assert parse_graph(doc).n == 5


def test_sample_needs_seed(desc_file):
    r = run("sample", "--descriptor", str(desc_file))
    assert r.returncode == 2
    assert "--seed" in r.stderr


def test_usage_errors(tmp_path):
    assert run("bogus").returncode == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n1 1\n")
    r = run("decompose", str(bad))
    assert r.returncode == 2 and "self-loop" in r.stderr
    assert run("decompose", str(tmp_path / "missing.txt")).returncode == 2


def test_verify_small(capsys):
    assert main(["verify", "--max-n", "4", "--max-m", "4", "--max-weight-sum", "6"]) == 0
    lines = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    assert len(lines) == 7 and all(x["pass"] for x in lines)


def test_experiment(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"experiment": "block_degree", "base": "pendant_triangle"}))
    assert main(["experiment", "--config", str(cfg)]) == 0
    assert capsys.readouterr().out.startswith("statistic,parameter,empirical,bound,sigma,pass\n")
    out = tmp_path / "out" / "r.csv"
    assert main(["experiment", "--config", str(cfg), "--output", str(out), "--seed", "1"]) == 0
    assert out.exists() and out.with_suffix(".json").exists()
    assert json.loads(out.with_suffix(".json").read_text())["seed"] == 1
