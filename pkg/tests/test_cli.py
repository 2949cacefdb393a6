import json
import subprocess
import sys

import pytest

from zfthrottle.cli import main
from zfthrottle.digraph import Digraph, UndirectedGraph, load_digraph
from zfthrottle.families import generate
from zfthrottle.throttling import th

CATALOG = [
    "host:3,2", "host:1,1", "hessenberg:5", "hessenberg:5,3", "altpath:14", "altpath:7,1", "onedirpath:6",
    "tmax:6", "tmin:5", "tmin:12", "doublearc:star:5", "doublearc:path:6", "doublearc:cycle:5",
    "doublearc:complete:4", "doublearc:doublestar:2,3", "doublearc:augstar:2,2", "doublearc:empty:3",
]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_th_path(capsys):
    code, out, _ = run(capsys, "compute", "th", "--family", "onedirpath:4")
    assert code == 0
    doc = json.loads(out)
    assert doc["th"] == 3 and len(doc["B"]) + doc["pt"] == 3


def test_oti_path(capsys):
    code, out, _ = run(capsys, "oti", "--family", "path:4")
    doc = json.loads(out)
    assert code == 0 and (doc["m"], doc["M"], doc["full"]) == (3, 4, True)


def test_verify_transpose(capsys):
    code, out, _ = run(capsys, "verify", "transpose", "--census", "4")
    assert code == 0 and json.loads(out)["instances"] == 4096


def test_verify_failure_exit(capsys, monkeypatch):
    from zfthrottle import verifier

    real = verifier.th_value
    monkeypatch.setattr(verifier, "th_value", lambda d: real(d) + (d.n == 3 and d.out_adj[0] == 2))
    code, out, _ = run(capsys, "verify", "transpose", "--census", "3")
    assert code == 1 and json.loads(out)["failures"]


def test_verify_scopes(capsys):
    code, out, _ = run(capsys, "verify", "star", "--range", "3..5")
    assert code == 0 and json.loads(out)["scope"] == "family:3..5"
    code, out, _ = run(capsys, "verify", "arcflip", "--random", "5,50", "--seed", "3")
    doc = json.loads(out)
    assert code == 0 and doc["seed"] == 3 and doc["instances"] == 50
    code, out, _ = run(capsys, "verify", "finite", "--scope", "census:3")
    assert code == 0


def test_compute_variants(capsys):
    code, out, _ = run(capsys, "compute", "pt", "--family", "onedirpath:4", "--B", "0,2")
    assert json.loads(out)["pt"] == 1
    code, out, _ = run(capsys, "compute", "ptk", "--family", "altpath:5", "--k", "3")
    assert json.loads(out)["pt"] == 1
    code, out, _ = run(capsys, "compute", "z", "--family", "altpath:5")
    assert json.loads(out)["z"] == 3
    code, out, _ = run(capsys, "compute", "th", "--family", "star:5", "--orientation", "3")
    assert json.loads(out)["th"] == 5


def test_compute_from_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "compute", "th", "--file", str(f))
    assert json.loads(out)["th"] == 3
    j = tmp_path / "g.json"
    j.write_text(json.dumps({"n": 2, "arcs": [[0, 1]]}))
    code, out, _ = run(capsys, "compute", "th", "--file", str(j))
    assert json.loads(out)["th"] == 2


def test_formats(capsys):
    code, out, _ = run(capsys, "compute", "th", "--family", "onedirpath:4", "--format", "text")
    assert "th: 3" in out.splitlines()
    code, out, _ = run(capsys, "--format", "csv", "compute", "z", "--family", "onedirpath:4")
    assert out.splitlines() == ["n,z", "4,1"]


def test_generate_edge_list(capsys):
    code, out, _ = run(capsys, "generate", "host:2,2")
    assert code == 0
    assert load_digraph(out) == generate("host:2,2")
    code, out, _ = run(capsys, "generate", "tmin:5", "--format", "json")
    assert Digraph.from_arcs(5, [tuple(a) for a in json.loads(out)["arcs"]]) == generate("tmin:5")


@pytest.mark.parametrize("argv", [
    ["compute", "th"],
    ["compute", "th", "--family", "nosuch:3"],
    ["compute", "th", "--family", "host:0,1"],
    ["compute", "ptk", "--family", "altpath:5"],
    ["compute", "ptk", "--family", "altpath:5", "--k", "1"],
    ["compute", "pt", "--family", "altpath:5"],
    ["compute", "th", "--file", "/nonexistent/file"],
    ["compute", "th", "--family", "tmax:3", "--orientation", "1"],
    ["verify", "nosuch"],
    ["verify", "star", "--census", "3", "--range", "1..2"],
    ["conjecture", "--nmax", "99"],
    ["census", "--n", "3", "--stat", "z"],
    ["oti", "--family", "path:4", "--shards", "3/2"],
    ["bogus"],
    [],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_parse_error_names_line(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("3\n0 1\n1 9\n")
    code, _, err = run(capsys, "compute", "th", "--file", str(f))
    assert code == 2 and "line 3" in err


def test_shards_and_merge(capsys, tmp_path):
    paths = []
    for i in range(3):
        code, out, _ = run(capsys, "oti", "--family", "complete:4", "--shards", f"{i}/3")
        p = tmp_path / f"o{i}.json"
        p.write_text(out)
        paths.append(str(p))
    code, out, _ = run(capsys, "merge", *paths)
    code2, whole, _ = run(capsys, "oti", "--family", "complete:4")
    assert json.loads(out) == json.loads(whole)

    paths = []
    for i in range(2):
        code, out, _ = run(capsys, "conjecture", "--nmax", "9", "--shards", f"{i}/2")
        p = tmp_path / f"k{i}.json"
        p.write_text(out)
        paths.append(str(p))
    code, out, _ = run(capsys, "merge", *paths)
    merged = json.loads(out)
    code, whole, _ = run(capsys, "conjecture", "--nmax", "9")
    assert code == 0
    assert merged["notes"] == json.loads(whole)["notes"]
    assert merged["instances"] == json.loads(whole)["instances"]

    paths = []
    for i in range(2):
        code, out, _ = run(capsys, "verify", "transpose", "--random", "5,40", "--seed", str(i))
        p = tmp_path / f"v{i}.json"
        p.write_text(out)
        paths.append(str(p))
    code, out, _ = run(capsys, "merge", *paths)
    assert code == 0 and json.loads(out)["instances"] == 80


def test_census_verb(capsys):
    code, out, _ = run(capsys, "census", "--n", "4", "--stat", "th")
    doc = json.loads(out)
    assert code == 0 and sum(doc["distribution"].values()) == 4096


@pytest.mark.parametrize("spec", CATALOG)
def test_generate_compute_round_trip(spec):
    gen = subprocess.run([sys.executable, "-m", "zfthrottle", "generate", spec],
                         capture_output=True, text=True, check=True)
    comp = subprocess.run([sys.executable, "-m", "zfthrottle", "compute", "th", "--file", "-"],
                          input=gen.stdout, capture_output=True, text=True, check=True)
    g = generate(spec)
    if isinstance(g, UndirectedGraph):
        g = Digraph(g.n, g.adj)
    assert json.loads(comp.stdout)["th"] == th(g)
    assert comp.stderr == ""
