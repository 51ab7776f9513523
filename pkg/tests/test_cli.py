from __future__ import annotations

import json

import pytest

from tokengraphs.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, build_parser, main
from tokengraphs.config import SEED_ENV
from tokengraphs.families import cycle, diamond
from tokengraphs.formats import graph6_decode, labels_decode, write_graph
from tokengraphs.graph import relabel


@pytest.fixture(autouse=True)
def no_seed_env(monkeypatch):
    monkeypatch.delenv(SEED_ENV, raising=False)


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.g6"
    write_graph(cycle(4), path, "g6")
    return path


def test_gen(tmp_path):
    out = tmp_path / "c5.g6"
    assert main(["gen", "cycle", "5", "--out", str(out)]) == EXIT_OK
    assert out.read_bytes() == b"Dhc\n"


def test_gen_edgelist(tmp_path):
    out = tmp_path / "p3.el"
    assert main(["gen", "path", "3", "--out", str(out), "--format", "edgelist"]) == EXIT_OK
    assert out.read_text() == "3 2\n0 1\n1 2\n"


def test_gen_rejects_bad_parameters(capsys):
    assert main(["gen", "cycle", "2"]) == EXIT_USAGE
    assert "cycle length" in capsys.readouterr().err


def test_build_writes_labels(tmp_path, c4_file):
    out = tmp_path / "f22.g6"
    assert main(["build", str(c4_file), "--k", "2", "--m", "2", "--out", str(out)]) == EXIT_OK
    g = graph6_decode(out.read_bytes())
    assert (g.n, g.edge_count) == (6, 7)
    labels = labels_decode((tmp_path / "f22.labels").read_text())
    assert labels == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_build_variant(tmp_path, c4_file):
    out = tmp_path / "fkr.g6"
    assert main(["build", str(c4_file), "--k", "2", "--variant", "fkr-prime", "--r", "2",
                 "--out", str(out)]) == EXIT_OK
    assert graph6_decode(out.read_bytes()).edge_count == 1


def test_build_rejects_large_k(capsys, c4_file):
    assert main(["build", str(c4_file), "--k", "5", "--m", "2"]) == EXIT_USAGE
    assert "k:" in capsys.readouterr().err


def test_build_needs_m(c4_file):
    assert main(["build", str(c4_file), "--k", "2"]) == EXIT_USAGE


def test_missing_input(tmp_path):
    assert main(["inv", str(tmp_path / "missing.g6")]) == EXIT_USAGE


def test_bad_graph6(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_bytes(b"!!\n")
    assert main(["inv", str(path)]) == EXIT_USAGE
    assert "byte 0" in capsys.readouterr().err


def test_inv(tmp_path, capsys):
    path = tmp_path / "f22.g6"
    out = tmp_path / "c5.g6"
    write_graph(cycle(5), out, "g6")
    main(["build", str(out), "--k", "2", "--m", "2", "--out", str(path)])
    capsys.readouterr()
    assert main(["inv", str(path), "--which", "gamma", "chi", "bipartite"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 10
    assert data["gamma"]["value"] == 3
    assert data["chi"]["value"] == 3
    assert data["bipartite"]["bipartite"] is False


def test_iso(tmp_path, capsys):
    first, second = tmp_path / "a.g6", tmp_path / "b.g6"
    write_graph(cycle(6), first, "g6")
    write_graph(relabel(cycle(6), [3, 5, 0, 2, 4, 1]), second, "g6")
    assert main(["iso", str(first), str(second)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["isomorphic"] is True
    assert sorted(data["mapping"]) == list(range(6))


def test_aut(tmp_path, capsys):
    path = tmp_path / "diamond.g6"
    write_graph(diamond(), path, "g6")
    assert main(["aut", str(path)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["n"] == 4
    assert data["order"] == "4"


def test_verify_writes_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    code = main(["verify", "--suite", "c4_example", "--seed", "1", "--out", str(report)])
    assert code == EXIT_OK
    data = json.loads(report.read_text())
    assert data["seed"] == 1
    assert data["checks"][0]["status"] == "pass"
    assert "pass=1 fail=0" in capsys.readouterr().err


def test_verify_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv(SEED_ENV, "7")
    assert main(["verify", "--suite", "diamond_example"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["seed"] == 7


def test_verify_unknown_check(capsys):
    assert main(["verify", "--suite", "nope"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "nope" in err and "c4_example" in err


def test_verify_exit_code_on_failure(monkeypatch):
    from tokengraphs import harness
    from tokengraphs.harness import Case, CheckSpec, failed

    def cases(ctx):
        yield Case({}, lambda: failed(1, 2, cycle(3), "synthetic failure"))

    harness.registry()
    monkeypatch.setitem(harness.REGISTRY, "always_fails", CheckSpec("always_fails", cases, "synthetic"))
    assert main(["verify", "--suite", "always_fails", "--seed", "0"]) == EXIT_FAIL


def test_argparse_errors_exit_with_usage():
    with pytest.raises(SystemExit) as info:
        main(["verify", "--jobs", "0"])
    assert info.value.code == EXIT_USAGE


def test_info_logging_is_the_default():
    parser = build_parser()
    assert parser.parse_args(["aut", "x.g6"]).verbose == 1
    assert parser.parse_args(["-vv", "aut", "x.g6"]).verbose == 3
