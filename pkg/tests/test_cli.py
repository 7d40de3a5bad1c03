import json

import pytest

from resograph.cli import EXIT_INPUT, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, RunConfig, main
from resograph.corpus import corpus_dir
from resograph.report import SCHEMA

DATA = corpus_dir()


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_l2(capsys):
    code, out, _ = _run(capsys, "verify", "--graph", str(DATA / "L2.json"))
    doc = json.loads(out)
    assert code == EXIT_OK and doc["ok"] and doc["schema"] == SCHEMA
    assert doc["graphs"]["L2"]["summary"] == {"forcing": True, "pce_sequence": True}


def test_verify_q3_both_sides_false(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, _, _ = _run(capsys, "verify", "--graph", str(DATA / "Q3.json"),
                      "--all-rfds", "--json", str(report))
    doc = json.loads(report.read_text())
    assert code == EXIT_OK
    assert doc["graphs"]["Q3"]["summary"] == {"forcing": False, "pce_sequence": False}
    main_check = doc["graphs"]["Q3"]["checks"]["main_theorem"]
    assert main_check["verdict"] == "pass"
    assert len(main_check["witness"]["remainder_matchings"]) == 2
    assert main_check["witness"]["rfd_count"] == 32


def test_resonance_dot_c6(capsys, tmp_path):
    dot = tmp_path / "z.dot"
    dig = tmp_path / "d.dot"
    code, out, _ = _run(capsys, "resonance", "--graph", str(DATA / "C6.json"),
                        "--emit-dot", str(dot), "--emit-digraph", str(dig))
    assert code == EXIT_OK
    text = dot.read_text()
    assert text.count("tooltip") == 2 and text.count(" -- ") == 1 and 'label="s0"' in text
    assert dig.read_text().count(" -> ") == 1
    assert json.loads(out)["edges"] == 1


def test_emit_dot_to_stdout(capsys):
    code, out, _ = _run(capsys, "resonance", "--graph", str(DATA / "C6.json"), "--emit-dot")
    assert code == EXIT_OK and out.startswith("graph Z {")


def test_graph_dot_lists_faces(capsys, tmp_path):
    dot = tmp_path / "g.dot"
    code, _, _ = _run(capsys, "graph", "--graph", str(DATA / "Q3.json"), "--emit-dot", str(dot))
    assert code == EXIT_OK
    assert dot.read_text().count("// face") == 6


def test_matchings(capsys):
    code, out, _ = _run(capsys, "matchings", "--graph", str(DATA / "L2.json"))
    ms = json.loads(out)
    assert code == EXIT_OK and len(ms) == 3 and all(len(m) == 5 for m in ms)
    _, out, _ = _run(capsys, "matchings", "--graph", str(DATA / "coronene.json"), "--count-only")
    assert json.loads(out)["count"] == 20


def test_cap_exceeded(capsys):
    code, _, err = _run(capsys, "matchings", "--graph", str(DATA / "coronene.json"), "--cap", "5")
    assert code == EXIT_LIMIT and "5" in err


def test_lattice_verify(capsys):
    code, out, _ = _run(capsys, "lattice", "--graph", str(DATA / "pyrene.json"), "--verify")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["height"] == 4
    assert doc["height_formula"]["verdict"] == "pass"


def test_theta_and_median(capsys, tmp_path):
    dot = tmp_path / "t.dot"
    code, out, _ = _run(capsys, "theta", "--graph", str(DATA / "L3.json"), "--emit-dot", str(dot))
    assert code == EXIT_OK and json.loads(out)["isomorphic"]
    assert "cluster_theta" in dot.read_text() and "cluster_dual" in dot.read_text()
    code, out, _ = _run(capsys, "median", "--graph", str(DATA / "Q3.json"), "--check")
    assert code == EXIT_OK and json.loads(out)["median"]


def test_usage_errors(capsys):
    assert _run(capsys, "verify")[0] == EXIT_USAGE
    assert _run(capsys, "verify", "--graph", "x.json", "--cap", "1")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(ValueError):
        RunConfig("verify", ["a"], jobs=0).validate()


def test_missing_and_malformed_input(capsys, tmp_path):
    code, _, err = _run(capsys, "verify", "--graph", str(tmp_path / "nope.json"))
    assert code == EXIT_INPUT
    bad = tmp_path / "broken.json"
    bad.write_text('{"vertices": [')
    (tmp_path / "ok.json").write_text((DATA / "C4.json").read_text())
    code, _, err = _run(capsys, "sweep", str(tmp_path))
    assert code == EXIT_INPUT and "broken.json" in err


def test_sweep_empty_directory(capsys, tmp_path):
    code, out, _ = _run(capsys, "sweep", str(tmp_path))
    assert code == EXIT_OK
    assert out.strip().splitlines() == [out.strip()]  # header only


def test_sweep_deterministic_across_jobs(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code1, out1, _ = _run(capsys, "sweep", str(DATA), "--json", str(a))
    code2, out2, _ = _run(capsys, "sweep", str(DATA), "--json", str(b), "--jobs", "2")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2 and a.read_text() == b.read_text()
    assert len(out1.strip().splitlines()) == 1 + 9
