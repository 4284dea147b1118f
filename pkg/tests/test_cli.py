import json
import subprocess
import sys

import pytest

from bisynset.cli import main
from bisynset.lexicon import load_pairs

from helpers import ADGHAL, DATA, GHAB, GHABA

FOREST_TSV = str(DATA / "forest.tsv")


def run(*args):
    return subprocess.run(
        [sys.executable, "-m", "bisynset", *args], capture_output=True, check=False
    )


@pytest.fixture
def gold_file(tmp_path):
    path = tmp_path / "gold.tsv"
    path.write_text("s1\ta1|a2\te1|e2\ns2\ta3\te3\ns3\ta4\te4|e5\n", encoding="utf-8")
    return path


def test_extract_forest_stdout():
    proc = run("extract", "--pairs", FOREST_TSV, "--k", "6", "--l1", "ar", "--l2", "en")
    assert proc.returncode == 0
    assert proc.stdout.decode() == f"s1\t{ADGHAL}|{GHAB}|{GHABA}\tforest|wood|woods\t15\n"
    assert b"cycles=15" in proc.stderr and b"final=1" in proc.stderr


def test_extract_odd_k_is_config_error():
    proc = run("extract", "--pairs", FOREST_TSV, "--k", "5")
    assert proc.returncode == 2
    assert b"even" in proc.stderr


def test_extract_empty_file(tmp_path):
    empty = tmp_path / "empty.tsv"
    empty.write_bytes(b"")
    assert main(["extract", "--pairs", str(empty)]) == 1


def test_extract_parse_error_reports_line(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_bytes(b"a\tx\nbroken\n")
    assert main(["extract", "--pairs", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_extract_missing_file(tmp_path):
    assert main(["extract", "--pairs", str(tmp_path / "nope.tsv")]) == 1


def test_bad_policy_is_config_error():
    with pytest.raises(SystemExit) as exc:
        main(["extract", "--pairs", FOREST_TSV, "--policy", "cosine"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["extract", "--pairs", FOREST_TSV, "--policy", "jaccard", "--theta", "2"])
    assert exc.value.code == 2


def test_extract_jsonl_and_dumps(tmp_path):
    out, graph, cycles = tmp_path / "o.jsonl", tmp_path / "g.txt", tmp_path / "c.txt"
    code = main(
        [
            "extract", "--pairs", FOREST_TSV, "--format", "jsonl", "--trivial-pairs",
            "--out", str(out), "--dump-graph", str(graph), "--dump-cycles", str(cycles),
            "--l1", "ar", "--l2", "en",
        ]
    )  # fmt: skip
    assert code == 0
    rows = [json.loads(line) for line in out.read_text(encoding="utf-8").splitlines()]
    assert [r["source"] for r in rows] == ["cycles", "trivial_pair"]
    edges = graph.read_text(encoding="utf-8").splitlines()
    assert len(edges) == 10 and edges == sorted(edges)
    assert edges[0].startswith("ar:") and "\ten:" in edges[0]
    assert len(cycles.read_text(encoding="utf-8").splitlines()) == 15


def test_extract_is_byte_identical_across_runs(tmp_path):
    outs = []
    for threads in ("1", "4"):
        out = tmp_path / f"o{threads}.tsv"
        assert main(["extract", "--pairs", FOREST_TSV, "--trivial-pairs", "--threads", threads, "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    assert b"\r" not in outs[0]


def test_flatten(tmp_path):
    gold = tmp_path / "g.tsv"
    gold.write_text("s1\ta1|a2\te1\n", encoding="utf-8")
    out = tmp_path / "pairs.tsv"
    assert main(["flatten", "--gold", str(gold), "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == "a1\te1\na2\te1\n"


def test_flatten_empty_gold(tmp_path):
    gold = tmp_path / "g.tsv"
    gold.write_bytes(b"")
    assert main(["flatten", "--gold", str(gold)]) == 1


def test_flatten_round_trip(tmp_path, gold_file):
    out = tmp_path / "pairs.tsv"
    assert main(["flatten", "--gold", str(gold_file), "--out", str(out)]) == 0
    pairs, report = load_pairs(out)
    assert len(pairs) == 4 + 1 + 2 and report.duplicates == 0
    again = tmp_path / "again.tsv"
    again.write_bytes(out.read_bytes())
    assert load_pairs(again)[0] == pairs


def test_experiment_exact_reconstruction(tmp_path, gold_file):
    out, js = tmp_path / "table.txt", tmp_path / "m.json"
    assert main(["experiment", "--gold", str(gold_file), "--out", str(out), "--json", str(js), "--l1", "ar", "--l2", "en"]) == 0
    table = out.read_text(encoding="utf-8")
    assert table.count("100.0   100.0      100.0") == 2
    assert "ar synsets" in table and "en synsets" in table
    data = json.loads(js.read_text(encoding="utf-8"))
    assert data["reports"]["ar"]["f_measure"] == 1.0
    assert data["reports"]["en"]["config"]["side"] == "en"


def test_extract_then_evaluate_equals_experiment(tmp_path, gold_file):
    pairs, synsets = tmp_path / "p.tsv", tmp_path / "s.tsv"
    assert main(["flatten", "--gold", str(gold_file), "--out", str(pairs)]) == 0
    assert main(["extract", "--pairs", str(pairs), "--trivial-pairs", "--out", str(synsets)]) == 0
    ev, ex = tmp_path / "ev.json", tmp_path / "ex.json"
    assert main(["evaluate", "--synsets", str(synsets), "--gold", str(gold_file), "--json", str(ev), "--out", str(tmp_path / "t1")]) == 0
    assert main(["experiment", "--gold", str(gold_file), "--json", str(ex), "--out", str(tmp_path / "t2")]) == 0
    evaluated = json.loads(ev.read_text())
    experimented = json.loads(ex.read_text())["reports"]
    for side in ("l1", "l2"):
        for field in ("precision", "recall", "f_measure", "extracted_count", "gold_count"):
            assert evaluated[side][field] == experimented[side][field]


def test_experiment_no_consolidate_flag(tmp_path, gold_file):
    js = tmp_path / "m.json"
    assert main(["experiment", "--gold", str(gold_file), "--no-consolidate", "--json", str(js), "--out", str(tmp_path / "t")]) == 0
    data = json.loads(js.read_text())
    assert data["reports"]["l1"]["config"]["consolidate"] is False


def test_stats(tmp_path):
    out = tmp_path / "stats.txt"
    assert main(["stats", "--pairs", FOREST_TSV, "--out", str(out)]) == 0
    stats = dict(line.split("\t") for line in out.read_text().splitlines())
    assert stats["pairs"] == "10"
    assert stats["cycles"] == "15"
    assert stats["cycles_len4"] == "9" and stats["cycles_len6"] == "6"


def test_stdin_input():
    data = (DATA / "forest.tsv").read_bytes()
    proc = subprocess.run(
        [sys.executable, "-m", "bisynset", "extract", "--pairs", "-"], input=data, capture_output=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.count(b"\n") == 1
