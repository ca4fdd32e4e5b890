import io
import json
import subprocess
import sys

import pytest

from conftest import DESK
from docsent.cli import main

CORPUS = str(DESK / "corpus.jsonl")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def wn(wn_dir, monkeypatch):
    monkeypatch.setenv("WORDNET_DIR", str(wn_dir))
    return str(wn_dir)


def test_classify_single_file(tmp_path, wn):
    (tmp_path / "one.txt").write_text("This movie is not good.")
    verdicts = tmp_path / "v.jsonl"
    code, out = run("classify", str(tmp_path), "--out", str(verdicts))
    assert code == 0
    assert out.strip() == "Positive: 0 / Negative: 1 / Neutral: 0 / Total: 1"
    (row,) = [json.loads(line) for line in verdicts.read_text().splitlines()]
    assert row["polarity"] == "negative" and row["hits"][0]["negated"] is True


def test_classify_desk_corpus_summary(tmp_path, wn):
    code, out = run("classify", CORPUS, "--format", "jsonl", "--summary", str(tmp_path / "s.csv"))
    assert code == 0
    counts = [int(x) for x in (tmp_path / "s.csv").read_text().splitlines()[1].split(",")]
    assert counts[0] + counts[1] + counts[2] == counts[3] == 30


def test_missing_wordnet(tmp_path, capsys):
    code, _ = run("classify", str(tmp_path), "--wordnet", str(tmp_path / "nowhere"))
    err = capsys.readouterr().err
    assert code == 1
    assert err.count("\n") == 1 and "wordnet" in err and "nowhere" in err


def test_evaluate_with_baseline(wn):
    code, out = run("evaluate", CORPUS, "--format", "jsonl", "--gold", str(DESK / "gold.tsv"),
                    "--baseline", "AIRC=0.58,0.52,0.6", "--name", "ours")
    assert code == 0
    assert "Accuracy\t0.9\n" in out
    assert "Measures\\System\tAIRC\tours\n" in out
    assert "AIRC: published" in out


def test_evaluate_json_and_chart(tmp_path, wn):
    chart, report = tmp_path / "c.svg", tmp_path / "r.json"
    code, _ = run("evaluate", CORPUS, "--format", "jsonl", "--report", "json",
                  "--out", str(report), "--chart", str(chart))
    assert code == 0
    assert json.loads(report.read_text())["matrix"]["total"] == 30
    assert chart.read_text().count('class="bar"') == 3


def test_evaluate_gold_missing_id(tmp_path, wn, capsys):
    gold = tmp_path / "g.tsv"
    gold.write_text("".join(line + "\n" for line in
                            (DESK / "gold.tsv").read_text().splitlines() if not line.startswith("d07")))
    code, _ = run("evaluate", CORPUS, "--format", "jsonl", "--gold", str(gold))
    assert code == 1 and "d07" in capsys.readouterr().err


def test_trace(tmp_path, wn):
    seed = tmp_path / "seed.tsv"
    seed.write_text("good\tpositive\n")
    code, out = run("trace", "bad", "--lexicon", str(seed))
    assert code == 0 and out.rstrip().endswith("result: negative (antonym:good)")
    code, out = run("trace", "zxqv", "--lexicon", str(seed))
    assert out.rstrip().endswith("result: unknown")
    code, out = run("trace", "better", "--lexicon", str(seed))
    assert out.startswith("better -> good") and "direct: hit" in out


def test_lexicon_expand_and_export(tmp_path, wn):
    seed = tmp_path / "seed.tsv"
    seed.write_text("good\tpositive\nbad\tnegative\n")
    out_path = tmp_path / "grown.tsv"
    code, out = run("lexicon", "expand", "--lexicon", str(seed), "--depth", "1", "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert len(lines) > 50 and "beneficial\tpositive\tsynonym:good" in lines
    code, _ = run("lexicon", "export", "--out", str(tmp_path / "e.tsv"), "--lexicon", str(seed))
    assert (tmp_path / "e.tsv").read_text().count("\tinitial") == 2


def test_chart_command(tmp_path):
    out = tmp_path / "fig.svg"
    code, _ = run("chart", "--baseline", "AIRC=0.58,0.52,0.6", "--system", "SOS=0.63,0.63,0.7",
                  "--out", str(out))
    assert code == 0 and out.read_text().count('class="bar"') == 6


def test_bad_config(tmp_path, wn, capsys):
    code, _ = run("classify", str(tmp_path), "--neg-window", "0")
    assert code == 1 and "config" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "docsent", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "docsent" in proc.stdout
