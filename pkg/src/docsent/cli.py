"""Command-line entry point: classify, evaluate, trace, lexicon, chart."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .classifier import ClassifierConfig, classify_corpus, wordnet_pos
from .corpus import CorpusError, load_corpus, load_gold
from .evaluation import (EvaluationError, System, compare, confusion, metrics,
                         render_chart, render_report)
from .lexicon import (LexiconError, default_seed_path, expand_closure, load_seed,
                      render_trace, resolve_polarity, save_lexicon)
from .pipeline import analyze
from .tagger import TaggingError
from .wordnet import WordNetError, load_wordnet, normalize_pos

class StageError(Exception):
    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")


def _common(p: argparse.ArgumentParser, corpus: bool = True) -> None:
    if corpus:
        p.add_argument("corpus_path", nargs="?", metavar="CORPUS",
                       help="corpus path (same as --corpus)")
        p.add_argument("--corpus", help="directory of .txt files, JSONL or TSV file")
        p.add_argument("--format", default="dir", choices=["dir", "jsonl", "tsv"],
                       help="corpus format (default: dir)")
        p.add_argument("--tagger", default="builtin", choices=["builtin", "pretagged"])
        p.add_argument("--strict", action="store_true",
                       help="abort on malformed corpus lines instead of skipping them")
    p.add_argument("--wordnet", metavar="DIR",
                   help="WordNet 3.0 dict/ directory (default: $WORDNET_DIR)")
    p.add_argument("--lexicon", metavar="FILE", help="seed lexicon TSV (default: bundled seed)")
    p.add_argument("--mode", default="online", choices=["online", "frozen"])
    p.add_argument("--include-nouns", action="store_true", help="treat nouns as opinion candidates")
    p.add_argument("--neg-window", type=int, default=3, metavar="N")
    p.add_argument("--neg-cues", default="not,n't,no,never", metavar="LIST",
                   help="comma-separated negation cues")
    p.add_argument("--no-similar", action="store_true",
                   help="do not widen adjective synonyms over similar-to links")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="docsent", description="Document-level opinion mining "
                                 "with a WordNet-grown seed lexicon.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify every document of a corpus")
    _common(p)
    p.add_argument("--out", metavar="PATH", help="write per-document verdicts as JSONL")
    p.add_argument("--summary", metavar="PATH", help="also write the summary (.csv or text)")

    p = sub.add_parser("evaluate", help="classify and score against gold labels")
    _common(p)
    p.add_argument("--gold", metavar="FILE", help="id<TAB>label file (default: corpus labels)")
    p.add_argument("--report", default="text", choices=["text", "csv", "json"])
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--verdicts", metavar="PATH", help="write per-document verdicts as JSONL")
    p.add_argument("--chart", metavar="SVG", help="write a bar chart of the measures")
    p.add_argument("--baseline", action="append", default=[], metavar="NAME=A,P,R",
                   help="published accuracy,precision,recall of another system (repeatable)")
    p.add_argument("--name", default="system", help="label for this system in comparisons")

    p = sub.add_parser("trace", help="show how one word resolves against the seed list")
    _common(p, corpus=False)
    p.add_argument("word")
    p.add_argument("--pos", default="adj", help="adj, adv, verb or noun (default: adj)")

    p = sub.add_parser("lexicon", help="export or expand the seed lexicon")
    _common(p)
    p.add_argument("action", choices=["export", "expand"])
    p.add_argument("--depth", type=int, default=1, metavar="N")
    p.add_argument("--out", metavar="PATH", required=True)

    p = sub.add_parser("chart", help="bar chart from published or computed figures")
    p.add_argument("--system", action="append", default=[], metavar="NAME=A,P,R")
    p.add_argument("--baseline", action="append", default=[], metavar="NAME=A,P,R")
    p.add_argument("--report-json", metavar="FILE", help="JSON report written by evaluate")
    p.add_argument("--name", default="system")
    p.add_argument("--title", default="")
    p.add_argument("--out", metavar="SVG", required=True)
    return ap


# --------------------------------------------------------------------------
# shared loading

def _config(args) -> ClassifierConfig:
    cues = [c.strip() for c in args.neg_cues.split(",") if c.strip()]
    try:
        return ClassifierConfig.build(include_nouns=args.include_nouns, negation_cues=cues,
                                      negation_window=args.neg_window, mode=args.mode,
                                      similar=not args.no_similar)
    except ValueError as exc:
        raise StageError("config", str(exc)) from None


def _wordnet(args):
    path = args.wordnet or os.environ.get("WORDNET_DIR")
    if not path:
        raise StageError("wordnet", "no WordNet directory given (use --wordnet or WORDNET_DIR)")
    try:
        return load_wordnet(path, validate=False)
    except WordNetError as exc:
        raise StageError("wordnet", str(exc)) from None


def _seed(args):
    try:
        return load_seed(args.lexicon or default_seed_path())
    except LexiconError as exc:
        raise StageError("lexicon", str(exc)) from None


def _documents(args):
    path = args.corpus or args.corpus_path
    if not path:
        raise StageError("corpus", "no corpus given (use --corpus)")
    fmt = {"dir": "dir_of_txt", "jsonl": "jsonl", "tsv": "tsv_labeled"}[args.format]
    suffix = ".tagged" if args.tagger == "pretagged" else ".txt"
    try:
        raws = load_corpus(path, fmt, strict=args.strict, suffix=suffix)
    except CorpusError as exc:
        raise StageError("corpus", str(exc)) from None
    try:
        return [analyze(r, args.tagger) for r in raws]
    except TaggingError as exc:
        raise StageError("tagger", str(exc)) from None


def _write(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise StageError("output", f"cannot write {path}: {exc}") from None


def _verdict_lines(verdicts) -> str:
    return "".join(json.dumps(v.to_dict(), sort_keys=True) + "\n" for v in verdicts)


def _classify(args):
    # validate every input before any work starts
    cfg = _config(args)
    db = _wordnet(args)
    lex = _seed(args)
    docs = _documents(args)
    verdicts, summary = classify_corpus(docs, lex, db, cfg)
    return docs, lex, db, cfg, verdicts, summary


# --------------------------------------------------------------------------
# commands

def cmd_classify(args, out) -> int:
    _, _, _, _, verdicts, summary = _classify(args)
    if args.out:
        _write(args.out, _verdict_lines(verdicts))
    if args.summary:
        if str(args.summary).endswith(".csv"):
            text = ("positive,negative,neutral,total\n"
                    f"{summary.n_positive},{summary.n_negative},{summary.n_neutral},{summary.total}\n")
        else:
            text = str(summary) + "\n"
        _write(args.summary, text)
    print(summary, file=out)
    return 0


def cmd_evaluate(args, out) -> int:
    baselines = []
    try:
        baselines = [System.parse(b) for b in args.baseline]
    except EvaluationError as exc:
        raise StageError("config", str(exc)) from None
    gold = None
    if args.gold:
        try:
            gold = load_gold(args.gold)
        except CorpusError as exc:
            raise StageError("gold", str(exc)) from None
    docs, _, _, _, verdicts, _ = _classify(args)
    if gold is None:
        gold = {d.id: d.gold_label for d in docs if d.gold_label is not None}
    try:
        report = metrics(confusion(verdicts, gold))
    except EvaluationError as exc:
        raise StageError("evaluate", str(exc)) from None

    text = render_report(report, args.report)
    if baselines:
        systems = baselines + [System.from_report(args.name, report)]
        if args.report == "json":
            text = json.dumps({"report": report.to_dict(),
                               "comparison": json.loads(compare(systems, "json"))},
                              indent=2, sort_keys=True) + "\n"
        else:
            text += ("\n" if args.report == "text" else "") + compare(systems, args.report)
    if args.verdicts:
        _write(args.verdicts, _verdict_lines(verdicts))
    if args.chart:
        systems = baselines + [System.from_report(args.name, report)]
        try:
            render_chart(systems, args.chart)
        except EvaluationError as exc:
            raise StageError("chart", str(exc)) from None
    if args.out:
        _write(args.out, text)
    else:
        out.write(text)
    return 0


def cmd_trace(args, out) -> int:
    db = _wordnet(args)
    lex = _seed(args)
    try:
        pos = normalize_pos(args.pos)
    except ValueError as exc:
        raise StageError("config", str(exc)) from None
    word = args.word.lower()
    lemmas = db.lemmatize(word, pos) or [word]
    res = None
    for lemma in lemmas:
        res = resolve_polarity(lemma, pos, lex, db, grow=False, similar=not args.no_similar)
        if res.hit:
            break
    if lemmas[0] != word:
        out.write(f"{word} -> {', '.join(lemmas)}\n")
    out.write(render_trace(res) + "\n")
    return 0


def cmd_lexicon(args, out) -> int:
    if args.action == "export":
        if args.corpus or args.corpus_path:
            _, lex, _, _, _, _ = _classify(args)
        else:
            lex = _seed(args)
    else:
        cfg = _config(args)
        db = _wordnet(args)
        lex = _seed(args)
        pos_set = []
        for prefix in cfg.candidate_tags:
            p = wordnet_pos(prefix)
            if p and p not in pos_set:
                pos_set.append(p)
        vocab = set()
        for p in pos_set:
            vocab.update(db.vocabulary(p))
        try:
            lex = expand_closure(lex, db, vocab, args.depth, pos=pos_set, similar=cfg.similar)
        except ValueError as exc:
            raise StageError("lexicon", str(exc)) from None
    try:
        save_lexicon(lex, args.out)
    except LexiconError as exc:
        raise StageError("output", str(exc)) from None
    print(f"{len(lex)} entries written to {args.out}", file=out)
    return 0


def cmd_chart(args, out) -> int:
    systems = []
    try:
        if args.report_json:
            try:
                obj = json.loads(Path(args.report_json).read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise StageError("chart", f"cannot read {args.report_json}: {exc}") from None
            obj = obj.get("report", obj)
            systems.append(System(args.name, (obj["accuracy"], obj["macro_precision"],
                                              obj["macro_recall"])))
        systems = ([System.parse(s) for s in args.baseline] + systems
                   + [System.parse(s, source=None) for s in args.system])
        render_chart(systems, args.out, title=args.title)
    except (EvaluationError, KeyError) as exc:
        raise StageError("chart", str(exc)) from None
    print(f"chart written to {args.out}", file=out)
    return 0


COMMANDS = {"classify": cmd_classify, "evaluate": cmd_evaluate, "trace": cmd_trace,
            "lexicon": cmd_lexicon, "chart": cmd_chart}


def main(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except StageError as exc:
        print(f"docsent: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
