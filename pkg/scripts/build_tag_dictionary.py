#!/usr/bin/env python3
"""Regenerate src/docsent/data/tagdict.tsv from Brill's tagger lexicon.

The lexicon is taken from the ``brill`` npm package (MIT), which ships the
word list of Eric Brill's transformation-based tagger as JavaScript.  Each
word lists its admissible Penn tags, most likely first, with no counts.  We
emit rank weights instead (k for the first of k tags, down to 1) so the
tab-separated ``word, tag, count`` format keeps the source ordering.

Entries from ``tagdict_supplement.tsv`` replace the Brill entry for the
same word.  The npm tag table has no CD, so number words are missing from
the source and come from the supplement.

    python scripts/build_tag_dictionary.py [--tarball brill-3.1.0.tgz]
"""

import argparse
import ast
import io
import re
import sys
import tarfile
import urllib.request
from pathlib import Path

BRILL_URL = "https://registry.npmjs.org/brill/-/brill-3.1.0.tgz"
ROOT = Path(__file__).resolve().parents[1]
DATA = ROOT / "src" / "docsent" / "data"

sys.path.insert(0, str(ROOT / "src"))
from docsent.tagger import PENN_TAGS  # noqa: E402

ENTRY = re.compile(r"^\s*('(?:[^'\\]|\\.)*'|\"(?:[^\"\\]|\\.)*\"|[^\s:]+):\s*(.+?),?$")


def read_member(tar, name):
    return tar.extractfile(tar.getmember(name)).read().decode("utf-8")


def parse_brill(tarball_bytes):
    with tarfile.open(fileobj=io.BytesIO(tarball_bytes), mode="r:gz") as tar:
        tags_js = read_member(tar, "package/lib/tags.js")
        words_js = read_member(tar, "package/lib/words.js")
    tags = ast.literal_eval(tags_js[tags_js.index("["):tags_js.rindex("]") + 1])
    words = {}
    body = words_js[words_js.index("{") + 1:words_js.rindex("}")]
    for line in body.splitlines():
        m = ENTRY.match(line)
        if not m:
            continue
        key, value = m.groups()
        key = ast.literal_eval(key) if key[0] in "'\"" else key
        value = ast.literal_eval(value)
        ids = value if isinstance(value, list) else [value]
        # the package has at least one dangling id ("your"); JS yields undefined
        words[key] = [tags[i] for i in ids if 0 <= i < len(tags)]
    return words


def build(words, supplement):
    merged = {}
    # lowercase spellings win over capitalized variants of the same word
    for key in sorted(words, key=lambda k: (k != k.lower(), k)):
        if not any(c.isalnum() for c in key) or any(c.isspace() for c in key):
            continue
        low = key.lower()
        if low in merged:
            continue
        kept = []
        for tag in words[key]:
            if tag in PENN_TAGS and tag not in kept:
                kept.append(tag)
        if key != low:
            # only a capitalized spelling exists ("First"): its proper-noun
            # readings come from titles and sentence starts
            common = [t for t in kept if t not in ("NNP", "NNPS")]
            kept = common or kept
        if kept:
            merged[low] = [(t, len(kept) - i) for i, t in enumerate(kept)]
    merged.update(supplement)
    return merged


def read_supplement(path):
    out = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        word, tag, count = line.split("\t")
        out.setdefault(word, []).append((tag, int(count)))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tarball", help="local copy of the brill npm tarball")
    ap.add_argument("--out", default=str(DATA / "tagdict.tsv"))
    args = ap.parse_args()
    if args.tarball:
        raw = Path(args.tarball).read_bytes()
    else:
        with urllib.request.urlopen(BRILL_URL, timeout=120) as resp:
            raw = resp.read()
    words = parse_brill(raw)
    merged = build(words, read_supplement(DATA / "tagdict_supplement.tsv"))
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# generated by scripts/build_tag_dictionary.py; see data/README.md\n")
        for word in sorted(merged):
            for tag, count in merged[word]:
                fh.write(f"{word}\t{tag}\t{count}\n")
    print(f"{len(words)} source words -> {len(merged)} entries in {args.out}")


if __name__ == "__main__":
    main()
