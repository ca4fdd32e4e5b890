"""Review corpus loading, cleaning and tokenization."""

from __future__ import annotations

import html
import json
import logging
import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from .polarity import DocPolarity

logger = logging.getLogger(__name__)

FORMATS = ("dir_of_txt", "jsonl", "tsv_labeled")
FORMAT_ALIASES = {"dir": "dir_of_txt", "txt": "dir_of_txt", "tsv": "tsv_labeled"}


class CorpusError(Exception):
    """Unreadable corpus path, malformed record or duplicate id."""


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str
    gold_label: DocPolarity | None = None


@dataclass(frozen=True)
class Token:
    surface: str
    lower: str
    tag: str
    sentence_index: int
    token_index: int


@dataclass
class Document:
    id: str
    tokens: list[Token] = field(default_factory=list)
    gold_label: DocPolarity | None = None

    def sentences(self) -> list[list[Token]]:
        out: list[list[Token]] = []
        for tok in self.tokens:
            if not out or out[-1][0].sentence_index != tok.sentence_index:
                out.append([])
            out[-1].append(tok)
        return out


# --------------------------------------------------------------------------
# loading

def _label(value, where: str) -> DocPolarity | None:
    if value is None or value == "":
        return None
    try:
        return DocPolarity.parse(str(value))
    except ValueError as exc:
        raise CorpusError(f"{where}: {exc}") from None


def _bad_line(msg: str, strict: bool) -> None:
    if strict:
        raise CorpusError(msg)
    logger.warning("skipping %s", msg)


def load_corpus(path, format: str = "dir_of_txt", strict: bool = False,
                suffix: str = ".txt") -> list[RawDocument]:
    """Read review documents from ``path``.

    ``dir_of_txt`` takes every ``*.txt`` file (``suffix`` overrides, e.g.
    ``.tagged``) with the file stem as id; ``jsonl`` expects objects with
    ``id``, ``text`` and an optional ``label``; ``tsv_labeled`` accepts
    ``id<TAB>label<TAB>text`` or ``id<TAB>text`` rows.  Malformed lines are
    skipped with a warning unless ``strict``.  Documents are returned sorted
    by id.
    """
    fmt = FORMAT_ALIASES.get(format, format)
    if fmt not in FORMATS:
        raise CorpusError(f"unknown corpus format: {format}")
    root = Path(path)
    if not root.exists():
        raise CorpusError(f"corpus path not found: {root}")

    docs: list[RawDocument] = []
    try:
        if fmt == "dir_of_txt":
            if not root.is_dir():
                raise CorpusError(f"not a directory: {root}")
            for f in root.iterdir():
                if f.is_file() and f.name.endswith(suffix):
                    docs.append(RawDocument(f.name[: -len(suffix)],
                                            f.read_text(encoding="utf-8")))
        else:
            with open(root, encoding="utf-8") as fh:
                lines = fh.read().splitlines()
            reader = _jsonl_record if fmt == "jsonl" else _tsv_record
            for lineno, line in enumerate(lines, 1):
                if not line.strip():
                    continue
                where = f"{root}:{lineno}"
                try:
                    docs.append(reader(line, where))
                except CorpusError as exc:
                    _bad_line(str(exc), strict)
    except OSError as exc:
        raise CorpusError(f"cannot read {root}: {exc}") from None

    seen: set[str] = set()
    for doc in docs:
        if doc.id in seen:
            raise CorpusError(f"duplicate document id: {doc.id}")
        seen.add(doc.id)
    return sorted(docs, key=lambda d: d.id)


def _jsonl_record(line: str, where: str) -> RawDocument:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{where}: invalid JSON ({exc.msg})") from None
    if not isinstance(obj, dict):
        raise CorpusError(f"{where}: expected an object")
    doc_id, text = obj.get("id"), obj.get("text")
    if not isinstance(doc_id, str) or not doc_id:
        raise CorpusError(f"{where}: missing string field 'id'")
    if not isinstance(text, str):
        raise CorpusError(f"{where}: missing string field 'text'")
    return RawDocument(doc_id, text, _label(obj.get("label"), where))


def _tsv_record(line: str, where: str) -> RawDocument:
    cols = line.split("\t")
    if len(cols) == 3:
        doc_id, label, text = cols
    elif len(cols) == 2:
        (doc_id, text), label = cols, None
    else:
        raise CorpusError(f"{where}: expected 2 or 3 tab-separated columns, got {len(cols)}")
    if not doc_id:
        raise CorpusError(f"{where}: empty id")
    return RawDocument(doc_id, text, _label(label, where))


def load_gold(path) -> dict[str, DocPolarity]:
    """Gold labels from an ``id<TAB>label`` file."""
    gold: dict[str, DocPolarity] = {}
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise CorpusError(f"cannot read gold labels {path}: {exc}") from None
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise CorpusError(f"{path}:{lineno}: expected id<TAB>label")
        if cols[0] in gold:
            raise CorpusError(f"{path}:{lineno}: duplicate id {cols[0]}")
        gold[cols[0]] = _label(cols[1], f"{path}:{lineno}")
    return gold


# --------------------------------------------------------------------------
# cleaning

_SCRIPT = re.compile(r"<(script|style)\b.*?</\1\s*>", re.IGNORECASE | re.DOTALL)
_COMMENT = re.compile(r"<!--.*?-->", re.DOTALL)
_TAG = re.compile(r"</?[A-Za-z!?][^<>]*>")
_CONTROL = re.compile(r"[\x00-\x08\x0b-\x1f\x7f]")


def _clean_once(text: str) -> str:
    text = unicodedata.normalize("NFKC", text)
    text = _SCRIPT.sub(" ", text)
    text = _COMMENT.sub(" ", text)
    text = _TAG.sub(" ", text)
    text = html.unescape(text)
    text = _CONTROL.sub(" ", text)
    return " ".join(text.split())


def preprocess(text: str) -> str:
    """Strip markup, decode entities and normalize whitespace and Unicode.

    Decoding can expose new markup (``&lt;b&gt;``), so cleaning repeats
    until the text stops changing; that makes the function idempotent.
    """
    for _ in range(16):
        cleaned = _clean_once(text)
        if cleaned == text:
            break
        text = cleaned
    return text


# --------------------------------------------------------------------------
# tokenization

_TOKEN = re.compile(
    r"""
      [^\W_]+(?=n't\b)                     # stem of a negated contraction: do|n't
    | n't\b
    | '(?:s|m|d|ll|re|ve)\b                # clitics split off the host word
    | \d+(?:[.,:/]\d+)+                    # 3.5, 1,000, 1/2
    | [^\W_]+(?:-[^\W_]+|'(?!(?:s|m|d|ll|re|ve)\b)[^\W_]+)*   # words, compounds
    | \.\.\.
    | [^\w\s]|_
    """,
    re.VERBOSE | re.IGNORECASE,
)
SENTENCE_END = frozenset(".!?")


def tokenize(text: str) -> list[tuple[str, int]]:
    """Split text into ``(surface, sentence_index)`` pairs.

    A sentence ends at a run of ``.``, ``!`` or ``?`` that is followed by
    whitespace and a capitalized token, or by the end of the text.
    """
    matches = list(_TOKEN.finditer(text))
    out: list[tuple[str, int]] = []
    sentence = 0
    for i, m in enumerate(matches):
        surface = m.group()
        out.append((surface, sentence))
        if surface[-1] not in SENTENCE_END or surface == "...":
            continue
        if i + 1 == len(matches):
            continue
        nxt = matches[i + 1]
        if nxt.group()[-1] in SENTENCE_END:
            continue
        gap = text[m.end():nxt.start()]
        if gap and gap.isspace() and nxt.group()[0].isupper():
            sentence += 1
    return out
