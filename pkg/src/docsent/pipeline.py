"""Raw text to tagged documents."""

from __future__ import annotations

from .corpus import Document, RawDocument, preprocess, tokenize
from .tagger import TagLexicon, default_tag_lexicon, parse_pretagged, tag

TAGGERS = ("builtin", "pretagged")


def analyze(raw: RawDocument, tagger: str = "builtin", lex: TagLexicon | None = None) -> Document:
    """Clean, tokenize and tag one document.

    With ``tagger="pretagged"`` the text is read as ``word/TAG`` items and
    no cleaning is applied.
    """
    if tagger == "pretagged":
        tokens = parse_pretagged(raw.text)
    elif tagger == "builtin":
        tokens = tag(tokenize(preprocess(raw.text)), lex or default_tag_lexicon())
    else:
        raise ValueError(f"unknown tagger {tagger!r}")
    return Document(raw.id, tokens, raw.gold_label)


def analyze_text(text: str, doc_id: str = "doc", tagger: str = "builtin") -> Document:
    return analyze(RawDocument(doc_id, text), tagger)
