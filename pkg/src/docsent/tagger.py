"""Lightweight Penn Treebank tagger: unigram lexicon, suffix guesses, patch rules.

The bundled dictionary comes from Brill's tagger word list (see
``data/README.md``).  Known words take their most frequent tag, unknown
words are guessed from their shape and suffix, and a short list of
contextual rules fixes the ambiguities that matter for opinion-word
spotting.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .corpus import SENTENCE_END, Token

PENN_TAGS = frozenset("""
CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$ RB RBR RBS
RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB
. , : `` '' -LRB- -RRB- # $
""".split())

PUNCT_TAGS = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "-": ":", "--": ":", "...": ":",
    "(": "-LRB-", "[": "-LRB-", "{": "-LRB-",
    ")": "-RRB-", "]": "-RRB-", "}": "-RRB-",
    "`": "``", "``": "``", '"': "''", "''": "''", "'": "''",
    "#": "#", "$": "$",
}

# ordered; first match wins, so longer suffixes go first
DEFAULT_SUFFIX_RULES = (
    ("ness", "NN"), ("ment", "NN"), ("tion", "NN"), ("sion", "NN"), ("ity", "NN"),
    ("ship", "NN"), ("able", "JJ"), ("ible", "JJ"), ("less", "JJ"), ("ful", "JJ"),
    ("ous", "JJ"), ("ive", "JJ"), ("ish", "JJ"), ("ic", "JJ"), ("est", "JJS"),
    ("ing", "VBG"), ("ed", "VBN"), ("ly", "RB"), ("ss", "NN"), ("us", "NN"),
    ("s", "NNS"),
)

COPULAS = frozenset({"is", "are", "was", "were", "am", "be", "been", "being", "'s", "'re", "'m"})
DETERMINERS = frozenset({"DT", "PDT", "PRP$", "WDT", "POS"})
_NUMBER = re.compile(r"^[+-]?\d[\d.,:/]*$")


class TaggingError(ValueError):
    """Malformed tag dictionary or pre-tagged input."""


@dataclass(frozen=True)
class TagLexicon:
    """Word -> [(tag, relative frequency)] plus the unknown-word heuristics."""

    words: dict[str, tuple[tuple[str, float], ...]]
    suffix_rules: tuple[tuple[str, str], ...] = DEFAULT_SUFFIX_RULES
    default_tag: str = "NN"
    proper_tag: str = "NNP"
    best: dict[str, str] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "best", {w: tags[0][0] for w, tags in self.words.items()})

    def tags_for(self, word: str) -> tuple[str, ...]:
        return tuple(t for t, _ in self.words.get(word, ()))

    def has_reading(self, word: str, prefix: str) -> bool:
        return any(t.startswith(prefix) for t, _ in self.words.get(word, ()))

    def guess(self, surface: str, lower: str, sentence_initial: bool) -> str:
        if _NUMBER.match(surface):
            return "CD"
        if surface[:1].isupper() and not sentence_initial:
            return self.proper_tag
        for suffix, tag in self.suffix_rules:
            if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
                return tag
        return self.default_tag


def load_tag_dictionary(path) -> TagLexicon:
    """Read ``word<TAB>tag<TAB>count`` lines into a :class:`TagLexicon`.

    Counts are normalized per word; tags are ordered by descending count,
    ties broken by tag name.  Lines starting with ``#`` are comments.
    """
    counts: dict[str, dict[str, float]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise TaggingError(f"{path}:{lineno}: expected word<TAB>tag<TAB>count")
            word, tag, count = cols
            if tag not in PENN_TAGS:
                raise TaggingError(f"{path}:{lineno}: unknown Penn tag {tag!r}")
            try:
                n = float(count)
            except ValueError:
                raise TaggingError(f"{path}:{lineno}: non-numeric count {count!r}") from None
            if n <= 0:
                raise TaggingError(f"{path}:{lineno}: count must be positive")
            per_word = counts.setdefault(word.lower(), {})
            per_word[tag] = per_word.get(tag, 0.0) + n
    words = {}
    for word, per_word in counts.items():
        total = sum(per_word.values())
        ranked = sorted(per_word.items(), key=lambda kv: (-kv[1], kv[0]))
        words[word] = tuple((t, c / total) for t, c in ranked)
    return TagLexicon(words)


@lru_cache(maxsize=1)
def default_tag_lexicon() -> TagLexicon:
    """The bundled dictionary (Brill word list plus hand supplement)."""
    with resources.as_file(resources.files("docsent") / "data" / "tagdict.tsv") as p:
        return load_tag_dictionary(Path(p))


def _punct_tag(surface: str) -> str | None:
    if surface in PUNCT_TAGS:
        return PUNCT_TAGS[surface]
    if not any(c.isalnum() for c in surface):
        return "SYM"
    return None


def tag(tokens, lex: TagLexicon | None = None) -> list[Token]:
    """Tag ``(surface, sentence_index)`` pairs, returning :class:`Token` objects."""
    lex = lex or default_tag_lexicon()
    surfaces = [s for s, _ in tokens]
    sents = [i for _, i in tokens]
    lowers = [s.lower() for s in surfaces]
    tags: list[str] = []
    known: list[bool] = []
    for i, (surface, low) in enumerate(zip(surfaces, lowers)):
        p = _punct_tag(surface)
        if p is not None:
            tags.append(p)
            known.append(True)
            continue
        best = lex.best.get(low)
        if best is None:
            initial = i == 0 or sents[i - 1] != sents[i] or tags[i - 1] in ("``", "-LRB-", ":")
            tags.append(lex.guess(surface, low, initial))
            known.append(False)
        else:
            tags.append(best)
            known.append(True)

    _patch(lowers, tags, known, sents, lex)
    return [Token(s, low, t, si, i)
            for i, (s, low, t, si) in enumerate(zip(surfaces, lowers, tags, sents))]


def _reading(lex, word, known, prefix):
    return (not known) or lex.has_reading(word, prefix)


DO_FORMS = frozenset({"do", "does", "did"})


def _after_aux(lowers, tags, sents, i):
    j = i - 1
    while j > 0 and tags[j].startswith("RB") and sents[j - 1] == sents[i]:
        j -= 1
    return lowers[j] in DO_FORMS or tags[j] == "MD"


def _patch(lowers, tags, known, sents, lex):
    """Contextual fixes applied left to right over the initial tags."""
    for i in range(1, len(tags)):
        if sents[i] != sents[i - 1] or not tags[i][0].isalpha():
            continue
        word, prev_tag, cur = lowers[i], tags[i - 1], tags[i]
        # the acting, a hit: verb reading after a determiner becomes a noun
        if prev_tag in DETERMINERS and cur.startswith("VB") and _reading(lex, word, known[i], "NN"):
            tags[i] = "NNS" if cur == "VBZ" else "NN"
        # I like, they watch: base verb after a personal pronoun
        elif prev_tag == "PRP" and (cur == "VB" or not cur.startswith(("VB", "MD"))) \
                and lex.has_reading(word, "VBP"):
            tags[i] = "VBP"
        # to watch
        elif lowers[i - 1] == "to" and not cur.startswith("VB") and "VB" in lex.tags_for(word):
            tags[i] = "VB"
        # didn't like, will never watch: base verb after do-support or a modal
        elif not cur.startswith("VB") and "VB" in lex.tags_for(word) and _after_aux(lowers, tags, sents, i):
            tags[i] = "VB"
        elif cur.startswith(("NN", "VB", "IN")) and lex.has_reading(word, "JJ"):
            # is good, was not very good: adjective reading after a copula
            j = i - 1
            while j > 0 and tags[j].startswith("RB") and sents[j - 1] == sents[i]:
                j -= 1
            if lowers[j] in COPULAS:
                tags[i] = "JJ"


def render_pretagged(tokens) -> str:
    """Inverse of :func:`parse_pretagged` for tokens without spaces."""
    return " ".join(f"{t.surface}/{t.tag}" for t in tokens)


def parse_pretagged(line: str, sentence_offset: int = 0, index_offset: int = 0) -> list[Token]:
    """Parse ``word/TAG`` items separated by spaces.

    Each item splits at its last slash, so ``1/2/CD`` yields surface
    ``1/2``.  A sentence-final tag (``.``) starts a new sentence.
    """
    out: list[Token] = []
    sentence = sentence_offset
    for n, item in enumerate(line.split()):
        surface, slash, tg = item.rpartition("/")
        if not slash or not surface or not tg:
            raise TaggingError(f"item {n}: expected word/TAG, got {item!r}")
        out.append(Token(surface, surface.lower(), tg, sentence, index_offset + n))
        if tg == "." and surface[-1:] in SENTENCE_END:
            sentence += 1
    return out
