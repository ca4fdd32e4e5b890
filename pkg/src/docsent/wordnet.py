"""Reader for the Princeton WordNet 3.0 database files.

Only the parts needed for polarity propagation are kept in memory: the
lemma indexes, synset membership, pointers and the morphology exception
lists.  Glosses are retained on each synset but nothing consumes them.
"""

from __future__ import annotations

import enum
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

logger = logging.getLogger(__name__)

#: WordNet file suffix for each part of speech, keyed by the one-letter code.
POS_NAMES = {"n": "noun", "v": "verb", "a": "adj", "r": "adv"}

ANTONYM = "!"
SIMILAR_TO = "&"

# morphy detachment rules, in the order WordNet applies them
DETACHMENT_RULES = {
    "n": [("s", ""), ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"),
          ("shes", "sh"), ("men", "man"), ("ies", "y")],
    "v": [("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"),
          ("ed", ""), ("ing", "e"), ("ing", "")],
    "a": [("er", ""), ("est", ""), ("er", "e"), ("est", "e")],
    "r": [],
}


class WordNetError(Exception):
    """Raised when the database directory is missing or unparseable."""


class Relation(enum.Enum):
    SYNONYM = "synonym"
    ANTONYM = "antonym"


def normalize_pos(pos: str) -> str:
    """Map a pos name or code ('adj', 'a', 's', 'noun', ...) to n/v/a/r."""
    p = pos.lower()
    if p == "s":
        return "a"
    if p in POS_NAMES:
        return p
    for code, name in POS_NAMES.items():
        if p == name:
            return code
    raise ValueError(f"unknown part of speech: {pos!r}")


@dataclass(frozen=True)
class Pointer:
    symbol: str
    offset: int
    pos: str
    source: int  # 1-based word number in this synset, 0 = whole synset
    target: int


@dataclass(frozen=True)
class Synset:
    offset: int
    pos: str
    ss_type: str
    lemmas: tuple[str, ...]
    pointers: tuple[Pointer, ...]
    gloss: str = ""


def _strip_marker(word: str) -> str:
    # adjectives may carry a syntactic marker: able(p), galore(ip)
    if word.endswith(")"):
        cut = word.rfind("(")
        if cut > 0:
            return word[:cut]
    return word


def _parse_data_line(line: str, pos: str) -> Synset:
    body, _, gloss = line.partition(" | ")
    parts = body.split()
    offset = int(parts[0])
    ss_type = parts[2]
    w_cnt = int(parts[3], 16)
    i = 4
    lemmas = []
    for _ in range(w_cnt):
        lemmas.append(_strip_marker(parts[i]).lower())
        int(parts[i + 1], 16)  # lex_id, validated only
        i += 2
    p_cnt = int(parts[i])
    i += 1
    pointers = []
    for _ in range(p_cnt):
        symbol, target, tpos, st = parts[i:i + 4]
        if len(st) != 4:
            raise ValueError(f"bad source/target field {st!r}")
        pointers.append(Pointer(symbol, int(target), normalize_pos(tpos),
                                int(st[:2], 16), int(st[2:], 16)))
        i += 4
    if ss_type not in ("n", "v", "a", "s", "r"):
        raise ValueError(f"bad ss_type {ss_type!r}")
    return Synset(offset, pos, ss_type, tuple(lemmas), tuple(pointers), gloss.strip())


def _parse_index_line(line: str) -> tuple[str, list[int]]:
    parts = line.split()
    lemma = parts[0]
    synset_cnt = int(parts[2])
    p_cnt = int(parts[3])
    offsets = parts[4 + p_cnt + 2:]
    if len(offsets) != synset_cnt:
        raise ValueError(f"expected {synset_cnt} offsets, found {len(offsets)}")
    return lemma, [int(o) for o in offsets]


def _read_lines(path: Path):
    try:
        with open(path, encoding="utf-8", errors="surrogateescape") as fh:
            yield from enumerate(fh, 1)
    except FileNotFoundError:
        raise WordNetError(f"missing WordNet file: {path}") from None
    except OSError as exc:
        raise WordNetError(f"cannot read {path}: {exc}") from None


@dataclass
class WordNetDb:
    """In-memory view of a WordNet ``dict/`` directory.

    Treat instances as read-only once :func:`load_wordnet` returns them;
    the only mutable members are private lookup caches.
    """

    index: dict[str, dict[str, tuple[int, ...]]]
    synsets: dict[str, dict[int, Synset]]
    exceptions: dict[str, dict[str, tuple[str, ...]]]
    warnings: list[str] = field(default_factory=list)
    source: str = ""
    _lemma_cache: dict = field(default_factory=dict, repr=False, compare=False)
    _related_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def lookup(self, lemma: str, pos: str) -> tuple[int, ...]:
        """Synset offsets for ``lemma`` (spaces or underscores) under ``pos``."""
        return self.index[normalize_pos(pos)].get(lemma.lower().replace(" ", "_"), ())

    def synsets_for(self, lemma: str, pos: str) -> list[Synset]:
        pos = normalize_pos(pos)
        table = self.synsets[pos]
        return [table[o] for o in self.lookup(lemma, pos) if o in table]

    def vocabulary(self, pos: str) -> list[str]:
        return sorted(self.index[normalize_pos(pos)])

    def lemmatize(self, surface: str, pos: str) -> list[str]:
        """Morphy-style base forms of ``surface`` that exist in the index.

        Exception-list hits come first, then detachment-rule results in rule
        order, then the surface itself.
        """
        pos = normalize_pos(pos)
        key = (surface, pos)
        cached = self._lemma_cache.get(key)
        if cached is not None:
            return list(cached)
        form = surface.lower().replace(" ", "_")
        idx = self.index[pos]
        out: list[str] = []
        for lemma in self.exceptions[pos].get(form, ()):
            if lemma not in out:
                out.append(lemma)
        for suffix, repl in DETACHMENT_RULES[pos]:
            if form.endswith(suffix) and len(form) > len(suffix):
                base = form[: len(form) - len(suffix)] + repl
                if base in idx and base not in out:
                    out.append(base)
        if form in idx and form not in out:
            out.append(form)
        self._lemma_cache[key] = tuple(out)
        return out

    def related_lemmas(self, lemma: str, pos: str, rel: Relation,
                       similar: bool = True) -> set[str]:
        """Synonyms or antonyms of ``lemma`` across all of its senses.

        Synonyms are the other members of every synset holding the lemma;
        for adjectives with ``similar`` on, members of synsets one
        similar-to hop away are added.  Antonyms follow lexical '!' pointers.
        """
        pos = normalize_pos(pos)
        lemma = lemma.lower().replace(" ", "_")
        key = (lemma, pos, rel, similar)
        cached = self._related_cache.get(key)
        if cached is not None:
            return set(cached)
        out: set[str] = set()
        for ss in self.synsets_for(lemma, pos):
            if rel is Relation.SYNONYM:
                out.update(ss.lemmas)
                if similar and pos == "a":
                    for ptr in ss.pointers:
                        if ptr.symbol == SIMILAR_TO:
                            target = self.synsets[ptr.pos].get(ptr.offset)
                            if target is not None:
                                out.update(target.lemmas)
            else:
                word_nums = [i for i, w in enumerate(ss.lemmas, 1) if w == lemma]
                for ptr in ss.pointers:
                    if ptr.symbol != ANTONYM or ptr.source not in word_nums:
                        continue
                    target = self.synsets[ptr.pos].get(ptr.offset)
                    if target is not None and 0 < ptr.target <= len(target.lemmas):
                        out.add(target.lemmas[ptr.target - 1])
        out.discard(lemma)
        self._related_cache[key] = frozenset(out)
        return out


def _validate(db: WordNetDb) -> list[str]:
    warnings = []
    for pos, idx in db.index.items():
        table = db.synsets[pos]
        for lemma, offsets in idx.items():
            for off in offsets:
                ss = table.get(off)
                if ss is None:
                    warnings.append(f"index.{POS_NAMES[pos]}: {lemma} -> missing synset {off:08d}")
                elif lemma not in ss.lemmas:
                    warnings.append(f"index.{POS_NAMES[pos]}: {lemma} not a member of {off:08d}")
    for pos, table in db.synsets.items():
        for ss in table.values():
            for ptr in ss.pointers:
                target = db.synsets[ptr.pos].get(ptr.offset)
                if target is None:
                    warnings.append(f"data.{POS_NAMES[pos]}: {ss.offset:08d} {ptr.symbol} "
                                    f"-> missing {ptr.offset:08d} {ptr.pos}")
                    continue
                if ptr.symbol != ANTONYM or not ptr.source:
                    continue
                # lexical antonymy should be mirrored from the target word
                back = any(p.symbol == ANTONYM and p.offset == ss.offset and p.pos == pos
                           and p.source == ptr.target and p.target == ptr.source
                           for p in target.pointers)
                if not back:
                    warnings.append(f"data.{POS_NAMES[pos]}: antonym {ss.lemmas[ptr.source - 1]} "
                                    f"-> {target.lemmas[ptr.target - 1]} not reciprocated")
    return warnings


def load_wordnet(directory: str | os.PathLike, validate: bool = True) -> WordNetDb:
    """Parse index.*, data.* and *.exc files from a WordNet ``dict/`` directory.

    Raises :class:`WordNetError` naming the file and line for any missing
    file or malformed line.  Dangling offsets and unreciprocated antonyms
    are collected into ``db.warnings`` instead.
    """
    root = Path(directory)
    if not root.is_dir():
        raise WordNetError(f"WordNet directory not found: {root}")
    index: dict[str, dict[str, tuple[int, ...]]] = {}
    synsets: dict[str, dict[int, Synset]] = {}
    exceptions: dict[str, dict[str, tuple[str, ...]]] = {}
    for pos, name in POS_NAMES.items():
        idx: dict[str, tuple[int, ...]] = {}
        path = root / f"index.{name}"
        for lineno, line in _read_lines(path):
            if line.startswith("  ") or not line.strip():
                continue
            try:
                lemma, offsets = _parse_index_line(line)
            except (ValueError, IndexError) as exc:
                raise WordNetError(f"{path}:{lineno}: malformed index line ({exc})") from None
            idx[lemma] = tuple(offsets)
        index[pos] = idx

        table: dict[int, Synset] = {}
        path = root / f"data.{name}"
        for lineno, line in _read_lines(path):
            if line.startswith("  ") or not line.strip():
                continue
            try:
                ss = _parse_data_line(line, pos)
            except (ValueError, IndexError) as exc:
                raise WordNetError(f"{path}:{lineno}: malformed data line ({exc})") from None
            table[ss.offset] = ss
        synsets[pos] = table

        exc_map: dict[str, tuple[str, ...]] = {}
        path = root / f"{name}.exc"
        for lineno, line in _read_lines(path):
            parts = line.split()
            if not parts:
                continue
            if len(parts) < 2:
                raise WordNetError(f"{path}:{lineno}: malformed exception line")
            exc_map[parts[0]] = exc_map.get(parts[0], ()) + tuple(parts[1:])
        exceptions[pos] = exc_map

    db = WordNetDb(index, synsets, exceptions, source=str(root))
    if validate:
        db.warnings = _validate(db)
        if db.warnings:
            logger.info("WordNet validation: %d warnings", len(db.warnings))
    return db
