"""Seed lexicon of opinion words and WordNet-backed polarity resolution.

A word missing from the seed list is looked up through its WordNet
synonyms first and its antonyms second.  When ``grow`` is set, a resolved
word joins the lexicon with a provenance pointing at the seed entry that
decided it, so the list keeps growing as documents are processed.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .polarity import WordPolarity
from .wordnet import Relation, WordNetDb, normalize_pos

logger = logging.getLogger(__name__)


class LexiconError(ValueError):
    """Malformed, empty or self-contradictory lexicon file."""


@dataclass(frozen=True)
class Provenance:
    kind: str  # "initial", "synonym" or "antonym"
    source: str | None = None

    def __str__(self) -> str:
        return "initial" if self.kind == "initial" else f"{self.kind}:{self.source}"

    @classmethod
    def parse(cls, text: str) -> Provenance:
        kind, _, source = text.partition(":")
        if kind == "initial" and not source:
            return INITIAL
        if kind in ("synonym", "antonym") and source:
            return cls(kind, source)
        raise ValueError(f"bad provenance {text!r}")


INITIAL = Provenance("initial")


@dataclass(frozen=True)
class Entry:
    polarity: WordPolarity
    provenance: Provenance
    order: int
    annotation: str = ""


class SeedLexicon:
    """Mapping lemma -> :class:`Entry`; only ever grows.

    ``version`` increases with every insertion so resolution caches can
    tell when they are stale.
    """

    def __init__(self, entries: dict[str, Entry] | None = None, counter: int = 0):
        self.entries: dict[str, Entry] = dict(entries or {})
        self.counter = counter
        self._cache: dict = {}
        self._cache_version = -1

    def __len__(self):
        return len(self.entries)

    def __contains__(self, lemma):
        return lemma in self.entries

    def __iter__(self):
        return iter(self.entries)

    def get(self, lemma: str) -> Entry | None:
        return self.entries.get(lemma)

    def polarity(self, lemma: str) -> WordPolarity | None:
        e = self.entries.get(lemma)
        return e.polarity if e else None

    @property
    def version(self) -> int:
        return self.counter

    def add(self, lemma: str, polarity: WordPolarity, provenance: Provenance = INITIAL,
            annotation: str = "") -> Entry:
        existing = self.entries.get(lemma)
        if existing is not None:
            if existing.polarity is not polarity:
                raise LexiconError(f"{lemma!r} already {existing.polarity.value}, "
                                   f"refusing {polarity.value}")
            return existing
        if provenance.kind != "initial":
            src = self.entries.get(provenance.source)
            if src is None:
                raise LexiconError(f"provenance source {provenance.source!r} not in lexicon")
            expected = src.polarity.flip() if provenance.kind == "antonym" else src.polarity
            if expected is not polarity:
                raise LexiconError(f"{lemma!r}: {provenance} implies {expected.value}")
        self.counter += 1
        entry = Entry(polarity, provenance, self.counter, annotation)
        self.entries[lemma] = entry
        return entry

    def copy(self) -> SeedLexicon:
        return SeedLexicon(self.entries, self.counter)

    def chain(self, lemma: str) -> list[str]:
        """Provenance chain from ``lemma`` back to its initial entry."""
        out = [lemma]
        seen = {lemma}
        entry = self.entries[lemma]
        while entry.provenance.kind != "initial":
            src = entry.provenance.source
            if src in seen:
                raise LexiconError(f"provenance cycle through {src!r}")
            seen.add(src)
            out.append(src)
            entry = self.entries[src]
        return out

    def cache(self) -> dict:
        if self._cache_version != self.counter:
            self._cache = {}
            self._cache_version = self.counter
        return self._cache


# --------------------------------------------------------------------------
# files

def _parse_polarity(text: str, where: str) -> WordPolarity:
    try:
        return WordPolarity(text.strip().lower())
    except ValueError:
        raise LexiconError(f"{where}: polarity must be positive or negative, got {text!r}") from None


def load_seed(path) -> SeedLexicon:
    """Read ``lemma<TAB>polarity[<TAB>provenance]`` lines.

    Every entry loads as initial; a third column (as written by
    :func:`save_lexicon`) is kept only as an annotation.
    """
    lex = SeedLexicon()
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon {path}: {exc}") from None
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        where = f"{path}:{lineno}"
        if len(cols) not in (2, 3) or not cols[0].strip():
            raise LexiconError(f"{where}: expected lemma<TAB>polarity")
        lemma = cols[0].strip().lower().replace(" ", "_")
        polarity = _parse_polarity(cols[1], where)
        try:
            lex.add(lemma, polarity, INITIAL, cols[2].strip() if len(cols) == 3 else "")
        except LexiconError:
            raise LexiconError(f"{where}: conflicting polarity for {lemma!r}") from None
    if not len(lex):
        raise LexiconError(f"{path}: lexicon is empty")
    return lex


def default_seed_path() -> Path:
    return Path(str(resources.files("docsent") / "data" / "seed.tsv"))


def default_seed() -> SeedLexicon:
    return load_seed(default_seed_path())


def save_lexicon(lex: SeedLexicon, path) -> None:
    """Write ``lemma<TAB>polarity<TAB>provenance`` sorted by lemma."""
    lines = ["# lemma\tpolarity\tprovenance"]
    for lemma in sorted(lex.entries):
        e = lex.entries[lemma]
        lines.append(f"{lemma}\t{e.polarity.value}\t{e.provenance}")
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise LexiconError(f"cannot write lexicon {path}: {exc}") from None


# --------------------------------------------------------------------------
# resolution

@dataclass(frozen=True)
class TraceStep:
    step: str  # "direct", "synonym" or "antonym"
    candidates: tuple[str, ...] = ()
    matched: tuple[str, ...] = ()
    decided_by: str | None = None
    note: str = ""


@dataclass
class Resolution:
    lemma: str
    pos: str
    polarity: WordPolarity | None = None
    provenance: Provenance | None = None
    trace: list[TraceStep] = field(default_factory=list)

    @property
    def hit(self) -> bool:
        return self.polarity is not None


def _decide(matched: list[str], lex: SeedLexicon) -> tuple[WordPolarity, str, str]:
    """Majority polarity over matched seed words, and the entry that decided it."""
    votes = Counter(lex.entries[m].polarity for m in matched)
    pos_n, neg_n = votes[WordPolarity.POSITIVE], votes[WordPolarity.NEGATIVE]
    if pos_n != neg_n:
        winner = WordPolarity.POSITIVE if pos_n > neg_n else WordPolarity.NEGATIVE
        decider = min(m for m in matched if lex.entries[m].polarity is winner)
    else:
        decider = min(matched)
        winner = lex.entries[decider].polarity
    note = ""
    if pos_n and neg_n:
        note = f"conflict: {pos_n} positive vs {neg_n} negative"
    return winner, decider, note


def resolve_polarity(lemma: str, pos: str, lex: SeedLexicon, db: WordNetDb,
                     grow: bool = True, similar: bool = True) -> Resolution:
    """Look ``lemma`` up directly, then via synonyms, then via antonyms."""
    pos = normalize_pos(pos)
    lemma = lemma.lower()
    cache = lex.cache()
    key = (lemma, pos, similar, id(db))
    cached = cache.get(key)
    if cached is not None and (not grow or not cached.hit or cached.trace[-1].step == "direct"):
        return cached

    res = Resolution(lemma, pos)
    entry = lex.get(lemma)
    if entry is not None:
        res.polarity, res.provenance = entry.polarity, entry.provenance
        res.trace.append(TraceStep("direct", matched=(lemma,), decided_by=lemma))
        cache[key] = res
        return res
    res.trace.append(TraceStep("direct"))

    for rel in (Relation.SYNONYM, Relation.ANTONYM):
        step = rel.value
        related = db.related_lemmas(lemma, pos, rel, similar=similar)
        matched = sorted(r for r in related if r in lex.entries)
        if not matched:
            res.trace.append(TraceStep(step, tuple(sorted(related))))
            continue
        polarity, decider, note = _decide(matched, lex)
        if rel is Relation.ANTONYM:
            polarity = polarity.flip()
        res.polarity = polarity
        res.provenance = Provenance(step, decider)
        res.trace.append(TraceStep(step, tuple(sorted(related)), tuple(matched), decider, note))
        if grow:
            lex.add(lemma, polarity, res.provenance)
        else:
            cache[key] = res
        return res

    cache[key] = res
    return res


def render_trace(res: Resolution) -> str:
    """Indented, one line per lookup step."""
    lines = [f"{res.lemma} ({res.pos})"]
    for st in res.trace:
        if st.step == "direct":
            lines.append("  direct: " + ("hit" if st.matched else "not in seed list"))
            continue
        lines.append(f"  {st.step}s: {len(st.candidates)} found")
        if st.candidates:
            lines.append("    " + ", ".join(st.candidates))
        lines.append("    matched: " + (", ".join(st.matched) if st.matched else "none"))
        if st.decided_by:
            lines.append(f"    decided by: {st.decided_by}")
        if st.note:
            lines.append(f"    {st.note}")
    if res.hit:
        lines.append(f"  result: {res.polarity.value} ({res.provenance})")
    else:
        lines.append("  result: unknown")
    return "\n".join(lines)


def expand_closure(lex: SeedLexicon, db: WordNetDb, vocabulary: Iterable[str], depth: int,
                   pos: Iterable[str] = ("a",), similar: bool = True) -> SeedLexicon:
    """Grow a copy of ``lex`` over ``vocabulary`` for up to ``depth`` rounds.

    Each round resolves every still-unknown word against the lexicon as it
    stood after the previous round, then inserts all new words at once in
    lexicographic order.  Words are tried under each part of speech in
    ``pos`` and the first hit wins.  Stops early at a fixed point.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    pos_order = [normalize_pos(p) for p in pos]
    out = lex.copy()
    pending = sorted({w.lower() for w in vocabulary} - set(out.entries))
    for round_no in range(depth):
        snapshot = out.copy()
        found = []
        for word in pending:
            for p in pos_order:
                res = resolve_polarity(word, p, snapshot, db, grow=False, similar=similar)
                if res.hit:
                    found.append((word, res))
                    break
        if not found:
            break
        for word, res in found:
            out.add(word, res.polarity, res.provenance)
        done = {w for w, _ in found}
        pending = [w for w in pending if w not in done]
        logger.debug("closure round %d: +%d words", round_no + 1, len(found))
    return out
