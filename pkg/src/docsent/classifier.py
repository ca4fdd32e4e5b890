"""Document-level polarity by majority vote over opinion words."""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Document
from .lexicon import SeedLexicon, resolve_polarity
from .polarity import DocPolarity, WordPolarity
from .wordnet import WordNetDb

DEFAULT_CANDIDATE_TAGS = ("JJ", "RB", "VB")
DEFAULT_NEGATION_CUES = ("not", "n't", "no", "never")
COPULAS = frozenset({"be", "is", "are", "was", "were", "been", "am"})

# Penn tag prefix -> WordNet part of speech
TAG_TO_POS = (("JJ", "a"), ("RB", "r"), ("VB", "v"), ("NN", "n"))


@dataclass(frozen=True)
class ClassifierConfig:
    candidate_tags: tuple[str, ...] = DEFAULT_CANDIDATE_TAGS
    negation_cues: frozenset[str] = frozenset(DEFAULT_NEGATION_CUES)
    negation_window: int = 3
    mode: str = "online"
    similar: bool = True

    def __post_init__(self):
        if self.negation_window < 1:
            raise ValueError("negation_window must be >= 1")
        if not self.candidate_tags:
            raise ValueError("candidate_tags must not be empty")
        if self.mode not in ("online", "frozen"):
            raise ValueError(f"mode must be online or frozen, not {self.mode!r}")
        object.__setattr__(self, "negation_cues",
                           frozenset(c.lower() for c in self.negation_cues))

    @classmethod
    def build(cls, include_nouns: bool = False, **kw) -> ClassifierConfig:
        tags = tuple(kw.pop("candidate_tags", DEFAULT_CANDIDATE_TAGS))
        if include_nouns and "NN" not in tags:
            tags += ("NN",)
        return cls(candidate_tags=tags, **kw)


@dataclass(frozen=True)
class OpinionHit:
    token_index: int
    lemma: str
    base_polarity: WordPolarity
    negated: bool

    @property
    def effective_polarity(self) -> WordPolarity:
        return self.base_polarity.flip() if self.negated else self.base_polarity

    def to_dict(self) -> dict:
        return {"token_index": self.token_index, "lemma": self.lemma,
                "base": self.base_polarity.value, "negated": self.negated,
                "effective": self.effective_polarity.value}


def vote(pos_count: int, neg_count: int) -> DocPolarity:
    if pos_count > neg_count:
        return DocPolarity.POSITIVE
    if neg_count > pos_count:
        return DocPolarity.NEGATIVE
    return DocPolarity.NEUTRAL


@dataclass(frozen=True)
class DocumentVerdict:
    doc_id: str
    hits: tuple[OpinionHit, ...] = ()

    @property
    def pos_count(self) -> int:
        return sum(h.effective_polarity is WordPolarity.POSITIVE for h in self.hits)

    @property
    def neg_count(self) -> int:
        return sum(h.effective_polarity is WordPolarity.NEGATIVE for h in self.hits)

    @property
    def polarity(self) -> DocPolarity:
        return vote(self.pos_count, self.neg_count)

    def to_dict(self) -> dict:
        return {"id": self.doc_id, "polarity": self.polarity.value,
                "pos_count": self.pos_count, "neg_count": self.neg_count,
                "hits": [h.to_dict() for h in self.hits]}


@dataclass(frozen=True)
class CorpusSummary:
    n_positive: int = 0
    n_negative: int = 0
    n_neutral: int = 0

    @property
    def total(self) -> int:
        return self.n_positive + self.n_negative + self.n_neutral

    def __str__(self) -> str:
        return (f"Positive: {self.n_positive} / Negative: {self.n_negative} / "
                f"Neutral: {self.n_neutral} / Total: {self.total}")

    @classmethod
    def of(cls, verdicts) -> CorpusSummary:
        counts = {p: 0 for p in DocPolarity}
        for v in verdicts:
            counts[v.polarity] += 1
        return cls(counts[DocPolarity.POSITIVE], counts[DocPolarity.NEGATIVE],
                   counts[DocPolarity.NEUTRAL])


def wordnet_pos(tag: str) -> str | None:
    for prefix, pos in TAG_TO_POS:
        if tag.startswith(prefix):
            return pos
    return None


def extract_opinion_candidates(doc: Document, cfg: ClassifierConfig) -> list[int]:
    """Token indices whose tag starts with a candidate prefix.

    Negation cues and forms of "be" are never candidates.
    """
    out = []
    for i, tok in enumerate(doc.tokens):
        if not tok.tag.startswith(cfg.candidate_tags):
            continue
        if tok.lower in cfg.negation_cues or tok.lower in COPULAS:
            continue
        out.append(i)
    return out


def detect_negation(doc: Document, index: int, cfg: ClassifierConfig) -> bool:
    """True if a cue occurs within the window before ``index`` in its sentence."""
    tokens = doc.tokens
    sentence = tokens[index].sentence_index
    for j in range(index - 1, max(-1, index - 1 - cfg.negation_window), -1):
        if tokens[j].sentence_index != sentence:
            break
        if tokens[j].lower in cfg.negation_cues:
            return True
    return False


def lemma_candidates(word: str, pos: str, db: WordNetDb) -> list[str]:
    """WordNet base forms of ``word``, then the word itself as a fallback."""
    out = db.lemmatize(word, pos)
    if word not in out:
        out.append(word)
    return out


def classify_document(doc: Document, lex: SeedLexicon, db: WordNetDb,
                      cfg: ClassifierConfig | None = None) -> DocumentVerdict:
    cfg = cfg or ClassifierConfig()
    grow = cfg.mode == "online"
    hits = []
    for i in extract_opinion_candidates(doc, cfg):
        tok = doc.tokens[i]
        pos = wordnet_pos(tok.tag)
        if pos is None:
            continue
        for lemma in lemma_candidates(tok.lower, pos, db):
            res = resolve_polarity(lemma, pos, lex, db, grow=grow, similar=cfg.similar)
            if res.hit:
                hits.append(OpinionHit(i, lemma, res.polarity, detect_negation(doc, i, cfg)))
                break
    return DocumentVerdict(doc.id, tuple(hits))


def classify_corpus(docs, lex: SeedLexicon, db: WordNetDb,
                    cfg: ClassifierConfig | None = None):
    """Classify documents in order; returns ``(verdicts, summary)``.

    Online mode lets the lexicon grow as it goes, so order matters there.
    """
    cfg = cfg or ClassifierConfig()
    verdicts = [classify_document(d, lex, db, cfg) for d in docs]
    return verdicts, CorpusSummary.of(verdicts)
