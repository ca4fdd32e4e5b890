"""Polarity labels shared across the pipeline."""

from __future__ import annotations

import enum


class WordPolarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    def flip(self) -> WordPolarity:
        return WordPolarity.NEGATIVE if self is WordPolarity.POSITIVE else WordPolarity.POSITIVE

    @property
    def sign(self) -> str:
        return "+" if self is WordPolarity.POSITIVE else "-"


class DocPolarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @classmethod
    def parse(cls, label: str) -> DocPolarity:
        """Accept ``positive``/``pos``/``+`` style labels, case-insensitively."""
        key = label.strip().lower()
        aliases = {"pos": "positive", "+": "positive", "neg": "negative",
                   "-": "negative", "neu": "neutral", "0": "neutral"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValueError(f"unknown polarity label: {label!r}") from None


#: Row/column order used by confusion matrices and reports.
CLASS_ORDER = (DocPolarity.POSITIVE, DocPolarity.NEGATIVE, DocPolarity.NEUTRAL)
