"""Document-level opinion mining with a WordNet-grown seed lexicon."""

__version__ = "0.1.0"
