"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "EmptyCorpusError",
    "EmptyGoldSetError",
    "FormatError",
    "GoldTermMissingError",
    "TermTooShortError",
]


class FormatError(ValueError):
    """A persisted file (vocabulary, gold set, model config) is malformed."""


class EmptyCorpusError(ValueError):
    """No token survived tokenization of the corpus."""


class TermTooShortError(ValueError):
    """A term shorter than 2 characters was given where the rules need more."""


class EmptyGoldSetError(ValueError):
    """The gold set contains no pairs."""


class GoldTermMissingError(ValueError):
    """One or more gold terms are absent from the vocabulary."""

    def __init__(self, terms) -> None:
        self.terms = tuple(terms)
        super().__init__(
            "gold terms missing from vocabulary: " + ", ".join(self.terms)
        )
