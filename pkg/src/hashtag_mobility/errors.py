"""Exception hierarchy shared across the package.

Every data-level failure raises a subclass of :class:`HashtagMobilityError`,
so callers (notably the CLI) can distinguish bad input from programming
errors. Each exception carries a short machine-readable ``code`` used in
report files where an error has to live inside a cell.
"""

from __future__ import annotations


class HashtagMobilityError(Exception):
    """Base class for all data errors raised by this package."""

    code = "error"


class InvalidTag(HashtagMobilityError):
    """A hashtag failed canonical normalization."""

    code = "invalid_tag"


class DuplicateTag(HashtagMobilityError):
    """Two lexicon entries collapsed to the same canonical tag."""

    code = "duplicate_tag"


class EmptyLexicon(HashtagMobilityError):
    """A lexicon source yielded no tags."""

    code = "empty_lexicon"


class UnknownTag(HashtagMobilityError):
    """A tag was requested that the governing lexicon does not contain."""

    code = "unknown_tag"


class LexiconMismatch(HashtagMobilityError):
    """Two count tables governed by different lexicons were combined."""

    code = "lexicon_mismatch"


class RangeMismatch(HashtagMobilityError):
    """Two count tables with different date ranges were combined."""

    code = "range_mismatch"


class MissingColumn(HashtagMobilityError):
    """A required CSV column is absent from the header."""

    code = "missing_column"

    def __init__(self, name: str):
        super().__init__(f"missing required column: {name}")
        self.name = name


class DuplicateDate(HashtagMobilityError):
    """The same date appeared twice within one filtered region."""

    code = "duplicate_date"


class BadDate(HashtagMobilityError):
    """A date cell could not be parsed as YYYY-MM-DD."""

    code = "bad_date"


class BadNumber(HashtagMobilityError):
    """A numeric cell could not be parsed as a finite number."""

    code = "bad_number"


class NoRowsMatched(HashtagMobilityError):
    """The region filter matched no rows of the mobility CSV."""

    code = "no_rows_matched"


class TooFewPoints(HashtagMobilityError):
    """Fewer than three paired observations; the t statistic is undefined."""

    code = "too_few_points"


class ZeroVariance(HashtagMobilityError):
    """One side of a correlation pair is constant."""

    def __init__(self, which: str):
        super().__init__(f"zero variance in {which}")
        self.which = which
        self.code = f"zero_variance({which})"


class NoConvergence(HashtagMobilityError):
    """The incomplete-beta continued fraction failed to converge."""

    code = "no_convergence"
