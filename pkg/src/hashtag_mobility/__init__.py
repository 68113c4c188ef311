"""Hashtag-frequency social-distancing index and mobility correlation.

Builds daily occurrence counts of a fixed lexicon of supportive/encouraging
hashtags from a tweet corpus, aligns them with the Google Community Mobility
daily series, and evaluates the Pearson correlation (with exact Student-t
two-tailed significance) between the hashtag index and each place category.
"""

from .dates import DateWindow, parse_date, parse_rfc3339
from .errors import HashtagMobilityError
from .lexicon import (
    HashtagLexicon,
    default_lexicon,
    dump_lexicon,
    load_lexicon,
    load_lexicon_file,
    normalize_tag,
)
from .mobility import (
    MobilityCategory,
    MobilitySeries,
    category_series,
    parse_mobility_csv,
    write_mobility_csv,
)
from .series import (
    AlignedPair,
    DailySeries,
    align,
    per_tag_series,
    total_series,
    write_series_csv,
)
from .stats import (
    CorrelationResult,
    correlation_matrix,
    p_two_tailed,
    pearson_r,
    regularized_incomplete_beta,
)
from .synth import SplitMix64, SynthSpec, generate_synthetic, table_from_manifest
from .tweets import (
    DailyCountTable,
    IngestStats,
    SkippedLine,
    TweetRecord,
    count_lines,
    count_stream,
    extract_hashtags,
    merge_counts,
    parse_lines,
    parse_tweet_line,
)

__version__ = "0.1.0"

__all__ = [
    "AlignedPair",
    "CorrelationResult",
    "DailyCountTable",
    "DailySeries",
    "DateWindow",
    "HashtagLexicon",
    "HashtagMobilityError",
    "IngestStats",
    "MobilityCategory",
    "MobilitySeries",
    "SkippedLine",
    "SplitMix64",
    "SynthSpec",
    "TweetRecord",
    "align",
    "category_series",
    "correlation_matrix",
    "count_lines",
    "count_stream",
    "default_lexicon",
    "dump_lexicon",
    "extract_hashtags",
    "generate_synthetic",
    "load_lexicon",
    "load_lexicon_file",
    "merge_counts",
    "normalize_tag",
    "p_two_tailed",
    "parse_date",
    "parse_lines",
    "parse_mobility_csv",
    "parse_rfc3339",
    "parse_tweet_line",
    "pearson_r",
    "per_tag_series",
    "regularized_incomplete_beta",
    "table_from_manifest",
    "total_series",
    "write_mobility_csv",
    "write_series_csv",
    "__version__",
]
