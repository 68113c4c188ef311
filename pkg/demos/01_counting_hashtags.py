"""
Counting supportive hashtags in a tweet corpus
==============================================

Walks through the ingest path: the builtin lexicon, hashtag extraction
from raw tweet text, and folding a small NDJSON corpus into a per-day
count table.
"""

import json

from hashtag_mobility import (
    DateWindow,
    count_lines,
    default_lexicon,
    extract_hashtags,
    total_series,
)

# The tracked lexicon: 18 canonical tags, lowercase, no '#'.
lexicon = default_lexicon()
print(f"lexicon ({len(lexicon)} tags):")
print(" ", ", ".join(lexicon))

# Extraction is case-insensitive and token-based: '#' must start a token,
# so URL fragments like 'page#anchor' never count.
text = "Please #StayHome and #FlattenTheCurve! see x.com/page#anchor #stayHOME"
print("\ntext:    ", text)
print("extracted:", extract_hashtags(text))

# A tiny corpus: one JSON record per line. Malformed lines are skipped and
# tallied, never fatal.
corpus = [
    {"id": "1", "created_at": "2020-03-14T09:00:00Z", "text": "#StayHome all"},
    {"id": "2", "created_at": "2020-03-15T10:30:00Z", "text": "#StayHome #Lockdown"},
    {"id": "3", "created_at": "2020-03-15T23:59:59Z", "text": "#stayhome again"},
    {"id": "4", "created_at": "2020-06-02T08:00:00Z", "text": "#StayHome late"},
]
lines = [json.dumps(record) for record in corpus] + ["{oops — not json"]

window = DateWindow.parse("2020-01-01:2020-05-26")
table, stats = count_lines(lines, lexicon, window)

print(f"\nread {stats.lines_read} lines -> {stats.records_ok} counted, "
      f"{stats.records_skipped} skipped")
for line_no, reason in stats.first_skip_reasons:
    print(f"  line {line_no}: {reason}")

print("\nper-day counts (zero days omitted from storage):")
for day, per_tag in sorted(table.counts.items()):
    print(f"  {day}: {per_tag}")

# The total series zero-fills every day of the window.
total = total_series(table)
nonzero = {d: v for d, v in total.points.items() if v}
print(f"\ntotal series: {len(total)} days, nonzero on {nonzero}")
