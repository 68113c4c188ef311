"""
End-to-end pipeline on synthetic data
=====================================

Generates a deterministic 147-day corpus plus a coupled mobility CSV,
counts the corpus, correlates the hashtag total against all six mobility
categories, and emits every report format into demos/output/.

The generator couples residential mobility positively to the daily hashtag
total and the other five categories negatively, so the expected result is
one positive row and five negative rows, all significant.
"""

from pathlib import Path

from hashtag_mobility import (
    DateWindow,
    count_lines,
    default_lexicon,
    parse_mobility_csv,
    total_series,
)
from hashtag_mobility.report import emit_matrix_report, emit_trend_report
from hashtag_mobility.stats import correlation_matrix
from hashtag_mobility.synth import SynthSpec, generate_synthetic

out_dir = Path(__file__).parent / "output"

# 1. Generate: same seed -> byte-identical files, any platform.
spec = SynthSpec(seed=42, days=147)
generated = generate_synthetic(spec, out_dir / "synthetic")
print(f"generated {generated.manifest['lines']} tweets -> {generated.corpus_path}")

# 2. Count the corpus against the builtin lexicon.
window = DateWindow.default()
with open(generated.corpus_path, encoding="utf-8") as fh:
    table, stats = count_lines(fh, default_lexicon(), window)
print(f"counted {stats.records_ok} tweets, {table.grand_total()} tag occurrences")

# 3. Parse the mobility report and correlate.
with open(generated.mobility_path, encoding="utf-8") as fh:
    mobility = parse_mobility_csv(fh)
results = correlation_matrix([total_series(table)], mobility, window)

print(f"\n{'category':<24} {'n':>4} {'r':>9} {'p':>12}")
for cell in results:
    marker = " *" if cell.significant() else ""
    print(f"{cell.y_label:<24} {cell.n:>4} {cell.r:>+9.4f} {cell.p:>12.3e}{marker}")
print("* p < 0.05")

# 4. Emit the reports: trend.csv/totals.csv/trend.svg and matrix.*.
written = emit_trend_report(table, out_dir / "reports", formats={"csv", "svg"})
written += emit_matrix_report(results, out_dir / "reports", formats={"csv", "json", "svg"})
print("\nreports:")
for path in written:
    print(f"  {path}")
