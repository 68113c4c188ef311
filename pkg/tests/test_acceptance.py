"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import random
import time
from contextlib import contextmanager
from datetime import date

import pytest

from hashtag_mobility import (
    DateWindow,
    count_lines,
    default_lexicon,
    merge_counts,
    p_two_tailed,
    parse_lines,
    parse_mobility_csv,
    pearson_r,
    table_from_manifest,
    total_series,
)
from hashtag_mobility.cli import run
from hashtag_mobility.errors import MissingColumn
from hashtag_mobility.report import emit_trend_report, write_counts_csv
from hashtag_mobility.series import AlignedPair
from hashtag_mobility.stats import correlation_matrix
from hashtag_mobility.synth import SynthSpec, generate_synthetic
from hashtag_mobility.tweets import count_stream

import numpy as np

from helpers import MOBILITY_COLUMNS, mobility_csv, national_row
from oracles import naive_recount, pearson_reference, table_cells
from pvalue_oracle import P_TWO_TAILED


@contextmanager
def criterion(number, name, budget_seconds=None):
    started = time.perf_counter()
    try:
        yield
    except Exception:
        print(f"ACCEPTANCE {number} {name}: FAIL")
        raise
    elapsed = time.perf_counter() - started
    limit = f", budget {budget_seconds:.0f}s" if budget_seconds else ""
    print(f"ACCEPTANCE {number} {name}: PASS ({elapsed:.2f}s{limit})")
    if budget_seconds is not None:
        assert elapsed < budget_seconds


@pytest.fixture(scope="module")
def full_run(tmp_path_factory):
    """One 147-day generation + count shared by the pipeline criteria."""
    out = tmp_path_factory.mktemp("full")
    spec = SynthSpec(seed=42, days=147)
    generated = generate_synthetic(spec, out)
    window = DateWindow.default()
    assert spec.window() == window
    with open(generated.corpus_path, encoding="utf-8") as fh:
        table, stats = count_lines(fh, default_lexicon(), window)
    return generated, table, stats, window


def test_criterion_1_lexicon_fidelity():
    with criterion(1, "lexicon fidelity", budget_seconds=1.0):
        lex = default_lexicon()
        assert len(lex) == 18
        assert lex.tags == (
            "staysafestayhome",
            "socialdistancing",
            "socialdistancingworks",
            "flattenthecurve",
            "stayhome",
            "stayathome",
            "stayhomesweethome",
            "stayhomesavelives",
            "healthyathome",
            "lockdown",
            "letsstayhome",
            "togetherathome",
            "lockdown2020",
            "quarantine",
            "quarantined",
            "quarantine2020",
            "quaranthriving",
            "quarantining",
        )


def test_criterion_2_pearson_oracle_equivalence():
    with criterion(2, "pearson oracle equivalence", budget_seconds=5.0):
        rng = random.Random(20200526)
        worst = 0.0
        for _ in range(1000):
            n = rng.randint(3, 100)
            x = [rng.uniform(-1e3, 1e3) for _ in range(n)]
            y = [rng.uniform(-1e3, 1e3) for _ in range(n)]
            pair = AlignedPair(
                x=np.array(x), y=np.array(y),
                dates=tuple(date(2020, 1, 1).fromordinal(737000 + i) for i in range(n)),
            )
            r = pearson_r(pair)
            deviation = abs(r - float(pearson_reference(x, y)))
            worst = max(worst, deviation)
        assert worst <= 1e-12


def test_criterion_3_p_value_correctness():
    import math

    with criterion(3, "p-value correctness", budget_seconds=5.0):
        # (a) df = 1 closed form
        closed_form = 1 - (2 / math.pi) * math.atan(math.sqrt(27))
        assert abs(p_two_tailed(math.sqrt(27 / 28), 3) - closed_form) <= 1e-10
        # (b) high-precision integration oracle
        for (r, n), expected in P_TWO_TAILED.items():
            assert abs(p_two_tailed(r, n) - expected) <= 1e-8
        # (c) monotone decreasing in |r| and in n
        rs = sorted({r for r, _ in P_TWO_TAILED})
        ns = sorted({n for _, n in P_TWO_TAILED})
        for n in ns:
            ps = [p_two_tailed(r, n) for r in rs]
            assert all(a > b for a, b in zip(ps, ps[1:]))
        for r in rs:
            ps = [p_two_tailed(r, n) for n in ns]
            assert all(a > b for a, b in zip(ps, ps[1:]))


def test_criterion_4_counting_oracle(tmp_path):
    with criterion(4, "counting oracle", budget_seconds=10.0):
        spec = SynthSpec(
            seed=11, days=60, peak_day=30, base_volume=60.0, peak_volume=300.0,
            envelope_width=10.0,
        )
        generated = generate_synthetic(spec, tmp_path)
        lines = generated.corpus_path.read_text(encoding="utf-8").splitlines()
        assert len(lines) >= 10_000

        window = spec.window()
        table, stats = count_lines(lines, default_lexicon(), window)
        assert stats.lines_read == len(lines)

        # generator's own manifest
        assert table == table_from_manifest(generated.manifest)
        # independent naive recount
        assert table_cells(table) == naive_recount(lines, default_lexicon(), window)

        # sharded ingestion == single pass
        for shards in (2, 7):
            size = (len(lines) + shards - 1) // shards
            merged = None
            for i in range(0, len(lines), size):
                part, _ = count_stream(
                    parse_lines(lines[i : i + size]), default_lexicon(), window
                )
                merged = part if merged is None else merge_counts(merged, part)
            assert merged == table


def test_criterion_5_sign_structure(full_run):
    with criterion(5, "correlation sign structure", budget_seconds=10.0):
        generated, table, _, window = full_run
        with open(generated.mobility_path, encoding="utf-8") as fh:
            mobility = parse_mobility_csv(fh)
        results = correlation_matrix([total_series(table)], mobility, window)
        assert len(results) == 6
        by_category = {res.y_label: res for res in results}
        residential = by_category.pop("residential")
        assert residential.r > 0
        assert residential.p < 0.05
        assert residential.n == 102  # 2020-02-15 .. 2020-05-26
        for name, res in by_category.items():
            assert res.r < 0, name
            assert res.p < 0.05, name


def test_criterion_6_trend_shape(full_run, tmp_path):
    with criterion(6, "trend shape", budget_seconds=5.0):
        _, table, _, _ = full_run
        total = total_series(table)
        days = total.dates()
        values = list(total.values())

        # argmax of 7-day sums lies in March
        sums = [sum(values[i : i + 7]) for i in range(len(values) - 6)]
        peak_start = days[sums.index(max(sums))]
        peak_center = days[sums.index(max(sums)) + 3]
        assert peak_start.month == 3 and peak_center.month == 3

        # monthly totals strictly decrease through April and May
        monthly = {}
        for d, v in zip(days, values):
            monthly[d.month] = monthly.get(d.month, 0) + v
        assert monthly[3] > monthly[4] > monthly[5]

        # totals.csv ranks stayhome first and quaranthriving last
        emit_trend_report(table, tmp_path)
        rows = (tmp_path / "totals.csv").read_text().splitlines()[1:]
        assert rows[0].split(",")[0] == "stayhome"
        assert rows[-1].split(",")[0] == "quaranthriving"


def test_criterion_7_robustness(tmp_path):
    with criterion(7, "malformed-line robustness", budget_seconds=5.0):
        spec = SynthSpec(
            seed=13, days=30, peak_day=15, base_volume=30.0, peak_volume=80.0,
            envelope_width=8.0,
        )
        generated = generate_synthetic(spec, tmp_path)
        clean = generated.corpus_path.read_text(encoding="utf-8").splitlines()

        malformed_forms = [
            "{not json at all",
            '{"id":"x","text":"missing timestamp"}',
            '{"id":"y","created_at":"yesterday","text":"bad timestamp"}',
        ]
        corrupted = []
        injected = 0
        for i, line in enumerate(clean):
            corrupted.append(line)
            if i % 19 == 18:  # one malformed per 19 clean lines -> ~5%
                corrupted.append(malformed_forms[injected % len(malformed_forms)])
                injected += 1
        assert injected / len(corrupted) == pytest.approx(0.05, abs=0.01)

        window = spec.window()
        table_clean, stats_clean = count_lines(clean, default_lexicon(), window)
        table_bad, stats_bad = count_lines(corrupted, default_lexicon(), window)

        assert stats_bad.lines_read == stats_clean.lines_read + injected
        assert stats_bad.records_ok == stats_clean.records_ok
        assert stats_bad.records_skipped == stats_clean.records_skipped + injected

        out_clean, out_bad = tmp_path / "clean.csv", tmp_path / "bad.csv"
        with open(out_clean, "w", newline="") as fh:
            write_counts_csv(table_clean, fh)
        with open(out_bad, "w", newline="") as fh:
            write_counts_csv(table_bad, fh)
        assert out_clean.read_bytes() == out_bad.read_bytes()


def test_criterion_8_determinism(tmp_path):
    import io

    with criterion(8, "end-to-end determinism"):
        quiet = io.StringIO()
        outputs = {}
        for attempt in ("one", "two"):
            base = tmp_path / attempt
            gen_dir = base / "gen"
            assert run(
                ["synth", "--seed", "5", "--days", "60", "--peak-day", "30",
                 "--base-volume", "10", "--peak-volume", "60",
                 "--out-dir", str(gen_dir)], err=quiet
            ) == 0
            counts = base / "counts.csv"
            assert run(
                ["count", "--corpus", str(gen_dir / "tweets.ndjson"),
                 "--out", str(counts)], err=quiet
            ) == 0
            matrix = base / "matrix.json"
            assert run(
                ["correlate", "--counts", str(counts),
                 "--mobility", str(gen_dir / "mobility.csv"), "--out", str(matrix)],
                err=quiet,
            ) == 0
            assert run(
                ["report", "--counts", str(counts), "--matrix", str(matrix),
                 "--out-dir", str(base / "reports"), "--formats", "csv,json,svg"],
                err=quiet,
            ) == 0
            outputs[attempt] = {
                p.relative_to(base): p.read_bytes()
                for p in sorted(base.rglob("*")) if p.is_file()
            }
        assert outputs["one"].keys() == outputs["two"].keys()
        assert outputs["one"] == outputs["two"]


def test_criterion_9_mobility_parsing():
    with criterion(9, "mobility parsing robustness"):
        rows = [
            national_row("2020-03-15", [-12, -5, 3, -20, -18, 9]),
            national_row("2020-03-16", [-13, None, 4, -21, -19, 10]),
        ]
        baseline = parse_mobility_csv(mobility_csv(rows))

        # permuted header plus unknown columns
        shuffled = list(reversed(MOBILITY_COLUMNS))
        shuffled.insert(2, "place_id")
        shuffled.append("metro_area")
        assert parse_mobility_csv(mobility_csv(rows, columns=shuffled)) == baseline

        # every required column, when dropped, is named in the error
        for missing in (
            "date",
            "country_region_code",
            "sub_region_2",
            "workplaces_percent_change_from_baseline",
        ):
            columns = [c for c in MOBILITY_COLUMNS if c != missing]
            with pytest.raises(MissingColumn) as excinfo:
                parse_mobility_csv(mobility_csv(rows, columns=columns))
            assert excinfo.value.name == missing
