"""Deterministic synthetic data: tweet corpus, mobility CSV, truth manifest.

Stands in for the unavailable production corpus at desk scale. Daily
lexicon-hashtag totals follow a rise-peak-decline envelope; the mobility file
couples the residential category positively to the daily total and the five
non-residential categories negatively, so the expected correlation sign
structure is known by construction. Everything derives from one explicitly
specified 64-bit generator, so a given seed reproduces the same bytes on any
platform or implementation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import date, timedelta
from math import exp
from pathlib import Path

from .dates import DateWindow
from .lexicon import default_lexicon
from .mobility import MobilityCategory, MobilitySeries, write_mobility_csv
from .tweets import DailyCountTable, empty_table


class SplitMix64:
    """SplitMix-style 64-bit generator.

    State transition (all arithmetic mod 2**64):

        state += 0x9E3779B97F4A7C15
        z = state
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        output = z ^ (z >> 31)

    Floats take the top 53 bits of the output over 2**53. Bounded integers
    use the output modulo the bound (bias is irrelevant here; cross-language
    reproducibility is the point).
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) with 53-bit resolution."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def next_below(self, n: int) -> int:
        return self.next_u64() % n

    def next_symmetric(self) -> float:
        """Uniform in [-1, 1)."""
        return 2.0 * self.next_float() - 1.0


# Fixed per-tag sampling weights. stayhome dominates and quaranthriving is
# rarest by a wide margin, so the totals ranking is stable under sampling.
TAG_WEIGHTS = {
    "stayhome": 100,
    "socialdistancing": 62,
    "stayathome": 55,
    "quarantine": 48,
    "lockdown": 40,
    "flattenthecurve": 34,
    "stayhomesavelives": 25,
    "quarantined": 20,
    "staysafestayhome": 17,
    "quarantine2020": 13,
    "stayhomesweethome": 11,
    "socialdistancingworks": 9,
    "healthyathome": 8,
    "togetherathome": 7,
    "letsstayhome": 6,
    "lockdown2020": 5,
    "quarantining": 4,
    "quaranthriving": 1,
}

# Platform-style display casings, cycled through to exercise normalization.
_DISPLAY = {
    "staysafestayhome": "StaySafeStayHome",
    "socialdistancing": "SocialDistancing",
    "socialdistancingworks": "SocialDistancingWorks",
    "flattenthecurve": "FlattenTheCurve",
    "stayhome": "StayHome",
    "stayathome": "StayAtHome",
    "stayhomesweethome": "StayHomeSweetHome",
    "stayhomesavelives": "StayHomeSaveLives",
    "healthyathome": "HealthyAtHome",
    "lockdown": "Lockdown",
    "letsstayhome": "LetsStayHome",
    "togetherathome": "TogetherAtHome",
    "lockdown2020": "Lockdown2020",
    "quarantine": "Quarantine",
    "quarantined": "Quarantined",
    "quarantine2020": "Quarantine2020",
    "quaranthriving": "Quaranthriving",
    "quarantining": "Quarantining",
}

_FILLER_WORDS = (
    "please", "everyone", "today", "we", "are", "staying", "in", "safe",
    "masks", "on", "thinking", "of", "you", "all", "love", "from", "home",
    "keep", "going", "strong", "together", "family", "weekend", "news",
)

_FILLER_TAGS = ("#covid19", "#washyourhands", "#wfh", "#maskup")

_EMOJI = ("❤️", "\U0001f3e0", "\U0001f637")

# Affine mobility couplings: (baseline level, span multiplied by the
# normalized daily total and the coupling strength). Residential is the one
# positive-span category.
_MOBILITY_AFFINE = {
    MobilityCategory.RETAIL_AND_RECREATION: (-2.0, -42.0),
    MobilityCategory.GROCERY_AND_PHARMACY: (-1.0, -24.0),
    MobilityCategory.PARKS: (4.0, -30.0),
    MobilityCategory.TRANSIT_STATIONS: (-4.0, -48.0),
    MobilityCategory.WORKPLACES: (-3.0, -52.0),
    MobilityCategory.RESIDENTIAL: (2.0, 28.0),
}

DEFAULT_MOBILITY_START = date(2020, 2, 15)


@dataclass(frozen=True)
class SynthSpec:
    """Parameters of one synthetic generation run.

    ``coupling`` scales the mobility spans; positive keeps the constructed
    sign structure (residential up, everything else down), negative flips
    it. ``noise`` is the half-width of the uniform perturbation added to
    every mobility value.
    """

    seed: int = 42
    days: int = 147
    start: date = date(2020, 1, 1)
    peak_day: int = 74  # mid-March for the default start
    base_volume: float = 40.0
    peak_volume: float = 420.0
    envelope_width: float = 22.0
    volume_jitter: float = 0.08
    coupling: float = 0.9
    noise: float = 4.0
    filler_rate: float = 0.2
    multi_tag_rate: float = 0.15
    mobility_start: date = DEFAULT_MOBILITY_START

    def __post_init__(self) -> None:
        if self.days < 10:
            raise ValueError(f"need at least 10 days, got {self.days}")
        if not 0 <= self.peak_day < self.days:
            raise ValueError("peak_day must fall inside the generated range")
        if self.base_volume < 0 or self.peak_volume < 0:
            raise ValueError("volumes must be non-negative")
        if self.envelope_width <= 0:
            raise ValueError("envelope_width must be positive")

    def window(self) -> DateWindow:
        return DateWindow(self.start, self.start + timedelta(days=self.days - 1))

    def envelope(self, day_index: int) -> float:
        z = (day_index - self.peak_day) / self.envelope_width
        return self.base_volume + self.peak_volume * exp(-0.5 * z * z)


@dataclass(frozen=True)
class GeneratedData:
    """Paths of one generation run plus the in-memory ground truth."""

    corpus_path: Path
    mobility_path: Path
    manifest_path: Path
    manifest: dict = field(compare=False)


def generate_synthetic(spec: SynthSpec, out_dir) -> GeneratedData:
    """Write tweets.ndjson, mobility.csv, and manifest.json under out_dir.

    The manifest records the exact per-day per-tag occurrence counts that
    counting the corpus must reproduce. Fully deterministic given the seed.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rng = SplitMix64(spec.seed)
    lexicon = default_lexicon()
    tags = list(lexicon)
    weights = [TAG_WEIGHTS[t] for t in tags]
    total_weight = sum(weights)

    daily_tag_counts: dict[str, dict[str, int]] = {}
    daily_totals: dict[str, int] = {}
    tweet_no = 0

    corpus_path = out_dir / "tweets.ndjson"
    with open(corpus_path, "w", encoding="utf-8", newline="") as fh:
        for day_index in range(spec.days):
            day = spec.start + timedelta(days=day_index)
            key = day.isoformat()
            jitter = 1.0 + spec.volume_jitter * rng.next_symmetric()
            n_tweets = max(1, round(spec.envelope(day_index) * jitter))
            tag_counts: dict[str, int] = {}
            for _ in range(n_tweets):
                tweet_no += 1
                occurrences = _pick_occurrences(rng, spec, tags, weights, total_weight)
                for tag in occurrences:
                    tag_counts[tag] = tag_counts.get(tag, 0) + 1
                record = _build_record(rng, tweet_no, day, occurrences)
                fh.write(json.dumps(record, ensure_ascii=False, separators=(",", ":")))
                fh.write("\n")
            daily_tag_counts[key] = dict(sorted(tag_counts.items()))
            daily_totals[key] = sum(tag_counts.values())

    mobility_path = out_dir / "mobility.csv"
    _write_mobility(spec, rng, daily_totals, mobility_path)

    manifest = {
        "generator": "splitmix64",
        "seed": spec.seed,
        "days": spec.days,
        "start": spec.start.isoformat(),
        "peak_day": spec.peak_day,
        "base_volume": spec.base_volume,
        "peak_volume": spec.peak_volume,
        "envelope_width": spec.envelope_width,
        "volume_jitter": spec.volume_jitter,
        "coupling": spec.coupling,
        "noise": spec.noise,
        "filler_rate": spec.filler_rate,
        "multi_tag_rate": spec.multi_tag_rate,
        "mobility_start": spec.mobility_start.isoformat(),
        "lines": tweet_no,
        "daily_totals": daily_totals,
        "daily_tag_counts": daily_tag_counts,
    }
    manifest_path = out_dir / "manifest.json"
    with open(manifest_path, "w", encoding="utf-8", newline="") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return GeneratedData(
        corpus_path=corpus_path,
        mobility_path=mobility_path,
        manifest_path=manifest_path,
        manifest=manifest,
    )


def table_from_manifest(manifest: dict) -> DailyCountTable:
    """Rebuild the ground-truth count table recorded in a manifest."""
    start = date.fromisoformat(manifest["start"])
    window = DateWindow(start, start + timedelta(days=manifest["days"] - 1))
    table = empty_table(default_lexicon(), window)
    for key, tag_counts in manifest["daily_tag_counts"].items():
        day = date.fromisoformat(key)
        for tag, count in tag_counts.items():
            if count:
                table.increment(day, tag, count)
    return table


def _pick_occurrences(rng, spec, tags, weights, total_weight) -> list[str]:
    if rng.next_float() < spec.filler_rate:
        return []
    count = 2 if rng.next_float() < spec.multi_tag_rate else 1
    picked = []
    for _ in range(count):
        roll = rng.next_below(total_weight)
        acc = 0
        for tag, weight in zip(tags, weights):
            acc += weight
            if roll < acc:
                picked.append(tag)
                break
    return picked


def _style_hashtag(rng, tag: str) -> str:
    style = rng.next_below(4)
    if style == 0:
        return "#" + tag
    if style == 1:
        return "#" + _DISPLAY[tag]
    if style == 2:
        return "#" + tag.upper()
    return "#" + _DISPLAY[tag]  # display casing twice as likely as upper


def _build_record(rng, tweet_no: int, day: date, occurrences: list[str]) -> dict:
    words = [
        _FILLER_WORDS[rng.next_below(len(_FILLER_WORDS))]
        for _ in range(3 + rng.next_below(6))
    ]
    tokens = list(words)
    for tag in occurrences:
        pos = rng.next_below(len(tokens) + 1)
        tokens.insert(pos, _style_hashtag(rng, tag))
    if not occurrences and rng.next_float() < 0.5:
        tokens.append(_FILLER_TAGS[rng.next_below(len(_FILLER_TAGS))])
    if rng.next_float() < 0.15:
        tokens.append(_EMOJI[rng.next_below(len(_EMOJI))])
    hour = rng.next_below(24)
    minute = rng.next_below(60)
    second = rng.next_below(60)
    record = {
        "id": f"t{tweet_no:07d}",
        "created_at": f"{day.isoformat()}T{hour:02d}:{minute:02d}:{second:02d}Z",
        "text": " ".join(tokens),
    }
    if rng.next_float() < 0.5:
        record["country_code"] = "US"
    return record


def _write_mobility(spec, rng, daily_totals: dict[str, int], path: Path) -> None:
    days = [
        date.fromisoformat(key)
        for key in daily_totals
        if date.fromisoformat(key) >= spec.mobility_start
    ]
    values: dict[MobilityCategory, dict[date, float]] = {c: {} for c in MobilityCategory}
    if days:
        totals = [daily_totals[d.isoformat()] for d in days]
        lo, hi = min(totals), max(totals)
        span = float(hi - lo) if hi > lo else 1.0
        for day, total in zip(days, totals):
            z = (total - lo) / span
            for category in MobilityCategory:
                level, coupling_span = _MOBILITY_AFFINE[category]
                value = level + coupling_span * spec.coupling * z
                value += spec.noise * rng.next_symmetric()
                values[category][day] = value
    series = MobilitySeries(region="US", values=values)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_mobility_csv(series, fh)
