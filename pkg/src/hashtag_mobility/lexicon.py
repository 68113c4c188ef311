"""The tracked-hashtag lexicon: canonical form, the builtin set, file loading.

Hashtags are case-insensitive on the platform, so the canonical form is
lowercase ASCII without the leading ``#``. The builtin lexicon is the fixed
set of 18 tags used to build the supportive/encouraging index.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import DuplicateTag, EmptyLexicon, InvalidTag

_CANONICAL_RE = re.compile(r"[a-z0-9_]+\Z")

# str.translate table mapping A-Z to a-z and nothing else; non-ASCII letters
# must stay untouched so the charset check rejects them.
_ASCII_LOWER = str.maketrans(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZ", "abcdefghijklmnopqrstuvwxyz"
)

_BUILTIN_TAGS = (
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


def normalize_tag(raw: str) -> str:
    """Return the canonical form of a hashtag.

    Strips one leading ``#``, applies Unicode NFC normalization, then
    ASCII-lowercases. Raises :class:`InvalidTag` if the result is empty or
    contains anything outside ``[a-z0-9_]``.
    """
    if not raw:
        raise InvalidTag("empty tag")
    body = raw[1:] if raw.startswith("#") else raw
    body = unicodedata.normalize("NFC", body).translate(_ASCII_LOWER)
    if not _CANONICAL_RE.match(body):
        raise InvalidTag(f"not a canonical hashtag: {raw!r}")
    return body


@dataclass(frozen=True)
class HashtagLexicon:
    """Ordered set of canonical tags. Immutable and hashable.

    ``source`` records provenance ("builtin" or "file:<path>") and does not
    take part in equality.
    """

    tags: tuple[str, ...]
    source: str = field(default="builtin", compare=False)

    def __post_init__(self) -> None:
        if not self.tags:
            raise EmptyLexicon("lexicon has no tags")
        seen = set()
        for tag in self.tags:
            if not _CANONICAL_RE.match(tag):
                raise InvalidTag(f"non-canonical tag in lexicon: {tag!r}")
            if tag in seen:
                raise DuplicateTag(f"duplicate tag in lexicon: {tag!r}")
            seen.add(tag)

    def __contains__(self, tag: object) -> bool:
        return tag in self._tag_set

    def __iter__(self) -> Iterator[str]:
        return iter(self.tags)

    def __len__(self) -> int:
        return len(self.tags)

    @property
    def _tag_set(self) -> frozenset[str]:
        # cached on first use; object.__setattr__ because the dataclass is frozen
        cached = self.__dict__.get("_tag_set_cache")
        if cached is None:
            cached = frozenset(self.tags)
            object.__setattr__(self, "_tag_set_cache", cached)
        return cached


_DEFAULT = HashtagLexicon(_BUILTIN_TAGS, source="builtin")


def default_lexicon() -> HashtagLexicon:
    """The builtin 18-tag lexicon. Always the same instance."""
    return _DEFAULT


def load_lexicon(lines: Iterable[str], source: str = "file") -> HashtagLexicon:
    """Build a lexicon from a text stream, one tag per line.

    Blank lines and lines starting with ``;`` are ignored; the optional
    leading ``#`` is accepted. Raises :class:`InvalidTag` or
    :class:`DuplicateTag` with line numbers, or :class:`EmptyLexicon` if
    nothing remains.
    """
    tags: list[str] = []
    first_line: dict[str, int] = {}
    for line_no, line in enumerate(lines, 1):
        stripped = line.strip()
        if not stripped or stripped.startswith(";"):
            continue
        try:
            tag = normalize_tag(stripped)
        except InvalidTag as exc:
            raise InvalidTag(f"line {line_no}: {exc}") from None
        if tag in first_line:
            raise DuplicateTag(
                f"line {line_no}: {tag!r} already declared on line {first_line[tag]}"
            )
        first_line[tag] = line_no
        tags.append(tag)
    if not tags:
        raise EmptyLexicon("lexicon source contains no tags")
    return HashtagLexicon(tuple(tags), source=source)


def load_lexicon_file(path) -> HashtagLexicon:
    """Load a lexicon from a UTF-8 file (LF or CRLF line endings)."""
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh, source=f"file:{path}")


def dump_lexicon(lexicon: HashtagLexicon) -> str:
    """Serialize a lexicon to the one-tag-per-line file format."""
    return "".join(f"{tag}\n" for tag in lexicon)
