"""Entities of a publication at author, institution or country level."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from .wos import ANONYMOUS, PublicationRecord

__all__ = [
    "Level",
    "Mode",
    "AggregationLevel",
    "extract_country",
    "extract_institution",
    "extract_entities",
    "count_unmapped_addresses",
]


class Level(enum.Enum):
    AUTHOR = "author"
    INSTITUTION = "institution"
    COUNTRY = "country"

    @classmethod
    def parse(cls, text: str) -> "Level":
        """Accept full names or the single-letter prompt answers a/i/c."""
        key = text.strip().lower()
        for level in cls:
            if key in (level.value, level.value[0]):
                return level
        raise ValueError(f"unknown aggregation level {text!r}")


class Mode(enum.Enum):
    BINARY = "binary"
    VALUED = "valued"


@dataclass(frozen=True)
class AggregationLevel:
    level: Level = Level.AUTHOR
    mode: Mode = Mode.VALUED

    def __post_init__(self):
        # an author occurs on a paper at most once
        if self.level is Level.AUTHOR and self.mode is not Mode.BINARY:
            object.__setattr__(self, "mode", Mode.BINARY)


def _segments(address: str) -> list[str]:
    address = address.strip()
    if address.endswith("."):
        address = address[:-1]
    return [seg.strip() for seg in address.split(",")]


def extract_country(address: str) -> Optional[str]:
    """Country of a WoS address: its last comma-separated segment.

    US addresses end in ``STATE ZIP USA`` and are mapped to plain ``USA``.
    Returns None for an empty address.
    """
    if not address or not address.strip():
        return None
    last = _segments(address)[-1].upper()
    tokens = last.split()
    if tokens and tokens[-1] == "USA":
        return "USA"
    return " ".join(tokens) or None


def extract_institution(address: str) -> Optional[str]:
    if not address or not address.strip():
        return None
    first = " ".join(_segments(address)[0].upper().split())
    return first or None


_EXTRACTORS = {
    Level.INSTITUTION: extract_institution,
    Level.COUNTRY: extract_country,
}


def _unique_addresses(addresses: Iterable[str]) -> list[str]:
    # a reprint address usually repeats one of the C1 lines
    seen = set()
    out = []
    for addr in addresses:
        key = " ".join(addr.split()).rstrip(".").upper()
        if key and key not in seen:
            seen.add(key)
            out.append(addr)
    return out


def extract_entities(
    record: PublicationRecord, agg: AggregationLevel
) -> list[tuple[str, int]]:
    """Column of the occurrence matrix for one record.

    Returns ``(label, count)`` pairs sorted by label. At author level each
    distinct author counts once. At institution and country level the count
    is the number of distinct addresses mapping to the label, or 1 in
    binary mode.
    """
    if agg.level is Level.AUTHOR:
        names = {a for a in record.authors if a and a != ANONYMOUS}
        return [(name, 1) for name in sorted(names)]

    extract = _EXTRACTORS[agg.level]
    counts = Counter()
    for addr in _unique_addresses(record.addresses):
        label = extract(addr)
        if label is not None:
            counts[label] += 1
    if agg.mode is Mode.BINARY:
        return [(label, 1) for label in sorted(counts)]
    return sorted(counts.items())


def count_unmapped_addresses(
    records: Iterable[PublicationRecord], agg: AggregationLevel
) -> int:
    """Number of addresses that yield no entity at ``agg``'s level."""
    if agg.level is Level.AUTHOR:
        return 0
    extract = _EXTRACTORS[agg.level]
    return sum(
        1 for rec in records for addr in rec.addresses if extract(addr) is None
    )
