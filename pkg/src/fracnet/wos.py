"""Reader for Web of Science tagged plain-text exports.

A WoS "plain text" export looks like::

    FN Clarivate Analytics Web of Science
    VR 1.0
    PT J
    AU Janssen, P
       Kim, MJ
    C1 [Janssen, P] Univ Amsterdam, Amsterdam, Netherlands.
    PY 2017
    UT WOS:000393000000001
    ER

    EF

Each line carries a two-letter tag, a space and a value. Lines starting
with three spaces continue the previous tag. ``ER`` closes a record and
``EF`` closes the file. Only ``AU``, ``C1``, ``RP``, ``PY`` and ``UT`` are
retained; every other tag is skipped.
"""

from __future__ import annotations

import io
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Optional, Union

__all__ = [
    "PublicationRecord",
    "WosParseError",
    "WosDecodeError",
    "normalize_author",
    "iter_wos_records",
    "parse_wos_export",
    "read_wos_file",
    "format_wos_records",
    "ANONYMOUS",
]

ANONYMOUS = "[ANONYMOUS]"

# tags that may precede the first record without opening one
_FILE_HEADER_TAGS = frozenset({"FN", "VR"})

_BRACKET_PREFIX = re.compile(r"^\[[^\]]*\]\s*")
_REPRINT_PREFIX = re.compile(
    r"^.*?\((?:reprint|corresponding) author\)\s*,?\s*", re.IGNORECASE
)
_WS = re.compile(r"\s+")


class WosParseError(ValueError):
    """A malformed export; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class WosDecodeError(WosParseError):
    pass


@dataclass
class PublicationRecord:
    seq_id: int
    authors: list[str] = field(default_factory=list)
    addresses: list[str] = field(default_factory=list)
    year: Optional[int] = None
    accession: Optional[str] = None


def normalize_author(name: str) -> str:
    """Uppercase, collapse inner whitespace and drop trailing periods."""
    name = _WS.sub(" ", name).strip().upper()
    return name.rstrip(".").rstrip()


def _clean_c1(value: str) -> str:
    return _BRACKET_PREFIX.sub("", value).strip()


def _clean_rp(value: str) -> str:
    return _REPRINT_PREFIX.sub("", value).strip()


class _Builder:
    def __init__(self, seq_id: int, lineno: int):
        self.record = PublicationRecord(seq_id)
        self.start = lineno
        self.tag: Optional[str] = None

    def feed(self, tag: str, value: str) -> None:
        rec = self.record
        if tag == "AU":
            name = normalize_author(value)
            if name:
                rec.authors.append(name)
        elif tag == "C1":
            addr = _clean_c1(value)
            if addr:
                rec.addresses.append(addr)
        elif tag == "RP":
            addr = _clean_rp(value)
            if addr:
                rec.addresses.append(addr)
        elif tag == "PY":
            try:
                rec.year = int(value.strip())
            except ValueError:
                rec.year = None
        elif tag == "UT":
            rec.accession = value.strip() or None


def _text_lines(stream: Union[IO[str], IO[bytes], Iterable]) -> Iterator[str]:
    first = True
    for lineno, line in enumerate(stream, 1):
        if isinstance(line, (bytes, bytearray)):
            try:
                line = bytes(line).decode("utf-8-sig" if first else "utf-8")
            except UnicodeDecodeError as exc:
                raise WosDecodeError(f"not valid UTF-8 text ({exc.reason})", lineno) from exc
        elif not isinstance(line, str):
            raise WosDecodeError(f"expected text, got {type(line).__name__}", lineno)
        if first:
            line = line.lstrip("\ufeff")
            first = False
        yield line.rstrip("\r\n")


def iter_wos_records(stream, start_id: int = 0) -> Iterator[PublicationRecord]:
    """Yield records from ``stream`` one at a time, in file order.

    ``stream`` is any iterable of lines (a text file, ``io.StringIO``, a
    list of strings). Byte lines are decoded as UTF-8. ``start_id`` offsets
    the ``seq_id`` numbering so several files can share one corpus.

    Raises
    ------
    WosParseError
        If a record is still open when the stream or the ``EF`` marker is
        reached, or a continuation line has nothing to continue.
    WosDecodeError
        If the input is not UTF-8 text.
    """
    seq = start_id
    current: Optional[_Builder] = None
    lineno = 0
    for lineno, line in enumerate(_text_lines(stream), 1):
        if not line.strip():
            continue
        if line.startswith("   "):
            if current is None or current.tag is None:
                raise WosParseError("continuation line outside a field", lineno)
            current.feed(current.tag, line[3:])
            continue

        tag = line[:2]
        value = line[3:] if len(line) > 3 else ""
        if tag == "EF":
            if current is not None:
                raise WosParseError(
                    f"record opened at line {current.start} has no ER", lineno
                )
            return
        if tag == "ER":
            if current is None:
                raise WosParseError("ER without an open record", lineno)
            yield current.record
            seq += 1
            current = None
            continue
        if current is None:
            if tag in _FILE_HEADER_TAGS:
                continue
            current = _Builder(seq, lineno)
        current.tag = tag
        current.feed(tag, value)

    if current is not None:
        raise WosParseError(
            f"record opened at line {current.start} has no ER before end of input",
            lineno + 1,
        )


def parse_wos_export(stream, start_id: int = 0) -> list[PublicationRecord]:
    return list(iter_wos_records(stream, start_id))


def read_wos_file(path, start_id: int = 0) -> list[PublicationRecord]:
    with open(path, "rb") as fh:
        return parse_wos_export(fh, start_id)


def format_wos_records(records: Iterable[PublicationRecord]) -> str:
    """Serialize the retained fields back into tagged plain text.

    Addresses are all written as plain ``C1`` lines, so parsing the output
    gives back the same authors and addresses.
    """
    out = io.StringIO()
    out.write("FN Clarivate Analytics Web of Science\nVR 1.0\n")
    for rec in records:
        out.write("PT J\n")
        for tag, values in (("AU", rec.authors), ("C1", rec.addresses)):
            for n, value in enumerate(values):
                out.write(f"{tag} {value}\n" if n == 0 else f"   {value}\n")
        if rec.year is not None:
            out.write(f"PY {rec.year}\n")
        if rec.accession:
            out.write(f"UT {rec.accession}\n")
        out.write("ER\n\n")
    out.write("EF\n")
    return out.getvalue()
