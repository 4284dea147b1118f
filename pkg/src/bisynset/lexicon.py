"""Reading and writing bilingual dictionaries and gold synset inventories.

Two line-oriented UTF-8 formats are understood:

* pairs files, one ``l1_word<TAB>l2_word`` translation per line;
* gold synset files, one ``id<TAB>w|w|...<TAB>w|w|...`` synset per line, where
  either word list may be empty.

Blank lines and lines starting with ``#`` are skipped in both.  Words are kept
byte-for-byte as they appear in the file: no case folding, no Unicode
normalization and no diacritic handling, so two spellings that differ only in
their diacritics are two different words.
"""

from __future__ import annotations

import enum
import logging
import os
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Iterator, NamedTuple, Union

from .errors import (
    DuplicateSynsetId,
    EmptySide,
    EmptyWord,
    InvalidUtf8,
    MalformedLine,
)

logger = logging.getLogger(__name__)

Source = Union[bytes, str, os.PathLike, BinaryIO]

WORD_SEPARATOR = "|"


class Lang(enum.IntEnum):
    L1 = 0
    L2 = 1


@dataclass(frozen=True)
class Languages:
    """User-visible labels of the two dictionary languages, e.g. ``ar``/``en``."""

    l1: str = "l1"
    l2: str = "l2"

    def __post_init__(self):
        if self.l1 == self.l2:
            raise ValueError(f"language labels must differ, got {self.l1!r} twice")

    def label(self, lang: Lang) -> str:
        return self.l1 if lang is Lang.L1 else self.l2


class Word(NamedTuple):
    """A surface form tagged with its language.  Orders by ``(lang, surface)``."""

    lang: Lang
    surface: str


class TranslationPair(NamedTuple):
    """A dictionary entry, always stored in L1 -> L2 direction."""

    source: str
    target: str


@dataclass(frozen=True)
class GoldSynset:
    id: str
    l1_words: frozenset
    l2_words: frozenset


@dataclass
class LoadReport:
    lines: int = 0
    skipped: int = 0
    duplicates: int = 0
    records: int = 0


def _read_bytes(source: Source) -> bytes:
    if isinstance(source, bytes):
        return source
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return fh.read()
    return source.read()


def _decode(data: bytes) -> str:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InvalidUtf8(exc.start) from None
    if text.startswith("\ufeff"):
        text = text[1:]
    return text


def _lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield ``(line_no, line)`` for every non-blank, non-comment line."""
    segments = text.split("\n")
    if segments[-1] == "":
        segments.pop()
    for line_no, line in enumerate(segments, start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if not line.strip() or line.startswith("#"):
            yield line_no, None
            continue
        yield line_no, line


def _check_word(word: str, line_no: int) -> str:
    if not word.strip():
        raise EmptyWord(line_no)
    return word


def load_pairs(source: Source) -> tuple[frozenset, LoadReport]:
    """Parse a pairs file into a deduplicated set of translation pairs.

    Parameters
    ----------
    source : bytes, path or binary file object
        UTF-8 text with one ``l1_word<TAB>l2_word`` pair per line.  LF and
        CRLF line endings are both accepted.

    Returns
    -------
    pairs : frozenset of TranslationPair
    report : LoadReport
        Counts of skipped (blank or comment) lines and duplicate pairs.

    Raises
    ------
    InvalidUtf8, MalformedLine, EmptyWord
    """
    text = _decode(_read_bytes(source))
    report = LoadReport()
    pairs = set()
    for line_no, line in _lines(text):
        if line is None:
            report.skipped += 1
            continue
        report.lines += 1
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedLine(line_no, f"expected 2 TAB-separated fields, got {len(fields)}")
        pair = TranslationPair(_check_word(fields[0], line_no), _check_word(fields[1], line_no))
        if pair in pairs:
            report.duplicates += 1
        else:
            pairs.add(pair)
    report.records = len(pairs)
    if report.duplicates:
        logger.info("merged %d duplicate pair line(s)", report.duplicates)
    return frozenset(pairs), report


def serialize_pairs(pairs: Iterable[TranslationPair]) -> str:
    """Render pairs as sorted ``l1<TAB>l2`` lines (LF endings)."""
    return "".join(f"{a}\t{e}\n" for a, e in sorted(pairs))


def _split_side(field: str, line_no: int, synset_id: str) -> frozenset:
    if field == "":
        return frozenset()
    words = [_check_word(w, line_no) for w in field.split(WORD_SEPARATOR)]
    unique = frozenset(words)
    if len(unique) != len(words):
        logger.warning(
            "line %d: synset %r lists %d duplicate word(s); collapsed",
            line_no,
            synset_id,
            len(words) - len(unique),
        )
    return unique


def load_gold_synsets(source: Source) -> tuple:
    """Parse a gold synset file.

    Each line is ``id<TAB>l1_words<TAB>l2_words`` with words joined by ``|``.
    One side may be empty (monolingual gold), not both.  Synsets come back in
    file order.
    """
    text = _decode(_read_bytes(source))
    synsets = []
    seen = set()
    for line_no, line in _lines(text):
        if line is None:
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise MalformedLine(line_no, f"expected 3 TAB-separated fields, got {len(fields)}")
        synset_id, l1_field, l2_field = fields
        if not synset_id.strip():
            raise MalformedLine(line_no, "empty synset id")
        if synset_id in seen:
            raise DuplicateSynsetId(synset_id)
        seen.add(synset_id)
        l1 = _split_side(l1_field, line_no, synset_id)
        l2 = _split_side(l2_field, line_no, synset_id)
        if not l1 and not l2:
            raise MalformedLine(line_no, "both word lists are empty")
        synsets.append(GoldSynset(synset_id, l1, l2))
    return tuple(synsets)


def serialize_gold_synsets(gold: Iterable[GoldSynset]) -> str:
    return "".join(
        f"{g.id}\t{WORD_SEPARATOR.join(sorted(g.l1_words))}\t{WORD_SEPARATOR.join(sorted(g.l2_words))}\n"
        for g in gold
    )


def flatten_synsets(gold: Iterable[GoldSynset]) -> frozenset:
    """Turn gold synsets into the flat dictionary they imply.

    Every synset contributes the full cross product of its two sides; the
    result is their union, so which synset a pair came from is lost.

    >>> g = GoldSynset("s1", frozenset({"a1", "a2"}), frozenset({"e1"}))
    >>> sorted(flatten_synsets([g]))
    [TranslationPair(source='a1', target='e1'), TranslationPair(source='a2', target='e1')]
    """
    pairs = set()
    for synset in gold:
        if not synset.l1_words or not synset.l2_words:
            raise EmptySide(synset.id)
        pairs.update(TranslationPair(a, e) for a in synset.l1_words for e in synset.l2_words)
    return frozenset(pairs)
