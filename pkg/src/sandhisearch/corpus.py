"""E-text ingestion and search for every sandhi shape of a query word.

The text is held as NFC-normalized IAST (Devanagari input is converted on
the way in).  A search generates the query's word forms and scans the text
for all of them in one call.  Exact and fused shapes match wherever they
occur -- manuscripts run words together, so an exact hit is never thrown
away.  Context-derived shapes additionally need a plausible neighbourhood:
a word boundary, or a touching letter recorded as tolerable for that shape
when the forms were generated.  ``strict`` narrows everything but fused
shapes to hard word boundaries (whitespace, punctuation, line ends).
"""

from __future__ import annotations

import unicodedata
from bisect import bisect_right
from dataclasses import dataclass

from .phonemes import INVENTORY
from .translit import deva_to_iast
from .wordforms import WordFormSet, cached_word_forms

__all__ = [
    "Corpus",
    "Match",
    "MultiPatternSearcher",
    "DecodeError",
    "ingest",
    "search",
]


class DecodeError(ValueError):
    """The raw input is not valid UTF-8."""


@dataclass(frozen=True)
class Match:
    offset: int
    length: int
    surface: str
    kind: str
    line: int


class Corpus:
    """Normalized text plus a line-start index."""

    def __init__(self, text: str, source: str = "<memory>"):
        self.text = unicodedata.normalize("NFC", text)
        self.source = source
        self.line_index = [0] + [
            i + 1 for i, ch in enumerate(self.text) if ch == "\n" and i + 1 < len(self.text)
        ]

    def line_of(self, offset: int) -> int:
        return bisect_right(self.line_index, offset)

    def __len__(self) -> int:
        return len(self.text)


def ingest(raw: bytes | str, script: str = "iast", source: str = "<memory>") -> Corpus:
    """Decode, transliterate if needed, normalize, and index a text."""
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DecodeError(str(exc)) from None
    if script == "devanagari":
        raw = deva_to_iast(raw)
    elif script != "iast":
        raise ValueError(f"unknown script {script!r}")
    return Corpus(raw, source)


class MultiPatternSearcher:
    """Finds every occurrence of a set of patterns in one scan call.

    Occurrences may overlap; the result is offset-sorted and unique per
    (offset, length).  Internally each pattern is swept with the C-level
    substring search, which beats a hand-rolled automaton by a wide margin
    for the pattern counts a word generates.
    """

    def __init__(self, patterns: dict[str, str] | list[str]):
        if isinstance(patterns, dict):
            self._patterns = dict(patterns)
        else:
            self._patterns = {p: p for p in patterns}

    def scan(self, text: str):
        hits: list[tuple[int, int, str]] = []
        for pattern in self._patterns:
            if not pattern:
                continue
            start = text.find(pattern)
            while start != -1:
                hits.append((start, len(pattern), pattern))
                start = text.find(pattern, start + 1)
        hits.sort(key=lambda h: (h[0], h[1]))
        seen: set[tuple[int, int]] = set()
        for start, length, pattern in hits:
            if (start, length) not in seen:
                seen.add((start, length))
                yield start, pattern


# Characters that count as part of a word when deciding boundaries.
_WORD_CHARS = set("".join(INVENTORY)) | {"̐"}


def _is_word_char(ch: str) -> bool:
    return ch in _WORD_CHARS or ch.isalpha()


def _grapheme_before(text: str, pos: int) -> str:
    two = text[max(0, pos - 2):pos]
    if len(two) == 2 and two in INVENTORY:
        return two
    return text[pos - 1:pos]


def _grapheme_after(text: str, pos: int) -> str:
    two = text[pos:pos + 2]
    if len(two) == 2 and two in INVENTORY:
        return two
    return text[pos:pos + 1]


def _boundary_ok(corpus_text: str, start: int, end: int, form, strict: bool) -> bool:
    if form.kind == "fused":
        return True
    left_open = start > 0 and _is_word_char(corpus_text[start - 1])
    right_open = end < len(corpus_text) and _is_word_char(corpus_text[end])
    if not left_open and not right_open:
        return True
    if strict:
        return False
    if form.kind == "exact":
        # an exact occurrence is never discarded: running words together is
        # exactly what the engine exists to cope with
        return True
    if left_open and _grapheme_before(corpus_text, start) not in form.left_ok:
        return False
    if right_open and _grapheme_after(corpus_text, end) not in form.right_ok:
        return False
    return True


def search(word: str, corpus: Corpus, strict: bool = False) -> list[Match]:
    """All occurrences of any sandhi shape of ``word`` in the corpus."""
    forms: WordFormSet = cached_word_forms(word)
    by_surface = {f.surface: f for f in forms}
    searcher = MultiPatternSearcher(list(by_surface))
    out: list[Match] = []
    for start, surface in searcher.scan(corpus.text):
        form = by_surface[surface]
        end = start + len(surface)
        if _boundary_ok(corpus.text, start, end, form, strict):
            out.append(Match(start, len(surface), surface, form.kind,
                             corpus.line_of(start)))
    return out
