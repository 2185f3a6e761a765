"""Devanagari <-> IAST conversion for E-text.

Covers the plain Sanskrit repertoire of U+0900-U+097F: consonant letters
with implicit a, vowel signs, independent vowels, virama, anusvara,
visarga, avagraha and candrabindu.  Digits and danda punctuation pass
through untouched in both directions, as does whitespace and ordinary
ASCII punctuation.

The engine-internal signs (#, the jihvamuliya and the upadhmaniya) have
no Devanagari spelling; rendering them emits a visarga-class fallback and
a ``LossyTransliteration`` warning.  A nasalized semivowel travels as
consonant + virama + candrabindu, which round-trips exactly.
"""

from __future__ import annotations

import unicodedata
import warnings

from .phonemes import tokenize

__all__ = [
    "UnsupportedCodePoint",
    "LossyTransliteration",
    "deva_to_iast",
    "iast_to_deva",
]


class UnsupportedCodePoint(ValueError):
    def __init__(self, text: str, position: int):
        self.position = position
        cp = text[position:position + 1]
        super().__init__(
            f"unsupported code point at {position}: {cp!r} (U+{ord(cp):04X})" if cp
            else f"unsupported code point at {position}")


class LossyTransliteration(UserWarning):
    """An engine-internal sign was rendered by a fallback spelling."""


_VIRAMA = "्"
_ANUSVARA = "ं"
_VISARGA = "ः"
_AVAGRAHA = "ऽ"
_CANDRABINDU = "ँ"

_CONSONANTS = {
    "क": "k", "ख": "kh", "ग": "g", "घ": "gh", "ङ": "ṅ",
    "च": "c", "छ": "ch", "ज": "j", "झ": "jh", "ञ": "ñ",
    "ट": "ṭ", "ठ": "ṭh", "ड": "ḍ", "ढ": "ḍh", "ण": "ṇ",
    "त": "t", "थ": "th", "द": "d", "ध": "dh", "न": "n",
    "प": "p", "फ": "ph", "ब": "b", "भ": "bh", "म": "m",
    "य": "y", "र": "r", "ल": "l", "व": "v",
    "श": "ś", "ष": "ṣ", "स": "s", "ह": "h",
}

_INDEPENDENT = {
    "अ": "a", "आ": "ā", "इ": "i", "ई": "ī", "उ": "u", "ऊ": "ū",
    "ऋ": "ṛ", "ॠ": "ṝ", "ऌ": "ḷ", "ॡ": "ḹ",
    "ए": "e", "ऐ": "ai", "ओ": "o", "औ": "au",
}

_MATRAS = {
    "ा": "ā", "ि": "i", "ी": "ī", "ु": "u", "ू": "ū",
    "ृ": "ṛ", "ॄ": "ṝ", "ॢ": "ḷ", "ॣ": "ḹ",
    "े": "e", "ै": "ai", "ो": "o", "ौ": "au",
}

_NASAL_SEMIVOWELS = {"y": "ỹ", "v": "ṽ", "l": "l̐", "m": "m̐"}

_PASSTHROUGH = set("०१२३४५६७८९।॥")

_CONS_TO_DEVA = {v: k for k, v in _CONSONANTS.items()}
_VOWEL_TO_DEVA = {v: k for k, v in _INDEPENDENT.items()}
_VOWEL_TO_MATRA = {v: k for k, v in _MATRAS.items()}
_NASAL_BASE = {v: k for k, v in _NASAL_SEMIVOWELS.items()}


def deva_to_iast(text: str) -> str:
    """Devanagari to IAST.  Input is NFC-normalized first."""
    text = unicodedata.normalize("NFC", text)
    out: list[str] = []
    pending: str | None = None  # consonant awaiting its vowel

    def flush(implicit_a: bool = True):
        nonlocal pending
        if pending is not None:
            out.append(pending + ("a" if implicit_a else ""))
            pending = None

    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in _CONSONANTS:
            flush()
            pending = _CONSONANTS[ch]
        elif ch == _VIRAMA:
            if pending is None:
                raise UnsupportedCodePoint(text, i)
            if i + 1 < n and text[i + 1] == _CANDRABINDU and pending in _NASAL_SEMIVOWELS:
                out.append(unicodedata.normalize("NFC", _NASAL_SEMIVOWELS[pending]))
                pending = None
                i += 2
                continue
            flush(implicit_a=False)
        elif ch in _MATRAS:
            if pending is None:
                raise UnsupportedCodePoint(text, i)
            out.append(pending + _MATRAS[ch])
            pending = None
        elif ch in _INDEPENDENT:
            flush()
            out.append(_INDEPENDENT[ch])
        elif ch == _ANUSVARA:
            flush()
            out.append("ṃ")
        elif ch == _VISARGA:
            flush()
            out.append("ḥ")
        elif ch == _AVAGRAHA:
            flush()
            out.append("'")
        elif ch == _CANDRABINDU:
            # a nasalized vowel; folded into the anusvara sign
            flush()
            out.append("ṃ")
        elif ch in _PASSTHROUGH:
            flush()
            out.append(ch)
        elif "ऀ" <= ch <= "ॿ":
            raise UnsupportedCodePoint(text, i)
        elif ch.isspace() or not ch.isalpha():
            flush()
            out.append(ch)
        else:
            raise UnsupportedCodePoint(text, i)
        i += 1
    flush()
    return unicodedata.normalize("NFC", "".join(out))


_WORD_CHARS = set("aāiīuūṛṝḷḹeo") | set("kgcjṭḍtdpbyrlvśṣshṃḥnmñṅṇ'#ΛΥỹṽ") | {"̐"}


def _word_runs(text: str):
    run_start = None
    for i, ch in enumerate(text):
        if ch in _WORD_CHARS:
            if run_start is None:
                run_start = i
        else:
            if run_start is not None:
                yield run_start, i, True
                run_start = None
            yield i, i + 1, False
    if run_start is not None:
        yield run_start, len(text), True


def _render_word(word: str) -> str:
    out: list[str] = []
    pending = False  # a consonant letter was emitted and awaits its vowel
    for p in tokenize(word):
        g = p.grapheme
        if g in _VOWEL_TO_DEVA:
            if pending:
                if g != "a":
                    out.append(_VOWEL_TO_MATRA[g])
                pending = False
            else:
                out.append(_VOWEL_TO_DEVA[g])
        elif g in _CONS_TO_DEVA:
            if pending:
                out.append(_VIRAMA)
            out.append(_CONS_TO_DEVA[g])
            pending = True
        elif g in _NASAL_BASE:
            if pending:
                out.append(_VIRAMA)
            out.append(_CONS_TO_DEVA[_NASAL_BASE[g]] + _VIRAMA + _CANDRABINDU)
            pending = False
        elif g == "ṃ":
            if pending:
                out.append(_VIRAMA)
                pending = False
            out.append(_ANUSVARA)
        elif g == "ḥ":
            if pending:
                out.append(_VIRAMA)
                pending = False
            out.append(_VISARGA)
        elif g == "'":
            if pending:
                out.append(_VIRAMA)
                pending = False
            out.append(_AVAGRAHA)
        elif g == "#":
            warnings.warn("ru (#) has no Devanagari spelling; writing र्",
                          LossyTransliteration, stacklevel=3)
            if pending:
                out.append(_VIRAMA)
            out.append("र" + _VIRAMA)
            pending = False
        elif g in ("Λ", "Υ"):
            warnings.warn(f"{g} has no Devanagari spelling; writing the visarga",
                          LossyTransliteration, stacklevel=3)
            if pending:
                out.append(_VIRAMA)
                pending = False
            out.append(_VISARGA)
        else:  # pragma: no cover - the inventory is closed
            raise UnsupportedCodePoint(word, 0)
    if pending:
        out.append(_VIRAMA)
    return "".join(out)


def iast_to_deva(text: str) -> str:
    """IAST to Devanagari; the inverse of deva_to_iast on its image."""
    text = unicodedata.normalize("NFC", text)
    out: list[str] = []
    for start, end, is_word in _word_runs(text):
        chunk = text[start:end]
        if is_word:
            out.append(_render_word(chunk))
        else:
            out.append(chunk)
    return unicodedata.normalize("NFC", "".join(out))
