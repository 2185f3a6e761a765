"""Every surface shape a word can take next to arbitrary neighbours.

A query word is joined against one-letter contexts on the right (each
vowel, semi-vowel and consonant) and then, for every shape collected so
far, against one-letter contexts on the left (the same alphabet plus the
visarga, the anusvara and the ru particle).  When the context letter
survives the join untouched it is peeled off and the rest is the word
form; when the junction fused, the whole joined string is kept and later
searched as a plain substring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .engine import EmptyWord, sandhi_process
from .phonemes import CATEGORY_ROWS, render, tokenize

__all__ = [
    "WordForm",
    "WordFormSet",
    "ContextUnrecoverable",
    "generate_all_word_forms",
    "strip_context",
]


class ContextUnrecoverable(ValueError):
    """The context letter cannot be split back off a joined string."""


# One representative per letter: 13 vowels, 4 semi-vowels, 29 consonants.
VOWELS = tuple(CATEGORY_ROWS[0][:13])
SEMIVOWELS = tuple(CATEGORY_ROWS[20])
CONSONANTS = tuple(CATEGORY_ROWS[2])
RIGHT_CONTEXTS = VOWELS + SEMIVOWELS + CONSONANTS
LEFT_CONTEXTS = RIGHT_CONTEXTS + ("ḥ", "ṃ", "#")


@dataclass
class WordForm:
    surface: str
    kind: str                      # exact | right-context | left-context | fused
    context: str                   # the letter that first produced the form
    rules: tuple[int, ...]
    left_ok: set[str] = field(default_factory=set)   # letters that may precede
    right_ok: set[str] = field(default_factory=set)  # letters that may follow


class WordFormSet:
    """All shapes of one word, deduplicated by surface."""

    def __init__(self, base: str):
        self.base = base
        self._forms: dict[str, WordForm] = {}
        self.add(base, "exact", "", ())

    def add(self, surface: str, kind: str, context: str,
            rules: tuple[int, ...]) -> WordForm:
        form = self._forms.get(surface)
        if form is None:
            form = WordForm(surface, kind, context, rules)
            self._forms[surface] = form
        return form

    @property
    def forms(self) -> list[WordForm]:
        return list(self._forms.values())

    def surfaces(self) -> list[str]:
        return list(self._forms)

    def get(self, surface: str) -> WordForm | None:
        return self._forms.get(surface)

    def __contains__(self, surface: str) -> bool:
        return surface in self._forms

    def __len__(self) -> int:
        return len(self._forms)

    def __iter__(self):
        return iter(self._forms.values())

    def to_records(self) -> list[dict]:
        return [
            {"surface": f.surface, "kind": f.kind, "context": f.context,
             "rules": list(f.rules)}
            for f in sorted(self._forms.values(), key=lambda f: f.surface)
        ]


def _realized(letter: str) -> str:
    return render(tokenize(letter), realize_ru=True)


def generate_all_word_forms(word: str) -> WordFormSet:
    """Collect every sandhi shape of ``word``; the word itself included."""
    base_toks = tokenize(word)
    if not base_toks:
        raise EmptyWord("word must be non-empty")
    base = render(base_toks)
    base_realized = render(base_toks, realize_ru=True)
    out = WordFormSet(base)

    for ctx_letter in RIGHT_CONTEXTS:
        for alt in sandhi_process(base, ctx_letter):
            if alt.y_text == ctx_letter:
                if not alt.x_text:
                    continue
                if alt.x_text == base_realized:
                    form = out.get(base) or out.add(base, "exact", "", ())
                else:
                    form = out.add(alt.x_text, "right-context", ctx_letter, alt.rules)
                form.right_ok.add(ctx_letter)
            else:
                out.add(alt.solid, "fused", ctx_letter, alt.rules)

    for shape in list(out.surfaces()):
        for ctx_letter in LEFT_CONTEXTS:
            ctx_realized = _realized(ctx_letter)
            for alt in sandhi_process(ctx_letter, shape):
                if alt.x_text == ctx_realized:
                    if not alt.y_text:
                        continue
                    if alt.y_text == shape:
                        form = out.get(shape)
                    else:
                        form = out.add(alt.y_text, "left-context", ctx_letter, alt.rules)
                        # the tail end is untouched, so it tolerates whatever
                        # the shape it came from tolerated
                        src = out.get(shape)
                        if src is not None:
                            form.right_ok |= src.right_ok
                    if form is not None:
                        form.left_ok.add(ctx_realized)
                else:
                    out.add(alt.solid, "fused", ctx_letter, alt.rules)

    return out


@lru_cache(maxsize=256)
def cached_word_forms(word: str) -> WordFormSet:
    return generate_all_word_forms(word)


def strip_context(joined: str, context: str, side: str, base: str = "") -> str:
    """Peel a one-letter join context off a joined string.

    Raises ContextUnrecoverable when the context letter is no longer there
    as such (it merged into the word); callers then keep the whole joined
    string as a fused form.
    """
    if side == "right":
        for tail in (" " + context, context):
            if joined.endswith(tail) and len(joined) > len(tail):
                return joined[:-len(tail)]
        raise ContextUnrecoverable(
            f"context {context!r} not separable from the right of {joined!r}")
    if side == "left":
        for head in (context + " ", context):
            if joined.startswith(head) and len(joined) > len(head):
                return joined[len(head):]
        raise ContextUnrecoverable(
            f"context {context!r} not separable from the left of {joined!r}")
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")
