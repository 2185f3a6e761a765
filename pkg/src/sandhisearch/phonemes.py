"""Sanskrit letter inventory and its 47-category classification.

Every letter belongs to exactly one broad class (vowel, semi-vowel,
consonant or special sign, categories 0-3) and to any number of narrower
positional categories (gutturals, hard letters, guna targets, ...).
Euphonic rules are written as tests over category membership plus the
letter's position inside a category row, and as rewrites that move a
letter into another row while keeping (or explicitly setting) the
position.

The row data ships as ``data/categories.tsv`` so it can be read and
diffed as plain text.
"""

from __future__ import annotations

import unicodedata
from importlib import resources

__all__ = [
    "N_CATEGORIES",
    "VOWEL",
    "SEMIVOWEL",
    "CONSONANT",
    "SPECIAL",
    "CATEGORY_ROWS",
    "INVENTORY",
    "Phoneme",
    "UnknownGrapheme",
    "IndexOutOfRow",
    "tokenize",
    "render",
    "encode",
    "bit",
    "category_members",
    "mutate",
]

N_CATEGORIES = 47

# The four broad classes.  They carry membership only, no position.
VOWEL, SEMIVOWEL, CONSONANT, SPECIAL = 0, 1, 2, 3
CLASS_CATEGORIES = (VOWEL, SEMIVOWEL, CONSONANT, SPECIAL)


class UnknownGrapheme(ValueError):
    """A character sequence that matches no inventory letter."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"unknown grapheme at position {position}: {text[position:position + 1]!r}")


class IndexOutOfRow(IndexError):
    """A rewrite asked for a position a category row does not have."""


def _load_rows() -> list[list[str]]:
    raw = resources.files("sandhisearch.data").joinpath("categories.tsv").read_text("utf-8")
    rows: list[list[str]] = [[] for _ in range(N_CATEGORIES)]
    for line in raw.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        num, _, members = line.partition("\t")
        rows[int(num)] = unicodedata.normalize("NFC", members).split()
    return rows


CATEGORY_ROWS: list[list[str]] = _load_rows()


class Phoneme:
    """One letter of the alphabet with its category memberships.

    ``categories`` is the set of rows the letter appears in; ``index_in(c)``
    gives its (first) position inside row ``c``, or None.  Instances are
    immutable and interned in ``INVENTORY``; identity of letters is grapheme
    equality, never representation equality.
    """

    __slots__ = ("grapheme", "categories", "_positions", "entries")

    def __init__(self, grapheme: str, entries: frozenset[tuple[int, int | None]]):
        self.grapheme = grapheme
        self.entries = entries
        self.categories = frozenset(c for c, _ in entries)
        positions: dict[int, int] = {}
        for c, i in sorted(entries, key=lambda e: (e[0], e[1] if e[1] is not None else -1)):
            if i is not None and c not in positions:
                positions[c] = i
        self._positions = positions

    def has(self, category: int) -> bool:
        return category in self.categories

    def index_in(self, category: int) -> int | None:
        return self._positions.get(category)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Phoneme) and other.grapheme == self.grapheme

    def __hash__(self) -> int:
        return hash(self.grapheme)

    def __repr__(self) -> str:
        return f"Phoneme({self.grapheme!r})"


def _build_inventory() -> dict[str, Phoneme]:
    entries: dict[str, set[tuple[int, int | None]]] = {}
    singles = {m for row in CATEGORY_ROWS for m in row}
    for cat, row in enumerate(CATEGORY_ROWS):
        for pos, member in enumerate(row):
            if cat not in CLASS_CATEGORIES and member not in singles:
                continue
            if cat in CLASS_CATEGORIES:
                entries.setdefault(member, set()).add((cat, None))
            elif _is_single(member):
                entries.setdefault(member, set()).add((cat, pos))
    return {g: Phoneme(g, frozenset(e)) for g, e in entries.items() if _is_single(g)}


def _is_single(member: str) -> bool:
    # Multi-letter row entries (ar, ava, ...) are rewrite targets, not letters.
    # They are exactly the entries that themselves tokenize into several
    # letters; fortunately they are all plain vowel+consonant strings.
    return member not in _MULTI_TARGETS


_MULTI_TARGETS = {"ar", "al", "ār", "āl", "av", "āv", "ay", "āy", "ava"}

INVENTORY: dict[str, Phoneme] = _build_inventory()

_MAX_GRAPHEME_CP = max(len(g) for g in INVENTORY)


def _as_grapheme(p: "Phoneme | str") -> str:
    return p.grapheme if isinstance(p, Phoneme) else unicodedata.normalize("NFC", p)


def get(grapheme: "Phoneme | str") -> Phoneme:
    g = _as_grapheme(grapheme)
    try:
        return INVENTORY[g]
    except KeyError:
        raise UnknownGrapheme(g, 0) from None


def tokenize(text: str) -> list[Phoneme]:
    """Segment an IAST string into letters, longest match first.

    Aspirates (kh, gh, ch, jh, ṭh, ḍh, th, dh, ph) and the diphthongs
    ai/au are single letters.  Leading and trailing whitespace is ignored;
    anything else outside the inventory raises UnknownGrapheme with the
    code-point position in the normalized string.
    """
    text = unicodedata.normalize("NFC", text)
    stripped = text.strip()
    offset = text.index(stripped) if stripped else 0
    out: list[Phoneme] = []
    i = 0
    n = len(stripped)
    while i < n:
        for width in range(_MAX_GRAPHEME_CP, 0, -1):
            cand = stripped[i:i + width]
            if cand in INVENTORY:
                out.append(INVENTORY[cand])
                i += width
                break
        else:
            raise UnknownGrapheme(text, offset + i)
    return out


def render(word, realize_ru: bool = False) -> str:
    """Join letters back into a string.

    With ``realize_ru`` the intermediary ru particle (#) surfaces as the
    r it stands for; plain rendering keeps it so tokenize/render round-trip.
    """
    s = "".join(p.grapheme for p in word)
    return s.replace("#", "r") if realize_ru else s


def encode(grapheme: "Phoneme | str") -> frozenset[tuple[int, int | None]]:
    """All (category, position) memberships of one letter.

    Positions for the broad classes 0-3 are None.
    """
    return get(grapheme).entries


def bit(p: "Phoneme | str", part: int, n: int, category: int | None = None) -> bool:
    """Test one bit of a letter representation.

    Part 1 asks whether category ``n`` is set.  Part 2 asks whether the
    letter sits at position ``n`` of the row given by ``category`` --
    positions only mean anything relative to a row, so the row must be
    named.  Out-of-range ``n`` is False, never an error.
    """
    ph = get(p)
    if part == 1:
        return 0 <= n < N_CATEGORIES and n in ph.categories
    if part == 2:
        if category is None:
            raise ValueError("part-2 bit tests need the category as context")
        return ph.index_in(category) == n
    raise ValueError(f"part must be 1 or 2, not {part!r}")


def category_members(n: int) -> list[str]:
    """The members of row ``n``, in row order (order defines positions)."""
    if not 0 <= n < N_CATEGORIES:
        raise IndexOutOfRow(f"no category {n}")
    return list(CATEGORY_ROWS[n])


def mutate(p: "Phoneme | str", category: int, index: int | None = None):
    """Rewrite a letter into ``category`` at ``index``.

    When the index is omitted the letter keeps its own position: its
    position inside the target row if it is already a member, else 0 for
    a one-member row.  Returns the replacement -- a single Phoneme, or a
    tuple of Phonemes when the row entry expands to several letters
    (ar, ava, ...).
    """
    ph = get(p)
    row = CATEGORY_ROWS[category]
    if not row:
        raise IndexOutOfRow(f"category {category} is empty")
    if index is None:
        index = ph.index_in(category)
        if index is None:
            if len(row) == 1:
                index = 0
            else:
                raise IndexOutOfRow(
                    f"{ph.grapheme!r} has no position in category {category}; index required"
                )
    if not 0 <= index < len(row):
        raise IndexOutOfRow(f"category {category} has no index {index}")
    target = row[index]
    if target in INVENTORY:
        return INVENTORY[target]
    return tuple(tokenize(target))
