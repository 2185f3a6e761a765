"""Runs the rule pass over a word pair and collects every alternative.

The pass is a single top-to-bottom walk through the rule list.  When an
optional rule fires, the untouched pair is put on a work queue tagged with
the next rule to try, so every alternative continues through the rest of
the pass exactly once; rule ids strictly increase along any branch, which
makes termination obvious.  The kupvoh flag is shared by all branches of
one call: once the jihvamuliya/upadhmaniya option has fired anywhere, the
general visarga-to-s rule stays quiet for the retained-visarga branch too.

Letters keep a tag saying which input word they came from.  That tag
locates the junction for display purposes even after letters have been
shifted across it, and decides whether a space-separated rendering is
still meaningful (it is not once a cross-word vowel merger has fused the
words).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from . import rules as _rules
from .phonemes import Phoneme, render, tokenize

__all__ = [
    "EmptyWord",
    "RuleOutcome",
    "RuleState",
    "Alternative",
    "WordList",
    "apply_rule",
    "sandhi_process",
    "internal_sandhi",
]


class EmptyWord(ValueError):
    """sandhi needs two non-empty words."""


class RuleOutcome(Enum):
    NOT_FIRED = "not-fired"
    FIRED = "fired"
    FIRED_AND_BRANCHED = "fired-and-branched"
    SKIP_NEXT = "skip-next"


class Slot(NamedTuple):
    ph: Phoneme
    origin: str  # "x" or "y": the input word the position came from


class RuleState:
    """The word pair under transformation plus the junction variables."""

    __slots__ = ("X", "Y", "fused", "trace", "flags")

    def __init__(self, X: list[Slot], Y: list[Slot], flags: dict,
                 fused: bool = False, trace: tuple[int, ...] = ()):
        self.X = X
        self.Y = Y
        self.flags = flags
        self.fused = fused
        self.trace = list(trace)

    @classmethod
    def from_words(cls, first, second, flags: dict | None = None) -> "RuleState":
        def _word(w, which):
            seq = tokenize(w) if isinstance(w, str) else list(w)
            if not seq:
                raise EmptyWord(f"the {which} word is empty")
            return seq

        xs = _word(first, "first")
        ys = _word(second, "second")
        return cls([Slot(p, "x") for p in xs], [Slot(p, "y") for p in ys],
                   flags if flags is not None else {})

    # -- junction variables -------------------------------------------------

    @property
    def x(self) -> Phoneme | None:
        return self.X[-1].ph if self.X else None

    @property
    def u(self) -> Phoneme | None:
        return self.X[-2].ph if len(self.X) > 1 else None

    @property
    def y(self) -> Phoneme | None:
        return self.Y[0].ph if self.Y else None

    @property
    def w(self) -> Phoneme | None:
        return self.Y[1].ph if len(self.Y) > 1 else None

    def x_render(self) -> str:
        return "".join(sl.ph.grapheme for sl in self.X)

    def y_render(self) -> str:
        return "".join(sl.ph.grapheme for sl in self.Y)

    # -- rewrites ------------------------------------------------------------

    def _expand(self, repl, origin) -> list[Slot]:
        if isinstance(repl, Phoneme):
            return [Slot(repl, origin)]
        return [Slot(p, origin) for p in repl]

    def replace_x(self, repl) -> None:
        origin = self.X[-1].origin
        self.X[-1:] = self._expand(repl, origin)

    def replace_y(self, repl) -> None:
        origin = self.Y[0].origin
        self.Y[:1] = self._expand(repl, origin)

    def delete_x(self) -> None:
        del self.X[-1]

    def delete_y(self) -> None:
        del self.Y[0]

    def append_x(self, repl) -> None:
        self.X.extend(self._expand(repl, self.X[-1].origin))

    def shift_x_to_y(self) -> None:
        self.Y.insert(0, self.X.pop())

    def mark_merger(self) -> None:
        # called by the cross-word vowel rules before they delete a letter;
        # only a junction between letters of different origin really fuses
        if self.X and self.Y and self.X[-1].origin != self.Y[0].origin:
            self.fused = True

    def copy(self) -> "RuleState":
        return RuleState(list(self.X), list(self.Y), self.flags,
                         self.fused, tuple(self.trace))


@dataclass(frozen=True)
class Alternative:
    """One fully processed output of a join."""

    x_text: str           # the first word's side of the junction, ru realized
    y_text: str           # the second word's side
    solid: str            # the two sides written together
    spaced: str | None    # written apart, when that is still meaningful
    fused: bool
    rules: tuple[int, ...]

    def strings(self) -> list[str]:
        out = [self.spaced] if self.spaced is not None else []
        out.append(self.solid)
        return out


class WordList:
    """Ordered, deduplicated alternatives; the mainline output comes first."""

    def __init__(self):
        self.alternatives: list[Alternative] = []
        self._seen: set[tuple[str, str]] = set()

    def add(self, alt: Alternative) -> None:
        key = (alt.x_text, alt.y_text)
        if key not in self._seen:
            self._seen.add(key)
            self.alternatives.append(alt)

    @property
    def pairs(self) -> list[tuple[str, str]]:
        return [(a.x_text, a.y_text) for a in self.alternatives]

    def strings(self) -> list[str]:
        out: list[str] = []
        seen: set[str] = set()
        for alt in self.alternatives:
            for s in alt.strings():
                if s not in seen:
                    seen.add(s)
                    out.append(s)
        return out

    def __iter__(self):
        return iter(self.alternatives)

    def __len__(self):
        return len(self.alternatives)


def _finish(state: RuleState) -> Alternative:
    slots = state.X + state.Y
    split = len(slots)
    for i, sl in enumerate(slots):
        if sl.origin == "y":
            split = i
            break
    x_part, y_part = slots[:split], slots[split:]
    x_text = render((sl.ph for sl in x_part), realize_ru=True)
    y_text = render((sl.ph for sl in y_part), realize_ru=True)
    solid = x_text + y_text
    spaced = None
    if not state.fused and x_part and y_part:
        spaced = x_text + " " + y_text
    return Alternative(x_text, y_text, solid, spaced, state.fused,
                       tuple(state.trace))


class _Ctx:
    """What a rule body may do besides rewriting letters."""

    def __init__(self, state: RuleState, next_pos: int):
        self.state = state
        self.next_pos = next_pos
        self.branches: list[RuleState] = []
        self.stored: list[RuleState] = []
        self.skipped = False
        self.completed = False

    def branch(self) -> None:
        # save the untouched pair; it continues from the next rule
        self.branches.append(self.state.copy())

    def store(self) -> None:
        # save the pair as a finished alternative, as it stands
        self.stored.append(self.state.copy())

    def skip_next(self) -> None:
        self.skipped = True

    def complete(self) -> None:
        self.completed = True


class _NullCtx:
    """Rule-body hook that ignores branching; used on single words."""

    def branch(self):
        pass

    def store(self):
        pass

    def skip_next(self):
        pass

    def complete(self):
        pass


def _apply(rule, state: RuleState, ctx: _Ctx) -> RuleOutcome:
    m = rule.condition(state)
    if m is None:
        return RuleOutcome.NOT_FIRED
    before = (state.x_render(), state.y_render())
    rule.transform(state, m, ctx)
    changed = (state.x_render(), state.y_render()) != before
    fired = changed or ctx.skipped or ctx.completed or bool(ctx.stored)
    if not fired:
        ctx.branches.clear()
        return RuleOutcome.NOT_FIRED
    state.trace.append(rule.id)
    if ctx.skipped:
        return RuleOutcome.SKIP_NEXT
    if ctx.branches:
        return RuleOutcome.FIRED_AND_BRANCHED
    return RuleOutcome.FIRED


def apply_rule(rule_id: int, state: RuleState, out: WordList) -> RuleOutcome:
    """Apply one rule to a state; branch snapshots land in ``out``.

    A non-matching rule is a no-op.
    """
    rule = _rules.RULES_BY_ID[rule_id]
    ctx = _Ctx(state, 0)
    outcome = _apply(rule, state, ctx)
    for snap in ctx.branches + ctx.stored:
        out.add(_finish(snap))
    return outcome


_MAX_BRANCHES = 10_000


def sandhi_process(first, second) -> WordList:
    """Join two words, returning every alternative the rules allow.

    Output order: the fully transformed mainline, then the optional-rule
    branches in the order they forked.  Each alternative renders solid
    (the words written together) and, unless a vowel merger fused the
    words, also with the junction space kept.
    """
    flags: dict = {}
    state = RuleState.from_words(first, second, flags)
    queue: deque[tuple[RuleState, int]] = deque([(state, 0)])
    out = WordList()
    rules = _rules.RULES
    n_done = 0
    while queue:
        st, pos = queue.popleft()
        n_done += 1
        if n_done > _MAX_BRANCHES:
            raise RuntimeError("branch explosion; giving up")
        while pos < len(rules):
            ctx = _Ctx(st, pos + 1)
            outcome = _apply(rules[pos], st, ctx)
            for snap in ctx.branches:
                queue.append((snap, pos + 1))
            for snap in ctx.stored:
                queue.append((snap, len(rules)))
            if ctx.completed:
                break
            pos += 2 if outcome is RuleOutcome.SKIP_NEXT else 1
        out.add(_finish(st))
    return out


def internal_sandhi(word: str) -> str:
    """One left-to-right pass of the word-internal rules over a single word.

    Covers the in-word scans (anusvara before a non-nasal consonant,
    retroflexion of n, duplication after r/h and after a short vowel,
    softening/hardening inside clusters, degemination); the duplications
    and the degemination apply unconditionally here.
    """
    slots = [Slot(p, "x") for p in tokenize(word)]
    if not slots:
        raise EmptyWord("word must be non-empty")
    ctx = _NullCtx()
    for rule_id in sorted(_rules.INTERNAL_SCANS):
        _rules.INTERNAL_SCANS[rule_id](slots, ctx)
    return render((sl.ph for sl in slots))
