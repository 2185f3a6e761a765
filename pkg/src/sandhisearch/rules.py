"""The codified euphonic-conjunction rules, in evaluation order.

Rules 1-18 come from the first seven-and-a-quarter chapters of the
Astadhyayi (plus 8.2.66, which must act early) and are evaluated in
reverse sutra order; rules 19-66 are the remaining 8.2-8.4 rules in
sutra order, with exception rules hoisted ahead of the rules they
override (41-51 before 52, 34 before 35).  Evaluation is a single
top-to-bottom pass per word pair, so the listing order below *is* the
evaluation order.

Each rule is a condition over the junction variables (x = last letter of
the first word, u = the letter before it, y = first letter of the second
word, w = the letter after it) plus a rewrite.  Optional rules save the
untouched pair as an alternative before rewriting.  A few rules scan
inside the words as well; those run at their own position in the pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .phonemes import INVENTORY, mutate

__all__ = ["SandhiRule", "RULES", "RULES_BY_ID", "rule_order", "catalogue"]

PH = INVENTORY

HARD = (36, 37, 23, 24, 25)           # columns 1-2 and the sibilants
SIBILANT = (23, 24, 25)
MUTES_NON_NASAL = (36, 37, 38, 39)
SOFT_FOLLOW = (0, 1, 38, 39, 26, 27)  # vowel, semivowel, columns 3-4, h, nasal

PREPOSITIONS = ("pra", "ava", "apa", "upa", "parā")


def _has(p, *cats) -> bool:
    return p is not None and any(c in p.categories for c in cats)


def _at(p, cat, idx) -> bool:
    return p is not None and p.index_in(cat) == idx


def _varga_row(p):
    if p is None:
        return None
    for r in MUTES_NON_NASAL:
        if r in p.categories:
            return r
    return None


@dataclass(frozen=True)
class SandhiRule:
    id: int
    sutra: str
    set_no: int
    optional: bool
    name: str | None
    condition: Callable
    transform: Callable


# ---------------------------------------------------------------------------
# boundary rules
# ---------------------------------------------------------------------------

def _c01(s):
    return {} if _has(s.x, 44) else None


def _t01(s, m, ctx):
    # visarga at the end of the first word -> s
    s.replace_x(mutate(s.x, 24, 0))


def _c02(s):
    return {} if _has(s.x, 24) else None


def _t02(s, m, ctx):
    # final s -> the intermediary particle ru, written #
    s.replace_x(mutate(s.x, 46, 0))


def _c03(s):
    # the o of go before a vowel
    if _at(s.x, 15, 0) and _at(s.u, 31, 3) and _has(s.y, 0):
        return {}
    return None


def _t03(s, m, ctx):
    ctx.branch()
    s.replace_x(mutate(s.x, 19, 0))  # expands to a v a


def _c04(s):
    if (_has(s.x, 46) or _has(s.x, 21)) and _has(s.u, 4) \
            and _has(s.y, 1, 26, 27, 38, 39):
        return {}
    return None


def _t04(s, m, ctx):
    # ru/r after a, before a soft sound: becomes u and moves to the second word
    s.replace_x(mutate(s.x, 6, s.u.index_in(4)))
    s.shift_x_to_y()


def _c05(s):
    if (_has(s.x, 46) or _has(s.x, 21)) and _has(s.u, 4) and _has(s.y, 4):
        return {}
    return None


_t05 = _t04


def _c06(s):
    return {} if _has(s.x, 13) and _has(s.y, 4) else None


def _t06(s, m, ctx):
    # e/o stays, the following a is marked with the avagraha
    s.replace_y(mutate(s.y, 45, 0))


def _simple_vowel_idx(p):
    if p is None:
        return None
    i = p.index_in(8)
    return i if i is not None else p.index_in(9)


def _c07(s):
    xi, yi = _simple_vowel_idx(s.x), _simple_vowel_idx(s.y)
    if xi is not None and xi == yi:
        return {"idx": xi}
    return None


def _t07(s, m, ctx):
    # like simple vowels coalesce into the long one; the pair is done
    s.mark_merger()
    s.delete_y()
    s.replace_x(mutate(s.x, 9, m["idx"]))
    ctx.complete()


def _c08(s):
    if _has(s.x, 4, 5) and s.y_render() == "om":
        return {}
    return None


def _t08(s, m, ctx):
    s.mark_merger()
    s.delete_x()
    ctx.complete()


def _c09(s):
    if not _has(s.x, 4, 5):
        return None
    y, w = s.y, s.w
    ystr = s.y_render()
    if _at(y, 13, 1):  # e
        if ystr.startswith(("et", "edhat")):
            return {"idx": y.index_in(13)}
        if s.x_render() == "pra" and ystr.startswith(("eṣ", "eṣy")):
            return {"idx": y.index_in(13)}
    elif _at(y, 7, 0):  # ū
        if _has(w, 26):
            return {"idx": y.index_in(7)}
        if s.x_render() == "pra" and ystr.startswith("ūḍh"):
            return {"idx": y.index_in(7)}
    elif s.x_render() == "sva" and _at(y, 7, 1) and _has(w, 21):  # īr of sva+īr
        return {"idx": y.index_in(7)}
    return None


def _t09(s, m, ctx):
    s.mark_merger()
    s.delete_x()
    s.replace_y(mutate(s.y, 14, m["idx"]))
    ctx.complete()


def _c10(s):
    if s.x_render() in PREPOSITIONS and _has(s.y, 13):
        return {}
    return None


def _t10(s, m, ctx):
    s.mark_merger()
    s.delete_x()
    ctx.complete()


def _c11(s):
    if s.x_render() in PREPOSITIONS and _has(s.y, 12):
        return {"idx": s.y.index_in(12)}
    if s.x_render() in ("vatsara", "kambala", "vasana", "daśa", "ṛṇa") \
            and _at(s.y, 12, 0) and s.y_render() == "ṛṇa":
        return {"idx": 0}
    return None


def _t11(s, m, ctx):
    s.mark_merger()
    s.delete_x()
    s.replace_y(mutate(s.y, 17, m["idx"]))  # expands to ār / āl
    ctx.complete()


def _c12(s):
    if _has(s.x, 4, 5) and _has(s.y, 13, 14):
        y = s.y
        idx = y.index_in(13) if y.has(13) else y.index_in(14)
        return {"idx": idx}
    return None


def _t12(s, m, ctx):
    s.mark_merger()
    s.delete_x()
    s.replace_y(mutate(s.y, 14, m["idx"]))
    ctx.complete()


def _c13(s):
    if _has(s.x, 4, 5) and _has(s.y, 10, 11):
        y = s.y
        idx = y.index_in(10) if y.has(10) else y.index_in(11)
        return {"idx": idx}
    return None


def _t13(s, m, ctx):
    s.mark_merger()
    s.delete_x()
    s.replace_y(mutate(s.y, 16, m["idx"]))  # o / e / ar / al
    ctx.complete()


def _c14(s):
    if _has(s.x, 15) and _has(s.y, 0):
        return {"idx": s.x.index_in(15)}
    return None


def _t14(s, m, ctx):
    s.replace_x(mutate(s.x, 18, m["idx"]))  # av / āv / ay / āy


def _c15(s):
    if _has(s.x, 10, 11) and _has(s.y, 0):
        x = s.x
        idx = x.index_in(10) if x.has(10) else x.index_in(11)
        return {"idx": idx}
    return None


def _t15(s, m, ctx):
    s.replace_x(mutate(s.x, 20, m["idx"]))


def _c16(s):
    if _has(s.x, 8) and _at(s.y, 40, 0):
        return {}
    return None


def _t16(s, m, ctx):
    # t is inserted before ch
    s.append_x(mutate(s.y, 34, s.y.index_in(40)))


def _c17(s):
    if s.x_render() in ("ā", "mā") and _at(s.y, 40, 0):
        return {}
    return None


_t17 = _t16


def _c18(s):
    if _has(s.x, 9) and _at(s.y, 40, 0):
        return {}
    return None


_t18 = _t16


def _c19(s):
    return {} if _has(s.x, 2) and _has(s.u, 2) else None


def _t19(s, m, ctx):
    s.delete_x()


def _c20(s):
    vr = _varga_row(s.x)
    return {"idx": s.x.index_in(vr)} if vr is not None else None


def _t20(s, m, ctx):
    s.replace_x(mutate(s.x, 38, m["idx"]))


def _c21(s):
    if s.x_render() in ("pum", "puṃ") and _has(s.y, 36, 37) \
            and _has(s.w, 0, 1, 27):
        return {}
    return None


def _t21(s, m, ctx):
    # final nasal -> anusvara on the vowel, plus the ru particle
    s.replace_x(PH["ṃ"])
    s.append_x(PH["#"])


def _c22(s):
    if s.x_render() != "prasān" and _at(s.x, 27, 2) and _has(s.y, 40) \
            and _has(s.w, 0, 1, 27):
        return {}
    return None


_t22 = _t21


def _c23(s):
    if s.x_render() == "nṝn" and _at(s.y, 35, 0):
        return {}
    return None


def _t23(s, m, ctx):
    ctx.branch()
    s.replace_x(PH["ṃ"])
    s.append_x(PH["#"])


def _c24(s):
    if (_has(s.x, 46) or _has(s.x, 21)) and _has(s.y, 21):
        return {}
    return None


def _t24(s, m, ctx):
    s.delete_x()
    u = s.x  # the letter that now ends the first word
    if _has(u, 6):
        s.replace_x(mutate(u, 7, u.index_in(6)))
    elif _has(u, 4):
        s.replace_x(mutate(u, 5, 0))


def _c25(s):
    if (_has(s.x, 46) or _has(s.x, 21)) and _has(s.y, *HARD):
        return {}
    return None


def _t25(s, m, ctx):
    s.replace_x(PH["ḥ"])


def _c26(s):
    if not (_has(s.x, 46) or _has(s.x, 21)) or not _has(s.y, *SOFT_FOLLOW):
        return None
    rest = s.X[:-1]
    rest_str = "".join(sl.ph.grapheme for sl in rest)
    if rest_str in ("bho", "bhago", "agho") or (rest and rest[-1].ph.grapheme in ("a", "ā")):
        return {}
    return None


def _t26(s, m, ctx):
    s.replace_x(mutate(s.x, 20, 1))  # y


def _c27(s):
    if s.x is not None and s.x.index_in(20) in (0, 1) and _has(s.u, 4, 5) \
            and _has(s.y, *SOFT_FOLLOW):
        return {}
    return None


def _t27(s, m, ctx):
    s.delete_x()


def _c28(s):
    if _at(s.x, 20, 1) and _at(s.u, 13, 0) and _has(s.y, *SOFT_FOLLOW):
        return {}
    return None


_t28 = _t27


def _c29(s):
    if s.x is not None and s.x.index_in(20) in (0, 1) and _has(s.u, 4, 5) \
            and s.y_render() == "u":
        return {}
    return None


_t29 = _t27


def _c30(s):
    if _at(s.x, 20, 1) and _has(s.y, 1, 2):
        return {}
    return None


_t30 = _t27


def _c31(s):
    if not (_has(s.x, 30) and _has(s.y, 26)):
        return None
    if _has(s.w, 30):
        return {"mode": "anusvara"}
    if _has(s.w, 20):
        return {"mode": "nasal", "idx": s.w.index_in(20)}
    return None


def _t31(s, m, ctx):
    ctx.branch()
    if m["mode"] == "anusvara":
        s.replace_x(PH["ṃ"])
    else:
        s.replace_x(mutate(s.x, 22, m["idx"]))


def _c32(s):
    if _has(s.x, 30) and _has(s.y, 26) and _at(s.w, 27, 2):
        return {}
    return None


def _t32(s, m, ctx):
    ctx.branch()
    s.replace_x(s.w)  # the m copies the following n


# --- word-internal scans ---------------------------------------------------

JHAL = (36, 37, 38, 39, 23, 24, 25, 26)


def _scan_33(slots, ctx):
    # n before a non-nasal consonant, inside the word -> anusvara
    for i in range(len(slots) - 1):
        if slots[i].ph.has(29) and _has(slots[i + 1].ph, *JHAL):
            slots[i] = slots[i]._replace(ph=PH["ṃ"])


def _c33(s):
    return {}


def _t33(s, m, ctx):
    _scan_33(s.X, ctx)
    _scan_33(s.Y, ctx)


def _c34(s):
    if s.x_render() in ("sam", "sām") \
            and s.y_render().startswith(("rāj", "rāṭ", "rāñ")):
        return {}
    return None


def _t34(s, m, ctx):
    ctx.skip_next()  # the m stays; the anusvara rule below is debarred


def _c35(s):
    return {} if _has(s.x, 30) and _has(s.y, 2) else None


def _t35(s, m, ctx):
    s.replace_x(PH["ṃ"])


def _c36(s):
    if _has(s.x, 28) and _has(s.y, *SIBILANT):
        return {"idx": s.x.index_in(28)}
    return None


def _t36(s, m, ctx):
    # k after the guttural nasal, ṭ after the cerebral one
    ctx.branch()
    s.append_x(mutate(s.x, 36, m["idx"]))


def _c37(s):
    if _at(s.x, 38, 1) and _has(s.y, 24):
        return {}
    return None


def _t37(s, m, ctx):
    ctx.branch()
    s.append_x(mutate(s.x, 34, s.x.index_in(38)))  # dh


def _c38(s):
    if _at(s.x, 27, 2) and _has(s.y, 24):
        return {}
    return None


def _t38(s, m, ctx):
    ctx.branch()
    s.append_x(mutate(s.x, 39, s.x.index_in(27)))  # dh


def _c39(s):
    if _at(s.x, 27, 2) and _has(s.y, 25):
        return {}
    return None


def _t39(s, m, ctx):
    ctx.branch()
    s.append_x(mutate(s.x, 36, s.x.index_in(27)))  # t


def _c40(s):
    if s.x is not None and s.x.index_in(27) in (0, 1, 2) and _has(s.u, 8) \
            and _has(s.y, 0):
        return {}
    return None


def _t40(s, m, ctx):
    s.append_x(s.x)  # the nasal is doubled


def _c41(s):
    if _has(s.x, 44) and _has(s.y, *HARD) and _has(s.w, *SIBILANT):
        return {}
    return None


def _t41(s, m, ctx):
    ctx.store()  # the visarga form is kept as an alternative as it stands


def _c42(s):
    if _has(s.x, 44) and _has(s.y, *SIBILANT):
        return {}
    return None


def _t42(s, m, ctx):
    ctx.branch()
    s.delete_x()


def _c43(s):
    if _has(s.x, 44) and _has(s.y, 41):
        return {"idx": s.y.index_in(41)}
    return None


def _t43(s, m, ctx):
    ctx.branch()
    s.replace_x(mutate(s.x, 42, m["idx"]))
    s.flags["kupvoh_fired"] = True


def _c44(s):
    # "ka" only as the whole word: prefix matching would catch every ka- word
    if _has(s.x, 44) and (s.y_render().startswith(("pāśa", "kalpa", "kāmya"))
                          or s.y_render() == "ka"):
        return {}
    return None


def _t44(s, m, ctx):
    s.replace_x(PH["s"])


def _c45(s):
    if _c44(s) is not None and _has(s.u, 6):
        return {}
    return None


def _t45(s, m, ctx):
    s.replace_x(PH["ṣ"])


def _c46(s):
    if s.x_render() in ("namaḥ", "puraḥ") and _has(s.y, 41):
        return {}
    return None


def _t46(s, m, ctx):
    ctx.branch()
    s.replace_x(PH["s"])


def _c47(s):
    if s.x_render() in ("niḥ", "duḥ", "bahiḥ", "āviḥ", "catuḥ", "prāduḥ") \
            and _has(s.y, 41):
        return {}
    return None


def _t47(s, m, ctx):
    s.replace_x(PH["ṣ"])


def _c48(s):
    if s.x_render() == "tiraḥ" and _has(s.y, 41):
        return {}
    return None


_t48 = _t46


def _c49(s):
    if s.x_render() in ("dviḥ", "triḥ", "catuḥ") and _has(s.y, 41):
        return {}
    return None


def _t49(s, m, ctx):
    ctx.branch()
    s.replace_x(PH["ṣ"])


def _c50(s):
    if _has(s.x, 44) and _has(s.u, 4) and s.y_render().startswith(
            ("kṛ", "kar", "kur", "kam", "kām", "kaṃsa", "kumbha", "pātra", "kuśā", "karṇī")):
        return {}
    return None


def _t50(s, m, ctx):
    s.replace_x(PH["s"])


def _c51(s):
    if s.x_render() in ("adhaḥ", "śiraḥ") and s.y_render().startswith("pad"):
        return {}
    return None


_t51 = _t46


def _c52(s):
    if not s.flags.get("kupvoh_fired") and _has(s.x, 44) and _has(s.y, *HARD):
        return {}
    return None


def _t52(s, m, ctx):
    s.replace_x(PH["s"])


def _retroflex_trigger(p):
    # ṛ, ṝ, r or ṣ
    i = p.index_in(12)
    return (i is not None and i != 2) or p.has(21) or p.has(23)


def _retroflex_blocker(p):
    return p.has(32) or p.has(33) or p.has(34) or p.index_in(20) == 3 \
        or p.has(24) or p.has(25)


def _scan_53(slots, ctx):
    for j in range(len(slots) - 1):  # never the last letter of the word
        if slots[j].ph.index_in(27) != 2:
            continue
        for i in range(j - 1, -1, -1):
            q = slots[i].ph
            if _retroflex_trigger(q):
                slots[j] = slots[j]._replace(ph=PH["ṇ"])
                break
            if _retroflex_blocker(q):
                break


def _c53(s):
    return {}


def _t53(s, m, ctx):
    _scan_53(s.X, ctx)
    _scan_53(s.Y, ctx)


def _c54(s):
    x, y = s.x, s.y
    if _has(x, 32) and x.index_in(32) != 5 and _has(y, 34):
        return {"side": "y", "idx": y.index_in(34)}
    if _has(x, 34) and _has(y, 32):
        return {"side": "x", "idx": x.index_in(34)}
    return None


def _t54(s, m, ctx):
    if m["side"] == "y":
        s.replace_y(mutate(s.y, 32, m["idx"]))
    else:
        s.replace_x(mutate(s.x, 32, m["idx"]))


def _c55(s):
    x, y = s.x, s.y
    # dental before a cerebral other than ṣ
    if _has(x, 34) and _has(y, 33) and y.index_in(33) != 5:
        return {"side": "x", "idx": x.index_in(34)}
    if _at(x, 33, 0) and s.y_render().startswith(("nām", "navat", "nagar")):
        return {"side": "y", "idx": y.index_in(34)}
    if _has(x, 33) and _has(y, 34):
        return {"side": "y", "idx": y.index_in(34)}
    return None


def _t55(s, m, ctx):
    if m["side"] == "x":
        s.replace_x(mutate(s.x, 33, m["idx"]))
    else:
        s.replace_y(mutate(s.y, 33, m["idx"]))


def _c56(s):
    vr = _varga_row(s.x)
    if vr is None or not _has(s.y, 27):
        return None
    forced = s.y_render().startswith(("maya", "mātra"))
    return {"idx": s.x.index_in(vr), "forced": forced}


def _t56(s, m, ctx):
    if not m["forced"]:
        ctx.branch()
    s.replace_x(mutate(s.x, 27, m["idx"]))


def _scan_57(slots, ctx):
    i = 0
    while i + 2 < len(slots):
        u, x, y = slots[i].ph, slots[i + 1].ph, slots[i + 2].ph
        if (x.has(21) or x.has(26)) and y.has(2) and not y.has(26) and u.has(0):
            ctx.branch()
            slots.insert(i + 2, slots[i + 2]._replace(ph=y))
        i += 1


def _c57(s):
    return {}


def _t57(s, m, ctx):
    _scan_57(s.X, ctx)
    _scan_57(s.Y, ctx)


def _scan_58(slots, ctx):
    i = 0
    while i + 2 < len(slots):
        x, y, w = slots[i].ph, slots[i + 1].ph, slots[i + 2].ph
        if x.has(8) and y.has(2) and not y.has(26) and _has(w, 1, 2, 3):
            ctx.branch()
            slots.insert(i + 1, slots[i + 1]._replace(ph=y))
            # skip the freshly made pair so one trigger doubles once
        i += 1


def _c58(s):
    return {}


def _t58(s, m, ctx):
    _scan_58(s.X, ctx)
    _scan_58(s.Y, ctx)


def _soften(p):
    """Column-3 replacement of a mute, sibilant or h, None if inapplicable."""
    vr = _varga_row(p)
    if vr is not None:
        return mutate(p, 38, p.index_in(vr))
    if p.has(26):
        return mutate(p, 38, 0)
    if p.has(23):
        return mutate(p, 38, 1)
    if p.has(24):
        return mutate(p, 38, 2)
    if p.has(25):
        return mutate(p, 38, 3)
    return None


def _scan_59(slots, ctx):
    for i in range(len(slots) - 1):
        if _has(slots[i + 1].ph, 38, 39):
            new = _soften(slots[i].ph)
            if new is not None and new != slots[i].ph:
                slots[i] = slots[i]._replace(ph=new)


def _c59(s):
    return {}


def _t59(s, m, ctx):
    _scan_59(s.X, ctx)
    _scan_59(s.Y, ctx)


def _scan_60(slots, ctx):
    # before a hard letter a non-nasal mute goes to column 1; a sibilant is
    # already hard and stays put
    for i in range(len(slots) - 1):
        if _has(slots[i + 1].ph, *HARD):
            vr = _varga_row(slots[i].ph)
            if vr is not None:
                new = mutate(slots[i].ph, 36, slots[i].ph.index_in(vr))
                if new != slots[i].ph:
                    slots[i] = slots[i]._replace(ph=new)


def _c60(s):
    return {}


def _t60(s, m, ctx):
    vr = _varga_row(s.x)
    if vr is not None and _has(s.y, *HARD):
        s.replace_x(mutate(s.x, 36, s.x.index_in(vr)))
    _scan_60(s.X, ctx)
    _scan_60(s.Y, ctx)


def _c61(s):
    if not _has(s.x, 43):
        return None
    if _has(s.y, 20):
        return {"cat": 22, "idx": s.y.index_in(20)}
    vr = _varga_row(s.y)
    if vr is not None:
        return {"cat": 27, "idx": s.y.index_in(vr)}
    return None


def _t61(s, m, ctx):
    s.replace_x(mutate(s.x, m["cat"], m["idx"]))


def _c62(s):
    if not _at(s.y, 20, 3):  # following letter is l
        return None
    if _at(s.x, 27, 2):  # n -> the nasalized l
        return {"nasal": True}
    if _has(s.x, 34) and s.x.index_in(34) not in (4, 5):
        return {"nasal": False}
    return None


def _t62(s, m, ctx):
    if m["nasal"]:
        s.replace_x(mutate(s.x, 22, s.y.index_in(20)))
    else:
        s.replace_x(s.y)


def _c63(s):
    vr = _varga_row(s.x)
    if vr is not None and _has(s.y, 26):
        return {"idx": s.x.index_in(vr)}
    return None


def _t63(s, m, ctx):
    ctx.branch()
    s.replace_y(mutate(s.y, 39, m["idx"]))


def _c64(s):
    if _varga_row(s.x) is not None and _has(s.y, 25) and _has(s.w, 0, 1, 27):
        return {}
    return None


def _t64(s, m, ctx):
    ctx.branch()
    s.replace_y(mutate(s.y, 40, s.y.index_in(25)))  # ś -> ch


def _c65(s):
    if _has(s.u, 2) and _has(s.x, 20, 27) and s.y is not None \
            and s.y == s.x:
        return {}
    return None


def _t65(s, m, ctx):
    s.delete_x()


def _scan_66(slots, ctx):
    i = 0
    while i + 2 < len(slots):
        u, x, y = slots[i].ph, slots[i + 1].ph, slots[i + 2].ph
        if _has(u, 1, 2) and _has(x, 36, 37, 38, 39, 23, 24, 25) and x == y:
            ctx.branch()
            del slots[i + 1]
            continue  # the shortened triple may qualify again
        i += 1


def _c66(s):
    return {}


def _t66(s, m, ctx):
    _scan_66(s.X, ctx)
    _scan_66(s.Y, ctx)


# ---------------------------------------------------------------------------

def _r(id, sutra, set_no, optional, name, cond, tr):
    return SandhiRule(id, sutra, set_no, optional, name, cond, tr)


RULES: list[SandhiRule] = [
    _r(1, "4.1.2", 1, False, None, _c01, _t01),
    _r(2, "8.2.66", 1, False, "visarga-rutva", _c02, _t02),
    _r(3, "6.1.123", 1, True, "avaṅādeśa", _c03, _t03),
    _r(4, "6.1.114", 1, False, None, _c04, _t04),
    _r(5, "6.1.113", 1, False, "visarga-rutva", _c05, _t05),
    _r(6, "6.1.109", 1, False, "pūrvarūpa", _c06, _t06),
    _r(7, "6.1.101", 1, False, "savarṇadīrgha", _c07, _t07),
    _r(8, "6.1.95", 1, False, "pararūpa", _c08, _t08),
    _r(9, "6.1.89", 1, False, "vṛddhi", _c09, _t09),
    _r(10, "6.1.94", 1, False, "pararūpa", _c10, _t10),
    _r(11, "6.1.91", 1, False, "vṛddhi", _c11, _t11),
    _r(12, "6.1.88", 1, False, "vṛddhi", _c12, _t12),
    _r(13, "6.1.87", 1, False, "guṇa", _c13, _t13),
    _r(14, "6.1.78", 1, False, "ayavāyāvādeśa", _c14, _t14),
    _r(15, "6.1.77", 1, False, "yaṇādeśa", _c15, _t15),
    _r(16, "6.1.73", 1, False, "tugāgama", _c16, _t16),
    _r(17, "6.1.74", 1, False, "tugāgama", _c17, _t17),
    _r(18, "6.1.75", 1, False, "tugāgama", _c18, _t18),
    _r(19, "8.2.23", 2, False, None, _c19, _t19),
    _r(20, "8.2.39", 2, False, "jaśtva", _c20, _t20),
    _r(21, "8.3.6", 2, False, None, _c21, _t21),
    _r(22, "8.3.7", 2, False, "satva", _c22, _t22),
    _r(23, "8.3.10", 2, True, None, _c23, _t23),
    _r(24, "8.3.14", 2, False, None, _c24, _t24),
    _r(25, "8.3.15", 2, False, None, _c25, _t25),
    _r(26, "8.3.17", 2, False, None, _c26, _t26),
    _r(27, "8.3.19", 2, False, None, _c27, _t27),
    _r(28, "8.3.20", 2, False, None, _c28, _t28),
    _r(29, "8.3.21", 2, False, None, _c29, _t29),
    _r(30, "8.3.22", 2, False, None, _c30, _t30),
    _r(31, "8.3.26", 2, True, None, _c31, _t31),
    _r(32, "8.3.27", 2, True, None, _c32, _t32),
    _r(33, "8.3.24", 2, False, None, _c33, _t33),
    _r(34, "8.3.25", 2, False, None, _c34, _t34),
    _r(35, "8.3.23", 2, False, "anusvāra", _c35, _t35),
    _r(36, "8.3.28", 2, True, None, _c36, _t36),
    _r(37, "8.3.29", 2, True, "dhuḍāgama", _c37, _t37),
    _r(38, "8.3.30", 2, True, "dhuḍāgama", _c38, _t38),
    _r(39, "8.3.31", 2, True, "tugāgama", _c39, _t39),
    _r(40, "8.3.32", 2, False, "ṅamuḍāgama", _c40, _t40),
    _r(41, "8.3.35", 2, False, None, _c41, _t41),
    _r(42, "8.3.36", 2, True, None, _c42, _t42),
    _r(43, "8.3.37", 2, True, None, _c43, _t43),
    _r(44, "8.3.38", 2, False, None, _c44, _t44),
    _r(45, "8.3.39", 2, False, None, _c45, _t45),
    _r(46, "8.3.40", 2, True, None, _c46, _t46),
    _r(47, "8.3.41", 2, False, None, _c47, _t47),
    _r(48, "8.3.42", 2, True, None, _c48, _t48),
    _r(49, "8.3.43", 2, True, None, _c49, _t49),
    _r(50, "8.3.46", 2, False, None, _c50, _t50),
    _r(51, "8.3.47", 2, True, None, _c51, _t51),
    _r(52, "8.3.34", 2, False, None, _c52, _t52),
    _r(53, "8.4.1", 2, False, "ṇatva", _c53, _t53),
    _r(54, "8.4.40", 2, False, "ścutva", _c54, _t54),
    _r(55, "8.4.41", 2, False, "ṣṭutva", _c55, _t55),
    _r(56, "8.4.45", 2, True, "anunāsika", _c56, _t56),
    _r(57, "8.4.46", 2, True, None, _c57, _t57),
    _r(58, "8.4.47", 2, True, None, _c58, _t58),
    _r(59, "8.4.53", 2, False, "jaśtva", _c59, _t59),
    _r(60, "8.4.55", 2, False, "cartva", _c60, _t60),
    _r(61, "8.4.58", 2, False, "parasavarṇa", _c61, _t61),
    _r(62, "8.4.60", 2, False, "parasavarṇa", _c62, _t62),
    _r(63, "8.4.62", 2, True, "pūrvasavarṇa", _c63, _t63),
    _r(64, "8.4.63", 2, True, "chatva", _c64, _t64),
    _r(65, "8.4.64", 2, False, None, _c65, _t65),
    _r(66, "8.4.65", 2, True, None, _c66, _t66),
]

RULES_BY_ID: dict[int, SandhiRule] = {r.id: r for r in RULES}

# The rules whose rewrites scan inside a word, keyed by id; used to run the
# word-internal part of the pass on a single word.
INTERNAL_SCANS = {
    33: _scan_33,
    53: _scan_53,
    57: _scan_57,
    58: _scan_58,
    59: _scan_59,
    60: _scan_60,
    66: _scan_66,
}

# Cross-word vowel mergers: once one fires across the junction the two words
# can no longer be written apart.
MERGER_RULE_IDS = frozenset({7, 8, 9, 10, 11, 12, 13})


def rule_order() -> list[int]:
    """Rule ids in evaluation order (the listing order)."""
    return [r.id for r in RULES]


def catalogue() -> list[dict]:
    """The rule table as plain records (id, sutra, set, name, optional)."""
    return [
        {
            "id": r.id,
            "sutra": r.sutra,
            "set": r.set_no,
            "name": r.name,
            "optional": r.optional,
        }
        for r in RULES
    ]
