import random

import pytest

from sandhisearch.corpus import DecodeError, MultiPatternSearcher, ingest, search
from sandhisearch.phonemes import INVENTORY
from sandhisearch.translit import iast_to_deva


class TestIngest:
    def test_iast_passthrough(self):
        c = ingest("rāmo gacchati\n", "iast")
        assert c.text == "rāmo gacchati\n"
        assert c.line_index == [0]

    def test_line_index(self):
        c = ingest("a\nbb\n\nccc", "iast")
        assert c.line_index == [0, 2, 5, 6]
        assert c.line_of(0) == 1
        assert c.line_of(3) == 2
        assert c.line_of(6) == 4

    def test_devanagari_converted(self):
        c = ingest(iast_to_deva("rāmo gacchati"), "devanagari")
        assert c.text == "rāmo gacchati"

    def test_invalid_utf8(self):
        with pytest.raises(DecodeError):
            ingest(b"\xff\xfe", "iast")

    def test_bytes_accepted(self):
        assert ingest("rāma".encode(), "iast").text == "rāma"


class TestMultiPatternSearcher:
    def test_overlapping_and_sorted(self):
        s = MultiPatternSearcher(["ana", "nan", "a"])
        hits = list(s.scan("banana"))
        assert hits == sorted(hits, key=lambda h: h[0])
        assert (1, "ana") in hits and (3, "ana") in hits
        assert (2, "nan") in hits

    def test_dedup_by_span(self):
        s = MultiPatternSearcher(["aa", "aa"])
        assert list(s.scan("aaa")) == [(0, "aa"), (1, "aa")]


class TestSearch:
    def test_transformed_visarga_word(self):
        c = ingest("tadā asamṛddhir bhavati loke\n", "iast")
        matches = search("asamṛddhiḥ", c)
        assert any(m.surface == "asamṛddhir" for m in matches)

    def test_o_for_visarga(self):
        c = ingest("rāmo gacchati", "iast")
        matches = search("rāmaḥ", c)
        assert matches and matches[0].surface == "rāmo"
        assert matches[0].offset == 0 and matches[0].line == 1

    def test_absent_word(self):
        c = ingest("rāmo gacchati", "iast")
        assert search("phalam", c) == []

    def test_substring_invariant(self):
        rng = random.Random(7)
        pool = sorted(INVENTORY)[:40]
        words = ["".join(rng.choice(pool) for _ in range(rng.randint(2, 6)))
                 for _ in range(200)]
        text = " ".join(words) + "\nasamṛddhis tathā bhavati\n"
        c = ingest(text, "iast")
        matches = search("asamṛddhiḥ", c)
        assert matches
        for m in matches:
            assert c.text[m.offset:m.offset + m.length] == m.surface

    def test_superset_of_naive(self):
        # every plain occurrence is reported, even run into its neighbours
        c = ingest("xtatx tat atat\n".replace("x", "k"), "iast")
        naive = set()
        start = c.text.find("tat")
        while start != -1:
            naive.add(start)
            start = c.text.find("tat", start + 1)
        got = {m.offset for m in search("tat", c) if m.surface == "tat"}
        assert naive <= got

    def test_strict_boundaries(self):
        c = ingest("ktatk tat\n", "iast")
        loose = {m.offset for m in search("tat", c) if m.surface == "tat"}
        strict = {m.offset for m in search("tat", c, strict=True) if m.surface == "tat"}
        assert 1 in loose
        assert strict == {6}

    def test_adjacency_respects_generated_contexts(self):
        # "tad" is only valid before soft sounds: accepted before g, not k
        c = ingest("tadgacchati tadkaroti\n", "iast")
        offsets = {m.offset for m in search("tat", c) if m.surface == "tad"}
        assert 0 in offsets
        assert 12 not in offsets

    def test_fused_form_matches_inside_words(self):
        c = ingest("devālayaṃ paśyati", "iast")
        matches = search("deva", c)
        assert any(m.surface == "devā" and m.kind == "fused" for m in matches)

    def test_lines_reported(self):
        c = ingest("x\nyz\nrāmo gacchati\n".replace("x", "ka").replace("yz", "vanam"), "iast")
        m = [m for m in search("rāmaḥ", c) if m.surface == "rāmo"][0]
        assert m.line == 3
