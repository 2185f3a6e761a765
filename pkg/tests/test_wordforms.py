import pytest

from sandhisearch.engine import EmptyWord
from sandhisearch.wordforms import (
    ContextUnrecoverable,
    generate_all_word_forms,
    strip_context,
)


class TestGenerateAllWordForms:
    def test_word_itself_always_present(self):
        for z in ("deva", "tat", "phalam", "asamṛddhiḥ"):
            forms = generate_all_word_forms(z)
            assert z in forms
            assert forms.get(z).kind == "exact"

    def test_visarga_word_r_and_s_shapes(self):
        forms = generate_all_word_forms("asamṛddhiḥ")
        assert "asamṛddhir" in forms
        assert "asamṛddhis" in forms
        fused_a = [s for s in forms.surfaces() if s.startswith("ā")]
        assert fused_a, "a long-a initial fused shape is expected"
        assert "āsamṛddhiḥ" in forms
        assert forms.get("āsamṛddhiḥ").kind == "fused"

    def test_final_t_shapes(self):
        forms = generate_all_word_forms("tat")
        for shape in ("tad", "tac", "tan"):
            assert shape in forms
            assert forms.get(shape).kind == "right-context"

    def test_final_m_shapes(self):
        surfaces = set(generate_all_word_forms("phalam").surfaces())
        assert {"phalam", "phalaṃ"} <= surfaces

    def test_finite_and_bounded(self):
        for z in ("deva", "tat", "asamṛddhiḥ"):
            forms = generate_all_word_forms(z)
            assert 1 <= len(forms) <= 1000

    def test_records_are_sorted_and_complete(self):
        forms = generate_all_word_forms("tat")
        records = forms.to_records()
        assert [r["surface"] for r in records] == sorted(r["surface"] for r in records)
        for r in records:
            assert r["kind"] in ("exact", "right-context", "left-context", "fused")

    def test_left_context_shape(self):
        # after e/o the initial a is written as the avagraha
        forms = generate_all_word_forms("api")
        assert "'pi" in forms
        assert forms.get("'pi").kind == "left-context"

    def test_empty_word(self):
        with pytest.raises(EmptyWord):
            generate_all_word_forms("")

    def test_adjacency_sets_recorded(self):
        forms = generate_all_word_forms("tat")
        tad = forms.get("tad")
        # tad was produced before soft sounds, never before hard ones
        assert "g" in tad.right_ok
        assert "k" not in tad.right_ok


class TestStripContext:
    def test_right_solid(self):
        assert strip_context("asamṛddhirg", "g", "right") == "asamṛddhir"

    def test_right_spaced(self):
        assert strip_context("asamṛddhir g", "g", "right") == "asamṛddhir"

    def test_right_vowel(self):
        assert strip_context("itya", "a", "right") == "ity"

    def test_no_rule_case(self):
        assert strip_context("phalamk", "k", "right") == "phalam"

    def test_left(self):
        assert strip_context("gtat", "g", "left") == "tat"

    def test_unrecoverable_fused(self):
        with pytest.raises(ContextUnrecoverable):
            strip_context("devā", "a", "right")

    def test_bad_side(self):
        with pytest.raises(ValueError):
            strip_context("deva", "a", "up")
