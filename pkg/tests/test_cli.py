import json

import pytest

from sandhisearch.cli import main
from sandhisearch.translit import iast_to_deva


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestJoin:
    def test_join(self, capsys):
        code, out, _ = run_cli(capsys, "join", "deva", "ālaya")
        assert code == 0
        assert out.splitlines() == ["devālaya"]

    def test_join_alternatives_one_per_line(self, capsys):
        code, out, _ = run_cli(capsys, "join", "rāmaḥ", "pibati")
        assert code == 0
        assert out.splitlines() == [
            "rāmaΥ pibati", "rāmaΥpibati", "rāmaḥ pibati", "rāmaḥpibati"]

    def test_empty_word_exit_1(self, capsys):
        code, _, err = run_cli(capsys, "join", "", "x")
        assert code == 1
        assert "EmptyWord" in err

    def test_unknown_grapheme_diagnostic(self, capsys):
        code, _, err = run_cli(capsys, "join", "deva", "q")
        assert code == 1
        assert "position 0" in err

    def test_records(self, capsys):
        code, out, _ = run_cli(capsys, "join", "--output", "records", "te", "api")
        assert code == 0
        recs = [json.loads(line) for line in out.splitlines()]
        assert recs[0]["iast"] == "te 'pi"
        assert all("rules" in r for r in recs)


class TestRules:
    def test_rule_seven_line(self, capsys):
        code, out, _ = run_cli(capsys, "rules")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 66
        assert lines[6] == "7  6.1.101  savarṇadīrgha  obligatory"
        assert lines[42] == "43  8.3.37  -  optional"


class TestForms:
    def test_sorted_and_stable(self, capsys):
        code, out1, _ = run_cli(capsys, "forms", "tat")
        assert code == 0
        code, out2, _ = run_cli(capsys, "forms", "tat")
        assert out1 == out2
        surfaces = [line.split("\t")[0] for line in out1.splitlines()]
        assert surfaces == sorted(surfaces)
        assert "tad" in surfaces


class TestSearch:
    def test_file(self, capsys, tmp_path):
        f = tmp_path / "c.txt"
        f.write_text("purā rāmo gacchati\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "search", "rāmaḥ", str(f))
        assert code == 0
        fields = out.splitlines()[0].split("\t")
        assert fields == ["5", "4", "1", "rāmo", "right-context"]

    def test_stdin(self, capsys, monkeypatch):
        import io
        import sys

        monkeypatch.setattr(sys, "stdin",
                            type("S", (), {"buffer": io.BytesIO("rāmo gacchati".encode())})())
        code, out, _ = run_cli(capsys, "search", "rāmaḥ", "-")
        assert code == 0
        assert "rāmo" in out

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "search", "tat", str(tmp_path / "nope.txt"))
        assert code == 1
        assert "cannot read" in err

    def test_devanagari_equals_transliterate_then_search(self, capsys, tmp_path):
        text = "rāmo gacchati vanaṃ punaḥ\n"
        iast_file = tmp_path / "i.txt"
        iast_file.write_text(text, encoding="utf-8")
        deva_file = tmp_path / "d.txt"
        deva_file.write_text(iast_to_deva(text), encoding="utf-8")
        _, out_iast, _ = run_cli(capsys, "search", "rāmaḥ", str(iast_file))
        _, out_deva, _ = run_cli(capsys, "search", iast_to_deva("rāmaḥ"),
                                 str(deva_file), "--script", "devanagari")
        assert out_deva == out_iast

    def test_strict_flag(self, capsys, tmp_path):
        f = tmp_path / "c.txt"
        f.write_text("ktatk tat\n", encoding="utf-8")
        code, loose, _ = run_cli(capsys, "search", "tat", str(f))
        code, strict, _ = run_cli(capsys, "search", "tat", str(f), "--strict-boundaries")
        assert len(strict.splitlines()) < len(loose.splitlines())


class TestUsage:
    def test_no_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_bad_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["join", "a", "b", "--script", "klingon"])
        assert exc.value.code == 2
