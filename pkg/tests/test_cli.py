import io

import pytest

from henkin import Equation, Presentation, ceitin_h12, compile_instance, parse_formula
from henkin.cli import main

CANON_TEXT = "aa = a\nbb = b\n"


@pytest.fixture
def canon_file(tmp_path):
    path = tmp_path / "canon.txt"
    path.write_text(CANON_TEXT, encoding="ascii")
    return str(path)


class TestEval:
    def test_true_expr(self, capsys):
        assert main(["eval", "--expr", "forall x . x = x", "--size", "3"]) == 0
        assert capsys.readouterr().out == "true\n"

    def test_false_expr(self, capsys):
        assert main(["eval", "--expr", "exists x . x != x", "--size", "3"]) == 1
        assert capsys.readouterr().out == "false\n"

    def test_naive_engine(self, capsys):
        code = main(["eval", "--naive", "--expr", "H{ forall x ; y(x) } . y = x", "--size", "2"])
        assert code == 0
        assert capsys.readouterr().out == "true\n"

    def test_stdin_dash(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("exists a b . a != b"))
        assert main(["eval", "-", "--size", "2"]) == 0
        assert capsys.readouterr().out == "true\n"

    def test_file_source(self, capsys, tmp_path):
        src = tmp_path / "f.hf"
        src.write_text("forall x . exists y . y = x\n", encoding="ascii")
        assert main(["eval", str(src), "--size", "3"]) == 0

    def test_show_witness(self, capsys):
        code = main(
            ["eval", "--show-witness", "--expr", "H{ forall x ; y(x) } . y = x", "--size", "2"]
        )
        assert code == 0
        assert capsys.readouterr().out.splitlines() == ["true", "y: (0)->0 (1)->1"]

    def test_show_witness_without_spine(self, capsys):
        code = main(["eval", "--show-witness", "--expr", "forall x . x = x", "--size", "2"])
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["true", "witness: (no outer existential spine to tabulate)"]

    def test_budget_exhausted(self, capsys):
        code = main(["eval", "--expr", "forall a b c . a = a", "--size", "3", "--budget", "5"])
        assert code == 4
        assert "error:" in capsys.readouterr().err

    def test_parse_error(self, capsys):
        assert main(["eval", "--expr", "forall x .", "--size", "2"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_unbound_free_variable(self, capsys):
        assert main(["eval", "--expr", "x = y", "--size", "2"]) == 2
        assert "unbound free variables" in capsys.readouterr().err

    def test_size_zero(self, capsys):
        assert main(["eval", "--expr", "true", "--size", "0"]) == 2
        assert "--size must be at least 1" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["eval", "/nonexistent/path.hf", "--size", "2"]) == 2

    def test_expr_and_file_conflict(self, capsys, tmp_path):
        src = tmp_path / "f.hf"
        src.write_text("true", encoding="ascii")
        assert main(["eval", str(src), "--expr", "true", "--size", "2"]) == 2
        assert "not both" in capsys.readouterr().err


class TestSat:
    def test_found(self, capsys):
        assert main(["sat", "--expr", "exists a b . a != b", "--max-size", "4"]) == 0
        assert capsys.readouterr().out == "2\n"

    def test_none(self, capsys):
        assert main(["sat", "--expr", "exists x . x != x", "--max-size", "3"]) == 1
        assert capsys.readouterr().out == "none up to 3\n"


class TestCompile:
    def test_output_reparses(self, capsys, canon_file):
        assert main(["compile", "--presentation", canon_file, "--query", "ab = ba"]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0] == "# rows: 8"
        body = "\n".join(lines[1:])
        expected = compile_instance(
            Presentation.of([Equation("aa", "a"), Equation("bb", "b")]), Equation("ab", "ba")
        )
        assert parse_formula(body) == expected

    def test_bad_query(self, capsys, canon_file):
        assert main(["compile", "--presentation", canon_file, "--query", "ab ="]) == 2


class TestOracle:
    def test_found(self, capsys, canon_file):
        code = main(
            ["oracle", "--presentation", canon_file, "--query", "ab = ba", "--max-size", "3"]
        )
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert out == ["size: 2", "a: 0->0 1->0", "b: 0->1 1->1", "point: 0"]

    def test_none(self, capsys, tmp_path):
        path = tmp_path / "comm.txt"
        path.write_text("ab = ba\n", encoding="ascii")
        code = main(["oracle", "--presentation", str(path), "--query", "ab = ba", "--max-size", "3"])
        assert code == 1
        assert capsys.readouterr().out == "none up to 3\n"


class TestCrosscheck:
    def test_agreement(self, capsys, canon_file):
        code = main(
            ["crosscheck", "--presentation", canon_file, "--query", "ab = ba", "--max-size", "3"]
        )
        assert code == 0
        out = capsys.readouterr().out.splitlines()
        assert out == [
            "m=1: eval=false oracle=none agree",
            "m=2: eval=true oracle=witness agree",
            "m=3: eval=true oracle=witness agree",
        ]

    def test_corrupt_reports_mismatch(self, capsys, canon_file):
        code = main(
            [
                "crosscheck",
                "--presentation",
                canon_file,
                "--query",
                "ab = ba",
                "--max-size",
                "1",
                "--corrupt",
            ]
        )
        assert code == 3
        assert capsys.readouterr().out.splitlines() == [
            "m=1: eval=true oracle=none MISMATCH"
        ]


class TestFixture:
    @pytest.mark.parametrize(
        "name",
        ["ceitin-h12", "ceitin-e10", "ceitin-presentation", "ehrenfeucht", "infinity"],
    )
    def test_prints_parseable_text(self, capsys, name):
        assert main(["fixture", name]) == 0
        out = capsys.readouterr().out
        assert out.strip()
        if name == "ceitin-presentation":
            from henkin import parse_presentation

            assert len(parse_presentation(out).equations) == 7
        else:
            parse_formula(out)

    def test_h12_round_trips_exactly(self, capsys):
        main(["fixture", "ceitin-h12"])
        out = capsys.readouterr().out
        assert parse_formula(out) == ceitin_h12()

    def test_unknown_name(self, capsys):
        assert main(["fixture", "nonesuch"]) == 2
