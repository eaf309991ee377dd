"""End-to-end checks of the subdeg command-line entry point."""
import json

import pytest

from subdeg.cli import main
from subdeg.corpus import REPORT_FIELDS, write_group
from subdeg.constructions import alternating, cyclic


@pytest.fixture
def a5_file(tmp_path):
    p = tmp_path / "a5.json"
    write_group(p, alternating(5))
    return p


class TestAnalyze:
    def test_text_output(self, a5_file, capsys):
        rc = main(["analyze", str(a5_file)])
        out = capsys.readouterr().out
        assert rc == 0
        assert "alt(5)" in out
        assert "subdegrees: 1 4" in out
        assert "theorem (clique size <= 2): pass" in out

    def test_json_output(self, a5_file, capsys):
        rc = main(["analyze", "--json", str(a5_file)])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert tuple(data.keys()) == REPORT_FIELDS
        assert data["max_coprime_clique"] == [4]

    def test_csv_output(self, a5_file, capsys):
        rc = main(["analyze", "--csv", str(a5_file)])
        assert rc == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == ",".join(REPORT_FIELDS)
        assert lines[1].startswith("alt(5),5,60,")

    def test_point_flag(self, a5_file, capsys):
        assert main(["analyze", "--point", "3", "--json", str(a5_file)]) == 0
        assert json.loads(capsys.readouterr().out)["subdegrees"] == [1, 4]

    def test_point_out_of_range(self, a5_file, capsys):
        rc = main(["analyze", "--point", "6", str(a5_file)])
        assert rc == 2
        assert "point" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        rc = main(["analyze", str(tmp_path / "nope.json")])
        assert rc == 2
        assert "cannot read" in capsys.readouterr().err


class TestConstruct:
    def test_payload_to_stdout(self, capsys):
        rc = main(["construct", "cyclic", "6"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["name"] == "cyclic(6)"
        assert data["degree"] == 6
        assert data["metadata"]["expected_order"] == "6"

    def test_out_file_round_trips(self, tmp_path, capsys):
        dest = tmp_path / "k.json"
        rc = main(["construct", "ksubsets", "5", "2", "--out", str(dest)])
        assert rc == 0
        assert f"wrote {dest}" in capsys.readouterr().out
        assert main(["analyze", str(dest)]) == 0

    def test_analyze_flag(self, capsys):
        rc = main(["construct", "alt", "6", "--analyze"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "alt(6)" in out
        assert "subdegrees: 1 5" in out

    def test_wrong_parameter_count(self, capsys):
        rc = main(["construct", "psl2", "7", "7"])
        assert rc == 2
        assert "wrong number of parameters" in capsys.readouterr().err

    def test_invalid_parameter(self, capsys):
        rc = main(["construct", "psl2", "6"])
        assert rc == 2
        assert capsys.readouterr().err.strip()


class TestVerifyCorpus:
    def test_directory_sweep(self, tmp_path, capsys):
        write_group(tmp_path / "a5.json", alternating(5))
        (tmp_path / "junk.json").write_text("{", encoding="utf-8")
        rc = main(["verify-corpus", "--dir", str(tmp_path)])
        out = capsys.readouterr().out
        assert rc == 0
        assert "ok    alt(5)" in out
        assert "skip  junk" in out
        assert "2 entries, 0 violations" in out

    def test_json_to_stdout(self, tmp_path, capsys):
        write_group(tmp_path / "c4.json", cyclic(4))
        rc = main(["verify-corpus", "--dir", str(tmp_path), "--json", "-"])
        assert rc == 0
        data = json.loads(capsys.readouterr().out)
        assert data["total"] == 1
        assert data["violations"] == []
        assert data["entries"][0]["name"] == "cyclic(4)"

    def test_json_to_file(self, tmp_path, capsys):
        write_group(tmp_path / "c4.json", cyclic(4))
        dest = tmp_path / "report.json"
        rc = main(["verify-corpus", "--dir", str(tmp_path), "--json", str(dest)])
        assert rc == 0
        assert json.loads(dest.read_text())["total"] == 1

    def test_missing_directory(self, tmp_path, capsys):
        rc = main(["verify-corpus", "--dir", str(tmp_path / "ghost")])
        assert rc == 2
        assert "not a directory" in capsys.readouterr().err


class TestMu:
    def test_a5(self, a5_file, capsys):
        rc = main(["mu", str(a5_file)])
        out = capsys.readouterr().out
        assert rc == 0
        assert "subgroups: 59" in out
        assert "mu = 2" in out

    def test_cap_skip(self, a5_file, capsys):
        rc = main(["mu", "--subgroup-cap", "10", str(a5_file)])
        out = capsys.readouterr().out
        assert rc == 0
        assert out.startswith("skipped: group order 60 exceeds cap 10")


class TestFactorizations:
    def test_a5_maximal_pair(self, a5_file, capsys):
        rc = main(["factorizations", str(a5_file)])
        out = capsys.readouterr().out
        assert rc == 0
        assert "[maximal pair]" in out
        assert "5" in out and "6" in out

    def test_no_pairs(self, tmp_path, capsys):
        p = tmp_path / "c4.json"
        write_group(p, cyclic(4))
        rc = main(["factorizations", str(p)])
        assert rc == 0
        assert "coprime factorizations: 0" in capsys.readouterr().out


class TestParser:
    def test_no_subcommand_is_usage_error(self, capsys):
        with pytest.raises(SystemExit):
            main([])

    def test_unknown_family_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["construct", "wreath", "3"])
