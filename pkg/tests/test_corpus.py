"""Group-file IO, report shape, and the corpus driver."""
import json

import pytest

from subdeg.constructions import alternating, cyclic, dihedral
from subdeg.corpus import (
    BUILTIN_CORPUS,
    REPORT_FIELDS,
    CorpusResult,
    GroupFileError,
    analyze,
    builtin_entries,
    fixture_path,
    group_from_dict,
    load_group,
    report_to_csv,
    report_to_dict,
    verify_corpus,
    write_group,
)
from subdeg.groups import coset_action, order

from conftest import make_group


def write_json(path, obj):
    path.write_text(json.dumps(obj), encoding="utf-8")
    return path


class TestLoadGroup:
    def test_round_trip(self, tmp_path):
        p = tmp_path / "a5.json"
        write_group(p, alternating(5))
        G = load_group(p)
        assert G.degree == 5
        assert G.label == "alt(5)"
        assert order(G) == 60

    def test_image_list_generators(self, tmp_path):
        p = write_json(
            tmp_path / "c3.json",
            {"name": "c3", "degree": 3, "generators": [[2, 3, 1]], "metadata": {"expected_order": "3"}},
        )
        assert order(load_group(p)) == 3

    def test_mixed_generator_forms(self, tmp_path):
        p = write_json(
            tmp_path / "s3.json",
            {"name": "s3", "degree": 3, "generators": ["(1,2,3)", [2, 1, 3]]},
        )
        assert order(load_group(p)) == 6

    def test_point_out_of_range(self, tmp_path):
        p = write_json(tmp_path / "bad.json", {"name": "x", "degree": 1, "generators": ["(1,2)"]})
        with pytest.raises(GroupFileError, match="outside 1..1"):
            load_group(p)

    def test_order_mismatch_names_both_values(self, tmp_path):
        p = write_json(
            tmp_path / "bad.json",
            {
                "name": "x",
                "degree": 5,
                "generators": ["(1,2,3)", "(3,4,5)"],
                "metadata": {"expected_order": "61"},
            },
        )
        with pytest.raises(GroupFileError, match="60.*61|61.*60"):
            load_group(p)

    def test_parse_error_carries_generator_context(self, tmp_path):
        p = write_json(tmp_path / "bad.json", {"name": "x", "degree": 4, "generators": ["(1,2)", "(3;4)"]})
        with pytest.raises(GroupFileError, match="generator 2.*column"):
            load_group(p)

    def test_image_list_validation(self, tmp_path):
        cases = [
            [[1, 2]],  # wrong length
            [[0, 1, 2]],  # out of 1-based range
            [[1, 1, 2]],  # not a bijection
            [42],  # not a string or list
        ]
        for i, gens in enumerate(cases):
            p = write_json(tmp_path / f"bad{i}.json", {"name": "x", "degree": 3, "generators": gens})
            with pytest.raises(GroupFileError):
                load_group(p)

    def test_structural_validation(self):
        bad = [
            {"degree": 3, "generators": ["(1,2)"]},  # no name
            {"name": "x", "degree": 0, "generators": ["()"]},
            {"name": "x", "degree": 3, "generators": []},
            {"name": "x", "degree": 3},
            {"name": "x", "degree": 3, "generators": ["()"], "metadata": 5},
            [1, 2, 3],
        ]
        for data in bad:
            with pytest.raises(GroupFileError):
                group_from_dict(data)

    def test_invalid_json_and_missing_file(self, tmp_path):
        p = tmp_path / "broken.json"
        p.write_text("{not json", encoding="utf-8")
        with pytest.raises(GroupFileError, match="invalid JSON"):
            load_group(p)
        with pytest.raises(GroupFileError, match="cannot read"):
            load_group(tmp_path / "absent.json")

    def test_trivial_group_written_with_identity_generator(self, tmp_path):
        from subdeg.groups import PermGroup

        p = tmp_path / "triv.json"
        write_group(p, PermGroup(4, []), name="trivial4")
        data = json.loads(p.read_text())
        assert data["generators"] == ["()"]
        assert order(load_group(p)) == 1


class TestAnalyze:
    def test_alt5_report(self):
        r = analyze(alternating(5))
        assert r.name == "alt(5)"
        assert r.order == "60"
        assert (r.transitive, r.primitive) == (True, True)
        assert r.rank == 2
        assert r.subdegrees == (1, 4)
        assert r.distinct_nontrivial_subdegrees == (4,)
        assert r.max_coprime_clique == (4,)
        assert r.clique_size == 1
        assert r.weiss_ok == "pass"
        assert r.neumann_ok is True
        assert r.theorem_ok is True
        assert r.skipped_checks == ()
        assert not r.violates

    def test_prime_cyclic_weiss_not_applicable(self):
        r = analyze(cyclic(5))
        assert r.primitive is True
        assert r.subdegrees == (1, 1, 1, 1, 1)
        assert r.clique_size == 0
        assert r.weiss_ok == "not-applicable"
        assert r.theorem_ok is True

    def test_imprimitive_theorem_is_null(self):
        r = analyze(dihedral(4))
        assert r.primitive is False
        assert r.theorem_ok is None
        assert r.weiss_ok == "not-applicable"
        assert not r.violates

    def test_intransitive_fields_are_null(self):
        r = analyze(make_group(5, "(1,2,3)"))
        assert r.transitive is False
        for f in ("rank", "subdegrees", "max_coprime_clique", "clique_size", "weiss_ok", "neumann_ok", "theorem_ok"):
            assert getattr(r, f) is None
        assert any("transitive" in s for s in r.skipped_checks)

    def test_base_point_invariance(self):
        A5 = make_group(5, "(1,2,3)", "(3,4,5)")
        H = make_group(5, "(1,2,3)", "(1,2)(4,5)")
        G, _ = coset_action(A5, H)
        reports = [analyze(G, point=x, name="petersen") for x in range(G.degree)]
        first = report_to_dict(reports[0])
        for r in reports[1:]:
            assert report_to_dict(r) == first


class TestReportSerialization:
    def test_dict_key_order(self):
        d = report_to_dict(analyze(alternating(5)))
        assert tuple(d.keys()) == REPORT_FIELDS

    def test_json_round_trip(self):
        d = report_to_dict(analyze(cyclic(6)))
        assert json.loads(json.dumps(d)) == d

    def test_csv_shape(self):
        text = report_to_csv([analyze(alternating(5))])
        header, row = text.strip().split("\n")
        assert header == ",".join(REPORT_FIELDS)
        cells = row.split(",")
        assert cells[0] == "alt(5)"
        assert cells[6] == "1 4"  # subdegrees cell, space-separated
        assert cells[10] == "pass"
        assert cells[12] == "true"

    def test_csv_null_cells(self):
        text = report_to_csv([analyze(make_group(4, "(1,2)"))], header=False)
        cells = text.strip().split(",")
        assert cells[3] == "false"  # transitive
        assert cells[5] == ""  # rank is null


class TestBuiltinCorpus:
    def test_exact_size_and_membership(self):
        names = [name for name, _ in builtin_entries()]
        assert len(names) == len(set(names)) == 75
        for expected in [
            "alt(5)", "alt(9)",
            "ksubsets(7,3)", "ksubsets(12,2)",
            "partitions(9,3)", "partitions(6,2)",
            "agl(1,13)", "agl(4,2)",
            "psl2(4)", "psl2(61)",
            "cyclic(2)", "cyclic(12)",
            "dihedral(3)", "dihedral(12)",
        ]:
            assert expected in names
        assert len(BUILTIN_CORPUS) == 75


class TestVerifyCorpus:
    def test_directory_sweep_with_bad_entries(self, tmp_path):
        write_group(tmp_path / "a5.json", alternating(5))
        (tmp_path / "broken.json").write_text("{oops", encoding="utf-8")
        write_json(
            tmp_path / "mismatch.json",
            {"name": "m", "degree": 3, "generators": ["(1,2,3)"], "metadata": {"expected_order": "4"}},
        )
        res = verify_corpus(directory=tmp_path, include_builtin=False)
        assert res.total == 3
        assert res.exit_code == 0
        by_name = {e["name"]: e for e in res.entries}
        assert by_name["alt(5)"]["theorem_ok"] is True
        assert by_name["broken"]["degree"] is None
        assert any("load failed" in s for s in by_name["broken"]["skipped_checks"])
        assert any("order mismatch" in s for s in by_name["mismatch"]["skipped_checks"])

    def test_empty_directory(self, tmp_path):
        res = verify_corpus(directory=tmp_path, include_builtin=False)
        assert res.total == 0
        assert res.exit_code == 0

    def test_entries_sorted_by_name(self, tmp_path):
        write_group(tmp_path / "z.json", cyclic(3), name="zzz")
        write_group(tmp_path / "a.json", cyclic(4), name="aaa")
        res = verify_corpus(directory=tmp_path, include_builtin=False)
        assert [e["name"] for e in res.entries] == ["aaa", "zzz"]

    def test_jobs_do_not_change_bytes(self, tmp_path):
        write_group(tmp_path / "a5.json", alternating(5))
        write_group(tmp_path / "d6.json", dihedral(6))
        one = verify_corpus(directory=tmp_path, include_builtin=False, jobs=1)
        four = verify_corpus(directory=tmp_path, include_builtin=False, jobs=4)
        assert one.to_json() == four.to_json()

    def test_violation_drives_exit_code(self):
        assert CorpusResult(entries=(), violations=("fake",)).exit_code == 1
        assert CorpusResult(entries=(), violations=()).exit_code == 0


class TestBundledFixture:
    def test_j1_fixture_loads_with_verified_order(self):
        G = load_group(fixture_path("j1_266.json"))
        assert G.degree == 266
        assert G.label == "J1_266"
