from __future__ import annotations

import json

from cutgroups import format_cayley_table, make_metacyclic
from cutgroups.cli import main, parse_product


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_cut_metacyclic(self, capsys):
        code, out, _ = run(capsys, "check", "--metacyclic", "3,2,2,3", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["is_cut"] is True and doc["method"] == "general"
        assert doc["group"] == {"kind": "metacyclic", "n": 3, "t": 2, "r": 2, "l": 3}

    def test_not_cut_abelian_witness(self, capsys):
        code, out, _ = run(capsys, "check", "--abelian", "5", "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["is_cut"] is False
        assert doc["witness"] == {"element": 1, "label": "g", "power": 2}

    def test_invalid_presentation_exit_2(self, capsys):
        code, _, err = run(capsys, "check", "--metacyclic", "0,2,2,3")
        assert code == 2 and "InvalidPresentation" in err

    def test_method_both_agree(self, capsys):
        code, out, _ = run(
            capsys, "check", "--metacyclic", "4,2,3,2", "--method", "both", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["agree"] is True

    def test_wedderburn_method(self, capsys):
        code, out, _ = run(
            capsys, "check", "--abelian", "5", "--method", "wedderburn", "--json"
        )
        assert code == 1
        doc = json.loads(out)
        assert doc["method"] == "wedderburn"
        assert doc["offending_center"].startswith("degree-4")

    def test_product_descriptor(self, capsys):
        code, out, _ = run(
            capsys,
            "check",
            "--product",
            "metacyclic=8,2,3,8 * abelian=4",
            "--json",
        )
        assert code == 1
        doc = json.loads(out)
        assert doc["order"] == 64 and doc["witness"]["power"] == 3

    def test_requires_exactly_one_descriptor(self, capsys):
        code, _, err = run(capsys, "check", "--abelian", "5", "--table", "x")
        assert code == 2 and "exactly one" in err


class TestTableInput:
    def test_table_file(self, capsys, tmp_path):
        path = tmp_path / "s3.txt"
        path.write_text(format_cayley_table(make_metacyclic(3, 2, 2, 3)))
        code, out, _ = run(capsys, "check", "--table", str(path), "--json")
        assert code == 0 and json.loads(out)["is_cut"] is True

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check", "--table", "/nonexistent/t.txt")
        assert code == 2

    def test_identity_not_first_rejected(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("2\n1 0\n0 1\n")
        code, _, err = run(capsys, "check", "--table", str(path))
        assert code == 2 and "NoIdentity" in err


class TestOtherCommands:
    def test_wedderburn_components(self, capsys):
        code, out, _ = run(capsys, "wedderburn", "--metacyclic", "3,2,2,3", "--json")
        assert code == 0
        doc = json.loads(out)
        assert len(doc["components"]) == 3
        comp = doc["components"][-1]
        assert set(comp) >= {"n", "k", "action_image", "center", "dimension"}

    def test_wedderburn_inapplicable_exit_2(self, capsys, tmp_path):
        from conftest import sl23

        path = tmp_path / "sl23.txt"
        path.write_text(format_cayley_table(sl23()))
        code, _, err = run(capsys, "wedderburn", "--table", str(path))
        assert code == 2 and "NotStronglyMonomialVerified" in err

    def test_height(self, capsys):
        code, out, _ = run(capsys, "height", "--metacyclic", "4,2,3,2", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["height"] == 2 and doc["reason"] == "qstar"

    def test_camina(self, capsys):
        code, out, _ = run(capsys, "camina", "--metacyclic", "4,2,3,4", "--json")
        assert code == 0 and json.loads(out)["is_camina"] is True
        code, out, _ = run(capsys, "camina", "--metacyclic", "8,2,7,8", "--json")
        assert code == 1


class TestClassifyCommand:
    def test_small_range_json(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--max-n", "8", "--t-set", "2", "--json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["matches_catalog"] is True
        assert [c["order"] for c in doc["classes"]] == [6, 8, 8, 12, 12, 16, 16]

    def test_jobs_byte_identical(self, capsys):
        _, out1, _ = run(capsys, "classify", "--max-n", "8", "--t-set", "2", "--json")
        _, out2, _ = run(
            capsys, "classify", "--max-n", "8", "--t-set", "2", "--jobs", "2", "--json"
        )
        assert out1 == out2

    def test_corrupted_catalog_exits_1_naming_entry(self, capsys, monkeypatch):
        import cutgroups.classify as cl

        real = cl.theorem7_catalog()
        fake = tuple(e for e in real if e.presentation.astuple() != (3, 2, 2, 3))
        monkeypatch.setattr(cl, "theorem7_catalog", lambda: fake)
        code, out, _ = run(capsys, "classify", "--max-n", "4", "--t-set", "2", "--json")
        assert code == 1
        doc = json.loads(out)
        assert doc["catalog_diff"]["extra"][0]["presentation"] == [3, 2, 2, 3]

    def test_report_dir(self, capsys, tmp_path):
        out_dir = tmp_path / "rep"
        code, _, err = run(
            capsys,
            "classify",
            "--max-n",
            "6",
            "--t-set",
            "2",
            "--report-dir",
            str(out_dir),
        )
        assert code == 0
        assert (out_dir / "classes.csv").exists()
        assert (out_dir / "classes_by_order.png").exists()
        assert (out_dir / "presentations_per_class.png").exists()


class TestVerifyPaperCommand:
    def test_single_fast_criterion(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--criteria", "5", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["all_passed"] is True
        assert doc["criteria"][0]["number"] == 5

    def test_known_defective_rows_fail_criterion_4(self, capsys):
        code, out, _ = run(capsys, "verify-paper", "--criteria", "4,7", "--json")
        assert code == 1
        doc = json.loads(out)
        by_num = {c["number"]: c for c in doc["criteria"]}
        assert by_num[7]["passed"] is True
        assert by_num[4]["passed"] is False
        assert "(8, 6, 3, 8)" in by_num[4]["detail"]
        assert "(8, 6, 5, 4)" in by_num[4]["detail"]

    def test_report_dir(self, capsys, tmp_path):
        out_dir = tmp_path / "vrep"
        code, _, _ = run(
            capsys,
            "verify-paper",
            "--criteria",
            "7",
            "--report-dir",
            str(out_dir),
        )
        assert code == 0
        assert (out_dir / "criteria.csv").exists()
        assert (out_dir / "criteria.png").exists()


class TestProductParsing:
    def test_nested_forms(self):
        d = parse_product("abelian=2 * abelian=3 * metacyclic=3,2,2,3")
        assert d.kind == "product" and len(d.factors) == 3
        assert d.build().order == 36

    def test_bad_part(self, capsys):
        code, _, err = run(capsys, "check", "--product", "abelian=2 * wat")
        assert code == 2
