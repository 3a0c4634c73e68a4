from __future__ import annotations

import math

from cutgroups import (
    CASE3_ROWS,
    CenterKind,
    HeightVerdict,
    central_height,
    classify_cut_metacyclic,
    enumerate_metacyclic,
    is_isomorphic,
    is_qstar,
    make_abelian,
    make_metacyclic,
    theorem7_catalog,
    unit_group_info,
    verify_case3_tables,
)
from cutgroups.families import dicyclic, dihedral


def brute_enumeration_count(max_n, t_set):
    """Independent reimplementation of the presentation constraints."""
    count = 0
    for n in range(1, max_n + 1):
        for t in sorted(t_set):
            for r in range(1, n + 1):
                if math.gcd(r, n) != 1 or pow(r, t, n) != 1 % n:
                    continue
                for ell in range(1, n + 1):
                    if n % ell == 0 and (ell * (r - 1)) % n == 0:
                        count += 1
    return count


class TestEnumeration:
    def test_membership(self):
        tuples = [p.astuple() for p in enumerate_metacyclic(4, {2})]
        assert (3, 2, 2, 3) in tuples
        assert (4, 2, 3, 3) not in tuples

    def test_count_oracle(self):
        got = sum(1 for _ in enumerate_metacyclic(8, {2}))
        assert got == brute_enumeration_count(8, {2}) == 34

    def test_lexicographic(self):
        seq = [p.astuple() for p in enumerate_metacyclic(10, {2, 4})]
        assert seq == sorted(seq)

    def test_all_valid(self):
        for p in enumerate_metacyclic(12, {2, 3, 4, 6}):
            p.validate()


class TestCatalog:
    def test_count_matches_hand_recount(self):
        # family sizes: 9+3+1+6+8+4+2+4+1+2+2+1+2+2+1+2+2
        assert len(theorem7_catalog()) == 52

    def test_contains_quaternion_entry(self):
        tuples = [e.presentation.astuple() for e in theorem7_catalog()]
        assert (4, 2, 3, 2) in tuples

    def test_contains_n42_entries(self):
        tuples = [e.presentation.astuple() for e in theorem7_catalog()]
        assert (42, 6, 11, 42) in tuples and (42, 6, 19, 42) in tuples

    def test_entries_valid_and_distinct(self):
        tuples = [e.presentation.astuple() for e in theorem7_catalog()]
        assert len(set(tuples)) == len(tuples)
        for e in theorem7_catalog():
            e.presentation.validate()

    def test_lambda_instantiation(self):
        tuples = [e.presentation.astuple() for e in theorem7_catalog()]
        assert (5, 4, 2, 5) in tuples  # lambda_5 = 2
        assert (18, 6, 5, 18) in tuples  # lambda_18 = 5
        assert (7, 3, 2, 7) in tuples  # lambda_7^2 = 2 mod 7

    def test_generator_choice_independence(self):
        # groups built from different unit-group generators are isomorphic
        for n in (9, 14):
            phi, cyclic, least = unit_group_info(n)
            assert cyclic
            gens = [
                x
                for x in range(2, n)
                if math.gcd(x, n) == 1
                and all(pow(x, phi // q, n) != 1 for q in {2, 3} if phi % q == 0)
            ]
            base = make_metacyclic(n, phi, least, n)
            for lam in gens:
                assert is_isomorphic(base, make_metacyclic(n, phi, lam, n))


class TestClassifySmallRange:
    def test_frozen_small_range(self):
        res = classify_cut_metacyclic(8, {2})
        reps = [(c.order,) + c.representative.astuple() for c in res.classes]
        assert reps == [
            (6, 3, 2, 2, 3),
            (8, 4, 2, 3, 2),
            (8, 4, 2, 3, 4),
            (12, 6, 2, 5, 3),
            (12, 6, 2, 5, 6),
            (16, 8, 2, 3, 4),
            (16, 8, 2, 5, 2),
        ]
        assert not res.missing_entries and not res.extra_classes

    def test_jobs_do_not_change_output(self):
        a = classify_cut_metacyclic(8, {2}, jobs=1)
        b = classify_cut_metacyclic(8, {2}, jobs=2)
        assert [c.representative.astuple() for c in a.classes] == [
            c.representative.astuple() for c in b.classes
        ]
        assert [len(c.members) for c in a.classes] == [len(c.members) for c in b.classes]

    def test_survivors_satisfy_necessary_conditions(self):
        from cutgroups import pi_condition

        res = classify_cut_metacyclic(10, {2, 3, 4, 6})
        for p in res.cut_presentations:
            G = make_metacyclic(p)
            assert pi_condition(G)
            assert p.t in (1, 2, 3, 4, 6)

    def test_corrupted_catalog_detected(self, monkeypatch):
        import cutgroups.classify as cl

        real = theorem7_catalog()
        fake = tuple(e for e in real if e.presentation.astuple() != (3, 2, 2, 3))
        monkeypatch.setattr(cl, "theorem7_catalog", lambda: fake)
        res = classify_cut_metacyclic(4, {2})
        assert len(res.extra_classes) == 1
        d = res.extra_classes[0]
        assert d.presentation.astuple() == (3, 2, 2, 3)
        assert d.conjugacy_verdict and d.wedderburn_verdict and d.confirmed

    def test_bogus_catalog_entry_reported_missing(self, monkeypatch):
        import cutgroups.classify as cl

        from cutgroups.classify import CatalogEntry
        from cutgroups import MetacyclicPresentation

        real = theorem7_catalog()
        # D16 is not cut; (8,2,7,8) pretends to be a catalog member
        bogus = CatalogEntry(MetacyclicPresentation(8, 2, 7, 8), "fake")
        monkeypatch.setattr(cl, "theorem7_catalog", lambda: real + (bogus,))
        res = classify_cut_metacyclic(8, {2})
        assert len(res.missing_entries) == 1
        d = res.missing_entries[0]
        assert d.entry.presentation.astuple() == (8, 2, 7, 8)
        assert d.conjugacy_verdict is False and d.wedderburn_verdict is False
        assert d.confirmed  # both tests agree it is not cut


class TestCase3Rows:
    def test_row_count(self):
        assert len(CASE3_ROWS) == 46

    def test_rows_are_valid_presentations(self):
        for row in CASE3_ROWS:
            row.presentation.validate()

    def test_spec_example_rows(self):
        by_params = {
            (r.row.n, r.row.t, r.row.r, r.row.ell): r
            for r in verify_case3_tables(
                [row for row in CASE3_ROWS if (row.n, row.t, row.r, row.ell) in
                 {(8, 2, 7, 4), (21, 6, 5, 21), (12, 2, 5, 3)}]
            )
        }
        r = by_params[(8, 2, 7, 4)]
        assert r.passed and (r.center.kind, r.center.d) == (CenterKind.REAL_QUADRATIC, 2)
        r = by_params[(21, 6, 5, 21)]
        assert r.passed and r.center.degree == 2
        assert r.center.kind is CenterKind.REAL_QUADRATIC
        r = by_params[(12, 2, 5, 3)]
        assert r.passed and r.center.degree == 4

    def test_known_defective_rows_pinned(self):
        # two printed pairs have admissible (imaginary quadratic) centers;
        # the groups themselves are not cut (conductor-24 pairs witness)
        expected = {(8, 6, 3, 8): 2, (8, 6, 5, 4): 1}
        rows = [
            row for row in CASE3_ROWS if (row.n, row.t, row.r, row.ell) in expected
        ]
        for r in verify_case3_tables(rows):
            assert r.is_ssp
            key = (r.row.n, r.row.t, r.row.r, r.row.ell)
            assert (r.center.kind, r.center.d) == (
                CenterKind.IMAGINARY_QUADRATIC,
                expected[key],
            )
            assert not r.passed

    def test_all_other_rows_pass(self):
        defective = {(8, 6, 3, 8), (8, 6, 5, 4)}
        for r in verify_case3_tables():
            key = (r.row.n, r.row.t, r.row.r, r.row.ell)
            assert r.passed == (key not in defective), key


class TestQStar:
    def test_examples(self, Q8, D8, C4):
        assert is_qstar(Q8)
        assert not is_qstar(D8)
        assert not is_qstar(C4)

    def test_family(self):
        for n in (4, 8, 12, 16, 20):
            assert is_qstar(make_metacyclic(n, 2, n - 1, n // 2))

    def test_dicyclic_with_odd_part_not_qstar(self):
        assert not is_qstar(dicyclic(3))  # order 12, n = 6 not divisible by 4

    def test_not_qstar_samples(self, S3):
        assert not is_qstar(S3)
        assert not is_qstar(make_abelian([4, 4]))
        assert not is_qstar(dihedral(8))


class TestCentralHeight:
    def test_examples(self, S3, Q8, D8):
        assert central_height(S3) == HeightVerdict(0, "cut_and_trivial_center")
        assert central_height(Q8) == HeightVerdict(2, "qstar")
        assert central_height(D8) == HeightVerdict(1, "otherwise")
        assert central_height(make_abelian([2])) == HeightVerdict(1, "otherwise")

    def test_q24(self):
        assert central_height(make_metacyclic(12, 2, 11, 6)).height == 2

    def test_height0_list_sample(self):
        for tup in [(5, 4, 2, 5), (7, 3, 2, 7), (15, 4, 2, 15)]:
            assert central_height(make_metacyclic(*tup)).height == 0
