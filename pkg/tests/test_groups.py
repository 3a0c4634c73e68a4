from __future__ import annotations

import itertools

import numpy as np
import pytest

from cutgroups import (
    MetacyclicPresentation,
    all_subgroups,
    build_from_table,
    center,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    element_order,
    exponent,
    format_cayley_table,
    generated_subgroup,
    is_isomorphic,
    lower_central_series,
    make_abelian,
    make_metacyclic,
    normalizer,
    parse_cayley_table,
    quotient,
    subgroup_from_members,
    upper_central_series,
)
from cutgroups.errors import (
    InvalidPresentation,
    NoIdentity,
    NotAssociative,
    NotNormal,
    SizeLimit,
)
from cutgroups.groups import _validate_table, full_subgroup

# order-5 loop: Latin square with identity that fails associativity
NONASSOC_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 3, 4, 0, 1],
    [3, 4, 1, 2, 0],
    [4, 2, 0, 1, 3],
]


def brute_conjugacy_sizes(G):
    """Independent O(|G|^2) orbit computation."""
    classes = []
    seen = set()
    for x in G.elements():
        if x in seen:
            continue
        orbit = {G.conj(g, x) for g in G.elements()}
        seen |= orbit
        classes.append(len(orbit))
    return sorted(classes)


def brute_subgroup_count(G):
    """Check every subset; only viable for tiny groups."""
    elems = list(G.elements())
    count = 0
    for r in range(1, G.order + 1):
        for sub in itertools.combinations(elems, r):
            s = set(sub)
            if 0 not in s:
                continue
            if any(G.mul(a, b) not in s for a in s for b in s):
                continue
            count += 1
    return count


class TestBuildFromTable:
    def test_c2(self):
        G = build_from_table(2, [[0, 1], [1, 0]])
        assert G.order == 2 and G.inv(1) == 1

    def test_nonassociative_witness(self):
        with pytest.raises(NotAssociative) as exc:
            build_from_table(5, NONASSOC_5)
        g, h, k = exc.value.triple
        rows = NONASSOC_5
        assert rows[rows[g][h]][k] != rows[g][rows[h][k]]

    def test_no_identity(self):
        with pytest.raises(NoIdentity):
            build_from_table(2, [[1, 0], [0, 1]])

    def test_metacyclic_round_trip(self):
        G = make_metacyclic(3, 2, 2, 3)
        H = build_from_table(6, G.table.tolist())
        assert np.array_equal(G.table, H.table)

    def test_text_format_round_trip(self, S3):
        text = format_cayley_table(S3)
        H = parse_cayley_table(text)
        assert np.array_equal(S3.table, H.table)


class TestMetacyclic:
    def test_s3(self, S3):
        assert S3.order == 6 and not S3.is_abelian()

    def test_q8_relation(self):
        G = make_metacyclic(4, 2, 3, 2)
        assert G.order == 8
        b = 4  # index n
        assert G.mul(b, b) == 2  # b^2 = a^2

    def test_invalid_ell(self):
        with pytest.raises(InvalidPresentation):
            make_metacyclic(4, 2, 3, 3)

    def test_invalid_r_power(self):
        with pytest.raises(InvalidPresentation):
            make_metacyclic(5, 2, 2, 5)  # 2^2 != 1 mod 5

    @pytest.mark.parametrize("tup", [(3, 2, 2, 3), (4, 2, 3, 2), (8, 4, 3, 8), (12, 6, 7, 2)])
    def test_presentation_realized(self, tup):
        n, t, r, ell = tup
        G = make_metacyclic(*tup)
        assert G.order == n * t
        a, b = 1, n
        assert element_order(G, a) == n
        # b^-1 a b = a^r
        assert G.mul(G.mul(G.inv(b), a), b) == G.power(a, r)
        # b^t = a^ell
        assert G.power(b, t) == G.power(a, ell % n)
        # conjugation by b maps a^i to a^(i*r mod n)
        for i in range(n):
            assert G.mul(G.mul(G.inv(b), G.power(a, i)), b) == G.power(a, i * r % n)

    def test_derived_quantities(self):
        p = MetacyclicPresentation(12, 6, 7, 2)
        assert p.d == 2
        assert p.m == 4  # greatest divisor of 12 coprime to t/d = 3

    def test_degenerate_parameters(self):
        assert make_metacyclic(1, 1, 1, 1).order == 1
        G = make_metacyclic(1, 4, 1, 1)  # plain C4
        assert G.order == 4 and is_isomorphic(G, make_abelian([4]))
        H = make_metacyclic(5, 1, 1, 5)  # plain C5
        assert H.order == 5 and H.is_abelian()

    def test_validated_axioms(self):
        for tup in [(5, 4, 4, 5), (8, 2, 3, 8), (9, 3, 4, 9)]:
            _validate_table(make_metacyclic(*tup).table)


class TestAbelian:
    def test_examples(self):
        assert make_abelian([2, 4]).order == 8
        assert exponent(make_abelian([2, 4])) == 4
        assert make_abelian([]).order == 1
        assert exponent(make_abelian([3, 3])) == 3

    def test_bad_factor(self):
        with pytest.raises(InvalidPresentation):
            make_abelian([1, 2])

    def test_validated(self):
        _validate_table(make_abelian([2, 3, 4]).table)


class TestDirectProduct:
    def test_c2_x_c3(self):
        G = direct_product(make_abelian([2]), make_abelian([3]))
        assert G.order == 6 and G.is_abelian()

    def test_center_of_product(self, D8, C4):
        assert center(direct_product(D8, C4)).order == 8

    def test_remark_product_order(self):
        H = make_metacyclic(8, 2, 3, 8)
        K = make_abelian([4])
        assert direct_product(H, K).order == 64

    def test_cap(self, D8):
        with pytest.raises(SizeLimit):
            direct_product(D8, D8, max_order=32)

    def test_validated(self, S3, C4):
        _validate_table(direct_product(S3, C4).table)


class TestConjugacy:
    def test_s3(self, S3):
        ct = conjugacy_classes(S3)
        assert sorted(ct.sizes) == [1, 2, 3] == brute_conjugacy_sizes(S3)

    def test_d8(self, D8):
        ct = conjugacy_classes(D8)
        assert sorted(ct.sizes) == [1, 1, 2, 2, 2] == brute_conjugacy_sizes(D8)

    def test_abelian_singletons(self):
        G = make_abelian([12])
        assert set(conjugacy_classes(G).sizes) == {1}

    @pytest.mark.parametrize("tup", [(3, 2, 2, 3), (4, 2, 3, 4), (12, 2, 11, 6)])
    def test_partition_invariants(self, tup):
        G = make_metacyclic(*tup)
        ct = conjugacy_classes(G)
        assert sum(ct.sizes) == G.order
        assert all(G.order % s == 0 for s in ct.sizes)
        assert ct.sizes[ct.class_of[0]] == 1
        # representatives are least in class
        for c, rep in enumerate(ct.representatives):
            assert min(ct.class_members(c)) == rep


class TestStructure:
    def test_center(self, S3, D8):
        assert center(S3).order == 1
        assert center(D8).order == 2
        G = make_abelian([6])
        assert center(G).order == 6

    def test_derived(self, S3, Q8):
        assert derived_subgroup(S3).order == 3
        assert derived_subgroup(Q8).order == 2
        assert derived_subgroup(make_abelian([8])).order == 1

    def test_series_d8(self, D8):
        assert [s.order for s in lower_central_series(D8)] == [8, 2, 1]
        assert [s.order for s in upper_central_series(D8)] == [1, 2, 8]

    def test_series_s3(self, S3):
        assert [s.order for s in lower_central_series(S3)] == [6, 3]
        assert [s.order for s in upper_central_series(S3)] == [1]

    def test_series_abelian(self):
        G = make_abelian([4])
        assert [s.order for s in lower_central_series(G)] == [4, 1]
        assert [s.order for s in upper_central_series(G)] == [1, 4]


class TestSubgroups:
    def test_counts(self, S3, D8):
        assert len(all_subgroups(make_abelian([6]))) == 4
        assert len(all_subgroups(S3)) == 6 == brute_subgroup_count(S3)
        assert len(all_subgroups(D8)) == 10 == brute_subgroup_count(D8)

    def test_normal_flags(self, D8):
        for H in all_subgroups(D8):
            if H.is_normal():
                assert normalizer(D8, H).order == D8.order

    def test_conjugation_closed_as_set(self, S3):
        subs = {H.members for H in all_subgroups(S3)}
        for mem in subs:
            for g in S3.elements():
                assert frozenset(S3.conj(g, x) for x in mem) in subs

    def test_lagrange_rejects(self, S3):
        with pytest.raises(Exception):
            subgroup_from_members(S3, {0, 1})  # not closed: <a> has order 3

    def test_normalizer_examples(self, S3):
        b = generated_subgroup(S3, [3])
        assert normalizer(S3, b).members == b.members
        a = generated_subgroup(S3, [1])
        assert normalizer(S3, a).order == 6


class TestQuotient:
    def test_s3_mod_a3(self, S3):
        q, proj = quotient(S3, generated_subgroup(S3, [1]))
        assert q.order == 2
        for x in S3.elements():
            for y in S3.elements():
                assert proj[S3.mul(x, y)] == q.mul(proj[x], proj[y])

    def test_full_quotient(self, S3):
        q, _ = quotient(S3, full_subgroup(S3))
        assert q.order == 1

    def test_d8_mod_center(self, D8):
        q, _ = quotient(D8, center(D8))
        assert q.order == 4 and exponent(q) == 2

    def test_not_normal(self, S3):
        with pytest.raises(NotNormal):
            quotient(S3, generated_subgroup(S3, [3]))


class TestIsomorphism:
    def test_reflexive(self, S3, D8, Q8):
        for G in (S3, D8, Q8):
            assert is_isomorphic(G, G)

    def test_q8_not_d8(self, Q8, D8):
        assert not is_isomorphic(Q8, D8)
        assert not is_isomorphic(D8, Q8)

    def test_c4_not_klein(self, C4):
        assert not is_isomorphic(C4, make_abelian([2, 2]))

    def test_dicyclic_presentations(self):
        assert is_isomorphic(make_metacyclic(3, 4, 2, 3), make_metacyclic(6, 2, 5, 3))

    def test_relabelled_copy(self, D8):
        # conjugate the table by a permutation fixing 0
        perm = [0, 3, 1, 2, 6, 4, 7, 5]
        inv = [0] * 8
        for i, p in enumerate(perm):
            inv[p] = i
        table = [[perm[D8.mul(inv[i], inv[j])] for j in range(8)] for i in range(8)]
        H = build_from_table(8, table)
        assert is_isomorphic(D8, H) and is_isomorphic(H, D8)

    def test_cap(self, S3):
        with pytest.raises(SizeLimit):
            is_isomorphic(S3, S3, cap=3)


class TestExponent:
    def test_examples(self, S3):
        assert exponent(make_abelian([])) == 1
        assert exponent(make_abelian([2, 4])) == 4
        assert exponent(S3) == 6
