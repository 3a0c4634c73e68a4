from __future__ import annotations

import math

import pytest

from cutgroups import (
    all_subgroups,
    center,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    element_order,
    exponent,
    generated_subgroup,
    is_camina,
    is_camina_pair,
    is_cut_2group,
    is_cut_3group,
    is_cut_ritter_sehgal,
    is_nonabelian_camina,
    lower_central_series,
    make_abelian,
    make_metacyclic,
    pi_condition,
    quotient,
    upper_central_series,
)
from cutgroups.errors import NotA2Group, NotA3Group, NotNormal, TrivialGroup
from cutgroups.families import (
    dihedral,
    extraspecial_exponent_p2,
    heisenberg,
    quaternion,
    semidihedral,
)


class TestGeneralTest:
    def test_s3_cut(self, S3):
        assert is_cut_ritter_sehgal(S3).is_cut

    def test_c5_witness(self):
        v = is_cut_ritter_sehgal(make_abelian([5]))
        assert not v.is_cut and v.witness == (1, 2)

    def test_c6_cut(self):
        assert is_cut_ritter_sehgal(make_abelian([6])).is_cut

    def test_trivial_group_cut(self):
        assert is_cut_ritter_sehgal(make_abelian([])).is_cut

    def test_remark_product(self):
        H = make_metacyclic(8, 2, 3, 8)
        K = make_abelian([4])
        assert is_cut_ritter_sehgal(H).is_cut
        assert is_cut_ritter_sehgal(K).is_cut
        v = is_cut_ritter_sehgal(direct_product(H, K))
        assert not v.is_cut
        x, j = v.witness
        assert j == 3

    def test_witness_validity(self):
        # a witness must avoid both classes and be coprime to |G|
        for G in (make_abelian([5]), make_abelian([8]), dihedral(8)):
            v = is_cut_ritter_sehgal(G)
            if v.witness is None:
                continue
            x, j = v.witness
            assert math.gcd(j, G.order) == 1
            ct = conjugacy_classes(G)
            p = G.power(x, j)
            assert ct.class_of[p] not in (ct.class_of[x], ct.class_of[G.inv(x)])


class TestPGroupShortcuts:
    def test_3group_examples(self):
        assert is_cut_3group(make_abelian([3])).is_cut
        assert not is_cut_3group(make_abelian([9])).is_cut
        assert is_cut_3group(heisenberg(3)).is_cut

    def test_2group_examples(self, D8, Q8):
        assert is_cut_2group(D8).is_cut
        assert is_cut_2group(Q8).is_cut
        assert not is_cut_2group(make_abelian([8])).is_cut

    def test_wrong_order_raises(self, S3):
        with pytest.raises(NotA3Group):
            is_cut_3group(make_abelian([2]))
        with pytest.raises(NotA2Group):
            is_cut_2group(S3)

    def test_agreement_small(self, D8, Q8):
        for G in (D8, Q8, make_abelian([4, 4]), semidihedral(16), quaternion(16)):
            assert is_cut_2group(G).is_cut == is_cut_ritter_sehgal(G).is_cut
        for G in (heisenberg(3), make_abelian([9]), extraspecial_exponent_p2(3)):
            assert is_cut_3group(G).is_cut == is_cut_ritter_sehgal(G).is_cut

    def test_3group_rigidity(self):
        # x^2 is never conjugate to x for x != 1 in a 3-group
        for G in (heisenberg(3), make_abelian([9, 3]), extraspecial_exponent_p2(3)):
            ct = conjugacy_classes(G)
            for x in range(1, G.order):
                assert ct.class_of[G.mul(x, x)] != ct.class_of[x]


class TestClosureProperties:
    def test_quotient_closure(self, S3, D8, Q8, heis27):
        for G in (S3, D8, Q8, heis27, make_abelian([6])):
            assert is_cut_ritter_sehgal(G).is_cut
            for N in all_subgroups(G):
                if N.is_normal():
                    q, _ = quotient(G, N)
                    assert is_cut_ritter_sehgal(q).is_cut

    def test_3group_product_closure(self, heis27):
        cut3 = [heis27, make_abelian([3]), make_abelian([3, 3]), extraspecial_exponent_p2(3)]
        for H in cut3:
            for K in cut3:
                if H.order * K.order <= 3**6:
                    assert is_cut_ritter_sehgal(direct_product(H, K)).is_cut

    def test_central_series_exponents(self, D8, Q8, heis27):
        # cut 3-groups: all central quotients exponent 3; 2-groups: 2 or 4
        for G, allowed in ((heis27, {1, 3}), (D8, {1, 2, 4}), (Q8, {1, 2, 4})):
            lcs = lower_central_series(G)
            for big, small in zip(lcs, lcs[1:]):
                Gq, proj = quotient(G, small)
                img = {proj[x] for x in big.members}
                sub_exp = 1
                for y in img:
                    sub_exp = math.lcm(sub_exp, element_order(Gq, y))
                assert sub_exp in allowed
            ucs = upper_central_series(G)
            for small, big in zip(ucs, ucs[1:]):
                Gq, proj = quotient(G, small)
                img = {proj[x] for x in big.members}
                for y in img:
                    assert element_order(Gq, y) in allowed


class TestHigmanSample:
    @pytest.mark.parametrize(
        "factors,expected",
        [
            ([], True),
            ([2], True),
            ([3], True),
            ([4], True),
            ([6], True),
            ([5], False),
            ([8], False),
            ([9], False),
            ([2, 4], True),
            ([2, 2, 3], True),
            ([12], False),
            ([3, 4], False),  # C12
            ([2, 6], True),
            ([4, 4], True),
            ([6, 6], True),
        ],
    )
    def test_abelian_rule(self, factors, expected):
        G = make_abelian(factors)
        assert is_cut_ritter_sehgal(G).is_cut is expected
        assert (exponent(G) in (1, 2, 3, 4, 6)) is expected


class TestCamina:
    def test_examples(self, S3, D8, C4, heis27):
        assert is_camina(D8)
        assert is_camina(S3)
        assert is_camina(C4)  # literal definition: abelian passes vacuously
        assert is_camina(heis27)
        assert not is_nonabelian_camina(C4)
        assert is_nonabelian_camina(D8)

    def test_not_camina(self):
        assert not is_camina(dihedral(8))  # D16: class of a is {a, a^-1}, coset bigger
        assert not is_camina(make_metacyclic(12, 2, 7, 2))

    def test_pairs(self, D8, Q8):
        assert is_camina_pair(D8, center(D8))
        assert is_camina_pair(Q8, center(Q8))
        for G in (D8, Q8):
            assert is_camina_pair(G, derived_subgroup(G)) == is_camina(G)

    def test_pair_requires_normal(self, S3):
        with pytest.raises(NotNormal):
            is_camina_pair(S3, generated_subgroup(S3, [3]))


class TestPiCondition:
    def test_examples(self, S3):
        assert not pi_condition(make_abelian([35]))
        assert pi_condition(S3)

    def test_trivial_rejected(self):
        with pytest.raises(TrivialGroup):
            pi_condition(make_abelian([]))

    def test_cut_implies_pi(self, heis27):
        for G in (make_abelian([6]), heis27, dihedral(4)):
            assert is_cut_ritter_sehgal(G).is_cut
            assert pi_condition(G)
