import pytest
from hypothesis import given
from hypothesis import strategies as st

from tetrastable.decadic import (
    ALPHA_TAGS,
    AlphaTag,
    alpha_digit_at,
    alpha_digits,
    alpha_value,
    idempotent_e5,
    key_digit,
    two_tower_t2,
)

from support import PRINTED_ALPHA, enumerate_fifth_power_fixed_points, true_fixed_points

tags = st.sampled_from(ALPHA_TAGS)


class TestPrimitives:
    def test_idempotent_reference_digits(self):
        assert idempotent_e5(6) == "890625"
        assert idempotent_e5(1) == "5"
        assert idempotent_e5(20) == PRINTED_ALPHA["25"][-20:]

    def test_idempotent_splits_as_one_and_zero(self):
        for n in (1, 4, 9, 33):
            e = int(idempotent_e5(n))
            assert e % 2**n == 1 % 2**n
            assert e % 5**n == 0

    def test_two_tower_reference_digits(self):
        assert two_tower_t2(3) == str(2**25)[-3:]
        assert two_tower_t2(6) == "186432"
        assert two_tower_t2(1) == "2"

    @given(n=st.integers(1, 120))
    def test_both_primitives_are_fifth_power_fixed(self, n):
        m = 10**n
        for x in (int(idempotent_e5(n)), int(two_tower_t2(n))):
            assert pow(x, 5, m) == x

    def test_rejects_zero_depth(self):
        with pytest.raises(ValueError):
            idempotent_e5(0)
        with pytest.raises(ValueError):
            two_tower_t2(0)


class TestAlphaDigits:
    def test_reference_values(self):
        assert alpha_digits(AlphaTag(9, 9), 4).digits == "9999"
        assert alpha_digits(AlphaTag(5, 1), 17).digits == "87480163574218751"
        assert alpha_digits(AlphaTag(0, 1), 5).digits == "00001"

    @pytest.mark.parametrize("label", sorted(PRINTED_ALPHA))
    def test_matches_printed_expansions(self, label):
        printed = PRINTED_ALPHA[label]
        got = alpha_digits(AlphaTag.from_label(label), len(printed))
        assert got.digits == printed

    def test_there_are_fifteen_tags(self):
        assert len(ALPHA_TAGS) == 15
        assert {t.label for t in ALPHA_TAGS} == set(PRINTED_ALPHA)

    @pytest.mark.parametrize("x2,x1", [(1, 2), (5, 5), (9, 8), (0, 3)])
    def test_rejects_unknown_tags(self, x2, x1):
        with pytest.raises(ValueError):
            AlphaTag(x2, x1)

    @given(tag=tags, n=st.integers(1, 150))
    def test_fifth_power_fixed_point(self, tag, n):
        v = alpha_value(tag, n)
        assert pow(v, 5, 10**n) == v

    @given(tag=tags, n=st.integers(2, 90))
    def test_last_two_digits_are_the_tag(self, tag, n):
        v = alpha_value(tag, n)
        assert (v // 10) % 10 == tag.x2
        assert v % 10 == tag.x1

    @given(tag=tags, n=st.integers(1, 120), extra=st.integers(0, 60))
    def test_suffix_coherence(self, tag, n, extra):
        short = alpha_digits(tag, n).digits
        long = alpha_digits(tag, n + extra).digits
        assert long.endswith(short)

    def test_digit_accessor_matches_string(self):
        s = alpha_digits(AlphaTag(5, 1), 30).digits
        for l in range(1, 31):
            assert alpha_digit_at(AlphaTag(5, 1), l) == int(s[-l])


class TestHenselEnumeration:
    def test_uniqueness_and_agreement_to_depth_sixty(self):
        depth = 60
        levels = enumerate_fifth_power_fixed_points(depth + 4)
        for n in range(2, depth + 1):
            genuine = true_fixed_points(n, levels)
            assert len(genuine) == 15
            for tag in ALPHA_TAGS:
                matching = [y for y in genuine if y % 100 == 10 * tag.x2 + tag.x1]
                assert len(matching) == 1
                assert matching[0] == alpha_value(tag, n)

    def test_parasite_branches_exist_but_die(self):
        # both 1 and 501 pass the congruence test mod 10^3; only one survives
        assert pow(501, 5, 1000) == 501
        assert 501 not in true_fixed_points(3)
        assert 1 in true_fixed_points(3)


class TestKeyDigit:
    def test_reference_reports(self):
        r = key_digit(57, AlphaTag(5, 7))
        assert (r.l, r.s_l, r.diff) == (4, 0, -7)
        r = key_digit(501, AlphaTag(0, 1))
        assert (r.l, r.s_l) == (3, 5)
        r = key_digit(51, AlphaTag(5, 1))
        assert (r.l, r.s_l, r.diff) == (3, 0, -7)

    def test_mismatch_at_second_digit(self):
        r = key_digit(23, AlphaTag(4, 3))
        assert r.l == 2 and r.s_l == 2 and r.diff == -2

    def test_search_extends_past_the_base_length(self):
        # 7 agrees with ...807 through position 2; 163574218751 agrees with
        # its constant through position 13 (an implied zero on both sides)
        assert key_digit(7, AlphaTag(0, 7)).l == 3
        r = key_digit(163574218751, AlphaTag(5, 1))
        assert (r.l, r.s_l, r.diff) == (14, 0, -8)

    def test_rejects_last_digit_mismatch(self):
        with pytest.raises(ValueError):
            key_digit(57, AlphaTag(5, 1))

    def test_rejects_tiny_bases(self):
        with pytest.raises(ValueError):
            key_digit(1, AlphaTag(0, 1))

    @given(a=st.integers(2, 10**7), tag=tags)
    def test_never_reports_a_matching_digit(self, a, tag):
        if a % 10 != tag.x1 or a < 2:
            return
        r = key_digit(a, tag)
        assert r.diff != 0
        assert r.matched_prefix_len == r.l - 1
        # the declared prefix really does match
        alpha = alpha_digits(tag, r.l).digits
        for j in range(1, r.l):
            a_digit = (a // 10 ** (j - 1)) % 10
            assert a_digit == int(alpha[-j])
