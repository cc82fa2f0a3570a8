import random

import pytest

from src.core import (
    INFINITY,
    Block,
    Numeral,
    Width,
    block_bound,
    composite_witness,
    decompose,
    digit_gcd,
    digit_sum,
    eval_S,
    repdigit,
    s_infinity,
    scale_down_digits,
    surjectivity_witness,
    weighted_block,
)
from src.errors import DigitNotDivisible, InvalidWidth, MalformedNumeral


def block_sum(t, w):
    """Block を経由した定義どおりの S_w(t)"""
    return sum(weighted_block(b) for b in decompose(t, w).blocks)


class TestNumeral:
    def test_parse_and_render(self):
        t = Numeral.parse("123456")
        assert t.digits == (1, 2, 3, 4, 5, 6)
        assert str(t) == "123456"
        assert t.to_int() == 123456
        assert len(t) == 6

    def test_zero_is_single_digit(self):
        assert Numeral.parse("0").digits == (0,)
        assert Numeral.from_int(0).to_int() == 0

    @pytest.mark.parametrize("text", ["", "12x4", "-5", "1.0", "007", "00"])
    def test_rejects_non_canonical(self, text):
        with pytest.raises(MalformedNumeral):
            Numeral.parse(text)

    def test_rejects_bad_digits(self):
        with pytest.raises(MalformedNumeral):
            Numeral((1, 10))
        with pytest.raises(MalformedNumeral):
            Numeral(())

    def test_unbounded_length(self):
        text = "9" * 5000
        assert digit_sum(text) == 45000


class TestWidth:
    @pytest.mark.parametrize("text", ["inf", "INF", "infinity", "∞"])
    def test_parse_infinity(self, text):
        assert Width.parse(text) is INFINITY or Width.parse(text) == INFINITY

    def test_parse_finite(self):
        assert Width.parse("3") == Width(3)
        assert Width.parse(7).size == 7
        assert str(Width(2)) == "2"
        assert Width(2).label == "S_2"
        assert INFINITY.label == "S_inf"

    @pytest.mark.parametrize("bad", ["0", "-1", "x", 0, -3])
    def test_rejects_invalid(self, bad):
        with pytest.raises(InvalidWidth):
            Width.parse(bad)


@pytest.mark.parametrize("t, expected", [(123456, 21), (0, 0), (999, 27)])
def test_digit_sum(t, expected):
    assert digit_sum(t) == expected


class TestDecompose:
    def test_blocks_of_two(self):
        d = decompose(123456, 2)
        assert [b.value for b in d.blocks] == [56, 34, 12]
        assert [b.digit_sum for b in d.blocks] == [11, 7, 3]
        assert str(d) == "[12][34][56]"

    def test_blocks_of_four(self):
        d = decompose(123456, 4)
        assert [b.value for b in d.blocks] == [3456, 12]
        assert [b.digit_sum for b in d.blocks] == [18, 3]
        assert str(d) == "[12][3456]"

    def test_leading_zero_block(self):
        d = decompose(100, 2)
        assert [b.value for b in d.blocks] == [0, 1]
        assert [b.digit_sum for b in d.blocks] == [0, 1]
        assert [b.digit_count for b in d.blocks] == [2, 1]
        assert str(d) == "[1][00]"
        assert d.numeral() == Numeral.parse("100")

    @pytest.mark.parametrize("w", [Width(6), Width(7), Width(100), INFINITY])
    def test_single_block_when_wide(self, w):
        d = decompose(123456, w)
        assert len(d) == 1
        assert str(d) == "[123456]"

    def test_decomposition_table(self):
        rows = [str(decompose(123456, i)) for i in range(1, 8)]
        assert rows == [
            "[1][2][3][4][5][6]",
            "[12][34][56]",
            "[123][456]",
            "[12][3456]",
            "[1][23456]",
            "[123456]",
            "[123456]",
        ]

    def test_roundtrip_range(self):
        for t in list(range(0, 2000)) + [10 ** 6, 999999, 1000001]:
            for i in range(1, 9):
                d = decompose(t, i)
                assert d.numeral().to_int() == t
                # 最上位以外は i 桁ちょうど
                assert all(b.digit_count == i for b in d.blocks[:-1])
                assert 1 <= d.blocks[-1].digit_count <= i


@pytest.mark.parametrize(
    "block, expected",
    [(Block(56, 11, 2), 616), (Block(0, 0, 2), 0), (Block(3456, 18, 4), 62208)],
)
def test_weighted_block(block, expected):
    assert weighted_block(block) == expected


@pytest.mark.parametrize(
    "i, expected",
    [(1, 91), (2, 890), (3, 7578), (4, 62244), (5, 469121), (6, 2592576), (7, 2592576)],
)
def test_eval_worked_examples(i, expected):
    assert eval_S(123456, i) == expected
    assert eval_S("123456", Width(i)) == expected


def test_eval_small_cases():
    assert eval_S(7, 3) == 49
    assert eval_S(100, 2) == 1
    assert eval_S(0, 5) == 0
    assert eval_S(0, INFINITY) == 0
    assert eval_S(99, 2) == 1782
    assert eval_S(101, 2) == 2


def test_infinity_is_digit_sum_times_t():
    for t in [1, 9, 10, 123456, 98765432109876543210]:
        assert eval_S(t, INFINITY) == digit_sum(t) * t == s_infinity(t)


def test_large_input_exceeds_64_bits():
    t = "9" * 18
    assert eval_S(t, INFINITY) == 162 * (10 ** 18 - 1)
    assert eval_S(t, INFINITY) > 2 ** 64


def test_block_bound():
    for t in [1, 55, 123456, 99999999]:
        for i in range(1, 9):
            assert eval_S(t, i) <= block_bound(t)


class TestDigitGcd:
    @pytest.mark.parametrize("t, expected", [(2468, 2), (123456, 1), (963, 3), (7, 7), (4080, 4)])
    def test_values(self, t, expected):
        assert digit_gcd(t) == expected

    def test_rejects_zero(self):
        with pytest.raises(MalformedNumeral):
            digit_gcd(0)


class TestScaleDown:
    def test_examples(self):
        assert scale_down_digits(2468, 2) == Numeral.parse("1234")
        assert scale_down_digits(777, 7) == Numeral.parse("111")
        assert scale_down_digits(80, 8) == Numeral.parse("10")
        assert scale_down_digits(48, 4) == Numeral.parse("12")

    def test_identity_holds(self):
        assert eval_S(2468, 1) == 120 == 4 * eval_S(1234, 1)

    def test_not_divisible(self):
        with pytest.raises(DigitNotDivisible) as info:
            scale_down_digits(123, 2)
        assert info.value.digit == 1
        assert info.value.position == 0

    def test_rejects_small_k(self):
        with pytest.raises(ValueError):
            scale_down_digits(246, 1)


class TestSurjectivityWitness:
    def test_examples(self):
        assert str(surjectivity_witness(2, 3)) == "10101"
        assert str(surjectivity_witness(1, 4)) == "1111"
        for i in range(1, 10):
            assert str(surjectivity_witness(i, 1)) == "1"

    def test_evaluates_to_target(self):
        assert eval_S(surjectivity_witness(2, 3), 2) == 3
        assert eval_S(surjectivity_witness(3, 50), 3) == 50

    def test_rejects_infinity(self):
        with pytest.raises(InvalidWidth):
            surjectivity_witness(INFINITY, 3)

    def test_rejects_zero_target(self):
        with pytest.raises(ValueError):
            surjectivity_witness(2, 0)


def test_repdigit():
    assert str(repdigit(7, 3)) == "777"
    assert str(repdigit(1, 5)) == "11111"
    assert str(repdigit(9, 1)) == "9"
    with pytest.raises(MalformedNumeral):
        repdigit(0, 3)


def test_composite_witness():
    assert composite_witness(2468, 1) == 2
    assert composite_witness(963, INFINITY) == 3
    with pytest.raises(ValueError):
        composite_witness(123, 1)


class TestBlockValidation:
    @pytest.mark.parametrize("value, digit_sum, digit_count", [
        (5, 5, 0),
        (100, 1, 2),
        (12, 30, 2),
        (10, 0, 2),
        (0, 1, 1),
        (-1, 1, 1),
    ])
    def test_rejects_inconsistent_block(self, value, digit_sum, digit_count):
        with pytest.raises(ValueError):
            Block(value, digit_sum, digit_count)

    def test_leading_zero_block(self):
        assert str(Block(7, 7, 3)) == "007"


class TestLongNumerals:
    def test_matches_block_definition(self):
        rng = random.Random(7)
        for _ in range(200):
            length = rng.randint(60, 400)
            t = Numeral((rng.randint(1, 9),) + tuple(rng.randint(0, 9) for _ in range(length - 1)))
            for w in [Width(i) for i in (1, 2, 3, 7, 15, 16, 18)] + [INFINITY]:
                assert eval_S(t, w) == block_sum(t, w)

    def test_all_nines_width_fifteen(self):
        t = repdigit(9, 150)
        assert eval_S(t, 15) == 10 * (9 * 15) * (10 ** 15 - 1)

    def test_witness_long(self):
        assert eval_S(surjectivity_witness(5, 10 ** 4), 5) == 10 ** 4

    @pytest.mark.parametrize("bad", [(1, 2.0), (True, 1), (1, -1)])
    def test_rejects_non_int_digits(self, bad):
        with pytest.raises(MalformedNumeral):
            Numeral(bad)
