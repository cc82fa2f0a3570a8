# -*- coding: utf-8 -*-
"""
桁ブロック関数 S_i のコア

数値 t を右から i 桁ずつのブロックに分け、各ブロック m について
T(m) = (m の各桁の和) * m を求め、その総和を S_i(t) とする。
幅 INFINITY は数値全体を1ブロックとして扱う (S_inf(t) = 桁和(t) * t)。

整数はすべて Python の多倍長整数で計算するため、桁あふれは起きない。
"""

import math
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Tuple

import numpy as np

from src.errors import DigitNotDivisible, InvalidWidth, MalformedNumeral

INFINITY_TOKENS = ("inf", "infinity", "∞")
DIGITS = frozenset(range(10))

# これより長い数値は numpy でまとめて評価する（ブロック幅が int64 に収まる場合のみ）
VECTOR_MIN_DIGITS = 64
VECTOR_MAX_SPAN = 15


def _to_int(digits):
    return reduce(lambda acc, d: acc * 10 + d, digits, 0)


@dataclass(frozen=True)
class Numeral:
    """10進表記（上位桁から）"""

    digits: Tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise MalformedNumeral("桁がありません")
        if not DIGITS.issuperset(self.digits) or not {int}.issuperset(map(type, self.digits)):
            bad = next(d for d in self.digits if type(d) is not int or d not in DIGITS)
            raise MalformedNumeral(f"不正な桁です: {bad!r}")
        if self.digits[0] == 0 and len(self.digits) > 1:
            raise MalformedNumeral(f"先頭にゼロがあります: {self}")

    @classmethod
    def parse(cls, text):
        """文字列から生成（正規形のみ受け付ける）"""
        text = text.strip()
        if not text or not all("0" <= c <= "9" for c in text):
            raise MalformedNumeral(f"10進数ではありません: {text!r}")
        return cls(tuple(ord(c) - 48 for c in text))

    @classmethod
    def from_int(cls, n):
        if n < 0:
            raise MalformedNumeral(f"負の数は扱えません: {n}")
        return cls(tuple(ord(c) - 48 for c in str(n)))

    def to_int(self):
        return _to_int(self.digits)

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return "".join(chr(48 + d) for d in self.digits)


def as_numeral(t):
    """Numeral・int・str のいずれかを Numeral に揃える"""
    if isinstance(t, Numeral):
        return t
    if isinstance(t, bool):
        raise MalformedNumeral(f"数値ではありません: {t!r}")
    if isinstance(t, int):
        return Numeral.from_int(t)
    if isinstance(t, str):
        return Numeral.parse(t)
    raise MalformedNumeral(f"数値ではありません: {t!r}")


@dataclass(frozen=True)
class Width:
    """ブロック幅（size が None なら INFINITY）"""

    size: Optional[int] = None

    def __post_init__(self):
        if self.size is not None:
            if isinstance(self.size, bool) or not isinstance(self.size, int) or self.size < 1:
                raise InvalidWidth(f"ブロック幅は1以上の整数です: {self.size!r}")

    @classmethod
    def finite(cls, i):
        return cls(i)

    @classmethod
    def parse(cls, text):
        """'inf' または正の整数"""
        if isinstance(text, Width):
            return text
        if isinstance(text, int):
            return cls(text)
        token = str(text).strip().lower()
        if token in INFINITY_TOKENS:
            return INFINITY
        if not token.isdigit():
            raise InvalidWidth(f"ブロック幅を解析できません: {text!r}")
        return cls(int(token))

    @property
    def is_infinite(self):
        return self.size is None

    def span(self, digit_count):
        """digit_count 桁の数値に対する実効幅"""
        if self.size is None or self.size >= digit_count:
            return digit_count
        return self.size

    @property
    def label(self):
        return "S_inf" if self.size is None else f"S_{self.size}"

    def __str__(self):
        return "inf" if self.size is None else str(self.size)


INFINITY = Width(None)


@dataclass(frozen=True)
class Block:
    """1つのブロック（先頭ゼロを含みうる）"""

    value: int
    digit_sum: int
    digit_count: int

    def __post_init__(self):
        if self.digit_count < 1:
            raise ValueError(f"ブロックの桁数は1以上です: {self.digit_count}")
        if not 0 <= self.value < 10 ** self.digit_count:
            raise ValueError(f"{self.value} は {self.digit_count} 桁に収まりません")
        if not 0 <= self.digit_sum <= 9 * self.digit_count:
            raise ValueError(f"桁和が範囲外です: {self.digit_sum}")
        if (self.digit_sum == 0) != (self.value == 0):
            raise ValueError(f"桁和 {self.digit_sum} と値 {self.value} が矛盾します")

    def __str__(self):
        return f"{self.value:0{self.digit_count}d}"


@dataclass(frozen=True)
class BlockDecomposition:
    """ブロック分解（下位ブロックから）"""

    width: Width
    blocks: Tuple[Block, ...]

    def numeral(self):
        """ブロックを上位から連結して元の数値を復元"""
        return Numeral.parse("".join(str(b) for b in reversed(self.blocks)))

    def __len__(self):
        return len(self.blocks)

    def __str__(self):
        # [12][34][56] の形
        return "".join(f"[{b}]" for b in reversed(self.blocks))


def digit_sum(t):
    """各桁の和"""
    return sum(as_numeral(t).digits)


def decompose(t, w):
    """右から w 桁ずつのブロックに分解"""
    t = as_numeral(t)
    w = Width.parse(w)
    digits = t.digits
    span = w.span(len(digits))

    blocks = []
    for end in range(len(digits), 0, -span):
        chunk = digits[max(0, end - span):end]
        blocks.append(Block(value=_to_int(chunk), digit_sum=sum(chunk), digit_count=len(chunk)))
    return BlockDecomposition(width=w, blocks=tuple(blocks))


def weighted_block(b):
    """T(m) = 桁和 * m"""
    return b.digit_sum * b.value


def _eval_vectorized(digits, span):
    # 先頭をゼロ埋めしても最上位ブロックの値と桁和は変わらない
    arr = np.frombuffer(bytes(digits), dtype=np.uint8).astype(np.int64)
    pad = (-len(arr)) % span
    blocks = np.concatenate([np.zeros(pad, dtype=np.int64), arr]).reshape(-1, span)
    powers = 10 ** np.arange(span - 1, -1, -1, dtype=np.int64)
    terms = (blocks @ powers) * blocks.sum(axis=1)
    return sum(terms.tolist())


def eval_S(t, w):
    """S_w(t)（Block を作らずに評価）"""
    digits = as_numeral(t).digits
    span = Width.parse(w).span(len(digits))
    if len(digits) >= VECTOR_MIN_DIGITS and span <= VECTOR_MAX_SPAN:
        return _eval_vectorized(digits, span)

    total = 0
    for end in range(len(digits), 0, -span):
        chunk = digits[max(0, end - span):end]
        total += sum(chunk) * _to_int(chunk)
    return total


def s_infinity(t):
    """S_inf(t) = 桁和(t) * t （OEIS A057147）"""
    t = as_numeral(t)
    return sum(t.digits) * t.to_int()


def block_bound(t):
    """S_w(t) の粗い上限 9 * 桁数 * t（桁あふれの番兵）"""
    t = as_numeral(t)
    return 9 * len(t) * t.to_int()


def digit_gcd(t):
    """全桁の最大公約数"""
    t = as_numeral(t)
    if t.to_int() == 0:
        raise MalformedNumeral("0 の桁GCDは定義されません")
    return reduce(math.gcd, t.digits)


def scale_down_digits(t, k):
    """各桁を k で割った数値 b を返す（S_w(t) = k^2 * S_w(b)）"""
    t = as_numeral(t)
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ValueError(f"k は2以上の整数です: {k!r}")

    scaled = []
    for position, d in enumerate(t.digits):
        if d % k:
            raise DigitNotDivisible(d, position, k)
        scaled.append(d // k)

    # 先頭桁は非ゼロかつ k の倍数なので商は1以上
    assert scaled[0] != 0 or len(scaled) == 1
    return Numeral(tuple(scaled))


def composite_witness(t, w):
    """
    桁GCD k > 1 の数値について、S_w(t) の非自明な約数 k を返す

    S_w(t) = k^2 * S_w(b) かつ S_w(b) >= 1 なので、1 < k < S_w(t) で k が割り切る。
    """
    k = digit_gcd(t)
    if k < 2:
        raise ValueError(f"{t} の桁は共通因子を持ちません")
    value = eval_S(t, w)
    assert value % k == 0 and 1 < k < value
    return k


def surjectivity_witness(w, n):
    """S_i(t) = n となる t = 1 (0..01)^(n-1) を構成"""
    w = Width.parse(w)
    if w.is_infinite:
        raise InvalidWidth("全射性の証拠は有限幅のみ構成できます")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n は1以上の整数です: {n!r}")

    group = (0,) * (w.size - 1) + (1,)
    return Numeral((1,) + group * (n - 1))


def repdigit(a, n):
    """a を n 個並べた数値"""
    if not 1 <= a <= 9:
        raise MalformedNumeral(f"桁は1〜9です: {a!r}")
    if n < 1:
        raise ValueError(f"桁数は1以上です: {n!r}")
    return Numeral((a,) * n)
