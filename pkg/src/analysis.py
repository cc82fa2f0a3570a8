# -*- coding: utf-8 -*-
"""
デケイド間の自己相似性の定量化

デケイド d はインデックス [10^d, 10^(d+1)) （d = 0 は 1..9）。
各デケイドを B 個の等幅ビンに分け、ビンごとの平均を正確な有理数で求める。
x 軸を [0, 1) に正規化した2つの平均ベクトルのピアソン相関を類似度とする。
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from src.core import Width
from src.errors import EmptySeries, IncompleteSeries, InvalidRange, ZeroVariance
from src.generator import DEFAULT_CHUNK_SIZE, RangeRequest, stream

logger = logging.getLogger(__name__)

DEFAULT_BINS = 100


@dataclass(frozen=True)
class DecadeSpec:
    width: Width
    decade: int
    bins: int = DEFAULT_BINS

    def __post_init__(self):
        if not isinstance(self.width, Width):
            object.__setattr__(self, "width", Width.parse(self.width))
        if self.decade < 0:
            raise InvalidRange(f"デケイドは0以上です: {self.decade}")
        if self.bins < 2:
            raise InvalidRange(f"ビン数は2以上です: {self.bins}")
        if self.bins > self.length:
            raise InvalidRange(f"ビン数 {self.bins} がデケイドの長さ {self.length} を超えています")

    @property
    def lo(self):
        # 系列はインデックス1から始まる
        return 1 if self.decade == 0 else 10 ** self.decade

    @property
    def hi(self):
        """終端（含まない）"""
        return 10 ** (self.decade + 1)

    @property
    def length(self):
        return self.hi - self.lo

    def bin_bounds(self):
        """各ビンの開始インデックスと終端（長さ B + 1）"""
        return [self.lo + (j * self.length) // self.bins for j in range(self.bins + 1)]

    def normalization(self):
        return Normalization(offset=self.lo, scale=self.length)

    def request(self, chunk_size=DEFAULT_CHUNK_SIZE):
        return RangeRequest(self.width, self.lo, self.hi - 1, chunk_size)


@dataclass(frozen=True)
class Normalization:
    """x' = (x - offset) / scale"""

    offset: int
    scale: int

    def apply(self, x):
        return Fraction(x - self.offset, self.scale)


@dataclass(frozen=True)
class SimilarityReport:
    width: Width
    decade_a: int
    decade_b: int
    bins: int
    means_a: Tuple[Fraction, ...]
    means_b: Tuple[Fraction, ...]
    pearson_r: float
    normalization_a: Normalization
    normalization_b: Normalization

    def bin_centers(self):
        """正規化後のビン中心"""
        return [Fraction(2 * j + 1, 2 * self.bins) for j in range(self.bins)]


@dataclass(frozen=True)
class SeriesSummary:
    min: int
    max: int
    mean: Fraction
    count: int


def bin_decade(series, spec):
    """デケイドを B 個のビンに分け、各ビンの平均を返す"""
    bounds = spec.bin_bounds()
    sums = [0] * spec.bins
    expected = spec.lo
    j = 0

    for index, value in series:
        if index < spec.lo:
            continue
        if index >= spec.hi:
            break
        if index != expected:
            raise IncompleteSeries(f"デケイド {spec.decade} でインデックス {expected} が欠けています")
        while index >= bounds[j + 1]:
            j += 1
        sums[j] += value
        expected += 1

    if expected != spec.hi:
        raise IncompleteSeries(f"デケイド {spec.decade} はインデックス {expected} 以降が欠けています")

    return [Fraction(s, bounds[k + 1] - bounds[k]) for k, s in enumerate(sums)]


def pearson(xs, ys):
    """ピアソン相関係数（[-1, 1] に切り詰め）"""
    if len(xs) != len(ys):
        raise ValueError(f"長さが一致しません: {len(xs)} と {len(ys)}")
    if len(set(xs)) < 2 or len(set(ys)) < 2:
        raise ZeroVariance("平均ベクトルが定数のため相関を定義できません")

    a = np.array([float(x) for x in xs], dtype=np.float64)
    b = np.array([float(y) for y in ys], dtype=np.float64)
    r = float(np.corrcoef(a, b)[0, 1])
    return min(1.0, max(-1.0, r))


def compare_decades(a, b, series):
    """2つのデケイドのビン平均を比較"""
    if a.width != b.width:
        raise ValueError(f"幅が一致しません: {a.width} と {b.width}")
    if a.bins != b.bins:
        raise ValueError(f"ビン数が一致しません: {a.bins} と {b.bins}")

    terms = series if isinstance(series, Sequence) else list(series)
    return similarity_from_means(a, b, bin_decade(terms, a), bin_decade(terms, b))


def similarity_from_means(a, b, means_a, means_b):
    """ビン平均のベクトルから SimilarityReport を作る"""
    try:
        r = pearson(means_a, means_b)
    except ZeroVariance:
        logger.warning(f"{a.width.label} のデケイド {a.decade} と {b.decade} は分散がゼロです")
        raise

    return SimilarityReport(
        width=a.width,
        decade_a=a.decade,
        decade_b=b.decade,
        bins=a.bins,
        means_a=tuple(means_a),
        means_b=tuple(means_b),
        pearson_r=r,
        normalization_a=a.normalization(),
        normalization_b=b.normalization(),
    )


def measure_similarity(width, decade_a, decade_b, bins=DEFAULT_BINS, jobs=1, chunk_size=DEFAULT_CHUNK_SIZE):
    """両デケイドを生成して比較"""
    spec_a = DecadeSpec(Width.parse(width), decade_a, bins)
    spec_b = DecadeSpec(Width.parse(width), decade_b, bins)

    # 各デケイドをストリームのままビン集計する（系列全体は保持しない）
    means_a = bin_decade(stream(spec_a.request(chunk_size), jobs=jobs), spec_a)
    if spec_b == spec_a:
        means_b = means_a
    else:
        means_b = bin_decade(stream(spec_b.request(chunk_size), jobs=jobs), spec_b)

    return similarity_from_means(spec_a, spec_b, means_a, means_b)


def summary_stats(series):
    """最小・最大・平均・件数"""
    count = 0
    total = 0
    lo = hi = None
    for _, value in series:
        count += 1
        total += value
        if lo is None or value < lo:
            lo = value
        if hi is None or value > hi:
            hi = value

    if count == 0:
        raise EmptySeries("系列が空です")
    return SeriesSummary(min=lo, max=hi, mean=Fraction(total, count), count=count)
