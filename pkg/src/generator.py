# -*- coding: utf-8 -*-
"""
系列 (S_i(1), S_i(2), ...) の高速生成

generate_naive は各項をコアの定義どおりに評価する基準実装。
generate_incremental はオドメーター（桁配列とブロックごとの桁和・値のキャッシュ）を
1ずつ進め、繰り上がりで変化したブロックだけを更新する。
範囲はチャンクに分割してワーカーで並列に計算でき、結果は常にインデックス順に結合する。
"""

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Tuple

import numpy as np

from src.core import Width, eval_S
from src.errors import InvalidRange

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 2 ** 16
UINT64_MAX = 2 ** 64 - 1

# (index, value) の昇順ストリーム
TermStream = Iterator[Tuple[int, int]]


@dataclass(frozen=True)
class RangeRequest:
    """生成範囲 [start, end]"""

    width: Width
    start: int
    end: int
    chunk_size: int = DEFAULT_CHUNK_SIZE

    def __post_init__(self):
        if not isinstance(self.width, Width):
            object.__setattr__(self, "width", Width.parse(self.width))
        if self.start < 1:
            raise InvalidRange(f"開始インデックスは1以上です: {self.start}")
        if self.end < self.start:
            raise InvalidRange(f"終了インデックス {self.end} が開始 {self.start} より前です")
        if self.chunk_size < 1:
            raise InvalidRange(f"チャンクサイズは1以上です: {self.chunk_size}")

    def __len__(self):
        return self.end - self.start + 1


@dataclass(frozen=True)
class SeriesChunk:
    """連続した項のまとまり"""

    first_index: int
    values: Tuple[int, ...]

    @property
    def last_index(self):
        return self.first_index + len(self.values) - 1

    def items(self):
        return zip(range(self.first_index, self.first_index + len(self.values)), self.values)

    def to_array(self):
        """64ビットに収まれば uint64、そうでなければ object 配列"""
        if self.values and max(self.values) > UINT64_MAX:
            return np.array(self.values, dtype=object)
        return np.array(self.values, dtype=np.uint64)

    def __len__(self):
        return len(self.values)


class OdometerState:
    """
    現在のインデックスの桁（下位から）と、ブロックごとの桁和・値・項のキャッシュ

    有限幅 i では桁位置 p はブロック p // i の 10^(p % i) の位。
    INFINITY は全桁が1つのブロックに入る。
    """

    def __init__(self, width, start):
        width = Width.parse(width)
        if start < 1:
            raise InvalidRange(f"開始インデックスは1以上です: {start}")
        self.width = width
        self.index = start
        self.span = sys.maxsize if width.is_infinite else width.size

        self.digits = [ord(c) - 48 for c in reversed(str(start))]
        self.powers = [1]
        while len(self.powers) < len(self.digits):
            self.powers.append(self.powers[-1] * 10)

        self.sums = []
        self.values = []
        for p, d in enumerate(self.digits):
            b, k = divmod(p, self.span)
            if b == len(self.sums):
                self.sums.append(0)
                self.values.append(0)
            self.sums[b] += d
            self.values[b] += d * self.powers[k]
        self.terms = [s * v for s, v in zip(self.sums, self.values)]
        self.total = sum(self.terms)
        # 直近の advance で変化した桁数とブロック数
        self.flipped = 0
        self.touched = 0

    def advance(self):
        """インデックスを1進め、新しい S 値を返す"""
        digits = self.digits
        sums = self.sums
        values = self.values
        powers = self.powers
        span = self.span

        p = 0
        while True:
            if p == len(digits):
                # 桁が増える
                digits.append(1)
                powers.append(powers[-1] * 10)
                b, k = divmod(p, span)
                if b == len(sums):
                    sums.append(0)
                    values.append(0)
                    self.terms.append(0)
                sums[b] += 1
                values[b] += powers[k]
                break
            b, k = divmod(p, span)
            if digits[p] == 9:
                digits[p] = 0
                sums[b] -= 9
                values[b] -= 9 * powers[k]
                p += 1
            else:
                digits[p] += 1
                sums[b] += 1
                values[b] += powers[k]
                break

        # 変化したのはブロック 0..b のみ
        terms = self.terms
        total = self.total
        for j in range(b + 1):
            term = sums[j] * values[j]
            total += term - terms[j]
            terms[j] = term
        self.total = total
        self.index += 1
        self.flipped = p + 1
        self.touched = b + 1
        return total

    def verify(self):
        """桁配列から全ブロックを計算し直し、キャッシュと一致するか確認"""
        fresh = OdometerState(self.width, self.index)
        return (
            fresh.digits == self.digits
            and fresh.sums == self.sums
            and fresh.values == self.values
            and fresh.total == self.total == eval_S(self.index, self.width)
        )


def generate_naive(req):
    """定義どおりに各項を評価"""
    for n in range(req.start, req.end + 1):
        yield n, eval_S(n, req.width)


def generate_incremental(req):
    """オドメーターで各項を計算（generate_naive と同一の出力）"""
    odometer = OdometerState(req.width, req.start)
    yield req.start, odometer.total
    advance = odometer.advance
    for n in range(req.start + 1, req.end + 1):
        yield n, advance()


def partition(req):
    """chunk_size 以下の連続した部分範囲に分割"""
    return [
        RangeRequest(req.width, lo, min(lo + req.chunk_size - 1, req.end), req.chunk_size)
        for lo in range(req.start, req.end + 1, req.chunk_size)
    ]


def compute_chunk(req, incremental=True):
    """1チャンク分を計算（ワーカーで実行される）"""
    source = generate_incremental(req) if incremental else generate_naive(req)
    return SeriesChunk(first_index=req.start, values=tuple(value for _, value in source))


def _compute_incremental(req):
    return compute_chunk(req, True)


def _compute_naive(req):
    return compute_chunk(req, False)


def generate_chunks(req, jobs=1, incremental=True):
    """チャンク単位で生成し、インデックス順に返す"""
    parts = partition(req)
    logger.info(f"{req.width.label} の範囲 {req.start}..{req.end} を {len(parts)} チャンクで生成します (jobs={jobs})")
    worker = _compute_incremental if incremental else _compute_naive

    if jobs <= 1 or len(parts) == 1:
        for part in parts:
            yield worker(part)
        return

    # map は入力順に結果を返すため結合順は決定的
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        for chunk in executor.map(worker, parts):
            yield chunk


def stream(req, jobs=1, incremental=True):
    """チャンクを平坦化した (index, value) ストリーム"""
    for chunk in generate_chunks(req, jobs=jobs, incremental=incremental):
        yield from chunk.items()
