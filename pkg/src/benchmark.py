# -*- coding: utf-8 -*-
"""素朴な評価とオドメーターの速度比較"""

import logging
import time
from dataclasses import dataclass
from typing import Optional

from src.generator import RangeRequest, generate_incremental, generate_naive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchmarkResult:
    width: str
    terms: int
    incremental_seconds: float
    naive_seconds: Optional[float] = None

    @property
    def speedup(self):
        if self.naive_seconds is None or self.incremental_seconds == 0:
            return None
        return self.naive_seconds / self.incremental_seconds


def _drain(source):
    # 最後の値だけ保持して系列を消費
    last = None
    for last in source:
        pass
    return last


def run_benchmark(width, count, include_naive=True):
    """1..count を単一スレッドで生成し所要時間を測る"""
    req = RangeRequest(width, 1, count)

    started = time.perf_counter()
    fast = _drain(generate_incremental(req))
    incremental_seconds = time.perf_counter() - started

    naive_seconds = None
    if include_naive:
        started = time.perf_counter()
        slow = _drain(generate_naive(req))
        naive_seconds = time.perf_counter() - started
        if slow != fast:
            raise AssertionError(f"最終項が一致しません: {slow} != {fast}")

    result = BenchmarkResult(str(req.width), count, incremental_seconds, naive_seconds)
    logger.info(f"ベンチマーク {req.width.label} x {count}: {result}")
    return result
