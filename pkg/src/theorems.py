# -*- coding: utf-8 -*-
"""
S_i の性質（平方・桁スケーリング・合成数性・全射性など）を実行して検査する

各 check_* は検査したケース数と、見つかった場合は最初の反例を返す。
"""

import logging
import random
from dataclasses import dataclass
from typing import Optional

from src.core import (
    INFINITY,
    Numeral,
    Width,
    composite_witness,
    decompose,
    eval_S,
    repdigit,
    scale_down_digits,
    surjectivity_witness,
)

logger = logging.getLogger(__name__)

STANDARD_WIDTHS = tuple(Width(i) for i in range(1, 9)) + (INFINITY,)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    cases: int
    counterexample: Optional[str] = None

    @property
    def ok(self):
        return self.counterexample is None


def random_divisible_numeral(rng, k, max_digits=12):
    """全桁が k の倍数の数値をランダムに生成"""
    lead = [d for d in range(1, 10) if d % k == 0]
    rest = [d for d in range(10) if d % k == 0]
    length = rng.randint(1, max_digits)
    return Numeral((rng.choice(lead),) + tuple(rng.choice(rest) for _ in range(length - 1)))


def check_decomposition_roundtrip(limit=10 ** 4, max_width=8):
    cases = 0
    for t in range(limit + 1):
        for i in range(1, max_width + 1):
            cases += 1
            if decompose(t, i).numeral().to_int() != t:
                return PropertyResult("decomposition", cases, f"t={t}, i={i}")
    return PropertyResult("decomposition", cases)


def check_single_digit_squares(max_width=20):
    """0 <= t <= 9 なら S_i(t) = t^2"""
    cases = 0
    for t in range(10):
        for w in [Width(i) for i in range(1, max_width + 1)] + [INFINITY]:
            cases += 1
            if eval_S(t, w) != t * t:
                return PropertyResult("single_digit", cases, f"t={t}, w={w}")
    return PropertyResult("single_digit", cases)


def check_digit_scaling(samples=1000, seed=0, widths=STANDARD_WIDTHS):
    """全桁が k で割り切れるなら S_i(t) = k^2 * S_i(b)"""
    rng = random.Random(seed)
    cases = 0
    for k in (2, 3):
        for _ in range(samples):
            t = random_divisible_numeral(rng, k)
            b = scale_down_digits(t, k)
            for w in widths:
                cases += 1
                if eval_S(t, w) != k * k * eval_S(b, w):
                    return PropertyResult("digit_scaling", cases, f"t={t}, k={k}, w={w}")
    return PropertyResult("digit_scaling", cases)


def check_repdigit_scaling(max_n=10, widths=STANDARD_WIDTHS):
    """S_i(aa..a) = a^2 * S_i(11..1)"""
    cases = 0
    for a in range(1, 10):
        for n in range(1, max_n + 1):
            for w in widths:
                cases += 1
                if eval_S(repdigit(a, n), w) != a * a * eval_S(repdigit(1, n), w):
                    return PropertyResult("repdigit", cases, f"a={a}, n={n}, w={w}")
    return PropertyResult("repdigit", cases)


def check_composite_values(samples=1000, seed=0, widths=STANDARD_WIDTHS):
    """桁GCD > 1 なら S_i(t) は合成数"""
    rng = random.Random(seed)
    cases = 0
    for _ in range(samples):
        t = random_divisible_numeral(rng, rng.choice((2, 3, 5, 7)))
        for w in widths:
            cases += 1
            factor = composite_witness(t, w)
            value = eval_S(t, w)
            if not (1 < factor < value and value % factor == 0):
                return PropertyResult("composite", cases, f"t={t}, w={w}")
    return PropertyResult("composite", cases)


def check_not_injective(max_width=8):
    """S_i(1) = S_i(10^i) = 1 なので S_i は単射でない"""
    cases = 0
    for i in range(1, max_width + 1):
        cases += 1
        if not eval_S(1, i) == eval_S(10 ** i, i) == 1:
            return PropertyResult("not_injective", cases, f"i={i}")
    return PropertyResult("not_injective", cases)


def check_surjectivity(max_width=5, max_n=300):
    """surjectivity_witness(i, n) で S_i が n を取る"""
    cases = 0
    for i in range(1, max_width + 1):
        for n in range(1, max_n + 1):
            cases += 1
            if eval_S(surjectivity_witness(i, n), i) != n:
                return PropertyResult("surjective", cases, f"i={i}, n={n}")
    return PropertyResult("surjective", cases)


def check_width_saturation(limit=10 ** 4, extra=3):
    """桁数 d 以上の幅 i では S_i(t) = S_inf(t)"""
    cases = 0
    for t in range(limit + 1):
        d = len(str(t))
        for i in range(d, d + extra):
            cases += 1
            if eval_S(t, i) != eval_S(t, INFINITY):
                return PropertyResult("saturation", cases, f"t={t}, i={i}")
    return PropertyResult("saturation", cases)


def run_all(samples=1000, seed=0):
    results = [
        check_decomposition_roundtrip(),
        check_single_digit_squares(),
        check_digit_scaling(samples, seed),
        check_repdigit_scaling(),
        check_composite_values(samples, seed),
        check_not_injective(),
        check_surjectivity(),
        check_width_saturation(),
    ]
    for result in results:
        if result.ok:
            logger.info(f"{result.name}: {result.cases} ケースで成立")
        else:
            logger.error(f"{result.name}: 反例 {result.counterexample}")
    return results
