# -*- coding: utf-8 -*-
"""例外クラスと終了コード"""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_ZERO_VARIANCE = 4
EXIT_MISMATCH = 5


class BlockSumError(Exception):
    """全例外の基底クラス"""

    exit_code = EXIT_USAGE


class MalformedNumeral(BlockSumError, ValueError):
    """正規の10進数表記ではない"""


class InvalidWidth(BlockSumError, ValueError):
    """ブロック幅が不正"""


class InvalidRange(BlockSumError, ValueError):
    """範囲指定が不正"""


class DigitNotDivisible(BlockSumError, ValueError):
    """kで割り切れない桁がある"""

    def __init__(self, digit, position, k):
        super().__init__(f"桁 {digit} (位置 {position}) は {k} で割り切れません")
        self.digit = digit
        self.position = position
        self.k = k


class IncompleteSeries(BlockSumError):
    """系列にデケイドの欠落がある"""


class ZeroVariance(BlockSumError, ArithmeticError):
    """平均ベクトルの分散がゼロ"""

    exit_code = EXIT_ZERO_VARIANCE


class EmptySeries(BlockSumError):
    """空の系列"""


class MalformedLine(BlockSumError, ValueError):
    """b-fileの行が解析できない"""

    def __init__(self, line_number, line):
        super().__init__(f"{line_number}行目を解析できません: {line!r}")
        self.line_number = line_number
        self.line = line


class NonConsecutiveIndex(BlockSumError, ValueError):
    """インデックスが連続していない"""

    def __init__(self, expected, found, line_number=None):
        where = f" ({line_number}行目)" if line_number is not None else ""
        super().__init__(f"インデックス {expected} を期待しましたが {found} でした{where}")
        self.expected = expected
        self.found = found
        self.line_number = line_number


class InvalidSequenceId(BlockSumError, ValueError):
    """OEIS番号の形式が不正"""


class NetworkUnavailable(BlockSumError):
    """キャッシュになく、ネットワークからも取得できない"""

    exit_code = EXIT_IO


class SequenceTooShort(BlockSumError):
    """照合に必要な項が足りない"""
