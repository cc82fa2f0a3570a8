# -*- coding: utf-8 -*-
"""
BlockSum コマンドラインインターフェース

  eval        S_i(t) を計算
  decompose   ブロック分解の表を表示
  gen         系列を CSV / b-file で出力
  witness     S_i(t) = n となる t を構成
  analyze     デケイド間の自己相似性を測定
  plot        散布図を SVG で保存
  oeis-check  OEIS の系列と照合
  theorems    定理を性質として検査
  bench       生成速度の測定
"""

import argparse
import logging
import sys

from src.__version__ import __version__, __description__
from src.commands import COMMANDS
from src.core import Width
from src.errors import EXIT_IO, EXIT_USAGE, BlockSumError
from src.logger import setup_logger
from src.report import OutputFormat
from src.settings import load_settings

logger = logging.getLogger(__name__)

APP_NAME = "blocksum"


def positive_int(text):
    """1以上の整数"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"整数ではありません: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"1以上の整数を指定してください: {text!r}")
    return value


def non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"整数ではありません: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"0以上の整数を指定してください: {text!r}")
    return value


def width_arg(text):
    """'inf' または正の整数"""
    try:
        return Width.parse(text)
    except BlockSumError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _add_parallel_options(parser):
    parser.add_argument('--jobs', type=positive_int, help='ワーカー数（既定 1）')
    parser.add_argument('--chunk-size', dest='chunk_size', type=positive_int, help='チャンクの項数')


def build_parser():
    parser = argparse.ArgumentParser(prog=APP_NAME, description=__description__)
    parser.add_argument('--version', action='version', version=f'{APP_NAME} {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true', help='詳細ログを標準エラーにも出力')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    p = sub.add_parser('eval', help='S_i(t) を計算')
    p.add_argument('number', help='10進数')
    p.add_argument('--width', type=width_arg, required=True, help="ブロック幅（正の整数または inf）")

    p = sub.add_parser('decompose', help='ブロック分解を表示')
    p.add_argument('number', help='10進数')
    p.add_argument('--width', type=width_arg, help='省略時は 1..桁数+1 と inf の表')

    p = sub.add_parser('gen', help='系列を出力')
    p.add_argument('--width', type=width_arg, required=True)
    p.add_argument('--start', type=positive_int, default=1)
    p.add_argument('--end', type=positive_int, required=True)
    p.add_argument('--format', choices=[OutputFormat.CSV.value, OutputFormat.BFILE.value],
                   default=OutputFormat.CSV.value)
    p.add_argument('--out', default='-', help="出力先（'-' は標準出力）")
    p.add_argument('--naive', action='store_true', help='定義どおりの評価で生成')
    _add_parallel_options(p)

    p = sub.add_parser('witness', help='全射性の証拠を構成')
    p.add_argument('--width', type=width_arg, required=True)
    p.add_argument('--target', type=positive_int, required=True)

    p = sub.add_parser('analyze', help='デケイド間の類似度')
    p.add_argument('--width', type=width_arg, required=True)
    p.add_argument('--decade-a', dest='decade_a', type=non_negative_int, required=True)
    p.add_argument('--decade-b', dest='decade_b', type=non_negative_int, required=True)
    p.add_argument('--bins', type=positive_int)
    p.add_argument('--format', choices=[OutputFormat.TEXT.value, OutputFormat.CSV.value],
                   default=OutputFormat.TEXT.value)
    p.add_argument('--out', default='-')
    _add_parallel_options(p)

    p = sub.add_parser('plot', help='散布図を SVG で保存')
    p.add_argument('--width', type=width_arg, required=True)
    p.add_argument('--max-x', dest='max_x', type=positive_int, required=True)
    p.add_argument('--out', required=True, help='SVG ファイル')
    _add_parallel_options(p)

    p = sub.add_parser('oeis-check', help='OEIS の系列と照合')
    p.add_argument('id', help='OEIS番号（例: A057147）')
    p.add_argument('--width', type=width_arg, required=True)
    p.add_argument('--count', type=positive_int, default=1000)
    p.add_argument('--cache-dir', dest='cache_dir', help='b-file のキャッシュディレクトリ')
    p.add_argument('--offline', action='store_true', help='ネットワークにアクセスしない')

    p = sub.add_parser('theorems', help='定理を検査')
    p.add_argument('--samples', type=positive_int, default=1000)
    p.add_argument('--seed', type=int, default=0)

    p = sub.add_parser('bench', help='生成速度を測定')
    p.add_argument('--width', type=width_arg, default=Width(1))
    p.add_argument('--count', type=positive_int, default=10 ** 6)
    p.add_argument('--skip-naive', dest='skip_naive', action='store_true')

    return parser


def main(argv=None):
    """エントリーポイント"""
    settings = load_settings()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    setup_logger(settings["log_dir"], verbose=args.verbose)
    logger.debug(f"{APP_NAME} {__version__}: {args}")

    command = COMMANDS[args.command](args, settings)
    try:
        return command.execute()
    except BlockSumError as e:
        logger.error(f"{args.command} でエラー: {e}")
        print(f"エラー: {e}", file=sys.stderr)
        return e.exit_code
    except ValueError as e:
        logger.error(f"{args.command} で入力エラー: {e}")
        print(f"エラー: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"{args.command} で入出力エラー: {e}")
        print(f"入出力エラー: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
