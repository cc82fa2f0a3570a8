# -*- coding: utf-8 -*-
"""サブコマンド（コマンドパターン）"""

import logging
import sys

from src import analysis, oeis, theorems
from src.benchmark import run_benchmark
from src.core import INFINITY, Numeral, Width, decompose, eval_S, surjectivity_witness
from src.errors import EXIT_MISMATCH, EXIT_OK, InvalidRange, InvalidWidth
from src.generator import RangeRequest, stream
from src.plot import render_svg
from src.report import (
    OutputFormat,
    format_similarity_text,
    write_series,
    write_similarity_csv,
)

logger = logging.getLogger(__name__)

# 机上で生成できるデケイドの上限
MAX_DECADE = 6
MAX_PLOT_X = 10 ** 7


class Command:
    """コマンドパターンの基底クラス"""

    def __init__(self, args, settings, out=None):
        self.args = args
        self.settings = settings
        self.out = out or sys.stdout

    def execute(self):
        """コマンドを実行し、終了コードを返す"""
        raise NotImplementedError

    def setting(self, name):
        """フラグがあればフラグ、なければ設定値"""
        value = getattr(self.args, name, None)
        return self.settings[name] if value is None else value

    def echo(self, text=""):
        print(text, file=self.out)


def _open_output(path, newline="\n"):
    if path in (None, "-"):
        return None
    return open(path, "w", encoding="utf-8", newline=newline)


class EvalCommand(Command):
    """S_i(t) を表示"""

    def execute(self):
        t = Numeral.parse(self.args.number)
        self.echo(eval_S(t, self.args.width))
        return EXIT_OK


class DecomposeCommand(Command):
    """ブロック分解の表（"Blocks of i digits: [12][34][56]"）"""

    def execute(self):
        t = Numeral.parse(self.args.number)
        if self.args.width is not None:
            widths = [self.args.width]
        else:
            widths = [Width(i) for i in range(1, len(t) + 2)] + [INFINITY]

        for w in widths:
            unit = "digit" if w.size == 1 else "digits"
            size = "inf" if w.is_infinite else w.size
            self.echo(f"Blocks of {size} {unit}: {decompose(t, w)}  {w.label} = {eval_S(t, w)}")
        return EXIT_OK


class GenCommand(Command):
    """系列を CSV または b-file で出力"""

    def execute(self):
        fmt = OutputFormat.parse(self.args.format, allowed=(OutputFormat.CSV, OutputFormat.BFILE))
        req = RangeRequest(self.args.width, self.args.start, self.args.end, self.setting("chunk_size"))
        terms = stream(req, jobs=self.setting("jobs"), incremental=not self.args.naive)

        fh = _open_output(self.args.out)
        try:
            rows = write_series(terms, fh or self.out, fmt)
        finally:
            if fh:
                fh.close()
        logger.info(f"{rows} 行を出力しました ({fmt.value})")
        return EXIT_OK


class WitnessCommand(Command):
    """S_i(t) = n となる t を構成し、検算結果とともに表示"""

    def execute(self):
        width = self.args.width
        if width.is_infinite:
            raise InvalidWidth("witness には有限の幅を指定してください")
        t = surjectivity_witness(width, self.args.target)
        self.echo(f"{t} ({width.label} = {eval_S(t, width)})")
        return EXIT_OK


class AnalyzeCommand(Command):
    """2つのデケイドの類似度を計算"""

    def execute(self):
        for d in (self.args.decade_a, self.args.decade_b):
            if d > MAX_DECADE:
                raise InvalidRange(f"デケイドは {MAX_DECADE} 以下です: {d}")
        fmt = OutputFormat.parse(self.args.format, allowed=(OutputFormat.TEXT, OutputFormat.CSV))

        report = analysis.measure_similarity(
            self.args.width,
            self.args.decade_a,
            self.args.decade_b,
            bins=self.setting("bins"),
            jobs=self.setting("jobs"),
            chunk_size=self.setting("chunk_size"),
        )

        fh = _open_output(self.args.out)
        try:
            target = fh or self.out
            if fmt is OutputFormat.CSV:
                write_similarity_csv(report, target)
            else:
                target.write(format_similarity_text(report))
        finally:
            if fh:
                fh.close()
        return EXIT_OK


class PlotCommand(Command):
    """散布図を SVG で保存"""

    def execute(self):
        if self.args.max_x > MAX_PLOT_X:
            raise InvalidRange(f"max_x は {MAX_PLOT_X} 以下です: {self.args.max_x}")
        render_svg(
            self.args.width,
            self.args.max_x,
            self.args.out,
            jobs=self.setting("jobs"),
            chunk_size=self.setting("chunk_size"),
            point_limit=self.settings["plot_point_limit"],
            columns=self.settings["plot_columns"],
        )
        return EXIT_OK


class OeisCheckCommand(Command):
    """OEIS の系列と S_i を照合"""

    def execute(self):
        allow_network = self.settings["allow_network"] and not self.args.offline
        report = oeis.cross_check(
            self.args.id,
            self.args.width,
            self.args.count,
            self.setting("cache_dir"),
            allow_network=allow_network,
            timeout=self.settings["timeout"],
        )
        if report.clean:
            self.echo(f"CLEAN ({report.sequence_id} = {report.width.label} for n=1..{report.count})")
            return EXIT_OK

        self.echo(
            f"mismatch at n={report.mismatch_index} "
            f"({report.width.label}={report.actual}, {report.sequence_id}={report.expected})"
        )
        return EXIT_MISMATCH


class TheoremsCommand(Command):
    """定理を性質として検査"""

    def execute(self):
        results = theorems.run_all(samples=self.args.samples, seed=self.args.seed)
        for result in results:
            if result.ok:
                self.echo(f"{result.name}: ok ({result.cases} cases)")
            else:
                self.echo(f"{result.name}: counterexample {result.counterexample}")
        return EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH


class BenchCommand(Command):
    """素朴な評価とオドメーターの速度比較"""

    def execute(self):
        result = run_benchmark(self.args.width, self.args.count, include_naive=not self.args.skip_naive)
        self.echo(f"terms: {result.terms}")
        self.echo(f"incremental: {result.incremental_seconds:.3f} s")
        if result.naive_seconds is not None:
            self.echo(f"naive: {result.naive_seconds:.3f} s")
            self.echo(f"speedup: {result.speedup:.2f}x")
        return EXIT_OK


COMMANDS = {
    "eval": EvalCommand,
    "decompose": DecomposeCommand,
    "gen": GenCommand,
    "witness": WitnessCommand,
    "analyze": AnalyzeCommand,
    "plot": PlotCommand,
    "oeis-check": OeisCheckCommand,
    "theorems": TheoremsCommand,
    "bench": BenchCommand,
}
