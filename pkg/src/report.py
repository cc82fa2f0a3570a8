# -*- coding: utf-8 -*-
"""出力形式（CSV・b-file・テキスト）"""

import csv
from enum import Enum

from src.oeis import iter_bfile_lines

CSV_HEADER = ("n", "s")


class OutputFormat(Enum):
    CSV = "csv"
    BFILE = "bfile"
    SVG = "svg"
    TEXT = "text"

    @classmethod
    def parse(cls, text, allowed=None):
        """文字列から形式を決定（allowed 以外は拒否）"""
        try:
            fmt = cls(str(text).lower())
        except ValueError:
            raise ValueError(f"未対応の出力形式です: {text!r}") from None
        if allowed is not None and fmt not in allowed:
            raise ValueError(f"この出力には {fmt.value} 形式を使えません")
        return fmt


def write_series(terms, fh, fmt):
    """(index, value) の系列を書き出し、行数を返す"""
    rows = 0
    if fmt is OutputFormat.CSV:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for index, value in terms:
            writer.writerow((index, value))
            rows += 1
    elif fmt is OutputFormat.BFILE:
        for line in iter_bfile_lines(terms):
            fh.write(line)
            rows += 1
    else:
        raise ValueError(f"系列は {fmt.value} 形式で出力できません")
    return rows


def format_r(r):
    return f"{r:.12f}"


def format_similarity_text(report):
    """行単位のテキスト形式"""
    na, nb = report.normalization_a, report.normalization_b
    lines = [
        f"width: {report.width}",
        f"decade_a: {report.decade_a}",
        f"decade_b: {report.decade_b}",
        f"bins: {report.bins}",
        f"pearson_r: {format_r(report.pearson_r)}",
        f"normalization_a: x' = (x - {na.offset}) / {na.scale}",
        f"normalization_b: x' = (x - {nb.offset}) / {nb.scale}",
        "means_a: " + " ".join(str(m) for m in report.means_a),
        "means_b: " + " ".join(str(m) for m in report.means_b),
    ]
    return "\n".join(lines) + "\n"


def write_similarity_csv(report, fh):
    """ビンごとの行（相関係数は各行に付与）"""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(("bin", "x", "mean_a", "mean_b", "pearson_r"))
    r = format_r(report.pearson_r)
    for j, (x, a, b) in enumerate(zip(report.bin_centers(), report.means_a, report.means_b)):
        writer.writerow((j, f"{float(x):.6f}", f"{float(a):.12g}", f"{float(b):.12g}", r))
