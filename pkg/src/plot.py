# -*- coding: utf-8 -*-
"""
系列の散布図を SVG で出力

点数が point_limit 以下なら1項1点。超える場合は横軸を columns 列に分け、
列ごとの最小値〜最大値を縦線で描く（チャンクごとに集計するのでメモリは列数分のみ）。
ハッシュソルトを固定し日付メタデータを外すので、同じ入力とバージョンなら同じバイト列になる。
"""

import logging

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from src.generator import DEFAULT_CHUNK_SIZE, RangeRequest, generate_chunks

logger = logging.getLogger(__name__)

FIGSIZE = (10, 6)
DPI = 100
DEFAULT_COLUMNS = FIGSIZE[0] * DPI
DEFAULT_POINT_LIMIT = 10 ** 5
SVG_RC = {"svg.hashsalt": "blocksum", "svg.fonttype": "none"}


class ColumnEnvelope:
    """列ごとの最小・最大"""

    def __init__(self, max_x, columns=DEFAULT_COLUMNS):
        self.max_x = max_x
        self.columns = min(columns, max_x)
        self.mins = np.full(self.columns, np.inf)
        self.maxs = np.full(self.columns, -np.inf)

    def column_of(self, indices):
        return (indices - 1) * self.columns // self.max_x

    def add(self, chunk):
        indices = np.arange(chunk.first_index, chunk.last_index + 1, dtype=np.int64)
        values = chunk.to_array().astype(np.float64)
        cols = self.column_of(indices)
        np.minimum.at(self.mins, cols, values)
        np.maximum.at(self.maxs, cols, values)

    def centers(self):
        return (np.arange(self.columns) + 0.5) * self.max_x / self.columns + 0.5


def render_svg(width, max_x, out, jobs=1, chunk_size=DEFAULT_CHUNK_SIZE,
               point_limit=DEFAULT_POINT_LIMIT, columns=DEFAULT_COLUMNS):
    """x = 1..max_x の S_width(x) を描画して out に保存"""
    req = RangeRequest(width, 1, max_x, chunk_size)
    fig = Figure(figsize=FIGSIZE, dpi=DPI)
    ax = fig.subplots()

    if max_x <= point_limit:
        xs, ys = [], []
        for chunk in generate_chunks(req, jobs=jobs):
            xs.append(np.arange(chunk.first_index, chunk.last_index + 1, dtype=np.int64))
            ys.append(chunk.to_array().astype(np.float64))
        ax.plot(np.concatenate(xs), np.concatenate(ys), linestyle="none", marker=",", color="black")
    else:
        envelope = ColumnEnvelope(max_x, columns)
        for chunk in generate_chunks(req, jobs=jobs):
            envelope.add(chunk)
        logger.info(f"{max_x} 点を {envelope.columns} 列の包絡線に縮約しました")
        ax.vlines(envelope.centers(), envelope.mins, envelope.maxs, color="black", linewidth=0.5)

    sub = "\\infty" if req.width.is_infinite else str(req.width.size)
    ax.set_title(f"values of $\\mathcal{{S}}_{{{sub}}}(x)$, x = 1..{max_x}")
    ax.set_xlabel("x")
    ax.set_ylabel(req.width.label + "(x)")
    ax.set_xlim(0, max_x + 1)

    with matplotlib.rc_context(SVG_RC):
        fig.savefig(out, format="svg", metadata={"Date": None})
    logger.info(f"{req.width.label} の散布図を保存しました (max_x={max_x})")
