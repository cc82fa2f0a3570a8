# -*- coding: utf-8 -*-
"""
OEIS b-file の読み書き・取得キャッシュ・照合

b-file は1行に "index value"。空行と '#' で始まる行は無視する。
取得したファイルは cache_dir/<ID>.txt に上流のバイト列のまま保存する。
キャッシュにない場合は同梱データ (src/data/bNNNNNN.txt)、次にネットワークの順に探す。
"""

import logging
import os
import re
import tempfile
from dataclasses import dataclass
from typing import Optional

import requests

from src.core import Width, eval_S
from src.errors import (
    InvalidSequenceId,
    MalformedLine,
    NetworkUnavailable,
    NonConsecutiveIndex,
    SequenceTooShort,
)

logger = logging.getLogger(__name__)

SEQUENCE_ID_PATTERN = re.compile(r"A[0-9]{6}")
# ASCII の数字のみ（"1_000" や "+5"、全角数字は不可）
BFILE_LINE_PATTERN = re.compile(r"(-?[0-9]+)[ \t]+(-?[0-9]+)")
BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
BUNDLED_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


@dataclass(frozen=True)
class SequenceId:
    id: str

    def __post_init__(self):
        if not isinstance(self.id, str) or not SEQUENCE_ID_PATTERN.fullmatch(self.id):
            raise InvalidSequenceId(f"OEIS番号は 'A' + 6桁の数字です: {self.id!r}")

    @classmethod
    def parse(cls, text):
        if isinstance(text, SequenceId):
            return text
        return cls(str(text).strip())

    @property
    def digits(self):
        return self.id[1:]

    @property
    def url(self):
        return BFILE_URL.format(id=self.id, digits=self.digits)

    @property
    def bfile_name(self):
        return f"b{self.digits}.txt"

    def __str__(self):
        return self.id


@dataclass(frozen=True)
class BFileRecord:
    index: int
    value: int


@dataclass(frozen=True)
class CrossCheckReport:
    sequence_id: SequenceId
    width: Width
    count: int
    mismatch_index: Optional[int] = None
    expected: Optional[int] = None
    actual: Optional[int] = None

    @property
    def clean(self):
        return self.mismatch_index is None


def _check_consecutive(previous, index, line_number=None):
    if previous is not None and index != previous + 1:
        raise NonConsecutiveIndex(previous + 1, index, line_number)


def _decoded_lines(data):
    """行ごとに復号（UTF-8 として読めない行は MalformedLine）"""
    if isinstance(data, str):
        yield from data.splitlines()
        return
    for line_number, raw in enumerate(bytes(data).splitlines(), start=1):
        try:
            yield raw.decode("utf-8")
        except UnicodeDecodeError:
            raise MalformedLine(line_number, raw) from None


def parse_bfile(data):
    """b-file を解析"""
    records = []
    previous = None
    for line_number, raw in enumerate(_decoded_lines(data), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = BFILE_LINE_PATTERN.fullmatch(line)
        if match is None:
            raise MalformedLine(line_number, raw)
        index, value = int(match.group(1)), int(match.group(2))
        _check_consecutive(previous, index, line_number)
        records.append(BFileRecord(index, value))
        previous = index

    return records


def iter_bfile_lines(records):
    """1レコードずつ "index value\\n" を返す"""
    previous = None
    for record in records:
        index, value = (record.index, record.value) if isinstance(record, BFileRecord) else record
        _check_consecutive(previous, index)
        previous = index
        yield f"{index} {value}\n"


def write_bfile(records):
    """b-file のバイト列を生成"""
    text = "".join(iter_bfile_lines(records))
    if not text:
        logger.warning("レコードが空の b-file を書き出します")
    return text.encode("ascii")


def _atomic_write(path, data):
    """一時ファイルに書いてから rename"""
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    tmp = tempfile.NamedTemporaryFile(delete=False, dir=directory, prefix=".tmp-", suffix=".txt")
    try:
        tmp.write(data)
        tmp.flush()
        os.fsync(tmp.fileno())
        tmp.close()
        os.replace(tmp.name, path)
    except Exception:
        tmp.close()
        if os.path.exists(tmp.name):
            os.unlink(tmp.name)
        raise


def cache_path(seq_id, cache_dir):
    return os.path.join(os.path.expanduser(cache_dir), f"{seq_id}.txt")


def fetch_raw(seq_id, cache_dir, session=None, allow_network=True, timeout=30.0):
    """b-file の生バイト列を取得（キャッシュ優先）"""
    seq_id = SequenceId.parse(seq_id)
    path = cache_path(seq_id, cache_dir)

    if os.path.exists(path):
        logger.debug(f"キャッシュヒット: {path}")
        with open(path, "rb") as f:
            return f.read()

    bundled = os.path.join(BUNDLED_DIR, seq_id.bfile_name)
    if os.path.exists(bundled):
        logger.info(f"{seq_id} を同梱データから読み込みます: {bundled}")
        with open(bundled, "rb") as f:
            data = f.read()
    else:
        if not allow_network:
            raise NetworkUnavailable(f"{seq_id} はキャッシュになく、ネットワークは無効です")
        session = session or requests.Session()
        logger.info(f"{seq_id} を取得します: {seq_id.url}")
        try:
            response = session.get(seq_id.url, timeout=timeout)
            response.raise_for_status()
        except requests.RequestException as e:
            raise NetworkUnavailable(f"{seq_id} を取得できません: {e}") from e
        data = response.content

    _atomic_write(path, data)
    return data


def fetch_sequence(seq_id, cache_dir, session=None, allow_network=True, timeout=30.0):
    """b-file を取得して解析"""
    return parse_bfile(fetch_raw(seq_id, cache_dir, session, allow_network, timeout))


def cross_check(seq_id, width, count, cache_dir, session=None, allow_network=True, timeout=30.0):
    """n = 1..count について S_w(n) と OEIS の値を照合"""
    if isinstance(count, bool) or not isinstance(count, int) or count < 1:
        raise ValueError(f"照合する項数は1以上です: {count!r}")
    seq_id = SequenceId.parse(seq_id)
    width = Width.parse(width)

    # インデックスはファイル自身のものを使う（オフセットを仮定しない）
    terms = {r.index: r.value for r in fetch_sequence(seq_id, cache_dir, session, allow_network, timeout)}

    for n in range(1, count + 1):
        if n not in terms:
            raise SequenceTooShort(f"{seq_id} に n={n} の項がありません")
        actual = eval_S(n, width)
        if actual != terms[n]:
            logger.info(f"{seq_id} と {width.label} は n={n} で不一致です")
            return CrossCheckReport(seq_id, width, count, mismatch_index=n, expected=terms[n], actual=actual)

    return CrossCheckReport(seq_id, width, count)
