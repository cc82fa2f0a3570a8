import types
from fractions import Fraction

import pytest

from src import analysis
from src.analysis import (
    DecadeSpec,
    bin_decade,
    compare_decades,
    measure_similarity,
    pearson,
    summary_stats,
)
from src.core import Width, eval_S, repdigit
from src.errors import EmptySeries, IncompleteSeries, InvalidRange, ZeroVariance
from src.generator import RangeRequest, generate_naive, stream

# 素朴な生成器と直接の相関式で事前に求めた値（デケイド3と4、B = 100）
PINNED_R = {
    1: 1.0,
    2: 0.46195340449297956,
    7: 0.99929106758933783,
}


def series(width, start, end, chunk_size=2 ** 16):
    return list(stream(RangeRequest(Width(width), start, end, chunk_size)))


class TestDecadeSpec:
    def test_bounds(self):
        spec = DecadeSpec(Width(1), 3, 100)
        assert (spec.lo, spec.hi, spec.length) == (1000, 10000, 9000)
        assert DecadeSpec(Width(1), 0, 3).lo == 1

    @pytest.mark.parametrize("decade, bins", [(0, 1), (0, 10), (-1, 2), (1, 91)])
    def test_rejects(self, decade, bins):
        with pytest.raises(InvalidRange):
            DecadeSpec(Width(1), decade, bins)

    def test_bins_partition_decade(self):
        spec = DecadeSpec(Width(1), 2, 7)
        bounds = spec.bin_bounds()
        assert bounds[0] == 100 and bounds[-1] == 1000
        assert all(b > a for a, b in zip(bounds, bounds[1:]))


class TestBinDecade:
    def test_decade_zero(self):
        means = bin_decade(series(1, 1, 9), DecadeSpec(Width(1), 0, 3))
        assert means == [Fraction(14, 3), Fraction(77, 3), Fraction(194, 3)]

    def test_constant_series(self):
        constant = [(n, 5) for n in range(1, 200)]
        assert bin_decade(constant, DecadeSpec(Width(1), 1, 9)) == [Fraction(5)] * 9

    def test_truncated_input(self):
        with pytest.raises(IncompleteSeries):
            bin_decade(series(1, 1, 8), DecadeSpec(Width(1), 0, 3))

    def test_gap(self):
        gappy = [(n, 1) for n in range(10, 100) if n != 50]
        with pytest.raises(IncompleteSeries):
            bin_decade(gappy, DecadeSpec(Width(1), 1, 9))

    def test_independent_of_chunking(self):
        spec = DecadeSpec(Width(2), 3, 100)
        expected = bin_decade(list(generate_naive(spec.request())), spec)
        for chunk_size in (1, 333, 4096):
            assert bin_decade(series(2, 1000, 9999, chunk_size), spec) == expected


class TestPearson:
    def test_exact_anticorrelation(self):
        assert pearson([1, 2, 3, 4], [-1, -2, -3, -4]) == pytest.approx(-1.0, abs=1e-12)

    def test_self(self):
        assert pearson([1, 5, 2, 8], [1, 5, 2, 8]) == pytest.approx(1.0, abs=1e-12)

    def test_zero_variance(self):
        with pytest.raises(ZeroVariance):
            pearson([3, 3, 3], [1, 2, 3])


class TestCompareDecades:
    def test_self_comparison(self):
        spec = DecadeSpec(Width(1), 3, 100)
        report = compare_decades(spec, spec, series(1, 1000, 9999))
        assert report.pearson_r == pytest.approx(1.0, abs=1e-12)
        assert report.means_a == report.means_b

    def test_report_fields(self):
        a, b = DecadeSpec(Width(1), 1, 9), DecadeSpec(Width(1), 2, 9)
        report = compare_decades(a, b, series(1, 10, 999))
        assert report.bins == 9
        assert len(report.means_a) == len(report.means_b) == 9
        assert report.normalization_a.offset == 10 and report.normalization_a.scale == 90
        assert report.normalization_b.apply(550) == Fraction(1, 2)
        assert -1.0 <= report.pearson_r <= 1.0

    def test_zero_variance(self):
        constant = [(n, 7) for n in range(10, 1000)]
        with pytest.raises(ZeroVariance):
            compare_decades(DecadeSpec(Width(1), 1, 9), DecadeSpec(Width(1), 2, 9), constant)

    def test_mismatched_specs(self):
        with pytest.raises(ValueError):
            compare_decades(DecadeSpec(Width(1), 1, 9), DecadeSpec(Width(2), 2, 9), [])

    @pytest.mark.parametrize("width", sorted(PINNED_R))
    def test_pinned_similarity(self, width):
        report = measure_similarity(Width(width), 3, 4, bins=100)
        assert report.pearson_r >= PINNED_R[width] - 1e-9
        assert report.pearson_r == pytest.approx(PINNED_R[width], abs=1e-9)

    def test_scaling_values_keeps_correlation(self):
        # 全桁 a の数値では S が a^2 倍になるので、値の正の定数倍で相関は変わらない
        a, b = DecadeSpec(Width(2), 2, 30), DecadeSpec(Width(2), 3, 30)
        base = series(2, 100, 9999)
        scaled = [(n, eval_S(repdigit(7, 1), 1) * v) for n, v in base]
        r1 = compare_decades(a, b, base).pearson_r
        r2 = compare_decades(a, b, scaled).pearson_r
        assert r1 == pytest.approx(r2, abs=1e-12)


class TestSummaryStats:
    def test_squares(self):
        stats = summary_stats(series(1, 1, 9))
        assert (stats.min, stats.max, stats.count) == (1, 81, 9)
        assert stats.mean == Fraction(285, 9)

    def test_single(self):
        stats = summary_stats([(5, 25)])
        assert stats.min == stats.max == stats.mean == 25

    def test_count(self):
        assert summary_stats(stream(RangeRequest(Width(1), 1, 10 ** 5))).count == 10 ** 5

    def test_empty(self):
        with pytest.raises(EmptySeries):
            summary_stats([])


class TestMeasureSimilarityStreaming:
    def test_bins_each_decade_from_a_generator(self, monkeypatch):
        seen = []
        real_bin_decade = analysis.bin_decade

        def recording(series, spec):
            seen.append((type(series), spec.decade))
            return real_bin_decade(series, spec)

        monkeypatch.setattr(analysis, "bin_decade", recording)
        report = measure_similarity(Width(2), 2, 3, bins=30, chunk_size=500)

        assert seen == [(types.GeneratorType, 2), (types.GeneratorType, 3)]
        a, b = DecadeSpec(Width(2), 2, 30), DecadeSpec(Width(2), 3, 30)
        assert report == compare_decades(a, b, series(2, 100, 9999))

    def test_same_decade_is_generated_once(self, monkeypatch):
        calls = []
        real_stream = analysis.stream

        def counting(req, **kwargs):
            calls.append((req.start, req.end))
            return real_stream(req, **kwargs)

        monkeypatch.setattr(analysis, "stream", counting)
        report = measure_similarity(Width(1), 2, 2, bins=10)
        assert calls == [(100, 999)]
        assert report.pearson_r == pytest.approx(1.0, abs=1e-12)
