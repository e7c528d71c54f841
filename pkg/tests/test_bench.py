"""Scaling benchmark: records, doubling ratios, CSV rendering."""

import csv
import io

import pytest

from tsppath import (
    DomainError,
    InsufficientDataError,
    ScalingRecord,
    ScalingReport,
    SizeError,
    doubling_ratios,
    emit_csv,
    expected_state_count,
    generate_random,
    run_scaling,
    solve,
)


def _report(rows, seed=0, max_dist=1, reps=1):
    return ScalingReport(
        records=tuple(ScalingRecord(*row) for row in rows),
        seed=seed,
        max_dist=max_dist,
        reps=reps,
    )


class TestRunScaling:
    def test_small_sweep(self):
        report = run_scaling(4, 6, seed=42, max_dist=100, reps=3)
        assert [r.n for r in report.records] == [4, 5, 6]
        assert [r.states for r in report.records] == [5, 13, 33]
        assert (report.seed, report.max_dist, report.reps) == (42, 100, 3)
        for r in report.records:
            assert r.states == expected_state_count(r.n)
            assert r.time_ns >= 1
            assert r.optimum == solve(generate_random(r.n, 100, 42 + r.n)).length

    def test_single_n(self):
        report = run_scaling(5, 5, seed=7, max_dist=10, reps=1)
        assert len(report.records) == 1
        assert report.records[0].n == 5

    def test_timing_is_deterministic_in_everything_but_time(self):
        a = run_scaling(4, 5, seed=9, max_dist=50, reps=2)
        b = run_scaling(4, 5, seed=9, max_dist=50, reps=2)
        assert [(r.n, r.states, r.optimum) for r in a.records] == [
            (r.n, r.states, r.optimum) for r in b.records
        ]

    def test_param_validation(self):
        with pytest.raises(DomainError):
            run_scaling(1, 5)
        with pytest.raises(DomainError):
            run_scaling(6, 5)
        with pytest.raises(DomainError):
            run_scaling(4, 6, reps=0)
        with pytest.raises(SizeError):
            run_scaling(4, 25)


class TestScalingReport:
    def test_records_normalized_to_tuple(self):
        report = ScalingReport(
            records=[ScalingRecord(4, 5, 10, 14)], seed=0, max_dist=1, reps=1
        )
        assert isinstance(report.records, tuple)

    def test_rejects_non_increasing_n(self):
        with pytest.raises(DomainError):
            _report([(5, 13, 10, 4), (4, 5, 10, 3)])
        with pytest.raises(DomainError):
            _report([(4, 5, 10, 3), (4, 5, 10, 3)])


class TestDoublingRatios:
    def test_consecutive_pairs(self):
        report = _report([(10, 1025, 100, 9), (11, 2305, 200, 9), (12, 5121, 400, 9)])
        assert doubling_ratios(report) == [(11, 2.0), (12, 2.0)]

    def test_gap_pairs_are_skipped(self):
        report = _report([(10, 1025, 100, 9), (11, 2305, 300, 9), (13, 11265, 900, 9)])
        assert doubling_ratios(report) == [(11, 3.0)]

    def test_single_record_is_insufficient(self):
        with pytest.raises(InsufficientDataError):
            doubling_ratios(_report([(10, 1025, 100, 9)]))

    def test_all_gaps_is_insufficient(self):
        with pytest.raises(InsufficientDataError):
            doubling_ratios(_report([(10, 1025, 100, 9), (12, 5121, 400, 9)]))

    def test_state_growth_approaches_doubling(self):
        # the work metric itself grows by x2.25 from n=10 to n=11
        assert expected_state_count(11) / expected_state_count(10) == 2305 / 1025
        ratio = expected_state_count(21) / expected_state_count(20)
        assert 2.0 < ratio < 2.12


class TestEmitCsv:
    def test_golden_single_record(self):
        report = _report([(4, 5, 12345, 14)])
        assert emit_csv(report) == "n,states,time_ns,optimum\n4,5,12345,14\n"

    def test_empty_report_is_header_only(self):
        assert emit_csv(_report([])) == "n,states,time_ns,optimum\n"

    def test_csv_module_roundtrip(self):
        report = run_scaling(4, 6, seed=42, max_dist=100, reps=1)
        rows = list(csv.DictReader(io.StringIO(emit_csv(report))))
        assert [int(row["n"]) for row in rows] == [4, 5, 6]
        assert [int(row["states"]) for row in rows] == [5, 13, 33]
        for row, rec in zip(rows, report.records):
            assert int(row["time_ns"]) == rec.time_ns
            assert int(row["optimum"]) == rec.optimum
