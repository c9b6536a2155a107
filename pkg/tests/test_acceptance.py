"""Acceptance gate: one test per criterion, each printing a pass/fail line.

All arithmetic is exact over GF(2), so every comparison is exact equality.
Stated runtime targets are reported, not asserted.  Run with `pytest -s
tests/test_acceptance.py` to see the lines as they complete.
"""

import pytest

from heckemod2 import checks


def _report(number: int, result, budget: float):
    status = "PASS" if result.passed else "FAIL"
    print(f"[criterion {number:2d}] {status}  {result.name}"
          f"  ({result.seconds:.1f}s, target {budget:.0f}s)"
          f"{'  ' + result.details if result.details else ''}")
    assert result.passed, f"criterion {number}: {result.name}: {result.details}"
    assert result.seconds < budget, (
        f"criterion {number} exceeded its runtime target: "
        f"{result.seconds:.1f}s >= {budget:.0f}s")


@pytest.fixture(scope="module")
def table(mtable):
    return mtable


def test_criterion_01_m_table(table):
    _report(1, checks.check_m_table(table), 60)


def test_criterion_02_algebra_dimension():
    _report(2, checks.check_algebra_dimension(max_level=64), 60)


def test_criterion_03_commutant():
    _report(3, checks.check_commutant(max_level=32), 60)


def test_criterion_04_tp_tables(table):
    _report(4, checks.check_tp_tables(table), 120)


def test_criterion_05_parity_and_frobenian(table):
    _report(5, checks.check_frobenian(bound=1000, degree=8, table=table), 300)


def test_criterion_06_theta_tables():
    _report(6, checks.check_theta_tables(precision=4096), 60)


def test_criterion_07_span_equalities(table):
    _report(7, checks.check_span_equalities(table), 120)


def test_criterion_08_hecke_on_theta():
    _report(8, checks.check_hecke_on_theta(precision=256), 300)


def test_criterion_09_composition_groups():
    _report(9, checks.check_composition_groups(max_n=10), 10)


def test_criterion_10_structure_suite(table):
    _report(10, checks.check_structure_suite(table), 120)
