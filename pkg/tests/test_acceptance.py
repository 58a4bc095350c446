"""Acceptance criteria 1-9; one PASS/FAIL line each is printed in the session summary."""

import subprocess
import sys
import time

import pytest

import test_properties as props
from herzogfp.replay import CHECKS, run_check

RESULTS: dict[int, str] = {}

PROPERTY_SUITES = [
    props.test_buchberger_criterion_on_emitted_bases,
    props.test_reduced_basis_canonical_under_shuffle_and_augment,
    props.test_substitution_round_trip,
    props.test_monomial_order_axioms,
    props.test_trace_q_linearity_and_iteration,
    props.test_fedder_general_matches_hypersurface,
    props.test_hasse_bound_on_point_counts,
    props.test_colon_against_degree_bounded_oracle,
]


def record(criterion: int, passed: bool, detail: str) -> None:
    RESULTS[criterion] = f"criterion {criterion}: {'PASS' if passed else 'FAIL'}  {detail}"


@pytest.mark.parametrize("criterion", [num for num, *_ in CHECKS])
def test_worked_computation(criterion):
    res = run_check(criterion)
    record(criterion, res.passed, f"{res.name} ({res.elapsed_s:.3f}s of {res.limit_s}s): {res.detail}")
    assert res.passed, res.detail


def test_property_suites():
    start = time.perf_counter()
    failures = []
    for suite in PROPERTY_SUITES:
        try:
            suite()
        except AssertionError as exc:
            failures.append(f"{suite.__name__}: {exc}")
    elapsed = time.perf_counter() - start
    record(8, not failures, f"{len(PROPERTY_SUITES)} suites x {props.CASES} cases, "
                            f"{len(failures)} failing ({elapsed:.1f}s)" + (f": {failures}" if failures else ""))
    assert not failures


def test_verify_paper_exits_zero():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "herzogfp", "verify-paper"], capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    lines = [l for l in proc.stdout.splitlines() if l.strip()]
    record(9, proc.returncode == 0 and len(lines) == len(CHECKS),
           f"verify-paper exit {proc.returncode}, {len(lines)} records ({elapsed:.1f}s)")
    assert proc.returncode == 0, proc.stderr


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
