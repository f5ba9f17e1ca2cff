import os
from pathlib import Path

import pytest

import paretosum as ps

FIG_A = [(1, 60), (3, 58), (5, 51), (13, 50), (14, 46), (15, 43), (21, 42), (22, 38), (24, 36), (26, 34)]
FIG_B = [(0, 0), (3, -4), (6, -6), (9, -7), (12, -10), (15, -11), (16, -12), (20, -13), (23, -15), (27, -19)]
SMALL = [(0, 3), (1, 1), (3, 0)]


def test_every_algorithm_matches_the_reference():
    expected, cells = ps.reference(FIG_A, FIG_B)
    assert len(expected) == 25
    assert cells == 27
    for algo in ps.algorithms():
        assert ps.pareto_sum(FIG_A, FIG_B, algo) == expected, algo


def test_small_fixture():
    assert ps.pareto_sum(SMALL, SMALL) == [(0, 6), (1, 4), (2, 2), (4, 1), (6, 0)]
    assert ps.convex_seed(SMALL, SMALL) == [(0, 6), (1, 4), (2, 2), (4, 1), (6, 0)]


def test_range_minimum():
    for oracle, delta in [("binary", 1), ("sweep", 1), ("sweep", 3), ("reference", 1)]:
        assert ps.range_min(FIG_A, FIG_B, 14, 44, oracle, delta) == (15, 43)
    assert ps.range_min(FIG_A, FIG_B, 53, 15) is None


def test_run_record():
    rec = ps.run(FIG_A, FIG_B, "sss", verify=True)
    assert rec["k"] == 25
    assert rec["oracle_calls"] == 25
    assert rec["verified"]
    assert ps.run(FIG_A, FIG_B, "ks")["ks_prep_ns"] is not None


def test_generators_are_valid_and_deterministic():
    for gen in ["naive", "incremental", "sorted", "curve", "linear"]:
        pts = ps.generate(gen, "uniform", 50, 3)
        assert ps.validate(pts)
        assert pts == ps.generate(gen, "uniform", 50, 3)
    a = ps.generate("linear", n=20, seed=2, role="a")
    b = ps.generate("linear", n=20, seed=2, role="b")
    assert len(ps.pareto_sum(a, b, "sc")) == 400


def test_minplus():
    assert ps.minplus([1, 3, 2], [0, 5, 1]) == [1, 3, 2]
    assert ps.minplus([1, 3, 2], [0, 5, 1], "sss") == ps.minplus_naive([1, 3, 2], [0, 5, 1])


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        ps.pareto_sum([(0, 1), (1, 1)], SMALL)
    with pytest.raises(ValueError):
        ps.pareto_sum(SMALL, SMALL, "quick")


def test_fixture_files_present():
    root = Path(os.environ.get("PARETOSUM_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))
    lines = (root / "grid10_a.ps").read_text().splitlines()
    assert lines[1] == "10"


def test_invariant_error_is_exported():
    assert issubclass(ps.InvariantError, Exception)
    assert not issubclass(ps.InvariantError, ValueError)
