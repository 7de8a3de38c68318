import json

import pytest

from thetacoble.suites import SUITES, run_suite


class TestReportPlumbing:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("bogus")

    def test_deterministic_given_seed(self):
        a = run_suite("segre", seed=3).to_json()
        b = run_suite("segre", seed=3).to_json()
        a.pop("wall_time")
        b.pop("wall_time")
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_records_sorted_by_name(self):
        data = run_suite("kummer2", seed=2, samples=4).to_json()
        names = [r["name"] for r in data["records"]]
        assert names == sorted(names)

    def test_all_suites_registered(self):
        assert set(SUITES) == {
            "combinatorics", "group", "gopel", "jacobi", "riemann", "wrank",
            "coble", "modularity", "kummer2", "segre", "igusa", "points",
        }


class TestQuickSuites:
    """Fast runs with reduced sample counts; full runs live in acceptance."""

    def test_combinatorics(self):
        assert run_suite("combinatorics", seed=1).passed

    def test_jacobi_small(self):
        assert run_suite("jacobi", seed=2, samples=4).passed

    def test_coble_small(self):
        assert run_suite("coble", seed=2, samples=4).passed

    def test_kummer2_small(self):
        assert run_suite("kummer2", seed=2, samples=4).passed

    def test_wrank_small(self):
        assert run_suite("wrank", seed=2, samples=25).passed

    def test_segre(self):
        assert run_suite("segre", seed=2).passed

    def test_modularity_small(self):
        assert run_suite("modularity", seed=2, samples=3).passed

    def test_points_small(self):
        assert run_suite("points", seed=2, samples=40).passed
