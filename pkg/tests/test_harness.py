from __future__ import annotations

import json

import pytest

from tokengraphs import harness
from tokengraphs.errors import BudgetExceeded, ParameterError, UnknownCheckError
from tokengraphs.families import cycle
from tokengraphs.formats import graph6_decode
from tokengraphs.harness import (
    BUDGET,
    DISCREPANCY,
    FAIL,
    PASS,
    Caps,
    Case,
    CheckSpec,
    Outcome,
    discrepancy,
    expect,
    registry,
    resolve_suite,
    run_check,
    run_suite,
)


def strip_runtime(report):
    return [
        {k: v for k, v in result.items() if k != "runtime_ms"}
        for result in report.to_json()["checks"]
    ]


class TestRegistry:
    def test_every_check_has_a_description(self):
        assert all(spec.description for spec in registry().values())

    def test_fast_and_all(self):
        assert "c4_example" in resolve_suite("fast")
        assert resolve_suite("all") == list(registry())

    def test_comma_list_follows_registry_order(self):
        assert resolve_suite("diamond_example, c4_example") == ["c4_example", "diamond_example"]

    def test_unknown_check(self):
        with pytest.raises(UnknownCheckError) as info:
            resolve_suite("c4_example,no_such_check")
        assert info.value.unknown == ["no_such_check"]
        assert "c4_example" in info.value.valid
        assert isinstance(info.value, ParameterError)


class TestOutcomes:
    def test_fail_needs_witness(self):
        with pytest.raises(RuntimeError, match="witness"):
            Outcome(FAIL, 1, 2)

    def test_expect(self):
        assert expect(3, 3, None, "unused").status == PASS
        outcome = expect(3, 4, cycle(5), "off by one")
        assert outcome.status == FAIL
        assert outcome.witness == {"graph6": "Dhc", "explanation": "off by one"}

    def test_discrepancy_carries_graph(self):
        outcome = discrepancy(1, 2, cycle(4), "known")
        assert graph6_decode(outcome.witness["graph6"]) == cycle(4)

    def test_caps_validation(self):
        with pytest.raises(ParameterError):
            Caps(max_n=0)


class TestRunner:
    def test_c4_example_passes(self):
        report = run_suite("c4_example", seed=1)
        assert [r.status for r in report.checks] == [PASS]
        assert report.summary() == {"pass": 1, "fail": 0, "discrepancy": 0, "skipped": 0}
        assert not report.failed

    def test_aut_kmn(self):
        results = {(r.params["m"], r.params["n"]): r for r in run_check("aut_kmn", 0, Caps(max_n=5), False)}
        assert set(results) == {(2, 2), (2, 3)}
        assert results[(2, 2)].status == DISCREPANCY
        assert (results[(2, 2)].expected, results[(2, 2)].actual) == ("24", "48")
        assert results[(2, 3)].status == PASS
        assert results[(2, 3)].actual == "4320"

    def test_complement_corollary_small(self):
        results = run_check("complement_corollary", 0, Caps(max_n=4), False)
        status = {(r.params["n"], r.params["matching"]): r.status for r in results}
        assert status[(4, 2)] == PASS
        assert status[(3, 1)] == PASS
        assert status[(3, 0)] == DISCREPANCY
        assert FAIL not in status.values()

    def test_complement_corollary_labeled_sweep(self):
        results = run_check("complement_corollary", 0, Caps(max_n=5), False)
        sweep = [r for r in results if r.params.get("source") == "labeled"]
        assert len(sweep) == 1
        # all 26 graphs on 5 vertices whose complement is a matching contain a triangle
        assert sweep[0].status == DISCREPANCY
        assert sweep[0].actual == 26
        assert graph6_decode(sweep[0].witness["graph6"]).n == 5

    def test_budget_and_crash_become_results(self, monkeypatch):
        def over_budget():
            raise BudgetExceeded("node budget of 1 exceeded", 2, 0.0)

        def crash():
            raise ZeroDivisionError("boom")

        def cases(ctx):
            yield Case({"case": "budget"}, over_budget)
            yield Case({"case": "crash"}, crash)
            yield Case({"case": "slow"}, lambda: harness.passed(), slow=True)

        registry()
        monkeypatch.setitem(harness.REGISTRY, "synthetic", CheckSpec("synthetic", cases, "synthetic"))
        results = run_check("synthetic", 0, Caps(), include_slow=False)
        assert [r.status for r in results] == [BUDGET, FAIL]
        assert "boom" in results[1].witness["explanation"]
        with_slow = run_check("synthetic", 0, Caps(), include_slow=True)
        assert [r.status for r in with_slow] == [BUDGET, FAIL, PASS]

    def test_report_json(self):
        report = run_suite("diamond_example,aut_kmn", seed=3, caps=Caps(max_n=5))
        data = json.loads(report.dumps())
        assert set(data) == {"suite", "seed", "version", "caps", "checks", "summary"}
        assert data["seed"] == 3
        assert data["summary"]["discrepancy"] == 1
        assert set(data["checks"][0]) == {
            "name", "params", "status", "expected", "actual", "witness", "runtime_ms",
        }

    def test_seeded_runs_are_reproducible(self):
        caps = Caps(max_n=6)
        first = run_suite("degree_formula,aut_embedding", seed=11, caps=caps)
        second = run_suite("degree_formula,aut_embedding", seed=11, caps=caps)
        assert strip_runtime(first) == strip_runtime(second)

    @pytest.mark.slow
    def test_parallel_matches_serial(self):
        caps = Caps(max_n=6)
        serial = run_suite("c4_example,diamond_example,star_structure", seed=5, caps=caps)
        parallel = run_suite("c4_example,diamond_example,star_structure", seed=5, caps=caps, jobs=2)
        assert strip_runtime(serial) == strip_runtime(parallel)


# statements known to be false as written for some parameters
DOCUMENTED_DISCREPANCIES = {
    "kmn_structure",
    "cycle_chromatic_clique",
    "bipartite_characterization",
    "complement_corollary",
    "aut_kmn",
    "alpha_direct_product_paths",
}
# checks whose sampled or layered cases may deviate without being wrong
MAY_DEVIATE = {"connectivity_leaves", "nonbip_component_structure"}


class TestFastSuite:
    @pytest.fixture(scope="class")
    def report(self):
        return run_suite("fast", seed=42)

    def test_no_failures(self, report):
        failures = [(r.name, r.params) for r in report.checks if r.status == FAIL]
        assert failures == []
        assert not report.failed

    def test_every_check_ran(self, report):
        assert {r.name for r in report.checks} == set(resolve_suite("fast"))

    def test_discrepancies_are_the_documented_ones(self, report):
        names = {r.name for r in report.checks if r.status == DISCREPANCY}
        assert DOCUMENTED_DISCREPANCIES <= names <= DOCUMENTED_DISCREPANCIES | MAY_DEVIATE

    def test_discrepancy_witnesses_decode(self, report):
        for r in report.checks:
            if r.status == DISCREPANCY:
                assert graph6_decode(r.witness["graph6"]).n >= 1
