"""Check registry, suite runner and JSON report.

A check is a generator of :class:`Case` objects. Each case carries its
parameters and a thunk; the runner times the thunk, turns budget overruns and
crashes into results, and never lets one case stop the suite.
"""

from __future__ import annotations

import json
import logging
import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .budget import Budget
from .errors import BudgetExceeded, ParameterError, UnknownCheckError
from .formats import graph6_encode
from .graph import Graph
from .sampling import rng_for

log = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "discrepancy-expected"
BUDGET = "budget-exceeded"
STATUSES = (PASS, FAIL, DISCREPANCY, BUDGET)


@dataclass
class Caps:
    max_n: int = 12
    node_limit: int | None = 50_000_000
    timeout: float | None = 600.0

    def __post_init__(self) -> None:
        if self.max_n <= 0:
            raise ParameterError(f"max_n: must be positive, got {self.max_n}")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ParameterError(f"node_limit: must be positive, got {self.node_limit}")
        if self.timeout is not None and self.timeout <= 0:
            raise ParameterError(f"timeout: must be positive, got {self.timeout}")


@dataclass
class Outcome:
    status: str
    expected: Any = None
    actual: Any = None
    witness: dict | None = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"status: unknown status {self.status!r}")
        if self.status in (FAIL, DISCREPANCY) and not self.witness:
            raise RuntimeError(f"A {self.status} outcome needs a witness")


def witness(graph: Graph | None, explanation: str) -> dict:
    return {
        "graph6": graph6_encode(graph).decode("ascii") if graph is not None else None,
        "explanation": explanation,
    }


def passed(expected: Any = None, actual: Any = None) -> Outcome:
    return Outcome(PASS, expected, actual)


def failed(expected: Any, actual: Any, graph: Graph | None, explanation: str) -> Outcome:
    return Outcome(FAIL, expected, actual, witness(graph, explanation))


def discrepancy(expected: Any, actual: Any, graph: Graph | None, explanation: str) -> Outcome:
    return Outcome(DISCREPANCY, expected, actual, witness(graph, explanation))


def expect(expected: Any, actual: Any, graph: Graph | None, explanation: str) -> Outcome:
    """Pass when the values agree, fail with a witness otherwise."""
    if expected == actual:
        return passed(expected, actual)
    return failed(expected, actual, graph, explanation)


@dataclass
class Case:
    params: dict
    run: Callable[[], Outcome]
    slow: bool = False


@dataclass
class CheckContext:
    name: str
    seed: int
    caps: Caps
    include_slow: bool = False

    def __post_init__(self) -> None:
        self.rng = rng_for(self.seed, self.name)

    def budget(self) -> Budget:
        return Budget(self.caps.node_limit, self.caps.timeout)

    def sizes(self, values) -> list[int]:
        """Keep only host sizes within the ``max_n`` cap."""
        return [v for v in values if v <= self.caps.max_n]


@dataclass
class CheckSpec:
    name: str
    func: Callable[[CheckContext], Iterator[Case]]
    description: str
    params: dict = field(default_factory=dict)
    slow: bool = False


@dataclass
class CheckResult:
    name: str
    params: dict
    status: str
    expected: Any
    actual: Any
    witness: dict | None
    runtime_ms: float


@dataclass
class Report:
    suite: str
    seed: int
    version: str
    caps: Caps
    checks: list[CheckResult]

    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "discrepancy": 0, "skipped": 0}
        key = {PASS: "pass", FAIL: "fail", DISCREPANCY: "discrepancy", BUDGET: "skipped"}
        for result in self.checks:
            counts[key[result.status]] += 1
        return counts

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "version": self.version,
            "caps": asdict(self.caps),
            "checks": [asdict(r) for r in self.checks],
            "summary": self.summary(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


REGISTRY: dict[str, CheckSpec] = {}


def register(name: str, description: str, params: dict | None = None, slow: bool = False):
    """Decorator adding a check generator to the registry."""

    def wrap(func: Callable[[CheckContext], Iterator[Case]]):
        if name in REGISTRY:
            raise RuntimeError(f"Check {name!r} registered twice")
        if params is not None and any(not v for v in params.values()):
            raise RuntimeError(f"Check {name!r} has an empty parameter range")
        REGISTRY[name] = CheckSpec(name, func, description, dict(params or {}), slow)
        return func

    return wrap


def registry() -> dict[str, CheckSpec]:
    from . import checks  # noqa: F401  (registers on import)

    return REGISTRY


def resolve_suite(suite: str) -> list[str]:
    """Check names for ``fast``, ``all`` or a comma-separated list, in registry order."""
    specs = registry()
    if suite == "all":
        return list(specs)
    if suite == "fast":
        return [name for name, spec in specs.items() if not spec.slow]
    wanted = [s.strip() for s in suite.split(",") if s.strip()]
    unknown = [s for s in wanted if s not in specs]
    if unknown or not wanted:
        raise UnknownCheckError(unknown or [suite], list(specs))
    return [name for name in specs if name in wanted]


def run_check(name: str, seed: int, caps: Caps, include_slow: bool) -> list[CheckResult]:
    spec = registry()[name]
    ctx = CheckContext(name, seed, caps, include_slow)
    results = []
    cases = spec.func(ctx)
    while True:
        start = time.perf_counter()
        try:
            case = next(cases)
        except StopIteration:
            break
        except Exception as exc:  # a broken generator ends this check only
            log.exception("Check %s crashed while preparing a case", name)
            results.append(CheckResult(name, {}, FAIL, None, None,
                                       witness(None, f"check crashed: {exc!r}"), 0.0))
            break
        if case.slow and not include_slow:
            continue
        try:
            outcome = case.run()
        except BudgetExceeded as exc:
            log.warning("%s %s: %s", name, case.params, exc)
            outcome = Outcome(BUDGET, None, None, witness(None, str(exc)))
        except Exception as exc:
            log.exception("Check %s crashed on %s", name, case.params)
            outcome = failed(None, None, None, f"check crashed: {exc!r}")
        elapsed = (time.perf_counter() - start) * 1000.0
        results.append(CheckResult(name, case.params, outcome.status, outcome.expected,
                                   outcome.actual, outcome.witness, round(elapsed, 3)))
        if outcome.status == FAIL:
            log.error("%s %s failed: %s", name, case.params, outcome.witness["explanation"])
    return results


def run_suite(
    suite: str,
    seed: int,
    caps: Caps | None = None,
    include_slow: bool = False,
    jobs: int = 1,
) -> Report:
    caps = caps or Caps()
    names = resolve_suite(suite)
    log.info("Running %d checks (suite=%s, seed=%d, jobs=%d)", len(names), suite, seed, jobs)
    results: list[CheckResult] = []
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_check, name, seed, caps, include_slow) for name in names]
            for i, (name, future) in enumerate(zip(names, futures), 1):
                log.info("Step %d/%d: %s", i, len(names), name)
                results.extend(future.result())
    else:
        for i, name in enumerate(names, 1):
            log.info("Step %d/%d: %s", i, len(names), name)
            results.extend(run_check(name, seed, caps, include_slow))
    report = Report(suite, seed, __version__, caps, results)
    log.info("Summary: %s", report.summary())
    return report
