import time
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from testing.acceptance.base import ScenarioFailure, assert_scenarios_enabled
from testing.acceptance.scenarios import (
    scenario_cli_determinism,
    scenario_communities,
    scenario_coverage_model,
    scenario_dominating_set,
    scenario_end_to_end,
    scenario_formula_check,
    scenario_join_oracle,
    scenario_power_law,
)

AVAILABLE_SCENARIOS = {
    "join_oracle": scenario_join_oracle,
    "formula_check": scenario_formula_check,
    "coverage_model": scenario_coverage_model,
    "dominating_set": scenario_dominating_set,
    "power_law": scenario_power_law,
    "communities": scenario_communities,
    "end_to_end": scenario_end_to_end,
    "cli_determinism": scenario_cli_determinism,
}


@dataclass(frozen=True)
class ScenarioResult:
    name: str
    seconds: float
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure is None


def run_scenarios(names: Optional[Iterable[str]] = None, fail_fast: bool = False) -> Iterator[ScenarioResult]:
    """Run the named scenarios (all of them by default), one result each."""
    assert_scenarios_enabled()
    names = list(names or AVAILABLE_SCENARIOS)
    unknown = [name for name in names if name not in AVAILABLE_SCENARIOS]
    if unknown:
        raise ScenarioFailure(f"Unknown scenario(s) {', '.join(unknown)}. Available: {', '.join(AVAILABLE_SCENARIOS)}")
    for name in names:
        start = time.perf_counter()
        try:
            AVAILABLE_SCENARIOS[name].run()
        except ScenarioFailure as exc:
            yield ScenarioResult(name, time.perf_counter() - start, str(exc))
            if fail_fast:
                return
        else:
            yield ScenarioResult(name, time.perf_counter() - start)

