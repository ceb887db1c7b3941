import time
from contextlib import contextmanager

from django.conf import settings


class ScenarioFailure(Exception):
    pass


def assert_scenarios_enabled():
    if not settings.ALLOW_TEST_SCENARIOS:
        raise ScenarioFailure("Acceptance scenarios disabled in this environment (set ALLOW_TEST_SCENARIOS=True).")


def check(condition, message):
    if not condition:
        raise ScenarioFailure(message)


@contextmanager
def time_limit(label, seconds):
    """Fail when the block takes longer than `seconds`."""
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    print(f"  {label}: {elapsed:.1f}s (limit {seconds}s)")
    check(elapsed < seconds, f"{label} took {elapsed:.1f}s, limit {seconds}s")
