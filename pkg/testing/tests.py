import io
from types import SimpleNamespace
from unittest import TestCase
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import override_settings

from general.errors import EXIT_DATA, EXIT_USAGE
from testing.acceptance.base import ScenarioFailure
from testing.acceptance.runner import AVAILABLE_SCENARIOS


def _failing():
    raise ScenarioFailure("edge count differs")


FAKE_SCENARIOS = {
    "ok": SimpleNamespace(run=lambda: None),
    "broken": SimpleNamespace(run=_failing),
    "later": SimpleNamespace(run=lambda: None),
}


class RunAcceptanceScenariosCommandTests(TestCase):
    def call(self, *args):
        out = io.StringIO()
        call_command("run_acceptance_scenarios", *args, stdout=out, stderr=io.StringIO())
        return out.getvalue()

    def test_list_prints_registry(self):
        self.assertEqual(self.call("--list").split(), list(AVAILABLE_SCENARIOS))

    @override_settings(ALLOW_TEST_SCENARIOS=False)
    def test_disabled_environment_is_usage_error(self):
        with self.assertRaises(CommandError) as ctx:
            self.call("--scenario", "join_oracle")
        self.assertEqual(ctx.exception.returncode, EXIT_USAGE)

    @override_settings(ALLOW_TEST_SCENARIOS=True)
    @patch.dict(AVAILABLE_SCENARIOS, FAKE_SCENARIOS, clear=True)
    def test_selected_scenarios_pass(self):
        out = self.call("--scenario", "ok", "--scenario", "later")
        self.assertIn("ok: passed", out)
        self.assertIn("All 2 requested scenarios passed.", out)

    @override_settings(ALLOW_TEST_SCENARIOS=True)
    @patch.dict(AVAILABLE_SCENARIOS, FAKE_SCENARIOS, clear=True)
    def test_failures_are_reported_after_all_scenarios_run(self):
        out = io.StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command("run_acceptance_scenarios", stdout=out, stderr=io.StringIO())
        self.assertEqual(ctx.exception.returncode, EXIT_DATA)
        self.assertIn("1 of 3 scenarios failed: broken", str(ctx.exception))
        self.assertIn("broken: FAILED", out.getvalue())
        self.assertIn("later: passed", out.getvalue())

    @override_settings(ALLOW_TEST_SCENARIOS=True)
    @patch.dict(AVAILABLE_SCENARIOS, FAKE_SCENARIOS, clear=True)
    def test_fail_fast_stops_early(self):
        out = io.StringIO()
        with self.assertRaises(CommandError):
            call_command("run_acceptance_scenarios", "--fail-fast", stdout=out, stderr=io.StringIO())
        self.assertNotIn("later", out.getvalue())
