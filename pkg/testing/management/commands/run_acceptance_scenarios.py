from django.core.management.base import BaseCommand, CommandError

from general.errors import EXIT_DATA, EXIT_USAGE
from testing.acceptance.base import ScenarioFailure
from testing.acceptance.runner import AVAILABLE_SCENARIOS, run_scenarios


class Command(BaseCommand):
    help = "Run the password network acceptance scenarios (guarded by ALLOW_TEST_SCENARIOS)."

    def add_arguments(self, parser):
        parser.add_argument(
            "--scenario",
            action="append",
            choices=list(AVAILABLE_SCENARIOS),
            help="Run only this scenario; repeat to pick several. Default: all.",
        )
        parser.add_argument("--list", action="store_true", help="Print the scenario names and exit.")
        parser.add_argument("--fail-fast", action="store_true", help="Stop at the first failing scenario.")

    def handle(self, *args, **options):
        if options["list"]:
            for name in AVAILABLE_SCENARIOS:
                self.stdout.write(name)
            return

        self.stdout.write(self.style.WARNING("=== Acceptance Scenario Runner ==="))
        results = []
        try:
            for result in run_scenarios(options["scenario"], fail_fast=options["fail_fast"]):
                results.append(result)
                if result.passed:
                    self.stdout.write(self.style.SUCCESS(f"  {result.name}: passed in {result.seconds:.1f}s"))
                else:
                    self.stdout.write(self.style.ERROR(f"  {result.name}: FAILED in {result.seconds:.1f}s, {result.failure}"))
        except ScenarioFailure as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)

        failed = [result.name for result in results if not result.passed]
        if failed:
            raise CommandError(f"{len(failed)} of {len(results)} scenarios failed: {', '.join(failed)}", returncode=EXIT_DATA)
        self.stdout.write(self.style.SUCCESS(f"All {len(results)} requested scenarios passed."))
