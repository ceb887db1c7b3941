"""
Shared base for the pipeline management commands.

Each subcommand is a thin Command class: it declares its own options, turns the parsed
options into a RunConfig and hands it to run_pipeline. A non-zero status becomes a
CommandError carrying that status as the process exit code.
"""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from corpus import config as corpus_config
from general.errors import EXIT_OK
from pipeline import config
from pipeline.models import RunConfig
from pipeline.services.runner import run_pipeline
from simjoin import config as simjoin_config


class PipelineCommand(BaseCommand):
    pipeline_command = None
    reads_graph = True
    writes_graph = False

    def add_arguments(self, parser):
        parser.add_argument("--input", type=str, help="Corpus file.")
        parser.add_argument("--format", type=str, default="plain", choices=corpus_config.INPUT_FORMATS)
        parser.add_argument(
            "--separator",
            type=str,
            default=corpus_config.DEFAULT_SEPARATOR_POLICY,
            choices=corpus_config.SEPARATOR_POLICIES,
            help="Count/password separator of the counted format.",
        )
        parser.add_argument("--top", type=int, help="Keep only the N most frequent passwords.")
        parser.add_argument("--out", type=str, help="Output file (stdout when omitted).")
        parser.add_argument("--redact", action="store_true", help="Label nodes by id instead of password.")
        if self.reads_graph:
            parser.add_argument(
                "--threshold",
                type=int,
                default=getattr(settings, "PWNET_DEFAULT_THRESHOLD", simjoin_config.DEFAULT_THRESHOLD),
            )
            parser.add_argument("--view", type=int, help="Use only edges up to this distance (<= threshold).")
            parser.add_argument("--strategy", type=str, default=simjoin_config.DEFAULT_STRATEGY, choices=simjoin_config.STRATEGIES)
            parser.add_argument("--workers", type=int, help="Worker processes for the bucketed join.")
            parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
        if self.writes_graph:
            parser.add_argument("--export", type=str, default=config.DEFAULT_EXPORT_FORMAT, choices=config.EXPORT_FORMATS)
            parser.add_argument("--connected-only", action="store_true", help="Leave out isolated nodes.")
        else:
            parser.add_argument("--report", type=str, default=config.DEFAULT_REPORT_FORMAT, choices=config.REPORT_FORMATS)
        self.add_stage_arguments(parser)

    def add_stage_arguments(self, parser):
        pass

    def run_config(self, options) -> RunConfig:
        fields = {
            "command": self.pipeline_command,
            "input_path": options.get("input"),
            "input_format": options.get("format", "plain"),
            "separator_policy": options.get("separator", corpus_config.DEFAULT_SEPARATOR_POLICY),
            "top_n": options.get("top"),
            "out": options.get("out"),
            "redact": options.get("redact", False),
        }
        for option, field in (
            ("threshold", "threshold"),
            ("view", "view"),
            ("strategy", "strategy"),
            ("workers", "workers"),
            ("seed", "seed"),
            ("export", "export_format"),
            ("connected_only", "connected_only"),
            ("report", "report_format"),
            ("min_community_fraction", "min_community_fraction"),
            ("method", "method"),
            ("ratio", "ratio"),
            ("xmin", "x_min"),
            ("rank_out", "rank_out"),
            ("length", "length"),
            ("alphabet", "alphabet"),
            ("radius", "radius"),
        ):
            if options.get(option) is not None:
                fields[field] = options[option]
        return RunConfig(**fields)

    def handle(self, *args, **options):
        status = run_pipeline(self.run_config(options), stdout=self.stdout, stderr=self.stderr)
        if status != EXIT_OK:
            raise CommandError(f"{self.pipeline_command} failed (exit status {status})", returncode=status)
