from netstats import config as netstats_config
from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Export the graph with community labels, optionally dropping isolated nodes and small communities."
    pipeline_command = "export"
    writes_graph = True

    def add_stage_arguments(self, parser):
        parser.add_argument("--method", type=str, choices=netstats_config.COMMUNITY_STRATEGIES)
        parser.add_argument(
            "--min-community-fraction",
            type=float,
            default=0.0,
            help=f"Drop communities below this share of nodes (e.g. {netstats_config.DEFAULT_MIN_COMMUNITY_FRACTION}).",
        )
