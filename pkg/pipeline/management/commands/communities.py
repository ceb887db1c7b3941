from netstats import config as netstats_config
from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Detect communities and report each node's community with the modularity."
    pipeline_command = "communities"

    def add_stage_arguments(self, parser):
        parser.add_argument("--method", type=str, choices=netstats_config.COMMUNITY_STRATEGIES)
        parser.add_argument("--min-community-fraction", type=float, default=0.0)
        parser.add_argument("--connected-only", action="store_true")
