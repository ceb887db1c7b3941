from netstats import config as netstats_config
from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Fit a discrete power law to the degree distribution; optionally write the degree-rank curve."
    pipeline_command = "fit"

    def add_stage_arguments(self, parser):
        parser.add_argument("--xmin", type=int, default=netstats_config.DEFAULT_X_MIN)
        parser.add_argument("--rank-out", type=str, help="Write the degree-rank table here.")
