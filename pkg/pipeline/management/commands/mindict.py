from mindict import config as mindict_config
from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Minimal dictionary: greedy or exact dominating set, or a partial dictionary for --ratio."
    pipeline_command = "mindict"

    def add_stage_arguments(self, parser):
        parser.add_argument("--method", type=str, default=mindict_config.DEFAULT_METHOD, choices=mindict_config.METHODS)
        parser.add_argument("--ratio", type=float, default=mindict_config.DEFAULT_TARGET_RATIO)
