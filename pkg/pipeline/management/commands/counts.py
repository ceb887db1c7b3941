from metric import config as metric_config
from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Neighborhood size report for a password length, alphabet size and edit radius."
    pipeline_command = "counts"
    reads_graph = False

    def add_stage_arguments(self, parser):
        parser.add_argument("--length", type=int, required=True)
        parser.add_argument("--alphabet", type=int, default=metric_config.DEFAULT_ALPHABET_SIZE)
        parser.add_argument("--radius", type=int, default=1)
