from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Cracking curves of the frequency, degree and neighborhood-weight dictionaries, side by side."
    pipeline_command = "attack"
