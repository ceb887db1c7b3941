from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Corpus statistics: counts, length and character-class histograms, top passwords."
    pipeline_command = "stats"
    reads_graph = False
