from pipeline.management.base import PipelineCommand


class Command(PipelineCommand):
    help = "Build the password similarity graph and write it as gexf, graphml, edgecsv or dot."
    pipeline_command = "build"
    writes_graph = True
