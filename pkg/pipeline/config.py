"""
Pipeline configuration: subcommands, output formats and report formatting.
"""

SUBCOMMANDS = ("stats", "build", "communities", "fit", "attack", "mindict", "counts", "export")

EXPORT_FORMATS = ("gexf", "graphml", "edgecsv", "dot")
DEFAULT_EXPORT_FORMAT = "gexf"

REPORT_FORMATS = ("csv", "json")
DEFAULT_REPORT_FORMAT = "csv"

# Floats in reports: 6 significant digits.
FLOAT_FORMAT = ".6g"

DEFAULT_SEED = 0

# GEXF flavour written by networkx.
GEXF_VERSION = "1.2draft"

# Top passwords listed by the stats report when --top is not given.
DEFAULT_STATS_TOP = 10
