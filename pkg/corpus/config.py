"""
Corpus configuration: single source of truth for ingestion formats and statistics.
"""

# Input formats accepted by load_corpus / --format
INPUT_FORMATS = ("plain", "counted")

# Character classes reported by corpus_stats, in output order.
# Everything outside [a-z], [A-Z], [0-9] (space, punctuation, bytes >= 0x80) is "other".
CHARCLASSES = ("lowercase", "uppercase", "digit", "other")

# Counted ("withcount") lines: leading blanks, count, separator, password to end of line.
# single_space keeps leading spaces of the password; whitespace swallows any run of blanks.
SEPARATOR_POLICIES = ("single_space", "whitespace")
DEFAULT_SEPARATOR_POLICY = "single_space"
