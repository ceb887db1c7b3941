"""
Metric configuration.
"""

# N when the caller does not give one: printable ASCII.
DEFAULT_ALPHABET_SIZE = 95

# Closed forms exist only up to this radius.
MAX_ANALYTIC_RADIUS = 2

# neighborhood_count_report attaches a brute-force distinct count only for tiny cases.
EXACT_REPORT_MAX_LENGTH = 2
EXACT_REPORT_MAX_ALPHABET = 3

# Probe alphabet for the report: its first N bytes form the alphabet, the probe
# password is its first L bytes cycled over those N.
PROBE_SYMBOLS = b"abcdefghijklmnopqrstuvwxyz0123456789"

# Upper bound on the size of the k-fold edit closure enumerate_exact_neighborhood may build.
# Overridden by settings.PWNET_ENUMERATION_BUDGET.
ENUMERATION_BUDGET = 2_000_000
