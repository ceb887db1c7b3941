"""
Similarity join configuration.

Environment overrides live in settings (PWNET_*); these are the fallbacks.
"""

# Edges connect passwords at distance <= threshold (inclusive reading of "within 3").
DEFAULT_THRESHOLD = 3

# naive: every pair, full distance (the oracle).
# bucketed: length buckets, pairs with |L_i - L_j| > t skipped, bounded distance.
# bktree: BK-tree index with triangle-inequality pruning.
STRATEGIES = ("naive", "bucketed", "bktree")
DEFAULT_STRATEGY = "bucketed"

# verify_join runs the naive join, so it refuses corpora above this size.
NAIVE_JOIN_LIMIT = 2000

# Worker processes for the bucketed join (1 = in-process).
JOIN_WORKERS = 1

# Rows of a length bucket handed to one worker task.
JOIN_CHUNK_ROWS = 256
