"""
Minimal dictionary configuration.
"""

# exact_dominating_set refuses graphs with more nodes than this.
# Overridden by settings.PWNET_EXACT_NODE_BUDGET.
EXACT_NODE_BUDGET = 20

# --method of the mindict command.
METHODS = ("greedy", "exact", "partial")
DEFAULT_METHOD = "greedy"
DEFAULT_TARGET_RATIO = 1.0
