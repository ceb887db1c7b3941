"""
Network statistics configuration.
"""

# fit_power_law refuses fewer retained samples than this.
# Overridden by settings.PWNET_POWERLAW_MIN_SAMPLES.
POWERLAW_MIN_SAMPLES = 50
DEFAULT_X_MIN = 1

# Search interval for the exponent; the likelihood is convex in r on (1, inf).
EXPONENT_BOUNDS = (1.0 + 1e-6, 50.0)

# Discrete sampler: exact CDF table for x_min .. x_min + TABLE_SIZE - 1, continuous
# approximation above. Tail draws are capped so they fit in int64.
SAMPLER_TABLE_SIZE = 10_000
SAMPLER_MAX_VALUE = 10 ** 15

# Community strategies (detect_communities / --method).
COMMUNITY_STRATEGIES = ("label_propagation", "greedy_modularity")
DEFAULT_COMMUNITY_STRATEGY = "label_propagation"
LABEL_PROPAGATION_MAX_ITERATIONS = 100
DEFAULT_SEED = 0

# Display filter: communities smaller than this share of the nodes are dropped.
DEFAULT_MIN_COMMUNITY_FRACTION = 0.001
