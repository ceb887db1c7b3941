# Deterministic synthetic corpora and graphs for tests and acceptance scenarios.
