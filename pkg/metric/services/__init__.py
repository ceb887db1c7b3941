# Metric services: Levenshtein distance and candidate-neighborhood counting.
