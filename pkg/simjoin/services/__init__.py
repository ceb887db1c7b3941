# Similarity join services: graph construction, threshold views, join verification.
