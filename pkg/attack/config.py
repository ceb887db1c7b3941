"""
Attack model configuration.
"""

# Dictionary labels. frequency / degree / neighborhood_weight are built by the ranking
# services; custom is any other guess order (partial dominating dictionaries, user input).
DICTIONARY_LABELS = ("frequency", "degree", "neighborhood_weight", "custom")

# Dictionaries compared side by side by the attack command, in column order.
COMPARED_DICTIONARIES = ("frequency", "degree", "neighborhood_weight")
