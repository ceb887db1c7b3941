"""
BK-tree over byte passwords (Burkhard-Keller): children keyed by their distance to the
parent, so a radius query only descends into children whose key lies in
[d - radius, d + radius].
"""
from typing import Dict, List, Optional, Tuple

import Levenshtein


class _Node:
    __slots__ = ("item", "symbols", "children")

    def __init__(self, item: int, symbols: str):
        self.item = item
        self.symbols = symbols
        self.children: Dict[int, "_Node"] = {}


class BKTree:
    def __init__(self):
        self.root: Optional[_Node] = None
        self.comparisons = 0

    def _distance(self, a: str, b: str) -> int:
        self.comparisons += 1
        return Levenshtein.distance(a, b)

    def add(self, item: int, symbols: str) -> None:
        if self.root is None:
            self.root = _Node(item, symbols)
            return
        node = self.root
        while True:
            d = self._distance(symbols, node.symbols)
            child = node.children.get(d)
            if child is None:
                node.children[d] = _Node(item, symbols)
                return
            node = child

    def query(self, symbols: str, radius: int) -> List[Tuple[int, int]]:
        """(item, distance) for every stored item within `radius`."""
        found = []
        if self.root is None:
            return found
        stack = [self.root]
        while stack:
            node = stack.pop()
            d = self._distance(symbols, node.symbols)
            if d <= radius:
                found.append((node.item, d))
            low, high = d - radius, d + radius
            for key, child in node.children.items():
                if low <= key <= high:
                    stack.append(child)
        return found

