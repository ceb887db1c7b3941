"""
Unit-cost Levenshtein distance over bytes (insertion, deletion, substitution; no transposition).

Bytes are mapped 1:1 onto code points 0..255 (latin-1) before handing them to the C
implementation, so distances are byte distances whatever the encoding of the corpus.
"""
from typing import Optional

import Levenshtein


def as_symbols(password: bytes) -> str:
    return password.decode("latin-1")


def levenshtein(a: bytes, b: bytes) -> int:
    return Levenshtein.distance(as_symbols(a), as_symbols(b))


def bounded_levenshtein(a: bytes, b: bytes, t: int) -> Optional[int]:
    """
    Distance when it is <= t, otherwise None.

    A length gap above t already proves the distance exceeds t, so those pairs
    never reach the dynamic program.
    """
    if t < 0:
        raise ValueError(f"bounded_levenshtein requires t >= 0, got {t}")
    if abs(len(a) - len(b)) > t:
        return None
    return bounded_symbol_distance(as_symbols(a), as_symbols(b), t)


def bounded_symbol_distance(a: str, b: str, t: int) -> Optional[int]:
    """bounded_levenshtein on already-converted symbols; used by the join inner loops."""
    distance = Levenshtein.distance(a, b, score_cutoff=t)
    if distance > t:
        return None
    return distance
