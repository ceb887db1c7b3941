"""
Size of Sp(k), the candidate passwords at edit distance k from a password p
of length L over an alphabet of N symbols.

- analytic_candidate_count: the closed forms, evaluated exactly as written.
- termwise_candidate_count: the sum of the listed edit cases (operation sequences).
- enumerate_exact_neighborhood: distinct strings, by building the edit closure and
  filtering with the true distance. Budget-guarded.

Do not "fix" one with another; the report shows all three.
"""
import logging
from math import comb
from typing import Dict, Iterable, Optional, Set, Union

from django.conf import settings

from general.errors import ArgumentError, ResourceGuardError
from metric import config
from metric.models import NeighborhoodCountReport
from metric.services.distance import levenshtein

logger = logging.getLogger(__name__)


class UnsupportedRadiusError(ArgumentError):
    pass


class EnumerationBudgetError(ResourceGuardError):
    pass


def _check_ln(length: int, alphabet_size: int) -> None:
    if length < 0:
        raise ArgumentError(f"length must be >= 0, got {length}")
    if alphabet_size < 1:
        raise ArgumentError(f"alphabet size must be >= 1, got {alphabet_size}")


def analytic_candidate_count(length: int, alphabet_size: int, radius: int) -> int:
    """
    #Sp(0) = 1
    #Sp(1) = (2L + 1) * N
    #Sp(2) = (3/2 L^2 + 3/2 L + 1) * N^2 - L * N
    """
    _check_ln(length, alphabet_size)
    L, N = length, alphabet_size
    if radius == 0:
        return 1
    if radius == 1:
        return (2 * L + 1) * N
    if radius == 2:
        # 3/2 L^2 + 3/2 L = 3L(L+1)/2, always whole
        return (3 * L * (L + 1) // 2 + 1) * N * N - L * N
    raise UnsupportedRadiusError(
        f"No closed form for radius {radius}; supported radii are 0..{config.MAX_ANALYTIC_RADIUS}."
    )


def termwise_terms(length: int, alphabet_size: int, radius: int) -> Dict[str, int]:
    """The listed edit cases for radius 1 or 2, in their conventional order."""
    _check_ln(length, alphabet_size)
    L, N = length, alphabet_size
    if radius == 0:
        return {"identity": 1}
    if radius == 1:
        return {
            "insertion": comb(L + 1, 1) * N,
            "deletion": comb(L, 1),
            "substitution": comb(L, 1) * (N - 1),
        }
    if radius == 2:
        return {
            "insertion_twice": comb(L + 2, 2) * N * N,
            "substitution_and_insertion": comb(L, 1) * (N - 1) * comb(L + 1, 1) * N,
            "insertion_and_deletion": comb(L, 1) * comb(L, 1) * N,
            "substitution_twice": comb(L, 2) * (N - 1) ** 2,
            "deletion_and_substitution": comb(L, 1) * comb(max(L - 1, 0), 1) * (N - 1),
            "deletion_twice": comb(L, 2),
        }
    raise UnsupportedRadiusError(
        f"No case list for radius {radius}; supported radii are 0..{config.MAX_ANALYTIC_RADIUS}."
    )


def termwise_candidate_count(length: int, alphabet_size: int, radius: int) -> int:
    return sum(termwise_terms(length, alphabet_size, radius).values())


def _normalize_alphabet(alphabet: Union[bytes, Iterable[int]]) -> bytes:
    symbols = sorted(set(alphabet))
    if not symbols:
        raise ArgumentError("alphabet must not be empty")
    return bytes(symbols)


def closure_size_estimate(length: int, alphabet_size: int, radius: int) -> int:
    """Upper bound on strings produced by `radius` rounds of single edits."""
    estimate = 1
    for step in range(radius):
        current = length + step
        estimate *= (current + 1) * alphabet_size + current + current * alphabet_size
    return estimate


def _single_edits(word: bytes, alphabet: bytes) -> Set[bytes]:
    out = set()
    for i in range(len(word) + 1):
        head, tail = word[:i], word[i:]
        for symbol in alphabet:
            out.add(head + bytes((symbol,)) + tail)
        if tail:
            out.add(head + tail[1:])
            for symbol in alphabet:
                out.add(head + bytes((symbol,)) + tail[1:])
    return out


def enumerate_exact_neighborhood(
    password: bytes,
    alphabet: Union[bytes, Iterable[int]],
    radius: int,
    budget: Optional[int] = None,
) -> int:
    """Number of distinct strings over `alphabet` at distance exactly `radius` from `password`."""
    if radius < 0:
        raise ArgumentError(f"radius must be >= 0, got {radius}")
    if radius == 0:
        return 1
    symbols = _normalize_alphabet(alphabet)
    budget = budget if budget is not None else getattr(settings, "PWNET_ENUMERATION_BUDGET", config.ENUMERATION_BUDGET)
    estimate = closure_size_estimate(len(password), len(symbols), radius)
    if estimate > budget:
        raise EnumerationBudgetError(
            f"Edit closure of size ~{estimate} exceeds the enumeration budget {budget}.",
            requested=estimate,
            budget=budget,
        )
    closure = {password}
    frontier = {password}
    for _ in range(radius):
        frontier = {candidate for word in frontier for candidate in _single_edits(word, symbols)} - closure
        closure |= frontier
    count = sum(1 for candidate in closure if levenshtein(candidate, password) == radius)
    logger.debug(f"[enumerate_exact_neighborhood] L={len(password)} N={len(symbols)} k={radius}: {count}")
    return count


def probe_password(length: int, alphabet_size: int) -> bytes:
    symbols = config.PROBE_SYMBOLS[:alphabet_size]
    return bytes(symbols[i % alphabet_size] for i in range(length))


def neighborhood_count_report(length: int, alphabet_size: int, radius: int) -> NeighborhoodCountReport:
    analytic = analytic_candidate_count(length, alphabet_size, radius)
    terms = termwise_terms(length, alphabet_size, radius)
    exact = None
    if length <= config.EXACT_REPORT_MAX_LENGTH and alphabet_size <= config.EXACT_REPORT_MAX_ALPHABET:
        exact = enumerate_exact_neighborhood(
            probe_password(length, alphabet_size),
            config.PROBE_SYMBOLS[:alphabet_size],
            radius,
        )
    return NeighborhoodCountReport(
        length=length,
        alphabet_size=alphabet_size,
        radius=radius,
        analytic_count=analytic,
        termwise_count=sum(terms.values()),
        exact_distinct_count=exact,
        terms=terms if radius > 0 else {},
    )
