"""
Neighborhood count report: the closed form, the sum of the listed edit cases, and
(for small cases) the number of distinct strings, side by side.

The three numbers disagree in general and are reported as they are:
operation counting overcounts distinct strings, and the k=2 closed form does not
equal its own case sum (14 vs 18 at L=1, N=2).
"""
from dataclasses import dataclass, field
from typing import Dict, Optional


@dataclass(frozen=True)
class NeighborhoodCountReport:
    length: int
    alphabet_size: int
    radius: int
    analytic_count: int
    termwise_count: int
    exact_distinct_count: Optional[int] = None
    terms: Dict[str, int] = field(default_factory=dict)

    def to_record(self) -> str:
        """Flat key=value lines, one per field, in field order."""
        lines = [
            f"length={self.length}",
            f"alphabet_size={self.alphabet_size}",
            f"radius={self.radius}",
            f"analytic_count={self.analytic_count}",
            f"termwise_count={self.termwise_count}",
            "exact_distinct_count=" + ("" if self.exact_distinct_count is None else str(self.exact_distinct_count)),
        ]
        lines.extend(f"term.{name}={value}" for name, value in self.terms.items())
        return "\n".join(lines) + "\n"
