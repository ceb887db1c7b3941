"""
Corpus domain values. Immutable; nothing here is stored in the database.

A Corpus keeps its records in canonical order: descending frequency, ties broken by
ascending byte-lexicographic password. Node ids everywhere else are positions in
that order.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple


def canonical_key(password: bytes, frequency: int) -> Tuple[int, bytes]:
    return (-frequency, password)


@dataclass(frozen=True)
class PasswordRecord:
    password: bytes
    frequency: int

    def __post_init__(self):
        if self.frequency < 1:
            raise ValueError(f"frequency must be >= 1, got {self.frequency}")

    @property
    def is_empty(self) -> bool:
        return len(self.password) == 0


@dataclass(frozen=True)
class Corpus:
    records: Tuple[PasswordRecord, ...]
    _index: Dict[bytes, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        index = {record.password: i for i, record in enumerate(self.records)}
        if len(index) != len(self.records):
            raise ValueError("Corpus passwords must be distinct.")
        self._index.update(index)

    @classmethod
    def from_counts(cls, counts: Mapping[bytes, int]) -> "Corpus":
        ordered = sorted(counts.items(), key=lambda item: canonical_key(item[0], item[1]))
        return cls(tuple(PasswordRecord(password, frequency) for password, frequency in ordered))

    @classmethod
    def from_records(cls, records: Iterable[PasswordRecord]) -> "Corpus":
        counts: Dict[bytes, int] = {}
        for record in records:
            counts[record.password] = counts.get(record.password, 0) + record.frequency
        return cls.from_counts(counts)

    @property
    def unique_count(self) -> int:
        return len(self.records)

    @property
    def total_accounts(self) -> int:
        return sum(record.frequency for record in self.records)

    @property
    def passwords(self) -> Tuple[bytes, ...]:
        return tuple(record.password for record in self.records)

    @property
    def frequencies(self) -> Tuple[int, ...]:
        return tuple(record.frequency for record in self.records)

    @property
    def empty_password_count(self) -> int:
        """Accounts whose password line was empty (kept, but worth reporting)."""
        return sum(record.frequency for record in self.records if record.is_empty)

    def index_of(self, password: bytes) -> int:
        return self._index[password]

    def as_counts(self) -> Dict[bytes, int]:
        return {record.password: record.frequency for record in self.records}

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


@dataclass(frozen=True)
class CorpusStats:
    unique_count: int
    total_accounts: int
    length_histogram: Dict[int, int]
    # characters per class, not passwords
    charclass_histogram: Dict[str, int]
    empty_password_count: int = 0
