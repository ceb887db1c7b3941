"""
Corpus ingestion and export.

Two input formats:
- plain:   one password per line (LF or CRLF); duplicates are aggregated.
- counted: "withcount" dumps, `^\\s*<count> <password>$`; the password runs to the end
           of the line and may contain spaces. Duplicate passwords are summed. Lines end
           at LF only; a CR before it belongs to the password.

The counted writer is the inverse of parse_counted: parse_counted(write_counted(c)) == c.
"""
import logging
import re
from collections import Counter
from pathlib import Path
from typing import BinaryIO, Iterable, Union

from corpus import config
from corpus.models import Corpus
from general.errors import ArgumentError, DataError

logger = logging.getLogger(__name__)

Line = Union[bytes, str]

_COUNTED_PATTERNS = {
    "single_space": re.compile(rb"^[ \t]*(\d+) (.*)$", re.DOTALL),
    "whitespace": re.compile(rb"^[ \t]*(\d+)[ \t]+(.*)$", re.DOTALL),
}


class CorpusInputError(DataError):
    """The input stream or file could not be read."""
    pass


class EmptyCorpusError(DataError):
    pass


class CorpusWriteError(DataError):
    pass


class CorpusParseError(DataError):
    def __init__(self, message: str, line_number: int):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


def _as_bytes(line: Line) -> bytes:
    if isinstance(line, str):
        return line.encode("utf-8", errors="surrogateescape")
    return bytes(line)


def _strip_terminator(line: bytes, crlf: bool = True) -> bytes:
    if line.endswith(b"\n"):
        line = line[:-1]
    if crlf and line.endswith(b"\r"):
        line = line[:-1]
    return line


def _read_lines(lines: Iterable[Line], crlf: bool = True):
    try:
        for line in lines:
            yield _strip_terminator(_as_bytes(line), crlf)
    except OSError as e:
        raise CorpusInputError(f"Cannot read password stream: {e}") from e


def parse_plain(lines: Iterable[Line]) -> Corpus:
    counts = Counter()
    seen_lines = 0
    for password in _read_lines(lines):
        seen_lines += 1
        counts[password] += 1
    if seen_lines == 0:
        raise EmptyCorpusError("Password stream contains no lines.")
    corpus = Corpus.from_counts(counts)
    if corpus.empty_password_count:
        logger.warning(f"[parse_plain] {corpus.empty_password_count} empty password lines kept")
    logger.info(f"[parse_plain] {seen_lines} lines -> {corpus.unique_count} unique passwords")
    return corpus


def parse_counted(lines: Iterable[Line], separator_policy: str = config.DEFAULT_SEPARATOR_POLICY) -> Corpus:
    pattern = _COUNTED_PATTERNS.get(separator_policy)
    if pattern is None:
        raise ArgumentError(
            f"Unknown separator policy '{separator_policy}'. Available: {', '.join(config.SEPARATOR_POLICIES)}"
        )
    counts = Counter()
    line_number = 0
    for line_number, line in enumerate(_read_lines(lines, crlf=False), start=1):
        match = pattern.match(line)
        if match is None:
            raise CorpusParseError("expected '<count> <password>'", line_number)
        count = int(match.group(1))
        if count == 0:
            raise CorpusParseError("count must be positive", line_number)
        counts[match.group(2)] += count
    if line_number == 0:
        raise EmptyCorpusError("Counted stream contains no lines.")
    corpus = Corpus.from_counts(counts)
    logger.info(
        f"[parse_counted] {line_number} lines -> {corpus.unique_count} unique passwords, "
        f"{corpus.total_accounts} accounts"
    )
    return corpus


def load_corpus(
    path: Union[str, Path],
    input_format: str = "plain",
    separator_policy: str = config.DEFAULT_SEPARATOR_POLICY,
) -> Corpus:
    """Open `path` in binary mode and parse it with the requested format."""
    if input_format not in config.INPUT_FORMATS:
        raise ArgumentError(f"Unknown input format '{input_format}'. Available: {', '.join(config.INPUT_FORMATS)}")
    try:
        with open(path, "rb") as handle:
            if input_format == "counted":
                return parse_counted(handle, separator_policy)
            return parse_plain(handle)
    except OSError as e:
        raise CorpusInputError(f"Cannot open corpus '{path}': {e}") from e


def write_counted(corpus: Corpus, sink: BinaryIO) -> None:
    for record in corpus.records:
        if b"\n" in record.password:
            raise CorpusWriteError(f"Password {record.password!r} contains a line feed; the counted format cannot hold it.")
        sink.write(b"%d %s\n" % (record.frequency, record.password))
