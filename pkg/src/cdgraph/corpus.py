"""Corpus files: one group spec per line, optionally ``| p1,p2,...``.

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import TextIO, Union

from .constructors import GroupSpec, SpecError, parse_spec
from .numeric import is_prime

CORPUS_ENV = "CDGRAPH_CORPUS"


class CorpusError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass(frozen=True)
class CorpusEntry:
    spec: GroupSpec
    primes: tuple[int, ...] | None = None
    line: int | None = None


def parse_line(text: str, line: int | None = None) -> CorpusEntry | None:
    text = text.split("#", 1)[0].strip()
    if not text:
        return None
    spec_text, _, prime_text = text.partition("|")
    try:
        spec = parse_spec(spec_text)
    except (SpecError, ValueError) as e:
        raise CorpusError(str(e), line or 0) from e
    primes = None
    if prime_text.strip():
        try:
            primes = tuple(int(t) for t in prime_text.replace(",", " ").split())
        except ValueError:
            raise CorpusError(f"bad prime list {prime_text.strip()!r}", line or 0) from None
        bad = [q for q in primes if not is_prime(q)]
        if bad:
            raise CorpusError(f"{bad[0]} is not prime", line or 0)
    return CorpusEntry(spec, primes, line)


def parse_corpus(source: Union[str, Path, TextIO]) -> list[CorpusEntry]:
    """Parse a corpus from a path or an open text stream."""
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            return parse_corpus(fh)
    out = []
    for n, raw in enumerate(source, start=1):
        entry = parse_line(raw, n)
        if entry is not None:
            out.append(entry)
    return out


def parse_corpus_text(text: str) -> list[CorpusEntry]:
    return parse_corpus(io.StringIO(text))


def default_corpus_text() -> str:
    path = os.environ.get(CORPUS_ENV)
    if path:
        return Path(path).read_text(encoding="utf-8")
    return resources.files("cdgraph").joinpath("data/default_corpus.txt").read_text(encoding="utf-8")


def default_corpus() -> list[CorpusEntry]:
    return parse_corpus_text(default_corpus_text())
