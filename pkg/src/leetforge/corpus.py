"""Wordlist ingestion: line normalization, first-occurrence dedup, per-source stats."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator

from .errors import WordlistDecodeError


@dataclass(frozen=True)
class WordList:
    """Deduplicated words in first-occurrence order plus per-source raw counts."""

    words: tuple[str, ...]
    sources: tuple[tuple[str, int], ...]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[str]:
        return iter(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self._word_set

    @cached_property
    def _word_set(self) -> frozenset[str]:
        return frozenset(self.words)

    @cached_property
    def _casefolded(self) -> frozenset[str]:
        return frozenset(w.casefold() for w in self.words)

    def contains_casefold(self, word: str) -> bool:
        return word.casefold() in self._casefolded

    @classmethod
    def from_words(cls, words: Iterable[str], source: str = "memory") -> "WordList":
        """Build a list from in-memory words under the same dedup/blank rules."""
        seen: set[str] = set()
        kept: list[str] = []
        raw = 0
        for word in words:
            raw += 1
            if not word or word in seen:
                continue
            seen.add(word)
            kept.append(word)
        return cls(tuple(kept), ((source, raw),))


def _iter_lines(name: str, data: str | bytes) -> Iterator[str]:
    if isinstance(data, bytes):
        for lineno, raw in enumerate(data.split(b"\n"), 1):
            raw = raw.rstrip(b"\r")
            if not raw:
                continue
            try:
                yield raw.decode("utf-8")
            except UnicodeDecodeError:
                raise WordlistDecodeError(name, lineno) from None
    else:
        for raw in data.split("\n"):
            line = raw.rstrip("\r")
            if line:
                yield line


def load_wordlists(inputs: Iterable[tuple[str, str | bytes]]) -> WordList:
    """Concatenate one-word-per-line sources with cross-source first-occurrence dedup.

    Per-source raw counts are taken before dedup. Trailing CR/LF is stripped,
    blank lines are skipped, and any other whitespace is kept verbatim. Bytes
    input must be valid UTF-8; failures report the source name and line number.
    """
    seen: set[str] = set()
    words: list[str] = []
    sources: list[tuple[str, int]] = []
    for name, data in inputs:
        count = 0
        for word in _iter_lines(name, data):
            count += 1
            if word in seen:
                continue
            seen.add(word)
            words.append(word)
        sources.append((name, count))
    return WordList(tuple(words), tuple(sources))


def load_wordlist_files(paths: Iterable[str | Path]) -> WordList:
    """Load files as wordlist sources; each source is named by its file name."""
    return load_wordlists((p.name, p.read_bytes()) for p in map(Path, paths))


@dataclass(frozen=True)
class CorpusStats:
    per_source: tuple[tuple[str, int], ...]
    raw_total: int
    unique_words: int


def corpus_stats(wl: WordList) -> CorpusStats:
    """Per-source raw counts with the pre-dedup total and post-dedup unique count."""
    return CorpusStats(wl.sources, sum(n for _, n in wl.sources), len(wl.words))
