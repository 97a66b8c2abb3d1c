"""Digest computation and candidate-vs-store matching.

The matcher splits the candidate stream into chunks; chunks may be hashed on
worker threads, but results are reduced strictly in stream order, so counts,
first-wins recovery and the final match list are identical for any worker
count.
"""

from __future__ import annotations

import hashlib
import time
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, NamedTuple

from .errors import AlgorithmMismatchError, UnknownAlgorithmError
from .generator import CandidateRecord

if TYPE_CHECKING:
    from .hashstore import HashStore

ALGORITHMS = {"md5": 16, "sha1": 20, "sha256": 32}
_CONSTRUCTORS = {"md5": hashlib.md5, "sha1": hashlib.sha1, "sha256": hashlib.sha256}

DEFAULT_CHUNK_BYTES = 64 * 1024


def digest_size(algorithm: str) -> int:
    """Digest width in bytes; raises UnknownAlgorithmError for unknown ids."""
    try:
        return ALGORITHMS[algorithm]
    except KeyError:
        raise UnknownAlgorithmError(
            f"unknown digest algorithm {algorithm!r} (expected one of {sorted(ALGORITHMS)})"
        ) from None


def digest_of(plaintext: str | bytes, algorithm: str = "md5") -> bytes:
    """Raw digest of the exact bytes; str input is hashed as its UTF-8 encoding."""
    digest_size(algorithm)
    data = plaintext.encode("utf-8") if isinstance(plaintext, str) else plaintext
    return _CONSTRUCTORS[algorithm](data).digest()


class Match(NamedTuple):
    digest: bytes
    plaintext: str
    base_word: str
    rule_id: str

    def hex(self) -> str:
        return self.digest.hex()


@dataclass
class CrackResult:
    attempted: int
    recovered_new: int
    matches: list[Match]
    elapsed: float
    throughput: float

    def to_dict(self) -> dict:
        return {
            "attempted": self.attempted,
            "recovered_new": self.recovered_new,
            "elapsed_seconds": round(self.elapsed, 6),
            "throughput": round(self.throughput, 1),
            "matches": [
                {"digest": m.digest.hex(), "plaintext": m.plaintext,
                 "base_word": m.base_word, "rule_id": m.rule_id}
                for m in self.matches
            ],
        }


def _chunks(candidates: Iterable[CandidateRecord], chunk_bytes: int):
    chunk: list[CandidateRecord] = []
    size = 0
    for rec in candidates:
        chunk.append(rec)
        size += len(rec.candidate) + 1
        if size >= chunk_bytes:
            yield chunk
            chunk, size = [], 0
    if chunk:
        yield chunk


def _scan(chunk: list[CandidateRecord], hasher, digests) -> list[Match]:
    hits = []
    for cand, base, rule_id in chunk:
        d = hasher(cand.encode("utf-8")).digest()
        if d in digests:
            hits.append(Match(d, cand, base, rule_id))
    return hits


def crack(hs: "HashStore", candidates: Iterable[CandidateRecord],
          algorithm: str | None = None, threads: int = 1,
          chunk_bytes: int = DEFAULT_CHUNK_BYTES) -> CrackResult:
    """Hash every candidate once and match it against the store.

    Hits are recorded with mark_recovered (atomic, first plaintext wins) and
    recovered_new counts only digests newly recovered by this call. Matches
    come back sorted by digest. chunk_bytes sets how much candidate text goes
    into one unit of worker work.
    """
    if algorithm is None:
        algorithm = hs.algorithm
    elif algorithm != hs.algorithm:
        raise AlgorithmMismatchError(
            f"store holds {hs.algorithm} digests, requested {algorithm}")
    digest_size(algorithm)
    hasher = _CONSTRUCTORS[algorithm]
    digests = hs.digest_set

    attempted = 0
    recovered_new = 0
    matches: list[Match] = []

    def reduce(chunk_len: int, hits: list[Match]) -> None:
        nonlocal attempted, recovered_new
        attempted += chunk_len
        for m in hits:
            if hs.mark_recovered(m.digest, m.plaintext):
                recovered_new += 1
            matches.append(m)

    start = time.perf_counter()
    if threads <= 1:
        for chunk in _chunks(candidates, chunk_bytes):
            reduce(len(chunk), _scan(chunk, hasher, digests))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pending: deque = deque()
            for chunk in _chunks(candidates, chunk_bytes):
                pending.append((len(chunk), pool.submit(_scan, chunk, hasher, digests)))
                if len(pending) >= threads * 4:
                    n, fut = pending.popleft()
                    reduce(n, fut.result())
            while pending:
                n, fut = pending.popleft()
                reduce(n, fut.result())
    elapsed = time.perf_counter() - start

    matches.sort(key=lambda m: (m.digest, m.plaintext, m.base_word, m.rule_id))
    throughput = attempted / elapsed if elapsed > 0 else 0.0
    return CrackResult(attempted, recovered_new, matches, elapsed, throughput)
