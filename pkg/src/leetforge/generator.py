"""Candidate generation: rule application, streaming dedup, and counting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .corpus import WordList
from .rules import ReplacementRule, RuleSet

# Provenance rule id for unmangled words.
BASE_RULE_ID = "BASE"


class CandidateRecord(NamedTuple):
    """A generated candidate with its provenance."""

    candidate: str
    base_word: str
    rule_id: str


@dataclass(frozen=True)
class GenOptions:
    include_base: bool = False   # also emit the unmangled words, ahead of the mangles
    strict_multi: bool = False   # dual/triad rules require every source char present
    dedup: bool = True


@dataclass
class GenStats:
    emitted: int = 0
    suppressed_duplicates: int = 0
    by_arity: dict[str, int] = field(default_factory=lambda: {
        "base": 0, "single": 0, "dual": 0, "triad": 0})

    @property
    def emitted_mangled(self) -> int:
        """Emitted count excluding the unmangled base words."""
        return self.emitted - self.by_arity["base"]

    def to_dict(self) -> dict:
        return {
            "emitted": self.emitted,
            "emitted_mangled": self.emitted_mangled,
            "suppressed_duplicates": self.suppressed_duplicates,
            "by_arity": dict(self.by_arity),
        }


def apply_rule(word: str, rule: ReplacementRule,
               strict_multi: bool = False) -> str | None:
    """Replace every occurrence of the rule's source characters in one pass.

    All pairs apply simultaneously to the original characters, so one pair's
    output is never re-matched by another pair. Returns None when nothing
    changed; with strict_multi, a multi-pair rule also returns None unless
    every one of its source characters occurs in the word.
    """
    if strict_multi and len(rule.pairs) > 1 and not rule.sources_present(word):
        return None
    out = word.translate(rule.translation)
    return out if out != word else None


class CandidateStream:
    """Single-use iterator of CandidateRecords; stats are final once exhausted."""

    def __init__(self, iterator: Iterator[CandidateRecord], stats: GenStats):
        self._iterator = iterator
        self.stats = stats

    def __iter__(self) -> Iterator[CandidateRecord]:
        return self._iterator


def _candidates(wl: WordList, rs: RuleSet, opts: GenOptions,
                stats: GenStats) -> Iterator[CandidateRecord]:
    seen: set[str] | None = set() if opts.dedup else None
    if opts.include_base:
        for word in wl.words:
            if seen is not None:
                if word in seen:
                    stats.suppressed_duplicates += 1
                    continue
                seen.add(word)
            stats.emitted += 1
            stats.by_arity["base"] += 1
            yield CandidateRecord(word, word, BASE_RULE_ID)
    # flattened per-rule data keeps the inner loop free of attribute lookups
    compiled = [(r.id, r.arity, r.source_chars, r.translation, r) for r in rs]
    strict = opts.strict_multi
    by_arity = stats.by_arity
    for word in wl.words:
        chars = set(word)
        for rule_id, arity, sources, table, rule in compiled:
            # screen: a rule with no source char present cannot change the word
            if chars.isdisjoint(sources):
                continue
            if strict and len(rule.pairs) > 1 and not rule.sources_present(word):
                continue
            out = word.translate(table)
            if out == word:
                continue
            if seen is not None:
                if out in seen:
                    stats.suppressed_duplicates += 1
                    continue
                seen.add(out)
            stats.emitted += 1
            by_arity[arity] += 1
            yield CandidateRecord(out, word, rule_id)


def generate(wl: WordList, rs: RuleSet,
             opts: GenOptions = GenOptions()) -> CandidateStream:
    """Stream candidates word-major, applying rules in rule-set order.

    With include_base all base words stream ahead of the mangles, so a mangle
    colliding with any base word is the one that gets suppressed. Dedup is
    global across the whole stream and keeps the first emission's provenance.
    """
    stats = GenStats()
    return CandidateStream(_candidates(wl, rs, opts, stats), stats)


def count_candidates(wl: WordList, rs: RuleSet,
                     opts: GenOptions = GenOptions()) -> GenStats:
    """Counts identical to generate() without retaining the candidates."""
    stream = generate(wl, rs, opts)
    for _ in stream:
        pass
    return stream.stats


def base_candidates(wl: WordList) -> Iterator[CandidateRecord]:
    """The unmangled words as a candidate stream (rule id BASE)."""
    for word in wl.words:
        yield CandidateRecord(word, word, BASE_RULE_ID)
