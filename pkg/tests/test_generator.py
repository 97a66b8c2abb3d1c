"""Rule application and candidate stream semantics."""

from __future__ import annotations

import random
import string

from leetforge import (BASE_RULE_ID, GenOptions, WordList, apply_rule,
                       builtin_rules, count_candidates, generate, parse_rules)
from oracles import brute_force_candidates, mangle_reference

RS = builtin_rules()


def _records(wl, rs, opts=GenOptions()):
    stream = generate(wl, rs, opts)
    return list(stream), stream.stats


def test_apply_known_substitutions():
    assert apply_rule("jessica", RS.by_id("S39")) == "je$$ica"
    assert apply_rule("dragon", RS.by_id("S3")) == "dr4gon"
    assert apply_rule("people", RS.by_id("S28")) == "pe0ple"
    assert apply_rule("tiffany", RS.by_id("S5")) == "tiff@ny"


def test_apply_is_case_insensitive_on_sources():
    assert apply_rule("SKATER", RS.by_id("S4")) == "SK8TER"
    assert apply_rule("Password", RS.by_id("S39")) == "Pa$$word"
    sensitive = parse_rules("X\ta>8\tcs\n")[0]
    assert apply_rule("SKATER", sensitive) is None
    assert apply_rule("Skater", sensitive) == "Sk8ter"


def test_apply_returns_none_when_unchanged():
    assert apply_rule("qwerty", RS.by_id("S3")) is None
    assert apply_rule("", RS.by_id("S3")) is None


def test_apply_dual_replaces_all_of_both():
    assert apply_rule("password", RS.by_id("D1")) == "p@ssw0rd"
    # only one of the two sources present still changes the word by default
    assert apply_rule("pass", RS.by_id("D1")) == "p@ss"


def test_strict_multi_requires_every_source():
    d1 = RS.by_id("D1")
    assert apply_rule("pass", d1, strict_multi=True) is None
    assert apply_rule("password", d1, strict_multi=True) == "p@ssw0rd"
    # singles are unaffected by the flag
    assert apply_rule("pass", RS.by_id("S5"), strict_multi=True) == "p@ss"
    # case-insensitive presence check
    assert apply_rule("PASSword", d1, strict_multi=True) == "P@SSw0rd"


def test_pairs_apply_simultaneously_not_sequentially():
    # a>s then s>$ applied in sequence would give "$$"; simultaneous gives "s$"
    rule = parse_rules("X\ta>s,s>$\n")[0]
    assert apply_rule("as", rule) == "s$"


def test_apply_preserves_length():
    rng = random.Random(7)
    for _ in range(500):
        word = "".join(rng.choice(string.ascii_letters) for _ in range(rng.randint(1, 14)))
        rule = RS[rng.randrange(len(RS))]
        out = apply_rule(word, rule)
        if out is not None:
            assert len(out) == len(word)


def test_apply_removes_every_source_occurrence():
    rng = random.Random(8)
    for _ in range(500):
        word = "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(1, 14)))
        rule = RS[rng.randrange(len(RS))]
        out = apply_rule(word, rule)
        if out is None:
            continue
        for p in rule.pairs:
            assert p.source not in out
            assert p.source.upper() not in out


def test_apply_is_idempotent_for_builtin_rules():
    rng = random.Random(9)
    for _ in range(500):
        word = "".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(1, 14)))
        rule = RS[rng.randrange(len(RS))]
        out = apply_rule(word, rule)
        if out is not None:
            assert apply_rule(out, rule) is None


def test_generate_word_major_rule_order():
    wl = WordList.from_words(["ana"])
    rs = parse_rules("A\ta>0\nB\ta>1\n")
    records, stats = _records(wl, rs)
    assert [r.candidate for r in records] == ["0n0", "1n1"]
    assert [r.rule_id for r in records] == ["A", "B"]
    assert records[0].base_word == "ana"
    assert stats.emitted == 2


def test_generate_base_words_stream_first_and_win_dedup():
    wl = WordList.from_words(["loss", "l0ss"])
    rs = parse_rules("O\to>0\n")
    records, stats = _records(wl, rs, GenOptions(include_base=True))
    assert [(r.candidate, r.rule_id) for r in records] == \
        [("loss", BASE_RULE_ID), ("l0ss", BASE_RULE_ID)]
    # the mangled loss->l0ss lost to the base word l0ss
    assert stats.suppressed_duplicates == 1
    assert stats.emitted == 2
    assert stats.by_arity["base"] == 2
    assert stats.by_arity["single"] == 0


def test_generate_dedup_keeps_first_provenance():
    # S5 and D1 both map "pass" to "p@ss"; S5 comes first in rule order
    wl = WordList.from_words(["pass"])
    records, _ = _records(wl, RS)
    byc = {}
    for r in records:
        assert r.candidate not in byc
        byc[r.candidate] = r
    assert byc["p@ss"].rule_id == "S5"


def test_generate_no_dedup_counts_everything():
    wl = WordList.from_words(["pass"])
    records, stats = _records(wl, RS, GenOptions(dedup=False))
    assert stats.suppressed_duplicates == 0
    cands = [r.candidate for r in records]
    assert cands.count("p@ss") > 1
    assert stats.emitted == len(cands)


def test_generate_deterministic():
    wl = WordList.from_words(["password", "dragon", "jessica"])
    a, _ = _records(wl, RS, GenOptions(include_base=True))
    b, _ = _records(wl, RS, GenOptions(include_base=True))
    assert a == b


def test_generate_emission_bound_and_stats():
    rng = random.Random(10)
    for _ in range(30):
        words = ["".join(rng.choice(string.ascii_lowercase)
                         for _ in range(rng.randint(1, 10)))
                 for _ in range(rng.randint(0, 25))]
        wl = WordList.from_words(words)
        include_base = rng.random() < 0.5
        opts = GenOptions(include_base=include_base)
        records, stats = _records(wl, RS, opts)
        assert stats.emitted == len(records)
        assert stats.emitted <= len(wl) * (len(RS) + (1 if include_base else 0))
        assert stats.emitted == sum(stats.by_arity.values())
        assert stats.emitted_mangled == stats.emitted - stats.by_arity["base"]
        # dedup on: all candidates distinct
        assert len({r.candidate for r in records}) == len(records)


def test_generate_matches_brute_force_small():
    rng = random.Random(11)
    alphabet = string.ascii_lowercase + string.ascii_uppercase + "019@$!"
    for _ in range(25):
        words = ["".join(rng.choice(alphabet) for _ in range(rng.randint(1, 9)))
                 for _ in range(rng.randint(1, 15))]
        wl = WordList.from_words(words)
        for include_base in (False, True):
            for strict in (False, True):
                opts = GenOptions(include_base=include_base, strict_multi=strict)
                records, stats = _records(wl, RS, opts)
                expected = brute_force_candidates(wl.words, RS,
                                                  include_base=include_base,
                                                  strict_multi=strict)
                assert {r.candidate for r in records} == expected
                assert stats.emitted == len(expected)


def test_apply_agrees_with_reference_everywhere():
    rng = random.Random(12)
    alphabet = string.ascii_letters + "0123456789@$!;,.?"
    for _ in range(2000):
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
        rule = RS[rng.randrange(len(RS))]
        strict = rng.random() < 0.5
        assert apply_rule(word, rule, strict) == mangle_reference(word, rule, strict)


def test_count_candidates_matches_generate():
    rng = random.Random(13)
    for _ in range(10):
        words = ["".join(rng.choice(string.ascii_lowercase)
                         for _ in range(rng.randint(1, 8)))
                 for _ in range(rng.randint(1, 30))]
        wl = WordList.from_words(words)
        opts = GenOptions(include_base=rng.random() < 0.5)
        counted = count_candidates(wl, RS, opts)
        _, streamed = _records(wl, RS, opts)
        assert counted == streamed


def test_empty_wordlist_generates_nothing():
    records, stats = _records(WordList.from_words([]), RS, GenOptions(include_base=True))
    assert records == []
    assert stats.emitted == 0
