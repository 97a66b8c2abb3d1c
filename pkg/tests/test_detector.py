"""De-leet inversion and dictionary-backed auditing."""

from __future__ import annotations

import random
import string

from leetforge import (WordList, apply_rule, audit, builtin_rules, deleet,
                       parse_rules)

RS = builtin_rules()
TOP5 = RS.top5


def test_deleet_finds_single_substitution():
    findings = deleet("tiff@ny", TOP5)
    assert ("tiffany", "S5") in findings


def test_deleet_finds_o_to_zero():
    findings = deleet("pe0ple", TOP5)
    assert ("people", "S28") in findings


def test_deleet_plain_word_yields_nothing():
    assert deleet("abcdef", RS) == []


def test_deleet_rejects_leftover_source_chars():
    # "a@b" still contains an 'a' the rule would have replaced, so inverting
    # @->a gives "aab" which re-applies to "@@b" != "a@b": no finding.
    rule = parse_rules("X\ta>@\n")
    assert deleet("a@b", rule) == []
    assert deleet("@b", rule) == [("ab", "X")]


def test_deleet_at_most_one_finding_per_rule():
    findings = deleet("p@ssw0rd", RS)
    ids = [rule_id for _, rule_id in findings]
    assert len(ids) == len(set(ids))
    assert len(findings) <= len(RS)
    assert ("password", "D1") in findings


def test_deleet_reconstructs_lowercase_sources():
    # the replacement digit maps back to a lowercase letter, and the
    # case-insensitive re-application still verifies
    findings = deleet("SK8TER", RS)
    assert ("SKaTER", "S4") in findings


def test_deleet_verification_is_sound():
    rng = random.Random(31)
    alphabet = string.ascii_lowercase + "018@$!"
    for _ in range(2000):
        pw = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 10)))
        for base, rule_id in deleet(pw, RS):
            assert apply_rule(base, RS.by_id(rule_id)) == pw
            assert base != pw


def test_audit_flags_pattern_password():
    dictionary = WordList.from_words(["password", "dragon"])
    result = audit("p@ssw0rd", RS, dictionary)
    assert result.is_pattern_based
    assert ("password", "D1") in result.findings
    assert result.password == "p@ssw0rd"


def test_audit_filters_by_dictionary():
    # without "password" in the dictionary nothing survives
    dictionary = WordList.from_words(["dragon"])
    result = audit("p@ssw0rd", RS, dictionary)
    assert not result.is_pattern_based
    assert result.findings == ()


def test_audit_random_string_not_pattern_based():
    dictionary = WordList.from_words(["password", "dragon", "jessica"])
    result = audit("xk9qv2", RS, dictionary)
    assert not result.is_pattern_based


def test_audit_flags_verbatim_dictionary_word():
    dictionary = WordList.from_words(["password"])
    result = audit("password", RS, dictionary)
    assert result.is_pattern_based
    assert ("password", "BASE") in result.findings


def test_audit_dictionary_match_is_case_insensitive():
    dictionary = WordList.from_words(["Zeit"])
    result = audit("Z3it", RS, dictionary)
    assert ("Zeit", "S11") in result.findings
    result = audit("PASSWORD", RS, WordList.from_words(["password"]))
    assert ("PASSWORD", "BASE") in result.findings


def test_audit_findings_sorted_and_unique():
    dictionary = WordList.from_words(["password"])
    findings = audit("p@ssw0rd", RS, dictionary).findings
    assert findings == tuple(sorted(set(findings), key=lambda f: (f.rule_id, f.base_word)))


def test_audit_roundtrip_sample():
    rng = random.Random(32)
    words = ["".join(rng.choice(string.ascii_lowercase) for _ in range(rng.randint(4, 10)))
             for _ in range(300)]
    dictionary = WordList.from_words(words)
    checked = 0
    for word in dictionary.words:
        rule = RS[rng.randrange(len(RS))]
        mangled = apply_rule(word, rule)
        if mangled is None:
            continue
        result = audit(mangled, RS, dictionary)
        assert (word, rule.id) in result.findings
        checked += 1
    assert checked > 100


def test_detection_result_json_shape():
    result = audit("p@ss", RS, WordList.from_words(["pass"]))
    doc = result.to_dict()
    assert doc["password"] == "p@ss"
    assert doc["is_pattern_based"] is True
    assert {"base_word": "pass", "rule_id": "S5"} in doc["findings"]
