"""Deterministic crack/bench fixtures with fully known ground truth."""

from __future__ import annotations

import hashlib

# Letters no builtin rule replaces; tails built from them can never mangle.
SAFE_ALPHABET = "cjknpquwxy"


def planted_corpus(n_words=1000, n_plain=100, n_mangled=100, digest_fn=None):
    """Words of the shape 'o' + fixed-width tail over SAFE_ALPHABET.

    Only the leading 'o' can mangle (to '0', '3' or '@'), tails are pairwise
    distinct, and no mangle collides with any word, so every word emits
    exactly one base form and three mangles. The first n_plain words are
    planted as digests verbatim; for the next n_mangled words the o->0 form
    is planted instead. So a plain-words run recovers exactly n_plain and a
    run that adds the builtin mangles recovers n_plain + n_mangled.

    Returns (words, hash_text, planted_plain, planted_mangled).
    """
    assert n_plain + n_mangled <= n_words
    if digest_fn is None:
        digest_fn = lambda s: hashlib.md5(s.encode("utf-8")).digest()
    width = 4
    while len(SAFE_ALPHABET) ** width < n_words:
        width += 1
    words = []
    for i in range(n_words):
        tail = ""
        x = i
        for _ in range(width):
            tail = SAFE_ALPHABET[x % 10] + tail
            x //= 10
        words.append("o" + tail)
    planted_plain = words[:n_plain]
    planted_mangled = ["0" + w[1:] for w in words[n_plain:n_plain + n_mangled]]
    hash_text = "".join(digest_fn(s).hex() + "\n" for s in planted_plain + planted_mangled)
    return words, hash_text, planted_plain, planted_mangled
