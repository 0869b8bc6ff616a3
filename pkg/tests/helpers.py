"""Independent reference implementations used only by the test suite.

Nothing here shares scan, pruning or scoring code with the package paths
it checks: the oracle distance is the plain recursion on suffixes, and the
reference ranker walks the whole vocabulary with the unbounded distance
and re-derives thresholds and scores from first principles.
"""

from __future__ import annotations

import random
import string
from fractions import Fraction

from translitnorm import (
    CharRule,
    Formula,
    LengthRule,
    ModelConfig,
    TermTooShortError,
    VocabTerm,
    Vocabulary,
    last_consonant,
    levenshtein,
)

_VOWELS = set("aeiou")


def recursive_distance(a: str, b: str, memo: dict | None = None) -> int:
    """Textbook recursion on string suffixes, memoized across calls.

    min(insert, delete, substitute) with unit costs; the memo may be
    shared between calls so exhaustive sweeps stay affordable.
    """
    if memo is None:
        memo = {}

    def rec(x: str, y: str) -> int:
        if not x:
            return len(y)
        if not y:
            return len(x)
        key = (x, y)
        hit = memo.get(key)
        if hit is not None:
            return hit
        value = min(
            rec(x[1:], y) + 1,
            rec(x, y[1:]) + 1,
            rec(x[1:], y[1:]) + (x[0] != y[0]),
        )
        memo[key] = value
        return value

    return rec(a, b)


def _reference_effective_length(vocab_len: int, query_len: int, rule: LengthRule) -> Fraction:
    if rule is LengthRule.LONGEST:
        return Fraction(max(vocab_len, query_len))
    if rule is LengthRule.AVERAGE:
        return Fraction(vocab_len + query_len, 2)
    return Fraction(vocab_len)


def _reference_pruning(query: str, vocab_term: str, config: ModelConfig) -> Fraction:
    if not config.char_rules:
        return Fraction(1)
    w = config.weights
    total = Fraction(0)
    if CharRule.FIRST_CHAR in config.char_rules:
        total += Fraction(w.wt1) if query[0] == vocab_term[0] else Fraction(w.wt2)
    if CharRule.SECOND_CHAR in config.char_rules:
        total += Fraction(w.wt2) if query[1] == vocab_term[1] else Fraction(w.wt3)
    if CharRule.LAST_CONSONANT in config.char_rules:
        cq, cv = last_consonant(query), last_consonant(vocab_term)
        total += Fraction(w.wt4) if cq is not None and cq == cv else Fraction(w.wt5)
    return total


def _reference_score(prun: Fraction, ed: int, length: Fraction, formula: Formula) -> Fraction:
    if formula is Formula.UNWEIGHTED:
        return 1 - Fraction(ed) / length
    if formula is Formula.SMOOTHED:
        return prun - Fraction(ed - 1) / length
    return prun - Fraction(ed) / length


def naive_normalize(
    term: str, vocab: Vocabulary, config: ModelConfig, top_k: int = 10
) -> list[tuple[str, int, float, float, Fraction]]:
    """Full-vocabulary scan with unbounded distances; no prefilter, no band.

    Returns (term, edit_distance, pruning_weight, proxy_weight,
    effective_length) rows in ranked order, for comparison against the
    production path.
    """
    probe = vocab.fold(term)
    if len(probe) < 2:
        raise TermTooShortError(term)
    query_len = len(probe)
    if probe in vocab:
        prun = _reference_pruning(probe, probe, config)
        length = Fraction(query_len)
        score = _reference_score(prun, 0, length, config.formula)
        return [(probe, 0, float(prun), float(score), length)]
    rows = []
    for vt in vocab.terms():
        vocab_len = len(vt.term)
        if vocab_len <= 1 or query_len <= 1:
            continue
        if config.length_rule is LengthRule.VOCAB_LONGER and vocab_len <= query_len:
            continue
        ed = levenshtein(probe, vt.term)
        length = _reference_effective_length(vocab_len, query_len, config.length_rule)
        if Fraction(ed) >= length / 2:
            continue
        prun = _reference_pruning(probe, vt.term, config)
        score = _reference_score(prun, ed, length, config.formula)
        rows.append((-score, ed, -vt.frequency, vt.term, prun, length))
    rows.sort(key=lambda row: row[:4])
    return [
        (term_, ed, float(prun), float(-neg), length)
        for neg, ed, _, term_, prun, length in rows[:top_k]
    ]


def candidate_rows(candidates) -> list[tuple[str, int, float, float, Fraction]]:
    """Project package Candidates onto the reference row shape."""
    return [
        (c.term, c.edit_distance, c.pruning_weight, c.proxy_weight, c.effective_length)
        for c in candidates
    ]


def random_vocabulary(
    rng: random.Random,
    size: int,
    min_len: int = 2,
    max_len: int = 12,
    alphabet: str = string.ascii_lowercase[:10],
) -> Vocabulary:
    """Random lowercase vocabulary with varied frequencies."""
    terms: dict[str, int] = {}
    while len(terms) < size:
        length = rng.randint(min_len, max_len)
        word = "".join(rng.choice(alphabet) for _ in range(length))
        if word not in terms:
            terms[word] = rng.randint(1, 40)
    return Vocabulary(
        (VocabTerm(w, f, 1) for w, f in terms.items()), case_fold=True
    )


def random_query(rng: random.Random, vocab: Vocabulary) -> str:
    """Either a light corruption of a vocabulary term or a random string."""
    if rng.random() < 0.7:
        base = rng.choice(vocab.terms()).term
        ops = rng.randint(1, 2)
        word = base
        for _ in range(ops):
            kind = rng.choice(("sub", "del", "ins"))
            pos = rng.randrange(len(word)) if word else 0
            ch = rng.choice("abcdefghij")
            if kind == "sub" and word:
                word = word[:pos] + ch + word[pos + 1 :]
            elif kind == "del" and len(word) > 2:
                word = word[:pos] + word[pos + 1 :]
            else:
                word = word[:pos] + ch + word[pos:]
        return word
    length = rng.randint(2, 12)
    return "".join(rng.choice("abcdefghij") for _ in range(length))
