"""Shallow feature extraction into a mergeable feature vector.

The FeatureVector is a commutative monoid under ``merge`` with ``zero()`` as
identity, which is what makes backend-invariant map-reduce aggregation work:
per-document vectors can be folded in any association order and still equal
the whole-corpus extraction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lingproc import LanguageProfile, ProcessedText, count_letters, count_syllables

__all__ = [
    "FeatureVector",
    "zero",
    "extract_features",
    "merge",
    "distinct_count",
    "to_record",
    "from_record",
    "DEFAULT_HARD_WORD_THRESHOLD",
]

# Words with at least this many syllables count as hard (SMOG / Fog usage).
DEFAULT_HARD_WORD_THRESHOLD = 3


@dataclass
class FeatureVector:
    """Additive counts for one document, chunk, or whole corpus."""

    word_count: int = 0
    sentence_count: int = 0
    syllable_count: int = 0
    letter_count: int = 0
    hard_word_count: int = 0
    term_frequencies: dict[str, int] = field(default_factory=dict)


def zero() -> FeatureVector:
    return FeatureVector()


def extract_features(
    pt: ProcessedText,
    profile: LanguageProfile,
    hard_word_threshold: int = DEFAULT_HARD_WORD_THRESHOLD,
) -> FeatureVector:
    """Count words, sentences, syllables, letters, hard words, and terms.

    Counting runs on post-filter tokens; sentence_count carries over from
    pre-filter segmentation.
    """
    syllables = 0
    letters = 0
    hard = 0
    tf: dict[str, int] = {}
    syl_memo: dict[str, int] = {}
    let_memo: dict[str, int] = {}
    for t in pt.tokens:
        syl = syl_memo.get(t)
        if syl is None:
            syl = syl_memo[t] = count_syllables(t, profile)
            let_memo[t] = count_letters(t)
        syllables += syl
        letters += let_memo[t]
        if syl >= hard_word_threshold:
            hard += 1
        tf[t] = tf.get(t, 0) + 1
    return FeatureVector(
        word_count=len(pt.tokens),
        sentence_count=pt.sentence_count,
        syllable_count=syllables,
        letter_count=letters,
        hard_word_count=hard,
        term_frequencies=tf,
    )


def merge(a: FeatureVector, b: FeatureVector) -> FeatureVector:
    """Componentwise sum; associative and commutative with zero() identity."""
    tf = dict(a.term_frequencies)
    for word, count in b.term_frequencies.items():
        tf[word] = tf.get(word, 0) + count
    return FeatureVector(
        word_count=a.word_count + b.word_count,
        sentence_count=a.sentence_count + b.sentence_count,
        syllable_count=a.syllable_count + b.syllable_count,
        letter_count=a.letter_count + b.letter_count,
        hard_word_count=a.hard_word_count + b.hard_word_count,
        term_frequencies=tf,
    )


def distinct_count(v: FeatureVector) -> int:
    """Number of distinct words seen."""
    return len(v.term_frequencies)


def to_record(v: FeatureVector) -> dict:
    """Flat serialization; term frequencies as sorted pairs for determinism."""
    return {
        "word_count": v.word_count,
        "sentence_count": v.sentence_count,
        "syllable_count": v.syllable_count,
        "letter_count": v.letter_count,
        "hard_word_count": v.hard_word_count,
        "distinct_word_count": distinct_count(v),
        "term_frequencies": [[w, c] for w, c in sorted(v.term_frequencies.items())],
    }


def from_record(rec: dict) -> FeatureVector:
    return FeatureVector(
        word_count=rec["word_count"],
        sentence_count=rec["sentence_count"],
        syllable_count=rec["syllable_count"],
        letter_count=rec["letter_count"],
        hard_word_count=rec["hard_word_count"],
        term_frequencies={w: c for w, c in rec["term_frequencies"]},
    )
