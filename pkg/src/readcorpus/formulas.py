"""The seven readability formulas.

Every formula is a closed-form function of ratios taken from a
FeatureVector. Each ratio is computed as a single division of exact integer
counts, so multiplying all counts by the same positive integer leaves every
score bit-identical, and evaluation order is fixed left-to-right -- scores
are reproducible across execution backends.

Score direction differs by family: Flesch Reading Ease and Ateşman are ease
scores (higher = easier); the other five estimate grade level (higher =
harder).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .features import FeatureVector
from .lingproc import read_word_list

__all__ = [
    "FormulaId",
    "ALL_FORMULAS",
    "DEFAULT_TURKISH_FORMULAS",
    "EasyWordList",
    "ReadabilityScore",
    "EmptyFeatures",
    "MissingEasyWordList",
    "evaluate_formula",
    "evaluate_all",
    "recompute_score",
    "load_easy_words",
]


class FormulaId(str, Enum):
    FLESCH_READING_EASE = "flesch_reading_ease"
    FLESCH_KINCAID_GRADE = "flesch_kincaid_grade"
    SMOG = "smog"
    GUNNING_FOG = "gunning_fog"
    ARI = "ari"
    DALE_CHALL = "dale_chall"
    ATESMAN = "atesman"


ALL_FORMULAS: tuple[FormulaId, ...] = tuple(FormulaId)

# No curated easy-word list exists for Turkish, so Dale-Chall is not in the
# default Turkish set; Ateşman is the native formula, Flesch its ancestor.
DEFAULT_TURKISH_FORMULAS: tuple[FormulaId, ...] = (
    FormulaId.ATESMAN,
    FormulaId.FLESCH_READING_EASE,
)


class EmptyFeatures(ValueError):
    """Zero words or sentences: the formula ratios are undefined."""


class MissingEasyWordList(ValueError):
    """Dale-Chall was requested without an easy-word list."""


@dataclass(frozen=True)
class EasyWordList:
    """Fixed vocabulary against which difficult words are counted."""

    words: frozenset[str]
    source_path: Path | None = None


@dataclass(frozen=True)
class ReadabilityScore:
    """A formula id, its value, and the exact ratios it was computed from.

    ``inputs`` is sufficient to recompute ``value`` bit-exactly (see
    ``recompute_score``).
    """

    formula: FormulaId
    value: float
    inputs: dict[str, float]

    def to_record(self) -> dict:
        return {
            "formula": self.formula.value,
            "value": self.value,
            "inputs": dict(self.inputs),
        }

    @staticmethod
    def from_record(rec: dict) -> "ReadabilityScore":
        return ReadabilityScore(
            formula=FormulaId(rec["formula"]),
            value=rec["value"],
            inputs=dict(rec["inputs"]),
        )


def load_easy_words(path: Path | str) -> EasyWordList:
    """Load an easy-word list (word per line, '#' comments)."""
    path = Path(path)
    return EasyWordList(words=frozenset(read_word_list(path)), source_path=path)


def _difficult_count(v: FeatureVector, easy: EasyWordList) -> int:
    return sum(c for w, c in v.term_frequencies.items() if w not in easy.words)


def evaluate_formula(
    formula: FormulaId,
    v: FeatureVector,
    easy_list: EasyWordList | None = None,
) -> ReadabilityScore:
    """Evaluate one formula against a feature vector."""
    w = v.word_count
    s = v.sentence_count
    if w <= 0 or s <= 0:
        raise EmptyFeatures(
            f"{formula.value}: needs words and sentences, "
            f"got {w} words / {s} sentences"
        )
    asl = w / s  # words per sentence

    if formula is FormulaId.FLESCH_READING_EASE:
        spw = v.syllable_count / w
        value = 206.835 - 1.015 * asl - 84.6 * spw
        inputs = {"words_per_sentence": asl, "syllables_per_word": spw}
    elif formula is FormulaId.FLESCH_KINCAID_GRADE:
        spw = v.syllable_count / w
        value = 0.39 * asl + 11.8 * spw - 15.59
        inputs = {"words_per_sentence": asl, "syllables_per_word": spw}
    elif formula is FormulaId.SMOG:
        hw30 = (30 * v.hard_word_count) / s
        value = 1.0430 * math.sqrt(hw30) + 3.1291
        inputs = {"hard_words_per_30_sentences": hw30}
    elif formula is FormulaId.GUNNING_FOG:
        hw_pct = (100 * v.hard_word_count) / w
        value = 0.4 * (asl + hw_pct)
        inputs = {"words_per_sentence": asl, "hard_word_percent": hw_pct}
    elif formula is FormulaId.ARI:
        lpw = v.letter_count / w
        value = 4.71 * lpw + 0.5 * asl - 21.43
        inputs = {"letters_per_word": lpw, "words_per_sentence": asl}
    elif formula is FormulaId.DALE_CHALL:
        if easy_list is None:
            raise MissingEasyWordList("dale_chall needs an easy-word list")
        diff_pct = (_difficult_count(v, easy_list) / w) * 100
        value = 0.1579 * diff_pct + 0.0496 * asl
        inputs = {"difficult_word_percent": diff_pct, "words_per_sentence": asl}
    elif formula is FormulaId.ATESMAN:
        spw = v.syllable_count / w
        value = 198.825 - 40.175 * spw - 2.610 * asl
        inputs = {"syllables_per_word": spw, "words_per_sentence": asl}
    else:  # pragma: no cover - FormulaId is a closed set
        raise ValueError(f"unknown formula: {formula}")
    return ReadabilityScore(formula=formula, value=value, inputs=inputs)


def evaluate_all(
    formulas: list[FormulaId] | tuple[FormulaId, ...],
    v: FeatureVector,
    easy_list: EasyWordList | None = None,
) -> tuple[list[ReadabilityScore], list[str]]:
    """Evaluate several formulas; one failing does not abort the rest.

    Returns (scores, diagnostics) where each diagnostic names the formula
    and the reason it could not be evaluated.
    """
    scores = []
    errors = []
    for fid in formulas:
        try:
            scores.append(evaluate_formula(fid, v, easy_list))
        except (EmptyFeatures, MissingEasyWordList) as exc:
            errors.append(f"{fid.value}: {exc.__class__.__name__}: {exc}")
    return scores, errors


def recompute_score(score: ReadabilityScore) -> float:
    """Re-derive the value from the stored input ratios, bit-exactly."""
    inp = score.inputs
    f = score.formula
    if f is FormulaId.FLESCH_READING_EASE:
        return 206.835 - 1.015 * inp["words_per_sentence"] - 84.6 * inp["syllables_per_word"]
    if f is FormulaId.FLESCH_KINCAID_GRADE:
        return 0.39 * inp["words_per_sentence"] + 11.8 * inp["syllables_per_word"] - 15.59
    if f is FormulaId.SMOG:
        return 1.0430 * math.sqrt(inp["hard_words_per_30_sentences"]) + 3.1291
    if f is FormulaId.GUNNING_FOG:
        return 0.4 * (inp["words_per_sentence"] + inp["hard_word_percent"])
    if f is FormulaId.ARI:
        return 4.71 * inp["letters_per_word"] + 0.5 * inp["words_per_sentence"] - 21.43
    if f is FormulaId.DALE_CHALL:
        return 0.1579 * inp["difficult_word_percent"] + 0.0496 * inp["words_per_sentence"]
    if f is FormulaId.ATESMAN:
        return 198.825 - 40.175 * inp["syllables_per_word"] - 2.610 * inp["words_per_sentence"]
    raise ValueError(f"unknown formula: {f}")  # pragma: no cover
