"""Language-aware text preprocessing.

The pipeline runs four stages in order: Unicode normalization, rule-based
sentence segmentation, whitespace tokenization with case folding, and token
filtering (special characters, digits, stop words). Everything
language-specific lives in a ``LanguageProfile`` -- vowel inventory, sentence
terminators, abbreviation list, case-folding mode -- so the same pipeline
serves Turkish and English.

Syllable counting is profile-driven as well: Turkish orthography has exactly
one vowel per syllable, so the Turkish counter is an exact vowel count;
English uses a vowel-group heuristic with a silent-e correction and is
documented as approximate.
"""

from __future__ import annotations

import os
import re
import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .corpus import Document

__all__ = [
    "LanguageProfile",
    "ProcessedText",
    "StopWordList",
    "EmptyWord",
    "MalformedLine",
    "ProfileError",
    "normalize",
    "segment_sentences",
    "tokenize",
    "filter_tokens",
    "count_syllables",
    "count_letters",
    "preprocess",
    "fold_case",
    "read_word_list",
    "load_profile",
    "get_profile",
    "PROFILE_DIR_ENV",
]

PROFILE_DIR_ENV = "READCORPUS_PROFILE_DIR"

# Characters whose presence anywhere in a token disqualifies it.
SPECIAL_CHARS = frozenset("+-*#/\\$=&")

# Dotted/dotless i must fold before generic lowercasing: str.lower() maps
# 'I' -> 'i' and 'İ' -> 'i' + combining dot, both wrong for Turkish.
_TURKISH_FOLD = {ord("İ"): "i", ord("I"): "ı"}

_EDGE_PUNCT = re.compile(r"^[\W_]+|[\W_]+$")


class EmptyWord(ValueError):
    """Raised when a syllable count is requested for an empty word."""


class MalformedLine(ValueError):
    """A word-list line that is not a single whitespace-free word."""

    def __init__(self, path: Path | str, lineno: int, line: str):
        self.path = Path(path)
        self.lineno = lineno
        self.line = line
        super().__init__(f"{path}:{lineno}: malformed word-list line: {line!r}")


class ProfileError(ValueError):
    """A language profile file is missing or invalid."""


@dataclass(frozen=True)
class LanguageProfile:
    """Per-language data bundle parameterizing the preprocessing pipeline."""

    lang_code: str
    vowels: frozenset[str]
    sentence_terminators: frozenset[str]
    abbreviations: frozenset[str]
    case_folding: str = "simple"  # "turkish" or "simple"

    def __post_init__(self):
        if not self.vowels:
            raise ProfileError("profile needs a non-empty vowel set")
        if not self.sentence_terminators:
            raise ProfileError("profile needs a non-empty terminator set")
        if self.case_folding not in ("turkish", "simple"):
            raise ProfileError(f"unknown case folding mode: {self.case_folding!r}")

    def to_record(self) -> dict:
        """Plain-data form for hashing and shipping to remote workers."""
        return {
            "lang_code": self.lang_code,
            "vowels": sorted(self.vowels),
            "sentence_terminators": sorted(self.sentence_terminators),
            "abbreviations": sorted(self.abbreviations),
            "case_folding": self.case_folding,
        }

    @staticmethod
    def from_record(rec: dict) -> "LanguageProfile":
        return LanguageProfile(
            lang_code=rec["lang_code"],
            vowels=frozenset(rec["vowels"]),
            sentence_terminators=frozenset(rec["sentence_terminators"]),
            abbreviations=frozenset(rec["abbreviations"]),
            case_folding=rec["case_folding"],
        )


@dataclass(frozen=True)
class ProcessedText:
    """Output of the preprocessing pipeline for one document."""

    doc_id: str
    sentence_count: int
    tokens: tuple[str, ...]
    raw_token_count: int


@dataclass(frozen=True)
class StopWordList:
    """A set of stop words plus where it came from.

    ``ranked`` preserves descending build-time frequency order for induced
    lists so they can be saved deterministically; ``k_exceeded`` flags that
    an induction request asked for more words than the vocabulary held.
    """

    words: frozenset[str]
    origin: str = "builtin"  # "builtin" | "file" | "induced" | "remote"
    ranked: tuple[str, ...] | None = None
    k_exceeded: bool = False

    @staticmethod
    def empty() -> "StopWordList":
        return StopWordList(words=frozenset(), origin="builtin")


def fold_case(text: str, profile: LanguageProfile) -> str:
    """Lowercase ``text`` under the profile's folding mode."""
    if profile.case_folding == "turkish":
        return text.translate(_TURKISH_FOLD).lower()
    return text.lower()


def normalize(raw_text: str, profile: LanguageProfile) -> str:
    """Canonically compose ``raw_text`` (NFC). No case folding happens here."""
    return unicodedata.normalize("NFC", raw_text)


def _is_abbreviation(text: str, dot_index: int, profile: LanguageProfile) -> bool:
    # The token before the period is its maximal alphabetic run.
    j = dot_index
    while j > 0 and text[j - 1].isalpha():
        j -= 1
    prev = text[j:dot_index]
    return bool(prev) and fold_case(prev, profile) in profile.abbreviations


def segment_sentences(text: str, profile: LanguageProfile) -> list[str]:
    """Split normalized text into sentences.

    A terminator character ends a sentence when it is followed by whitespace
    and then an uppercase letter, or by (optional whitespace and) end of
    text. A period is not a boundary when the token before it is a known
    abbreviation or when it sits between two digits (decimal point).
    Segments without a single letter or digit are discarded, so text with no
    word characters yields no sentences.
    """
    if not text:
        return []
    n = len(text)
    terminators = profile.sentence_terminators
    term_re = re.compile("[%s]" % re.escape("".join(sorted(terminators))))
    boundaries: list[int] = []
    for m in term_re.finditer(text):
        i = m.start()
        ch = text[i]
        if ch == ".":
            if 0 < i < n - 1 and text[i - 1].isdigit() and text[i + 1].isdigit():
                continue
            if _is_abbreviation(text, i, profile):
                continue
        k = i + 1
        while k < n and text[k].isspace():
            k += 1
        if k == n:
            boundaries.append(i + 1)
        elif k > i + 1 and text[k].isupper():
            boundaries.append(i + 1)

    sentences = []
    start = 0
    for b in boundaries:
        seg = text[start:b].strip()
        if any(c.isalnum() for c in seg):
            sentences.append(seg)
        start = b
    tail = text[start:].strip()
    if any(c.isalnum() for c in tail):
        sentences.append(tail)
    return sentences


def tokenize(sentence: str, profile: LanguageProfile) -> list[str]:
    """Split on whitespace runs, strip edge punctuation, fold case.

    Chunks that are pure punctuation vanish; interior punctuation (hyphens,
    apostrophes, decimal points) is kept and left to the filter stage.
    """
    tokens = []
    for chunk in sentence.split():
        word = _EDGE_PUNCT.sub("", chunk)
        if word:
            tokens.append(fold_case(word, profile))
    return tokens


def filter_tokens(
    tokens: Iterable[str],
    stoplist: StopWordList,
    profile: LanguageProfile,
) -> list[str]:
    """Drop tokens carrying special characters or digits, and stop words.

    Order of survivors is preserved; the operation is idempotent.
    """
    stop = stoplist.words
    out = []
    for t in tokens:
        if any(c in SPECIAL_CHARS for c in t):
            continue
        if any(c.isdigit() for c in t):
            continue
        if t in stop:
            continue
        out.append(t)
    return out


def count_syllables(word: str, profile: LanguageProfile) -> int:
    """Count syllables in a case-folded word.

    Turkish (and any profile other than "en"): the number of vowels, floored
    at 1 -- exact for Turkish dictionary words. English: maximal vowel
    groups, minus a trailing silent 'e' (consonant + 'e', except the
    consonant-'le' ending where the 'e' is voiced), floored at 1.
    """
    if not word:
        raise EmptyWord("cannot count syllables of an empty word")
    vowels = profile.vowels
    if profile.lang_code != "en":
        return max(sum(1 for c in word if c in vowels), 1)

    groups = 0
    prev_vowel = False
    for c in word:
        is_vowel = c in vowels
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    if (
        len(word) > 2
        and word[-1] == "e"
        and word[-2] not in vowels
        and not (word[-2] == "l" and word[-3] not in vowels)
    ):
        groups -= 1
    return max(groups, 1)


def count_letters(word: str) -> int:
    """Number of alphabetic characters; digits and punctuation excluded."""
    return sum(1 for c in word if c.isalpha())


def preprocess(
    doc: "Document",
    stoplist: StopWordList,
    profile: LanguageProfile,
) -> ProcessedText:
    """Run the full pipeline on one document.

    Sentence count is taken before filtering: removing stop words must not
    change how many sentences a document has.
    """
    text = normalize(doc.raw_text, profile)
    sentences = segment_sentences(text, profile)
    raw_tokens: list[str] = []
    for s in sentences:
        raw_tokens.extend(tokenize(s, profile))
    tokens = filter_tokens(raw_tokens, stoplist, profile)
    return ProcessedText(
        doc_id=doc.doc_id,
        sentence_count=len(sentences),
        tokens=tuple(tokens),
        raw_token_count=len(raw_tokens),
    )


# ---------------------------------------------------------------------------
# word-list and profile files


def read_word_list(path: Path | str) -> list[str]:
    """Read a word-per-line UTF-8 file; '#' lines and blanks are ignored.

    A surviving line containing whitespace is malformed.
    """
    path = Path(path)
    words = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if any(c.isspace() for c in line):
                raise MalformedLine(path, lineno, raw.rstrip("\n"))
            words.append(line)
    return words


def _parse_chars(value: str) -> frozenset[str]:
    chars = frozenset(value.split())
    if any(len(c) != 1 for c in chars):
        raise ProfileError(f"expected single characters, got {value!r}")
    return chars


def load_profile(path: Path | str) -> LanguageProfile:
    """Load a profile from its key = value file."""
    path = Path(path)
    if not path.is_file():
        raise ProfileError(f"profile file not found: {path}")
    entries: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ProfileError(f"{path}: expected 'key = value', got {line!r}")
            key, _, value = line.partition("=")
            entries[key.strip()] = value.strip()
    try:
        lang = entries["lang"]
        folding = entries["folding"]
        vowels = _parse_chars(entries["vowels"])
        terminators = _parse_chars(entries["terminators"])
    except KeyError as exc:
        raise ProfileError(f"{path}: missing profile key {exc}") from None
    abbreviations: frozenset[str] = frozenset()
    if "abbreviations" in entries:
        abbrev_path = path.parent / entries["abbreviations"]
        profile_for_fold = LanguageProfile(
            lang_code=lang,
            vowels=vowels,
            sentence_terminators=terminators,
            abbreviations=frozenset(),
            case_folding=folding,
        )
        abbreviations = frozenset(
            fold_case(w, profile_for_fold) for w in read_word_list(abbrev_path)
        )
    return LanguageProfile(
        lang_code=lang,
        vowels=vowels,
        sentence_terminators=terminators,
        abbreviations=abbreviations,
        case_folding=folding,
    )


def get_profile(lang_code: str, profile_dir: Path | str | None = None) -> LanguageProfile:
    """Resolve a profile by language code.

    Search order: explicit ``profile_dir``, the READCORPUS_PROFILE_DIR
    environment variable, then the profiles shipped with the package.
    """
    candidates = []
    if profile_dir is not None:
        candidates.append(Path(profile_dir) / f"{lang_code}.profile")
    env_dir = os.environ.get(PROFILE_DIR_ENV)
    if env_dir:
        candidates.append(Path(env_dir) / f"{lang_code}.profile")
    for candidate in candidates:
        if candidate.is_file():
            return load_profile(candidate)
    data_dir = resources.files("readcorpus") / "data"
    packaged = data_dir / f"{lang_code}.profile"
    with resources.as_file(packaged) as p:
        if not p.is_file():
            raise ProfileError(f"no profile for language {lang_code!r}")
        return load_profile(p)
