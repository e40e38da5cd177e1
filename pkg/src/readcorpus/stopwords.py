"""Stop-word list induction from corpus term frequencies.

Stop words are the highest-frequency words of a corpus. Induction runs on an
aggregation produced with an *empty* stop list (otherwise the procedure
would be circular) and is fully deterministic: frequency descending, ties
broken by word order.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .features import FeatureVector
from .lingproc import LanguageProfile, StopWordList, fold_case, read_word_list

__all__ = [
    "build_stoplist",
    "save_stoplist",
    "load_stoplist",
    "builtin_stoplist",
    "DEFAULT_STOPLIST_SIZE",
]

DEFAULT_STOPLIST_SIZE = 100


def build_stoplist(corpus_features: FeatureVector, k: int) -> StopWordList:
    """Take the k highest-frequency words as stop words.

    When k exceeds the vocabulary, the whole vocabulary is returned and the
    result is flagged (``k_exceeded``) instead of failing.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ranked = sorted(
        corpus_features.term_frequencies.items(), key=lambda item: (-item[1], item[0])
    )
    chosen = ranked[:k]
    return StopWordList(
        words=frozenset(w for w, _ in chosen),
        origin="induced",
        ranked=tuple(w for w, _ in chosen),
        k_exceeded=k > len(ranked),
    )


def save_stoplist(stoplist: StopWordList, path: Path | str) -> None:
    """Write one word per line, descending build-time frequency.

    Lists without recorded ranking (e.g. loaded from file) are written in
    sorted word order; output is byte-deterministic either way.
    """
    path = Path(path)
    order = stoplist.ranked if stoplist.ranked is not None else tuple(sorted(stoplist.words))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for word in order:
            fh.write(word + "\n")


def load_stoplist(path: Path | str, profile: LanguageProfile | None = None) -> StopWordList:
    """Load a stop-word file; entries are folded when a profile is given."""
    words = read_word_list(path)
    if profile is not None:
        words = [fold_case(w, profile) for w in words]
    return StopWordList(words=frozenset(words), origin="file", ranked=None)


def builtin_stoplist(lang_code: str = "tr") -> StopWordList:
    """The baseline stop list shipped with the package (Turkish only)."""
    packaged = resources.files("readcorpus") / "data" / f"{lang_code}_stopwords.txt"
    with resources.as_file(packaged) as p:
        if not p.is_file():
            raise FileNotFoundError(f"no builtin stop list for language {lang_code!r}")
        words = read_word_list(p)
    return StopWordList(words=frozenset(words), origin="builtin", ranked=None)
