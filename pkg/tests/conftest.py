"""Shared fixtures: language profiles, configs, and a deterministic
generator of synthetic Turkish-like corpora."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from readcorpus import (
    DEFAULT_TURKISH_FORMULAS,
    Corpus,
    Document,
    PipelineConfig,
    builtin_stoplist,
    get_profile,
)

DATA_DIR = Path(__file__).parent / "data"

_ONSETS = "bcçdgkmnprsştvyz"
_VOWELS = "aeıioöuü"
_CODAS = ["", "", "", "n", "r", "k", "ş", "m", "l", "t"]

_TURKISH_UPPER = {"i": "İ", "ı": "I"}


def synth_word(rng: random.Random) -> str:
    """Pseudo-Turkish word: 1-5 consonant-vowel(-coda) syllables."""
    parts = []
    for _ in range(rng.randint(1, 5)):
        parts.append(rng.choice(_ONSETS) + rng.choice(_VOWELS) + rng.choice(_CODAS))
    return "".join(parts)


def _capitalize_turkish(word: str) -> str:
    head = word[0]
    return _TURKISH_UPPER.get(head, head.upper()) + word[1:]


def synth_sentence(rng: random.Random) -> str:
    words = [synth_word(rng) for _ in range(rng.randint(3, 12))]
    words[0] = _capitalize_turkish(words[0])
    return " ".join(words) + rng.choice([".", ".", ".", "!", "?"])


def synth_text(rng: random.Random, sentences: int) -> str:
    return " ".join(synth_sentence(rng) for _ in range(sentences))


def synth_text_of_size(rng: random.Random, min_bytes: int) -> str:
    chunks = []
    size = 0
    while size < min_bytes:
        s = synth_sentence(rng)
        chunks.append(s)
        size += len(s.encode("utf-8")) + 1
    return " ".join(chunks)


def random_feature_vector(rng: random.Random):
    """Small random vector with consistent counters for formula tests."""
    from readcorpus.features import FeatureVector

    vocab = [f"w{i}" for i in range(rng.randint(1, 12))]
    tf = {w: rng.randint(1, 9) for w in vocab}
    words = sum(tf.values())
    return FeatureVector(
        word_count=words,
        sentence_count=rng.randint(1, 40),
        syllable_count=words + rng.randint(0, 3 * words),
        letter_count=rng.randint(words, 10 * words),
        hard_word_count=rng.randint(0, words),
        term_frequencies=tf,
    )


def scale_vector(v, k: int):
    from readcorpus.features import FeatureVector

    return FeatureVector(
        word_count=k * v.word_count,
        sentence_count=k * v.sentence_count,
        syllable_count=k * v.syllable_count,
        letter_count=k * v.letter_count,
        hard_word_count=k * v.hard_word_count,
        term_frequencies={w: k * c for w, c in v.term_frequencies.items()},
    )


def make_memory_corpus(texts: list[str], prefix: str = "doc") -> Corpus:
    """In-memory corpus without touching disk; ids are zero-padded."""
    docs = tuple(
        Document(
            doc_id=f"{prefix}{i:04d}.txt",
            source_path=None,
            raw_text=text,
            byte_size=len(text.encode("utf-8")),
        )
        for i, text in enumerate(texts)
    )
    return Corpus(documents=docs, root=Path("."), failures=())


def synth_corpus(n_docs: int, seed: int = 7, sentences: int = 12) -> Corpus:
    rng = random.Random(seed)
    return make_memory_corpus([synth_text(rng, sentences) for _ in range(n_docs)])


@pytest.fixture(scope="session")
def tr_profile():
    return get_profile("tr")


@pytest.fixture(scope="session")
def en_profile():
    return get_profile("en")


@pytest.fixture(scope="session")
def tr_stoplist():
    return builtin_stoplist("tr")


@pytest.fixture()
def base_cfg(tr_profile, tr_stoplist):
    return PipelineConfig(
        profile=tr_profile,
        stoplist=tr_stoplist,
        formulas=DEFAULT_TURKISH_FORMULAS,
    )


@pytest.fixture()
def disk_corpus(tmp_path):
    """Small on-disk corpus for CLI and loader tests."""
    root = tmp_path / "corpus"
    root.mkdir()
    (root / "a.txt").write_text(
        "Ali okula gitti. Ayşe eve geldi. Kitap okudu.", encoding="utf-8"
    )
    (root / "b.txt").write_text(
        "Bugün hava çok güzeldi. Parkta yürüyüş yaptık. Sonra eve döndük.",
        encoding="utf-8",
    )
    (root / "c.txt").write_text("", encoding="utf-8")
    return root
