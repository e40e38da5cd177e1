"""Syllable counters against the frozen fixture lists.

The Turkish list must pass exactly (vowel counting is exact for Turkish
orthography); the English heuristic must agree with the hand-labeled
dictionary counts on at least 90% of the words.
"""

from __future__ import annotations

from pathlib import Path

from readcorpus import count_syllables

DATA = Path(__file__).parent / "data"


def _load_fixture(name: str) -> list[tuple[str, int]]:
    rows = []
    for line in (DATA / name).read_text(encoding="utf-8").splitlines():
        if not line or line.startswith("#"):
            continue
        word, count = line.split("\t")
        rows.append((word, int(count)))
    return rows


def test_turkish_fixture_exact(tr_profile):
    rows = _load_fixture("tr_syllables.txt")
    assert len(rows) == 200
    mismatches = [
        (w, expected, count_syllables(w, tr_profile))
        for w, expected in rows
        if count_syllables(w, tr_profile) != expected
    ]
    assert mismatches == []


def test_english_fixture_at_least_90_percent(en_profile):
    rows = _load_fixture("en_syllables.txt")
    assert len(rows) == 50
    hits = sum(
        1 for w, expected in rows if count_syllables(w, en_profile) == expected
    )
    assert hits / len(rows) >= 0.90, f"only {hits}/{len(rows)} exact"
