#!/usr/bin/env python3
"""Time the sequential and process-pool backends on the same corpus and
check they return the same report. On a single-core machine the pool is
slower (fork overhead, no real parallelism); the point is equality, the
speedup needs cores."""

import random
import time
from pathlib import Path

from readcorpus import (
    Corpus,
    Document,
    FormulaId,
    PipelineConfig,
    builtin_stoplist,
    get_profile,
    run,
)

WORDS = ("ev", "okul", "kitap", "pencere", "anlatmak", "güzel", "öğretmen",
         "bahçe", "sabah", "kelebek", "düşünce", "arkadaş")


def fake_doc(rng: random.Random, i: int) -> Document:
    sentences = []
    for _ in range(rng.randint(40, 80)):
        n = rng.randint(4, 14)
        words = [rng.choice(WORDS) for _ in range(n)]
        sentences.append(" ".join(words).capitalize() + ".")
    text = " ".join(sentences)
    return Document(
        doc_id=f"doc{i:03d}", source_path=None, raw_text=text,
        byte_size=len(text.encode("utf-8")),
    )


if __name__ == "__main__":
    rng = random.Random(42)
    corpus = Corpus(
        documents=tuple(fake_doc(rng, i) for i in range(50)),
        root=Path("."), failures=(),
    )
    cfg = PipelineConfig(
        profile=get_profile("tr"),
        stoplist=builtin_stoplist("tr"),
        formulas=(FormulaId.ATESMAN, FormulaId.FLESCH_READING_EASE),
    )

    t0 = time.perf_counter()
    seq = run(corpus, cfg)
    t_seq = time.perf_counter() - t0

    t0 = time.perf_counter()
    par = run(corpus, cfg, "parallel", jobs=2)
    t_par = time.perf_counter() - t0

    same = (seq.per_document == par.per_document
            and seq.aggregate_scores == par.aggregate_scores)
    print(f"sequential  {t_seq:.3f}s")
    print(f"parallel(2) {t_par:.3f}s")
    print(f"identical reports: {same}")
    for score in seq.aggregate_scores:
        print(f"aggregate {score.formula.value}: {score.value:.2f}")
