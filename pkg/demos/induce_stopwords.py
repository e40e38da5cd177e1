#!/usr/bin/env python3
"""Induce a stop-word list from a corpus directory.

Usage: python3 induce_stopwords.py CORPUS_DIR [TOP_K]

Runs the pipeline with no stop list, takes the TOP_K most frequent terms
of the aggregate, and prints them with their counts. The same thing is
available as `readcorpus stopwords --corpus ... --output ...`.
"""

import sys

from readcorpus import (
    FormulaId,
    PipelineConfig,
    StopWordList,
    build_stoplist,
    get_profile,
    load_corpus,
    run,
)

def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__)
        return 2
    root = sys.argv[1]
    top_k = int(sys.argv[2]) if len(sys.argv) > 2 else 20

    corpus = load_corpus(root)
    print(f"{len(corpus)} documents under {root}")

    cfg = PipelineConfig(
        profile=get_profile("tr"),
        stoplist=StopWordList.empty(),  # induction must see every token
        formulas=(FormulaId.ATESMAN,),
    )
    aggregate = run(corpus, cfg).aggregate
    print(f"{len(aggregate.term_frequencies)} distinct words\n")

    induced = build_stoplist(aggregate, top_k)
    if induced.k_exceeded:
        print(f"(vocabulary smaller than {top_k}; using all of it)")
    width = max(len(w) for w in induced.words)
    for word in induced.ranked:
        print(f"{word:{width}s}  {aggregate.term_frequencies[word]}")
    return 0

if __name__ == "__main__":
    raise SystemExit(main())
