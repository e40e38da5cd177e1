#!/usr/bin/env python3
# Run the same analysis three ways: in-process, over a process pool, and
# against two worker servers on localhost TCP, then diff the reports.
#
# The workers here are spawned by the script for convenience; in a real
# deployment you would start them yourself on other machines:
#
#   host-a$ readcorpus worker --bind 0.0.0.0:9101
#   host-b$ readcorpus worker --bind 0.0.0.0:9101
#
# and pass --backend dist --workers host-a:9101,host-b:9101 to analyze.

from pathlib import Path

from readcorpus import (
    Document,
    Corpus,
    FormulaId,
    PipelineConfig,
    builtin_stoplist,
    get_profile,
    run,
    spawn_local_workers,
)

TEXTS = [
    "Bilim insanları yıllardır evrenin yapısını anlamaya çalışıyor.",
    "Kedi pencereden baktı. Sokak boştu. Yağmur yağıyordu.",
    "Okuma alışkanlığı küçük yaşlarda kazanılır ve ömür boyu sürer. "
    "Kütüphaneler bu alışkanlığın en büyük destekçisidir.",
    "Hava bugün açık. Yarın yağmur bekleniyor.",
]

docs = tuple(
    Document(doc_id=f"t{i}", source_path=None, raw_text=t, byte_size=0)
    for i, t in enumerate(TEXTS)
)
corpus = Corpus(documents=docs, root=Path("."), failures=())

cfg = PipelineConfig(
    profile=get_profile("tr"),
    stoplist=builtin_stoplist("tr"),
    formulas=(FormulaId.ATESMAN,),
)

seq = run(corpus, cfg)
par = run(corpus, cfg, "parallel", jobs=2)

with spawn_local_workers(2) as (endpoints, _procs):
    print(f"workers listening on {', '.join(endpoints)}")
    dist = run(corpus, cfg, "distributed", endpoints=endpoints)

print(f"sequential == parallel:    {seq.per_document == par.per_document}")
print(f"sequential == distributed: {seq.per_document == dist.per_document}")
print()
for r in seq.per_document:
    score = r.scores[0].value if r.scores else float("nan")
    print(f"{r.doc_id}: atesman {score:6.2f}  "
          f"({r.features.word_count} words, {r.features.sentence_count} sentences)")
