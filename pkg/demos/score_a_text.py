#!/usr/bin/env python3
"""Score a single Turkish text and print every number the formulas used."""

from readcorpus import (
    Document,
    FormulaId,
    PipelineConfig,
    analyze_document,
    builtin_stoplist,
    get_profile,
)

TEXT = (
    "Okuma, insanın dünyayı anlamasının en eski yollarından biridir. "
    "Bir metnin okunabilirliği, cümlelerin uzunluğuna ve kelimelerin "
    "hece sayısına bağlıdır. Kısa cümleler genellikle daha kolay okunur. "
    "Ancak Prof. Dr. Ayşe'nin de söylediği gibi, kolaylık her zaman "
    "anlaşılırlık demek değildir."
)

if __name__ == "__main__":
    cfg = PipelineConfig(
        profile=get_profile("tr"),
        stoplist=builtin_stoplist("tr"),
        formulas=(FormulaId.ATESMAN, FormulaId.FLESCH_READING_EASE),
    )
    doc = Document(doc_id="ornek", source_path=None, raw_text=TEXT, byte_size=0)
    result = analyze_document(doc, cfg)

    f = result.features
    print(f"words       {f.word_count}")
    print(f"sentences   {f.sentence_count}")
    print(f"syllables   {f.syllable_count}")
    print(f"hard words  {f.hard_word_count}  (3+ syllables)")
    print()
    for score in result.scores:
        print(f"{score.formula.value:22s} {score.value:7.2f}")
        for key, value in sorted(score.inputs.items()):
            print(f"    {key} = {value}")
