#!/usr/bin/env python3
# Walk one messy paragraph through each preprocessing stage and show
# what changes: normalization, sentence splitting (note the abbreviation
# and the decimal number), tokenization, and stop-word filtering.

from readcorpus import (
    builtin_stoplist,
    get_profile,
    normalize,
    segment_sentences,
    tokenize,
)

# "sürdü" is "sürdü" typed with combining marks, as some PDF
# extractors emit it; normalization composes it to the usual form
raw = (
    "Dr. Yılmaz  saat 14.30'da geldi!   Toplantı (maalesef) uzun sürdü...\n"
    "Kararlar 3.5 saat sonra açıklandı. Herkes çok yorgundu."
)

profile = get_profile("tr")
stop = builtin_stoplist("tr")

print("RAW")
print(repr(raw))
print(f"  length {len(raw)} code points")

text = normalize(raw, profile)
print("\nNORMALIZED (NFC)")
print(repr(text))
print(f"  length {len(text)} code points")

sentences = segment_sentences(text, profile)
print(f"\nSENTENCES ({len(sentences)})")
for i, s in enumerate(sentences):
    print(f"  {i}: {s}")

print("\nTOKENS PER SENTENCE")
for s in sentences:
    print(" ", tokenize(s, profile))

print("\nAFTER STOP-WORD FILTERING")
for s in sentences:
    kept = [t for t in tokenize(s, profile) if t not in stop.words]
    print(" ", kept)
