"""Corpus-scale readability analysis.

Load a corpus of plain-text documents, run language-aware preprocessing
(sentence segmentation, tokenization, case folding, stop-word filtering),
extract mergeable shallow features, and score them with classic readability
formulas. The same analysis runs sequentially, over a local process pool,
or across TCP workers, with bit-identical results.

Typical use::

    from readcorpus import (
        FormulaId, PipelineConfig, builtin_stoplist, get_profile,
        load_corpus, run,
    )

    corpus = load_corpus("./books")
    cfg = PipelineConfig(
        profile=get_profile("tr"),
        stoplist=builtin_stoplist("tr"),
        formulas=(FormulaId.ATESMAN, FormulaId.FLESCH_READING_EASE),
    )
    report = run(corpus, cfg)
    print(report.aggregate_scores)
"""

from .corpus import Corpus, Document, convert_external, load_corpus, read_document
from .executor import (
    CorpusReport,
    DocumentResult,
    PipelineConfig,
    RunMeta,
    WorkerLost,
    WorkerUnreachable,
    analyze_document,
    run,
)
from .features import (
    DEFAULT_HARD_WORD_THRESHOLD,
    FeatureVector,
    distinct_count,
    extract_features,
    merge,
)
from .formulas import (
    ALL_FORMULAS,
    DEFAULT_TURKISH_FORMULAS,
    EasyWordList,
    FormulaId,
    ReadabilityScore,
    evaluate_all,
    evaluate_formula,
    load_easy_words,
)
from .lingproc import (
    LanguageProfile,
    ProcessedText,
    StopWordList,
    count_letters,
    count_syllables,
    get_profile,
    normalize,
    preprocess,
    segment_sentences,
    tokenize,
)
from .reports import render_csv, render_json
from .stopwords import build_stoplist, builtin_stoplist, load_stoplist, save_stoplist
from .worker import serve_worker, spawn_local_workers

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ALL_FORMULAS",
    "Corpus",
    "CorpusReport",
    "DEFAULT_HARD_WORD_THRESHOLD",
    "DEFAULT_TURKISH_FORMULAS",
    "Document",
    "DocumentResult",
    "EasyWordList",
    "FeatureVector",
    "FormulaId",
    "LanguageProfile",
    "PipelineConfig",
    "ProcessedText",
    "ReadabilityScore",
    "RunMeta",
    "StopWordList",
    "WorkerLost",
    "WorkerUnreachable",
    "analyze_document",
    "build_stoplist",
    "builtin_stoplist",
    "convert_external",
    "count_letters",
    "count_syllables",
    "distinct_count",
    "evaluate_all",
    "evaluate_formula",
    "extract_features",
    "get_profile",
    "load_corpus",
    "load_easy_words",
    "load_stoplist",
    "merge",
    "normalize",
    "preprocess",
    "read_document",
    "render_csv",
    "render_json",
    "run",
    "save_stoplist",
    "segment_sentences",
    "serve_worker",
    "spawn_local_workers",
    "tokenize",
]
