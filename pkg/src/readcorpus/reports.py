"""Report rendering: JSON and CSV views of a corpus run.

Both renderings are byte-deterministic for a given report: fixed key order,
sorted term frequencies, scores rounded to two decimals, "\\n" line endings.
The only field that varies between identical runs is the wall time inside
run_meta.
"""

from __future__ import annotations

import csv
import io
import json

from .executor import CorpusReport
from .features import FeatureVector, distinct_count

__all__ = [
    "render_json",
    "render_csv",
    "parse_json_report",
    "parse_csv_report",
    "CSV_FIXED_COLUMNS",
    "AGGREGATE_ROW_ID",
]

CSV_FIXED_COLUMNS = (
    "doc_id",
    "word_count",
    "sentence_count",
    "syllable_count",
    "distinct_words",
    "hard_words",
)

AGGREGATE_ROW_ID = "AGGREGATE"


def _round2(value: float) -> float:
    # round-half-even at two decimals, via the float formatter, so the JSON
    # number and the CSV cell agree exactly
    return float(f"{value:.2f}")


def _features_record(v: FeatureVector) -> dict:
    return {
        "word_count": v.word_count,
        "sentence_count": v.sentence_count,
        "syllable_count": v.syllable_count,
        "letter_count": v.letter_count,
        "distinct_words": distinct_count(v),
        "hard_words": v.hard_word_count,
    }


def _scores_record(result_scores) -> list[dict]:
    return [
        {
            "formula": s.formula.value,
            "value": _round2(s.value),
            "inputs": dict(s.inputs),
        }
        for s in result_scores
    ]


def render_json(report: CorpusReport) -> str:
    """Full report as pretty-printed JSON (trailing newline included)."""
    doc = {
        "documents": [
            {
                "doc_id": r.doc_id,
                "features": _features_record(r.features),
                "scores": _scores_record(r.scores),
                "errors": list(r.errors),
            }
            for r in report.per_document
        ],
        "aggregate": {
            "features": _features_record(report.aggregate),
            "scores": _scores_record(report.aggregate_scores),
            "errors": list(report.aggregate_errors),
        },
        "run_meta": {
            "backend": report.run_meta.backend,
            "workers": report.run_meta.workers,
            "wall_time_s": report.run_meta.wall_time_s,
            "document_count": report.run_meta.document_count,
            "failure_count": report.run_meta.failure_count,
            "load_failures": [list(f) for f in report.run_meta.load_failures],
            "formulas": [f.value for f in report.formulas],
        },
    }
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def _csv_row(doc_id: str, features: FeatureVector, scores, formula_ids) -> list[str]:
    by_id = {s.formula.value: s for s in scores}
    row = [
        doc_id,
        str(features.word_count),
        str(features.sentence_count),
        str(features.syllable_count),
        str(distinct_count(features)),
        str(features.hard_word_count),
    ]
    for fid in formula_ids:
        s = by_id.get(fid)
        row.append(f"{s.value:.2f}" if s is not None else "")
    return row


def render_csv(report: CorpusReport) -> str:
    """Tabular view: one row per document plus a final AGGREGATE row.

    Fixed count columns come first, then one column per requested formula
    in request order. A formula that could not be scored for a row leaves
    its cell empty.
    """
    formula_ids = [f.value for f in report.formulas]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(CSV_FIXED_COLUMNS) + formula_ids)
    for r in report.per_document:
        writer.writerow(_csv_row(r.doc_id, r.features, r.scores, formula_ids))
    writer.writerow(
        _csv_row(
            AGGREGATE_ROW_ID, report.aggregate, report.aggregate_scores, formula_ids
        )
    )
    return buf.getvalue()


def parse_json_report(text: str) -> dict:
    return json.loads(text)


def parse_csv_report(text: str) -> list[dict[str, str]]:
    """Rows as dicts keyed by header name, aggregate row included."""
    reader = csv.DictReader(io.StringIO(text))
    return list(reader)
