"""Command-line interface.

Subcommands: analyze (score a corpus), stopwords (induce a stop-word list),
convert (batch external-format conversion), bench (timed backend
comparison), worker (serve analysis tasks over TCP).

Exit codes: 0 success, 1 completed with per-document failures, 2 fatal or
usage error. All parallelism lives in the executor; the CLI is a thin
single-threaded driver.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from . import corpus as corpus_mod
from . import formulas as forms
from . import reports, stopwords, worker
from .executor import PipelineConfig, WorkerLost, WorkerUnreachable, run
from .formulas import ALL_FORMULAS, DEFAULT_TURKISH_FORMULAS, FormulaId
from .lingproc import ProfileError, StopWordList, get_profile

__all__ = ["main", "main_entry"]

_BACKEND_NAMES = {"seq": "sequential", "par": "parallel", "dist": "distributed"}


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _parse_formulas(spec_text: str) -> tuple[FormulaId, ...]:
    names = [n.strip() for n in spec_text.split(",") if n.strip()]
    if not names:
        raise ValueError("empty formula list")
    out = []
    for name in names:
        try:
            out.append(FormulaId(name))
        except ValueError:
            known = ", ".join(f.value for f in ALL_FORMULAS)
            raise ValueError(f"unknown formula {name!r}; known: {known}") from None
    return tuple(out)


def _default_formulas(lang: str, have_easy: bool) -> tuple[FormulaId, ...]:
    if lang == "tr":
        return DEFAULT_TURKISH_FORMULAS
    if have_easy:
        return ALL_FORMULAS
    return tuple(f for f in ALL_FORMULAS if f is not FormulaId.DALE_CHALL)


def _resolve_stoplist(choice: str | None, lang: str, profile) -> StopWordList:
    if choice is None:
        choice = "builtin" if lang == "tr" else "none"
    if choice == "none":
        return StopWordList.empty()
    if choice == "builtin":
        return stopwords.builtin_stoplist(lang)
    return stopwords.load_stoplist(Path(choice), profile)


def _load_pipeline(args) -> PipelineConfig:
    profile = get_profile(args.lang, args.profile_dir)
    easy = forms.load_easy_words(args.easy_words) if args.easy_words else None
    if args.formulas:
        formulas = _parse_formulas(args.formulas)
    else:
        formulas = _default_formulas(args.lang, easy is not None)
    stoplist = _resolve_stoplist(args.stopwords_source, args.lang, profile)
    return PipelineConfig(
        profile=profile,
        stoplist=stoplist,
        formulas=formulas,
        easy_list=easy,
        hard_word_threshold=args.hard_word_threshold,
    )


def _load_corpus(args) -> corpus_mod.Corpus:
    return corpus_mod.load_corpus(args.corpus, glob=args.glob, recursive=args.recursive)


def _write_output(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", required=True, help="corpus root directory")
    p.add_argument("--glob", default="*.txt", help="filename pattern (default *.txt)")
    p.add_argument(
        "--recursive", action="store_true", help="apply the pattern at every depth"
    )


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lang", choices=("tr", "en"), default="tr")
    p.add_argument(
        "--formulas",
        default=None,
        help="comma-separated formula ids (default depends on --lang)",
    )
    p.add_argument(
        "--stopwords",
        dest="stopwords_source",
        default=None,
        metavar="FILE|builtin|none",
        help="stop-word source (default: builtin for tr, none for en)",
    )
    p.add_argument("--easy-words", default=None, help="easy-word list file (dale_chall)")
    p.add_argument(
        "--hard-word-threshold",
        type=int,
        default=3,
        help="syllables at which a word counts as hard (default 3)",
    )
    p.add_argument("--profile-dir", default=None, help="language profile directory")


def _add_backend_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=tuple(_BACKEND_NAMES), default="seq")
    p.add_argument("--jobs", type=int, default=None, help="process count for par")
    p.add_argument(
        "--workers",
        default=None,
        help="comma-separated host:port endpoints for dist",
    )


def _cmd_analyze(args) -> int:
    try:
        cfg = _load_pipeline(args)
    except (ProfileError, forms.MissingEasyWordList, ValueError, OSError) as exc:
        return _fail(str(exc))
    try:
        corp = _load_corpus(args)
    except corpus_mod.RootNotFound as exc:
        return _fail(str(exc))

    backend = _BACKEND_NAMES[args.backend]
    endpoints = None
    if backend == "distributed":
        if not args.workers:
            return _fail("distributed backend needs --workers host:port[,host:port...]")
        endpoints = [w.strip() for w in args.workers.split(",") if w.strip()]
    try:
        report = run(corp, cfg, backend, jobs=args.jobs, endpoints=endpoints)
    except (WorkerUnreachable, WorkerLost, ValueError) as exc:
        return _fail(str(exc))

    text = (
        reports.render_csv(report)
        if args.format == "csv"
        else reports.render_json(report)
    )
    _write_output(text, args.output)

    partial = bool(report.run_meta.load_failures) or any(
        r.errors for r in report.per_document
    )
    for doc_id, msg in report.run_meta.load_failures:
        print(f"warning: could not read {doc_id}: {msg}", file=sys.stderr)
    return 1 if partial else 0


def _cmd_stopwords(args) -> int:
    try:
        profile = get_profile(args.lang, args.profile_dir)
        corp = _load_corpus(args)
    except (ProfileError, corpus_mod.RootNotFound) as exc:
        return _fail(str(exc))
    cfg = PipelineConfig(
        profile=profile,
        stoplist=StopWordList.empty(),
        formulas=(FormulaId.ATESMAN,),
        hard_word_threshold=args.hard_word_threshold,
    )
    report = run(corp, cfg, "sequential")
    try:
        induced = stopwords.build_stoplist(report.aggregate, args.top)
    except ValueError as exc:
        return _fail(str(exc))
    if induced.k_exceeded:
        print(
            f"warning: corpus has only {len(induced.words)} distinct words, "
            f"fewer than the requested {args.top}",
            file=sys.stderr,
        )
    stopwords.save_stoplist(induced, args.output)
    return 0


def _cmd_convert(args) -> int:
    in_root = Path(args.input)
    out_root = Path(args.output)
    if not in_root.is_dir():
        return _fail(f"input directory not found: {in_root}")
    if "{input}" not in args.command:
        return _fail("--command must contain an {input} placeholder")
    files = sorted(
        p for p in (in_root.rglob(args.glob) if args.recursive else in_root.glob(args.glob))
        if p.is_file()
    )
    out_root.mkdir(parents=True, exist_ok=True)

    def _one(path: Path) -> tuple[Path, str | None]:
        try:
            doc = corpus_mod.convert_external(path, args.command)
        except (corpus_mod.ConverterNotFound, corpus_mod.ConversionFailed, OSError) as exc:
            return path, str(exc)
        rel = path.relative_to(in_root).with_suffix(".txt")
        target = out_root / rel
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(doc.raw_text, encoding="utf-8")
        return path, None

    started = time.perf_counter()
    jobs = args.jobs or 4
    with concurrent.futures.ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        outcomes = list(pool.map(_one, files))
    elapsed = time.perf_counter() - started

    failures = [(p, msg) for p, msg in outcomes if msg is not None]
    print(
        f"converted {len(files) - len(failures)}/{len(files)} files "
        f"in {elapsed:.2f}s ({len(failures)} failed)"
    )
    for path, msg in failures:
        print(f"failed: {path}: {msg}", file=sys.stderr)
    return 1 if failures else 0


def _cmd_bench(args) -> int:
    try:
        cfg = _load_pipeline(args)
        corp = _load_corpus(args)
    except (ProfileError, corpus_mod.RootNotFound, ValueError, OSError) as exc:
        return _fail(str(exc))
    names = [n.strip() for n in args.backends.split(",") if n.strip()]
    try:
        backends = tuple(_BACKEND_NAMES[n] for n in names)
    except KeyError as exc:
        return _fail(f"unknown backend {exc.args[0]!r}; known: seq, par, dist")
    endpoints = None
    if "distributed" in backends:
        if not args.workers:
            return _fail("benchmarking dist needs --workers host:port[,host:port...]")
        endpoints = [w.strip() for w in args.workers.split(",") if w.strip()]
    try:
        rows = bench_mod.run_benchmark(
            corp,
            cfg,
            backends,
            jobs=args.jobs,
            endpoints=endpoints,
            repeat=args.repeat,
        )
    except bench_mod.EqualityViolation as exc:
        return _fail(str(exc))
    except (WorkerUnreachable, WorkerLost) as exc:
        return _fail(str(exc))
    text = (
        bench_mod.rows_to_json(rows)
        if args.format == "json"
        else bench_mod.rows_to_csv(rows)
    )
    _write_output(text, args.output)
    return 0


def _cmd_worker(args) -> int:
    try:
        worker.serve_worker(
            args.bind, args.profile_dir, max_tasks=args.max_tasks
        )
    except worker.BindFailure as exc:
        return _fail(str(exc))
    except KeyboardInterrupt:
        pass
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="readcorpus",
        description="Corpus readability analysis: preprocessing, shallow "
        "features, readability formulas, and parallel execution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="score a corpus and emit a report")
    _add_corpus_flags(p)
    _add_pipeline_flags(p)
    _add_backend_flags(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None, help="report file (default stdout)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("stopwords", help="induce a stop-word list from a corpus")
    _add_corpus_flags(p)
    p.add_argument("--lang", choices=("tr", "en"), default="tr")
    p.add_argument("--profile-dir", default=None)
    p.add_argument("--hard-word-threshold", type=int, default=3)
    p.add_argument("--top", type=int, default=stopwords.DEFAULT_STOPLIST_SIZE)
    p.add_argument("--output", required=True, help="file to write the list to")
    p.set_defaults(func=_cmd_stopwords)

    p = sub.add_parser("convert", help="convert external formats to text files")
    p.add_argument("--input", required=True, help="directory of source files")
    p.add_argument(
        "--command",
        required=True,
        help="converter command line with an {input} placeholder",
    )
    p.add_argument("--output", required=True, help="directory for .txt results")
    p.add_argument("--glob", default="*", help="source filename pattern")
    p.add_argument("--recursive", action="store_true")
    p.add_argument("--jobs", type=int, default=None, help="concurrent conversions")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("bench", help="time backends against each other")
    _add_corpus_flags(p)
    _add_pipeline_flags(p)
    p.add_argument("--backends", default="seq,par", help="comma list: seq,par,dist")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--workers", default=None)
    p.add_argument("--repeat", type=int, default=3, help="runs per timing (median)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("worker", help="serve analysis tasks over TCP")
    p.add_argument("--bind", required=True, help="host:port to listen on")
    p.add_argument("--profile-dir", default=None)
    p.add_argument(
        "--max-tasks",
        type=int,
        default=None,
        help="exit abruptly after N tasks (fault-injection aid)",
    )
    p.set_defaults(func=_cmd_worker)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    return args.func(args)


def main_entry() -> None:
    sys.exit(main())
