"""Corpus analysis runs: per-document map, feature merge, three backends.

A run maps every document through the same pure function (preprocess,
extract features, score), then folds the feature vectors into a corpus
aggregate and scores that too. Because the fold is over a commutative
monoid, the sequential, process-pool, and distributed backends produce
identical results; the backends differ only in where the map runs.
"""

from __future__ import annotations

import concurrent.futures
import multiprocessing
import socket
import threading
import time
from collections import deque
from dataclasses import dataclass, field

from . import features as feats
from . import formulas as forms
from . import lingproc, wire
from .corpus import Corpus, Document
from .features import FeatureVector
from .formulas import EasyWordList, FormulaId, ReadabilityScore
from .lingproc import LanguageProfile, StopWordList

__all__ = [
    "PipelineConfig",
    "DocumentResult",
    "RunMeta",
    "CorpusReport",
    "WorkerUnreachable",
    "WorkerLost",
    "analyze_document",
    "run",
]

BACKENDS = ("sequential", "parallel", "distributed")


class WorkerUnreachable(ConnectionError):
    """A configured worker endpoint failed the startup handshake."""

    def __init__(self, endpoint: str, reason: str):
        self.endpoint = endpoint
        self.reason = reason
        super().__init__(f"worker {endpoint} unreachable: {reason}")


class WorkerLost(RuntimeError):
    """Every worker died before the run could finish."""


@dataclass(frozen=True)
class PipelineConfig:
    """Everything that determines the output for a given document."""

    profile: LanguageProfile
    stoplist: StopWordList
    formulas: tuple[FormulaId, ...]
    easy_list: EasyWordList | None = None
    hard_word_threshold: int = feats.DEFAULT_HARD_WORD_THRESHOLD

    def __post_init__(self):
        if not self.formulas:
            raise ValueError("at least one formula is required")
        if FormulaId.DALE_CHALL in self.formulas and self.easy_list is None:
            raise forms.MissingEasyWordList(
                "dale_chall requires an easy-word list; provide easy_list"
            )

    def digest(self) -> str:
        """Content hash: covers the resolved profile, not just its name, so
        a worker whose profile file drifted from the master's refuses work."""
        return wire.config_digest(
            self.profile.to_record(),
            sorted(self.stoplist.words),
            [f.value for f in self.formulas],
            self.hard_word_threshold,
            sorted(self.easy_list.words) if self.easy_list is not None else None,
        )

    def to_wire(self) -> dict:
        """Flat task-payload fields. The profile travels by id; the digest
        lets the receiving side verify its local copy matches."""
        return {
            "profile_id": self.profile.lang_code,
            "stopwords": sorted(self.stoplist.words),
            "formulas": [f.value for f in self.formulas],
            "hard_word_threshold": self.hard_word_threshold,
            "easy_words": sorted(self.easy_list.words)
            if self.easy_list is not None
            else None,
        }

    @staticmethod
    def from_wire(rec: dict, profile_dir=None) -> "PipelineConfig":
        easy = rec.get("easy_words")
        return PipelineConfig(
            profile=lingproc.get_profile(rec["profile_id"], profile_dir),
            stoplist=StopWordList(
                words=frozenset(rec["stopwords"]), origin="remote"
            ),
            formulas=tuple(FormulaId(f) for f in rec["formulas"]),
            easy_list=EasyWordList(words=frozenset(easy)) if easy is not None else None,
            hard_word_threshold=rec["hard_word_threshold"],
        )


@dataclass(frozen=True)
class DocumentResult:
    doc_id: str
    features: FeatureVector
    scores: tuple[ReadabilityScore, ...]
    errors: tuple[str, ...] = ()

    def to_record(self) -> dict:
        return {
            "doc_id": self.doc_id,
            "features": feats.to_record(self.features),
            "scores": [s.to_record() for s in self.scores],
            "errors": list(self.errors),
        }

    @staticmethod
    def from_record(rec: dict) -> "DocumentResult":
        return DocumentResult(
            doc_id=rec["doc_id"],
            features=feats.from_record(rec["features"]),
            scores=tuple(ReadabilityScore.from_record(s) for s in rec["scores"]),
            errors=tuple(rec["errors"]),
        )


@dataclass(frozen=True)
class RunMeta:
    backend: str
    workers: int
    wall_time_s: float
    document_count: int
    failure_count: int
    load_failures: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class CorpusReport:
    per_document: tuple[DocumentResult, ...]
    aggregate: FeatureVector
    aggregate_scores: tuple[ReadabilityScore, ...]
    aggregate_errors: tuple[str, ...]
    formulas: tuple[FormulaId, ...]
    run_meta: RunMeta

    def document(self, doc_id: str) -> DocumentResult:
        for r in self.per_document:
            if r.doc_id == doc_id:
                return r
        raise KeyError(doc_id)


def analyze_document(doc: Document, cfg: PipelineConfig) -> DocumentResult:
    """Pure per-document map step. Formula failures on degenerate documents
    (no sentences, no words) are captured as diagnostics, never raised."""
    processed = lingproc.preprocess(doc, cfg.stoplist, cfg.profile)
    vector = feats.extract_features(
        processed, cfg.profile, hard_word_threshold=cfg.hard_word_threshold
    )
    scores, errors = forms.evaluate_all(cfg.formulas, vector, cfg.easy_list)
    return DocumentResult(
        doc_id=doc.doc_id,
        features=vector,
        scores=tuple(scores),
        errors=tuple(errors),
    )


def _assemble(
    results: list[DocumentResult],
    cfg: PipelineConfig,
    meta: RunMeta,
) -> CorpusReport:
    ordered = tuple(sorted(results, key=lambda r: r.doc_id))
    total = feats.zero()
    for r in ordered:
        total = feats.merge(total, r.features)
    agg_scores, agg_errors = forms.evaluate_all(cfg.formulas, total, cfg.easy_list)
    return CorpusReport(
        per_document=ordered,
        aggregate=total,
        aggregate_scores=tuple(agg_scores),
        aggregate_errors=tuple(agg_errors),
        formulas=cfg.formulas,
        run_meta=meta,
    )


# -- sequential ---------------------------------------------------------

def _run_sequential(corpus: Corpus, cfg: PipelineConfig) -> list[DocumentResult]:
    return [analyze_document(doc, cfg) for doc in corpus]


# -- parallel (process pool) --------------------------------------------

_POOL_CFG: PipelineConfig | None = None


def _pool_init(cfg: PipelineConfig) -> None:
    # config is installed once per worker process instead of being pickled
    # into every task
    global _POOL_CFG
    _POOL_CFG = cfg


def _pool_work(doc_id: str, raw_text: str) -> DocumentResult:
    assert _POOL_CFG is not None
    doc = Document(
        doc_id=doc_id,
        source_path=None,
        raw_text=raw_text,
        byte_size=len(raw_text.encode("utf-8")),
    )
    return analyze_document(doc, _POOL_CFG)


def _run_parallel(
    corpus: Corpus, cfg: PipelineConfig, jobs: int | None
) -> tuple[list[DocumentResult], int]:
    n = max(1, jobs or multiprocessing.cpu_count())
    ctx = multiprocessing.get_context("fork")
    with concurrent.futures.ProcessPoolExecutor(
        max_workers=n, mp_context=ctx, initializer=_pool_init, initargs=(cfg,)
    ) as pool:
        futures = [pool.submit(_pool_work, d.doc_id, d.raw_text) for d in corpus]
        results = [f.result() for f in futures]
    return results, n


# -- distributed (TCP workers) ------------------------------------------

_SOCKET_TIMEOUT = 30.0


def _parse_endpoint(endpoint: str) -> tuple[str, int]:
    host, sep, port = endpoint.rpartition(":")
    if not sep or not host:
        raise ValueError(f"endpoint must be host:port, got {endpoint!r}")
    return host, int(port)


def _handshake(endpoint: str) -> socket.socket:
    host, port = _parse_endpoint(endpoint)
    try:
        sock = socket.create_connection((host, port), timeout=_SOCKET_TIMEOUT)
    except OSError as exc:
        raise WorkerUnreachable(endpoint, str(exc)) from exc
    try:
        wire.send_frame(sock, wire.MSG_PING, {})
        msg_type, payload = wire.recv_frame(sock)
    except (OSError, wire.ProtocolError) as exc:
        sock.close()
        raise WorkerUnreachable(endpoint, str(exc)) from exc
    if msg_type != wire.MSG_PONG:
        sock.close()
        raise WorkerUnreachable(endpoint, f"expected Pong, got type 0x{msg_type:02x}")
    if payload.get("version") != wire.PROTOCOL_VERSION:
        sock.close()
        raise WorkerUnreachable(
            endpoint, f"protocol version mismatch: {payload.get('version')}"
        )
    return sock


@dataclass
class _DistState:
    pending: deque = field(default_factory=deque)
    inflight: int = 0
    results: dict = field(default_factory=dict)
    cond: threading.Condition = field(default_factory=threading.Condition)


def _worker_loop(
    endpoint: str,
    sock: socket.socket,
    docs: dict[str, str],
    cfg_wire: dict,
    digest: str,
    state: _DistState,
) -> None:
    """One thread per worker: pull a doc, ship it, collect the result.

    On any failure the in-flight document goes back on the queue for the
    surviving workers and this thread exits.
    """
    current: str | None = None
    try:
        while True:
            with state.cond:
                while not state.pending and state.inflight > 0:
                    state.cond.wait()
                if not state.pending:
                    return
                current = state.pending.popleft()
                state.inflight += 1
            wire.send_frame(
                sock,
                wire.MSG_TASK_ASSIGN,
                {
                    "doc_id": current,
                    "text": docs[current],
                    "config_digest": digest,
                    **cfg_wire,
                },
            )
            msg_type, payload = wire.recv_frame(sock)
            if msg_type == wire.MSG_ERROR:
                raise wire.ProtocolError(
                    f"worker {endpoint} refused task: {payload.get('message')}"
                )
            if msg_type != wire.MSG_TASK_RESULT:
                raise wire.ProtocolError(
                    f"worker {endpoint} sent unexpected type 0x{msg_type:02x}"
                )
            result = DocumentResult.from_record(payload["result"])
            with state.cond:
                # at most one accepted result per document, even if a
                # reassigned copy races the original
                state.results.setdefault(result.doc_id, result)
                state.inflight -= 1
                current = None
                state.cond.notify_all()
    except Exception:
        # any failure on this connection retires the worker; its in-flight
        # document goes back to the queue for the survivors
        with state.cond:
            if current is not None:
                if current not in state.results:
                    state.pending.append(current)
                state.inflight -= 1
            state.cond.notify_all()
    finally:
        try:
            sock.close()
        except OSError:
            pass


def _run_distributed(
    corpus: Corpus, cfg: PipelineConfig, endpoints: list[str]
) -> tuple[list[DocumentResult], int]:
    if not endpoints:
        raise ValueError("distributed backend requires at least one worker endpoint")
    # fail fast if any configured worker is down before assigning work
    socks = [_handshake(ep) for ep in endpoints]

    docs = {d.doc_id: d.raw_text for d in corpus}
    state = _DistState()
    state.pending.extend(d.doc_id for d in corpus)
    cfg_wire = cfg.to_wire()
    digest = cfg.digest()

    threads = [
        threading.Thread(
            target=_worker_loop,
            args=(ep, sock, docs, cfg_wire, digest, state),
            daemon=True,
        )
        for ep, sock in zip(endpoints, socks)
    ]
    for t in threads:
        t.start()
    for t in threads:
        t.join()

    if len(state.results) < len(docs):
        missing = len(docs) - len(state.results)
        raise WorkerLost(
            f"all workers lost with {missing} document(s) unprocessed"
        )
    return list(state.results.values()), len(endpoints)


# -- entry point --------------------------------------------------------

def run(
    corpus: Corpus,
    cfg: PipelineConfig,
    backend: str = "sequential",
    *,
    jobs: int | None = None,
    endpoints: list[str] | None = None,
) -> CorpusReport:
    """Analyze a corpus and return the full report.

    An empty corpus is a valid input: the report carries zero documents
    and the aggregate scoring errors for an all-zero feature vector.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
    started = time.perf_counter()
    if backend == "sequential":
        results = _run_sequential(corpus, cfg)
        worker_count = 1
    elif backend == "parallel":
        results, worker_count = _run_parallel(corpus, cfg, jobs)
    else:
        results, worker_count = _run_distributed(corpus, cfg, endpoints or [])
    elapsed = time.perf_counter() - started
    meta = RunMeta(
        backend=backend,
        workers=worker_count,
        wall_time_s=elapsed,
        document_count=len(results),
        failure_count=len(corpus.failures),
        load_failures=tuple(corpus.failures),
    )
    return _assemble(results, cfg, meta)
