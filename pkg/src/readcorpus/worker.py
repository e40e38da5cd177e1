"""Analysis worker: serves documents shipped over the frame protocol.

A worker is stateless between tasks. Each TaskAssign carries the full
pipeline configuration plus its digest; the worker rebuilds the config,
recomputes the digest, and refuses the task on mismatch rather than return
results computed under a different configuration.
"""

from __future__ import annotations

import contextlib
import multiprocessing
import os
import socket
import time
from pathlib import Path

from . import wire
from .corpus import Document
from .executor import PipelineConfig, analyze_document

__all__ = ["serve_worker", "spawn_local_workers", "BindFailure"]


class BindFailure(OSError):
    """The requested bind address is unavailable."""


def _handle_task(payload: dict, profile_dir: Path | str | None) -> dict:
    cfg = PipelineConfig.from_wire(payload, profile_dir)
    claimed = payload.get("config_digest")
    actual = cfg.digest()
    if claimed != actual:
        # the local profile file differs from the one the master hashed;
        # scoring under it would silently diverge
        raise ValueError(
            f"config digest mismatch: assigned {claimed}, reconstructed {actual}"
        )
    doc = Document(
        doc_id=payload["doc_id"],
        source_path=None,
        raw_text=payload["text"],
        byte_size=len(payload["text"].encode("utf-8")),
    )
    result = analyze_document(doc, cfg)
    return {"doc_id": result.doc_id, "result": result.to_record()}


def _serve_connection(
    conn: socket.socket,
    tasks_done: list[int],
    max_tasks: int | None,
    profile_dir: Path | str | None,
) -> bool:
    """Process frames on one connection. Returns False when the server
    should stop accepting (clean Shutdown)."""
    while True:
        try:
            msg_type, payload = wire.recv_frame(conn)
        except wire.ConnectionClosed:
            return True
        except wire.BadMagic:
            # not our protocol: drop the connection, stay alive
            return True
        except wire.ProtocolError as exc:
            with contextlib.suppress(OSError):
                wire.send_frame(conn, wire.MSG_ERROR, {"message": str(exc)})
            return True

        if msg_type == wire.MSG_PING:
            wire.send_frame(conn, wire.MSG_PONG, {"version": wire.PROTOCOL_VERSION})
        elif msg_type == wire.MSG_SHUTDOWN:
            return False
        elif msg_type == wire.MSG_TASK_ASSIGN:
            if max_tasks is not None and tasks_done[0] >= max_tasks:
                # crash simulation for fault-tolerance tests: die without
                # a goodbye, exactly like a killed process
                os._exit(1)
            try:
                result = _handle_task(payload, profile_dir)
            except Exception as exc:
                with contextlib.suppress(OSError):
                    wire.send_frame(
                        conn,
                        wire.MSG_ERROR,
                        {"message": f"{exc.__class__.__name__}: {exc}"},
                    )
                continue
            tasks_done[0] += 1
            wire.send_frame(conn, wire.MSG_TASK_RESULT, result)
        else:
            with contextlib.suppress(OSError):
                wire.send_frame(
                    conn,
                    wire.MSG_ERROR,
                    {"message": f"unexpected message type 0x{msg_type:02x}"},
                )


def serve_worker(
    bind_address: str,
    profile_dir: Path | str | None = None,
    *,
    max_tasks: int | None = None,
    ready_event=None,
) -> None:
    """Run a worker server until it receives Shutdown.

    One connection is served at a time; a run master keeps a single
    long-lived connection per worker. ``profile_dir`` overrides where
    profiles named in task assignments are resolved. ``max_tasks`` makes
    the process exit abruptly after that many completed tasks
    (fault-injection hook). ``ready_event`` is set once the socket is
    listening.
    """
    host, _, port = bind_address.rpartition(":")
    if not host:
        raise ValueError(f"bind address must be host:port, got {bind_address!r}")
    tasks_done = [0]
    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as server:
        server.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        try:
            server.bind((host, int(port)))
        except OSError as exc:
            raise BindFailure(f"cannot bind {bind_address}: {exc}") from exc
        server.listen(8)
        if ready_event is not None:
            ready_event.set()
        while True:
            conn, _ = server.accept()
            with conn:
                keep_going = _serve_connection(conn, tasks_done, max_tasks, profile_dir)
            if not keep_going:
                return


def _free_port() -> int:
    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


def _worker_main(endpoint: str, max_tasks: int | None, ready) -> None:
    serve_worker(endpoint, max_tasks=max_tasks, ready_event=ready)


@contextlib.contextmanager
def spawn_local_workers(n: int, *, max_tasks_each: list[int | None] | None = None):
    """Start n worker processes on free localhost ports; yields endpoints.

    Processes are terminated on exit regardless of what the test did to
    them in between.
    """
    ctx = multiprocessing.get_context("fork")
    endpoints = [f"127.0.0.1:{_free_port()}" for _ in range(n)]
    limits = max_tasks_each if max_tasks_each is not None else [None] * n
    procs = []
    events = []
    for ep, limit in zip(endpoints, limits):
        ready = ctx.Event()
        p = ctx.Process(target=_worker_main, args=(ep, limit, ready), daemon=True)
        p.start()
        procs.append(p)
        events.append(ready)
    try:
        deadline = time.monotonic() + 10.0
        for ready in events:
            if not ready.wait(timeout=max(0.1, deadline - time.monotonic())):
                raise RuntimeError("worker failed to come up within 10s")
        yield endpoints, procs
    finally:
        for p in procs:
            if p.is_alive():
                p.terminate()
        for p in procs:
            p.join(timeout=5.0)
