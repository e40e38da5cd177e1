"""Framed TCP message protocol between the run master and workers.

Frame layout, fixed for interoperability:

    4 bytes   magic "RDRA"
    1 byte    protocol version (0x01)
    1 byte    message type
    4 bytes   payload length, big-endian unsigned
    N bytes   UTF-8 JSON payload

Message types: 0x01 Ping, 0x02 Pong, 0x03 TaskAssign, 0x04 TaskResult,
0x05 Error, 0x06 Shutdown. Frames above 64 MiB are rejected. JSON payloads
are serialized canonically (sorted keys, no whitespace) so identical data
produces identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import socket
import struct
from typing import Any

__all__ = [
    "MAGIC",
    "PROTOCOL_VERSION",
    "MAX_PAYLOAD",
    "MSG_PING",
    "MSG_PONG",
    "MSG_TASK_ASSIGN",
    "MSG_TASK_RESULT",
    "MSG_ERROR",
    "MSG_SHUTDOWN",
    "ProtocolError",
    "BadMagic",
    "FrameTooLarge",
    "ConnectionClosed",
    "canonical_json",
    "config_digest",
    "encode_frame",
    "send_frame",
    "recv_frame",
]

MAGIC = b"RDRA"
PROTOCOL_VERSION = 0x01
MAX_PAYLOAD = 64 * 1024 * 1024

MSG_PING = 0x01
MSG_PONG = 0x02
MSG_TASK_ASSIGN = 0x03
MSG_TASK_RESULT = 0x04
MSG_ERROR = 0x05
MSG_SHUTDOWN = 0x06

_KNOWN_TYPES = frozenset(
    {MSG_PING, MSG_PONG, MSG_TASK_ASSIGN, MSG_TASK_RESULT, MSG_ERROR, MSG_SHUTDOWN}
)

_HEADER = struct.Struct(">4sBBI")


class ProtocolError(RuntimeError):
    """The byte stream violates the frame protocol."""


class BadMagic(ProtocolError):
    """Frame did not start with the protocol magic; the stream is garbage."""


class FrameTooLarge(ProtocolError):
    """Declared payload length exceeds the 64 MiB cap."""


class ConnectionClosed(ProtocolError):
    """Peer closed the connection mid-frame or between frames."""

    def __init__(self, msg: str = "connection closed", clean: bool = False):
        self.clean = clean
        super().__init__(msg)


def canonical_json(obj: Any) -> bytes:
    """Deterministic JSON bytes: sorted keys, compact separators, raw UTF-8."""
    return json.dumps(
        obj, ensure_ascii=False, sort_keys=True, separators=(",", ":")
    ).encode("utf-8")


def config_digest(
    profile_record: dict,
    stopwords: list[str],
    formulas: list[str],
    hard_word_threshold: int,
    easy_words: list[str] | None,
) -> str:
    """Hash of everything that determines analysis output for a document.

    Master and worker both derive it; a mismatch means the worker would
    silently compute different scores, so the task is refused.
    """
    payload = canonical_json(
        {
            "profile": profile_record,
            "stopwords": sorted(stopwords),
            "formulas": list(formulas),
            "hard_word_threshold": hard_word_threshold,
            "easy_words": sorted(easy_words) if easy_words is not None else None,
        }
    )
    return hashlib.sha256(payload).hexdigest()


def encode_frame(msg_type: int, payload: Any) -> bytes:
    body = canonical_json(payload)
    if len(body) > MAX_PAYLOAD:
        raise FrameTooLarge(f"payload of {len(body)} bytes exceeds {MAX_PAYLOAD}")
    return _HEADER.pack(MAGIC, PROTOCOL_VERSION, msg_type, len(body)) + body


def send_frame(sock: socket.socket, msg_type: int, payload: Any) -> None:
    sock.sendall(encode_frame(msg_type, payload))


def _recv_exact(sock: socket.socket, length: int) -> bytes:
    chunks = []
    got = 0
    while got < length:
        chunk = sock.recv(min(length - got, 1 << 20))
        if not chunk:
            raise ConnectionClosed(clean=(got == 0))
        chunks.append(chunk)
        got += len(chunk)
    return b"".join(chunks)


def recv_frame(sock: socket.socket) -> tuple[int, Any]:
    """Read one frame; returns (message type, decoded payload)."""
    header = _recv_exact(sock, _HEADER.size)
    magic, version, msg_type, length = _HEADER.unpack(header)
    if magic != MAGIC:
        raise BadMagic(f"expected magic {MAGIC!r}, got {magic!r}")
    if version != PROTOCOL_VERSION:
        raise ProtocolError(f"unsupported protocol version {version}")
    if msg_type not in _KNOWN_TYPES:
        raise ProtocolError(f"unknown message type 0x{msg_type:02x}")
    if length > MAX_PAYLOAD:
        raise FrameTooLarge(f"declared payload of {length} bytes exceeds {MAX_PAYLOAD}")
    body = _recv_exact(sock, length)
    try:
        payload = json.loads(body.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ProtocolError(f"undecodable payload: {exc}") from exc
    return msg_type, payload
