"""Command-line driver: exit codes, output files, and stderr diagnostics
for every subcommand."""

from __future__ import annotations

import socket
import threading
import time

import pytest

from readcorpus import wire
from readcorpus.cli import main
from readcorpus.reports import AGGREGATE_ROW_ID, parse_csv_report, parse_json_report
from readcorpus.worker import _free_port, spawn_local_workers


class TestAnalyze:
    def test_happy_path_csv(self, disk_corpus, tmp_path, capsys):
        out = tmp_path / "report.csv"
        code = main(
            [
                "analyze",
                "--corpus", str(disk_corpus),
                "--glob", "[ab].txt",
                "--format", "csv",
                "--output", str(out),
            ]
        )
        assert code == 0
        rows = parse_csv_report(out.read_text(encoding="utf-8"))
        assert [r["doc_id"] for r in rows] == ["a.txt", "b.txt", AGGREGATE_ROW_ID]
        assert capsys.readouterr().err == ""

    def test_json_to_stdout(self, disk_corpus, capsys):
        code = main(
            [
                "analyze",
                "--corpus", str(disk_corpus),
                "--glob", "[ab].txt",
            ]
        )
        assert code == 0
        data = parse_json_report(capsys.readouterr().out)
        assert len(data["documents"]) == 2

    def test_empty_document_means_partial_exit(self, disk_corpus, tmp_path):
        out = tmp_path / "r.json"
        code = main(
            ["analyze", "--corpus", str(disk_corpus), "--output", str(out)]
        )
        assert code == 1
        data = parse_json_report(out.read_text(encoding="utf-8"))
        assert any(d["errors"] for d in data["documents"])

    def test_missing_corpus_is_fatal(self, tmp_path, capsys):
        missing = tmp_path / "nowhere"
        code = main(["analyze", "--corpus", str(missing)])
        assert code == 2
        assert str(missing) in capsys.readouterr().err

    def test_dale_chall_without_easy_words_fails_before_work(
        self, disk_corpus, capsys
    ):
        code = main(
            [
                "analyze",
                "--corpus", str(disk_corpus),
                "--formulas", "dale_chall",
            ]
        )
        assert code == 2
        assert "easy-word" in capsys.readouterr().err

    def test_unknown_formula_is_fatal(self, disk_corpus, capsys):
        code = main(
            ["analyze", "--corpus", str(disk_corpus), "--formulas", "lexile"]
        )
        assert code == 2
        assert "lexile" in capsys.readouterr().err

    def test_dist_needs_workers(self, disk_corpus, capsys):
        code = main(
            ["analyze", "--corpus", str(disk_corpus), "--backend", "dist"]
        )
        assert code == 2
        assert "--workers" in capsys.readouterr().err

    def test_dist_end_to_end_matches_seq(self, disk_corpus, tmp_path):
        seq_out = tmp_path / "seq.csv"
        dist_out = tmp_path / "dist.csv"
        args = ["analyze", "--corpus", str(disk_corpus), "--glob", "[ab].txt",
                "--format", "csv"]
        assert main(args + ["--output", str(seq_out)]) == 0
        with spawn_local_workers(2) as (endpoints, _):
            code = main(
                args
                + [
                    "--backend", "dist",
                    "--workers", ",".join(endpoints),
                    "--output", str(dist_out),
                ]
            )
        assert code == 0
        assert dist_out.read_bytes() == seq_out.read_bytes()

    def test_usage_error(self, capsys):
        assert main(["analyze"]) == 2  # --corpus is required
        assert main([]) == 2  # subcommand is required
        capsys.readouterr()


class TestStopwords:
    def _corpus(self, tmp_path):
        root = tmp_path / "c"
        root.mkdir()
        (root / "one.txt").write_text(
            "Çok çok çok orta orta az.", encoding="utf-8"
        )
        return root

    def test_rank_order_and_determinism(self, tmp_path, capsys):
        root = self._corpus(tmp_path)
        out_a = tmp_path / "a.stop"
        out_b = tmp_path / "b.stop"
        for out in (out_a, out_b):
            code = main(
                [
                    "stopwords",
                    "--corpus", str(root),
                    "--top", "3",
                    "--output", str(out),
                ]
            )
            assert code == 0
        assert out_a.read_text(encoding="utf-8") == "çok\norta\naz\n"
        assert out_a.read_bytes() == out_b.read_bytes()
        assert capsys.readouterr().err == ""

    def test_small_vocabulary_warns_but_succeeds(self, tmp_path, capsys):
        root = self._corpus(tmp_path)
        out = tmp_path / "w.stop"
        code = main(
            ["stopwords", "--corpus", str(root), "--output", str(out)]
        )
        assert code == 0
        err = capsys.readouterr().err
        assert "fewer than the requested" in err
        assert out.read_text(encoding="utf-8").count("\n") == 3


class TestConvert:
    def _converter(self, tmp_path) -> str:
        script = tmp_path / "conv.py"
        script.write_text(
            "import sys\n"
            "data = open(sys.argv[1], 'rb').read()\n"
            "if b'FAIL' in data:\n"
            "    sys.exit(3)\n"
            "sys.stdout.buffer.write(data)\n",
            encoding="utf-8",
        )
        return f"python3 {script} {{input}}"

    def test_identity_conversion(self, tmp_path, capsys):
        src = tmp_path / "src"
        src.mkdir()
        for name in ("x.md", "y.md", "z.md"):
            (src / name).write_text(f"Metin {name}.", encoding="utf-8")
        out = tmp_path / "out"
        code = main(
            [
                "convert",
                "--input", str(src),
                "--command", self._converter(tmp_path),
                "--output", str(out),
                "--glob", "*.md",
            ]
        )
        assert code == 0
        assert sorted(p.name for p in out.iterdir()) == ["x.txt", "y.txt", "z.txt"]
        assert (out / "x.txt").read_text(encoding="utf-8") == "Metin x.md."
        stdout = capsys.readouterr().out
        assert "converted 3/3 files" in stdout
        assert "(0 failed)" in stdout

    def test_partial_failure(self, tmp_path, capsys):
        src = tmp_path / "src"
        src.mkdir()
        (src / "good.md").write_text("İyi metin.", encoding="utf-8")
        (src / "bad.md").write_text("FAIL burada.", encoding="utf-8")
        out = tmp_path / "out"
        code = main(
            [
                "convert",
                "--input", str(src),
                "--command", self._converter(tmp_path),
                "--output", str(out),
                "--glob", "*.md",
            ]
        )
        assert code == 1
        captured = capsys.readouterr()
        assert "converted 1/2 files" in captured.out
        assert "bad.md" in captured.err
        assert (out / "good.txt").exists()
        assert not (out / "bad.txt").exists()

    def test_command_without_placeholder(self, tmp_path, capsys):
        src = tmp_path / "src"
        src.mkdir()
        code = main(
            [
                "convert",
                "--input", str(src),
                "--command", "cat",
                "--output", str(tmp_path / "out"),
            ]
        )
        assert code == 2
        assert "{input}" in capsys.readouterr().err


class TestBench:
    def test_csv_rows(self, disk_corpus, tmp_path):
        out = tmp_path / "bench.csv"
        code = main(
            [
                "bench",
                "--corpus", str(disk_corpus),
                "--glob", "[ab].txt",
                "--backends", "seq",
                "--repeat", "1",
                "--output", str(out),
            ]
        )
        assert code == 0
        lines = out.read_text(encoding="utf-8").strip().split("\n")
        assert lines[0] == "backend,size,seconds,docs_per_second"
        assert [l.split(",")[:2] for l in lines[1:]] == [
            ["sequential", "1"],
            ["sequential", "2"],
        ]

    def test_unknown_backend_name(self, disk_corpus, capsys):
        code = main(
            ["bench", "--corpus", str(disk_corpus), "--backends", "spark"]
        )
        assert code == 2
        assert "spark" in capsys.readouterr().err

    def test_disagreement_is_fatal(self, disk_corpus, capsys, monkeypatch):
        import readcorpus.bench as bench_mod

        def fake_benchmark(*args, **kwargs):
            raise bench_mod.EqualityViolation("backend 'parallel' disagrees")

        monkeypatch.setattr(bench_mod, "run_benchmark", fake_benchmark)
        code = main(
            ["bench", "--corpus", str(disk_corpus), "--glob", "[ab].txt"]
        )
        assert code == 2
        assert "disagrees" in capsys.readouterr().err


class TestWorker:
    def test_bind_failure(self, capsys):
        with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as blocker:
            blocker.bind(("127.0.0.1", 0))
            blocker.listen(1)
            port = blocker.getsockname()[1]
            code = main(["worker", "--bind", f"127.0.0.1:{port}"])
        assert code == 2
        assert "cannot bind" in capsys.readouterr().err

    def test_serves_until_shutdown(self):
        port = _free_port()
        endpoint = f"127.0.0.1:{port}"
        codes = []
        thread = threading.Thread(
            target=lambda: codes.append(main(["worker", "--bind", endpoint])),
            daemon=True,
        )
        thread.start()
        deadline = time.monotonic() + 10.0
        sock = None
        while time.monotonic() < deadline:
            try:
                sock = socket.create_connection(("127.0.0.1", port), timeout=1.0)
                break
            except OSError:
                time.sleep(0.05)
        assert sock is not None, "worker never started listening"
        with sock:
            sock.settimeout(10.0)
            wire.send_frame(sock, wire.MSG_PING, {})
            assert wire.recv_frame(sock)[0] == wire.MSG_PONG
            wire.send_frame(sock, wire.MSG_SHUTDOWN, {})
        thread.join(timeout=10.0)
        assert not thread.is_alive()
        assert codes == [0]
