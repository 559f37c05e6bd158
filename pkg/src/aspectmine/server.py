"""Minimal HTTP service hosting the Kano survey.

Votes append to a JSONL log (flushed and fsynced before the 201 goes out) and
are replayed on boot, so acknowledged votes survive restarts. A single lock
serializes vote writes; tallies are recomputed from the in-memory vote list,
which always mirrors the persisted log.
"""

from __future__ import annotations

import json
import os
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Iterable, Sequence

from . import data_path
from .corpus import Sentence
from .kano import BUCKET_ORDER, SurveyVote, assign_all, parse_bucket
from .miner import AspectCategory

FALLBACK_INDEX = """<!DOCTYPE html>
<html><head><meta charset="utf-8"><title>Survey</title></head>
<body><h1>Survey service is running</h1>
<p>No UI bundle is installed. The JSON API is available under
<code>/api/categories</code>, <code>/api/votes</code> and <code>/api/tally</code>.</p>
</body></html>
"""

CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".map": "application/json; charset=utf-8",
    ".ico": "image/x-icon",
    ".png": "image/png",
}


def build_survey_config(
    categories: Sequence[AspectCategory],
    sentences: Iterable[Sentence] = (),
    survey_id: str = "survey",
    is_open: bool = True,
    max_snippets: int = 3,
) -> dict:
    """Survey config dict: categories plus up to `max_snippets` example
    sentences per category (sentences containing a member term, in order)."""
    snippets: dict[str, list[str]] = {c.category_id: [] for c in categories}
    for sent in sentences:
        norms = sent.norms
        text = sent.text
        for cat in categories:
            bucket = snippets[cat.category_id]
            if len(bucket) >= max_snippets or text in bucket:
                continue
            for member in cat.members:
                k = len(member)
                if any(tuple(norms[i : i + k]) == member for i in range(len(norms) - k + 1)):
                    bucket.append(text)
                    break
    return {
        "survey_id": survey_id,
        "open": is_open,
        "categories": [
            {"category_id": c.category_id, "label": c.label, "members": [list(m) for m in c.members]}
            for c in categories
        ],
        "snippets": snippets,
    }


class SurveyState:
    """Vote log plus survey metadata; thread-safe appends."""

    def __init__(self, survey_config: dict | None, votes_log: str | Path):
        self.config = survey_config
        self.votes_log = Path(votes_log)
        self.lock = threading.Lock()
        self.votes: list[SurveyVote] = []
        self.seen: set[tuple[str, str]] = set()
        if self.votes_log.exists():
            self._replay()

    @property
    def category_ids(self) -> list[str]:
        if not self.config:
            return []
        return [c["category_id"] for c in self.config["categories"]]

    @property
    def is_open(self) -> bool:
        return bool(self.config and self.config.get("open", True))

    def _replay(self) -> None:
        with open(self.votes_log, "r", encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                row = json.loads(line)
                key = (row["subject_id"], row["category_id"])
                if key in self.seen:
                    continue
                self.seen.add(key)
                self.votes.append(
                    SurveyVote(
                        subject_id=row["subject_id"],
                        category_id=row["category_id"],
                        bucket=parse_bucket(row["bucket"]),
                    )
                )

    def add_vote(self, subject_id: str, category_id: str, bucket_raw: str) -> tuple[int, str]:
        """Validate and durably append one vote; returns (http_status, message)."""
        if not self.config:
            return 404, "no survey configured"
        if not self.is_open:
            return 403, "survey is closed"
        try:
            bucket = parse_bucket(bucket_raw)
        except ValueError:
            return 422, f"unknown bucket {bucket_raw!r}"
        if category_id not in self.category_ids:
            return 422, f"unknown category {category_id!r}"
        if not subject_id:
            return 422, "subject_id must be non-empty"
        key = (subject_id, category_id)
        with self.lock:
            if key in self.seen:
                return 409, "already voted"
            with open(self.votes_log, "a", encoding="utf-8") as fh:
                fh.write(
                    json.dumps(
                        {"subject_id": subject_id, "category_id": category_id, "bucket": bucket.value},
                        sort_keys=True,
                    )
                    + "\n"
                )
                fh.flush()
                os.fsync(fh.fileno())
            self.seen.add(key)
            self.votes.append(SurveyVote(subject_id=subject_id, category_id=category_id, bucket=bucket))
        return 201, "recorded"

    def tally(self) -> list[dict]:
        with self.lock:
            votes = list(self.votes)
        return [
            {
                "category_id": a.category_id,
                "tally": {b.value: a.tally[b] for b in BUCKET_ORDER},
                "total_votes": a.total_votes,
                "assigned_bucket": a.bucket.value if a.bucket else None,
                "tied": a.tied,
            }
            for a in assign_all(votes, self.category_ids)
        ]


class SurveyHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    # quiet by default; tests and the CLI set verbose when useful
    def log_message(self, fmt, *args):
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *args)

    @property
    def state(self) -> SurveyState:
        return self.server.state  # type: ignore[attr-defined]

    def _send_json(self, status: int, payload) -> None:
        body = json.dumps(payload, sort_keys=True).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_file(self, path: Path) -> None:
        body = path.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", CONTENT_TYPES.get(path.suffix, "application/octet-stream"))
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_html(self, status: int, text: str) -> None:
        body = text.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "text/html; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _static(self, root: Path | None, rel: str, fallback: str | None = None) -> None:
        if root is not None:
            target = (root / rel).resolve() if rel else (root / "index.html").resolve()
            if target.is_dir():
                target = target / "index.html"
            if str(target).startswith(str(root.resolve())) and target.is_file():
                self._send_file(target)
                return
        if fallback is not None:
            self._send_html(200, fallback)
        else:
            self._send_json(404, {"error": "not found"})

    def do_GET(self) -> None:
        path = self.path.split("?", 1)[0]
        if path == "/api/categories":
            if not self.state.config:
                self._send_json(404, {"error": "no survey configured"})
                return
            config = self.state.config
            payload = [
                {
                    "category_id": c["category_id"],
                    "label": c["label"],
                    "members": [" ".join(m) for m in c["members"]],
                    "sample_snippets": config.get("snippets", {}).get(c["category_id"], []),
                }
                for c in config["categories"]
            ]
            self._send_json(200, payload)
        elif path == "/api/tally":
            self._send_json(200, self.state.tally())
        elif path == "/api/survey":
            if not self.state.config:
                self._send_json(404, {"error": "no survey configured"})
                return
            self._send_json(
                200,
                {"survey_id": self.state.config.get("survey_id"), "open": self.state.is_open},
            )
        elif path.startswith("/report"):
            rel = path[len("/report") :].lstrip("/")
            self._static(getattr(self.server, "report_dir", None), rel)
        else:
            rel = path.lstrip("/")
            self._static(getattr(self.server, "ui_dir", None), rel, fallback=FALLBACK_INDEX)

    def do_POST(self) -> None:
        path = self.path.split("?", 1)[0]
        if path != "/api/votes":
            self._send_json(404, {"error": "not found"})
            return
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            body = json.loads(raw.decode("utf-8"))
            subject_id = str(body.get("subject_id") or "")
            category_id = str(body.get("category_id") or "")
            bucket = str(body.get("bucket") or "")
        except (json.JSONDecodeError, UnicodeDecodeError):
            self._send_json(422, {"error": "invalid json body"})
            return
        status, message = self.state.add_vote(subject_id, category_id, bucket)
        payload = {"error": message} if status >= 400 else {"status": message}
        self._send_json(status, payload)


def load_survey_config(path: str | Path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        config = json.load(fh)
    if "categories" not in config:
        raise ValueError("survey config must contain 'categories'")
    return config


def make_server(
    port: int,
    survey_config: dict | None,
    votes_log: str | Path,
    report_dir: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> ThreadingHTTPServer:
    if ui_dir is None and data_path("ui", "index.html").exists():
        ui_dir = data_path("ui")
    server = ThreadingHTTPServer(("127.0.0.1", port), SurveyHandler)
    server.state = SurveyState(survey_config, votes_log)  # type: ignore[attr-defined]
    server.report_dir = Path(report_dir) if report_dir else None  # type: ignore[attr-defined]
    server.ui_dir = Path(ui_dir) if ui_dir else None  # type: ignore[attr-defined]
    return server


def serve(
    port: int,
    survey_config: str | Path | None,
    votes_log: str | Path,
    report_dir: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> int:
    config = load_survey_config(survey_config) if survey_config else None
    server = make_server(port, config, votes_log, report_dir, ui_dir)
    server.verbose = True  # type: ignore[attr-defined]
    host, actual_port = server.server_address[:2]
    n_cats = len(config["categories"]) if config else 0
    print(f"survey service on http://{host}:{actual_port}/ ({n_cats} categories); Ctrl-C to stop")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0
