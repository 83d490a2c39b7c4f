"""Local HTTP API for the authoring wizard and registry.

Surface:
  GET  /schema            built-in schema as JSON
  POST /validate          canonical body -> validation report
  POST /render?target=markdown|latex    canonical body -> rendered text
  GET  /registry          index of the registry directory
  GET  /registry/{name}   fetch one stored sheet
  PUT  /registry/{name}   validate, then store atomically (422 on errors)

The server is a local authoring aid: it binds loopback by default and adds
permissive CORS headers so a dev-served wizard can reach it.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional, Tuple
from urllib.parse import parse_qs, urlparse

from .compare import build_index
from .document import parse_canonical, serialize_canonical
from .errors import HedsError
from .render import RenderFormat, RenderTarget, render
from .schema import builtin_schema, schema_to_json
from .validate import validate

_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


def _registry_file(registry: Path, name: str) -> Optional[Path]:
    if name.endswith(".heds.json"):
        name = name[: -len(".heds.json")]
    if not _NAME_RE.match(name) or ".." in name:
        return None
    return registry / f"{name}.heds.json"


class HedsServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address: Tuple[str, int], registry_dir: Path):
        super().__init__(address, _Handler)
        self.registry_dir = Path(registry_dir)


class _Handler(BaseHTTPRequestHandler):
    server: HedsServer
    protocol_version = "HTTP/1.1"

    # --- plumbing ---

    def log_message(self, format: str, *args) -> None:  # keep test output quiet
        pass

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _reply(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self._cors()
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _json(self, status: int, payload: dict) -> None:
        body = (json.dumps(payload, ensure_ascii=False, indent=2) + "\n").encode("utf-8")
        self._reply(status, body, "application/json; charset=utf-8")

    def _text(self, status: int, text: str, content_type: str = "text/plain") -> None:
        self._reply(status, text.encode("utf-8"), f"{content_type}; charset=utf-8")

    def _body(self) -> bytes:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length)

    def _parse_body(self):
        return parse_canonical(self._body())

    # --- methods ---

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self._cors()
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:
        url = urlparse(self.path)
        if url.path == "/schema":
            self._json(200, schema_to_json(builtin_schema()))
        elif url.path == "/registry":
            self._json(200, build_index(self.server.registry_dir).to_json_dict())
        elif url.path.startswith("/registry/"):
            self._get_registry_entry(url.path[len("/registry/"):])
        else:
            self._json(404, {"error": f"no such resource: {url.path}"})

    def do_POST(self) -> None:
        url = urlparse(self.path)
        if url.path == "/validate":
            try:
                d = self._parse_body()
            except HedsError as exc:
                self._json(400, {"error": str(exc)})
                return
            self._json(200, validate(d).to_json_dict())
        elif url.path == "/render":
            target = (parse_qs(url.query).get("target") or ["markdown"])[0]
            try:
                fmt = RenderFormat(target)
            except ValueError:
                self._json(400, {"error": f"unknown render target: {target!r}"})
                return
            try:
                d = self._parse_body()
            except HedsError as exc:
                self._json(400, {"error": str(exc)})
                return
            content_type = "text/markdown" if fmt is RenderFormat.MARKDOWN else "application/x-tex"
            self._text(200, render(d, target=RenderTarget(fmt)), content_type)
        else:
            self._json(404, {"error": f"no such resource: {url.path}"})

    def do_PUT(self) -> None:
        url = urlparse(self.path)
        if not url.path.startswith("/registry/"):
            self._json(404, {"error": f"no such resource: {url.path}"})
            return
        name = url.path[len("/registry/"):]
        file = _registry_file(self.server.registry_dir, name)
        if file is None:
            self._json(400, {"error": f"invalid registry name: {name!r}"})
            return
        try:
            d = self._parse_body()
        except HedsError as exc:
            self._json(400, {"error": str(exc)})
            return
        report = validate(d)
        if report.error_count > 0:
            self._json(422, {"error": "sheet has validation errors", **report.to_json_dict()})
            return
        file.parent.mkdir(parents=True, exist_ok=True)
        data = serialize_canonical(d)
        fd, tmp = tempfile.mkstemp(dir=file.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as handle:
                handle.write(data)
            os.replace(tmp, file)
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        self._json(200, {"stored": file.name, "warnings": report.warning_count})

    def _get_registry_entry(self, name: str) -> None:
        file = _registry_file(self.server.registry_dir, name)
        if file is None:
            self._json(400, {"error": f"invalid registry name: {name!r}"})
            return
        if not file.is_file():
            self._json(404, {"error": f"no stored sheet named {name!r}"})
            return
        self._reply(200, file.read_bytes(), "application/json; charset=utf-8")


def make_server(host: str, port: int, registry_dir: Path) -> HedsServer:
    return HedsServer((host, port), registry_dir)
