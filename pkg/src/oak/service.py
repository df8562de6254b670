"""HTTP front of the repository: SPARQL endpoint, keyword search,
knowledge cards, Turtle import and the assessment report.

Built on the standard library's threading HTTP server.  All handlers
read a consistent store snapshot; the import handler is the only writer
and takes the store's single writer slot internally, so requests never
block each other.
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, unquote, urlparse

from . import assessment, search, sparql
from .agri import build_ontology
from .model import Ontology
from .store import TripleStore
from .terms import Iri
from .turtle import TurtleError, serialize_turtle
from .vocabulary import in_instance_namespace, kmap
from .wrapper import WrapError, from_store, to_turtle


class KnowledgeService:
    """The operations behind the HTTP routes, usable directly as well."""

    def __init__(self, store: TripleStore, ontology: Ontology | None = None):
        self.store = store
        self.ontology = ontology or build_ontology()

    def sparql_json(self, query_text: str) -> dict:
        table = sparql.evaluate(self.store, query_text)
        return sparql.format_results(table, "json")

    def search(self, q: str) -> dict:
        outcome = search.run_search(self.store, q, self.ontology)
        return {
            "cards": [card.as_dict() for card in outcome.cards],
            "recognized": list(outcome.intent.recognized()),
            "action": outcome.intent.action,
            "form": outcome.query.form,
            "query": str(outcome.query),
            "results": sparql.format_results(outcome.table, "json"),
        }

    def card(self, kmap_id: str) -> dict | None:
        found = search.card_for(self.store, kmap_id, self.ontology)
        if found is None:
            return None
        doc = found.as_dict()
        doc["turtle"] = self._item_turtle(kmap_id)
        return doc

    def _item_turtle(self, kmap_id: str) -> str:
        """The item's own triples as a Turtle document.

        Items following the full wrapper pattern are reconstructed through
        the wrapper, which yields the same canonical document the item was
        imported from. Fragments that never went through the wrapper fall
        back to their raw subgraph: the item's triples plus those of every
        instance it links to directly.
        """
        try:
            return to_turtle(from_store(self.store, kmap_id, self.ontology), self.ontology)
        except (KeyError, WrapError):
            root = kmap(kmap_id)
            triples = set(self.store.match(subject=root))
            for triple in self.store.match(subject=root):
                target = triple.object
                if isinstance(target, Iri) and in_instance_namespace(target) and target != root:
                    triples.update(self.store.match(subject=target))
            return serialize_turtle(triples, self.store.prefixes)

    def import_turtle(self, text: str) -> int:
        incoming = TripleStore.from_turtle(text)
        return self.store.insert_many(incoming.triples())

    def report(self) -> dict:
        return assessment.repository_report(self.store).as_dict()


_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".ico": "image/x-icon",
    ".map": "application/json",
    ".png": "image/png",
}


def _make_handler(service: KnowledgeService, ui_dir: str | None):
    ui_root = Path(ui_dir).resolve() if ui_dir else None

    class Handler(BaseHTTPRequestHandler):
        server_version = "oak"

        def log_message(self, format: str, *args) -> None:  # noqa: A002
            pass  # keep test and CLI output clean

        # -- helpers -----------------------------------------------------

        def _send_json(self, code: int, payload: dict) -> None:
            body = json.dumps(payload).encode("utf-8")
            self.send_response(code)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _read_body(self) -> bytes:
            length = int(self.headers.get("Content-Length") or 0)
            return self.rfile.read(length) if length else b""

        def _serve_static(self, path: str) -> None:
            if ui_root is None:
                self._send_json(404, {"error": "not found"})
                return
            relative = path[len("/ui"):].lstrip("/") or "index.html"
            target = (ui_root / relative).resolve()
            if not str(target).startswith(str(ui_root)) or not target.is_file():
                self._send_json(404, {"error": "not found"})
                return
            body = target.read_bytes()
            self.send_response(200)
            self.send_header(
                "Content-Type",
                _CONTENT_TYPES.get(target.suffix, "application/octet-stream"),
            )
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        # -- routes ------------------------------------------------------

        def do_GET(self) -> None:  # noqa: N802 (stdlib handler name)
            url = urlparse(self.path)
            if url.path == "/sparql":
                query = parse_qs(url.query).get("query", [""])[0]
                if not query:
                    self._send_json(400, {"error": "missing query parameter"})
                    return
                try:
                    self._send_json(200, service.sparql_json(query))
                except (sparql.SparqlError, TurtleError) as exc:
                    self._send_json(400, {"error": str(exc)})
                return
            if url.path.startswith("/kmap/"):
                kmap_id = unquote(url.path[len("/kmap/"):])
                card = service.card(kmap_id)
                if card is None:
                    self._send_json(404, {"error": f"no knowledge item {kmap_id!r}"})
                else:
                    self._send_json(200, card)
                return
            if url.path == "/report":
                self._send_json(200, service.report())
                return
            if url.path == "/" and ui_root is not None:
                self._serve_static("/ui/index.html")
                return
            if url.path.startswith("/ui"):
                self._serve_static(url.path)
                return
            self._send_json(404, {"error": "not found"})

        def do_POST(self) -> None:  # noqa: N802
            url = urlparse(self.path)
            body = self._read_body()
            if url.path == "/search":
                try:
                    payload = json.loads(body.decode("utf-8"))
                except (UnicodeDecodeError, json.JSONDecodeError):
                    self._send_json(400, {"error": "body must be a JSON object"})
                    return
                q = payload.get("q") if isinstance(payload, dict) else None
                if not q or not isinstance(q, str) or not q.strip():
                    self._send_json(400, {"error": "missing search text"})
                    return
                try:
                    self._send_json(200, service.search(q))
                except search.NoConceptsRecognized as exc:
                    self._send_json(
                        400, {"error": str(exc), "unrecognized": exc.tokens}
                    )
                except search.SearchError as exc:
                    self._send_json(400, {"error": str(exc)})
                return
            if url.path == "/import":
                try:
                    text = body.decode("utf-8")
                except UnicodeDecodeError:
                    self._send_json(400, {"error": "body must be UTF-8 Turtle"})
                    return
                try:
                    added = service.import_turtle(text)
                except TurtleError as exc:
                    self._send_json(400, {"error": str(exc)})
                    return
                self._send_json(200, {"triples": added})
                return
            self._send_json(404, {"error": "not found"})

    return Handler


def make_server(
    store: TripleStore,
    port: int = 8080,
    host: str = "127.0.0.1",
    ontology: Ontology | None = None,
    ui_dir: str | None = None,
) -> ThreadingHTTPServer:
    """A ready-to-run server; pass port 0 to let the OS pick one."""
    service = KnowledgeService(store, ontology)
    return ThreadingHTTPServer((host, port), _make_handler(service, ui_dir))


class BackgroundServer:
    """Context manager running the service on a daemon thread.  Used by
    tests and by the one-shot CLI search."""

    def __init__(self, store: TripleStore, ontology: Ontology | None = None,
                 ui_dir: str | None = None):
        self._server = make_server(store, port=0, ontology=ontology, ui_dir=ui_dir)
        self._thread = threading.Thread(
            target=self._server.serve_forever, daemon=True
        )

    @property
    def url(self) -> str:
        host, port = self._server.server_address[:2]
        return f"http://{host}:{port}"

    def __enter__(self) -> "BackgroundServer":
        self._thread.start()
        return self

    def __exit__(self, *exc) -> None:
        self._server.shutdown()
        self._server.server_close()
        self._thread.join(timeout=5)
