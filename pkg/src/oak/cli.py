"""Command-line entry points.

Subcommands: wrap a descriptor into Turtle, serve the HTTP API, run a
keyword search or a SPARQL query against a store file, grade a descriptor
or stored item, print the repository report, and compute the total-quality
score from a verification sheet.

The store is a Turtle file (default ./kmaps.ttl). Commands that need one
and find none start from the built-in ontology; only `wrap --import`
writes the file back.
"""

from __future__ import annotations

import argparse
import json
import sys
import urllib.error
import urllib.parse
import urllib.request
from pathlib import Path

from . import assessment, corpus, sparql
from .agri import build_ontology, ontology_triples
from .model import ModelError
from .service import BackgroundServer, make_server
from .store import TripleStore
from .turtle import TurtleError
from .vocabulary import kmap_subjects, role_objects
from .wrapper import MinedKnowledgeDescriptor, WrapError, kr_triples, to_turtle, wrap

DEFAULT_STORE = "kmaps.ttl"


class CliError(Exception):
    pass


def _load_store(path: str) -> TripleStore:
    if Path(path).exists():
        try:
            return TripleStore.load(path)
        except TurtleError as exc:
            raise CliError(f"cannot read store {path}: {exc}")
    store = TripleStore()
    store.insert_many(ontology_triples(build_ontology()))
    return store


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")
    except ValueError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}")


def _post_json(url: str, payload: dict) -> dict:
    data = json.dumps(payload).encode("utf-8")
    request = urllib.request.Request(
        url, data=data, headers={"Content-Type": "application/json"}
    )
    try:
        with urllib.request.urlopen(request) as response:
            return json.loads(response.read().decode("utf-8"))
    except urllib.error.HTTPError as exc:
        body = exc.read().decode("utf-8", "replace")
        try:
            detail = json.loads(body).get("error", body)
        except ValueError:
            detail = body
        raise CliError(f"service returned {exc.code}: {detail}")
    except urllib.error.URLError as exc:
        raise CliError(f"cannot reach {url}: {exc.reason}")


def _feature_text(feature: dict) -> str:
    text = feature.get("concept", "?")
    if feature.get("state") is not None:
        text += f" = {feature['state']}"
    if feature.get("unit"):
        text += f" {feature['unit']}"
    return text


def _print_card(card: dict) -> None:
    print(f"{card['id']}  {card['task']}  grade {card['grade']}")
    if card.get("algorithms"):
        names = [a.removeprefix("Algorithm_") for a in card["algorithms"]]
        print(f"  algorithms: {', '.join(names)}")
    if card.get("conditions"):
        print(f"  conditions: {', '.join(_feature_text(f) for f in card['conditions'])}")
    if card.get("targets"):
        print(f"  predicts:   {', '.join(_feature_text(f) for f in card['targets'])}")
    extras = []
    dataset = card.get("dataset")
    if dataset:
        size = f" ({dataset['size']})" if dataset.get("size") is not None else ""
        extras.append(f"dataset {dataset.get('name') or dataset['instance']}{size}")
    for ev in card.get("evaluation") or []:
        extras.append(f"{ev['value']} {ev['metric'].removeprefix('Metric_')}")
    if card.get("locations"):
        extras.append("in " + ", ".join(card["locations"]))
    if card.get("context"):
        extras.append("context " + ", ".join(card["context"]))
    if extras:
        print(f"  {'; '.join(extras)}")
    source = card.get("source")
    if source:
        bits = [source.get("identifier") or source["article"]]
        if source.get("title"):
            bits.append(f"“{source['title']}”")
        if source.get("year") is not None:
            bits.append(f"({source['year']})")
        print(f"  source: {' '.join(bits)}")


def _cmd_wrap(args) -> int:
    descriptor = MinedKnowledgeDescriptor.from_dict(_read_json(args.descriptor))
    ontology = build_ontology()
    if args.do_import:
        store = _load_store(args.store)
        kr = wrap(descriptor, ontology, store=store)
        added = store.insert_many(kr_triples(kr, ontology))
        store.save(args.store)
        document = to_turtle(kr, ontology)
        if args.out:
            Path(args.out).write_text(document, encoding="utf-8")
        print(f"{kr.id}: {added} triples -> {args.store}")
        return 0
    kr = wrap(descriptor, ontology, suffix=args.suffix)
    document = to_turtle(kr, ontology)
    if args.out:
        Path(args.out).write_text(document, encoding="utf-8")
        print(f"{kr.id} -> {args.out}")
    else:
        sys.stdout.write(document)
    return 0


def _cmd_serve(args) -> int:
    store = _load_store(args.store)
    if args.demo:
        store = corpus.build_demo_repository()
    server = make_server(
        store,
        port=args.port,
        host=args.host,
        ontology=build_ontology(),
        ui_dir=args.ui_dir,
    )
    host, port = server.server_address[:2]
    print(f"serving on http://{host}:{port} (store: {args.store})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def _search_payload(args) -> dict:
    if args.url:
        return _post_json(args.url.rstrip("/") + "/search", {"q": args.text})
    store = _load_store(args.store)
    with BackgroundServer(store, ontology=build_ontology()) as server:
        return _post_json(server.url + "/search", {"q": args.text})


def _cmd_search(args) -> int:
    payload = _search_payload(args)
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        print()
        return 0
    if payload.get("recognized"):
        print(f"recognized: {', '.join(payload['recognized'])}")
    print(f"action: {payload.get('action')}  template: {payload.get('form')}")
    cards = payload.get("cards") or []
    if not cards:
        print("no matching knowledge items")
        return 0
    print(f"{len(cards)} matching knowledge item{'s' if len(cards) != 1 else ''}")
    print()
    for card in cards:
        _print_card(card)
    return 0


def _cmd_query(args) -> int:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {args.file}: {exc}")
    store = _load_store(args.store)
    try:
        table = sparql.evaluate(store, text)
    except (sparql.SparqlError, TurtleError) as exc:
        raise CliError(str(exc))
    rendered = sparql.format_results(table, args.format)
    if args.format == "json":
        json.dump(rendered, sys.stdout, indent=2)
        print()
    else:
        sys.stdout.write(rendered)
    return 0


def _assess_stored(store: TripleStore, kr_id: str) -> int:
    from .terms import AGRIKMAPS, Iri

    subject = Iri(AGRIKMAPS + kr_id)
    if subject not in kmap_subjects(store):
        raise CliError(f"no knowledge item {kr_id} in the store")
    roles = role_objects(store, subject)
    from .vocabulary import GRADE_IRI

    grade_value = None
    for t in store.match(subject, GRADE_IRI, None):
        grade_value = t.object.lexical
    print(f"{kr_id}  stored grade: {grade_value if grade_value is not None else 'none'}")
    print(f"  basic:      source {'yes' if roles['source'] else 'no'}")
    print(
        "  principal:  algorithms {}, conditions {}, target {}".format(
            len(roles["algorithms"]), len(roles["conditions"]), len(roles["targets"])
        )
    )
    print(
        "  subordinal: dataset {}, evaluation {}, locations {}, context {}".format(
            "yes" if roles["dataset"] else "no",
            "yes" if roles["evaluation"] else "no",
            len(roles["locations"]),
            len(roles["context"]),
        )
    )
    return 0


def _cmd_assess(args) -> int:
    target = args.descriptor
    if not Path(target).exists():
        return _assess_stored(_load_store(args.store), target)
    descriptor = MinedKnowledgeDescriptor.from_dict(_read_json(target))
    descriptor.validate()
    breakdown = assessment.grade(descriptor)
    print(f"basic:      {breakdown.basic:5.1f} / 20")
    print(f"principal:  {breakdown.principal:5.1f} / 40")
    print(f"subordinal: {breakdown.subordinal:5.1f} / 40")
    verdict = "accepted" if breakdown.accepted else "rejected"
    print(
        f"total:      {breakdown.total:5.1f}  "
        f"{verdict} (threshold {assessment.ACCEPTANCE_THRESHOLD})"
    )
    print(f"present:    {', '.join(sorted(breakdown.present))}")
    return 0


def _cmd_report(args) -> int:
    store = _load_store(args.store)
    report = assessment.repository_report(store).as_dict()
    print(f"items:      {report['items']}")
    print(f"basic:      {report['basic_pct']}%")
    print(f"principal:  {report['principal_pct']}%")
    print(f"subordinal: {report['subordinal_pct']}%")
    print(f"rate:       {report['rate']}")
    return 0


def _cmd_foca(args) -> int:
    raw = _read_json(args.grades)
    if not isinstance(raw, dict):
        raise CliError("grades file must be a JSON object")
    known = {"goal_grades", "lexp", "nl", "sb", "co", "re", "cp"}
    unknown = set(raw) - known
    if unknown:
        raise CliError(f"unknown fields: {', '.join(sorted(unknown))}")
    try:
        result = assessment.foca_score(assessment.FocaInput(**raw))
    except (ValueError, assessment.AssessmentError, TypeError) as exc:
        raise CliError(str(exc))
    for goal, mean in result.goal_means.items():
        shown = "unanswered" if mean is None else f"{mean:.1f}"
        print(f"{goal}: {shown}")
    print(f"z:  {result.z:.6f}")
    print(f"mu: {result.mu:.6f}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oak", description="Ontology-based knowledge maps for agriculture."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_store(p) -> None:
        p.add_argument(
            "--store", default=DEFAULT_STORE,
            help=f"Turtle store file (default {DEFAULT_STORE})",
        )

    p = sub.add_parser("wrap", help="wrap a descriptor into a Turtle document")
    p.add_argument("descriptor", help="descriptor JSON file")
    p.add_argument("--out", help="write the Turtle document to this file")
    p.add_argument(
        "--import", dest="do_import", action="store_true",
        help="add the wrapped item to the store (allocates the next id)",
    )
    p.add_argument("--suffix", type=int, help="force the id suffix (no --import)")
    add_store(p)
    p.set_defaults(func=_cmd_wrap)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", help="serve this directory of static files under /ui")
    p.add_argument(
        "--demo", action="store_true",
        help="serve the built-in thirty-item repository instead of the store file",
    )
    add_store(p)
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("search", help="keyword search over the stored items")
    p.add_argument("text", help="search text")
    p.add_argument("--url", help="query a running service instead of the store file")
    p.add_argument("--json", action="store_true", help="print the raw response")
    add_store(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("query", help="run a SPARQL query file")
    p.add_argument("--file", required=True, help="query file (.rq)")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    add_store(p)
    p.set_defaults(func=_cmd_query)

    p = sub.add_parser("assess", help="grade a descriptor file or stored item")
    p.add_argument("descriptor", help="descriptor JSON file or stored item id")
    add_store(p)
    p.set_defaults(func=_cmd_assess)

    p = sub.add_parser("report", help="repository coverage and acceptance rate")
    add_store(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("foca", help="total quality score from a verification sheet")
    p.add_argument("grades", help="JSON file with goal_grades and flags")
    p.set_defaults(func=_cmd_foca)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (WrapError, ModelError, TurtleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
