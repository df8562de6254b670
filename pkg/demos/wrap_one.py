"""Follow one descriptor through the wrapping pipeline.

    python3 demos/wrap_one.py

The input is fixtures/classifier_010.json, a soil-sensing yield classifier.
Each stage prints what it added: the parsed descriptor, the grade breakdown,
the minted instances and relations, and finally the Turtle document.
"""

import json
from pathlib import Path

from oak.agri import build_ontology
from oak.assessment import grade
from oak.wrapper import MinedKnowledgeDescriptor, to_turtle, wrap

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "classifier_010.json"


def banner(text: str) -> None:
    print()
    print(text)
    print("-" * len(text))


def main() -> None:
    raw = json.loads(FIXTURE.read_text(encoding="utf-8"))
    descriptor = MinedKnowledgeDescriptor.from_dict(raw)

    banner("Descriptor")
    print(f"task:       {descriptor.task}")
    print(f"algorithms: {', '.join(descriptor.algorithms)}")
    print(f"conditions: {len(descriptor.conditions)} features")
    for feature in descriptor.conditions:
        extra = f"  [{feature.transformation}]" if feature.transformation else ""
        state = f" = {feature.state}" if feature.state is not None else ""
        print(f"  {feature.term}{state}{extra}")
    targets = ", ".join(f.term for f in descriptor.targets)
    print(f"targets:    {targets}")
    print(f"source:     {descriptor.source.article_id} ({descriptor.source.year})")

    breakdown = grade(descriptor)
    banner("Grade")
    print(f"basic:      {breakdown.basic:.1f} / 20")
    print(f"principal:  {breakdown.principal:.1f} / 40")
    print(f"subordinal: {breakdown.subordinal:.1f} / 40")
    verdict = "accepted" if breakdown.accepted else "rejected"
    print(f"total:      {breakdown.total:.1f}, {verdict} at threshold 50")
    print(f"stored as:  grade {breakdown.rounded()}")

    ontology = build_ontology()
    kr = wrap(descriptor, ontology, suffix=10)
    banner("Representation")
    print(f"instances:       {len(kr.instances)}")
    print(f"relations:       {len(kr.relations)}")
    print(f"transformations: {len(kr.transformations)}")
    print(f"states:          {len(kr.states)}")
    print()
    print("A few relations:")
    shown = 0
    for relation in kr.relations:
        if relation.predicate in ("isA", "hasAlgorithm", "predicts", "hasState"):
            print(f"  {relation.subject} {relation.predicate} {relation.object}")
            shown += 1
        if shown == 8:
            break

    banner("Turtle")
    document = to_turtle(kr, ontology)
    lines = document.splitlines()
    for line in lines[:18]:
        print(line)
    print(f"... {len(lines) - 18} more lines")


if __name__ == "__main__":
    main()
