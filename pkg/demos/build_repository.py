"""Build the thirty-item demonstration repository and look at its coverage.

Run from anywhere:

    python3 demos/build_repository.py

The script wraps the thirty bundled descriptors, reports how completely the
repository is documented, and writes the whole store to repository.ttl in the
current directory so the other demos (and `oak serve --store`) can reuse it.
"""

from pathlib import Path

from oak.agri import build_ontology, ontology_triples
from oak.assessment import repository_report
from oak.corpus import build_demo_repository, demo_descriptors
from oak.vocabulary import kmap_subjects


def banner(text: str) -> None:
    print()
    print(text)
    print("-" * len(text))


def main() -> None:
    ontology = build_ontology()
    banner("Ontology")
    print(f"concepts:        {len(ontology.concepts)}")
    print(f"relations:       {len(ontology.relations)}")
    print(f"transformations: {len(ontology.transformations)}")
    print(f"triples:         {len(ontology_triples(ontology))}")

    descriptors = demo_descriptors()
    store = build_demo_repository(ontology)
    banner("Repository")
    print(f"descriptors wrapped: {len(descriptors)}")
    print(f"knowledge items:     {len(kmap_subjects(store))}")
    print(f"triples in store:    {len(store.match())}")

    tasks: dict[str, int] = {}
    for d in descriptors:
        tasks[d.task] = tasks.get(d.task, 0) + 1
    for task in sorted(tasks):
        print(f"  {task:<16} {tasks[task]}")

    report = repository_report(store)
    banner("Coverage report")
    print(f"basic:      {report.basic_pct:.1f}% of items carry full source information")
    print(f"principal:  {report.principal_pct:.1f}% carry algorithms, conditions, and a target")
    print(f"subordinal: {report.subordinal_pct:.1f}% carry dataset, evaluation, location, context")
    print(f"rate:       {report.rate:.1f} mean stored grade")

    out = Path("repository.ttl")
    store.save(out)
    banner("Saved")
    print(f"{out.resolve()}")
    print("Serve it with: oak serve --store repository.ttl")


if __name__ == "__main__":
    main()
