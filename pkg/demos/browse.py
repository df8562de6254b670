"""Run the ten canonical browser questions against the demo repository.

    python3 demos/browse.py

For each question the script prints what the intent parser recognized, which
template the generator picked, and the top of the result list. Together the
ten questions exercise every query form the browser knows.
"""

from oak.agri import build_ontology
from oak.corpus import build_demo_repository
from oak.search import run_search

QUESTIONS = [
    "What is the basic information about wheat crop?",
    "What is the basic information about the knowledge model Regressor_015?",
    "What models can use nitrogen to predict and what to predict?",
    "What models can be used to predict wheat yield?",
    "Which transformations can process Temperature in knowledge items?",
    "What are the relationships between Wheat and Leaf Rust disease?",
    "What models can be used to predict high yield?",
    "How crops can get a high yield when grown in the UK?",
    "Which knowledge models were mined with Multi-Linear Regression?",
    "Which knowledge items are related to the dataset PlantVillage?",
]


def main() -> None:
    ontology = build_ontology()
    store = build_demo_repository(ontology)

    for number, question in enumerate(QUESTIONS, start=1):
        outcome = run_search(store, question, ontology)
        print(f"Q{number}: {question}")
        chips = ", ".join(outcome.intent.recognized()) or "(nothing)"
        print(f"    recognized: {chips}")
        print(f"    action: {outcome.intent.action}  template: {outcome.query.form}")
        print(f"    rows: {len(outcome.table.rows)}  cards: {len(outcome.cards)}")
        for card in outcome.cards[:3]:
            task = card.task or "?"
            grade = card.grade if card.grade is not None else "?"
            print(f"      {card.kmap_id}  {task}  grade {grade}")
        if len(outcome.cards) > 3:
            print(f"      ... and {len(outcome.cards) - 3} more")
        print()

    elements: set = set()
    roles: set = set()
    for question in QUESTIONS:
        access = run_search(store, question, ontology).access
        elements |= set(access.elements)
        roles |= set(access.roles)
    print("Across all ten questions the browser touched")
    print(f"    model elements: {', '.join(sorted(elements))}")
    print(f"    instance roles: {', '.join(sorted(roles))}")


if __name__ == "__main__":
    main()
