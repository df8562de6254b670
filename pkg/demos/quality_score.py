"""Score an ontology verification sheet.

    python3 demos/quality_score.py

A verification sheet groups review questions under five goals: structure
(G1), consistency (G2), retrieval (G3), completeness (G4), and clarity (G5).
Each answered question gets a grade from 0 to 100; unanswered ones stay out
of the average instead of dragging it down. The first four goal means feed a
logistic score; G5 is reported alongside but carries no weight.
"""

from oak.assessment import FocaInput, foca_score


def show(label: str, inp: FocaInput) -> None:
    result = foca_score(inp)
    print(label)
    for goal in ("G1", "G2", "G3", "G4", "G5"):
        mean = result.goal_means.get(goal)
        text = f"{mean:5.1f}" if mean is not None else "  n/a"
        print(f"    {goal}: {text}")
    print(f"    z  = {result.z:+.4f}")
    print(f"    mu = {result.mu:.6f}")
    print()


def main() -> None:
    sheet = FocaInput(
        goal_grades={
            "G1": (75, 75),
            "G2": (100, 50, None),
            "G3": (100,),
            "G4": (100,),
            "G5": (80,),
        },
    )
    show("A reviewed sheet (one G2 question left unanswered)", sheet)

    perfect = FocaInput(goal_grades={g: (100,) for g in ("G1", "G2", "G3", "G4")})
    show("A perfect sheet, experienced evaluator", perfect)

    novice = FocaInput(goal_grades=perfect.goal_grades, lexp=0)
    show("The same sheet, evaluator without ontology experience", novice)

    offline = FocaInput(goal_grades=perfect.goal_grades, nl=1)
    show("The same sheet, but the ontology is not live", offline)

    print("The not-live flag is the single largest penalty (2.5 off z, ten")
    print("times the experience term), though a flawless sheet still sits")
    print("deep in the logistic's saturated region.")


if __name__ == "__main__":
    main()
