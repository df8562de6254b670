"""Grading of knowledge items and repository-level reporting.

A descriptor is graded out of 100 in three groups: basic information (20,
split over source id, title, year), principal information (40, split over
algorithms, conditions, target, condition transformations, target
transformations) and subordinal information (40, split over dataset,
evaluation, locations, context). Items under 50 are not importable.

The total-quality scorer condenses a goal/question verification sheet into
one logistic score. Its weights are fixed; see foca_score.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

ACCEPTANCE_THRESHOLD = 50

BASIC_ITEMS = ("source-id", "title", "year")
PRINCIPAL_ITEMS = (
    "algorithms", "conditions", "target",
    "condition-transformations", "target-transformations",
)
SUBORDINAL_ITEMS = ("dataset", "evaluation", "locations", "context")


class AssessmentError(Exception):
    pass


class InconsistentFocaInput(AssessmentError):
    pass


@dataclass(frozen=True)
class GradeBreakdown:
    basic: float
    principal: float
    subordinal: float
    present: frozenset[str]

    @property
    def total(self) -> float:
        return self.basic + self.principal + self.subordinal

    @property
    def accepted(self) -> bool:
        return self.total >= ACCEPTANCE_THRESHOLD

    def rounded(self) -> int:
        """The stored integer grade (half rounds up)."""
        return int(math.floor(self.total + 0.5))


def presence_of(descriptor) -> frozenset[str]:
    """Which of the twelve graded sub-items a descriptor carries.

    A transformations sub-item counts only when every member of that side
    names its transformation explicitly; the identity fallback the wrapper
    applies is a storage default, not stated information. Clustering gets
    its target point from the implied cluster output but can never earn
    target-transformations, whose links its pattern forbids."""
    present: set[str] = set()
    source = descriptor.source
    if source is not None:
        if source.article_id:
            present.add("source-id")
        if source.title:
            present.add("title")
        if source.year is not None:
            present.add("year")
    if descriptor.algorithms:
        present.add("algorithms")
    if descriptor.conditions:
        present.add("conditions")
        if all(c.transformation for c in descriptor.conditions):
            present.add("condition-transformations")
    if descriptor.targets or descriptor.task == "clustering":
        present.add("target")
    if descriptor.targets and descriptor.task != "clustering":
        if all(t.transformation for t in descriptor.targets):
            present.add("target-transformations")
    if descriptor.dataset is not None:
        present.add("dataset")
    if descriptor.evaluation:
        present.add("evaluation")
    if descriptor.locations:
        present.add("locations")
    if descriptor.context:
        present.add("context")
    return frozenset(present)


def grade(descriptor) -> GradeBreakdown:
    present = presence_of(descriptor)

    def share(items: tuple[str, ...], weight: float) -> float:
        hits = sum(1 for item in items if item in present)
        return weight * hits / len(items)

    return GradeBreakdown(
        basic=share(BASIC_ITEMS, 20.0),
        principal=share(PRINCIPAL_ITEMS, 40.0),
        subordinal=share(SUBORDINAL_ITEMS, 40.0),
        present=present,
    )


@dataclass(frozen=True)
class RepositoryReport:
    items: int
    basic_pct: float
    principal_pct: float
    subordinal_pct: float
    rate: float

    def as_dict(self) -> dict:
        return {
            "items": self.items,
            "basic_pct": round(self.basic_pct, 1),
            "principal_pct": round(self.principal_pct, 1),
            "subordinal_pct": round(self.subordinal_pct, 1),
            "rate": round(self.rate, 1),
        }


def repository_report(store) -> RepositoryReport:
    """Coverage of the three information groups over the stored items and
    the mean stored grade.

    Grading proper needs the descriptor; from triples alone a group counts
    as fully present when its witness links all exist: definedIn for basic;
    hasAlgorithm, hasCondition and predicts for principal; dataset,
    evaluation, location and context links for subordinal."""
    from .vocabulary import GRADE_IRI, kmap_subjects, role_objects

    subjects = kmap_subjects(store)
    if not subjects:
        return RepositoryReport(0, 0.0, 0.0, 0.0, 0.0)
    basic = principal = subordinal = 0
    grades: list[int] = []
    for subject in subjects:
        roles = role_objects(store, subject)
        if roles["source"]:
            basic += 1
        if roles["algorithms"] and roles["conditions"] and roles["targets"]:
            principal += 1
        if roles["dataset"] and roles["evaluation"] and roles["locations"] and roles["context"]:
            subordinal += 1
        for t in store.match(subject, GRADE_IRI, None):
            try:
                grades.append(int(t.object.lexical))
            except (AttributeError, ValueError):
                pass
    n = len(subjects)
    return RepositoryReport(
        items=n,
        basic_pct=100.0 * basic / n,
        principal_pct=100.0 * principal / n,
        subordinal_pct=100.0 * subordinal / n,
        rate=sum(grades) / len(grades) if grades else 0.0,
    )


GOALS = ("G1", "G2", "G3", "G4", "G5")
_ROLE_WEIGHTS = {"G1": 0.03, "G2": 0.02, "G3": 0.01, "G4": 0.02}


@dataclass(frozen=True)
class FocaInput:
    """Per-goal question grades (None marks an unanswered question), the
    evaluator-experience bit, the no-answer bit and the four role flags
    gating goals G1..G4."""

    goal_grades: dict = field(default_factory=dict)
    lexp: int = 1
    nl: int = 0
    sb: int = 1
    co: int = 1
    re: int = 1
    cp: int = 1


@dataclass(frozen=True)
class FocaResult:
    z: float
    mu: float
    goal_means: dict

    def as_dict(self) -> dict:
        return {"z": self.z, "mu": self.mu, "goal_means": self.goal_means}


def _goal_mean(grades) -> float | None:
    answered = [g for g in grades if g is not None]
    if not answered:
        return None
    return sum(answered) / len(answered)


def foca_score(inp: FocaInput) -> FocaResult:
    """Total quality mu = logistic(z) with

        z = -0.44 + 0.03*Cov_G1*Sb + 0.02*Cov_G2*Co + 0.01*Cov_G3*Re
            + 0.02*Cov_G4*Cp - 0.66*LExp - 2.5*Nl

    where Cov_* is the mean of the answered grades of that goal (0..100
    scale). Unanswered questions are excluded from the mean, not scored
    zero. G5 is reported in goal_means but carries no weight. A goal with
    no answered questions is only an error when its role flag is up and
    the no-answer bit is down; otherwise its covered mean counts as zero."""
    for goal, grades in inp.goal_grades.items():
        for g in grades:
            if g is not None and not 0 <= g <= 100:
                raise ValueError(f"{goal}: grade {g} outside 0..100")

    flags = {"G1": inp.sb, "G2": inp.co, "G3": inp.re, "G4": inp.cp}
    means: dict[str, float | None] = {
        goal: _goal_mean(inp.goal_grades.get(goal, ())) for goal in GOALS
    }
    z = -0.44 - 0.66 * inp.lexp - 2.5 * inp.nl
    for goal, weight in _ROLE_WEIGHTS.items():
        mean = means[goal]
        if mean is None:
            if flags[goal] and not inp.nl:
                raise InconsistentFocaInput(
                    f"goal {goal} has no answered questions, its role flag is set "
                    f"and the no-answer bit is clear"
                )
            mean = 0.0
        z += weight * mean * flags[goal]
    mu = 1.0 / (1.0 + math.exp(-z))
    return FocaResult(z=z, mu=mu, goal_means=means)
