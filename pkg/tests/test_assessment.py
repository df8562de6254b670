import itertools
import json
import math
import pathlib
from dataclasses import dataclass, field
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oak.assessment import (
    ACCEPTANCE_THRESHOLD,
    FocaInput,
    InconsistentFocaInput,
    foca_score,
    grade,
    presence_of,
    repository_report,
)
from oak.vocabulary import GRADE_IRI
from oak.wrapper import MinedKnowledgeDescriptor

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@dataclass
class Feature:
    concept: str
    transformation: str | None = None


@dataclass
class Source:
    article_id: str | None = None
    title: str | None = None
    year: int | None = None


@dataclass
class Stub:
    """Bare descriptor shape for grading; no wrapper validation attached."""

    task: str = "classification"
    algorithms: tuple = ()
    conditions: tuple = ()
    targets: tuple = ()
    dataset: object = None
    evaluation: tuple = ()
    locations: tuple = ()
    context: tuple = ()
    source: object = None


def full_stub():
    return Stub(
        algorithms=("CPANN",),
        conditions=(Feature("SoilPH", "t"),),
        targets=(Feature("Yield", "t"),),
        dataset=object(),
        evaluation=("81 Accuracy",),
        locations=("United_Kingdom",),
        context=("Wheat",),
        source=Source("a1", "title", 2016),
    )


class TestGrade:
    def test_complete_descriptor_scores_100(self):
        assert grade(full_stub()).total == 100.0

    def test_empty_descriptor_scores_0(self):
        b = grade(Stub())
        assert b.total == 0.0
        assert not b.accepted

    def test_fixture_descriptor_scores_exactly_60(self):
        data = json.loads((FIXTURES / "classifier_010.json").read_text())
        descriptor = MinedKnowledgeDescriptor.from_dict(data)
        b = grade(descriptor)
        assert (b.basic, b.principal, b.subordinal) == (20.0, 40.0, 0.0)
        assert b.total == 60.0
        assert b.accepted
        assert b.rounded() == 60

    def test_threshold_is_50(self):
        assert ACCEPTANCE_THRESHOLD == 50

    def test_exactly_50_is_accepted(self):
        stub = Stub(
            source=Source("a1", "t", 2000),
            dataset=object(),
            evaluation=("x",),
            locations=("L",),
        )
        b = grade(stub)
        assert b.total == 50.0
        assert b.accepted

    def test_just_below_threshold_rejected(self):
        stub = Stub(
            source=Source("a1", "t", 2000),
            conditions=(Feature("SoilPH"),),
            dataset=object(),
            evaluation=("x",),
        )
        b = grade(stub)
        assert b.total == pytest.approx(48.0)
        assert not b.accepted

    def test_rounding_half_up(self):
        # basic 2/3 of 20 = 13.33 -> rounds to 13; plus principal 32 -> 45.33 -> 45
        stub = Stub(
            source=Source("a1", "t", None),
            algorithms=("A",),
            conditions=(Feature("C", "t"),),
            targets=(Feature("Y"),),
        )
        b = grade(stub)
        assert b.rounded() == round_half_up(b.total)

    def test_clustering_gets_target_point_without_targets(self):
        stub = Stub(task="clustering", algorithms=("KMeans",),
                    conditions=(Feature("T", "t"),))
        present = presence_of(stub)
        assert "target" in present
        assert "target-transformations" not in present

    def test_clustering_never_earns_target_transformations(self):
        stub = Stub(task="clustering", algorithms=("KMeans",),
                    conditions=(Feature("T", "t"),),
                    targets=(Feature("Yield", "t"),))
        assert "target-transformations" not in presence_of(stub)

    def test_transformations_require_every_member_explicit(self):
        stub = Stub(
            algorithms=("A",),
            conditions=(Feature("C1", "t"), Feature("C2", None)),
            targets=(Feature("Y", "t"),),
        )
        present = presence_of(stub)
        assert "conditions" in present
        assert "condition-transformations" not in present
        assert "target-transformations" in present


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def oracle_presence(stub) -> set:
    """The twelve-sub-item rubric, restated from the grading scheme."""
    present = set()
    if stub.source is not None:
        if stub.source.article_id:
            present.add("source-id")
        if stub.source.title:
            present.add("title")
        if stub.source.year is not None:
            present.add("year")
    if stub.algorithms:
        present.add("algorithms")
    if stub.conditions:
        present.add("conditions")
        if all(c.transformation for c in stub.conditions):
            present.add("condition-transformations")
    if stub.targets or stub.task == "clustering":
        present.add("target")
    if stub.targets and stub.task != "clustering":
        if all(t.transformation for t in stub.targets):
            present.add("target-transformations")
    if stub.dataset is not None:
        present.add("dataset")
    if stub.evaluation:
        present.add("evaluation")
    if stub.locations:
        present.add("locations")
    if stub.context:
        present.add("context")
    return present


def oracle_total(present: set) -> Fraction:
    basic = Fraction(20) * len(present & {"source-id", "title", "year"}) / 3
    principal = Fraction(40) * len(present & {
        "algorithms", "conditions", "target",
        "condition-transformations", "target-transformations",
    }) / 5
    subordinal = Fraction(40) * len(present & {
        "dataset", "evaluation", "locations", "context",
    }) / 4
    return basic + principal + subordinal


SOURCE_CHOICES = [
    None,
    Source("a1", None, None),
    Source("a1", "title", None),
    Source("a1", "title", 2016),
]
FEATURE_CHOICES = [(), (Feature("C", "t"),), (Feature("C", None), Feature("D", "t"))]


def test_grade_matches_enumerated_oracle():
    cases = 0
    for (source, algorithms, conditions, targets, task,
         dataset, evaluation, locations, context) in itertools.product(
        SOURCE_CHOICES,
        [(), ("A",)],
        FEATURE_CHOICES,
        FEATURE_CHOICES,
        ["classification", "clustering"],
        [None, object()],
        [(), ("x",)],
        [(), ("L",)],
        [(), ("Ctx",)],
    ):
        stub = Stub(task=task, algorithms=algorithms, conditions=conditions,
                    targets=targets, dataset=dataset, evaluation=evaluation,
                    locations=locations, context=context, source=source)
        expected_present = oracle_presence(stub)
        b = grade(stub)
        assert set(b.present) == expected_present, stub
        assert b.total == pytest.approx(float(oracle_total(expected_present)))
        assert b.accepted == (oracle_total(expected_present) >= 50)
        cases += 1
    assert cases == 4 * 2 * 3 * 3 * 2 * 2 * 2 * 2 * 2


class TestRepositoryReport:
    def test_empty_store_reports_zeros(self):
        from oak.store import TripleStore

        report = repository_report(TripleStore()).as_dict()
        assert report == {
            "items": 0, "basic_pct": 0.0, "principal_pct": 0.0,
            "subordinal_pct": 0.0, "rate": 0.0,
        }

    def test_corpus_counts_thirty_items(self, corpus_store):
        report = repository_report(corpus_store)
        assert report.items == 30

    def test_rate_is_mean_of_stored_grades(self, corpus_store):
        grades = [
            int(t.object.lexical)
            for t in corpus_store.match(None, GRADE_IRI, None)
        ]
        assert len(grades) == 30
        expected = sum(grades) / len(grades)
        assert repository_report(corpus_store).rate == pytest.approx(expected)

    def test_group_percentages_match_witness_recount(self, corpus_store):
        from oak.terms import AGRICOMO, Iri
        from oak.vocabulary import kmap_subjects

        def has(subject, predicate):
            return bool(corpus_store.match(subject, Iri(AGRICOMO + predicate), None))

        subjects = kmap_subjects(corpus_store)
        basic = sum(1 for s in subjects if has(s, "definedIn"))
        principal = sum(
            1 for s in subjects
            if has(s, "hasAlgorithm") and has(s, "hasCondition") and has(s, "predicts")
        )
        subordinal = sum(
            1 for s in subjects
            if has(s, "hasDataset")
            and (has(s, "hasEvaluation") or has(s, "evaluatedBy"))
            and has(s, "hasLocation")
            and (has(s, "hasContext") or has(s, "relatedTo"))
        )
        report = repository_report(corpus_store)
        n = len(subjects)
        assert report.basic_pct == pytest.approx(100.0 * basic / n)
        assert report.principal_pct == pytest.approx(100.0 * principal / n)
        assert report.subordinal_pct == pytest.approx(100.0 * subordinal / n)


def sigma(z: float) -> float:
    return 1.0 / (1.0 + math.exp(-z))


ALL_HUNDRED = {g: (100.0, 100.0) for g in ("G1", "G2", "G3", "G4", "G5")}


class TestFoca:
    def test_all_hundred_hits_sigma_6_90(self):
        result = foca_score(FocaInput(goal_grades=ALL_HUNDRED, lexp=1, nl=0))
        assert result.z == pytest.approx(6.90, abs=1e-12)
        assert abs(result.mu - sigma(6.90)) < 1e-9

    def test_no_answer_bit_shifts_z_to_4_40(self):
        result = foca_score(FocaInput(goal_grades=ALL_HUNDRED, lexp=1, nl=1))
        assert result.z == pytest.approx(4.40, abs=1e-12)
        assert abs(result.mu - sigma(4.40)) < 1e-9

    def test_verification_sheet_grades_hit_sigma_5_65(self):
        grades = {
            "G1": (75.0, 75.0),
            "G2": (100.0, 50.0, None),  # the unanswered question is excluded
            "G3": (100.0,),
            "G4": (100.0,),
            "G5": (80.0,),
        }
        result = foca_score(FocaInput(goal_grades=grades, lexp=1, nl=0))
        assert result.z == pytest.approx(5.65, abs=1e-12)
        assert abs(result.mu - sigma(5.65)) < 1e-9
        assert result.goal_means["G2"] == pytest.approx(75.0)

    def test_unanswered_questions_are_excluded_not_zeroed(self):
        quiet = dict(co=0, re=0, cp=0, nl=0)
        with_none = foca_score(FocaInput(goal_grades={"G1": (100.0, None)}, **quiet))
        without = foca_score(FocaInput(goal_grades={"G1": (100.0,)}, **quiet))
        assert with_none.z == without.z

    @given(st.lists(st.floats(0, 100, allow_nan=False), min_size=1, max_size=6))
    def test_sb_zero_makes_mu_invariant_under_g1(self, g1):
        base = {"G2": (100.0,), "G3": (100.0,), "G4": (100.0,)}
        a = foca_score(FocaInput(goal_grades={**base, "G1": tuple(g1)}, sb=0))
        b = foca_score(FocaInput(goal_grades={**base, "G1": (0.0,)}, sb=0))
        assert a.mu == b.mu
        assert a.z == b.z

    def test_g5_carries_no_weight(self):
        low = foca_score(FocaInput(goal_grades={**ALL_HUNDRED, "G5": (0.0,)}))
        high = foca_score(FocaInput(goal_grades=ALL_HUNDRED))
        assert low.z == high.z
        assert low.goal_means["G5"] == 0.0

    def test_out_of_range_grade_rejected(self):
        with pytest.raises(ValueError):
            foca_score(FocaInput(goal_grades={"G1": (101.0,)}))
        with pytest.raises(ValueError):
            foca_score(FocaInput(goal_grades={"G1": (-0.5,)}))

    def test_silent_goal_with_flag_up_is_inconsistent(self):
        with pytest.raises(InconsistentFocaInput):
            foca_score(FocaInput(goal_grades={"G2": (100.0,)}, sb=1, nl=0))

    def test_silent_goal_tolerated_when_no_answer_bit_set(self):
        result = foca_score(FocaInput(goal_grades={"G2": (100.0,)}, sb=1, nl=1))
        assert result.goal_means["G1"] is None

    def test_silent_goal_tolerated_when_flag_down(self):
        result = foca_score(
            FocaInput(goal_grades={"G2": (100.0,)}, sb=0, re=0, cp=0, nl=0)
        )
        expected = -0.44 - 0.66 + 0.02 * 100
        assert result.z == pytest.approx(expected)

    def test_as_dict_shape(self):
        d = foca_score(FocaInput(goal_grades=ALL_HUNDRED)).as_dict()
        assert set(d) == {"z", "mu", "goal_means"}
