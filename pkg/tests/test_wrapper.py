import json
import pathlib

import pytest

from oak.model import (
    HAS_ALGORITHM,
    HAS_CONDITION,
    HAS_STATE,
    HAS_TRANSFORMATION,
    ISA,
    PREDICTS,
    validate_representation,
)
from oak.store import TripleStore
from oak.turtle import parse_turtle
from oak.vocabulary import kmap_subjects, local_name
from oak.wrapper import (
    BelowThreshold,
    InvalidDescriptor,
    InvalidState,
    InvalidTask,
    MinedKnowledgeDescriptor,
    UnknownAlgorithm,
    UnresolvedConcepts,
    UnresolvedTransformation,
    from_store,
    kr_triples,
    next_suffix,
    to_turtle,
    wrap,
)

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def base_dict(**overrides):
    data = {
        "task": "classification",
        "algorithms": ["CPANN"],
        "conditions": [{"concept": "Soil PH", "transformation": "ph tiers"}],
        "targets": [{"concept": "Yield", "transformation": "yield tier3"}],
        "source": {"article_id": "src-0001", "title": "T", "year": 2015},
    }
    data.update(overrides)
    return data


def descriptor(**overrides) -> MinedKnowledgeDescriptor:
    return MinedKnowledgeDescriptor.from_dict(base_dict(**overrides))


class TestFromDict:
    def test_round_trip_of_fixture(self):
        data = json.loads((FIXTURES / "classifier_010.json").read_text())
        d = MinedKnowledgeDescriptor.from_dict(data)
        assert d.task == "classification"
        assert len(d.conditions) == 7
        assert d.source.year == 2016

    def test_unknown_top_level_field_rejected(self):
        with pytest.raises(InvalidDescriptor, match="confidence"):
            MinedKnowledgeDescriptor.from_dict(base_dict(confidence=0.9))

    def test_unknown_feature_field_rejected(self):
        bad = base_dict(conditions=[{"concept": "Rainfall", "scale": "log"}])
        with pytest.raises(InvalidDescriptor, match="scale"):
            MinedKnowledgeDescriptor.from_dict(bad)

    @pytest.mark.parametrize("missing", ["task", "algorithms", "conditions"])
    def test_missing_required_field(self, missing):
        data = base_dict()
        del data[missing]
        with pytest.raises(InvalidDescriptor, match=missing):
            MinedKnowledgeDescriptor.from_dict(data)

    def test_feature_may_be_a_bare_string(self):
        d = descriptor(conditions=["Rainfall"])
        assert d.conditions[0].term == "Rainfall"
        assert d.conditions[0].transformation is None

    def test_non_object_payload_rejected(self):
        with pytest.raises(InvalidDescriptor):
            MinedKnowledgeDescriptor.from_dict(["not", "a", "mapping"])

    def test_from_json_reports_bad_json(self):
        with pytest.raises(InvalidDescriptor, match="JSON"):
            MinedKnowledgeDescriptor.from_json("{not json")

    def test_duplicate_feature_terms_rejected(self):
        bad = base_dict(conditions=["Rainfall", {"concept": "rainfall"}])
        with pytest.raises(InvalidDescriptor, match="duplicate"):
            MinedKnowledgeDescriptor.from_dict(bad)

    def test_condition_duplicating_a_target_rejected(self):
        bad = base_dict(conditions=["Yield"])
        with pytest.raises(InvalidDescriptor, match="duplicate"):
            MinedKnowledgeDescriptor.from_dict(bad)


class TestValidate:
    def test_needs_an_algorithm(self):
        with pytest.raises(InvalidDescriptor, match="algorithm"):
            descriptor(algorithms=[])

    def test_needs_a_condition(self):
        with pytest.raises(InvalidDescriptor, match="condition"):
            descriptor(conditions=[])

    def test_prediction_tasks_need_a_target(self):
        with pytest.raises(InvalidDescriptor, match="target"):
            descriptor(task="regression", targets=[])

    def test_clustering_needs_no_target(self):
        d = descriptor(task="clustering", targets=[])
        assert d.targets == ()

    def test_clustering_target_must_stay_bare(self):
        with pytest.raises(InvalidDescriptor, match="clustering"):
            descriptor(
                task="clustering",
                targets=[{"concept": "Yield", "transformation": "yield tier3"}],
            )
        with pytest.raises(InvalidDescriptor, match="clustering"):
            descriptor(task="clustering", targets=[{"concept": "Yield", "state": 5}])


class TestResolution:
    def test_unknown_task(self, ontology):
        d = descriptor()
        object.__setattr__(d, "task", "forecasting")
        with pytest.raises(InvalidTask, match="forecasting"):
            wrap(d, ontology)

    def test_unknown_algorithms_collected(self, ontology):
        d = descriptor(algorithms=["CPANN", "AlphaNet", "BetaNet"])
        with pytest.raises(UnknownAlgorithm) as exc:
            wrap(d, ontology)
        assert "AlphaNet" in str(exc.value)
        assert "BetaNet" in str(exc.value)
        assert "CPANN" not in str(exc.value)

    def test_non_algorithm_transformation_is_not_an_algorithm(self, ontology):
        d = descriptor(algorithms=["ph tiers"])
        with pytest.raises(UnknownAlgorithm):
            wrap(d, ontology)

    def test_unresolved_concepts_collected(self, ontology):
        d = descriptor(
            conditions=["Sunspots", {"concept": "Soil PH"}],
            context=["Quinoa"],
        )
        with pytest.raises(UnresolvedConcepts) as exc:
            wrap(d, ontology)
        assert "Sunspots" in str(exc.value)
        assert "Quinoa" in str(exc.value)

    def test_unknown_transformation_term(self, ontology):
        d = descriptor(
            conditions=[{"concept": "Soil PH", "transformation": "log scale"}]
        )
        with pytest.raises(UnresolvedTransformation, match="log scale"):
            wrap(d, ontology)

    def test_transformation_must_belong_to_the_concept(self, ontology):
        d = descriptor(
            conditions=[{"concept": "Nitrogen", "transformation": "ph tiers"}]
        )
        with pytest.raises(UnresolvedTransformation):
            wrap(d, ontology)


class TestStates:
    def test_tier_label_state_accepted(self, ontology):
        d = descriptor(
            conditions=[
                {"concept": "Soil PH", "transformation": "ph tiers", "state": "Neutral"}
            ]
        )
        kr = wrap(d, ontology)
        (sv,) = [s for s in kr.states if s.owner == "SoilPH_001"]
        assert sv.value == "Neutral"
        assert sv.via == "Transformation_SoilPH_Tier5"

    def test_unknown_tier_label_rejected(self, ontology):
        d = descriptor(
            conditions=[
                {"concept": "Soil PH", "transformation": "ph tiers", "state": "Salty"}
            ]
        )
        with pytest.raises(InvalidState, match="Salty"):
            wrap(d, ontology)

    def test_numeric_state_outside_domain_rejected(self, ontology):
        d = descriptor(
            conditions=[
                {"concept": "Soil PH", "transformation": "ph tiers", "state": float("nan")}
            ]
        )
        with pytest.raises(InvalidState):
            wrap(d, ontology)

    def test_state_without_transformation_rejected(self, ontology):
        d = descriptor(task="clustering", targets=[],
                       conditions=[{"concept": "Soil PH", "state": 6.5}],
                       dataset={"name": "X"})
        # identity default still owns the state, so this wraps fine
        kr = wrap(d, ontology)
        assert any(s.value == 6.5 for s in kr.states)


class TestWrap:
    def test_fixture_descriptor_wraps_at_grade_60(self, ontology):
        data = json.loads((FIXTURES / "classifier_010.json").read_text())
        kr = wrap(MinedKnowledgeDescriptor.from_dict(data), ontology)
        assert kr.id == "Classifier_001"
        assert kr.grade == 60

    def test_below_threshold_rejected(self, ontology):
        d = descriptor(source=None)  # 40 principal points only
        with pytest.raises(BelowThreshold) as exc:
            wrap(d, ontology)
        assert exc.value.total == pytest.approx(40.0)

    def test_suffix_argument_fixes_the_id(self, ontology):
        kr = wrap(descriptor(), ontology, suffix=7)
        assert kr.id == "Classifier_007"
        assert any(i.id == "SoilPH_007" for i in kr.instances)

    def test_wrapped_representation_validates(self, ontology):
        kr = wrap(descriptor(), ontology)
        assert validate_representation(kr, ontology) == []

    def test_annotations_carry_source_and_dataset(self, ontology):
        d = descriptor(dataset={"name": "FieldScan", "size": 420})
        kr = wrap(d, ontology)
        notes = {(s, name): value for s, name, value in kr.annotations}
        assert notes[("Article_001", "identifier")] == "src-0001"
        assert notes[("Article_001", "year")] == 2015
        assert notes[("Dataset_001", "label")] == "FieldScan"
        assert notes[("Dataset_001", "size")] == 420


class TestPatternConformance:
    CORE = {ISA, HAS_ALGORITHM, HAS_CONDITION, HAS_TRANSFORMATION, PREDICTS,
            "definedIn"}

    def relation_names(self, kr):
        return {r.predicate for r in kr.relations}

    def test_classification_relations(self, ontology):
        kr = wrap(descriptor(), ontology)
        assert self.relation_names(kr) == self.CORE
        targets = [r.object for r in kr.relations if r.predicate == PREDICTS]
        assert targets == ["Yield_001"]

    def test_regression_relations(self, ontology):
        d = descriptor(
            task="regression",
            algorithms=["MLR"],
            targets=[{"concept": "Yield", "transformation": "yield"}],
        )
        kr = wrap(d, ontology)
        assert kr.id == "Regressor_001"
        assert self.relation_names(kr) == self.CORE

    def test_association_relations(self, ontology):
        d = descriptor(
            task="association",
            algorithms=["Apriori"],
            targets=[{"concept": "Yield", "transformation": "yield"}],
        )
        kr = wrap(d, ontology)
        assert kr.id == "Association_001"
        assert self.relation_names(kr) == self.CORE

    def test_clustering_predicts_a_cluster(self, ontology):
        d = descriptor(task="clustering", algorithms=["KMeans"], targets=[])
        kr = wrap(d, ontology)
        assert kr.id == "Clustering_001"
        targets = [r.object for r in kr.relations if r.predicate == PREDICTS]
        assert targets == ["Cluster_001"]
        cluster = next(i for i in kr.instances if i.id == "Cluster_001")
        assert cluster.concept.local == "Cluster"
        assert not any(
            r.predicate == HAS_TRANSFORMATION and r.subject == "Cluster_001"
            for r in kr.relations
        )

    def test_conditions_all_carry_transformation_legs(self, ontology):
        data = json.loads((FIXTURES / "classifier_010.json").read_text())
        kr = wrap(MinedKnowledgeDescriptor.from_dict(data), ontology)
        conditioned = {r.object for r in kr.relations if r.predicate == HAS_CONDITION}
        transformed = {
            r.subject for r in kr.relations if r.predicate == HAS_TRANSFORMATION
        }
        assert conditioned <= transformed

    def test_states_only_appear_in_fact_form(self, ontology):
        plain = wrap(descriptor(), ontology)
        assert HAS_STATE not in self.relation_names(plain)


class TestSuffixes:
    def test_empty_store_starts_at_one(self):
        assert next_suffix(None) == 1
        assert next_suffix(TripleStore()) == 1

    def test_ontology_triples_do_not_consume_suffixes(self, ontology):
        from oak.agri import ontology_triples

        store = TripleStore()
        store.insert_many(ontology_triples(ontology))
        assert next_suffix(store) == 1

    def test_allocation_skips_past_the_highest_used(self, ontology):
        store = TripleStore()
        kr = wrap(descriptor(), ontology, suffix=12)
        store.insert_many(kr_triples(kr, ontology))
        assert next_suffix(store) == 13
        kr2 = wrap(descriptor(), ontology, store=store)
        assert kr2.id == "Classifier_013"


class TestSerialization:
    def test_turtle_round_trip_preserves_triples(self, ontology):
        d = descriptor(
            dataset={"name": "FieldScan", "size": 420},
            evaluation=[{"metric": "Accuracy", "value": 81.2}],
            locations=["Ireland"],
            context=["Wheat"],
        )
        kr = wrap(d, ontology)
        text = to_turtle(kr, ontology)
        store = TripleStore()
        triples, _ = parse_turtle(text)
        store.insert_many(triples)
        assert set(store.match()) == set(kr_triples(kr, ontology))

    def test_from_store_is_a_fixpoint_on_the_corpus(self, ontology, corpus_store):
        from oak.agri import ontology_triples

        regenerated: set = set()
        for subject in kmap_subjects(corpus_store):
            kr = from_store(corpus_store, local_name(subject), ontology)
            regenerated |= set(kr_triples(kr, ontology))
        stored = set(corpus_store.match()) - set(ontology_triples(ontology))
        assert regenerated == stored

    def test_from_store_unknown_id(self, corpus_store):
        with pytest.raises(KeyError):
            from_store(corpus_store, "Classifier_999")

    def test_wrap_then_from_store_round_trips(self, ontology):
        d = descriptor(
            dataset={"name": "FieldScan", "size": 420},
            evaluation=[{"metric": "Accuracy", "value": 81.2}],
            locations=["Ireland"],
            context=["Wheat"],
        )
        kr = wrap(d, ontology)
        store = TripleStore()
        store.insert_many(kr_triples(kr, ontology))
        back = from_store(store, kr.id, ontology)
        assert set(kr_triples(back, ontology)) == set(kr_triples(kr, ontology))
        assert back.grade == kr.grade
