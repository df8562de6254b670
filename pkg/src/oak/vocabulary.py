"""IRI constants and store-reading helpers shared by the modules that put
knowledge items into triples or read them back (wrapper, assessment, search).
"""

from __future__ import annotations

from .model import (
    DEFINED_IN,
    EVALUATED_BY,
    HAS_ALGORITHM,
    HAS_CONDITION,
    HAS_CONTEXT,
    HAS_DATASET,
    HAS_EVALUATION,
    HAS_EVALUATION_METRIC,
    HAS_LOCATION,
    HAS_STATE,
    HAS_TRANSFORMATION,
    PREDICTS,
    RELATED_TO,
)
from .agri import TASK_CONCEPTS
from .terms import AGRICOMO, AGRIKMAPS, RDF_TYPE, RDFS_LABEL, Iri
from .store import TripleStore


def com(local: str) -> Iri:
    """An IRI in the ontology namespace."""
    return Iri(AGRICOMO + local)


def kmap(local: str) -> Iri:
    """An IRI in the instance namespace."""
    return Iri(AGRIKMAPS + local)


def local_name(iri: Iri | str) -> str:
    value = iri.value if isinstance(iri, Iri) else iri
    return value.rsplit("#", 1)[-1]


def in_instance_namespace(iri: Iri) -> bool:
    return iri.value.startswith(AGRIKMAPS)


def in_ontology_namespace(iri: Iri) -> bool:
    return iri.value.startswith(AGRICOMO)


TYPE_IRI = Iri(RDF_TYPE)
LABEL_IRI = Iri(RDFS_LABEL)
KNOWLEDGE_MODEL_IRI = com("KnowledgeModel")
GRADE_IRI = com("grade")
HAS_YEAR_IRI = com("hasYear")
HAS_SIZE_IRI = com("hasSize")
HAS_IDENTIFIER_IRI = com("hasIdentifier")

P_CONDITION = com(HAS_CONDITION)
P_PREDICTS = com(PREDICTS)
P_ALGORITHM = com(HAS_ALGORITHM)
P_TRANSFORMATION = com(HAS_TRANSFORMATION)
P_STATE = com(HAS_STATE)
P_LOCATION = com(HAS_LOCATION)
P_CONTEXT = com(HAS_CONTEXT)
P_RELATED = com(RELATED_TO)
P_DATASET = com(HAS_DATASET)
P_EVALUATION = com(HAS_EVALUATION)
P_EVALUATED_BY = com(EVALUATED_BY)
P_METRIC = com(HAS_EVALUATION_METRIC)
P_DEFINED_IN = com(DEFINED_IN)

CONCEPT_BY_TASK = dict(TASK_CONCEPTS)
TASK_BY_CONCEPT = {v: k for k, v in TASK_CONCEPTS.items()}


def kmap_subjects(store: TripleStore) -> list[Iri]:
    """Subjects typed as knowledge models, sorted by IRI."""
    return sorted(
        (t.subject for t in store.match(None, TYPE_IRI, KNOWLEDGE_MODEL_IRI)),
        key=lambda i: i.value,
    )


def _objects(store: TripleStore, subject: Iri, predicate: Iri) -> list:
    return [t.object for t in store.match(subject, predicate, None)]


def role_objects(store: TripleStore, subject: Iri) -> dict[str, list]:
    """One hop over the role links of a knowledge item. Synonym predicates
    (hasEvaluation/evaluatedBy, hasContext/relatedTo) are merged."""
    evaluation = _objects(store, subject, P_EVALUATION)
    for obj in _objects(store, subject, P_EVALUATED_BY):
        if obj not in evaluation:
            evaluation.append(obj)
    context = _objects(store, subject, P_CONTEXT)
    for obj in _objects(store, subject, P_RELATED):
        if obj not in context:
            context.append(obj)
    return {
        "algorithms": _objects(store, subject, P_ALGORITHM),
        "conditions": _objects(store, subject, P_CONDITION),
        "targets": _objects(store, subject, P_PREDICTS),
        "dataset": _objects(store, subject, P_DATASET),
        "evaluation": evaluation,
        "locations": _objects(store, subject, P_LOCATION),
        "context": context,
        "source": _objects(store, subject, P_DEFINED_IN),
    }


def task_of(store: TripleStore, subject: Iri) -> str | None:
    for t in store.match(subject, TYPE_IRI, None):
        if isinstance(t.object, Iri) and in_ontology_namespace(t.object):
            task = TASK_BY_CONCEPT.get(local_name(t.object))
            if task:
                return task
    return None
