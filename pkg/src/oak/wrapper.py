"""Turn mined data-mining results into graded knowledge representations.

The pipeline runs in five steps over a :class:`MinedKnowledgeDescriptor`:
model identification, concept identification, instance generation,
transformation identification and state generation.  ``wrap`` composes
them, extends the result with dataset, evaluation, location, context and
source links, grades it and returns a
:class:`~oak.model.KnowledgeRepresentation` ready for serialization.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import NamedTuple

from . import assessment
from .agri import TASK_CONCEPTS, build_ontology, spaced
from .model import (
    COMPUTING,
    CONCEPT,
    DEFINED_IN,
    HAS_ALGORITHM,
    HAS_CONDITION,
    HAS_CONTEXT,
    HAS_DATASET,
    HAS_EVALUATION,
    HAS_EVALUATION_METRIC,
    HAS_LOCATION,
    HAS_STATE,
    HAS_TRANSFORMATION,
    IDENTITY,
    ISA,
    PIECEWISE,
    PREDICTS,
    RELATED_TO,
    TASKS,
    ConceptId,
    Instance,
    KnowledgeRepresentation,
    Ontology,
    OutOfDomain,
    Relation,
    StateValue,
    TermNotFound,
    Transformation,
    TRANSFORMATION,
    apply_transformation,
    attach_transformation,
    resolve_term,
    validate_representation,
)
from .store import TripleStore
from .terms import (
    DEFAULT_PREFIXES,
    OWL_NAMED_INDIVIDUAL,
    Iri,
    Literal,
    PrefixMap,
    Triple,
    integer,
    number,
    string,
)
from .turtle import serialize_turtle
from . import vocabulary as vocab

_NAMED_INDIVIDUAL = Iri(OWL_NAMED_INDIVIDUAL)


class WrapError(Exception):
    """Base class for wrapping failures."""


class InvalidDescriptor(WrapError):
    pass


class InvalidTask(WrapError):
    pass


class UnknownAlgorithm(WrapError):
    def __init__(self, names: list[str]):
        self.names = list(names)
        super().__init__("unknown algorithm name(s): " + ", ".join(self.names))


class UnresolvedConcepts(WrapError):
    def __init__(self, surfaces: list[str]):
        self.surfaces = list(surfaces)
        super().__init__("unresolved concept term(s): " + ", ".join(self.surfaces))


class UnresolvedTransformation(WrapError):
    pass


class InvalidState(WrapError):
    pass


class BelowThreshold(WrapError):
    def __init__(self, total: float):
        self.total = total
        super().__init__(
            f"representation grades {total:.1f}, below the acceptance threshold"
        )


@dataclass(frozen=True, slots=True)
class FeatureSpec:
    """One condition or target: a concept term plus optional details."""

    term: str
    transformation: str | None = None
    state: object | None = None
    unit: str | None = None


@dataclass(frozen=True, slots=True)
class DatasetSpec:
    name: str
    size: int | None = None


@dataclass(frozen=True, slots=True)
class EvalSpec:
    metric: str
    value: float


@dataclass(frozen=True, slots=True)
class SourceSpec:
    article_id: str
    title: str | None = None
    year: int | None = None


_TOP_KEYS = {
    "task",
    "algorithms",
    "conditions",
    "targets",
    "dataset",
    "evaluation",
    "locations",
    "context",
    "source",
}


@dataclass(frozen=True, slots=True)
class MinedKnowledgeDescriptor:
    """Structured description of one mined result, as handed to the wrapper."""

    task: str
    algorithms: tuple[str, ...]
    conditions: tuple[FeatureSpec, ...]
    targets: tuple[FeatureSpec, ...] = ()
    dataset: DatasetSpec | None = None
    evaluation: tuple[EvalSpec, ...] = ()
    locations: tuple[str, ...] = ()
    context: tuple[str, ...] = ()
    source: SourceSpec | None = None

    def validate(self) -> None:
        if not self.algorithms:
            raise InvalidDescriptor("a descriptor needs at least one algorithm")
        if not self.conditions:
            raise InvalidDescriptor("a descriptor needs at least one condition")
        if self.task != "clustering" and not self.targets:
            raise InvalidDescriptor(
                f"a {self.task} descriptor needs at least one target"
            )
        if self.task == "clustering":
            for t in self.targets:
                if t.transformation is not None or t.state is not None:
                    raise InvalidDescriptor(
                        "clustering targets are cluster outputs and carry "
                        "no transformation or state"
                    )
        seen: set[str] = set()
        for spec in self.conditions + self.targets:
            if not spec.term or not spec.term.strip():
                raise InvalidDescriptor("empty concept term")
            key = spec.term.strip().lower()
            if key in seen:
                raise InvalidDescriptor(f"duplicate feature term: {spec.term}")
            seen.add(key)

    @classmethod
    def from_dict(cls, data: dict) -> "MinedKnowledgeDescriptor":
        if not isinstance(data, dict):
            raise InvalidDescriptor("descriptor must be a JSON object")
        unknown = set(data) - _TOP_KEYS
        if unknown:
            raise InvalidDescriptor(
                "unknown descriptor field(s): " + ", ".join(sorted(unknown))
            )
        try:
            task = data["task"]
            algorithms = tuple(data["algorithms"])
            conditions = tuple(_feature(f) for f in data["conditions"])
        except KeyError as exc:
            raise InvalidDescriptor(f"missing required field: {exc.args[0]}") from None
        targets = tuple(_feature(f) for f in data.get("targets", ()))
        dataset = None
        if data.get("dataset") is not None:
            d = data["dataset"]
            dataset = DatasetSpec(name=d["name"], size=d.get("size"))
        evaluation = tuple(
            EvalSpec(metric=e["metric"], value=e["value"])
            for e in data.get("evaluation", ())
        )
        source = None
        if data.get("source") is not None:
            s = data["source"]
            source = SourceSpec(
                article_id=s["article_id"],
                title=s.get("title"),
                year=s.get("year"),
            )
        desc = cls(
            task=task,
            algorithms=algorithms,
            conditions=conditions,
            targets=targets,
            dataset=dataset,
            evaluation=evaluation,
            locations=tuple(data.get("locations", ())),
            context=tuple(data.get("context", ())),
            source=source,
        )
        desc.validate()
        return desc

    @classmethod
    def from_json(cls, text: str) -> "MinedKnowledgeDescriptor":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidDescriptor(f"descriptor is not valid JSON: {exc}") from None
        return cls.from_dict(data)


def _feature(raw: dict | str) -> FeatureSpec:
    if isinstance(raw, str):
        return FeatureSpec(term=raw)
    if not isinstance(raw, dict):
        raise InvalidDescriptor(f"bad feature entry: {raw!r}")
    unknown = set(raw) - {"concept", "transformation", "state", "unit"}
    if unknown:
        raise InvalidDescriptor(
            "unknown feature field(s): " + ", ".join(sorted(unknown))
        )
    if "concept" not in raw:
        raise InvalidDescriptor("feature entry without a concept term")
    return FeatureSpec(
        term=raw["concept"],
        transformation=raw.get("transformation"),
        state=raw.get("state"),
        unit=raw.get("unit"),
    )


class PatternKind(NamedTuple):
    """Which equation shapes the output, and whether it carries fact states."""

    task: str
    form: str  # "process-knowledge" or "fact-knowledge"


_SUFFIX_RE = re.compile(r"_(\d+)$")


def next_suffix(store: TripleStore | None) -> int:
    """Smallest integer above every numbered id already in the store."""
    if store is None:
        return 1
    highest = 0
    for subject in store.subjects():
        if not vocab.in_instance_namespace(subject):
            continue
        m = _SUFFIX_RE.search(vocab.local_name(subject))
        if m:
            highest = max(highest, int(m.group(1)))
    return highest + 1


def identify_model(
    descriptor: MinedKnowledgeDescriptor,
    ontology: Ontology,
    suffix: int,
) -> tuple[PatternKind, Instance, tuple[str, ...]]:
    """Resolve the task to a model concept and the algorithm names to ids."""
    if descriptor.task not in TASKS:
        raise InvalidTask(
            f"unknown task {descriptor.task!r}; expected one of "
            + ", ".join(TASKS)
        )
    form = "process-knowledge"
    if any(
        spec.state is not None
        for spec in descriptor.conditions + descriptor.targets
    ):
        form = "fact-knowledge"
    kind = PatternKind(task=descriptor.task, form=form)

    concept_local = TASK_CONCEPTS[descriptor.task]
    kmap = Instance(
        id=f"{concept_local}_{suffix:03d}",
        concept=ConceptId(concept_local, COMPUTING),
    )

    algorithms: list[str] = []
    missing: list[str] = []
    for name in descriptor.algorithms:
        try:
            resolved = resolve_term(ontology.lexicon, name, TRANSFORMATION)
        except TermNotFound:
            missing.append(name)
            continue
        if not resolved.startswith("Algorithm_"):
            missing.append(name)
            continue
        algorithms.append(resolved)
    if missing:
        raise UnknownAlgorithm(missing)
    return kind, kmap, tuple(algorithms)


def identify_concepts(
    descriptor: MinedKnowledgeDescriptor,
    ontology: Ontology,
) -> dict[str, ConceptId]:
    """Map every concept term in the descriptor to a declared concept.

    Returns a dict keyed by the raw surface term.  All failures are
    collected so the caller sees the full list at once.
    """
    surfaces: list[str] = [s.term for s in descriptor.conditions]
    surfaces += [s.term for s in descriptor.targets]
    surfaces += list(descriptor.locations)
    surfaces += list(descriptor.context)

    resolved: dict[str, ConceptId] = {}
    missing: list[str] = []
    for surface in surfaces:
        if surface in resolved:
            continue
        try:
            local = resolve_term(ontology.lexicon, surface, CONCEPT)
        except TermNotFound:
            missing.append(surface)
            continue
        concept = ontology.concept(local)
        assert concept is not None
        resolved[surface] = concept
    if missing:
        raise UnresolvedConcepts(missing)
    return resolved


def generate_instances(
    descriptor: MinedKnowledgeDescriptor,
    concepts: dict[str, ConceptId],
    kmap: Instance,
    suffix: int,
) -> tuple[dict[str, Instance], list[Relation]]:
    """Create one instance per condition and target, linked to the model.

    Returns the instances keyed by feature term and the hasCondition /
    predicts relations.  A clustering descriptor without explicit targets
    gets a Cluster instance as its predicted output.
    """
    tag = f"{suffix:03d}"
    instances: dict[str, Instance] = {}
    relations: list[Relation] = []

    for spec in descriptor.conditions:
        inst = Instance(id=f"{concepts[spec.term].local}_{tag}", concept=concepts[spec.term])
        instances[spec.term] = inst
        relations.append(Relation(kmap.id, HAS_CONDITION, inst.id))

    for spec in descriptor.targets:
        inst = Instance(id=f"{concepts[spec.term].local}_{tag}", concept=concepts[spec.term])
        instances[spec.term] = inst
        relations.append(Relation(kmap.id, PREDICTS, inst.id))

    if descriptor.task == "clustering" and not descriptor.targets:
        cluster = Instance(id=f"Cluster_{tag}", concept=ConceptId("Cluster", COMPUTING))
        instances["\x00cluster"] = cluster
        relations.append(Relation(kmap.id, PREDICTS, cluster.id))

    return instances, relations


def identify_transformations(
    descriptor: MinedKnowledgeDescriptor,
    ontology: Ontology,
    concepts: dict[str, ConceptId],
) -> tuple[dict[str, str], Ontology]:
    """Pick a transformation id for each feature.

    Explicit terms are resolved through the lexicon and must belong to
    the feature's concept.  Absent terms default to the concept's
    identity transformation; if the ontology does not carry one yet it
    is created and attached, and the extended ontology is returned
    alongside the mapping.  Clustering targets get no transformation.
    """
    chosen: dict[str, str] = {}
    effective = ontology

    def pick(spec: FeatureSpec) -> None:
        nonlocal effective
        concept = concepts[spec.term]
        if spec.transformation is not None:
            try:
                t_id = resolve_term(ontology.lexicon, spec.transformation, TRANSFORMATION)
            except TermNotFound:
                raise UnresolvedTransformation(
                    f"unknown transformation term {spec.transformation!r} "
                    f"for {spec.term!r}"
                ) from None
            t = effective.transformation(t_id)
            assert t is not None
            if t.subject_concept != concept:
                raise UnresolvedTransformation(
                    f"{t_id} transforms {t.subject_concept.local}, not {concept.local}"
                )
            chosen[spec.term] = t_id
            return
        default_id = f"Transformation_{concept.local}"
        if effective.transformation(default_id) is None:
            effective = attach_transformation(
                effective,
                concept,
                Transformation(id=default_id, kind=IDENTITY, subject_concept=concept),
            )
        chosen[spec.term] = default_id

    for spec in descriptor.conditions:
        pick(spec)
    if descriptor.task != "clustering":
        for spec in descriptor.targets:
            pick(spec)
    return chosen, effective


def generate_states(
    descriptor: MinedKnowledgeDescriptor,
    ontology: Ontology,
    instances: dict[str, Instance],
    transformations: dict[str, str],
) -> list[StateValue]:
    """Build state values for every feature that carries one.

    Labels must name a tier of the feature's transformation; numbers
    must fall inside its domain.
    """
    states: list[StateValue] = []
    for spec in descriptor.conditions + descriptor.targets:
        if spec.state is None:
            continue
        if spec.term not in transformations:
            raise InvalidState(
                f"{spec.term!r} carries a state but has no transformation"
            )
        t_id = transformations[spec.term]
        t = ontology.transformation(t_id)
        assert t is not None
        value = spec.state
        if isinstance(value, str):
            if t.kind != PIECEWISE or value not in t.tier_labels():
                raise InvalidState(
                    f"{value!r} is not a state label of {t_id}"
                )
        elif isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidState(f"state for {spec.term!r} must be a number or label")
        else:
            try:
                apply_transformation(t, float(value))
            except OutOfDomain as exc:
                raise InvalidState(str(exc)) from None
        states.append(
            StateValue(
                owner=instances[spec.term].id,
                via=t_id,
                value=value,
                unit=spec.unit,
            )
        )
    return states


def wrap(
    descriptor: MinedKnowledgeDescriptor,
    ontology: Ontology | None = None,
    store: TripleStore | None = None,
    suffix: int | None = None,
) -> KnowledgeRepresentation:
    """Run the full pipeline and return a graded representation.

    ``suffix`` fixes the numeric id tag; by default the next free one in
    ``store`` is used (or 1 with no store).  Raises
    :class:`BelowThreshold` when the grade falls under the acceptance
    cutoff, so nothing under-documented enters a repository silently.
    """
    if ontology is None:
        ontology = build_ontology()
    descriptor.validate()
    if suffix is None:
        suffix = next_suffix(store)
    tag = f"{suffix:03d}"

    kind, kmap, algorithms = identify_model(descriptor, ontology, suffix)
    concepts = identify_concepts(descriptor, ontology)
    instances, relations = generate_instances(descriptor, concepts, kmap, suffix)
    chosen, effective = identify_transformations(descriptor, ontology, concepts)
    states = generate_states(descriptor, effective, instances, chosen)

    all_instances: dict[str, Instance] = {kmap.id: kmap}
    for inst in instances.values():
        all_instances[inst.id] = inst

    transformation_ids = set(algorithms)
    for name in algorithms:
        relations.append(Relation(kmap.id, HAS_ALGORITHM, name))
    for term, t_id in chosen.items():
        transformation_ids.add(t_id)
        relations.append(Relation(instances[term].id, HAS_TRANSFORMATION, t_id))
    for sv in states:
        relations.append(Relation(sv.owner, HAS_STATE, sv))

    annotations: set[tuple[str, str, object]] = set()

    if descriptor.dataset is not None:
        ds = Instance(id=f"Dataset_{tag}", concept=ConceptId("Dataset", COMPUTING))
        all_instances[ds.id] = ds
        relations.append(Relation(kmap.id, HAS_DATASET, ds.id))
        annotations.add((ds.id, "label", descriptor.dataset.name))
        if descriptor.dataset.size is not None:
            annotations.add((ds.id, "size", int(descriptor.dataset.size)))

    if descriptor.evaluation:
        ev = Instance(id=f"Evaluation_{tag}", concept=ConceptId("Evaluation", COMPUTING))
        all_instances[ev.id] = ev
        relations.append(Relation(kmap.id, HAS_EVALUATION, ev.id))
        for spec in descriptor.evaluation:
            try:
                m_id = resolve_term(ontology.lexicon, spec.metric, TRANSFORMATION)
            except TermNotFound:
                raise UnresolvedTransformation(
                    f"unknown evaluation metric {spec.metric!r}"
                ) from None
            if not m_id.startswith("Metric_"):
                raise UnresolvedTransformation(
                    f"{spec.metric!r} is not an evaluation metric"
                )
            transformation_ids.add(m_id)
            relations.append(Relation(ev.id, HAS_EVALUATION_METRIC, m_id))
            sv = StateValue(owner=ev.id, via=m_id, value=spec.value)
            states.append(sv)
            relations.append(Relation(ev.id, HAS_STATE, sv))

    for surface in descriptor.locations:
        relations.append(Relation(kmap.id, HAS_LOCATION, concepts[surface].local))
    for surface in descriptor.context:
        relations.append(Relation(kmap.id, HAS_CONTEXT, concepts[surface].local))
        relations.append(Relation(kmap.id, RELATED_TO, concepts[surface].local))

    if descriptor.source is not None:
        art = Instance(id=f"Article_{tag}", concept=ConceptId("Article", COMPUTING))
        all_instances[art.id] = art
        relations.append(Relation(kmap.id, DEFINED_IN, art.id))
        annotations.add((art.id, "identifier", descriptor.source.article_id))
        if descriptor.source.title is not None:
            annotations.add((art.id, "label", descriptor.source.title))
        if descriptor.source.year is not None:
            annotations.add((art.id, "year", int(descriptor.source.year)))

    for inst in all_instances.values():
        relations.append(Relation(inst.id, ISA, inst.concept.local))

    breakdown = assessment.grade(descriptor)
    if not breakdown.accepted:
        raise BelowThreshold(breakdown.total)

    kr = KnowledgeRepresentation(
        id=kmap.id,
        instances=frozenset(all_instances.values()),
        relations=frozenset(relations),
        transformations=frozenset(transformation_ids),
        states=frozenset(states),
        grade=breakdown.rounded(),
        annotations=frozenset(annotations),
    )
    problems = validate_representation(kr, effective)
    if problems:
        raise WrapError(
            "wrapped representation failed validation: " + "; ".join(problems)
        )
    return kr


_ANNOTATION_IRIS = {
    "label": vocab.LABEL_IRI,
    "year": vocab.HAS_YEAR_IRI,
    "size": vocab.HAS_SIZE_IRI,
    "identifier": vocab.HAS_IDENTIFIER_IRI,
}
_ANNOTATION_NAMES = {iri: name for name, iri in _ANNOTATION_IRIS.items()}


def _object_iri(obj: str, kr: KnowledgeRepresentation, ontology: Ontology) -> Iri:
    """Place a relation object in the right namespace."""
    for inst in kr.instances:
        if inst.id == obj:
            return vocab.kmap(obj)
    if ontology.concept(obj) is not None or ontology.transformation(obj) is not None:
        return vocab.com(obj)
    if _SUFFIX_RE.search(obj):
        return vocab.kmap(obj)
    return vocab.com(obj)


def _state_literal(sv: StateValue) -> Literal:
    if isinstance(sv.value, str):
        return string(sv.value)
    if sv.via.startswith("Metric_"):
        metric = sv.via[len("Metric_"):]
        return string(f"{number(sv.value).lexical} {metric}")
    if sv.unit is not None:
        return string(f"{number(sv.value).lexical} {sv.unit}")
    return number(sv.value)


def kr_triples(
    kr: KnowledgeRepresentation,
    ontology: Ontology | None = None,
) -> list[Triple]:
    """Flatten a representation into RDF triples."""
    if ontology is None:
        ontology = build_ontology()
    kmap_iri = vocab.kmap(kr.id)
    triples: list[Triple] = [
        Triple(kmap_iri, vocab.TYPE_IRI, _NAMED_INDIVIDUAL),
        Triple(kmap_iri, vocab.TYPE_IRI, vocab.KNOWLEDGE_MODEL_IRI),
        Triple(kmap_iri, vocab.LABEL_IRI, string(spaced(kr.id))),
        Triple(kmap_iri, vocab.GRADE_IRI, integer(kr.grade)),
    ]
    for rel in kr.relations:
        subject = vocab.kmap(rel.subject)
        if rel.predicate == ISA:
            assert isinstance(rel.object, str)
            triples.append(Triple(subject, vocab.TYPE_IRI, vocab.com(rel.object)))
        elif rel.predicate == HAS_STATE:
            assert isinstance(rel.object, StateValue)
            triples.append(
                Triple(subject, vocab.P_STATE, _state_literal(rel.object))
            )
        else:
            assert isinstance(rel.object, str)
            triples.append(
                Triple(
                    subject,
                    vocab.com(rel.predicate),
                    _object_iri(rel.object, kr, ontology),
                )
            )
    for subject_id, name, value in kr.annotations:
        iri = _ANNOTATION_IRIS[name]
        lit = string(str(value)) if name in ("label", "identifier") else integer(int(value))
        triples.append(Triple(vocab.kmap(subject_id), iri, lit))
    return triples


def to_turtle(
    kr: KnowledgeRepresentation,
    ontology: Ontology | None = None,
    prefixes: PrefixMap | None = None,
) -> str:
    """Serialize one representation as canonical Turtle."""
    if prefixes is None:
        prefixes = PrefixMap(DEFAULT_PREFIXES)
    return serialize_turtle(kr_triples(kr, ontology), prefixes)


def _parse_state(
    owner: str,
    lexical: Literal,
    via_default: str | None,
    metric_ids: set[str],
) -> StateValue | None:
    """Reverse a state literal back into a StateValue, if possible."""
    if lexical.datatype in ("integer", "decimal"):
        value: object = (
            int(lexical.lexical) if lexical.datatype == "integer" else float(lexical.lexical)
        )
        if via_default is None:
            return None
        return StateValue(owner=owner, via=via_default, value=value)
    text = lexical.lexical
    head, _, tail = text.rpartition(" ")
    if head and tail:
        try:
            value = int(head) if re.fullmatch(r"[+-]?\d+", head) else float(head)
        except ValueError:
            value = None
        if value is not None:
            metric_id = f"Metric_{tail}"
            if metric_id in metric_ids:
                return StateValue(owner=owner, via=metric_id, value=value)
            if via_default is not None:
                return StateValue(owner=owner, via=via_default, value=value, unit=tail)
    if via_default is None:
        return None
    return StateValue(owner=owner, via=via_default, value=text)


def from_store(
    store: TripleStore,
    kmap_id: str,
    ontology: Ontology | None = None,
) -> KnowledgeRepresentation:
    """Rebuild a representation from its triples in a store.

    Raises KeyError when no knowledge model with that id exists.
    """
    if ontology is None:
        ontology = build_ontology()
    kmap_iri = vocab.kmap(kmap_id)
    typings = [
        t.object
        for t in store.match(subject=kmap_iri, predicate=vocab.TYPE_IRI)
        if isinstance(t.object, Iri)
    ]
    if vocab.KNOWLEDGE_MODEL_IRI not in typings:
        raise KeyError(f"no knowledge model {kmap_id!r} in the store")

    def concept_of(iri: Iri, *, skip_model: bool) -> ConceptId | None:
        for t in store.match(subject=iri, predicate=vocab.TYPE_IRI):
            if not isinstance(t.object, Iri) or t.object == _NAMED_INDIVIDUAL:
                continue
            if skip_model and t.object == vocab.KNOWLEDGE_MODEL_IRI:
                continue
            local = vocab.local_name(t.object.value)
            concept = ontology.concept(local)
            if concept is not None:
                return concept
        return None

    kmap_concept = concept_of(kmap_iri, skip_model=True)
    if kmap_concept is None:
        raise KeyError(f"{kmap_id!r} has no model concept typing")

    instances: dict[str, Instance] = {
        kmap_id: Instance(id=kmap_id, concept=kmap_concept)
    }
    relations: set[Relation] = set()
    transformations: set[str] = set()
    states: set[StateValue] = set()
    annotations: set[tuple[str, str, object]] = set()
    grade = 0

    role_predicates = {
        vocab.P_CONDITION, vocab.P_PREDICTS, vocab.P_DATASET,
        vocab.P_EVALUATION, vocab.P_EVALUATED_BY, vocab.P_DEFINED_IN,
        vocab.P_LOCATION, vocab.P_CONTEXT, vocab.P_RELATED,
    }
    linked: list[str] = []
    for t in store.match(subject=kmap_iri):
        if t.predicate == vocab.TYPE_IRI:
            continue
        if t.predicate == vocab.LABEL_IRI:
            continue  # regenerated from the id
        if t.predicate == vocab.GRADE_IRI and isinstance(t.object, Literal):
            grade = int(t.object.lexical)
            continue
        if t.predicate == vocab.P_ALGORITHM and isinstance(t.object, Iri):
            local = vocab.local_name(t.object.value)
            transformations.add(local)
            relations.add(Relation(kmap_id, HAS_ALGORITHM, local))
            continue
        if t.predicate in role_predicates and isinstance(t.object, Iri):
            local = vocab.local_name(t.object.value)
            predicate = vocab.local_name(t.predicate.value)
            relations.add(Relation(kmap_id, predicate, local))
            if vocab.in_instance_namespace(t.object):
                linked.append(local)
            continue
        if isinstance(t.object, Literal) and t.predicate in _ANNOTATION_NAMES:
            name = _ANNOTATION_NAMES[t.predicate]
            value: object = (
                int(t.object.lexical) if name in ("year", "size") else t.object.lexical
            )
            annotations.add((kmap_id, name, value))

    for local in linked:
        iri = vocab.kmap(local)
        concept = concept_of(iri, skip_model=False)
        if concept is None:
            continue  # external reference, keep the relation only
        instances[local] = Instance(id=local, concept=concept)
        metric_ids: set[str] = set()
        via_default: str | None = None
        for t in store.match(subject=iri):
            if t.predicate == vocab.P_TRANSFORMATION and isinstance(t.object, Iri):
                via_default = vocab.local_name(t.object.value)
            elif t.predicate == vocab.P_METRIC and isinstance(t.object, Iri):
                metric_ids.add(vocab.local_name(t.object.value))
        if via_default is not None:
            transformations.add(via_default)
            relations.add(Relation(local, HAS_TRANSFORMATION, via_default))
        for m in sorted(metric_ids):
            transformations.add(m)
            relations.add(Relation(local, HAS_EVALUATION_METRIC, m))
        for t in store.match(subject=iri, predicate=vocab.P_STATE):
            if not isinstance(t.object, Literal):
                continue
            sv = _parse_state(local, t.object, via_default, metric_ids)
            if sv is not None:
                states.add(sv)
                relations.add(Relation(local, HAS_STATE, sv))
        for t in store.match(subject=iri):
            if isinstance(t.object, Literal) and t.predicate in _ANNOTATION_NAMES:
                name = _ANNOTATION_NAMES[t.predicate]
                value = (
                    int(t.object.lexical) if name in ("year", "size") else t.object.lexical
                )
                annotations.add((local, name, value))

    for inst in instances.values():
        relations.add(Relation(inst.id, ISA, inst.concept.local))

    return KnowledgeRepresentation(
        id=kmap_id,
        instances=frozenset(instances.values()),
        relations=frozenset(relations),
        transformations=frozenset(transformations),
        states=frozenset(states),
        grade=grade,
        annotations=frozenset(annotations),
    )
