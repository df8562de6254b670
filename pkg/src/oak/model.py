"""The typed knowledge-map model.

Concepts and transformations form the background ontology; instances, states
and relations form one knowledge representation each. Everything here is an
immutable value: operations that "change" an ontology return a new one, so
values can be shared freely across threads.

Two namespaces exist, "domain" for agricultural entities and "computing" for
data-mining entities; the namespace decides which IRI prefix an element gets
when it reaches RDF.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace

DOMAIN = "domain"
COMPUTING = "computing"

# Element kinds for lexicon partitions.
CONCEPT = "concept"
INSTANCE = "instance"
RELATION = "relation"
TRANSFORMATION = "transformation"
STATE_LABEL = "state-label"
KINDS = (CONCEPT, INSTANCE, RELATION, TRANSFORMATION, STATE_LABEL)

# Relation vocabulary. subClassOf/isA/hasTransformation/hasState are the
# core four; the rest carry the extended roles of a knowledge item.
SUBCLASSOF = "subClassOf"
ISA = "isA"
HAS_TRANSFORMATION = "hasTransformation"
HAS_STATE = "hasState"
HAS_CONDITION = "hasCondition"
PREDICTS = "predicts"
HAS_ALGORITHM = "hasAlgorithm"
HAS_LOCATION = "hasLocation"
HAS_CONTEXT = "hasContext"
RELATED_TO = "relatedTo"
HAS_DATASET = "hasDataset"
HAS_EVALUATION = "hasEvaluation"
EVALUATED_BY = "evaluatedBy"
HAS_EVALUATION_METRIC = "hasEvaluationMetric"
DEFINED_IN = "definedIn"

RELATION_VOCABULARY = frozenset({
    SUBCLASSOF, ISA, HAS_TRANSFORMATION, HAS_STATE, HAS_CONDITION, PREDICTS,
    HAS_ALGORITHM, HAS_LOCATION, HAS_CONTEXT, RELATED_TO, HAS_DATASET,
    HAS_EVALUATION, EVALUATED_BY, HAS_EVALUATION_METRIC, DEFINED_IN,
    "affects", "hasDisease",
})

IDENTITY = "identity"
PIECEWISE = "piecewise-tiers"
RESCALE = "linear-rescale"
ALGORITHM_REF = "algorithm-ref"

TASKS = ("classification", "regression", "clustering", "association")

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ModelError(Exception):
    pass


class TermNotFound(ModelError):
    def __init__(self, surface: str, kind: str) -> None:
        super().__init__(f"no {kind} entry for {surface!r}")
        self.surface = surface
        self.kind = kind


class OutOfDomain(ModelError):
    pass


class UndeclaredConcept(ModelError):
    pass


class SubjectMismatch(ModelError):
    pass


def normalize_term(surface: str) -> str:
    """Fold a surface term for lexicon lookup: lowercase, hyphens and
    underscores become spaces, other punctuation is dropped, whitespace
    collapses. "Multi-Linear Regression" and "multi linear  regression"
    normalize identically."""
    chars = []
    for ch in surface.lower():
        if ch in "-_":
            chars.append(" ")
        elif ch.isalnum() or ch.isspace():
            chars.append(ch)
    return " ".join("".join(chars).split())


@dataclass(frozen=True, slots=True)
class ConceptId:
    local: str
    namespace: str = DOMAIN

    def __post_init__(self) -> None:
        if not _NAME_RE.match(self.local):
            raise ValueError(f"bad concept name: {self.local!r}")
        if self.namespace not in (DOMAIN, COMPUTING):
            raise ValueError(f"bad namespace: {self.namespace!r}")


@dataclass(frozen=True, slots=True)
class Tier:
    lower: float
    upper: float
    lower_open: bool
    upper_open: bool
    label: str

    def contains(self, x: float) -> bool:
        above = x > self.lower if self.lower_open else x >= self.lower
        below = x < self.upper if self.upper_open else x <= self.upper
        return above and below


@dataclass(frozen=True, slots=True)
class Transformation:
    id: str
    kind: str
    subject_concept: ConceptId
    tiers: tuple[Tier, ...] = ()
    rescale: tuple[tuple[float, float], tuple[float, float]] | None = None
    algorithm_task: str | None = None

    def __post_init__(self) -> None:
        if self.kind == PIECEWISE:
            self._check_tiers()
        elif self.tiers:
            raise ValueError("tiers only belong to piecewise transformations")
        if self.kind == RESCALE and self.rescale is None:
            raise ValueError("linear-rescale needs source and target ranges")
        if self.kind == ALGORITHM_REF:
            if self.algorithm_task not in TASKS:
                raise ValueError(f"bad algorithm task: {self.algorithm_task!r}")
            if self.subject_concept.namespace != COMPUTING:
                raise ValueError("algorithm references attach to computing concepts")
        elif self.algorithm_task is not None:
            raise ValueError("algorithm-task only belongs to algorithm references")

    def _check_tiers(self) -> None:
        if not self.tiers:
            raise ValueError("piecewise transformation needs tiers")
        labels = [t.label for t in self.tiers]
        if len(set(labels)) != len(labels):
            raise ValueError("tier labels must be distinct")
        for t in self.tiers:
            if t.lower > t.upper:
                raise ValueError(f"tier bounds out of order: {t}")
            if t.lower == t.upper and (t.lower_open or t.upper_open):
                raise ValueError(f"degenerate open tier: {t}")
        for left, right in zip(self.tiers, self.tiers[1:]):
            if left.upper != right.lower:
                raise ValueError(
                    f"gap or overlap between tiers at {left.upper} / {right.lower}"
                )
            # The shared bound must belong to exactly one side.
            if left.upper_open == right.lower_open:
                raise ValueError(f"bound {left.upper} owned by both or neither tier")

    def tier_labels(self) -> tuple[str, ...]:
        return tuple(t.label for t in self.tiers)

    def domain(self) -> tuple[float, float]:
        if self.kind == PIECEWISE:
            return (self.tiers[0].lower, self.tiers[-1].upper)
        if self.kind == RESCALE:
            return self.rescale[0]
        return (-math.inf, math.inf)


@dataclass(frozen=True, slots=True)
class Instance:
    id: str
    concept: ConceptId

    @property
    def namespace(self) -> str:
        return self.concept.namespace


@dataclass(frozen=True, slots=True)
class StateValue:
    owner: str
    via: str
    value: float | int | str
    unit: str | None = None


@dataclass(frozen=True, slots=True)
class Relation:
    subject: str
    predicate: str
    object: "str | StateValue"

    def __post_init__(self) -> None:
        if self.predicate not in RELATION_VOCABULARY:
            raise ValueError(f"unknown relation predicate: {self.predicate!r}")


class Lexicon:
    """Surface terms to element ids, partitioned by element kind.

    Within one partition a normalized surface maps to at most one id. Build
    once from (kind, surface, id) entries; instances of this class are
    treated as immutable."""

    def __init__(self, entries: dict[str, dict[str, str]]) -> None:
        self._entries = entries

    @classmethod
    def build(cls, entries) -> "Lexicon":
        table: dict[str, dict[str, str]] = {kind: {} for kind in KINDS}
        for kind, surface, element_id in entries:
            if kind not in table:
                raise ValueError(f"unknown partition {kind!r}")
            key = normalize_term(surface)
            if not key:
                raise ValueError(f"surface {surface!r} normalizes to nothing")
            existing = table[kind].get(key)
            if existing is not None and existing != element_id:
                raise ValueError(
                    f"{kind} surface {key!r} maps to both {existing} and {element_id}"
                )
            table[kind][key] = element_id
        return cls(table)

    def merged_with(self, entries) -> "Lexicon":
        flat = [
            (kind, surface, element_id)
            for kind, partition in self._entries.items()
            for surface, element_id in partition.items()
        ]
        return Lexicon.build(flat + list(entries))

    def get(self, surface: str, kind: str) -> str | None:
        return self._entries.get(kind, {}).get(normalize_term(surface))

    def ids(self, kind: str) -> set[str]:
        return set(self._entries.get(kind, {}).values())

    def surfaces(self, kind: str) -> dict[str, str]:
        return dict(self._entries.get(kind, {}))


def resolve_term(lexicon: Lexicon, surface: str, kind: str) -> str:
    """The element id a surface term names, or TermNotFound."""
    if not surface:
        raise ValueError("empty surface term")
    element_id = lexicon.get(surface, kind)
    if element_id is None:
        raise TermNotFound(surface, kind)
    return element_id


@dataclass(frozen=True)
class Ontology:
    concepts: frozenset[ConceptId]
    relations: frozenset[Relation]
    transformations: frozenset[Transformation]
    lexicon: Lexicon
    prefixes: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_concept_by_local", {c.local: c for c in self.concepts})
        object.__setattr__(self, "_transformation_by_id", {t.id: t for t in self.transformations})

    def concept(self, local: str) -> ConceptId | None:
        return self._concept_by_local.get(local)

    def transformation(self, tid: str) -> Transformation | None:
        return self._transformation_by_id.get(tid)

    def has_relation(self, subject: str, predicate: str, object) -> bool:
        return Relation(subject, predicate, object) in self.relations

    def transformations_of(self, concept_local: str) -> tuple[str, ...]:
        return tuple(sorted(
            r.object for r in self.relations
            if r.predicate == HAS_TRANSFORMATION and r.subject == concept_local
            and isinstance(r.object, str)
        ))

    def parents(self, concept_local: str) -> tuple[str, ...]:
        return tuple(sorted(
            r.object for r in self.relations
            if r.predicate == SUBCLASSOF and r.subject == concept_local
            and isinstance(r.object, str)
        ))

    def ancestors(self, concept_local: str) -> tuple[str, ...]:
        seen: list[str] = []
        frontier = [concept_local]
        while frontier:
            current = frontier.pop()
            for parent in self.parents(current):
                if parent not in seen:
                    seen.append(parent)
                    frontier.append(parent)
        return tuple(seen)


def attach_transformation(ontology: Ontology, c: ConceptId, t: Transformation) -> Ontology:
    """Ontology with t attached to c via hasTransformation. Idempotent."""
    if c not in ontology.concepts:
        raise UndeclaredConcept(f"concept {c.local!r} is not declared")
    if t.subject_concept != c:
        raise SubjectMismatch(
            f"transformation {t.id} belongs to {t.subject_concept.local}, not {c.local}"
        )
    edge = Relation(c.local, HAS_TRANSFORMATION, t.id)
    if edge in ontology.relations and t in ontology.transformations:
        return ontology
    return replace(
        ontology,
        relations=ontology.relations | {edge},
        transformations=ontology.transformations | {t},
    )


def validate_hierarchy(ontology: Ontology) -> list[str]:
    """Violations of the concept-tree rules: dangling endpoints, cycles,
    more than one root per namespace. Empty list means the hierarchy is a
    valid forest of one tree per namespace."""
    violations: list[str] = []
    declared = {c.local for c in ontology.concepts}
    edges: dict[str, list[str]] = {}
    for r in ontology.relations:
        if r.predicate != SUBCLASSOF:
            continue
        if r.subject not in declared:
            violations.append(f"dangling: {r.subject}")
        if not isinstance(r.object, str) or r.object not in declared:
            violations.append(f"dangling: {r.object}")
            continue
        if r.subject in declared:
            edges.setdefault(r.subject, []).append(r.object)

    state: dict[str, int] = {}

    def walk(node: str, path: list[str]) -> None:
        state[node] = 1
        for parent in edges.get(node, ()):  # child -> parent edges
            if state.get(parent) == 1:
                cycle = path + [node, parent]
                start = cycle.index(parent)
                violations.append("cycle: " + " -> ".join(cycle[start:]))
            elif state.get(parent, 0) == 0:
                walk(parent, path + [node])
        state[node] = 2

    for node in sorted(edges):
        if state.get(node, 0) == 0:
            walk(node, [])

    for namespace in (DOMAIN, COMPUTING):
        members = {c.local for c in ontology.concepts if c.namespace == namespace}
        roots = sorted(m for m in members if not set(edges.get(m, ())) & members)
        if len(roots) > 1:
            violations.append(f"multiple roots in {namespace} namespace: {', '.join(roots)}")
    return violations


def apply_transformation(t: Transformation, x: float):
    """Apply a value transformation: identity passes through, piecewise
    returns the owning tier's label, linear-rescale maps affinely."""
    if t.kind == IDENTITY:
        return x
    if t.kind == PIECEWISE:
        for tier in t.tiers:
            if tier.contains(x):
                return tier.label
        raise OutOfDomain(f"{x} outside every tier of {t.id}")
    if t.kind == RESCALE:
        (s0, s1), (t0, t1) = t.rescale
        if not (min(s0, s1) <= x <= max(s0, s1)):
            raise OutOfDomain(f"{x} outside source range of {t.id}")
        return t0 + (x - s0) * (t1 - t0) / (s1 - s0)
    raise ValueError(f"{t.id} does not transform values (kind={t.kind})")


@dataclass(frozen=True)
class KnowledgeRepresentation:
    """One mined-knowledge item: the (instances, relations, transformations,
    states) quadruple plus its grade and literal annotations.

    Annotations are (subject id, property, value) rows covering the handful
    of literal facts a faithful document needs (labels, dataset size, article
    year and identifier) without stretching the quadruple itself."""

    id: str
    instances: frozenset[Instance]
    relations: frozenset[Relation]
    transformations: frozenset[str]
    states: frozenset[StateValue]
    grade: int
    annotations: frozenset[tuple] = frozenset()


def validate_representation(kr: KnowledgeRepresentation, ontology: Ontology) -> list[str]:
    """Structural violations of a knowledge representation.

    Relation subjects must be declared instances; objects may also name
    ontology elements or instances living outside this representation (the
    published form of an item references locations, contexts and peer
    instances it does not own). Each state must be backed by the full
    isA / hasTransformation / hasState chain."""
    violations: list[str] = []
    ids = {i.id for i in kr.instances}

    if not 0 <= kr.grade <= 100:
        violations.append(f"grade {kr.grade} outside 0..100")

    for inst in sorted(kr.instances, key=lambda i: i.id):
        isa = [r for r in kr.relations if r.subject == inst.id and r.predicate == ISA]
        if len(isa) != 1:
            violations.append(f"{inst.id}: expected exactly one isA link, found {len(isa)}")
        elif isa[0].object != inst.concept.local:
            violations.append(f"{inst.id}: isA names {isa[0].object}, not {inst.concept.local}")
        if ontology.concept(inst.concept.local) is None:
            violations.append(f"{inst.id}: concept {inst.concept.local} undeclared")

    for r in sorted(kr.relations, key=lambda r: (r.subject, r.predicate, str(r.object))):
        if r.subject not in ids:
            violations.append(f"relation subject {r.subject} is not a declared instance")
        if r.predicate in (HAS_TRANSFORMATION, HAS_ALGORITHM, HAS_EVALUATION_METRIC):
            if r.object not in kr.transformations:
                violations.append(
                    f"{r.subject} {r.predicate} {r.object}: transformation not in the quadruple"
                )
        if r.predicate == HAS_STATE and r.object not in kr.states:
            violations.append(f"{r.subject}: hasState value missing from the state set")

    by_id = {i.id: i for i in kr.instances}
    for sv in sorted(kr.states, key=lambda s: (s.owner, s.via, str(s.value))):
        owner = by_id.get(sv.owner)
        if owner is None:
            violations.append(f"state owner {sv.owner} is not a declared instance")
            continue
        chain = [
            Relation(sv.owner, ISA, owner.concept.local),
            Relation(sv.owner, HAS_STATE, sv),
        ]
        for link in chain:
            if link not in kr.relations:
                violations.append(
                    f"state on {sv.owner}: missing {link.predicate} link in the relation set"
                )
        # The transformation leg: ordinary instances link hasTransformation,
        # evaluation instances link their metric via hasEvaluationMetric.
        if (
            Relation(sv.owner, HAS_TRANSFORMATION, sv.via) not in kr.relations
            and Relation(sv.owner, HAS_EVALUATION_METRIC, sv.via) not in kr.relations
        ):
            violations.append(
                f"state on {sv.owner}: missing hasTransformation link in the relation set"
            )
        if not ontology.has_relation(owner.concept.local, HAS_TRANSFORMATION, sv.via):
            violations.append(
                f"state on {sv.owner}: {owner.concept.local} does not carry {sv.via}"
            )
    return violations
