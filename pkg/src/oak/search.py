"""Keyword search over a knowledge repository.

Four stages, each a plain function: ``parse_search`` recognizes lexicon
terms and trigger words in the query text and fills a
:class:`SearchIntent`; ``generate_sparql`` picks one of ten query
templates for the intent; the query runs through :mod:`oak.sparql`; and
``assemble_results`` turns the solutions into
:class:`KnowledgeCard` values by expanding each matched item one hop
over its role links.

``run_search`` wires the stages together and also records an access
profile (which model elements and instance roles the query touched),
which is how coverage of the query templates is audited.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import sparql
from .agri import build_ontology
from .model import (
    COMPUTING,
    CONCEPT,
    RELATION_VOCABULARY,
    STATE_LABEL,
    TRANSFORMATION,
    Ontology,
)
from .store import TripleStore
from .terms import AGRICOMO, AGRIKMAPS, OWL, RDF, RDFS, Iri, Literal
from . import vocabulary as vocab


class SearchError(Exception):
    pass


class NoConceptsRecognized(SearchError):
    def __init__(self, tokens: list[str]):
        self.tokens = list(tokens)
        shown = ", ".join(repr(t) for t in self.tokens) or "nothing"
        super().__init__(f"no known terms in the query (unrecognized: {shown})")


class NoTemplate(SearchError):
    pass


@dataclass(frozen=True)
class SearchIntent:
    """What the query asks for, in slot form."""

    action: str  # describe | find-models | find-relations | find-transformations | find-by-dataset
    conditions: tuple[str, ...] = ()
    targets: tuple[str, ...] = ()
    target_states: tuple[str, ...] = ()
    locations: tuple[str, ...] = ()
    contexts: tuple[str, ...] = ()
    focus_instance: str | None = None
    focus_transformation: str | None = None
    focus_concept: str | None = None
    dataset_label: str | None = None

    def recognized(self) -> tuple[str, ...]:
        """Every recognized element id, in slot order, deduplicated.
        These are what the result page shows as refinable chips."""
        out: list[str] = []
        for value in (
            *self.targets, *self.target_states, *self.conditions,
            *self.contexts, *self.locations,
            self.focus_instance, self.focus_transformation, self.focus_concept,
            self.dataset_label,
        ):
            if value and value not in out:
                out.append(value)
        return tuple(out)


_STOPWORDS = {
    "the", "a", "an", "and", "or", "of", "to", "for", "from", "at", "by",
    "as", "is", "are", "was", "were", "be", "been", "being", "can", "could",
    "will", "would", "should", "may", "might", "do", "does", "did", "what",
    "which", "who", "whose", "when", "where", "how", "why", "that", "this",
    "these", "those", "it", "its", "their", "there", "get", "gets", "have",
    "has", "had", "basic", "relevant", "potential", "on",
}

_PREDICT_TRIGGERS = {"predict", "predicts", "predicting", "predicted", "prediction"}
_CONDITION_TRIGGERS = {"using", "use", "uses", "used", "with"}
_LOCATION_TRIGGERS = {"in", "within", "grown"}
_RELATION_TRIGGERS = {"relationship", "relationships", "relation", "relations", "between"}
_TRANSFORM_TRIGGERS = {
    "process", "processing", "processed", "method", "methods",
    "transform", "transformation", "transformations",
}
_DESCRIBE_TRIGGERS = {"information", "describe", "about", "detail", "details", "concepts"}
_DATASET_TRIGGERS = {"dataset", "datasets"}

_INSTANCE_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*_\d+\Z")
_EDGE_PUNCT = ".,?!;:'\"()[]"

_MAX_SPAN = 4


@dataclass
class _Hit:
    kind: str  # concept | transformation | state-label | instance
    id: str
    mode: str | None  # slot mode active when the span was read


def _lookup(ontology: Ontology, words: list[str]) -> tuple[str, str] | None:
    """Try a token span against the lexicon, longest partitions first:
    concepts, then transformations, then state labels.  A plural final
    word is retried in the singular."""
    text = " ".join(words)
    candidates = [text]
    if words[-1].endswith("s"):
        candidates.append(" ".join(words[:-1] + [words[-1][:-1]]))
    for candidate in candidates:
        for kind in (CONCEPT, TRANSFORMATION, STATE_LABEL):
            found = ontology.lexicon.get(candidate, kind)
            if found is not None:
                return kind, found
    return None


def parse_search(text: str, ontology: Ontology | None = None) -> SearchIntent:
    """Read a keyword query into an intent.

    Raises :class:`NoConceptsRecognized` when nothing in the query maps
    to a lexicon entry, an instance id or a dataset name."""
    if ontology is None:
        ontology = build_ontology()
    raw_tokens = [t.strip(_EDGE_PUNCT) for t in text.split()]
    raw_tokens = [t for t in raw_tokens if t]
    if not raw_tokens:
        raise NoConceptsRecognized([])

    hits: list[_Hit] = []
    unknown: list[str] = []
    dataset_label: str | None = None
    mode: str | None = None
    flags: set[str] = set()
    expect_dataset_name = False

    i = 0
    n = len(raw_tokens)
    while i < n:
        raw = raw_tokens[i]
        low = raw.lower()

        if expect_dataset_name and low not in _STOPWORDS:
            dataset_label = raw
            expect_dataset_name = False
            i += 1
            continue

        if low == "based" and i + 1 < n and raw_tokens[i + 1].lower() == "on":
            mode = "conditions"
            flags.add("models")
            i += 2
            continue
        if low in _PREDICT_TRIGGERS:
            mode = "targets"
            flags.add("models")
            i += 1
            continue
        if low in _CONDITION_TRIGGERS:
            mode = "conditions"
            i += 1
            continue
        if low in _DATASET_TRIGGERS:
            flags.add("dataset")
            expect_dataset_name = True
            i += 1
            continue
        if low in _RELATION_TRIGGERS:
            flags.add("relations")
            i += 1
            continue
        if low in _TRANSFORM_TRIGGERS:
            flags.add("transformations")
            i += 1
            continue
        if low in _DESCRIBE_TRIGGERS:
            flags.add("describe")
            i += 1
            continue
        if low in _LOCATION_TRIGGERS:
            mode = "locations"
            i += 1
            continue

        matched = False
        for length in range(min(_MAX_SPAN, n - i), 0, -1):
            found = _lookup(ontology, [t.lower() for t in raw_tokens[i:i + length]])
            if found is not None:
                hits.append(_Hit(kind=found[0], id=found[1], mode=mode))
                i += length
                matched = True
                break
        if matched:
            continue

        if _INSTANCE_RE.match(raw):
            hits.append(_Hit(kind="instance", id=raw, mode=mode))
            i += 1
            continue
        if low not in _STOPWORDS:
            unknown.append(raw)
        i += 1

    if not hits and dataset_label is None:
        raise NoConceptsRecognized(unknown)

    return _assemble_intent(ontology, hits, flags, dataset_label, unknown)


def _assemble_intent(
    ontology: Ontology,
    hits: list[_Hit],
    flags: set[str],
    dataset_label: str | None,
    unknown: list[str],
) -> SearchIntent:
    concepts = [h for h in hits if h.kind == CONCEPT]
    domain_concepts = [
        h for h in concepts
        if (c := ontology.concept(h.id)) is not None and c.namespace != COMPUTING
    ]
    instances = [h for h in hits if h.kind == "instance"]
    transformations = [h for h in hits if h.kind == TRANSFORMATION]
    states = [h.id for h in hits if h.kind == STATE_LABEL]

    def is_location(local: str) -> bool:
        return local == "Location" or "Location" in ontology.ancestors(local)

    def is_crop(local: str) -> bool:
        return local == "Crop" or "Crop" in ontology.ancestors(local)

    focus_instance = instances[0].id if instances else None
    focus_transformation = transformations[0].id if transformations else None
    focus_concept = (domain_concepts[0].id if domain_concepts
                     else concepts[0].id if concepts else None)

    # Action, in precedence order.
    if "dataset" in flags or dataset_label is not None:
        action = "find-by-dataset"
    elif "relations" in flags and len(concepts) >= 2:
        action = "find-relations"
    elif "transformations" in flags and concepts:
        action = "find-transformations"
    elif "models" in flags:
        action = "find-models"
    elif "describe" in flags and (focus_instance or focus_transformation or focus_concept):
        action = "describe"
    elif states or any(h.mode in ("targets", "conditions") for h in domain_concepts):
        action = "find-models"
    elif focus_instance or focus_transformation or focus_concept:
        action = "describe"
    else:
        raise NoConceptsRecognized(unknown)

    conditions: list[str] = []
    targets: list[str] = []
    locations: list[str] = []
    contexts: list[str] = []

    if action == "find-relations":
        conditions = [h.id for h in concepts[:2]]
    elif action == "find-models":
        for h in domain_concepts:
            if is_location(h.id):
                locations.append(h.id)
            elif h.mode == "targets":
                targets.append(h.id)
            elif h.mode == "locations" and is_crop(h.id):
                contexts.append(h.id)
            elif h.mode == "conditions":
                conditions.append(h.id)
            else:
                conditions.append(h.id)
        # A crop named next to a real target is the setting, not the target.
        if targets and any(not is_crop(t) for t in targets):
            for t in [t for t in targets if is_crop(t)]:
                targets.remove(t)
                contexts.append(t)

    return SearchIntent(
        action=action,
        conditions=tuple(dict.fromkeys(conditions)),
        targets=tuple(dict.fromkeys(targets)),
        target_states=tuple(dict.fromkeys(states)),
        locations=tuple(dict.fromkeys(locations)),
        contexts=tuple(dict.fromkeys(contexts)),
        focus_instance=focus_instance,
        focus_transformation=focus_transformation,
        focus_concept=focus_concept,
        dataset_label=dataset_label,
    )


# ---------------------------------------------------------------------------
# Query templates


class GeneratedQuery(str):
    """Query text that remembers which template produced it."""

    form: str

    def __new__(cls, form: str, text: str) -> "GeneratedQuery":
        obj = super().__new__(cls, text)
        obj.form = form
        return obj


_PREFIX_LINES = {
    "rdf": f"PREFIX rdf: <{RDF}>",
    "rdfs": f"PREFIX rdfs: <{RDFS}>",
    "owl": f"PREFIX owl: <{OWL}>",
    "AgriComO": f"PREFIX AgriComO: <{AGRICOMO}>",
    "AgriKMaps": f"PREFIX AgriKMaps: <{AGRIKMAPS}>",
}


def _query(form: str, prefixes: list[str], select: str, patterns: list[str]) -> GeneratedQuery:
    lines = [_PREFIX_LINES[p] for p in prefixes]
    lines.append(f"SELECT {select}")
    lines.append("WHERE {")
    lines.extend(f"    {p}" for p in patterns)
    lines.append("}")
    return GeneratedQuery(form, "\n".join(lines) + "\n")


def _condition_pairs(conditions: tuple[str, ...], subject: str = "?subject") -> list[str]:
    """The hasCondition / rdf:type pattern pair per condition concept.
    The first pair uses ?object; later ones number from 2."""
    patterns: list[str] = []
    for k, concept in enumerate(conditions):
        var = "?object" if k == 0 else f"?object{k + 1}"
        patterns.append(f"{subject} AgriComO:hasCondition {var} .")
        patterns.append(f"{var} rdf:type AgriComO:{concept} .")
    return patterns


def generate_sparql(intent: SearchIntent) -> GeneratedQuery:
    """Instantiate the query template matching the intent's shape.

    Raises :class:`NoTemplate` when no template fits (for example a
    find-models intent that recognized only a location)."""
    if intent.action == "find-by-dataset":
        if not intent.dataset_label:
            raise NoTemplate("dataset search needs a dataset name")
        label = intent.dataset_label.replace("\\", "\\\\").replace('"', '\\"')
        return _query(
            "QF10", ["rdfs", "AgriComO", "AgriKMaps"], "?subject",
            [
                "?subject AgriComO:hasDataset ?dataset .",
                f'?dataset rdfs:label "{label}" .',
            ],
        )

    if intent.action == "find-relations":
        if len(intent.conditions) < 2:
            raise NoTemplate("relation search needs two concepts")
        first, second = intent.conditions[:2]
        return _query(
            "QF6", ["AgriComO"], "*",
            [f"AgriComO:{first} ?predicate AgriComO:{second} ."],
        )

    if intent.action == "find-transformations":
        if not intent.focus_concept:
            raise NoTemplate("transformation search needs a concept")
        return _query(
            "QF5", ["AgriComO"], "?transformation",
            [f"AgriComO:{intent.focus_concept} AgriComO:hasTransformation ?transformation ."],
        )

    if intent.action == "describe":
        if intent.focus_instance:
            return _query(
                "QF2",
                ["rdf", "rdfs", "owl", "AgriComO", "AgriKMaps"], "*",
                [
                    f"AgriKMaps:{intent.focus_instance} ?predictive1 ?object1 .",
                    "?object1 ?predictive2 ?object2",
                ],
            )
        if intent.focus_transformation:
            return _query(
                "QF9", ["AgriComO"], "*",
                [
                    f"?subject AgriComO:hasAlgorithm AgriComO:{intent.focus_transformation} .",
                    "?subject ?predicate ?object .",
                ],
            )
        if intent.focus_concept:
            return _query(
                "QF1", ["AgriComO"], "*",
                [f"AgriComO:{intent.focus_concept} ?predicate ?object ."],
            )
        raise NoTemplate("nothing to describe")

    if intent.action == "find-models":
        if intent.target_states:
            state = intent.target_states[0].replace("\\", "\\\\").replace('"', '\\"')
            patterns = [
                "?subject AgriComO:predicts ?target .",
                f'?target AgriComO:hasState "{state}" .',
            ]
            if intent.locations:
                for location in intent.locations:
                    patterns.append(f"?subject AgriComO:hasLocation AgriComO:{location} .")
                return _query("QF8", ["rdf", "AgriComO", "AgriKMaps"], "?subject", patterns)
            patterns.append("?subject AgriComO:hasCondition ?condition .")
            return _query(
                "QF7", ["rdf", "AgriComO", "AgriKMaps"], "?subject ?condition", patterns
            )
        if intent.targets:
            patterns = [
                "?subject AgriComO:predicts ?target .",
                f"?target rdf:type AgriComO:{intent.targets[0]} .",
            ]
            for context in intent.contexts:
                patterns.append(f"?subject AgriComO:relatedTo AgriComO:{context} .")
            for location in intent.locations:
                patterns.append(f"?subject AgriComO:hasLocation AgriComO:{location} .")
            patterns.extend(_condition_pairs(intent.conditions))
            return _query("QF4", ["rdf", "AgriComO", "AgriKMaps"], "?subject", patterns)
        if intent.conditions:
            return _query(
                "QF3", ["rdf", "AgriComO", "AgriKMaps"], "?subject",
                _condition_pairs(intent.conditions),
            )
        if intent.focus_transformation:
            return _query(
                "QF9", ["AgriComO"], "*",
                [
                    f"?subject AgriComO:hasAlgorithm AgriComO:{intent.focus_transformation} .",
                    "?subject ?predicate ?object .",
                ],
            )
        raise NoTemplate("model search recognized no usable slot")

    raise NoTemplate(f"no template for action {intent.action!r}")


# ---------------------------------------------------------------------------
# Cards


@dataclass(frozen=True)
class CardFeature:
    instance: str
    concept: str | None = None
    transformation: str | None = None
    state: object | None = None
    unit: str | None = None

    def as_dict(self) -> dict:
        out: dict = {"instance": self.instance}
        for key in ("concept", "transformation", "state", "unit"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass(frozen=True)
class KnowledgeCard:
    kmap_id: str
    task: str | None
    grade: int | None
    algorithms: tuple[str, ...] = ()
    conditions: tuple[CardFeature, ...] = ()
    targets: tuple[CardFeature, ...] = ()
    dataset: dict | None = None
    evaluation: tuple[dict, ...] = ()
    locations: tuple[str, ...] = ()
    context: tuple[str, ...] = ()
    source: dict | None = None

    def as_dict(self) -> dict:
        return {
            "id": self.kmap_id,
            "task": self.task,
            "grade": self.grade,
            "algorithms": list(self.algorithms),
            "conditions": [c.as_dict() for c in self.conditions],
            "targets": [t.as_dict() for t in self.targets],
            "dataset": self.dataset,
            "evaluation": [dict(e) for e in self.evaluation],
            "locations": list(self.locations),
            "context": list(self.context),
            "source": self.source,
        }


def _literal_state(lex: Literal) -> tuple[object, str | None]:
    """A state literal as (value, suffix); the suffix is a unit or a
    metric name depending on who owns the state."""
    if lex.datatype == "integer":
        return int(lex.lexical), None
    if lex.datatype == "decimal":
        return float(lex.lexical), None
    head, _, tail = lex.lexical.rpartition(" ")
    if head and tail:
        try:
            value = int(head) if re.fullmatch(r"[+-]?\d+", head) else float(head)
            return value, tail
        except ValueError:
            pass
    return lex.lexical, None


def _feature_of(store: TripleStore, obj: Iri, ontology: Ontology) -> CardFeature:
    local = vocab.local_name(obj.value)
    concept = None
    for t in store.match(obj, vocab.TYPE_IRI, None):
        if isinstance(t.object, Iri) and vocab.in_ontology_namespace(t.object):
            candidate = vocab.local_name(t.object.value)
            if ontology.concept(candidate) is not None:
                concept = candidate
                break
    transformation = None
    for t in store.match(obj, vocab.P_TRANSFORMATION, None):
        if isinstance(t.object, Iri):
            transformation = vocab.local_name(t.object.value)
            break
    state = unit = None
    for t in store.match(obj, vocab.P_STATE, None):
        if isinstance(t.object, Literal):
            state, unit = _literal_state(t.object)
            break
    return CardFeature(
        instance=local, concept=concept,
        transformation=transformation, state=state, unit=unit,
    )


def _card_of(store: TripleStore, subject: Iri, ontology: Ontology) -> KnowledgeCard:
    local = vocab.local_name(subject.value)
    roles = vocab.role_objects(store, subject)

    grade: int | None = None
    for t in store.match(subject, vocab.GRADE_IRI, None):
        if isinstance(t.object, Literal):
            try:
                grade = int(t.object.lexical)
            except ValueError:
                pass

    algorithms = tuple(
        vocab.local_name(o.value) for o in roles["algorithms"] if isinstance(o, Iri)
    )
    conditions = tuple(
        _feature_of(store, o, ontology) for o in roles["conditions"] if isinstance(o, Iri)
    )
    targets = tuple(
        _feature_of(store, o, ontology) for o in roles["targets"] if isinstance(o, Iri)
    )

    dataset = None
    for o in roles["dataset"]:
        if not isinstance(o, Iri):
            continue
        entry: dict = {"instance": vocab.local_name(o.value)}
        for t in store.match(o, vocab.LABEL_IRI, None):
            if isinstance(t.object, Literal):
                entry["name"] = t.object.lexical
        for t in store.match(o, vocab.HAS_SIZE_IRI, None):
            if isinstance(t.object, Literal):
                entry["size"] = int(t.object.lexical)
        dataset = entry
        break

    evaluation: list[dict] = []
    for o in roles["evaluation"]:
        if not isinstance(o, Iri):
            continue
        for t in store.match(o, vocab.P_STATE, None):
            if isinstance(t.object, Literal):
                value, metric = _literal_state(t.object)
                entry = {"value": value}
                if metric is not None:
                    entry["metric"] = metric
                evaluation.append(entry)
    evaluation.sort(key=lambda e: (e.get("metric") or "", str(e["value"])))

    locations = tuple(
        vocab.local_name(o.value) for o in roles["locations"] if isinstance(o, Iri)
    )
    context = tuple(
        vocab.local_name(o.value) for o in roles["context"] if isinstance(o, Iri)
    )

    source = None
    for o in roles["source"]:
        if not isinstance(o, Iri):
            continue
        entry = {"article": vocab.local_name(o.value)}
        for t in store.match(o, vocab.HAS_IDENTIFIER_IRI, None):
            if isinstance(t.object, Literal):
                entry["identifier"] = t.object.lexical
        for t in store.match(o, vocab.LABEL_IRI, None):
            if isinstance(t.object, Literal):
                entry["title"] = t.object.lexical
        for t in store.match(o, vocab.HAS_YEAR_IRI, None):
            if isinstance(t.object, Literal):
                entry["year"] = int(t.object.lexical)
        source = entry
        break

    return KnowledgeCard(
        kmap_id=local,
        task=vocab.task_of(store, subject),
        grade=grade,
        algorithms=algorithms,
        conditions=conditions,
        targets=targets,
        dataset=dataset,
        evaluation=tuple(evaluation),
        locations=locations,
        context=context,
        source=source,
    )


def card_for(
    store: TripleStore,
    kmap_id: str,
    ontology: Ontology | None = None,
) -> KnowledgeCard | None:
    """The card of one stored knowledge item, or None if the id is not a
    knowledge model in this store."""
    if ontology is None:
        ontology = build_ontology()
    iri = vocab.kmap(kmap_id)
    if not store.match(iri, vocab.TYPE_IRI, vocab.KNOWLEDGE_MODEL_IRI):
        return None
    return _card_of(store, iri, ontology)


def assemble_results(
    table: sparql.SolutionTable,
    store: TripleStore,
    ontology: Ontology | None = None,
    extra_ids: tuple[str, ...] = (),
) -> list[KnowledgeCard]:
    """One card per distinct knowledge item appearing in the solutions.

    Any bound IRI typed as a knowledge model counts, so describe-style
    queries that return an item among their objects still produce its
    card.  Cards sort by grade descending, then id."""
    if ontology is None:
        ontology = build_ontology()
    candidates: list[Iri] = []
    seen: set[str] = set()

    def consider(iri: Iri) -> None:
        if iri.value in seen:
            return
        seen.add(iri.value)
        if store.match(iri, vocab.TYPE_IRI, vocab.KNOWLEDGE_MODEL_IRI):
            candidates.append(iri)

    for local in extra_ids:
        consider(vocab.kmap(local))
    for row in table.rows:
        for term in row:
            if isinstance(term, Iri):
                consider(term)

    cards = [_card_of(store, iri, ontology) for iri in candidates]
    cards.sort(key=lambda c: (-(c.grade if c.grade is not None else -1), c.kmap_id))
    return cards


# ---------------------------------------------------------------------------
# Access instrumentation

ELEMENTS = ("Concept", "Instance", "State", "Transformation", "Relation")
ROLES = (
    "KMap", "Algorithm", "Condition", "Target",
    "Dataset", "Evaluation", "Location", "Context",
)

_PREDICATE_ROLES = {
    "hasCondition": "Condition",
    "predicts": "Target",
    "hasAlgorithm": "Algorithm",
    "hasDataset": "Dataset",
    "hasEvaluation": "Evaluation",
    "evaluatedBy": "Evaluation",
    "hasEvaluationMetric": "Evaluation",
    "hasLocation": "Location",
    "hasContext": "Context",
    "relatedTo": "Context",
}


@dataclass(frozen=True)
class AccessRecord:
    """Which model elements and instance roles one query touched, as
    inputs (constants in the query) or outputs (bindings and card
    fields)."""

    form: str
    elements: frozenset[str]
    roles: frozenset[str]


def access_profile(
    form: str,
    query_text: str,
    table: sparql.SolutionTable,
    cards: list[KnowledgeCard],
    store: TripleStore,
    ontology: Ontology | None = None,
) -> AccessRecord:
    if ontology is None:
        ontology = build_ontology()
    elements: set[str] = set()
    roles: set[str] = set()

    def classify_constant(term) -> None:
        if not isinstance(term, Iri):
            return
        if vocab.in_instance_namespace(term):
            elements.add("Instance")
            if store.match(term, vocab.TYPE_IRI, vocab.KNOWLEDGE_MODEL_IRI):
                roles.add("KMap")
            return
        if vocab.in_ontology_namespace(term):
            local = vocab.local_name(term.value)
            if ontology.concept(local) is not None:
                elements.add("Concept")
                if local == "Location" or "Location" in ontology.ancestors(local):
                    roles.add("Location")
            elif ontology.transformation(local) is not None:
                elements.add("Transformation")
                if local.startswith("Algorithm_"):
                    roles.add("Algorithm")

    ast = sparql.parse_query(query_text)
    for pattern in ast.patterns:
        predicate = pattern.predicate
        if isinstance(predicate, sparql.Variable):
            elements.add("Relation")
        elif isinstance(predicate, Iri):
            local = vocab.local_name(predicate.value)
            if predicate == vocab.TYPE_IRI:
                elements.add("Concept")
            elif local in _PREDICATE_ROLES:
                elements.add("Relation")
                roles.add(_PREDICATE_ROLES[local])
            elif local in RELATION_VOCABULARY:
                elements.add("Relation")
            if local == "hasTransformation":
                elements.add("Transformation")
            if local == "hasState":
                elements.add("State")
        for term in (pattern.subject, pattern.object):
            classify_constant(term)

    for row in table.rows:
        for term in row:
            if isinstance(term, Iri):
                if vocab.in_instance_namespace(term):
                    elements.add("Instance")
                elif vocab.in_ontology_namespace(term):
                    local = vocab.local_name(term.value)
                    if ontology.concept(local) is not None:
                        elements.add("Concept")
                    elif ontology.transformation(local) is not None:
                        elements.add("Transformation")
                    elif local in RELATION_VOCABULARY:
                        elements.add("Relation")

    for card in cards:
        elements.add("Instance")
        roles.add("KMap")
        if card.task:
            elements.add("Concept")
        if card.algorithms:
            elements.add("Transformation")
            roles.add("Algorithm")
        if card.conditions:
            roles.add("Condition")
        if card.targets:
            roles.add("Target")
        for feature in card.conditions + card.targets:
            if feature.concept:
                elements.add("Concept")
            if feature.transformation:
                elements.add("Transformation")
            if feature.state is not None:
                elements.add("State")
        if card.dataset:
            roles.add("Dataset")
        if card.evaluation:
            roles.add("Evaluation")
            elements.add("State")
        if card.locations:
            roles.add("Location")
            elements.add("Concept")
        if card.context:
            roles.add("Context")
            elements.add("Concept")

    return AccessRecord(form=form, elements=frozenset(elements), roles=frozenset(roles))


# ---------------------------------------------------------------------------
# Front door


@dataclass(frozen=True)
class SearchOutcome:
    intent: SearchIntent
    query: GeneratedQuery
    table: sparql.SolutionTable
    cards: tuple[KnowledgeCard, ...]
    access: AccessRecord


def run_search(
    store: TripleStore,
    text: str,
    ontology: Ontology | None = None,
) -> SearchOutcome:
    """parse, compile, evaluate, assemble: the whole browser pipeline."""
    if ontology is None:
        ontology = build_ontology()
    intent = parse_search(text, ontology)
    query = generate_sparql(intent)
    table = sparql.evaluate(store, query)
    extra = (intent.focus_instance,) if intent.focus_instance else ()
    cards = tuple(assemble_results(table, store, ontology, extra_ids=extra))
    access = access_profile(query.form, str(query), table, cards, store, ontology)
    return SearchOutcome(
        intent=intent, query=query, table=table, cards=cards, access=access
    )
