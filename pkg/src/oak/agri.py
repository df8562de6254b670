"""The built-in agricultural ontology.

A compact but real vocabulary: crops, soil properties, weather, locations,
diseases on the domain side; data-mining models, datasets, evaluations and
articles on the computing side. Value transformations cover the identity
pass-through per measurable property plus two piecewise tier tables (soil pH
and crop yield), and the algorithm/metric references live here too.

The full production vocabulary this stands in for is much larger; everything
downstream only assumes the shapes declared here, so swapping in a bigger
ontology is a data change.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .model import (
    ALGORITHM_REF,
    COMPUTING,
    CONCEPT,
    DOMAIN,
    HAS_TRANSFORMATION,
    IDENTITY,
    PIECEWISE,
    RELATION,
    RELATION_VOCABULARY,
    STATE_LABEL,
    SUBCLASSOF,
    TRANSFORMATION,
    ConceptId,
    Lexicon,
    Ontology,
    Relation,
    Tier,
    Transformation,
    normalize_term,
)
from .terms import (
    AGRICOMO,
    DEFAULT_PREFIXES,
    OWL_CLASS,
    RDF_TYPE,
    RDFS_LABEL,
    RDFS_SUBCLASSOF,
    Iri,
    Triple,
    string,
)

INF = math.inf

# (local name, parent, namespace). Parents of None are namespace roots.
_CONCEPTS = [
    ("AgriEntity", None, DOMAIN),
    ("Crop", "AgriEntity", DOMAIN),
    ("Wheat", "Crop", DOMAIN),
    ("Maize", "Crop", DOMAIN),
    ("Rice", "Crop", DOMAIN),
    ("Soil", "AgriEntity", DOMAIN),
    ("SoilPH", "Soil", DOMAIN),
    ("Nitrogen", "Soil", DOMAIN),
    ("CEC", "Soil", DOMAIN),
    ("OrganicCarbon", "Soil", DOMAIN),
    ("SoilCa", "Soil", DOMAIN),
    ("SoilMG", "Soil", DOMAIN),
    ("SoilMoisture", "Soil", DOMAIN),
    ("Weather", "AgriEntity", DOMAIN),
    ("Temperature", "Weather", DOMAIN),
    ("Rainfall", "Weather", DOMAIN),
    ("Management", "AgriEntity", DOMAIN),
    ("SeedRate", "Management", DOMAIN),
    ("CropMetric", "AgriEntity", DOMAIN),
    ("Yield", "CropMetric", DOMAIN),
    ("Disease", "AgriEntity", DOMAIN),
    ("LeafRust", "Disease", DOMAIN),
    ("Location", "AgriEntity", DOMAIN),
    ("Country", "Location", DOMAIN),
    ("United_Kingdom", "Country", DOMAIN),
    ("Ireland", "Country", DOMAIN),
    ("Poland", "Country", DOMAIN),
    ("ComputingEntity", None, COMPUTING),
    ("DataMining", "ComputingEntity", COMPUTING),
    ("KnowledgeModel", "DataMining", COMPUTING),
    ("Classifier", "KnowledgeModel", COMPUTING),
    ("Regressor", "KnowledgeModel", COMPUTING),
    ("Clustering", "KnowledgeModel", COMPUTING),
    ("Association", "KnowledgeModel", COMPUTING),
    ("Cluster", "DataMining", COMPUTING),
    ("Rule", "DataMining", COMPUTING),
    ("Transformation", "ComputingEntity", COMPUTING),
    ("Dataset", "ComputingEntity", COMPUTING),
    ("Evaluation", "ComputingEntity", COMPUTING),
    ("Article", "ComputingEntity", COMPUTING),
]

#: Concept the kmap instance of each data-mining task is typed with.
TASK_CONCEPTS = {
    "classification": "Classifier",
    "regression": "Regressor",
    "clustering": "Clustering",
    "association": "Association",
}

# Domain concepts that denote measurable quantities; each gets an identity
# transformation named Transformation_<Concept>.
_MEASURABLE = [
    "SoilPH", "Nitrogen", "CEC", "OrganicCarbon", "SoilCa", "SoilMG",
    "SoilMoisture", "Temperature", "Rainfall", "SeedRate", "Yield",
]

_ALGORITHMS = [
    ("Algorithm_CPANN", "classification"),
    ("Algorithm_SKN", "classification"),
    ("Algorithm_XYF", "classification"),
    ("Algorithm_DecisionTree", "classification"),
    ("Algorithm_NeuralNetwork", "classification"),
    ("Algorithm_MLR", "regression"),
    ("Algorithm_PCA", "regression"),
    ("Algorithm_KMeans", "clustering"),
    ("Algorithm_Apriori", "association"),
    ("Algorithm_FPGrowth", "association"),
]

_METRICS = ["Metric_Accuracy", "Metric_RMSE", "Metric_R2"]

# Curated human surfaces on top of the auto-generated ones.
_EXTRA_SURFACES = [
    (CONCEPT, "soil ph", "SoilPH"),
    (CONCEPT, "ph", "SoilPH"),
    (CONCEPT, "soil acidity", "SoilPH"),
    (CONCEPT, "soil nitrogen", "Nitrogen"),
    (CONCEPT, "soil n", "Nitrogen"),
    (CONCEPT, "soiln", "Nitrogen"),
    (CONCEPT, "cation exchange capacity", "CEC"),
    (CONCEPT, "organic carbon", "OrganicCarbon"),
    (CONCEPT, "soil calcium", "SoilCa"),
    (CONCEPT, "calcium", "SoilCa"),
    (CONCEPT, "soil magnesium", "SoilMG"),
    (CONCEPT, "magnesium", "SoilMG"),
    (CONCEPT, "soil moisture", "SoilMoisture"),
    (CONCEPT, "moisture", "SoilMoisture"),
    (CONCEPT, "crop yield", "Yield"),
    (CONCEPT, "wheat crop", "Wheat"),
    (CONCEPT, "maize crop", "Maize"),
    (CONCEPT, "corn", "Maize"),
    (CONCEPT, "seed rate", "SeedRate"),
    (CONCEPT, "seeding rate", "SeedRate"),
    (CONCEPT, "air temperature", "Temperature"),
    (CONCEPT, "precipitation", "Rainfall"),
    (CONCEPT, "uk", "United_Kingdom"),
    (CONCEPT, "great britain", "United_Kingdom"),
    (CONCEPT, "britain", "United_Kingdom"),
    (CONCEPT, "eire", "Ireland"),
    (CONCEPT, "leaf rust", "LeafRust"),
    (CONCEPT, "leaf rust disease", "LeafRust"),
    (CONCEPT, "knowledge model", "KnowledgeModel"),
    (CONCEPT, "knowledge item", "KnowledgeModel"),
    (TRANSFORMATION, "cpann", "Algorithm_CPANN"),
    (TRANSFORMATION, "counter propagation artificial neural network", "Algorithm_CPANN"),
    (TRANSFORMATION, "skn", "Algorithm_SKN"),
    (TRANSFORMATION, "supervised kohonen network", "Algorithm_SKN"),
    (TRANSFORMATION, "xyf", "Algorithm_XYF"),
    (TRANSFORMATION, "xy fusion network", "Algorithm_XYF"),
    (TRANSFORMATION, "mlr", "Algorithm_MLR"),
    (TRANSFORMATION, "multi linear regression", "Algorithm_MLR"),
    (TRANSFORMATION, "multiple linear regression", "Algorithm_MLR"),
    (TRANSFORMATION, "linear regression", "Algorithm_MLR"),
    (TRANSFORMATION, "pca", "Algorithm_PCA"),
    (TRANSFORMATION, "principal component analysis", "Algorithm_PCA"),
    (TRANSFORMATION, "kmeans", "Algorithm_KMeans"),
    (TRANSFORMATION, "k means", "Algorithm_KMeans"),
    (TRANSFORMATION, "apriori", "Algorithm_Apriori"),
    (TRANSFORMATION, "fpgrowth", "Algorithm_FPGrowth"),
    (TRANSFORMATION, "fp growth", "Algorithm_FPGrowth"),
    (TRANSFORMATION, "decision tree", "Algorithm_DecisionTree"),
    (TRANSFORMATION, "decisiontree", "Algorithm_DecisionTree"),
    (TRANSFORMATION, "neural network", "Algorithm_NeuralNetwork"),
    (TRANSFORMATION, "neuralnetwork", "Algorithm_NeuralNetwork"),
    (TRANSFORMATION, "accuracy", "Metric_Accuracy"),
    (TRANSFORMATION, "rmse", "Metric_RMSE"),
    (TRANSFORMATION, "root mean square error", "Metric_RMSE"),
    (TRANSFORMATION, "r2", "Metric_R2"),
    (TRANSFORMATION, "r squared", "Metric_R2"),
    (TRANSFORMATION, "soilph tier5", "Transformation_SoilPH_Tier5"),
    (TRANSFORMATION, "ph tiers", "Transformation_SoilPH_Tier5"),
    (TRANSFORMATION, "yield tier3", "Transformation_Yield_Tier3"),
    (TRANSFORMATION, "cec", "Transformation_CEC"),
    (TRANSFORMATION, "organic carbon", "Transformation_OrganicCarbon"),
    (TRANSFORMATION, "soil calcium", "Transformation_SoilCa"),
    (TRANSFORMATION, "soil magnesium", "Transformation_SoilMG"),
    (TRANSFORMATION, "soil moisture", "Transformation_SoilMoisture"),
    (TRANSFORMATION, "nitrogen", "Transformation_Nitrogen"),
    (TRANSFORMATION, "soil ph", "Transformation_SoilPH"),
    (TRANSFORMATION, "temperature", "Transformation_Temperature"),
    (TRANSFORMATION, "rainfall", "Transformation_Rainfall"),
    (TRANSFORMATION, "seed rate", "Transformation_SeedRate"),
    (TRANSFORMATION, "yield", "Transformation_Yield"),
    (STATE_LABEL, "highyield", "HighYield"),
    (STATE_LABEL, "high yield", "HighYield"),
    (STATE_LABEL, "mediumyield", "MediumYield"),
    (STATE_LABEL, "medium yield", "MediumYield"),
    (STATE_LABEL, "lowyield", "LowYield"),
    (STATE_LABEL, "low yield", "LowYield"),
]


def soilph_tier5(concept: ConceptId) -> Transformation:
    """The five-tier soil pH table: pH of 5 or below is strongly acidic,
    above 5 and below 7 acidic, exactly 7 neutral, above 7 up to 10
    alkaline, above 10 strongly alkaline."""
    return Transformation(
        id="Transformation_SoilPH_Tier5",
        kind=PIECEWISE,
        subject_concept=concept,
        tiers=(
            Tier(-INF, 5.0, True, False, "Strongly acidic"),
            Tier(5.0, 7.0, True, True, "Acidic"),
            Tier(7.0, 7.0, False, False, "Neutral"),
            Tier(7.0, 10.0, True, False, "Alkaline"),
            Tier(10.0, INF, True, True, "Strongly alkaline"),
        ),
    )


def yield_tier3(concept: ConceptId) -> Transformation:
    """Crop yield in t/ha banded into low (up to 4), medium (above 4 up
    to 8) and high (above 8)."""
    return Transformation(
        id="Transformation_Yield_Tier3",
        kind=PIECEWISE,
        subject_concept=concept,
        tiers=(
            Tier(-INF, 4.0, True, False, "LowYield"),
            Tier(4.0, 8.0, True, False, "MediumYield"),
            Tier(8.0, INF, True, True, "HighYield"),
        ),
    )


@lru_cache(maxsize=1)
def build_ontology() -> Ontology:
    concepts = {local: ConceptId(local, ns) for local, _, ns in _CONCEPTS}
    relations: set[Relation] = set()
    for local, parent, _ in _CONCEPTS:
        if parent is not None:
            relations.add(Relation(local, SUBCLASSOF, parent))

    # Domain facts usable by relation queries.
    relations.add(Relation("LeafRust", "affects", "Wheat"))
    relations.add(Relation("Wheat", "hasDisease", "LeafRust"))

    transformations: set[Transformation] = set()

    def attach(concept_local: str, t: Transformation) -> None:
        transformations.add(t)
        relations.add(Relation(concept_local, HAS_TRANSFORMATION, t.id))

    for local in _MEASURABLE:
        attach(local, Transformation(
            id=f"Transformation_{local}",
            kind=IDENTITY,
            subject_concept=concepts[local],
        ))
    attach("SoilPH", soilph_tier5(concepts["SoilPH"]))
    attach("Yield", yield_tier3(concepts["Yield"]))

    for algorithm_id, task in _ALGORITHMS:
        attach("KnowledgeModel", Transformation(
            id=algorithm_id,
            kind=ALGORITHM_REF,
            subject_concept=concepts["KnowledgeModel"],
            algorithm_task=task,
        ))
    for metric_id in _METRICS:
        attach("Evaluation", Transformation(
            id=metric_id,
            kind=IDENTITY,
            subject_concept=concepts["Evaluation"],
        ))

    entries: list[tuple[str, str, str]] = []
    for local in concepts:
        entries.append((CONCEPT, normalize_term(local), local))
    for t in transformations:
        entries.append((TRANSFORMATION, normalize_term(t.id), t.id))
        for label in t.tier_labels():
            entries.append((STATE_LABEL, normalize_term(label), label))
    for predicate in RELATION_VOCABULARY:
        entries.append((RELATION, normalize_term(predicate), predicate))
    entries.extend(_EXTRA_SURFACES)

    return Ontology(
        concepts=frozenset(concepts.values()),
        relations=frozenset(relations),
        transformations=frozenset(transformations),
        lexicon=Lexicon.build(entries),
        prefixes=dict(DEFAULT_PREFIXES),
    )


def spaced(local: str) -> str:
    return local.replace("_", " ")


def ontology_triples(ontology: Ontology) -> list[Triple]:
    """The ontology's own RDF form, used to seed fresh stores: concept
    typing, the subclass tree, labels, transformation attachment and the
    declared domain facts."""
    out: list[Triple] = []
    com = AGRICOMO
    for c in ontology.concepts:
        iri = Iri(com + c.local)
        out.append(Triple(iri, Iri(RDF_TYPE), Iri(OWL_CLASS)))
        out.append(Triple(iri, Iri(RDFS_LABEL), string(spaced(c.local))))
    for t in ontology.transformations:
        iri = Iri(com + t.id)
        out.append(Triple(iri, Iri(RDF_TYPE), Iri(com + "Transformation")))
        out.append(Triple(iri, Iri(RDFS_LABEL), string(spaced(t.id))))
    for r in ontology.relations:
        if not isinstance(r.object, str):
            continue
        if r.predicate == SUBCLASSOF:
            predicate = Iri(RDFS_SUBCLASSOF)
        else:
            predicate = Iri(com + r.predicate)
        out.append(Triple(Iri(com + r.subject), predicate, Iri(com + r.object)))
    return out
