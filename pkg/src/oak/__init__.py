"""Ontology-based knowledge maps for agricultural data mining.

Build a knowledge item from a mined-model descriptor, store it as RDF,
query the repository with a SPARQL subset or plain keywords, and grade
what the repository holds.
"""

from .agri import build_ontology, ontology_triples, soilph_tier5, yield_tier3
from .assessment import (
    ACCEPTANCE_THRESHOLD,
    FocaInput,
    FocaResult,
    GradeBreakdown,
    foca_score,
    grade,
    repository_report,
)
from .corpus import build_demo_repository, demo_descriptors
from .model import (
    ConceptId,
    Instance,
    KnowledgeRepresentation,
    Lexicon,
    ModelError,
    Ontology,
    OutOfDomain,
    Relation,
    StateValue,
    SubjectMismatch,
    TermNotFound,
    Tier,
    Transformation,
    apply_transformation,
    attach_transformation,
    normalize_term,
    resolve_term,
    validate_hierarchy,
    validate_representation,
)
from .search import (
    KnowledgeCard,
    SearchIntent,
    SearchOutcome,
    access_profile,
    assemble_results,
    generate_sparql,
    parse_search,
    run_search,
)
from .service import BackgroundServer, KnowledgeService, make_server
from .sparql import SparqlError, SparqlSyntaxError, UnsupportedFeature, evaluate, format_results, parse_query
from .store import TripleStore
from .terms import Iri, Literal, PrefixMap, Triple
from .turtle import TurtleError, TurtleSyntaxError, UnknownPrefix, parse_turtle, serialize_turtle
from .wrapper import (
    DatasetSpec,
    EvalSpec,
    FeatureSpec,
    MinedKnowledgeDescriptor,
    SourceSpec,
    WrapError,
    from_store,
    kr_triples,
    to_turtle,
    wrap,
)

__version__ = "0.1.0"

__all__ = [
    "ACCEPTANCE_THRESHOLD",
    "BackgroundServer",
    "ConceptId",
    "DatasetSpec",
    "EvalSpec",
    "FeatureSpec",
    "FocaInput",
    "FocaResult",
    "GradeBreakdown",
    "Instance",
    "Iri",
    "KnowledgeCard",
    "KnowledgeRepresentation",
    "KnowledgeService",
    "Lexicon",
    "Literal",
    "MinedKnowledgeDescriptor",
    "ModelError",
    "Ontology",
    "OutOfDomain",
    "PrefixMap",
    "Relation",
    "SearchIntent",
    "SearchOutcome",
    "SourceSpec",
    "SparqlError",
    "SparqlSyntaxError",
    "StateValue",
    "SubjectMismatch",
    "TermNotFound",
    "Tier",
    "Transformation",
    "Triple",
    "TripleStore",
    "TurtleError",
    "TurtleSyntaxError",
    "UnknownPrefix",
    "UnsupportedFeature",
    "WrapError",
    "access_profile",
    "apply_transformation",
    "assemble_results",
    "attach_transformation",
    "build_demo_repository",
    "build_ontology",
    "demo_descriptors",
    "evaluate",
    "foca_score",
    "format_results",
    "from_store",
    "generate_sparql",
    "grade",
    "kr_triples",
    "make_server",
    "normalize_term",
    "ontology_triples",
    "parse_query",
    "parse_search",
    "parse_turtle",
    "repository_report",
    "resolve_term",
    "run_search",
    "serialize_turtle",
    "soilph_tier5",
    "to_turtle",
    "validate_hierarchy",
    "validate_representation",
    "wrap",
    "yield_tier3",
]
