"""RDF atoms: IRIs, literals, triples, and prefix tables.

Everything else in the package moves data around as these values. Terms are
immutable and hashable so they can live in sets and dict keys; ordering is
provided by sort keys rather than rich comparisons to keep the intent
explicit (IRIs sort before literals, literals by datatype then lexical form).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"
AGRICOMO = "http://www.ucd.ie/consus/AgriComO#"
AGRIKMAPS = "http://www.ucd.ie/consus/AgriKMaps#"

#: Prefix table used by everything that writes our own documents.
DEFAULT_PREFIXES = {
    "rdf": RDF,
    "rdfs": RDFS,
    "owl": OWL,
    "AgriComO": AGRICOMO,
    "AgriKMaps": AGRIKMAPS,
}

RDF_TYPE = RDF + "type"
RDFS_LABEL = RDFS + "label"
RDFS_SUBCLASSOF = RDFS + "subClassOf"
OWL_NAMED_INDIVIDUAL = OWL + "NamedIndividual"
OWL_CLASS = OWL + "Class"

STRING = "string"
INTEGER = "integer"
DECIMAL = "decimal"

_INTEGER_RE = re.compile(r"[+-]?[0-9]+\Z")
_DECIMAL_RE = re.compile(r"[+-]?[0-9]*\.[0-9]+\Z")
# Local part of a prefixed name in the subset we read and write. No dots:
# a trailing dot would be ambiguous with the statement terminator.
_LOCAL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*\Z")


@dataclass(frozen=True, slots=True)
class Iri:
    value: str

    def __repr__(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class Literal:
    """A typed literal. The lexical form is kept verbatim.

    Keeping the source spelling (rather than converting to float) is what
    makes serialization byte-stable: "5.290" round-trips as "5.290".
    """

    lexical: str
    datatype: str = STRING

    def __post_init__(self) -> None:
        if self.datatype == INTEGER and not _INTEGER_RE.match(self.lexical):
            raise ValueError(f"not an integer lexical form: {self.lexical!r}")
        if self.datatype == DECIMAL and not _DECIMAL_RE.match(self.lexical):
            raise ValueError(f"not a decimal lexical form: {self.lexical!r}")

    def __repr__(self) -> str:
        if self.datatype == STRING:
            return f'"{self.lexical}"'
        return self.lexical


Term = Iri | Literal


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Iri
    predicate: Iri
    object: Term

    def __repr__(self) -> str:
        return f"({self.subject!r} {self.predicate!r} {self.object!r})"


def term_key(term: Term) -> tuple:
    """Total order over terms: IRIs first (by value), then literals."""
    if isinstance(term, Iri):
        return (0, term.value)
    return (1, term.datatype, term.lexical)


def triple_key(t: Triple) -> tuple:
    return (term_key(t.subject), term_key(t.predicate), term_key(t.object))


def integer(value: int) -> Literal:
    return Literal(str(int(value)), INTEGER)


def number(value) -> Literal:
    """Best-fitting numeric literal for a Python int or float."""
    if isinstance(value, int) and not isinstance(value, bool):
        return integer(value)
    lex = repr(float(value))
    if "e" in lex or "E" in lex or "inf" in lex or "nan" in lex:
        lex = format(float(value), ".12f").rstrip("0")
        if lex.endswith("."):
            lex += "0"
    return Literal(lex, DECIMAL)


def string(value: str) -> Literal:
    return Literal(value, STRING)


class PrefixMap:
    """Prefix label to IRI base, with expansion and compaction."""

    def __init__(self, table: dict[str, str] | None = None) -> None:
        self._table = dict(table or {})

    def __contains__(self, prefix: str) -> bool:
        return prefix in self._table

    def __eq__(self, other) -> bool:
        return isinstance(other, PrefixMap) and self._table == other._table

    def __len__(self) -> int:
        return len(self._table)

    def bind(self, prefix: str, base: str) -> None:
        self._table[prefix] = base

    def base(self, prefix: str) -> str:
        return self._table[prefix]

    def items(self) -> list[tuple[str, str]]:
        return sorted(self._table.items())

    def copy(self) -> "PrefixMap":
        return PrefixMap(self._table)

    def expand(self, prefix: str, local: str) -> Iri:
        return Iri(self._table[prefix] + local)

    def compact(self, iri: str) -> tuple[str, str] | None:
        """Return (prefix, local) for the longest matching base, if the
        remainder is a clean local name."""
        best: tuple[str, str] | None = None
        best_len = -1
        for prefix, base in self._table.items():
            if iri.startswith(base) and len(base) > best_len:
                local = iri[len(base):]
                if _LOCAL_RE.match(local):
                    best = (prefix, local)
                    best_len = len(base)
        return best
