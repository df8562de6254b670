import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oak.terms import (
    AGRICOMO,
    AGRIKMAPS,
    DECIMAL,
    DEFAULT_PREFIXES,
    INTEGER,
    RDF_TYPE,
    Iri,
    Literal,
    PrefixMap,
    Triple,
    integer,
    string,
)
from oak.turtle import (
    TurtleSyntaxError,
    UnknownPrefix,
    parse_turtle,
    serialize_turtle,
)

EX = "http://example.org/ns#"


def doc(body: str) -> str:
    return f"@prefix ex: <{EX}> .\n@prefix rdf: <{DEFAULT_PREFIXES['rdf']}> .\n{body}"


class TestParsing:
    def test_listing_fixture_has_twenty_triples(self, listing_text):
        triples, prefixes = parse_turtle(listing_text)
        assert len(triples) == 20
        assert "AgriComO" in prefixes
        assert prefixes.base("AgriKMaps") == AGRIKMAPS

    def test_listing_fixture_spot_facts(self, listing_text):
        triples, _ = parse_turtle(listing_text)
        facts = set(triples)
        subject = Iri(AGRIKMAPS + "Classifier_010")
        assert Triple(subject, Iri(RDF_TYPE), Iri(AGRICOMO + "Classifier")) in facts
        assert Triple(subject, Iri(AGRICOMO + "grade"), integer(60)) in facts
        assert (
            Triple(subject, Iri(AGRICOMO + "hasCondition"), Iri(AGRIKMAPS + "SoilN_010"))
            in facts
        )
        assert (
            Triple(subject, Iri(AGRICOMO + "relatedTo"), Iri(AGRICOMO + "Wheat"))
            in facts
        )
        conditions = [t for t in facts if t.predicate == Iri(AGRICOMO + "hasCondition")]
        assert len(conditions) == 7

    def test_a_shorthand_and_object_lists(self):
        triples, _ = parse_turtle(doc("ex:s a ex:A, ex:B ."))
        assert set(triples) == {
            Triple(Iri(EX + "s"), Iri(RDF_TYPE), Iri(EX + "A")),
            Triple(Iri(EX + "s"), Iri(RDF_TYPE), Iri(EX + "B")),
        }

    def test_predicate_lists(self):
        triples, _ = parse_turtle(doc('ex:s ex:p ex:o ;\n    ex:q "v" .'))
        assert set(triples) == {
            Triple(Iri(EX + "s"), Iri(EX + "p"), Iri(EX + "o")),
            Triple(Iri(EX + "s"), Iri(EX + "q"), string("v")),
        }

    def test_numeric_literals_keep_lexical_form(self):
        triples, _ = parse_turtle(doc("ex:s ex:p 5.290 . ex:s ex:q -4 ."))
        objects = {t.object for t in triples}
        assert Literal("5.290", DECIMAL) in objects
        assert Literal("-4", INTEGER) in objects

    def test_string_escapes(self):
        triples, _ = parse_turtle(doc('ex:s ex:p "a\\nb\\t\\"c\\"\\\\d" .'))
        assert triples[0].object == string('a\nb\t"c"\\d')

    def test_comments_are_skipped(self):
        text = doc("# leading comment\nex:s ex:p ex:o . # trailing\n")
        triples, _ = parse_turtle(text)
        assert len(triples) == 1

    def test_full_iris(self):
        triples, _ = parse_turtle(f"<{EX}s> <{EX}p> <{EX}o> .")
        assert triples == [Triple(Iri(EX + "s"), Iri(EX + "p"), Iri(EX + "o"))]


class TestErrors:
    def test_unknown_prefix_carries_position(self):
        with pytest.raises(UnknownPrefix) as err:
            parse_turtle("ex:s ex:p ex:o .")
        assert err.value.prefix == "ex"
        assert err.value.line == 1
        assert "unknown prefix" in str(err.value)

    @pytest.mark.parametrize(
        "body, phrase",
        [
            ("ex:s ex:p [ ex:q ex:o ] .", "blank nodes"),
            ("ex:s ex:p ( ex:a ex:b ) .", "collections"),
            ("_:b ex:p ex:o .", "blank nodes"),
            ('ex:s ex:p "hi"@en .', "language tags"),
            ('ex:s ex:p "5"^^ex:int .', "datatype"),
            ('ex:s ex:p """long""" .', "multi-line"),
        ],
    )
    def test_unsupported_constructs_are_named(self, body, phrase):
        with pytest.raises(TurtleSyntaxError) as err:
            parse_turtle(doc(body))
        assert phrase in str(err.value)

    def test_missing_terminator(self):
        with pytest.raises(TurtleSyntaxError):
            parse_turtle(doc("ex:s ex:p ex:o"))

    def test_literal_subject_rejected(self):
        with pytest.raises(TurtleSyntaxError):
            parse_turtle(doc('"s" ex:p ex:o .'))

    def test_unterminated_string(self):
        with pytest.raises(TurtleSyntaxError):
            parse_turtle(doc('ex:s ex:p "open .'))


class TestSerialization:
    def test_listing_fixture_round_trips_to_same_bytes(self, listing_text):
        triples, prefixes = parse_turtle(listing_text)
        assert serialize_turtle(triples, prefixes) == listing_text

    def test_serialize_is_deterministic_under_input_order(self):
        prefixes = PrefixMap({"ex": EX})
        triples = [
            Triple(Iri(EX + "b"), Iri(EX + "p"), Iri(EX + "o")),
            Triple(Iri(EX + "a"), Iri(EX + "q"), string("x")),
            Triple(Iri(EX + "a"), Iri(EX + "p"), integer(1)),
        ]
        forward = serialize_turtle(triples, prefixes)
        assert forward == serialize_turtle(list(reversed(triples)), prefixes)
        assert forward.index("ex:a") < forward.index("ex:b")

    def test_rdf_type_written_first_as_a(self):
        prefixes = PrefixMap({"ex": EX, "rdf": DEFAULT_PREFIXES["rdf"]})
        triples = [
            Triple(Iri(EX + "s"), Iri(EX + "aaa"), Iri(EX + "o")),
            Triple(Iri(EX + "s"), Iri(RDF_TYPE), Iri(EX + "T")),
        ]
        text = serialize_turtle(triples, prefixes)
        lines = [ln for ln in text.splitlines() if ln and not ln.startswith("@")]
        assert lines[0] == "ex:s a ex:T ;"
        assert lines[1] == "    ex:aaa ex:o ."

    def test_falls_back_to_full_iri_without_prefix(self):
        text = serialize_turtle(
            [Triple(Iri(EX + "s"), Iri(EX + "p"), Iri(EX + "o"))], PrefixMap()
        )
        assert f"<{EX}s> <{EX}p> <{EX}o> ." in text


# -- property tests ---------------------------------------------------------

_locals = st.from_regex(r"[A-Za-z][A-Za-z0-9_]{0,8}", fullmatch=True)
_iris = _locals.map(lambda x: Iri(EX + x))
_safe_text = st.text(
    alphabet=st.characters(
        codec="ascii", min_codepoint=32, max_codepoint=126
    ).filter(lambda c: c not in "\x00"),
    max_size=20,
)
_literals = st.one_of(
    _safe_text.map(string),
    st.integers(-10**9, 10**9).map(integer),
    st.text(alphabet="0123456789", min_size=1, max_size=6).map(
        lambda d: Literal(d + ".5", DECIMAL)
    ),
)
_triples = st.builds(
    Triple, subject=_iris, predicate=_iris, object=st.one_of(_iris, _literals)
)


@settings(max_examples=120, deadline=None)
@given(st.sets(_triples, max_size=30))
def test_serialize_parse_preserves_triples(triples):
    prefixes = PrefixMap({"ex": EX, "rdf": DEFAULT_PREFIXES["rdf"]})
    text = serialize_turtle(triples, prefixes)
    parsed, _ = parse_turtle(text)
    assert set(parsed) == set(triples)


@settings(max_examples=120, deadline=None)
@given(st.sets(_triples, max_size=30))
def test_second_serialization_is_byte_stable(triples):
    prefixes = PrefixMap({"ex": EX, "rdf": DEFAULT_PREFIXES["rdf"]})
    text = serialize_turtle(triples, prefixes)
    parsed, parsed_prefixes = parse_turtle(text)
    assert serialize_turtle(parsed, parsed_prefixes) == text
