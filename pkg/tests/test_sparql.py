import itertools
import random
import time
from collections import Counter

import pytest

from oak.sparql import (
    SolutionTable,
    SparqlSyntaxError,
    UnsupportedFeature,
    evaluate,
    format_results,
    parse_query,
)
from oak.store import TripleStore
from oak.terms import AGRICOMO, AGRIKMAPS, INTEGER, Iri, Literal, PrefixMap, Triple, term_key

PREFIXES = (
    "PREFIX AgriComO: <http://www.ucd.ie/consus/AgriComO#>\n"
    "PREFIX AgriKMaps: <http://www.ucd.ie/consus/AgriKMaps#>\n"
    "PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n"
)


def iri(local, ns=AGRIKMAPS):
    return Iri(ns + local)


class TestParsing:
    def test_select_star(self):
        ast = parse_query(PREFIXES + "SELECT * WHERE { ?s ?p ?o . }")
        assert ast.projection is None
        assert len(ast.patterns) == 1

    def test_named_projection_order_kept(self):
        ast = parse_query(PREFIXES + "SELECT ?b ?a WHERE { ?a AgriComO:predicts ?b . }")
        assert ast.projection == ("b", "a")

    def test_a_shorthand_becomes_rdf_type(self):
        ast = parse_query(PREFIXES + "SELECT * WHERE { ?s a AgriComO:Classifier . }")
        assert ast.patterns[0].predicate.value.endswith("#type")

    def test_projection_variable_must_occur(self):
        with pytest.raises(SparqlSyntaxError, match="ghost"):
            parse_query(PREFIXES + "SELECT ?ghost WHERE { ?s ?p ?o . }")

    def test_unknown_prefix(self):
        from oak.turtle import UnknownPrefix

        with pytest.raises(UnknownPrefix, match="ex"):
            parse_query("SELECT * WHERE { ?s ex:p ?o . }")

    def test_missing_where_block(self):
        with pytest.raises(SparqlSyntaxError):
            parse_query("SELECT * { ?s ?p ?o . }")

    def test_limit_must_be_positive_integer(self):
        with pytest.raises(SparqlSyntaxError):
            parse_query(PREFIXES + "SELECT * WHERE { ?s ?p ?o . } LIMIT -2")

    def test_literal_cannot_be_a_predicate(self):
        with pytest.raises(SparqlSyntaxError):
            parse_query(PREFIXES + 'SELECT * WHERE { ?s "p" ?o . }')

    @pytest.mark.parametrize(
        "snippet, feature",
        [
            ("SELECT * WHERE { ?s ?p ?o . FILTER(?o > 1) }", "FILTER"),
            ("SELECT * WHERE { OPTIONAL { ?s ?p ?o . } }", "OPTIONAL"),
            ("SELECT * WHERE { { ?s ?p ?o . } UNION { ?s ?p ?o . } }", "UNION"),
            ("SELECT * WHERE { ?s ?p ?o . } ORDER BY ?s", "ORDER"),
            ("SELECT * WHERE { ?s ?p ?o . } GROUP BY ?s", "GROUP"),
            ("SELECT DISTINCT ?s WHERE { ?s ?p ?o . }", "DISTINCT"),
            ("ASK { ?s ?p ?o . }", "ASK"),
            ("CONSTRUCT { ?s ?p ?o . } WHERE { ?s ?p ?o . }", "CONSTRUCT"),
            ("SELECT * WHERE { ?s ?p ?o . BIND(1 AS ?x) }", "BIND"),
            ("SELECT * WHERE { VALUES ?s { 1 } ?s ?p ?o . }", "VALUES"),
            ("SELECT * WHERE { ?s ?p ?o . } OFFSET 5", "OFFSET"),
            ("BASE <http://x/> SELECT * WHERE { ?s ?p ?o . }", "BASE"),
            ('SELECT * WHERE { ?s ?p "x"@en . }', "language"),
            ('SELECT * WHERE { ?s ?p "1"^^<http://x> . }', "datatype"),
            ("SELECT * WHERE { [] ?p ?o . }", "blank"),
            ("SELECT * WHERE { _:b ?p ?o . }", "blank"),
            ("SELECT * WHERE { ?s ?p (1 2) . }", "collection"),
            ('SELECT * WHERE { ?s ?p """x""" . }', "multi-line"),
        ],
    )
    def test_unsupported_features_are_named(self, snippet, feature):
        with pytest.raises(UnsupportedFeature) as exc:
            parse_query(PREFIXES + snippet)
        assert feature.lower() in str(exc.value).lower()


def tiny_store():
    store = TripleStore()
    p = iri("p", AGRICOMO)
    q = iri("q", AGRICOMO)
    store.insert_many(
        [
            Triple(iri("a"), p, iri("b")),
            Triple(iri("a"), p, iri("c")),
            Triple(iri("b"), p, iri("c")),
            Triple(iri("b"), q, Literal("x")),
            Triple(iri("c"), q, Literal("x")),
        ]
    )
    return store


class TestEvaluation:
    def test_single_pattern_all_rows(self):
        table = evaluate(tiny_store(), PREFIXES + "SELECT * WHERE { ?s ?p ?o . }")
        assert len(table) == 5

    def test_rows_sorted_by_term_key(self):
        table = evaluate(tiny_store(), PREFIXES + "SELECT ?s ?o WHERE { ?s AgriComO:p ?o . }")
        keys = [tuple(term_key(t) for t in row) for row in table.rows]
        assert keys == sorted(keys)

    def test_limit_truncates_after_sorting(self):
        full = evaluate(tiny_store(), PREFIXES + "SELECT * WHERE { ?s AgriComO:p ?o . }")
        cut = evaluate(tiny_store(), PREFIXES + "SELECT * WHERE { ?s AgriComO:p ?o . } LIMIT 2")
        assert cut.rows == full.rows[:2]

    def test_join_across_two_patterns(self):
        query = PREFIXES + (
            "SELECT ?x ?y WHERE { ?x AgriComO:p ?y . ?y AgriComO:q \"x\" . }"
        )
        table = evaluate(tiny_store(), query)
        got = {(r[0].value, r[1].value) for r in table.rows}
        assert got == {
            (AGRIKMAPS + "a", AGRIKMAPS + "b"),
            (AGRIKMAPS + "a", AGRIKMAPS + "c"),
            (AGRIKMAPS + "b", AGRIKMAPS + "c"),
        }

    def test_bag_semantics_keeps_duplicate_rows(self):
        # two distinct ?o values project onto the same ?s
        query = PREFIXES + "SELECT ?s WHERE { ?s AgriComO:p ?o . }"
        table = evaluate(tiny_store(), query)
        values = [r[0].value for r in table.rows]
        assert values.count(AGRIKMAPS + "a") == 2

    def test_repeated_variable_must_agree(self):
        query = PREFIXES + "SELECT ?s WHERE { ?s AgriComO:q ?s . }"
        assert evaluate(tiny_store(), query).rows == ()
        # b -> c -> c would need p to loop; only rows where both holes match
        query2 = PREFIXES + "SELECT ?x WHERE { ?x ?p ?x . }"
        assert evaluate(tiny_store(), query2).rows == ()

    def test_ground_pattern_acts_as_an_assertion(self):
        query = PREFIXES + (
            "SELECT ?s WHERE { AgriKMaps:a AgriComO:p AgriKMaps:b . ?s AgriComO:q \"x\" . }"
        )
        assert len(evaluate(tiny_store(), query)) == 2
        query_false = PREFIXES + (
            "SELECT ?s WHERE { AgriKMaps:a AgriComO:p AgriKMaps:z . ?s AgriComO:q \"x\" . }"
        )
        assert evaluate(tiny_store(), query_false).rows == ()

    def test_empty_store_yields_no_rows(self):
        assert evaluate(TripleStore(), PREFIXES + "SELECT * WHERE { ?s ?p ?o . }").rows == ()


class TestFormatting:
    def test_tsv_header_and_terms(self):
        table = evaluate(tiny_store(), PREFIXES + "SELECT ?s ?o WHERE { ?s AgriComO:q ?o . }")
        text = format_results(table, "tsv")
        lines = text.splitlines()
        assert lines[0] == "?s\t?o"
        assert len(lines) == 3
        assert lines[1].endswith('"x"')

    def test_json_results_shape(self):
        table = evaluate(tiny_store(), PREFIXES + "SELECT ?o WHERE { ?b AgriComO:q ?o . }")
        doc = format_results(table, "json")
        assert doc["head"] == {"vars": ["o"]}
        assert doc["results"]["bindings"][0]["o"]["type"] == "literal"


class TestCorpusQueries:
    def test_models_predicting_yield(self, corpus_store):
        query = PREFIXES + (
            "SELECT ?m ?y WHERE { ?m AgriComO:predicts ?y . "
            "?y rdf:type AgriComO:Yield . }"
        )
        table = evaluate(corpus_store, query)
        assert len(table) >= 10
        assert all(r[1].value.startswith(AGRIKMAPS) for r in table.rows)

    def test_desk_style_condition_chain(self, corpus_store):
        query = PREFIXES + (
            "SELECT ?model ?cond WHERE { "
            "?model AgriComO:hasCondition ?cond . "
            "?cond rdf:type AgriComO:Nitrogen . "
            "?model AgriComO:grade ?g . }"
        )
        table = evaluate(corpus_store, query)
        assert table.head == ("model", "cond")
        assert len(table) >= 1
        for model, cond in table.rows:
            suffix = model.value.rsplit("_", 1)[1]
            assert cond.value.endswith(f"Nitrogen_{suffix}")

    def test_grade_literals_come_back_typed(self, corpus_store):
        query = PREFIXES + (
            "SELECT ?g WHERE { AgriKMaps:Classifier_001 AgriComO:grade ?g . }"
        )
        table = evaluate(corpus_store, query)
        (row,) = table.rows
        assert row[0] == Literal("100", INTEGER)


def oracle_solutions(triples, patterns):
    """All bindings satisfying every pattern, by exhaustive candidate check."""

    def matches(pattern, triple, binding):
        new = dict(binding)
        for slot, value in zip(pattern.terms(), (triple.subject, triple.predicate, triple.object)):
            if hasattr(slot, "name"):
                if slot.name in new and new[slot.name] != value:
                    return None
                new[slot.name] = value
            elif slot != value:
                return None
        return new

    bindings = [{}]
    for pattern in patterns:
        step = []
        for binding in bindings:
            for triple in triples:
                extended = matches(pattern, triple, binding)
                if extended is not None:
                    step.append(extended)
        bindings = step
    return bindings


def random_store(rng, max_triples):
    subjects = [iri(f"s{i}") for i in range(6)]
    predicates = [iri(f"p{i}", AGRICOMO) for i in range(4)]
    objects = subjects + [Literal(str(i)) for i in range(3)]
    triples = set()
    for _ in range(rng.randrange(1, max_triples + 1)):
        triples.add(
            Triple(rng.choice(subjects), rng.choice(predicates), rng.choice(objects))
        )
    store = TripleStore()
    store.insert_many(triples)
    return store


def random_patterns(rng, count):
    from oak.sparql import TriplePattern, Variable

    vars_pool = ["a", "b", "c", "d"]
    subjects = [iri(f"s{i}") for i in range(6)]
    predicates = [iri(f"p{i}", AGRICOMO) for i in range(4)]
    objects = subjects + [Literal(str(i)) for i in range(3)]
    patterns = []
    for _ in range(count):
        s = Variable(rng.choice(vars_pool)) if rng.random() < 0.7 else rng.choice(subjects)
        p = Variable(rng.choice(vars_pool)) if rng.random() < 0.4 else rng.choice(predicates)
        o = Variable(rng.choice(vars_pool)) if rng.random() < 0.7 else rng.choice(objects)
        patterns.append(TriplePattern(s, p, o))
    return patterns


def head_vars(patterns):
    seen = []
    for p in patterns:
        for term in p.terms():
            if hasattr(term, "name") and term.name not in seen:
                seen.append(term.name)
    return tuple(seen)


def test_thousand_random_queries_match_brute_force():
    from oak.sparql import QueryAst

    rng = random.Random(20160405)
    sizing = {1: 200, 2: 48, 3: 20}
    started = time.monotonic()
    total = 0
    while total < 1000:
        pattern_count = rng.choice((1, 1, 2, 2, 2, 3))
        store = random_store(rng, sizing[pattern_count])
        patterns = random_patterns(rng, pattern_count)
        head = head_vars(patterns)
        if not head:
            continue
        ast = QueryAst(prefixes=PrefixMap(), projection=head,
                       patterns=tuple(patterns), limit=None)
        table = evaluate(store, ast)

        triples = list(store.match())
        expected = Counter(
            tuple(term_key(b[v]) for v in head)
            for b in oracle_solutions(triples, patterns)
        )
        got = Counter(tuple(term_key(t) for t in row) for row in table.rows)
        assert got == expected, (pattern_count, patterns)
        total += 1
    assert time.monotonic() - started < 60.0
