"""A small SELECT-only query language over the triple store.

Supported: PREFIX declarations, SELECT with ``*`` or an explicit variable
list, a WHERE block of plain triple patterns, and LIMIT.  Everything else
in the standard (filters, optionals, property paths, aggregation and so
on) raises :class:`UnsupportedFeature` naming the construct, so callers
can tell "not implemented" apart from "mistyped".

Evaluation is exhaustive join over the store indexes: patterns are solved
most-constrained first, with bindings substituted into the remaining
patterns as they accumulate.  Solutions keep duplicates (bag semantics)
and are sorted by their term sort keys before LIMIT is applied, which
makes result order reproducible across runs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .store import TripleStore
from .terms import RDF_TYPE, XSD, Iri, Literal, PrefixMap, Term, term_key
from .turtle import UnknownPrefix


class SparqlError(Exception):
    pass


class SparqlSyntaxError(SparqlError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} at line {line}, column {column}")


class UnsupportedFeature(SparqlError):
    def __init__(self, feature: str, line: int = 0, column: int = 0):
        self.feature = feature
        where = f" at line {line}, column {column}" if line else ""
        super().__init__(f"{feature} queries are not supported{where}")


@dataclass(frozen=True, slots=True)
class Variable:
    name: str  # without the leading question mark

    def __repr__(self) -> str:
        return f"?{self.name}"


PatternTerm = Term | Variable


@dataclass(frozen=True, slots=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm

    def terms(self) -> tuple[PatternTerm, PatternTerm, PatternTerm]:
        return (self.subject, self.predicate, self.object)


@dataclass(frozen=True, slots=True)
class QueryAst:
    prefixes: PrefixMap
    projection: tuple[str, ...] | None  # None means SELECT *
    patterns: tuple[TriplePattern, ...]
    limit: int | None = None


@dataclass(frozen=True, slots=True)
class SolutionTable:
    head: tuple[str, ...]
    rows: tuple[tuple[Term, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)


# Constructs we recognise in order to refuse them by name.  Bare words
# that are not on this list and not part of the grammar are syntax errors.
_UNSUPPORTED_KEYWORDS = {
    "FILTER", "OPTIONAL", "UNION", "ORDER", "GROUP", "DISTINCT", "REDUCED",
    "ASK", "CONSTRUCT", "DESCRIBE", "INSERT", "DELETE", "BIND", "VALUES",
    "SERVICE", "GRAPH", "FROM", "HAVING", "OFFSET", "MINUS", "EXISTS",
}

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_PNAME_RE = re.compile(r"([A-Za-z][A-Za-z0-9_-]*)?:([A-Za-z_][A-Za-z0-9_-]*)?")
_NUMBER_RE = re.compile(r"[+-]?(\d+\.\d+|\.\d+|\d+)")
_WORD_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

_ESCAPES = {"\\": "\\", '"': '"', "n": "\n", "r": "\r", "t": "\t"}


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # keyword, var, iri, pname, string, number, punct, eof
    value: object
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def err(msg: str) -> SparqlSyntaxError:
        return SparqlSyntaxError(msg, line, col)

    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if ch == "?" or ch == "$":
            m = _VAR_RE.match(text, i + 1)
            if not m:
                raise err("expected a variable name after '?'")
            tokens.append(_Token("var", m.group(0), start_line, start_col))
            col += m.end() - i
            i = m.end()
            continue
        if ch == "<":
            end = text.find(">", i + 1)
            if end < 0:
                raise err("unterminated IRI")
            value = text[i + 1:end]
            if any(c in value for c in " \t\n<\""):
                raise err("bad character inside IRI")
            tokens.append(_Token("iri", value, start_line, start_col))
            col += end + 1 - i
            i = end + 1
            continue
        if ch == '"':
            if text.startswith('"""', i):
                raise UnsupportedFeature("multi-line string", line, col)
            out: list[str] = []
            j = i + 1
            while True:
                if j >= n or text[j] == "\n":
                    raise err("unterminated string")
                c = text[j]
                if c == "\\":
                    if j + 1 >= n or text[j + 1] not in _ESCAPES:
                        raise err("unknown string escape")
                    out.append(_ESCAPES[text[j + 1]])
                    j += 2
                    continue
                if c == '"':
                    break
                out.append(c)
                j += 1
            after = text[j + 1:j + 3]
            if after.startswith("@"):
                raise UnsupportedFeature("language tag", line, col)
            if after == "^^":
                raise UnsupportedFeature("datatype annotation", line, col)
            tokens.append(_Token("string", "".join(out), start_line, start_col))
            col += j + 1 - i
            i = j + 1
            continue
        if ch in "{}*" or (ch == "." and not text[i + 1:i + 2].isdigit()):
            tokens.append(_Token("punct", ch, start_line, start_col))
            i += 1
            col += 1
            continue
        if ch in ";,":
            raise UnsupportedFeature("predicate-object list", line, col)
        if ch == "[" or ch == "]":
            raise UnsupportedFeature("blank node", line, col)
        if ch == "(" or ch == ")":
            raise UnsupportedFeature("collection", line, col)
        if ch == "_" and text.startswith("_:", i):
            raise UnsupportedFeature("blank node", line, col)
        m = _NUMBER_RE.match(text, i)
        if m and (ch.isdigit() or ch in "+-." ):
            lex = m.group(0)
            kind = "decimal" if "." in lex else "integer"
            if lex.startswith("."):
                lex = "0" + lex  # normalise leading-dot decimals
            tokens.append(
                _Token("number", Literal(lex, kind), start_line, start_col)
            )
            col += m.end() - i
            i = m.end()
            continue
        m = _PNAME_RE.match(text, i)
        if m and ":" in m.group(0):
            tokens.append(
                _Token("pname", (m.group(1) or "", m.group(2) or ""), start_line, start_col)
            )
            col += m.end() - i
            i = m.end()
            continue
        m = _WORD_RE.match(text, i)
        if m:
            word = m.group(0)
            upper = word.upper()
            if upper in _UNSUPPORTED_KEYWORDS:
                raise UnsupportedFeature(upper, line, col)
            if upper in ("PREFIX", "SELECT", "WHERE", "LIMIT", "BASE") or word == "a":
                tokens.append(_Token("keyword", upper if word != "a" else "a",
                                     start_line, start_col))
                col += m.end() - i
                i = m.end()
                continue
            raise err(f"unexpected word {word!r}")
        raise err(f"unexpected character {ch!r}")
    tokens.append(_Token("eof", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._pos = 0

    def _peek(self) -> _Token:
        return self._tokens[self._pos]

    def _next(self) -> _Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def _expect(self, kind: str, value: object = None) -> _Token:
        tok = self._next()
        if tok.kind != kind or (value is not None and tok.value != value):
            want = value if value is not None else kind
            raise SparqlSyntaxError(
                f"expected {want!r}", tok.line, tok.column
            )
        return tok

    def parse(self) -> QueryAst:
        prefixes = PrefixMap()
        while self._peek().kind == "keyword" and self._peek().value in ("PREFIX", "BASE"):
            tok = self._next()
            if tok.value == "BASE":
                raise UnsupportedFeature("BASE", tok.line, tok.column)
            name_tok = self._expect("pname")
            prefix, local = name_tok.value
            if local:
                raise SparqlSyntaxError(
                    "prefix declaration must end with ':'",
                    name_tok.line, name_tok.column,
                )
            iri_tok = self._expect("iri")
            prefixes.bind(prefix, iri_tok.value)

        self._expect("keyword", "SELECT")
        projection: tuple[str, ...] | None
        if self._peek().kind == "punct" and self._peek().value == "*":
            self._next()
            projection = None
        else:
            names: list[str] = []
            while self._peek().kind == "var":
                names.append(self._next().value)
            if not names:
                tok = self._peek()
                raise SparqlSyntaxError(
                    "expected '*' or at least one variable after SELECT",
                    tok.line, tok.column,
                )
            projection = tuple(names)

        self._expect("keyword", "WHERE")
        self._expect("punct", "{")
        patterns: list[TriplePattern] = []
        while True:
            tok = self._peek()
            if tok.kind == "punct" and tok.value == "}":
                self._next()
                break
            patterns.append(self._pattern())
            tok = self._peek()
            if tok.kind == "punct" and tok.value == ".":
                self._next()
        if not patterns:
            tok = self._peek()
            raise SparqlSyntaxError("empty WHERE block", tok.line, tok.column)

        limit: int | None = None
        tok = self._peek()
        if tok.kind == "keyword" and tok.value == "LIMIT":
            self._next()
            num = self._expect("number")
            lit = num.value
            if lit.datatype != "integer" or int(lit.lexical) < 0:
                raise SparqlSyntaxError(
                    "LIMIT takes a non-negative integer", num.line, num.column
                )
            limit = int(lit.lexical)
        self._expect("eof")

        ast = QueryAst(
            prefixes=prefixes,
            projection=projection,
            patterns=tuple(patterns),
            limit=limit,
        )
        if projection is not None:
            seen = {
                t.name
                for p in ast.patterns
                for t in p.terms()
                if isinstance(t, Variable)
            }
            missing = [name for name in projection if name not in seen]
            if missing:
                raise SparqlSyntaxError(
                    "projected variable ?" + missing[0] + " never occurs in WHERE",
                    0, 0,
                )
        return self._resolve(ast)

    def _pattern(self) -> TriplePattern:
        s = self._term(position="subject")
        p = self._term(position="predicate")
        o = self._term(position="object")
        return TriplePattern(s, p, o)

    def _term(self, position: str) -> PatternTerm:
        tok = self._next()
        if tok.kind == "var":
            return Variable(tok.value)
        if tok.kind == "iri":
            return Iri(tok.value)
        if tok.kind == "pname":
            return tok.value  # resolved later against the prefix table
        if tok.kind == "keyword" and tok.value == "a":
            if position != "predicate":
                raise SparqlSyntaxError(
                    "'a' is only valid as a predicate", tok.line, tok.column
                )
            return Iri(RDF_TYPE)
        if tok.kind in ("string", "number"):
            if position != "object":
                raise SparqlSyntaxError(
                    f"a literal cannot be a {position}", tok.line, tok.column
                )
            if tok.kind == "string":
                return Literal(tok.value)
            return tok.value
        raise SparqlSyntaxError(
            f"expected a term, found {tok.value!r}", tok.line, tok.column
        )

    def _resolve(self, ast: QueryAst) -> QueryAst:
        def fix(term: PatternTerm) -> PatternTerm:
            if isinstance(term, tuple):  # unexpanded prefixed name
                prefix, local = term
                if prefix not in ast.prefixes:
                    raise UnknownPrefix(prefix, 0, 0)
                return Iri(ast.prefixes.base(prefix) + local)
            return term

        fixed = tuple(
            TriplePattern(fix(p.subject), fix(p.predicate), fix(p.object))
            for p in ast.patterns
        )
        for p in fixed:
            if isinstance(p.subject, Literal):
                raise SparqlSyntaxError("a literal cannot be a subject", 0, 0)
            if isinstance(p.predicate, Literal):
                raise SparqlSyntaxError("a literal cannot be a predicate", 0, 0)
        return QueryAst(ast.prefixes, ast.projection, fixed, ast.limit)


def parse_query(text: str) -> QueryAst:
    return _Parser(_tokenize(text)).parse()


def _head_of(ast: QueryAst) -> tuple[str, ...]:
    if ast.projection is not None:
        return ast.projection
    seen: list[str] = []
    for p in ast.patterns:
        for term in p.terms():
            if isinstance(term, Variable) and term.name not in seen:
                seen.append(term.name)
    return tuple(seen)


def _substituted(p: TriplePattern, bindings: dict[str, Term]) -> TriplePattern:
    def sub(term: PatternTerm) -> PatternTerm:
        if isinstance(term, Variable) and term.name in bindings:
            return bindings[term.name]
        return term

    return TriplePattern(sub(p.subject), sub(p.predicate), sub(p.object))


def _solve(
    store: TripleStore,
    remaining: list[TriplePattern],
    bindings: dict[str, Term],
    out: list[dict[str, Term]],
) -> None:
    if not remaining:
        out.append(dict(bindings))
        return
    # Most-constrained pattern first; ties keep written order.
    best = max(
        range(len(remaining)),
        key=lambda i: (
            sum(
                1
                for t in _substituted(remaining[i], bindings).terms()
                if not isinstance(t, Variable)
            ),
            -i,
        ),
    )
    pattern = _substituted(remaining[best], bindings)
    rest = remaining[:best] + remaining[best + 1:]

    s = pattern.subject if not isinstance(pattern.subject, Variable) else None
    p = pattern.predicate if not isinstance(pattern.predicate, Variable) else None
    o = pattern.object if not isinstance(pattern.object, Variable) else None
    if isinstance(s, Literal) or isinstance(p, Literal):
        return  # a literal bound into subject or predicate never matches
    for triple in store.match(s, p, o):
        step = dict(bindings)
        ok = True
        for term, value in zip(pattern.terms(), (triple.subject, triple.predicate, triple.object)):
            if isinstance(term, Variable):
                if term.name in step and step[term.name] != value:
                    ok = False
                    break
                step[term.name] = value
        if ok:
            _solve(store, rest, step, out)


def evaluate(store: TripleStore, query: QueryAst | str) -> SolutionTable:
    """Run a query and return its solutions, sorted and limited."""
    ast = parse_query(query) if isinstance(query, str) else query
    head = _head_of(ast)
    solutions: list[dict[str, Term]] = []
    _solve(store, list(ast.patterns), {}, solutions)
    rows = [tuple(s[name] for name in head) for s in solutions]
    rows.sort(key=lambda row: tuple(term_key(t) for t in row))
    if ast.limit is not None:
        rows = rows[:ast.limit]
    return SolutionTable(head=head, rows=tuple(rows))


def _tsv_term(term: Term) -> str:
    if isinstance(term, Iri):
        return f"<{term.value}>"
    if term.datatype in ("integer", "decimal"):
        return term.lexical
    escaped = (
        term.lexical.replace("\\", "\\\\").replace('"', '\\"')
        .replace("\n", "\\n").replace("\r", "\\r").replace("\t", "\\t")
    )
    return f'"{escaped}"'


def _json_term(term: Term) -> dict:
    if isinstance(term, Iri):
        return {"type": "uri", "value": term.value}
    entry: dict = {"type": "literal", "value": term.lexical}
    if term.datatype in ("integer", "decimal"):
        entry["datatype"] = XSD + term.datatype
    return entry


def format_results(table: SolutionTable, fmt: str = "tsv"):
    """Render a solution table.  ``tsv`` gives a text block, ``json`` a
    dict shaped like the standard results format."""
    if fmt == "tsv":
        lines = ["\t".join("?" + name for name in table.head)]
        for row in table.rows:
            lines.append("\t".join(_tsv_term(t) for t in row))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return {
            "head": {"vars": list(table.head)},
            "results": {
                "bindings": [
                    {name: _json_term(t) for name, t in zip(table.head, row)}
                    for row in table.rows
                ]
            },
        }
    raise ValueError(f"unknown result format {fmt!r}")
