"""Turtle reader and writer for the subset our documents use.

Supported syntax: @prefix directives, prefixed names, absolute IRIs in angle
brackets, the `a` shorthand for rdf:type, predicate lists with `;`, object
lists with `,`, double-quoted string literals with backslash escapes, bare
integer and decimal literals, `.` statement terminators and `#` comments.

Blank nodes, collections, language tags, datatype suffixes and multi-line
strings are out of scope and raise a clear syntax error instead of being
half-read. Serialization is deterministic: prefixes sorted by name, subjects
sorted, rdf:type first within a subject, remaining predicates and all objects
sorted by term order. Parsing a serialized document and serializing again
reproduces the same bytes.
"""

from __future__ import annotations

from .terms import (
    DECIMAL,
    INTEGER,
    RDF_TYPE,
    STRING,
    Iri,
    Literal,
    PrefixMap,
    Term,
    Triple,
    term_key,
)


class TurtleError(Exception):
    pass


class TurtleSyntaxError(TurtleError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownPrefix(TurtleError):
    def __init__(self, prefix: str, line: int, column: int) -> None:
        super().__init__(f"unknown prefix {prefix!r} at line {line}, column {column}")
        self.prefix = prefix
        self.line = line
        self.column = column


_ESCAPES = {"n": "\n", "t": "\t", "r": "\r", '"': '"', "\\": "\\"}
_UNSUPPORTED = {
    "[": "blank nodes",
    "]": "blank nodes",
    "(": "collections",
    ")": "collections",
}


class _Lexer:
    """Hand-rolled tokenizer tracking line and column for error messages."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def _advance(self, n: int = 1) -> None:
        for _ in range(n):
            if self.pos < len(self.text) and self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def _skip_inert(self) -> None:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in " \t\r\n":
                self._advance()
            elif ch == "#":
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self._advance()
            else:
                return

    def error(self, message: str) -> TurtleSyntaxError:
        return TurtleSyntaxError(message, self.line, self.col)

    def at_end(self) -> bool:
        self._skip_inert()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self._skip_inert()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def next_token(self) -> tuple[str, object, int, int]:
        """Return (kind, value, line, col). Kinds: punct, iriref, pname,
        prefix_decl, string, integer, decimal, a, eof."""
        self._skip_inert()
        line, col = self.line, self.col
        if self.pos >= len(self.text):
            return ("eof", None, line, col)
        ch = self.text[self.pos]

        if ch in ".;,":
            self._advance()
            return ("punct", ch, line, col)
        if ch in _UNSUPPORTED:
            raise TurtleSyntaxError(f"{_UNSUPPORTED[ch]} are not supported", line, col)
        if ch == "<":
            end = self.text.find(">", self.pos + 1)
            if end < 0:
                raise TurtleSyntaxError("unterminated IRI", line, col)
            value = self.text[self.pos + 1 : end]
            if any(c in value for c in ' <"{}|^`') or any(c.isspace() for c in value):
                raise TurtleSyntaxError("bad character in IRI", line, col)
            self._advance(end + 1 - self.pos)
            return ("iriref", value, line, col)
        if ch == '"':
            if self.text.startswith('"""', self.pos):
                raise TurtleSyntaxError("multi-line strings are not supported", line, col)
            out = []
            i = self.pos + 1
            while True:
                if i >= len(self.text) or self.text[i] == "\n":
                    raise TurtleSyntaxError("unterminated string", line, col)
                c = self.text[i]
                if c == "\\":
                    if i + 1 >= len(self.text):
                        raise TurtleSyntaxError("dangling escape", line, col)
                    esc = self.text[i + 1]
                    if esc not in _ESCAPES:
                        raise TurtleSyntaxError(f"unknown escape \\{esc}", line, col)
                    out.append(_ESCAPES[esc])
                    i += 2
                    continue
                if c == '"':
                    break
                out.append(c)
                i += 1
            self._advance(i + 1 - self.pos)
            if self.pos < len(self.text) and self.text[self.pos] == "@":
                raise TurtleSyntaxError("language tags are not supported", line, col)
            if self.text.startswith("^^", self.pos):
                raise TurtleSyntaxError("datatype suffixes are not supported", line, col)
            return ("string", "".join(out), line, col)
        if ch == "@":
            word = self._read_bare()
            if word == "@prefix":
                return ("prefix_decl", word, line, col)
            raise TurtleSyntaxError(f"unsupported directive {word!r}", line, col)
        if ch.isdigit() or ch in "+-":
            word = self._read_bare()
            kind = DECIMAL if "." in word else INTEGER
            try:
                Literal(word, kind)
            except ValueError:
                raise TurtleSyntaxError(f"malformed number {word!r}", line, col) from None
            return (kind, word, line, col)

        word = self._read_bare()
        if word == "a":
            return ("a", word, line, col)
        if word.startswith("_:"):
            raise TurtleSyntaxError("blank nodes are not supported", line, col)
        if ":" in word:
            prefix, local = word.split(":", 1)
            return ("pname", (prefix, local), line, col)
        raise TurtleSyntaxError(f"unexpected token {word!r}", line, col)

    def _read_bare(self) -> str:
        start = self.pos
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c.isspace() or c in ";,#" or c in _UNSUPPORTED:
                break
            # A '.' is part of the token only when it sits between digits
            # (decimal point); otherwise it terminates the statement.
            if c == ".":
                nxt = self.text[self.pos + 1] if self.pos + 1 < len(self.text) else ""
                if not nxt.isdigit():
                    break
            self._advance()
        if self.pos == start:
            raise self.error("empty token")
        return self.text[start:self.pos]


class _Parser:
    def __init__(self, text: str) -> None:
        self.lexer = _Lexer(text)
        self.prefixes = PrefixMap()
        self.triples: list[Triple] = []

    def parse(self) -> tuple[list[Triple], PrefixMap]:
        while not self.lexer.at_end():
            kind, value, line, col = self.lexer.next_token()
            if kind == "prefix_decl":
                self._prefix_directive()
            elif kind in ("iriref", "pname"):
                subject = self._to_iri(kind, value, line, col)
                self._statement(subject)
            elif kind == "eof":
                break
            else:
                raise TurtleSyntaxError(
                    f"expected a subject, found {value!r}", line, col
                )
        return self.triples, self.prefixes

    def _prefix_directive(self) -> None:
        kind, value, line, col = self.lexer.next_token()
        if kind != "pname" or value[1] != "":
            raise TurtleSyntaxError("expected a prefix name ending in ':'", line, col)
        prefix = value[0]
        kind, base, line, col = self.lexer.next_token()
        if kind != "iriref":
            raise TurtleSyntaxError("expected an IRI after the prefix name", line, col)
        kind, dot, line, col = self.lexer.next_token()
        if kind != "punct" or dot != ".":
            raise TurtleSyntaxError("expected '.' after @prefix directive", line, col)
        self.prefixes.bind(prefix, base)

    def _statement(self, subject: Iri) -> None:
        while True:
            predicate = self._predicate()
            while True:
                obj = self._object()
                self.triples.append(Triple(subject, predicate, obj))
                kind, value, line, col = self.lexer.next_token()
                if kind == "punct" and value == ",":
                    continue
                break
            if kind == "punct" and value == ";":
                # A ';' may be followed by the closing '.', matching writers
                # that leave a trailing semicolon.
                if self.lexer.peek() == ".":
                    self.lexer.next_token()
                    return
                continue
            if kind == "punct" and value == ".":
                return
            raise TurtleSyntaxError(
                "expected ';', ',' or '.' after object", line, col
            )

    def _predicate(self) -> Iri:
        kind, value, line, col = self.lexer.next_token()
        if kind == "a":
            return Iri(RDF_TYPE)
        if kind in ("iriref", "pname"):
            return self._to_iri(kind, value, line, col)
        raise TurtleSyntaxError(f"expected a predicate, found {value!r}", line, col)

    def _object(self) -> Term:
        kind, value, line, col = self.lexer.next_token()
        if kind in ("iriref", "pname"):
            return self._to_iri(kind, value, line, col)
        if kind == "string":
            return Literal(value, STRING)
        if kind in (INTEGER, DECIMAL):
            return Literal(value, kind)
        raise TurtleSyntaxError(f"expected an object, found {value!r}", line, col)

    def _to_iri(self, kind: str, value, line: int, col: int) -> Iri:
        if kind == "iriref":
            return Iri(value)
        prefix, local = value
        if prefix not in self.prefixes:
            raise UnknownPrefix(prefix, line, col)
        return self.prefixes.expand(prefix, local)


def parse_turtle(text: str) -> tuple[list[Triple], PrefixMap]:
    """Parse a document, returning its triples (in document order, duplicates
    kept) and the prefix table it declared."""
    return _Parser(text).parse()


def _escape(value: str) -> str:
    return (
        value.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


def _term_text(term: Term, prefixes: PrefixMap) -> str:
    if isinstance(term, Iri):
        compacted = prefixes.compact(term.value)
        if compacted:
            return f"{compacted[0]}:{compacted[1]}"
        return f"<{term.value}>"
    if term.datatype == STRING:
        return f'"{_escape(term.lexical)}"'
    return term.lexical


def serialize_turtle(triples, prefixes: PrefixMap) -> str:
    """Write triples deterministically under the given prefix table."""
    lines = [f"@prefix {p}: <{base}> ." for p, base in prefixes.items()]
    by_subject: dict[Iri, dict[Iri, set[Term]]] = {}
    for t in triples:
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, set()).add(t.object)
    if lines and by_subject:
        lines.append("")
    rdf_type = Iri(RDF_TYPE)
    for subject in sorted(by_subject, key=term_key):
        pmap = by_subject[subject]
        predicates = sorted(pmap, key=lambda p: (p != rdf_type, term_key(p)))
        parts = []
        for predicate in predicates:
            objects = sorted(pmap[predicate], key=term_key)
            ptext = "a" if predicate == rdf_type else _term_text(predicate, prefixes)
            otext = ", ".join(_term_text(o, prefixes) for o in objects)
            parts.append(f"{ptext} {otext}")
        stext = _term_text(subject, prefixes)
        if len(parts) == 1:
            lines.append(f"{stext} {parts[0]} .")
        else:
            lines.append(f"{stext} {parts[0]} ;")
            for part in parts[1:-1]:
                lines.append(f"    {part} ;")
            lines.append(f"    {parts[-1]} .")
    return "\n".join(lines) + "\n"
