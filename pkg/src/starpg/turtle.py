"""Turtle-star reading and writing for a crisp subset of the syntax.

Supported: @prefix, IRIs in angle brackets, prefixed names, blank node
labels, the keyword 'a', quoted strings with \\" \\\\ \\n \\r \\t escapes,
language tags, ^^ datatypes, bare integer/decimal/double/boolean
shorthands, predicate lists (;), object lists (,), embedded triples in
<< >> with arbitrary nesting, and # comments.  Everything else
(collections, blank node property lists, triple-quoted strings, @base) is
a parse error with a 1-based line/column diagnostic.

Serialization is deterministic: prefixes sorted by label, one triple per
line in term order, blank nodes renumbered b1, b2, ... in first-appearance
order, and literals shortened to bare tokens exactly when reparsing gives
the identical literal back.
"""

from __future__ import annotations

import re
from typing import Mapping, NoReturn

from .namespaces import (
    RDF_OBJECT,
    RDF_PREDICATE,
    RDF_STATEMENT,
    RDF_SUBJECT,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    XSD_STRING,
)
from .rdf import (
    BNode,
    Iri,
    Literal,
    RdfStarGraph,
    Term,
    Triple,
    blank_node_labels,
    canonicalize_bnodes,
    embedded_triples,
    is_metadata_triple,
    term_key,
)

FILE_EXTENSIONS = (".ttls", ".ttl")


class TurtleParseError(Exception):
    """Syntax error with 1-based line and column."""

    def __init__(self, line: int, column: int, message: str) -> None:
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class NotPlainRdfError(ValueError):
    """The graph embeds triples, so it is not plain RDF."""


_PREFIX_RE = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")
_LOCAL_RE = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_-]*")
_BNODE_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_LANG_RE = re.compile(r"[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*")
# Double (mandatory exponent) must be tried before decimal and integer.
_NUMBER_RE = re.compile(
    r"[+-]?(?:"
    r"(?:[0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)[eE][+-]?[0-9]+"
    r"|[0-9]*\.[0-9]+"
    r"|[0-9]+"
    r")"
)
_ESCAPES = {"n": "\n", "r": "\r", "t": "\t", '"': '"', "\\": "\\"}


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.prefixes: dict[str, str] = {}
        self.triples: set[Triple] = set()

    # -- scanning primitives -------------------------------------------

    def peek(self, k: int = 0) -> str:
        i = self.pos + k
        return self.text[i] if i < len(self.text) else ""

    def advance(self) -> str:
        c = self.text[self.pos]
        self.pos += 1
        if c == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return c

    def error(self, message: str, at: tuple[int, int] | None = None) -> NoReturn:
        line, col = at if at is not None else (self.line, self.col)
        raise TurtleParseError(line, col, message)

    def here(self) -> tuple[int, int]:
        return (self.line, self.col)

    def skip_trivia(self) -> None:
        while self.pos < len(self.text):
            c = self.peek()
            if c in " \t\r\n":
                self.advance()
            elif c == "#":
                while self.pos < len(self.text) and self.peek() != "\n":
                    self.advance()
            else:
                return

    def take(self, expected: str, what: str) -> None:
        for c in expected:
            if self.peek() != c:
                self.error(f"expected {what}")
            self.advance()

    def match_re(self, pattern: re.Pattern) -> str | None:
        m = pattern.match(self.text, self.pos)
        if m is None:
            return None
        for _ in range(m.end() - self.pos):
            self.advance()
        return m.group()

    # -- grammar -------------------------------------------------------

    def parse(self) -> tuple[RdfStarGraph, dict[str, str]]:
        while True:
            self.skip_trivia()
            if self.pos >= len(self.text):
                break
            if self.peek() == "@":
                self.directive()
            else:
                self.statement()
        return RdfStarGraph(self.triples), dict(self.prefixes)

    def directive(self) -> None:
        at = self.here()
        self.advance()  # '@'
        word = self.match_re(_PREFIX_RE) or ""
        if word == "base":
            self.error("@base is not supported", at)
        if word != "prefix":
            self.error(f"unknown directive @{word}", at)
        self.skip_trivia()
        label = self.match_re(_PREFIX_RE) or ""
        if self.peek() != ":":
            self.error("expected ':' after prefix label")
        self.advance()
        self.skip_trivia()
        iri = self.iriref()
        self.prefixes[label] = iri.value  # a later declaration wins
        self.expect_dot()

    def statement(self) -> None:
        subject = self.subject()
        self.predicate_object_list(subject)
        self.expect_dot()

    def predicate_object_list(self, subject) -> None:
        while True:
            predicate = self.predicate()
            while True:
                obj = self.object_()
                self.triples.add(Triple(subject, predicate, obj))
                self.skip_trivia()
                if self.peek() == ",":
                    self.advance()
                    continue
                break
            if self.peek() == ";":
                while self.peek() == ";":
                    self.advance()
                    self.skip_trivia()
                if self.peek() == ".":
                    return
                continue
            return

    def expect_dot(self) -> None:
        self.skip_trivia()
        if self.peek() != ".":
            self.error("expected '.'")
        self.advance()

    def subject(self):
        self.skip_trivia()
        c = self.peek()
        if c == "":
            self.error("expected subject, found end of input")
        if c == "<":
            if self.peek(1) == "<":
                return self.embedded()
            return self.iriref()
        if c == "_":
            return self.bnode()
        if c == '"' or c.isdigit() or c in "+-" or (c == "." and self.peek(1).isdigit()):
            self.error("literal not allowed as subject")
        return self.pname_or_keyword(as_subject=True)

    def predicate(self) -> Iri:
        self.skip_trivia()
        c = self.peek()
        if c == "":
            self.error("expected predicate, found end of input")
        if c == "<":
            if self.peek(1) == "<":
                self.error("embedded triple not allowed as predicate")
            return self.iriref()
        if c == '"' or c.isdigit() or c in "+-":
            self.error("literal not allowed as predicate")
        term = self.pname_or_keyword(as_subject=False)
        return term

    def object_(self):
        self.skip_trivia()
        c = self.peek()
        if c == "":
            self.error("expected object, found end of input")
        if c == "<":
            if self.peek(1) == "<":
                return self.embedded()
            return self.iriref()
        if c == "_":
            return self.bnode()
        if c == '"':
            return self.string_literal()
        if c == "'":
            self.error("single-quoted strings are not supported")
        if c.isdigit() or (c in "+-" and (self.peek(1).isdigit() or self.peek(1) == ".")) or (
            c == "." and self.peek(1).isdigit()
        ):
            return self.numeric_literal()
        if c == "[":
            self.error("blank node property lists are not supported")
        if c == "(":
            self.error("collections are not supported")
        return self.pname_or_boolean()

    def embedded(self) -> Triple:
        self.take("<<", "'<<'")
        self.skip_trivia()
        c = self.peek()
        if c == '"' or c.isdigit() or c in "+-" or (c == "." and self.peek(1).isdigit()):
            self.error("embedded triple with literal subject")
        subject = self.subject()
        predicate = self.predicate()
        obj = self.object_()
        self.skip_trivia()
        if self.peek() != ">" or self.peek(1) != ">":
            self.error("expected '>>'")
        self.advance()
        self.advance()
        return Triple(subject, predicate, obj)

    def iriref(self) -> Iri:
        at = self.here()
        self.take("<", "IRI")
        chars: list[str] = []
        while True:
            c = self.peek()
            if c == "" or c == "\n":
                self.error("unterminated IRI", at)
            if c == ">":
                self.advance()
                break
            chars.append(self.advance())
        try:
            return Iri("".join(chars))
        except ValueError as exc:
            self.error(f"invalid IRI: {exc}", at)

    def bnode(self) -> BNode:
        at = self.here()
        self.take("_:", "blank node label")
        label = self.match_re(_BNODE_RE)
        if label is None:
            self.error("invalid blank node label", at)
        return BNode(label)

    def pname_or_keyword(self, as_subject: bool):
        at = self.here()
        prefix = self.match_re(_PREFIX_RE) or ""
        if self.peek() != ":":
            if not as_subject and prefix == "a":
                return Iri(RDF_TYPE)
            if prefix in ("true", "false"):
                self.error("literal not allowed here", at)
            if prefix:
                self.error(f"expected ':' in prefixed name after {prefix!r}", at)
            self.error(f"unexpected character {self.peek()!r}", at)
        self.advance()
        return self.resolve_pname(prefix, at)

    def pname_or_boolean(self):
        at = self.here()
        word = self.match_re(_PREFIX_RE) or ""
        if self.peek() != ":":
            if word in ("true", "false"):
                return Literal(word, Iri(XSD_BOOLEAN))
            if word:
                self.error(f"expected ':' in prefixed name after {word!r}", at)
            self.error(f"unexpected character {self.peek()!r}", at)
        self.advance()
        return self.resolve_pname(word, at)

    def resolve_pname(self, prefix: str, at: tuple[int, int]) -> Iri:
        if prefix not in self.prefixes:
            self.error(f"unknown prefix {prefix!r}", at)
        local = self.match_re(_LOCAL_RE) or ""
        try:
            return Iri(self.prefixes[prefix] + local)
        except ValueError as exc:
            self.error(f"invalid IRI from prefixed name: {exc}", at)

    def numeric_literal(self) -> Literal:
        lex = self.match_re(_NUMBER_RE)
        if lex is None:
            self.error("malformed number")
        if "e" in lex or "E" in lex:
            return Literal(lex, Iri(XSD_DOUBLE))
        if "." in lex:
            return Literal(lex, Iri(XSD_DECIMAL))
        return Literal(lex, Iri(XSD_INTEGER))

    def string_literal(self) -> Literal:
        at = self.here()
        self.advance()  # opening quote
        if self.peek() == '"' and self.peek(1) == '"':
            self.error("triple-quoted strings are not supported", at)
        chars: list[str] = []
        while True:
            c = self.peek()
            if c == "" or c in "\n\r":
                self.error("unterminated string literal", at)
            if c == '"':
                self.advance()
                break
            if c == "\\":
                esc_at = self.here()
                self.advance()
                e = self.peek()
                if e not in _ESCAPES:
                    self.error(f"unsupported escape \\{e}", esc_at)
                chars.append(_ESCAPES[e])
                self.advance()
                continue
            chars.append(self.advance())
        lex = "".join(chars)
        # Language tag or datatype must be adjacent, per Turtle.
        if self.peek() == "@":
            self.advance()
            tag = self.match_re(_LANG_RE)
            if tag is None:
                self.error("malformed language tag")
            return Literal(lex, language=tag)
        if self.peek() == "^" and self.peek(1) == "^":
            self.advance()
            self.advance()
            self.skip_trivia()
            if self.peek() == "<":
                if self.peek(1) == "<":
                    self.error("expected datatype IRI")
                dt = self.iriref()
            else:
                dt = self.pname_or_keyword(as_subject=True)
            try:
                return Literal(lex, dt)
            except ValueError as exc:
                self.error(str(exc), at)
        return Literal(lex)


def parse_turtle_star(text: str) -> tuple[RdfStarGraph, dict[str, str]]:
    """Parse a Turtle-star document into a graph and its prefix table.

    Raises TurtleParseError with 1-based line/column on any syntax error,
    unknown prefix, or unsupported construct.
    """
    return _Parser(text).parse()


# -- serialization -----------------------------------------------------

_INTEGER_TOKEN = re.compile(r"[+-]?[0-9]+\Z")
_DECIMAL_TOKEN = re.compile(r"[+-]?[0-9]*\.[0-9]+\Z")
_DOUBLE_TOKEN = re.compile(r"[+-]?(?:[0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)[eE][+-]?[0-9]+\Z")
_LOCAL_TOKEN = re.compile(r"(?:[A-Za-z0-9_][A-Za-z0-9_-]*)?\Z")
_STRING_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _quote(text: str) -> str:
    return '"' + "".join(_STRING_ESCAPES.get(c, c) for c in text) + '"'


def _render_iri(iri: Iri, prefixes: list[tuple[str, str]]) -> str:
    # prefixes come sorted by (-len(ns), label): longest namespace wins,
    # ties break on the label.
    for label, ns in prefixes:
        if iri.value.startswith(ns) and _LOCAL_TOKEN.fullmatch(iri.value[len(ns):]):
            return f"{label}:{iri.value[len(ns):]}"
    return f"<{iri.value}>"


def _render_literal(l: Literal, prefixes: list[tuple[str, str]]) -> str:
    if l.language is not None:
        return f"{_quote(l.lexical_form)}@{l.language}"
    dt = l.datatype.value
    if dt == XSD_STRING:
        return _quote(l.lexical_form)
    if dt == XSD_INTEGER and _INTEGER_TOKEN.fullmatch(l.lexical_form):
        return l.lexical_form
    if dt == XSD_DECIMAL and _DECIMAL_TOKEN.fullmatch(l.lexical_form):
        return l.lexical_form
    if dt == XSD_DOUBLE and _DOUBLE_TOKEN.fullmatch(l.lexical_form):
        return l.lexical_form
    if dt == XSD_BOOLEAN and l.lexical_form in ("true", "false"):
        return l.lexical_form
    return f"{_quote(l.lexical_form)}^^{_render_iri(l.datatype, prefixes)}"


def _render_term(term: Term, prefixes: list[tuple[str, str]]) -> str:
    if isinstance(term, Iri):
        return _render_iri(term, prefixes)
    if isinstance(term, BNode):
        return f"_:{term.label}"
    if isinstance(term, Literal):
        return _render_literal(term, prefixes)
    s = _render_term(term.subject, prefixes)
    p = _render_term(term.predicate, prefixes)
    o = _render_term(term.object, prefixes)
    return f"<<{s} {p} {o}>>"


def format_term(term: Term) -> str:
    """Render one term in Turtle-star syntax with full IRIs."""
    return _render_term(term, [])


def serialize_turtle_star(g: RdfStarGraph, prefixes: Mapping[str, str] | None = None) -> str:
    """Serialize deterministically; see the module docstring for the shape."""
    table = dict(prefixes or {})
    for label, ns in table.items():
        if not _PREFIX_RE.fullmatch(label) and label != "":
            raise ValueError(f"invalid prefix label: {label!r}")
        Iri(ns)  # must be a valid namespace IRI
    by_length = sorted(table.items(), key=lambda kv: (-len(kv[1]), kv[0]))
    prefix_lines = [f"@prefix {label}: <{ns}> ." for label, ns in sorted(table.items())]
    statements = [
        f"{_render_term(t.subject, by_length)} {_render_term(t.predicate, by_length)} "
        f"{_render_term(t.object, by_length)} ."
        for t in canonicalize_bnodes(g)
    ]
    if prefix_lines and statements:
        return "\n".join(prefix_lines) + "\n\n" + "\n".join(statements) + "\n"
    lines = prefix_lines or statements
    return "\n".join(lines) + "\n" if lines else ""


# -- plain RDF bridge --------------------------------------------------


def unfold_to_rdf(g: RdfStarGraph) -> RdfStarGraph:
    """Rewrite every embedded triple as a reification blank node.

    Each distinct embedded triple gets one fresh blank node carrying the
    four reification statements (type, subject, predicate, object), and
    every occurrence of the embedded triple is replaced by that node.  The
    result contains no embedded triples.
    """
    embedded = sorted(embedded_triples(g), key=term_key)
    used = set(blank_node_labels(g))
    ref: dict[Triple, BNode] = {}
    counter = 1
    for e in embedded:
        while f"r{counter}" in used:
            counter += 1
        ref[e] = BNode(f"r{counter}")
        counter += 1

    def node(x):
        return ref[x] if isinstance(x, Triple) else x

    out: set[Triple] = set()
    for t in g.triples:
        out.add(Triple(node(t.subject), t.predicate, node(t.object)))
    for e in embedded:
        r = ref[e]
        out.add(Triple(r, Iri(RDF_TYPE), Iri(RDF_STATEMENT)))
        out.add(Triple(r, Iri(RDF_SUBJECT), node(e.subject)))
        out.add(Triple(r, Iri(RDF_PREDICATE), e.predicate))
        out.add(Triple(r, Iri(RDF_OBJECT), node(e.object)))
    return RdfStarGraph(out)


def embed_plain_rdf(g: RdfStarGraph) -> RdfStarGraph:
    """Cast a plain RDF graph into the RDF-star model (the identity).

    Raises NotPlainRdfError when some triple embeds another.
    """
    for t in g:
        if is_metadata_triple(t):
            raise NotPlainRdfError(f"graph embeds a triple: {format_term(t)}")
    return g
