"""Transformations between RDF-star graphs and property graphs.

Three directions: an RDF-like property graph that keeps every term
distinction, a simple property graph that folds attribute triples into
vertex properties, and the reverse direction from a property graph into
RDF-star.  Each transformation checks its preconditions and raises with a
violation report instead of producing garbage.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Union

from .mappings import (
    MappingConfig,
    assign_vertex_identities,
    iri_to_string,
    string_to_iri,
    value_from_literal,
    value_to_literal,
)
from .namespaces import RDF_LANG_STRING
from .pg import (
    Property,
    PropertyGraph,
    Text,
    edge_uniqueness_violations,
    property_sort_key,
    property_uniqueness_violations,
)
from .rdf import (
    BNode,
    Iri,
    Literal,
    RdfStarGraph,
    Term,
    Triple,
    attribute_triples,
    embedded_triples,
    is_metadata_triple,
    mentioned_terms,
    metadata_triples,
    minimize,
    ordinary_triples,
    relationship_triples,
    subject_object_nodes,
    subject_object_terms,
    term_key,
)

# Reserved vertex property keys of the RDF-like encoding.  None of them is
# a valid absolute IRI, so they cannot collide with mapped predicate keys.
KIND_KEY = "kind"
IRI_KEY = "IRI"
LITERAL_KEY = "literal"
DATATYPE_KEY = "datatype"
LANGUAGE_KEY = "language"

KIND_IRI = "IRI"
KIND_BLANK_NODE = "blank node"
KIND_LITERAL = "literal"


@dataclass(frozen=True)
class Violation:
    """One failed convertibility condition, anchored at a top-level triple.

    condition is "1" (embedded subject is a metadata triple), "2" (embedded
    object), "3" (metadata object not a literal), "4" (literal outside the
    value mapping), or "strong" (embedded attribute triple).
    """

    triple: Triple
    condition: str
    reason: str


@dataclass(frozen=True)
class ConvertibilityReport:
    violations: tuple[Violation, ...]

    @property
    def convertible(self) -> bool:
        return not self.violations


class ConvertibilityError(ValueError):
    """A transformation precondition failed; carries the full report."""

    def __init__(self, report: ConvertibilityReport) -> None:
        self.report = report
        first = report.violations[0]
        super().__init__(
            f"{len(report.violations)} convertibility violation(s); "
            f"first: condition {first.condition}, {first.reason}"
        )


class NotConvertibleError(ConvertibilityError):
    pass


class NotStronglyConvertibleError(ConvertibilityError):
    pass


class MalformedRdfLikePgError(ValueError):
    """Input property graph does not follow the RDF-like encoding."""


class NotPropertyUniqueError(ValueError):
    def __init__(self, violations: list[tuple[str, str]]) -> None:
        self.violations = violations
        super().__init__(f"duplicate property keys on: {violations!r}")


class NotEdgeUniqueError(ValueError):
    def __init__(self, violations: list[tuple[str, str]]) -> None:
        self.violations = violations
        super().__init__(f"edges sharing source, target, and label: {violations!r}")


def _literal_note(l: Literal) -> str:
    if l.language is not None:
        return f'"{l.lexical_form}"@{l.language}'
    return f'"{l.lexical_form}"^^<{l.datatype.value}>'


def check_pg_convertible(g: RdfStarGraph, mode: str = "lenient") -> ConvertibilityReport:
    """Check the four conditions under which an RDF-star graph maps to a
    property graph: embedded triples only as subjects of metadata triples,
    no nested metadata, metadata objects are literals, and every mentioned
    literal carries a property value in the given mode."""
    violations: list[Violation] = []
    for t in g:
        if isinstance(t.subject, Triple):
            if is_metadata_triple(t.subject):
                violations.append(
                    Violation(t, "1", "embedded subject is itself a metadata triple")
                )
            if not isinstance(t.object, Literal):
                violations.append(Violation(t, "3", "metadata triple object is not a literal"))
        if isinstance(t.object, Triple):
            violations.append(Violation(t, "2", "triple embedded in object position"))
        for term in sorted(mentioned_terms(t), key=term_key):
            if isinstance(term, Literal) and value_from_literal(term, mode) is None:
                violations.append(
                    Violation(t, "4", f"literal {_literal_note(term)} has no property value")
                )
    return ConvertibilityReport(tuple(violations))


def check_strongly_pg_convertible(g: RdfStarGraph, mode: str = "lenient") -> ConvertibilityReport:
    """As check_pg_convertible, plus: no embedded triple has a literal
    object (metadata may only annotate relationship triples)."""
    violations = list(check_pg_convertible(g, mode).violations)
    for e in sorted(embedded_triples(g), key=term_key):
        if isinstance(e.object, Literal):
            for t in g:
                if e in mentioned_terms(t):
                    violations.append(
                        Violation(
                            t,
                            "strong",
                            f"embeds attribute triple with object {_literal_note(e.object)}",
                        )
                    )
    return ConvertibilityReport(tuple(violations))


@dataclass(frozen=True)
class RdfLikePgResult:
    """A transformed graph plus the witness maps from source terms/triples
    to the vertex and edge ids chosen for them."""

    graph: PropertyGraph
    vertex_map: dict[Term, str]
    edge_map: dict[Triple, str]


@dataclass(frozen=True)
class SimplePgResult:
    graph: PropertyGraph
    vertex_map: dict[Union[Iri, BNode], str]
    edge_map: dict[Triple, str]


def _literal_vertex_properties(l: Literal, mode: str) -> set[Property]:
    value = value_from_literal(l, mode)
    if value is None:
        raise AssertionError(f"literal outside value mapping slipped past the check: {l!r}")
    props = {
        Property(KIND_KEY, Text(KIND_LITERAL)),
        Property(LITERAL_KEY, value),
        Property(DATATYPE_KEY, Text(l.datatype.value)),
    }
    if l.language is not None:
        props.add(Property(LANGUAGE_KEY, Text(l.language)))
    return props


def to_rdf_like_pg(g: RdfStarGraph, mode: str = "lenient") -> RdfLikePgResult:
    """Transform a convertible graph into the RDF-like property graph.

    One vertex per subject/object term of the ordinary triples, tagged with
    its kind (and IRI text, or literal value/datatype/language); one edge
    per ordinary triple, labeled with the predicate IRI text; metadata
    triples become properties of the edge for their embedded subject.
    """
    report = check_pg_convertible(g, mode)
    if not report.convertible:
        raise NotConvertibleError(report)

    terms = sorted(subject_object_terms(g), key=term_key)
    vertex_map = {term: f"v{i}" for i, term in enumerate(terms, start=1)}
    ordinary = sorted(ordinary_triples(g), key=term_key)
    edge_map = {t: f"e{i}" for i, t in enumerate(ordinary, start=1)}

    props: dict[str, set[Property]] = {}
    for term, vid in vertex_map.items():
        if isinstance(term, Iri):
            props[vid] = {
                Property(KIND_KEY, Text(KIND_IRI)),
                Property(IRI_KEY, Text(iri_to_string(term))),
            }
        elif isinstance(term, BNode):
            props[vid] = {Property(KIND_KEY, Text(KIND_BLANK_NODE))}
        else:
            props[vid] = _literal_vertex_properties(term, mode)

    src = {edge_map[t]: vertex_map[t.subject] for t in ordinary}
    tgt = {edge_map[t]: vertex_map[t.object] for t in ordinary}
    lbl = {edge_map[t]: iri_to_string(t.predicate) for t in ordinary}
    edge_props: dict[str, set[Property]] = defaultdict(set)
    for m in sorted(metadata_triples(g), key=term_key):
        value = value_from_literal(m.object, mode)  # a literal by condition 3
        edge_props[edge_map[m.subject]].add(Property(iri_to_string(m.predicate), value))
    props.update(edge_props)

    graph = PropertyGraph(vertex_map.values(), edge_map.values(), src, tgt, lbl, props)
    return RdfLikePgResult(graph, vertex_map, edge_map)


def _single(props_by_key: dict[str, list], key: str, vertex: str):
    values = props_by_key.get(key, [])
    if len(values) != 1:
        raise MalformedRdfLikePgError(
            f"vertex {vertex!r} needs exactly one {key!r} property, has {len(values)}"
        )
    return values[0]


def _text_value(value, key: str, vertex: str) -> str:
    if not isinstance(value, Text):
        raise MalformedRdfLikePgError(f"vertex {vertex!r} property {key!r} must be Text")
    return value.value


def from_rdf_like_pg(p: PropertyGraph, minimal: bool = True) -> RdfStarGraph:
    """Rebuild the RDF-star graph encoded by an RDF-like property graph.

    Blank-node vertices get fresh labels b1, b2, ... in vertex id order.
    Literal vertices rebuild their literal from the recorded value with the
    recorded datatype/language overriding the value's own canonical
    datatype, so reconstruction is exact for canonical inputs.  With
    minimal=True (the default) an edge's triple is kept at top level only
    when no metadata reasserts it embedded.
    """
    term_map: dict[str, Term] = {}
    counter = 0
    for v in sorted(p.vertices):
        by_key: dict[str, list] = defaultdict(list)
        for prop in sorted(p.properties(v), key=property_sort_key):
            by_key[prop.key].append(prop.value)
        kind = _text_value(_single(by_key, KIND_KEY, v), KIND_KEY, v)
        if kind == KIND_IRI:
            if set(by_key) != {KIND_KEY, IRI_KEY}:
                raise MalformedRdfLikePgError(f"IRI vertex {v!r} has unexpected properties")
            text = _text_value(_single(by_key, IRI_KEY, v), IRI_KEY, v)
            iri = string_to_iri(text)
            if iri is None:
                raise MalformedRdfLikePgError(f"vertex {v!r} IRI is not a valid IRI: {text!r}")
            term_map[v] = iri
        elif kind == KIND_BLANK_NODE:
            if set(by_key) != {KIND_KEY}:
                raise MalformedRdfLikePgError(f"blank node vertex {v!r} has unexpected properties")
            counter += 1
            term_map[v] = BNode(f"b{counter}")
        elif kind == KIND_LITERAL:
            if not set(by_key) <= {KIND_KEY, LITERAL_KEY, DATATYPE_KEY, LANGUAGE_KEY}:
                raise MalformedRdfLikePgError(f"literal vertex {v!r} has unexpected properties")
            value = _single(by_key, LITERAL_KEY, v)
            datatype = _text_value(_single(by_key, DATATYPE_KEY, v), DATATYPE_KEY, v)
            dt_iri = string_to_iri(datatype)
            if dt_iri is None:
                raise MalformedRdfLikePgError(
                    f"vertex {v!r} datatype is not a valid IRI: {datatype!r}"
                )
            language = None
            if LANGUAGE_KEY in by_key:
                language = _text_value(_single(by_key, LANGUAGE_KEY, v), LANGUAGE_KEY, v)
            try:
                term_map[v] = Literal(value_to_literal(value).lexical_form, dt_iri, language)
            except ValueError as exc:
                raise MalformedRdfLikePgError(f"vertex {v!r}: {exc}") from exc
        else:
            raise MalformedRdfLikePgError(f"vertex {v!r} has unknown kind {kind!r}")

    triples: set[Triple] = set()
    for e in sorted(p.edges):
        subject = term_map[p.source(e)]
        if isinstance(subject, Literal):
            raise MalformedRdfLikePgError(f"edge {e!r} starts at a literal vertex")
        predicate = string_to_iri(p.label(e))
        if predicate is None:
            raise MalformedRdfLikePgError(f"edge {e!r} label is not a valid IRI: {p.label(e)!r}")
        t = Triple(subject, predicate, term_map[p.target(e)])
        triples.add(t)
        for prop in sorted(p.properties(e), key=property_sort_key):
            key_iri = string_to_iri(prop.key)
            if key_iri is None:
                raise MalformedRdfLikePgError(
                    f"edge {e!r} property key is not a valid IRI: {prop.key!r}"
                )
            triples.add(Triple(t, key_iri, value_to_literal(prop.value)))

    result = RdfStarGraph(triples)
    return minimize(result) if minimal else result


def to_simple_pg(g: RdfStarGraph, mode: str = "lenient") -> SimplePgResult:
    """Transform a strongly convertible graph into the simple property graph.

    Vertices are the IRI/blank subject-object nodes; attribute triples fold
    into vertex properties (IRI vertices also record their IRI text under
    the reserved "IRI" key); relationship triples become edges; metadata
    triples become edge properties.
    """
    report = check_strongly_pg_convertible(g, mode)
    if not report.convertible:
        raise NotStronglyConvertibleError(report)

    nodes = sorted(subject_object_nodes(g), key=term_key)
    vertex_map: dict[Union[Iri, BNode], str] = {n: f"v{i}" for i, n in enumerate(nodes, start=1)}
    relations = sorted(relationship_triples(g), key=term_key)
    edge_map = {t: f"e{i}" for i, t in enumerate(relations, start=1)}

    props: dict[str, set[Property]] = {vid: set() for vid in vertex_map.values()}
    for node, vid in vertex_map.items():
        if isinstance(node, Iri):
            props[vid].add(Property(IRI_KEY, Text(iri_to_string(node))))
    for a in sorted(attribute_triples(g), key=term_key):
        value = value_from_literal(a.object, mode)
        props[vertex_map[a.subject]].add(Property(iri_to_string(a.predicate), value))

    src = {edge_map[t]: vertex_map[t.subject] for t in relations}
    tgt = {edge_map[t]: vertex_map[t.object] for t in relations}
    lbl = {edge_map[t]: iri_to_string(t.predicate) for t in relations}
    edge_props: dict[str, set[Property]] = defaultdict(set)
    for m in sorted(metadata_triples(g), key=term_key):
        value = value_from_literal(m.object, mode)
        edge_props[edge_map[m.subject]].add(Property(iri_to_string(m.predicate), value))
    props.update(edge_props)

    graph = PropertyGraph(vertex_map.values(), edge_map.values(), src, tgt, lbl, props)
    return SimplePgResult(graph, vertex_map, edge_map)


def pg_to_rdf_star(p: PropertyGraph, config: MappingConfig | None = None) -> RdfStarGraph:
    """Represent a property-unique, edge-unique property graph in RDF-star.

    Vertex properties become plain triples about the vertex's node term;
    an edge with properties contributes one metadata triple per property
    about its embedded edge triple; a propertyless edge contributes its
    edge triple directly.  The output is always minimal.
    """
    config = config or MappingConfig()
    pv = property_uniqueness_violations(p)
    if pv:
        raise NotPropertyUniqueError(pv)
    ev = edge_uniqueness_violations(p)
    if ev:
        raise NotEdgeUniqueError(ev)

    node_of = assign_vertex_identities(config.vertex_id_strategy, p)
    key_map, label_map = config.key_map, config.label_map
    triples: set[Triple] = set()
    for v in sorted(p.vertices):
        for prop in sorted(p.properties(v), key=property_sort_key):
            triples.add(Triple(node_of[v], key_map.apply(prop.key), value_to_literal(prop.value)))
    for e in sorted(p.edges):
        edge_triple = Triple(
            node_of[p.source(e)], label_map.apply(p.label(e)), node_of[p.target(e)]
        )
        edge_properties = sorted(p.properties(e), key=property_sort_key)
        if edge_properties:
            for prop in edge_properties:
                triples.add(
                    Triple(edge_triple, key_map.apply(prop.key), value_to_literal(prop.value))
                )
        else:
            triples.add(edge_triple)
    return RdfStarGraph(triples)


def canonicalize_values(g: RdfStarGraph, mode: str = "lenient") -> RdfStarGraph:
    """Rewrite every literal that carries a property value to that value's
    canonical literal; literals outside the value mapping stay unchanged.
    Idempotent, and the identity on graphs that are already canonical."""

    def conv(x: Term) -> Term:
        if isinstance(x, Literal):
            value = value_from_literal(x, mode)
            return value_to_literal(value) if value is not None else x
        if isinstance(x, Triple):
            return Triple(conv(x.subject), x.predicate, conv(x.object))
        return x

    return RdfStarGraph(conv(t) for t in g.triples)
