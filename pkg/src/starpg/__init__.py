"""Reconcile RDF-star graphs and property graphs.

Data models for both worlds, transformations in each direction with
checked preconditions, and deterministic Turtle-star / PG-JSON I/O.
"""

from .namespaces import (
    RDF,
    RDF_LANG_STRING,
    XSD,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    XSD_STRING,
)
from .mappings import (
    DEFAULT_EDGE_LABEL_PREFIX,
    DEFAULT_PROPERTY_KEY_PREFIX,
    FreshBlankNodes,
    IriTemplate,
    MappingConfig,
    MappingConfigError,
    TemplateIriMapping,
    assign_vertex_identities,
    iri_to_string,
    parse_vertex_id_strategy,
    percent_decode,
    percent_encode,
    string_to_iri,
    value_from_literal,
    value_to_literal,
)
from .pg import (
    Boolean,
    DanglingEdgeError,
    Double,
    IdCollisionError,
    Integer,
    MissingEdgeLabelError,
    PgValidationError,
    Property,
    PropertyGraph,
    PropertyValue,
    Text,
    edge_uniqueness_violations,
    is_edge_unique,
    is_property_unique,
    property_uniqueness_violations,
)
from .pgjson import SchemaError, parse_pg_json, serialize_pg_json
from .rdf import (
    BNode,
    Iri,
    Literal,
    RdfStarGraph,
    Triple,
    attribute_triples,
    blank_node_labels,
    canonicalize_bnodes,
    embedded_triples,
    is_metadata_triple,
    is_minimal,
    isomorphic,
    mentioned_terms,
    metadata_triples,
    minimize,
    nesting_depth,
    ordinary_triples,
    redundant_triples,
    relabel_bnodes,
    relationship_triples,
    subject_object_nodes,
    subject_object_terms,
    term_key,
)
from .transforms import (
    ConvertibilityError,
    ConvertibilityReport,
    MalformedRdfLikePgError,
    NotConvertibleError,
    NotEdgeUniqueError,
    NotPropertyUniqueError,
    NotStronglyConvertibleError,
    RdfLikePgResult,
    SimplePgResult,
    Violation,
    canonicalize_values,
    check_pg_convertible,
    check_strongly_pg_convertible,
    from_rdf_like_pg,
    pg_to_rdf_star,
    to_rdf_like_pg,
    to_simple_pg,
)
from .turtle import (
    NotPlainRdfError,
    TurtleParseError,
    embed_plain_rdf,
    format_term,
    parse_turtle_star,
    serialize_turtle_star,
    unfold_to_rdf,
)

__version__ = "0.1.0"

__all__ = [
    "BNode",
    "Boolean",
    "ConvertibilityError",
    "ConvertibilityReport",
    "DEFAULT_EDGE_LABEL_PREFIX",
    "DEFAULT_PROPERTY_KEY_PREFIX",
    "DanglingEdgeError",
    "Double",
    "FreshBlankNodes",
    "IdCollisionError",
    "Integer",
    "Iri",
    "IriTemplate",
    "Literal",
    "MalformedRdfLikePgError",
    "MappingConfig",
    "MappingConfigError",
    "MissingEdgeLabelError",
    "NotConvertibleError",
    "NotEdgeUniqueError",
    "NotPlainRdfError",
    "NotPropertyUniqueError",
    "NotStronglyConvertibleError",
    "PgValidationError",
    "Property",
    "PropertyGraph",
    "PropertyValue",
    "RDF",
    "RDF_LANG_STRING",
    "RdfLikePgResult",
    "RdfStarGraph",
    "SchemaError",
    "SimplePgResult",
    "TemplateIriMapping",
    "Text",
    "Triple",
    "TurtleParseError",
    "Violation",
    "XSD",
    "XSD_BOOLEAN",
    "XSD_DECIMAL",
    "XSD_DOUBLE",
    "XSD_INTEGER",
    "XSD_STRING",
    "assign_vertex_identities",
    "attribute_triples",
    "blank_node_labels",
    "canonicalize_bnodes",
    "canonicalize_values",
    "check_pg_convertible",
    "check_strongly_pg_convertible",
    "edge_uniqueness_violations",
    "embed_plain_rdf",
    "embedded_triples",
    "format_term",
    "from_rdf_like_pg",
    "iri_to_string",
    "is_edge_unique",
    "is_metadata_triple",
    "is_minimal",
    "is_property_unique",
    "isomorphic",
    "mentioned_terms",
    "metadata_triples",
    "minimize",
    "nesting_depth",
    "ordinary_triples",
    "parse_pg_json",
    "parse_turtle_star",
    "parse_vertex_id_strategy",
    "percent_decode",
    "percent_encode",
    "pg_to_rdf_star",
    "property_uniqueness_violations",
    "redundant_triples",
    "relabel_bnodes",
    "relationship_triples",
    "serialize_pg_json",
    "serialize_turtle_star",
    "string_to_iri",
    "subject_object_nodes",
    "subject_object_terms",
    "term_key",
    "to_rdf_like_pg",
    "to_simple_pg",
    "unfold_to_rdf",
    "value_from_literal",
    "value_to_literal",
]
