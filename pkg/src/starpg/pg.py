"""Property graph data model: vertices, edges, and set-valued properties.

Properties attach to vertices and edges as sets of key-value pairs, so an
element may carry several values under the same key; the uniqueness checks
below report when that happens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping


class PgValidationError(ValueError):
    """Invalid property graph construction input."""


class DanglingEdgeError(PgValidationError):
    """An edge endpoint refers to a missing vertex, or has no endpoint at all."""


class MissingEdgeLabelError(PgValidationError):
    """An edge has no label entry."""


class IdCollisionError(PgValidationError):
    """A vertex id and an edge id coincide."""


class PropertyValue:
    """Base of the four value kinds; values of different kinds never compare equal."""

    __slots__ = ()


@dataclass(frozen=True)
class Text(PropertyValue):
    value: str

    def __post_init__(self) -> None:
        if not isinstance(self.value, str):
            raise TypeError(f"Text takes a str, got {type(self.value).__name__}")


@dataclass(frozen=True)
class Integer(PropertyValue):
    value: int

    def __post_init__(self) -> None:
        # bool is an int subtype in Python; the kinds must stay disjoint.
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise TypeError(f"Integer takes an int, got {type(self.value).__name__}")


@dataclass(frozen=True)
class Double(PropertyValue):
    value: float

    def __post_init__(self) -> None:
        if isinstance(self.value, bool) or not isinstance(self.value, (int, float)):
            raise TypeError(f"Double takes a float, got {type(self.value).__name__}")
        v = float(self.value)
        if math.isnan(v):
            raise ValueError("Double cannot hold NaN")
        if v == 0.0:
            v = 0.0  # fold -0.0 so equal values have one canonical form
        object.__setattr__(self, "value", v)


@dataclass(frozen=True)
class Boolean(PropertyValue):
    value: bool

    def __post_init__(self) -> None:
        if not isinstance(self.value, bool):
            raise TypeError(f"Boolean takes a bool, got {type(self.value).__name__}")


@dataclass(frozen=True)
class Property:
    """One key-value pair attached to a vertex or edge."""

    key: str
    value: PropertyValue

    def __post_init__(self) -> None:
        if not isinstance(self.key, str):
            raise TypeError("property key must be str")
        if not isinstance(self.value, PropertyValue):
            raise TypeError(
                f"property value must be a PropertyValue, got {type(self.value).__name__}"
            )


def _property_value_key(v: PropertyValue):
    """Deterministic order over mixed-kind values."""
    if isinstance(v, Text):
        return (0, v.value)
    if isinstance(v, Integer):
        return (1, str(v.value))
    if isinstance(v, Double):
        return (2, repr(v.value))
    return (3, "true" if v.value else "false")


def property_sort_key(p: Property):
    return (p.key, _property_value_key(p.value))


class PropertyGraph:
    """A directed multigraph with total endpoint/label maps and property sets.

    All six components are validated together at construction; instances
    are immutable afterwards.  Vertex and edge ids live in one namespace
    and must not collide.
    """

    __slots__ = ("_vertices", "_edges", "_src", "_tgt", "_lbl", "_props")

    def __init__(
        self,
        vertices: Iterable[str] = (),
        edges: Iterable[str] = (),
        src: Mapping[str, str] | None = None,
        tgt: Mapping[str, str] | None = None,
        lbl: Mapping[str, str] | None = None,
        props: Mapping[str, Iterable[Property]] | None = None,
    ) -> None:
        vset = frozenset(vertices)
        eset = frozenset(edges)
        for x in vset | eset:
            if not isinstance(x, str) or not x:
                raise PgValidationError(f"element id must be a non-empty string: {x!r}")
        shared = vset & eset
        if shared:
            raise IdCollisionError(f"ids used as both vertex and edge: {sorted(shared)!r}")

        src = dict(src or {})
        tgt = dict(tgt or {})
        lbl = dict(lbl or {})
        for name, mapping in (("src", src), ("tgt", tgt), ("lbl", lbl)):
            unknown = set(mapping) - eset
            if unknown:
                raise PgValidationError(f"{name} mentions unknown edge: {sorted(unknown)!r}")
        for e in sorted(eset):
            for name, mapping in (("src", src), ("tgt", tgt)):
                if e not in mapping:
                    raise DanglingEdgeError(f"edge {e!r} has no {name} endpoint")
                if mapping[e] not in vset:
                    raise DanglingEdgeError(
                        f"edge {e!r} {name} refers to unknown vertex {mapping[e]!r}"
                    )
            if e not in lbl:
                raise MissingEdgeLabelError(f"edge {e!r} has no label")
            if not isinstance(lbl[e], str):
                raise PgValidationError(f"edge {e!r} label must be str")

        pmap: dict[str, frozenset[Property]] = {x: frozenset() for x in vset | eset}
        for x, entries in (props or {}).items():
            if x not in pmap:
                raise PgValidationError(f"properties attached to unknown element {x!r}")
            entries = frozenset(entries)
            for p in entries:
                if not isinstance(p, Property):
                    raise PgValidationError(f"not a Property on element {x!r}: {p!r}")
            pmap[x] = entries

        self._vertices = vset
        self._edges = eset
        self._src = src
        self._tgt = tgt
        self._lbl = lbl
        self._props = pmap

    @property
    def vertices(self) -> frozenset[str]:
        return self._vertices

    @property
    def edges(self) -> frozenset[str]:
        return self._edges

    @property
    def src(self) -> Mapping[str, str]:
        return MappingProxyType(self._src)

    @property
    def tgt(self) -> Mapping[str, str]:
        return MappingProxyType(self._tgt)

    @property
    def lbl(self) -> Mapping[str, str]:
        return MappingProxyType(self._lbl)

    @property
    def props(self) -> Mapping[str, frozenset[Property]]:
        return MappingProxyType(self._props)

    def source(self, edge: str) -> str:
        return self._src[edge]

    def target(self, edge: str) -> str:
        return self._tgt[edge]

    def label(self, edge: str) -> str:
        return self._lbl[edge]

    def properties(self, element: str) -> frozenset[Property]:
        return self._props[element]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PropertyGraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._edges == other._edges
            and self._src == other._src
            and self._tgt == other._tgt
            and self._lbl == other._lbl
            and self._props == other._props
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PropertyGraph({len(self._vertices)} vertices, {len(self._edges)} edges)"


def property_uniqueness_violations(g: PropertyGraph) -> list[tuple[str, str]]:
    """(element id, key) pairs where one element holds several values for a key."""
    out: list[tuple[str, str]] = []
    for x in sorted(g.vertices | g.edges):
        keys = [p.key for p in g.properties(x)]
        for key in sorted({k for k in keys if keys.count(k) > 1}):
            out.append((x, key))
    return out


def is_property_unique(g: PropertyGraph) -> bool:
    """True iff every element's property keys are pairwise distinct."""
    return not property_uniqueness_violations(g)


def edge_uniqueness_violations(g: PropertyGraph) -> list[tuple[str, str]]:
    """Pairs of distinct edges agreeing on source, target, and label."""
    by_shape: dict[tuple[str, str, str], list[str]] = {}
    for e in sorted(g.edges):
        by_shape.setdefault((g.source(e), g.target(e), g.label(e)), []).append(e)
    out: list[tuple[str, str]] = []
    for shape in sorted(by_shape):
        group = by_shape[shape]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                out.append((group[i], group[j]))
    return out


def is_edge_unique(g: PropertyGraph) -> bool:
    """True iff no two distinct edges agree on source, target, and label."""
    return not edge_uniqueness_violations(g)
