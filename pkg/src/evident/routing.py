"""Belief-driven data-source selection, query decomposition, and views.

Each registered source advertises its schema as per-attribute capability
weights; the belief that a query can be processed against it is computed
recursively over the query tree (conjunction multiplies supports,
disjunction co-multiplies), yielding an evidential interval per source.
Polling keeps the sources the query remains plausible against, decomposition
splits the query into maximal fragments each source can fully answer, and a
view merges same-schema sources into one stronger virtual source.

No query syntax for any concrete database engine is generated here; the
output of routing is a plan, not SQL.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ._jsonutil import parse_document, require
from .errors import (
    DegreeOutOfRange,
    DuplicateSourceId,
    EmptyShortlist,
    ImpliesNotRoutable,
    InvalidSource,
    ParseError,
    SchemaMismatch,
    TooFewParts,
)
from .frames import And, Atom, Implies, Or, QueryExpr
from .masses import EvidentialInterval


@dataclass(frozen=True, eq=True)
class SourceDescriptor:
    """One database or knowledge source: id, capability weights, priority."""

    id: str
    schema: Mapping[str, float]
    priority: int = 0

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise InvalidSource("source id must be a non-empty string")
        schema = dict(self.schema)
        for attr, weight in schema.items():
            if not isinstance(attr, str) or not attr:
                raise InvalidSource(f"blank attribute name in source {self.id!r}")
            w = float(weight)
            if not 0.0 <= w <= 1.0 or math.isnan(w):
                raise InvalidSource(
                    f"weight {weight!r} for {attr!r} in source {self.id!r} outside [0, 1]"
                )
            schema[attr] = w
        object.__setattr__(self, "schema", schema)


@dataclass(frozen=True)
class RoutePlan:
    """Where each fragment of a query should run.

    ``assignments`` pair disjoint sub-expressions with the source chosen for
    them; recomposing the fragments (plus ``unassigned``) in place
    reconstructs the original query. ``total_support`` is the product of the
    assigned fragments' supports.
    """

    assignments: tuple[tuple[QueryExpr, str], ...]
    total_support: float
    unassigned: tuple[QueryExpr, ...]


def _reject_implies(query: QueryExpr) -> None:
    if isinstance(query, Implies):
        raise ImpliesNotRoutable(
            "rewrite implications (e.g. via translate_logical) before routing"
        )
    if isinstance(query, (And, Or)):
        for child in query.children:
            _reject_implies(child)


def _bounds(query: QueryExpr, schema: Mapping[str, float]) -> tuple[float, float]:
    if isinstance(query, Atom):
        weight = schema.get(query.name)
        if weight is None:
            return 0.0, 0.0
        return weight, 1.0
    if isinstance(query, And):
        support, plausibility = 1.0, 1.0
        for child in query.children:
            s, p = _bounds(child, schema)
            support *= s
            plausibility *= p
        return support, plausibility
    if isinstance(query, Or):
        miss_s, miss_p = 1.0, 1.0
        for child in query.children:
            s, p = _bounds(child, schema)
            miss_s *= 1.0 - s
            miss_p *= 1.0 - p
        return 1.0 - miss_s, 1.0 - miss_p
    raise ImpliesNotRoutable("routing is defined over and/or/atom queries")


def answerability(query: QueryExpr, src: SourceDescriptor) -> EvidentialInterval:
    """Evidential interval for "this source can process the query".

    An attribute in the schema contributes a simple support of its
    capability weight; a missing attribute is certainly unanswerable.
    Conjunctions combine child supports by product (independence across
    attributes), disjunctions by co-product. Implications are not routable
    and must be rewritten by the caller.
    """
    _reject_implies(query)
    support, plausibility = _bounds(query, src.schema)
    return EvidentialInterval(support, plausibility)


def poll(
    query: QueryExpr,
    sources: Iterable[SourceDescriptor],
    threshold: float = 0.5,
) -> list[tuple[str, EvidentialInterval]]:
    """Shortlist the sources the query can plausibly run against.

    Keeps sources whose answerability plausibility reaches ``threshold`` and
    discards all others; ordered by support descending, then priority, then
    id.
    """
    threshold = float(threshold)
    if not 0.0 <= threshold <= 1.0 or math.isnan(threshold):
        raise DegreeOutOfRange(f"poll threshold {threshold!r} outside [0, 1]")
    by_id = {}
    scored = []
    for src in sources:
        interval = answerability(query, src)
        if interval.plausibility >= threshold:
            scored.append((src, interval))
            by_id[src.id] = src
    scored.sort(key=lambda pair: (-pair[1].support, pair[0].priority, pair[0].id))
    return [(src.id, interval) for src, interval in scored]


def _fully_answerable(query: QueryExpr, src: SourceDescriptor) -> bool:
    return all(src.schema.get(a, 0.0) > 0.0 for a in query.attributes())


def _best_source(
    query: QueryExpr, shortlist: Sequence[SourceDescriptor]
) -> tuple[str, float] | None:
    candidates = [
        (src, _bounds(query, src.schema)[0])
        for src in shortlist
        if _fully_answerable(query, src)
    ]
    if not candidates:
        return None
    candidates.sort(key=lambda pair: (-pair[1], pair[0].priority, pair[0].id))
    best, support = candidates[0]
    return best.id, support


def decompose(query: QueryExpr, shortlist: Sequence[SourceDescriptor]) -> RoutePlan:
    """Split a query into maximal fragments single sources can answer.

    Walking from the root, any sub-tree some shortlisted source fully
    answers (positive weight on every atom in it) stays whole and goes to
    the source with the highest support for it, ties broken by priority
    then id. Atoms no source answers are reported unassigned. The plan's
    total support multiplies the assigned fragments' supports.
    """
    shortlist = list(shortlist)
    if not shortlist:
        raise EmptyShortlist("decompose needs at least one candidate source")
    _reject_implies(query)
    assignments: list[tuple[QueryExpr, str]] = []
    supports: list[float] = []
    unassigned: list[QueryExpr] = []

    def walk(node: QueryExpr) -> None:
        best = _best_source(node, shortlist)
        if best is not None:
            source_id, support = best
            assignments.append((node, source_id))
            supports.append(support)
            return
        if isinstance(node, Atom):
            unassigned.append(node)
            return
        for child in node.children:
            walk(child)

    walk(query)
    return RoutePlan(
        assignments=tuple(assignments),
        total_support=math.prod(supports),
        unassigned=tuple(unassigned),
    )


def make_view(name: str, parts: Sequence[SourceDescriptor]) -> SourceDescriptor:
    """Merge same-schema sources into one virtual source.

    The view answers an attribute as well as its best member does (max
    weight) and inherits the most preferred priority.
    """
    parts = list(parts)
    if len(parts) < 2:
        raise TooFewParts("a view needs at least two member sources")
    shared = set(parts[0].schema)
    everything = set()
    for part in parts:
        everything |= set(part.schema)
        shared &= set(part.schema)
    if everything != shared:
        raise SchemaMismatch(everything - shared)
    weights = {
        attr: max(part.schema[attr] for part in parts) for attr in sorted(shared)
    }
    return SourceDescriptor(
        id=name,
        schema=weights,
        priority=min(part.priority for part in parts),
    )


# -- file formats ---------------------------------------------------------------


def load_sources(text: str) -> list[SourceDescriptor]:
    """Parse a sources file: a JSON list of {id, priority, schema} objects."""
    data = parse_document(text)
    require(isinstance(data, list), "sources file must be a JSON list")
    out: list[SourceDescriptor] = []
    seen: set[str] = set()
    for obj in data:
        require(isinstance(obj, dict), "each source must be a JSON object")
        require(isinstance(obj.get("id"), str), "source needs a string 'id'")
        require(isinstance(obj.get("schema"), dict), "source needs a 'schema' object")
        priority = obj.get("priority", 0)
        require(
            isinstance(priority, int) and not isinstance(priority, bool),
            f"priority of source {obj['id']!r} must be an integer",
        )
        if obj["id"] in seen:
            raise DuplicateSourceId(f"source id {obj['id']!r} appears twice")
        seen.add(obj["id"])
        out.append(
            SourceDescriptor(id=obj["id"], schema=obj["schema"], priority=priority)
        )
    return out


def load_query(text: str) -> QueryExpr:
    """Parse a query file: nested {op, children?, name?} objects."""
    return _query_node(parse_document(text))


def _query_node(obj) -> QueryExpr:
    require(isinstance(obj, dict), "query node must be a JSON object")
    op = obj.get("op")
    if op == "atom":
        require(isinstance(obj.get("name"), str), "atom node needs a string 'name'")
        return Atom(obj["name"])
    if op in ("and", "or"):
        children = obj.get("children")
        require(isinstance(children, list), f"'{op}' node needs a 'children' list")
        nodes = [_query_node(child) for child in children]
        require(len(nodes) >= 2, f"'{op}' node needs at least two children")
        return And(*nodes) if op == "and" else Or(*nodes)
    raise ParseError(f"unknown query op {op!r} (expected and/or/atom)")
