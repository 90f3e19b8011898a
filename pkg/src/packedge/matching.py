"""Perfect matchings and 2-factors of cubic multigraphs.

In a cubic graph the complement of a perfect matching is a spanning disjoint
union of cycles, so a 2-factor through up to two required edges is found by
searching for a perfect matching that avoids them.  For 2-edge-connected
cubic multigraphs that matching always exists (with at most two avoided
edges); the caller treats its absence as a precondition violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from .graph import EdgeId, GraphError, MultiGraph, VertexId


class PlesnikViolated(GraphError):
    """No 2-factor through the required edges; input was not as promised."""


@dataclass(frozen=True)
class TwoFactor:
    """Vertex-disjoint cycle cover plus its complementary perfect matching.

    ``cycles[i]`` lists edge ids in traversal order; ``cycle_vertices[i]``
    lists the vertices in the same order, so edge ``cycles[i][j]`` joins
    ``cycle_vertices[i][j]`` and ``cycle_vertices[i][(j+1) % len]``.  Cycles
    of length 2 (a parallel pair) are legal.
    """
    cycles: Tuple[Tuple[EdgeId, ...], ...]
    cycle_vertices: Tuple[Tuple[VertexId, ...], ...]
    complement: FrozenSet[EdgeId]


def perfect_matching_avoiding(h: MultiGraph,
                              forbidden: Iterable[EdgeId] = ()
                              ) -> Optional[Set[EdgeId]]:
    """A perfect matching of h disjoint from `forbidden`, or None.

    Deterministic backtracking: always matches the smallest unmatched vertex,
    trying its usable edges in edge-id order.
    """
    forbidden = frozenset(forbidden)
    if h.n % 2 != 0:
        return None
    matched: Set[VertexId] = set()
    chosen: List[EdgeId] = []
    verts = h.vertices

    def extend() -> bool:
        v = next((x for x in verts if x not in matched), None)
        if v is None:
            return True
        for eid, u in h.incident(v):
            if eid in forbidden or u in matched:
                continue
            matched.add(v)
            matched.add(u)
            chosen.append(eid)
            if extend():
                return True
            chosen.pop()
            matched.discard(v)
            matched.discard(u)
        return False

    if extend():
        return set(chosen)
    return None


def _extract_cycles(h: MultiGraph, cycle_edges: Set[EdgeId]
                    ) -> Tuple[Tuple[Tuple[EdgeId, ...], ...],
                               Tuple[Tuple[VertexId, ...], ...]]:
    """Walk the 2-regular subgraph given by `cycle_edges`, deterministically.

    Starts each cycle at its smallest unvisited vertex and leaves it through
    the smallest usable edge id; tracking edge ids (not endpoints) makes
    2-cycles through a parallel pair come out correctly.
    """
    unused = set(cycle_edges)
    eids_out: List[Tuple[EdgeId, ...]] = []
    verts_out: List[Tuple[VertexId, ...]] = []
    seen: Set[VertexId] = set()
    for start in h.vertices:
        if start in seen or not any(
                eid in unused for eid, _ in h.incident(start)):
            continue
        eids: List[EdgeId] = []
        verts: List[VertexId] = []
        v = start
        while True:
            verts.append(v)
            seen.add(v)
            # mid-walk there is exactly one way forward; at the start vertex
            # the orientation goes toward the smaller neighbor id first
            step = min(((eid, u) for eid, u in h.incident(v)
                        if eid in unused), key=lambda p: (p[1], p[0]))
            unused.discard(step[0])
            eids.append(step[0])
            v = step[1]
            if v == start:
                break
        eids_out.append(tuple(eids))
        verts_out.append(tuple(verts))
    assert not unused, "cycle edges left over; subgraph was not 2-regular"
    return tuple(eids_out), tuple(verts_out)


def two_factor_containing(h: MultiGraph,
                          required: Iterable[EdgeId] = ()) -> TwoFactor:
    """A 2-factor of cubic h whose cycles include every required edge.

    The complement is the perfect matching found by avoiding `required`;
    PlesnikViolated when no such matching exists.
    """
    required = frozenset(required)
    matching = perfect_matching_avoiding(h, required)
    if matching is None:
        raise PlesnikViolated(
            f"no perfect matching avoiding {sorted(required)}")
    cycle_edges = {eid for eid in h.edge_ids if eid not in matching}
    assert required <= cycle_edges
    eids, verts = _extract_cycles(h, cycle_edges)
    covered = {v for tour in verts for v in tour}
    assert len(covered) == h.n, "2-factor does not cover every vertex"
    return TwoFactor(eids, verts, frozenset(matching))
