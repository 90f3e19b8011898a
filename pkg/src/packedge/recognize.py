"""Structural predicates: cubic, claw-free, bridges, 2-edge-connectivity.

Each check either returns a plain verdict or a witness that can be validated
independently (a claw's center and leaves, the exact set of bridge edge ids).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Optional, Tuple

from .graph import EdgeId, MultiGraph, VertexId


@dataclass(frozen=True)
class ClawWitness:
    """An induced K_{1,3}: `center` adjacent to three pairwise non-adjacent leaves."""
    center: VertexId
    leaves: Tuple[VertexId, VertexId, VertexId]


BridgeSet = FrozenSet[EdgeId]


def is_cubic(g: MultiGraph) -> bool:
    """True iff every vertex has degree exactly 3 (parallel edges count)."""
    return all(g.degree(v) == 3 for v in g.vertices)


def find_claw(g: MultiGraph) -> Optional[ClawWitness]:
    """Some induced claw of g, or None if g is claw-free.

    Direct neighborhood enumeration; on cubic graphs each vertex has at most
    three distinct neighbors, so this is linear overall.
    """
    for v in g.vertices:
        distinct = g.neighbors(v)
        if len(distinct) < 3:
            continue
        for trio in combinations(distinct, 3):
            a, b, c = trio
            if not g.has_edge(a, b) and not g.has_edge(a, c) \
                    and not g.has_edge(b, c):
                return ClawWitness(center=v, leaves=trio)
    return None


def find_bridges(g: MultiGraph) -> BridgeSet:
    """All cut edges of g, by iterative DFS lowpoint computation.

    Tracked per edge id, so one edge of a parallel pair never shadows the
    other: parallel edges are never bridges.
    """
    index = {}
    low = {}
    bridges = set()
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        # stack entries: (vertex, incoming edge id, iterator position)
        index[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, 0)]
        while stack:
            v, in_eid, i = stack.pop()
            incident = g.incident(v)
            if i < len(incident):
                stack.append((v, in_eid, i + 1))
                eid, u = incident[i]
                if eid == in_eid:
                    continue
                if u not in index:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append((u, eid, 0))
                else:
                    low[v] = min(low[v], index[u])
            else:
                if in_eid >= 0:
                    parent = g.other_end(in_eid, v)
                    if low[v] > index[parent]:
                        bridges.add(in_eid)
                    low[parent] = min(low[parent], low[v])
    return frozenset(bridges)


def find_bridges_bruteforce(g: MultiGraph) -> BridgeSet:
    """Definitional bridge finder: delete each edge, count components."""
    base = len(g.connected_components())
    out = set()
    for eid in g.edge_ids:
        reduced = MultiGraph(
            [g.endpoints(f) for f in g.edge_ids if f != eid],
            vertices=g.vertices)
        if len(reduced.connected_components()) > base:
            out.add(eid)
    return frozenset(out)


def is_two_edge_connected(g: MultiGraph) -> bool:
    """Connected, at least two vertices, and bridgeless."""
    return g.n >= 2 and g.is_connected() and not find_bridges(g)
