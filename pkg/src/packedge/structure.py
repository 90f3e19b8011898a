"""Decompositions of claw-free cubic graphs.

Two structures are computed here.  For 2-edge-connected inputs: the
triangle-and-diamond-string decomposition (the graph is K4, a ring of
diamonds, or a cubic multigraph H with every vertex blown up into a triangle
and some edges realized as strings of diamonds).  For inputs with bridges:
the bridge tree with components classified, boundary data for the degree-2
vertices, and the cubic completion ("tilde") of each big component.

Every structural fact the later coloring stages rely on is asserted here and
surfaced as an error when violated, so a bad input fails loudly at the
decomposition stage rather than producing a wrong coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from .graph import (EdgeId, GraphError, MultiGraph, VertexId, build_graph,
                    relabel_to_ints)
from .recognize import find_bridges, find_claw, is_cubic, is_two_edge_connected

IS_K4 = "k4"
RING_OF_DIAMONDS = "ring-of-diamonds"
SUBSTITUTED = "substituted"

K3_COMPONENT = "k3"
DIAMOND_COMPONENT = "diamond"
BIG_COMPONENT = "big"


class NotDecomposable(GraphError):
    """The structural decomposition's assertions failed for this input."""


class NoBridges(GraphError):
    """bridge_decompose was called on a bridgeless graph."""


class ClassificationFailed(GraphError):
    """A bridge-tree component matches none of the three allowed shapes."""


class ClaimViolation(GraphError):
    """A structural claim about component boundaries failed.

    Carries the claim id and a witness so tests can pin down what broke.
    """

    def __init__(self, claim: str, witness):
        super().__init__(f"claim {claim!r} violated by {witness!r}")
        self.claim = claim
        self.witness = witness


# ---------------------------------------------------------------------------
# diamonds and strings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Diamond:
    """Induced K4-minus-an-edge: internal pair adjacent, externals not."""
    internal: Tuple[VertexId, VertexId]
    external: Tuple[VertexId, VertexId]
    internal_edge: EdgeId
    edges: FrozenSet[EdgeId]

    @property
    def vertices(self) -> FrozenSet[VertexId]:
        return frozenset(self.internal) | frozenset(self.external)

    def external_edges_at(self, g: MultiGraph, x: VertexId
                          ) -> Tuple[EdgeId, EdgeId]:
        z, w = self.internal
        return (g.edge_between(x, z), g.edge_between(x, w))

    def external_pairs(self, g: MultiGraph
                       ) -> Tuple[Tuple[EdgeId, EdgeId], Tuple[EdgeId, EdgeId]]:
        """The two pairs of non-adjacent external edges, smallest id first."""
        x, y = self.external
        z, w = self.internal
        pair_a = (g.edge_between(x, z), g.edge_between(y, w))
        pair_b = (g.edge_between(x, w), g.edge_between(y, z))
        pairs = sorted([tuple(sorted(pair_a)), tuple(sorted(pair_b))])
        return pairs[0], pairs[1]


def find_diamonds(g: MultiGraph) -> List[Diamond]:
    """All induced diamonds, each reported once via its internal edge."""
    out = []
    seen: Set[FrozenSet[VertexId]] = set()
    for eid in g.edge_ids:
        z, w = g.endpoints(eid)
        common = sorted(set(g.neighbors(z)) & set(g.neighbors(w)) - {z, w})
        if len(common) != 2:
            continue
        x, y = common
        quad = frozenset((x, y, z, w))
        if quad in seen:
            continue
        if g.has_edge(x, y):
            continue
        wanted = {frozenset(p): 1 for p in
                  ((x, z), (x, w), (y, z), (y, w), (z, w))}
        counts: Dict[FrozenSet[VertexId], int] = {}
        for f in g.edge_ids:
            a, b = g.endpoints(f)
            if a in quad and b in quad:
                key = frozenset((a, b))
                counts[key] = counts.get(key, 0) + 1
        if counts != wanted:
            continue
        seen.add(quad)
        dedges = frozenset(f for f in g.edge_ids
                           if set(g.endpoints(f)) <= quad)
        out.append(Diamond(internal=(min(z, w), max(z, w)),
                           external=(x, y),
                           internal_edge=g.edge_between(z, w),
                           edges=dedges))
    out.sort(key=lambda d: d.internal)
    return out


@dataclass(frozen=True)
class DiamondString:
    """Maximal chain of diamonds, oriented from attach_left to attach_right.

    ``exts[i]`` holds diamond i's externals as (left-facing, right-facing);
    ``connectors[i]`` joins diamonds i and i+1.  The attachment edges join
    the boundary vertices (which are not part of the string) to the first
    and last diamond.
    """
    diamonds: Tuple[Diamond, ...]
    exts: Tuple[Tuple[VertexId, VertexId], ...]
    connectors: Tuple[EdgeId, ...]
    attach_left: VertexId
    attach_left_edge: EdgeId
    attach_right: VertexId
    attach_right_edge: EdgeId

    @property
    def k(self) -> int:
        return len(self.diamonds)

    @property
    def vertices(self) -> FrozenSet[VertexId]:
        out: Set[VertexId] = set()
        for d in self.diamonds:
            out |= d.vertices
        return frozenset(out)

    def region_edges(self) -> FrozenSet[EdgeId]:
        """Every edge this string is responsible for coloring."""
        out = {self.attach_left_edge, self.attach_right_edge}
        out.update(self.connectors)
        for d in self.diamonds:
            out.update(d.edges)
        return frozenset(out)

    def reversed(self) -> "DiamondString":
        return DiamondString(
            diamonds=tuple(reversed(self.diamonds)),
            exts=tuple((b, a) for a, b in reversed(self.exts)),
            connectors=tuple(reversed(self.connectors)),
            attach_left=self.attach_right,
            attach_left_edge=self.attach_right_edge,
            attach_right=self.attach_left,
            attach_right_edge=self.attach_left_edge)


def _external_exit(g: MultiGraph, d: Diamond, x: VertexId
                   ) -> Tuple[EdgeId, VertexId]:
    """The single edge leaving the diamond at external vertex x."""
    outs = [(eid, u) for eid, u in g.incident(x) if eid not in d.edges]
    if len(outs) != 1:
        raise NotDecomposable(
            f"external vertex {x!r} has {len(outs)} edges leaving its diamond")
    return outs[0]


def collect_diamond_strings(g: MultiGraph) -> List[DiamondString]:
    """Group the diamonds of g into maximal strings.

    Raises NotDecomposable if diamonds overlap or chain into a closed cycle
    (a closed cycle of diamonds is a ring, which is handled elsewhere).
    """
    diamonds = find_diamonds(g)
    owner: Dict[VertexId, int] = {}
    for i, d in enumerate(diamonds):
        for v in d.vertices:
            if v in owner:
                raise NotDecomposable(f"vertex {v!r} lies in two diamonds")
            owner[v] = i

    # neighbor diamonds via the unique outside edge at each external vertex
    links: Dict[int, List[Tuple[EdgeId, VertexId, VertexId, Optional[int]]]] = {}
    for i, d in enumerate(diamonds):
        entries = []
        for x in d.external:
            eid, u = _external_exit(g, d, x)
            entries.append((eid, x, u, owner.get(u)))
        links[i] = entries

    strings: List[DiamondString] = []
    used: Set[int] = set()
    for i, d in enumerate(diamonds):
        if i in used:
            continue
        neighbor_count = sum(1 for (_, _, _, o) in links[i] if o is not None)
        if neighbor_count == 2:
            continue  # interior of some string; reached from an end
        # walk the chain starting at this end diamond
        chain = [i]
        used.add(i)
        prev = None
        cur = i
        while True:
            nxt = [o for (_, _, _, o) in links[cur]
                   if o is not None and o != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            if cur in used:
                raise NotDecomposable("diamonds chain into a closed cycle")
            used.add(cur)
            chain.append(cur)
        strings.append(_orient_string(g, diamonds, links, chain))
    if len(used) != len(diamonds):
        raise NotDecomposable("diamonds chain into a closed cycle")
    return strings


def _orient_string(g, diamonds, links, chain) -> DiamondString:
    first, last = chain[0], chain[-1]
    if len(chain) == 1:
        ends = [(eid, x, u) for (eid, x, u, o) in links[first] if o is None]
        if len(ends) != 2:
            raise NotDecomposable("lone diamond without two free externals")
        ends.sort(key=lambda t: t[2])
        left, right = ends
    else:
        lefts = [(eid, x, u) for (eid, x, u, o) in links[first] if o is None]
        rights = [(eid, x, u) for (eid, x, u, o) in links[last] if o is None]
        if len(lefts) != 1 or len(rights) != 1:
            raise NotDecomposable("string end diamond without a free external")
        left, right = lefts[0], rights[0]
        if right[2] < left[2]:  # deterministic orientation: smaller attach left
            chain = list(reversed(chain))
            first, last = last, first
            left, right = right, left

    ordered = [diamonds[i] for i in chain]
    exts: List[Tuple[VertexId, VertexId]] = []
    connectors: List[EdgeId] = []
    facing = left[1]
    for pos, i in enumerate(chain):
        d = diamonds[i]
        other = next(x for x in d.external if x != facing)
        exts.append((facing, other))
        if pos + 1 < len(chain):
            eid, u = _external_exit(g, d, other)
            connectors.append(eid)
            nxt = diamonds[chain[pos + 1]]
            if u not in nxt.external:
                raise NotDecomposable("connector does not reach the next "
                                      "diamond's external vertex")
            facing = u
    return DiamondString(
        diamonds=tuple(ordered), exts=tuple(exts),
        connectors=tuple(connectors),
        attach_left=left[2], attach_left_edge=left[0],
        attach_right=right[2], attach_right_edge=right[0])


def detect_ring_of_diamonds(g: MultiGraph) -> Optional[int]:
    """k if g is a closed cycle of k >= 2 diamonds covering every vertex."""
    diamonds = find_diamonds(g)
    k = len(diamonds)
    if k < 2 or 4 * k != g.n:
        return None
    owner: Dict[VertexId, int] = {}
    for i, d in enumerate(diamonds):
        for v in d.vertices:
            if v in owner:
                return None
            owner[v] = i
    if len(owner) != g.n:
        return None
    # every external's unique outside edge must reach another diamond, and the
    # diamond-level multigraph must be a single closed cycle
    degree = [0] * k
    seen_conn: Set[EdgeId] = set()
    for i, d in enumerate(diamonds):
        for x in d.external:
            try:
                eid, u = _external_exit(g, d, x)
            except NotDecomposable:
                return None
            if u not in owner or owner[u] == i:
                return None
            degree[i] += 1
            seen_conn.add(eid)
    if any(deg != 2 for deg in degree):
        return None
    if len(seen_conn) != k:
        return None
    return k if g.is_connected() else None


# ---------------------------------------------------------------------------
# the 2-edge-connected decomposition
# ---------------------------------------------------------------------------

@dataclass
class Triangle:
    """A substituted triangle; corner_for maps an H-edge id to the corner
    vertex whose outgoing edge realizes that H-edge."""
    vertices: Tuple[VertexId, VertexId, VertexId]
    edge_ids: Tuple[EdgeId, EdgeId, EdgeId]
    corner_for: Dict[int, VertexId] = field(default_factory=dict)

    def third_corner(self, a: VertexId, b: VertexId) -> VertexId:
        return next(v for v in self.vertices if v not in (a, b))


@dataclass
class EdgeRealization:
    """How one H-edge appears in G: a plain edge or a string of diamonds.

    corner_a lies in the triangle of the H-edge's first endpoint and
    corner_b in the second; a string realization is oriented so that
    attach_left == corner_a.
    """
    corner_a: VertexId
    corner_b: VertexId
    plain_eid: Optional[EdgeId] = None
    string: Optional[DiamondString] = None

    @property
    def is_string(self) -> bool:
        return self.string is not None


@dataclass
class OumDecomposition:
    variant: str
    ring_size: Optional[int] = None
    h: Optional[MultiGraph] = None
    triangles: Optional[Tuple[Triangle, ...]] = None
    realizations: Optional[Tuple[EdgeRealization, ...]] = None

    def string_lengths(self) -> Tuple[int, ...]:
        if self.variant != SUBSTITUTED:
            return ()
        return tuple(sorted(r.string.k for r in self.realizations
                            if r.is_string))


def is_k4(g: MultiGraph) -> bool:
    """True iff g is the complete simple graph on four vertices."""
    if g.n != 4 or g.m != 6 or not g.is_simple():
        return False
    vs = g.vertices
    return all(g.has_edge(vs[i], vs[j])
               for i in range(4) for j in range(i + 1, 4))


def _triangle_partition(gp: MultiGraph) -> List[Tuple[VertexId, ...]]:
    """Partition the vertices of gp into vertex-disjoint triangles."""
    tri_of: Dict[VertexId, FrozenSet[VertexId]] = {}
    for v in gp.vertices:
        nbrs = gp.neighbors(v)
        tris = {frozenset((v, a, b))
                for i, a in enumerate(nbrs) for b in nbrs[i + 1:]
                if gp.has_edge(a, b)}
        if len(tris) != 1:
            raise NotDecomposable(
                f"vertex {v!r} lies in {len(tris)} triangles after "
                "string contraction")
        tri_of[v] = next(iter(tris))
    triangles = sorted({t for t in tri_of.values()},
                       key=lambda t: min(t))
    cover: Set[VertexId] = set()
    for t in triangles:
        if cover & t:
            raise NotDecomposable("triangles overlap after string contraction")
        cover |= t
        for v in t:
            if tri_of[v] != t:
                raise NotDecomposable("inconsistent triangle assignment")
    if cover != set(gp.vertices):
        raise NotDecomposable("triangles do not cover all non-string vertices")
    return [tuple(sorted(t)) for t in triangles]


def oum_decompose(g: MultiGraph) -> OumDecomposition:
    """Decompose a 2-edge-connected claw-free cubic graph.

    K4 and rings of diamonds are reported as their own variants; anything
    else is expressed as a cubic multigraph H with every vertex substituted
    by a triangle and some H-edges realized as strings of diamonds.
    Raises NotDecomposable when the input cannot have satisfied the
    precondition.
    """
    if is_k4(g):
        return OumDecomposition(variant=IS_K4)
    ring = detect_ring_of_diamonds(g)
    if ring is not None:
        return OumDecomposition(variant=RING_OF_DIAMONDS, ring_size=ring)

    strings = collect_diamond_strings(g)
    string_verts: Set[VertexId] = set()
    for s in strings:
        string_verts |= s.vertices

    # contract each string to one edge between its attachment vertices
    base = [(eid, g.endpoints(eid)) for eid in g.edge_ids
            if not (set(g.endpoints(eid)) & string_verts)]
    gp_edges = [pair for _, pair in base]
    provenance: List[Tuple[str, int]] = [("plain", eid) for eid, _ in base]
    for si, s in enumerate(strings):
        gp_edges.append((s.attach_left, s.attach_right))
        provenance.append(("string", si))
    gp = build_graph(gp_edges)

    tri_sets = _triangle_partition(gp)
    tri_index: Dict[VertexId, int] = {}
    for ti, tri in enumerate(tri_sets):
        for v in tri:
            tri_index[v] = ti

    triangles = []
    for tri in tri_sets:
        a, b, c = tri
        eids = []
        for pair in ((a, b), (a, c), (b, c)):
            eid = g.edge_between(*pair)
            if eid is None:
                raise NotDecomposable(f"triangle {tri} missing edge {pair}")
            eids.append(eid)
        triangles.append(Triangle(vertices=tri, edge_ids=tuple(eids)))

    # inter-triangle edges of the contracted graph become the edges of H
    h_pairs: List[Tuple[int, int]] = []
    realizations: List[EdgeRealization] = []
    inter = []
    for gp_eid in gp.edge_ids:
        u, v = gp.endpoints(gp_eid)
        tu, tv = tri_index[u], tri_index[v]
        kind, payload = provenance[gp_eid]
        if tu == tv:
            if kind == "string":
                raise NotDecomposable(
                    "a diamond string attaches twice to one triangle")
            continue  # a triangle's own edge
        inter.append((min(tu, tv), max(tu, tv), gp_eid, u, v))
    inter.sort()
    for tu, tv, gp_eid, u, v in inter:
        kind, payload = provenance[gp_eid]
        corner_a, corner_b = (u, v) if tri_index[u] == tu else (v, u)
        if kind == "plain":
            real = EdgeRealization(corner_a, corner_b, plain_eid=payload)
        else:
            s = strings[payload]
            if s.attach_left != corner_a:
                s = s.reversed()
            assert s.attach_left == corner_a and s.attach_right == corner_b
            real = EdgeRealization(corner_a, corner_b, string=s)
        h_eid = len(h_pairs)
        h_pairs.append((tu, tv))
        realizations.append(real)
        triangles[tu].corner_for[h_eid] = corner_a
        triangles[tv].corner_for[h_eid] = corner_b

    h = build_graph(h_pairs, vertices=range(len(triangles)))
    if not is_cubic(h):
        raise NotDecomposable("contracted multigraph H is not cubic")
    if find_bridges(h):
        raise NotDecomposable("contracted multigraph H has a bridge")
    for ti, tri in enumerate(triangles):
        if sorted(tri.corner_for.values()) != sorted(tri.vertices):
            raise NotDecomposable(
                f"triangle {tri.vertices} corners do not match its H-edges")
    total_diamonds = sum(s.k for s in strings)
    assert g.n == 3 * h.n + 4 * total_diamonds

    return OumDecomposition(variant=SUBSTITUTED, h=h,
                            triangles=tuple(triangles),
                            realizations=tuple(realizations))


def reconstruct(dec: OumDecomposition) -> MultiGraph:
    """Build a fresh graph from the decomposition data (for round-trips)."""
    if dec.variant == IS_K4:
        return build_graph([(a, b) for a in range(4) for b in range(a + 1, 4)])
    if dec.variant == RING_OF_DIAMONDS:
        return _build_ring(dec.ring_size)
    h = dec.h
    edges: List[Tuple[VertexId, VertexId]] = []
    corner: Dict[Tuple[int, int], Tuple] = {}
    for t in range(h.n):
        c0, c1, c2 = ("t", t, 0), ("t", t, 1), ("t", t, 2)
        edges += [(c0, c1), (c0, c2), (c1, c2)]
        for slot, (h_eid, _) in enumerate(sorted(h.incident(t))):
            corner[(t, h_eid)] = ("t", t, slot)
    fresh = 0
    for h_eid in h.edge_ids:
        t1, t2 = h.endpoints(h_eid)
        a = corner[(t1, h_eid)]
        b = corner[(t2, h_eid)]
        real = dec.realizations[h_eid]
        if not real.is_string:
            edges.append((a, b))
            continue
        prev = a
        for _ in range(real.string.k):
            x, y, z, w = [("d", fresh, i) for i in range(4)]
            fresh += 1
            edges += [(x, z), (x, w), (y, z), (y, w), (z, w), (prev, y)]
            prev = x
        edges.append((prev, b))
    out, _ = relabel_to_ints(build_graph(edges))
    return out


def _build_ring(k: int) -> MultiGraph:
    edges = []
    for i in range(k):
        x, y, z, w = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(x, z), (x, w), (y, z), (y, w), (z, w)]
    for i in range(k):
        edges.append((4 * i, 4 * ((i + 1) % k) + 1))  # x_i to y_{i+1}
    return build_graph(edges)


# ---------------------------------------------------------------------------
# bridge decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UpEdge:
    """The unique bridge from a component to its parent: p below, q above."""
    p: VertexId
    q: VertexId
    bridge: EdgeId


@dataclass
class BridgeDecomposition:
    bridges: FrozenSet[EdgeId]
    components: Tuple[MultiGraph, ...]
    edge_maps: Tuple[Tuple[EdgeId, ...], ...]   # component eid -> G eid
    tree: Tuple[Tuple[int, ...], ...]
    root: int
    levels: Tuple[int, ...]
    up_edges: Tuple[Optional[UpEdge], ...]      # None exactly at the root


def bridge_decompose(g: MultiGraph) -> BridgeDecomposition:
    """Components of g minus its bridges, with the rooted bridge tree.

    The tree is rooted at a leaf lying on a longest path (smallest component
    index among candidates) and every non-root component records the bridge
    to its parent.
    """
    bridges = find_bridges(g)
    if not bridges:
        raise NoBridges("input graph has no bridge")

    # vertex partition by BFS avoiding bridge edges
    part: Dict[VertexId, int] = {}
    groups: List[List[VertexId]] = []
    for start in g.vertices:
        if start in part:
            continue
        idx = len(groups)
        comp = [start]
        part[start] = idx
        queue = [start]
        while queue:
            v = queue.pop()
            for eid, u in g.incident(v):
                if eid in bridges or u in part:
                    continue
                part[u] = idx
                comp.append(u)
                queue.append(u)
        groups.append(sorted(comp))
    order = sorted(range(len(groups)), key=lambda i: groups[i][0])
    rank = {old: new for new, old in enumerate(order)}
    part = {v: rank[i] for v, i in part.items()}
    groups = [groups[i] for i in order]

    components = []
    edge_maps = []
    for verts in groups:
        _, emap = g.induced_subgraph(verts)
        kept = tuple(eid for eid in emap if eid not in bridges)
        sub = build_graph([g.endpoints(eid) for eid in kept], vertices=verts)
        components.append(sub)
        edge_maps.append(kept)

    c = len(components)
    assert c == len(bridges) + 1, "bridge tree is not a tree"
    adj: List[Set[int]] = [set() for _ in range(c)]
    tree_edges: Dict[Tuple[int, int], EdgeId] = {}
    for eid in sorted(bridges):
        u, v = g.endpoints(eid)
        a, b = part[u], part[v]
        key = (min(a, b), max(a, b))
        if key in tree_edges:
            raise NotDecomposable("two bridges join the same component pair")
        tree_edges[key] = eid
        adj[a].add(b)
        adj[b].add(a)
    tree = tuple(tuple(sorted(s)) for s in adj)

    def bfs_depths(src: int) -> List[int]:
        depth = [-1] * c
        depth[src] = 0
        queue = [src]
        while queue:
            nn = []
            for x in queue:
                for y in tree[x]:
                    if depth[y] < 0:
                        depth[y] = depth[x] + 1
                        nn.append(y)
            queue = nn
        return depth

    ecc = [max(bfs_depths(i)) for i in range(c)]
    diameter = max(ecc)
    root = min(i for i in range(c) if ecc[i] == diameter)
    levels = bfs_depths(root)

    up: List[Optional[UpEdge]] = [None] * c
    for (a, b), eid in tree_edges.items():
        if levels[a] == levels[b] + 1:
            child, parent = a, b
        else:
            assert levels[b] == levels[a] + 1
            child, parent = b, a
        u, v = g.endpoints(eid)
        p, q = (u, v) if part[u] == child else (v, u)
        up[child] = UpEdge(p=p, q=q, bridge=eid)
    assert all(up[i] is not None for i in range(c) if i != root)

    return BridgeDecomposition(
        bridges=bridges, components=tuple(components),
        edge_maps=tuple(edge_maps), tree=tree, root=root,
        levels=tuple(levels), up_edges=tuple(up))


def classify_component(g_i: MultiGraph) -> str:
    """One of the three shapes a bridge-tree component can have."""
    degs = g_i.degree_sequence()
    if g_i.n == 3 and g_i.m == 3 and degs == (2, 2, 2) and g_i.is_simple():
        return K3_COMPONENT
    if g_i.n == 4 and g_i.m == 5 and degs == (2, 2, 3, 3) and g_i.is_simple():
        internal = [v for v in g_i.vertices if g_i.degree(v) == 3]
        external = [v for v in g_i.vertices if g_i.degree(v) == 2]
        if g_i.has_edge(*internal) and not g_i.has_edge(*external) and all(
                g_i.has_edge(x, z) for x in external for z in internal):
            return DIAMOND_COMPONENT
    if g_i.n >= 5 and max(degs) == 3 and is_two_edge_connected(g_i):
        return BIG_COMPONENT
    raise ClassificationFailed(
        f"component (n={g_i.n}, m={g_i.m}, degrees={degs}) matches no case")


# ---------------------------------------------------------------------------
# component boundary and the tilde construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentBoundary:
    """Boundary data for a big component: per degree-2 vertex v_j, its
    triangle partners u_j, w_j and their outward extensions s_j, b_j."""
    degree2: Tuple[VertexId, ...]
    u: Tuple[VertexId, ...]
    w: Tuple[VertexId, ...]
    s: Tuple[VertexId, ...]
    b: Tuple[VertexId, ...]

    @property
    def r(self) -> int:
        return len(self.degree2)


def component_boundary(g_i: MultiGraph,
                       up_vertex: Optional[VertexId] = None
                       ) -> ComponentBoundary:
    """Ordered boundary of a big component, v_1 = up_vertex when given.

    Checks the structural claims the coloring relies on: every degree-2
    vertex lies on a triangle, the degree-2 vertices are independent, and
    the outward extensions s_j, b_j are distinct degree-3 vertices.
    """
    deg2 = sorted(v for v in g_i.vertices if g_i.degree(v) == 2)
    if up_vertex is not None:
        if up_vertex not in deg2:
            raise ClaimViolation("up-vertex-degree", up_vertex)
        deg2 = [up_vertex] + [v for v in deg2 if v != up_vertex]
    for i, a in enumerate(deg2):
        for bb in deg2[i + 1:]:
            if g_i.has_edge(a, bb):
                raise ClaimViolation("independent-set", (a, bb))

    us, ws, ss, bs = [], [], [], []
    for v in deg2:
        nbrs = g_i.neighbors(v)
        if len(nbrs) != 2:
            raise ClaimViolation("boundary-degree", v)
        uj, wj = nbrs
        if not g_i.has_edge(uj, wj):
            raise ClaimViolation("triangle", v)
        sj = [x for x in g_i.neighbors(uj) if x not in (v, wj)]
        bj = [x for x in g_i.neighbors(wj) if x not in (v, uj)]
        if len(sj) != 1 or len(bj) != 1:
            raise ClaimViolation("extension-count", v)
        sj, bj = sj[0], bj[0]
        if sj == bj:
            raise ClaimViolation("distinct-extensions", (v, sj))
        if g_i.degree(sj) != 3 or g_i.degree(bj) != 3:
            raise ClaimViolation("extension-degree", (v, sj, bj))
        us.append(uj)
        ws.append(wj)
        ss.append(sj)
        bs.append(bj)
    return ComponentBoundary(degree2=tuple(deg2), u=tuple(us), w=tuple(ws),
                             s=tuple(ss), b=tuple(bs))


@dataclass
class TildeConstruction:
    """Cubic completion of a big component.

    Shared edges keep their meaning across the two graphs: ``shared[i]`` is
    the component edge id for tilde edge i, or None for an added edge.
    """
    tilde: MultiGraph
    parity: str                                   # "even" | "odd"
    shared: Tuple[Optional[EdgeId], ...]
    pair_eids: Tuple[EdgeId, ...]
    sb_eid: Optional[EdgeId] = None               # odd parity only
    removed: Optional[Tuple[VertexId, VertexId, VertexId]] = None

    def to_component(self, tilde_coloring: Dict[EdgeId, str]
                     ) -> Dict[EdgeId, str]:
        """Restrict a tilde coloring to the shared component edges."""
        return {comp_eid: tilde_coloring[t_eid]
                for t_eid, comp_eid in enumerate(self.shared)
                if comp_eid is not None}


def build_tilde(g_i: MultiGraph,
                boundary: ComponentBoundary) -> TildeConstruction:
    """Complete a big component into a 2-edge-connected claw-free cubic graph.

    Even boundary: pair up the degree-2 vertices (v1v2, v3v4, ...).  Odd:
    drop the first boundary triangle {v1,u1,w1}, join s1 to b1, and pair the
    remaining degree-2 vertices (v2v3, v4v5, ...).
    """
    r = boundary.r
    v = boundary.degree2
    if r % 2 == 0:
        edges = list(g_i.edge_list())
        shared: List[Optional[EdgeId]] = list(g_i.edge_ids)
        pairs = [(v[j], v[j + 1]) for j in range(0, r - 1, 2)]
        sb_eid = None
        removed = None
        parity = "even"
    else:
        drop = {v[0], boundary.u[0], boundary.w[0]}
        kept = [eid for eid in g_i.edge_ids
                if not (set(g_i.endpoints(eid)) & drop)]
        s1, b1 = boundary.s[0], boundary.b[0]
        if g_i.has_edge(s1, b1):
            raise ClaimViolation("sb-non-edge", (s1, b1))
        edges = [g_i.endpoints(eid) for eid in kept]
        shared = list(kept)
        sb_eid = len(edges)
        edges.append((s1, b1))
        shared.append(None)
        pairs = [(v[j], v[j + 1]) for j in range(1, r - 1, 2)]
        removed = (v[0], boundary.u[0], boundary.w[0])
        parity = "odd"

    pair_eids = []
    for a, b in pairs:
        pair_eids.append(len(edges))
        edges.append((a, b))
        shared.append(None)
    tilde = build_graph(edges)

    if not is_cubic(tilde):
        raise ClaimViolation("tilde-cubic", tilde.degree_sequence())
    if not is_two_edge_connected(tilde):
        raise ClaimViolation("tilde-2ec", None)
    claw = find_claw(tilde)
    if claw is not None:
        raise ClaimViolation("tilde-claw-free", claw)
    if parity == "odd":
        s1, b1 = boundary.s[0], boundary.b[0]
        on_triangle = bool(set(tilde.neighbors(s1)) & set(tilde.neighbors(b1)))
        if on_triangle and not is_k4(tilde):
            raise ClaimViolation("sb-triangle-free", (s1, b1))
    return TildeConstruction(tilde=tilde, parity=parity, shared=tuple(shared),
                             pair_eids=tuple(pair_eids), sb_eid=sb_eid,
                             removed=removed)
