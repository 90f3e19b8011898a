"""Constructive packing edge-coloring of connected claw-free cubic graphs.

The construction works case by case over the structure decomposition:

* K4 and rings of diamonds get proper 3-edge-colorings (no 3a at all);
* a 2-edge-connected graph is decomposed into triangles and diamond strings
  over a cubic multigraph H, a 2-factor of H is lifted to cycles of the big
  graph, even cycles alternate two matchings, each odd cycle spends a single
  3a on one connector, strings inherit a scheme from the color their H-edge
  would have carried, and everything left (triangle chords and matching
  edges) is the third matching color;
* graphs with bridges are cut into components along the bridge tree;  big
  components are completed into 2-edge-connected claw-free cubic graphs,
  colored, and for odd boundaries patched locally around the dropped
  triangle (the new 3a goes on whichever of the two candidate edges is
  farther from the existing 3a edges);  the tree is then assembled root-down,
  each bridge taking the color missing at its parent endpoint and each child
  permuting its three matching colors to agree.

Free choices (odd-cycle anchor position, string endpoint for the 3a of a
replaced anchor, matching selection, farthest-rule ties) are resolved
deterministically first and revisited in a bounded order if verification
rejects; `ColorStats.backtracks` counts every retry so a corpus run can
report whether the first choice ever failed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .graph import EdgeId, GraphError, MultiGraph, VertexId, edge_distances_from
from .matching import two_factor_containing
from .recognize import find_bridges, find_claw, is_cubic
from .structure import (BIG_COMPONENT, DIAMOND_COMPONENT, IS_K4, K3_COMPONENT,
                        RING_OF_DIAMONDS, SUBSTITUTED, ComponentBoundary,
                        DiamondString, OumDecomposition, bridge_decompose,
                        build_tilde, classify_component, component_boundary,
                        detect_ring_of_diamonds, find_diamonds, is_k4,
                        oum_decompose)
from .verify import DEFAULT_SPEC, is_valid_coloring, verify

COLOR_1A = "1a"
COLOR_1B = "1b"
COLOR_1C = "1c"
COLOR_3A = "3a"
ONE_COLORS = (COLOR_1A, COLOR_1B, COLOR_1C)
ALL_COLORS = ONE_COLORS + (COLOR_3A,)

EdgeColoring = Dict[EdgeId, str]

_CANDIDATE_LIMIT = 64   # bound on verify-and-retry combinations per graph


class NotK4(GraphError):
    pass


class NotRing(GraphError):
    pass


class BadAnchor(GraphError):
    """The 3a anchor is not a connector slot of the given cycle."""


class BadContext(GraphError):
    """Unknown string-coloring context."""


class AnchorOnTriangle(GraphError):
    """Anchored coloring asked for an anchor edge lying on a triangle."""


class NotCubic(GraphError):
    pass


class NotClawFree(GraphError):
    pass


class NotConnected(GraphError):
    pass


class ColoringFailed(GraphError):
    """All bounded retry choices were exhausted without a valid coloring."""


@dataclass
class ColorStats:
    """Diagnostics for the verify-and-retry loops."""
    backtracks: int = 0
    anchored_retries: int = 0
    component_retries: int = 0

    def note(self, kind: str, count: int = 1) -> None:
        self.backtracks += count
        if kind == "anchored":
            self.anchored_retries += count
        elif kind == "component":
            self.component_retries += count


def apply_permutation(coloring: EdgeColoring,
                      perm: Dict[str, str]) -> EdgeColoring:
    """Relabel the three matching colors; 3a edges are untouched."""
    if sorted(perm) != sorted(ONE_COLORS) or \
            sorted(perm.values()) != sorted(ONE_COLORS):
        raise ValueError(f"not a permutation of {ONE_COLORS}: {perm}")
    return {eid: perm.get(c, c) for eid, c in coloring.items()}


def _swap_perm(a: str, b: str) -> Dict[str, str]:
    perm = {c: c for c in ONE_COLORS}
    perm[a], perm[b] = b, a
    return perm


# ---------------------------------------------------------------------------
# base cases: K4 and rings of diamonds
# ---------------------------------------------------------------------------

def color_k4(g: MultiGraph, anchor: Optional[EdgeId] = None) -> EdgeColoring:
    """Proper 3-edge-coloring of K4: the three perfect matchings.

    With `anchor` given, the anchor's matching gets color 1a.
    """
    if not is_k4(g):
        raise NotK4(f"not K4: n={g.n}, m={g.m}")
    opposite = {}
    for eid in g.edge_ids:
        u, v = g.endpoints(eid)
        opp = next(f for f in g.edge_ids
                   if not set(g.endpoints(f)) & {u, v})
        opposite[eid] = opp
    classes = sorted({tuple(sorted((e, o))) for e, o in opposite.items()})
    if anchor is not None:
        g.endpoints(anchor)
        classes.sort(key=lambda pair: (anchor not in pair, pair))
    out: EdgeColoring = {}
    for color, pair in zip(ONE_COLORS, classes):
        for eid in pair:
            out[eid] = color
    return out


def color_ring(g: MultiGraph, k: Optional[int] = None) -> EdgeColoring:
    """Ring-of-diamonds scheme: external pairs 1a/1b, everything else 1c."""
    found = detect_ring_of_diamonds(g)
    if found is None or (k is not None and found != k):
        raise NotRing(f"not a ring of {k or 'any'} diamonds")
    out: EdgeColoring = {eid: COLOR_1C for eid in g.edge_ids}
    for d in find_diamonds(g):
        pair_a, pair_b = d.external_pairs(g)
        for eid in pair_a:
            out[eid] = COLOR_1A
        for eid in pair_b:
            out[eid] = COLOR_1B
    return out


# ---------------------------------------------------------------------------
# expanded cycles of the substituted decomposition
# ---------------------------------------------------------------------------

@dataclass
class ConnectorSlot:
    """Realization of one 2-factor H-edge along an expanded cycle, oriented
    from the exit corner of one triangle to the entry corner of the next."""
    h_eid: int
    entry_corner: VertexId          # where the cycle leaves its triangle
    exit_corner: VertexId           # where it enters the next one
    plain_eid: Optional[EdgeId] = None
    string: Optional[DiamondString] = None   # oriented: attach_left == entry_corner

    def canonical_key(self) -> EdgeId:
        if self.plain_eid is not None:
            return self.plain_eid
        return min(self.string.region_edges())


@dataclass
class ExpandedCycle:
    """Lift of one H-cycle: triangle edge pairs, chords, connector slots.

    Virtual positions run 0..3m-1: position 3t is the entry-to-mid triangle
    edge of the t-th triangle, 3t+1 the mid-to-exit edge, 3t+2 connector t.
    """
    h_vertices: Tuple[int, ...]
    tri_edges: Tuple[Tuple[EdgeId, EdgeId], ...]
    chords: Tuple[EdgeId, ...]
    slots: Tuple[ConnectorSlot, ...]

    @property
    def m(self) -> int:
        return len(self.h_vertices)

    @property
    def odd(self) -> bool:
        return self.m % 2 == 1


def _expand_cycle(g: MultiGraph, dec: OumDecomposition,
                  cycle_eids: Sequence[int],
                  cycle_vertices: Sequence[int]) -> ExpandedCycle:
    m = len(cycle_vertices)
    tri_edges: List[Tuple[EdgeId, EdgeId]] = []
    chords: List[EdgeId] = []
    slots: List[ConnectorSlot] = []
    for t in range(m):
        hv = cycle_vertices[t]
        c_in = cycle_eids[(t - 1) % m]
        c_out = cycle_eids[t]
        tri = dec.triangles[hv]
        x_t = tri.corner_for[c_in]
        y_t = tri.corner_for[c_out]
        assert x_t != y_t, "cycle enters and leaves a triangle at one corner"
        mid = tri.third_corner(x_t, y_t)
        tri_edges.append((g.edge_between(x_t, mid), g.edge_between(mid, y_t)))
        chords.append(g.edge_between(x_t, y_t))
    for t in range(m):
        c_out = cycle_eids[t]
        real = dec.realizations[c_out]
        entry = dec.triangles[cycle_vertices[t]].corner_for[c_out]
        exit_ = dec.triangles[cycle_vertices[(t + 1) % m]].corner_for[c_out]
        if real.is_string:
            s = real.string
            if s.attach_left != entry:
                s = s.reversed()
            assert s.attach_left == entry and s.attach_right == exit_
            slots.append(ConnectorSlot(c_out, entry, exit_, string=s))
        else:
            assert {real.corner_a, real.corner_b} == {entry, exit_}
            slots.append(ConnectorSlot(c_out, entry, exit_,
                                       plain_eid=real.plain_eid))
    return ExpandedCycle(tuple(cycle_vertices), tuple(tri_edges),
                         tuple(chords), tuple(slots))


def _virtual_colors(cycle: ExpandedCycle, anchor_slot: Optional[int],
                    phase: int) -> List[str]:
    """Colors of the 3m virtual positions of a lifted cycle.

    Even cycles alternate 1a/1b with the given phase; odd cycles put 3a on
    the anchor connector and alternate 1a/1b along the remaining path,
    starting with 1a right after the anchor.
    """
    total = 3 * cycle.m
    if anchor_slot is None:
        if cycle.odd:
            raise BadAnchor("odd cycle needs a 3a anchor")
        return [COLOR_1A if (i - phase) % 2 == 0 else COLOR_1B
                for i in range(total)]
    if not 0 <= anchor_slot < cycle.m:
        raise BadAnchor(f"slot {anchor_slot} outside cycle of length {cycle.m}")
    if not cycle.odd:
        raise BadAnchor("even cycles take no 3a anchor")
    p_anchor = 3 * anchor_slot + 2
    colors = [""] * total
    colors[p_anchor] = COLOR_3A
    for j in range(1, total):
        colors[(p_anchor + j) % total] = COLOR_1A if j % 2 else COLOR_1B
    return colors


def color_cycle(cycle: ExpandedCycle, anchor_slot: Optional[int] = None,
                phase: int = 0) -> Tuple[EdgeColoring, Dict[int, str]]:
    """Color the real edges of one expanded cycle.

    Returns the partial coloring (triangle edges plus plain connectors; the
    chords are left to the matching color) and the virtual color of every
    string-realized connector, keyed by H-edge id.
    """
    virtual = _virtual_colors(cycle, anchor_slot, phase)
    out: EdgeColoring = {}
    string_colors: Dict[int, str] = {}
    for t in range(cycle.m):
        e_in, e_out = cycle.tri_edges[t]
        out[e_in] = virtual[3 * t]
        out[e_out] = virtual[3 * t + 1]
        slot = cycle.slots[t]
        if slot.plain_eid is not None:
            out[slot.plain_eid] = virtual[3 * t + 2]
        else:
            string_colors[slot.h_eid] = virtual[3 * t + 2]
    return out, string_colors


# ---------------------------------------------------------------------------
# diamond strings
# ---------------------------------------------------------------------------

TYPE_MATCHING = "type1"
TYPE_CYCLE_1A = "type2.1"
TYPE_CYCLE_1B = "type2.2"
TYPE_CYCLE_3A = "type2.3"


def color_string(g: MultiGraph, string: DiamondString, context: str,
                 three_a_at_entry: bool = True) -> EdgeColoring:
    """Color every edge of a diamond string region by its context.

    type1 replaces a matching edge: external pairs 1a/1b, the rest 1c.
    type2.1 / type2.2 replace a cycle edge colored 1a / 1b: external pairs
    get the other two matching colors and the rest inherits the cycle color.
    type2.3 replaces the cycle's 3a edge: the attachment at one endpoint
    takes the 3a; the side fixes which matching color fills the rest so the
    alternation at both boundary triangles stays proper.
    """
    if context == TYPE_MATCHING:
        pair_colors, rest = (COLOR_1A, COLOR_1B), COLOR_1C
    elif context == TYPE_CYCLE_1A:
        pair_colors, rest = (COLOR_1B, COLOR_1C), COLOR_1A
    elif context == TYPE_CYCLE_1B:
        pair_colors, rest = (COLOR_1A, COLOR_1C), COLOR_1B
    elif context == TYPE_CYCLE_3A:
        rest = COLOR_1B if three_a_at_entry else COLOR_1A
        other = COLOR_1A if three_a_at_entry else COLOR_1B
        pair_colors = (COLOR_1C, other)
    else:
        raise BadContext(f"unknown string context {context!r}")

    out: EdgeColoring = {}
    for eid in string.connectors:
        out[eid] = rest
    out[string.attach_left_edge] = rest
    out[string.attach_right_edge] = rest
    for d in string.diamonds:
        out[d.internal_edge] = rest
        pair_a, pair_b = d.external_pairs(g)
        for eid in pair_a:
            out[eid] = pair_colors[0]
        for eid in pair_b:
            out[eid] = pair_colors[1]
    if context == TYPE_CYCLE_3A:
        near = string.attach_left_edge if three_a_at_entry \
            else string.attach_right_edge
        out[near] = COLOR_3A
    return out


# ---------------------------------------------------------------------------
# 2-edge-connected graphs
# ---------------------------------------------------------------------------

def _assemble_substituted(g: MultiGraph, dec: OumDecomposition, tf,
                          cycles: Sequence[ExpandedCycle],
                          choices: Sequence[Tuple[Optional[int], int, bool]]
                          ) -> EdgeColoring:
    """One complete coloring for a given set of per-cycle choices."""
    coloring: EdgeColoring = {}
    for cycle, (anchor_slot, phase, at_entry) in zip(cycles, choices):
        partial, string_colors = color_cycle(cycle, anchor_slot, phase)
        coloring.update(partial)
        for chord in cycle.chords:
            coloring[chord] = COLOR_1C
        for slot in cycle.slots:
            if slot.string is None:
                continue
            c = string_colors[slot.h_eid]
            if c == COLOR_1A:
                ctx = TYPE_CYCLE_1A
            elif c == COLOR_1B:
                ctx = TYPE_CYCLE_1B
            else:
                ctx = TYPE_CYCLE_3A
            coloring.update(color_string(g, slot.string, ctx,
                                         three_a_at_entry=at_entry))
    for h_eid in tf.complement:
        real = dec.realizations[h_eid]
        if real.is_string:
            coloring.update(color_string(g, real.string, TYPE_MATCHING))
        else:
            coloring[real.plain_eid] = COLOR_1C
    assert len(coloring) == g.m, "assembled coloring is not total"
    return coloring


def _default_options(cycle: ExpandedCycle
                     ) -> List[Tuple[Optional[int], int, bool]]:
    """Choice list for one cycle, deterministic default first.

    Even cycles have one canonical phase (1a on the connector with the
    smallest edge id).  Odd cycles try 3a anchors in canonical order; a
    string-realized anchor additionally offers both endpoints for its 3a.
    """
    keys = [cycle.slots[t].canonical_key() for t in range(cycle.m)]
    if not cycle.odd:
        first = min(range(cycle.m), key=lambda t: keys[t])
        return [(None, (3 * first + 2) % 2, True)]
    out: List[Tuple[Optional[int], int, bool]] = []
    for t in sorted(range(cycle.m), key=lambda t: keys[t]):
        out.append((t, 0, True))
        if cycle.slots[t].string is not None:
            out.append((t, 0, False))
    return out


def _expand_all(g: MultiGraph, dec: OumDecomposition, tf
                ) -> List[ExpandedCycle]:
    return [_expand_cycle(g, dec, eids, verts)
            for eids, verts in zip(tf.cycles, tf.cycle_vertices)]


def _substituted_candidates(g: MultiGraph, dec: OumDecomposition
                            ) -> Iterator[EdgeColoring]:
    tf = two_factor_containing(dec.h)
    cycles = _expand_all(g, dec, tf)
    options = [_default_options(c) for c in cycles]
    for combo in islice(product(*options), _CANDIDATE_LIMIT):
        yield _assemble_substituted(g, dec, tf, cycles, combo)


def color_2ec(g: MultiGraph, stats: Optional[ColorStats] = None
              ) -> EdgeColoring:
    """Packing edge-coloring of a 2-edge-connected claw-free cubic graph."""
    dec = oum_decompose(g)
    if dec.variant == IS_K4:
        return color_k4(g)
    if dec.variant == RING_OF_DIAMONDS:
        return color_ring(g)
    for tried, cand in enumerate(_substituted_candidates(g, dec)):
        if is_valid_coloring(g, cand):
            if tried and stats:
                stats.note("2ec", tried)
            return cand
    raise ColoringFailed("exhausted retry choices on a 2-edge-connected graph")


def _anchor_h_edge(dec: OumDecomposition, anchor: EdgeId) -> int:
    for h_eid, real in enumerate(dec.realizations):
        if real.is_string:
            if anchor in real.string.region_edges():
                return h_eid
        elif real.plain_eid == anchor:
            return h_eid
    raise AnchorOnTriangle(
        f"anchor {anchor} lies inside a triangle or diamond")


def _anchored_substituted_candidates(g: MultiGraph, dec: OumDecomposition,
                                     anchor: EdgeId
                                     ) -> Iterator[EdgeColoring]:
    """Candidates whose color at `anchor` is 1a with no 3a touching it.

    The 2-factor is forced through the anchor's H-edge, so the anchor lies
    on a cycle; an even cycle pins the phase, an odd cycle restricts the 3a
    anchor to slots an odd number of connector steps before the anchor.
    """
    h_eid0 = _anchor_h_edge(dec, anchor)
    tf = two_factor_containing(dec.h, {h_eid0})
    cycles = _expand_all(g, dec, tf)
    ci0 = s0 = None
    for ci, cycle in enumerate(cycles):
        for t, slot in enumerate(cycle.slots):
            if slot.h_eid == h_eid0:
                ci0, s0 = ci, t
    assert ci0 is not None

    options = [_default_options(c) for c in cycles]
    target = cycles[ci0]
    if not target.odd:
        options[ci0] = [(None, (3 * s0 + 2) % 2, True)]
    else:
        keys = [target.slots[t].canonical_key() for t in range(target.m)]
        slots = [t for t in sorted(range(target.m), key=lambda t: keys[t])
                 if (s0 - t) % target.m % 2 == 1]
        assert slots, "no odd-offset anchor slot exists"
        opts = []
        for t in slots:
            opts.append((t, 0, True))
            if target.slots[t].string is not None:
                opts.append((t, 0, False))
        options[ci0] = opts

    u, v = g.endpoints(anchor)
    touching = set(g.incident_edges(u)) | set(g.incident_edges(v))
    for combo in islice(product(*options), _CANDIDATE_LIMIT):
        cand = _assemble_substituted(g, dec, tf, cycles, combo)
        if cand[anchor] != COLOR_1A:
            continue
        if any(cand[e] == COLOR_3A for e in touching):
            continue
        yield cand


def _valid_anchored_colorings(g: MultiGraph, anchor: EdgeId,
                              stats: Optional[ColorStats] = None
                              ) -> Iterator[EdgeColoring]:
    """Verified colorings with anchor -> 1a and no 3a at its endpoints."""
    g.endpoints(anchor)
    dec = oum_decompose(g)
    if dec.variant == IS_K4:
        yield color_k4(g, anchor=anchor)
        return
    if dec.variant == RING_OF_DIAMONDS:
        col = color_ring(g)
        if col[anchor] != COLOR_1A:
            col = apply_permutation(col, _swap_perm(col[anchor], COLOR_1A))
        yield col
        return
    u, v = g.endpoints(anchor)
    if set(g.neighbors(u)) & set(g.neighbors(v)):
        raise AnchorOnTriangle(f"anchor edge {anchor} lies on a triangle")
    for cand in _anchored_substituted_candidates(g, dec, anchor):
        if is_valid_coloring(g, cand):
            yield cand
        elif stats:
            stats.note("anchored")


def color_2ec_anchored(g: MultiGraph, anchor: EdgeId,
                       stats: Optional[ColorStats] = None) -> EdgeColoring:
    """Anchored variant: the anchor edge gets 1a and no edge within distance
    one of it gets 3a.  Requires the anchor to lie on no triangle (K4 and
    rings are the two exceptions, handled by relabeling their 3-colorings).
    """
    for col in _valid_anchored_colorings(g, anchor, stats):
        return col
    raise ColoringFailed("exhausted retry choices for an anchored coloring")


# ---------------------------------------------------------------------------
# bridge-tree components
# ---------------------------------------------------------------------------

def _color_k3_component(g_i: MultiGraph) -> EdgeColoring:
    return dict(zip(sorted(g_i.edge_ids), ONE_COLORS))


def _color_diamond_component(g_i: MultiGraph) -> EdgeColoring:
    d = find_diamonds(g_i)[0]
    out = {d.internal_edge: COLOR_1C}
    pair_a, pair_b = d.external_pairs(g_i)
    for eid in pair_a:
        out[eid] = COLOR_1A
    for eid in pair_b:
        out[eid] = COLOR_1B
    return out


def _min_distance_to(g_i: MultiGraph, e: EdgeId,
                     targets: Sequence[EdgeId]) -> float:
    if not targets:
        return float("inf")
    dist = edge_distances_from(g_i, e)
    return min(dist.get(t, float("inf")) for t in targets)


def color_component(g_i: MultiGraph, boundary: ComponentBoundary,
                    stats: Optional[ColorStats] = None) -> EdgeColoring:
    """Color one big component so all its boundary edges stay 1-colored.

    Even boundary: color the cubic completion and forget the added edges.
    Odd: color the completion anchored at the added s1-b1 edge, then patch
    the dropped triangle locally; 3a goes to whichever of w1b1 / s1u1 is
    farther from the 3a edges already present.
    """
    tc = build_tilde(g_i, boundary)
    if tc.parity == "even":
        col_t = color_2ec(tc.tilde, stats)
        comp = tc.to_component(col_t)
        assert len(comp) == g_i.m
        return comp

    v1, u1, w1 = boundary.degree2[0], boundary.u[0], boundary.w[0]
    s1, b1 = boundary.s[0], boundary.b[0]
    e_su = g_i.edge_between(s1, u1)
    e_uv = g_i.edge_between(u1, v1)
    e_vw = g_i.edge_between(v1, w1)
    e_uw = g_i.edge_between(u1, w1)
    e_wb = g_i.edge_between(w1, b1)

    patches = {
        "wb": {e_su: COLOR_1A, e_uv: COLOR_1B, e_vw: COLOR_1A,
               e_uw: COLOR_1C, e_wb: COLOR_3A},
        "su": {e_wb: COLOR_1A, e_vw: COLOR_1B, e_uv: COLOR_1A,
               e_uw: COLOR_1C, e_su: COLOR_3A},
    }
    for col_t in islice(_valid_anchored_colorings(tc.tilde, tc.sb_eid, stats),
                        8):
        base = tc.to_component(col_t)
        threes = [eid for eid, c in base.items() if c == COLOR_3A]
        dist_wb = _min_distance_to(g_i, e_wb, threes)
        dist_su = _min_distance_to(g_i, e_su, threes)
        # ties keep the 3a on the w-b side; only a strictly farther s-u
        # side swaps the roles
        order = ["wb", "su"] if dist_wb >= dist_su else ["su", "wb"]
        for which in order:
            full = dict(base)
            full.update(patches[which])
            assert len(full) == g_i.m
            if is_valid_coloring(g_i, full):
                return full
            if stats:
                stats.note("component")
    raise ColoringFailed("exhausted retry choices for a big component")


# ---------------------------------------------------------------------------
# whole graphs
# ---------------------------------------------------------------------------

def _one_colors_at(g_i: MultiGraph, coloring: EdgeColoring,
                   v: VertexId) -> Tuple[str, ...]:
    colors = tuple(coloring[eid] for eid in g_i.incident_edges(v))
    assert all(c in ONE_COLORS for c in colors), \
        f"boundary vertex {v!r} touches a 3a edge"
    assert len(set(colors)) == len(colors), \
        f"boundary vertex {v!r} repeats a color"
    return colors


def _missing_one_color(colors: Tuple[str, ...]) -> str:
    left = [c for c in ONE_COLORS if c not in colors]
    assert len(left) == 1
    return left[0]


def color_graph(g: MultiGraph,
                stats: Optional[ColorStats] = None) -> EdgeColoring:
    """Packing edge-coloring of any connected claw-free cubic graph.

    Bridgeless graphs go straight to the 2-edge-connected construction;
    otherwise the bridge tree is colored top-down, every bridge taking the
    matching color missing at its parent endpoint and every child permuting
    its matching colors so that same color is missing at its own endpoint.
    """
    if not g.is_connected():
        raise NotConnected("input graph is not connected")
    if not is_cubic(g):
        raise NotCubic(f"degree sequence {g.degree_sequence()}")
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFree(f"claw at {claw.center!r} with leaves {claw.leaves}")

    if not find_bridges(g):
        return color_2ec(g, stats)

    bd = bridge_decompose(g)
    n_comp = len(bd.components)
    parent = [None] * n_comp
    for idx in range(n_comp):
        if idx == bd.root:
            continue
        parent[idx] = next(j for j in bd.tree[idx]
                           if bd.levels[j] == bd.levels[idx] - 1)

    final: EdgeColoring = {}
    comp_colorings: List[Optional[EdgeColoring]] = [None] * n_comp
    bfs_order = sorted(range(n_comp), key=lambda i: (bd.levels[i], i))
    for idx in bfs_order:
        comp = bd.components[idx]
        kind = classify_component(comp)
        if kind == K3_COMPONENT:
            col = _color_k3_component(comp)
        elif kind == DIAMOND_COMPONENT:
            col = _color_diamond_component(comp)
        else:
            up = bd.up_edges[idx]
            boundary = component_boundary(
                comp, up.p if up is not None else None)
            col = color_component(comp, boundary, stats)
        if idx == bd.root:
            assert kind == BIG_COMPONENT, "root component must be big"
        else:
            up = bd.up_edges[idx]
            parent_comp = bd.components[parent[idx]]
            bridge_color = _missing_one_color(
                _one_colors_at(parent_comp, comp_colorings[parent[idx]], up.q))
            final[up.bridge] = bridge_color
            child_missing = _missing_one_color(
                _one_colors_at(comp, col, up.p))
            if child_missing != bridge_color:
                col = apply_permutation(
                    col, _swap_perm(child_missing, bridge_color))
        comp_colorings[idx] = col
        for comp_eid, g_eid in enumerate(bd.edge_maps[idx]):
            final[g_eid] = col[comp_eid]

    assert len(final) == g.m, "assembled coloring is not total"
    failures = verify(g, final, DEFAULT_SPEC)
    if failures:
        raise ColoringFailed(f"assembled coloring rejected: {failures[:3]}")
    return final


def color_graph_with_stats(g: MultiGraph) -> Tuple[EdgeColoring, ColorStats]:
    stats = ColorStats()
    return color_graph(g, stats), stats
