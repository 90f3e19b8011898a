import pytest

from packedge.coloring import (AnchorOnTriangle, BadAnchor, COLOR_1A,
                               COLOR_1B, COLOR_1C, COLOR_3A, ColorStats,
                               NotClawFree, NotConnected, NotCubic, NotK4,
                               NotRing, ONE_COLORS, apply_permutation,
                               color_2ec, color_2ec_anchored, color_component,
                               color_cycle, color_graph,
                               color_graph_with_stats, color_k4, color_ring,
                               color_string, _expand_all, _virtual_colors,
                               TYPE_MATCHING, TYPE_CYCLE_1A, TYPE_CYCLE_1B,
                               TYPE_CYCLE_3A, BadContext)
from packedge.families import (SubstitutionPlan, gen_big_component,
                               gen_bridged, BridgedPlan, gen_leaf7,
                               gen_petersen, gen_random_clawfree_cubic,
                               gen_ring, gen_substituted)
from packedge.graph import build_graph, edge_distance
from packedge.matching import two_factor_containing
from packedge.structure import (build_tilde, component_boundary,
                                collect_diamond_strings, oum_decompose)
from packedge.verify import verify


def class_sizes(coloring):
    out = {}
    for c in coloring.values():
        out[c] = out.get(c, 0) + 1
    return out


def three_a_edges(coloring):
    return sorted(e for e, c in coloring.items() if c == COLOR_3A)


# -- K4 ----------------------------------------------------------------------

def test_color_k4_three_perfect_matchings(k4):
    col = color_k4(k4)
    assert class_sizes(col) == {"1a": 2, "1b": 2, "1c": 2}
    assert verify(k4, col) == []


def test_color_k4_anchored(k4):
    for anchor in k4.edge_ids:
        col = color_k4(k4, anchor=anchor)
        assert col[anchor] == COLOR_1A
        assert verify(k4, col) == []


def test_color_k4_rejects_other(dipole):
    with pytest.raises(NotK4):
        color_k4(dipole)


# -- rings ---------------------------------------------------------------

@pytest.mark.parametrize("k", [2, 3])
def test_color_ring_class_sizes(k):
    g = gen_ring(k)
    col = color_ring(g, k)
    sizes = class_sizes(col)
    assert sizes == {"1a": 2 * k, "1b": 2 * k, "1c": 2 * k}
    assert COLOR_3A not in sizes
    assert verify(g, col) == []


def test_color_ring_rejects_k4(k4):
    with pytest.raises(NotRing):
        color_ring(k4)


# -- cycles --------------------------------------------------------------

def expanded_cycles(g):
    dec = oum_decompose(g)
    tf = two_factor_containing(dec.h)
    return g, dec, tf, _expand_all(g, dec, tf)


def test_even_cycle_alternates(k4):
    g = gen_substituted(SubstitutionPlan(k4))
    _, _, _, cycles = expanded_cycles(g)
    assert len(cycles) == 1 and cycles[0].m == 4
    virtual = _virtual_colors(cycles[0], None, 0)
    assert virtual == [COLOR_1A, COLOR_1B] * 6
    partial, string_colors = color_cycle(cycles[0])
    assert string_colors == {}
    assert class_sizes(partial) == {"1a": 6, "1b": 6}


def test_odd_cycle_single_anchor():
    g = gen_substituted(SubstitutionPlan(gen_petersen()))
    _, _, _, cycles = expanded_cycles(g)
    assert sorted(c.m for c in cycles) == [5, 5]
    cycle = cycles[0]
    virtual = _virtual_colors(cycle, 2, 0)
    assert virtual.count(COLOR_3A) == 1
    p = virtual.index(COLOR_3A)
    assert p == 3 * 2 + 2
    total = len(virtual)
    # both neighbors of the anchor carry distinct matching colors
    assert {virtual[(p - 1) % total], virtual[(p + 1) % total]} \
        == {COLOR_1A, COLOR_1B}
    # the remaining path alternates
    for j in range(1, total - 1):
        a = virtual[(p + j) % total]
        b = virtual[(p + j + 1) % total]
        assert a != b and a in (COLOR_1A, COLOR_1B)


def test_even_cycle_rejects_anchor(k4):
    g = gen_substituted(SubstitutionPlan(k4))
    _, _, _, cycles = expanded_cycles(g)
    with pytest.raises(BadAnchor):
        _virtual_colors(cycles[0], 1, 0)


def test_odd_cycle_requires_anchor():
    g = gen_substituted(SubstitutionPlan(gen_petersen()))
    _, _, _, cycles = expanded_cycles(g)
    with pytest.raises(BadAnchor):
        _virtual_colors(cycles[0], None, 0)
    with pytest.raises(BadAnchor):
        _virtual_colors(cycles[0], 99, 0)


# -- strings ---------------------------------------------------------------

def single_string_graph():
    """Substituted K4 with one length-1 string; returns (g, string)."""
    g = gen_substituted(SubstitutionPlan(build_graph(
        [(a, b) for a in range(4) for b in range(a + 1, 4)]), {0: 1}))
    strings = collect_diamond_strings(g)
    assert len(strings) == 1 and strings[0].k == 1
    return g, strings[0]


def test_color_string_type1_counts():
    g, s = single_string_graph()
    col = color_string(g, s, TYPE_MATCHING)
    assert class_sizes(col) == {"1a": 2, "1b": 2, "1c": 3}
    assert set(col) == s.region_edges()


def test_color_string_type21_counts():
    g, s = single_string_graph()
    col = color_string(g, s, TYPE_CYCLE_1A)
    assert class_sizes(col) == {"1b": 2, "1c": 2, "1a": 3}
    assert col[s.attach_left_edge] == COLOR_1A
    assert col[s.attach_right_edge] == COLOR_1A
    assert col[s.diamonds[0].internal_edge] == COLOR_1A


def test_color_string_type22_counts():
    g, s = single_string_graph()
    col = color_string(g, s, TYPE_CYCLE_1B)
    assert class_sizes(col) == {"1a": 2, "1c": 2, "1b": 3}


@pytest.mark.parametrize("at_entry,rest", [(True, COLOR_1B), (False, COLOR_1A)])
def test_color_string_type23(at_entry, rest):
    g, s = single_string_graph()
    col = color_string(g, s, TYPE_CYCLE_3A, three_a_at_entry=at_entry)
    near = s.attach_left_edge if at_entry else s.attach_right_edge
    far = s.attach_right_edge if at_entry else s.attach_left_edge
    assert col[near] == COLOR_3A
    assert col[far] == rest
    assert col[s.diamonds[0].internal_edge] == rest
    sizes = class_sizes(col)
    assert sizes["3a"] == 1 and sizes["1c"] == 2


def test_color_string_bad_context():
    g, s = single_string_graph()
    with pytest.raises(BadContext):
        color_string(g, s, "type9")


# -- 2-edge-connected coloring ---------------------------------------------

def test_color_2ec_substituted_k4(k4):
    g = gen_substituted(SubstitutionPlan(k4))
    col = color_2ec(g)
    assert g.m == 18 and len(col) == 18
    assert COLOR_3A not in class_sizes(col)   # the 2-factor is a 4-cycle
    assert verify(g, col) == []


def test_color_2ec_substituted_petersen():
    g = gen_substituted(SubstitutionPlan(gen_petersen()))
    col = color_2ec(g)
    assert class_sizes(col)[COLOR_3A] == 2    # one per 5-cycle
    assert verify(g, col) == []


def test_color_2ec_substituted_prism(prism):
    g = gen_substituted(SubstitutionPlan(prism))
    col = color_2ec(g)
    assert verify(g, col) == []
    # this pipeline's deterministic 2-factor of the prism is the hexagon
    assert COLOR_3A not in class_sizes(col)


def test_color_2ec_ring_of_four_no_3a():
    g = gen_ring(4)
    col = color_2ec(g)
    assert COLOR_3A not in class_sizes(col)
    assert verify(g, col) == []


def test_color_2ec_with_strings(k4):
    g = gen_substituted(SubstitutionPlan(k4, {0: 1, 4: 2}))
    col = color_2ec(g)
    assert verify(g, col) == []


# -- anchored coloring -------------------------------------------------------

def anchored_contract_holds(g, col, anchor):
    if col[anchor] != COLOR_1A:
        return False
    u, v = g.endpoints(anchor)
    touching = set(g.incident_edges(u)) | set(g.incident_edges(v))
    return all(col[e] != COLOR_3A for e in touching)


def test_anchored_k4(k4):
    for anchor in k4.edge_ids:
        col = color_2ec_anchored(k4, anchor)
        assert anchored_contract_holds(k4, col, anchor)
        assert verify(k4, col) == []


def test_anchored_ring():
    g = gen_ring(3)
    connector = next(e for e in g.edge_ids
                     if not _on_triangle(g, e))
    col = color_2ec_anchored(g, connector)
    assert anchored_contract_holds(g, col, connector)
    assert verify(g, col) == []


def _on_triangle(g, eid):
    u, v = g.endpoints(eid)
    return bool(set(g.neighbors(u)) & set(g.neighbors(v)))


def test_anchored_leaf7_tilde(leaf7):
    tc = build_tilde(leaf7, component_boundary(leaf7))
    col = color_2ec_anchored(tc.tilde, tc.sb_eid)
    assert anchored_contract_holds(tc.tilde, col, tc.sb_eid)
    assert COLOR_3A not in class_sizes(col)


def test_anchored_even_cycle(k4):
    # substituted K4: the 2-factor cycle is even, anchor on a connector
    g = gen_substituted(SubstitutionPlan(k4))
    dec = oum_decompose(g)
    anchor = dec.realizations[0].plain_eid
    col = color_2ec_anchored(g, anchor)
    assert anchored_contract_holds(g, col, anchor)
    assert verify(g, col) == []


def test_anchored_odd_cycles():
    g = gen_substituted(SubstitutionPlan(gen_petersen()))
    dec = oum_decompose(g)
    anchor = dec.realizations[0].plain_eid
    col = color_2ec_anchored(g, anchor)
    assert anchored_contract_holds(g, col, anchor)
    assert verify(g, col) == []


def test_anchored_rejects_triangle_edge(k4):
    g = gen_substituted(SubstitutionPlan(k4))
    tri_edge = next(e for e in g.edge_ids if _on_triangle(g, e))
    with pytest.raises(AnchorOnTriangle):
        color_2ec_anchored(g, tri_edge)


# -- components ----------------------------------------------------------

def test_color_component_leaf7_worked_instance(leaf7):
    b = component_boundary(leaf7)
    col = color_component(leaf7, b)
    assert verify(leaf7, col) == []
    e = {name: leaf7.edge_between(u, v) for name, (u, v) in {
        "su": (3, 1), "uv": (1, 0), "vw": (0, 2),
        "uw": (1, 2), "wb": (2, 4)}.items()}
    assert col[e["su"]] == COLOR_1A
    assert col[e["uv"]] == COLOR_1B
    assert col[e["vw"]] == COLOR_1A
    assert col[e["uw"]] == COLOR_1C
    assert col[e["wb"]] == COLOR_3A
    # diamond edges inherit the K4 coloring: all 1-colored
    assert class_sizes(col)[COLOR_3A] == 1


def test_color_component_even():
    g = gen_big_component((1, 1))
    col = color_component(g, component_boundary(g))
    assert verify(g, col) == []
    for v in (x for x in g.vertices if g.degree(x) == 2):
        colors = [col[e] for e in g.incident_edges(v)]
        assert all(c in ONE_COLORS for c in colors)
        assert len(set(colors)) == 2


def test_color_component_odd_r3():
    g = gen_big_component((1, 2, 1))
    col = color_component(g, component_boundary(g))
    assert verify(g, col) == []


# -- permutations ------------------------------------------------------------

def test_apply_permutation_identity(k4):
    col = color_k4(k4)
    ident = {c: c for c in ONE_COLORS}
    assert apply_permutation(col, ident) == col


def test_apply_permutation_swap_stays_valid(k4):
    col = color_k4(k4)
    swapped = apply_permutation(col, {"1a": "1b", "1b": "1a", "1c": "1c"})
    assert verify(k4, swapped) == []
    assert class_sizes(swapped) == class_sizes(col)


def test_apply_permutation_fixes_3a(leaf7):
    col = color_component(leaf7, component_boundary(leaf7))
    perm = {"1a": "1c", "1c": "1b", "1b": "1a"}
    out = apply_permutation(col, perm)
    assert three_a_edges(out) == three_a_edges(col)


def test_apply_permutation_validates():
    with pytest.raises(ValueError):
        apply_permutation({}, {"1a": "1a", "1b": "1b"})


# -- whole graphs ------------------------------------------------------------

def test_color_graph_leaf7_pair_worked_instance(leaf7_pair):
    col, stats = color_graph_with_stats(leaf7_pair)
    assert verify(leaf7_pair, col) == []
    threes = three_a_edges(col)
    assert len(threes) == 2
    assert edge_distance(leaf7_pair, threes[0], threes[1]) >= 4
    bridge = leaf7_pair.edge_between(0, 7)
    assert col[bridge] == COLOR_1C
    assert stats.backtracks == 0


def test_color_graph_ring_dispatch():
    g = gen_ring(5)
    assert color_graph(g) == color_2ec(g)


def test_color_graph_k3_hub():
    plan = BridgedPlan(parents=(0, 0, 0),
                       recipes=(("k3",), ("big", (1,)), ("big", (1,)),
                                ("big", (1,))))
    g = gen_bridged(plan)
    col = color_graph(g)
    assert verify(g, col) == []
    # the K3 edges carry three distinct matching colors
    from packedge.structure import bridge_decompose, K3_COMPONENT, classify_component
    bd = bridge_decompose(g)
    hub = next(i for i, c in enumerate(bd.components)
               if classify_component(c) == K3_COMPONENT)
    hub_colors = {col[g_eid] for g_eid in bd.edge_maps[hub]}
    assert hub_colors == set(ONE_COLORS)
    for eid in bd.bridges:
        assert col[eid] in ONE_COLORS


def test_color_graph_diamond_component():
    plan = BridgedPlan(parents=(0, 1),
                       recipes=(("big", (1,)), ("diamond",), ("big", (1,))))
    g = gen_bridged(plan)
    col = color_graph(g)
    assert verify(g, col) == []


def test_color_graph_rejects_bad_inputs(petersen):
    with pytest.raises(NotClawFree):
        color_graph(petersen)
    with pytest.raises(NotCubic):
        color_graph(build_graph([(0, 1), (1, 2), (0, 2)]))
    two_k4 = build_graph([(a, b) for a in range(4) for b in range(a + 1, 4)]
                         + [(a + 4, b + 4) for a in range(4)
                            for b in range(a + 1, 4)])
    with pytest.raises(NotConnected):
        color_graph(two_k4)


@pytest.mark.parametrize("seed", range(8))
def test_color_graph_random(seed):
    g = gen_random_clawfree_cubic(700 + seed, bridged=bool(seed % 2))
    stats = ColorStats()
    col = color_graph(g, stats)
    assert verify(g, col) == []
    assert stats.backtracks == 0


def test_degree2_edges_one_colored_everywhere():
    for seed in range(4):
        g = gen_random_clawfree_cubic(800 + seed, bridged=True)
        col = color_graph(g)
        from packedge.structure import bridge_decompose
        bd = bridge_decompose(g)
        for i, comp in enumerate(bd.components):
            for v in comp.vertices:
                if comp.degree(v) == 2:
                    for comp_eid in comp.incident_edges(v):
                        assert col[bd.edge_maps[i][comp_eid]] in ONE_COLORS


def test_sub_dipole_cycle_alternates_six(dipole):
    g = gen_substituted(SubstitutionPlan(dipole))
    _, _, _, cycles = expanded_cycles(g)
    assert len(cycles) == 1 and cycles[0].m == 2
    assert _virtual_colors(cycles[0], None, 0) == [COLOR_1A, COLOR_1B] * 3


def test_one_3a_per_odd_cycle_none_per_even():
    g = gen_substituted(SubstitutionPlan(gen_petersen(), {0: 1}))
    dec = oum_decompose(g)
    tf = two_factor_containing(dec.h)
    cycles = _expand_all(g, dec, tf)
    col = color_2ec(g)
    assert verify(g, col) == []
    for cycle in cycles:
        region = set()
        for t in range(cycle.m):
            region.update(cycle.tri_edges[t])
            slot = cycle.slots[t]
            if slot.plain_eid is not None:
                region.add(slot.plain_eid)
            else:
                region.update(slot.string.region_edges())
        threes = sum(1 for e in region if col[e] == COLOR_3A)
        assert threes == (1 if cycle.odd else 0)


def test_diamond_strings_vertex_disjoint(k4):
    g = gen_substituted(SubstitutionPlan(k4, {0: 2, 1: 1, 5: 3}))
    strings = collect_diamond_strings(g)
    assert sorted(s.k for s in strings) == [1, 2, 3]
    seen = set()
    for s in strings:
        assert not (seen & s.vertices)
        seen |= s.vertices
    col = color_2ec(g)
    assert verify(g, col) == []
