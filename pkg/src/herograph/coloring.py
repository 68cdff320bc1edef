"""Exact solvers for the dichromatic and chromatic numbers, plus the
constructive coloring procedures.

The exact solvers are deterministic branch-and-bound searches: vertices are
ordered by degree, classes are checked incrementally (a new vertex may only
close a cycle through itself), and color indices are forced to appear in
first-use order.  They are meant as oracles at desk scale, not speed records.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    Dicoloring,
    Digraph,
    GraphColoring,
    GuardExceeded,
    MultipartiteStructure,
    OrderedGraph,
    UndirectedGraph,
    bits,
    is_tournament,
    mask_of,
    subset_acyclic,
    validate_coloring,
    validate_dicoloring,
)
from .constructions import SeparatedGridLayout, line_graph
from .detection import find_induced, is_quasi_transitive
from .limits import limit


def _closes_cycle(G: Digraph, v: int, class_mask: int) -> bool:
    """Is there a directed cycle through v inside class_mask (v included)?"""
    target = 1 << v
    reach = 0
    frontier = G._outmask[v] & class_mask
    while frontier:
        if frontier & target:
            return True
        reach |= frontier
        new = 0
        for w in bits(frontier):
            new |= G._outmask[w]
        frontier = new & class_mask & ~reach
    return False


def _degree_order(G: Digraph) -> list:
    return sorted(range(G.n), key=lambda v: (-(G.out_degree(v) + G.in_degree(v)), v))


def try_dicolor(G: Digraph, k: int):
    """A k-dicoloring as a color tuple, or None if none exists."""
    n = G.n
    if n == 0:
        return ()
    if k < 1:
        return None
    if subset_acyclic(G, (1 << n) - 1):
        return (0,) * n
    if k == 1:
        return None
    order = _degree_order(G)
    color = [-1] * n
    class_masks = [0] * k

    def rec(i, used):
        if i == n:
            return True
        v = order[i]
        vbit = 1 << v
        for c in range(min(used + 1, k)):
            if not _closes_cycle(G, v, class_masks[c] | vbit):
                class_masks[c] |= vbit
                color[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                class_masks[c] ^= vbit
        color[v] = -1
        return False

    if rec(0, 0):
        return tuple(color)
    return None


def dicolorable(G: Digraph, k: int) -> bool:
    return try_dicolor(G, k) is not None


def greedy_dicoloring(G: Digraph) -> Dicoloring:
    """Sequential dicoloring: first class that stays acyclic, else a new one."""
    order = _degree_order(G)
    color = [0] * G.n
    class_masks = []
    for v in order:
        vbit = 1 << v
        for c, m in enumerate(class_masks):
            if not _closes_cycle(G, v, m | vbit):
                class_masks[c] |= vbit
                color[v] = c
                break
        else:
            color[v] = len(class_masks)
            class_masks.append(vbit)
    k = max(len(class_masks), 1) if G.n else 0
    return Dicoloring(tuple(color), k)


def dichromatic_number(G: Digraph) -> tuple[int, Dicoloring]:
    """Exact dichromatic number with a witness coloring."""
    ceiling = limit("EXACT_VERTICES")
    if G.n > ceiling:
        bound = greedy_dicoloring(G)
        raise GuardExceeded(
            f"exact dicoloring on {G.n} vertices exceeds ceiling {ceiling}; "
            f"greedy upper bound is {bound.used()}",
            best_known=bound,
        )
    if G.n == 0:
        return 0, Dicoloring((), 0)
    for k in itertools.count(1):
        colors = try_dicolor(G, k)
        if colors is not None:
            return k, Dicoloring(colors, k)


def try_color(H: UndirectedGraph, k: int):
    """A proper k-coloring as a color tuple, or None."""
    n = H.n
    if n == 0:
        return ()
    if k < 1:
        return None
    order = sorted(range(n), key=lambda v: (-H.degree(v), v))
    color = [-1] * n
    class_masks = [0] * k
    adj = H._adjmask

    def rec(i, used):
        if i == n:
            return True
        v = order[i]
        vbit = 1 << v
        for c in range(min(used + 1, k)):
            if not (class_masks[c] & adj[v]):
                class_masks[c] |= vbit
                color[v] = c
                if rec(i + 1, max(used, c + 1)):
                    return True
                class_masks[c] ^= vbit
        color[v] = -1
        return False

    if rec(0, 0):
        return tuple(color)
    return None


def chromatic_number(H: UndirectedGraph) -> tuple[int, GraphColoring]:
    """Exact chromatic number with a witness coloring."""
    ceiling = limit("EXACT_VERTICES")
    if H.n > ceiling:
        raise GuardExceeded(
            f"exact coloring on {H.n} vertices exceeds ceiling {ceiling}"
        )
    if H.n == 0:
        return 0, GraphColoring((), 0)
    for k in itertools.count(1):
        colors = try_color(H, k)
        if colors is not None:
            return k, GraphColoring(colors, k)


# -- arc coloring to vertex coloring ------------------------------------------


def coloring_from_line_coloring(
    G: Digraph, line_coloring: GraphColoring
) -> tuple[GraphColoring, tuple]:
    """Color every vertex with the set of colors on its incoming arcs.

    ``line_coloring`` must properly color line_graph(G) (vertex x of the
    line graph is arc G.arcs[x]).  The result properly colors the underlying
    graph of G with at most 2^k colors; vertices without in-arcs get the
    empty set.  Returns the dense coloring plus the raw color sets.
    """
    L = line_graph(G)
    if not validate_coloring(L, line_coloring):
        raise ValueError("input is not a proper coloring of the line graph")
    in_sets = [set() for _ in range(G.n)]
    for x, (_, v) in enumerate(G.arcs):
        in_sets[v].add(line_coloring.colors[x])
    sets = tuple(frozenset(s) for s in in_sets)
    palette = sorted(set(sets), key=lambda s: tuple(sorted(s)))
    dense = {s: i for i, s in enumerate(palette)}
    coloring = GraphColoring(tuple(dense[s] for s in sets), max(len(palette), 1))
    return coloring, sets


# -- layered block coloring ----------------------------------------------------


@dataclass(frozen=True)
class LayeredInstance:
    """A host digraph with an ordered layer partition and a block bound d."""

    host: Digraph
    layers: tuple
    d: int

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(frozenset(x) for x in self.layers))
        seen = set()
        for layer in self.layers:
            if layer & seen:
                raise ValueError("layers are not disjoint")
            seen |= layer
        if seen != set(range(self.host.n)):
            raise ValueError("layers do not partition the vertex set")
        if self.d < 1:
            raise ValueError("d must be positive")


def _interval_mask(layers, lo, hi):
    """Union mask of layers lo..hi inclusive."""
    m = 0
    for i in range(lo, hi + 1):
        m |= mask_of(layers[i])
    return m


def layered_dicoloring(inst: LayeredInstance) -> Dicoloring:
    """Dicoloring with at most 2d colors from the greedy block construction.

    Hypotheses are verified first with the exact solver: every layer needs
    dichromatic number at most d, and whenever an arc runs from layer j back
    to layer i < j, the union of layers i+1..j needs dichromatic number at
    most d.  A violated hypothesis raises ValueError naming the clause.
    """
    G, layers, d = inst.host, inst.layers, inst.d
    t = len(layers)
    where = {}
    for i, layer in enumerate(layers):
        for v in layer:
            where[v] = i
    for i, layer in enumerate(layers):
        H, _ = G.induced(layer)
        if not dicolorable(H, d):
            raise ValueError(f"hypothesis failed: layer {i} has dichromatic number > {d}")
    back_pairs = set()
    for u, v in G.arcs:
        if where[u] > where[v]:
            back_pairs.add((where[v], where[u]))
    for i, j in sorted(back_pairs):
        m = _interval_mask(layers, i + 1, j)
        H, _ = G.induced(bits(m))
        if not dicolorable(H, d):
            raise ValueError(
                f"hypothesis failed: backward arc from layer {j} to layer {i} "
                f"but layers {i + 1}..{j} have dichromatic number > {d}"
            )

    blocks = []
    lo = 0
    while lo < t:
        hi = lo
        while hi + 1 < t:
            m = _interval_mask(layers, lo, hi + 1)
            H, _ = G.induced(bits(m))
            if dicolorable(H, d):
                hi += 1
            else:
                break
        blocks.append((lo, hi))
        lo = hi + 1

    color = [0] * G.n
    for b, (blo, bhi) in enumerate(blocks):
        offset = 0 if b % 2 == 0 else d
        m = _interval_mask(layers, blo, bhi)
        verts = bits(m)
        H, vmap = G.induced(verts)
        sub = try_dicolor(H, d)
        assert sub is not None, "block construction guarantees d-dicolorability"
        for idx, v in enumerate(vmap):
            color[v] = sub[idx] + offset
    return Dicoloring(tuple(color), 2 * d)


def check_layered_section_bounds(G: Digraph, layers, r: int) -> bool:
    """Do the per-layer and per-vertex section bounds hold at level r?

    Checks, with the exact solver: every layer has dichromatic number at
    most r; for every vertex, its out-neighbors among earlier layers and its
    in-neighbors among later layers induce digraphs with dichromatic number
    at most r.  The class-level premise behind r is the caller's to supply.
    """
    layers = tuple(frozenset(x) for x in layers)
    seen = set()
    for layer in layers:
        if layer & seen:
            raise ValueError("layers are not disjoint")
        seen |= layer
    if seen != set(range(G.n)):
        raise ValueError("layers do not partition the vertex set")
    for layer in layers:
        H, _ = G.induced(layer)
        if not dicolorable(H, r):
            return False
    prefix = 0
    prefixes = []
    for layer in layers:
        prefixes.append(prefix)
        prefix |= mask_of(layer)
    suffixes = []
    suffix = 0
    for layer in reversed(layers):
        suffixes.append(suffix)
        suffix |= mask_of(layer)
    suffixes.reverse()
    for i, layer in enumerate(layers):
        for v in layer:
            fwd = G._outmask[v] & prefixes[i]
            H, _ = G.induced(bits(fwd))
            if not dicolorable(H, r):
                return False
            back = G._inmask[v] & suffixes[i]
            H, _ = G.induced(bits(back))
            if not dicolorable(H, r):
                return False
    return True


# -- quasi-transitive coloring -------------------------------------------------


def _is_module(G: Digraph, members: tuple, member_mask: int) -> bool:
    for w in range(G.n):
        wbit = 1 << w
        if wbit & member_mask:
            continue
        out = G._outmask[w]
        inn = G._inmask[w]
        if not (
            member_mask & ~out == 0
            or member_mask & ~inn == 0
            or member_mask & (out | inn) == 0
        ):
            return False
    return True


def _module_partition(G: Digraph):
    """A partition of some module of G into >= 2 modules with an acyclic
    quotient: the strong components of G (if not strong), else those of the
    smallest proper module inducing a non-strong subgraph."""
    comps = G.strong_components()
    if len(comps) >= 2:
        return tuple(frozenset(c) for c in comps)
    for size in range(2, G.n):
        for S in itertools.combinations(range(G.n), size):
            m = mask_of(S)
            if not _is_module(G, S, m):
                continue
            H, vmap = G.induced(S)
            sub = H.strong_components()
            if len(sub) >= 2:
                return tuple(frozenset(vmap[x] for x in c) for c in sub)
    return None


def qt_color(G: Digraph, hero: Digraph | None = None, tournament_oracle=None) -> Dicoloring:
    """Dicoloring of a quasi-transitive digraph by modular decomposition.

    Tournaments go to ``tournament_oracle`` (exact solver by default).
    Otherwise some module splits into >= 2 sub-modules with an acyclic
    quotient; the parts are colored recursively and repainted inside the
    largest palette, which never increases the color count.  When ``hero``
    is given, G must not contain it as an induced subgraph.
    """
    if not is_quasi_transitive(G):
        raise ValueError("input digraph is not quasi-transitive")
    if hero is not None and find_induced(hero, G) is not None:
        raise ValueError("input digraph contains the forbidden tournament")
    if tournament_oracle is None:
        tournament_oracle = lambda T: dichromatic_number(T)[1]

    def solve(H: Digraph) -> tuple:
        if H.n == 0:
            return ()
        if H.n == 1:
            return (0,)
        if is_tournament(H):
            col = tournament_oracle(H)
            if len(col.colors) != H.n or not validate_dicoloring(H, col):
                raise ValueError("tournament oracle returned an invalid dicoloring")
            return col.colors
        if H.is_acyclic():
            return (0,) * H.n
        parts = _module_partition(H)
        if parts is None:
            raise RuntimeError(
                "no modular decomposition found for a quasi-transitive digraph; "
                "this contradicts the structure theorem and means a bug"
            )
        part_masks = [mask_of(p) for p in parts]
        module_mask = 0
        for m in part_masks:
            module_mask |= m
        for p, m in zip(parts, part_masks):
            if not _is_module(H, tuple(p), m):
                raise RuntimeError(
                    "strong component of a module is not itself a module; "
                    "this contradicts quasi-transitivity and means a bug"
                )
        outside = [v for v in range(H.n) if not (module_mask >> v) & 1]
        colorings = []
        palettes = []
        for p in parts:
            verts = sorted(set(outside) | p)
            D, vmap = H.induced(verts)
            sub = solve(D)
            assignment = {v: sub[i] for i, v in enumerate(vmap)}
            colorings.append(assignment)
            palettes.append(sorted({assignment[v] for v in p}))
        best = max(range(len(parts)), key=lambda i: (len(palettes[i]), -i))
        final = dict(colorings[best])
        target = palettes[best]
        for i, p in enumerate(parts):
            if i == best:
                continue
            remap = {c: target[j] for j, c in enumerate(palettes[i])}
            for v in p:
                final[v] = remap[colorings[i][v]]
        colors = tuple(final[v] for v in range(H.n))
        return colors

    colors = solve(G)
    k = max(colors) + 1 if colors else 0
    return Dicoloring(colors, max(k, 1) if G.n else 0)


# -- coloring extraction from the separated grid -------------------------------


def extract_graph_coloring(
    G: OrderedGraph,
    dg: Digraph,
    dc: Dicoloring,
    layout: SeparatedGridLayout,
) -> tuple[GraphColoring, tuple]:
    """Color ordered-graph vertex i by the set of per-row color sets of grid
    part i under ``dc``.

    ``dc`` must be a valid dicoloring of ``dg`` whose palette matches the
    separator dichromatic number, with every separator copy carrying all
    palette colors (that is what makes a monochromatic backward arc close a
    monochromatic triangle).  At most 2^(2^r) distinct colors appear.
    """
    if len(dc.colors) != dg.n:
        raise ValueError("dicoloring does not cover the separated grid digraph")
    if not validate_dicoloring(dg, dc):
        raise ValueError("input is not a valid dicoloring")
    r = dc.k
    for j, copy in enumerate(layout.copies):
        used = {dc.colors[x] for x in copy}
        if used != set(range(r)):
            raise ValueError(
                f"separator copy {j} is missing palette colors: uses {sorted(used)} "
                f"out of 0..{r - 1}"
            )
    grid = layout.grid
    n = G.n
    values = []
    for i in range(n):
        rows = frozenset(
            frozenset(dc.colors[x] for x in grid.row(i, rr)) for rr in range(n)
        )
        values.append(rows)
    values = tuple(values)

    def canon(value):
        return tuple(sorted(tuple(sorted(s)) for s in value))

    palette = sorted(set(values), key=canon)
    dense = {s: i for i, s in enumerate(palette)}
    coloring = GraphColoring(tuple(dense[v] for v in values), max(len(palette), 1))
    return coloring, values
