"""Deterministic digraph generators and composition operations.

Every builder fixes and documents its index layout so that tests and the
coloring-extraction machinery can address vertices deterministically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .core import (
    Digraph,
    MultipartiteStructure,
    OrderedGraph,
    UndirectedGraph,
    check_multipartite_structure,
)


def tt(n: int) -> Digraph:
    """Transitive tournament: arcs (i, j) for all i < j."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def c3() -> Digraph:
    """The directed triangle 0 -> 1 -> 2 -> 0."""
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def compose_arrow(G1: Digraph, G2: Digraph) -> Digraph:
    """Disjoint union of G1 and G2 plus all arcs from the G1 copy to the
    G2 copy.  G1 keeps indices 0..|G1|-1, G2 is shifted by |G1|."""
    off = G1.n
    arcs = list(G1.arcs)
    arcs += [(u + off, v + off) for u, v in G2.arcs]
    arcs += [(u, v + off) for u in range(G1.n) for v in range(G2.n)]
    return Digraph(G1.n + G2.n, arcs)


def disjoint_union(G1: Digraph, G2: Digraph) -> Digraph:
    """Disjoint union; G2's indices are shifted by |G1|."""
    arcs = list(G1.arcs) + [(u + G1.n, v + G1.n) for u, v in G2.arcs]
    return Digraph(G1.n + G2.n, arcs)


def delta(H1: Digraph, H2: Digraph) -> Digraph:
    """The triangle composition: a hub vertex x, a copy of H1 and a copy of
    H2, with x => H1 => H2 => x.

    Index layout: vertex 0 is x, H1 occupies 1..|H1|, H2 the rest.
    """
    a, b = H1.n, H2.n
    arcs = [(u + 1, v + 1) for u, v in H1.arcs]
    arcs += [(u + 1 + a, v + 1 + a) for u, v in H2.arcs]
    arcs += [(0, u + 1) for u in range(a)]
    arcs += [(u + 1, v + 1 + a) for u in range(a) for v in range(b)]
    arcs += [(v + 1 + a, 0) for v in range(b)]
    return Digraph(1 + a + b, arcs)


def delta_tt(left: int, right: int) -> Digraph:
    """delta() with transitive tournaments on both sides."""
    return delta(tt(left), tt(right))


def rotational_tournament(n: int, steps) -> Digraph:
    """Circulant tournament on Z_n with arcs i -> i+s for s in ``steps``.

    ``steps`` must pick exactly one direction per pair, i.e. contain exactly
    one of s, n-s for every s = 1..n-1.
    """
    steps = sorted(set(steps))
    if sorted(set(steps) | {n - s for s in steps}) != list(range(1, n)):
        raise ValueError("steps must cover each nonzero residue exactly once")
    return Digraph(n, [(i, (i + s) % n) for i in range(n) for s in steps])


def line_graph(G: Digraph) -> UndirectedGraph:
    """Undirected line graph: one vertex per arc of G (in G.arcs order),
    with ab and cd adjacent iff they form a directed path (b=c or d=a)."""
    arcs = G.arcs
    edges = []
    for x in range(len(arcs)):
        a, b = arcs[x]
        for y in range(x + 1, len(arcs)):
            c, d = arcs[y]
            if b == c or d == a:
                edges.append((x, y))
    return UndirectedGraph(len(arcs), edges)


# -- the triple construction (iterated line graph of a transitive tournament,
#    oriented as a complete multipartite digraph) ---------------------------


@dataclass(frozen=True)
class TripleLayout:
    """Names for the vertices of the triple digraph on base set 0..s-1.

    Vertex x represents the increasing triple ``triples[x]``; triples are
    sorted by (middle, low, high) so the parts (grouped by middle element)
    occupy contiguous index ranges, middle = 1 first.
    """

    s: int
    triples: tuple
    structure: MultipartiteStructure

    def index(self, triple) -> int:
        return self._index[tuple(triple)]

    @cached_property
    def _index(self) -> dict:
        return {t: x for x, t in enumerate(self.triples)}

    def forward(self) -> frozenset:
        """Arcs (a,b,c) -> (b,c,d), the oriented image of the line-graph
        edges; everything else in the digraph is a backward arc."""
        index = self._index
        out = set()
        for a, b, c, d in itertools.combinations(range(self.s), 4):
            out.add((index[(a, b, c)], index[(b, c, d)]))
        return frozenset(out)


def build_triple_digraph(s: int) -> tuple[Digraph, TripleLayout, MultipartiteStructure]:
    """Complete multipartite digraph on the increasing triples of 0..s-1.

    Parts collect triples sharing a middle element, ordered by middle.
    Between two parts, the arc runs low-part -> high-part exactly on the
    overlapping pairs (a,b,c)(b,c,d); every other cross pair is oriented
    high-part -> low-part.
    """
    if s < 3:
        raise ValueError(f"triple digraph needs s >= 3, got {s}")
    triples = sorted(itertools.combinations(range(s), 3), key=lambda t: (t[1], t[0], t[2]))
    index = {t: x for x, t in enumerate(triples)}
    arcs = []
    for x in range(len(triples)):
        a1, b1, c1 = triples[x]
        for y in range(x + 1, len(triples)):
            a2, b2, c2 = triples[y]
            if b1 == b2:
                continue
            if b1 < b2:
                lo, hi = (a1, b1, c1), (a2, b2, c2)
                xlo, xhi = x, y
            else:
                lo, hi = (a2, b2, c2), (a1, b1, c1)
                xlo, xhi = y, x
            if hi[0] == lo[1] and hi[1] == lo[2]:
                arcs.append((xlo, xhi))
            else:
                arcs.append((xhi, xlo))
    parts = []
    for mid in range(1, s - 1):
        parts.append(frozenset(index[t] for t in triples if t[1] == mid))
    structure = MultipartiteStructure(tuple(parts))
    layout = TripleLayout(s=s, triples=tuple(triples), structure=structure)
    return Digraph(len(triples), arcs), layout, structure


def forward_arcs(G: Digraph, layout: TripleLayout) -> frozenset:
    """The low-to-high overlap arcs of a triple digraph.

    Raises ValueError when G was not produced by build_triple_digraph with
    this layout.
    """
    s = layout.s
    expected_n = s * (s - 1) * (s - 2) // 6
    if G.n != expected_n:
        raise ValueError("layout does not match digraph: wrong vertex count")
    fwd = layout.forward()
    if not all(G.has_arc(u, v) for u, v in fwd):
        raise ValueError("layout does not match digraph: missing forward arc")
    cross_pairs = expected_n * (expected_n - 1) // 2
    same_part = sum(len(p) * (len(p) - 1) // 2 for p in layout.structure.parts)
    if len(G.arcs) != cross_pairs - same_part:
        raise ValueError("layout does not match digraph: wrong arc count")
    return fwd


# -- substitution ------------------------------------------------------------


@dataclass(frozen=True)
class SubstitutionRecipe:
    outer: Digraph
    target: int
    inner: Digraph

    def __post_init__(self):
        if not (0 <= self.target < self.outer.n):
            raise ValueError(f"target vertex {self.target} out of range")
        if self.inner.n == 0:
            raise ValueError("inner digraph must be nonempty")


def substitute(outer: Digraph, target: int, inner: Digraph) -> Digraph:
    """Replace ``target`` by a copy of ``inner`` inheriting its adjacency.

    Index layout: the outer vertices other than target keep their relative
    order and occupy 0..|outer|-2; the inner copy is appended after them.
    """
    SubstitutionRecipe(outer, target, inner)
    keep = [w for w in range(outer.n) if w != target]
    pos = {w: i for i, w in enumerate(keep)}
    off = len(keep)
    arcs = [(pos[u], pos[v]) for u, v in outer.arcs if u != target and v != target]
    arcs += [(u + off, v + off) for u, v in inner.arcs]
    for w in keep:
        if outer.has_arc(w, target):
            arcs += [(pos[w], x + off) for x in range(inner.n)]
        elif outer.has_arc(target, w):
            arcs += [(x + off, pos[w]) for x in range(inner.n)]
    return Digraph(off + inner.n, arcs)


def apply_substitution(recipe: SubstitutionRecipe) -> Digraph:
    return substitute(recipe.outer, recipe.target, recipe.inner)


# -- grid constructions over an ordered graph --------------------------------


@dataclass(frozen=True)
class GridLayout:
    """Index layout of grid_digraph: part i occupies i*n^2 .. (i+1)*n^2 - 1,
    cell (row, col) of part i sits at i*n^2 + row*n + col."""

    n: int
    structure: MultipartiteStructure

    def vertex(self, part: int, row: int, col: int) -> int:
        n = self.n
        if not (0 <= part < n and 0 <= row < n and 0 <= col < n):
            raise ValueError("grid coordinates out of range")
        return part * n * n + row * n + col

    def row(self, part: int, row: int) -> tuple:
        return tuple(self.vertex(part, row, c) for c in range(self.n))

    def column(self, part: int, col: int) -> tuple:
        return tuple(self.vertex(part, r, col) for r in range(self.n))


def grid_digraph(G: OrderedGraph) -> tuple[Digraph, GridLayout]:
    """Blow each ordered-graph vertex into an n x n stable grid part.

    For an edge (i, j) with i < j, the backward arcs run from every vertex
    of row i of part j to every vertex of column j of part i; every other
    cross pair is oriented from the lower part to the higher part.  The
    resulting part order is a flat ordering.
    """
    n = G.n
    if n < 1:
        raise ValueError("ordered graph must have at least one vertex")
    size = n * n
    layout = GridLayout(
        n=n,
        structure=MultipartiteStructure(
            tuple(frozenset(range(i * size, (i + 1) * size)) for i in range(n))
        ),
    )
    backward = set()
    for i, j in G.graph.edges:
        for tail in layout.row(j, i):
            for head in layout.column(i, j):
                backward.add((tail, head))
    arcs = list(backward)
    for i in range(n):
        for j in range(i + 1, n):
            for u in range(i * size, (i + 1) * size):
                for v in range(j * size, (j + 1) * size):
                    if (v, u) not in backward:
                        arcs.append((u, v))
    return Digraph(n * size, arcs), layout


@dataclass(frozen=True)
class SeparatedGridLayout:
    """grid_digraph plus, for each consecutive pair of grid parts, one
    separator copy of R; copy j occupies n^3 + j*|R| .. n^3 + (j+1)*|R| - 1."""

    grid: GridLayout
    copies: tuple
    structure: MultipartiteStructure


def separated_grid_digraph(
    G: OrderedGraph, R: Digraph, R_structure: MultipartiteStructure
) -> tuple[Digraph, SeparatedGridLayout]:
    """grid_digraph(G) with a copy of R inserted between consecutive parts.

    Copy j receives all arcs from grid parts 0..j, sends all arcs to grid
    parts j+1.., and sends all arcs to every later copy.  The combined part
    order interleaves each copy's parts between the grid parts, so it stays
    flat whenever R's order is flat.
    """
    from .detection import flat_check

    check_multipartite_structure(R, R_structure)
    if not flat_check(R, R_structure):
        raise ValueError("separator digraph must come with a flat part order")
    base, grid = grid_digraph(G)
    n = G.n
    size = n * n
    arcs = list(base.arcs)
    offsets = [n * size + j * R.n for j in range(max(n - 1, 0))]
    copies = tuple(
        tuple(range(off, off + R.n)) for off in offsets
    )
    for j, off in enumerate(offsets):
        arcs += [(u + off, v + off) for u, v in R.arcs]
        for i in range(j + 1):
            arcs += [(g, off + x) for g in range(i * size, (i + 1) * size) for x in range(R.n)]
        for k in range(j + 1, n):
            arcs += [(off + x, g) for g in range(k * size, (k + 1) * size) for x in range(R.n)]
        for later in offsets[j + 1 :]:
            arcs += [(off + x, later + y) for x in range(R.n) for y in range(R.n)]
    parts = []
    for i in range(n):
        parts.append(grid.structure.parts[i])
        if i < n - 1:
            off = offsets[i]
            for rpart in R_structure.parts:
                parts.append(frozenset(x + off for x in rpart))
    structure = MultipartiteStructure(tuple(parts))
    total = n * size + len(offsets) * R.n
    layout = SeparatedGridLayout(grid=grid, copies=copies, structure=structure)
    return Digraph(total, arcs), layout
