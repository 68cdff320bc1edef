"""Digon-free digraphs, colorings, and the basic structural queries.

Vertices are dense integer indices 0..n-1.  Digraph and UndirectedGraph are
immutable after construction and safe to share between workers; adjacency is
kept both as sorted tuples (deterministic iteration) and as bitmasks (fast
set algebra for the search modules).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class GuardExceeded(RuntimeError):
    """A search refused to run because an input-size ceiling was exceeded.

    ``best_known`` optionally carries a cheaply computed upper bound so the
    caller still learns something about the instance.
    """

    def __init__(self, message: str, best_known=None):
        super().__init__(message)
        self.best_known = best_known


class Digraph:
    """Immutable loopless, digon-free digraph on vertices 0..n-1."""

    __slots__ = ("n", "arcs", "_arcset", "_out", "_in", "_outmask", "_inmask")

    def __init__(self, n: int, arcs=()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        arcset = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} rejected")
            if (v, u) in arcset:
                raise ValueError(f"digon between {u} and {v} rejected")
            arcset.add((u, v))
        self.n = n
        self.arcs = tuple(sorted(arcset))
        self._arcset = frozenset(arcset)
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        outmask = [0] * n
        inmask = [0] * n
        for u, v in self.arcs:
            out[u].append(v)
            inn[v].append(u)
            outmask[u] |= 1 << v
            inmask[v] |= 1 << u
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(sorted(x)) for x in inn)
        self._outmask = tuple(outmask)
        self._inmask = tuple(inmask)

    # -- basic queries ----------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcset

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self._arcset or (v, u) in self._arcset

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def out_neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(self._out[v])

    def in_neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return frozenset(self._in[v])

    def non_neighbors(self, v: int) -> frozenset:
        """Vertices adjacent to v in neither direction; v itself excluded."""
        self._check_vertex(v)
        full = (1 << self.n) - 1
        mask = full & ~(self._outmask[v] | self._inmask[v] | (1 << v))
        return frozenset(_bits(mask))

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    # -- derived digraphs --------------------------------------------------

    def reverse(self) -> "Digraph":
        return Digraph(self.n, [(v, u) for u, v in self.arcs])

    def induced(self, vertices) -> tuple["Digraph", tuple]:
        """Induced subdigraph on ``vertices``; returns (H, verts) with
        verts[i] = the original index of H's vertex i."""
        verts = tuple(sorted(set(vertices)))
        for v in verts:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(verts)}
        arcs = [
            (index[u], index[v])
            for u, v in self.arcs
            if u in index and v in index
        ]
        return Digraph(len(verts), arcs), verts

    def underlying(self) -> "UndirectedGraph":
        return UndirectedGraph(self.n, [(u, v) for u, v in self.arcs])

    # -- connectivity ------------------------------------------------------

    def is_acyclic(self) -> bool:
        indeg = [len(x) for x in self._in]
        queue = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in self._out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == self.n

    def strong_components(self) -> list[frozenset]:
        """Strongly connected components in condensation-topological order.

        Arcs between distinct components always go from an earlier to a later
        component in the returned list.
        """
        n = self.n
        index = [-1] * n
        low = [0] * n
        on_stack = [False] * n
        stack = []
        components = []
        counter = itertools.count()

        for root in range(n):
            if index[root] != -1:
                continue
            work = [(root, 0)]
            while work:
                v, pi = work[-1]
                if pi == 0:
                    index[v] = low[v] = next(counter)
                    stack.append(v)
                    on_stack[v] = True
                recursed = False
                for i in range(pi, len(self._out[v])):
                    w = self._out[v][i]
                    if index[w] == -1:
                        work[-1] = (v, i + 1)
                        work.append((w, 0))
                        recursed = True
                        break
                    if on_stack[w]:
                        low[v] = min(low[v], index[w])
                if recursed:
                    continue
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    components.append(frozenset(comp))
        # Tarjan emits components in reverse topological order.
        components.reverse()
        return components

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, m={len(self.arcs)})"


class UndirectedGraph:
    """Immutable loopless undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_edgeset", "_adjmask")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        edgeset = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"loop at vertex {a} rejected")
            edgeset.add((min(a, b), max(a, b)))
        self.n = n
        self.edges = tuple(sorted(edgeset))
        self._edgeset = frozenset(edgeset)
        adjmask = [0] * n
        for a, b in self.edges:
            adjmask[a] |= 1 << b
            adjmask[b] |= 1 << a
        self._adjmask = tuple(adjmask)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self._edgeset

    def neighbors(self, v: int) -> frozenset:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return frozenset(_bits(self._adjmask[v]))

    def degree(self, v: int) -> int:
        return bin(self._adjmask[v]).count("1")

    def __eq__(self, other):
        return (
            isinstance(other, UndirectedGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class OrderedGraph:
    """Undirected graph whose index order is a meaningful vertex order."""

    graph: UndirectedGraph

    @property
    def n(self) -> int:
        return self.graph.n

    def permuted(self, order) -> "OrderedGraph":
        """Relabel so that ``order[i]`` becomes vertex i."""
        if sorted(order) != list(range(self.graph.n)):
            raise ValueError("order must be a permutation of the vertices")
        pos = {v: i for i, v in enumerate(order)}
        edges = [(pos[a], pos[b]) for a, b in self.graph.edges]
        return OrderedGraph(UndirectedGraph(self.graph.n, edges))


@dataclass(frozen=True)
class Dicoloring:
    """A vertex -> color map whose classes are meant to induce acyclic parts.

    ``k`` is the palette size; a coloring may leave palette colors unused.
    """

    colors: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if any(not (0 <= c < self.k) for c in self.colors):
            raise ValueError("color outside palette 0..k-1")

    def used(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[frozenset]:
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return [frozenset(x) for x in out]


@dataclass(frozen=True)
class GraphColoring:
    """A vertex -> color map whose classes are meant to be independent sets."""

    colors: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if any(not (0 <= c < self.k) for c in self.colors):
            raise ValueError("color outside palette 0..k-1")

    def used(self) -> int:
        return len(set(self.colors))


@dataclass(frozen=True)
class MultipartiteStructure:
    """An ordered partition of the vertex set into (intended) stable parts."""

    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))

    @property
    def n(self) -> int:
        return sum(len(p) for p in self.parts)

    def part_index(self) -> dict:
        """vertex -> position of its part in the part order."""
        where = {}
        for i, part in enumerate(self.parts):
            for v in part:
                where[v] = i
        return where


def check_multipartite_structure(G: Digraph, structure: MultipartiteStructure) -> None:
    """Raise ValueError unless ``structure`` partitions V(G) into stable parts
    with every cross-part pair adjacent."""
    seen = set()
    for part in structure.parts:
        if not part:
            raise ValueError("empty part in multipartite structure")
        if part & seen:
            raise ValueError("parts are not disjoint")
        seen |= part
        for u in part:
            if not (0 <= u < G.n):
                raise ValueError(f"vertex {u} out of range")
        for u, v in itertools.combinations(sorted(part), 2):
            if G.adjacent(u, v):
                raise ValueError(f"part is not stable: {u} and {v} are adjacent")
    if seen != set(range(G.n)):
        raise ValueError("parts do not cover the vertex set")
    for p, q in itertools.combinations(structure.parts, 2):
        for u in p:
            for v in q:
                if not G.adjacent(u, v):
                    raise ValueError(
                        f"cross-part pair {u},{v} is non-adjacent; "
                        "host is not complete multipartite"
                    )


def validate_dicoloring(G: Digraph, coloring: Dicoloring) -> bool:
    """True iff every color class induces an acyclic subdigraph of G."""
    if len(coloring.colors) != G.n:
        raise ValueError("coloring does not cover every vertex")
    for cls in coloring.classes():
        if cls:
            H, _ = G.induced(cls)
            if not H.is_acyclic():
                return False
    return True


def validate_coloring(H: UndirectedGraph, coloring: GraphColoring) -> bool:
    """True iff every color class is an independent set of H."""
    if len(coloring.colors) != H.n:
        raise ValueError("coloring does not cover every vertex")
    for a, b in H.edges:
        if coloring.colors[a] == coloring.colors[b]:
            return False
    return True


def is_tournament(G: Digraph) -> bool:
    """True iff every pair of vertices is adjacent."""
    return all(
        G.adjacent(u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
    )


def subset_acyclic(G: Digraph, mask: int) -> bool:
    """True iff the vertices in ``mask`` induce an acyclic subdigraph."""
    inmask = G._inmask
    while mask:
        removed = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            if inmask[low.bit_length() - 1] & mask == 0:
                removed |= low
        if not removed:
            return False
        mask ^= removed
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Indices of set bits, ascending."""
    return list(_bits(mask))


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
