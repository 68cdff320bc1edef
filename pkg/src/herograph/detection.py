"""Pattern detectors and class-membership predicates.

Induced-subgraph search is bitmask-based and always reports the
lexicographically least witness, so every example in the test suite is
reproducible.  Subset searches declare explicit ceilings (see limits) and
raise GuardExceeded instead of running unbounded.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    Digraph,
    GuardExceeded,
    MultipartiteStructure,
    OrderedGraph,
    bits,
    check_multipartite_structure,
    mask_of,
    subset_acyclic,
)
from .constructions import TripleLayout, compose_arrow, delta_tt, forward_arcs
from .limits import limit

_OUT, _IN, _NON = 0, 1, 2


def _iter_induced(pattern: Digraph, host: Digraph):
    p, h = pattern.n, host.n
    if p == 0:
        yield ()
        return
    if p > h:
        return
    full = (1 << h) - 1
    hout = host._outmask
    hin = host._inmask
    hnon = tuple(full & ~(hout[v] | hin[v] | (1 << v)) for v in range(h))
    constraints = []
    for i in range(p):
        row = []
        for j in range(i):
            if pattern.has_arc(j, i):
                row.append((j, _OUT))
            elif pattern.has_arc(i, j):
                row.append((j, _IN))
            else:
                row.append((j, _NON))
        constraints.append(tuple(row))
    degmask = []
    for i in range(p):
        od, idg = pattern.out_degree(i), pattern.in_degree(i)
        nd = p - 1 - od - idg
        m = 0
        for v in range(h):
            if (
                host.out_degree(v) >= od
                and host.in_degree(v) >= idg
                and h - 1 - host.out_degree(v) - host.in_degree(v) >= nd
            ):
                m |= 1 << v
        degmask.append(m)
    assign = [0] * p

    def rec(i):
        cand = degmask[i]
        for j, rel in constraints[i]:
            mj = assign[j]
            if rel == _OUT:
                cand &= hout[mj]
            elif rel == _IN:
                cand &= hin[mj]
            else:
                cand &= hnon[mj]
            if not cand:
                return
        while cand:
            low = cand & -cand
            cand ^= low
            assign[i] = low.bit_length() - 1
            if i + 1 == p:
                yield tuple(assign)
            else:
                yield from rec(i + 1)

    yield from rec(0)


def find_induced(pattern: Digraph, host: Digraph):
    """Lexicographically least injective map (tuple indexed by pattern
    vertex) realizing ``pattern`` as an induced subdigraph, or None."""
    return next(_iter_induced(pattern, host), None)


def find_induced_all(pattern: Digraph, host: Digraph):
    """All induced embeddings, in lexicographic order of the map."""
    yield from _iter_induced(pattern, host)


def is_complete_multipartite(G: Digraph):
    """The unique partition into stable parts with all cross pairs adjacent
    (ordered by smallest vertex), or None.

    Agrees with freeness of the one-isolated-vertex-plus-arc pattern: the
    non-adjacency relation must be transitive.
    """
    full = (1 << G.n) - 1
    nonadj = [
        full & ~(G._outmask[v] | G._inmask[v] | (1 << v)) for v in range(G.n)
    ]
    unseen = full
    parts = []
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            new = 0
            for v in bits(frontier):
                new |= nonadj[v]
            frontier = new & unseen & ~comp
            comp |= frontier
        unseen &= ~comp
        members = bits(comp)
        for u, v in itertools.combinations(members, 2):
            if G.adjacent(u, v):
                return None
        parts.append(frozenset(members))
    parts.sort(key=min)
    return MultipartiteStructure(tuple(parts))


def is_quasi_transitive(G: Digraph) -> bool:
    """True iff every two-arc directed path has adjacent endpoints."""
    for v in range(G.n):
        outs = G._outmask[v]
        if not outs:
            continue
        for u in bits(G._inmask[v]):
            reach = G._outmask[u] | G._inmask[u] | (1 << u)
            if outs & ~reach:
                return False
    return True


# -- feedback arc sets -------------------------------------------------------


def is_disjoint_directed_paths(arcs) -> bool:
    """True iff the arc set forms vertex-disjoint directed paths: in- and
    out-degree at most 1 everywhere and no directed cycle."""
    arcs = list(arcs)
    succ = {}
    indeg = {}
    for u, v in arcs:
        if u in succ:
            return False
        succ[u] = v
        if v in indeg:
            return False
        indeg[v] = u
    starts = [u for u in succ if u not in indeg]
    covered = 0
    for u in starts:
        while u in succ:
            covered += 1
            u = succ[u]
    return covered == len(arcs)


def fas_disjoint_paths(G: Digraph):
    """Smallest feedback arc set that forms vertex-disjoint directed paths,
    searching arc subsets in (size, lexicographic) order; None if no
    feedback arc set has that shape."""
    m = len(G.arcs)
    if m > limit("FAS_ARCS"):
        raise GuardExceeded(
            f"feedback-arc-set subset search over {m} arcs exceeds ceiling "
            f"{limit('FAS_ARCS')}"
        )
    if G.is_acyclic():
        return frozenset()
    for r in range(1, m + 1):
        for subset in itertools.combinations(G.arcs, r):
            if not is_disjoint_directed_paths(subset):
                continue
            removed = set(subset)
            H = Digraph(G.n, [a for a in G.arcs if a not in removed])
            if H.is_acyclic():
                return frozenset(subset)
    return None


def check_subtournament_fas(G: Digraph, layout: TripleLayout, T) -> bool:
    """For a tournament-inducing vertex set T of a triple digraph: do the
    low-to-high overlap arcs inside T form vertex-disjoint directed paths
    whose removal leaves T acyclic?"""
    T = sorted(set(T))
    for u, v in itertools.combinations(T, 2):
        if not G.adjacent(u, v):
            raise ValueError(f"vertices {u},{v} are non-adjacent; T is not a tournament")
    fwd = forward_arcs(G, layout)
    inside = set(T)
    fwd_T = [(u, v) for u, v in fwd if u in inside and v in inside]
    if not is_disjoint_directed_paths(fwd_T):
        return False
    removed = set(fwd_T)
    rest = [
        (u, v)
        for u, v in G.arcs
        if u in inside and v in inside and (u, v) not in removed
    ]
    return Digraph(G.n, rest).is_acyclic()


# -- ordered-graph patterns --------------------------------------------------


def non_interlaced_check(G: OrderedGraph):
    """None iff the vertex order avoids the interlacing pattern; otherwise
    the lexicographically least (i1,...,i5) with all three pattern edges."""
    g = G.graph
    n = g.n
    for combo in itertools.combinations(range(n), 5):
        i1, i2, i3, i4, i5 = combo
        if g.has_edge(i1, i3) and g.has_edge(i3, i5) and g.has_edge(i2, i4):
            return combo
    return None


def flat_check(G: Digraph, structure: MultipartiteStructure) -> bool:
    """True iff, for every vertex, its backward in-neighbor tails lie in one
    part and its backward out-neighbor heads lie in one part."""
    check_multipartite_structure(G, structure)
    pos = structure.part_index()
    for v in range(G.n):
        pv = pos[v]
        tails = {pos[u] for u in G._in[v] if pos[u] > pv}
        if len(tails) > 1:
            return False
        heads = {pos[w] for w in G._out[v] if pos[w] < pv}
        if len(heads) > 1:
            return False
    return True


# The five-vertex tournament with a hub, two chained pairs, and exactly one
# flat ordering of its vertices; index r is the r-th vertex in that order.
_ROLE_PATTERN = Digraph(
    5,
    [
        (0, 1), (0, 3), (0, 4),
        (1, 2), (1, 4),
        (2, 0), (2, 3),
        (3, 1), (3, 4),
        (4, 2),
    ],
)


def delta22_role_pattern() -> Digraph:
    """The two-pair triangle composition relabeled by its forced flat order."""
    return _ROLE_PATTERN


def check_flat_delta_order(G: Digraph, structure: MultipartiteStructure, witness) -> bool:
    """Does an induced two-pair-triangle witness in a flat-ordered host list
    its vertices in the forced position order?

    ``witness`` maps the vertices of delta_tt(2, 2) (hub first, then the two
    pairs) to host vertices.  Precondition failures raise ValueError.
    """
    if not flat_check(G, structure):
        raise ValueError("host part order is not flat")
    pattern = delta_tt(2, 2)
    witness = tuple(witness)
    if len(witness) != pattern.n or len(set(witness)) != pattern.n:
        raise ValueError("witness must map the 5 pattern vertices injectively")
    for i in range(pattern.n):
        for j in range(pattern.n):
            if i != j and pattern.has_arc(i, j) != G.has_arc(witness[i], witness[j]):
                raise ValueError("witness does not realize the pattern")
    pos = structure.part_index()
    positions = [pos[w] for w in witness]
    if len(set(positions)) != 5:
        raise ValueError("witness vertices must lie in distinct parts")
    ordered = [w for _, w in sorted(zip(positions, witness))]
    for i in range(5):
        for j in range(5):
            if i != j and G.has_arc(ordered[i], ordered[j]) != _ROLE_PATTERN.has_arc(i, j):
                return False
    return True


# -- jewels and clusters -----------------------------------------------------


def find_jewel_chain(G: Digraph, H: Digraph, length: int):
    """Pairwise disjoint induced copies of H=>H forming a chain: consecutive
    jewels fully dominated forward, and no arc from a later jewel back to an
    earlier one.  Returns the list of jewel vertex sets or None."""
    if length < 1:
        raise ValueError("chain length must be positive")
    if G.n > limit("JEWEL_VERTICES"):
        raise GuardExceeded(
            f"jewel-chain search on {G.n} vertices exceeds ceiling "
            f"{limit('JEWEL_VERTICES')}"
        )
    jewel = compose_arrow(H, H)
    seen = {frozenset(m) for m in find_induced_all(jewel, G)}
    jewels = sorted(seen, key=sorted)
    masks = [mask_of(j) for j in jewels]
    chain: list[int] = []

    def all_arcs(src_idx, dst_idx):
        dst = masks[dst_idx]
        return all(dst & ~G._outmask[a] == 0 for a in jewels[src_idx])

    def none_back(dst_idx, earlier_mask):
        return all(G._outmask[b] & earlier_mask == 0 for b in jewels[dst_idx])

    def rec(used_mask):
        if len(chain) == length:
            return True
        for idx in range(len(jewels)):
            if masks[idx] & used_mask:
                continue
            if chain:
                if not all_arcs(chain[-1], idx):
                    continue
                if not none_back(idx, used_mask):
                    continue
            chain.append(idx)
            if rec(used_mask | masks[idx]):
                return True
            chain.pop()
        return False

    if rec(0):
        return [jewels[i] for i in chain]
    return None


@dataclass(frozen=True)
class ClusterWitness:
    """A vertex set whose dichromatic number reaches t within the size
    budget bound_f(t)."""

    t: int
    vertices: frozenset


def find_t_cluster(G: Digraph, t: int):
    """Lexicographically least (by size, then vertex set) t-cluster, or None.

    Guarded: t <= 3 and small hosts only; the size budget explodes past
    that and subset search stops being meaningful.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if t == 1:
        return ClusterWitness(1, frozenset({0})) if G.n >= 1 else None
    if t > 3:
        raise GuardExceeded(f"cluster search implemented for t <= 3 only, got {t}")
    if G.n > limit("CLUSTER_VERTICES"):
        raise GuardExceeded(
            f"cluster search on {G.n} vertices exceeds ceiling "
            f"{limit('CLUSTER_VERTICES')}"
        )
    from .coloring import dicolorable
    from .hero import bound_f

    budget = min(bound_f(t), G.n)
    for size in range(1, budget + 1):
        for S in itertools.combinations(range(G.n), size):
            m = mask_of(S)
            if subset_acyclic(G, m):
                continue
            if t == 2:
                return ClusterWitness(2, frozenset(S))
            H, _ = G.induced(S)
            if not dicolorable(H, t - 1):
                return ClusterWitness(t, frozenset(S))
    return None


def classify_arc(G: Digraph, u: int, v: int, t: int) -> str:
    """'heavy' when the joint triangle neighborhood of the arc (u, v), the
    out-neighbors of v that are in-neighbors of u, contains a (t-1)-cluster;
    'light' otherwise."""
    if not G.has_arc(u, v):
        raise ValueError(f"({u},{v}) is not an arc")
    triangle = G._outmask[v] & G._inmask[u]
    H, _ = G.induced(bits(triangle))
    return "heavy" if find_t_cluster(H, t - 1) is not None else "light"
