"""Exhaustive oracles used to validate the clever implementations.

Everything here prefers transparency over speed: full enumeration of set
partitions, of vertex maps, and of labeled digraphs.  The solvers and
detectors elsewhere are tested against these.
"""

from __future__ import annotations

import itertools

from .core import Digraph, UndirectedGraph, mask_of, subset_acyclic


def partitions_into(items: tuple, k: int):
    """All partitions of ``items`` into exactly k nonempty blocks."""
    n = len(items)
    if k > n or k < 1:
        return
    blocks: list[list] = []

    def rec(i):
        if len(blocks) + (n - i) < k:
            return
        if i == n:
            if len(blocks) == k:
                yield [tuple(b) for b in blocks]
            return
        for b in blocks:
            b.append(items[i])
            yield from rec(i + 1)
            b.pop()
        if len(blocks) < k:
            blocks.append([items[i]])
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(0)


def brute_dichromatic(G: Digraph) -> int:
    """Minimum number of acyclic classes, by exhaustive partition search."""
    if G.n == 0:
        return 0
    verts = tuple(range(G.n))
    for k in range(1, G.n + 1):
        for blocks in partitions_into(verts, k):
            if all(subset_acyclic(G, mask_of(b)) for b in blocks):
                return k
    raise AssertionError("unreachable: singleton partition is always valid")


def brute_chromatic(H: UndirectedGraph) -> int:
    """Minimum number of independent classes, by exhaustive partition search."""
    if H.n == 0:
        return 0
    verts = tuple(range(H.n))

    def independent(block):
        return not any(H.has_edge(a, b) for a, b in itertools.combinations(block, 2))

    for k in range(1, H.n + 1):
        for blocks in partitions_into(verts, k):
            if all(independent(b) for b in blocks):
                return k
    raise AssertionError("unreachable")


def brute_find_induced(pattern: Digraph, host: Digraph):
    """Lexicographically least injective map realizing ``pattern`` as an
    induced subdigraph of ``host``, or None.  Pure enumeration."""
    p, h = pattern.n, host.n
    if p > h:
        return None
    best = None
    for combo in itertools.combinations(range(h), p):
        for perm in itertools.permutations(combo):
            ok = True
            for i in range(p):
                for j in range(p):
                    if i == j:
                        continue
                    if pattern.has_arc(i, j) != host.has_arc(perm[i], perm[j]):
                        ok = False
                        break
                if not ok:
                    break
            if ok and (best is None or perm < best):
                best = perm
    return best


def all_digraphs(n: int):
    """Every labeled loopless digon-free digraph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        yield Digraph(n, arcs)


def all_tournaments(n: int):
    """Every labeled tournament on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1), repeat=len(pairs)):
        arcs = [(u, v) if s == 0 else (v, u) for (u, v), s in zip(pairs, states)]
        yield Digraph(n, arcs)


def compositions(n: int):
    """All ordered tuples of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def exhaustive_fas_search(G: Digraph):
    """All feedback arc sets of G, by full subset enumeration (generator)."""
    arcs = G.arcs
    for r in range(len(arcs) + 1):
        for subset in itertools.combinations(arcs, r):
            removed = set(subset)
            H = Digraph(G.n, [a for a in arcs if a not in removed])
            if H.is_acyclic():
                yield subset


def _extend_representatives(reps, keep, canon):
    """One-vertex extensions of ``reps`` deduplicated by canonical form.

    ``keep`` filters candidate digraphs; ``canon`` maps a digraph to a
    hashable isomorphism key.
    """
    seen = {}
    for base in reps:
        n = base.n + 1
        v = base.n
        for states in itertools.product((0, 1, 2), repeat=base.n):
            arcs = list(base.arcs)
            for u, s in enumerate(states):
                if s == 1:
                    arcs.append((u, v))
                elif s == 2:
                    arcs.append((v, u))
            cand = Digraph(n, arcs)
            if not keep(cand, v):
                continue
            key = canon(cand)
            if key not in seen:
                seen[key] = cand
    return list(seen.values())


def tournament_representatives(max_n: int) -> dict:
    """One representative per tournament isomorphism class, for 1..max_n."""
    from .hero import canonical_form

    def keep(G, v):
        return all(G.adjacent(u, v) for u in range(v))

    reps = {1: [Digraph(1)]}
    for n in range(2, max_n + 1):
        reps[n] = _extend_representatives(reps[n - 1], keep, canonical_form)
    return reps


def quasi_transitive_representatives(max_n: int) -> dict:
    """One representative per quasi-transitive isomorphism class, 1..max_n.

    Quasi-transitivity is hereditary, so one-vertex extensions of the
    (n-1)-vertex classes reach every n-vertex class.
    """
    from .detection import is_quasi_transitive
    from .hero import canonical_form

    def keep(G, v):
        # only triples through the new vertex need rechecking
        for u in range(v):
            for w in range(v):
                if u == w:
                    continue
                if G.has_arc(u, v) and G.has_arc(v, w) and not G.adjacent(u, w):
                    return False
            if G.has_arc(u, v):
                for w in range(v):
                    if w != u and G.has_arc(w, u) and not G.adjacent(w, v):
                        return False
            if G.has_arc(v, u):
                for w in range(v):
                    if w != u and G.has_arc(u, w) and not G.adjacent(v, w):
                        return False
        return True

    reps = {1: [Digraph(1)]}
    for n in range(2, max_n + 1):
        reps[n] = _extend_representatives(reps[n - 1], keep, canonical_form)
        assert all(is_quasi_transitive(G) for G in reps[n])
    return reps
