"""Seeded random generators backing the verification harness and tests.

All functions take an explicit random.Random so every run is reproducible
from its seed.
"""

from __future__ import annotations

import itertools
import random

from .core import Digraph, MultipartiteStructure, mask_of, subset_acyclic
from .constructions import c3, substitute, tt


def random_digraph(rng: random.Random, n: int) -> Digraph:
    """Uniform over loopless digon-free digraphs: each pair independently
    gets no arc, a forward arc, or a backward arc."""
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        roll = rng.randrange(3)
        if roll == 1:
            arcs.append((u, v))
        elif roll == 2:
            arcs.append((v, u))
    return Digraph(n, arcs)


def random_tournament(rng: random.Random, n: int) -> Digraph:
    arcs = [
        (u, v) if rng.randrange(2) == 0 else (v, u)
        for u, v in itertools.combinations(range(n), 2)
    ]
    return Digraph(n, arcs)


def random_acyclic(rng: random.Random, n: int, p: float = 0.5) -> Digraph:
    """Random acyclic digraph: forward arcs (i, j), i < j, kept with prob p."""
    arcs = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return Digraph(n, arcs)


def random_subtournament(rng: random.Random, structure: MultipartiteStructure) -> list:
    """Vertex set meeting each part at most once: each part contributes one
    uniform vertex with probability 1/2."""
    picked = []
    for part in structure.parts:
        if rng.randrange(2) == 0:
            picked.append(rng.choice(sorted(part)))
    return picked


def random_maximal_acyclic(rng: random.Random, G: Digraph) -> list:
    """Greedy maximal acyclic induced vertex set over a random vertex order."""
    order = list(range(G.n))
    rng.shuffle(order)
    mask = 0
    for v in order:
        if subset_acyclic(G, mask | (1 << v)):
            mask |= 1 << v
    return [v for v in range(G.n) if (mask >> v) & 1]


def random_composition(rng: random.Random, n: int, max_parts: int | None = None) -> list:
    """Random ordered list of positive part sizes summing to n."""
    sizes = []
    left = n
    while left:
        take = rng.randint(1, left)
        sizes.append(take)
        left -= take
    if max_parts is not None:
        while len(sizes) > max_parts:
            i = rng.randrange(len(sizes) - 1)
            sizes[i] += sizes.pop(i + 1)
    return sizes


def _oriented_multipartite(sizes: list, orient) -> tuple[Digraph, MultipartiteStructure]:
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    parts = tuple(
        frozenset(range(bounds[i], bounds[i + 1])) for i in range(len(sizes))
    )
    n = bounds[-1]
    part_of = [0] * n
    for i, p in enumerate(parts):
        for v in p:
            part_of[v] = i
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                arcs.append((u, v) if orient(u, v) else (v, u))
    return Digraph(n, arcs), MultipartiteStructure(parts)


def random_flat_multipartite(
    rng: random.Random, n: int, max_backward: int = 3, attempts: int = 200
) -> tuple[Digraph, MultipartiteStructure]:
    """Seeded flat-ordered oriented complete multipartite host.

    Starts from the all-forward orientation of a random part composition and
    flips a few cross pairs backward, rejecting non-flat outcomes.  The
    all-forward orientation is the always-flat fallback.
    """
    from .detection import flat_check

    sizes = random_composition(rng, n)
    for _ in range(attempts):
        flips = set()
        for _ in range(rng.randint(0, max_backward)):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:
                flips.add((min(u, v), max(u, v)))
        G, structure = _oriented_multipartite(sizes, lambda u, v: (u, v) not in flips)
        if flat_check(G, structure):
            return G, structure
    return _oriented_multipartite(sizes, lambda u, v: True)


def random_substitution_digraph(
    rng: random.Random, target_n: int, flavor: str = "mixed"
) -> Digraph:
    """Quasi-transitive digraph grown by substituting acyclic digraphs and
    tournaments into each other.

    flavor 'acyclic' uses acyclic blocks only (the result stays acyclic);
    flavor 'triangle-blowup' blows the directed triangle up by stable sets
    (the result stays free of the 3-vertex transitive tournament); 'mixed'
    draws blocks from both families.
    """

    def block():
        size = rng.randint(2, 3)
        if flavor == "acyclic":
            return random_acyclic(rng, size)
        if flavor == "triangle-blowup":
            return Digraph(rng.randint(2, 3))
        if rng.randrange(2) == 0:
            return random_tournament(rng, size)
        return random_acyclic(rng, size)

    if flavor == "triangle-blowup":
        G = c3()
    elif flavor == "acyclic":
        G = random_acyclic(rng, rng.randint(2, 3))
    else:
        G = random_tournament(rng, 3) if rng.randrange(2) == 0 else random_acyclic(rng, 3)
    while G.n < target_n:
        B = block()
        if G.n + B.n - 1 > target_n:
            break
        G = substitute(G, rng.randrange(G.n), B)
    return G


def random_layered_instance(rng: random.Random, d: int, attempts: int = 500):
    """Seeded layered digraph satisfying the block-coloring hypotheses.

    Generates forward-biased digraphs over 3-5 consecutive layers and
    rejects candidates whose layers or backward intervals exceed d, checked
    with the exact solver.
    """
    from .coloring import LayeredInstance, dicolorable

    for _ in range(attempts):
        t = rng.randint(3, 5)
        sizes = [rng.randint(1, 2) for _ in range(t)]
        bounds = [0]
        for s in sizes:
            bounds.append(bounds[-1] + s)
        n = bounds[-1]
        layer_of = [0] * n
        layers = []
        for i in range(t):
            layer = frozenset(range(bounds[i], bounds[i + 1]))
            layers.append(layer)
            for v in layer:
                layer_of[v] = i
        arcs = []
        for u in range(n):
            for v in range(u + 1, n):
                if layer_of[u] == layer_of[v]:
                    if rng.random() < 0.5:
                        arcs.append((u, v) if rng.randrange(2) == 0 else (v, u))
                elif rng.random() < 0.6:
                    arcs.append((u, v) if rng.random() < 0.85 else (v, u))
        G = Digraph(n, arcs)
        ok = True
        for layer in layers:
            H, _ = G.induced(layer)
            if not dicolorable(H, d):
                ok = False
                break
        if not ok:
            continue
        back = set()
        for u, v in arcs:
            if layer_of[u] > layer_of[v]:
                back.add((layer_of[v], layer_of[u]))
        for i, j in back:
            members = [v for v in range(n) if i < layer_of[v] <= j]
            H, _ = G.induced(members)
            if not dicolorable(H, d):
                ok = False
                break
        if ok:
            return LayeredInstance(G, tuple(layers), d)
    raise RuntimeError("could not sample a hypothesis-satisfying layered instance")
