"""Recursive recognizers for the hero grammars, the growth-bound functions,
and the canonical-form plumbing the grammar search memoizes on.

A derivation is a parse tree whose evaluation rebuilds the recognized
tournament (up to isomorphism): single-vertex leaves, forward compositions,
and triangle compositions with a transitive side.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import Digraph, GuardExceeded, bits, is_tournament, mask_of
from .constructions import compose_arrow, delta, delta_tt, tt
from .limits import limit


@dataclass(frozen=True)
class LeafK1:
    """The single vertex."""


@dataclass(frozen=True)
class LeafDelta22:
    """The two-pair triangle composition, admitted only conditionally."""


@dataclass(frozen=True)
class ArrowNode:
    left: object
    right: object


@dataclass(frozen=True)
class DeltaNode:
    """Triangle composition with a transitive tournament on one side.

    side "left" puts the k-vertex transitive part between the hub and the
    child; side "right" puts it after the child.
    """

    k: int
    side: str
    child: object


HeroDerivation = LeafK1 | LeafDelta22 | ArrowNode | DeltaNode


def evaluate_derivation(node) -> Digraph:
    """Rebuild the digraph a derivation describes."""
    if isinstance(node, LeafK1):
        return Digraph(1)
    if isinstance(node, LeafDelta22):
        return delta_tt(2, 2)
    if isinstance(node, ArrowNode):
        return compose_arrow(evaluate_derivation(node.left), evaluate_derivation(node.right))
    if isinstance(node, DeltaNode):
        child = evaluate_derivation(node.child)
        if node.side == "left":
            return delta(tt(node.k), child)
        return delta(child, tt(node.k))
    raise TypeError(f"not a derivation node: {node!r}")


def derivation_sexpr(node) -> str:
    """Compact s-expression rendering, e.g. ``(delta 1 2 (c3))``."""
    if isinstance(node, LeafK1):
        return "(k1)"
    if isinstance(node, LeafDelta22):
        return "(delta122)"
    if isinstance(node, ArrowNode):
        return f"(arrow {derivation_sexpr(node.left)} {derivation_sexpr(node.right)})"
    if isinstance(node, DeltaNode):
        if node.k == 1 and isinstance(node.child, LeafK1):
            return "(c3)"
        child = derivation_sexpr(node.child)
        if node.side == "left":
            return f"(delta 1 {node.k} {child})"
        return f"(delta 1 {child} {node.k})"
    raise TypeError(f"not a derivation node: {node!r}")


# -- canonical forms -----------------------------------------------------------


def canonical_form(G: Digraph):
    """Hashable key equal for two digraphs iff they are isomorphic.

    Iterated degree refinement narrows the candidate orderings, then the
    minimum arc encoding over the remaining orderings is taken.  Exact but
    guarded: unrefined classes cost factorial time.
    """
    n = G.n
    if n > limit("CANONICAL_VERTICES"):
        raise GuardExceeded(
            f"canonical form on {n} vertices exceeds ceiling "
            f"{limit('CANONICAL_VERTICES')}"
        )
    if n == 0:
        return (0, ())

    def compress(signatures):
        order = {s: i for i, s in enumerate(sorted(set(signatures)))}
        return [order[s] for s in signatures]

    col = compress([(G.out_degree(v), G.in_degree(v)) for v in range(n)])
    while True:
        sigs = [
            (
                col[v],
                tuple(sorted(col[w] for w in G._out[v])),
                tuple(sorted(col[w] for w in G._in[v])),
            )
            for v in range(n)
        ]
        new = compress(sigs)
        if new == col:
            break
        col = new

    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(col[v], []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    candidates = 1
    for g in groups:
        candidates *= math.factorial(len(g))
    if candidates > 2_000_000:
        raise GuardExceeded(
            f"canonical form would scan {candidates} orderings; refinement "
            "did not separate the vertices enough"
        )
    best = None
    inv = [0] * n
    for arrangement in itertools.product(*[itertools.permutations(g) for g in groups]):
        i = 0
        for group in arrangement:
            for v in group:
                inv[v] = i
                i += 1
        enc = tuple(sorted((inv[u], inv[v]) for u, v in G.arcs))
        if best is None or enc < best:
            best = enc
    return (n, best)


def are_isomorphic(G1: Digraph, G2: Digraph) -> bool:
    if G1.n != G2.n or len(G1.arcs) != len(G2.arcs):
        return False
    return canonical_form(G1) == canonical_form(G2)


# -- hero grammar in tournaments -----------------------------------------------


def hero_in_tournaments(H: Digraph):
    """Derivation witnessing the tournament-hero grammar, or None.

    Grammar: the single vertex; a forward composition of heroes (recognized
    through the strong-component chain); or a strong tournament splitting at
    some hub x into a transitive x-out-set and a hero x-in-set, or the
    mirror image.  Memoized on canonical forms.
    """
    if not is_tournament(H):
        raise ValueError("hero recognition in tournaments expects a tournament")
    memo: dict = {}
    return _tournament_derivation(H, memo)


def _tournament_derivation(H: Digraph, memo: dict):
    if H.n == 0:
        return None
    if H.n == 1:
        return LeafK1()
    key = canonical_form(H)
    if key in memo:
        return memo[key]
    result = None
    comps = H.strong_components()
    if len(comps) >= 2:
        parts = []
        for comp in comps:
            sub, _ = H.induced(comp)
            d = _tournament_derivation(sub, memo)
            if d is None:
                parts = None
                break
            parts.append(d)
        if parts:
            result = parts[-1]
            for d in reversed(parts[:-1]):
                result = ArrowNode(d, result)
    else:
        for x in range(H.n):
            d = _hub_split(H, x, memo, _tournament_derivation, any_k=True)
            if d is not None:
                result = d
                break
    memo[key] = result
    return result


def _hub_split(H: Digraph, x: int, memo, rec, any_k: bool):
    """Try both triangle decompositions at hub x of a strong tournament.

    The split at x is forced to (out-set, in-set); both decompositions need
    every arc to run from the out-set to the in-set, then one side must be
    transitive and the other must carry the recursive grammar.  ``any_k``
    admits any transitive side size; otherwise only a single vertex.
    """
    out = list(H._out[x])
    inn = list(H._in[x])
    if not out or not inn:
        return None
    in_mask = mask_of(inn)
    if any(in_mask & ~H._outmask[a] for a in out):
        return None
    if any_k or len(out) == 1:
        K, _ = H.induced(out)
        if K.is_acyclic():
            sub, _ = H.induced(inn)
            child = rec(sub, memo)
            if child is not None:
                return DeltaNode(k=len(out), side="left", child=child)
    if any_k or len(inn) == 1:
        K, _ = H.induced(inn)
        if K.is_acyclic():
            sub, _ = H.induced(out)
            child = rec(sub, memo)
            if child is not None:
                return DeltaNode(k=len(inn), side="right", child=child)
    return None


# -- hero grammar in oriented complete multipartite graphs ----------------------


@dataclass(frozen=True)
class HeroVerdict:
    """status is 'yes', 'no', or 'depends-on-delta22'; derivations accompany
    the non-'no' verdicts."""

    status: str
    derivation: object = None


def hero_in_multipartite(H: Digraph, assume_delta22_not_hero: bool = False) -> HeroVerdict:
    """Conditional hero recognition in oriented complete multipartite graphs.

    The unconditional grammar admits the single vertex, forward compositions,
    and triangle compositions with a single-vertex transitive side (either
    side; the host class is closed under arc reversal).  The conditional
    grammar additionally admits the two-pair triangle composition as a leaf;
    membership only there reports 'depends-on-delta22' unless
    ``assume_delta22_not_hero`` collapses it to 'no'.  Non-tournaments are
    never heroes here and report 'no'.
    """
    if not is_tournament(H) or H.n == 0:
        return HeroVerdict("no")
    memo_plain: dict = {}
    d = _multipartite_derivation(H, memo_plain, allow22=False)
    if d is not None:
        return HeroVerdict("yes", d)
    memo_cond: dict = {}
    d = _multipartite_derivation(H, memo_cond, allow22=True)
    if d is not None and not assume_delta22_not_hero:
        return HeroVerdict("depends-on-delta22", d)
    return HeroVerdict("no")


_DELTA22_KEY = None


def _delta22_key():
    global _DELTA22_KEY
    if _DELTA22_KEY is None:
        _DELTA22_KEY = canonical_form(delta_tt(2, 2))
    return _DELTA22_KEY


def _multipartite_derivation(H: Digraph, memo: dict, allow22: bool):
    if H.n == 0:
        return None
    if H.n == 1:
        return LeafK1()
    key = canonical_form(H)
    if key in memo:
        return memo[key]
    result = None
    if allow22 and H.n == 5 and key == _delta22_key():
        result = LeafDelta22()
    if result is None:
        comps = H.strong_components()
        if len(comps) >= 2:
            parts = []
            for comp in comps:
                sub, _ = H.induced(comp)
                d = _multipartite_derivation(sub, memo, allow22)
                if d is None:
                    parts = None
                    break
                parts.append(d)
            if parts:
                result = parts[-1]
                for d in reversed(parts[:-1]):
                    result = ArrowNode(d, result)
        else:
            rec = lambda sub, m: _multipartite_derivation(sub, m, allow22)
            for x in range(H.n):
                d = _hub_split(H, x, memo, rec, any_k=False)
                if d is not None:
                    result = d
                    break
    memo[key] = result
    return result


# -- growth bounds --------------------------------------------------------------


def bound_f(t: int) -> int:
    """Cluster size budget: f(1) = 1, f(t) = 1 + f(t-1) * (1 + f(t-1))."""
    if t < 1:
        raise ValueError("t must be positive")
    b = 1
    for _ in range(t - 1):
        b = 1 + b * (1 + b)
    return b


def bound_phi(c: int, h: int, t: int) -> int:
    """Dichromatic bound for cluster-free hosts.

    phi(c, h, t) = h + h*(h+1)*(c + phi(c, h, t-1)) + c*h + c, seeded at
    t = 1 with the closed-form envelope (2h(h+1))^(2c+1); the recursion
    itself never pins the t = 1 value, only that it exists.
    """
    if c < 1 or h < 1 or t < 1:
        raise ValueError("arguments must be positive")
    value = (2 * h * (h + 1)) ** (2 * c + 1)
    for _ in range(t - 1):
        value = h + h * (h + 1) * (c + value) + c * h + c
    return value


def bound_K(c: int, h: int) -> int:
    """Headline dichromatic bound: max((2h(h+1))^(5c+1), 2^(2*3^(3c+1)+1)*c)."""
    if c < 1 or h < 1:
        raise ValueError("arguments must be positive")
    return max((2 * h * (h + 1)) ** (5 * c + 1), 2 ** (2 * 3 ** (3 * c + 1) + 1) * c)
