"""Seeded verification checks for the structural claims behind the library.

Every check runs deterministically from its parameters (seeds included) and
returns a VerificationReport; a failing check always carries a
counterexample payload that can be re-checked by hand.  Canonical JSON
excludes wall time, so identical seeds give byte-identical reports.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field

from .bruteforce import all_tournaments, compositions, quasi_transitive_representatives
from .coloring import (
    chromatic_number,
    coloring_from_line_coloring,
    dichromatic_number,
    extract_graph_coloring,
    layered_dicoloring,
    qt_color,
)
from .constructions import (
    build_triple_digraph,
    c3,
    delta,
    delta_tt,
    forward_arcs,
    line_graph,
    separated_grid_digraph,
    tt,
)
from .core import (
    Dicoloring,
    Digraph,
    MultipartiteStructure,
    OrderedGraph,
    UndirectedGraph,
    validate_coloring,
    validate_dicoloring,
)
from .detection import (
    check_flat_delta_order,
    check_subtournament_fas,
    fas_disjoint_paths,
    find_induced,
    find_induced_all,
    flat_check,
    non_interlaced_check,
)
from .hero import bound_f, bound_K, bound_phi
from .sampling import (
    random_digraph,
    random_flat_multipartite,
    random_layered_instance,
    random_maximal_acyclic,
    random_subtournament,
    random_substitution_digraph,
)


@dataclass
class VerificationReport:
    check: str
    params: dict
    passed: bool
    counterexample: object = None
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self, include_timing: bool = False) -> str:
        payload = {
            "check": self.check,
            "params": self.params,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "details": self.details,
        }
        if include_timing:
            payload["seconds"] = round(self.seconds, 3)
        return json.dumps(payload, sort_keys=True)


def _mix(seed: int, salt: int) -> int:
    return seed * 1000003 + salt


def _forbidden_patterns():
    return {
        "delta-1-2-c3": delta(tt(2), c3()),
        "delta-1-2-3": delta_tt(2, 3),
    }


def check_forbidden_patterns(s_min=4, s_max=8):
    """Triple digraphs contain neither 6-vertex pattern tournament."""
    patterns = _forbidden_patterns()
    searched = 0
    for s in range(s_min, s_max + 1):
        D, layout, _ = build_triple_digraph(s)
        for name, P in patterns.items():
            witness = find_induced(P, D)
            searched += 1
            if witness is not None:
                return False, {"s": s, "pattern": name, "witness": list(witness)}, {}
    return True, None, {"searches": searched}


def check_fas_paths():
    """The two pattern tournaments admit no disjoint-paths feedback arc set;
    the directed triangle, transitive tournaments, and every 4-vertex
    tournament do."""
    for name, P in _forbidden_patterns().items():
        if fas_disjoint_paths(P) is not None:
            return False, {"pattern": name, "unexpected_fas": True}, {}
    if fas_disjoint_paths(c3()) is None:
        return False, {"host": "c3", "missing_fas": True}, {}
    for n in range(1, 7):
        if fas_disjoint_paths(tt(n)) != frozenset():
            return False, {"host": f"tt{n}", "missing_fas": True}, {}
    checked = 0
    for n in (2, 3, 4):
        for T in all_tournaments(n):
            checked += 1
            if fas_disjoint_paths(T) is None:
                return False, {"host_arcs": list(T.arcs), "missing_fas": True}, {}
    return True, None, {"tournaments_checked": checked}


def check_subtournament_fas_claim(s_min=4, s_max=7, samples=1000, seed=1):
    """Random subtournaments of the triple digraphs have their overlap arcs
    forming disjoint paths whose removal leaves an acyclic tournament."""
    total = 0
    for s in range(s_min, s_max + 1):
        D, layout, structure = build_triple_digraph(s)
        rng = random.Random(_mix(seed, s))
        for _ in range(samples):
            T = random_subtournament(rng, structure)
            total += 1
            if not check_subtournament_fas(D, layout, T):
                return False, {"s": s, "subtournament": sorted(T)}, {}
    return True, None, {"samples": total}


def check_line_coloring(count=500, max_n=6, seed=1):
    """chi(line graph) >= ceil(log2 chi) and the in-arc-set coloring built
    from an optimal line coloring is always proper within the 2^k budget."""
    rng = random.Random(seed)
    for i in range(count):
        n = rng.randint(2, max_n)
        G = random_digraph(rng, n)
        L = line_graph(G)
        k_line, line_col = chromatic_number(L)
        k_under, _ = chromatic_number(G.underlying())
        need = math.ceil(math.log2(k_under)) if k_under > 0 else 0
        payload = {"sample": i, "arcs": list(G.arcs), "n": n}
        if k_line < need:
            payload.update({"chi_line": k_line, "chi": k_under})
            return False, payload, {}
        coloring, _ = coloring_from_line_coloring(G, line_col)
        if not validate_coloring(G.underlying(), coloring):
            payload["improper_transform"] = True
            return False, payload, {}
        if coloring.used() > 2 ** k_line:
            payload.update({"colors_used": coloring.used(), "chi_line": k_line})
            return False, payload, {}
    return True, None, {"samples": count}


def check_forward_bipartite(s_min=4, s_max=6, samples=500, seed=1):
    """Inside any acyclic induced subgraph of a triple digraph, the overlap
    arcs form a one-step digraph (no 3-vertex directed path) and their
    underlying graph is 2-colorable."""
    total = 0
    for s in range(s_min, s_max + 1):
        D, layout, _ = build_triple_digraph(s)
        fwd = forward_arcs(D, layout)
        rng = random.Random(_mix(seed, s))
        for _ in range(samples):
            R = set(random_maximal_acyclic(rng, D))
            arcs = [(u, v) for u, v in fwd if u in R and v in R]
            total += 1
            heads = {v for _, v in arcs}
            tails = {u for u, _ in arcs}
            if heads & tails:
                return False, {"s": s, "subset": sorted(R), "path_vertex": sorted(heads & tails)}, {}
            H = UndirectedGraph(D.n, arcs)
            k, _ = chromatic_number(H)
            if k > 2:
                return False, {"s": s, "subset": sorted(R), "chi_forward": k}, {}
    return True, None, {"samples": total}


def check_layered_coloring(count=50, d=2, seed=1):
    """The greedy block coloring stays valid within 2d colors on random
    hypothesis-satisfying layered instances."""
    rng = random.Random(seed)
    for i in range(count):
        inst = random_layered_instance(rng, d)
        col = layered_dicoloring(inst)
        if not validate_dicoloring(inst.host, col):
            return False, {"sample": i, "arcs": list(inst.host.arcs)}, {}
        if col.used() > 2 * d:
            return False, {"sample": i, "colors_used": col.used()}, {}
    return True, None, {"samples": count}


def _flat_orientation_sweep(n):
    """Yield (Digraph, MultipartiteStructure) for every flat-ordered
    orientation of every ordered part composition of n."""
    for sizes in compositions(n):
        bounds = [0]
        for s in sizes:
            bounds.append(bounds[-1] + s)
        part_of = []
        for i, s in enumerate(sizes):
            part_of.extend([i] * s)
        cross = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if part_of[u] != part_of[v]
        ]
        parts = tuple(
            frozenset(range(bounds[i], bounds[i + 1])) for i in range(len(sizes))
        )
        structure = MultipartiteStructure(parts)
        for bitsmask in range(1 << len(cross)):
            arcs = []
            back_in: dict[int, int] = {}
            back_out: dict[int, int] = {}
            flat = True
            for idx, (u, v) in enumerate(cross):
                if (bitsmask >> idx) & 1:
                    arcs.append((v, u))
                    # v is in the later part, so (v, u) is a backward arc
                    pu = back_in.setdefault(u, part_of[v])
                    pv = back_out.setdefault(v, part_of[u])
                    if pu != part_of[v] or pv != part_of[u]:
                        flat = False
                        break
                else:
                    arcs.append((u, v))
            if flat:
                yield Digraph(n, arcs), structure


def check_flat_order(max_exhaustive=6, samples=1000, sample_n=8, seed=1):
    """In every flat-ordered host, each induced two-pair triangle witness
    lists its vertices in the forced position order."""
    pattern = delta_tt(2, 2)
    witnesses = 0
    hosts = 0

    def scan(G, structure):
        nonlocal witnesses
        if not flat_check(G, structure):
            raise AssertionError("sweep produced a non-flat host")
        for w in find_induced_all(pattern, G):
            witnesses += 1
            if not check_flat_delta_order(G, structure, w):
                return {"arcs": list(G.arcs), "witness": list(w)}
        return None

    for n in range(1, max_exhaustive + 1):
        for G, structure in _flat_orientation_sweep(n):
            hosts += 1
            bad = scan(G, structure)
            if bad is not None:
                bad["n"] = n
                return False, bad, {}
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randint(5, sample_n)
        G, structure = random_flat_multipartite(rng, n)
        hosts += 1
        bad = scan(G, structure)
        if bad is not None:
            bad["sample"] = i
            return False, bad, {}
    if witnesses == 0:
        return False, {"no_witnesses_found": True}, {}
    return True, None, {"flat_hosts": hosts, "witnesses": witnesses}


def check_grid_pipeline(max_n=3):
    """Full pipeline: for every ordered graph up to max_n vertices and the
    directed triangle as separator, the separated grid is flat, avoids the
    two-pair triangle pattern, has an exact 2-dicoloring, and the extracted
    coloring properly colors the ordered graph within 2^(2^2) colors."""
    R = c3()
    R_structure = MultipartiteStructure((frozenset({0}), frozenset({1}), frozenset({2})))
    r, _ = dichromatic_number(R)
    if r != 2:
        return False, {"separator_dichromatic": r}, {}
    pattern = delta_tt(2, 2)
    instances = 0
    for n in range(1, max_n + 1):
        all_pairs = list(itertools.combinations(range(n), 2))
        for picks in range(1 << len(all_pairs)):
            edges = [all_pairs[i] for i in range(len(all_pairs)) if (picks >> i) & 1]
            G = OrderedGraph(UndirectedGraph(n, edges))
            if non_interlaced_check(G) is not None:
                continue
            payload = {"n": n, "edges": edges}
            dg, layout = separated_grid_digraph(G, R, R_structure)
            instances += 1
            if not flat_check(dg, layout.structure):
                payload["flat"] = False
                return False, payload, {}
            w = find_induced(pattern, dg)
            if w is not None:
                payload["pattern_witness"] = list(w)
                return False, payload, {}
            k, dc = dichromatic_number(dg)
            if k > 2 or (n >= 2 and k != 2):
                payload["dichromatic"] = k
                return False, payload, {}
            if dc.k < 2:
                dc = Dicoloring(dc.colors, 2)
            coloring, _ = extract_graph_coloring(G, dg, dc, layout)
            if not validate_coloring(G.graph, coloring):
                payload["improper_extraction"] = True
                return False, payload, {}
            if coloring.used() > 2 ** (2 ** r):
                payload["colors_used"] = coloring.used()
                return False, payload, {}
    return True, None, {"instances": instances}


def check_qt_coloring(max_exhaustive=6, samples=200, max_sub_n=12, seed=1):
    """Modular-decomposition coloring on quasi-transitive inputs: always
    valid, never below the exact optimum, 1 color on triangle-free inputs,
    at most 2 on inputs without the 3-vertex transitive tournament."""
    triangle = c3()
    tt3 = tt(3)
    stats = {"graphs": 0, "triangle_free": 0, "tt3_free": 0}

    def check_one(G, origin):
        col = qt_color(G)
        if not validate_dicoloring(G, col):
            return {"origin": origin, "arcs": list(G.arcs), "invalid": True}
        exact, _ = dichromatic_number(G)
        if col.used() < exact:
            return {"origin": origin, "arcs": list(G.arcs), "below_optimum": col.used()}
        stats["graphs"] += 1
        if find_induced(triangle, G) is None:
            stats["triangle_free"] += 1
            c = qt_color(G, hero=triangle)
            if c.used() != 1 or not G.is_acyclic():
                return {"origin": origin, "arcs": list(G.arcs), "triangle_free_not_acyclic": True}
        if find_induced(tt3, G) is None:
            stats["tt3_free"] += 1
            c = qt_color(G, hero=tt3)
            if c.used() > 2 or not validate_dicoloring(G, c):
                return {"origin": origin, "arcs": list(G.arcs), "tt3_free_colors": c.used()}
        return None

    reps = quasi_transitive_representatives(max_exhaustive)
    for n in range(1, max_exhaustive + 1):
        for G in reps[n]:
            bad = check_one(G, f"exhaustive-n{n}")
            if bad is not None:
                return False, bad, {}
    rng = random.Random(seed)
    flavors = ["mixed", "acyclic", "triangle-blowup"]
    for i in range(samples):
        G = random_substitution_digraph(rng, max_sub_n, flavor=flavors[i % 3])
        bad = check_one(G, f"sample-{i}")
        if bad is not None:
            return False, bad, {}
    return True, None, stats


def check_bounds(max_value=6):
    """Growth-bound sanity: recurrence values, closed-form envelopes, and
    the headline bound formula."""
    if not (bound_f(1) == 1 and bound_f(2) == 3 and bound_f(3) == 13):
        return False, {"f": [bound_f(1), bound_f(2), bound_f(3)]}, {}
    for t in range(1, max_value + 1):
        if bound_f(t) > 2 ** (2 * 3 ** t):
            return False, {"t": t, "f": bound_f(t)}, {}
    for cc in range(1, max_value + 1):
        for h in range(1, max_value + 1):
            for t in range(1, max_value + 1):
                if bound_phi(cc, h, t) > (2 * h * (h + 1)) ** (2 * cc + t):
                    return False, {"c": cc, "h": h, "t": t, "phi": bound_phi(cc, h, t)}, {}
            expected = max(
                (2 * h * (h + 1)) ** (5 * cc + 1),
                2 ** (2 * 3 ** (3 * cc + 1) + 1) * cc,
            )
            if bound_K(cc, h) != expected:
                return False, {"c": cc, "h": h}, {}
    return True, None, {"range": max_value}


CHECKS = {
    "forbidden-patterns": (
        check_forbidden_patterns,
        {"s_min": 4, "s_max": 8},
        "triple digraphs contain neither 6-vertex pattern tournament",
    ),
    "fas-paths": (
        check_fas_paths,
        {},
        "disjoint-paths feedback arc sets exist exactly where claimed",
    ),
    "subtournament-fas": (
        check_subtournament_fas_claim,
        {"s_min": 4, "s_max": 7, "samples": 1000, "seed": 1},
        "overlap arcs of subtournaments form disjoint-path feedback arc sets",
    ),
    "line-coloring": (
        check_line_coloring,
        {"count": 500, "max_n": 6, "seed": 1},
        "line-graph chromatic bound and in-arc-set coloring transform",
    ),
    "forward-bipartite": (
        check_forward_bipartite,
        {"s_min": 4, "s_max": 6, "samples": 500, "seed": 1},
        "overlap arcs inside acyclic subsets are one-step and bipartite",
    ),
    "layered-coloring": (
        check_layered_coloring,
        {"count": 50, "d": 2, "seed": 1},
        "greedy block coloring stays within twice the block bound",
    ),
    "flat-order": (
        check_flat_order,
        {"max_exhaustive": 6, "samples": 1000, "sample_n": 8, "seed": 1},
        "two-pair triangle witnesses in flat hosts are position-ordered",
    ),
    "grid-pipeline": (
        check_grid_pipeline,
        {"max_n": 3},
        "separated-grid construction, 2-dicoloring, and coloring extraction",
    ),
    "qt-coloring": (
        check_qt_coloring,
        {"max_exhaustive": 6, "samples": 200, "max_sub_n": 12, "seed": 1},
        "modular-decomposition coloring of quasi-transitive digraphs",
    ),
    "bounds": (
        check_bounds,
        {"max_value": 6},
        "growth-bound recurrences and closed-form envelopes",
    ),
}


def run_check(name: str, overrides: dict | None = None) -> VerificationReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(sorted(CHECKS))}")
    fn, defaults, _ = CHECKS[name]
    params = dict(defaults)
    if overrides:
        unknown = set(overrides) - set(defaults)
        if unknown:
            raise KeyError(f"unknown parameters for {name}: {sorted(unknown)}")
        params.update(overrides)
    start = time.perf_counter()
    passed, counterexample, details = fn(**params)
    report = VerificationReport(
        check=name,
        params=params,
        passed=passed,
        counterexample=counterexample,
        details=details,
        seconds=time.perf_counter() - start,
    )
    return report
