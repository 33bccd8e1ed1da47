"""Orbital graphs: directed graphs whose arc set is the closure of a single
ordered base-pair under a permutation group, plus the queries on them that
the futility tests and the refiner need.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .perm import OrderedPartition, PermGroup, Permutation


@dataclass(frozen=True, eq=False)
class OrbitalGraph:
    """Arc data for one orbital graph.

    arcs is lexicographically sorted and duplicate free; out_adj and in_adj
    are indexed by point - 1 and hold sorted neighbor tuples. Graphs built
    by build_orbital_graph always contain their base pair as an arc.
    """

    degree: int
    base_pair: tuple[int, int]
    arcs: tuple[tuple[int, int], ...]
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]
    arc_set: frozenset[tuple[int, int]]

    def has_arc(self, x: int, y: int) -> bool:
        return (x, y) in self.arc_set


def check_base_pair(degree: int, alpha: int, beta: int) -> None:
    for p in (alpha, beta):
        if not 1 <= p <= degree:
            raise ValueError(f"point {p} out of range 1..{degree}")
    if alpha == beta:
        raise ValueError("base pair points must be distinct")


def _graph_from_arcs(degree, base_pair, arc_iterable) -> OrbitalGraph:
    arcs = tuple(sorted(set(arc_iterable)))
    out = [[] for _ in range(degree)]
    inn = [[] for _ in range(degree)]
    for x, y in arcs:
        out[x - 1].append(y)
        inn[y - 1].append(x)
    return OrbitalGraph(
        degree,
        base_pair,
        arcs,
        tuple(tuple(sorted(v)) for v in out),
        tuple(tuple(sorted(v)) for v in inn),
        frozenset(arcs),
    )


def build_orbital_graph(group: PermGroup, alpha: int, beta: int) -> OrbitalGraph:
    """Close {(alpha, beta)} under the group generators, breadth first on
    pairs. Forward images suffice for the same reason as in point orbits."""
    check_base_pair(group.degree, alpha, beta)
    images = [g.images for g in group.generators]
    seen = {(alpha, beta)}
    queue = deque(seen)
    while queue:
        x, y = queue.popleft()
        for im in images:
            pair = (im[x - 1], im[y - 1])
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return _graph_from_arcs(group.degree, (alpha, beta), seen)


def arc_count_formula(group: PermGroup, alpha: int, beta: int) -> int:
    """Number of arcs without building the graph: the orbit size of alpha
    times the orbit size of beta under alpha's stabilizer."""
    check_base_pair(group.degree, alpha, beta)
    return len(group.orbit(alpha)) * len(group.point_stabilizer(alpha).orbit(beta))


def is_self_paired(graph: OrbitalGraph) -> bool:
    """True when the reversed base pair is itself an arc, which makes the
    whole arc set closed under reversal."""
    alpha, beta = graph.base_pair
    return (beta, alpha) in graph.arc_set


def isolated_vertices(graph: OrbitalGraph) -> tuple[int, ...]:
    return tuple(
        v
        for v in range(1, graph.degree + 1)
        if not graph.out_adj[v - 1] and not graph.in_adj[v - 1]
    )


def weak_components(graph: OrbitalGraph) -> OrderedPartition:
    """Weakly connected components as an ordered partition: components with
    two or more vertices first, ascending by minimal vertex, then the
    isolated vertices as ascending singleton cells."""
    n = graph.degree
    seen = [False] * n
    big, single = [], []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        seen[start - 1] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in graph.out_adj[v - 1] + graph.in_adj[v - 1]:
                if not seen[w - 1]:
                    seen[w - 1] = True
                    comp.append(w)
                    queue.append(w)
        (big if len(comp) > 1 else single).append(sorted(comp))
    return OrderedPartition(n, big + single)


def _orbit_witnesses(gens, start: int, degree: int) -> dict[int, Permutation]:
    """Map each reachable point to a product of gens sending start there."""
    reach = {start: Permutation.identity(degree)}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        ux = reach[x]
        for g in gens:
            y = g.images[x - 1]
            if y not in reach:
                reach[y] = ux * g
                queue.append(y)
    return reach


def arc_mapping_element(group, source, target) -> Permutation | None:
    """A group element sending the ordered pair source to target, or None.

    Found in two steps: a transversal element u with source[0]^u =
    target[0], then an element w of source[0]'s stabilizer moving source[1]
    onto the preimage of target[1] under u. The product w * u does both.
    """
    a, b = source
    c, d = target
    check_base_pair(group.degree, a, b)
    check_base_pair(group.degree, c, d)
    u = _orbit_witnesses(group.generators, a, group.degree).get(c)
    if u is None:
        return None
    stab = group.point_stabilizer(a)
    mid = u.inverse().apply(d)
    w = _orbit_witnesses(stab.generators, b, group.degree).get(mid)
    if w is None:
        return None
    return w * u


def components_pairwise_isomorphic(graph: OrbitalGraph, group: PermGroup) -> bool:
    """Verify that an explicit group element carries the base-pair component
    onto every other component with at least two vertices.

    The element is found by mapping the base pair onto any arc of the target
    component; it then acts as a graph automorphism, so its image of the
    base component must be exactly the target component. True for every
    graph produced by build_orbital_graph.
    """
    if graph.degree != group.degree:
        raise ValueError("graph and group degrees differ")
    comps = [c for c in weak_components(graph).cells if len(c) > 1]
    alpha = graph.base_pair[0]
    base = next(c for c in comps if alpha in c)
    for comp in comps:
        if comp == base:
            continue
        members = set(comp)
        arc = next(a for a in graph.arcs if a[0] in members)
        h = arc_mapping_element(group, graph.base_pair, arc)
        if h is None:
            return False
        if {h.images[v - 1] for v in base} != members:
            return False
    return True


def enumerate_base_pairs(group: PermGroup) -> list[tuple[int, int]]:
    """One base pair per orbital graph, up to the group's own symmetry.

    For each orbit representative alpha (minimal point of its orbit) and
    each orbit of alpha's stabilizer on the remaining points, emit (alpha,
    minimal beta of that orbit). The arc set determines alpha (tails fill
    alpha's orbit) and beta (alpha's out-neighbourhood is beta's stabilizer
    orbit), so the emitted pairs produce pairwise distinct graphs already;
    distinct_base_pairs only does real work on arbitrary pair lists.
    """
    pairs = []
    for cell in group.orbit_partition().cells:
        alpha = cell[0]
        stab = group.point_stabilizer(alpha)
        for scell in stab.orbit_partition().cells:
            if alpha in scell:
                continue
            pairs.append((alpha, scell[0]))
    return pairs


def distinct_base_pairs(group: PermGroup, pairs=None) -> list[tuple[int, int]]:
    """Filter base pairs so each distinct arc set is kept once, keeping the
    first pair that produces it."""
    if pairs is None:
        pairs = enumerate_base_pairs(group)
    seen, keep = set(), []
    for pair in pairs:
        arcs = build_orbital_graph(group, pair[0], pair[1]).arcs
        if arcs not in seen:
            seen.add(arcs)
            keep.append(pair)
    return keep


def graphs_equal(g1: OrbitalGraph, g2: OrbitalGraph) -> bool:
    """Arc-set equality; the base pairs may differ."""
    if g1.degree != g2.degree:
        raise ValueError("cannot compare graphs of different degree")
    return g1.arcs == g2.arcs


def to_dot(graph: OrbitalGraph) -> str:
    """DOT text: isolated vertices as bare nodes, arcs in sorted order."""
    lines = ["digraph orbital {"]
    lines += [f"  {v};" for v in isolated_vertices(graph)]
    lines += [f"  {x} -> {y};" for x, y in graph.arcs]
    lines.append("}")
    return "\n".join(lines)


def graph_to_json(graph: OrbitalGraph) -> str:
    return json.dumps(
        {
            "degree": graph.degree,
            "base_pair": list(graph.base_pair),
            "arcs": [list(a) for a in graph.arcs],
            "isolated": list(isolated_vertices(graph)),
        }
    )


def graph_from_json(text: str) -> OrbitalGraph:
    """Rebuild a graph emitted by graph_to_json; adjacency is rederived and
    the isolated field is ignored as redundant."""
    data = json.loads(text)
    degree = data["degree"]
    base_pair = tuple(data["base_pair"])
    arcs = [tuple(a) for a in data["arcs"]]
    for x, y in arcs:
        check_base_pair(degree, x, y)
    return _graph_from_arcs(degree, base_pair, arcs)
