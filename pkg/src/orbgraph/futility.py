"""Three independent tests for whether an orbital graph is futile.

A graph is futile when the stabilizer of the group's ordered orbit
partition, the direct product of full symmetric groups on the orbits,
already acts on it by graph automorphisms. Such a graph can never split an
orbit cell, so a refiner gains nothing by building it. Futility happens
exactly when the unique component with two or more vertices is a complete
digraph or a complete bipartite digraph (arc set = sources x sinks); the
three tests here decide that from orbit arithmetic, from the built graph's
structure, and from the definition directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orbital import (
    OrbitalGraph,
    arc_count_formula,
    build_orbital_graph,
    check_base_pair,
    is_self_paired,
    weak_components,
)
from .perm import PermGroup, Permutation, partition_stabilizer_generators

SHAPE_COMPLETE = "complete-on-orbit"
SHAPE_BIPARTITE = "complete-bipartite"
SHAPE_NONE = "not-futile"

METHODS = ("fast", "structural", "oracle")


@dataclass(frozen=True)
class FutilityVerdict:
    """Outcome of the structural test: the shape found, the component it
    lives on, and for non-futile graphs a witness (g, arc) where g is an
    orbit-partition stabilizer generator moving arc off the arc set."""

    futile: bool
    shape: str
    component: tuple[int, ...] | None
    witness: tuple[Permutation, tuple[int, int]] | None


def find_arc_violation(graph: OrbitalGraph, gens):
    """First generator that moves some arc to a non-arc, with that arc.

    Generators are scanned in the given order and arcs lexicographically,
    so the witness is deterministic. A bijection maps the finite arc set
    into itself only by mapping it onto itself, so one forward sweep over
    the arcs decides preservation.
    """
    for g in gens:
        im = g.images
        for x, y in graph.arcs:
            if (im[x - 1], im[y - 1]) not in graph.arc_set:
                return g, (x, y)
    return None


def is_futile_fast(group: PermGroup, alpha: int, beta: int) -> bool:
    """Decide futility from orbit sizes alone, without building the graph.

    With beta inside alpha's orbit, the stabilizer orbit of beta sits in
    alpha's orbit minus alpha itself, so it has at most |alpha^H| - 1
    points; hitting that maximum is exactly the complete-digraph case.
    With beta outside, the graph is complete bipartite exactly when the
    stabilizer orbit of beta already covers beta's whole orbit.
    """
    check_base_pair(group.degree, alpha, beta)
    orb_a = group.orbit(alpha)
    k = len(group.point_stabilizer(alpha).orbit(beta))
    if beta in orb_a:
        return k == len(orb_a) - 1
    return k == len(group.orbit(beta))


def is_futile_structural(graph: OrbitalGraph, group: PermGroup) -> FutilityVerdict:
    """Classify the built graph.

    Futile means a unique component with two or more vertices that is
    either complete (every ordered pair of distinct vertices is an arc) or
    has arc set exactly sources x sinks with the two vertex classes
    disjoint. Every vertex of such a component carries an arc, so counting
    arcs against the class sizes settles both cases. Non-futile verdicts
    carry a deterministic witness.
    """
    if graph.degree != group.degree:
        raise ValueError("graph and group degrees differ")
    big = [c for c in weak_components(graph).cells if len(c) > 1]
    if len(big) == 1:
        comp = big[0]
        members = set(comp)
        comp_arcs = [a for a in graph.arcs if a[0] in members]
        sources = {x for x, _ in comp_arcs}
        sinks = {y for _, y in comp_arcs}
        k = len(comp)
        if len(comp_arcs) == k * (k - 1):
            return FutilityVerdict(True, SHAPE_COMPLETE, comp, None)
        if not (sources & sinks) and len(comp_arcs) == len(sources) * len(sinks):
            return FutilityVerdict(True, SHAPE_BIPARTITE, comp, None)
    witness = find_arc_violation(
        graph, partition_stabilizer_generators(group.orbit_partition())
    )
    if witness is None:
        # the classification above says some stabilizer element breaks the
        # graph, so a generator must; reaching here means a defect
        raise RuntimeError(
            "graph classified non-futile but every orbit-partition stabilizer "
            "generator preserves its arcs"
        )
    return FutilityVerdict(False, SHAPE_NONE, None, witness)


def is_futile_oracle(graph: OrbitalGraph, group: PermGroup) -> bool:
    """Definitional test: does the orbit-partition stabilizer preserve the
    arc set? Arc preservation is closed under products and inverses, so
    checking the stabilizer's generators decides the whole group."""
    if graph.degree != group.degree:
        raise ValueError("graph and group degrees differ")
    gens = partition_stabilizer_generators(group.orbit_partition())
    return find_arc_violation(graph, gens) is None


def futility_by_stabilizer_transitivity(group: PermGroup, alpha: int, beta: int) -> bool:
    """For beta outside alpha's orbit: the graph is futile exactly when
    alpha's stabilizer is transitive on beta's orbit."""
    check_base_pair(group.degree, alpha, beta)
    if beta in group.orbit(alpha):
        raise ValueError("beta lies in the orbit of alpha")
    return group.point_stabilizer(alpha).orbit(beta) == group.orbit(beta)


@dataclass(frozen=True)
class ArcCountBounds:
    threshold: int
    exceeds: bool


def arc_count_bounds(group: PermGroup, alpha: int, beta: int) -> ArcCountBounds:
    """Largest arc count a non-futile graph on these orbits could have.

    Exceeding the threshold forces futility; staying at or below it proves
    nothing, and futile graphs meeting the threshold exactly exist.
    """
    check_base_pair(group.degree, alpha, beta)
    orb_a = group.orbit(alpha)
    n = len(orb_a)
    if beta in orb_a:
        threshold = n * (n - 2)
    else:
        m = len(group.orbit(beta))
        threshold = min(n * (m - 1), m * (n - 1))
    return ArcCountBounds(threshold, arc_count_formula(group, alpha, beta) > threshold)


def transitive_group_futility(group: PermGroup) -> bool:
    """For a transitive group every orbital graph is futile or none is:
    futile exactly when the group is at least 2-transitive."""
    if not group.is_transitive():
        raise ValueError("group is not transitive")
    return group.transitivity_degree() >= 2


def verdict_record(group, alpha, beta, method, graph=None) -> dict:
    """One JSON-ready verdict for a single method.

    Shapes for the fast and oracle methods come from the case split: a
    futile pair with beta in alpha's orbit (equivalently a self-paired
    futile graph) is the complete case, any other futile pair the bipartite
    one. The oracle reports the same witness search as the structural test.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    bounds = arc_count_bounds(group, alpha, beta)
    witness = None
    if method == "fast":
        futile = is_futile_fast(group, alpha, beta)
        arc_count = arc_count_formula(group, alpha, beta)
        if futile:
            shape = SHAPE_COMPLETE if beta in group.orbit(alpha) else SHAPE_BIPARTITE
        else:
            shape = SHAPE_NONE
    else:
        if graph is None:
            graph = build_orbital_graph(group, alpha, beta)
        arc_count = len(graph.arcs)
        if method == "structural":
            v = is_futile_structural(graph, group)
            futile, shape, witness = v.futile, v.shape, v.witness
        else:
            futile = is_futile_oracle(graph, group)
            if futile:
                shape = SHAPE_COMPLETE if is_self_paired(graph) else SHAPE_BIPARTITE
            else:
                shape = SHAPE_NONE
                witness = find_arc_violation(
                    graph, partition_stabilizer_generators(group.orbit_partition())
                )
    return {
        "base_pair": [alpha, beta],
        "futile": futile,
        "shape": shape,
        "method": method,
        "witness": None
        if witness is None
        else {
            "permutation_cycles": witness[0].cycle_string(),
            "violated_arc": list(witness[1]),
        },
        "arc_count": arc_count,
        "thresholds": {"threshold": bounds.threshold, "exceeds": bounds.exceeds},
    }
