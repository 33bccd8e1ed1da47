"""Brute-force reference computations and hypothesis strategies.

The brute functions enumerate group elements outright, so they stay
independent of the stabilizer-chain machinery they are used to check.
"""

from math import factorial

import hypothesis.strategies as st

from orbgraph.perm import PermGroup, Permutation, parse_cycles, partition_stabilizer_generators


def group_from(degree, *cycles) -> PermGroup:
    return PermGroup(degree, [parse_cycles(c, degree) for c in cycles])


def all_elements(group) -> set[Permutation]:
    """Every element, by closure of the generators under products."""
    ident = Permutation.identity(group.degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in group.generators:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def brute_orbit(elements, point) -> tuple[int, ...]:
    return tuple(sorted({e.apply(point) for e in elements}))


def brute_stabilizer(elements, point) -> set[Permutation]:
    return {e for e in elements if e.apply(point) == point}


def brute_arcs(elements, alpha, beta) -> tuple[tuple[int, int], ...]:
    return tuple(sorted({(e.apply(alpha), e.apply(beta)) for e in elements}))


def brute_futile(graph, group) -> bool:
    """Definitional check over every element of the orbit-partition
    stabilizer, not just its generators."""
    stab = PermGroup(
        graph.degree, partition_stabilizer_generators(group.orbit_partition())
    )
    for e in all_elements(stab):
        for x, y in graph.arcs:
            if (e.apply(x), e.apply(y)) not in graph.arc_set:
                return False
    return True


def brute_transitivity_degree(elements, degree) -> int:
    """Largest k with a single orbit on k-tuples of distinct points."""
    k = 0
    while k < degree:
        base = tuple(range(1, k + 2))
        orbit = {tuple(e.apply(p) for p in base) for e in elements}
        if len(orbit) != factorial(degree) // factorial(degree - k - 1):
            break
        k += 1
    return k


def permutations_st(min_degree=1, max_degree=8):
    return st.integers(min_degree, max_degree).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(Permutation)


def groups_st(min_degree=2, max_degree=7, max_generators=3):
    def build(degree):
        one = st.permutations(list(range(1, degree + 1))).map(Permutation)
        return st.lists(one, min_size=1, max_size=max_generators).map(
            lambda gens: PermGroup(degree, gens)
        )

    return st.integers(min_degree, max_degree).flatmap(build)


def base_pairs_of(group):
    n = group.degree
    return [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
