"""Partition refinement driven by one orbital graph.

The demonstrator behind the futility notion: vertices are separated by
their per-cell out/in degree vectors, repeated to a fixpoint. A futile
graph never splits the orbit partition; a useful one can.
"""

from __future__ import annotations

from dataclasses import dataclass

from .futility import is_futile_fast
from .orbital import OrbitalGraph, build_orbital_graph, enumerate_base_pairs
from .perm import OrderedPartition, PermGroup


@dataclass(frozen=True)
class RefinementTrace:
    base_pair: tuple[int, int]
    input_partition: OrderedPartition
    output_partition: OrderedPartition
    rounds: int
    split_count: int


def refine_by_graph(partition: OrderedPartition, graph: OrbitalGraph) -> RefinementTrace:
    """Split every cell by vertex signature until nothing changes.

    A vertex's signature is the tuple over current cells of (arcs out into
    the cell, arcs in from the cell). Split cells replace their parent in
    place, ordered by ascending signature, so the output order is a
    function of (parent position, signature).
    """
    if partition.degree != graph.degree:
        raise ValueError("partition and graph degrees differ")
    cells = list(partition.cells)
    rounds = 0
    while True:
        rounds += 1
        index = {}
        for k, cell in enumerate(cells):
            for p in cell:
                index[p] = k
        width = len(cells)

        def signature(v):
            out = [0] * width
            inn = [0] * width
            for w in graph.out_adj[v - 1]:
                out[index[w]] += 1
            for w in graph.in_adj[v - 1]:
                inn[index[w]] += 1
            return tuple(zip(out, inn))

        new_cells = []
        changed = False
        for cell in cells:
            buckets: dict[tuple, list[int]] = {}
            for v in cell:
                buckets.setdefault(signature(v), []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(buckets):
                    new_cells.append(tuple(buckets[sig]))
        if not changed:
            break
        cells = new_cells
    output = OrderedPartition(partition.degree, cells)
    return RefinementTrace(
        graph.base_pair,
        partition,
        output,
        rounds,
        len(output.cells) - len(partition.cells),
    )


def select_useful_graphs(group: PermGroup):
    """Enumerate base pairs, drop the futile ones via the fast test, and
    build only the survivors. Returns (pair, graph) tuples."""
    out = []
    for pair in enumerate_base_pairs(group):
        if not is_futile_fast(group, pair[0], pair[1]):
            out.append((pair, build_orbital_graph(group, pair[0], pair[1])))
    return out


def trace_record(trace: RefinementTrace) -> dict:
    """JSON-ready summary; cell counts rather than the cells themselves."""
    return {
        "base_pair": list(trace.base_pair),
        "rounds": trace.rounds,
        "split_count": trace.split_count,
        "cells_before": len(trace.input_partition.cells),
        "cells_after": len(trace.output_partition.cells),
    }
