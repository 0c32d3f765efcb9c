"""Eulerian orientations and extending a fixed partial orientation to one.

`extend_to_eulerian` reduces the extension question to a single max-flow: the
host graph is oriented canonically, per-vertex imbalances of the combined
orientation are computed, and edge reversals cancel them. When the flow cannot
saturate, the residual-reachable vertex set is exactly a set whose cut is too
small for the imbalance the fixed part forces across it, which is the
certificate the caller needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .flows import ArcList, dinic
from .multigraph import (GraphError, MultiGraph, Orientation, graph_sum,
                         orientation_sum)


@dataclass(frozen=True)
class ExtensionOutcome:
    """Either an orientation completing the fixed part to an eulerian whole,
    or a vertex set certifying that none exists."""
    orientation: Orientation | None
    certificate: frozenset[str] | None

    @property
    def feasible(self) -> bool:
        return self.orientation is not None


def eulerian_orientation(g: MultiGraph) -> Orientation:
    """Orient an even-degree multigraph so in-degree equals out-degree.

    Deterministic: each component is traversed from its smallest vertex with
    neighbors scanned in sorted order.
    """
    for v, d in zip(g.labels, g._degrees):
        if d % 2:
            raise GraphError(f"odd degree at {v!r}")
    n = g.vertex_count
    remaining = [dict(g._adj[i]) for i in range(n)]
    left = list(g._degrees)
    fwd = {key: 0 for key in g._pairs}
    for start in range(n):
        while left[start]:
            # one closed walk from start; splice via the standard stack trick
            stack = [start]
            circuit = []
            while stack:
                u = stack[-1]
                if left[u]:
                    ru = remaining[u]
                    v = min(w for w, m in ru.items() if m)
                    ru[v] -= 1
                    remaining[v][u] -= 1
                    left[u] -= 1
                    left[v] -= 1
                    stack.append(v)
                else:
                    circuit.append(stack.pop())
            circuit.reverse()
            for u, v in zip(circuit, circuit[1:]):
                if u < v:
                    fwd[(u, v)] += 1
    return Orientation._from_split(g, fwd)


def extend_to_eulerian(g: MultiGraph, fixed: Orientation) -> ExtensionOutcome:
    """Orient g so that, together with the fixed orientation, every vertex is
    balanced; otherwise return a certificate set.

    Requires g and the fixed part to share the vertex set and their sum to be
    eulerian.
    """
    f_graph = fixed.graph
    if f_graph.labels != g.labels:
        raise GraphError("graphs must share the vertex set")
    total = graph_sum(g, f_graph)
    if not total.is_eulerian():
        odd = next(v for v in total.labels if total.degree(v) % 2)
        raise GraphError(f"combined graph is not eulerian (odd degree at {odd!r})")

    n = g.vertex_count
    # canonical start: every g-edge oriented from smaller to larger index
    imbalance = [0] * n
    for (i, j), m in g._pairs.items():
        imbalance[i] += m
        imbalance[j] -= m
    for i in range(n):
        imbalance[i] += fixed._out[i] - fixed._in[i]

    src, snk = n, n + 1
    net = ArcList(n + 2)
    pair_arc = {}
    for (i, j), m in sorted(g._pairs.items()):
        pair_arc[(i, j)] = net.add(i, j, m)
    need = 0
    for i in range(n):
        if imbalance[i] > 0:
            net.add(src, i, imbalance[i] // 2)
            need += imbalance[i] // 2
        elif imbalance[i] < 0:
            net.add(i, snk, -imbalance[i] // 2)
    cap = list(net.cap)
    value, reach = dinic(net, src, snk, cap)
    if value < need:
        side = frozenset(g.labels[i] for i in reach if i < n)
        assert not check_extension_condition(g, fixed, side)
        return ExtensionOutcome(None, side)
    fwd = {}
    for key, m in g._pairs.items():
        flipped = m - cap[pair_arc[key]]
        fwd[key] = m - flipped
    oriented = Orientation._from_split(g, fwd)
    assert orientation_sum(oriented, fixed).is_eulerian()
    return ExtensionOutcome(oriented, None)


def check_extension_condition(g: MultiGraph, fixed: Orientation,
                              X: Iterable[str]) -> bool:
    """Single-set test: the cut of g at X carries the net outflow the fixed
    orientation forces across X."""
    if fixed.graph.labels != g.labels:
        raise GraphError("graphs must share the vertex set")
    members = frozenset(X)
    return g.cut_size(members) >= fixed.out_cut(members) - fixed.in_cut(members)
