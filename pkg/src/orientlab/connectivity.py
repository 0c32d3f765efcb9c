"""Local edge-connectivity via max-flow, cut demand, and well-balancedness.

The scalar connectivity helpers are memoized per graph/orientation value, so
exhaustive deciders that revisit the same pairs never pay for a second flow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .flows import ArcList, dinic
from .multigraph import GraphError, MultiGraph, Orientation


@dataclass(frozen=True)
class FlowResult:
    """A local-connectivity value with a certifying minimum-cut side."""
    value: int
    side: frozenset[str]


@dataclass(frozen=True)
class BalanceViolation:
    """Witness that an orientation halves some local connectivity too far."""
    pair: tuple[str, str]
    value: int
    target: int


@lru_cache(maxsize=4096)
def _undirected_net(g: MultiGraph) -> ArcList:
    net = ArcList(g.vertex_count)
    for (i, j), m in sorted(g._pairs.items()):
        net.add(i, j, m, m)
    return net


@lru_cache(maxsize=4096)
def _directed_net(d: Orientation) -> ArcList:
    net = ArcList(d.graph.vertex_count)
    for (i, j), m in sorted(d.graph._pairs.items()):
        f = d._forward[(i, j)]
        net.add(i, j, f, m - f)
    return net


@lru_cache(maxsize=1 << 18)
def _lam(g: MultiGraph, si: int, ti: int) -> int:
    value, _ = dinic(_undirected_net(g), si, ti)
    return value


@lru_cache(maxsize=1 << 18)
def _lam_dir(d: Orientation, si: int, ti: int) -> int:
    value, _ = dinic(_directed_net(d), si, ti)
    return value


def local_edge_connectivity(g: MultiGraph, s: str, t: str) -> int:
    """Minimum cut separating t from s; equals the maximum number of
    edge-disjoint s-t paths."""
    si, ti = g._resolve(s), g._resolve(t)
    if si == ti:
        raise GraphError(f"source equals sink ({s!r})")
    if si > ti:
        si, ti = ti, si
    return _lam(g, si, ti)


def local_arc_connectivity(d: Orientation, s: str, t: str) -> int:
    """Maximum number of arc-disjoint s-t paths (not symmetric)."""
    si, ti = d.graph._resolve(s), d.graph._resolve(t)
    if si == ti:
        raise GraphError(f"source equals sink ({s!r})")
    return _lam_dir(d, si, ti)


def edge_connectivity(g: MultiGraph, s: str, t: str) -> FlowResult:
    """Local edge-connectivity with the residual-reachable minimum-cut side."""
    si, ti = g._resolve(s), g._resolve(t)
    if si == ti:
        raise GraphError(f"source equals sink ({s!r})")
    value, reach = dinic(_undirected_net(g), si, ti)
    side = frozenset(g.labels[i] for i in reach)
    assert g.cut_size(side) == value, "max-flow/min-cut duality violated"
    assert s in side and t not in side
    return FlowResult(value, side)


def arc_connectivity(d: Orientation, s: str, t: str) -> FlowResult:
    """Local arc-connectivity with the residual-reachable minimum-cut side."""
    si, ti = d.graph._resolve(s), d.graph._resolve(t)
    if si == ti:
        raise GraphError(f"source equals sink ({s!r})")
    value, reach = dinic(_directed_net(d), si, ti)
    side = frozenset(d.graph.labels[i] for i in reach)
    assert d.out_cut(side) == value, "max-flow/min-cut duality violated"
    assert s in side and t not in side
    return FlowResult(value, side)


def _demand_bound(g: MultiGraph, inside: frozenset[int]) -> int:
    deg = g._degrees
    max_in = max(deg[i] for i in inside)
    max_out = max(deg[i] for i in range(g.vertex_count) if i not in inside)
    return 2 * (min(max_in, max_out) // 2)


def cut_demand(g: MultiGraph, X: Iterable[str]) -> int:
    """Largest even-rounded local edge-connectivity across the cut X.

    Zero on the empty and the full vertex set. Pairs are probed in descending
    order of their degree bound, so the scan exits as soon as the structural
    upper bound is attained.
    """
    return _cut_demand(g, X)[0]


def cut_demand_with_pair(g: MultiGraph, X: Iterable[str]):
    """Cut demand plus the lexicographically first pair attaining it."""
    value, _ = _cut_demand(g, X)
    if value == 0:
        return 0, None
    inside = g._resolve_set(X)
    labs = g.labels
    deg = g._degrees
    outs = sorted(set(range(g.vertex_count)) - inside, key=lambda i: labs[i])
    for si in sorted(inside, key=lambda i: labs[i]):
        if 2 * (deg[si] // 2) < value:
            continue
        for ti in outs:
            if 2 * (min(deg[si], deg[ti]) // 2) < value:
                continue
            a, b = (si, ti) if si < ti else (ti, si)
            if 2 * (_lam(g, a, b) // 2) == value:
                return value, (labs[si], labs[ti])
    raise AssertionError("no pair attains the computed cut demand")


def _cut_demand(g: MultiGraph, X: Iterable[str]):
    inside = g._resolve_set(X)
    n = g.vertex_count
    if not inside or len(inside) == n:
        return 0, inside
    labs = g.labels
    deg = g._degrees
    bound = _demand_bound(g, inside)
    if bound == 0:
        return 0, inside
    ins = sorted(inside, key=lambda i: (-deg[i], labs[i]))
    outs = sorted(set(range(n)) - inside, key=lambda i: (-deg[i], labs[i]))
    best = 0
    for si in ins:
        if 2 * (deg[si] // 2) <= best:
            break
        for ti in outs:
            if 2 * (min(deg[si], deg[ti]) // 2) <= best:
                break
            a, b = (si, ti) if si < ti else (ti, si)
            lam = 2 * (_lam(g, a, b) // 2)
            if lam > best:
                best = lam
                if best == bound:
                    return best, inside
    return best, inside


@lru_cache(maxsize=1 << 16)
def _wb_violation(d: Orientation) -> BalanceViolation | None:
    g = d.graph
    labs = g.labels
    n = g.vertex_count
    for si in range(n):
        for ti in range(n):
            if si == ti:
                continue
            a, b = (si, ti) if si < ti else (ti, si)
            target = _lam(g, a, b) // 2
            if target and _lam_dir(d, si, ti) < target:
                return BalanceViolation((labs[si], labs[ti]),
                                        _lam_dir(d, si, ti), target)
    return None


def well_balance_violation(g: MultiGraph, d: Orientation) -> BalanceViolation | None:
    """First ordered pair (lexicographic) whose halved connectivity the
    orientation misses, or None when d is well-balanced."""
    if d.graph != g:
        raise GraphError("orientation does not orient this graph")
    return _wb_violation(d)


def is_well_balanced(g: MultiGraph, d: Orientation) -> bool:
    return well_balance_violation(g, d) is None


def clear_caches() -> None:
    """Drop all memoized flow results (mainly for tests measuring cold runs)."""
    _undirected_net.cache_clear()
    _directed_net.cache_clear()
    _lam.cache_clear()
    _lam_dir.cache_clear()
    _wb_violation.cache_clear()
