"""Integral max-flow kernel (Dinic) with deterministic residual cut sides.

Arcs are stored as interleaved pairs (index ^ 1 is the reverse arc), added in a
fixed order, so flow values, residual capacities and the source-reachable set
are bitwise reproducible across runs and thread counts.
"""

from __future__ import annotations

from collections import deque


class ArcList:
    """Arc-pair builder for :func:`dinic`."""

    __slots__ = ("n", "to", "cap", "adj")

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap_uv: int, cap_vu: int = 0) -> int:
        """Add the arc pair u->v / v->u; returns the index of the forward arc."""
        e = len(self.to)
        self.adj[u].append(e)
        self.to.append(v)
        self.cap.append(cap_uv)
        self.adj[v].append(e + 1)
        self.to.append(u)
        self.cap.append(cap_vu)
        return e


def dinic(net: ArcList, s: int, t: int, cap: list[int] | None = None):
    """Maximum s-t flow on the arc list.

    Returns ``(value, reachable)`` where ``reachable`` is the frozen set of
    nodes reachable from s in the final residual network (the canonical
    minimum-cut side). ``cap`` may override the stored capacities; it is
    mutated in place and holds the residual capacities afterwards.
    """
    if s == t:
        raise ValueError("source equals sink")
    to, adj = net.to, net.adj
    if cap is None:
        cap = list(net.cap)
    n = net.n
    flow = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            lu = level[u] + 1
            for e in adj[u]:
                if cap[e] > 0:
                    v = to[e]
                    if level[v] < 0:
                        level[v] = lu
                        queue.append(v)
        if level[t] < 0:
            return flow, frozenset(v for v in range(n) if level[v] >= 0)
        it = [0] * n
        while True:
            # one augmenting path along level-increasing arcs
            path: list[int] = []
            u = s
            dead = False
            while u != t:
                au = adj[u]
                ai = it[u]
                lu1 = level[u] + 1
                e = -1
                while ai < len(au):
                    e = au[ai]
                    if cap[e] > 0 and level[to[e]] == lu1:
                        break
                    ai += 1
                it[u] = ai
                if ai < len(au):
                    path.append(e)
                    u = to[e]
                else:
                    level[u] = -1
                    if not path:
                        dead = True
                        break
                    back = path.pop()
                    u = to[back ^ 1]
                    it[u] += 1
            if dead:
                break
            aug = min(cap[e] for e in path)
            for e in path:
                cap[e] -= aug
                cap[e ^ 1] += aug
            flow += aug
