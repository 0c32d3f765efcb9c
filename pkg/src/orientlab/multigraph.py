"""Exact multigraphs and edge orientations with the cut functionals used everywhere else.

Vertices carry string labels. Parallel edges are stored as one multiplicity per
unordered pair; self-loops are rejected. Instances are immutable after
construction, so they hash, compare and memoize safely. Internally vertices are
dense integer indices in sorted-label order, which makes every "lexicographically
first" contract in this package a plain index comparison.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Malformed graph data, unknown vertices, or mismatched host graphs."""


class BoundExceeded(GraphError):
    """An exhaustive routine was asked to go beyond its configured size bound."""


def _check_label(v) -> str:
    if not isinstance(v, str):
        raise GraphError(f"vertex labels must be strings, got {v!r}")
    return v


class MultiGraph:
    """Undirected multigraph without self-loops.

    ``edges`` may contain ``(a, b)`` or ``(a, b, multiplicity)`` records;
    repeated records for the same pair are merged by summation.
    """

    __slots__ = ("labels", "_index", "_pairs", "_degrees", "_adj", "_edge_count",
                 "_key", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable = ()):
        labels = sorted(_check_label(v) for v in vertices)
        for a, b in zip(labels, labels[1:]):
            if a == b:
                raise GraphError(f"duplicate vertex label {a!r}")
        self.labels: tuple[str, ...] = tuple(labels)
        index = {lab: i for i, lab in enumerate(self.labels)}
        self._index = index
        pairs: dict[tuple[int, int], int] = {}
        for rec in edges:
            a, b = rec[0], rec[1]
            mult = rec[2] if len(rec) > 2 else 1
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise GraphError(f"edge multiplicity must be a positive integer, got {mult!r}")
            try:
                ia, ib = index[a], index[b]
            except KeyError as exc:
                raise GraphError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
            if ia == ib:
                raise GraphError(f"self-loop at {a!r}")
            key = (ia, ib) if ia < ib else (ib, ia)
            pairs[key] = pairs.get(key, 0) + mult
        self._pairs = pairs
        degrees = [0] * len(self.labels)
        adj: list[list[tuple[int, int]]] = [[] for _ in self.labels]
        for (i, j), m in sorted(pairs.items()):
            degrees[i] += m
            degrees[j] += m
            adj[i].append((j, m))
            adj[j].append((i, m))
        for lst in adj:
            lst.sort()
        self._degrees = degrees
        self._adj = adj
        self._edge_count = sum(pairs.values())
        self._key = (self.labels, tuple(sorted(pairs.items())))
        self._hash = hash(self._key)

    # -- basics ---------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        """Total number of edge instances, counting multiplicity."""
        return self._edge_count

    def has_vertex(self, v: str) -> bool:
        return v in self._index

    def _resolve(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def _resolve_set(self, X: Iterable[str]) -> frozenset[int]:
        return frozenset(self._resolve(v) for v in X)

    def degree(self, v: str) -> int:
        return self._degrees[self._resolve(v)]

    def multiplicity(self, a: str, b: str) -> int:
        ia, ib = self._resolve(a), self._resolve(b)
        if ia > ib:
            ia, ib = ib, ia
        return self._pairs.get((ia, ib), 0)

    def edges(self) -> Iterator[tuple[str, str, int]]:
        """Edges as (a, b, multiplicity) with a < b, in sorted order."""
        labs = self.labels
        for (i, j), m in sorted(self._pairs.items()):
            yield (labs[i], labs[j], m)

    def neighbors(self, v: str) -> Iterator[str]:
        labs = self.labels
        for j, _ in self._adj[self._resolve(v)]:
            yield labs[j]

    # -- cut functionals --------------------------------------------------

    def cut_size(self, X: Iterable[str]) -> int:
        """Total multiplicity of edges with exactly one endpoint in X."""
        inside = self._resolve_set(X)
        total = 0
        for (i, j), m in self._pairs.items():
            if (i in inside) != (j in inside):
                total += m
        return total

    def cut_between(self, X: Iterable[str], Y: Iterable[str]) -> int:
        """Total multiplicity of edges with one endpoint in X and one in Y."""
        xs = self._resolve_set(X)
        ys = self._resolve_set(Y)
        if xs & ys:
            overlap = self.labels[min(xs & ys)]
            raise GraphError(f"sets overlap at {overlap!r}")
        total = 0
        for (i, j), m in self._pairs.items():
            if (i in xs and j in ys) or (j in xs and i in ys):
                total += m
        return total

    def induced(self, X: Iterable[str]) -> "MultiGraph":
        inside = self._resolve_set(X)
        labs = self.labels
        edges = [(labs[i], labs[j], m) for (i, j), m in self._pairs.items()
                 if i in inside and j in inside]
        return MultiGraph((labs[i] for i in inside), edges)

    def components(self) -> tuple[frozenset[str], ...]:
        """Vertex sets of connected components, ordered by smallest member."""
        n = len(self.labels)
        seen = [False] * n
        blocks = []
        for start in range(n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            block = [start]
            while queue:
                u = queue.popleft()
                for w, _ in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        block.append(w)
                        queue.append(w)
            blocks.append(frozenset(self.labels[i] for i in block))
        return tuple(blocks)

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def is_eulerian(self) -> bool:
        """True iff every degree is even (connectivity not required)."""
        return all(d % 2 == 0 for d in self._degrees)

    # -- derived graphs ----------------------------------------------------

    def __add__(self, other: "MultiGraph") -> "MultiGraph":
        return graph_sum(self, other)

    def relabeled(self, mapping: Mapping[str, str]) -> "MultiGraph":
        """Rename vertices through a bijective mapping."""
        new = [mapping.get(v, v) for v in self.labels]
        edges = [(mapping.get(a, a), mapping.get(b, b), m) for a, b, m in self.edges()]
        return MultiGraph(new, edges)

    def contracted(self, mapping: Mapping[str, str]) -> "MultiGraph":
        """Merge vertices through mapping; edges inside one class are dropped."""
        targets = sorted({mapping.get(v, v) for v in self.labels})
        edges = []
        for a, b, m in self.edges():
            ta, tb = mapping.get(a, a), mapping.get(b, b)
            if ta != tb:
                edges.append((ta, tb, m))
        return MultiGraph(targets, edges)

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiGraph) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MultiGraph({len(self.labels)} vertices, {self.edge_count} edges)"


def graph_sum(g1: MultiGraph, g2: MultiGraph) -> MultiGraph:
    """Union on a shared vertex set; multiplicities add."""
    if g1.labels != g2.labels:
        raise GraphError("graph sum requires identical vertex sets")
    edges = list(g1.edges()) + list(g2.edges())
    return MultiGraph(g1.labels, edges)


class Orientation:
    """A direction for every edge instance of a host multigraph.

    Stored as a forward count per unordered pair, where "forward" means from
    the smaller to the larger label; the backward count is the remaining
    multiplicity.
    """

    __slots__ = ("graph", "_forward", "_out", "_in", "_key", "_hash")

    def __init__(self, graph: MultiGraph, forward: Mapping[tuple[str, str], int]):
        fwd: dict[tuple[int, int], int] = {}
        for (a, b), c in forward.items():
            ia, ib = graph._resolve(a), graph._resolve(b)
            if ia > ib:
                ia, ib = ib, ia
                c = graph._pairs.get((ia, ib), 0) - c
            if (ia, ib) in fwd:
                raise GraphError(f"pair ({a!r}, {b!r}) appears twice in the forward map")
            fwd[(ia, ib)] = c
        self._init_from_split(graph, fwd, validate=True)

    def _init_from_split(self, graph, fwd, validate):
        if validate:
            for key, m in graph._pairs.items():
                c = fwd.get(key, 0)
                if not 0 <= c <= m:
                    a, b = graph.labels[key[0]], graph.labels[key[1]]
                    raise GraphError(f"orientation of pair ({a!r}, {b!r}) does not "
                                     f"split its multiplicity {m}")
            extra = set(fwd) - set(graph._pairs)
            if extra:
                i, j = min(extra)
                raise GraphError(f"orientation mentions absent edge "
                                 f"({graph.labels[i]!r}, {graph.labels[j]!r})")
        self.graph = graph
        self._forward = {key: fwd.get(key, 0) for key in graph._pairs}
        out = [0] * graph.vertex_count
        inn = [0] * graph.vertex_count
        for (i, j), m in graph._pairs.items():
            f = self._forward[(i, j)]
            out[i] += f
            inn[j] += f
            out[j] += m - f
            inn[i] += m - f
        self._out = out
        self._in = inn
        self._key = (graph._key, tuple(sorted(self._forward.items())))
        self._hash = hash(self._key)

    @classmethod
    def _from_split(cls, graph: MultiGraph, fwd: dict[tuple[int, int], int]) -> "Orientation":
        """Fast constructor from an index-keyed forward split (trusted input)."""
        self = object.__new__(cls)
        self._init_from_split(graph, fwd, validate=False)
        return self

    @classmethod
    def from_arcs(cls, graph: MultiGraph, arcs: Iterable) -> "Orientation":
        """Build from (tail, head, count) records; counts per pair must use up
        the pair's multiplicity exactly."""
        fwd: dict[tuple[int, int], int] = {key: 0 for key in graph._pairs}
        seen: dict[tuple[int, int], int] = {key: 0 for key in graph._pairs}
        for rec in arcs:
            u, v = rec[0], rec[1]
            c = rec[2] if len(rec) > 2 else 1
            if isinstance(c, bool) or not isinstance(c, int) or c < 1:
                raise GraphError(f"arc count must be a positive integer, got {c!r}")
            iu, iv = graph._resolve(u), graph._resolve(v)
            if iu == iv:
                raise GraphError(f"self-loop arc at {u!r}")
            key = (iu, iv) if iu < iv else (iv, iu)
            if key not in fwd:
                raise GraphError(f"arc ({u!r}, {v!r}) has no underlying edge")
            seen[key] += c
            if iu < iv:
                fwd[key] += c
        for key, m in graph._pairs.items():
            if seen[key] != m:
                a, b = graph.labels[key[0]], graph.labels[key[1]]
                raise GraphError(f"pair ({a!r}, {b!r}) has multiplicity {m} but "
                                 f"{seen[key]} oriented copies")
        return cls._from_split(graph, fwd)

    # -- accessors --------------------------------------------------------

    @property
    def underlying(self) -> MultiGraph:
        return self.graph

    def forward_count(self, a: str, b: str) -> int:
        """Number of copies of edge {a, b} oriented from a to b."""
        ia, ib = self.graph._resolve(a), self.graph._resolve(b)
        if ia < ib:
            return self._forward.get((ia, ib), 0)
        m = self.graph._pairs.get((ib, ia), 0)
        return m - self._forward.get((ib, ia), 0)

    def arcs(self) -> list[tuple[str, str, int]]:
        """All arcs as (tail, head, count), count > 0, sorted."""
        labs = self.graph.labels
        out = []
        for (i, j), m in self.graph._pairs.items():
            f = self._forward[(i, j)]
            if f:
                out.append((labs[i], labs[j], f))
            if m - f:
                out.append((labs[j], labs[i], m - f))
        out.sort()
        return out

    def out_degree(self, v: str) -> int:
        return self._out[self.graph._resolve(v)]

    def in_degree(self, v: str) -> int:
        return self._in[self.graph._resolve(v)]

    def out_cut(self, X: Iterable[str]) -> int:
        """Number of arcs leaving X."""
        inside = self.graph._resolve_set(X)
        total = 0
        for (i, j), m in self.graph._pairs.items():
            ini, inj = i in inside, j in inside
            if ini and not inj:
                total += self._forward[(i, j)]
            elif inj and not ini:
                total += m - self._forward[(i, j)]
        return total

    def in_cut(self, X: Iterable[str]) -> int:
        """Number of arcs entering X."""
        inside = self.graph._resolve_set(X)
        total = 0
        for (i, j), m in self.graph._pairs.items():
            ini, inj = i in inside, j in inside
            if ini and not inj:
                total += m - self._forward[(i, j)]
            elif inj and not ini:
                total += self._forward[(i, j)]
        return total

    def is_eulerian(self) -> bool:
        """True iff in-degree equals out-degree at every vertex."""
        return self._out == self._in

    def restricted(self, X: Iterable[str]) -> "Orientation":
        """The induced orientation on the subgraph spanned by X."""
        sub = self.graph.induced(X)
        inside = set(sub.labels)
        labs = self.graph.labels
        fwd = {}
        for (i, j), f in self._forward.items():
            a, b = labs[i], labs[j]
            if a in inside and b in inside:
                fwd[(sub._resolve(a), sub._resolve(b))] = f
        return Orientation._from_split(sub, fwd)

    def __eq__(self, other) -> bool:
        return isinstance(other, Orientation) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Orientation({self.graph!r})"


def orient_all_forward(graph: MultiGraph) -> Orientation:
    """The canonical orientation sending every edge from smaller to larger label."""
    return Orientation._from_split(graph, dict(graph._pairs))


def orientation_sum(d1: Orientation, d2: Orientation) -> Orientation:
    """Orientation of the summed graphs, keeping every arc of both."""
    g = graph_sum(d1.graph, d2.graph)
    fwd = dict(d1._forward)
    for key, f in d2._forward.items():
        fwd[key] = fwd.get(key, 0) + f
    return Orientation._from_split(g, fwd)


def scan_cut_classes(graphs: Iterable[MultiGraph]):
    """Gray-code walk over the cut classes of a shared vertex set.

    Yields ``(inside, cuts)`` where ``inside`` is the set of vertex indices on
    the side containing index 0 and ``cuts[k]`` is the current cut size in the
    k-th graph. Every class {X, V-X} appears exactly once. The yielded set is
    reused between steps; copy it if you keep it.
    """
    graphs = list(graphs)
    first = graphs[0]
    for g in graphs[1:]:
        if g.labels != first.labels:
            raise GraphError("cut scan requires identical vertex sets")
    n = first.vertex_count
    if n == 0:
        return
    adjs = [g._adj for g in graphs]
    inside = {0}
    cuts = [g.cut_size([first.labels[0]]) if n > 1 else 0 for g in graphs]
    if n == 1:
        yield inside, cuts
        return
    yield inside, cuts
    for step in range(1, 1 << (n - 1)):
        # Gray code: flip vertex (lowest set bit of step) + 1
        bit = (step & -step).bit_length() - 1
        v = bit + 1
        entering = v not in inside
        for k, adj in enumerate(adjs):
            delta = 0
            for w, m in adj[v]:
                delta += -m if (w in inside) == entering else m
            cuts[k] += delta
        if entering:
            inside.add(v)
        else:
            inside.remove(v)
        yield inside, cuts
