"""Generalized Petersen graphs, canonical double covers and structural predicates.

Vertex ids follow a fixed arithmetic layout so that the named permutations in
:mod:`gpstab.explicit` are plain index arithmetic:

* ``GP(n, k)``: ``u_i -> i`` and ``v_i -> n + i``.
* ``DGP(n, k)``: ``(x, layer) -> id(x) + 2n * layer``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple


class ParameterError(ValueError):
    """Raised when (n, k) or a derived precondition is violated."""


class Kind(str, Enum):
    OUTER = "u"
    INNER = "v"


@dataclass(frozen=True)
class GpVertex:
    kind: Kind
    index: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"


@dataclass(frozen=True)
class DcVertex:
    base: Hashable
    layer: int

    def __post_init__(self) -> None:
        if self.layer not in (0, 1):
            raise ValueError(f"layer must be 0 or 1, got {self.layer}")

    def __str__(self) -> str:
        return f"{self.base}|{self.layer}"


def u(n: int, i: int) -> GpVertex:
    return GpVertex(Kind.OUTER, i % n)


def v(n: int, i: int) -> GpVertex:
    return GpVertex(Kind.INNER, i % n)


@dataclass(frozen=True)
class GpParams:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ParameterError(f"n must be at least 3, got n={self.n}")
        if self.k < 1:
            raise ParameterError(f"k must be at least 1, got k={self.k}")
        if 2 * self.k >= self.n:
            raise ParameterError(f"k must satisfy k < n/2, got (n,k)=({self.n},{self.k})")

    def __iter__(self):
        return iter((self.n, self.k))

    def __str__(self) -> str:
        return f"({self.n},{self.k})"


def as_params(params) -> GpParams:
    if isinstance(params, GpParams):
        return params
    n, k = params
    return GpParams(int(n), int(k))


class Graph:
    """Immutable simple undirected graph on ``0..vertex_count-1``.

    ``labels`` optionally names each vertex; ``id_of`` is its inverse.
    """

    __slots__ = ("vertex_count", "adjacency", "labels", "_id_of", "_edge_set")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[Sequence[Hashable]] = None,
    ) -> None:
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        nbrs: List[set] = [set() for _ in range(vertex_count)]
        for a, b in edges:
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise ValueError(f"edge ({a},{b}) out of range")
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if b in nbrs[a]:
                raise ValueError(f"duplicate edge ({a},{b})")
            nbrs[a].add(b)
            nbrs[b].add(a)
        self.vertex_count = vertex_count
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._edge_set = frozenset((min(a, b), max(a, b)) for a in range(vertex_count) for b in nbrs[a])
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != vertex_count or len(set(labels)) != vertex_count:
                raise ValueError("labels must be a bijection onto the vertex ids")
            self._id_of: Optional[Dict[Hashable, int]] = {lab: i for i, lab in enumerate(labels)}
        else:
            self._id_of = None
        self.labels = labels

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"

    @property
    def edge_count(self) -> int:
        return len(self._edge_set)

    def edges(self) -> List[Tuple[int, int]]:
        """Sorted list of edges ``(a, b)`` with ``a < b``."""
        return sorted(self._edge_set)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self._edge_set

    def neighbors(self, x: int) -> Tuple[int, ...]:
        return self.adjacency[x]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def id_of(self, label: Hashable) -> int:
        if self._id_of is None:
            raise KeyError("graph has no labels")
        return self._id_of[label]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled to ``0..len-1`` in sorted order."""
        vs = sorted(set(vertices))
        pos = {x: i for i, x in enumerate(vs)}
        edges = [(pos[a], pos[b]) for a, b in self._edge_set if a in pos and b in pos]
        labels = [self.labels[x] for x in vs] if self.labels is not None else None
        return Graph(len(vs), edges, labels)

    def to_text(self) -> str:
        """Serialize as ``p <V> <E>`` header, optional label comments, then edges."""
        lines = [f"p {self.vertex_count} {self.edge_count}"]
        if self.labels is not None:
            lines += [f"# {i} {lab}" for i, lab in enumerate(self.labels)]
        lines += [f"{a} {b}" for a, b in self.edges()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        count = None
        edges = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("p "):
                _, vc, ec = line.split()
                count, expected = int(vc), int(ec)
                continue
            a, b = line.split()
            edges.append((int(a), int(b)))
        if count is None:
            raise ValueError("missing 'p' header line")
        g = cls(count, edges)
        if g.edge_count != expected:
            raise ValueError(f"header says {expected} edges, found {g.edge_count}")
        return g


def gp_labels(n: int) -> List[GpVertex]:
    return [u(n, i) for i in range(n)] + [v(n, i) for i in range(n)]


def make_gp(params) -> Graph:
    """Build GP(n, k): outer cycle, spokes and inner edges ``v_i v_{i+k}``."""
    n, k = as_params(params)
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
        edges.append((n + i, n + (i + k) % n))
    return Graph(2 * n, edges, gp_labels(n))


def double_cover(g: Graph) -> Graph:
    """Canonical double cover ``g x K2``; vertex ``(x, layer)`` gets id ``x + |V|*layer``."""
    m = g.vertex_count
    edges = []
    for a, b in g.edges():
        edges.append((a, b + m))
        edges.append((a + m, b))
    base = g.labels if g.labels is not None else list(range(m))
    labels = [DcVertex(x, layer) for layer in (0, 1) for x in base]
    return Graph(2 * m, edges, labels)


def make_dgp(params) -> Graph:
    return double_cover(make_gp(params))


def dgp_id(n: int, kind: str, i: int, layer: int) -> int:
    """Integer id of ``(u_i, layer)`` or ``(v_i, layer)`` in DGP(n, k)."""
    base = i % n if kind == "u" else n + i % n
    return base + 2 * n * (layer % 2)


def dgp_vertex(n: int, x: int) -> Tuple[str, int, int]:
    """Inverse of :func:`dgp_id`: ``(kind, index, layer)``."""
    layer, rest = divmod(x, 2 * n)
    if rest < n:
        return "u", rest, layer
    return "v", rest - n, layer


def two_coloring(g: Graph) -> Optional[List[int]]:
    """Proper 2-coloring by BFS, or ``None`` if an odd cycle exists."""
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def components(g: Graph) -> List[List[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_vertex_determining(g: Graph) -> bool:
    """True iff no two vertices have the same neighbourhood."""
    return len(set(g.adjacency)) == g.vertex_count


def apply_vertex_map(source: Graph, target: Graph, mapping: Mapping[int, int] | Sequence[int]) -> bool:
    """Check whether ``mapping`` (source id -> target id) is an isomorphism."""
    if isinstance(mapping, Mapping):
        images = [mapping.get(x) for x in range(source.vertex_count)]
    else:
        images = list(mapping)
    if len(images) != source.vertex_count or any(y is None for y in images):
        raise ValueError("vertex map is not total on the source")
    if source.vertex_count != target.vertex_count or sorted(images) != list(range(target.vertex_count)):
        raise ValueError("vertex map is not a bijection onto the target")
    if source.edge_count != target.edge_count:
        return False
    return all(target.has_edge(images[a], images[b]) for a, b in source.edges())


def odd_cover_map(params) -> List[int]:
    """Isomorphism DGP(n,k) -> GP(2n, k') for odd n, as an image table.

    ``k' = k`` for odd k and ``k' = n - k`` for even k; ids of the target use
    the GP layout for ``2n``.
    """
    n, k = as_params(params)
    if n % 2 == 0:
        raise ParameterError(f"odd-n cover map needs n odd, got n={n}")
    m = 2 * n
    images = [0] * (4 * n)
    for i in range(n):
        for layer in (0, 1):
            # parity of i decides which half the layer lands in
            if k % 2 == 1:
                shift = n * ((i + layer) % 2)
                ui = (i + shift) % m
                vi = (i + n - shift) % m
            else:
                ui = (n * (2 - (i + layer) % 2) - i) % m
                vi = (n * (1 + (i + layer) % 2) - i) % m
            images[dgp_id(n, "u", i, layer)] = ui
            images[dgp_id(n, "v", i, layer)] = m + vi
    return images


def odd_cover_target(params) -> GpParams:
    n, k = as_params(params)
    return GpParams(2 * n, k if k % 2 else n - k)


@dataclass(frozen=True)
class CoverSplit:
    part1: Tuple[int, ...]
    part2: Tuple[int, ...]
    map1: Dict[int, int]
    map2: Dict[int, int]
    crossing_edges: int


def split_cover(params) -> CoverSplit:
    """Split DGP(n, k), n even and k odd, into two copies of GP(n, k).

    Part 1 holds ``(u_i, j)`` with ``i + j`` even and ``(v_s, t)`` with ``s + t`` odd.
    Both maps send ``(u_i, j) -> u_i`` and ``(v_s, t) -> v_s``.
    """
    n, k = as_params(params)
    if n % 2 or not k % 2:
        raise ParameterError(f"split_cover needs n even and k odd, got ({n},{k})")
    g = make_dgp((n, k))
    part1, part2 = [], []
    for x in range(4 * n):
        kind, i, layer = dgp_vertex(n, x)
        in_first = (i + layer) % 2 == (0 if kind == "u" else 1)
        (part1 if in_first else part2).append(x)
    s1 = set(part1)
    crossing = sum(1 for a, b in g.edges() if (a in s1) != (b in s1))

    def to_base(x: int) -> int:
        return x % (2 * n)

    return CoverSplit(
        tuple(part1), tuple(part2),
        {x: to_base(x) for x in part1}, {x: to_base(x) for x in part2},
        crossing,
    )
