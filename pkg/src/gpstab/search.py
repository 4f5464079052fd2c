"""Automorphism groups of vertex- and edge-coloured graphs.

Individualisation-refinement with backtracking.  The first path down the
search tree fixes a base ``v_0, ..., v_{d-1}``; at each level, every vertex of
the target cell that is not already in the known orbit of ``v_l`` is tested
by searching its subtree for a leaf equivalent to the first leaf.  The
generators found form a strong generating set for that base.

Refinement splits cells by per-colour neighbour counts in a splitter cell and
records a trace; subtree nodes whose trace differs from the first path are
pruned.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .graphs import Graph, as_params, dgp_vertex, make_dgp
from .perms import Perm, PermGroup


class SearchTimeout(RuntimeError):
    pass


class EdgeClass(int, Enum):
    OUTER = 0
    SPOKE = 1
    INNER = 2


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    edge_color: Mapping[Tuple[int, int], int] = field(default_factory=dict)
    vertex_color: Optional[Sequence[int]] = None

    def color_of(self, a: int, b: int) -> int:
        return self.edge_color.get((min(a, b), max(a, b)), 0)


def _as_colored(g) -> ColoredGraph:
    return g if isinstance(g, ColoredGraph) else ColoredGraph(g)


class _Partition:
    """Ordered partition: cells keyed by start position."""

    __slots__ = ("cell_of", "cells")

    def __init__(self, cell_of: List[int], cells: Dict[int, List[int]]) -> None:
        self.cell_of = cell_of
        self.cells = cells

    def copy(self) -> "_Partition":
        return _Partition(self.cell_of[:], {s: c[:] for s, c in self.cells.items()})

    def is_discrete(self) -> bool:
        return len(self.cells) == len(self.cell_of)

    def target_cell(self) -> int:
        """Start of the first largest non-singleton cell."""
        best, best_size = -1, 1
        for s in sorted(self.cells):
            size = len(self.cells[s])
            if size > best_size:
                best, best_size = s, size
        return best

    def individualize(self, x: int) -> int:
        s = self.cell_of[x]
        cell = self.cells[s]
        cell.remove(x)
        self.cells[s] = [x]
        self.cells[s + 1] = cell
        for y in cell:
            self.cell_of[y] = s + 1
        return s


class _Engine:
    def __init__(self, cg: ColoredGraph, deadline: Optional[float]) -> None:
        g = cg.graph
        self.n = g.vertex_count
        self.colors = sorted({cg.color_of(a, b) for a, b in g.edges()}) or [0]
        cidx = {c: i for i, c in enumerate(self.colors)}
        # adj_by_color[c][x]: neighbours of x joined by an edge of colour c
        self.adj_by_color = [[[] for _ in range(self.n)] for _ in self.colors]
        self.edge_color: Dict[Tuple[int, int], int] = {}
        for a, b in g.edges():
            c = cidx[cg.color_of(a, b)]
            self.adj_by_color[c][a].append(b)
            self.adj_by_color[c][b].append(a)
            self.edge_color[(a, b)] = c
        self.vertex_color = list(cg.vertex_color) if cg.vertex_color is not None else [0] * self.n
        self.deadline = deadline
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeout("automorphism search exceeded its deadline")

    def initial(self) -> Tuple[_Partition, Optional[tuple]]:
        groups: Dict[int, List[int]] = {}
        for x in range(self.n):
            groups.setdefault(self.vertex_color[x], []).append(x)
        cell_of = [0] * self.n
        cells = {}
        start = 0
        for c in sorted(groups):
            cells[start] = groups[c]
            for x in groups[c]:
                cell_of[x] = start
            start += len(groups[c])
        part = _Partition(cell_of, cells)
        trace = self.refine(part, sorted(cells))
        return part, trace

    def refine(self, part: _Partition, splitters: List[int], expected: Optional[tuple] = None):
        """Refine to an equitable partition; return the trace or ``None`` on mismatch."""
        queue = list(splitters)
        queued = set(queue)
        trace = []
        pos = 0
        cell_of, cells = part.cell_of, part.cells
        while queue:
            w = queue.pop(0)
            queued.discard(w)
            if len(cells) == self.n:
                break
            members = cells[w]
            for ci, adj in enumerate(self.adj_by_color):
                counts: Dict[int, int] = {}
                for x in members:
                    for y in adj[x]:
                        counts[y] = counts.get(y, 0) + 1
                if not counts:
                    continue
                touched: Dict[int, None] = {}
                for y in counts:
                    touched[cell_of[y]] = None
                for s in sorted(touched):
                    cell = cells[s]
                    if len(cell) == 1:
                        continue
                    by_count: Dict[int, List[int]] = {}
                    for y in cell:
                        by_count.setdefault(counts.get(y, 0), []).append(y)
                    if len(by_count) == 1:
                        continue
                    keys = sorted(by_count)
                    event = (w, ci, s, tuple((key, len(by_count[key])) for key in keys))
                    if expected is not None and (pos >= len(expected) or expected[pos] != event):
                        return None
                    trace.append(event)
                    pos += 1
                    start = s
                    for key in keys:
                        piece = by_count[key]
                        cells[start] = piece
                        for y in piece:
                            cell_of[y] = start
                        if start not in queued:
                            queue.append(start)
                            queued.add(start)
                        start += len(piece)
        if expected is not None and pos != len(expected):
            return None
        return tuple(trace)

    def leaf_labeling(self, part: _Partition) -> List[int]:
        lab = [0] * self.n
        for s, cell in part.cells.items():
            lab[s] = cell[0]
        return lab

    def is_automorphism(self, images: Sequence[int]) -> bool:
        ec = self.edge_color
        for (a, b), c in ec.items():
            x, y = images[a], images[b]
            if x > y:
                x, y = y, x
            if ec.get((x, y)) != c:
                return False
        vc = self.vertex_color
        return all(vc[x] == vc[images[x]] for x in range(self.n))


class _Orbits:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def add_perm(self, images: Sequence[int]) -> None:
        for x, y in enumerate(images):
            rx, ry = self.find(x), self.find(y)
            if rx != ry:
                self.parent[max(rx, ry)] = min(rx, ry)


@dataclass
class SearchResult:
    group: PermGroup
    base: List[int]
    orbit_sizes: List[int]
    nodes: int

    @property
    def order(self) -> int:
        out = 1
        for s in self.orbit_sizes:
            out *= s
        return out


def search_automorphisms(g, timeout: Optional[float] = None) -> SearchResult:
    """Full colour-preserving automorphism group with search statistics.

    ``timeout`` is in seconds; :class:`SearchTimeout` is raised when exceeded.
    """
    cg = _as_colored(g)
    deadline = time.monotonic() + timeout if timeout is not None else None
    eng = _Engine(cg, deadline)
    n = eng.n
    if n == 0:
        return SearchResult(PermGroup([], 1), [], [], 0)

    root, root_trace = eng.initial()
    path_parts = [root]
    path_traces: List[tuple] = [root_trace]
    path_targets: List[int] = []
    path_choice: List[int] = []
    part = root
    while not part.is_discrete():
        eng.tick()
        t = part.target_cell()
        x = min(part.cells[t])
        child = part.copy()
        s = child.individualize(x)
        trace = eng.refine(child, [s])
        path_targets.append(t)
        path_choice.append(x)
        path_traces.append(trace)
        path_parts.append(child)
        part = child
    first_leaf = eng.leaf_labeling(part)
    depth = len(path_choice)

    def equivalent_leaf(node: _Partition, level: int) -> Optional[List[int]]:
        eng.tick()
        if node.is_discrete():
            lab = eng.leaf_labeling(node)
            images = [0] * n
            for p in range(n):
                images[first_leaf[p]] = lab[p]
            return images if eng.is_automorphism(images) else None
        t = path_targets[level]
        for x in sorted(node.cells[t]):
            child = node.copy()
            s = child.individualize(x)
            if eng.refine(child, [s], path_traces[level + 1]) is None:
                continue
            found = equivalent_leaf(child, level + 1)
            if found is not None:
                return found
        return None

    gens: List[List[int]] = []
    orbit_sizes = [1] * depth
    for level in range(depth - 1, -1, -1):
        orbits = _Orbits(n)
        for gimg in gens:
            orbits.add_perm(gimg)
        node = path_parts[level]
        target = path_targets[level]
        base_pt = path_choice[level]
        failed: List[int] = []
        for w in sorted(node.cells[target]):
            rw = orbits.find(w)
            if rw == orbits.find(base_pt) or any(orbits.find(f) == rw for f in failed):
                continue
            child = node.copy()
            s = child.individualize(w)
            found = None
            if eng.refine(child, [s], path_traces[level + 1]) is not None:
                found = equivalent_leaf(child, level + 1)
            if found is None:
                failed.append(w)
            else:
                gens.append(found)
                orbits.add_perm(found)
        root_b = orbits.find(base_pt)
        orbit_sizes[level] = sum(1 for w in node.cells[target] if orbits.find(w) == root_b)

    perms = sorted(Perm(img, check=False) for img in gens)
    return SearchResult(PermGroup(perms, n), list(path_choice), orbit_sizes, eng.nodes)


def automorphism_group(g, timeout: Optional[float] = None) -> PermGroup:
    return search_automorphisms(g, timeout).group


def brute_force_automorphisms(g) -> List[Perm]:
    """Every colour-preserving automorphism, by extending partial bijections.

    A partial map is abandoned only once an assigned pair already breaks an
    edge, non-edge, or colour; no refinement is used.
    """
    cg = _as_colored(g)
    gr = cg.graph
    n = gr.vertex_count
    vc = list(cg.vertex_color) if cg.vertex_color is not None else [0] * n

    def col(a, b):
        return cg.color_of(a, b) if gr.has_edge(a, b) else None

    out: List[Perm] = []
    images = [-1] * n
    used = [False] * n

    def extend(x: int) -> None:
        if x == n:
            out.append(Perm(images))
            return
        for y in range(n):
            if used[y] or vc[y] != vc[x] or gr.degree(y) != gr.degree(x):
                continue
            if all(col(x, z) == col(y, images[z]) for z in range(x)):
                images[x] = y
                used[y] = True
                extend(x + 1)
                used[y] = False
        images[x] = -1

    extend(0)
    return sorted(out)


def naive_automorphisms(g) -> List[Perm]:
    """Filter all ``|V|!`` bijections; only sensible for tiny graphs."""
    cg = _as_colored(g)
    gr = cg.graph
    n = gr.vertex_count
    vc = list(cg.vertex_color) if cg.vertex_color is not None else [0] * n
    edges = {(a, b): cg.color_of(a, b) for a, b in gr.edges()}
    out = []
    for p in permutations(range(n)):
        if any(vc[x] != vc[p[x]] for x in range(n)):
            continue
        ok = True
        for (a, b), c in edges.items():
            x, y = sorted((p[a], p[b]))
            if edges.get((x, y)) != c:
                ok = False
                break
        if ok:
            out.append(Perm(p))
    return sorted(out)


# -- edge classes and the subgroups B, C ---------------------------------------

def edge_class_of(params, edge: Tuple[int, int]) -> EdgeClass:
    n, k = as_params(params)
    a, b = edge
    ka, ia, la = dgp_vertex(n, a)
    kb, ib, lb = dgp_vertex(n, b)
    if la == lb:
        raise ValueError(f"{edge} is not an edge of DGP({n},{k})")
    if ka == kb == "u" and (ia - ib) % n in (1, n - 1):
        return EdgeClass.OUTER
    if ka != kb and ia == ib:
        return EdgeClass.SPOKE
    if ka == kb == "v" and (ia - ib) % n in (k, n - k):
        return EdgeClass.INNER
    raise ValueError(f"{edge} is not an edge of DGP({n},{k})")


def edge_classes(params) -> Dict[EdgeClass, List[Tuple[int, int]]]:
    out: Dict[EdgeClass, List[Tuple[int, int]]] = {c: [] for c in EdgeClass}
    for e in make_dgp(params).edges():
        out[edge_class_of(params, e)].append(e)
    return out


def colored_dgp(params, scheme: str) -> ColoredGraph:
    """DGP with edges coloured by class: ``"spokes"`` (S vs rest) or ``"classes"`` (O/S/I)."""
    g = make_dgp(params)
    colors = {}
    for e in g.edges():
        cls = edge_class_of(params, e)
        if scheme == "spokes":
            colors[e] = 1 if cls is EdgeClass.SPOKE else 0
        elif scheme == "classes":
            colors[e] = int(cls)
        else:
            raise ValueError(f"unknown colouring scheme {scheme!r}")
    return ColoredGraph(g, colors)


def a_group(params, timeout: Optional[float] = None) -> PermGroup:
    return automorphism_group(make_dgp(params), timeout)


def b_group(params, timeout: Optional[float] = None) -> PermGroup:
    """Setwise stabiliser of the spokes in Aut(DGP(n, k))."""
    return automorphism_group(colored_dgp(params, "spokes"), timeout)


def c_group(params, timeout: Optional[float] = None) -> PermGroup:
    """Subgroup of Aut(DGP(n, k)) fixing each of O, I, S setwise."""
    return automorphism_group(colored_dgp(params, "classes"), timeout)


# -- rims and edge orbits ------------------------------------------------------

@dataclass(frozen=True)
class Rim:
    kind: str
    cycle: Tuple[int, ...]


def _class_cycles(g: Graph, edges: Iterable[Tuple[int, int]]) -> List[Tuple[int, ...]]:
    adj: Dict[int, List[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = set()
    cycles = []
    for s in sorted(adj):
        if s in seen:
            continue
        cyc = [s]
        seen.add(s)
        prev, cur = None, s
        while True:
            nxt = [y for y in sorted(adj[cur]) if y != prev]
            y = nxt[0]
            if y == s:
                break
            if y in seen:
                raise ValueError("class edges do not form disjoint cycles")
            cyc.append(y)
            seen.add(y)
            prev, cur = cur, y
        cycles.append(tuple(cyc))
    return cycles


def rims(params) -> List[Rim]:
    classes = edge_classes(params)
    g = make_dgp(params)
    out = [Rim("outer", c) for c in _class_cycles(g, classes[EdgeClass.OUTER])]
    out += [Rim("inner", c) for c in _class_cycles(g, classes[EdgeClass.INNER])]
    return out


def edge_orbits(g: Graph, group: PermGroup) -> List[List[Tuple[int, int]]]:
    edges = g.edges()
    index = {e: i for i, e in enumerate(edges)}
    orbits = _Orbits(len(edges))
    for p in group.generators:
        images = []
        for a, b in edges:
            x, y = p[a], p[b]
            images.append(index[(min(x, y), max(x, y))])
        orbits.add_perm(images)
    groups: Dict[int, List[Tuple[int, int]]] = {}
    for i, e in enumerate(edges):
        groups.setdefault(orbits.find(i), []).append(e)
    return [groups[r] for r in sorted(groups)]


def is_edge_transitive(g: Graph, group: Optional[PermGroup] = None) -> bool:
    if group is None:
        group = automorphism_group(g)
    return len(edge_orbits(g, group)) <= 1
