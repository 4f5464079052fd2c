"""Cycle enumeration, per-class cycle sums and the 8-cycle type table for DGP(n, k)."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import explicit
from .graphs import Graph, as_params, dgp_id, make_dgp, make_gp
from .perms import PermGroup
from .search import EdgeClass, edge_class_of

Cycle = Tuple[int, ...]


def canonical_cycle(cycle: Sequence[int]) -> Cycle:
    """Lexicographically least rotation or reflection."""
    m = len(cycle)
    best = None
    for seq in (list(cycle), list(reversed(cycle))):
        for r in range(m):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    return best


def enumerate_cycles(g: Graph, j: int) -> Iterator[Cycle]:
    """Each j-cycle once, as its canonical vertex sequence.

    Paths are rooted at their least vertex and only the orientation whose
    second vertex is smaller than its last is kept.
    """
    if j < 3:
        raise ValueError("cycle length must be at least 3")
    adj = g.adjacency
    for root in range(g.vertex_count):
        path = [root]
        on_path = {root}

        def extend() -> Iterator[Cycle]:
            last = path[-1]
            if len(path) == j:
                if root in adj[last] and path[1] < path[-1]:
                    yield tuple(path)
                return
            for y in adj[last]:
                if y > root and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    yield from extend()
                    path.pop()
                    on_path.discard(y)

        yield from extend()


def naive_cycles(g: Graph, j: int) -> set:
    """Independent enumerator: every closed simple walk from every start, deduplicated."""
    found = set()
    adj = g.adjacency

    def walk(path: List[int]) -> None:
        if len(path) == j:
            if path[0] in adj[path[-1]]:
                found.add(canonical_cycle(path))
            return
        for y in adj[path[-1]]:
            if y not in path:
                walk(path + [y])

    for s in range(g.vertex_count):
        walk([s])
    return found


def cycle_edges(cycle: Sequence[int]) -> List[Tuple[int, int]]:
    return [(min(a, b), max(a, b)) for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]])]


@dataclass(frozen=True)
class CycleProfile:
    length: int
    r: int
    s: int
    t: int


def profile(params, cycle: Sequence[int]) -> CycleProfile:
    counts = Counter(edge_class_of(params, e) for e in cycle_edges(cycle))
    return CycleProfile(len(cycle), counts[EdgeClass.OUTER], counts[EdgeClass.SPOKE], counts[EdgeClass.INNER])


# -- the 8-cycle type table ----------------------------------------------------

@dataclass(frozen=True)
class CycleType:
    type_id: str
    condition: Callable[[int, int], bool]
    count: Callable[[int, int], int]
    rst: Tuple[int, int, int]
    representative: Callable[[int, int], List[Tuple[str, int, int]]]


def _alt(kinds_idx: Sequence[Tuple[str, int]]) -> List[Tuple[str, int, int]]:
    return [(kind, i, pos % 2) for pos, (kind, i) in enumerate(kinds_idx)]


def _t1(n, k):
    return _alt([("u", i) for i in range(6)] + [("v", 5), ("v", 0)])


def _t2(n, k):
    return _alt([("u", 0), ("u", 1)] + [("v", 1 + i * k) for i in range(5)] + [("v", 0)])


def _t2p(n, k):
    return _alt([("u", 1), ("u", 0)] + [("v", i * k) for i in range(5)] + [("v", 1)])


def _t3(n, k):
    return _alt([("u", i) for i in range(5)] + [("v", 4), ("v", n // 2 + 2), ("v", 0)])


def _t4(n, k):
    return _alt([("u", 0), ("u", 1), ("u", 2)] + [("v", 2 + i * k) for i in range(4)] + [("v", 0)])


def _t4p(n, k):
    return _alt([("u", 2), ("u", 1), ("u", 0)] + [("v", i * k) for i in range(4)] + [("v", 2)])


def _t5(n, k):
    return _alt([("u", i) for i in range(4)] + [("v", 3), ("v", n // 3 + 2), ("v", 2 * n // 3 + 1), ("v", 0)])


def _t5p(n, k):
    return _alt([("u", 3 - i) for i in range(4)] + [("v", 0), ("v", n // 3 + 1), ("v", 2 * n // 3 + 2), ("v", 3)])


def _t6(n, k):
    h = n // 2
    return _alt([("u", 0), ("u", 1), ("v", 1), ("v", h), ("u", h), ("u", h + 1), ("v", h + 1), ("v", 0)])


def _t7(n, k):
    return _alt([("v", i * k) for i in range(8)])


def _t8(n, k):
    return _alt([("u", 0), ("u", 1), ("v", 1), ("v", k + 1), ("u", k + 1), ("u", k), ("v", k), ("v", 0)])


EIGHT_CYCLE_TYPES: Tuple[CycleType, ...] = (
    CycleType("1", lambda n, k: k == 5 or n - k == 5, lambda n, k: 2 * n, (5, 2, 1), _t1),
    CycleType("2", lambda n, k: 5 * k + 1 in (n, 2 * n), lambda n, k: 2 * n, (1, 2, 5), _t2),
    CycleType("2'", lambda n, k: 5 * k - 1 in (n, 2 * n), lambda n, k: 2 * n, (1, 2, 5), _t2p),
    CycleType("3", lambda n, k: 2 * k + 4 == n, lambda n, k: 2 * n, (4, 2, 2), _t3),
    CycleType("4", lambda n, k: 4 * k + 2 in (n, 2 * n), lambda n, k: 2 * n, (2, 2, 4), _t4),
    CycleType("4'", lambda n, k: 4 * k - 2 == n, lambda n, k: 2 * n, (2, 2, 4), _t4p),
    CycleType("5", lambda n, k: 3 * k + 3 == n, lambda n, k: 2 * n, (3, 2, 3), _t5),
    CycleType("5'", lambda n, k: 3 * k - 3 == n, lambda n, k: 2 * n, (3, 2, 3), _t5p),
    CycleType("6", lambda n, k: 2 * k + 2 == n, lambda n, k: n, (2, 4, 2), _t6),
    CycleType("7", lambda n, k: 8 * k == n, lambda n, k: 2 * k, (0, 0, 8), _t7),
    CycleType("7'", lambda n, k: 8 * k == 3 * n, lambda n, k: n // 4, (0, 0, 8), _t7),
    CycleType("8", lambda n, k: n >= 4, lambda n, k: 2 * n, (2, 4, 2), _t8),
)

TYPE_IDS = tuple(t.type_id for t in EIGHT_CYCLE_TYPES)

# pairs that cannot coexist in one graph
PRIMED_PAIRS = (("2", "2'"), ("4", "4'"), ("5", "5'"), ("7", "7'"))

# pairs excluded from the 8-cycle argument for A = B (k >= 3)
TABLE_EXCEPTIONS = frozenset({(8, 3), (10, 3), (12, 5), (13, 5), (24, 5), (26, 5)})


def small_group(params) -> PermGroup:
    """<rho, delta, beta>; two cycles have the same type iff they share an orbit."""
    return PermGroup([explicit.rho(params), explicit.delta(params), explicit.beta(params)])


def _orbit_key(cycle: Sequence[int], elements) -> Cycle:
    return min(canonical_cycle([g[x] for x in cycle]) for g in elements)


def _group_elements(params) -> list:
    rho, delta, beta = explicit.rho(params), explicit.delta(params), explicit.beta(params)
    n = params.n
    out = []
    r = rho ** 0
    for _ in range(n):
        for d in (rho ** 0, delta):
            for b in (rho ** 0, beta):
                out.append(d * b * r)
        r = r * rho
    return out


def representative_cycle(params, ctype: CycleType) -> Optional[Cycle]:
    """The table representative as DGP ids, or ``None`` if it is not an 8-cycle."""
    n, k = as_params(params)
    ids = [dgp_id(n, kind, i, layer) for kind, i, layer in ctype.representative(n, k)]
    if len(set(ids)) != len(ids):
        return None
    g = make_dgp((n, k))
    if not all(g.has_edge(a, b) for a, b in cycle_edges(ids)):
        return None
    return tuple(ids)


@dataclass
class CensusResult:
    n: int
    k: int
    j: int
    R: int
    S: int
    T: int
    cycle_count: int
    by_type: Dict[str, int] = field(default_factory=dict)
    unlisted: int = 0

    def to_csv(self) -> str:
        rows = ["n,k,j,R,S,T,type_id,count"]
        for tid, cnt in self.by_type.items():
            rows.append(f"{self.n},{self.k},{self.j},{self.R},{self.S},{self.T},{tid},{cnt}")
        if self.unlisted:
            rows.append(f"{self.n},{self.k},{self.j},{self.R},{self.S},{self.T},unlisted,{self.unlisted}")
        rows.append(f"{self.n},{self.k},{self.j},{self.R},{self.S},{self.T},total,{self.cycle_count}")
        return "\n".join(rows) + "\n"


def census(params, j: int, classify_types: bool = True) -> CensusResult:
    """Sums of r, s, t over all j-cycles of DGP(n, k); for j = 8 also counts per type."""
    params = as_params(params)
    g = make_dgp(params)
    cycles = list(enumerate_cycles(g, j))
    R = S = T = 0
    for c in cycles:
        p = profile(params, c)
        R, S, T = R + p.r, S + p.s, T + p.t
    result = CensusResult(params.n, params.k, j, R, S, T, len(cycles))
    if j == 8 and classify_types:
        elements = _group_elements(params)
        type_of_orbit: Dict[Cycle, str] = {}
        for ctype in EIGHT_CYCLE_TYPES:
            if not ctype.condition(params.n, params.k):
                continue
            rep = representative_cycle(params, ctype)
            if rep is not None:
                type_of_orbit.setdefault(_orbit_key(rep, elements), ctype.type_id)
        counts: Counter = Counter()
        for c in cycles:
            counts[type_of_orbit.get(_orbit_key(c, elements), "unlisted")] += 1
        result.unlisted = counts.pop("unlisted", 0)
        result.by_type = {tid: counts[tid] for tid in TYPE_IDS if counts[tid]}
    return result


def expected_type_counts(params) -> Dict[str, int]:
    """Per-type counts predicted by the table's conditions and N column."""
    n, k = as_params(params)
    return {t.type_id: t.count(n, k) for t in EIGHT_CYCLE_TYPES if t.condition(n, k)}


def edge_cycle_counts(g: Graph, j: int) -> Counter:
    """Number of j-cycles through each edge."""
    counts: Counter = Counter()
    for c in enumerate_cycles(g, j):
        counts.update(cycle_edges(c))
    return counts


def edge_transitivity_necessary_condition(params, j: int) -> bool:
    """R_j = S_j = T_j; False certifies that the cover is not edge-transitive."""
    res = census(params, j, classify_types=False)
    return res.R == res.S == res.T


def project_to_gp(params, cycle: Sequence[int]) -> Tuple[int, ...]:
    n, _ = as_params(params)
    return tuple(x % (2 * n) for x in cycle)


def lifts_of_gp_cycles(params, j: int) -> Tuple[int, int]:
    """(DGP j-cycles projecting onto a GP j-cycle, GP j-cycles)."""
    params = as_params(params)
    gp_cycles = set(enumerate_cycles(make_gp(params), j))
    lifted = 0
    for c in enumerate_cycles(make_dgp(params), j):
        proj = project_to_gp(params, c)
        if len(set(proj)) == j and canonical_cycle(proj) in gp_cycles:
            lifted += 1
    return lifted, len(gp_cycles)


# -- the ten-term tuple search -------------------------------------------------

VALUES = (-2, -1, 0, 1, 2)
ALL_CONSTRAINTS = frozenset({"sum", "adjacent", "count"})


@dataclass(frozen=True)
class TupleWitness:
    x: Tuple[int, ...]


@dataclass
class TupleSearchResult:
    tuples_checked: int
    witnesses: List[TupleWitness]
    strict: bool

    def summary(self) -> str:
        return f"tuples_checked={self.tuples_checked} witnesses={len(self.witnesses)}"


def tuple_scan(length: int = 10, strict: bool = False,
               constraints=ALL_CONSTRAINTS, chunk_digits: int = 2) -> TupleSearchResult:
    """Scan all of ``VALUES ** length`` for tuples meeting ``constraints``.

    * ``sum``: the entries add to zero;
    * ``adjacent``: ``x_i + x_{i+1} != 0`` for consecutive entries (and for
      ``x_length, x_1`` when ``strict``);
    * ``count``: fewer entries equal to +-1 than entries equal to +-2.
    """
    constraints = frozenset(constraints)
    unknown = constraints - ALL_CONSTRAINTS
    if unknown:
        raise ValueError(f"unknown constraints {sorted(unknown)}")
    head = min(chunk_digits, length)
    tail_len = length - head
    vals = np.array(VALUES, dtype=np.int8)
    if tail_len:
        tail = np.stack(np.meshgrid(*([vals] * tail_len), indexing="ij"), axis=-1).reshape(-1, tail_len)
    else:
        tail = np.zeros((1, 0), dtype=np.int8)
    tail_sum = tail.sum(axis=1, dtype=np.int16)
    tail_adj = np.all(tail[:, :-1] + tail[:, 1:] != 0, axis=1) if tail_len > 1 else np.ones(len(tail), bool)
    tail_ones = np.count_nonzero(np.abs(tail) == 1, axis=1)
    tail_twos = np.count_nonzero(np.abs(tail) == 2, axis=1)

    checked = 0
    witnesses: List[TupleWitness] = []
    for prefix in product(VALUES, repeat=head):
        checked += len(tail)
        mask = np.ones(len(tail), dtype=bool)
        if "sum" in constraints:
            mask &= tail_sum + sum(prefix) == 0
        if "adjacent" in constraints:
            if any(a + b == 0 for a, b in zip(prefix, prefix[1:])):
                continue
            mask &= tail_adj
            if tail_len:
                mask &= tail[:, 0] + prefix[-1] != 0
            if strict:
                last = tail[:, -1] if tail_len else np.full(len(tail), prefix[-1])
                mask &= last + prefix[0] != 0
        if "count" in constraints:
            ones = sum(1 for a in prefix if abs(a) == 1)
            twos = sum(1 for a in prefix if abs(a) == 2)
            mask &= tail_ones + ones < tail_twos + twos
        for row in tail[mask]:
            witnesses.append(TupleWitness(tuple(prefix) + tuple(int(a) for a in row)))
    return TupleSearchResult(checked, witnesses, strict)


def ten_term_search(strict: bool = False, constraints=ALL_CONSTRAINTS) -> List[TupleWitness]:
    return tuple_scan(10, strict, constraints).witnesses


def tuple_scan_bruteforce(length: int, strict: bool = False, constraints=ALL_CONSTRAINTS) -> List[Tuple[int, ...]]:
    """Pure-Python reference for :func:`tuple_scan`."""
    out = []
    for x in product(VALUES, repeat=length):
        if "sum" in constraints and sum(x) != 0:
            continue
        if "adjacent" in constraints:
            pairs = list(zip(x, x[1:])) + ([(x[-1], x[0])] if strict else [])
            if any(a + b == 0 for a, b in pairs):
                continue
        if "count" in constraints:
            if sum(1 for a in x if abs(a) == 1) >= sum(1 for a in x if abs(a) == 2):
                continue
        out.append(x)
    return out
