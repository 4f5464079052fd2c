"""Permutations and permutation groups.

Permutations act on the right: ``(a * b)(i) == b(a(i))``, so ``x^(ab) = (x^a)^b``.
Group order and membership come from a deterministic Schreier-Sims
construction; :func:`closure` is the brute-force oracle used to check it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple


class Perm:
    """A bijection of ``{0, ..., m-1}`` stored as its image table."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True) -> None:
        images = tuple(images)
        if check and sorted(images) != list(range(len(images))):
            raise ValueError("image table is not a bijection")
        self.images = images
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree), check=False)

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Perm(map(other.images.__getitem__, self.images), check=False)

    def __invert__(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(inv, check=False)

    def inverse(self) -> "Perm":
        return ~self

    def __pow__(self, e: int) -> "Perm":
        base = self if e >= 0 else ~self
        e = abs(e)
        result = Perm.identity(self.degree)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> List[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def order(self) -> int:
        from math import lcm

        seen = [False] * self.degree
        result = 1
        for s in range(self.degree):
            if seen[s]:
                continue
            length, x = 0, s
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            result = lcm(result, length)
        return result

    def to_text(self) -> str:
        return "p: " + " ".join(map(str, self.images))

    @classmethod
    def from_text(cls, line: str) -> "Perm":
        head, _, body = line.partition(":")
        if head.strip() != "p":
            raise ValueError(f"not a permutation line: {line!r}")
        return cls(int(t) for t in body.split())


def compose(a: Perm, b: Perm) -> Perm:
    return a * b


def inverse(a: Perm) -> Perm:
    return ~a


class PermGroup:
    """Group generated by ``generators``; BSGS is built on first use.

    The base is chosen by the first-moved-point rule, so the transversals and
    the order computation are reproducible.
    """

    def __init__(self, generators: Iterable[Perm], degree: Optional[int] = None) -> None:
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group with no generators")
            degree = gens[0].degree
        if degree < 1:
            raise ValueError("degree must be positive")
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators: Tuple[Perm, ...] = tuple(gens)
        self._base: Optional[List[int]] = None
        self._strong: List[Tuple[int, ...]] = []
        self._trans: List[Dict[int, Tuple[int, ...]]] = []

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"

    # -- BSGS ------------------------------------------------------------------

    def _ensure_bsgs(self) -> None:
        if self._base is not None:
            return
        n = self.degree
        ident = tuple(range(n))
        strong = [g.images for g in self.generators if not g.is_identity()]
        base: List[int] = []
        for g in strong:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))
        trans: List[Dict[int, Tuple[int, ...]]] = [{} for _ in base]

        def level_gens(i: int) -> List[Tuple[int, ...]]:
            fixed = base[:i]
            return [s for s in strong if all(s[b] == b for b in fixed)]

        def strip(g: Tuple[int, ...], start: int) -> Tuple[Tuple[int, ...], int]:
            for lev in range(start, len(base)):
                t = trans[lev].get(g[base[lev]])
                if t is None:
                    return g, lev
                g = _mul(g, _inv(t))
            return g, len(base)

        i = len(base) - 1
        while i >= 0:
            gens_i = level_gens(i)
            trans[i] = _orbit_transversal(base[i], gens_i, ident)
            restarted = False
            for p, up in list(trans[i].items()):
                for s in gens_i:
                    q = s[p]
                    y = _mul(_mul(up, s), _inv(trans[i][q]))
                    if y == ident:
                        continue
                    h, j = strip(y, i + 1)
                    if j < len(base) or h != ident:
                        if j == len(base):
                            base.append(_first_moved(h))
                            trans.append({})
                        strong.append(h)
                        i = j
                        restarted = True
                        break
                if restarted:
                    break
            if not restarted:
                i -= 1
        self._base = base
        self._strong = strong
        self._trans = trans

    @property
    def base(self) -> List[int]:
        self._ensure_bsgs()
        return list(self._base)

    def basic_orbit_sizes(self) -> List[int]:
        self._ensure_bsgs()
        return [len(t) for t in self._trans]

    def order(self) -> int:
        self._ensure_bsgs()
        result = 1
        for t in self._trans:
            result *= len(t)
        return result

    def contains(self, p: Perm) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        self._ensure_bsgs()
        g = p.images
        for lev, b in enumerate(self._base):
            t = self._trans[lev].get(g[b])
            if t is None:
                return False
            g = _mul(g, _inv(t))
        return all(i == x for i, x in enumerate(g))

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return is_subgroup(self, other)

    def orbit(self, point: int) -> List[int]:
        return sorted(_orbit_transversal(point, [g.images for g in self.generators], tuple(range(self.degree))))

    def orbits(self) -> List[List[int]]:
        seen = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    def to_text(self) -> str:
        lines = [g.to_text() for g in self.generators]
        lines.append(f"order: {self.order()}")
        return "\n".join(lines) + "\n"


def _mul(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(map(b.__getitem__, a))


def _inv(a: Tuple[int, ...]) -> Tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def _first_moved(g: Tuple[int, ...]) -> int:
    for i, x in enumerate(g):
        if i != x:
            return i
    raise ValueError("identity has no moved point")


def _orbit_transversal(point, gens, ident) -> Dict[int, Tuple[int, ...]]:
    trans = {point: ident}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            up = trans[p]
            for s in gens:
                q = s[p]
                if q not in trans:
                    trans[q] = _mul(up, s)
                    nxt.append(q)
        frontier = nxt
    return trans


def group_order(g: PermGroup) -> int:
    return g.order()


def contains(g: PermGroup, p: Perm) -> bool:
    return g.contains(p)


def is_subgroup(h: PermGroup, g: PermGroup) -> bool:
    if h.degree != g.degree:
        raise ValueError(f"degree mismatch: {h.degree} vs {g.degree}")
    return all(g.contains(x) for x in h.generators)


def groups_equal(a: PermGroup, b: PermGroup) -> bool:
    """Equal order and mutual generator containment."""
    return a.order() == b.order() and is_subgroup(a, b) and is_subgroup(b, a)


def closure(generators: Sequence[Perm], degree: Optional[int] = None, limit: int = 10**5) -> set:
    """All elements of the generated group by breadth-first multiplication."""
    if degree is None:
        degree = generators[0].degree
    ident = Perm.identity(degree)
    elements = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in generators:
                y = x * s
                if y not in elements:
                    elements.add(y)
                    nxt.append(y)
                    if len(elements) > limit:
                        raise OverflowError(f"group exceeds {limit} elements")
        frontier = nxt
    return elements


# -- presentations -------------------------------------------------------------

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class Presentation:
    """Generator names and relators.

    A relator is ``"w"`` (meaning ``w = 1``) or ``"w1 = w2"``; words are
    whitespace-separated tokens ``name`` or ``name^e`` read left to right.
    """

    generators: Tuple[str, ...]
    relators: Tuple[str, ...]
    name: str = ""

    def __post_init__(self) -> None:
        for rel in self.relators:
            for side in rel.split("="):
                for name, _ in parse_word(side):
                    if name not in self.generators:
                        raise ValueError(f"relator {rel!r} uses undeclared generator {name!r}")


def parse_word(word: str) -> List[Tuple[str, int]]:
    out = []
    for tok in word.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad token {tok!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
    return out


def evaluate_word(word: str, gens: Mapping[str, Perm], degree: int) -> Perm:
    result = Perm.identity(degree)
    for name, e in parse_word(word):
        if name not in gens:
            raise KeyError(f"unknown generator {name!r}")
        result = result * gens[name] ** e
    return result


def relator_holds(rel: str, gens: Mapping[str, Perm], degree: int) -> bool:
    sides = rel.split("=")
    if len(sides) == 1:
        return evaluate_word(sides[0], gens, degree).is_identity()
    if len(sides) != 2:
        raise ValueError(f"relator {rel!r} has more than one '='")
    return evaluate_word(sides[0], gens, degree) == evaluate_word(sides[1], gens, degree)


def verify_presentation(gens: Mapping[str, Perm], pres: Presentation, expected_order: int) -> bool:
    """Relators all hold on ``gens`` and the generated group has ``expected_order``."""
    missing = set(pres.generators) - set(gens)
    if missing:
        raise KeyError(f"no permutation for generator(s) {sorted(missing)}")
    degree = next(iter(gens.values())).degree
    if not all(relator_holds(r, gens, degree) for r in pres.relators):
        return False
    group = PermGroup([gens[name] for name in pres.generators], degree)
    return group.order() == expected_order


# -- products ------------------------------------------------------------------

def wreath_s2(g: PermGroup, swap: Perm, component: Optional[Iterable[int]] = None) -> PermGroup:
    """``G wr S2`` from ``G`` acting on one component and an involution ``swap``.

    ``component`` defaults to the support of ``G``; ``swap`` must carry it onto
    a disjoint set and fix nothing inside it.
    """
    if swap.degree != g.degree:
        raise ValueError("swap degree differs from group degree")
    if not (swap * swap).is_identity():
        raise ValueError("swap is not an involution")
    if component is None:
        comp = {x for h in g.generators for x in h.support()}
    else:
        comp = set(component)
    other = {swap[x] for x in comp}
    if comp & other:
        raise ValueError("swap does not exchange the component with a disjoint copy")
    for h in g.generators:
        if any(h[x] != x for x in range(g.degree) if x not in comp):
            raise ValueError("group moves points outside the component")
    conj = [swap * h * swap for h in g.generators]
    return PermGroup(list(g.generators) + conj + [swap], g.degree)
