"""Permutation groups on {0, ..., n-1}.

Groups are given by generators; a deterministic Schreier-Sims pass builds a
base and strong generating set (BSGS) that answers order, membership and
stabilizer queries.  Points are 0-based internally; the text formats use
1-based cycle notation.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Permutation",
    "PermGroup",
    "GroupPair",
    "PermError",
    "NonBijection",
    "PointOutOfRange",
    "DegreeMismatch",
    "Intransitive",
    "group_from_generators",
    "orbit",
    "stabilizer",
    "product_action",
    "exponent_bound",
    "coset_action",
    "parse_cycles",
    "parse_pair_text",
    "format_pair",
    "EXPONENT_ENUMERATION_BOUND",
]

EXPONENT_ENUMERATION_BOUND = 10**6


class PermError(ValueError):
    pass


class NonBijection(PermError):
    pass


class PointOutOfRange(PermError):
    pass


class DegreeMismatch(PermError):
    pass


class Intransitive(PermError):
    """Raised when a transitive action is required.  ``group`` carries the
    offending group so callers can still inspect it."""

    def __init__(self, msg: str, group: "PermGroup" = None):
        super().__init__(msg)
        self.group = group


class Permutation:
    """A bijection of {0..n-1}; ``p(i)`` is ``p.images[i]``.

    Products compose right to left: ``(p * q)(i) == p(q(i))``.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise NonBijection(f"not a bijection: {images}")
        self.images = images
        self._hash = None

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p.images, p._hash = images, None
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < n:
                    raise PointOutOfRange(f"point {a} outside degree {n}")
                if a in seen:
                    raise NonBijection(f"point {a} repeated in cycles")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a] = b
        return cls._trusted(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a = self.images
        return Permutation._trusted(tuple(a[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Permutation.identity(self.degree), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.images else 1

    def to_cycle_string(self) -> str:
        parts = ["(" + " ".join(str(a + 1) for a in c) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "()"

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        return f"Permutation({self.to_cycle_string()})"


class _Level:
    __slots__ = ("base_point", "gens", "transversal")

    def __init__(self, base_point: int):
        self.base_point = base_point
        self.gens: list[Permutation] = []
        # point -> u with u(base_point) == point
        self.transversal: dict[int, Permutation] = {}

    def rebuild(self, n: int) -> None:
        b = self.base_point
        trans = {b: Permutation.identity(n)}
        queue = [b]
        for p in queue:
            u = trans[p]
            for g in self.gens:
                q = g.images[p]
                if q not in trans:
                    trans[q] = g * u
                    queue.append(q)
        self.transversal = trans


class PermGroup:
    """A permutation group with a deterministic BSGS.

    ``base_prefix`` forces the first base points, which makes the strong
    generators at level 1 generate the stabilizer of ``base_prefix[0]``.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], base_prefix: Sequence[int] = ()):
        self.degree = degree
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatch(f"generator of degree {g.degree} in a group of degree {degree}")
        self.generators = tuple(generators)
        self._levels: list[_Level] = []
        self._schreier_sims(list(base_prefix))

    # ---- construction -----------------------------------------------------

    def _schreier_sims(self, base: list[int]) -> None:
        n = self.degree
        gens = [g for g in self.generators if not g.is_identity()]
        for b in base:
            if not 0 <= b < n:
                raise PointOutOfRange(f"base point {b} outside degree {n}")
        for g in gens:
            if all(g.images[b] == b for b in base):
                base.append(next(i for i in range(n) if g.images[i] != i))
        levels = [_Level(b) for b in base]
        for lvl_idx, lvl in enumerate(levels):
            fixed = base[:lvl_idx]
            lvl.gens = [g for g in gens if all(g.images[b] == b for b in fixed)]
            lvl.rebuild(n)
        self._levels = levels
        i = len(levels) - 1
        while i >= 0:
            restart = self._close_level(i)
            i = restart if restart is not None else i - 1

    def _close_level(self, i: int) -> Optional[int]:
        n = self.degree
        lvl = self._levels[i]
        for p in list(lvl.transversal):
            u_p = lvl.transversal[p]
            for s in list(lvl.gens):
                sp = s.images[p]
                sg = lvl.transversal[sp].inverse() * s * u_p
                h, j = self._strip(sg, i + 1)
                if h.is_identity():
                    continue
                if j == len(self._levels):
                    moved = next(x for x in range(n) if h.images[x] != x)
                    self._levels.append(_Level(moved))
                for l in range(i + 1, j + 1):
                    self._levels[l].gens.append(h)
                    self._levels[l].rebuild(n)
                return j
        return None

    def _strip(self, g: Permutation, start: int = 0) -> tuple[Permutation, int]:
        h = g
        for j in range(start, len(self._levels)):
            lvl = self._levels[j]
            beta = h.images[lvl.base_point]
            u = lvl.transversal.get(beta)
            if u is None:
                return h, j
            h = u.inverse() * h
        return h, len(self._levels)

    # ---- queries ------------------------------------------------------------

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(l.base_point for l in self._levels)

    @property
    def strong_generators(self) -> tuple[Permutation, ...]:
        seen: dict[Permutation, None] = {}
        for l in self._levels:
            for g in l.gens:
                seen.setdefault(g)
        return tuple(seen)

    def order(self) -> int:
        return math.prod(len(l.transversal) for l in self._levels)

    def __len__(self) -> int:
        return self.order()

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        h, j = self._strip(g)
        return j == len(self._levels) and h.is_identity()

    def factor(self, g: Permutation) -> Optional[list[Permutation]]:
        """Transversal factors ``[u_1, ..., u_m]`` with g == u_1 * ... * u_m."""
        h, out = g, []
        for lvl in self._levels:
            u = lvl.transversal.get(h.images[lvl.base_point])
            if u is None:
                return None
            out.append(u)
            h = u.inverse() * h
        return out if h.is_identity() else None

    def elements(self) -> Iterator[Permutation]:
        """Every element once, in a deterministic order."""
        ident = Permutation.identity(self.degree)
        trans = [sorted(l.transversal.values()) for l in self._levels]

        def rec(i: int, acc: Permutation):
            if i == len(trans):
                yield acc
                return
            for u in trans[i]:
                yield from rec(i + 1, acc * u)

        yield from rec(0, ident)

    def random_element(self, rng: random.Random) -> Permutation:
        g = Permutation.identity(self.degree)
        for lvl in self._levels:
            keys = sorted(lvl.transversal)
            g = g * lvl.transversal[keys[rng.randrange(len(keys))]]
        return g

    def orbit(self, point: int) -> list[int]:
        if not 0 <= point < self.degree:
            raise PointOutOfRange(f"point {point} outside degree {self.degree}")
        seen = {point}
        queue = [point]
        for p in queue:
            for g in self.generators:
                q = g.images[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def orbits(self) -> list[list[int]]:
        done: set[int] = set()
        out = []
        for p in range(self.degree):
            if p not in done:
                o = self.orbit(p)
                done.update(o)
                out.append(o)
        return out

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def stabilizer(self, point: int) -> "PermGroup":
        if not 0 <= point < self.degree:
            raise PointOutOfRange(f"point {point} outside degree {self.degree}")
        rebased = PermGroup(self.degree, self.generators, base_prefix=(point,))
        lvl1 = rebased._levels[1].gens if len(rebased._levels) > 1 else []
        return PermGroup(self.degree, lvl1)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)

    def exponent(self) -> int:
        return math.lcm(1, *(g.order() for g in self.elements()))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"


def group_from_generators(degree: int, gens: Sequence) -> PermGroup:
    perms = []
    for g in gens:
        p = g if isinstance(g, Permutation) else Permutation(g)
        if p.degree != degree:
            raise DegreeMismatch(f"generator {p} has degree {p.degree}, expected {degree}")
        perms.append(p)
    return PermGroup(degree, perms)


def orbit(group: PermGroup, point: int) -> list[int]:
    return group.orbit(point)


def stabilizer(group: PermGroup, point: int) -> PermGroup:
    return group.stabilizer(point)


@dataclass(frozen=True, eq=False)
class GroupPair:
    """A transitive group together with the stabilizer of a base point."""

    group: PermGroup
    base_point: int = 0
    name: str = ""
    stabilizer: PermGroup = field(init=False)

    def __post_init__(self):
        if not 0 <= self.base_point < max(self.group.degree, 1):
            raise PointOutOfRange(f"base point {self.base_point} outside degree {self.group.degree}")
        if not self.group.is_transitive():
            raise Intransitive(f"group of degree {self.group.degree} is not transitive", self.group)
        object.__setattr__(self, "stabilizer", self.group.stabilizer(self.base_point))

    @property
    def degree(self) -> int:
        return self.group.degree

    def coset_reps(self) -> dict[int, Permutation]:
        """For each point x an element mapping the base point to x."""
        cached = self.__dict__.get("_reps")
        if cached is None:
            n, b = self.degree, self.base_point
            cached = {b: Permutation.identity(n)}
            queue = [b]
            for p in queue:
                for g in self.group.generators:
                    q = g.images[p]
                    if q not in cached:
                        cached[q] = g * cached[p]
                        queue.append(q)
            object.__setattr__(self, "_reps", cached)
        return cached

    def label(self) -> str:
        return self.name or f"pair(degree={self.degree}, order={self.group.order()})"

    def __repr__(self):
        return f"GroupPair({self.label()})"


def product_action(gp1: GroupPair, gp2: GroupPair, twist: bool = False, name: str = "") -> GroupPair:
    """Direct product of two pairs acting on the disjoint union of their point
    sets; with ``twist`` the swap of the two copies is added (wreath with Z_2).

    Without twist the action is intransitive and :class:`Intransitive` is
    raised carrying the product group.
    """
    n1, n2 = gp1.degree, gp2.degree
    if twist and n1 != n2:
        raise DegreeMismatch(f"twisted product needs equal degrees, got {n1} and {n2}")
    n = n1 + n2
    gens = []
    for g in gp1.group.generators:
        gens.append(Permutation._trusted(g.images + tuple(range(n1, n))))
    for g in gp2.group.generators:
        gens.append(Permutation._trusted(tuple(range(n1)) + tuple(n1 + i for i in g.images)))
    if twist:
        gens.append(Permutation._trusted(tuple(range(n1, n)) + tuple(range(n1))))
    group = PermGroup(n, gens)
    return GroupPair(group, gp1.base_point, name=name)


def exponent_bound(group: PermGroup, enumeration_bound: int = EXPONENT_ENUMERATION_BOUND) -> int:
    """A multiple of the group exponent; exact when the order is small enough
    to enumerate, else the group order itself."""
    if group.order() <= enumeration_bound:
        return group.exponent()
    return group.order()


def coset_action(group: PermGroup, subgroup: PermGroup, name: str = "") -> GroupPair:
    """The action of ``group`` on the left cosets of ``subgroup``, as a pair
    whose base point (0) is the trivial coset."""
    if not subgroup.is_subgroup_of(group):
        raise PermError("subgroup generators are not contained in the group")
    sub_orbits = subgroup.orbits()

    def key(g: Permutation) -> tuple:
        # invariant of the coset gH; buckets are split by membership tests
        return tuple(frozenset(g.images[p] for p in o) for o in sub_orbits)

    ident = Permutation.identity(group.degree)
    reps = [ident]
    buckets: dict[tuple, list[int]] = {key(ident): [0]}

    def locate(g: Permutation) -> Optional[int]:
        ginv = g.inverse()
        for idx in buckets.get(key(g), ()):
            if ginv * reps[idx] in subgroup:
                return idx
        return None

    images: list[list[int]] = [[] for _ in group.generators]
    queue = 0
    while queue < len(reps):
        r = reps[queue]
        for gi, s in enumerate(group.generators):
            g = s * r
            idx = locate(g)
            if idx is None:
                idx = len(reps)
                reps.append(g)
                buckets.setdefault(key(g), []).append(idx)
            images[gi].append(idx)
        queue += 1
    m = len(reps)
    if m * subgroup.order() != group.order():
        raise PermError("coset enumeration size mismatch")
    gens = [Permutation(tuple(img)) for img in images]
    return GroupPair(PermGroup(m, gens), 0, name=name)


# ---- text formats -------------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint cycle notation such as ``(1 2)(3 4)``."""
    stripped = text.strip()
    if _CYCLE_RE.sub("", stripped).strip():
        raise PermError(f"cannot parse permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        toks = [t for t in re.split(r"[\s,]+", body.strip()) if t]
        if toks:
            cycles.append([int(t) - 1 for t in toks])
    return Permutation.from_cycles(degree, cycles)


def parse_pair_text(text: str, name: str = "") -> GroupPair:
    """Parse the line-oriented pair format::

        degree 4
        (1 2)
        (1 2 3 4)
        base 1

    Lines ``subgroup <cycles>`` switch to the action on the cosets of the
    subgroup they generate; ``base`` is then ignored (the trivial coset is
    the base point).
    """
    degree = None
    base = 1
    gens, sub_gens = [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split(None, 1)[0]
        if head == "degree":
            degree = int(line.split()[1])
        elif head == "base":
            base = int(line.split()[1])
        elif head == "name":
            name = name or line.split(None, 1)[1].strip()
        else:
            if degree is None:
                raise PermError("generator given before 'degree' line")
            if head == "subgroup":
                sub_gens.append(parse_cycles(line.split(None, 1)[1] if " " in line else "", degree))
            else:
                gens.append(parse_cycles(line, degree))
    if degree is None:
        raise PermError("missing 'degree' line")
    group = PermGroup(degree, gens)
    if sub_gens:
        return coset_action(group, PermGroup(degree, sub_gens), name=name)
    return GroupPair(group, base - 1, name=name)


def format_pair(pair: GroupPair, comment: str = "") -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"degree {pair.degree}")
    lines.extend(g.to_cycle_string() for g in pair.group.generators)
    lines.append(f"base {pair.base_point + 1}")
    return "\n".join(lines) + "\n"
