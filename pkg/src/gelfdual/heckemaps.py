"""Maps between pairs, Hecke equivalences and equivalence diagrams.

A map of pairs (H, G) -> (H', G') is given by the images of the generators
of G.  It is a homomorphism exactly when the subgroup of G x G' generated
by the pairs (g_i, image_i) has order |G| (graph test).  The induced map on
X = G/H is computed by walking the orbit of (x0, x0') under that graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .perm import GroupPair, PermGroup, Permutation
from .scheme import build_scheme
from .spectral import build_triple
from .triples import find_isomorphism

__all__ = [
    "PairMap",
    "MapReport",
    "BudgetExhausted",
    "verify_map",
    "classify_map",
    "identity_map",
    "conjugation_map",
    "compose",
    "HeckeGraph",
    "search_equivalences",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**6

NOT_HOM, HOM, HECKE, STRONG = "not_hom", "hom", "hecke", "strong"


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class PairMap:
    source: GroupPair
    target: GroupPair
    images: tuple[Permutation, ...]

    def __post_init__(self):
        if len(self.images) != len(self.source.group.generators):
            raise ValueError("one image per source generator is required")

    def graph(self) -> PermGroup:
        n, m = self.source.degree, self.target.degree
        gens = [Permutation(g.images + tuple(n + p for p in im.images))
                for g, im in zip(self.source.group.generators, self.images)]
        return PermGroup(n + m, gens)

    def point_map(self) -> Optional[dict[int, int]]:
        """x -> x' induced on the point sets, or None if it is not well defined."""
        x0, y0 = self.source.base_point, self.target.base_point
        f = {x0: y0}
        queue = [x0]
        pairs = list(zip(self.source.group.generators, self.images))
        for x in queue:
            for g, im in pairs:
                a, b = g(x), im(f[x])
                if a in f:
                    if f[a] != b:
                        return None
                else:
                    f[a] = b
                    queue.append(a)
        return f

    def apply(self, g: Permutation) -> Permutation:
        """phi(g) for a map that is a bijection on points."""
        f = self.point_map()
        if f is None or len(set(f.values())) != self.target.degree:
            raise ValueError("apply needs a map inducing a bijection on points")
        finv = {v: k for k, v in f.items()}
        return Permutation([f[g(finv[y])] for y in range(self.target.degree)])


@dataclass(frozen=True)
class MapReport:
    classification: str
    reason: str = ""


def classify_map(m: PairMap) -> MapReport:
    G, Gp = m.source.group, m.target.group
    if any(im.degree != Gp.degree or im not in Gp for im in m.images):
        return MapReport(NOT_HOM, "an image is not in the target group")
    if m.graph().order() != G.order():
        return MapReport(NOT_HOM, "graph subgroup is larger than the source group")
    f = m.point_map()
    if f is None:
        return MapReport(HOM, "the stabilizer is not mapped into the target stabilizer")
    src = build_scheme(m.source)
    tgt = build_scheme(m.target)
    images = {tgt.orbital_of(m.target.base_point, f[o[0]]) for o in src.suborbits}
    consistent = all(tgt.orbital_of(m.target.base_point, f[p]) == tgt.orbital_of(m.target.base_point, f[o[0]])
                     for o in src.suborbits for p in o)
    if not consistent or len(images) != src.rank or tgt.rank != src.rank:
        return MapReport(HOM, "no bijection on double cosets")
    if len(set(f.values())) == m.target.degree == m.source.degree:
        return MapReport(STRONG)
    return MapReport(HECKE, "bijection on double cosets but not on points")


def verify_map(m: PairMap) -> str:
    """One of not_hom, hom, hecke, strong.

    ``strong`` means a bijection on double cosets and on points.  For
    Gelfand pairs a Hecke map is expected to be strong, so ``hecke`` is
    returned only as a counterexample to that expectation.
    """
    return classify_map(m).classification


def identity_map(pair: GroupPair) -> PairMap:
    return PairMap(pair, pair, tuple(pair.group.generators))


def conjugation_map(source: GroupPair, target: GroupPair, f: Sequence[int]) -> PairMap:
    """g -> f g f^-1 for a bijection f of the point sets."""
    fp = Permutation(f)
    finv = fp.inverse()
    return PairMap(source, target, tuple(fp * g * finv for g in source.group.generators))


def compose(m1: PairMap, m2: PairMap) -> PairMap:
    """m2 after m1 (m1.target must be m2.source)."""
    return PairMap(m1.source, m2.target, tuple(m2.apply(im) for im in m1.images))


# ---- search -------------------------------------------------------------------------------

@dataclass
class HeckeGraph:
    nodes: list[GroupPair]
    edges: list[tuple[int, int, PairMap]] = field(default_factory=list)
    exhausted: list[tuple[int, int]] = field(default_factory=list)

    def has_edge(self, i: int, j: int) -> bool:
        return any(a == i and b == j for a, b, _ in self.edges)

    def is_connected(self) -> bool:
        n = len(self.nodes)
        if n == 0:
            return True
        adj = {i: set() for i in range(n)}
        for a, b, _ in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen, stack = {0}, [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    def terminal_nodes(self) -> list[int]:
        """Nodes with no outgoing edge to another node."""
        return [i for i in range(len(self.nodes)) if not any(a == i and b != i for a, b, _ in self.edges)]

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Edges between distinct nodes not implied by a two-step path."""
        direct = {(a, b) for a, b, _ in self.edges if a != b}
        return sorted((a, b) for a, b in direct
                      if not any((a, c) in direct and (c, b) in direct for c in range(len(self.nodes))
                                 if c not in (a, b)))

    def lines(self) -> list[str]:
        out = []
        for a, b, m in self.edges:
            imgs = ", ".join(im.to_cycle_string() for im in m.images)
            out.append(f"{self.nodes[a].label()} -> {self.nodes[b].label()} : {imgs}")
        for a, b in self.exhausted:
            out.append(f"{self.nodes[a].label()} -> {self.nodes[b].label()} : budget exhausted")
        out.append("connected " + ("yes" if self.is_connected() else "no"))
        out.append("terminal " + "; ".join(self.nodes[i].label() for i in self.terminal_nodes()))
        out.append("hasse " + "; ".join(f"{self.nodes[a].label()} -> {self.nodes[b].label()}"
                                        for a, b in self.hasse_edges()))
        return out


def _search_edge(src: GroupPair, tgt: GroupPair, budget: int) -> tuple[Optional[PairMap], int]:
    """A strong equivalence src -> tgt, as conjugation by a point bijection
    fixing the base points; returns (map or None, nodes used)."""
    n = src.degree
    if tgt.degree != n or src.group.order() > tgt.group.order() or tgt.group.order() % src.group.order():
        return None, 0
    x0, y0 = src.base_point, tgt.base_point
    src_sizes = sorted(map(len, build_scheme(src).suborbits))
    if src_sizes != sorted(map(len, build_scheme(tgt).suborbits)):
        return None, 0
    xs = [p for p in range(n) if p != x0]
    ys = [p for p in range(n) if p != y0]
    gens = src.group.generators
    used = 0
    for perm in itertools.permutations(ys):
        used += 1
        if used > budget:
            raise BudgetExhausted(f"more than {budget} candidate bijections")
        f = [0] * n
        f[x0] = y0
        for a, b in zip(xs, perm):
            f[a] = b
        fp = Permutation._trusted(tuple(f))
        finv = fp.inverse()
        if all(fp * g * finv in tgt.group for g in gens):
            m = conjugation_map(src, tgt, f)
            if verify_map(m) == STRONG:
                return m, used
    return None, used


def search_equivalences(pairs: Sequence[GroupPair], budget: int = DEFAULT_BUDGET) -> HeckeGraph:
    """Directed graph of strong Hecke equivalences among ``pairs``.

    All pairs must be Gelfand with isomorphic triples.  Every ordered pair
    of nodes (including a node with itself) is searched; an edge search that
    exceeds ``budget`` candidates is recorded in ``exhausted``.
    """
    triples = []
    for p in pairs:
        s = build_scheme(p)
        if not s.is_gelfand():
            raise ValueError(f"{p.label()} is not a Gelfand pair")
        triples.append(build_triple(s))
    for t in triples[1:]:
        if t.rank != triples[0].rank or find_isomorphism(triples[0], t) is None:
            raise ValueError("the pairs do not have isomorphic triples")
    graph = HeckeGraph(list(pairs))
    for i, a in enumerate(pairs):
        for j, b in enumerate(pairs):
            if i == j:
                graph.edges.append((i, i, identity_map(a)))
                continue
            try:
                m, _ = _search_edge(a, b, budget)
            except BudgetExhausted:
                graph.exhausted.append((i, j))
                continue
            if m is not None:
                graph.edges.append((i, j, m))
    return graph
