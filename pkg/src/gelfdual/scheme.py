"""Orbital schemes of transitive permutation groups.

For a pair (H, G) acting on X with base point x0, the orbitals are the
G-orbits on X x X.  Each one meets the slice {x0} x X in a suborbit (an
H-orbit), so orbitals are indexed by suborbits.  Index 0 is the diagonal;
the others are sorted by (suborbit size, smallest point).

``intersection[i][j][s]`` counts the z with (x, z) in O_i and (z, y) in O_j
for a fixed (x, y) in O_s.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .perm import GroupPair, Permutation

__all__ = [
    "OrbitalScheme",
    "SchemeError",
    "AntiautomorphismCertificate",
    "build_scheme",
    "intersection_numbers",
    "is_gelfand",
    "antiautomorphism_certificate",
    "burnside_rank",
    "parse_scheme_dump",
]

BURNSIDE_ENUMERATION_BOUND = 10**5


class SchemeError(ValueError):
    pass


class OrbitalScheme:
    """The orbitals of a transitive pair with their intersection numbers.

    Indices are 0-based; text output is 1-based.
    """

    def __init__(self, pair: GroupPair):
        self.pair = pair
        n, x0 = pair.degree, pair.base_point
        orbits = pair.stabilizer.orbits() if n else []
        rest = sorted((o for o in orbits if o != [x0]), key=lambda o: (len(o), o[0], o))
        self.suborbits: tuple[tuple[int, ...], ...] = tuple(tuple(o) for o in [[x0]] + rest) if n else ()
        cls = [0] * n
        for idx, o in enumerate(self.suborbits):
            for p in o:
                cls[p] = idx
        self._cls = tuple(cls)
        reps = pair.coset_reps()
        self._rep_inv = tuple(reps[x].inverse().images for x in range(n))
        self.mu = tuple(self.orbital_of(o[0], x0) for o in self.suborbits)
        self.intersection = self._intersections()
        self._audit()

    # ---- basic data -------------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.suborbits)

    @property
    def x_size(self) -> int:
        return self.pair.degree

    @property
    def suborbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.suborbits)

    @property
    def orbital_sizes(self) -> tuple[int, ...]:
        """|O_i| = |X| |o_i|, the vector A."""
        return tuple(self.x_size * len(o) for o in self.suborbits)

    def orbital_of(self, x: int, y: int) -> int:
        return self._cls[self._rep_inv[x][y]]

    def L(self, s: int) -> list[list[int]]:
        """Right multiplication by X_s in the X basis: (L_s)[t][j] = a[s][j][t]."""
        a, r = self.intersection, self.rank
        return [[a[s][j][t] for j in range(r)] for t in range(r)]

    def orbital_matrix(self, s: int) -> list[list[int]]:
        n = self.x_size
        return [[1 if self.orbital_of(x, y) == s else 0 for y in range(n)] for x in range(n)]

    # ---- intersection numbers ----------------------------------------------

    def _count(self, x: int, y: int) -> list[list[int]]:
        r = self.rank
        counts = [[0] * r for _ in range(r)]
        for z in range(self.x_size):
            counts[self.orbital_of(x, z)][self.orbital_of(z, y)] += 1
        return counts

    def _intersections(self):
        r, x0 = self.rank, self.pair.base_point
        a = [[[0] * r for _ in range(r)] for _ in range(r)]
        for s, o in enumerate(self.suborbits):
            counts = self._count(x0, o[0])
            for i in range(r):
                for j in range(r):
                    a[i][j][s] = counts[i][j]
        return tuple(tuple(tuple(row) for row in m) for m in a)

    def _audit(self) -> None:
        """Recount each orbital from two other representatives (x, y)."""
        reps = self.pair.coset_reps()
        rng = random.Random(self.x_size)
        for s, o in enumerate(self.suborbits):
            for _ in range(2):
                u = reps[rng.randrange(self.x_size)]
                y = o[rng.randrange(len(o))]
                x, y = u(self.pair.base_point), u(y)
                counts = self._count(x, y)
                for i in range(self.rank):
                    for j in range(self.rank):
                        if counts[i][j] != self.intersection[i][j][s]:
                            raise SchemeError(
                                f"intersection number a[{i+1}][{j+1}][{s+1}] depends on the representative")

    # ---- checks ----------------------------------------------------------------

    def is_gelfand(self) -> bool:
        a, r = self.intersection, self.rank
        return all(a[i][j][s] == a[j][i][s] for i in range(r) for j in range(r) for s in range(r))

    def check_invariants(self) -> list[str]:
        """Violated structural identities (empty when all hold)."""
        a, r, n = self.intersection, self.rank, self.x_size
        sizes, mu = self.suborbit_sizes, self.mu
        bad = []
        if sum(sizes) != n:
            bad.append("suborbit sizes do not sum to |X|")
        if r and (self.suborbits[0] != (self.pair.base_point,)):
            bad.append("orbital 1 is not the diagonal")
        for i in range(r):
            if mu[mu[i]] != i:
                bad.append(f"mu is not an involution at {i+1}")
            if sizes[mu[i]] != sizes[i]:
                bad.append(f"|o_{i+1}| != |o_mu({i+1})|")
        for i in range(r):
            for j in range(r):
                if sum(a[i][j][s] * n * sizes[s] for s in range(r)) != n * sizes[i] * sizes[j]:
                    bad.append(f"double counting fails for ({i+1},{j+1})")
                for s in range(r):
                    if a[i][j][s] < 0:
                        bad.append(f"negative intersection number a[{i+1}][{j+1}][{s+1}]")
                    if a[0][j][s] != (1 if j == s else 0):
                        bad.append(f"a[1][{j+1}][{s+1}] is not a Kronecker delta")
                    lhs = sizes[s] * a[i][j][s]
                    rhs = sizes[mu[s]] * a[mu[j]][mu[i]][mu[s]]
                    if lhs != rhs:
                        bad.append(f"transpose symmetry fails at ({i+1},{j+1},{s+1})")
        for i in range(r):
            for s in range(r):
                if sum(a[i][j][s] for j in range(r)) != sizes[i]:
                    bad.append(f"sum over j of a[{i+1}][j][{s+1}] != |o_{i+1}|")
        return bad

    # ---- text --------------------------------------------------------------------

    def dump(self) -> str:
        r = self.rank
        lines = [f"rank {r}",
                 "sizes " + " ".join(map(str, self.suborbit_sizes)),
                 "mu " + " ".join(str(m + 1) for m in self.mu)]
        for s in range(r):
            lines.append(f"L {s + 1}")
            lines.extend(" ".join(map(str, row)) for row in self.L(s))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"OrbitalScheme({self.pair.label()}, rank={self.rank})"


def parse_scheme_dump(text: str) -> tuple[tuple[int, ...], tuple[int, ...], tuple]:
    """Inverse of :meth:`OrbitalScheme.dump`: (sizes, mu, a) with 0-based mu."""
    lines = [l.strip() for l in text.splitlines() if l.strip()]
    r = int(lines[0].split()[1])
    sizes = tuple(int(t) for t in lines[1].split()[1:])
    mu = tuple(int(t) - 1 for t in lines[2].split()[1:])
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    pos = 3
    for s in range(r):
        pos += 1
        for t in range(r):
            row = [int(v) for v in lines[pos].split()]
            for j in range(r):
                a[s][j][t] = row[j]
            pos += 1
    return sizes, mu, tuple(tuple(tuple(x) for x in m) for m in a)


def build_scheme(pair: GroupPair) -> OrbitalScheme:
    return OrbitalScheme(pair)


def intersection_numbers(scheme: OrbitalScheme):
    return scheme.intersection


def is_gelfand(scheme: OrbitalScheme) -> bool:
    return scheme.is_gelfand()


def burnside_rank(pair: GroupPair, bound: int = BURNSIDE_ENUMERATION_BOUND) -> Optional[int]:
    """Number of H-orbits on X by averaging fixed points over H; None when
    H is too large to enumerate."""
    h = pair.stabilizer
    order = h.order()
    if order > bound:
        return None
    total = sum(sum(1 for i, j in enumerate(g.images) if i == j) for g in h.elements())
    return total // order


@dataclass(frozen=True)
class AntiautomorphismCertificate:
    """The anti-automorphism g -> c g^{-1} c^{-1} preserves every double coset.

    ``c`` normalizes G, fixes the base point, squares to the identity and
    maps each suborbit o_mu(i) onto o_i.  ``c`` = identity is plain inversion.
    """

    c: Permutation
    kind: str

    @property
    def is_inversion(self) -> bool:
        return self.c.is_identity()


def antiautomorphism_certificate(pair: GroupPair, candidates: Sequence[Permutation] = (),
                                 scheme: Optional[OrbitalScheme] = None) -> Optional[AntiautomorphismCertificate]:
    """A sufficient condition for the Gelfand property.

    Tries inversion, then ``g -> c g^{-1} c^{-1}`` for each candidate ``c``.
    ``None`` means inconclusive, not a refutation.
    """
    scheme = scheme or build_scheme(pair)
    if all(m == i for i, m in enumerate(scheme.mu)):
        return AntiautomorphismCertificate(Permutation.identity(pair.degree), "inversion")
    for c in candidates:
        if _valid_twist(scheme, c):
            return AntiautomorphismCertificate(c, "twisted inversion")
    return None


def _valid_twist(scheme: OrbitalScheme, c: Permutation) -> bool:
    pair = scheme.pair
    if c.degree != pair.degree or c(pair.base_point) != pair.base_point:
        return False
    if not (c * c).is_identity():
        return False
    cinv = c.inverse()
    if any(c * g * cinv not in pair.group for g in pair.group.generators):
        return False
    for i, o in enumerate(scheme.suborbits):
        image = sorted(c(p) for p in scheme.suborbits[scheme.mu[i]])
        if image != list(o):
            return False
    return True
