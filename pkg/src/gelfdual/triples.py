"""Operations on abstract character triples: duality, integrality, isomorphism,
self-duality, symmetries, splitting fields and tensor factorization."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .cyclo import CycNum, _units
from .spectral import ZERO, CharacterTriple, ValidationFailure, canonical_form

__all__ = [
    "TripleIsomorphism",
    "TripleSymmetry",
    "IntegralityReport",
    "SelfDuality",
    "SplittingField",
    "ConjectureCheck",
    "ExplosionGuard",
    "dual_triple",
    "conjugate_triple",
    "integrality_test",
    "find_isomorphism",
    "isomorphisms",
    "self_duality",
    "symmetry_group",
    "symmetry_report",
    "SymmetryReport",
    "splitting_field",
    "galois_part",
    "tensor_product",
    "tensor_decompose",
    "abelian_invariants",
    "conjecture_check",
    "DEFAULT_RANK_BOUND",
]

DEFAULT_RANK_BOUND = 12


class ExplosionGuard(RuntimeError):
    pass


def _perm_str(p: Sequence[int]) -> str:
    return " ".join(str(i + 1) for i in p)


# ---- duality ---------------------------------------------------------------------

def dual_triple(t: CharacterTriple, canonical: bool = True) -> CharacterTriple:
    """(|X| B, A/|X|, conjugate transpose of C), with mu and pi exchanged.

    Every identity of a triple is checked on the result except eigenvalue
    integrality, which holds for the dual only when t is integral.
    """
    r, x = t.rank, t.x_size
    C = tuple(tuple(t.C[j][i].conjugate() for j in range(r)) for i in range(r))
    d = CharacterTriple(x, t.conductor, tuple(Fraction(x) * b for b in t.B),
                        tuple(a / x for a in t.A), C, t.pi, t.mu)
    return (canonical_form(d) if canonical else d).check(integrality=False)


def conjugate_triple(t: CharacterTriple) -> CharacterTriple:
    C = tuple(tuple(c.conjugate() for c in row) for row in t.C)
    return CharacterTriple(t.x_size, t.conductor, t.A, t.B, C, t.mu, t.pi)


def _galois_triple(t: CharacterTriple, g: int) -> CharacterTriple:
    C = tuple(tuple(c.galois(g) for c in row) for row in t.C)
    return CharacterTriple(t.x_size, t.conductor, t.A, t.B, C, t.mu, t.pi)


# ---- integrality ---------------------------------------------------------------------

@dataclass(frozen=True)
class IntegralityReport:
    dual_structure_constants: bool
    dual_witness: Optional[tuple]       # (i, j, m, value), 0-based
    ratio_integrality: bool
    ratio_witness: Optional[tuple]      # (i, s, value), 0-based

    @property
    def passed(self) -> bool:
        return self.dual_structure_constants and self.ratio_integrality


def _is_nonneg_integer(v: CycNum) -> bool:
    if not v.is_rational:
        return False
    q = v.to_fraction()
    return q.denominator == 1 and q >= 0


def integrality_test(t: CharacterTriple) -> IntegralityReport:
    """Necessary conditions for the dual triple to come from a pair.

    * |X| sum_s C_si C_sj A_s^-2 conj(C_sm) / B_m is a nonnegative integer;
    * C_is / C_i1 lies in Z[zeta_k].
    """
    r, x = t.rank, t.x_size
    A, B, C = t.A, t.B, t.C
    dual_ok, dual_w = True, None
    weights = [Fraction(x) / (a * a) for a in A]
    conj = [[c.conjugate() for c in row] for row in C]
    for i in range(r):
        if not dual_ok:
            break
        for j in range(i, r):
            prod = [C[s][i] * C[s][j] * weights[s] for s in range(r)]
            for m in range(r):
                v = sum((prod[s] * conj[s][m] for s in range(r) if prod[s] and conj[s][m]), ZERO) / B[m]
                if not _is_nonneg_integer(v):
                    dual_ok, dual_w = False, (i, j, m, v)
                    break
            if not dual_ok:
                break
    ratio_ok, ratio_w = True, None
    for i in range(r):
        for s in range(r):
            v = C[i][s] / C[i][0]
            if not v.is_cyclotomic_integer():
                ratio_ok, ratio_w = False, (i, s, v)
                break
        if not ratio_ok:
            break
    return IntegralityReport(dual_ok, dual_w, ratio_ok, ratio_w)


# ---- isomorphism search ------------------------------------------------------------------

@dataclass(frozen=True)
class TripleIsomorphism:
    """A_{sigma(i)} = A'_i, B_{tau(j)} = B'_j, C_{sigma(i) tau(j)} = C'_ij."""

    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    @property
    def is_identity(self) -> bool:
        return all(i == s for i, s in enumerate(self.sigma)) and all(i == s for i, s in enumerate(self.tau))

    def __str__(self):
        return f"sigma=[{_perm_str(self.sigma)}] tau=[{_perm_str(self.tau)}]"


def _fingerprints(t: CharacterTriple, keys):
    r = t.rank
    rows = [(t.A[i], tuple(sorted((str(t.B[j]), keys[i][j]) for j in range(r)))) for i in range(r)]
    cols = [(t.B[j], tuple(sorted((str(t.A[i]), keys[i][j]) for i in range(r)))) for j in range(r)]
    return rows, cols


def _witnesses(t1: CharacterTriple, t2: CharacterTriple) -> Iterator[TripleIsomorphism]:
    """All (sigma, tau) with t1 entries at (sigma(i), tau(j)) equal to t2 at
    (i, j), in lexicographic order."""
    r = t1.rank
    if t2.rank != r or t1.x_size != t2.x_size:
        return
    if sorted(t1.A) != sorted(t2.A) or sorted(t1.B) != sorted(t2.B):
        return
    k1 = [[c.serialize() for c in row] for row in t1.C]
    k2 = [[c.serialize() for c in row] for row in t2.C]
    rf1, cf1 = _fingerprints(t1, k1)
    rf2, cf2 = _fingerprints(t2, k2)
    row_cands = [[a for a in range(r) if rf1[a] == rf2[i]] for i in range(r)]
    col_base = [frozenset(b for b in range(r) if cf1[b] == cf2[j]) for j in range(r)]
    if any(not c for c in row_cands) or any(not c for c in col_base):
        return
    sigma = [0] * r
    used = [False] * r

    def taus(compat):
        tau = [0] * r
        taken = [False] * r

        def rec(j):
            if j == r:
                yield tuple(tau)
                return
            for b in sorted(compat[j]):
                if not taken[b]:
                    taken[b] = True
                    tau[j] = b
                    yield from rec(j + 1)
                    taken[b] = False

        yield from rec(0)

    def rec_rows(i, compat):
        if i == r:
            for tau in taus(compat):
                yield TripleIsomorphism(tuple(sigma), tau)
            return
        for a in row_cands[i]:
            if used[a]:
                continue
            new = [frozenset(b for b in compat[j] if k1[a][b] == k2[i][j]) for j in range(r)]
            if any(not c for c in new):
                continue
            used[a] = True
            sigma[i] = a
            yield from rec_rows(i + 1, new)
            used[a] = False

    yield from rec_rows(0, col_base)


def _intertwines(w: TripleIsomorphism, t1: CharacterTriple, t2: CharacterTriple) -> bool:
    r = t1.rank
    return (all(w.sigma[t2.mu[i]] == t1.mu[w.sigma[i]] for i in range(r))
            and all(w.tau[t2.pi[j]] == t1.pi[w.tau[j]] for j in range(r)))


def isomorphisms(t1: CharacterTriple, t2: CharacterTriple) -> Iterator[TripleIsomorphism]:
    for w in _witnesses(t1, t2):
        if _intertwines(w, t1, t2):
            yield w


def find_isomorphism(t1: CharacterTriple, t2: CharacterTriple) -> Optional[TripleIsomorphism]:
    """Lexicographically least isomorphism carrying t1 onto t2, or None."""
    return next(isomorphisms(t1, t2), None)


# ---- self-duality -------------------------------------------------------------------------

@dataclass(frozen=True)
class SelfDuality:
    """Witness of conj(C_ji) = C_{sigma(i) tau(j)} with sigma pi = mu sigma and
    tau pi = mu tau.  ``natural`` reports whether an isomorphism with the
    dual exists under the intertwining rules of :func:`find_isomorphism`;
    ``conventions_agree`` is False when exactly one of the two exists."""

    witness: Optional[TripleIsomorphism]
    natural: Optional[TripleIsomorphism]

    @property
    def is_self_dual(self) -> bool:
        return self.witness is not None

    @property
    def nontrivial(self) -> bool:
        return self.witness is not None and not self.witness.is_identity

    @property
    def conventions_agree(self) -> bool:
        return (self.witness is None) == (self.natural is None)


def self_duality(t: CharacterTriple) -> SelfDuality:
    d = dual_triple(t, canonical=False)
    r = t.rank
    literal = None
    for w in _witnesses(t, d):
        s, u = w.sigma, w.tau
        if (all(s[t.pi[i]] == t.mu[s[i]] for i in range(r))
                and all(u[t.pi[j]] == t.mu[u[j]] for j in range(r))):
            literal = w
            break
    return SelfDuality(literal, find_isomorphism(t, d))


# ---- splitting field and symmetries ---------------------------------------------------------

def abelian_invariants(elements: Sequence, op, identity) -> tuple[int, ...]:
    """Invariant factors (d_1 | d_2 | ...) of a finite abelian group given by
    its element list and operation."""
    n = len(elements)

    def power(x, e):
        y = identity
        for _ in range(e):
            y = op(y, x)
        return y

    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    primary: dict[int, list[int]] = {}
    for p in primes:
        counts = [1]
        e = 1
        while True:
            c = sum(1 for g in elements if power(g, p**e) == identity)
            counts.append(c)
            if c == p ** _valuation(n, p):
                break
            e += 1
        logs = [round(math.log(c, p)) for c in counts]
        # conjugate partition: number of cyclic factors of order >= p^e
        ge = [logs[e] - logs[e - 1] for e in range(1, len(logs))]
        parts = []
        for e in range(len(ge)):
            nxt = ge[e + 1] if e + 1 < len(ge) else 0
            parts += [p ** (e + 1)] * (ge[e] - nxt)
        primary[p] = sorted(parts, reverse=True)
    width = max((len(v) for v in primary.values()), default=0)
    inv = []
    for idx in range(width):
        inv.append(math.prod(v[idx] if idx < len(v) else 1 for v in primary.values()))
    return tuple(sorted(inv))


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class SplittingField:
    conductor: int
    fixing_subgroup: tuple[int, ...]   # H(L) in (Z/k)^x
    units: tuple[int, ...]
    invariants: tuple[int, ...]        # Gal(L/Q) = (Z/k)^x / H(L)

    @property
    def galois_order(self) -> int:
        return len(self.units) // len(self.fixing_subgroup)

    def describe(self) -> str:
        return "{1}" if not self.invariants else " x ".join(f"Z{d}" for d in self.invariants)


def splitting_field(t: CharacterTriple) -> SplittingField:
    k = t.conductor
    units = _units(k)
    entries = {c for row in t.C for c in row}
    fixing = tuple(g for g in units if all(c.galois(g) == c for c in entries))
    hset = frozenset(fixing)
    cosets = sorted({min((g * h) % k for h in hset) if k > 1 else 1 for g in units})

    def op(a, b):
        return min((a * b * h) % k for h in hset) if k > 1 else 1

    inv = abelian_invariants(cosets, op, min(hset) if k > 1 else 1)
    return SplittingField(k, fixing, units, inv)


@dataclass(frozen=True)
class TripleSymmetry:
    """A_i = A_sigma(i), B_j = B_tau(j), C_ij = g(C_{sigma(i) tau(j)})."""

    sigma: tuple[int, ...]
    tau: tuple[int, ...]
    g: int

    def __str__(self):
        return f"sigma=[{_perm_str(self.sigma)}] tau=[{_perm_str(self.tau)}] g={self.g}"


@dataclass
class SymmetryReport:
    literal: list[TripleSymmetry] = field(default_factory=list)
    natural: list[TripleSymmetry] = field(default_factory=list)

    @property
    def conventions_agree(self) -> bool:
        return set(self.literal) == set(self.natural)


def _symmetries(t: CharacterTriple, rank_bound: int) -> SymmetryReport:
    r = t.rank
    if r > rank_bound:
        raise ExplosionGuard(f"rank {r} exceeds the symmetry search bound {rank_bound}")
    k = t.conductor
    mu, pi = t.mu, t.pi
    rep = SymmetryReport()
    for g in _units(k):
        ginv = pow(g, -1, k) if k > 1 else 1
        tg = _galois_triple(t, ginv)
        for w in _witnesses(t, tg):
            s, u = w.sigma, w.tau
            sym = TripleSymmetry(s, u, g)
            if all(s[pi[i]] == pi[s[i]] for i in range(r)) and all(u[mu[j]] == mu[u[j]] for j in range(r)):
                rep.literal.append(sym)
            if all(s[mu[i]] == mu[s[i]] for i in range(r)) and all(u[pi[j]] == pi[u[j]] for j in range(r)):
                rep.natural.append(sym)
    return rep


def symmetry_group(t: CharacterTriple, rank_bound: int = DEFAULT_RANK_BOUND,
                   convention: str = "literal") -> list[TripleSymmetry]:
    """All symmetries (sigma, tau, g).

    ``convention="literal"`` imposes sigma pi = pi sigma and tau mu = mu tau
    as stated for symmetries; ``"natural"`` imposes sigma mu = mu sigma and
    tau pi = pi tau.  :func:`symmetry_report` returns both.
    """
    rep = _symmetries(t, rank_bound)
    return rep.literal if convention == "literal" else rep.natural


def symmetry_report(t: CharacterTriple, rank_bound: int = DEFAULT_RANK_BOUND) -> SymmetryReport:
    return _symmetries(t, rank_bound)


def galois_part(symmetries: Sequence[TripleSymmetry], sf: SplittingField) -> tuple[int, ...]:
    """Classes in (Z/k)^x / H(L) of the Galois elements that occur."""
    k, hset = sf.conductor, sf.fixing_subgroup
    if k == 1:
        return (1,)
    return tuple(sorted({min((s.g * h) % k for h in hset) for s in symmetries}))


# ---- tensor products -------------------------------------------------------------------------

def tensor_product(t1: CharacterTriple, t2: CharacterTriple) -> CharacterTriple:
    r1, r2 = t1.rank, t2.rank

    def idx(a, b):
        return a * r2 + b

    A = tuple(a * b for a in t1.A for b in t2.A)
    B = tuple(a * b for a in t1.B for b in t2.B)
    C = tuple(tuple(t1.C[i1][j1] * t2.C[i2][j2] for j1 in range(r1) for j2 in range(r2))
              for i1 in range(r1) for i2 in range(r2))
    mu = tuple(idx(t1.mu[a], t2.mu[b]) for a in range(r1) for b in range(r2))
    pi = tuple(idx(t1.pi[a], t2.pi[b]) for a in range(r1) for b in range(r2))
    k = math.lcm(1, *(c.k for row in C for c in row))
    return CharacterTriple(t1.x_size * t2.x_size, k, A, B, C, mu, pi)


def _sub_triple(t: CharacterTriple, rows: Sequence[int], cols: Sequence[int]) -> Optional[CharacterTriple]:
    C = tuple(tuple(t.C[i][j] for j in cols) for i in rows)
    first = sum(C[0], ZERO)
    if not first.is_rational or first.to_fraction().denominator != 1 or first.to_fraction() <= 0:
        return None
    x = int(first.to_fraction())
    r = len(rows)
    A = []
    for i in range(r):
        if not C[i][0].is_rational:
            return None
        A.append(x * C[i][0].to_fraction())
    B = []
    for j in range(r):
        if not C[0][j].is_rational:
            return None
        B.append(C[0][j].to_fraction())

    def match(vectors):
        out = []
        for v in vectors:
            conj = tuple(c.conjugate() for c in v)
            hits = [m for m, w in enumerate(vectors) if w == conj]
            if not hits:
                return None
            out.append(hits[0])
        return tuple(out)

    mu = match([C[i] for i in range(r)])
    pi = match([tuple(C[i][j] for i in range(r)) for j in range(r)])
    if mu is None or pi is None:
        return None
    k = math.lcm(1, *(c.k for row in C for c in row))
    sub = CharacterTriple(x, k, tuple(A), tuple(B), C, mu, pi)
    return sub if not sub.violations() else None


def _factor_once(t: CharacterTriple) -> Optional[tuple[CharacterTriple, CharacterTriple]]:
    r, x = t.rank, t.x_size
    rest = list(range(1, r))
    for r1 in range(2, r):
        if r % r1 or r // r1 < 2 or r1 > r // r1:
            continue
        r2 = r // r1
        for x1 in (d for d in range(2, x) if x % d == 0):
            x2 = x // x1
            blocks = {}
            for size, xx in ((r1, x1), (r2, x2)):
                if (size, xx) in blocks:
                    continue
                found = []
                for rs in combinations(rest, size - 1):
                    rows = (0,) + rs
                    if sum(t.A[i] for i in rows) != xx * x:
                        continue
                    for cs in combinations(rest, size - 1):
                        cols = (0,) + cs
                        if sum(t.B[j] for j in cols) != xx:
                            continue
                        sub = _sub_triple(t, rows, cols)
                        if sub is not None:
                            found.append(sub)
                blocks[(size, xx)] = found
            for f1 in blocks[(r1, x1)]:
                for f2 in blocks[(r2, x2)]:
                    if find_isomorphism(t, tensor_product(f1, f2)) is not None:
                        return f1, f2
    return None


def tensor_decompose(t: CharacterTriple, rank_bound: int = DEFAULT_RANK_BOUND) -> list[CharacterTriple]:
    """Factors t' with t isomorphic to their tensor product; ``[t]`` when t is
    irreducible."""
    if t.rank > rank_bound:
        raise ExplosionGuard(f"rank {t.rank} exceeds the tensor search bound {rank_bound}")
    split = _factor_once(t)
    if split is None:
        return [t]
    out = []
    for f in split:
        out.extend(tensor_decompose(canonical_form(f), rank_bound))
    return out


# ---- experimental Galois / normalizer comparison -----------------------------------------------

@dataclass(frozen=True)
class ConjectureCheck:
    status: str                      # "agree", "disagree" or "untested"
    galois: tuple[int, ...]
    center: Optional[tuple[int, ...]]
    reason: str = ""


NORMALIZER_DEGREE_BOUND = 8


def _point_normalizer_quotient(pair):
    """Elements of N/H where N = permutations fixing the base point and
    normalizing G; brute force over the point stabilizer in Sym(X)."""
    from itertools import permutations

    from .perm import Permutation

    n, x0 = pair.degree, pair.base_point
    G, H = pair.group, pair.stabilizer
    others = [p for p in range(n) if p != x0]
    h_elems = list(H.elements())
    gens = G.generators
    cycle_types = {g: g.cycle_type() for g in gens}
    norm = []
    for img in permutations(others):
        images = [0] * n
        images[x0] = x0
        for a, b in zip(others, img):
            images[a] = b
        c = Permutation._trusted(tuple(images))
        cinv = c.inverse()
        if all(c * g * cinv in G for g in gens if cycle_types[g]):
            norm.append(c)
    cosets = {}
    for c in norm:
        key = min(c * h for h in h_elems)
        cosets.setdefault(key, c)
    return list(cosets.values()), h_elems


def conjecture_check(pair, t: CharacterTriple) -> ConjectureCheck:
    """Compare Gal(L/Q) with the center of N/H (N = point-stabilizing
    normalizer of G in Sym(X)).  Reported, never asserted."""
    from .perm import Permutation

    sf = splitting_field(t)
    gal = sf.invariants
    if pair.degree > NORMALIZER_DEGREE_BOUND or pair.group.order() > 10**5:
        return ConjectureCheck("untested", gal, None, "normalizer search bound exceeded")
    reps, h_elems = _point_normalizer_quotient(pair)

    def key(c):
        return min(c * h for h in h_elems)

    def op(a, b):
        return key(a * b)

    elems = [key(c) for c in reps]
    center = [z for z in elems if all(key(z * c) == key(c * z) for c in elems)]
    inv = abelian_invariants(center, op, key(Permutation.identity(pair.degree)))
    return ConjectureCheck("agree" if inv == gal else "disagree", gal, inv)
