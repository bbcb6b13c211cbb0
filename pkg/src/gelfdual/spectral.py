"""Exact eigencharacters of a commutative orbital scheme and the triple (A, B, C).

The right-multiplication matrices ``L_s`` of the scheme commute when the pair
is Gelfand.  A seeded integer combination ``M = sum c_s L_s`` with squarefree
characteristic polynomial separates their common eigenvectors.  Its
characteristic polynomial is factored over Q; one root of each irrational
factor is recognized numerically in a cyclotomic field and checked exactly,
and the remaining roots are its Galois conjugates.  Eigenvectors come from
exact kernels, so no floating-point value survives into the result.

Column j of the triple is the character p_{.j} with multiplicity B_j and
C_{sj} = p_{sj} B_j.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _linalg
from .cyclo import CycNum, _units, divisors, euler_phi, parse_cycnum, snap
from .perm import exponent_bound
from .scheme import OrbitalScheme

__all__ = [
    "CharacterTriple",
    "Eigencharacter",
    "Idempotents",
    "SeptupleReport",
    "NotGelfand",
    "SnapFailure",
    "ConductorExceeded",
    "ValidationFailure",
    "eigen_split",
    "eigen_split_exact",
    "build_triple",
    "canonical_form",
    "reconstruct_idempotents",
    "check_idempotents",
    "validate_septuple",
    "parse_triple",
]

ZERO, ONE = CycNum(0), CycNum(1)
SEED = 20240611
PRECISION_DOUBLINGS = 4


class NotGelfand(ValueError):
    pass


class SnapFailure(ArithmeticError):
    pass


class ConductorExceeded(ArithmeticError):
    pass


class ValidationFailure(AssertionError):
    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


# ---- the triple ---------------------------------------------------------------

def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class CharacterTriple:
    """Exact data (|X|, k, A, B, C, mu, pi); indices are 0-based."""

    x_size: int
    conductor: int
    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]
    C: tuple[tuple[CycNum, ...], ...]
    mu: tuple[int, ...]
    pi: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.A)

    def column(self, j: int) -> tuple[CycNum, ...]:
        return tuple(row[j] for row in self.C)

    def eigenvalue(self, s: int, j: int) -> CycNum:
        return self.C[s][j] / self.B[j]

    def violations(self, integrality: bool = True) -> list[str]:
        """Every violated identity, described with its indices (1-based).

        ``integrality=False`` skips the check that C_ij/B_j is a cyclotomic
        integer, which fails for duals of non-integral triples.
        """
        r, x = self.rank, self.x_size
        A, B, C = self.A, self.B, self.C
        bad: list[str] = []
        if len(B) != r or len(C) != r or any(len(row) != r for row in C):
            return ["shape mismatch"]
        if sorted(self.mu) != list(range(r)) or sorted(self.pi) != list(range(r)):
            return ["mu or pi is not a permutation"]
        if r == 0:
            return bad
        for i in range(r):
            if A[i] != x * C[i][0]:
                bad.append(f"A_{i+1} != |X| C_{i+1},1")
        for j in range(r):
            if B[j] != C[0][j]:
                bad.append(f"B_{j+1} != C_1,{j+1}")
        for i in range(r):
            target = x if i == 0 else 0
            if sum(C[i], ZERO) != target:
                bad.append(f"row sum {i+1} != {target}")
            if sum((C[s][i] for s in range(r)), ZERO) != target:
                bad.append(f"column sum {i+1} != {target}")
        for k in range(r):
            for l in range(k, r):
                v = sum((C[i][k] * C[i][l].conjugate() / A[i] for i in range(r)), ZERO)
                if v != (B[k] if k == l else 0):
                    bad.append(f"column orthogonality fails at ({k+1},{l+1}): {v.render()}")
        for i in range(r):
            for j in range(i, r):
                v = sum((C[i][s] * C[j][s].conjugate() / B[s] for s in range(r)), ZERO)
                if v != (A[i] if i == j else 0):
                    bad.append(f"row orthogonality fails at ({i+1},{j+1}): {v.render()}")
        mu, pi = self.mu, self.pi
        for i in range(r):
            if mu[mu[i]] != i:
                bad.append(f"mu is not an involution at {i+1}")
            if pi[pi[i]] != i:
                bad.append(f"pi is not an involution at {i+1}")
            if A[i] != A[mu[i]]:
                bad.append(f"A_{i+1} != A_mu({i+1})")
            if B[i] != B[pi[i]]:
                bad.append(f"B_{i+1} != B_pi({i+1})")
        for i in range(r):
            for j in range(r):
                cc = C[i][j].conjugate()
                if C[i][pi[j]] != cc:
                    bad.append(f"C_{i+1},pi({j+1}) != conj C_{i+1},{j+1}")
                if C[mu[i]][j] != cc:
                    bad.append(f"C_mu({i+1}),{j+1} != conj C_{i+1},{j+1}")
                if integrality and B[j] and not (C[i][j] / B[j]).is_cyclotomic_integer():
                    bad.append(f"C_{i+1},{j+1}/B_{j+1} is not a cyclotomic integer")
        k = math.lcm(1, *(c.k for row in C for c in row))
        if k != self.conductor:
            bad.append(f"conductor {self.conductor} != {k}")
        return bad

    def check(self, integrality: bool = True) -> "CharacterTriple":
        bad = self.violations(integrality)
        if bad:
            raise ValidationFailure(bad)
        return self

    # ---- text -----------------------------------------------------------------

    def serialize(self) -> str:
        lines = [f"X {self.x_size} k {self.conductor} r {self.rank}",
                 " ".join(_frac_str(a) for a in self.A),
                 " ".join(_frac_str(b) for b in self.B)]
        lines.extend(" | ".join(c.serialize() for c in row) for row in self.C)
        lines.append(" ".join(str(m + 1) for m in self.mu))
        lines.append(" ".join(str(p + 1) for p in self.pi))
        return "\n".join(lines) + "\n"

    def matrix_rows(self) -> list[list[str]]:
        return [[c.render() for c in row] for row in self.C]

    def render_matrix(self) -> str:
        rows = self.matrix_rows()
        widths = [max(len(r[j]) for r in rows) for j in range(self.rank)] if rows else []
        return "\n".join("[ " + "  ".join(v.rjust(w) for v, w in zip(r, widths)) + " ]" for r in rows)


def parse_triple(text: str) -> CharacterTriple:
    lines = [l.strip() for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]
    head = lines[0].split()
    if head[0] != "X" or head[2] != "k" or head[4] != "r":
        raise ValueError(f"bad triple header {lines[0]!r}")
    x, k, r = int(head[1]), int(head[3]), int(head[5])
    if len(lines) != r + 5:
        raise ValueError(f"expected {r + 5} lines, got {len(lines)}")
    A = tuple(Fraction(t) for t in lines[1].split())
    B = tuple(Fraction(t) for t in lines[2].split())
    C = tuple(tuple(parse_cycnum(c) for c in lines[3 + i].split("|")) for i in range(r))
    mu = tuple(int(t) - 1 for t in lines[3 + r].split())
    pi = tuple(int(t) - 1 for t in lines[4 + r].split())
    return CharacterTriple(x, k, A, B, C, mu, pi)


# ---- eigencharacters ------------------------------------------------------------

@dataclass(frozen=True)
class Eigencharacter:
    values: tuple[CycNum, ...]
    multiplicity: Fraction


def _column_key(values: Sequence[CycNum], mult) -> tuple:
    return (Fraction(mult), tuple(v.serialize() for v in values))


def _order_columns(chars: list[Eigencharacter], sizes: Sequence[int]) -> list[Eigencharacter]:
    trivial = tuple(CycNum(s) for s in sizes)
    first = [c for c in chars if c.values == trivial]
    if len(first) != 1:
        raise ValidationFailure(["trivial character not found exactly once"])
    rest = sorted((c for c in chars if c.values != trivial), key=lambda c: _column_key(c.values, c.multiplicity))
    return first + rest


def _charpoly(M: list[list[int]]):
    import sympy

    x = sympy.Symbol("x")
    return sympy.Matrix(M).charpoly(x), x


def _separating_matrix(scheme: OrbitalScheme, rng: random.Random, attempts: int = 64):
    import sympy

    r = scheme.rank
    Ls = [scheme.L(s) for s in range(r)]
    for _ in range(attempts):
        c = [rng.randint(1, 8 * r + 8) for _ in range(r)]
        M = [[sum(c[s] * Ls[s][i][j] for s in range(r)) for j in range(r)] for i in range(r)]
        f, x = _charpoly(M)
        if sympy.degree(sympy.gcd(f, f.diff(x)), x) == 0:
            return M, f, x
    raise SnapFailure("no separating combination found")


def _factors(f, x):
    import sympy

    _, facs = sympy.factor_list(f.as_expr(), x)
    out = []
    for g, mult in facs:
        poly = sympy.Poly(g, x)
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]  # lowest degree first
        if mult != 1:
            raise SnapFailure("characteristic polynomial is not squarefree")
        out.append(coeffs)
    return sorted(out, key=lambda c: (len(c), c))


def _eval_poly(coeffs: Sequence[int], theta: CycNum) -> CycNum:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * theta + c
    return acc


def _galois_orbit(theta: CycNum) -> list[CycNum]:
    seen: list[CycNum] = []
    for t in _units(theta.k):
        g = theta.galois(t)
        if g not in seen:
            seen.append(g)
    return seen


class _ConductorSource:
    """Divisors of exponent_bound(G), computed only when needed."""

    def __init__(self, scheme: OrbitalScheme, bound: Optional[int]):
        self.scheme, self.bound, self._k = scheme, bound, None
        self.truncated = False

    def candidates(self, degree: int) -> list[int]:
        if self._k is None:
            self._k = exponent_bound(self.scheme.pair.group)
        out = []
        for m in divisors(self._k):
            if m % 4 == 2 or euler_phi(m) % degree:
                continue
            if self.bound is not None and m > self.bound:
                self.truncated = True
                continue
            out.append(m)
        return out


def _numeric_roots(coeffs: Sequence[int], dps: int):
    import mpmath

    with mpmath.workdps(dps):
        roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200 + 20 * len(coeffs), extraprec=2 * dps)
        roots = [mpmath.mpc(z) for z in roots]
    return sorted(roots, key=lambda z: (-float(z.real), -float(z.imag)))


def _snap_factor(coeffs: Sequence[int], conductors: list[int], dps: int) -> Optional[list[CycNum]]:
    d = len(coeffs) - 1
    for z in _numeric_roots(coeffs, dps):
        for m in conductors:
            cand = snap(z, m, 1, dps=dps)
            if cand is None or _eval_poly(coeffs, cand):
                continue
            orbit = _galois_orbit(cand)
            if len(orbit) == d:
                return orbit
        break
    return None


def _exact_factor_roots(coeffs: Sequence[int], conductors: list[int]) -> Optional[list[CycNum]]:
    """Roots of an irreducible integer polynomial by factoring it over Q(zeta_m)."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    for m in conductors:
        K = sympy.QQ.algebraic_field(sympy.exp(2 * sympy.pi * sympy.I / m))
        _, facs = sympy.Poly(expr, x, domain=K).factor_list()
        if any(f.degree() != 1 for f, _ in facs):
            continue
        roots = []
        for f, _ in facs:
            a, b = f.rep.to_list()
            a_c = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(a.to_list())]
            b_c = [Fraction(int(q.numerator), int(q.denominator)) for q in reversed(b.to_list())]
            root = -CycNum(m, b_c or [0]) / CycNum(m, a_c)
            if _eval_poly(coeffs, root):
                raise SnapFailure("root from field factorization does not verify")
            roots.append(root)
        return roots
    return None


def _eigenvalue_vector(scheme: OrbitalScheme, v: list[CycNum]) -> tuple[CycNum, ...]:
    """Normalize v (v[0] = 1) and read off L_s v = p_s v, verifying every s."""
    if not v[0]:
        raise SnapFailure("eigenvector has zero identity coordinate")
    inv = ONE / v[0]
    v = [x * inv for x in v]
    ps = []
    for s in range(scheme.rank):
        Lv = _linalg.matvec(scheme.L(s), v, ZERO)
        p = Lv[0]
        if any(a != p * b for a, b in zip(Lv, v)):
            raise SnapFailure(f"L_{s+1} does not act by a scalar on a candidate eigenvector")
        ps.append(p)
    return tuple(ps)


def _multiplicity(scheme: OrbitalScheme, ps: Sequence[CycNum]) -> Fraction:
    A = scheme.orbital_sizes
    total = sum((p * p.conjugate() / A[s] for s, p in enumerate(ps)), ZERO)
    if not total.is_rational or total.to_fraction() <= 0:
        raise SnapFailure("norm of an eigencharacter is not a positive rational")
    return 1 / total.to_fraction()


def _adjugate_terms(M: list[list[int]], f, x) -> list[list[list[int]]]:
    """Integer matrices N_i with adj(xI - M) = sum_i x^i N_i.

    From (xI - M) adj(xI - M) = f(x) I: N_{r-1} = I, N_{i-1} = M N_i + c_i I.
    """
    import sympy

    r = len(M)
    c = [int(v) for v in reversed(sympy.Poly(f, x).all_coeffs())]
    N = [[int(i == j) for j in range(r)] for i in range(r)]
    terms = [N]
    for i in range(r - 1, 0, -1):
        N = [[sum(M[a][b] * N[b][j] for b in range(r)) + (c[i] if a == j else 0) for j in range(r)]
             for a in range(r)]
        terms.append(N)
    return terms[::-1]


def _kernel_vector(adj: list[list[list[int]]], theta: CycNum) -> list[CycNum]:
    """A nonzero column of adj(theta I - M): an eigenvector for a simple root."""
    r = len(adj)
    powers = [ONE]
    for _ in range(r - 1):
        powers.append(powers[-1] * theta)
    for col in range(r):
        v = []
        for row in range(r):
            acc = ZERO
            for i, N in enumerate(adj):
                if N[row][col]:
                    acc = acc + powers[i] * N[row][col]
            v.append(acc)
        if any(v):
            return v
    raise SnapFailure("adjugate vanishes at a claimed simple root")


def _require_gelfand(scheme: OrbitalScheme) -> None:
    if not scheme.is_gelfand():
        raise NotGelfand(f"{scheme.pair.label()} is not a Gelfand pair (convolution is not commutative)")


def eigen_split(scheme: OrbitalScheme, *, seed: int = SEED, dps: int = 50,
                conductor_bound: Optional[int] = None) -> list[Eigencharacter]:
    """Common eigencharacters of the L_s, in canonical column order."""
    _require_gelfand(scheme)
    rng = random.Random(seed)
    M, f, x = _separating_matrix(scheme, rng)
    source = _ConductorSource(scheme, conductor_bound)
    roots: list[CycNum] = []
    for coeffs in _factors(f, x):
        if len(coeffs) == 2:
            roots.append(CycNum(Fraction(-coeffs[0], coeffs[1])))
            continue
        conductors = source.candidates(len(coeffs) - 1)
        found, prec = None, dps
        for _ in range(PRECISION_DOUBLINGS + 1):
            found = _snap_factor(coeffs, conductors, prec)
            if found:
                break
            prec *= 2
        if found is None:
            found = _exact_factor_roots(coeffs, conductors)
        if found is None:
            if source.truncated:
                raise ConductorExceeded(f"no conductor <= {conductor_bound} splits a degree {len(coeffs) - 1} factor")
            raise SnapFailure(f"could not recognize the roots of a degree {len(coeffs) - 1} factor")
        roots.extend(found)
    adj = _adjugate_terms(M, f, x)
    chars = []
    for theta in roots:
        ps = _eigenvalue_vector(scheme, _kernel_vector(adj, theta))
        chars.append(Eigencharacter(ps, _multiplicity(scheme, ps)))
    return _order_columns(chars, scheme.suborbit_sizes)


def eigen_split_exact(scheme: OrbitalScheme, *, seed: int = SEED + 1) -> list[Eigencharacter]:
    """Oracle: roots by factoring over Q(zeta_m) for m | e(G), eigenvectors as
    columns of the spectral projectors prod_{t != theta} (M - t)."""
    _require_gelfand(scheme)
    rng = random.Random(seed)
    M, f, x = _separating_matrix(scheme, rng)
    source = _ConductorSource(scheme, None)
    roots: list[CycNum] = []
    for coeffs in _factors(f, x):
        if len(coeffs) == 2:
            roots.append(CycNum(Fraction(-coeffs[0], coeffs[1])))
            continue
        found = _exact_factor_roots(coeffs, source.candidates(len(coeffs) - 1))
        if found is None:
            raise SnapFailure("exact factorization did not split over any Q(zeta_m), m | e(G)")
        roots.extend(found)
    r = len(M)
    chars = []
    for theta in roots:
        P = [[ONE if i == j else ZERO for j in range(r)] for i in range(r)]
        for t in roots:
            if t is theta:
                continue
            PM = _linalg.matmul(P, M, ZERO)
            P = [[PM[i][j] - t * P[i][j] for j in range(r)] for i in range(r)]
        col = next(j for j in range(r) if any(P[i][j] for i in range(r)))
        ps = _eigenvalue_vector(scheme, [P[i][col] for i in range(r)])
        chars.append(Eigencharacter(ps, _multiplicity(scheme, ps)))
    return _order_columns(chars, scheme.suborbit_sizes)


# ---- assembling the triple -------------------------------------------------------

def _triple_from_chars(scheme: OrbitalScheme, chars: list[Eigencharacter]) -> CharacterTriple:
    r = scheme.rank
    A = tuple(Fraction(a) for a in scheme.orbital_sizes)
    B = tuple(c.multiplicity for c in chars)
    C = tuple(tuple(chars[j].values[s] * chars[j].multiplicity for j in range(r)) for s in range(r))
    pi = []
    for c in chars:
        conj = tuple(v.conjugate() for v in c.values)
        pi.append(next(j for j, d in enumerate(chars) if d.values == conj))
    k = math.lcm(1, *(c.k for row in C for c in row))
    return CharacterTriple(scheme.x_size, k, A, B, C, tuple(scheme.mu), tuple(pi))


def build_triple(scheme: OrbitalScheme, *, exact: bool = False, **kwargs) -> CharacterTriple:
    """The checked triple of a Gelfand scheme.  ``exact`` selects the
    field-factorization oracle instead of the numeric-recognition path."""
    chars = eigen_split_exact(scheme) if exact else eigen_split(scheme, **kwargs)
    triple = _triple_from_chars(scheme, chars).check()
    bad = check_idempotents(triple, scheme)
    if bad:
        raise ValidationFailure(bad)
    return triple


def canonical_form(t: CharacterTriple) -> CharacterTriple:
    """Reorder columns: trivial character first, then by (B_j, serialized
    eigenvalue column).  Rows keep their order."""
    r = t.rank
    if r == 0:
        return t
    trivial = [j for j in range(r) if t.B[j] == 1 and all(t.C[s][j] * t.x_size == t.A[s] for s in range(r))]
    if not trivial:
        raise ValidationFailure(["no trivial column"])
    j0 = trivial[0]
    rest = sorted((j for j in range(r) if j != j0),
                  key=lambda j: _column_key([t.C[s][j] / t.B[j] for s in range(r)], t.B[j]))
    order = [j0] + rest
    where = {old: new for new, old in enumerate(order)}
    return CharacterTriple(
        t.x_size, t.conductor, t.A, tuple(t.B[j] for j in order),
        tuple(tuple(row[j] for j in order) for row in t.C), t.mu,
        tuple(where[t.pi[j]] for j in order))


# ---- idempotents ----------------------------------------------------------------------

@dataclass(frozen=True)
class Idempotents:
    """``D[s][j]``: coordinate of Psi_j on X_s; ``D_inv[j][s]``: coordinate of X_s on Psi_j."""

    D: tuple[tuple[CycNum, ...], ...]
    D_inv: tuple[tuple[CycNum, ...], ...]


def reconstruct_idempotents(t: CharacterTriple) -> Idempotents:
    r = t.rank
    D = tuple(tuple(t.C[s][j].conjugate() / t.A[s] for j in range(r)) for s in range(r))
    D_inv = tuple(tuple(t.C[s][j] / t.B[j] for s in range(r)) for j in range(r))
    prod = _linalg.matmul(D, D_inv, ZERO)
    if any(prod[i][j] != (1 if i == j else 0) for i in range(r) for j in range(r)):
        raise ValidationFailure(["change of basis between X and Psi is not invertible as stated"])
    return Idempotents(D, D_inv)


def check_idempotents(t: CharacterTriple, scheme: OrbitalScheme) -> list[str]:
    """Psi_j x Psi_j = Psi_j, sum_j Psi_j = X_1 and X_s x Psi_j = p_sj Psi_j,
    using the scheme's intersection numbers."""
    r, a = t.rank, scheme.intersection
    try:
        D = reconstruct_idempotents(t).D
    except ValidationFailure as e:
        return e.violations
    bad = []
    total = [ZERO] * r
    for j in range(r):
        psi = [D[s][j] for s in range(r)]
        total = [u + v for u, v in zip(total, psi)]
        sq = [ZERO] * r
        for s in range(r):
            if not psi[s]:
                continue
            for q in range(r):
                if not psi[q]:
                    continue
                w = psi[s] * psi[q]
                for u in range(r):
                    if a[s][q][u]:
                        sq[u] = sq[u] + w * a[s][q][u]
        if sq != psi:
            bad.append(f"Psi_{j+1} is not idempotent")
        for s in range(r):
            if _linalg.matvec(scheme.L(s), psi, ZERO) != [t.eigenvalue(s, j) * v for v in psi]:
                bad.append(f"X_{s+1} does not act on Psi_{j+1} by C_{s+1},{j+1}/B_{j+1}")
    if total != [ONE] + [ZERO] * (r - 1):
        bad.append("the Psi_j do not sum to X_1")
    return bad


# ---- normalization constants -----------------------------------------------------------

@dataclass(frozen=True)
class SeptupleReport:
    N: Fraction
    K: Fraction
    x_size: Fraction


def validate_septuple(t: CharacterTriple) -> SeptupleReport:
    """Recover the normalization constants from traces weighted by 1/|X|.

    With tr_dot(X_i) = A_i and tr_cross(Psi_j) = B_j: N = tr_cross(1_dot),
    K = tr_dot(1_dot) tr_cross(1_cross); checks |X| = K/N^2,
    tr_dot(1_dot) = K/N, tr_cross(1_cross) = N and the first row/column
    identities.
    """
    r, x = t.rank, Fraction(t.x_size)
    bad = []
    if r == 0 or x <= 0:
        raise ValidationFailure(["empty triple"])
    tr_dot = sum(t.A, Fraction(0)) / x
    first_row = sum(t.C[0], ZERO)
    total = sum((c for row in t.C for c in row), ZERO)
    if not (first_row.is_rational and total.is_rational):
        raise ValidationFailure(["traces are not rational"])
    tr_cross = first_row.to_fraction() / x
    N = total.to_fraction() / x
    pairing = t.A[0] / x
    if N != pairing:
        bad.append(f"tr_cross(1_dot) = {N} differs from <1_dot, 1_cross> = {pairing}")
    if N == 0:
        raise ValidationFailure(bad + ["N = 0"])
    K = tr_dot * tr_cross
    if K / (N * N) != x:
        bad.append(f"|X| = {x} but K/N^2 = {K / (N * N)}")
    if tr_dot != K / N:
        bad.append(f"tr_dot(1_dot) = {tr_dot} but K/N = {K / N}")
    if tr_cross != N:
        bad.append(f"tr_cross(1_cross) = {tr_cross} but N = {N}")
    if first_row != x:
        bad.append(f"sum_j C_1j = {first_row.render()} but |X| = {x}")
    for i in range(r):
        if t.A[i] != x * t.C[i][0]:
            bad.append(f"A_{i+1} != |X| C_{i+1},1")
    for j in range(r):
        if t.B[j] != t.C[0][j]:
            bad.append(f"B_{j+1} != C_1,{j+1}")
    if bad:
        raise ValidationFailure(bad)
    return SeptupleReport(N, K, x)
