"""Exact arithmetic in cyclotomic fields Q(zeta_k).

A :class:`CycNum` stores its coordinates on the power basis
``1, z, ..., z^(phi(k)-1)`` of Q(zeta_k), reduced modulo the k-th cyclotomic
polynomial.  Every value is kept at its minimal conductor, so equality and
hashing are structural.

>>> z3 = CycNum.zeta(3)
>>> 1 + z3 + z3 * z3
CycNum(0)
>>> CycNum.zeta(4) ** 2
CycNum(-1)
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Optional, Sequence

__all__ = [
    "CycNum",
    "CycloError",
    "NotAUnit",
    "cyclotomic_poly",
    "euler_phi",
    "snap",
    "parse_cycnum",
    "cyc_arith",
    "conjugate",
    "galois_apply",
    "is_cyclotomic_integer",
    "integer_coords",
]


class CycloError(ArithmeticError):
    pass


class NotAUnit(CycloError):
    pass


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return tuple(sorted(set(small + [n // d for d in small])))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    # x^n - 1 divided by Phi_d for every proper divisor d
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num = _exact_divide(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_divide(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]  # den is monic
        quot[i - dd] = c
        if c:
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    assert not any(num[:dd])
    return quot


@lru_cache(maxsize=None)
def _power_table(k: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the power-basis coordinates of z_k^e, 0 <= e < k."""
    phi = euler_phi(k)
    poly = cyclotomic_poly(k)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(k):
        rows.append(tuple(cur))
        # multiply by z and reduce
        top = cur[-1] if phi else 0
        cur = [0] + cur[:-1]
        if top:
            for j in range(phi):
                cur[j] -= top * poly[j]
    return tuple(rows)


def _reduce_exponents(k: int, terms: dict[int, Fraction]) -> tuple[Fraction, ...]:
    """Power-basis coordinates of sum c_e z_k^e."""
    table = _power_table(k)
    out = [Fraction(0)] * euler_phi(k)
    for e, c in terms.items():
        if not c:
            continue
        row = table[e % k]
        for j, v in enumerate(row):
            if v:
                out[j] += c * v
    return tuple(out)


def _integer_coords(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


@lru_cache(maxsize=None)
def _units(k: int) -> tuple[int, ...]:
    return tuple(t for t in range(1, k + 1) if math.gcd(t, k) == 1) if k > 1 else (1,)


def _canonical_conductor(k: int) -> int:
    return k // 2 if k % 4 == 2 else k


@lru_cache(maxsize=None)
def _descent_solver(k: int, d: int):
    """Return a function mapping Q(zeta_k) coordinates that lie in Q(zeta_d)
    to Q(zeta_d) coordinates, or None when the value is not in Q(zeta_d)."""
    step = k // d
    phi_k, phi_d = euler_phi(k), euler_phi(d)
    table = _power_table(k)
    cols = [table[(j * step) % k] for j in range(phi_d)]
    # row-reduce the phi_k x phi_d system once; record pivots
    mat = [[Fraction(cols[j][i]) for j in range(phi_d)] for i in range(phi_k)]
    pivots = []
    row = 0
    ops = []
    for c in range(phi_d):
        pr = next((r for r in range(row, phi_k) if mat[r][c]), None)
        if pr is None:
            continue
        mat[row], mat[pr] = mat[pr], mat[row]
        ops.append(("swap", row, pr))
        inv = 1 / mat[row][c]
        mat[row] = [v * inv for v in mat[row]]
        ops.append(("scale", row, inv))
        for r in range(phi_k):
            if r != row and mat[r][c]:
                f = mat[r][c]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
                ops.append(("sub", r, row, f))
        pivots.append(c)
        row += 1

    def solve(vec: Sequence[Fraction]) -> Optional[tuple[Fraction, ...]]:
        v = list(vec)
        for op in ops:
            if op[0] == "swap":
                v[op[1]], v[op[2]] = v[op[2]], v[op[1]]
            elif op[0] == "scale":
                v[op[1]] *= op[2]
            else:
                v[op[1]] -= op[3] * v[op[2]]
        if any(v[len(pivots):]):
            return None
        out = [Fraction(0)] * phi_d
        for i, c in enumerate(pivots):
            out[c] = v[i]
        return tuple(out)

    return solve


def _coerce(x) -> "CycNum":
    if isinstance(x, CycNum):
        return x
    if isinstance(x, (int, Fraction, Rational)):
        return CycNum(1, (Fraction(x),))
    raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")


class CycNum:
    """An exact element of a cyclotomic field.

    ``CycNum(3)`` is the rational 3; ``CycNum(k, coeffs)`` builds
    ``sum coeffs[i] * zeta_k**i`` (any length; reduced on construction).
    """

    __slots__ = ("k", "coeffs", "_hash")

    def __init__(self, k=1, coeffs: Optional[Iterable] = None):
        if coeffs is None:
            # CycNum(r) for a rational r
            coeffs, k = (k,), 1
        k = int(k)
        if k < 1:
            raise ValueError("conductor must be positive")
        coeffs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        if len(coeffs) != euler_phi(k):
            coeffs = list(_reduce_exponents(k, dict(enumerate(coeffs))))
        self.k, self.coeffs = _reduce_conductor(k, tuple(coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, k: int, coeffs: tuple[Fraction, ...]) -> "CycNum":
        obj = object.__new__(cls)
        obj.k, obj.coeffs, obj._hash = k, coeffs, None
        return obj

    @classmethod
    def zeta(cls, k: int, e: int = 1) -> "CycNum":
        """zeta_k ** e."""
        return cls(k, _reduce_exponents(k, {e % k: Fraction(1)}))

    @classmethod
    def from_exponents(cls, k: int, terms: dict[int, object]) -> "CycNum":
        return cls(k, _reduce_exponents(k, {e: Fraction(c) for e, c in terms.items()}))

    # ---- structure ------------------------------------------------------

    def lift(self, k: int) -> tuple[Fraction, ...]:
        """Coordinates in Q(zeta_k); requires self.k | k."""
        if k % self.k:
            raise ValueError(f"conductor {self.k} does not divide {k}")
        if k == self.k:
            return self.coeffs
        step = k // self.k
        return _reduce_exponents(k, {i * step: c for i, c in enumerate(self.coeffs)})

    def exponent_terms(self, k: Optional[int] = None) -> dict[int, Fraction]:
        k = k or self.k
        step = k // self.k
        return {i * step: c for i, c in enumerate(self.coeffs) if c}

    @property
    def is_rational(self) -> bool:
        return self.k == 1

    def to_fraction(self) -> Fraction:
        if self.k != 1:
            raise CycloError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    # ---- arithmetic -----------------------------------------------------

    def _binary(self, other):
        other = _coerce(other)
        k = self.k * other.k // math.gcd(self.k, other.k)
        return k, self.lift(k), other.lift(k)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNum._raw(1, (Fraction(other),))
        if isinstance(other, CycNum) and (other.k == 1 or self.k == 1):
            # adding a rational never changes the minimal conductor
            x, q = (self, other.coeffs[0]) if other.k == 1 else (other, self.coeffs[0])
            return CycNum._raw(x.k, (x.coeffs[0] + q,) + x.coeffs[1:])
        if isinstance(other, CycNum) and other.k == self.k:
            return CycNum._raw(*_reduce_conductor(self.k, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))))
        try:
            k, a, b = self._binary(other)
        except TypeError:
            return NotImplemented
        return CycNum(k, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.k, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)) or (isinstance(other, CycNum) and (other.k == 1 or self.k == 1)):
            return self + (-_coerce(other))
        try:
            k, a, b = self._binary(other)
        except TypeError:
            return NotImplemented
        return CycNum(k, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum._raw(self.k, tuple(c * other for c in self.coeffs)) if other else CycNum._raw(1, (Fraction(0),))
        if isinstance(other, CycNum) and (other.k == 1 or self.k == 1):
            x, q = (self, other.coeffs[0]) if other.k == 1 else (other, self.coeffs[0])
            return CycNum._raw(x.k, tuple(c * q for c in x.coeffs)) if q else CycNum._raw(1, (Fraction(0),))
        try:
            k, a, b = self._binary(other)
        except TypeError:
            return NotImplemented
        # integer convolution over a common denominator, then one reduction
        ia, da = _integer_coords(a)
        ib, db = _integer_coords(b)
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    if y:
                        prod[i + j] += x * y
        table = _power_table(k)
        out = [0] * len(a)
        for e, c in enumerate(prod):
            if c:
                for j, v in enumerate(table[e % k]):
                    if v:
                        out[j] += c * v
        den = da * db
        return CycNum._raw(*_reduce_conductor(k, tuple(Fraction(v, den) for v in out)))

    __rmul__ = __mul__

    def norm_conjugates(self) -> list["CycNum"]:
        seen = []
        for t in _units(self.k):
            g = self.galois(t)
            if g not in seen:
                seen.append(g)
        return seen

    def inverse(self) -> "CycNum":
        if not self:
            raise ZeroDivisionError("CycNum division by zero")
        if self.k == 1:
            return CycNum._raw(1, (1 / self.coeffs[0],))
        # x^{-1} = (product of the other conjugates) / norm
        prod = CycNum(1)
        for t in _units(self.k)[1:]:
            prod = prod * self.galois(t)
        norm = (self * prod).to_fraction()
        return prod * (1 / norm)

    def __truediv__(self, other):
        other = _coerce(other)
        if other.k == 1:
            if not other.coeffs[0]:
                raise ZeroDivisionError("CycNum division by zero")
            return self * (1 / other.coeffs[0])
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = CycNum(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # ---- Galois action --------------------------------------------------

    def galois(self, t: int) -> "CycNum":
        """Image under zeta -> zeta^t; t must be a unit mod the conductor."""
        if math.gcd(t, self.k) != 1:
            raise NotAUnit(f"{t} is not a unit modulo {self.k}")
        if self.k == 1:
            return self
        return CycNum._raw(
            self.k,
            _reduce_exponents(self.k, {i * t: c for i, c in enumerate(self.coeffs) if c}),
        )

    def conjugate(self) -> "CycNum":
        return self.galois(self.k - 1) if self.k > 1 else self

    # ---- integrality ----------------------------------------------------

    def is_cyclotomic_integer(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coords(self) -> Optional[tuple[int, ...]]:
        if not self.is_cyclotomic_integer():
            return None
        return tuple(int(c) for c in self.coeffs)

    # ---- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.k, self.coeffs))
        return self._hash

    def sort_key(self) -> tuple:
        return (self.k, self.coeffs)

    # ---- numerics / text --------------------------------------------------

    def __complex__(self) -> complex:
        return sum(
            (float(c) * cmath.exp(2j * math.pi * i / self.k) for i, c in enumerate(self.coeffs) if c),
            0j,
        )

    def to_mp(self):
        import mpmath

        z = mpmath.exp(2j * mpmath.pi / self.k)
        return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * z**i for i, c in enumerate(self.coeffs) if c)

    def serialize(self) -> str:
        return f"{self.k}; " + ", ".join(_fmt_frac(c) for c in self.coeffs)

    def render(self) -> str:
        """Human-readable form using ``z{k}^{e}`` for zeta powers."""
        if self.k == 1:
            return _fmt_frac(self.coeffs[0])
        terms = self.exponent_terms()
        if _is_prime(self.k):
            # sum of all k-th roots vanishes: shift by the most common value
            full = [terms.get(e, Fraction(0)) for e in range(self.k)]
            counts: dict[Fraction, int] = {}
            for v in full:
                counts[v] = counts.get(v, 0) + 1
            shift = max(counts, key=lambda v: (counts[v], v == 0))
            terms = {e: v - shift for e, v in enumerate(full) if v != shift}
        parts = []
        for e in sorted(terms, reverse=True):
            c = terms[e]
            mono = "1" if e == 0 else (f"z{self.k}" if e == 1 else f"z{self.k}^{e}")
            if e == 0:
                s = _fmt_frac(abs(c))
            elif abs(c) == 1:
                s = mono
            else:
                s = f"{_fmt_frac(abs(c))}*{mono}"
            parts.append(("-" if c < 0 else "+", s))
        text = "".join(f"{sign}{s}" for sign, s in parts)
        return text[1:] if text.startswith("+") else text

    def __str__(self):
        return self.render()

    def __repr__(self):
        if self.k == 1:
            return f"CycNum({_fmt_frac(self.coeffs[0])})"
        return f"CycNum({self.k}, [{', '.join(_fmt_frac(c) for c in self.coeffs)}])"


def _fmt_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % p for p in range(2, math.isqrt(n) + 1))


def _reduce_conductor(k: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    if k == 1:
        return 1, coeffs
    if not any(coeffs[1:]):
        return 1, (coeffs[0],)
    for d in divisors(k)[:-1]:
        if d % 4 == 2 or d == 1:
            continue
        sub = _descent_solver(k, d)(coeffs)
        if sub is not None:
            return d, sub
    kc = _canonical_conductor(k)
    if kc != k:
        sub = _descent_solver(k, kc)(coeffs)
        return kc, sub
    return k, coeffs


_OPS = {"add": lambda a, b: a + b, "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b, "div": lambda a, b: a / b}


def cyc_arith(a, b, op: str) -> CycNum:
    """``op`` is one of add, sub, mul, div; division by zero raises."""
    try:
        f = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return f(_coerce(a), _coerce(b))


def conjugate(a) -> CycNum:
    return _coerce(a).conjugate()


def galois_apply(a, t: int) -> CycNum:
    return _coerce(a).galois(t)


def is_cyclotomic_integer(a) -> bool:
    return _coerce(a).is_cyclotomic_integer()


def integer_coords(a) -> Optional[tuple[int, ...]]:
    return _coerce(a).integer_coords()


def parse_cycnum(text: str) -> CycNum:
    """Inverse of :meth:`CycNum.serialize`."""
    head, _, body = text.partition(";")
    k = int(head.strip())
    coeffs = [Fraction(tok.strip()) for tok in body.split(",")] if body.strip() else []
    if len(coeffs) != euler_phi(k):
        raise ValueError(f"expected {euler_phi(k)} coefficients for conductor {k}")
    return CycNum(k, coeffs)


EPS_SNAP = 1e-8


def snap(x, k: int, denom_bound: int = 1, *, eps: float = EPS_SNAP, dps: int = 50,
         max_coeff: int = 10**6) -> Optional[CycNum]:
    """Recognize a numeric value as an element of Q(zeta_k).

    Looks for ``c`` with ``x = sum c_i zeta_k^i`` and every ``c_i * denom_bound``
    integral, using an integer relation search (mpmath PSLQ) on the power
    basis.  Returns ``None`` when nothing within ``eps`` is found.  The result
    is a candidate only; callers verify it exactly.
    """
    import mpmath

    exact_input = isinstance(x, (mpmath.mpf, mpmath.mpc))
    with mpmath.workdps(dps):
        xv = mpmath.mpc(x)
        phi = euler_phi(k)
        z = mpmath.exp(2j * mpmath.pi / k)
        basis = [z**i for i in range(phi)]
        if k == 1:
            cand = _snap_rational(xv.real, denom_bound)
        else:
            # Re + pi*Im separates Q-linear relations among the complex values
            w = mpmath.pi
            vec = [xv.real + w * xv.imag] + [-(b.real + w * b.imag) for b in basis]
            # double-precision input only supports a loose relation tolerance
            tol = mpmath.mpf(10) ** (-(dps * 2 // 3) if exact_input else -11)
            bound = max_coeff if exact_input else min(max_coeff, 10**3)
            rel = mpmath.pslq(vec, tol=tol, maxcoeff=bound, maxsteps=10**5)
            if rel is None or rel[0] == 0:
                return None
            n0 = rel[0]
            if n0 < 0:
                rel = [-r for r in rel]
                n0 = -n0
            if denom_bound % n0:
                return None
            cand = CycNum(k, [Fraction(r, n0) for r in rel[1:]])
        if cand is None:
            return None
        if abs(cand.to_mp() - xv) > eps:
            return None
        return cand


def _snap_rational(x, denom_bound: int) -> Optional[CycNum]:
    import mpmath

    q = Fraction(int(mpmath.nint(x * denom_bound)), denom_bound)
    return CycNum(q)
