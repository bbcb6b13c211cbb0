"""Small exact linear algebra over any field whose elements support
``+ - * /`` and truthiness (Fraction, CycNum)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence], zero=Fraction(0)) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def nullspace(rows: Sequence[Sequence], zero=Fraction(0), one=Fraction(1)) -> list[list]:
    """Basis of {v : rows * v = 0}, each vector normalized with a 1 at its
    free coordinate."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = rref(rows, zero)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], zero=Fraction(0)) -> list[list]:
    n, m = len(a), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for k, x in enumerate(a[i]):
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            row.append(acc)
        out.append(row)
    return out


def matvec(a: Sequence[Sequence], v: Sequence, zero=Fraction(0)) -> list:
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def inverse(a: Sequence[Sequence], zero=Fraction(0), one=Fraction(1)) -> list[list]:
    n = len(a)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(a)]
    m, pivots = rref(aug, zero)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in m]
