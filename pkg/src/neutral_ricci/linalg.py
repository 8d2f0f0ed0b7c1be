"""4x4-scale linear algebra, exact over any ordered field or in binary64.

Exact routines work on nested lists whose entries support ``+ - * /`` and
``== 0`` (Fraction, QuadraticNumber).  Float routines use numpy.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from neutral_ricci.scalars import sgn


def zeros(n, m=None):
    m = n if m is None else m
    return [[Fraction(0)] * m for _ in range(n)]


def identity(n):
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = a[i]
        out.append([sum((row[t] * b[t][j] for t in range(k) if row[t] != 0), Fraction(0)) for j in range(m)])
    return out


def matvec(a, v):
    return [sum((a[i][t] * v[t] for t in range(len(v))), Fraction(0)) for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)]


def shift(a, lam):
    """``a - lam * 1``."""
    out = [list(r) for r in a]
    for i in range(len(a)):
        out[i][i] = out[i][i] - lam
    return out


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def trace(a):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def poly_of_matrix(coeffs, a):
    """Evaluate the polynomial ``coeffs`` (constant first) at the matrix ``a``."""
    n = len(a)
    acc = zeros(n)
    for c in reversed(coeffs):
        acc = matmul(acc, a)
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return acc


def rref(a):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in a]
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a):
    """Basis of the right kernel, one vector per free column."""
    m, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    one = Fraction(1)
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = one
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def bilinear(g, u, v):
    return sum((g[i][j] * u[i] * v[j] for i in range(len(u)) for j in range(len(v)) if g[i][j] != 0), Fraction(0))


def gram(g, basis):
    return [[bilinear(g, u, v) for v in basis] for u in basis]


def inertia(sym, sign=sgn):
    """(positive, negative, zero) counts of a symmetric matrix, exactly.

    Symmetric elimination with 1x1 pivots; when the diagonal vanishes a
    congruence first moves a nonzero off-diagonal entry onto it.
    """
    m = [list(r) for r in sym]
    pos = neg = 0
    while m:
        n = len(m)
        k = next((i for i in range(n) if m[i][i] != 0), None)
        if k is not None:
            s = sign(m[k][k])
            pos += s > 0
            neg += s < 0
            piv = m[k][k]
            rest = [i for i in range(n) if i != k]
            m = [[m[i][j] - m[i][k] * m[k][j] / piv for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        # congruence e_i -> e_i + e_j makes the diagonal entry 2 m_ij != 0
        for t in range(n):
            m[i][t] = m[i][t] + m[j][t]
        for t in range(n):
            m[t][i] = m[t][i] + m[t][j]
    zero = len(sym) - pos - neg
    return pos, neg, zero


# -- binary64 ------------------------------------------------------------

def to_float(a):
    return np.array([[complex(x) if not isinstance(x, (int, float, Fraction)) else float(x) for x in row] for row in a])


def nullspace_float(a, rel: float = 1e-9, scale: float | None = None):
    a = np.asarray(a)
    u, s, vh = np.linalg.svd(a)
    ref = scale if scale is not None else (s[0] if s.size else 0.0)
    thresh = rel * max(ref, 1e-300)
    r = int(np.sum(s > thresh))
    return [vh[i].conj() for i in range(r, a.shape[1])]


def rank_float(a, rel: float = 1e-9, scale: float | None = None) -> int:
    a = np.asarray(a)
    return a.shape[1] - len(nullspace_float(a, rel, scale))


def inertia_float(sym, tol: float):
    w = np.linalg.eigvalsh(np.asarray(sym, dtype=float))
    pos = int(np.sum(w > tol))
    neg = int(np.sum(w < -tol))
    return pos, neg, len(w) - pos - neg
