"""Small dense univariate polynomials over exact fields.

Coefficient lists run from the constant term upward, ``[a0, a1, ..., an]``.
Only what the 4x4 eigenproblem needs is here: division, gcd, the
square-free (Yun) decomposition and exact splitting of low-degree rational
factors into linear and quadratic pieces.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from neutral_ricci.scalars import QuadraticNumber, rational_sqrt


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(trim(p)) - 1


def monic(p):
    p = trim(p)
    lead = p[-1]
    return [c / lead for c in p]


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    return add(p, [-c for c in q])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def divmod_poly(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 1)
    rem = list(p)
    lead = q[-1]
    while len(rem) >= len(q) and rem:
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quot[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem.pop()
        rem = trim(rem)
    return trim(quot), rem


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p) if p else []


def derivative(p):
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def yun(p):
    """Square-free decomposition ``p = lead * prod s_i**i``.

    Returns the list ``[s_1, s_2, ...]`` of monic pairwise coprime
    square-free factors (constant ``[1]`` where a multiplicity is absent).
    """
    p = monic(p)
    if len(p) <= 1:
        return []
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    out = []
    while degree(b) > 0:
        s = gcd(b, d)
        out.append(s)
        b = divmod_poly(b, s)[0]
        c = divmod_poly(d, s)[0]
        d = sub(c, derivative(b))
    while out and degree(out[-1]) == 0:
        out.pop()
    return out


def _integer_primitive(p):
    den = 1
    for c in p:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


def _snap(value: float, lead: int):
    return Fraction(round(value * lead), lead)


def split_rational(p):
    """Split a monic square-free rational polynomial of degree <= 4.

    Returns ``(linear_roots, quadratics, rest)``: rational roots found,
    monic irreducible rational quadratics dividing ``p`` and the leftover
    factor (degree 0, 3 or 4, irreducible over Q unless numerical rounding
    missed a factor, which only costs exactness, not correctness).
    Candidates come from floating point roots and are verified exactly.
    """
    rest = monic(p)
    roots = []
    quads = []
    if degree(rest) <= 0:
        return roots, quads, rest
    ints = _integer_primitive(rest)
    lead = abs(ints[-1])
    num = np.roots([float(c) for c in reversed(rest)])
    for r in num:
        if abs(r.imag) > 1e-7 * max(1.0, abs(r)):
            continue
        cand = _snap(r.real, lead)
        if degree(rest) >= 1 and evaluate(rest, cand) == 0:
            roots.append(cand)
            rest = divmod_poly(rest, [-cand, Fraction(1)])[0]
    if degree(rest) == 2:
        quads.append(rest)
        return roots, quads, [Fraction(1)]
    if degree(rest) == 4:
        num = np.roots([float(c) for c in reversed(rest)])
        idx = range(4)
        for i in idx:
            for j in idx:
                if j <= i:
                    continue
                s = num[i] + num[j]
                pr = num[i] * num[j]
                if abs(s.imag) > 1e-7 * max(1.0, abs(s)) or abs(pr.imag) > 1e-7 * max(1.0, abs(pr)):
                    continue
                f = [_snap(pr.real, lead), _snap(-s.real, lead), Fraction(1)]
                quot, rem = divmod_poly(rest, f)
                if not rem:
                    quads.extend([f, quot])
                    return roots, quads, [Fraction(1)]
    return roots, quads, rest


def quadratic_roots(f):
    """Exact roots of a monic irreducible rational quadratic ``x^2 + b x + c``.

    Returned in descending order (real case) or with positive imaginary
    part first (complex case).
    """
    c, b, _ = f
    disc = b * b - 4 * c
    root = rational_sqrt(disc) if disc >= 0 else None
    if root is not None:
        hi, lo = (-b + root) / 2, (-b - root) / 2
        return [hi, lo]
    half = Fraction(1, 2)
    return [QuadraticNumber(-b / 2, half, disc), QuadraticNumber(-b / 2, -half, disc)]


def sturm_count(p, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]`` (None = infinite)."""
    p = trim(p)
    seq = [p, derivative(p)]
    while degree(seq[-1]) > 0:
        r = divmod_poly(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])

    def changes_at(x):
        vals = []
        for s in seq:
            if x is None:
                vals.append(s[-1])
            elif x == "-inf":
                vals.append(s[-1] * (-1) ** degree(s))
            else:
                vals.append(evaluate(s, x))
        vals = [v for v in vals if v != 0]
        return sum(1 for a, b in zip(vals, vals[1:]) if (a > 0) != (b > 0))

    return changes_at("-inf" if lo is None else lo) - changes_at(hi)
