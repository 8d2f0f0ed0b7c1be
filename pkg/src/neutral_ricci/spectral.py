"""Eigen-structure of the mixed matrix C^a_b.

In rational mode every multiple eigenvalue is computed exactly: the
square-free decomposition isolates repeated roots as rational numbers or
roots of rational quadratics, and eigenspaces are kernels over Q or
Q(sqrt d).  Only simple roots of an irreducible cubic or quartic factor are
handled in binary64; such an eigenvalue has a one-dimensional eigenspace
and q = 1 automatically, so only the causal sign of its eigenvector is
numerical (and that vector is provably non-null).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from neutral_ricci import linalg
from neutral_ricci import polynomial as poly
from neutral_ricci.errors import InconsistentPattern, NoAnnihilation, TraceViolation, ValidationError
from neutral_ricci.frame import CovariantTensor, Tetrad, metric
from neutral_ricci.quartic import DepressedQuartic, RootPattern, Signs, classify_real
from neutral_ricci.scalars import QuadraticNumber, is_exact

CAUSAL_CLASSES = ("s", "t", "n", "ns", "nt", "nst", "complex")


@dataclass(frozen=True)
class MixedMatrix:
    rows: tuple
    tetrad: Tetrad = Tetrad.NULL

    @property
    def exact(self) -> bool:
        return all(is_exact(x) for r in self.rows for x in r)

    def as_lists(self):
        return [list(r) for r in self.rows]

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.rows])

    def trace(self):
        return sum(self.rows[i][i] for i in range(4))


def mixed(C: CovariantTensor, tol: float = 1e-9) -> MixedMatrix:
    """M = g^{-1} C (the constant metric tables are self-inverse)."""
    C.check_symmetric(tol)
    tr = C.trace()
    if C.exact:
        if tr != 0:
            raise TraceViolation(f"g^ab C_ab = {tr} != 0", stage="spectral")
    elif abs(tr) > tol * max(C.max_abs(), 1e-300) * 4:
        raise TraceViolation(f"g^ab C_ab = {tr!r} exceeds tolerance", stage="spectral")
    g = metric(C.tetrad)
    rows = [[sum(g[a][c] * C.components[c][b] for c in range(4) if g[a][c] != 0) for b in range(4)] for a in range(4)]
    if not C.exact:
        rows = [[float(x) for x in r] for r in rows]
    return MixedMatrix(tuple(tuple(r) for r in rows), C.tetrad)


# -- characteristic coefficients ----------------------------------------

def _det(a):
    n = len(a)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = 0
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        total += (-1) ** j * a[0][j] * _det(minor)
    return total


def _elementary_minors(m):
    """e_k = sum of k x k principal minors (the antisymmetrised products)."""
    out = []
    for k in range(1, 5):
        s = 0
        for idx in itertools.combinations(range(4), k):
            s += _det([[m[i][j] for j in idx] for i in idx])
        out.append(s)
    return out


def _elementary_newton(m):
    """e_k from power sums p_k = tr M^k through Newton's identities."""
    powers = [m]
    for _ in range(3):
        powers.append(linalg.matmul(powers[-1], m) if is_exact(m[0][0]) else (np.array(powers[-1]) @ np.array(m)).tolist())
    p = [sum(pw[i][i] for i in range(4)) for pw in powers]
    e1 = p[0]
    e2 = (e1 * p[0] - p[1]) / 2
    e3 = (e2 * p[0] - e1 * p[1] + p[2]) / 3
    e4 = (e3 * p[0] - e2 * p[1] + e1 * p[2] - p[3]) / 4
    return [e1, e2, e3, e4]


def char_coeffs(M: MixedMatrix, route: str = "both", tol: float = 1e-9) -> DepressedQuartic:
    """det(x - M) = x^4 + c2 x^2 - c3 x + c4 for traceless M.

    ``route`` is 'minors', 'newton' or 'both'; with 'both' the two results
    are compared (exactly in rational mode) and a mismatch raises.
    """
    m = M.as_lists()
    if route not in ("minors", "newton", "both"):
        raise ValueError(route)
    ea = _elementary_minors(m) if route in ("minors", "both") else None
    eb = _elementary_newton(m) if route in ("newton", "both") else None
    e = ea if ea is not None else eb
    if ea is not None and eb is not None:
        if M.exact:
            if ea != eb:
                raise InconsistentPattern("characteristic coefficient routes disagree", stage="spectral")
        else:
            scale = max(1.0, float(np.max(np.abs(M.to_float()))))
            for k, (x, y) in enumerate(zip(ea, eb), start=1):
                if abs(x - y) > 1e-8 * scale ** k:
                    raise InconsistentPattern("characteristic coefficient routes disagree", stage="spectral")
    if M.exact:
        if e[0] != 0:
            raise TraceViolation("mixed matrix is not traceless", stage="spectral")
        return DepressedQuartic(e[1], e[2], e[3])
    return DepressedQuartic(float(e[1]), float(e[2]), float(e[3]))


# -- reports ------------------------------------------------------------

@dataclass(frozen=True)
class EigenEntry:
    value: object  # Fraction, QuadraticNumber, float or complex
    multiplicity: int
    basis: tuple
    causal: str
    q: int
    exact: bool = True
    factor: tuple | None = None  # rational minimal factor, constant first

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_real(self) -> bool:
        return self.causal != "complex"

    def approx(self) -> complex:
        return complex(self.value)


@dataclass(frozen=True)
class EigenReport:
    entries: tuple
    exact: bool
    warnings: tuple = field(default_factory=tuple)

    @property
    def v(self) -> int:
        return sum(e.dim for e in self.entries)

    @property
    def q_list(self):
        return tuple(e.q for e in self.entries)

    def weighted_sum(self):
        return sum(e.multiplicity * e.value for e in self.entries)


def causal_from_inertia(pos: int, neg: int, zero: int) -> str:
    if pos and neg:
        return "nst"
    if pos:
        return "s" if zero == 0 else "ns"
    if neg:
        return "t" if zero == 0 else "nt"
    return "n"


def eigenspace_causal_class(basis, tetrad=Tetrad.NULL, tol: float = 1e-9) -> str:
    """Signature of the metric restricted to span(basis) mapped to s/t/n/ns/nt/nst."""
    if not basis:
        raise ValidationError("empty eigenspace", stage="spectral")
    g = metric(tetrad)
    if all(is_exact(x) for v in basis for x in v):
        return causal_from_inertia(*linalg.inertia(linalg.gram(g, basis)))
    b = np.array([[complex(x) for x in v] for v in basis])
    if np.max(np.abs(b.imag)) > 1e-12 * max(1.0, np.max(np.abs(b.real))):
        return "complex"
    b = b.real
    q, _ = np.linalg.qr(b.T)
    gf = np.array([[float(x) for x in r] for r in g])
    gram = q.T @ gf @ q
    return causal_from_inertia(*linalg.inertia_float(gram, tol))


def _order_key(entry):
    z = entry.approx()
    return (-entry.multiplicity, -z.real, -z.imag)


def _exact_entry(m, value, mult, factor, g):
    a = linalg.shift(m, value)
    basis = linalg.nullspace(a)
    dim = len(basis)
    if not 1 <= dim <= mult:
        raise InconsistentPattern(f"eigenvalue {value} has eigenspace dimension {dim} (multiplicity {mult})",
                                  stage="spectral")
    if isinstance(value, QuadraticNumber) and not value.is_real:
        causal = "complex"
    else:
        causal = causal_from_inertia(*linalg.inertia(linalg.gram(g, basis)))
    q = 1
    if dim < mult:
        power = a
        while True:
            q += 1
            power = linalg.matmul(power, a)
            if 4 - linalg.rank(power) == mult:
                break
            if q > mult:
                raise InconsistentPattern("kernel chain does not stabilise at the multiplicity", stage="spectral")
    return EigenEntry(value, mult, tuple(basis), causal, q, True, tuple(factor))


def _numeric_simple_entries(m, factor, gmat, warnings, tol):
    mf = np.array([[float(x) for x in r] for r in m])
    roots = np.roots([float(c) for c in reversed(factor)])
    out = []
    scale = max(1.0, float(np.max(np.abs(mf))))
    for r in roots:
        # polish against the exact factor
        for _ in range(3):
            f = sum(float(c) * r ** i for i, c in enumerate(factor))
            df = sum(i * float(c) * r ** (i - 1) for i, c in enumerate(factor) if i)
            if df == 0:
                break
            r = r - f / df
        if abs(r.imag) <= 1e-12 * max(1.0, abs(r)):
            val = float(r.real)
            ns = linalg.nullspace_float(mf - val * np.eye(4), 1e-9)
            v = ns[-1].real if ns else np.linalg.svd(mf - val * np.eye(4))[2][-1]
            v = v / np.linalg.norm(v)
            nrm = float(v @ gmat @ v)
            if abs(nrm) <= 10 * tol * scale:
                warnings.append(f"eigenvector norm for {val!r} is boundary-proximate")
            causal = "s" if nrm > 0 else "t"
            out.append(EigenEntry(val, 1, (tuple(v),), causal, 1, False, tuple(factor)))
        else:
            val = complex(r)
            ns = linalg.nullspace_float(mf.astype(complex) - val * np.eye(4), 1e-9)
            v = ns[-1] if ns else np.linalg.svd(mf - val * np.eye(4))[2][-1].conj()
            out.append(EigenEntry(val, 1, (tuple(v),), "complex", 1, False, tuple(factor)))
    return out


def _eigen_exact(M: MixedMatrix, tol: float) -> EigenReport:
    m = M.as_lists()
    cq = char_coeffs(M, route="newton")
    parts = poly.yun([Fraction(c) for c in cq.coefficients()])
    entries = []
    warnings = []
    g = metric(M.tetrad)
    gmat = np.array([[float(x) for x in r] for r in g])
    for mult, s in enumerate(parts, start=1):
        if poly.degree(s) <= 0:
            continue
        roots, quads, rest = poly.split_rational(s)
        for r in roots:
            entries.append(_exact_entry(m, r, mult, (-r, Fraction(1)), g))
        for f in quads:
            for r in poly.quadratic_roots(f):
                fac = (-r, Fraction(1)) if isinstance(r, Fraction) else tuple(f)
                entries.append(_exact_entry(m, r, mult, fac, g))
        if poly.degree(rest) > 0:
            if mult != 1:  # pragma: no cover - repeated factors have degree <= 2
                raise InconsistentPattern("irreducible repeated factor of high degree", stage="spectral")
            entries.extend(_numeric_simple_entries(m, rest, gmat, warnings, tol))
    entries.sort(key=_order_key)
    return EigenReport(tuple(entries), all(e.exact for e in entries), tuple(warnings))


def _group_roots(roots, pattern: RootPattern):
    """Assign 4 numeric roots to the clusters dictated by ``pattern``."""
    shape = pattern.shape
    sizes = [m for m, _ in shape]
    best = None
    for perm in itertools.permutations(range(4)):
        groups, pos = [], 0
        for s in sizes:
            groups.append([roots[i] for i in perm[pos:pos + s]])
            pos += s
        cost = 0.0
        for (m, kind), g in zip(shape, groups):
            centre = sum(g) / len(g)
            cost = max(cost, max(abs(x - centre) for x in g))
            if kind == "R":
                cost = max(cost, abs(centre.imag))
        if best is None or cost < best[0]:
            best = (cost, groups)
    out = []
    for (m, kind), g in zip(shape, best[1]):
        c = sum(g) / len(g)
        out.append((c.real if kind == "R" else c, m, kind))
    # make conjugate partners exact mirrors
    fixed = []
    for c, m, kind in out:
        if kind == "Z":
            partner = min((d for d, k, kk in out if kk == "Z" and k == m and d is not c),
                          key=lambda d: abs(d - np.conj(c)), default=None)
            if partner is not None:
                avg = (c + np.conj(partner)) / 2
                c = complex(avg)
        fixed.append((c, m, kind))
    return fixed


def _eigen_float(M: MixedMatrix, pattern: RootPattern | None, tol: float) -> EigenReport:
    mf = M.to_float()
    scale = float(np.max(np.abs(mf))) or 1.0
    mn = mf / scale
    warnings = []
    cq = char_coeffs(MixedMatrix(tuple(tuple(r) for r in mn.tolist()), M.tetrad), tol=tol)
    if pattern is None:
        signs = Signs(tol=tol, scale=max(cq.root_scale(), 1e-300))
        pattern = classify_real(cq, signs)
        warnings.extend(f"{n} is boundary-proximate" for n in signs.near)
    roots = [complex(r) for r in np.roots([1.0, 0.0, cq.c2, -cq.c3, cq.c4])]
    groups = _group_roots(roots, pattern)
    entries = []
    for c, mult, kind in groups:
        a = mn - c * np.eye(4)
        ns = linalg.nullspace_float(a, 1e-9, scale=max(1.0, float(np.linalg.norm(mn, 2))))
        dim = len(ns)
        if dim == 0:
            ns = [np.linalg.svd(a)[2][-1].conj()]
            dim = 1
            warnings.append("eigenspace recovered from smallest singular vector")
        if dim > mult:
            raise InconsistentPattern(f"eigenspace of dimension {dim} exceeds multiplicity {mult}", stage="spectral")
        if kind == "R":
            basis = [np.real(v) for v in ns]
            causal = eigenspace_causal_class([tuple(v) for v in basis], M.tetrad, tol)
        else:
            basis = ns
            causal = "complex"
        q, power = 1, a
        while 4 - linalg.rank_float(power, 1e-9) < mult:
            q += 1
            power = power @ a
            if q > mult:
                raise InconsistentPattern("kernel chain does not stabilise", stage="spectral")
        value = c * scale if kind == "Z" else float(c) * scale
        entries.append(EigenEntry(value, mult, tuple(tuple(v) for v in basis), causal, q, False, None))
    entries.sort(key=_order_key)
    return EigenReport(tuple(entries), False, tuple(warnings))


def eigen_structure(M: MixedMatrix, pattern: RootPattern | None = None, tol: float = 1e-9) -> EigenReport:
    """Eigenvalues, eigenspaces, causal classes and q exponents of M.

    In rational mode the exact square-free split fixes multiplicities; when
    ``pattern`` is supplied it must agree.  In float mode the pattern (from
    the invariant chain) dictates how numeric roots are grouped.
    """
    if M.exact:
        rep = _eigen_exact(M, tol)
        if pattern is not None:
            shape = tuple(sorted(((e.multiplicity, "R" if e.causal != "complex" else "Z") for e in rep.entries),
                                 key=lambda t: (-t[0], t[1])))
            if shape != pattern.shape:
                raise InconsistentPattern(f"eigenvalues {shape} contradict root pattern {pattern.value}",
                                          stage="spectral")
        return rep
    return _eigen_float(M, pattern, tol)


def kernel_chain(M: MixedMatrix, value, upto: int = 4):
    """dim ker (M - value)^k for k = 1..upto."""
    if M.exact and is_exact(value):
        a = linalg.shift(M.as_lists(), value)
        power, dims = a, []
        for _ in range(upto):
            dims.append(4 - linalg.rank(power))
            power = linalg.matmul(power, a)
        return dims
    a = M.to_float() - complex(value) * np.eye(4)
    power, dims = a, []
    for _ in range(upto):
        dims.append(4 - linalg.rank_float(power, 1e-9))
        power = power @ a
    return dims


def minimal_exponents(M: MixedMatrix, report: EigenReport, tol: float = 1e-7):
    """Smallest exponents (q_1..q_N) with prod (M - E_i)^{q_i} = 0.

    Eigenvalues are grouped into their rational minimal factors (a conjugate
    pair shares one quadratic factor and one exponent).  Candidate tuples
    are tried in order of total degree, then lexicographically.
    """
    groups = []  # (factor, multiplicity, [entry indices])
    for i, e in enumerate(report.entries):
        key = e.factor
        for g in groups:
            if key is not None and g[0] == key and g[1] == e.multiplicity:
                g[2].append(i)
                break
        else:
            groups.append((key, e.multiplicity, [i]))
    exact = M.exact and all(g[0] is not None for g in groups)
    m = M.as_lists()
    if exact:
        mats = [linalg.poly_of_matrix([Fraction(c) if not isinstance(c, QuadraticNumber) else c for c in g[0]], m)
                for g in groups]
    else:
        mf = M.to_float().astype(complex)
        mats = []
        for g in groups:
            prod = np.eye(4, dtype=complex)
            for i in g[2]:
                prod = prod @ (mf - report.entries[i].approx() * np.eye(4))
            mats.append(prod)
        scale = max(1.0, float(np.linalg.norm(mf, 2)))
    degs = [len(g[2]) if not exact else len(g[0]) - 1 for g in groups]
    ranges = [range(1, g[1] + 1) for g in groups]
    cands = sorted(itertools.product(*ranges), key=lambda t: (sum(q * d for q, d in zip(t, degs)), t))
    for t in cands:
        if exact:
            acc = linalg.identity(4)
            for mat, q in zip(mats, t):
                for _ in range(q):
                    acc = linalg.matmul(acc, mat)
            ok = linalg.is_zero_matrix(acc)
        else:
            acc = np.eye(4, dtype=complex)
            for mat, q in zip(mats, t):
                acc = acc @ np.linalg.matrix_power(mat, q)
            deg = sum(q * d for q, d in zip(t, degs))
            ok = float(np.max(np.abs(acc))) <= tol * scale ** deg
        if ok:
            out = [0] * len(report.entries)
            for g, q in zip(groups, t):
                for i in g[2]:
                    out[i] = q
            return tuple(out)
    raise NoAnnihilation("no exponent tuple annihilates the mixed matrix", stage="spectral")


__all__ = [
    "MixedMatrix",
    "EigenEntry",
    "EigenReport",
    "mixed",
    "char_coeffs",
    "eigen_structure",
    "minimal_exponents",
    "eigenspace_causal_class",
    "kernel_chain",
    "causal_from_inertia",
]
