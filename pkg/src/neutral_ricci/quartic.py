"""Root-multiplicity patterns of depressed quartics.

A depressed quartic is stored through the three coefficients of

    W(x) = x^4 + c2 x^2 - c3 x + c4

The pattern of its roots is read off from sign conditions on a handful of
polynomial invariants, exactly for rational (or Gaussian rational) input and
with weighted tolerances for floats.  ``roots_oracle`` is an independent
numerical check used by the test-suite and the self-test.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from neutral_ricci.scalars import QuadraticNumber, is_exact, sgn


class RootPattern(enum.Enum):
    # real coefficients
    R1R2R3R4 = "R1R2R3R4"
    R1R2ZZbar = "R1R2ZZbar"
    Z1Z1barZ2Z2bar = "Z1Z1barZ2Z2bar"
    R1R2R3_2 = "R1R2R3^2"
    R_2ZZbar = "R^2ZZbar"
    R1_2R2_2 = "R1^2R2^2"
    Z_2Zbar_2 = "Z^2Zbar^2"
    R1R2_3 = "R1R2^3"
    R_4 = "R^4"
    # complex coefficients
    Z1Z2Z3Z4 = "Z1Z2Z3Z4"
    Z1Z2Z3_2 = "Z1Z2Z3^2"
    Z1_2Z2_2 = "Z1^2Z2^2"
    Z1Z2_3 = "Z1Z2^3"
    Z_4 = "Z^4"

    @property
    def shape(self):
        """Tuple of (multiplicity, 'R'|'Z'|'C') sorted by multiplicity, descending."""
        return _SHAPES[self]

    @property
    def multiplicities(self):
        return tuple(m for m, _ in self.shape)

    @property
    def is_complex_mode(self) -> bool:
        return self in _COMPLEX


_SHAPES = {
    RootPattern.R1R2R3R4: ((1, "R"),) * 4,
    RootPattern.R1R2ZZbar: ((1, "R"), (1, "R"), (1, "Z"), (1, "Z")),
    RootPattern.Z1Z1barZ2Z2bar: ((1, "Z"),) * 4,
    RootPattern.R1R2R3_2: ((2, "R"), (1, "R"), (1, "R")),
    RootPattern.R_2ZZbar: ((2, "R"), (1, "Z"), (1, "Z")),
    RootPattern.R1_2R2_2: ((2, "R"), (2, "R")),
    RootPattern.Z_2Zbar_2: ((2, "Z"), (2, "Z")),
    RootPattern.R1R2_3: ((3, "R"), (1, "R")),
    RootPattern.R_4: ((4, "R"),),
    RootPattern.Z1Z2Z3Z4: ((1, "C"),) * 4,
    RootPattern.Z1Z2Z3_2: ((2, "C"), (1, "C"), (1, "C")),
    RootPattern.Z1_2Z2_2: ((2, "C"), (2, "C")),
    RootPattern.Z1Z2_3: ((3, "C"), (1, "C")),
    RootPattern.Z_4: ((4, "C"),),
}
_COMPLEX = {
    RootPattern.Z1Z2Z3Z4,
    RootPattern.Z1Z2Z3_2,
    RootPattern.Z1_2Z2_2,
    RootPattern.Z1Z2_3,
    RootPattern.Z_4,
}


@dataclass(frozen=True)
class DepressedQuartic:
    c2: object
    c3: object
    c4: object

    def __post_init__(self):
        # plain ints would turn into floats under true division downstream
        for name in ("c2", "c3", "c4"):
            v = getattr(self, name)
            if isinstance(v, int) and not isinstance(v, bool):
                object.__setattr__(self, name, Fraction(v))

    def coefficients(self):
        """Coefficients of W, constant term first."""
        return [self.c4, -self.c3, self.c2, 0 * self.c2, 1]

    def __call__(self, x):
        return x ** 4 + self.c2 * x * x - self.c3 * x + self.c4

    @property
    def exact(self) -> bool:
        return all(is_exact(c) for c in (self.c2, self.c3, self.c4))

    def negated(self):
        """Quartic whose roots are the negatives of these."""
        return DepressedQuartic(self.c2, -self.c3, self.c4)

    def root_scale(self) -> float:
        """Typical root magnitude, used to scale tolerances."""
        vals = [abs(complex(self.c2)) ** 0.5, abs(complex(self.c3)) ** (1 / 3), abs(complex(self.c4)) ** 0.25]
        return max(vals)


@dataclass(frozen=True)
class QuarticInvariants:
    J: object
    I: object
    K: object
    L: object
    N: object
    P: object
    Delta: object

    def as_dict(self):
        return {"J": self.J, "I": self.I, "K": self.K, "L": self.L, "N": self.N, "P": self.P, "Delta": self.Delta}


# weight of each quantity as a homogeneous polynomial in the roots
WEIGHTS = {"c2": 2, "c3": 3, "c4": 4, "J": 6, "I": 4, "K": 3, "L": 2, "N": 4, "P": 6, "Delta": 12}


def invariants(q: DepressedQuartic) -> QuarticInvariants:
    c2, c3, c4 = q.c2, q.c3, q.c4
    if q.exact:
        third = Fraction(1, 3)
        one = Fraction(1)
    else:
        third = 1 / 3
        one = 1.0
    J = -(one / 8) * (c3 * c3 / 2 - 4 * third * c2 * c4 + c2 * c2 * c2 / 27)
    I = c4 + c2 * c2 / 12
    K = c3 / 4
    L = c2 / 6
    N = c2 * c2 / 4 - c4
    P = -9 * c3 * c3 - 2 * c2 * (c2 * c2 - 4 * c4)
    Delta = 256 * (I * I * I - 27 * J * J)
    return QuarticInvariants(J=J, I=I, K=K, L=L, N=N, P=P, Delta=Delta)


class Signs:
    """Sign oracle for invariant tests.

    Exact scalars get their true sign.  Floats are compared with
    ``tol * scale**weight``; anything within ten times that band is recorded
    in ``near`` so callers can flag the result as boundary-proximate.
    """

    def __init__(self, tol: float = 1e-9, scale: float = 1.0):
        self.tol = tol
        self.scale = max(scale, 1e-300)
        self.near: list[str] = []

    def band(self, name: str) -> float:
        return self.tol * self.scale ** WEIGHTS.get(name, 0)

    def sign(self, name: str, value) -> int:
        if is_exact(value):
            return sgn(value)
        b = self.band(name)
        v = float(value)
        if abs(v) <= 10 * b and name not in self.near:
            self.near.append(name)
        if abs(v) <= b:
            return 0
        return 1 if v > 0 else -1

    def zero(self, name: str, value) -> bool:
        if isinstance(value, QuadraticNumber):
            return value == 0
        if is_exact(value):
            return value == 0
        b = self.band(name)
        v = abs(complex(value))
        if v <= 10 * b and name not in self.near:
            self.near.append(name)
        return v <= b


def _signs_for(q: DepressedQuartic, signs, tol):
    if signs is not None:
        return signs
    return Signs(tol=tol, scale=1.0 if q.exact else q.root_scale())


def classify_real(q: DepressedQuartic, signs: Signs | None = None, tol: float = 1e-9) -> RootPattern:
    """Root pattern of a real depressed quartic from invariant signs."""
    s = _signs_for(q, signs, tol)
    inv = invariants(q)
    d = s.sign("Delta", inv.Delta)
    if d < 0:
        return RootPattern.R1R2ZZbar
    if d > 0:
        if s.sign("L", inv.L) < 0 and s.sign("N", inv.N) > 0:
            return RootPattern.R1R2R3R4
        return RootPattern.Z1Z1barZ2Z2bar
    i_zero = s.sign("I", inv.I) == 0
    j_sign = s.sign("J", inv.J)
    k_zero = s.sign("K", inv.K) == 0
    n_zero = s.sign("N", inv.N) == 0
    if i_zero and j_sign == 0:
        if not n_zero and not k_zero:
            return RootPattern.R1R2_3
        return RootPattern.R_4
    if k_zero and n_zero:
        if j_sign < 0:
            return RootPattern.R1_2R2_2
        if j_sign > 0:
            return RootPattern.Z_2Zbar_2
    p = s.sign("P", inv.P)
    if p > 0:
        return RootPattern.R1R2R3_2
    if p < 0:
        return RootPattern.R_2ZZbar
    # not reachable for exact real input: P = 0 with Delta = 0 forces the
    # triple or double-double strata handled above
    s.near.append("P")
    return _pattern_from_oracle(q, real=True)


def classify_complex(q: DepressedQuartic, signs: Signs | None = None, tol: float = 1e-9) -> RootPattern:
    """Root pattern over C; coefficients may be complex."""
    s = _signs_for(q, signs, tol)
    inv = invariants(q)
    if not s.zero("Delta", inv.Delta):
        return RootPattern.Z1Z2Z3Z4
    if s.zero("I", inv.I) and s.zero("J", inv.J):
        if s.zero("L", inv.L):
            return RootPattern.Z_4
        return RootPattern.Z1Z2_3
    if s.zero("P", inv.P):
        return RootPattern.Z1_2Z2_2
    return RootPattern.Z1Z2Z3_2


# -- numerical oracle ----------------------------------------------------

@dataclass(frozen=True)
class OracleResult:
    roots: tuple
    clusters: tuple  # (centre, multiplicity)
    pattern: RootPattern | None
    complex_pattern: RootPattern | None
    confident: bool
    escalated: bool = False
    notes: tuple = field(default_factory=tuple)


def _cluster(roots, tight: float, loose: float):
    """Single-link clustering at ``tight``; confidence fails if any
    inter-cluster gap falls below ``loose``."""
    n = len(roots)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(n), 2):
        if abs(roots[i] - roots[j]) <= tight:
            parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(roots[i])
    clusters = [(sum(g) / len(g), len(g)) for g in groups.values()]
    confident = True
    for (a, _), (b, _) in itertools.combinations(clusters, 2):
        if abs(a - b) <= loose:
            confident = False
    return clusters, confident


def _patterns_from_clusters(clusters, imag_tol):
    mults = sorted((m for _, m in clusters), reverse=True)
    cpat = {
        (1, 1, 1, 1): RootPattern.Z1Z2Z3Z4,
        (2, 1, 1): RootPattern.Z1Z2Z3_2,
        (2, 2): RootPattern.Z1_2Z2_2,
        (3, 1): RootPattern.Z1Z2_3,
        (4,): RootPattern.Z_4,
    }.get(tuple(mults))
    shape = sorted(((m, "R" if abs(c.imag) <= imag_tol else "Z") for c, m in clusters), key=lambda t: (-t[0], t[1]))
    rpat = None
    for pat in RootPattern:
        if not pat.is_complex_mode and tuple(shape) == pat.shape:
            rpat = pat
    # conjugate closure: every non-real cluster needs a partner
    ok = True
    for c, m in clusters:
        if abs(c.imag) > imag_tol:
            if not any(abs(c.conjugate() - d) <= 10 * imag_tol and m == k for d, k in clusters):
                ok = False
    return (rpat if ok else None), cpat


def roots_oracle(q: DepressedQuartic, rel_tight: float = 1e-5, rel_loose: float = 1e-3) -> OracleResult:
    """Numerical roots of W clustered into multiplicities.

    Companion-matrix eigenvalues in binary64 first.  Every cluster that
    claims a repeated root is then confirmed at 60 digits (Newton on the
    derivative that should have a simple root there, then the lower
    derivatives must vanish).  If a claim fails or the clusters sit too
    close together, the roots are recomputed from a 60-digit companion
    eigensolve and re-clustered with much tighter thresholds.
    """
    coeffs = [1.0, 0.0, float(q.c2), -float(q.c3), float(q.c4)]
    scale = max(1.0, max(abs(c) ** (1.0 / k) for k, c in zip(range(1, 5), coeffs[1:])))
    roots = [complex(r) for r in np.roots(coeffs)]
    clusters, confident = _cluster(roots, rel_tight * scale, rel_loose * scale)
    rpat, cpat = _patterns_from_clusters(clusters, rel_tight * scale)
    if confident and rpat is not None and cpat is not None:
        repeated = [(c, m) for c, m in clusters if m > 1]
        if not repeated:
            return OracleResult(tuple(roots), tuple(clusters), rpat, cpat, True)
        if all(_confirm_multiple(q, c, m, scale) for c, m in repeated):
            return OracleResult(tuple(roots), tuple(clusters), rpat, cpat, True, escalated=True,
                                notes=("repeated roots confirmed at 60 digits",))
    return _escalate(q, scale)


_MP_DPS = 60


def _mp_coeffs(q: DepressedQuartic):
    out = []
    for c in (q.c4, -q.c3, q.c2, 0, 1):
        if isinstance(c, Fraction):
            out.append(mpmath.mpf(c.numerator) / c.denominator)
        elif isinstance(c, complex):
            out.append(mpmath.mpc(c))
        else:
            out.append(mpmath.mpf(c))
    return out  # constant first


def _mp_derivative(cs, k):
    out = list(cs)
    for _ in range(k):
        out = [i * out[i] for i in range(1, len(out))]
    return out


def _mp_eval(cs, x):
    acc = mpmath.mpf(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _confirm_multiple(q: DepressedQuartic, centre: complex, m: int, scale: float) -> bool:
    """True when W has a root of multiplicity >= m near ``centre``."""
    with mpmath.workdps(_MP_DPS):
        cs = _mp_coeffs(q)
        f = _mp_derivative(cs, m - 1)
        df = _mp_derivative(cs, m)
        x = mpmath.mpc(centre) if abs(centre.imag) > 0 else mpmath.mpf(centre.real)
        for _ in range(60):
            d = _mp_eval(df, x)
            if d == 0:
                return False
            step = _mp_eval(f, x) / d
            x -= step
            if abs(step) <= mpmath.mpf(10) ** (-_MP_DPS + 5) * scale:
                break
        if abs(x - centre) > 1e-3 * scale:
            return False
        band = mpmath.mpf(10) ** (-_MP_DPS // 2)
        return all(abs(_mp_eval(_mp_derivative(cs, k), x)) <= band * mpmath.mpf(scale) ** (4 - k)
                   for k in range(m - 1))


def _escalate(q: DepressedQuartic, scale: float) -> OracleResult:
    with mpmath.workdps(_MP_DPS):
        cs = _mp_coeffs(q)
        comp = mpmath.zeros(4)
        for i in range(1, 4):
            comp[i, i - 1] = 1
        for j in range(4):
            comp[j, 3] = -cs[j]
        hi = [mpmath.mpc(r) for r in mpmath.eig(comp, left=False, right=False)]
        roots = [complex(r) for r in hi]
        # a triple root comes back to about 10^-20; distinct roots are trusted above 10^-8
        tight = mpmath.mpf(10) ** -15 * scale
        loose = mpmath.mpf(10) ** -8 * scale
        clusters_hi, confident = _cluster(hi, tight, loose)
        clusters = [(complex(c), m) for c, m in clusters_hi]
        rpat, cpat = _patterns_from_clusters(clusters_hi, tight)
    return OracleResult(tuple(roots), tuple(clusters), rpat, cpat,
                        confident and rpat is not None, escalated=True, notes=("60-digit eigensolve",))


def _pattern_from_oracle(q: DepressedQuartic, real: bool) -> RootPattern:
    res = roots_oracle(q)
    pat = res.pattern if real else res.complex_pattern
    if pat is None:  # pragma: no cover - defensive
        raise ArithmeticError("root oracle could not settle the pattern")
    return pat


def discriminant_from_roots(roots) -> complex:
    out = 1.0 + 0j
    for a, b in itertools.combinations(roots, 2):
        out *= (a - b) ** 2
    return out


# -- exact route, independent of the invariant chain ---------------------

def exact_pattern(q: DepressedQuartic) -> RootPattern:
    """Real root pattern from square-free decomposition and Sturm counts.

    Shares no code with ``classify_real``; used to cross-check it.
    """
    from neutral_ricci import polynomial as poly

    p = [Fraction(c) for c in q.coefficients()]
    parts = poly.yun(p)
    shape = []
    for mult, s in enumerate(parts, start=1):
        deg = poly.degree(s)
        if deg <= 0:
            continue
        real = poly.sturm_count(s)
        shape += [(mult, "R")] * real + [(mult, "Z")] * (deg - real)
    shape = tuple(sorted(shape, key=lambda t: (-t[0], t[1])))
    for pat in RootPattern:
        if not pat.is_complex_mode and pat.shape == shape:
            return pat
    raise ArithmeticError(f"unexpected root shape {shape}")  # pragma: no cover


def depress(coeffs) -> DepressedQuartic:
    """Depress a quartic given as ``[a0, a1, a2, a3, a4]`` (a4 != 0).

    Substitutes ``x = z + a3/(4 a4)`` after making the quartic monic; the
    roots shift by a common constant, so the pattern is unchanged.
    """
    a0, a1, a2, a3, a4 = coeffs
    a, b, c, d = a3 / a4, a2 / a4, a1 / a4, a0 / a4
    p = b - 3 * a * a / 8
    qq = c - a * b / 2 + a * a * a / 8
    r = d - a * c / 4 + a * a * b / 16 - 3 * a ** 4 / 256
    return DepressedQuartic(p, -qq, r)


__all__ = [
    "DepressedQuartic",
    "QuarticInvariants",
    "RootPattern",
    "Signs",
    "invariants",
    "classify_real",
    "classify_complex",
    "roots_oracle",
    "exact_pattern",
    "depress",
    "discriminant_from_roots",
    "OracleResult",
]
