"""Metric, tetrads, the spin-tetrad dictionary and causal typing.

Null tetrad:        ds^2 = 2 e1 e2 + 2 e3 e4
Orthonormal tetrad: ds^2 = (E1)^2 + (E2)^2 - (E3)^2 - (E4)^2

with  sqrt2 E1 = e1 + e2,  sqrt2 E2 = e3 + e4,  sqrt2 E3 = e1 - e2,
sqrt2 E4 = e3 - e4.  Tensors are stored covariantly, vectors
contravariantly.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from neutral_ricci.errors import AsymmetryViolation, ValidationError
from neutral_ricci.scalars import Mode, detect_mode, is_exact, parse_scalar

_0, _1 = Fraction(0), Fraction(1)


class Tetrad(enum.Enum):
    NULL = "null"
    ORTHONORMAL = "orthonormal"

    @classmethod
    def parse(cls, value):
        if isinstance(value, Tetrad):
            return value
        return cls(str(value).lower())


NULL_METRIC = (
    (_0, _1, _0, _0),
    (_1, _0, _0, _0),
    (_0, _0, _0, _1),
    (_0, _0, _1, _0),
)
ORTHONORMAL_METRIC = (
    (_1, _0, _0, _0),
    (_0, _1, _0, _0),
    (_0, _0, -_1, _0),
    (_0, _0, _0, -_1),
)


def metric(tetrad: Tetrad):
    """Constant component table g_ab (equal to its own inverse)."""
    return NULL_METRIC if Tetrad.parse(tetrad) is Tetrad.NULL else ORTHONORMAL_METRIC


# sqrt2 * (orthonormal covectors) = FRAME_A^T (null covectors), i.e. row a' of
# FRAME_A^T lists the null components of sqrt2 E^{a'}.
FRAME_A = (
    (_1, _0, _1, _0),
    (_1, _0, -_1, _0),
    (_0, _1, _0, _1),
    (_0, _1, _0, -_1),
)


def _mm(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _tr(a):
    return [list(r) for r in zip(*a)]


@dataclass(frozen=True)
class CovariantTensor:
    """Components C_ab of a symmetric rank-2 tensor in a fixed tetrad."""

    components: tuple
    tetrad: Tetrad = Tetrad.NULL
    label: str | None = None

    @classmethod
    def from_rows(cls, rows, tetrad=Tetrad.NULL, label=None, tol: float = 1e-9, check: bool = True):
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValidationError("components must be a 4x4 table", stage="input")
        vals = [[parse_scalar(x) for x in r] for r in rows]
        mode = detect_mode(x for r in vals for x in r)
        if mode is Mode.FLOAT:
            vals = [[float(x) for x in r] for r in vals]
        t = cls(tuple(tuple(r) for r in vals), Tetrad.parse(tetrad), label)
        if check:
            t.check_symmetric(tol)
        return t

    @classmethod
    def zero(cls, tetrad=Tetrad.NULL):
        return cls(tuple((_0,) * 4 for _ in range(4)), Tetrad.parse(tetrad))

    @property
    def mode(self) -> Mode:
        return Mode.RATIONAL if all(is_exact(x) for r in self.components for x in r) else Mode.FLOAT

    @property
    def exact(self) -> bool:
        return self.mode is Mode.RATIONAL

    def rows(self):
        return [list(r) for r in self.components]

    def __getitem__(self, ij):
        i, j = ij
        return self.components[i][j]

    def max_abs(self) -> float:
        return max(abs(float(x)) for r in self.components for x in r)

    def check_symmetric(self, tol: float = 1e-9):
        c = self.components
        scale = max(self.max_abs(), 1.0)
        for i in range(4):
            for j in range(i + 1, 4):
                d = c[i][j] - c[j][i]
                if (d != 0) if self.exact else (abs(d) > tol * scale):
                    raise AsymmetryViolation(f"C[{i + 1}{j + 1}] != C[{j + 1}{i + 1}]", stage="input")

    def trace(self):
        """g^{ab} C_ab."""
        g = metric(self.tetrad)
        return sum(g[a][b] * self.components[a][b] for a in range(4) for b in range(4) if g[a][b] != 0)

    def to_float(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.components])

    def __eq__(self, other):
        if not isinstance(other, CovariantTensor):
            return NotImplemented
        return self.tetrad is other.tetrad and self.components == other.components

    def __hash__(self):
        return hash((self.tetrad, self.components))


CovariantTensor2 = CovariantTensor


def convert_tensor(C: CovariantTensor, to) -> CovariantTensor:
    """Re-express C in the other tetrad.

    null -> orthonormal:  C' = 1/2 A^T C A
    orthonormal -> null:  C  = 1/2 A C' A^T
    Both maps are rational, so exact input stays exact.
    """
    to = Tetrad.parse(to)
    C.check_symmetric()
    if C.tetrad is to:
        return C
    half = Fraction(1, 2) if C.exact else 0.5
    a = [list(r) for r in FRAME_A]
    rows = C.rows()
    if C.tetrad is Tetrad.NULL:
        out = _mm(_mm(_tr(a), rows), a)
    else:
        out = _mm(_mm(a, rows), _tr(a))
    out = [[half * x for x in r] for r in out]
    if not C.exact:
        out = [[float(x) for x in r] for r in out]
    return CovariantTensor(tuple(tuple(r) for r in out), to, C.label)


def convert_vector(V, frm, to):
    """Contravariant components: V_null = A V_on / sqrt2 (returned without the sqrt2 only when exactness allows)."""
    frm, to = Tetrad.parse(frm), Tetrad.parse(to)
    if frm is to:
        return tuple(V)
    a = np.array([[float(x) for x in r] for r in FRAME_A])
    v = np.array([complex(x) for x in V])
    if frm is Tetrad.ORTHONORMAL:
        out = a @ v / np.sqrt(2.0)
    else:
        out = a.T @ v / np.sqrt(2.0)
    return tuple(out)


class CausalType(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    NULL = "null"


def norm(V, tetrad=Tetrad.NULL):
    g = metric(tetrad)
    return sum(g[a][b] * V[a] * V[b] for a in range(4) for b in range(4) if g[a][b] != 0)


def causal_type(V, tetrad=Tetrad.NULL, tol: float = 1e-9) -> CausalType:
    """Sign of g_ab V^a V^b; |norm| <= tol*|V|^2 counts as null for floats."""
    vals = [parse_scalar(x) if not isinstance(x, (float, Fraction)) else x for x in V]
    if all(x == 0 for x in vals):
        raise ValidationError("zero vector has no causal type", stage="frame")
    n = norm(vals, tetrad)
    if all(is_exact(x) for x in vals):
        s = (n > 0) - (n < 0)
    else:
        size = sum(float(x) ** 2 for x in vals)
        s = 0 if abs(n) <= tol * size else (1 if n > 0 else -1)
    return CausalType.SPACELIKE if s > 0 else CausalType.TIMELIKE if s < 0 else CausalType.NULL


# -- spinors ---------------------------------------------------------------

def _table(entries):
    t = [[_0, _0], [_0, _0]]
    for (i, j), v in entries.items():
        t[i][j] = Fraction(v)
    return tuple(tuple(r) for r in t)


# g_a^{A Bdot} = sqrt2 * SPIN[a][A][Bdot]  (0-based spinor indices)
SPIN = (
    _table({(1, 0): 1}),
    _table({(0, 1): 1}),
    _table({(1, 1): -1}),
    _table({(0, 0): 1}),
)


@dataclass(frozen=True)
class EpsilonConvention:
    """eps_12 = eps^12 = sign; raise psi^A = eps^{AB} psi_B, lower psi_A = psi^B eps_BA."""

    sign: int = 1

    @property
    def lower(self):
        s = Fraction(self.sign)
        return ((_0, s), (-s, _0))

    @property
    def upper(self):
        return self.lower

    def raise_index(self, psi):
        e = self.upper
        return tuple(sum(e[A][B] * psi[B] for B in range(2)) for A in range(2))

    def lower_index(self, psi):
        e = self.lower
        return tuple(sum(psi[B] * e[B][A] for B in range(2)) for A in range(2))

    def contract(self, k, l):
        """k^A l_A for covariant components k_A, l_A."""
        ku = self.raise_index(k)
        return ku[0] * l[0] + ku[1] * l[1]


EPS = EpsilonConvention(1)
EPS_FLIPPED = EpsilonConvention(-1)

# normalised standard dyad under EPS: k^A l_A = 1
STANDARD_K = (_1, _0)
STANDARD_L = (_0, -_1)


def dictionary_identities(eps: EpsilonConvention = EPS):
    """Residuals of the two completeness relations of the dictionary.

    Returns (R1, R2) with R1[a][b] = g_{aAB'} g^{bAB'} + 2 delta_a^b and
    R2[A][B'][C][D'] = g_{aAB'} g^{aCD'} + 2 delta_A^C delta_B'^D'.  The
    factor sqrt2 squared is folded in as 2, so everything is rational.
    """
    g = NULL_METRIC
    e_lo = eps.lower

    def lowered(a):
        # g_{a A Bdot}: both spinor indices lowered, times 1/sqrt2
        s = SPIN[a]
        return [[sum(s[P][Q] * e_lo[P][A] * e_lo[Q][B] for P in range(2) for Q in range(2)) for B in range(2)] for A in range(2)]

    def raised(b):
        # g^{b A Bdot} = g^{bc} g_c^{A Bdot}, times 1/sqrt2
        return [[sum(g[b][c] * SPIN[c][A][B] for c in range(4)) for B in range(2)] for A in range(2)]

    lo = [lowered(a) for a in range(4)]
    up = [raised(b) for b in range(4)]
    r1 = [[2 * sum(lo[a][A][B] * up[b][A][B] for A in range(2) for B in range(2)) + (2 if a == b else 0)
           for b in range(4)] for a in range(4)]
    r2 = {}
    for A in range(2):
        for B in range(2):
            for C in range(2):
                for D in range(2):
                    v = 2 * sum(lo[a][A][B] * up[a][C][D] for a in range(4))
                    r2[(A, B, C, D)] = v + (2 if (A == C and B == D) else 0)
    return r1, r2


def dyad_vectors(k, l, kd=None, ld=None, eps: EpsilonConvention = EPS):
    """Null-tetrad covectors built from a spinor dyad.

    sqrt2 et1_a = k_A l_B' g_a^{AB'},  sqrt2 et2_a = l_A k_B' g_a^{AB'},
    sqrt2 et3_a = -k_A k_B' g_a^{AB'}, sqrt2 et4_a = l_A l_B' g_a^{AB'}.
    The sqrt2 cancels against the dictionary normalisation.  Dotted dyad
    defaults to the undotted one.
    """
    kd = k if kd is None else kd
    ld = l if ld is None else ld
    for a, b in ((k, l), (kd, ld)):
        if eps.contract(a, b) != 1:
            raise ValidationError("dyad is not normalised: k^A l_A != 1", stage="frame")

    def build(x, y, sign=1):
        return tuple(sign * sum(x[A] * y[B] * SPIN[a][A][B] for A in range(2) for B in range(2)) for a in range(4))

    return (build(k, ld), build(l, kd), build(k, kd, -1), build(l, ld))


# -- frame changes preserving the null metric -----------------------------

def _elementary(kind: str, t: Fraction):
    m = [[_1 if i == j else _0 for j in range(4)] for i in range(4)]
    if kind == "boost12":
        m[0][0], m[1][1] = t, 1 / t
    elif kind == "boost34":
        m[2][2], m[3][3] = t, 1 / t
    elif kind == "null13":
        # f3 = e3 + t e1, f2 = e2 - t e4
        m[0][2] = t
        m[3][1] = -t
    elif kind == "null31":
        # f1 = e1 + t e3, f4 = e4 - t e2
        m[2][0] = t
        m[1][3] = -t
    elif kind == "null14":
        # f4 = e4 + t e1, f2 = e2 - t e3
        m[0][3] = t
        m[2][1] = -t
    elif kind == "null41":
        # f1 = e1 + t e4, f3 = e3 - t e2
        m[3][0] = t
        m[1][2] = -t
    else:  # pragma: no cover
        raise ValueError(kind)
    return m


FRAME_MOVES = ("boost12", "boost34", "null13", "null31", "null14", "null41")


def random_frame_change(rng: random.Random, steps: int = 4, max_num: int = 3):
    """Rational matrix T with T^T g T = g (identity component of O(2,2)).

    Columns of T are the new null legs in the old basis.
    """
    T = [[_1 if i == j else _0 for j in range(4)] for i in range(4)]
    for _ in range(steps):
        kind = rng.choice(FRAME_MOVES)
        if kind.startswith("boost"):
            t = Fraction(rng.randint(1, max_num), rng.randint(1, max_num))
        else:
            t = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_num))
        T = _mm(T, _elementary(kind, t))
    return T


def transform_tensor(C: CovariantTensor, T) -> CovariantTensor:
    """Components in the frame whose legs are the columns of T: T^T C T."""
    rows = C.rows()
    out = _mm(_mm(_tr(T), rows), T)
    if not C.exact:
        out = [[float(x) for x in r] for r in out]
    return CovariantTensor(tuple(tuple(r) for r in out), C.tetrad, C.label)
