"""Spinor image of C_ab, the two Plebański spinors and their
Petrov-Penrose types.

Spinor components use 0-based indices; a totally symmetric 4-index spinor
is stored as (V0, ..., V4) where V_k has k indices equal to 2.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from neutral_ricci import linalg
from neutral_ricci.frame import EPS, SPIN, CovariantTensor, EpsilonConvention, Tetrad, convert_tensor, metric
from neutral_ricci.quartic import DepressedQuartic, RootPattern, Signs, classify_real, depress
from neutral_ricci.scalars import is_exact

_R2 = range(2)


class PPType(enum.Enum):
    I_r = "[I]_r"
    I_rc = "[I]_rc"
    I_c = "[I]_c"
    II_r = "[II]_r"
    II_rc = "[II]_rc"
    D_r = "[D]_r"
    D_c = "[D]_c"
    III_r = "[III]_r"
    N_r = "[N]_r"
    Zero = "[-]"

    @classmethod
    def from_label(cls, text: str) -> "PPType":
        return cls(text.strip())


PATTERN_TO_PP = {
    RootPattern.R1R2R3R4: PPType.I_r,
    RootPattern.R1R2ZZbar: PPType.I_rc,
    RootPattern.Z1Z1barZ2Z2bar: PPType.I_c,
    RootPattern.R1R2R3_2: PPType.II_r,
    RootPattern.R_2ZZbar: PPType.II_rc,
    RootPattern.R1_2R2_2: PPType.D_r,
    RootPattern.Z_2Zbar_2: PPType.D_c,
    RootPattern.R1R2_3: PPType.III_r,
    RootPattern.R_4: PPType.N_r,
}


# -- spinor image -------------------------------------------------------

@dataclass(frozen=True)
class SpinorImage:
    """C_{AB Cdot Ddot} as a nested 2x2x2x2 tuple, symmetric in AB and in CdotDdot."""

    x: tuple

    def __call__(self, A, B, C, D):
        return self.x[A][B][C][D]

    def is_symmetric(self) -> bool:
        return all(self.x[A][B][C][D] == self.x[B][A][C][D] == self.x[A][B][D][C]
                   for A, B, C, D in itertools.product(_R2, repeat=4))

    def independent(self):
        """The 9 independent components, keyed (AB, CdDd) with sorted pairs."""
        keys = [(0, 0), (0, 1), (1, 1)]
        return {(p, r): self.x[p[0]][p[1]][r[0]][r[1]] for p in keys for r in keys}


def _spin_lowered(eps: EpsilonConvention):
    """S^a_{A Bdot}: a raised with the null metric, spinor indices lowered with eps."""
    g = metric(Tetrad.NULL)
    e = eps.lower
    out = []
    for a in range(4):
        t = [[sum(g[a][b] * SPIN[b][P][Q] * e[P][A] * e[Q][B]
                  for b in range(4) for P in _R2 for Q in _R2 if g[a][b] != 0)
              for B in _R2] for A in _R2]
        out.append(t)
    return out


def _as_null(C: CovariantTensor) -> CovariantTensor:
    return C if C.tetrad is Tetrad.NULL else convert_tensor(C, Tetrad.NULL)


def spinor_image(C: CovariantTensor, eps: EpsilonConvention = EPS) -> SpinorImage:
    """C_{AB Cd Dd} = 1/4 C_ab g^a_{A Cd} g^b_{B Dd}; the two sqrt2 factors give 1/2."""
    C = _as_null(C)
    s = _spin_lowered(eps)
    half = Fraction(1, 2) if C.exact else 0.5
    c = C.components
    x = [[[[half * sum(c[a][b] * s[a][A][Cd] * s[b][B][Dd]
                       for a in range(4) for b in range(4) if c[a][b] != 0)
            for Dd in _R2] for Cd in _R2] for B in _R2] for A in _R2]
    return SpinorImage(tuple(tuple(tuple(tuple(r) for r in p) for p in q) for q in x))


def tensor_from_image(img: SpinorImage, tetrad=Tetrad.NULL) -> CovariantTensor:
    """C_ab = g_a^{A Cd} g_b^{B Dd} C_{AB Cd Dd} (= 2 S S C)."""
    vals = [img.x[A][B][C][D] for A, B, C, D in itertools.product(_R2, repeat=4)]
    exact = all(is_exact(v) for v in vals)
    two = 2 if exact else 2.0
    rows = [[two * sum(SPIN[a][A][Cd] * SPIN[b][B][Dd] * img.x[A][B][Cd][Dd]
                       for A in _R2 for B in _R2 for Cd in _R2 for Dd in _R2)
             for b in range(4)] for a in range(4)]
    if not exact:
        rows = [[float(v) for v in r] for r in rows]
    out = CovariantTensor(tuple(tuple(r) for r in rows), Tetrad.NULL)
    return out if Tetrad.parse(tetrad) is Tetrad.NULL else convert_tensor(out, tetrad)


def spinor_image_by_solve(C: CovariantTensor) -> SpinorImage:
    """Independent route: solve C_ab = 2 S_a S_b X for the 9 symmetric unknowns."""
    C = _as_null(C)
    keys = [(p, r) for p in ((0, 0), (0, 1), (1, 1)) for r in ((0, 0), (0, 1), (1, 1))]
    rows = []
    for a in range(4):
        for b in range(4):
            row = []
            for p, r in keys:
                coeff = Fraction(0)
                for A, B in {p, p[::-1]}:
                    for Cd, Dd in {r, r[::-1]}:
                        coeff += 2 * SPIN[a][A][Cd] * SPIN[b][B][Dd]
                row.append(coeff)
            row.append(Fraction(C.components[a][b]) if C.exact else C.components[a][b])
            rows.append(row)
    red, pivots = linalg.rref(rows)
    if 9 in pivots:
        raise ArithmeticError("tensor is not in the image of the dictionary")
    sol = {keys[pc]: red[i][9] for i, pc in enumerate(pivots)}
    x = [[[[sol[(tuple(sorted((A, B))), tuple(sorted((Cd, Dd))))] for Dd in _R2] for Cd in _R2] for B in _R2]
         for A in _R2]
    return SpinorImage(tuple(tuple(tuple(tuple(r) for r in p) for p in q) for q in x))


# -- symmetric quartic spinors -------------------------------------------

@dataclass(frozen=True)
class SymmetricQuarticSpinor:
    components: tuple  # V0..V4
    dotted: bool = False

    @property
    def exact(self) -> bool:
        return all(is_exact(v) for v in self.components)

    def __call__(self, A, B, C, D):
        return self.components[A + B + C + D]

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.exact:
            return all(v == 0 for v in self.components)
        return all(abs(v) <= tol for v in self.components)

    def scaled(self, c):
        return SymmetricQuarticSpinor(tuple(c * v for v in self.components), self.dotted)


def symmetrize(T, dotted: bool = False) -> SymmetricQuarticSpinor:
    """Totally symmetric part of a 2x2x2x2 array, as V0..V4."""
    comps = []
    for k in range(5):
        idx = (0,) * (4 - k) + (1,) * k
        perms = set(itertools.permutations(idx))
        total = sum(T[p[0]][p[1]][p[2]][p[3]] for p in perms)
        comps.append(total / len(perms) if not isinstance(total, int) else Fraction(total, len(perms)))
    return SymmetricQuarticSpinor(tuple(comps), dotted)


def symmetrized_product(factors, coeff=1, dotted: bool = False) -> SymmetricQuarticSpinor:
    """coeff * alpha_(A beta_B gamma_C delta_D) for four 1-index spinors (covariant components)."""
    a, b, c, d = factors
    T = [[[[coeff * a[A] * b[B] * c[C] * d[D] for D in _R2] for C in _R2] for B in _R2] for A in _R2]
    return symmetrize(T, dotted)


def add_spinors(*vs: SymmetricQuarticSpinor) -> SymmetricQuarticSpinor:
    comps = tuple(sum(v.components[k] for v in vs) for k in range(5))
    return SymmetricQuarticSpinor(comps, vs[0].dotted)


def plebanski_pair(img: SpinorImage, eps: EpsilonConvention = EPS):
    """V_ABCD = 4 C_(AB^{MdNd} C_CD)MdNd and V_AdBdCdDd = 4 C_MN(AdBd C^MN_CdDd)."""
    x = img.x
    e = eps.upper

    def up_dotted(A, B, M, N):
        return sum(e[M][P] * e[N][Q] * x[A][B][P][Q] for P in _R2 for Q in _R2 if e[M][P] != 0 and e[N][Q] != 0)

    def up_undotted(M, N, C, D):
        return sum(e[M][P] * e[N][Q] * x[P][Q][C][D] for P in _R2 for Q in _R2 if e[M][P] != 0 and e[N][Q] != 0)

    und = [[[[4 * sum(up_dotted(A, B, M, N) * x[C][D][M][N] for M in _R2 for N in _R2)
              for D in _R2] for C in _R2] for B in _R2] for A in _R2]
    dot = [[[[4 * sum(x[M][N][A][B] * up_undotted(M, N, C, D) for M in _R2 for N in _R2)
              for D in _R2] for C in _R2] for B in _R2] for A in _R2]
    return symmetrize(und, False), symmetrize(dot, True)


def transform_spinor(V: SymmetricQuarticSpinor, U) -> SymmetricQuarticSpinor:
    """V'_ABCD = V_PQRS U^P_A U^Q_B U^R_C U^S_D for a 2x2 matrix U."""
    T = [[[[sum(V(P, Q, R, S) * U[P][A] * U[Q][B] * U[R][C] * U[S][D]
                for P in _R2 for Q in _R2 for R in _R2 for S in _R2)
            for D in _R2] for C in _R2] for B in _R2] for A in _R2]
    return symmetrize(T, V.dotted)


# -- binary quartic and type ----------------------------------------------

@dataclass(frozen=True)
class BinaryQuartic:
    """Omega = sum_k a_k (xi^1)^(4-k) (xi^2)^k with a_k = binom(4,k) V_k.

    In z = xi^1/xi^2 this is V(z) = sum_k a_k z^(4-k); ``infinite_root``
    counts how many roots sit at z = infinity (leading coefficients zero).
    """

    a: tuple

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.a)

    @property
    def infinite_root(self) -> int:
        for k, c in enumerate(self.a):
            if c != 0:
                return k
        return 4

    def z_polynomial(self):
        """Coefficients of V(z), constant term first."""
        return list(reversed(self.a))

    def shifted(self, t):
        """Form F(xi1, xi2) = Omega(xi1, xi2 + t xi1); returns its a-coefficients."""
        b = []
        for j in range(5):
            b.append(sum(self.a[k] * comb(k, j) * t ** (k - j) for k in range(j, 5)))
        return BinaryQuartic(tuple(b))


def binary_quartic(V: SymmetricQuarticSpinor) -> BinaryQuartic:
    return BinaryQuartic(tuple(comb(4, k) * v for k, v in enumerate(V.components)))


def _shift_candidates():
    yield 0
    n = 1
    while True:
        yield n
        yield -n
        n += 1


def pp_type(V: SymmetricQuarticSpinor, tol: float = 1e-9, signs: Signs | None = None) -> PPType:
    """Petrov-Penrose type of a real totally symmetric spinor.

    A unimodular substitution xi2 -> xi2 + t xi1 with the first integer t
    giving a nonzero leading coefficient moves every root to finite z; the
    quartic is then made monic, depressed and classified.
    """
    if V.exact:
        if V.is_zero():
            return PPType.Zero
    else:
        scale = max(abs(v) for v in V.components)
        if scale <= tol:
            return PPType.Zero
        V = V.scaled(1.0 / scale)
    form = binary_quartic(V)
    for t in _shift_candidates():
        lead = sum(form.a[k] * t ** k for k in range(5))
        if (lead != 0) if V.exact else (abs(lead) > 1e-3):
            break
    shifted = form.shifted(t)
    coeffs = [shifted.a[4], shifted.a[3], shifted.a[2], shifted.a[1], shifted.a[0]]
    dq = depress(coeffs)
    if signs is None and not V.exact:
        signs = Signs(tol=tol, scale=max(dq.root_scale(), 1e-300))
    return PATTERN_TO_PP[classify_real(dq, signs)]


def pp_pair(C: CovariantTensor, eps: EpsilonConvention = EPS, tol: float = 1e-9):
    img = spinor_image(C, eps)
    und, dot = plebanski_pair(img, eps)
    return pp_type(und, tol), pp_type(dot, tol)


__all__ = [
    "PPType",
    "SpinorImage",
    "SymmetricQuarticSpinor",
    "BinaryQuartic",
    "spinor_image",
    "spinor_image_by_solve",
    "tensor_from_image",
    "plebanski_pair",
    "binary_quartic",
    "pp_type",
    "pp_pair",
    "symmetrized_product",
    "add_spinors",
    "transform_spinor",
    "DepressedQuartic",
]
