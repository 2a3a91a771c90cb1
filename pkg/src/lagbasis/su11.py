# module su11
"""SU(1,1) ladder algebra on the Laguerre radial functions.

At fixed l the functions {S_nl : n ≥ 0} carry a positive-discrete SU(1,1)
irrep with lowest weight t = l+3/2 and weights m_t = n+l+3/2.  The generator
actions are

    T₃ S_nl = (n+l+3/2) S_nl
    T₊ S_nl = √((n+1)(n+2l+3)) S_{n+1,l}
    T₋ S_nl = √(n(n+2l+2)) S_{n−1,l},

and the operator identities r = ½(2T₃−T₊−T₋) and r d/dr = ½(T₊−T₋−1) turn
these into closed-form actions of r, r·d/dr, 1/r and d/dr on the basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .basis import BasisIndex
from .special import sqrt_factorial_ratio


@dataclass(frozen=True)
class LadderCoefficients:
    """T₃ eigenvalue and the T± coefficients at one basis index."""

    t3: float
    t_plus: float
    t_minus: float


@dataclass
class SparseExpansion:
    """Finite coefficient list of an operator action on one basis function.

    `truncated` is True exactly when a mathematically infinite expansion
    (1/r or d/dr) was cut at a stated n_max; exact finite expansions carry
    truncated = False.  Zero coefficients are never stored.
    """

    terms: dict[BasisIndex, float] = field(default_factory=dict)
    truncated: bool = False

    def coeff(self, n: int, l: int) -> float:
        return self.terms.get(BasisIndex(n, l), 0.0)

    def norm2(self) -> float:
        return sum(c * c for c in self.terms.values())

    def _set(self, n: int, l: int, value: float) -> None:
        if value != 0.0:
            self.terms[BasisIndex(n, l)] = value


def ladder_coeffs(idx: BasisIndex) -> LadderCoefficients:
    """Ladder coefficients at (n, l): t₃ = n+l+3/2, t± as above."""
    n, l = idx.n, idx.l
    return LadderCoefficients(
        t3=n + l + 1.5,
        t_plus=math.sqrt((n + 1) * (n + 2 * l + 3)),
        t_minus=math.sqrt(n * (n + 2 * l + 2)),
    )


def casimir_eigenvalue(l: int) -> float:
    """Casimir T₃² − ½(T₊T₋+T₋T₊) eigenvalue (l+3/2)(l+1/2) = t(t−1)."""
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    return (l + 1.5) * (l + 0.5)


def inverse_r_coeff(n: int, m: int, l: int) -> float:
    """f_nm = ⟨m l|1/r|n l⟩ = (1/(l+1))·√(n!(m+2l+2)!/(m!(n+2l+2)!)) for n ≥ m.

    Symmetric in n and m.
    """
    if n < m:
        n, m = m, n
    return sqrt_factorial_ratio([n, m + 2 * l + 2], [m, n + 2 * l + 2]) / (l + 1)


def derivative_coeff(n_row: int, n: int, l: int) -> float:
    """⟨n'l|d/dr|nl⟩: +radical above the diagonal, −radical below, 0 on it."""
    if n_row > n:
        return sqrt_factorial_ratio([n_row, n + 2 * l + 2], [n, n_row + 2 * l + 2])
    if n_row < n:
        return -sqrt_factorial_ratio([n, n_row + 2 * l + 2], [n_row, n + 2 * l + 2])
    return 0.0


def expand_action(op: str, idx: BasisIndex, n_max: int = 0) -> SparseExpansion:
    """Expand (op S_nl) over the same-l basis.

    op is one of "r", "rddr", "rinv", "ddr".  The r and r·d/dr expansions
    are exact and tridiagonal; 1/r and d/dr have infinite tails cut at
    n_max (the result is flagged truncated).

    Raises:
        ValueError: for an unsupported op, or n_max < n+1 on the finite
            expansions (which would silently drop an exact term).
    """
    n, l = idx.n, idx.l
    lc = ladder_coeffs(idx)
    out = SparseExpansion()
    if op in ("r", "rddr"):
        if n_max < n + 1:
            raise ValueError(f"finite expansion of {op} needs n_max >= n+1, got {n_max}")
        if op == "r":
            # r S_nl = (n+l+3/2) S_nl − ½ t₋ S_{n−1,l} − ½ t₊ S_{n+1,l}
            out._set(n, l, n + l + 1.5)
            if n > 0:
                out._set(n - 1, l, -0.5 * lc.t_minus)
            out._set(n + 1, l, -0.5 * lc.t_plus)
        else:
            # r d/dr S_nl = ½ t₊ S_{n+1,l} − ½ t₋ S_{n−1,l} − ½ S_nl
            out._set(n, l, -0.5)
            if n > 0:
                out._set(n - 1, l, -0.5 * lc.t_minus)
            out._set(n + 1, l, 0.5 * lc.t_plus)
        out.truncated = False
        return out
    if op == "rinv":
        for i in range(n_max + 1):
            out._set(i, l, inverse_r_coeff(i, n, l))
        out.truncated = True
        return out
    if op == "ddr":
        for i in range(n_max + 1):
            out._set(i, l, derivative_coeff(i, n, l))
        out.truncated = True
        return out
    raise ValueError(f"unsupported operator {op!r} for SU(1,1) expansion")


def ladder_matrices(l: int, n_max: int) -> tuple[NDArray[np.float64], ...]:
    """Truncated (n_max+1)² matrix representations (T₃, T₊, T₋) at fixed l."""
    dim = n_max + 1
    t3 = np.zeros((dim, dim))
    tp = np.zeros((dim, dim))
    tm = np.zeros((dim, dim))
    for n in range(dim):
        lc = ladder_coeffs(BasisIndex(n, l))
        t3[n, n] = lc.t3
        if n + 1 < dim:
            tp[n + 1, n] = lc.t_plus
        if n > 0:
            tm[n - 1, n] = lc.t_minus
    return t3, tp, tm


def verify_commutators(l: int, n_max: int) -> float:
    """Max residual of [T₃,T±]∓T± and [T₊,T₋]+2T₃ on interior rows/columns.

    The truncation spoils the last two rows and columns, so residuals are
    taken over indices ≤ n_max−2, where the algebra must hold exactly.
    """
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    t3, tp, tm = ladder_matrices(l, n_max)
    r1 = (t3 @ tp - tp @ t3) - tp
    r2 = (t3 @ tm - tm @ t3) + tm
    r3 = (tp @ tm - tm @ tp) + 2.0 * t3
    cut = n_max - 1  # rows/cols 0..n_max−2
    return max(float(np.abs(r[:cut, :cut]).max()) for r in (r1, r2, r3))


def casimir_matrix_residual(l: int, n_max: int) -> float:
    """Max residual of T₃²−½(T₊T₋+T₋T₊) − (l+3/2)(l+1/2)·1 on interior rows."""
    t3, tp, tm = ladder_matrices(l, n_max)
    cas = t3 @ t3 - 0.5 * (tp @ tm + tm @ tp)
    cas -= casimir_eigenvalue(l) * np.eye(n_max + 1)
    cut = n_max - 1
    return float(np.abs(cas[:cut, :cut]).max())
