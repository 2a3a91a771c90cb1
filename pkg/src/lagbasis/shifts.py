# module shifts
"""Shift operators connecting Laguerre radial functions of neighboring l.

The radial eigenvalue problem for S_nl factorizes (after the similarity
transform R_nl = r^(1/2) S_nl that removes the first-derivative term) into
quantum-number-dependent first-order operators.  The normalized shift
operators acting on the S_nl functions are

    𝒜_nl   = −(l+3/2)/√(n(n+2l+3)) · (d/dr − (l+1)/r + α_nl/(l+3/2))
    𝒜†_nl  = −(l+3/2)/√(n(n+2l+3)) · (−d/dr − (l+2)/r + α_nl/(l+3/2)),

with α_nl = n+l+3/2 and the overall phase chosen so that every shifted
function stays positive at the origin.  Their action is

    𝒜_nl  S_nl      = S_{n−1,l+1}        (and 𝒜_0l S_0l = 0)
    𝒜†_nl S_{n−1,l+1} = S_nl.

Everything here works at unit radial scale; scale dependence is restored at
the matrix-element layer.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .basis import BasisIndex, eval_S, eval_S_derivs
from .special import sqrt_factorial_ratio
from .su11 import SparseExpansion


class ShiftKind(enum.Enum):
    """Which member of the shift pair: A maps S_nl → S_{n−1,l+1}, A_DAGGER back."""

    A = "a"
    A_DAGGER = "adagger"


@dataclass(frozen=True)
class ShiftOperatorSpec:
    """Coefficient bundle prefactor·(c_d·d/dr + c_r/r + c_0) for one shift."""

    n: int
    l: int
    kind: ShiftKind
    prefactor: float
    derivative_coeff: float
    inverse_r_coeff: float
    constant_coeff: float


def shift_energy_constant(n: int, l: int) -> float:
    """Additive constant K_nl = −α_nl²/(l+3/2)² of the factorized problem.

    K_0l = −1 equals the common eigenvalue, which is exactly the condition
    for the n = 0 state to be annihilated by the lowering member.
    """
    alpha = n + l + 1.5
    return -((alpha / (l + 1.5)) ** 2)


def shift_spec(n: int, l: int, kind: ShiftKind) -> ShiftOperatorSpec:
    """Build the normalized shift operator 𝒜_nl or 𝒜†_nl.

    Raises:
        ValueError: if n = 0 (the annihilated state has no shift).
    """
    if n < 1:
        raise ValueError("annihilated state has no shift: n must be >= 1")
    if l < 0:
        raise ValueError(f"l must be nonnegative, got {l}")
    alpha = n + l + 1.5
    pref = -(l + 1.5) / math.sqrt(n * (n + 2 * l + 3))
    if kind == ShiftKind.A:
        return ShiftOperatorSpec(n, l, kind, pref, 1.0, -(l + 1.0), alpha / (l + 1.5))
    return ShiftOperatorSpec(n, l, kind, pref, -1.0, -(l + 2.0), alpha / (l + 1.5))


def apply_shift(spec: ShiftOperatorSpec, source: BasisIndex, r):
    """Apply a shift operator analytically to S_source on a grid r > 0."""
    s, ds = eval_S_derivs(source, 1.0, r, order=1)
    r = np.asarray(r, dtype=float)
    return spec.prefactor * (
        spec.derivative_coeff * ds + spec.inverse_r_coeff * s / r + spec.constant_coeff * s
    )


def verify_shift_pointwise(n: int, l: int, grid) -> float:
    """Max |𝒜_nl S_nl − S_{n−1,l+1}| over the grid (unit scale).

    Raises:
        ValueError: via shift_spec if n = 0.
    """
    spec = shift_spec(n, l, ShiftKind.A)
    shifted = apply_shift(spec, BasisIndex(n, l), grid)
    target = eval_S(BasisIndex(n - 1, l + 1), 1.0, np.asarray(grid, dtype=float))
    return float(np.abs(shifted - target).max())


def verify_shift_dagger_pointwise(n: int, l: int, grid) -> float:
    """Max |𝒜†_nl S_{n−1,l+1} − S_nl| over the grid (unit scale)."""
    spec = shift_spec(n, l, ShiftKind.A_DAGGER)
    shifted = apply_shift(spec, BasisIndex(n - 1, l + 1), grid)
    target = eval_S(BasisIndex(n, l), 1.0, np.asarray(grid, dtype=float))
    return float(np.abs(shifted - target).max())


def verify_factorization_pointwise(n: int, l: int, grid) -> float:
    """Residual of the factorized eigenproblem on R_nl = r^(1/2) S_nl.

    Evaluates (Ã†_nl Ã_nl + K_nl) R_nl + R_nl on the grid, which must vanish:
    the unnormalized pair Ã†/Ã carries −(l+3/2)/r in place of the transformed
    coefficients and the common eigenvalue is −1.
    """
    alpha = n + l + 1.5
    c0 = alpha / (l + 1.5)
    c1 = l + 1.5
    r = np.asarray(grid, dtype=float)
    s, ds, d2s = eval_S_derivs(BasisIndex(n, l), 1.0, r, order=2)
    sq = np.sqrt(r)
    psi = sq * s
    dpsi = 0.5 * s / sq + sq * ds
    d2psi = -0.25 * s / (r * sq) + ds / sq + sq * d2s
    # g = Ã ψ = ψ' − (l+3/2)/r ψ + c₀ ψ
    g = dpsi - c1 * psi / r + c0 * psi
    dg = d2psi - c1 * (dpsi / r - psi / r**2) + c0 * dpsi
    # Ã† g = −g' − (l+3/2)/r g + c₀ g ; total must equal −K ψ − ψ
    residual = (-dg - c1 * g / r + c0 * g) + shift_energy_constant(n, l) * psi + psi
    return float(np.abs(residual).max())


def expand_l_plus_1(n: int, l: int) -> SparseExpansion:
    """Exact expansion of S_{n,l+1} over {S_il : 0 ≤ i ≤ n+1}.

    Follows from one application of the shift pair:

        coeff(n+1) = −√((n+1)/(n+2l+4))
        coeff(i≤n) = (2l+3)·√(n!(i+2l+2)!/(i!(n+2l+4)!)).
    """
    out = SparseExpansion(truncated=False)
    out._set(n + 1, l, -math.sqrt((n + 1) / (n + 2 * l + 4)))
    for i in range(n + 1):
        out._set(
            i, l, (2 * l + 3) * sqrt_factorial_ratio([n, i + 2 * l + 2], [i, n + 2 * l + 4])
        )
    return out


def expand_l_plus_2(n: int, l: int) -> SparseExpansion:
    """Exact expansion of S_{n,l+2} over {S_il : 0 ≤ i ≤ n+2}.

    Two applications of the shift pair give leading coefficient
    √((n+1)(n+2)/((n+2l+6)(n+2l+5))) at i = n+2 and, for i ≤ n+1,
    c_i·√(n!(i+2l+2)!/(i!(n+2l+6)!)) with

        c_i = (2l+4)(2l+3)n − (2l+5)(2l+4)i + (2l+4)(2l+3).
    """
    out = SparseExpansion(truncated=False)
    out._set(
        n + 2,
        l,
        math.sqrt((n + 1) * (n + 2) / ((n + 2 * l + 6) * (n + 2 * l + 5))),
    )
    for i in range(n + 2):
        c_i = (2 * l + 4) * (2 * l + 3) * n - (2 * l + 5) * (2 * l + 4) * i \
            + (2 * l + 4) * (2 * l + 3)
        out._set(i, l, c_i * sqrt_factorial_ratio([n, i + 2 * l + 2], [i, n + 2 * l + 6]))
    return out


def expand_l_plus_k(n: int, l: int, k: int) -> SparseExpansion:
    """Expansion of S_{n,l+k} over {S_il} by composing k single shifts.

    Closed forms exist for k ≤ 2; higher k is composed numerically from
    repeated single-step expansions.
    """
    if k < 1:
        raise ValueError(f"shift count must be positive, got {k}")
    if k == 1:
        return expand_l_plus_1(n, l)
    if k == 2:
        return expand_l_plus_2(n, l)
    upper = expand_l_plus_k(n, l + 1, k - 1)
    out = SparseExpansion(truncated=False)
    acc: dict[int, float] = {}
    for idx, c in upper.terms.items():
        step = expand_l_plus_1(idx.n, l)
        for jdx, cj in step.terms.items():
            acc[jdx.n] = acc.get(jdx.n, 0.0) + c * cj
    for i, c in sorted(acc.items()):
        out._set(i, l, c)
    return out
