# module special
"""Numerically stable special-function primitives.

Provides the generalized Laguerre polynomials L_n^α(x) by the three-term
recurrence, square roots of factorial ratios evaluated exactly in big-integer
arithmetic, and Gauss quadrature rules for the weight x^α e^(−x) on (0, ∞)
built from the symmetric tridiagonal (Jacobi matrix) eigenproblem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np
from numpy.typing import NDArray


def laguerre_poly(n: int, alpha: float, x: "float | NDArray[np.float64]"):
    """Evaluate the generalized Laguerre polynomial L_n^α(x).

    Uses the stable three-term recurrence

        (k+1) L_{k+1}^α = (2k+1+α−x) L_k^α − (k+α) L_{k−1}^α,

    starting from L_0^α = 1 and L_1^α = 1+α−x.  `x` may be a scalar or an
    ndarray; the result has the same shape.

    Raises:
        ValueError: if n < 0 or α ≤ −1 (outside the orthogonality domain).
    """
    if n < 0:
        raise ValueError(f"polynomial degree must be nonnegative, got {n}")
    if alpha <= -1.0:
        raise ValueError(f"Laguerre parameter must exceed -1, got {alpha}")
    scalar = np.isscalar(x)
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return float(prev) if scalar else prev
    curr = 1.0 + alpha - x
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 + alpha - x) * curr - (k + alpha) * prev) / (k + 1)
    return float(curr) if scalar else curr


def laguerre_table(n_max: int, alpha: float, x: NDArray[np.float64]) -> NDArray[np.float64]:
    """Evaluate L_n^α(x) for all n = 0..n_max at once.

    Returns an array of shape (n_max+1, len(x)) filled by a single recurrence
    sweep; row n holds L_n^α(x).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if alpha <= -1.0:
        raise ValueError(f"Laguerre parameter must exceed -1, got {alpha}")
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1, x.size))
    out[0] = 1.0
    if n_max >= 1:
        out[1] = 1.0 + alpha - x
    for k in range(1, n_max):
        out[k + 1] = ((2 * k + 1 + alpha - x) * out[k] - (k + alpha) * out[k - 1]) / (k + 1)
    return out


def _sqrt_big_fraction(num: int, den: int) -> float:
    """Return √(num/den) for positive big integers without overflow.

    Splits off the integer square root so only an O(1) correction factor is
    ever converted to float: √N = isqrt(N)·√(N/isqrt(N)²).
    """
    root = math.isqrt(num * den)
    if root == 0:
        return 0.0
    if root * root == num * den:
        return _big_ratio_to_float(root, den)
    correction = math.sqrt(_big_ratio_to_float(num * den, root * root))
    return _big_ratio_to_float(root, den) * correction


def _big_ratio_to_float(num: int, den: int) -> float:
    """Correctly rounded num/den for big integers (avoids int→float overflow)."""
    return float(Fraction(num, den))


def factorial_ratio(num: Iterable[int], den: Iterable[int]) -> Fraction:
    """Exact Π num_i! / Π den_j! as a Fraction."""
    p = 1
    q = 1
    for a in num:
        if a < 0:
            raise ValueError(f"factorial of negative integer {a}")
        p *= math.factorial(a)
    for b in den:
        if b < 0:
            raise ValueError(f"factorial of negative integer {b}")
        q *= math.factorial(b)
    return Fraction(p, q)


def sqrt_factorial_ratio(num: Iterable[int], den: Iterable[int]) -> float:
    """Return √(Π num_i! / Π den_j!).

    The ratio is formed exactly in integer arithmetic (common factors cancel
    in the Fraction reduction), so arguments of several hundred neither
    overflow nor lose accuracy before the final square root.
    """
    ratio = factorial_ratio(num, den)
    return _sqrt_big_fraction(ratio.numerator, ratio.denominator)


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for ∫₀^∞ f(x) x^α e^(−x) dx ≈ Σ w_i f(x_i).

    A k-point rule integrates polynomials of degree ≤ 2k−1 exactly.  Nodes
    are strictly increasing and positive; Σ w_i = Γ(α+1).
    """

    order: int
    alpha: float
    nodes: NDArray[np.float64]
    weights: NDArray[np.float64]


@lru_cache(maxsize=None)
def gauss_gen_laguerre(k: int, alpha: float = 0.0) -> QuadratureRule:
    """Build the k-point Gauss rule for the weight x^α e^(−x) on (0, ∞).

    Nodes start from the eigenvalues of the Jacobi matrix of the L_n^α
    recurrence (diagonal 2i+α+1, off-diagonal √(i(i+α))) and are polished
    to the roots of L_k^α by Newton steps, using (d/dx)L_k^α = −L_{k−1}^(α+1).
    Weights come from the closed form

        w_i = Γ(k+α+1)/k! · x_i / ((k+1)² L_{k+1}^α(x_i)²),

    which stays relatively accurate even for the exponentially small weights
    at the largest nodes (squared first eigenvector components do not).

    Raises:
        ValueError: if k < 1 or α ≤ −1.
        RuntimeError: if the symmetric eigensolve fails to converge or the
            polished nodes are not strictly increasing and positive.
    """
    if k < 1:
        raise ValueError(f"quadrature order must be positive, got {k}")
    if alpha <= -1.0:
        raise ValueError(f"weight exponent must exceed -1, got {alpha}")
    jacobi = np.zeros((k, k))
    for i in range(k):
        jacobi[i, i] = 2 * i + alpha + 1
    for i in range(1, k):
        jacobi[i, i - 1] = jacobi[i - 1, i] = math.sqrt(i * (i + alpha))
    try:
        nodes = np.linalg.eigvalsh(jacobi)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(f"quadrature eigensolve failed for k={k}, alpha={alpha}") from exc
    for _ in range(3):
        f = laguerre_poly(k, alpha, nodes)
        df = -laguerre_poly(k - 1, alpha + 1.0, nodes) if k >= 1 else np.zeros_like(nodes)
        nodes = nodes - f / df
    if not (np.all(nodes > 0) and np.all(np.diff(nodes) > 0)):
        raise RuntimeError(f"quadrature nodes failed validation for k={k}, alpha={alpha}")
    lk1 = laguerre_poly(k + 1, alpha, nodes)
    log_pref = math.lgamma(k + alpha + 1.0) - math.lgamma(k + 1.0)
    weights = np.exp(log_pref) * nodes / ((k + 1) ** 2 * lk1**2)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(order=k, alpha=alpha, nodes=nodes, weights=weights)
