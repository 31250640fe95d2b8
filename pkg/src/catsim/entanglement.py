"""Entanglement quantification across a bipartition.

Negativity is the absolute sum of the negative eigenvalues of the partial
transpose; the logarithmic negativity is E = log2(2 N(rho) + 1), measured in
ebits.  For a qubit-versus-rest cut E is at most 1.  Zero negativity
certifies a positive partial transpose (PPT), which is the operational
proxy used here for separability verdicts: necessary, and for the 2 x 2 and
2 x 3 cuts appearing in the loss tests also sufficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .core import TOL, Bipartition, DensityMatrix, hermitian_spectrum, partial_transpose, to_density
from .cats import CatStateKind, build_cat
from .noise import depolarize_all, lose_particles

__all__ = [
    "EntanglementValue",
    "negativity",
    "log_negativity",
    "measure",
    "critical_visibility",
    "bisect_threshold",
    "vanishing_noise_threshold",
]


@dataclass(frozen=True)
class EntanglementValue:
    """Negativity and logarithmic negativity (ebits) of one state and cut."""

    negativity: float
    log_negativity: float

    @classmethod
    def from_negativity(cls, nu: float) -> "EntanglementValue":
        nu = max(0.0, float(nu))
        return cls(negativity=nu, log_negativity=math.log2(2.0 * nu + 1.0))


def negativity(rho: DensityMatrix, cut: Bipartition) -> float:
    """Sum of |eigenvalue| over the strictly negative PT eigenvalues.

    Eigenvalues in (-1e-10, 0) are numerical noise and are clamped to zero.
    """
    if cut.n_qubits != rho.n_qubits:
        raise ValueError(f"cut covers {cut.n_qubits} qubits, state has {rho.n_qubits}")
    ev = hermitian_spectrum(partial_transpose(rho, cut.side_a)).eigenvalues
    neg = ev[ev < TOL.eigenvalue_clamp]
    return float(-neg.sum()) if neg.size else 0.0


def log_negativity(rho: DensityMatrix, cut: Bipartition) -> float:
    """log2(2 N(rho) + 1) in ebits; zero iff the negativity is zero."""
    return EntanglementValue.from_negativity(negativity(rho, cut)).log_negativity


def measure(rho: DensityMatrix, cut: Bipartition) -> EntanglementValue:
    """Both quantities at once."""
    return EntanglementValue.from_negativity(negativity(rho, cut))


def critical_visibility(N: int) -> float:
    """Visibility above which the N-qubit excitation-superposition register
    violates local realism: N / ((sqrt(2) - 1) 2^(N-1) + N).

    Tends to zero as N grows; N = 1 and N = 2 both evaluate to 1/sqrt(2).
    """
    if N < 1:
        raise ValueError(f"critical_visibility needs N >= 1, got {N}")
    return N / ((math.sqrt(2.0) - 1.0) * 2.0 ** (N - 1) + N)


def bisect_threshold(
    neg_of_p: Callable[[float], float],
    *,
    resolution: float = 1e-4,
    zero_tol: float = TOL.negativity_floor,
    grid_step: float = 0.1,
) -> float:
    """Largest p in [0, 1] with negativity(p) > zero_tol, to |dp| <= resolution.

    The function is first sampled on a coarse grid to verify that the
    negativity is non-increasing in p (the premise that makes bisection
    meaningful); a violation beyond small numerical slack is an error.
    Returns 0.0 if already unentangled at p = 0 and 1.0 if still entangled
    at p = 1.
    """
    grid = [i * grid_step for i in range(int(round(1.0 / grid_step)) + 1)]
    values = [neg_of_p(p) for p in grid]
    slack = 1e-12
    for (p0, v0), (p1, v1) in zip(zip(grid, values), zip(grid[1:], values[1:])):
        if v1 > v0 + slack:
            raise ValueError(
                f"negativity increases from {v0!r} at p={p0} to {v1!r} at p={p1}; "
                f"threshold bisection assumes it is non-increasing"
            )
    if values[0] <= zero_tol:
        return 0.0
    if values[-1] > zero_tol:
        return 1.0
    # bracket from the coarse grid, then bisect
    hi_idx = next(i for i, v in enumerate(values) if v <= zero_tol)
    lo, hi = grid[hi_idx - 1], grid[hi_idx]
    while hi - lo > resolution:
        mid = 0.5 * (lo + hi)
        if neg_of_p(mid) > zero_tol:
            lo = mid
        else:
            hi = mid
    return lo


def vanishing_noise_threshold(
    kind: CatStateKind,
    N: int,
    m: int = 0,
    engine: str = "oracle",
    *,
    l: int = 2,
    resolution: float = 1e-4,
) -> float:
    """Depolarizing strength at which the micro : macro entanglement dies.

    ``engine="oracle"`` builds the state, loses m macro qubits, depolarizes
    the survivors and diagonalizes the partial transpose exactly;
    ``engine="analytic"`` (W-cat only) uses the closed-form dominant
    eigenvalues and has no qubit-count limit.
    """
    if engine == "analytic":
        if kind is not CatStateKind.W_CAT:
            raise ValueError(f"the analytic engine only covers {CatStateKind.W_CAT}, got {kind}")
        from .analytic import WCatParams, approx_negativity

        return bisect_threshold(
            lambda p: approx_negativity(WCatParams(N=N, m=m, p=p)), resolution=resolution
        )
    if engine != "oracle":
        raise ValueError(f"engine must be 'oracle' or 'analytic', got {engine!r}")

    base = lose_particles(to_density(build_cat(kind, N, l=l)), m)
    if base.n_qubits < 2:
        raise ValueError("no macro qubits survive; the micro:macro cut is empty")
    cut = Bipartition.micro_macro(base.n_qubits)

    def neg_of_p(p: float) -> float:
        return negativity(depolarize_all(base, p), cut)

    return bisect_threshold(neg_of_p, resolution=resolution)
