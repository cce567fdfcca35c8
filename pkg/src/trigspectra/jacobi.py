"""Independent eigenvalue oracle: cyclic Jacobi on a real-symmetric embedding.

The n x n complex Hermitian input M = X + iY is embedded into the 2n x 2n
real symmetric block matrix [[X, -Y], [Y, X]], whose spectrum is that of M
with every eigenvalue doubled.  Cyclic Jacobi sweeps then annihilate
off-diagonal entries until the off-diagonal Frobenius mass drops below
eps * ||M||_F, and the doubled spectrum is collapsed by pairing adjacent
sorted values.  The largest pairing gap is reported back so the embedding
trick checks itself: a gap above the caller's comparison tolerance means
the doubling structure was lost.

No closed-form knowledge enters anywhere; this is the brute-force side of
every spectrum comparison in the package.

Performance note: a sweep is organized as 2n - 1 rounds of n disjoint
rotations (round-robin tournament ordering).  Rotations in one round touch
pairwise-distinct rows and columns, so their angles can be computed from
the same matrix snapshot and applied in a single vectorized update; the
result is identical to applying them one by one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrices import DenseHermitian, frobenius_norm, hermiticity_residual

__all__ = ["JacobiConvergenceError", "JacobiSpectrum", "jacobi_spectrum", "jacobi_eigenvalues"]

MAX_SWEEPS = 30

_EPS = float(np.finfo(np.float64).eps)


class JacobiConvergenceError(RuntimeError):
    """Raised when the sweep budget is exhausted before convergence."""

    def __init__(self, sweeps: int, off_mass: float, threshold: float):
        self.sweeps = sweeps
        self.off_mass = off_mass
        self.threshold = threshold
        super().__init__(
            f"Jacobi failed to converge in {sweeps} sweeps: "
            f"off-diagonal mass {off_mass:.3e} > threshold {threshold:.3e}"
        )


@dataclass(frozen=True)
class JacobiSpectrum:
    """Result of one eigensolve: sorted values plus self-check diagnostics."""

    values: np.ndarray  # n real eigenvalues, ascending
    pairing_gap: float  # worst split between the two copies of an eigenvalue
    sweeps: int
    off_mass: float


def _embed(m: DenseHermitian) -> np.ndarray:
    x = m.array.real
    y = m.array.imag
    return np.block([[x, -y], [y, x]])


def _round_robin_rounds(m: int) -> list[tuple[np.ndarray, np.ndarray]]:
    # circle method: m - 1 rounds, each pairing all m players disjointly
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        p = np.array(players[: m // 2])
        q = np.array(players[m // 2 :][::-1])
        rounds.append((p, q))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_mass(s: np.ndarray) -> float:
    # summed directly off the zeroed-diagonal copy: the subtraction
    # ||S||^2 - ||diag||^2 cancels catastrophically near convergence
    off = s.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _sweep(s: np.ndarray, rounds, skip_tol: float) -> int:
    """One cyclic sweep of batched disjoint rotations; returns rotation count."""
    rotations = 0
    for p, q in rounds:
        apq = s[p, q]
        active = np.abs(apq) > skip_tol
        if not np.any(active):
            continue
        pa, qa, apq = p[active], q[active], apq[active]
        rotations += len(pa)

        theta = (s[qa, qa] - s[pa, pa]) / (2.0 * apq)
        t = np.where(
            theta == 0.0, 1.0, np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
        )
        c = 1.0 / np.sqrt(t * t + 1.0)
        sn = t * c

        cols_p = s[:, pa]
        cols_q = s[:, qa]
        s[:, pa] = c * cols_p - sn * cols_q
        s[:, qa] = sn * cols_p + c * cols_q
        rows_p = s[pa, :]
        rows_q = s[qa, :]
        s[pa, :] = c[:, None] * rows_p - sn[:, None] * rows_q
        s[qa, :] = sn[:, None] * rows_p + c[:, None] * rows_q
        # the rotation annihilates these entries exactly; write the zeros
        s[pa, qa] = 0.0
        s[qa, pa] = 0.0
    return rotations


def _collapse_pairs(doubled: np.ndarray) -> tuple[np.ndarray, float]:
    v = np.sort(doubled)
    even = v[0::2]
    odd = v[1::2]
    gap = float(np.max(odd - even)) if even.size else 0.0
    return 0.5 * (even + odd), gap


def jacobi_spectrum(m: DenseHermitian, max_sweeps: int = MAX_SWEEPS) -> JacobiSpectrum:
    """Full oracle result with pairing gap, sweep count and final off mass."""
    scale = frobenius_norm(m)
    max_entry = float(np.max(np.abs(m.array))) if m.n else 0.0
    herm_tol = 64.0 * _EPS * max_entry
    resid = hermiticity_residual(m)
    if resid > herm_tol:
        raise ValueError(
            f"input is not Hermitian: residual {resid:.3e} exceeds {herm_tol:.3e}"
        )

    s = _embed(m)
    dim = 2 * m.n
    threshold = _EPS * scale
    skip_tol = threshold / (2.0 * dim)

    rounds = _round_robin_rounds(dim)
    sweeps = 0
    off = _off_mass(s)
    while off > threshold:
        if sweeps >= max_sweeps:
            raise JacobiConvergenceError(sweeps, off, threshold)
        _sweep(s, rounds, skip_tol)
        sweeps += 1
        off = _off_mass(s)

    values, gap = _collapse_pairs(np.diagonal(s).copy())
    values.flags.writeable = False
    return JacobiSpectrum(values=values, pairing_gap=gap, sweeps=sweeps, off_mass=off)


def jacobi_eigenvalues(m: DenseHermitian, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """All n real eigenvalues of a Hermitian matrix, sorted ascending."""
    return jacobi_spectrum(m, max_sweeps=max_sweeps).values
