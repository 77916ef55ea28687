"""Materialize the d^2 shifted basis states and verify them by brute force.

A coefficient vector a seeds the state with amplitude a_i on |i, i>.  The
(m, n) basis state applies the cyclic shift m times on the first system and
m+n times on the second, putting a_i on |i+m, i+m+n> (indices mod d).  A
full state is stored as the d x d amplitude matrix amp[j, k] for |j, k>.

Nothing here assumes the coefficients came from the Fourier synthesis:
orthonormality is checked by materializing all d^2 states and taking all
pairwise inner products, and entanglement is recomputed from the reduced
density matrix spectrum.  Both serve as independent oracles for the
shortcut formulas in :mod:`equibasis.core`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NORM_TOL, ORTHO_TOL, _weights_entropy

# Reduced-state eigenvalues may round slightly below zero; anything more
# negative than this is rejected as non-physical.
EIGENVALUE_FLOOR = -1e-12


@dataclass(frozen=True)
class GramReport:
    """Maxima of |G - I| over the d^2 x d^2 Gram matrix of basis states.

    ``worst_pair`` holds the two (m, n) labels realizing the largest
    deviation from the identity.
    """

    d: int
    max_offdiag: float
    max_diag_dev: float
    worst_pair: tuple[tuple[int, int], tuple[int, int]]

    @property
    def passed(self) -> bool:
        return self.max_offdiag < ORTHO_TOL and self.max_diag_dev < ORTHO_TOL


def build_state(a: np.ndarray, m: int, n: int) -> np.ndarray:
    """Amplitude matrix of the (m, n) basis state.

    amp[(i+m) mod d, (i+m+n) mod d] = a_i; all other entries zero.
    """
    a = np.asarray(a, dtype=complex)
    d = a.size
    if not (0 <= m <= d - 1 and 0 <= n <= d - 1):
        raise ValueError(f"labels must be in [0, {d - 1}], got ({m}, {n})")
    amp = np.zeros((d, d), dtype=complex)
    i = np.arange(d)
    amp[(i + m) % d, (i + m + n) % d] = a
    return amp


def inner_product(x: np.ndarray, y: np.ndarray) -> complex:
    """<x|y> = sum_{j,k} conj(x[j,k]) * y[j,k], conjugate-linear in x."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return complex(np.vdot(x, y))


def gram_check(a: np.ndarray) -> GramReport:
    """Brute-force orthonormality report for the d^2 states seeded by a.

    Materializes every state with :func:`build_state` and evaluates the
    whole Gram matrix; failure is reported in the maxima, never raised.
    """
    a = np.asarray(a, dtype=complex)
    d = a.size
    states = np.empty((d * d, d * d), dtype=complex)
    for m in range(d):
        for n in range(d):
            states[m * d + n] = build_state(a, m, n).ravel()
    gram = states.conj() @ states.T
    deviation = np.abs(gram - np.eye(d * d))

    diag = np.diag(deviation)
    offdiag = deviation.copy()
    np.fill_diagonal(offdiag, 0.0)

    row, col = (int(x) for x in np.unravel_index(int(np.argmax(deviation)), deviation.shape))
    worst = ((row // d, row % d), (col // d, col % d))
    return GramReport(
        d=d,
        max_offdiag=float(offdiag.max()),
        max_diag_dev=float(diag.max()),
        worst_pair=worst,
    )


def state_entanglement(s: np.ndarray) -> float:
    """Base-d entropy of the reduced state of the first system.

    Forms rho_A = M @ M.conj().T from the amplitude matrix M, diagonalizes
    it, and returns -sum lam log_d lam.  This is the Schmidt-spectrum
    route, fully independent of the coefficient-modulus shortcut in
    :func:`equibasis.core.entanglement`.
    """
    s = np.asarray(s, dtype=complex)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ValueError(f"state must be a square amplitude matrix, got {s.shape}")
    d = s.shape[0]
    norm = float(np.linalg.norm(s))
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state is not normalized: |s| = {norm!r}")

    rho = s @ s.conj().T
    lam = np.linalg.eigvalsh(rho)
    if lam.min() < EIGENVALUE_FLOOR:
        raise ValueError(f"reduced state has negative eigenvalue {lam.min()!r}")
    lam = np.clip(lam, 0.0, None)
    lam = lam / lam.sum()
    return _weights_entropy(lam, d)


def shift_state(s: np.ndarray, row_shifts: int, col_shifts: int) -> np.ndarray:
    """Apply the cyclic shift to each axis: |j,k> -> |j+r, k+c| (mod d)."""
    s = np.asarray(s, dtype=complex)
    d = s.shape[0]
    return np.roll(s, (row_shifts % d, col_shifts % d), axis=(0, 1))
