"""Complex-vector primitives for equi-entangled basis construction.

A basis state of two d-level systems is seeded by a unit-norm coefficient
vector (a_0, ..., a_{d-1}).  The whole family studied here is parameterized
by d real phases theta_alpha through a small Fourier synthesis:

    a_k = (1/d) * sum_alpha exp(i*theta_alpha) * xi^(k*alpha),
    xi  = exp(2*pi*i/d).

Equivalently, a is the unitary transform of the unimodular vector
c_alpha = exp(i*theta_alpha)/sqrt(d).  By Parseval the result is always
unit norm, and every cyclic autocorrelation at nonzero lag vanishes, which
is exactly the orthonormality condition for the shifted basis states.

All functions here are pure and operate on plain numpy arrays (complex128)
or on :class:`PhaseVector`.  Intended scale is d <= 64; everything is plain
dense O(d^2) arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

TWO_PI = 2.0 * math.pi

# Orthonormality working tolerance: double precision keeps accumulated
# rounding far below this for d <= 64.
ORTHO_TOL = 1e-12

# Largest norm deviation accepted by the entropy routines.
NORM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PhaseVector:
    """d real phases in radians, stored reduced to [0, 2*pi).

    A global phase is physically irrelevant, so the canonical gauge pins
    theta[0] = 0; use :meth:`canonical` to fix the gauge before comparing
    two phase vectors.
    """

    theta: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.theta, dtype=float)
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError("phase vector needs at least 2 entries")
        if not np.all(np.isfinite(arr)):
            raise ValueError("phases must be finite")
        arr = np.mod(arr, TWO_PI)
        arr.flags.writeable = False
        object.__setattr__(self, "theta", arr)

    @property
    def d(self) -> int:
        return self.theta.size

    def canonical(self) -> "PhaseVector":
        """Gauge-fixed copy with theta[0] = 0."""
        return PhaseVector(self.theta - self.theta[0])

    def __repr__(self) -> str:
        angles = ", ".join(f"{t:.6g}" for t in self.theta)
        return f"PhaseVector([{angles}])"


def root_of_unity(d: int, p: int) -> complex:
    """Return exp(2*pi*i*p/d).

    Exactly 1+0j whenever p is a multiple of d; otherwise evaluated from
    the argument reduced mod d.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    r = p % d
    if r == 0:
        return complex(1.0, 0.0)
    angle = TWO_PI * r / d
    return complex(math.cos(angle), math.sin(angle))


@lru_cache(maxsize=None)
def _phase_matrix(d: int) -> np.ndarray:
    """The d x d matrix E[j, alpha] = xi^(j*alpha), xi = exp(2*pi*i/d)."""
    j = np.arange(d)
    mat = np.exp(2j * np.pi * np.outer(j, j) / d)
    mat.flags.writeable = False
    return mat


def dft(v: np.ndarray) -> np.ndarray:
    """Unitary transform w_j = (1/sqrt(d)) * sum_alpha v_alpha * xi^(j*alpha).

    Sign convention: positive exponent forward, so a delta maps to the flat
    vector (1/sqrt(d), ..., 1/sqrt(d)).  :func:`idft` is the inverse.
    """
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("dft expects a nonempty 1-d vector")
    d = v.size
    return (_phase_matrix(d) @ v) / math.sqrt(d)


def idft(w: np.ndarray) -> np.ndarray:
    """Inverse of :func:`dft` (conjugate kernel, same normalization)."""
    w = np.asarray(w, dtype=complex)
    if w.ndim != 1 or w.size == 0:
        raise ValueError("idft expects a nonempty 1-d vector")
    d = w.size
    return (_phase_matrix(d).conj() @ w) / math.sqrt(d)


def synthesize_coefficients(phases: PhaseVector) -> np.ndarray:
    """Coefficients a_k = (1/d) * sum_alpha exp(i*theta_alpha) * xi^(k*alpha).

    The output is unit norm (Parseval) and has vanishing cyclic
    autocorrelation at every nonzero lag, both to rounding error.
    """
    d = phases.d
    return (_phase_matrix(d) @ np.exp(1j * phases.theta)) / d


def autocorrelation(a: np.ndarray, m: int) -> complex:
    """Cyclic autocorrelation sum_i conj(a_i) * a_{(i+m) mod d}.

    Orthonormality of the shifted basis states is equivalent to this being
    delta_{m,0} for m = 0, ..., d-1.
    """
    a = np.asarray(a, dtype=complex)
    d = a.size
    if not 0 <= m <= d - 1:
        raise ValueError(f"lag must be in [0, {d - 1}], got {m}")
    return complex(np.vdot(a, np.roll(a, -m)))


def entanglement(a: np.ndarray) -> float:
    """Entropy of the squared moduli, -sum |a_i|^2 log_d |a_i|^2, in [0, 1].

    Logarithms are base d, so a flat-modulus vector scores exactly 1 in any
    dimension; a single nonzero entry scores 0 (with 0*log(0) = 0).  Raises
    if the input norm deviates from 1 by more than ``NORM_TOL``.
    """
    a = np.asarray(a, dtype=complex)
    d = a.size
    norm = float(np.linalg.norm(a))
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"coefficient vector is not normalized: |a| = {norm!r}")
    weights = np.abs(a) ** 2
    weights = weights / weights.sum()
    return _weights_entropy(weights, d)


def _weights_entropy(weights: np.ndarray, d: int) -> float:
    """Base-d entropy of a probability vector, clamped to [0, 1]."""
    nonzero = weights[weights > 0.0]
    e = float(-(nonzero * np.log(nonzero)).sum() / math.log(d))
    if e < -ORTHO_TOL or e > 1.0 + ORTHO_TOL:
        raise ValueError(f"entropy {e!r} outside [0, 1] beyond tolerance")
    return 0.0 if e <= 0.0 else min(e, 1.0)
