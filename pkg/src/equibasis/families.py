"""Closed-form coefficient families and known flat-phase endpoints.

The low-dimensional families below solve the cyclic-autocorrelation
orthonormality system in closed form, each tracing a one-parameter curve of
equi-entangled bases.  The preset catalog holds phase vectors whose
synthesized coefficients have flat moduli (maximally entangled endpoints),
verified numerically on construction; scaling the phases by t in [0, 1]
interpolates from the product basis to that endpoint.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import PhaseVector, synthesize_coefficients

# A preset must synthesize to moduli within this distance of 1/sqrt(d).
FLATNESS_TOL = 1e-9


def family_d3_real(phi: float) -> np.ndarray:
    """Real qutrit family: one-parameter solution of the d=3 system.

    a_0 = (sin+cos)cos / (1 + sin*cos),
    a_1 = (sin+cos)sin / (1 + sin*cos),
    a_2 = -sin*cos    / (1 + sin*cos).

    The denominator never vanishes (sin*cos >= -1/2).  phi = 0 gives the
    product state (1, 0, 0).
    """
    s, c = math.sin(phi), math.cos(phi)
    denom = 1.0 + s * c
    return np.array(
        [(s + c) * c / denom, (s + c) * s / denom, -s * c / denom],
        dtype=complex,
    )


def family_d3_complex(phi: float) -> np.ndarray:
    """Complex qutrit family N * (2cos(phi), -exp(i*phi), 2cos(phi)).

    N = 1/sqrt(1 + 8cos^2(phi)).  Flat moduli (maximal entanglement) at
    phi = pi/3; product state at phi = pi/2.
    """
    c = math.cos(phi)
    n = 1.0 / math.sqrt(1.0 + 8.0 * c * c)
    return np.array([2.0 * c * n, -np.exp(1j * phi) * n, 2.0 * c * n], dtype=complex)


def family_d4_real(theta: float) -> np.ndarray:
    """Real d=4 family (cos, 1+sin, -cos, 1-sin)/2.

    Maximally entangled at theta = 0, product state at theta = pi/2.  Not
    the only solution of the d=4 real system, just the curve used here.
    """
    s, c = math.sin(theta), math.cos(theta)
    return np.array([c, 1.0 + s, -c, 1.0 - s], dtype=complex) / 2.0


def family_d4_complex(theta: float) -> np.ndarray:
    """Complex d=4 family with a_0 = (1 + exp(i*theta)cos(theta))/2.

    The remaining entries share one modulus: a_1 = exp(i*theta)sin(theta)/2,
    a_2 = a_1/i, a_3 = -a_1.  Product state at theta = 0, maximally
    entangled at theta = pi/2.
    """
    s = 0.5 * np.exp(1j * theta) * math.sin(theta)
    a0 = 0.5 * (1.0 + np.exp(1j * theta) * math.cos(theta))
    return np.array([a0, s, s / 1j, -s], dtype=complex)


def family_d4_complex_entropy(theta: float) -> float:
    """Closed-form entanglement of :func:`family_d4_complex`.

    The Schmidt weights are lam0 = (1 + 3cos^2(theta))/4 once and
    lam1 = sin^2(theta)/4 three times, giving

        E = -lam0*log4(lam0) - 3*lam1*log4(lam1).

    Independent of the generic entropy path; used to cross-check it.
    """
    lam0 = (1.0 + 3.0 * math.cos(theta) ** 2) / 4.0
    lam1 = math.sin(theta) ** 2 / 4.0
    log4 = math.log(4.0)
    e = -lam0 * math.log(lam0) / log4
    if lam1 > 0.0:
        e -= 3.0 * lam1 * math.log(lam1) / log4
    return e


class Family(enum.Enum):
    """The four closed-form one-parameter families."""

    D3_REAL = "d3-real"
    D3_COMPLEX = "d3-complex"
    D4_REAL = "d4-real"
    D4_COMPLEX = "d4-complex"

    @property
    def dimension(self) -> int:
        return {"d3-real": 3, "d3-complex": 3, "d4-real": 4, "d4-complex": 4}[self.value]

    def coefficients(self, param: float) -> np.ndarray:
        """Coefficient vector of this family at parameter value (radians)."""
        fn = {
            Family.D3_REAL: family_d3_real,
            Family.D3_COMPLEX: family_d3_complex,
            Family.D4_REAL: family_d4_real,
            Family.D4_COMPLEX: family_d4_complex,
        }[self]
        return fn(param)


@dataclass(frozen=True)
class PresetEntry:
    """A cataloged flat-phase endpoint: synthesizing theta0 gives a
    maximally entangled seed state (flat moduli within ``FLATNESS_TOL``)."""

    d: int
    variant: int
    theta0: PhaseVector


# Known phase vectors with flat-modulus synthesis, one row per (d, variant).
_PRESET_ANGLES: dict[tuple[int, int], tuple[float, ...]] = {
    (2, 0): (0.0, math.pi / 2.0),
    (3, 0): (0.0, 0.0, 2.0 * math.pi / 3.0),
    (4, 0): (0.0, 0.0, 0.0, math.pi),
    (4, 1): (0.0, math.pi, math.pi, math.pi),
    (5, 0): (0.0, 2.0 * math.pi / 5.0, 0.0, 4.0 * math.pi / 5.0, 4.0 * math.pi / 5.0),
}


def available_presets() -> tuple[tuple[int, int], ...]:
    """All (d, variant) keys of the preset catalog, sorted."""
    return tuple(sorted(_PRESET_ANGLES))


def preset_phases(d: int, variant: int = 0) -> PresetEntry:
    """Look up a cataloged flat-phase endpoint by dimension and variant.

    The synthesized moduli are re-verified to be flat on every call; a
    failure would mean the catalog itself is corrupt.
    """
    key = (d, variant)
    if key not in _PRESET_ANGLES:
        raise ValueError(
            f"no preset for d={d}, variant={variant}; available: {available_presets()}"
        )
    theta0 = PhaseVector(np.array(_PRESET_ANGLES[key]))
    _check_flat(theta0)
    return PresetEntry(d=d, variant=variant, theta0=theta0)


def interpolate(theta0: PhaseVector, t: float) -> PhaseVector:
    """Scale every phase by t in [0, 1].

    t = 0 gives the all-zero phases (product basis, entanglement 0); t = 1
    returns theta0 itself.  Scaling acts on the stored representatives in
    [0, 2*pi), before any gauge reduction.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"interpolation parameter must be in [0, 1], got {t}")
    return PhaseVector(t * theta0.theta)


def quadratic_phases(d: int) -> PhaseVector:
    """Quadratic-phase candidate endpoint for arbitrary d.

    theta_alpha = pi*alpha^2/d for even d and pi*alpha*(alpha+1)/d for odd
    d, the classic constant-amplitude zero-autocorrelation (Zadoff-Chu
    style) construction.  Flatness is not promised here; callers verify it
    numerically (all d probed so far pass).
    """
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    alpha = np.arange(d, dtype=float)
    if d % 2 == 0:
        theta = math.pi * alpha**2 / d
    else:
        theta = math.pi * alpha * (alpha + 1.0) / d
    return PhaseVector(theta).canonical()


def _check_flat(theta0: PhaseVector) -> None:
    a = synthesize_coefficients(theta0)
    deviation = float(np.max(np.abs(np.abs(a) - 1.0 / math.sqrt(theta0.d))))
    if deviation > FLATNESS_TOL:
        raise ValueError(f"preset phases are not flat: deviation {deviation!r}")
