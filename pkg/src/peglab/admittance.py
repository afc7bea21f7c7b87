"""Diagonal admittance dynamics.

The compliant motion (x_c, v_c) obeys a per-axis mass-spring-damper law
driven by the external wrench f:

    m_i * (a_c - a_d) + d_i * (v_c - v_d) + k_i * (x_c - x_d) = f_i

with damping fixed at d_i = 4*sqrt(m_i*k_i), i.e. damping ratio 2, so the
virtual dynamics are overdamped on every axis and a setpoint step never
overshoots.  Integration is semi-implicit Euler: velocity first, then
position with the new velocity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidGainError, NonFiniteError

__all__ = ["GainSet", "AdmittanceState", "derive_damping", "admittance_step"]


def derive_damping(m: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Per-axis damping 4*sqrt(m_i*k_i) (damping ratio 2, overdamped).

    Raises InvalidGainError if any inertia or stiffness entry is not a
    strictly positive finite number.
    """
    m = np.asarray(m, dtype=np.float64)
    k = np.asarray(k, dtype=np.float64)
    if m.shape != k.shape:
        raise InvalidGainError(f"inertia shape {m.shape} != stiffness shape {k.shape}")
    if not (np.all(np.isfinite(m)) and np.all(np.isfinite(k))):
        raise InvalidGainError("gains must be finite")
    if np.any(m <= 0.0) or np.any(k <= 0.0):
        raise InvalidGainError("inertia and stiffness must be strictly positive")
    return 4.0 * np.sqrt(m * k)


@dataclass(frozen=True)
class GainSet:
    """Diagonal admittance parameters; damping is always 4*sqrt(m*k)."""

    m: np.ndarray
    k: np.ndarray
    d_damp: np.ndarray

    @classmethod
    def overdamped(cls, m, k) -> "GainSet":
        """Build a GainSet with the damping identity enforced."""
        m = np.asarray(m, dtype=np.float64)
        k = np.asarray(k, dtype=np.float64)
        return cls(m=m, k=k, d_damp=derive_damping(m, k))

    def __post_init__(self):
        expected = derive_damping(self.m, self.k)
        if not np.array_equal(np.asarray(self.d_damp, dtype=np.float64), expected):
            raise InvalidGainError("d_damp must equal 4*sqrt(m*k) exactly")

    @property
    def dof(self) -> int:
        return self.m.shape[0]


@dataclass(frozen=True)
class AdmittanceState:
    """Compliant pose and velocity being integrated."""

    x_c: np.ndarray
    v_c: np.ndarray


def admittance_step(
    state: AdmittanceState,
    x_d: np.ndarray,
    v_d: np.ndarray,
    a_d: np.ndarray,
    f: np.ndarray,
    gains: GainSet,
    dt: float,
) -> AdmittanceState:
    """One semi-implicit Euler step of the admittance law.

    a_c = a_d + (f - d_damp*(v_c - v_d) - k*(x_c - x_d)) / m, then
    v_c += dt*a_c and x_c += dt*v_c (with the updated velocity).
    """
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    x_c, v_c = state.x_c, state.v_c
    a_c = a_d + (f - gains.d_damp * (v_c - v_d) - gains.k * (x_c - x_d)) / gains.m
    if not np.all(np.isfinite(a_c)):
        raise NonFiniteError("admittance step produced a non-finite acceleration")
    v_new = v_c + dt * a_c
    x_new = x_c + dt * v_new
    return AdmittanceState(x_c=x_new, v_c=v_new)
