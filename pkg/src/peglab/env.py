"""Planar peg-in-hole environment with admittance-mediated actions.

A decision step applies a desired-pose increment and a stiffness command,
then integrates the admittance dynamics through `substeps` penalty-contact
sub-steps.  The admittance is driven by the true physical wrench; the wrench
*reported* to the agent is scaled by `force_scale` and perturbed by sensor
noise, which is how shifted presets emulate a deployment gap.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .admittance import AdmittanceState, GainSet, admittance_step
from .contact import EnvParams, Geometry, contact_elastic_energy, contact_wrench
from .errors import EpisodeDoneError

__all__ = ["Action", "EnvState", "RandomizationConfig", "EnvConfig", "PegHoleEnv"]


@dataclass(frozen=True)
class Action:
    """Desired-pose increment and per-axis stiffness command."""

    dx: np.ndarray
    k: np.ndarray


@dataclass(frozen=True)
class EnvState:
    """Agent-visible state after a decision step."""

    x: np.ndarray
    v: np.ndarray
    f: np.ndarray  # reported wrench: force_scale * true + sensor noise
    t: int
    done: bool
    success: bool


@dataclass(frozen=True)
class RandomizationConfig:
    """Uniform half-ranges for the start pose and the hole location."""

    start_x: float = 0.006
    start_z: float = 0.002
    start_theta: float = 0.02
    hole_x: float = 0.002

    def __post_init__(self):
        for name, value in (
            ("start_x", self.start_x),
            ("start_z", self.start_z),
            ("start_theta", self.start_theta),
            ("hole_x", self.hole_x),
        ):
            if not np.isfinite(value) or value < 0.0:
                raise ValueError(f"{name} must be a finite non-negative half-range")


@dataclass(frozen=True)
class EnvConfig:
    """Full environment specification; presets are named instances of this."""

    name: str = "custom"
    geometry: Geometry = field(default_factory=Geometry)
    params: EnvParams = field(default_factory=EnvParams)
    randomization: RandomizationConfig = field(default_factory=RandomizationConfig)
    dt: float = 0.002
    substeps: int = 25
    horizon: int = 100
    dx_max: tuple[float, float, float] = (0.002, 0.002, 0.02)
    k_min: float = 10.0
    k_max: float = 1000.0
    start_pose: tuple[float, float, float] = (0.0, 0.008, 0.0)
    inertia: tuple[float, float, float] = (1.0, 1.0, 1.0)
    success_depth_tol: float = 1e-3
    # lateral success tolerance when clearance is non-positive (interference fits)
    success_lateral_floor: float = 2e-4

    def lateral_tol(self) -> float:
        c = self.geometry.clearance
        return c if c > 0.0 else self.success_lateral_floor


class PegHoleEnv:
    """Single-threaded environment instance; owns its RNG."""

    def __init__(self, config: EnvConfig):
        self.config = config
        self._dx_max = np.asarray(config.dx_max, dtype=np.float64)
        self._m = np.asarray(config.inertia, dtype=np.float64)
        self._zero = np.zeros(3)
        self._rng: np.random.Generator | None = None
        self._state: AdmittanceState | None = None
        self._x_d: np.ndarray | None = None
        self._hole_x = 0.0
        self._t = 0
        self._done = True
        self._success = False
        self._f_reported = np.zeros(3)

    # -- lifecycle -----------------------------------------------------

    def reset(self, seed: int | None = None, rand_cfg: RandomizationConfig | None = None) -> EnvState:
        """Start a new episode; deterministic given the seed."""
        rc = rand_cfg if rand_cfg is not None else self.config.randomization
        self._rng = np.random.default_rng(seed)
        nominal = np.asarray(self.config.start_pose, dtype=np.float64)
        offsets = np.array(
            [
                self._rng.uniform(-rc.start_x, rc.start_x),
                self._rng.uniform(-rc.start_z, rc.start_z),
                self._rng.uniform(-rc.start_theta, rc.start_theta),
            ]
        )
        self._hole_x = float(self._rng.uniform(-rc.hole_x, rc.hole_x))
        x0 = nominal + offsets
        self._state = AdmittanceState(x_c=x0, v_c=np.zeros(3))
        self._x_d = x0.copy()
        self._t = 0
        self._done = False
        self._success = False
        self._f_reported = self._report_wrench()
        return self._snapshot()

    def step(self, action: Action) -> tuple[EnvState, float]:
        """Apply one decision step; returns the new state and its reward."""
        if self._done or self._state is None:
            raise EpisodeDoneError("episode is done or not reset; call reset() first")
        dx, k = self.clip_action(action)
        gains = GainSet.overdamped(self._m, k)
        self._x_d = self._x_d + dx

        cfg = self.config
        state = self._state
        for _ in range(cfg.substeps):
            w = contact_wrench(self._rel(state.x_c), state.v_c, cfg.geometry, cfg.params)
            state = admittance_step(state, self._x_d, self._zero, self._zero, w, gains, cfg.dt)
        self._state = state

        self._f_reported = self._report_wrench()
        self._t += 1
        reward = self._reward()
        self._success = self._check_success()
        self._done = self._success or self._t >= cfg.horizon
        return self._snapshot(), reward

    # -- helpers -------------------------------------------------------

    def clip_action(self, action: Action) -> tuple[np.ndarray, np.ndarray]:
        """Clamp the motion increment and stiffness command to their bounds."""
        dx = np.clip(np.asarray(action.dx, dtype=np.float64), -self._dx_max, self._dx_max)
        k = np.clip(np.asarray(action.k, dtype=np.float64), self.config.k_min, self.config.k_max)
        return dx, k

    def target_point(self) -> np.ndarray:
        """Centre of the hole floor, the fixed reward target."""
        return np.array([self._hole_x, -self.config.geometry.hole_depth])

    def _rel(self, x: np.ndarray) -> np.ndarray:
        """Peg pose expressed in the hole frame."""
        return np.array([x[0] - self._hole_x, x[1], x[2]])

    def _report_wrench(self) -> np.ndarray:
        cfg = self.config
        true_w = contact_wrench(self._rel(self._state.x_c), self._state.v_c, cfg.geometry, cfg.params)
        # always draw so the noise stream stays aligned across presets
        noise = self._rng.standard_normal(3)
        return cfg.params.force_scale * true_w + cfg.params.sensor_noise_std * noise

    def _reward(self) -> float:
        pos = self._state.x_c[:2]
        return -float(np.linalg.norm(pos - self.target_point()))

    def _check_success(self) -> bool:
        cfg = self.config
        x = self._state.x_c
        depth_ok = (x[1] + cfg.geometry.hole_depth) <= cfg.success_depth_tol
        lateral_ok = abs(x[0] - self._hole_x) < cfg.lateral_tol()
        return bool(depth_ok and lateral_ok)

    def _snapshot(self) -> EnvState:
        return EnvState(
            x=self._state.x_c.copy(),
            v=self._state.v_c.copy(),
            f=self._f_reported.copy(),
            t=self._t,
            done=self._done,
            success=self._success,
        )

    # -- introspection used by tests and demos --------------------------

    @property
    def desired_pose(self) -> np.ndarray:
        return self._x_d.copy()

    @property
    def hole_x(self) -> float:
        return self._hole_x

    def mechanical_energy(self, gains: GainSet) -> float:
        """Kinetic + admittance-spring + contact-elastic energy."""
        st = self._state
        ke = 0.5 * float(np.sum(self._m * st.v_c**2))
        pe = 0.5 * float(np.sum(gains.k * (st.x_c - self._x_d) ** 2))
        ce = contact_elastic_energy(self._rel(st.x_c), st.v_c, self.config.geometry, self.config.params)
        return ke + pe + ce

    def substep_once(self, gains: GainSet) -> None:
        """Advance a single sub-step with frozen desired pose (test hook)."""
        cfg = self.config
        w = contact_wrench(self._rel(self._state.x_c), self._state.v_c, cfg.geometry, cfg.params)
        self._state = admittance_step(
            self._state, self._x_d, self._zero, self._zero, w, gains, cfg.dt
        )


def shifted(config: EnvConfig, **param_updates) -> EnvConfig:
    """Copy a config with updated EnvParams fields."""
    return replace(config, params=replace(config.params, **param_updates))
