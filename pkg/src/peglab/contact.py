"""Planar penalty contact between a rectangular peg and a slotted floor.

World frame: x lateral, z vertical, theta counter-clockwise.  The floor
surface is z = 0 with a rectangular slot (the hole) centred at x = 0:
walls at x = +-hole_width/2 down to z = -hole_depth, slot floor at
z = -hole_depth.  The peg pose refers to the midpoint of its bottom edge.

Contact is evaluated at the four peg corners.  A corner inside the solid
is pushed out along the nearest face; the total contact stiffness and
damping are split evenly across the active corners so the effective
normal impedance does not grow with the number of touching points.
Friction is regularised Coulomb: f_t = -mu * f_n * tanh(v_t / v_reg).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["Geometry", "EnvParams", "ContactPoint", "contact_state", "contact_wrench"]

# Penetrations beyond this depth are clamped; keeps penalty forces bounded
# when a preset drives the peg deep into a wall.
PENETRATION_CLAMP = 5e-3


@dataclass(frozen=True)
class Geometry:
    """Rectangular peg and hole cross-section, metres."""

    peg_width: float = 0.040
    hole_width: float = 0.0403
    hole_depth: float = 0.020
    peg_height: float = 0.080

    def __post_init__(self):
        if self.peg_width <= 0.0:
            raise ValueError("peg_width must be positive")
        if self.hole_depth <= 0.0:
            raise ValueError("hole_depth must be positive")
        if self.peg_height <= 0.0:
            raise ValueError("peg_height must be positive")

    @property
    def clearance(self) -> float:
        """hole_width - peg_width; negative means an interference fit."""
        return self.hole_width - self.peg_width


@dataclass(frozen=True)
class EnvParams:
    """Environment properties that differ between nominal and shifted runs."""

    contact_stiffness: float = 5e4
    contact_damping: float = 100.0
    friction_mu: float = 0.3
    force_scale: float = 1.0
    sensor_noise_std: float = 0.0
    v_reg: float = 1e-3

    def __post_init__(self):
        if self.contact_stiffness <= 0.0:
            raise ValueError("contact_stiffness must be positive")
        if self.contact_damping < 0.0:
            raise ValueError("contact_damping must be non-negative")
        if self.friction_mu < 0.0:
            raise ValueError("friction_mu must be non-negative")
        if self.force_scale <= 0.0:
            raise ValueError("force_scale must be positive")
        if self.sensor_noise_std < 0.0:
            raise ValueError("sensor_noise_std must be non-negative")


@dataclass(frozen=True)
class ContactPoint:
    """One penetrating corner: geometry and resolved force."""

    corner: int
    px: float
    pz: float
    nx: float
    nz: float
    depth: float
    normal_force: float
    tangent_force: float
    stiffness: float


def _corner_exit(px: float, pz: float, half_w: float, depth: float):
    """Nearest-face exit (nx, nz, penetration) for a point, or None if free.

    The solid is {z < 0} minus the open slot {|x| < half_w, z > -depth}.
    """
    if pz >= 0.0:
        return None
    in_span = -half_w < px < half_w
    if in_span:
        if pz > -depth:
            return None  # inside the slot cavity
        # below the slot floor: exit upward through the slot floor
        return (0.0, 1.0, -depth - pz)
    # inside the floor slab / a wall
    up = -pz
    if pz > -depth:
        # at cavity level inside a wall: sideways exit into the slot
        if px >= half_w:
            side = px - half_w
            if side < up:
                return (-1.0, 0.0, side)
        else:
            side = -half_w - px
            if side < up:
                return (1.0, 0.0, side)
    return (0.0, 1.0, up)


def contact_state(x, v, geom: Geometry, params: EnvParams) -> list[ContactPoint]:
    """Resolve all penetrating corners with their penalty forces.

    `x`, `v` are the peg pose (x, z, theta) and generalized velocity in the
    hole frame (slot centred at 0).  Stiffness and damping are split across
    the active corners.
    """
    px0, pz0, th = float(x[0]), float(x[1]), float(x[2])
    vx, vz, om = float(v[0]), float(v[1]), float(v[2])
    c, s = math.cos(th), math.sin(th)
    w2 = 0.5 * geom.peg_width
    h = geom.peg_height
    half_w = 0.5 * geom.hole_width

    # corner offsets in the peg frame: bottom pair first
    local = ((-w2, 0.0), (w2, 0.0), (-w2, h), (w2, h))
    hits = []
    for idx, (lx, lz) in enumerate(local):
        rx = c * lx - s * lz
        rz = s * lx + c * lz
        exit_ = _corner_exit(px0 + rx, pz0 + rz, half_w, geom.hole_depth)
        if exit_ is not None:
            hits.append((idx, rx, rz, exit_))
    if not hits:
        return []

    k_eff = params.contact_stiffness / len(hits)
    c_eff = params.contact_damping / len(hits)
    points = []
    for idx, rx, rz, (nx, nz, pen) in hits:
        pen = min(pen, PENETRATION_CLAMP)
        # corner velocity: v + omega x r (planar cross product)
        cvx = vx - om * rz
        cvz = vz + om * rx
        pen_rate = -(cvx * nx + cvz * nz)
        fn = k_eff * pen + c_eff * pen_rate
        if fn < 0.0:
            fn = 0.0
        # tangent = normal rotated +90 degrees
        tx, tz = -nz, nx
        vt = cvx * tx + cvz * tz
        ft = -params.friction_mu * fn * math.tanh(vt / params.v_reg)
        points.append(
            ContactPoint(
                corner=idx,
                px=px0 + rx,
                pz=pz0 + rz,
                nx=nx,
                nz=nz,
                depth=pen,
                normal_force=fn,
                tangent_force=ft,
                stiffness=k_eff,
            )
        )
    return points


def contact_wrench(x, v, geom: Geometry, params: EnvParams) -> np.ndarray:
    """Total penalty wrench (fx, fz, torque) about the peg reference point.

    Pose and velocity are expressed in the hole frame.  Returns the true
    physical wrench; observation scaling and sensor noise are applied by
    the environment, not here.
    """
    points = contact_state(x, v, geom, params)
    fx = fz = tq = 0.0
    px0, pz0 = float(x[0]), float(x[1])
    for p in points:
        cfx = p.normal_force * p.nx + p.tangent_force * -p.nz
        cfz = p.normal_force * p.nz + p.tangent_force * p.nx
        rx = p.px - px0
        rz = p.pz - pz0
        fx += cfx
        fz += cfz
        tq += rx * cfz - rz * cfx
    return np.array([fx, fz, tq])


def contact_elastic_energy(x, v, geom: Geometry, params: EnvParams) -> float:
    """Elastic energy stored in the active penalty springs, 0.5*k_eff*pen^2."""
    return sum(0.5 * p.stiffness * p.depth * p.depth for p in contact_state(x, v, geom, params))
