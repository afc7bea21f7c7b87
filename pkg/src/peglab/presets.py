"""Named environment presets and config-file loading.

`train_nominal` is the data-collection environment (0.3 mm clearance).
The remaining presets perturb clearance, friction/stiffness, or the force
scale to stand in for deployment environments whose contact properties
differ from the ones the models were trained in.
"""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path

from .contact import EnvParams, Geometry
from .env import EnvConfig, RandomizationConfig

__all__ = ["PRESET_NAMES", "get_preset", "load_env_config", "env_config_to_dict", "env_config_from_dict"]

PEG_WIDTH = 0.040
HOLE_DEPTH = 0.020
PEG_HEIGHT = 0.080

TRAIN_CLEARANCE = 0.3e-3
TUNING_CLEARANCE = 0.5e-3


def _geometry(clearance: float) -> Geometry:
    return Geometry(
        peg_width=PEG_WIDTH,
        hole_width=PEG_WIDTH + clearance,
        hole_depth=HOLE_DEPTH,
        peg_height=PEG_HEIGHT,
    )


def _base(name: str, clearance: float, **param_updates) -> EnvConfig:
    return EnvConfig(
        name=name,
        geometry=_geometry(clearance),
        params=EnvParams(**param_updates),
        randomization=RandomizationConfig(),
    )


_PRESET_BUILDERS = {
    "train_nominal": lambda: _base("train_nominal", TRAIN_CLEARANCE),
    # wider-clearance environment used only to shake down the collection policy
    "tuning_wide": lambda: _base("tuning_wide", TUNING_CLEARANCE),
    "clearance_005": lambda: _base("clearance_005", 0.05e-3),
    "clearance_002": lambda: _base("clearance_002", 0.02e-3),
    "negative_005": lambda: _base("negative_005", -0.05e-3),
    # contact-model shift: doubled friction and tripled surface stiffness
    "shifted_friction": lambda: _base(
        "shifted_friction", TRAIN_CLEARANCE, friction_mu=0.6, contact_stiffness=1.5e5
    ),
    "shifted_scale_low": lambda: _base("shifted_scale_low", TRAIN_CLEARANCE, force_scale=0.5),
    "shifted_scale_high": lambda: _base("shifted_scale_high", TRAIN_CLEARANCE, force_scale=1.5),
}

PRESET_NAMES = tuple(n for n in _PRESET_BUILDERS if n != "tuning_wide")


def get_preset(name: str) -> EnvConfig:
    try:
        return _PRESET_BUILDERS[name]()
    except KeyError:
        known = ", ".join(sorted(_PRESET_BUILDERS))
        raise KeyError(f"unknown preset {name!r}; known presets: {known}") from None


def env_config_to_dict(config: EnvConfig) -> dict:
    return dataclasses.asdict(config)


def env_config_from_dict(data: dict) -> EnvConfig:
    data = dict(data)
    geometry = Geometry(**data.pop("geometry"))
    params = EnvParams(**data.pop("params"))
    randomization = RandomizationConfig(**data.pop("randomization"))
    for key in ("dx_max", "start_pose", "inertia"):
        if key in data:
            data[key] = tuple(data[key])
    return EnvConfig(geometry=geometry, params=params, randomization=randomization, **data)


def load_env_config(source: str | Path) -> EnvConfig:
    """Resolve a preset name or a JSON config file into an EnvConfig.

    A JSON file may be either a full EnvConfig dict or {"preset": name,
    ...overrides} where overrides replace top-level EnvConfig fields.
    """
    if isinstance(source, str) and source in _PRESET_BUILDERS:
        return get_preset(source)
    path = Path(source)
    with open(path) as fh:
        data = json.load(fh)
    if "preset" in data:
        config = get_preset(data.pop("preset"))
        base = env_config_to_dict(config)
        base.update(data)
        return env_config_from_dict(base)
    return env_config_from_dict(data)
