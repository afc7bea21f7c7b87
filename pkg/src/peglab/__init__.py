"""Desk-scale compliant peg-in-hole laboratory.

Library layout:

- ``admittance``: diagonal mass-spring-damper compliance dynamics
- ``contact``/``env``/``presets``: planar penalty-contact insertion environment
- ``scripted``: stochastic collection policy
- ``trajectory``/``dataset``: episode records, windows, offline dataset
- ``autodiff``/``networks``/``training``: from-scratch models and their training
- ``rollout``/``evaluate``: deployment policies, transfer benchmarks, ablations
- ``config``/``cli``: reproducible runs from config files
"""

from .admittance import AdmittanceState, GainSet, admittance_step, derive_damping
from .contact import EnvParams, Geometry, contact_wrench
from .env import Action, EnvConfig, EnvState, PegHoleEnv, RandomizationConfig
from .presets import PRESET_NAMES, get_preset, load_env_config

__all__ = [
    "AdmittanceState",
    "GainSet",
    "admittance_step",
    "derive_damping",
    "EnvParams",
    "Geometry",
    "contact_wrench",
    "Action",
    "EnvConfig",
    "EnvState",
    "PegHoleEnv",
    "RandomizationConfig",
    "PRESET_NAMES",
    "get_preset",
    "load_env_config",
]

__version__ = "0.1.0"
