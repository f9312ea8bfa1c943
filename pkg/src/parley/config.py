"""Engine configuration: tunable weights, thresholds, and cadences.

All defaults are documented here; a YAML key-value file (via ``--config`` or
the ``ENGINE_CONFIG`` environment variable) overrides individual fields.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields
from pathlib import Path

import yaml

ENV_VAR = "ENGINE_CONFIG"


@dataclass
class EngineConfig:
    # Discourse model
    center_capacity: int = 5          # size of the centered-entity window

    # Entity linking
    sim_threshold: float = 0.45       # fuzzy-retrieval floor (tau_sim)
    link_threshold: float = 0.5       # minimum total score to accept a link (tau_link)
    detect_threshold: float = 0.75    # uncued fuzzy mention detection floor
    cued_detect_threshold: float = 0.5  # fuzzy detection floor when context cues the type
    max_candidates: int = 10          # fuzzy candidate pool size
    link_weights: dict = field(
        default_factory=lambda: {"similarity": 0.5, "popularity": 0.3, "context": 0.2}
    )

    # Coreference
    coref_turn_window: int = 2        # how many prior turns supply antecedents

    # Response ranking.  Hard constraints gate; these weight the soft features.
    ranker_weights: dict = field(
        default_factory=lambda: {
            "topic": 0.4,
            "entity": 0.3,
            "act": 0.2,
            "prior": 0.1,
            "length": -0.05,
        }
    )
    length_band: tuple = (20, 320)    # body char range outside which the length feature fires
    rg_priors: dict = field(
        default_factory=lambda: {
            "flow": 1.0,
            "kg": 0.75,
            "center": 0.5,
            "persona": 0.25,
            "functional": 1.0,
            "fallback": 0.0,
        }
    )

    # Dialogue management
    menu_cadence: int = 3             # every Nth system-initiated topic change offers a menu
    max_system_initiatives: int = 2   # consecutive system initiatives before handing over
    lost_topic_turns: int = 2         # signal-less turns with no engaged RG before changing topic
    kg_entity_turn_threshold: int = 4 # turns on one entity before switching

    # User model
    interest_bump: float = 0.2
    disinterest_drop: float = 0.3

    # Service
    busy_policy: str = "busy"         # "busy" rejects concurrent turns, "queue" serializes them

    def merged(self, overrides: dict) -> "EngineConfig":
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        data = {**self.as_dict(), **overrides}
        if "length_band" in data:
            data["length_band"] = tuple(data["length_band"])
        return EngineConfig(**data)

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def load_config(path: str | Path | None = None) -> EngineConfig:
    """Build the engine config, applying a YAML override file if given or if
    ENGINE_CONFIG points at one."""
    base = EngineConfig()
    if path is None:
        path = os.environ.get(ENV_VAR)
    if not path:
        return base
    raw = yaml.safe_load(Path(path).read_text()) or {}
    if not isinstance(raw, dict):
        raise ValueError(f"config file {path} must contain a mapping")
    return base.merged(raw)
