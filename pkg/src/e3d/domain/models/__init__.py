"""Modelos de dominio: entidades y value objects."""

from src.e3d.domain.models.action import Action
from src.e3d.domain.models.action_sequence import ActionSequence
from src.e3d.domain.models.grid_world import TwoRoomWorld
from src.e3d.domain.models.q_table import QTable
from src.e3d.domain.models.effect_distribution import EffectDistribution
from src.e3d.domain.models.trial_record import TrialRecord
from src.e3d.domain.models.experiment_result import (
    ExperimentResult,
    SessionResult,
    SessionSummary,
    SummaryStats,
)
from src.e3d.domain.models.experiment_config import (
    Algorithm,
    E3DParams,
    ExperimentConfig,
    TargetKind,
    Task,
)

__all__ = [
    "Action",
    "ActionSequence",
    "TwoRoomWorld",
    "QTable",
    "EffectDistribution",
    "TrialRecord",
    "ExperimentResult",
    "SessionResult",
    "SessionSummary",
    "SummaryStats",
    "Algorithm",
    "E3DParams",
    "ExperimentConfig",
    "TargetKind",
    "Task",
]
