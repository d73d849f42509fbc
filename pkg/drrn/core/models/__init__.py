from .game_models import ActionDef, GameKind, GameSpec, GameState, Observation, Outcome
from .experiment_models import (
    AgentConfig,
    Architecture,
    ExperimentConfig,
    InteractionKind,
    ReplayScope,
    SweepConfig,
)
from .transition_models import TransitionTuple
