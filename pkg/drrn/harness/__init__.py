from .replay import ReplayMemory, epoch_batches
from .episodes import ActionRewrite, EpisodeResult, run_episode
from .evaluation import episode_returns, evaluate
from .config import load_experiment_config, load_sweep_config, resolve_game_path
from .metrics import checkpoint_path, curve_frame, write_training_outputs
from .training import (
    BlockRecord,
    CurvePoint,
    LearningCurve,
    SeedRun,
    TrainingResult,
    aggregate_curve,
    train,
    train_seed,
)
from .sweep import SweepResult, SweepVariant, expand_sweep, run_sweep
