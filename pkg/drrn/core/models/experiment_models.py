from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from drrn.core.config import settings


class Architecture(str, Enum):
    DRRN = "DRRN"
    PA_DQN = "PA_DQN"
    MA_DQN = "MA_DQN"
    LINEAR = "Linear"


class InteractionKind(str, Enum):
    INNER_PRODUCT = "inner_product"
    BILINEAR = "bilinear"
    CONCAT_MLP = "concat_mlp"


class ReplayScope(str, Enum):
    MEMORY = "memory"
    BLOCK = "block"


class AgentConfig(BaseModel):
    """
    Architecture and policy hyperparameters of a Q-learning agent.

    Attributes:
        arch (Architecture): DRRN, PA_DQN, MA_DQN or Linear.
        layers (int): Hidden layers per tower (ignored by Linear).
        hidden_dim (int): Width of every hidden layer.
        action_hidden_dim (Optional[int]): DRRN action-tower width when it differs
            from the state tower (bilinear / concat_mlp interactions only).
        interaction (InteractionKind): DRRN pairing function g.
        interaction_hidden (Optional[int]): Hidden width of the concat_mlp interaction.
        tied (bool): DRRN shares one tower between state and action sides.
        max_actions (Optional[int]): Output slots of MA_DQN / Linear; taken from the
            game's action limit when omitted.
        alpha (float): Softmax scaling factor.
        gamma (float): Discount factor.
        binary_features (bool): Bag-of-words indicators instead of counts.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    arch: Architecture = Architecture.DRRN
    layers: int = Field(1, ge=1)
    hidden_dim: int = Field(20, ge=1)
    action_hidden_dim: Optional[int] = Field(None, ge=1)
    interaction: InteractionKind = InteractionKind.INNER_PRODUCT
    interaction_hidden: Optional[int] = Field(None, ge=1)
    tied: bool = False
    max_actions: Optional[int] = Field(None, ge=1)
    alpha: float = Field(0.2, gt=0.0)
    gamma: float = Field(0.9, ge=0.0, lt=1.0)
    binary_features: bool = False

    @model_validator(mode="after")
    def check_architecture_options(self) -> "AgentConfig":
        if self.arch != Architecture.DRRN:
            if self.tied:
                raise ValueError("tied towers are only defined for DRRN")
            if self.action_hidden_dim is not None:
                raise ValueError("action_hidden_dim is only defined for DRRN")
            return self
        if self.tied and self.action_hidden_dim not in (None, self.hidden_dim):
            raise ValueError("tied towers need identical state and action widths")
        if (
            self.interaction == InteractionKind.INNER_PRODUCT
            and self.action_hidden_dim not in (None, self.hidden_dim)
        ):
            raise ValueError(
                "inner_product interaction needs equal final dimensions on both towers"
            )
        return self

    @property
    def action_width(self) -> int:
        return self.action_hidden_dim or self.hidden_dim


class ExperimentConfig(BaseModel):
    """
    One training experiment: a game, an agent and the experience-replay protocol.

    Attributes:
        game (Path): Game file.
        agent (AgentConfig): Agent to train.
        episodes (int): Total training episodes M per seed.
        episodes_per_block (int): Episodes generated before each replay phase.
        epochs_per_block (int): Passes over the replay data per block.
        batch_size (int): Mini-batch size.
        eta (float): Constant learning rate.
        replay_capacity (int): Replay memory capacity N.
        replay_scope (ReplayScope): Train on the whole memory or the newest block only.
        eval_episodes (int): Evaluation episodes per curve point.
        seeds (List[int]): Independent runs aggregated into the curve.
        master_seed (int): Root of every random stream.
        snapshot_episodes (List[int]): Episode counts at which checkpoints are saved.
        freeze (bool): Generate and evaluate but never update parameters.
    """
    model_config = ConfigDict(extra="forbid")

    game: Path
    agent: AgentConfig = AgentConfig()
    episodes: int = Field(2000, ge=0)
    episodes_per_block: int = Field(settings.training.episodes_per_block, ge=1)
    epochs_per_block: int = Field(settings.training.epochs_per_block, ge=1)
    batch_size: int = Field(settings.training.batch_size, ge=1)
    eta: float = Field(settings.training.eta, gt=0.0)
    replay_capacity: int = Field(settings.training.replay_capacity, ge=1)
    replay_scope: ReplayScope = ReplayScope.MEMORY
    eval_episodes: int = Field(settings.training.eval_episodes, ge=1)
    seeds: List[int] = Field(default_factory=lambda: [0, 1, 2, 3, 4], min_length=1)
    master_seed: int = Field(0, ge=0)
    snapshot_episodes: List[int] = Field(default_factory=lambda: [200, 400, 600])
    freeze: bool = False

    @model_validator(mode="after")
    def check_seeds(self) -> "ExperimentConfig":
        if len(set(self.seeds)) != len(self.seeds):
            raise ValueError("seeds must be distinct")
        if any(seed < 0 for seed in self.seeds):
            raise ValueError("seeds must be non-negative")
        if any(n <= 0 for n in self.snapshot_episodes):
            raise ValueError("snapshot_episodes must be positive")
        return self


AgentValue = Union[bool, int, float, str, None]


class SweepConfig(BaseModel):
    """
    A family of experiments sharing one protocol and differing only in the agent.

    Attributes:
        base (ExperimentConfig): Game, replay protocol, seeds and default agent.
        grid (Dict[str, List[AgentValue]]): Agent fields crossed into every combination.
        variants (Dict[str, Dict[str, AgentValue]]): Named agent overrides run in addition to the grid.
    """
    model_config = ConfigDict(extra="forbid")

    base: ExperimentConfig
    grid: Dict[str, List[AgentValue]] = Field(default_factory=dict)
    variants: Dict[str, Dict[str, AgentValue]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_fields(self) -> "SweepConfig":
        if not self.grid and not self.variants:
            raise ValueError("a sweep needs a grid or at least one variant")
        known = set(AgentConfig.model_fields)
        names = set(self.grid).union(*(set(overrides) for overrides in self.variants.values()))
        unknown = sorted(names - known)
        if unknown:
            raise ValueError(f"unknown agent fields: {', '.join(unknown)}")
        if any(not values for values in self.grid.values()):
            raise ValueError("every grid axis needs at least one value")
        return self
