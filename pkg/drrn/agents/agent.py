"""
Text-level agent: a featurizer and a Q-network behind one interface that
accepts raw state and action strings.
"""
from typing import Dict, List, Optional, Sequence

import numpy as np

from drrn.agents.base import QNetwork, ScoredActions
from drrn.agents.baselines import LinearQ, MaxActionDQN, PerActionDQN
from drrn.agents.drrn import DRRNetwork
from drrn.agents.policy import greedy_index, select_action
from drrn.core.errors import ConfigError
from drrn.core.models import AgentConfig, Architecture, GameSpec
from drrn.text import BowVector, Featurizer


class TextAgent:
    """
    Q-learning agent over raw texts.

    Attributes:
        config (AgentConfig): Architecture and policy hyperparameters.
        featurizer (Featurizer): Vocabularies of the game the agent was built for.
        network (QNetwork): The Q-function approximator.
        max_actions (int): Output slots of multi-output baselines (informational for the others).
    """

    def __init__(self, config: AgentConfig, featurizer: Featurizer, network: QNetwork, max_actions: int):
        if network.arch != config.arch:
            raise ConfigError(f"network is {network.arch.value}, config asks for {config.arch.value}")
        self.config = config
        self.featurizer = featurizer
        self.network = network
        self.max_actions = max_actions
        self._params: Optional[Dict[str, np.ndarray]] = None

    @property
    def parameters(self) -> Dict[str, np.ndarray]:
        """Live parameter arrays (the same objects the network computes with)."""
        if self._params is None:
            self._params = self.network.parameters()
        return self._params

    def state_bow(self, text: str) -> BowVector:
        return self.featurizer.state(text)

    def action_bows(self, texts: Sequence[str]) -> List[BowVector]:
        return [self.featurizer.action(text) for text in texts]

    def score_texts(self, state_text: str, action_texts: Sequence[str]) -> ScoredActions:
        return self.network.score(self.state_bow(state_text), self.action_bows(action_texts))

    def q_values(self, state_text: str, action_texts: Sequence[str]) -> np.ndarray:
        return self.score_texts(state_text, action_texts).q

    def act(self, state_text: str, action_texts: Sequence[str], rng: np.random.Generator) -> int:
        """Softmax-sample an index into ``action_texts``."""
        return select_action(self.q_values(state_text, action_texts), self.config.alpha, rng)

    def greedy(self, state_text: str, action_texts: Sequence[str]) -> int:
        return greedy_index(self.q_values(state_text, action_texts))

    def _drrn(self) -> DRRNetwork:
        if not isinstance(self.network, DRRNetwork):
            raise ConfigError(f"{self.config.arch.value} has no separate text embeddings")
        return self.network

    def embed_state(self, text: str) -> np.ndarray:
        """Final-layer state embedding h_{L,s}."""
        return self._drrn().embed_state(self.state_bow(text))

    def embed_action(self, text: str) -> np.ndarray:
        """Final-layer action embedding h_{L,a}."""
        return self._drrn().embed_action(self.featurizer.action(text))


def build_network(
    config: AgentConfig, featurizer: Featurizer, max_actions: int, rng: np.random.Generator
) -> QNetwork:
    """
    Randomly initialized Q-network sized for the featurizer's vocabularies.

    Raises:
        ConfigError: Tied towers without a shared vocabulary.
    """
    state_dim, action_dim = featurizer.state_dim, featurizer.action_dim
    if config.arch == Architecture.DRRN:
        if config.tied and not featurizer.shared:
            raise ConfigError("tied towers need a shared vocabulary")
        return DRRNetwork.initialize(
            state_dim,
            action_dim,
            config.layers,
            config.hidden_dim,
            rng,
            action_hidden_dim=config.action_hidden_dim,
            interaction=config.interaction,
            interaction_hidden=config.interaction_hidden,
            tied=config.tied,
        )
    if config.arch == Architecture.PA_DQN:
        return PerActionDQN.initialize(state_dim, action_dim, config.layers, config.hidden_dim, rng)
    if config.arch == Architecture.MA_DQN:
        return MaxActionDQN.initialize(
            state_dim, action_dim, max_actions, config.layers, config.hidden_dim, rng
        )
    return LinearQ.initialize(state_dim, action_dim, max_actions, rng)


def create_agent(config: AgentConfig, game: GameSpec, rng: np.random.Generator) -> TextAgent:
    """
    Fresh agent for a game: vocabularies from the game's texts, random weights.

    Args:
        config (AgentConfig): Agent to build.
        game (GameSpec): Source of the vocabularies and the action limit.
        rng (np.random.Generator): Initialization stream.

    Returns:
        TextAgent: The untrained agent.
    """
    featurizer = Featurizer.from_game(game, shared=config.tied, binary=config.binary_features)
    max_actions = config.max_actions or game.action_limit
    if max_actions < game.action_limit:
        raise ConfigError(
            f"max_actions={max_actions} is below the game's {game.action_limit} feasible actions"
        )
    network = build_network(config, featurizer, max_actions, rng)
    return TextAgent(config, featurizer, network, max_actions)
