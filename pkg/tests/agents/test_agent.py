import numpy as np
import pytest

from drrn.agents import (
    DRRNetwork,
    LinearQ,
    MaxActionDQN,
    PerActionDQN,
    TextAgent,
    build_network,
    create_agent,
    load_agent,
    save_agent,
)
from drrn.core.errors import ConfigError, DimensionMismatchError
from drrn.core.models import AgentConfig, InteractionKind
from drrn.text import Featurizer


@pytest.mark.parametrize(
    "arch, network_type",
    [("DRRN", DRRNetwork), ("PA_DQN", PerActionDQN), ("MA_DQN", MaxActionDQN), ("Linear", LinearQ)],
)
def test_create_agent_builds_each_architecture(courier_game, arch, network_type):
    agent = create_agent(AgentConfig(arch=arch), courier_game, np.random.default_rng(0))
    assert type(agent.network) is network_type
    assert agent.max_actions == 6
    q = agent.q_values("You stand in the office.", ["taxi", "tram bell"])
    assert q.shape == (2,)


def test_same_seed_gives_same_weights(vault_game):
    first = create_agent(AgentConfig(), vault_game, np.random.default_rng(5))
    second = create_agent(AgentConfig(), vault_game, np.random.default_rng(5))
    for name, value in first.parameters.items():
        np.testing.assert_array_equal(value, second.parameters[name])


def test_max_actions_below_game_limit_rejected(courier_game):
    with pytest.raises(ConfigError):
        create_agent(AgentConfig(arch="MA_DQN", max_actions=3), courier_game, np.random.default_rng(0))


def test_tied_agent_uses_shared_vocabulary(vault_game):
    agent = create_agent(AgentConfig(tied=True), vault_game, np.random.default_rng(0))
    assert agent.featurizer.shared
    assert agent.network.tied
    assert all(name.startswith("tower.") for name in agent.parameters)


def test_tied_network_needs_shared_vocabulary(vault_game):
    config = AgentConfig(tied=True)
    featurizer = Featurizer.from_game(vault_game)
    with pytest.raises(ConfigError):
        build_network(config, featurizer, 2, np.random.default_rng(0))


def test_config_must_match_network(vault_game):
    agent = create_agent(AgentConfig(), vault_game, np.random.default_rng(0))
    with pytest.raises(ConfigError):
        TextAgent(AgentConfig(arch="Linear"), agent.featurizer, agent.network, 2)


def test_drrn_scores_are_permutation_equivariant(courier_game):
    agent = create_agent(AgentConfig(), courier_game, np.random.default_rng(1))
    texts = ["taxi", "tram bell", "shortcut"]
    q = agent.q_values("the office", texts)
    reordered = agent.q_values("the office", texts[::-1])
    np.testing.assert_allclose(reordered, q[::-1])


def test_max_action_outputs_depend_on_slot_order(courier_game):
    agent = create_agent(AgentConfig(arch="MA_DQN"), courier_game, np.random.default_rng(1))
    texts = ["taxi", "tram bell", "shortcut"]
    q = agent.q_values("the office", texts)
    reordered = agent.q_values("the office", texts[::-1])
    assert not np.allclose(reordered, q[::-1])


def test_max_action_overflow_raises(vault_game):
    agent = create_agent(AgentConfig(arch="MA_DQN"), vault_game, np.random.default_rng(0))
    with pytest.raises(DimensionMismatchError):
        agent.q_values("amber lobby", ["climb ladder", "open hatch", "pull lever"])


def test_empty_action_list_raises(vault_game):
    agent = create_agent(AgentConfig(), vault_game, np.random.default_rng(0))
    with pytest.raises(ValueError):
        agent.q_values("amber lobby", [])


def test_embeddings_only_for_drrn(vault_game):
    drrn = create_agent(AgentConfig(hidden_dim=7), vault_game, np.random.default_rng(0))
    assert drrn.embed_state("amber lobby").shape == (7,)
    assert drrn.embed_action("open hatch").shape == (7,)
    linear = create_agent(AgentConfig(arch="Linear"), vault_game, np.random.default_rng(0))
    with pytest.raises(ConfigError):
        linear.embed_state("amber lobby")


def test_act_is_reproducible(vault_game):
    agent = create_agent(AgentConfig(), vault_game, np.random.default_rng(0))
    texts = ["climb ladder", "open hatch"]
    first = [agent.act("amber lobby", texts, np.random.default_rng(9)) for _ in range(5)]
    second = [agent.act("amber lobby", texts, np.random.default_rng(9)) for _ in range(5)]
    assert first == second


@pytest.mark.parametrize(
    "config",
    [
        AgentConfig(),
        AgentConfig(tied=True, layers=2),
        AgentConfig(interaction=InteractionKind.BILINEAR, action_hidden_dim=5),
        AgentConfig(interaction=InteractionKind.CONCAT_MLP, interaction_hidden=4, binary_features=True),
        AgentConfig(arch="PA_DQN", layers=2),
        AgentConfig(arch="MA_DQN", max_actions=4),
        AgentConfig(arch="Linear"),
    ],
)
def test_checkpoint_round_trip(tmp_path, vault_game, config):
    agent = create_agent(config, vault_game, np.random.default_rng(6))
    path = save_agent(agent, tmp_path / "agent.ckpt")
    restored = load_agent(path)
    assert restored.config == agent.config
    assert restored.max_actions == agent.max_actions
    assert restored.featurizer.state_vocab.tokens == agent.featurizer.state_vocab.tokens
    assert restored.featurizer.shared == agent.featurizer.shared
    assert restored.featurizer.binary == agent.featurizer.binary
    for name, value in agent.parameters.items():
        assert np.array_equal(restored.parameters[name], value)
    texts = ["climb ladder", "open hatch"]
    np.testing.assert_array_equal(restored.q_values("amber lobby", texts), agent.q_values("amber lobby", texts))


@pytest.mark.parametrize("arch", ["DRRN", "PA_DQN", "MA_DQN", "Linear"])
def test_initial_q_values_are_close_together(vault_game, arch):
    start = vault_game.state(vault_game.start)
    texts = [action.text for action in start.actions]
    for seed in range(100):
        agent = create_agent(AgentConfig(arch=arch), vault_game, np.random.default_rng(seed))
        assert np.ptp(agent.q_values(start.text, texts)) < 1.0


@pytest.mark.parametrize("arch", ["DRRN", "PA_DQN", "MA_DQN"])
def test_initial_q_values_are_close_together_on_long_texts(courier_game, arch):
    start = courier_game.state(courier_game.start)
    texts = [action.text for action in start.actions]
    for seed in range(100):
        agent = create_agent(AgentConfig(arch=arch), courier_game, np.random.default_rng(seed))
        assert np.ptp(agent.q_values(start.text, texts)) < 1.0
