"""
Save and restore complete agents: parameters, agent config and vocabularies.
"""
import logging
from pathlib import Path
from typing import Union

import numpy as np

from drrn.agents.agent import TextAgent, build_network
from drrn.core.errors import DimensionMismatchError
from drrn.core.models import AgentConfig
from drrn.neural.checkpoint import load_params, save_params
from drrn.text import Featurizer, VocabSide, Vocabulary

logger = logging.getLogger("Checkpoint")


def save_agent(agent: TextAgent, path: Union[str, Path]) -> Path:
    """Write ``agent`` to ``path``; float parameters round-trip bit-exactly."""
    featurizer = agent.featurizer
    metadata = {
        "agent_config": agent.config.model_dump(mode="json"),
        "state_tokens": list(featurizer.state_vocab.tokens),
        "action_tokens": list(featurizer.action_vocab.tokens),
        "shared": featurizer.shared,
        "binary": featurizer.binary,
        "max_actions": agent.max_actions,
    }
    return save_params(path, agent.parameters, metadata)


def load_agent(path: Union[str, Path]) -> TextAgent:
    """
    Rebuild an agent written by ``save_agent``.

    Raises:
        DimensionMismatchError: Stored parameters do not match the stored config.
        ValueError: Not a checkpoint of a supported version.
    """
    params, metadata = load_params(path)
    config = AgentConfig.model_validate(metadata["agent_config"])
    binary = bool(metadata["binary"])
    if metadata["shared"]:
        vocab = Vocabulary(metadata["state_tokens"], VocabSide.SHARED, binary=binary)
        featurizer = Featurizer(vocab, vocab)
    else:
        featurizer = Featurizer(
            Vocabulary(metadata["state_tokens"], VocabSide.STATE, binary=binary),
            Vocabulary(metadata["action_tokens"], VocabSide.ACTION, binary=binary),
        )
    max_actions = int(metadata["max_actions"])
    network = build_network(config, featurizer, max_actions, np.random.default_rng(0))
    live = network.parameters()
    if set(live) != set(params):
        raise DimensionMismatchError(
            f"checkpoint parameters {sorted(params)} do not match the network's {sorted(live)}"
        )
    for name, array in live.items():
        if params[name].shape != array.shape:
            raise DimensionMismatchError(
                f"{name}: stored shape {params[name].shape}, expected {array.shape}"
            )
        array[...] = params[name]
    logger.info(f"Loaded {config.arch.value} agent from {path}")
    return TextAgent(config, featurizer, network, max_actions)
