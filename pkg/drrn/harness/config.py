"""
Experiment configuration files (TOML).
"""
import logging
import tomllib
from pathlib import Path
from typing import Union

from pydantic import ValidationError

from drrn.core.config import settings
from drrn.core.errors import ConfigError
from drrn.core.models import ExperimentConfig, SweepConfig

logger = logging.getLogger("Trainer")


def resolve_game_path(game: Union[str, Path], base_dir: Union[str, Path, None] = None) -> Path:
    """
    Locate a game file.

    Relative paths are tried against ``base_dir`` first, then the bundled data
    directory and its ``games`` folder.

    Raises:
        ConfigError: No candidate exists.
    """
    game = Path(game)
    if game.is_absolute():
        candidates = [game]
    else:
        candidates = [Path(base_dir) / game] if base_dir is not None else [game]
        candidates += [settings.data_path / game, settings.data_path / "games" / game]
    for candidate in candidates:
        if candidate.is_file():
            return candidate
    raise ConfigError(f"game file {game} not found (tried {', '.join(str(c) for c in candidates)})")


def _read_toml(path: Path) -> dict:
    try:
        with open(path, "rb") as f:
            return tomllib.load(f)
    except FileNotFoundError as e:
        raise ConfigError(f"config file {path} not found") from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"{path}: {e}") from e


def load_experiment_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Parse and validate an experiment config file.

    Args:
        path: TOML file with top-level experiment keys and an ``[agent]`` table.

    Returns:
        ExperimentConfig: Validated config whose ``game`` path is resolved.

    Raises:
        ConfigError: Unreadable TOML, invalid values or a missing game file.
    """
    path = Path(path)
    try:
        config = ExperimentConfig.model_validate(_read_toml(path))
    except ValidationError as e:
        raise ConfigError(f"{path}: {e}") from e
    game = resolve_game_path(config.game, path.parent)
    logger.debug(f"Loaded experiment config {path} for game {game}")
    return config.model_copy(update={"game": game})


def load_sweep_config(path: Union[str, Path]) -> SweepConfig:
    """
    Parse and validate a sweep file: a ``[base]`` experiment (with ``[base.agent]``),
    plus a ``[grid]`` table of agent fields to cross and/or ``[variants.<name>]`` tables.

    Raises:
        ConfigError: Unreadable TOML, invalid values or a missing game file.
    """
    path = Path(path)
    try:
        sweep = SweepConfig.model_validate(_read_toml(path))
    except ValidationError as e:
        raise ConfigError(f"{path}: {e}") from e
    base = sweep.base.model_copy(update={"game": resolve_game_path(sweep.base.game, path.parent)})
    logger.debug(f"Loaded sweep config {path} for game {base.game}")
    return sweep.model_copy(update={"base": base})
