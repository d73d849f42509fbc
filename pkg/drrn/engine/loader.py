"""
Game file loading and structural validation.

A game file is a JSON document with top-level keys ``title``, ``kind``,
``start``, ``step_penalty``, ``max_steps``, ``states`` (plus optional
``version`` and ``max_actions``). Validation collects every violated invariant
rather than stopping at the first one.
"""
import json
import logging
from collections import deque
from pathlib import Path
from typing import BinaryIO, List, Union

from pydantic import ValidationError

from drrn.core.errors import GameParseError, GameValidationError
from drrn.core.models import GameKind, GameSpec

logger = logging.getLogger("GameEngine")

PROBABILITY_TOLERANCE = 1e-9


def _parse(raw: Union[bytes, str]) -> GameSpec:
    if isinstance(raw, bytes):
        try:
            raw = raw.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GameParseError(f"game file is not valid UTF-8: {e}") from e
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise GameParseError(e.msg, line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise GameParseError("top level of a game file must be an object", line=1, column=1)
    try:
        return GameSpec.model_validate(data)
    except ValidationError as e:
        violations = [
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in e.errors()
        ]
        raise GameValidationError(violations) from e


def find_violations(game: GameSpec) -> List[str]:
    """
    Check every structural invariant of a parsed game.

    Args:
        game (GameSpec): The parsed game.

    Returns:
        List[str]: One message per violated invariant; empty when the game is valid.
    """
    violations: List[str] = []
    seen = set()
    for state in game.states:
        if state.id in seen:
            violations.append(f"duplicate state id '{state.id}'")
        seen.add(state.id)

    if not game.has_state(game.start):
        violations.append(f"start state '{game.start}' does not exist")

    for state in game.states:
        if state.is_terminal and state.actions:
            violations.append(f"terminal state '{state.id}' has actions")
        if not state.is_terminal and not state.actions:
            violations.append(f"non-terminal state '{state.id}' has no actions")
        if game.max_actions is not None and len(state.actions) > game.max_actions:
            violations.append(
                f"state '{state.id}' offers {len(state.actions)} actions, "
                f"more than max_actions {game.max_actions}"
            )
        for action in state.actions:
            where = f"state '{state.id}' action '{action.text}'"
            if action.hypertext and action.text not in state.text:
                violations.append(f"{where}: hypertext does not occur in the state text")
            if game.kind == GameKind.DETERMINISTIC and len(action.outcomes) != 1:
                violations.append(
                    f"{where}: {len(action.outcomes)} outcomes in a deterministic game"
                )
            total = sum(outcome.probability for outcome in action.outcomes)
            if abs(total - 1.0) > PROBABILITY_TOLERANCE:
                violations.append(f"{where}: distribution sums to {total:.10g}")
            for outcome in action.outcomes:
                if not game.has_state(outcome.next):
                    violations.append(
                        f"{where}: transition target '{outcome.next}' does not exist"
                    )

    if game.has_state(game.start) and not _terminal_reachable(game):
        violations.append("no terminal state is reachable from the start state")
    return violations


def _terminal_reachable(game: GameSpec) -> bool:
    frontier = deque([game.start])
    visited = {game.start}
    while frontier:
        state = game.state(frontier.popleft())
        if state.is_terminal:
            return True
        for action in state.actions:
            for outcome in action.outcomes:
                if outcome.next not in visited and game.has_state(outcome.next):
                    visited.add(outcome.next)
                    frontier.append(outcome.next)
    return False


def load_game(source: BinaryIO) -> GameSpec:
    """
    Load and validate a game from a byte stream.

    Args:
        source (BinaryIO): Stream positioned at the start of a game file.

    Returns:
        GameSpec: The validated game.

    Raises:
        GameParseError: The stream is not a JSON object (carries line and column).
        GameValidationError: The game violates one or more invariants.
    """
    game = _parse(source.read())
    violations = find_violations(game)
    if violations:
        raise GameValidationError(violations)
    logger.debug(f"Loaded game '{game.title}' with {len(game.states)} states")
    return game


def load_game_file(path: Union[str, Path]) -> GameSpec:
    """Load and validate a game file from disk."""
    with open(path, "rb") as f:
        return load_game(f)


def validate_game(source: BinaryIO) -> List[str]:
    """
    Validate a game stream without raising.

    Returns:
        List[str]: Parse or invariant violations; empty when the game is valid.
    """
    try:
        game = _parse(source.read())
    except GameParseError as e:
        return [f"parse error: {e}"]
    except GameValidationError as e:
        return e.violations
    return find_violations(game)
