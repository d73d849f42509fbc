"""
Exact dynamic-programming oracles over a game's underlying finite MDP.

The values here ignore action texts entirely; they are ground truth for
testing learned Q-functions and for scoring training runs.
"""
from typing import Dict, List, Mapping, Sequence

import numpy as np

from drrn.core.models import GameSpec

Policy = Mapping[str, Sequence[float]]


def _transition_reward(game: GameSpec, next_id: str) -> float:
    state = game.state(next_id)
    return float(state.terminal_reward) if state.is_terminal else float(game.step_penalty)


def _backup(game: GameSpec, values: Dict[str, float], state_id: str, gamma: float) -> List[float]:
    q_values = []
    for action in game.state(state_id).actions:
        total = 0.0
        for outcome in action.outcomes:
            future = 0.0 if game.state(outcome.next).is_terminal else values[outcome.next]
            total += outcome.probability * (_transition_reward(game, outcome.next) + gamma * future)
        q_values.append(total)
    return q_values


def enumerate_optimal_value(
    game: GameSpec, gamma: float, tolerance: float = 1e-10, max_iterations: int = 1_000_000
) -> Dict[str, float]:
    """
    Value iteration to the optimal state values.

    Terminal states have value 0; their reward is paid on the transition into
    them. The step cap is not modelled.

    Args:
        game (GameSpec): A validated game.
        gamma (float): Discount in [0, 1).
        tolerance (float): Sup-norm distance to the fixed point on return.
        max_iterations (int): Safety bound on sweeps.

    Returns:
        Dict[str, float]: Optimal value per state id.
    """
    if not 0.0 <= gamma < 1.0:
        raise ValueError("gamma must lie in [0, 1) for value iteration")
    values = {state.id: 0.0 for state in game.states}
    # A sweep change below tolerance*(1-gamma) bounds the distance to the fixed point by tolerance
    threshold = tolerance * (1.0 - gamma)
    for _ in range(max_iterations):
        delta = 0.0
        updated = {}
        for state in game.states:
            if state.is_terminal:
                updated[state.id] = 0.0
                continue
            best = max(_backup(game, values, state.id, gamma))
            delta = max(delta, abs(best - values[state.id]))
            updated[state.id] = best
        values = updated
        if delta <= threshold:
            break
    return values


def optimal_q_values(game: GameSpec, gamma: float) -> Dict[str, List[float]]:
    """Optimal Q-value per state id, listed in the state's underlying action order."""
    values = enumerate_optimal_value(game, gamma)
    return {
        state.id: _backup(game, values, state.id, gamma)
        for state in game.states
        if not state.is_terminal
    }


def greedy_policy(game: GameSpec, gamma: float) -> Dict[str, int]:
    """Optimal underlying action index per non-terminal state (lowest index on ties)."""
    return {
        state_id: int(np.argmax(q_values))
        for state_id, q_values in optimal_q_values(game, gamma).items()
    }


def policy_return(game: GameSpec, policy: Policy) -> float:
    """
    Expected undiscounted episode return of a tabular policy under the step cap.

    Finite-horizon evaluation with horizon ``game.max_steps`` reproduces the
    capped episodes exactly: a capped episode collects max_steps step penalties.

    Args:
        game (GameSpec): A validated game.
        policy: Probabilities over each non-terminal state's underlying actions.

    Returns:
        float: Expected return from the start state.
    """
    index = {state.id: i for i, state in enumerate(game.states)}
    n = len(game.states)
    transitions = np.zeros((n, n))
    rewards = np.zeros(n)
    for state in game.states:
        if state.is_terminal:
            continue
        probs = np.asarray(policy[state.id], dtype=float)
        for weight, action in zip(probs, state.actions):
            for outcome in action.outcomes:
                mass = weight * outcome.probability
                rewards[index[state.id]] += mass * _transition_reward(game, outcome.next)
                if not game.state(outcome.next).is_terminal:
                    transitions[index[state.id], index[outcome.next]] += mass
    values = np.zeros(n)
    for _ in range(game.max_steps):
        values = rewards + transitions @ values
    return float(values[index[game.start]])


def optimal_return(game: GameSpec, gamma: float) -> float:
    """Expected undiscounted return of the greedy optimal policy."""
    greedy = greedy_policy(game, gamma)
    policy = {
        state_id: np.eye(len(game.state(state_id).actions))[choice]
        for state_id, choice in greedy.items()
    }
    return policy_return(game, policy)


def random_return(game: GameSpec) -> float:
    """Expected undiscounted return of the uniform random policy."""
    policy = {
        state.id: np.full(len(state.actions), 1.0 / len(state.actions))
        for state in game.states
        if not state.is_terminal
    }
    return policy_return(game, policy)
