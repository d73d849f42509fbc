from collections import Counter

import numpy as np
import pytest
from scipy.stats import chi2

from drrn.core.errors import EpisodeError
from drrn.engine import reset, step
from tests.conftest import game_from_dict, looping_data


def test_reset_presents_start_state(two_state_game):
    handle, observation = reset(two_state_game, 0)
    assert observation.state_text == "a quiet room"
    assert observation.action_texts == ["leave now"]
    assert observation.step_index == 0
    assert not observation.done


def test_terminal_step_pays_terminal_reward(two_state_game):
    handle, _ = reset(two_state_game, 0)
    reward, observation = step(handle, 0)
    assert reward == 20
    assert observation.done and not observation.truncated
    assert observation.action_texts == []


def test_non_terminal_step_pays_step_penalty(vault_game):
    handle, observation = reset(vault_game, 0)
    choice = observation.action_texts.index("climb ladder")
    reward, observation = step(handle, choice)
    assert reward == pytest.approx(-0.1)
    assert observation.state_text == "brick tunnel"


def test_step_after_done_raises(two_state_game):
    handle, _ = reset(two_state_game, 0)
    step(handle, 0)
    with pytest.raises(EpisodeError):
        step(handle, 0)


@pytest.mark.parametrize("choice", [-1, 2, 10])
def test_out_of_range_choice_raises(vault_game, choice):
    handle, _ = reset(vault_game, 0)
    with pytest.raises(EpisodeError):
        step(handle, choice)


def test_presented_permutation_maps_to_underlying_actions(lighthouse_game):
    handle, observation = reset(lighthouse_game, 3)
    state = lighthouse_game.state(observation.state_id)
    assert observation.action_texts == [state.actions[i].text for i in observation.presented_permutation]
    assert sorted(observation.presented_permutation) == list(range(len(state.actions)))


def test_step_cap_truncates_at_max_steps():
    game = game_from_dict(looping_data(max_steps=25))
    handle, observation = reset(game, 1)
    steps = 0
    while not observation.done:
        _, observation = step(handle, 0)
        steps += 1
    assert steps == 25
    assert observation.truncated
    assert handle.total_reward == pytest.approx(-0.1 * 25)


def test_fixed_seed_reproduces_trajectory(courier_game):
    def play(seed):
        handle, observation = reset(courier_game, seed)
        trace = []
        while not observation.done:
            reward, observation = step(handle, 0)
            trace.append((observation.state_id, tuple(observation.action_texts), reward))
        return trace

    assert play(5) == play(5)


def test_shuffle_is_uniform_over_permutations(lighthouse_game):
    """All 3! orders of a three-action state appear equally often (chi-square test)."""
    rng = np.random.default_rng(2024)
    counts = Counter()
    draws = 24_000
    for _ in range(draws):
        _, observation = reset(lighthouse_game, rng)
        counts[tuple(observation.presented_permutation)] += 1
    observed = np.array(list(counts.values()))
    assert len(observed) == 6
    expected = draws / 6
    statistic = float(((observed - expected) ** 2 / expected).sum())
    assert statistic < chi2.ppf(0.999, df=5)


def test_four_action_shuffle_is_uniform():
    actions = [{"text": f"door {name}", "next": "end"} for name in "abcd"]
    game = game_from_dict(
        {
            "title": "Doors",
            "kind": "deterministic",
            "start": "hall",
            "states": [
                {"id": "hall", "text": "four doors", "actions": actions},
                {"id": "end", "text": "done", "terminal_reward": 0},
            ],
        }
    )
    rng = np.random.default_rng(7)
    counts = Counter(tuple(reset(game, rng)[1].presented_permutation) for _ in range(48_000))
    observed = np.array(list(counts.values()))
    assert len(observed) == 24
    expected = 48_000 / 24
    statistic = float(((observed - expected) ** 2 / expected).sum())
    assert statistic < chi2.ppf(0.999, df=23)


def test_stochastic_outcome_frequencies_within_three_sigma(coin_game):
    rng = np.random.default_rng(99)
    samples = 10_000
    heads = 0
    for _ in range(samples):
        handle, _ = reset(coin_game, rng)
        reward, _ = step(handle, 0)
        heads += reward == 1
    sigma = np.sqrt(samples * 0.3 * 0.7)
    assert abs(heads - samples * 0.3) < 3 * sigma
