from .loader import find_violations, load_game, load_game_file, validate_game
from .simulator import EpisodeHandle, reset, step
from .oracle import (
    enumerate_optimal_value,
    greedy_policy,
    optimal_q_values,
    optimal_return,
    policy_return,
    random_return,
)
