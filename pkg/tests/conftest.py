import io
import json

import pytest

from drrn.core.config import settings
from drrn.engine import load_game, load_game_file

GAMES_DIR = settings.data_path / "games"
PARAPHRASES_DIR = settings.data_path / "paraphrases"

# (state vocabulary, action vocabulary) sizes of the bundled games
BUNDLED_VOCAB_SIZES = {"vault": (9, 12), "cave": (29, 6), "courier": (173, 101), "lighthouse": (177, 114)}

# 8 of the 43 paraphrase tokens in courier_unseen.tsv are outside the courier action vocabulary
UNSEEN_PARAPHRASE_OOV = (8, 43)


def game_from_dict(data):
    return load_game(io.BytesIO(json.dumps(data).encode("utf-8")))


def two_state_data():
    return {
        "title": "Two states",
        "kind": "deterministic",
        "start": "room",
        "states": [
            {"id": "room", "text": "a quiet room", "actions": [{"text": "leave now", "next": "end"}]},
            {"id": "end", "text": "the end", "terminal_reward": 20},
        ],
    }


def looping_data(max_steps=500):
    # The exit is reachable, but with negligible probability
    return {
        "title": "Loop",
        "kind": "stochastic",
        "start": "hall",
        "max_steps": max_steps,
        "states": [
            {
                "id": "hall",
                "text": "an endless hall",
                "actions": [
                    {
                        "text": "walk on",
                        "outcomes": [{"p": 0.999999999999, "next": "hall"}, {"p": 1e-12, "next": "exit"}],
                    },
                    {"text": "turn around", "next": "hall"},
                ],
            },
            {"id": "exit", "text": "an exit nobody reaches", "terminal_reward": 1},
        ],
    }


def coin_data():
    return {
        "title": "Coin",
        "kind": "stochastic",
        "start": "table",
        "states": [
            {
                "id": "table",
                "text": "a coin on the table",
                "actions": [
                    {
                        "text": "flip the coin",
                        "outcomes": [{"p": 0.3, "next": "heads"}, {"p": 0.7, "next": "tails"}],
                    }
                ],
            },
            {"id": "heads", "text": "heads", "terminal_reward": 1},
            {"id": "tails", "text": "tails", "terminal_reward": -1},
        ],
    }


@pytest.fixture
def two_state_game():
    return game_from_dict(two_state_data())


@pytest.fixture
def looping_game():
    return game_from_dict(looping_data())


@pytest.fixture
def coin_game():
    return game_from_dict(coin_data())


@pytest.fixture
def vault_game():
    return load_game_file(GAMES_DIR / "vault.json")


@pytest.fixture
def cave_game():
    return load_game_file(GAMES_DIR / "cave.json")


@pytest.fixture
def lighthouse_game():
    return load_game_file(GAMES_DIR / "lighthouse.json")


@pytest.fixture
def courier_game():
    return load_game_file(GAMES_DIR / "courier.json")
