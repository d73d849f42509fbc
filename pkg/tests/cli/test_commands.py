import json

import numpy as np
import pandas as pd
from typer.testing import CliRunner

from drrn.agents import load_agent
from drrn.analysis import q_table
from drrn.cli import drrn_app
from tests.conftest import GAMES_DIR, coin_data, two_state_data

runner = CliRunner()


def write_config(path, **extra):
    lines = [
        f'game = "{(GAMES_DIR / "vault.json").as_posix()}"',
        "episodes = 20",
        "episodes_per_block = 10",
        "eval_episodes = 5",
        "batch_size = 8",
        "eta = 0.01",
        "seeds = [0, 1]",
        "snapshot_episodes = [10]",
    ]
    lines += [f"{key} = {value}" for key, value in extra.items()]
    lines += ["[agent]", "hidden_dim = 8"]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_help_lists_commands():
    result = runner.invoke(drrn_app, ["--help"])
    assert result.exit_code == 0
    for command in ("validate", "train", "sweep", "eval", "paraphrase-eval", "pca", "qtable", "play"):
        assert command in result.output


def test_train_help():
    result = runner.invoke(drrn_app, ["train", "--help"])
    assert result.exit_code == 0
    assert "--workers" in result.output


def test_validate_bundled_game():
    result = runner.invoke(drrn_app, ["validate", "--game", "lighthouse.json"])
    assert result.exit_code == 0


def test_validate_reports_violation(tmp_path):
    data = coin_data()
    data["states"][0]["actions"][0]["outcomes"][0]["p"] = 0.5
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    result = runner.invoke(drrn_app, ["validate", "--game", str(path)])
    assert result.exit_code == 1
    assert "distribution sums to 1.2" in result.output


def test_validate_missing_game():
    result = runner.invoke(drrn_app, ["validate", "--game", "no-such-game.json"])
    assert result.exit_code == 1


def test_negative_seed_rejected(tmp_path):
    config = write_config(tmp_path / "exp.toml")
    result = runner.invoke(drrn_app, ["train", "--config", str(config), "--out", str(tmp_path / "o"), "--seed", "-1"])
    assert result.exit_code != 0
    assert "must be a non-negative integer" in result.output


def test_zero_workers_rejected(tmp_path):
    config = write_config(tmp_path / "exp.toml")
    result = runner.invoke(drrn_app, ["train", "--config", str(config), "--out", str(tmp_path / "o"), "--workers", "0"])
    assert result.exit_code != 0
    assert "must be a positive integer" in result.output


def test_invalid_config_exits_with_one(tmp_path):
    config = write_config(tmp_path / "exp.toml", episodes=-5)
    result = runner.invoke(drrn_app, ["train", "--config", str(config), "--out", str(tmp_path / "o")])
    assert result.exit_code == 1


def test_train_is_reproducible(tmp_path):
    config = write_config(tmp_path / "exp.toml")
    for name in ("a", "b"):
        result = runner.invoke(drrn_app, ["train", "--config", str(config), "--out", str(tmp_path / name)])
        assert result.exit_code == 0, result.output
    for name in ("curve.csv", "final.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
    assert (tmp_path / "a" / "checkpoints" / "seed-0" / "episodes-10.ckpt").is_file()


def test_sweep_writes_summary(tmp_path):
    config = tmp_path / "sweep.toml"
    config.write_text(
        "[base]\n"
        f'game = "{(GAMES_DIR / "vault.json").as_posix()}"\n'
        "episodes = 10\n"
        "episodes_per_block = 10\n"
        "eval_episodes = 5\n"
        "seeds = [0]\n"
        "snapshot_episodes = []\n"
        "[base.agent]\n"
        "hidden_dim = 8\n"
        "[grid]\n"
        'arch = ["DRRN", "Linear"]\n',
        encoding="utf-8",
    )
    result = runner.invoke(drrn_app, ["sweep", "--config", str(config), "--out", str(tmp_path / "s")])
    assert result.exit_code == 0, result.output
    summary = pd.read_csv(tmp_path / "s" / "sweep.csv")
    assert summary["label"].tolist() == ["arch=DRRN", "arch=Linear"]
    assert (tmp_path / "s" / "arch_Linear" / "final.csv").is_file()


class TestTrainedAgentCommands:
    def train(self, tmp_path):
        config = write_config(tmp_path / "exp.toml")
        result = runner.invoke(drrn_app, ["train", "--config", str(config), "--out", str(tmp_path / "run")])
        assert result.exit_code == 0, result.output
        return tmp_path / "run" / "checkpoints" / "seed-0"

    def test_eval_writes_csv(self, tmp_path):
        checkpoints = self.train(tmp_path)
        args = ["eval", "--checkpoint", str(checkpoints / "final.ckpt"), "--game", "vault.json", "--episodes", "10"]
        first = runner.invoke(drrn_app, args + ["--out", str(tmp_path / "e1")])
        second = runner.invoke(drrn_app, args + ["--out", str(tmp_path / "e2")])
        assert first.exit_code == 0, first.output
        assert (tmp_path / "e1" / "eval.csv").read_bytes() == (tmp_path / "e2" / "eval.csv").read_bytes()

    def test_qtable_matches_library(self, tmp_path):
        checkpoints = self.train(tmp_path)
        state_file = tmp_path / "state.txt"
        state_file.write_text("amber lobby\n", encoding="utf-8")
        actions_file = tmp_path / "actions.txt"
        actions_file.write_text("climb ladder\nopen hatch\nsing a song\n", encoding="utf-8")
        result = runner.invoke(
            drrn_app,
            [
                "qtable",
                "--checkpoint", str(checkpoints / "final.ckpt"),
                "--state-file", str(state_file),
                "--actions-file", str(actions_file),
                "--out", str(tmp_path / "q"),
            ],
        )
        assert result.exit_code == 0, result.output
        table = pd.read_csv(tmp_path / "q" / "qtable.csv")
        expected = q_table(
            load_agent(checkpoints / "final.ckpt"), "amber lobby", ["climb ladder", "open hatch", "sing a song"]
        )
        assert table["text"].tolist() == [row.text for row in expected]
        np.testing.assert_allclose(table["q"], [row.q for row in expected], rtol=0, atol=1e-12)
        assert table["all_oov"].tolist() == [False, False, True]

    def test_pca_across_checkpoints(self, tmp_path):
        checkpoints = self.train(tmp_path)
        result = runner.invoke(
            drrn_app,
            [
                "pca",
                "--checkpoint", str(checkpoints / "episodes-10.ckpt"),
                "--checkpoint", str(checkpoints / "final.ckpt"),
                "--game", "vault.json",
                "--out", str(tmp_path / "p"),
            ],
        )
        assert result.exit_code == 0, result.output
        frame = pd.read_csv(tmp_path / "p" / "pca.csv")
        assert set(frame["checkpoint"]) == {"episodes-10", "final"}
        assert len(frame) == 6

    def test_paraphrase_eval(self, tmp_path):
        checkpoints = self.train(tmp_path)
        paraphrases = tmp_path / "p.tsv"
        paraphrases.write_text("climb ladder\tladder climb\ngrab crown\tcrown grab\n", encoding="utf-8")
        result = runner.invoke(
            drrn_app,
            [
                "paraphrase-eval",
                "--checkpoint", str(checkpoints / "final.ckpt"),
                "--game", "vault.json",
                "--paraphrases", str(paraphrases),
                "--episodes", "10",
                "--out", str(tmp_path / "pe"),
            ],
        )
        assert result.exit_code == 0, result.output
        frame = pd.read_csv(tmp_path / "pe" / "paraphrase_eval.csv")
        assert frame["mean"].iloc[0] == frame["mean"].iloc[1]
        correlation = pd.read_csv(tmp_path / "pe" / "correlation.csv")
        assert list(correlation.columns) == ["q_original", "q_paraphrase"]

    def test_play_with_scripted_input(self, tmp_path):
        result = runner.invoke(drrn_app, ["play", "--game", "vault.json"], input="0\n" * 50)
        assert result.exit_code == 0, result.output
        assert "total reward" in result.output


def test_play_prints_bracketed_game_text_literally(tmp_path):
    data = two_state_data()
    data["states"][0]["text"] = "a quiet room [/] with [bold]brackets"
    path = tmp_path / "brackets.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    result = runner.invoke(drrn_app, ["play", "--game", str(path)], input="0\n")
    assert result.exit_code == 0, result.output
    assert "a quiet room [/] with [bold]brackets" in result.output


def test_about():
    result = runner.invoke(drrn_app, ["about"])
    assert result.exit_code == 0
    assert "Version" in result.output
