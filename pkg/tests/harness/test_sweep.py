import pandas as pd
import pytest
from pydantic import ValidationError

from drrn.core.config import settings
from drrn.core.errors import ConfigError
from drrn.core.models import AgentConfig, Architecture, ExperimentConfig, InteractionKind, SweepConfig
from drrn.harness import expand_sweep, load_sweep_config, run_sweep, train
from tests.conftest import GAMES_DIR

CONFIGS_DIR = settings.data_path / "configs"


def tiny_base(**overrides):
    values = dict(
        game=GAMES_DIR / "vault.json",
        agent=AgentConfig(hidden_dim=8),
        episodes=10,
        episodes_per_block=10,
        batch_size=8,
        eta=0.01,
        eval_episodes=5,
        seeds=[0, 1],
        snapshot_episodes=[],
    )
    values.update(overrides)
    return ExperimentConfig(**values)


def test_grid_crosses_axes_in_order():
    sweep = SweepConfig(base=tiny_base(), grid={"arch": ["DRRN", "PA_DQN"], "layers": [1, 2]})
    variants = expand_sweep(sweep)
    assert [variant.label for variant in variants] == [
        "arch=DRRN,layers=1",
        "arch=DRRN,layers=2",
        "arch=PA_DQN,layers=1",
        "arch=PA_DQN,layers=2",
    ]
    assert variants[3].config.agent.arch == Architecture.PA_DQN
    assert variants[3].config.agent.layers == 2
    assert variants[3].config.episodes == 10


def test_linear_depth_and_width_collapse_to_one_variant():
    sweep = SweepConfig(base=tiny_base(), grid={"arch": ["DRRN", "Linear"], "hidden_dim": [4, 8], "layers": [1, 2]})
    labels = [variant.label for variant in expand_sweep(sweep)]
    assert len(labels) == 5
    assert labels.count("arch=Linear") == 1


def test_named_variants_follow_the_grid():
    sweep = SweepConfig(
        base=tiny_base(),
        grid={"interaction": ["bilinear"]},
        variants={"wide action side": {"interaction": "bilinear", "action_hidden_dim": 16}},
    )
    variants = expand_sweep(sweep)
    assert [variant.label for variant in variants] == ["interaction=bilinear", "wide action side"]
    assert variants[1].config.agent.action_width == 16
    assert variants[1].slug == "wide_action_side"


def test_invalid_combination_is_a_config_error():
    sweep = SweepConfig(base=tiny_base(), grid={"arch": ["PA_DQN"], "tied": [True]})
    with pytest.raises(ConfigError):
        expand_sweep(sweep)


@pytest.mark.parametrize(
    "grid, variants",
    [({}, {}), ({"depth": [1]}, {}), ({"layers": []}, {}), ({}, {"x": {"hidden": 3}})],
)
def test_sweep_config_rejects(grid, variants):
    with pytest.raises(ValidationError):
        SweepConfig(base=tiny_base(), grid=grid, variants=variants)


def test_bundled_grid_covers_architectures_widths_and_depths():
    sweep = load_sweep_config(CONFIGS_DIR / "grid_courier.toml")
    assert sweep.base.game.is_file()
    variants = expand_sweep(sweep)
    # 3 layered architectures x 3 widths x 2 depths, plus one Linear model
    assert len(variants) == 19
    shapes = {(v.config.agent.arch, v.config.agent.hidden_dim, v.config.agent.layers) for v in variants}
    assert (Architecture.DRRN, 100, 2) in shapes
    assert (Architecture.MA_DQN, 50, 1) in shapes


def test_bundled_interaction_sweep_fixes_the_state_side():
    variants = expand_sweep(load_sweep_config(CONFIGS_DIR / "interaction_courier.toml"))
    assert len(variants) == 9
    assert all(v.config.agent.hidden_dim == 100 for v in variants)
    bilinear = [v.config.agent.action_width for v in variants if v.config.agent.interaction == InteractionKind.BILINEAR]
    assert bilinear == [10, 20, 50, 100]
    assert variants[-1].label == "inner_product"


def test_sweep_file_values_are_read(tmp_path):
    path = tmp_path / "sweep.toml"
    path.write_text(
        "[base]\n"
        'game = "vault.json"\n'
        "episodes = 10\n"
        "[base.agent]\n"
        "hidden_dim = 8\n"
        "[grid]\n"
        'arch = ["DRRN", "MA_DQN"]\n',
        encoding="utf-8",
    )
    sweep = load_sweep_config(path)
    assert sweep.base.game == GAMES_DIR / "vault.json"
    assert sweep.base.agent.hidden_dim == 8
    assert sweep.grid == {"arch": ["DRRN", "MA_DQN"]}


def test_sweep_file_with_unknown_field(tmp_path):
    path = tmp_path / "sweep.toml"
    path.write_text('[base]\ngame = "vault.json"\n[grid]\nwidth = [1]\n', encoding="utf-8")
    with pytest.raises(ConfigError):
        load_sweep_config(path)


def test_run_sweep_writes_summary_and_variant_outputs(tmp_path):
    sweep = SweepConfig(base=tiny_base(), grid={"arch": ["DRRN", "PA_DQN"]})
    result = run_sweep(sweep, out_dir=tmp_path)
    summary = pd.read_csv(tmp_path / "sweep.csv")
    assert summary["label"].tolist() == ["arch=DRRN", "arch=PA_DQN"]
    assert list(summary.columns) == [
        "label", "arch", "layers", "hidden_dim", "action_hidden_dim", "interaction", "episodes", "mean", "std"
    ]
    assert summary["episodes"].tolist() == [10, 10]
    for variant in result.variants:
        assert (tmp_path / variant.slug / "curve.csv").is_file()
    alone = train(result.variants[1].config)
    assert result.by_label()["arch=PA_DQN"].curve == alone.curve


def test_sweep_summary_is_reproducible(tmp_path):
    sweep = SweepConfig(base=tiny_base(), grid={"layers": [1, 2]})
    run_sweep(sweep, out_dir=tmp_path / "a")
    run_sweep(sweep, out_dir=tmp_path / "b", workers=2)
    assert (tmp_path / "a" / "sweep.csv").read_bytes() == (tmp_path / "b" / "sweep.csv").read_bytes()
