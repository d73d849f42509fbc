"""
Command implementations behind the CLI; each is a thin adapter over library calls.
"""
import logging
from pathlib import Path
from typing import List, Optional

import pandas as pd
import typer
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from drrn.agents import TextAgent, load_agent
from drrn.analysis import (
    capture_embeddings,
    load_paraphrase_map,
    paraphrase_eval,
    paraphrase_pairs,
    project_captures,
    q_correlation,
    q_table,
    write_correlation_csv,
    write_pca_csv,
    write_qtable_csv,
)
from drrn.core.models import GameSpec
from drrn.core.seeding import make_rng
from drrn.engine import load_game_file, reset, step, validate_game
from drrn.harness import evaluate, load_experiment_config, load_sweep_config, resolve_game_path, run_sweep, train

logger = logging.getLogger("Cli")
console = Console()


def _load_game(game: str) -> GameSpec:
    return load_game_file(resolve_game_path(game, Path.cwd()))


def _read_lines(path: Path) -> List[str]:
    return [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]


def validate_command(game: str) -> bool:
    """Print every violation of a game file; True when the game is valid."""
    path = resolve_game_path(game, Path.cwd())
    with open(path, "rb") as f:
        violations = validate_game(f)
    if violations:
        console.print(f"[red]{escape(str(path))}: {len(violations)} violation(s)[/]")
        for violation in violations:
            typer.echo(f"  - {violation}")
        return False
    console.print(f"[green]{escape(str(path))} is a valid game[/]")
    return True


def train_command(config: Path, out: Path, seed: Optional[int] = None, workers: Optional[int] = None) -> None:
    experiment = load_experiment_config(config)
    result = train(experiment, master_seed=seed, workers=workers, out_dir=out)

    table = Table(show_header=True)
    table.add_column("Episodes", style="cyan", justify="right")
    table.add_column("Mean reward", style="cyan", justify="right")
    table.add_column("Std", style="cyan", justify="right")
    for point in result.curve.points:
        table.add_row(str(point.episodes), f"{point.mean:.3f}", f"{point.std:.3f}")
    console.print(table)
    typer.echo(f"Metrics written to {out}")


def sweep_command(config: Path, out: Path, seed: Optional[int] = None, workers: Optional[int] = None) -> None:
    result = run_sweep(load_sweep_config(config), master_seed=seed, workers=workers, out_dir=out)

    table = Table(show_header=True)
    table.add_column("Variant", style="cyan")
    table.add_column("Final mean", style="cyan", justify="right")
    table.add_column("Std", style="cyan", justify="right")
    for row in result.summary.itertuples(index=False):
        table.add_row(escape(row.label), f"{row.mean:.3f}", f"{row.std:.3f}")
    console.print(table)
    typer.echo(f"Sweep summary written to {out / 'sweep.csv'}")


def eval_command(checkpoint: Path, game: str, episodes: int, seed: int, out: Optional[Path] = None) -> None:
    agent = load_agent(checkpoint)
    mean, std = evaluate(agent, _load_game(game), episodes, make_rng(seed, "eval"))
    typer.echo(f"mean {mean:.4f} std {std:.4f} over {episodes} episodes")
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        pd.DataFrame([{"episodes": episodes, "mean": mean, "std": std}]).to_csv(out / "eval.csv", index=False)


def paraphrase_eval_command(
    checkpoint: Path,
    game: str,
    paraphrase_file: Path,
    episodes: int,
    seed: int,
    out: Optional[Path] = None,
) -> None:
    agent = load_agent(checkpoint)
    game_spec = _load_game(game)
    paraphrases = load_paraphrase_map(paraphrase_file, allow_identity=True)
    original = evaluate(agent, game_spec, episodes, make_rng(seed, "eval"))
    paraphrased = paraphrase_eval(agent, game_spec, paraphrases, episodes, make_rng(seed, "eval"))
    report = q_correlation(agent, paraphrase_pairs(game_spec, paraphrases))

    table = Table(show_header=True)
    table.add_column("Actions", style="cyan")
    table.add_column("Mean reward", style="cyan", justify="right")
    table.add_column("Std", style="cyan", justify="right")
    table.add_row("original", f"{original[0]:.4f}", f"{original[1]:.4f}")
    table.add_row("paraphrased", f"{paraphrased[0]:.4f}", f"{paraphrased[1]:.4f}")
    console.print(table)
    typer.echo(f"pR2 {report.pr2:.4f} over {report.n} pairs")
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        pd.DataFrame(
            [
                {"actions": "original", "mean": original[0], "std": original[1]},
                {"actions": "paraphrased", "mean": paraphrased[0], "std": paraphrased[1]},
            ]
        ).to_csv(out / "paraphrase_eval.csv", index=False)
        write_correlation_csv(report, out / "correlation.csv")


def pca_command(
    checkpoints: List[Path],
    game: str,
    out: Path,
    state_id: Optional[str] = None,
) -> None:
    """Project one state and its actions across checkpoints, labelled by file stem (or path when stems repeat)."""
    game_spec = _load_game(game)
    state = game_spec.state(state_id) if state_id else game_spec.start_state
    action_texts = [action.text for action in state.actions]
    stems = [path.stem for path in checkpoints]
    captures = {}
    for path in checkpoints:
        label = path.stem if stems.count(path.stem) == 1 else str(path)
        captures[label] = capture_embeddings(load_agent(path), state.text, action_texts)
    points = project_captures(captures)
    write_pca_csv(points, out / "pca.csv")
    for label, capture in captures.items():
        inner = ", ".join(f"{value:.3f}" for value in capture.inner_products)
        typer.echo(f"{label}: inner products [{inner}]")


def qtable_command(checkpoint: Path, state_file: Path, actions_file: Path, out: Path) -> None:
    agent = load_agent(checkpoint)
    state_text = state_file.read_text(encoding="utf-8").strip()
    rows = q_table(agent, state_text, _read_lines(actions_file))
    write_qtable_csv(rows, out / "qtable.csv")

    table = Table(show_header=True)
    table.add_column("Action", style="cyan")
    table.add_column("Q", style="cyan", justify="right")
    for row in rows:
        note = " [yellow](all tokens unknown)[/]" if row.all_oov else ""
        table.add_row(escape(row.text) + note, f"{row.q:.4f}")
    console.print(table)


def play_command(game: str, seed: int, checkpoint: Optional[Path] = None) -> float:
    """Interactive debug loop; returns the episode's total reward."""
    game_spec = _load_game(game)
    agent: Optional[TextAgent] = load_agent(checkpoint) if checkpoint else None
    handle, observation = reset(game_spec, make_rng(seed, "play"))
    while not observation.done:
        console.print(f"\n[bold]{escape(observation.state_text)}[/]")
        q = agent.q_values(observation.state_text, observation.action_texts) if agent else None
        for i, text in enumerate(observation.action_texts):
            suffix = f"  (Q={q[i]:.3f})" if q is not None else ""
            typer.echo(f"  {i}. {text}{suffix}")
        choice = typer.prompt("Action", type=int)
        while not 0 <= choice < len(observation.action_texts):
            choice = typer.prompt(f"Choose 0-{len(observation.action_texts) - 1}", type=int)
        reward, observation = step(handle, choice)
        typer.echo(f"reward {reward:+.2f}")
    console.print(f"\n[bold]{escape(observation.state_text)}[/]")
    ending = "step cap reached" if observation.truncated else "game over"
    typer.echo(f"{ending}: total reward {handle.total_reward:.2f}")
    return handle.total_reward
