"""
Command-line interface for training and analysing text-game agents.

Exit codes: 0 on success, 1 when a game, config, checkpoint or analysis is
invalid, 2 on usage errors. All randomness derives from ``--seed``.
"""
from pathlib import Path
from typing import Callable, List, Optional

import typer
from rich.console import Console
from rich.markup import escape
from typer import BadParameter, Option

from drrn import __version__
from drrn.cli.runners import (
    eval_command,
    paraphrase_eval_command,
    pca_command,
    play_command,
    qtable_command,
    sweep_command,
    train_command,
    validate_command,
)
from drrn.core.config.logger import setup_logging
from drrn.core.errors import DrrnError

app = typer.Typer(
    name="drrn",
    help="Deep reinforcement relevance networks for text games",
    add_completion=False,
)

console = Console(stderr=True)


def validate_positive(ctx, param, value):
    if value is not None and value < 1:
        raise BadParameter(f"{param.name} must be a positive integer.")
    return value


def validate_non_negative(ctx, param, value):
    if value is not None and value < 0:
        raise BadParameter(f"{param.name} must be a non-negative integer.")
    return value


def _run(command: Callable, *args, **kwargs):
    try:
        return command(*args, **kwargs)
    except (DrrnError, ValueError, KeyError, OSError) as e:
        console.print(f"[red]Error:[/] {escape(str(e))}")
        raise typer.Exit(code=1)


@app.callback()
def main(verbose: bool = Option(False, "--verbose", "-v", help="Log at DEBUG level.")):
    setup_logging(verbose)


@app.command("validate")
def validate(
    game: str = Option(..., help="Game file (path, or name of a bundled game)."),
):
    """Check a game file against every structural invariant."""
    if not _run(validate_command, game):
        raise typer.Exit(code=1)


@app.command("train")
def train(
    config: Path = Option(..., exists=True, dir_okay=False, help="Experiment config (TOML)."),
    out: Path = Option(..., file_okay=False, help="Directory for metrics files and checkpoints."),
    seed: Optional[int] = Option(None, help="Master seed (overrides the config).", callback=validate_non_negative),
    workers: Optional[int] = Option(None, help="Parallel seed workers.", callback=validate_positive),
):
    """Train one agent per configured seed and write curve.csv, final.csv and checkpoints."""
    _run(train_command, config, out, seed=seed, workers=workers)


@app.command("sweep")
def sweep(
    config: Path = Option(..., exists=True, dir_okay=False, help="Sweep config (TOML)."),
    out: Path = Option(..., file_okay=False, help="Directory for sweep.csv and per-variant outputs."),
    seed: Optional[int] = Option(None, help="Master seed (overrides the base experiment).", callback=validate_non_negative),
    workers: Optional[int] = Option(None, help="Parallel seed workers per variant.", callback=validate_positive),
):
    """Train every agent variant of a sweep under one protocol and summarize final rewards."""
    _run(sweep_command, config, out, seed=seed, workers=workers)


@app.command("eval")
def evaluate(
    checkpoint: Path = Option(..., exists=True, dir_okay=False, help="Agent checkpoint."),
    game: str = Option(..., help="Game file (path, or name of a bundled game)."),
    episodes: int = Option(200, help="Evaluation episodes.", callback=validate_positive),
    seed: int = Option(0, help="Master seed.", callback=validate_non_negative),
    out: Optional[Path] = Option(None, file_okay=False, help="Directory for eval.csv."),
):
    """Evaluate a trained agent with softmax selection and no learning."""
    _run(eval_command, checkpoint, game, episodes, seed, out)


@app.command("paraphrase-eval")
def paraphrase_eval(
    checkpoint: Path = Option(..., exists=True, dir_okay=False, help="Agent checkpoint."),
    game: str = Option(..., help="Game file (path, or name of a bundled game)."),
    paraphrases: Path = Option(..., exists=True, dir_okay=False, help="Tab-separated original/paraphrase file."),
    episodes: int = Option(200, help="Evaluation episodes.", callback=validate_positive),
    seed: int = Option(0, help="Master seed.", callback=validate_non_negative),
    out: Optional[Path] = Option(None, file_okay=False, help="Directory for paraphrase_eval.csv and correlation.csv."),
):
    """Evaluate with paraphrased action texts and report the Q-value correlation."""
    _run(paraphrase_eval_command, checkpoint, game, paraphrases, episodes, seed, out)


@app.command("pca")
def pca(
    checkpoint: List[Path] = Option(..., exists=True, dir_okay=False, help="Checkpoints to compare (repeatable)."),
    game: str = Option(..., help="Game file (path, or name of a bundled game)."),
    out: Path = Option(..., file_okay=False, help="Directory for pca.csv."),
    state_id: Optional[str] = Option(None, help="State to embed (default: the start state)."),
):
    """Project DRRN state and action embeddings across checkpoints onto two components."""
    _run(pca_command, checkpoint, game, out, state_id)


@app.command("qtable")
def qtable(
    checkpoint: Path = Option(..., exists=True, dir_okay=False, help="Agent checkpoint."),
    state_file: Path = Option(..., exists=True, dir_okay=False, help="File holding the state text."),
    actions_file: Path = Option(..., exists=True, dir_okay=False, help="Candidate action texts, one per line."),
    out: Path = Option(..., file_okay=False, help="Directory for qtable.csv."),
):
    """Q-values of arbitrary candidate actions at a state."""
    _run(qtable_command, checkpoint, state_file, actions_file, out)


@app.command("play")
def play(
    game: str = Option(..., help="Game file (path, or name of a bundled game)."),
    seed: int = Option(0, help="Seed of the action shuffles and outcomes.", callback=validate_non_negative),
    checkpoint: Optional[Path] = Option(None, exists=True, dir_okay=False, help="Show this agent's Q-values."),
):
    """Play a game from the terminal."""
    _run(play_command, game, seed, checkpoint)


@app.command("about")
def about():
    """Display information about the application."""
    typer.echo("DRRN text games")
    typer.echo(f"Version: {__version__}")
    typer.echo("Description: Q-learning with separate state and action text embeddings")
