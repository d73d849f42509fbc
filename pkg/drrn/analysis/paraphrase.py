"""
Action paraphrases: substitution maps and evaluation under substituted texts.
"""
import csv
import logging
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from drrn.agents import TextAgent
from drrn.core.errors import AnalysisError
from drrn.core.models import GameSpec
from drrn.harness import evaluate
from drrn.text import tokenize

logger = logging.getLogger("Analysis")

ParaphrasePair = Tuple[str, str, str]


class ParaphraseMap:
    """
    Substitution of original action texts by paraphrases.

    Uncovered texts pass through unchanged.

    Attributes:
        mapping (Dict[str, str]): Original text to paraphrase; originals are distinct.
        allow_identity (bool): Permit a map whose every paraphrase equals its original.
    """

    def __init__(self, mapping: Mapping[str, str], allow_identity: bool = False):
        self.mapping: Dict[str, str] = dict(mapping)
        if not self.mapping:
            raise AnalysisError("a paraphrase map needs at least one pair")
        self.allow_identity = allow_identity
        if not allow_identity and all(k == v for k, v in self.mapping.items()):
            raise AnalysisError("identity-only paraphrase map (pass allow_identity to use it)")

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[str, str]], allow_identity: bool = False) -> "ParaphraseMap":
        originals = [original for original, _ in pairs]
        duplicates = sorted({text for text in originals if originals.count(text) > 1})
        if duplicates:
            raise AnalysisError(f"duplicate originals in paraphrase map: {duplicates}")
        return cls(dict(pairs), allow_identity=allow_identity)

    @classmethod
    def identity(cls, game: GameSpec) -> "ParaphraseMap":
        return cls({text: text for text in game.action_corpus()}, allow_identity=True)

    @classmethod
    def token_reversal(cls, game: GameSpec) -> "ParaphraseMap":
        """Reverse each action's token order; bag-of-words vectors are unchanged."""
        return cls(
            {text: " ".join(reversed(tokenize(text))) for text in game.action_corpus()},
            allow_identity=True,
        )

    def __len__(self) -> int:
        return len(self.mapping)

    def __contains__(self, text: str) -> bool:
        return text in self.mapping

    def paraphrase(self, text: str) -> str:
        return self.mapping.get(text, text)

    def rewrite(self, texts: Sequence[str]) -> List[str]:
        return [self.paraphrase(text) for text in texts]

    def coverage(self, game: GameSpec) -> float:
        """Fraction of the game's distinct action texts the map covers."""
        texts = set(game.action_corpus())
        return len(texts & set(self.mapping)) / len(texts)


def load_paraphrase_map(path: Union[str, Path], allow_identity: bool = False) -> ParaphraseMap:
    """
    Read a two-column tab-separated paraphrase file.

    The columns are ``original`` and ``paraphrase``; a header row with those
    names is optional.

    Raises:
        AnalysisError: Malformed file or duplicate originals.
    """
    try:
        frame = pd.read_csv(path, sep="\t", header=None, dtype=str, keep_default_na=False, quoting=csv.QUOTE_NONE)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise AnalysisError(f"{path}: unreadable paraphrase file: {e}") from e
    if frame.shape[1] != 2:
        raise AnalysisError(f"{path}: expected two tab-separated columns, found {frame.shape[1]}")
    rows = list(frame.itertuples(index=False, name=None))
    if rows and rows[0] == ("original", "paraphrase"):
        rows = rows[1:]
    paraphrases = ParaphraseMap.from_pairs(rows, allow_identity=allow_identity)
    logger.debug(f"Loaded {len(paraphrases)} paraphrases from {path}")
    return paraphrases


def paraphrase_eval(
    agent: TextAgent,
    game: GameSpec,
    paraphrases: ParaphraseMap,
    episodes: int,
    rng: Union[int, np.random.Generator],
) -> Tuple[float, float]:
    """
    Evaluate with paraphrased action texts and the original game dynamics.

    Only the texts the agent reads are substituted, so with the identity map the
    result equals ``evaluate`` under the same seed.

    Returns:
        Tuple[float, float]: Mean and std of the final reward.
    """
    return evaluate(agent, game, episodes, rng, rewrite=paraphrases.rewrite)


def paraphrase_pairs(game: GameSpec, paraphrases: ParaphraseMap, limit: Optional[int] = None) -> List[ParaphrasePair]:
    """
    (state text, original action, paraphrased action) for every covered feasible action.

    Args:
        game (GameSpec): Source of states and actions, in file order.
        paraphrases (ParaphraseMap): Substitutions.
        limit (Optional[int]): Keep at most this many pairs.
    """
    pairs = [
        (state.text, action.text, paraphrases.paraphrase(action.text))
        for state in game.states
        for action in state.actions
        if action.text in paraphrases
    ]
    return pairs[:limit] if limit is not None else pairs
