from typing import Dict, Tuple

from drrn.core.models import GameSpec
from drrn.text.vocabulary import BowVector, VocabSide, Vocabulary, build_vocab, vectorize


class Featurizer:
    """
    State-side and action-side vectorization with a per-text cache.

    In shared mode both sides use one vocabulary, which tied towers need.
    Vocabularies are immutable, so a featurizer may be shared across threads.
    """

    def __init__(self, state_vocab: Vocabulary, action_vocab: Vocabulary):
        self.state_vocab = state_vocab
        self.action_vocab = action_vocab
        self._state_cache: Dict[str, Tuple[BowVector, int]] = {}
        self._action_cache: Dict[str, Tuple[BowVector, int]] = {}

    @classmethod
    def from_game(cls, game: GameSpec, shared: bool = False, binary: bool = False) -> "Featurizer":
        """
        Build vocabularies from a game's state and action texts.

        Args:
            game (GameSpec): Source of the corpora.
            shared (bool): One vocabulary for both sides.
            binary (bool): Indicator features instead of counts.
        """
        if shared:
            vocab = build_vocab(
                game.state_corpus() + game.action_corpus(), VocabSide.SHARED, binary=binary
            )
            return cls(vocab, vocab)
        return cls(
            build_vocab(game.state_corpus(), VocabSide.STATE, binary=binary),
            build_vocab(game.action_corpus(), VocabSide.ACTION, binary=binary),
        )

    @property
    def shared(self) -> bool:
        return self.state_vocab is self.action_vocab

    @property
    def binary(self) -> bool:
        return self.state_vocab.binary

    @property
    def state_dim(self) -> int:
        return len(self.state_vocab)

    @property
    def action_dim(self) -> int:
        return len(self.action_vocab)

    def state(self, text: str) -> BowVector:
        return self.state_with_oov(text)[0]

    def action(self, text: str) -> BowVector:
        return self.action_with_oov(text)[0]

    def state_with_oov(self, text: str) -> Tuple[BowVector, int]:
        cached = self._state_cache.get(text)
        if cached is None:
            cached = self._state_cache[text] = vectorize(text, self.state_vocab)
        return cached

    def action_with_oov(self, text: str) -> Tuple[BowVector, int]:
        cached = self._action_cache.get(text)
        if cached is None:
            cached = self._action_cache[text] = vectorize(text, self.action_vocab)
        return cached
