"""
Vocabularies and sparse bag-of-words vectors.

Counting is delegated to scikit-learn's ``CountVectorizer`` with a fixed
vocabulary, so vectorization never grows the vocabulary: unseen tokens are
dropped and reported.
"""
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sklearn.feature_extraction.text import CountVectorizer

from drrn.text.tokenizer import tokenize


class VocabSide(str, Enum):
    STATE = "state"
    ACTION = "action"
    SHARED = "shared"


@dataclass(frozen=True, eq=False)
class BowVector:
    """
    Sparse bag-of-words vector.

    Attributes:
        dim (int): Vocabulary size.
        indices (np.ndarray): Strictly ascending token indices below ``dim``.
        counts (np.ndarray): Matching counts, all >= 1.
    """
    dim: int
    indices: np.ndarray
    counts: np.ndarray

    def __post_init__(self):
        if self.indices.shape != self.counts.shape:
            raise ValueError("indices and counts must have the same length")
        if self.indices.size:
            if np.any(np.diff(self.indices) <= 0):
                raise ValueError("indices must be strictly ascending")
            if self.indices[0] < 0 or self.indices[-1] >= self.dim:
                raise ValueError("indices must lie in [0, dim)")
            if np.any(self.counts < 1):
                raise ValueError("counts must be >= 1")

    @classmethod
    def empty(cls, dim: int) -> "BowVector":
        return cls(dim, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.float64))

    @classmethod
    def from_dense(cls, values: Sequence[float]) -> "BowVector":
        dense = np.asarray(values, dtype=np.float64)
        nonzero = np.flatnonzero(dense)
        return cls(dense.size, nonzero.astype(np.int64), dense[nonzero])

    @property
    def nnz(self) -> int:
        return int(self.indices.size)

    def entries(self) -> List[Tuple[int, int]]:
        return [(int(i), int(c)) for i, c in zip(self.indices, self.counts)]

    def dense(self) -> np.ndarray:
        out = np.zeros(self.dim)
        out[self.indices] = self.counts
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BowVector):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.counts, other.counts)
        )

    __hash__ = None


def concat_bows(segments: Sequence[Optional[BowVector]], widths: Sequence[int]) -> BowVector:
    """
    Concatenate BOW segments into one vector; ``None`` segments are zero padding.

    Args:
        segments: Vectors (or None) in layout order.
        widths: Width of each segment; a present segment must match its width.

    Returns:
        BowVector: Vector of dimension ``sum(widths)``.
    """
    indices, counts = [], []
    offset = 0
    for segment, width in zip(segments, widths, strict=True):
        if segment is not None:
            if segment.dim != width:
                raise ValueError(f"segment of dim {segment.dim} does not fit width {width}")
            indices.append(segment.indices + offset)
            counts.append(segment.counts)
        offset += width
    if not indices:
        return BowVector.empty(offset)
    return BowVector(offset, np.concatenate(indices), np.concatenate(counts))


class Vocabulary:
    """
    Ordered, immutable token inventory for one side of the model.

    Attributes:
        side (VocabSide): state, action or shared.
        tokens (Tuple[str, ...]): Tokens; position is the index.
        index (Dict[str, int]): Token to position.
    """

    def __init__(self, tokens: Iterable[str], side: VocabSide, binary: bool = False):
        self.tokens: Tuple[str, ...] = tuple(tokens)
        if not self.tokens:
            raise ValueError("a vocabulary needs at least one token")
        self.index: Dict[str, int] = {token: i for i, token in enumerate(self.tokens)}
        if len(self.index) != len(self.tokens):
            raise ValueError("vocabulary tokens must be unique")
        self.side = VocabSide(side)
        self.binary = binary
        self._vectorizer = CountVectorizer(
            vocabulary=self.index,
            tokenizer=tokenize,
            token_pattern=None,
            lowercase=False,
            binary=binary,
            dtype=np.float64,
        )

    def __len__(self) -> int:
        return len(self.tokens)

    def __contains__(self, token: str) -> bool:
        return token in self.index

    def dump(self, path: Union[str, Path]) -> None:
        """Write one token per line; the line number is the index."""
        Path(path).write_text("".join(f"{token}\n" for token in self.tokens), encoding="utf-8")

    @classmethod
    def load(cls, path: Union[str, Path], side: VocabSide, binary: bool = False) -> "Vocabulary":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(lines, side, binary=binary)


def build_vocab(corpus: Sequence[str], side: VocabSide, binary: bool = False) -> Vocabulary:
    """
    Collect every distinct token of a corpus in first-occurrence order.

    Args:
        corpus (Sequence[str]): Texts.
        side (VocabSide): Which tower the vocabulary feeds.
        binary (bool): Vectorize to indicators instead of counts.

    Returns:
        Vocabulary: The vocabulary.
    """
    if not corpus:
        raise ValueError("cannot build a vocabulary from an empty corpus")
    ordered = dict.fromkeys(token for text in corpus for token in tokenize(text))
    if not ordered:
        raise ValueError("corpus contains no tokens")
    return Vocabulary(ordered, side, binary=binary)


def vectorize(text: str, vocab: Vocabulary) -> Tuple[BowVector, int]:
    """
    Bag-of-words vector of a text over a fixed vocabulary.

    Returns:
        Tuple[BowVector, int]: The vector and the number of dropped
        out-of-vocabulary token occurrences.
    """
    tokens = tokenize(text)
    dropped = sum(1 for token in tokens if token not in vocab.index)
    row = vocab._vectorizer.transform([text])
    order = np.argsort(row.indices, kind="stable")
    bow = BowVector(
        len(vocab),
        row.indices[order].astype(np.int64),
        row.data[order].astype(np.float64),
    )
    return bow, dropped


def oov_rate(texts: Sequence[str], vocab: Vocabulary) -> float:
    """Fraction of token occurrences across ``texts`` that are out of vocabulary."""
    total = 0
    unknown = 0
    for text in texts:
        tokens = tokenize(text)
        total += len(tokens)
        unknown += sum(1 for token in tokens if token not in vocab.index)
    if total == 0:
        raise ValueError("texts contain no tokens")
    return unknown / total
