from collections import deque
from typing import Iterator, List

import numpy as np

from drrn.core.models import TransitionTuple


class ReplayMemory:
    """
    Fixed-capacity FIFO store of transition tuples.

    Attributes:
        capacity (int): Maximum number of tuples N.
        inserted (int): Total tuples ever added, evicted ones included.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("replay capacity must be positive")
        self.capacity = capacity
        self.inserted = 0
        self._buffer: deque = deque(maxlen=capacity)

    def __len__(self) -> int:
        return len(self._buffer)

    def __iter__(self) -> Iterator[TransitionTuple]:
        return iter(self._buffer)

    def add(self, transition: TransitionTuple) -> None:
        self._buffer.append(transition)
        self.inserted += 1

    def extend(self, transitions: List[TransitionTuple]) -> None:
        for transition in transitions:
            self.add(transition)

    def newest(self, count: int) -> List[TransitionTuple]:
        """The ``count`` most recently inserted tuples still held, oldest first."""
        count = min(count, len(self._buffer))
        return list(self._buffer)[len(self._buffer) - count:]

    def sample(self, rng: np.random.Generator, batch_size: int) -> List[TransitionTuple]:
        """Uniform sample without replacement (the whole memory if it is smaller)."""
        size = min(batch_size, len(self._buffer))
        picks = rng.choice(len(self._buffer), size=size, replace=False)
        return [self._buffer[i] for i in picks]


def epoch_batches(
    transitions: List[TransitionTuple], rng: np.random.Generator, batch_size: int
) -> Iterator[List[TransitionTuple]]:
    """
    One shuffled pass over ``transitions`` in mini-batches of ``batch_size``.

    The last batch may be smaller.
    """
    order = rng.permutation(len(transitions))
    for start in range(0, len(order), batch_size):
        yield [transitions[i] for i in order[start:start + batch_size]]
