from dataclasses import dataclass
from typing import List, Sequence

from drrn.agents import TextAgent


@dataclass(frozen=True)
class QTableRow:
    """
    Attributes:
        text (str): Candidate action text.
        q (float): Q-value at the state.
        oov_tokens (int): Token occurrences outside the action vocabulary.
        all_oov (bool): No token is known, so q comes from an empty bag of words.
    """
    text: str
    q: float
    oov_tokens: int
    all_oov: bool


def q_table(agent: TextAgent, state_text: str, candidates: Sequence[str]) -> List[QTableRow]:
    """
    Q-value of every candidate text at a state, feasible or not.

    Each candidate is scored on its own, so duplicates get identical values.
    """
    rows = []
    for text in candidates:
        bow, dropped = agent.featurizer.action_with_oov(text)
        q = float(agent.q_values(state_text, [text])[0])
        rows.append(QTableRow(text=text, q=q, oov_tokens=dropped, all_oov=bow.nnz == 0))
    return rows
