from typing import List

from pydantic import BaseModel, ConfigDict, model_validator


class TransitionTuple(BaseModel):
    """
    One replay record (s_k, a_k, r_k, s_{k+1}, A_{k+1}).

    Attributes:
        state_text (str): s_k.
        action_texts (List[str]): Actions presented at s_k, in presented order.
        action_index (int): Position of the taken action in ``action_texts``.
        action_text (str): a_k, the taken action.
        reward (float): r_k.
        next_state_text (str): s_{k+1}.
        next_action_texts (List[str]): A_{k+1} as presented; empty when terminal.
        terminal (bool): s_{k+1} ends the game (a step-cap stop is not terminal).
    """
    model_config = ConfigDict(frozen=True)

    state_text: str
    action_texts: List[str]
    action_index: int
    action_text: str
    reward: float
    next_state_text: str
    next_action_texts: List[str]
    terminal: bool

    @model_validator(mode="after")
    def check_consistency(self) -> "TransitionTuple":
        if not 0 <= self.action_index < len(self.action_texts):
            raise ValueError("action_index out of range of action_texts")
        if self.action_texts[self.action_index] != self.action_text:
            raise ValueError("action_text must be the presented action at action_index")
        if self.terminal and self.next_action_texts:
            raise ValueError("a terminal transition has no next actions")
        if not self.terminal and not self.next_action_texts:
            raise ValueError("a non-terminal transition needs next actions")
        return self
