from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

DEFAULT_STEP_PENALTY = -0.1
DEFAULT_MAX_STEPS = 500


class GameKind(str, Enum):
    DETERMINISTIC = "deterministic"
    STOCHASTIC = "stochastic"


class Outcome(BaseModel):
    """
    One branch of an action's transition distribution.

    Attributes:
        probability (float): Probability of this branch, in (0, 1]. Serialized as ``p``.
        next (str): Id of the state reached.
    """
    model_config = ConfigDict(populate_by_name=True, frozen=True)

    probability: float = Field(alias="p", gt=0.0, le=1.0)
    next: str


class ActionDef(BaseModel):
    """
    An action offered by a state.

    Attributes:
        text (str): Action description shown to the player.
        hypertext (bool): If true the text is a link embedded verbatim in the state text.
        outcomes (List[Outcome]): Transition distribution over next states.
    """
    model_config = ConfigDict(frozen=True)

    text: str
    hypertext: bool = False
    outcomes: List[Outcome]

    @model_validator(mode="before")
    @classmethod
    def expand_single_next(cls, data: Any) -> Any:
        # Deterministic actions may write {"text": ..., "next": "id"}
        if isinstance(data, dict) and "next" in data and "outcomes" not in data:
            data = dict(data)
            data["outcomes"] = [{"p": 1.0, "next": data.pop("next")}]
        return data

    @property
    def is_deterministic(self) -> bool:
        return len(self.outcomes) == 1


class GameState(BaseModel):
    """
    A node of the game graph.

    Attributes:
        id (str): Unique state token.
        text (str): State description.
        actions (List[ActionDef]): Feasible actions; empty for terminal states.
        terminal_reward (Optional[float]): Ending reward, present iff the state is terminal.
    """
    model_config = ConfigDict(frozen=True)

    id: str
    text: str
    actions: List[ActionDef] = Field(default_factory=list)
    terminal_reward: Optional[float] = None

    @property
    def is_terminal(self) -> bool:
        return self.terminal_reward is not None


class GameSpec(BaseModel):
    """
    A complete text game: a directed graph of text states with stochastic transitions.

    Structural invariants (targets exist, distributions sum to one, terminal
    reachability, ...) are checked by ``drrn.engine.loader.find_violations``,
    which reports every violation instead of stopping at the first.

    Attributes:
        title (str): Game title.
        version (str): Free-form version tag.
        kind (GameKind): deterministic or stochastic transitions.
        start (str): Id of the start state.
        step_penalty (float): Reward for every non-terminal transition.
        max_steps (int): Episode length cap.
        max_actions (Optional[int]): Declared maximum number of feasible actions.
        states (List[GameState]): All states.
    """
    model_config = ConfigDict(frozen=True)

    title: str
    version: str = "1"
    kind: GameKind = GameKind.DETERMINISTIC
    start: str
    step_penalty: float = DEFAULT_STEP_PENALTY
    max_steps: int = Field(DEFAULT_MAX_STEPS, ge=1)
    max_actions: Optional[int] = Field(None, ge=1)
    states: List[GameState]

    _index: Dict[str, GameState] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context: Any) -> None:
        self._index = {state.id: state for state in self.states}

    def state(self, state_id: str) -> GameState:
        return self._index[state_id]

    def has_state(self, state_id: str) -> bool:
        return state_id in self._index

    @property
    def start_state(self) -> GameState:
        return self._index[self.start]

    @property
    def action_limit(self) -> int:
        """Declared maximum action count, or the observed one when undeclared."""
        if self.max_actions is not None:
            return self.max_actions
        return max((len(state.actions) for state in self.states), default=0)

    def state_corpus(self) -> List[str]:
        return [state.text for state in self.states]

    def action_corpus(self) -> List[str]:
        return [action.text for state in self.states for action in state.actions]


class Observation(BaseModel):
    """
    What the player sees after a reset or a step.

    Attributes:
        state_id (str): Underlying state id (not used by agents).
        state_text (str): State description.
        action_texts (List[str]): Feasible action texts in presented (shuffled) order.
        presented_permutation (List[int]): presented position i shows underlying action
            presented_permutation[i] of the state.
        step_index (int): Number of steps taken so far.
        done (bool): The episode has ended.
        truncated (bool): The episode ended because the step cap was hit.
    """
    model_config = ConfigDict(frozen=True)

    state_id: str
    state_text: str
    action_texts: List[str]
    presented_permutation: List[int]
    step_index: int
    done: bool
    truncated: bool = False
