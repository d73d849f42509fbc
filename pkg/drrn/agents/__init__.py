from .base import ForwardTrace, QNetwork, ScoredActions
from .drrn import DRRNetwork
from .baselines import LinearQ, MaxActionDQN, PerActionDQN
from .policy import greedy_index, select_action, softmax_probabilities
from .agent import TextAgent, build_network, create_agent
from .learning import learn, td_target
from .checkpoint import load_agent, save_agent
