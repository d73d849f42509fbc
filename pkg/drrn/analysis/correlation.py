"""
Agreement between Q-values of original and paraphrased action texts.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from drrn.agents import TextAgent
from drrn.analysis.paraphrase import ParaphrasePair
from drrn.core.errors import AnalysisError

logger = logging.getLogger("Analysis")


@dataclass(frozen=True)
class CorrelationReport:
    """
    Least-squares fit of paraphrase Q-values on original Q-values.

    Attributes:
        n (int): Number of pairs.
        pr2 (float): Coefficient of determination of the fit, in [0, 1].
        slope (float): Fitted slope.
        intercept (float): Fitted intercept.
        points (List[Tuple[float, float]]): (q_original, q_paraphrase) per pair.
    """
    n: int
    pr2: float
    slope: float
    intercept: float
    points: List[Tuple[float, float]]


def action_q(agent: TextAgent, state_text: str, action_text: str) -> float:
    """Q-value of one action scored on its own (first output slot for multi-output baselines)."""
    return float(agent.q_values(state_text, [action_text])[0])


def regression_r2(x: Sequence[float], y: Sequence[float]) -> Tuple[float, float, float]:
    """
    Ordinary least squares of ``y`` on ``x``.

    Returns:
        Tuple[float, float, float]: R^2 (clipped to [0, 1]), slope and intercept.

    Raises:
        AnalysisError: ``x`` has zero variance.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise AnalysisError("original Q-values have zero variance")
    slope = float(dx @ dy) / sxx
    intercept = float(y.mean() - slope * x.mean())
    residual = y - (intercept + slope * x)
    ss_res = float(residual @ residual)
    ss_tot = float(dy @ dy)
    if ss_tot == 0.0:
        return 1.0, slope, intercept
    return float(np.clip(1.0 - ss_res / ss_tot, 0.0, 1.0)), slope, intercept


def q_correlation(agent: TextAgent, pairs: Sequence[ParaphrasePair]) -> CorrelationReport:
    """
    Regress the Q-values of paraphrased actions on those of the originals.

    Args:
        agent (TextAgent): Agent whose Q-function is compared.
        pairs: (state text, original action text, paraphrased action text), at least two.

    Returns:
        CorrelationReport: Fit quality and the paired values.

    Raises:
        AnalysisError: Fewer than two pairs or zero variance among original Q-values.
    """
    if len(pairs) < 2:
        raise AnalysisError("q_correlation needs at least two pairs")
    points = [
        (action_q(agent, state, original), action_q(agent, state, paraphrase))
        for state, original, paraphrase in pairs
    ]
    x, y = zip(*points)
    pr2, slope, intercept = regression_r2(x, y)
    logger.info(f"Paraphrase Q correlation over {len(points)} pairs: pR2 {pr2:.4f}")
    return CorrelationReport(n=len(points), pr2=pr2, slope=slope, intercept=intercept, points=points)
