"""
CSV outputs of the analyses.
"""
import logging
from pathlib import Path
from typing import Sequence, Union

import pandas as pd

from drrn.analysis.correlation import CorrelationReport
from drrn.analysis.embeddings import ProjectedPoint
from drrn.analysis.qtable import QTableRow

logger = logging.getLogger("Analysis")


def _write(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False)
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def write_pca_csv(points: Sequence[ProjectedPoint], path: Union[str, Path]) -> Path:
    frame = pd.DataFrame(
        [(p.point_id, p.side, p.x, p.y, p.checkpoint) for p in points],
        columns=["point_id", "side", "x", "y", "checkpoint"],
    )
    return _write(frame, path)


def write_correlation_csv(report: CorrelationReport, path: Union[str, Path]) -> Path:
    return _write(pd.DataFrame(report.points, columns=["q_original", "q_paraphrase"]), path)


def write_qtable_csv(rows: Sequence[QTableRow], path: Union[str, Path]) -> Path:
    frame = pd.DataFrame(
        [(row.text, row.q, row.oov_tokens, row.all_oov) for row in rows],
        columns=["text", "q", "oov_tokens", "all_oov"],
    )
    return _write(frame, path)
