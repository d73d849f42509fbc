from .pca import PcaProjection, back_project, pca_project
from .embeddings import EmbeddingCapture, ProjectedPoint, capture_embeddings, project_captures
from .paraphrase import ParaphraseMap, load_paraphrase_map, paraphrase_eval, paraphrase_pairs
from .correlation import CorrelationReport, action_q, q_correlation, regression_r2
from .qtable import QTableRow, q_table
from .reports import write_correlation_csv, write_pca_csv, write_qtable_csv
