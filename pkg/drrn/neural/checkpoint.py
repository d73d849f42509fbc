"""
Versioned parameter archives.

A checkpoint is a ``numpy.savez`` archive: every parameter array under
``param.<name>`` (the .npy members carry dtype and shape headers) plus a
``metadata`` member holding a JSON document. Float arrays round-trip bit-exactly.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Tuple, Union

import numpy as np

FORMAT_VERSION = 1
_PARAM_PREFIX = "param."
_METADATA_KEY = "metadata"

logger = logging.getLogger("Checkpoint")


def save_params(
    path: Union[str, Path], params: Mapping[str, np.ndarray], metadata: Mapping[str, Any]
) -> Path:
    """
    Write parameters and metadata to ``path``.

    Args:
        path: Destination file (written as-is, no suffix added).
        params: Named parameter arrays.
        metadata: JSON-serializable description of the model.

    Returns:
        Path: The written file.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    document = {"format_version": FORMAT_VERSION, **metadata}
    arrays = {f"{_PARAM_PREFIX}{name}": np.asarray(value) for name, value in params.items()}
    arrays[_METADATA_KEY] = np.array(json.dumps(document, sort_keys=True))
    with open(path, "wb") as f:
        np.savez(f, **arrays)
    logger.debug(f"Saved {len(params)} parameter arrays to {path}")
    return path


def load_params(path: Union[str, Path]) -> Tuple[Dict[str, np.ndarray], Dict[str, Any]]:
    """
    Read a checkpoint written by ``save_params``.

    Returns:
        Tuple[Dict[str, np.ndarray], Dict[str, Any]]: Parameters and metadata.

    Raises:
        ValueError: The file is not a checkpoint of a supported version.
    """
    with np.load(path, allow_pickle=False) as archive:
        if _METADATA_KEY not in archive.files:
            raise ValueError(f"{path} is not a checkpoint (no metadata)")
        metadata = json.loads(str(archive[_METADATA_KEY]))
        version = metadata.get("format_version")
        if version != FORMAT_VERSION:
            raise ValueError(f"unsupported checkpoint format version {version}")
        params = {
            key[len(_PARAM_PREFIX):]: archive[key]
            for key in archive.files
            if key.startswith(_PARAM_PREFIX)
        }
    return params, metadata
