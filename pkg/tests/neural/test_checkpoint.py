import numpy as np
import pytest

from drrn.neural import FORMAT_VERSION, init_params, load_params, save_params


def test_round_trip_is_bit_exact(tmp_path):
    params = init_params({"state": [5, 3], "action": [4, 3]}, 9)
    flat = {**params["state"].parameters(), **params["action"].parameters()}
    path = save_params(tmp_path / "nested" / "model.ckpt", flat, {"arch": "drrn"})
    loaded, metadata = load_params(path)
    assert metadata == {"arch": "drrn", "format_version": FORMAT_VERSION}
    assert set(loaded) == set(flat)
    for name, value in flat.items():
        assert loaded[name].dtype == value.dtype
        assert np.array_equal(loaded[name], value)


def test_unsupported_version_rejected(tmp_path):
    path = save_params(tmp_path / "m.ckpt", {"w": np.zeros(2)}, {"format_version": 99})
    with pytest.raises(ValueError, match="version 99"):
        load_params(path)


def test_archive_without_metadata_rejected(tmp_path):
    path = tmp_path / "plain.npz"
    with open(path, "wb") as f:
        np.savez(f, w=np.zeros(2))
    with pytest.raises(ValueError, match="not a checkpoint"):
        load_params(path)
