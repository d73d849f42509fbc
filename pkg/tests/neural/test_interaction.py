import numpy as np
import pytest

from drrn.core.errors import DimensionMismatchError
from drrn.core.models import InteractionKind
from drrn.neural import Bilinear, ConcatMLP, InnerProduct, build_interaction
from drrn.neural.gradcheck import numerical_gradient, relative_error


def test_identity_bilinear_equals_inner_product():
    rng = np.random.default_rng(0)
    dim = 7
    bilinear = Bilinear(np.eye(dim))
    inner = InnerProduct(dim)
    for _ in range(1000):
        hs = rng.uniform(-1, 1, dim)
        ha = rng.uniform(-1, 1, dim)
        assert abs(bilinear.forward(hs, ha)[0] - inner.forward(hs, ha)[0]) <= 1e-12


def test_inner_product_needs_equal_widths():
    with pytest.raises(DimensionMismatchError):
        build_interaction(InteractionKind.INNER_PRODUCT, 3, 4, np.random.default_rng(0))


def test_bilinear_may_be_rectangular():
    interaction = build_interaction(InteractionKind.BILINEAR, 3, 5, np.random.default_rng(0))
    assert interaction.B.shape == (3, 5)
    q, _ = interaction.forward(np.ones(3), np.ones(5))
    assert q == pytest.approx(interaction.B.sum())


def test_wrong_embedding_width_raises():
    with pytest.raises(DimensionMismatchError):
        InnerProduct(3).forward(np.ones(3), np.ones(2))


@pytest.mark.parametrize(
    "kind", [InteractionKind.INNER_PRODUCT, InteractionKind.BILINEAR, InteractionKind.CONCAT_MLP]
)
def test_interaction_gradients_match_finite_differences(kind):
    rng = np.random.default_rng(5)
    interaction = build_interaction(kind, 4, 4, rng, hidden_dim=3)
    for param in interaction.parameters().values():
        param[...] = rng.uniform(-1, 1, param.shape)
    hs = rng.uniform(-1, 1, 4)
    ha = rng.uniform(-1, 1, 4)
    _, cache = interaction.forward(hs, ha)
    grad_hs, grad_ha, grads = interaction.backward(hs, ha, cache, 1.0)

    inputs = {"hs": hs, "ha": ha}
    numeric = numerical_gradient(lambda: interaction.forward(hs, ha)[0], {**inputs, **interaction.parameters()})
    assert relative_error(grad_hs, numeric["hs"]) < 1e-5
    assert relative_error(grad_ha, numeric["ha"]) < 1e-5
    for name, value in grads.items():
        assert relative_error(value, numeric[name]) < 1e-5


def test_concat_mlp_parameter_names():
    interaction = build_interaction(InteractionKind.CONCAT_MLP, 2, 3, np.random.default_rng(0), hidden_dim=4)
    assert isinstance(interaction, ConcatMLP)
    params = interaction.parameters()
    assert params["interaction.hidden.W"].shape == (4, 5)
    assert params["interaction.output.W"].shape == (1, 4)
