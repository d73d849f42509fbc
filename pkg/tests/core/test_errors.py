import pytest

from drrn.core.errors import (
    AnalysisError,
    ConfigError,
    DimensionMismatchError,
    DrrnError,
    EpisodeError,
    GameParseError,
    GameValidationError,
)


@pytest.mark.parametrize(
    "error",
    [
        GameParseError("bad"),
        GameValidationError(["a", "b"]),
        EpisodeError("done"),
        DimensionMismatchError("shape"),
        ConfigError("config"),
        AnalysisError("rank"),
    ],
)
def test_errors_are_drrn_and_value_errors(error):
    assert isinstance(error, DrrnError)
    assert isinstance(error, ValueError)


def test_parse_error_carries_location():
    error = GameParseError("Expecting value", line=3, column=7)
    assert error.line == 3
    assert error.column == 7
    assert "line 3, column 7" in str(error)


def test_validation_error_carries_all_violations():
    error = GameValidationError(["first problem", "second problem"])
    assert error.violations == ["first problem", "second problem"]
    assert "first problem" in str(error) and "second problem" in str(error)
