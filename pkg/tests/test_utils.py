""" test_utils.py -- Numeric helpers, JSON output, logging setup, city table and frame files.

    Language: Python 3.9
"""

import io
import json
import logging
import math
import sys

import numpy as np
import pytest

from pythagoras.func.exterior import ComplexFrame, RealFrame
from pythagoras.main import main
from pythagoras.utils import frame_file, logger, numeric
from pythagoras.utils.cities import CityTable
from pythagoras.utils.exceptions import (
    CityNotFoundError,
    DomainError,
    FrameParseError,
    NoProperTriangleError,
    PythagorasError,
    UsageError,
)


def test_exception_hierarchy():
    assert issubclass(DomainError, ValueError)
    assert issubclass(NoProperTriangleError, DomainError)
    assert issubclass(FrameParseError, UsageError)
    assert issubclass(CityNotFoundError, UsageError)
    assert issubclass(UsageError, PythagorasError)
    error = FrameParseError("Malformed JSON", line=3, column=7)
    assert (error.line, error.column) == (3, 7)
    assert str(error) == "Malformed JSON (line 3, column 7)"


@pytest.mark.parametrize("value", [-1.0, float("nan"), float("inf")])
def test_check_length_rejects(value):
    with pytest.raises(DomainError):
        numeric.check_length("b", value)


def test_clamps():
    assert numeric.clamp_unit(1.0 + 1e-13) == 1.0
    with pytest.raises(DomainError):
        numeric.clamp_unit(1.1)


def test_relative_residual():
    assert numeric.relative_residual(2.0, 2.0) == 0.0
    assert numeric.relative_residual(0.5, 0.25) == 0.25
    assert numeric.relative_residual(100.0, 99.0) == pytest.approx(0.01)


def test_dumps_writes_seventeen_digits():
    text = numeric.dumps({"x": 0.1, "n": 3, "items": [math.pi, None, True], "empty": {}})
    assert '"x": 0.10000000000000001' in text
    assert '"n": 3' in text
    assert json.loads(text) == {"x": 0.1, "n": 3, "items": [math.pi, None, True], "empty": {}}


def test_dumps_handles_numpy_and_non_finite():
    data = json.loads(numeric.dumps([np.float64(1.5), np.int64(2), float("nan")]))
    assert data == [1.5, 2, None]
    with pytest.raises(TypeError):
        numeric.dumps({"frame": object()})


def test_logger_keeps_a_single_handler():
    logger.initialize(debug=True)
    logger.initialize(debug=False)
    named = [h for h in logging.getLogger().handlers if h.get_name() == logger.HANDLER_NAME]
    assert len(named) == 1
    assert logging.getLogger().level == logging.INFO


def test_logger_reinitialize_after_stream_closed(monkeypatch):
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    logger.initialize()
    first.close()
    second = io.StringIO()
    monkeypatch.setattr(sys, "stderr", second)
    logger.initialize()
    logging.info("still logging")
    assert "still logging" in second.getvalue()


def test_main_runs_twice_after_stderr_closed(monkeypatch, capsys):
    first = io.StringIO()
    monkeypatch.setattr(sys, "stderr", first)
    assert main(["triples", "5"]) == 0
    first.close()
    monkeypatch.setattr(sys, "stderr", io.StringIO())
    assert main(["triples", "5"]) == 0
    assert capsys.readouterr().out == "3 4 5\n3 4 5\n"


def test_city_table():
    table = CityTable()
    assert table.names == ["quito", "macapa", "portoalegre"]
    assert table.lookup(" Quito ") == (-0.18, -78.47)
    with pytest.raises(CityNotFoundError):
        table.lookup("atlantis")


def test_city_table_missing_file(tmp_path):
    with pytest.raises(UsageError):
        CityTable(tmp_path / "missing.json")


@pytest.mark.parametrize(
    "header",
    [
        {"version": 2, "units": {"latitude": "degrees north", "longitude": "degrees east"}},
        {"version": 1, "units": {"latitude": "radians", "longitude": "radians"}},
        {"version": 1},
    ],
)
def test_city_table_rejects_unknown_layout(tmp_path, header):
    path = tmp_path / "cities.json"
    path.write_text(json.dumps(dict(header, records=[{"name": "quito", "latitude": 0, "longitude": 0}])))
    with pytest.raises(UsageError):
        CityTable(path)


def test_parse_frame_real_and_complex():
    f = frame_file.parse_frame('{"n": 2, "m": 1, "vectors": [[3, 4]]}')
    assert isinstance(f, RealFrame)
    g = frame_file.parse_frame('{"vectors": [[[1, 2], 3]]}', is_complex=True)
    assert isinstance(g, ComplexFrame)
    np.testing.assert_array_equal(g.vectors, [[1 + 2j, 3 + 0j]])


@pytest.mark.parametrize(
    "text",
    [
        "[]",
        '{"vectors": [[true, 1]]}',
        '{"vectors": [[1, 2], [3]]}',
        '{"m": 2, "vectors": [[1, 2]]}',
        '{"vectors": [[1], [2]]}',
    ],
)
def test_parse_frame_errors(text):
    with pytest.raises(FrameParseError):
        frame_file.parse_frame(text)


def test_parse_frame_error_position():
    with pytest.raises(FrameParseError) as info:
        frame_file.parse_frame('{"vectors":\n\n  [[1, 2]')
    assert info.value.line == 3
