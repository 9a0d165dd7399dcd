""" frame_file.py -- Reader for JSON frame files.

    Language: Python 3.9

    A frame file is an object {"n": n, "m": m, "vectors": [[...], ...]} with one row per
    vector. Complex entries are written as [re, im] pairs. "n" and "m" are optional but
    must match the vectors when given.
"""

from typing import Union
import json
import logging
import pathlib

from pythagoras.func.exterior import ComplexFrame, RealFrame
from pythagoras.utils.exceptions import DomainError, FrameParseError, UsageError


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _entry(x, row: int, col: int, is_complex: bool) -> Union[float, complex]:
    if _is_number(x):
        return complex(x) if is_complex else float(x)
    if isinstance(x, list) and len(x) == 2 and all(_is_number(y) for y in x):
        if not is_complex:
            raise FrameParseError(
                f"Vector {row}, entry {col} is a complex [re, im] pair; pass --complex."
            )
        return complex(x[0], x[1])
    raise FrameParseError(f"Vector {row}, entry {col} is not a number: {x!r}.")


def parse_frame(text: str, is_complex: bool = False) -> Union[RealFrame, ComplexFrame]:
    """Parse frame-file text into a frame.

    Parameters
    ----------
    text: str
        JSON document.
    is_complex: bool
        Build a ComplexFrame instead of a RealFrame.
        (Optional) Defaults to: False

    Returns
    ----------
    Union[RealFrame, ComplexFrame]
        Validated frame.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FrameParseError(f"Malformed JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(data, dict) or "vectors" not in data:
        raise FrameParseError("Frame file must be an object with a 'vectors' key.")
    vectors = data["vectors"]
    if not isinstance(vectors, list) or not vectors:
        raise FrameParseError("Frame file has an empty vector list.")
    rows = []
    for i, vector in enumerate(vectors, start=1):
        if not isinstance(vector, list) or not vector:
            raise FrameParseError(f"Vector {i} is not a non-empty array.")
        rows.append([_entry(x, i, j, is_complex) for j, x in enumerate(vector, start=1)])
    if "m" in data and data["m"] != len(rows):
        raise FrameParseError(f"Declared m={data['m']} but {len(rows)} vectors were given.")
    if "n" in data and any(len(row) != data["n"] for row in rows):
        raise FrameParseError(f"Declared n={data['n']} does not match every vector's length.")
    try:
        frame = ComplexFrame(rows) if is_complex else RealFrame(rows)
    except DomainError as e:
        raise FrameParseError(str(e)) from e
    logging.debug(f"Parsed {type(frame).__name__} with n={frame.n}, m={frame.m}.")
    return frame


def load_frame(path: pathlib.Path, is_complex: bool = False) -> Union[RealFrame, ComplexFrame]:
    """Read and parse a frame file."""
    path = pathlib.Path(path)
    try:
        with open(path, "r") as f:
            text = f.read()
    except OSError as e:
        raise UsageError(f"Could not read frame file '{path}': {e.strerror}.") from e
    return parse_frame(text, is_complex=is_complex)
