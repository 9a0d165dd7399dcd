""" numeric.py -- Shared numeric guards and JSON float formatting for Pythagoras.

    Language: Python 3.9
"""

from typing import Any
import json
import math

from pythagoras import config
from pythagoras.utils.exceptions import DomainError


def check_length(name: str, value: float) -> float:
    """Confirm a length (or area) is finite and non-negative.

    Parameters
    ----------
    name: str
        Name used in the error message.
    value: float
        Value to check.

    Returns
    ----------
    float
        The value as a float.
    """
    value = float(value)
    if not math.isfinite(value) or value < 0:
        raise DomainError(f"'{name}' must be finite and non-negative, got {value!r}.")
    return value


def clamp_unit(x: float, tol: float = config.CLAMP_TOLERANCE) -> float:
    """Clamp an arccos argument into [-1, 1]. Overshoots beyond tol raise DomainError."""
    if x > 1.0 + tol or x < -1.0 - tol or math.isnan(x):
        raise DomainError(f"arccos argument {x!r} is outside [-1, 1].")
    return min(1.0, max(-1.0, x))


def relative_residual(lhs: float, rhs: float) -> float:
    """Residual |lhs - rhs| / max(|lhs|, 1) used by every identity check."""
    return abs(lhs - rhs) / max(abs(lhs), 1.0)


def format_float(x: float) -> str:
    """Render a float with 17 significant digits. Non-finite values render as null."""
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def _encode(obj: Any, level: int, indent: int) -> str:
    pad = "\n" + " " * (indent * (level + 1))
    end = "\n" + " " * (indent * level)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{json.dumps(str(k))}: {_encode(v, level + 1, indent)}" for k, v in obj.items()
        ]
        return "{" + pad + ("," + pad).join(items) + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [_encode(v, level + 1, indent) for v in obj]
        return "[" + pad + ("," + pad).join(items) + end + "]"
    # numpy scalars and the like.
    if hasattr(obj, "item"):
        return _encode(obj.item(), level, indent)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable.")


def dumps(obj: Any, indent: int = 2) -> str:
    """Serialize to JSON with every float written to 17 significant digits.

    Key order is preserved, so identical inputs give byte-identical output.

    Parameters
    ----------
    obj: Any
        JSON-compatible object (dicts, lists, str, int, float, bool, None).
    indent: int
        Spaces per nesting level.
        (Optional) Defaults to: 2

    Returns
    ----------
    str
        JSON text.
    """
    return _encode(obj, 0, indent)
