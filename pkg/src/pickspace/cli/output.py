"""Rendering of command results as JSON or as plain text."""

import json
from enum import Enum
from typing import Any, TextIO

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel


def round_significant(value: Any, digits: int) -> Any:
    """Round every float in a JSON-compatible structure to the given significant digits."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {k: round_significant(v, digits) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [round_significant(v, digits) for v in value]
    return value


def to_json(result: BaseModel | dict[str, Any], digits: int) -> str:
    """Serialize a result as one JSON document with rounded floats."""
    if isinstance(result, BaseModel):
        data = result.model_dump(mode="json", exclude_none=True)
    else:
        data = {
            k: v.model_dump(mode="json", exclude_none=True) if isinstance(v, BaseModel) else v
            for k, v in result.items()
        }
    return json.dumps(round_significant(data, digits), indent=2)


def _format_number(value: Any, digits: int) -> str:
    if isinstance(value, complex | np.complexfloating):
        re, im = float(value.real), float(value.imag)
        if im == 0:
            return f"{re:.{digits}g}"
        sign = "-" if im < 0 else "+"
        return f"{re:.{digits}g}{sign}{abs(im):.{digits}g}i"
    return f"{float(value):.{digits}g}"


def _format_array(arr: NDArray[Any], digits: int, indent: str) -> list[str]:
    if arr.ndim <= 1:
        return [indent + "[" + ", ".join(_format_number(v, digits) for v in arr.ravel()) + "]"]
    return [line for row in arr for line in _format_array(row, digits, indent)]


def render_text(value: Any, digits: int, indent: str = "") -> list[str]:
    """Render a result as indented ``key: value`` lines.

    Args:
        value: Model, mapping, array or scalar
        digits: Significant digits of numbers
        indent: Current indentation

    Returns:
        list[str]: Output lines
    """
    if isinstance(value, BaseModel):
        value = {k: getattr(value, k) for k in type(value).model_fields}
    if isinstance(value, dict):
        lines: list[str] = []
        for key, item in value.items():
            if item is None:
                continue
            if isinstance(item, BaseModel | dict | list | np.ndarray):
                lines.append(f"{indent}{key}:")
                lines.extend(render_text(item, digits, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {render_text(item, digits)[0]}")
        return lines
    if isinstance(value, np.ndarray):
        return _format_array(value, digits, indent)
    if isinstance(value, list):
        if all(isinstance(v, int | float) and not isinstance(v, bool) for v in value):
            return [indent + "[" + ", ".join(_format_number(v, digits) for v in value) + "]"]
        lines = []
        for item in value:
            sub = render_text(item, digits, indent + "  ")
            lines.append(f"{indent}- {sub[0].strip()}")
            lines.extend(sub[1:])
        return lines
    if isinstance(value, bool):
        return [indent + ("true" if value else "false")]
    if isinstance(value, Enum):
        return [indent + str(value.value)]
    if isinstance(value, int | float | complex | np.number):
        return [indent + _format_number(value, digits)]
    return [indent + str(value)]


def emit(result: BaseModel | dict[str, Any], as_json: bool, digits: int, stream: TextIO) -> None:
    """Write a result to the stream.

    Args:
        result: Command result
        as_json: Write one JSON document instead of text
        digits: Significant digits of numbers
        stream: Output stream
    """
    if as_json:
        stream.write(to_json(result, digits) + "\n")
    else:
        stream.write("\n".join(render_text(result, digits)) + "\n")
