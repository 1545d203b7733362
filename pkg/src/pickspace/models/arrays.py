"""Complex array field types for the pydantic models.

Complex scalars travel as two-element ``[re, im]`` arrays and matrices as row-major
arrays of rows. Inside Python the same fields hold read-only ``numpy`` arrays, and
they also accept plain numbers, complex numbers and existing arrays.
"""

from typing import Annotated, Any

import numpy as np
from numpy.typing import NDArray
from pydantic import PlainSerializer, PlainValidator, WithJsonSchema

ComplexArray = NDArray[np.complex128]

_PAIR_SCHEMA: dict[str, Any] = {
    "type": "array",
    "items": {"type": "number"},
    "minItems": 2,
    "maxItems": 2,
}


def _nested_schema(depth: int) -> dict[str, Any]:
    schema = _PAIR_SCHEMA
    for _ in range(depth):
        schema = {"type": "array", "items": schema}
    return schema


def to_complex_array(value: Any, ndim: int) -> ComplexArray:
    """Coerce a value into a read-only complex array of the given rank.

    A real array with one extra trailing axis of length two is read as
    ``[re, im]`` pairs.

    Args:
        value: Array-like input
        ndim: Expected rank of the complex array

    Returns:
        ComplexArray: Read-only complex array

    Raises:
        ValueError: If the value has the wrong shape or is not numeric
    """
    try:
        arr = np.asarray(value)
    except (TypeError, ValueError) as e:
        msg = f"not an array: {e!s}"
        raise ValueError(msg) from e

    if arr.dtype == object:
        msg = "ragged or non-numeric array"
        raise ValueError(msg)
    if arr.ndim == ndim + 1 and arr.shape[-1] == 2 and not np.iscomplexobj(arr):
        arr = arr[..., 0].astype(np.float64) + 1j * arr[..., 1].astype(np.float64)
    elif arr.ndim != ndim:
        msg = f"expected a complex array of rank {ndim}, got shape {arr.shape}"
        raise ValueError(msg)

    try:
        out = np.array(arr, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        msg = f"non-numeric entries: {e!s}"
        raise ValueError(msg) from e
    if not np.all(np.isfinite(out)):
        msg = "array contains non-finite entries"
        raise ValueError(msg)
    out.setflags(write=False)
    return out


def complex_to_wire(value: Any) -> Any:
    """Serialize a complex scalar or array into nested ``[re, im]`` lists.

    Args:
        value: Complex scalar or array

    Returns:
        Any: Nested lists of two-element float lists
    """
    arr = np.asarray(value, dtype=np.complex128)
    return np.stack([arr.real, arr.imag], axis=-1).tolist()


def _vector(value: Any) -> ComplexArray:
    return to_complex_array(value, 1)


def _matrix(value: Any) -> ComplexArray:
    return to_complex_array(value, 2)


def _scalar(value: Any) -> complex:
    if isinstance(value, list | tuple):
        arr = to_complex_array(value, 0)
        return complex(arr)
    return complex(value)


ComplexScalar = Annotated[
    complex,
    PlainValidator(_scalar),
    PlainSerializer(complex_to_wire, return_type=list),
    WithJsonSchema(_PAIR_SCHEMA),
]

ComplexVector = Annotated[
    ComplexArray,
    PlainValidator(_vector),
    PlainSerializer(complex_to_wire, return_type=list),
    WithJsonSchema(_nested_schema(1)),
]

ComplexMatrix = Annotated[
    ComplexArray,
    PlainValidator(_matrix),
    PlainSerializer(complex_to_wire, return_type=list),
    WithJsonSchema(_nested_schema(2)),
]
