"""Bundled example input documents."""

import os

from ..core.parsers import read_document
from ..models.documents import InputDocument
from ..utils.logging import setup_logging

logger = setup_logging(__name__)

# Base data directory
DATA_DIR = os.path.dirname(__file__)

# Path to the example documents
EXAMPLES_DIR = os.path.join(DATA_DIR, "examples")


def list_examples() -> list[str]:
    """List the names of the bundled examples.

    Returns:
        list[str]: Example names without the .json suffix
    """
    return sorted(
        name.removesuffix(".json") for name in os.listdir(EXAMPLES_DIR) if name.endswith(".json")
    )


def example_path(name: str) -> str:
    """Return the file path of a bundled example.

    Args:
        name: Example name, e.g. "extreme_opposite"

    Returns:
        str: Path of the example document
    """
    return os.path.join(EXAMPLES_DIR, f"{name}.json")


def load_example(name: str) -> InputDocument:
    """Load a bundled example document.

    Args:
        name: Example name, e.g. "extreme_opposite"

    Returns:
        InputDocument: Parsed document

    Raises:
        DocumentParseError: If no example has that name
    """
    logger.debug(f"Loading example {name}")
    return read_document(example_path(name))
