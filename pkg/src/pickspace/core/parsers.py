"""Parsers for JSON input documents."""

import json
import sys
from typing import Any, Protocol, TypeVar

from pydantic import ValidationError

from ..models.documents import DocumentKind, InputDocument
from ..utils.logging import setup_logging
from .errors import DocumentParseError

logger = setup_logging(__name__)
T_co = TypeVar("T_co", covariant=True)

STDIN = "-"


class Parser(Protocol[T_co]):
    """Protocol defining the interface for document parsers."""

    def parse(self, text: str, source: str) -> T_co:
        """Parse a document.

        Args:
            text: Raw document text
            source: Name of the document for error messages

        Returns:
            T_co: Parsed document
        """
        ...


def infer_kind(data: dict[str, Any]) -> DocumentKind | None:
    """Infer the document kind from its keys when "kind" is absent."""
    if "points" in data:
        return DocumentKind.POINTS
    if "entries" in data:
        return DocumentKind.GRAM
    if "zeros" in data:
        return DocumentKind.BLASCHKE
    return None


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        # drop the leading ("payload", <kind tag>) of union members
        loc = item["loc"][2:] if item["loc"][:1] == ("payload",) else item["loc"]
        location = ".".join(str(p) for p in loc)
        parts.append(f"{location or 'document'}: {item['msg']}")
    return "; ".join(parts)


class JsonDocumentParser:
    """Parser for points, gram and blaschke JSON documents."""

    def parse(self, text: str, source: str) -> InputDocument:
        """Parse JSON text into an input document.

        Args:
            text: JSON text
            source: Name of the document for error messages

        Returns:
            InputDocument: Validated document

        Raises:
            DocumentParseError: If the text is not JSON or does not match a document schema
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            logger.error(f"Error decoding {source}: {e.msg}")
            raise DocumentParseError(e.msg, source, e.lineno, e.colno) from e

        if not isinstance(data, dict):
            msg = "document must be a JSON object"
            raise DocumentParseError(msg, source, 1, 1)

        if "kind" not in data:
            kind = infer_kind(data)
            if kind is None:
                msg = 'cannot tell the document kind; expected "points", "entries" or "zeros"'
                raise DocumentParseError(msg, source)
            data = {**data, "kind": kind.value}

        try:
            document = InputDocument.model_validate({"source": source, "payload": data})
        except ValidationError as e:
            raise DocumentParseError(_describe(e), source) from e
        logger.debug(f"Parsed {document.kind.value} document from {source}")
        return document


def read_document(path: str, parser: Parser[InputDocument] | None = None) -> InputDocument:
    """Read and parse a document from a file, or from standard input for "-".

    Args:
        path: File path or "-"
        parser: Parser to use, JSON by default

    Returns:
        InputDocument: Validated document

    Raises:
        DocumentParseError: If the file cannot be read or parsed
    """
    parser = parser or JsonDocumentParser()
    if path == STDIN:
        return parser.parse(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        logger.error(f"Error reading {path}: {e!s}")
        raise DocumentParseError(e.strerror or str(e), path) from e
    return parser.parse(text, path)
