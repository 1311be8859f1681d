"""AlgebraDocument Repository Layer - reading and writing document files"""
import io
import logging
from pathlib import Path
from typing import BinaryIO, Union

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from core.exceptions import DocumentError
from algebras.models import GradedAlgebra
from cli.serializers import AlgebraDocumentSerializer

logger = logging.getLogger(__name__)


def _flatten_errors(errors, prefix: str = "") -> str:
    if isinstance(errors, dict):
        return "; ".join(_flatten_errors(value, f"{prefix}{key}: ") for key, value in errors.items())
    if isinstance(errors, list):
        return "; ".join(_flatten_errors(value, prefix) for value in errors if value)
    return f"{prefix}{errors}"


class AlgebraDocumentRepository:
    """Repository for algebra documents - handles all file access"""

    @staticmethod
    def render(algebra: GradedAlgebra) -> bytes:
        """Serialize an algebra to document bytes (indent 2, trailing newline)."""
        data = AlgebraDocumentSerializer(algebra).data
        return JSONRenderer().render(data, renderer_context={'indent': 2}) + b"\n"

    @staticmethod
    def parse(stream: BinaryIO, source: str = "<stream>") -> GradedAlgebra:
        """Parse and validate a document.

        Raises:
            DocumentError: If the JSON is malformed or fails validation
        """
        try:
            data = JSONParser().parse(stream)
        except ParseError as e:
            logger.error(f"Error parsing {source}: {str(e)}")
            raise DocumentError(f"{source}: {e.detail}") from e

        serializer = AlgebraDocumentSerializer(data=data)
        if not serializer.is_valid():
            message = _flatten_errors(serializer.errors)
            logger.error(f"Invalid algebra document {source}: {message}")
            raise DocumentError(f"{source}: {message}")
        return serializer.save()

    @staticmethod
    def parse_bytes(content: bytes, source: str = "<bytes>") -> GradedAlgebra:
        return AlgebraDocumentRepository.parse(io.BytesIO(content), source)

    @staticmethod
    def load(path: Union[str, Path]) -> GradedAlgebra:
        """Read an algebra from a document file.

        Raises:
            DocumentError: If the file cannot be read or is not a valid document
        """
        path = Path(path)
        try:
            with path.open('rb') as stream:
                algebra = AlgebraDocumentRepository.parse(stream, str(path))
        except OSError as e:
            logger.error(f"Error reading {path}: {str(e)}")
            raise DocumentError(f"Cannot read {path}: {e.strerror or e}") from e
        logger.info(f"Algebra loaded: {algebra} from {path}")
        return algebra

    @staticmethod
    def save(algebra: GradedAlgebra, path: Union[str, Path]) -> Path:
        """Write an algebra to a document file.

        Raises:
            DocumentError: If the file cannot be written
        """
        path = Path(path)
        try:
            path.write_bytes(AlgebraDocumentRepository.render(algebra))
        except OSError as e:
            logger.error(f"Error writing {path}: {str(e)}")
            raise DocumentError(f"Cannot write {path}: {e.strerror or e}") from e
        logger.info(f"Algebra saved: {algebra} to {path}")
        return path
