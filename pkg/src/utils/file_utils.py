"""
File utilities for reading inputs and writing outputs atomically.
"""

import os
import json
import logging
import tempfile
from typing import Any

from src.core.errors import ParseError

logger = logging.getLogger("fivec")

class FileUtils:
    """Utilities for file operations."""

    @staticmethod
    def ensure_directory(directory_path: str) -> bool:
        """
        Ensure a directory exists, creating it if necessary.

        Args:
            directory_path: Path to the directory

        Returns:
            True if directory exists or was created, False otherwise
        """
        try:
            os.makedirs(directory_path, exist_ok=True)
            return True
        except OSError as e:
            logger.error(f"Error creating directory {directory_path}: {str(e)}")
            return False

    @staticmethod
    def write_text_atomic(file_path: str, content: str) -> None:
        """
        Write text to a file through a temporary file in the same directory.

        Readers never observe a partially written file.

        Args:
            file_path: Destination path
            content: Text to write
        """
        directory = os.path.dirname(os.path.abspath(file_path))
        FileUtils.ensure_directory(directory)
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(content)
            os.replace(tmp_path, file_path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
        logger.debug(f"Wrote {len(content)} characters to {file_path}")

    @staticmethod
    def dumps_json(data: Any) -> str:
        """Serialize with sorted keys and a trailing newline."""
        return json.dumps(data, sort_keys=True, indent=1) + "\n"

    @staticmethod
    def read_json(file_path: str) -> Any:
        """
        Read and decode a JSON file.

        Args:
            file_path: Path to the file

        Returns:
            Decoded JSON value

        Raises:
            ParseError: if the file cannot be read or decoded
        """
        try:
            with open(file_path, "r", encoding="utf-8") as handle:
                return json.load(handle)
        except OSError as e:
            raise ParseError(f"Cannot read {file_path}: {str(e)}")
        except json.JSONDecodeError as e:
            raise ParseError(f"Malformed JSON in {file_path}: {str(e)}")
