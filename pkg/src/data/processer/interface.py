import os
import sys
from abc import ABC, abstractmethod
from typing import List, Union

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../../..")))

from src.structure import RecordSet


class Interface(ABC):
    """
    This is the interface for reading and writing records.

    All methods defined in this interface should be implemented by the concrete class.
    """

    @abstractmethod
    async def load_records(self, path: str) -> RecordSet:
        """
        Load every record of a file.

        Args:
            path (str): The file path.

        Returns:
            RecordSet: The validated records.
        """
        pass

    @abstractmethod
    async def load_directory(self, path: str, suffix: str = ".qnd") -> List[RecordSet]:
        """
        Load every file of a directory with the given suffix, sorted by name.

        Args:
            path (str): The directory.
            suffix (str, optional): File suffix. Defaults to ".qnd".

        Returns:
            List[RecordSet]: One record set per file.
        """
        pass

    @abstractmethod
    async def save_lines(self, path: Union[str, None], lines: List[str]):
        """
        Write lines to a file.

        Args:
            path (Union[str, None]): The file path; None keeps the lines for stdout.
            lines (List[str]): The lines without trailing newlines.
        """
        pass
