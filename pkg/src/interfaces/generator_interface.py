"""Generator interface module."""
from abc import ABC, abstractmethod


class GeneratorInterface(ABC):
    """Interface for report writers."""

    @abstractmethod
    def create_report(self, data: dict, output_path: str) -> bool:
        """Write a report built from ``data``.

        Args:
            data: Report payload
            output_path: Path to save the report

        Returns:
            True if successful, False otherwise
        """
        pass
