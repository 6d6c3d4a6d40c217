"""Parser interface module."""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Union

from src.graph.graph import Graph


class GraphFileParser(ABC):
    """Abstract base class for graph file parsers."""

    @abstractmethod
    def can_handle(self, file_path: Union[str, Path]) -> bool:
        """Check if this parser can handle the given file."""
        pass

    @abstractmethod
    def parse_text(self, text: str) -> List[Graph]:
        """Parse every graph contained in ``text``."""
        pass

    def parse(self, file_path: Union[str, Path]) -> List[Graph]:
        """Parse the file and return the graphs it contains.

        Args:
            file_path: Path to the file

        Returns:
            List of graphs in file order
        """
        return self.parse_text(Path(file_path).read_text(encoding='ascii'))


class GraphWriter(ABC):
    """Abstract base class for graph serializers."""

    @abstractmethod
    def format_graph(self, graph: Graph) -> str:
        """Serialize one graph."""
        pass

    def format_graphs(self, graphs: List[Graph]) -> str:
        """Serialize several graphs, one block per graph."""
        return "".join(self.format_graph(g) + "\n" for g in graphs)
