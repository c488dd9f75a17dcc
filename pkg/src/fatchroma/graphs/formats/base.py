"""Abstract base class for graph file formats."""

from abc import ABC, abstractmethod

from ...models import Graph


class GraphCodec(ABC):
    """Abstract interface for reading and writing graphs in a text format."""

    name: str

    @abstractmethod
    def parse(self, text: str) -> Graph:
        """Parse a single graph.

        Args:
            text: Encoded graph

        Returns:
            Graph: Decoded graph with 0-based vertices

        Raises:
            GraphFormatError: If the text is malformed
        """
        pass

    @abstractmethod
    def emit(self, g: Graph) -> str:
        """Encode a graph, including the trailing newline.

        Args:
            g: Graph to encode

        Returns:
            str: Encoded text
        """
        pass

    def parse_many(self, text: str) -> list[Graph]:
        """Parse every graph in a file. Formats holding one graph per file return one item."""
        return [self.parse(text)]
