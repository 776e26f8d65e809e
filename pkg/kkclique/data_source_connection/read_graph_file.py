"""
This module reads and writes graphs in the edge-list text format:

    n m
    u v
    ...

The first line holds the vertex count and the edge count, followed by m lines
with one edge each, labels 1-based and whitespace-separated. Blank lines and
lines starting with ``#`` are ignored.
"""
import os
from typing import Union

from kkclique.graph.graph import Graph
from kkclique.util.exceptions import GraphFormatError

PathLike = Union[str, "os.PathLike[str]"]


def _ints(fields: list, line_no: int, expected: int, what: str) -> list:
    if len(fields) != expected:
        raise GraphFormatError(f"expected {expected} integers for {what}, got {len(fields)}", line_no)
    try:
        values = [int(f) for f in fields]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {what}: {' '.join(fields)}", line_no) from None
    return values


def parse_edge_list(text: str) -> Graph:
    """
    Parse edge-list text into a Graph.

    Raises:
        GraphFormatError
            With the 1-based line number of the first offending line
    """
    header = None
    edges = []
    seen = set()
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if header is None:
            n, m = _ints(fields, line_no, 2, "the header 'n m'")
            if n < 0 or m < 0:
                raise GraphFormatError("vertex and edge counts must be non-negative", line_no)
            header = (n, m)
            continue
        u, v = _ints(fields, line_no, 2, "an edge 'u v'")
        n = header[0]
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"edge ({u}, {v}) has a label outside 1..{n}", line_no)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line_no)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", line_no)
        if len(edges) == header[1]:
            raise GraphFormatError(f"more edges than the {header[1]} announced in the header", line_no)
        seen.add(pair)
        edges.append(pair)
    if header is None:
        raise GraphFormatError("missing header line 'n m'")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header announces {header[1]} edges, found {len(edges)}", last_line)
    return Graph(header[0], edges)


def format_edge_list(g: Graph) -> str:
    """Render g in the edge-list format, edges in lexicographic order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


class ReadFlatFile:
    """
    A super class to operate on flat files.

    Attributes
    ----------
    file_path : str
        path to the flat file
    file_extension : str
        extension of the given file
    file_size: int
        Size of the file in bytes
    _res_dict: dict
        file_name, file_type and file_size of the file

    Methods
    -------
    get_file_details() -> dict
        return _res_dict.
    """

    def __init__(self, file_path: PathLike) -> None:
        self.file_path = os.fspath(file_path)
        if not os.path.isfile(self.file_path):
            raise GraphFormatError(f"no such file: {self.file_path}")
        _, self.file_extension = os.path.splitext(self.file_path)
        self.file_size = os.path.getsize(self.file_path)
        self._res_dict: dict = {
            "file_name": os.path.basename(self.file_path),
            "file_type": self.file_extension,
            "file_size": self.file_size,
        }

    def get_file_details(self) -> dict:
        """Return name, extension and size of the file."""
        return dict(self._res_dict)


class ReadEdgeList(ReadFlatFile):
    """
    Reading an edge-list file and return the graph and meta about the file.

    Attributes:
        _graph: Graph
            The parsed graph
    Methods:
        get_graph() -> Graph
            return the parsed graph
        get_graph_size() -> tuple
            return (vertex count, edge count)
    """

    def __init__(self, file_path: PathLike) -> None:
        super().__init__(file_path)
        with open(self.file_path, "rb") as handle:
            raw = handle.read()
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as err:
            line = raw.count(b"\n", 0, err.start) + 1
            raise GraphFormatError(f"not valid UTF-8 (byte {raw[err.start]:#04x})", line) from None
        self._graph = parse_edge_list(text)
        self._res_dict["num_vertices"] = self._graph.n
        self._res_dict["num_edges"] = self._graph.m

    def get_graph(self) -> Graph:
        """Return the Graph."""
        return self._graph

    def get_graph_size(self) -> tuple:
        """Return (n, m)."""
        return self._graph.n, self._graph.m


def read_graph(file_path: PathLike) -> Graph:
    return ReadEdgeList(file_path).get_graph()


def write_graph(g: Graph, file_path: PathLike) -> None:
    with open(os.fspath(file_path), "w", encoding="utf-8") as handle:
        handle.write(format_edge_list(g))
