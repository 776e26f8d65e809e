"""
Simple undirected graphs on the vertex labels 1..n.

Adjacency is stored as one integer bit row per vertex: bit ``j - 1`` of the
row of vertex ``i`` is set when ``i`` and ``j`` are adjacent. Python integers
have no fixed width, so the same representation serves n <= 64 (where a row
fits a machine word) and the few-hundred-vertex graphs above that.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from kkclique.util.exceptions import PreconditionError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the 0-based indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """
    An immutable simple undirected graph with vertices 1..n.

    Attributes:
        n: int
            Number of vertices
        rows: tuple of int
            ``rows[i]`` is the neighbour bitmask of vertex ``i + 1``

    Methods:
        edges(): list of (u, v)
            Edges with u < v, in lexicographic order
        has_edge(u, v): bool
        neighbors(v): list of int
        degree(v): int
        induced_subgraph(vertices): Graph
            Subgraph on the given labels, relabelled 1..k in increasing order
        relabel(permutation): Graph
            Vertex ``v`` becomes ``permutation[v - 1]``
        with_edge(u, v) / without_edge(u, v): Graph
    """
    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise PreconditionError(f"vertex count must be >= 0, got {n}")
        rows = [0] * n
        for u, v in edges:
            self._check_vertex(u, n)
            self._check_vertex(v, n)
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            rows[u - 1] |= 1 << (v - 1)
            rows[v - 1] |= 1 << (u - 1)
        self._n = n
        self._rows = tuple(rows)
        self._m = sum(row.bit_count() for row in rows) // 2

    @staticmethod
    def _check_vertex(v: int, n: int) -> None:
        if not 1 <= v <= n:
            raise PreconditionError(f"vertex {v} is outside 1..{n}")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build a graph straight from symmetric, loop-free bit rows."""
        graph = cls.__new__(cls)
        n = len(rows)
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row & ~full or row >> i & 1:
                raise PreconditionError(f"row {i + 1} has bits outside 1..{n} or a self-loop")
        for i, row in enumerate(rows):
            for j in iter_bits(row):
                if not rows[j] >> i & 1:
                    raise PreconditionError(f"adjacency is not symmetric at ({i + 1}, {j + 1})")
        graph._n = n
        graph._rows = tuple(rows)
        graph._m = sum(row.bit_count() for row in rows) // 2
        return graph

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    def edges(self) -> List[Edge]:
        result = []
        for i, row in enumerate(self._rows):
            for j in iter_bits(row >> (i + 1)):
                result.append((i + 1, i + j + 2))
        return result

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u, self._n)
        self._check_vertex(v, self._n)
        return bool(self._rows[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v, self._n)
        return [j + 1 for j in iter_bits(self._rows[v - 1])]

    def degree(self, v: int) -> int:
        self._check_vertex(v, self._n)
        return self._rows[v - 1].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self._rows]

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v, self._n)
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for j in iter_bits(self._rows[v - 1]):
                if j + 1 in index:
                    row |= 1 << index[j + 1]
            rows.append(row)
        return Graph.from_rows(rows)

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        if sorted(permutation) != list(range(1, self._n + 1)):
            raise PreconditionError("relabel needs a permutation of 1..n")
        return Graph(self._n, ((permutation[u - 1], permutation[v - 1]) for u, v in self.edges()))

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self._n, self.edges() + [(u, v)])

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge")
        pair = (min(u, v), max(u, v))
        return Graph(self._n, (e for e in self.edges() if e != pair))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


@dataclass(frozen=True)
class CliqueProfile:
    """
    Clique counts k_r(g) for r = 1..r_max.

    Attributes:
        counts: dict
            Map from clique size r to k_r(g)
    """
    counts: Dict[int, int] = field(default_factory=dict)

    def __getitem__(self, r: int) -> int:
        return self.counts[r]

    def __contains__(self, r: int) -> bool:
        return r in self.counts

    def as_dict(self) -> Dict[int, int]:
        return dict(sorted(self.counts.items()))
