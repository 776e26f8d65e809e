"""
Counting complete subgraphs.

Vertices are ordered by degeneracy and each vertex keeps only its neighbours
later in that order. A K_r is then counted exactly once, from its earliest
vertex, by intersecting forward neighbourhoods; the last level is a popcount
so cliques are counted without being listed.
"""
import heapq
from typing import List, Sequence

from kkclique.graph.graph import CliqueProfile, Graph, iter_bits
from kkclique.util.exceptions import PreconditionError


def degeneracy_order(g: Graph) -> List[int]:
    """
    Repeatedly remove a vertex of minimum remaining degree, smallest label
    first on ties.

    Returns:
        list of int
            Vertex labels in removal order
    """
    rows = g.rows
    degree = [row.bit_count() for row in rows]
    heap = [(d, v) for v, d in enumerate(degree)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != degree[v]:
            continue
        removed[v] = True
        order.append(v + 1)
        for w in iter_bits(rows[v]):
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))
    return order


def forward_rows(g: Graph) -> List[int]:
    """
    Relabel vertices by their position in the degeneracy order and keep, for
    each position, only the neighbours at later positions.
    """
    order = degeneracy_order(g)
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v - 1] = i
    forward = [0] * g.n
    for v, row in enumerate(g.rows):
        i = position[v]
        for w in iter_bits(row):
            j = position[w]
            if j > i:
                forward[i] |= 1 << j
    return forward


def _count_in(forward: Sequence[int], candidates: int, k: int) -> int:
    # number of k-cliques inside candidates; forward rows only point later
    if k == 1:
        return candidates.bit_count()
    total = 0
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        nxt = candidates & forward[v]
        if nxt.bit_count() >= k - 1:
            total += _count_in(forward, nxt, k - 1)
    return total


def count_cliques(g: Graph, r: int) -> int:
    """
    k_r(g), the number of r-vertex complete subgraphs of g.

    Args:
        g: Graph
        r: int
            Clique size, r >= 1
    Returns:
        int
    """
    if r < 1:
        raise PreconditionError(f"clique size must be >= 1, got {r}")
    if r > g.n:
        return 0
    if r == 1:
        return g.n
    if r == 2:
        return g.m
    forward = forward_rows(g)
    total = 0
    for row in forward:
        if row.bit_count() >= r - 1:
            total += _count_in(forward, row, r - 1)
    return total


def clique_profile(g: Graph, r_max: int) -> CliqueProfile:
    """
    k_r(g) for every r in 1..r_max in a single traversal.

    Args:
        g: Graph
        r_max: int
            Largest clique size to report, r_max >= 1
    Returns:
        CliqueProfile
    """
    if r_max < 1:
        raise PreconditionError(f"r_max must be >= 1, got {r_max}")
    counts = [0] * (r_max + 1)
    counts[1] = g.n
    forward = forward_rows(g)

    def walk(candidates: int, size: int) -> None:
        # every vertex of candidates extends the current size-clique by one
        counts[size + 1] += candidates.bit_count()
        if size + 1 >= r_max:
            return
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            nxt = candidates & forward[v]
            if nxt:
                walk(nxt, size + 1)

    if r_max >= 2:
        for row in forward:
            if row:
                walk(row, 1)
    return CliqueProfile({r: counts[r] for r in range(1, r_max + 1)})


def count_cliques_within(rows: Sequence[int], candidates: int, k: int) -> int:
    """
    Number of k-cliques among the vertices of the candidates bitmask, using
    full (symmetric) adjacency rows.
    """
    if k == 0:
        return 1
    if k == 1:
        return candidates.bit_count()
    total = 0
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        nxt = candidates & rows[v]
        if nxt.bit_count() >= k - 1:
            total += count_cliques_within(rows, nxt, k - 1)
    return total


def cliques_through_pair(rows: Sequence[int], i: int, j: int, k: int) -> int:
    """K_k subgraphs containing vertices i and j (0-based row indices), with or without the edge ij."""
    common = rows[i] & rows[j]
    if k == 2:
        return 1
    if common.bit_count() < k - 2:
        return 0
    return count_cliques_within(rows, common, k - 2)


def cliques_through_edge(g: Graph, u: int, v: int, r: int) -> int:
    """
    Number of K_r subgraphs of g that contain both u and v.

    The pair does not need to be an edge: the count is what adding it would
    contribute, which is what the edge-flip searches need.
    """
    if r < 2:
        raise PreconditionError(f"clique size must be >= 2, got {r}")
    g._check_vertex(u, g.n)
    g._check_vertex(v, g.n)
    if u == v:
        raise PreconditionError("u and v must differ")
    return cliques_through_pair(g.rows, u - 1, v - 1, r)
