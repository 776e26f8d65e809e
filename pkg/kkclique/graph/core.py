"""
k-core pruning.

Every vertex of a K_s has at least s - 1 neighbours inside it, so deleting
vertices of degree below s - 1 (repeatedly) never destroys a K_s. Counting on
the (s - 1)-core gives the same k_s on a graph that is often much smaller.
"""
from typing import Dict, List

from kkclique.binomial import kk_bound
from kkclique.graph.cliques import count_cliques
from kkclique.graph.graph import Graph, iter_bits
from kkclique.util.exceptions import PreconditionError
from kkclique.util.log import get_logger

logger = get_logger(__name__)


def core_numbers(g: Graph) -> Dict[int, int]:
    """
    Core number of every vertex, by bucket-queue peeling in O(n + m).

    Vertices sit in an array sorted by current degree with ``start[d]``
    pointing at the first vertex of degree d; lowering a degree is a swap
    with the first vertex of its bucket.

    Returns:
        dict
            Vertex label -> largest k such that the vertex is in the k-core
    """
    n = g.n
    if n == 0:
        return {}
    rows = g.rows
    degree = [row.bit_count() for row in rows]
    max_degree = max(degree)
    bucket_size = [0] * (max_degree + 1)
    for d in degree:
        bucket_size[d] += 1
    start = [0] * (max_degree + 1)
    total = 0
    for d in range(max_degree + 1):
        start[d] = total
        total += bucket_size[d]
    vert = [0] * n
    pos = [0] * n
    fill = list(start)
    for v in range(n):
        pos[v] = fill[degree[v]]
        vert[pos[v]] = v
        fill[degree[v]] += 1

    for i in range(n):
        v = vert[i]
        for u in iter_bits(rows[v]):
            if degree[u] > degree[v]:
                du = degree[u]
                pu = pos[u]
                pw = start[du]
                w = vert[pw]
                if u != w:
                    vert[pu], vert[pw] = w, u
                    pos[u], pos[w] = pw, pu
                start[du] += 1
                degree[u] -= 1
    return {v + 1: degree[v] for v in range(n)}


def k_core_vertices(g: Graph, k: int) -> List[int]:
    """Labels of the vertices of the k-core of g, in increasing order."""
    if k < 0:
        raise PreconditionError(f"k must be >= 0, got {k}")
    if k == 0:
        return list(range(1, g.n + 1))
    return [v for v, c in core_numbers(g).items() if c >= k]


def k_core(g: Graph, k: int) -> Graph:
    """
    The maximal induced subgraph of g with minimum degree >= k, relabelled
    1..n' in the order of the original labels. Empty when no such subgraph
    exists.
    """
    vertices = k_core_vertices(g, k)
    if len(vertices) == g.n:
        return g
    return g.induced_subgraph(vertices)


def prune_then_count(g: Graph, s: int) -> int:
    """
    k_s(g) computed on the (s - 1)-core of g.

    Args:
        g: Graph
        s: int
            Clique size, s >= 2
    Returns:
        int
    """
    if s < 2:
        raise PreconditionError(f"prune_then_count needs s >= 2, got {s}")
    core = k_core(g, s - 1)
    logger.info("%d-core keeps %d of %d vertices and %d of %d edges",
                s - 1, core.n, g.n, core.m, g.m)
    return count_cliques(core, s)


def core_bound(g: Graph, r: int, s: int) -> int:
    """
    Kruskal-Katona bound on k_s(g) taken from the K_r count of its
    (s - 1)-core instead of the whole graph.

    The core has no more K_r subgraphs than g and the same K_s subgraphs, so
    this never exceeds kk_bound(k_r(g), r, s) and never falls below k_s(g).
    """
    if r < 1 or r >= s:
        raise PreconditionError(f"core_bound needs 1 <= r < s, got r={r}, s={s}")
    core = k_core(g, s - 1)
    return kk_bound(count_cliques(core, r), r, s)
