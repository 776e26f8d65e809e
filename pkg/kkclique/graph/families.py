"""
Constructors for the graph families used in the bound and extremal checks.

All constructors return labelled graphs on 1..n with a fixed, documented
labelling so outputs are reproducible.
"""
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from kkclique.graph.graph import Graph
from kkclique.util.exceptions import PreconditionError


def empty_graph(n: int) -> Graph:
    """n isolated vertices."""
    return Graph(n)


def complete_graph(n: int) -> Graph:
    """K_n."""
    if n < 1:
        raise PreconditionError(f"complete_graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    """The path 1 - 2 - ... - n."""
    if n < 1:
        raise PreconditionError(f"path_graph needs n >= 1, got {n}")
    return Graph(n, ((v, v + 1) for v in range(1, n)))


def apex_construction(n: int, attachments: Sequence[int]) -> Graph:
    """
    K_n plus one external vertex per entry of attachments.

    The i-th external vertex is labelled n + i and joined to vertices
    1..attachments[i] of K_n; external vertices are pairwise non-adjacent.
    With attachments [m, w] this is the witness graph for the extension of
    Bollobas' theorem.

    Args:
        n: int
            Size of the complete core, n >= 1
        attachments: list of int
            Each entry a satisfies 0 <= a <= n
    Returns:
        Graph
    """
    if n < 1:
        raise PreconditionError(f"apex_construction needs n >= 1, got {n}")
    for a in attachments:
        if not 0 <= a <= n:
            raise PreconditionError(f"attachment {a} is outside 0..{n}")
    edges = list(combinations(range(1, n + 1), 2))
    for i, a in enumerate(attachments, start=1):
        edges.extend((v, n + i) for v in range(1, a + 1))
    return Graph(n + len(attachments), edges)


def complete_minus_star(n: int, p: int) -> Graph:
    """K_n with the p edges (n, 1), ..., (n, p) removed."""
    if n < 1:
        raise PreconditionError(f"complete_minus_star needs n >= 1, got {n}")
    if not 0 <= p < n:
        raise PreconditionError(f"complete_minus_star needs 0 <= p < n, got p={p}, n={n}")
    removed = {(v, n) for v in range(1, p + 1)}
    return Graph(n, (e for e in combinations(range(1, n + 1), 2) if e not in removed))


def turan_parts(n: int, k: int) -> list:
    """
    Parts of T(n, k): vertex v goes to part ((v - 1) mod k) + 1, so the first
    n mod k parts get ceil(n / k) vertices and the rest floor(n / k).
    """
    if not 1 <= k <= n:
        raise PreconditionError(f"turan_graph needs 1 <= k <= n, got n={n}, k={k}")
    parts = [[] for _ in range(k)]
    for v in range(1, n + 1):
        parts[(v - 1) % k].append(v)
    return parts


def turan_graph(n: int, k: int) -> Graph:
    """The complete k-partite graph on n vertices with balanced parts."""
    part_of = {}
    for index, part in enumerate(turan_parts(n, k)):
        for v in part:
            part_of[v] = index
    return Graph(n, ((u, v) for u, v in combinations(range(1, n + 1), 2) if part_of[u] != part_of[v]))


def complete_minus_two_disjoint_edges(n: int) -> Graph:
    """K_n without the edges (1, 2) and (3, 4); isomorphic to T(n, n - 2)."""
    if n < 4:
        raise PreconditionError(f"complete_minus_two_disjoint_edges needs n >= 4, got {n}")
    removed = {(1, 2), (3, 4)}
    return Graph(n, (e for e in combinations(range(1, n + 1), 2) if e not in removed))


def random_graph(n: int, p: float, seed: Optional[int] = None,
                 rng: Optional[np.random.Generator] = None) -> Graph:
    """
    Erdos-Renyi G(n, p) drawn from a numpy Generator.

    Pass either a seed or an existing generator; the same seed always
    produces the same graph.
    """
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability must be in [0, 1], got {p}")
    if rng is None:
        rng = np.random.default_rng(seed)
    pairs = list(combinations(range(1, n + 1), 2))
    if not pairs:
        return Graph(n)
    keep = rng.random(len(pairs)) < p
    return Graph(n, (pair for pair, flag in zip(pairs, keep) if flag))
