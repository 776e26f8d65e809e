"""
Seeded hill climbing for k_s(k_r <= x) on graphs too large to enumerate.

Start graphs are the known good constructions that fit the budget and the
vertex count (the apex graph read off the cascade of x, balanced complete
multipartite graphs, complete graphs) followed by random graphs. From each
start the climber scans the vertex pairs in lexicographic order and takes the
first flip that keeps k_r <= x and improves (k_s, -k_r); it stops at a local
optimum. The result is a lower bound, never a certified value.
"""
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

import numpy as np

from kkclique.binomial import binom, canonical_rep, kk_bound
from kkclique.graph import (
    Graph,
    apex_construction,
    clique_profile,
    complete_graph,
    random_graph,
    turan_graph,
)
from kkclique.graph.cliques import cliques_through_pair
from kkclique.search.record import HEURISTIC, ExtremalRecord, SearchScope
from kkclique.util.config import get_settings
from kkclique.util.exceptions import KKCliqueError, PreconditionError
from kkclique.util.log import get_logger

logger = get_logger(__name__)


def _pad(g: Graph, v: int) -> Graph:
    return Graph(v, g.edges())


def construction_seeds(v_max: int, r: int, x: int) -> Iterator[Tuple[str, Graph]]:
    """
    Named start graphs on v_max vertices with k_r <= x.

    The apex seed takes the first two terms C(n,r) + C(m,r-1) of the cascade
    of x and builds K_n plus a vertex joined to m of its vertices.
    """
    rep = canonical_rep(x, r)
    if rep.terms:
        n = rep.terms[0].top
        attach = [rep.terms[1].top] if len(rep.terms) > 1 else []
        if n + len(attach) <= v_max:
            yield "apex", _pad(apex_construction(n, attach), v_max)
    for k in range(v_max, 0, -1):
        g = turan_graph(v_max, k)
        if clique_profile(g, r)[r] <= x:
            yield f"turan({v_max},{k})", g
            break
    n = v_max
    while n >= r and binom(n, r) > x:
        n -= 1
    if n >= 1:
        yield f"complete({n})", _pad(complete_graph(n), v_max)


def _flip(rows: List[int], u: int, v: int) -> None:
    rows[u] ^= 1 << v
    rows[v] ^= 1 << u


def hill_climb(start: Graph, r: int, s: int, x: int) -> Tuple[Graph, int, int]:
    """
    First-improvement local search over single edge flips.

    Returns:
        (graph, k_r, k_s) at the local optimum
    """
    rows = list(start.rows)
    profile = clique_profile(start, s)
    kr, ks = profile[r], profile[s]
    if kr > x:
        raise PreconditionError(f"start graph has k_{r} = {kr} > {x}")
    pairs = list(combinations(range(start.n), 2))
    improved = True
    while improved:
        improved = False
        for u, v in pairs:
            present = rows[u] >> v & 1
            if present:
                # removing uv loses the cliques through it
                dr = -cliques_through_pair(rows, u, v, r)
                ds = -cliques_through_pair(rows, u, v, s)
            else:
                dr = cliques_through_pair(rows, u, v, r)
                ds = cliques_through_pair(rows, u, v, s)
            if kr + dr > x:
                continue
            if (ks + ds, -(kr + dr)) > (ks, -kr):
                _flip(rows, u, v)
                kr, ks = kr + dr, ks + ds
                improved = True
                break
    return Graph.from_rows(rows), kr, ks


def _random_start(v_max: int, r: int, x: int, rng: np.random.Generator) -> Graph:
    g = random_graph(v_max, float(rng.uniform(0.2, 0.9)), rng=rng)
    rows = list(g.rows)
    kr = clique_profile(g, r)[r]
    # drop edges from the last pair backwards until the budget holds
    for u, v in reversed(list(combinations(range(v_max), 2))):
        if kr <= x:
            break
        if rows[u] >> v & 1:
            kr -= cliques_through_pair(rows, u, v, r)
            _flip(rows, u, v)
    return Graph.from_rows(rows)


def heuristic_extremal(v_max: int, r: int, s: int, x: int, seed: int = 0,
                       iterations: Optional[int] = None) -> ExtremalRecord:
    """
    Best k_s found by hill climbing from the construction seeds and from
    ``iterations`` random restarts drawn from ``numpy.random.default_rng(seed)``.

    Args:
        v_max: int
            Vertex count of every candidate
        r, s: int
            2 <= r < s <= v_max
        x: int
            Budget of K_r subgraphs
        seed: int
            Seed of the restart generator; the result is a function of
            (v_max, r, s, x, seed, iterations)
        iterations: int
            Random restarts, >= 1 (default from settings)
    """
    if not 2 <= r < s <= v_max:
        raise PreconditionError(f"need 2 <= r < s <= v_max, got r={r}, s={s}, v_max={v_max}")
    if x < 0:
        raise PreconditionError(f"budget must be >= 0, got {x}")
    if iterations is None:
        iterations = max(1, get_settings().heuristic_iterations)
    if iterations < 1:
        raise PreconditionError(f"iterations must be >= 1, got {iterations}")

    rng = np.random.default_rng(seed)
    best: Optional[Tuple[int, int, Graph]] = None

    def consider(label: str, start: Graph) -> None:
        nonlocal best
        graph, kr, ks = hill_climb(start, r, s, x)
        logger.debug("start %s climbed to k_%d = %d, k_%d = %d", label, r, kr, s, ks)
        if best is None or (ks, -kr) > (best[0], -best[1]):
            best = (ks, kr, graph)

    for label, start in construction_seeds(v_max, r, x):
        consider(label, start)
    consider("empty", Graph(v_max))
    for i in range(iterations):
        consider(f"random #{i}", _random_start(v_max, r, x, rng))

    ks, kr, witness = best
    bound = kk_bound(x, r, s)
    if ks > bound:
        raise KKCliqueError(f"k_{s} = {ks} with k_{r} <= {x} exceeds the Kruskal-Katona bound {bound}")
    logger.info("heuristic k_%d(k_%d <= %d) on %d vertices: %d (bound %d)", s, r, x, v_max, ks, bound)
    return ExtremalRecord(r, s, x, bound, ks, witness, kr, SearchScope(v_max, HEURISTIC), False)
