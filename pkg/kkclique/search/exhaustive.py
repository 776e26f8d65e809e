"""
Exhaustive search over all labelled graphs on v_max vertices.

Edge i of the lexicographic edge list ``(1,2), (1,3), ..., (v-1,v)`` is bit i
of an edge mask, so the 2^C(v_max,2) masks are exactly the labelled graphs.
A depth-first search decides the edges from the last to the first, keeping
k_r and k_s up to date as edges are added (a new edge uv adds one K_r for
every K_{r-2} in the common neighbourhood of u and v). Adding edges never
lowers k_r, so a branch is cut as soon as k_r exceeds the budget.

Graphs on fewer vertices are covered too: isolated vertices change no clique
count of size >= 2.

One pass produces a *frontier*: for every exact value of k_r up to the
budget, the largest k_s and the smallest mask reaching it. Answers for any
budget x <= x_max are prefix maxima of the frontier.
"""
import json
import os
import warnings
from concurrent.futures import ProcessPoolExecutor, as_completed
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from kkclique.binomial import kk_bound
from kkclique.graph import Graph, clique_profile
from kkclique.graph.cliques import cliques_through_pair
from kkclique.search.record import EXHAUSTIVE, ExtremalRecord, SearchScope
from kkclique.util.config import get_settings
from kkclique.util.exceptions import CheckpointError, KKCliqueError, PreconditionError, ScopeError
from kkclique.util.log import get_logger

logger = get_logger(__name__)

# expected single-worker wall time: v_max = 7 takes seconds to a few minutes
# depending on the budget; v_max = 8 (2^28 masks) takes hours, hence checkpoints
Frontier = Dict[int, Tuple[int, int]]


def edge_list(v: int) -> List[Tuple[int, int]]:
    """0-based vertex pairs in lexicographic order; index i is mask bit i."""
    return list(combinations(range(v), 2))


def mask_to_graph(v: int, mask: int) -> Graph:
    edges = edge_list(v)
    return Graph(v, ((edges[i][0] + 1, edges[i][1] + 1) for i in range(len(edges)) if mask >> i & 1))


def graph_to_mask(g: Graph) -> int:
    index = {e: i for i, e in enumerate(edge_list(g.n))}
    mask = 0
    for u, v in g.edges():
        mask |= 1 << index[(u - 1, v - 1)]
    return mask


def merge_frontiers(frontiers: Sequence[Frontier]) -> Frontier:
    """Per k_r value keep the larger k_s, then the smaller mask."""
    merged: Frontier = {}
    for frontier in frontiers:
        for kr, (ks, mask) in frontier.items():
            current = merged.get(kr)
            if current is None or ks > current[0] or (ks == current[0] and mask < current[1]):
                merged[kr] = (ks, mask)
    return dict(sorted(merged.items()))


def search_chunk(v: int, r: int, s: int, x_max: int, prefix: int, depth: int) -> Frontier:
    """
    Frontier of the masks whose top ``depth`` bits equal ``prefix``.

    The chunks for prefix = 0 .. 2^depth - 1 partition the mask space into
    disjoint contiguous ranges.
    """
    edges = edge_list(v)
    total = len(edges)
    depth = min(depth, total)
    rows = [0] * v
    kr = ks = mask = 0
    for offset in range(depth):
        i = total - 1 - offset
        if prefix >> (depth - 1 - offset) & 1:
            a, b = edges[i]
            kr += cliques_through_pair(rows, a, b, r)
            if kr > x_max:
                return {}
            ks += cliques_through_pair(rows, a, b, s)
            rows[a] |= 1 << b
            rows[b] |= 1 << a
            mask |= 1 << i

    best: Frontier = {}

    def visit(i: int, kr: int, ks: int, mask: int) -> None:
        if i < 0:
            current = best.get(kr)
            if current is None or ks > current[0] or (ks == current[0] and mask < current[1]):
                best[kr] = (ks, mask)
            return
        visit(i - 1, kr, ks, mask)
        a, b = edges[i]
        new_kr = kr + cliques_through_pair(rows, a, b, r)
        if new_kr > x_max:
            return
        new_ks = ks + cliques_through_pair(rows, a, b, s)
        rows[a] |= 1 << b
        rows[b] |= 1 << a
        visit(i - 1, new_kr, new_ks, mask | 1 << i)
        rows[a] ^= 1 << b
        rows[b] ^= 1 << a

    visit(total - 1 - depth, kr, ks, mask)
    return best


class Checkpoint:
    """
    JSON file holding the frontiers of finished chunks so an interrupted
    search can resume.

    Attributes:
        path: str
        params: dict
            (v_max, r, s, x_max, depth) the file belongs to
        done: dict
            prefix -> frontier
    """

    def __init__(self, path: str, params: Dict[str, int]) -> None:
        self.path = os.fspath(path)
        self.params = params
        self.done: Dict[int, Frontier] = {}
        if os.path.exists(self.path):
            self._load()

    def _load(self) -> None:
        try:
            with open(self.path, encoding="utf-8") as handle:
                payload = json.load(handle)
            if payload["params"] != self.params:
                raise CheckpointError(f"{self.path} belongs to search {payload['params']}, not {self.params}")
            for prefix, entries in payload["chunks"].items():
                self.done[int(prefix)] = {int(kr): (int(ks), int(mask)) for kr, ks, mask in entries}
        except (OSError, ValueError, KeyError, TypeError) as err:
            raise CheckpointError(f"cannot read checkpoint {self.path}: {err}") from err
        logger.info("resuming from %s with %d finished chunks", self.path, len(self.done))

    def record(self, prefix: int, frontier: Frontier) -> None:
        self.done[prefix] = frontier
        payload = {
            "params": self.params,
            "chunks": {str(p): [[kr, ks, mask] for kr, (ks, mask) in sorted(f.items())]
                       for p, f in sorted(self.done.items())},
        }
        tmp = self.path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as handle:
            json.dump(payload, handle)
        os.replace(tmp, self.path)


def _check_scope(v_max: int, r: int, s: int) -> None:
    cap = get_settings().hard_v_max
    if v_max > cap:
        warnings.warn(f"v_max = {v_max} exceeds the exhaustive cap of {cap} vertices", RuntimeWarning)
        raise ScopeError(f"exhaustive search is capped at {cap} vertices, got {v_max}")
    if not 2 <= r < s <= v_max:
        raise PreconditionError(f"need 2 <= r < s <= v_max, got r={r}, s={s}, v_max={v_max}")


def exhaustive_frontier(v_max: int, r: int, s: int, x_max: int, workers: Optional[int] = None,
                        checkpoint: Optional[str] = None, split_depth: Optional[int] = None) -> Frontier:
    """
    For every k_r value 0..x_max that some graph on v_max vertices has:
    the largest k_s among such graphs and the smallest mask attaining it.

    Args:
        v_max: int
            Vertex count, at most the hard cap (8)
        r, s: int
            2 <= r < s <= v_max
        x_max: int
            Largest k_r of interest, x_max >= 0
        workers: int
            Processes to spread chunks over (default from settings)
        checkpoint: str
            Optional JSON file for resumable runs
        split_depth: int
            Leading edges fixed per chunk (default from settings)
    Returns:
        dict
            k_r -> (best k_s, witness mask)
    """
    _check_scope(v_max, r, s)
    if x_max < 0:
        raise PreconditionError(f"budget must be >= 0, got {x_max}")
    settings = get_settings()
    workers = workers or settings.workers
    depth = min(settings.split_depth if split_depth is None else split_depth, len(edge_list(v_max)))
    store = None
    if checkpoint:
        store = Checkpoint(checkpoint, {"v_max": v_max, "r": r, "s": s, "x_max": x_max, "depth": depth})
    results: Dict[int, Frontier] = dict(store.done) if store else {}
    pending = [p for p in range(1 << depth) if p not in results]
    logger.debug("exhaustive v_max=%d r=%d s=%d x_max=%d: %d chunks pending",
                 v_max, r, s, x_max, len(pending))

    def finish(prefix: int, frontier: Frontier) -> None:
        results[prefix] = frontier
        if store:
            store.record(prefix, frontier)
        logger.debug("chunk %d/%d done", len(results), 1 << depth)

    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(search_chunk, v_max, r, s, x_max, p, depth): p for p in pending}
            for future in as_completed(futures):
                finish(futures[future], future.result())
    else:
        for p in pending:
            finish(p, search_chunk(v_max, r, s, x_max, p, depth))
    return merge_frontiers([results[p] for p in sorted(results)])


def best_within(frontier: Frontier, x: int) -> Tuple[int, int, int]:
    """
    (best k_s, witness mask, witness k_r) over frontier entries with k_r <= x.
    The empty graph (k_r = 0, mask 0) is always in a frontier.
    """
    best = None
    for kr, (ks, mask) in frontier.items():
        if kr > x:
            continue
        if best is None or ks > best[0] or (ks == best[0] and mask < best[1]):
            best = (ks, mask, kr)
    if best is None:
        raise KKCliqueError("frontier has no entry within the budget")
    return best


def record_from_frontier(frontier: Frontier, v_max: int, r: int, s: int, x: int) -> ExtremalRecord:
    best, mask, kr = best_within(frontier, x)
    bound = kk_bound(x, r, s)
    witness = mask_to_graph(v_max, mask)
    profile = clique_profile(witness, s)
    if profile[r] != kr or profile[s] != best:
        raise KKCliqueError(f"witness recount ({profile[r]}, {profile[s]}) differs from search ({kr}, {best})")
    if best > bound:
        raise KKCliqueError(f"k_{s} = {best} with k_{r} <= {x} exceeds the Kruskal-Katona bound {bound}")
    return ExtremalRecord(r, s, x, bound, best, witness, kr, SearchScope(v_max, EXHAUSTIVE), True)


def exhaustive_extremal(v_max: int, r: int, s: int, x: int, workers: Optional[int] = None,
                        checkpoint: Optional[str] = None) -> ExtremalRecord:
    """
    k_s(k_r <= x) over all graphs with at most v_max vertices.

    The value is exact relative to the vertex cap only; larger graphs may do
    better.
    """
    frontier = exhaustive_frontier(v_max, r, s, x, workers=workers, checkpoint=checkpoint)
    record = record_from_frontier(frontier, v_max, r, s, x)
    logger.info("exhaustive k_%d(k_%d <= %d) on <= %d vertices: %d (bound %d)",
                s, r, x, v_max, record.best, record.bound)
    return record
