"""Shared independent oracles and generators for the test suite.

These deliberately avoid the library's bitmask fast paths so that the values
they produce check the implementation through a second route.
"""

from __future__ import annotations

import itertools
import random
from collections import deque

from huntrab.graphs import Graph, graph_from_edges


def adjacency_sets(g: Graph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def brute_min_union(g: Graph, k: int, side_vertices: list[int], closed: bool = False) -> int:
    """Reference minimum union of k neighborhoods using plain sets."""
    adj = adjacency_sets(g)
    best = None
    for combo in itertools.combinations(side_vertices, k):
        union: set[int] = set()
        for v in combo:
            union |= adj[v]
            if closed:
                union.add(v)
        if best is None or len(union) < best:
            best = len(union)
    assert best is not None
    return best


def brute_degeneracy(g: Graph) -> int:
    """Reference degeneracy: max over vertex subsets of the induced min degree."""
    adj = adjacency_sets(g)
    best = 0
    for r in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            sub = set(combo)
            best = max(best, min(len(adj[v] & sub) for v in sub))
    return best


def naive_can_clear(g: Graph, k: int, variant: str = "standard",
                    start: int | None = None, cap: int = 200_000) -> bool:
    """Reference reachability search with plain exact-match visited set."""
    adj = adjacency_sets(g)
    deaf = variant == "deaf"

    def succ(state: frozenset[int], shot: tuple[int, ...]) -> frozenset[int]:
        rest = state.difference(shot)
        out: set[int] = set()
        for v in rest:
            out |= adj[v]
            if deaf:
                out.add(v)
        return frozenset(out)

    init = frozenset(range(g.n)) if start is None else frozenset(start_bits(start))
    if not init:
        return True
    seen = {init}
    queue = deque([init])
    while queue:
        state = queue.popleft()
        if len(state) <= k:
            return True
        for shot in itertools.combinations(sorted(state), k):
            nxt = succ(state, shot)
            if not nxt:
                return True
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise RuntimeError("reference search grew past its cap")
                queue.append(nxt)
    return False


def start_bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def random_graph(rng: random.Random, max_n: int = 8, p: float | None = None) -> Graph:
    n = rng.randrange(1, max_n + 1)
    prob = p if p is not None else min(0.9, 2.5 / max(n - 1, 1))
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob]
    return graph_from_edges(n, edges)


def random_mask(rng: random.Random, n: int) -> int:
    return rng.randrange(1 << n) if n else 0
