"""Ground-truth computations: neighborhood-union minima, lower bounds, and
the exact hunter number by reachability search over rabbit-position states.

The search treats each possible rabbit-position set as a state.  From state R
the hunters shoot some H subset of R with |H| = min(k, |R|); shooting outside
R is wasted and shooting fewer vertices is dominated, so this loses nothing.
A state is clearable iff the empty set is reachable, and breadth-first
layering gives a shortest witness.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .dynamics import DEAF, STANDARD, Strategy, step
from .errors import BudgetExceededError, InvalidParameterError
from .graphs import Graph, bipartition, bits, components, degeneracy, induced_subgraph, mask_of

DEFAULT_SEARCH_BUDGET = 10**7
DEFAULT_ENUM_BUDGET = 10**7

SIDES = ("all", "even", "odd")
MODES = ("open", "closed")

CLEARED = "cleared"
BLOCKED = "blocked"
BUDGET = "budget"


def _side_vertices(g: Graph, side: str) -> list[int]:
    if side == "all":
        return list(range(g.n))
    if side not in SIDES:
        raise InvalidParameterError(f"side must be one of {SIDES}, not {side!r}")
    parts = bipartition(g)
    if parts is None:
        raise InvalidParameterError("even/odd side requires a bipartite graph")
    return bits(parts.even if side == "even" else parts.odd)


def _contributions(g: Graph, mode: str) -> list[int]:
    if mode not in MODES:
        raise InvalidParameterError(f"mode must be open or closed, not {mode!r}")
    if mode == "open":
        return list(g.adj)
    return [g.adj[v] | (1 << v) for v in range(g.n)]


def min_neighborhood_union(g: Graph, k: int, side: str = "all", mode: str = "open",
                           budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Smallest |N(W)| (or |N[W]| for closed mode) over W in the side with |W| = k.

    Exact, by lexicographic enumeration of all k-subsets; a partial union
    already at the best known size prunes the rest of that subset.
    """
    vertices = _side_vertices(g, side)
    if not 1 <= k <= len(vertices):
        raise InvalidParameterError(f"k={k} out of range 1..{len(vertices)}")
    contrib = _contributions(g, mode)
    best = g.n + 1
    seen = 0
    for combo in combinations(vertices, k):
        seen += 1
        if seen > budget:
            raise BudgetExceededError(
                f"neighborhood-union enumeration exceeded {budget} subsets", explored=seen)
        union = 0
        size = 0
        for v in combo:
            union |= contrib[v]
            size = union.bit_count()
            if size >= best:
                break
        if size < best:
            best = size
    return best


@dataclass(frozen=True)
class UnionProfile:
    """min_neighborhood_union for every k on one side, plus first differences."""

    side: str
    mode: str
    values: tuple[int, ...]

    @property
    def diffs(self) -> tuple[int, ...]:
        prev = 0
        out = []
        for v in self.values:
            out.append(v - prev)
            prev = v
        return tuple(out)

    def surplus(self) -> int:
        """max over k of values[k] - k (k is 1-based); 0 for an empty side."""
        return max((v - k for k, v in enumerate(self.values, start=1)), default=0)


def min_union_profile(g: Graph, side: str = "all", mode: str = "open",
                      budget: int = DEFAULT_ENUM_BUDGET) -> UnionProfile:
    vertices = _side_vertices(g, side)
    values = tuple(min_neighborhood_union(g, k, side, mode, budget)
                   for k in range(1, len(vertices) + 1))
    return UnionProfile(side, mode, values)


def union_surplus(g: Graph, side: str = "all", mode: str = "open",
                  budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """max over k of min_neighborhood_union(k) - k.

    One more hunter than this is needed before the possible-position count
    can shrink at every size, which is what makes it a lower bound.
    """
    return min_union_profile(g, side, mode, budget).surplus()


def lower_bound_union(g: Graph, mode: str = "open", budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Least hunter count not excluded by the neighborhood-union argument."""
    if g.n == 0:
        return 0
    return union_surplus(g, "all", mode, budget) + 1


def lower_bound_degeneracy(g: Graph) -> int:
    """Hunter count forced by a densest peeling core."""
    return degeneracy(g)


# ---------------------------------------------------------------------------
# Reachability search


@dataclass(frozen=True)
class ClearResult:
    status: str
    shots: tuple[int, ...] | None
    explored: int


def _dominated(minimal: list[int], state: int) -> bool:
    return any(y & state == y for y in minimal)


def _admit(minimal: list[int], state: int) -> None:
    # keep an antichain: drop stored supersets of the new state
    minimal[:] = [y for y in minimal if state & y != state]
    minimal.append(state)


def _witness(parents: dict[int, tuple[int, int]], state: int) -> tuple[int, ...]:
    shots: list[int] = []
    while True:
        prev, shot = parents[state]
        if prev < 0:
            return tuple(reversed(shots))
        shots.append(shot)
        state = prev


def can_clear(g: Graph, k: int, variant: str = STANDARD,
              budget: int = DEFAULT_SEARCH_BUDGET) -> ClearResult:
    """Decide whether k hunters can clear g, with a shot-sequence witness.

    Breadth-first search over position sets starting from V(G).  A generated
    state is skipped when some already-admitted state is a subset of it: any
    clearing from the superset also clears the subset (the dynamics are
    monotone), so the subset's subtree already covers it and no shorter
    witness is lost.  Deterministic: FIFO expansion, shots generated in
    lexicographic vertex order.
    """
    if k < 1:
        raise InvalidParameterError("hunter count must be at least 1")
    if variant not in (STANDARD, DEAF):
        raise InvalidParameterError(f"unknown variant {variant!r}")
    start = g.full_mask
    if start == 0:
        return ClearResult(CLEARED, (), 0)
    adj = g.adj if variant == STANDARD else tuple(g.adj[v] | (1 << v) for v in range(g.n))
    parents: dict[int, tuple[int, int]] = {start: (-1, 0)}
    minimal: list[int] = [start]
    queue: deque[int] = deque([start])
    explored = 0
    while queue:
        state = queue.popleft()
        explored += 1
        if explored > budget:
            return ClearResult(BUDGET, None, explored)
        vs = bits(state)
        if len(vs) <= k:
            return ClearResult(CLEARED, _witness(parents, state) + (state,), explored)
        # choose the k shot vertices = choose the |state|-k that remain
        for kept in combinations(vs, len(vs) - k):
            nxt = 0
            for v in kept:
                nxt |= adj[v]
            if nxt == 0:
                shot = state & ~mask_of(kept)
                return ClearResult(CLEARED, _witness(parents, state) + (shot,), explored)
            if _dominated(minimal, nxt):
                continue
            parents[nxt] = (state, state & ~mask_of(kept))
            _admit(minimal, nxt)
            queue.append(nxt)
    return ClearResult(BLOCKED, None, explored)


@dataclass(frozen=True)
class SolveResult:
    hunter_number: int
    witness: Strategy
    explored_states: int
    lower_bound_used: int


def hunter_number(g: Graph, variant: str = STANDARD,
                  budget: int = DEFAULT_SEARCH_BUDGET) -> SolveResult:
    """Exact hunter number with a verifying witness strategy.

    Each component is solved separately, iterating the hunter count upward
    from the larger of the degeneracy and neighborhood-union bounds; the
    final answer is the max over components and the witness plays the
    per-component witnesses in sequence (a cleared component stays empty
    while later components are driven).
    """
    mode = "open" if variant == STANDARD else "closed"
    comps = components(g)
    answer = 0
    bound_used = 0
    explored_total = 0
    all_shots: list[int] = []
    for comp in comps:
        sub, old = induced_subgraph(g, comp)
        comp_bound = max(1, lower_bound_degeneracy(sub), lower_bound_union(sub, mode))
        bound_used = max(bound_used, comp_bound)
        k = comp_bound
        while True:
            remaining = budget - explored_total
            if remaining <= 0:
                raise BudgetExceededError(
                    f"search budget {budget} exhausted before clearing a component with {k} hunters",
                    explored=explored_total, best_lower_bound=max(answer, comp_bound))
            result = can_clear(sub, k, variant, remaining)
            explored_total += result.explored
            if result.status == BUDGET:
                raise BudgetExceededError(
                    f"search budget {budget} exhausted while trying {k} hunters",
                    explored=explored_total, best_lower_bound=max(answer, comp_bound))
            if result.status == CLEARED:
                assert result.shots is not None
                all_shots.extend(mask_of(old[v] for v in bits(shot)) for shot in result.shots)
                answer = max(answer, k)
                break
            comp_bound = k + 1  # exhausted: k hunters provably insufficient
            k += 1
    return SolveResult(answer, Strategy(tuple(all_shots), variant), explored_total, bound_used)
