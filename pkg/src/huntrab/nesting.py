"""Nest orders and the constructive optimal strategies they support.

A bipartite graph has isoperimetric nesting when each part carries a total
order such that the neighborhood of every initial segment is an initial
segment of the other part's order of the minimum possible size.  Shooting the
tail of the current position set then keeps the set an initial segment and
forces it to shrink, which yields an optimal strategy; the closed variant
uses one order on all vertices and closed neighborhoods (deaf rabbit).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynamics import DEAF, STANDARD, Strategy, step
from .errors import (
    FormatError,
    InapplicableError,
    InvalidOrderError,
    InvalidParameterError,
    NonTerminatingError,
)
from .graphs import Graph, bipartition, bits, iter_bits, mask_of, neighborhood
from .orders import (  # re-exported: these comparisons are part of this module's API
    grid_compare,
    grid_key,
    lex_compare,
    lex_key,
    weightlex_compare,
    weightlex_key,
)
from .solver import DEFAULT_ENUM_BUDGET, min_neighborhood_union, union_surplus

__all__ = [
    "NestOrder", "NestingReport", "lex_compare", "lex_key", "weightlex_compare",
    "weightlex_key", "grid_compare", "grid_key", "weightlex_nest_order",
    "weightlex_full_order", "grid_nest_order", "initial_segment",
    "check_isoperimetric_nesting", "check_closed_nesting", "nest_strategy",
    "hunter_number_via_nesting", "shot_vertex_lists", "shot_labels",
    "parse_nest_order", "format_nest_order", "read_nest_order", "write_nest_order",
]

BIPARTITE = "bipartite"
FULL = "full"


@dataclass(frozen=True)
class NestOrder:
    """A pair of part orders (bipartite kind) or one order on V (full kind)."""

    kind: str
    order_even: tuple[int, ...] | None = None
    order_odd: tuple[int, ...] | None = None
    order_all: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind == BIPARTITE:
            if self.order_even is None or self.order_odd is None or self.order_all is not None:
                raise InvalidParameterError("bipartite order needs order_even and order_odd")
        elif self.kind == FULL:
            if self.order_all is None or self.order_even is not None or self.order_odd is not None:
                raise InvalidParameterError("full order needs order_all only")
        else:
            raise InvalidParameterError(f"unknown order kind {self.kind!r}")
        for seq in (self.order_even, self.order_odd, self.order_all):
            if seq is not None and len(set(seq)) != len(seq):
                raise InvalidParameterError("order repeats a vertex")

    def sequence(self, part: str) -> tuple[int, ...]:
        seq = {"even": self.order_even, "odd": self.order_odd, "all": self.order_all}.get(part)
        if seq is None:
            raise InvalidParameterError(f"order has no part {part!r}")
        return seq


def initial_segment(order: NestOrder, part: str, k: int) -> int:
    """The first k vertices of the given part's order, as a bitmask."""
    seq = order.sequence(part)
    if not 0 <= k <= len(seq):
        raise InvalidParameterError(f"segment size {k} out of range 0..{len(seq)}")
    return mask_of(seq[:k])


# ---------------------------------------------------------------------------
# Built-in orders


def _cube_dim(g: Graph) -> int:
    n = g.n.bit_length() - 1
    if g.n != 1 << n:
        raise InvalidParameterError("weightlex orders need a subset-coded hypercube graph")
    return n


def weightlex_nest_order(g: Graph) -> NestOrder:
    """Weightlex on each part of a subset-coded hypercube."""
    n = _cube_dim(g)
    even = sorted((v for v in range(g.n) if v.bit_count() % 2 == 0), key=lambda v: weightlex_key(v, n))
    odd = sorted((v for v in range(g.n) if v.bit_count() % 2 == 1), key=lambda v: weightlex_key(v, n))
    return NestOrder(BIPARTITE, tuple(even), tuple(odd))


def weightlex_full_order(g: Graph) -> NestOrder:
    """Weightlex on all vertices of a subset-coded hypercube (closed variant)."""
    n = _cube_dim(g)
    return NestOrder(FULL, order_all=tuple(sorted(range(g.n), key=lambda v: weightlex_key(v, n))))


def grid_nest_order(m: int, n: int) -> NestOrder:
    """Diagonal sweep order for the m-by-n grid (vertex (r,c) = r*n + c).

    The x coordinate of the sweep runs along the longer grid dimension; with
    the shorter dimension as x the neighborhood of an initial segment fails
    to achieve the minimum already at single vertices.
    """
    if m < 1 or n < 1:
        raise InvalidParameterError("grid dimensions must be positive")
    cells = [(r, c) for r in range(m) for c in range(n)]
    coord = (lambda rc: (rc[1], rc[0])) if n >= m else (lambda rc: (rc[0], rc[1]))
    cells.sort(key=lambda rc: grid_key(coord(rc)))
    even = tuple(r * n + c for r, c in cells if (r + c) % 2 == 0)
    odd = tuple(r * n + c for r, c in cells if (r + c) % 2 == 1)
    return NestOrder(BIPARTITE, even, odd)


# ---------------------------------------------------------------------------
# Verification against brute-force minima


@dataclass(frozen=True)
class NestingReport:
    ok: bool
    violations: tuple[tuple[str, int, str], ...]


def _bind_bipartite(g: Graph, order: NestOrder) -> None:
    if order.kind != BIPARTITE:
        raise InvalidParameterError("expected a bipartite-kind order")
    parts = bipartition(g)
    if parts is None:
        raise InvalidParameterError("graph is not bipartite")
    if mask_of(order.order_even) != parts.even or mask_of(order.order_odd) != parts.odd:
        raise InvalidOrderError("order parts do not match the graph's bipartition")


def check_isoperimetric_nesting(g: Graph, order: NestOrder,
                                budget: int = DEFAULT_ENUM_BUDGET) -> NestingReport:
    """Check, for every k on both sides, that the neighborhood of the initial
    segment is an initial segment of the other side and achieves the
    brute-force minimum.  Lists every violated (side, k)."""
    _bind_bipartite(g, order)
    violations: list[tuple[str, int, str]] = []
    for side, other in (("even", "odd"), ("odd", "even")):
        seq = order.sequence(side)
        other_seq = order.sequence(other)
        for k in range(1, len(seq) + 1):
            nb = neighborhood(g, mask_of(seq[:k]))
            size = nb.bit_count()
            if nb != mask_of(other_seq[:size]):
                violations.append((side, k, "neighborhood of the segment is not an initial segment"))
            minimum = min_neighborhood_union(g, k, side, "open", budget)
            if size != minimum:
                violations.append((side, k, f"segment neighborhood has {size} vertices, minimum is {minimum}"))
    return NestingReport(not violations, tuple(violations))


def check_closed_nesting(g: Graph, order: NestOrder,
                         budget: int = DEFAULT_ENUM_BUDGET) -> NestingReport:
    """Check the four chain conditions of closed nesting for every prefix."""
    if order.kind != FULL:
        raise InvalidParameterError("expected a full-kind order")
    if mask_of(order.order_all) != g.full_mask:
        raise InvalidOrderError("order is not a permutation of the vertices")
    seq = order.order_all
    violations: list[tuple[str, int, str]] = []
    for i in range(1, len(seq) + 1):
        seg = mask_of(seq[:i])
        if seg.bit_count() != i:
            violations.append(("all", i, "segment size mismatch"))
        if i < len(seq) and seg & ~mask_of(seq[:i + 1]):
            violations.append(("all", i, "segments are not nested"))
        nb = neighborhood(g, seg, closed=True)
        size = nb.bit_count()
        minimum = min_neighborhood_union(g, i, "all", "closed", budget)
        if size != minimum:
            violations.append(("all", i, f"closed neighborhood has {size} vertices, minimum is {minimum}"))
        if nb != mask_of(seq[:size]):
            violations.append(("all", i, "closed neighborhood is not an initial segment"))
    return NestingReport(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# The constructive strategy


def _tail_shot(seq: tuple[int, ...], r: int, m: int) -> int:
    """Last m order positions of the current segment, padded forward to m
    shots when fewer than m positions remain."""
    top = min(len(seq), max(r, m))
    return mask_of(seq[max(0, top - m):top])


def nest_strategy(g: Graph, order: NestOrder, m: int, variant: str = STANDARD) -> Strategy:
    """Shoot the last m nest-ordered vertices of the position set each round.

    For the standard variant the order must be bipartite-kind; the strategy
    assumes the rabbit starts on the driven side (the part with the smaller
    surplus, ties to even) and respects parity, so extend_parity turns it
    into a strategy winning from any start.  For the deaf variant the order
    is full-kind and the start set is all of V.

    Each round re-checks that the position set is an initial segment of the
    active order and fails with InvalidOrderError otherwise; if the set stops
    shrinking (m too small) the step limit raises NonTerminatingError.
    """
    if m < 1:
        raise InvalidParameterError("hunter count must be at least 1")
    if variant == STANDARD:
        if order.kind != BIPARTITE:
            raise InvalidParameterError("standard variant takes a bipartite-kind order")
        _bind_bipartite(g, order)
        u_even = union_surplus(g, "even", "open")
        u_odd = union_surplus(g, "odd", "open")
        side = "even" if u_even <= u_odd else "odd"
    else:
        if order.kind != FULL:
            raise InvalidParameterError("deaf variant takes a full-kind order")
        if mask_of(order.order_all) != g.full_mask:
            raise InvalidOrderError("order is not a permutation of the vertices")
        side = "all"
    rabbit = mask_of(order.sequence(side))
    shots: list[int] = []
    for _ in range(4 * g.n):
        if rabbit == 0:
            return Strategy(tuple(shots), variant)
        seq = order.sequence(side)
        r = rabbit.bit_count()
        if rabbit != mask_of(seq[:r]):
            raise InvalidOrderError(
                f"position set is not an initial segment of the {side} order at step {len(shots) + 1}")
        shot = _tail_shot(seq, r, m)
        shots.append(shot)
        rabbit = step(g, rabbit, shot, variant)
        if variant == STANDARD:
            side = "odd" if side == "even" else "even"
    if rabbit == 0:
        return Strategy(tuple(shots), variant)
    raise NonTerminatingError(f"position set still has {rabbit.bit_count()} vertices "
                              f"after {4 * g.n} rounds; {m} hunters are too few")


def hunter_number_via_nesting(g: Graph, order: NestOrder,
                              budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Hunter number from a verified nest order.

    Bipartite kind: checks isoperimetric nesting and that the two side
    surpluses differ by at most one, then returns min(surpluses) + 1.  Full
    kind: checks closed nesting and returns the closed surplus + 1.
    """
    if order.kind == BIPARTITE:
        report = check_isoperimetric_nesting(g, order, budget)
        if not report.ok:
            raise InvalidOrderError(
                f"order is not an isoperimetric nesting; first violation {report.violations[0]}")
        u_even = union_surplus(g, "even", "open", budget)
        u_odd = union_surplus(g, "odd", "open", budget)
        if abs(u_even - u_odd) > 1:
            raise InapplicableError(
                f"side surpluses differ by more than one (even {u_even}, odd {u_odd})",
                u_even=u_even, u_odd=u_odd)
        return min(u_even, u_odd) + 1
    report = check_closed_nesting(g, order, budget)
    if not report.ok:
        raise InvalidOrderError(
            f"order is not a closed nesting; first violation {report.violations[0]}")
    return union_surplus(g, "all", "closed", budget) + 1


# ---------------------------------------------------------------------------
# Presentation helpers


def _rank(order: NestOrder) -> dict[int, tuple[int, int]]:
    ranks: dict[int, tuple[int, int]] = {}
    groups = ("all",) if order.kind == FULL else ("even", "odd")
    for gi, part in enumerate(groups):
        for pos, v in enumerate(order.sequence(part)):
            ranks[v] = (gi, pos)
    return ranks


def shot_vertex_lists(strategy: Strategy, order: NestOrder) -> list[list[int]]:
    """The strategy's shots as vertex lists sorted by nest-order position."""
    ranks = _rank(order)
    return [sorted(iter_bits(shot), key=lambda v: ranks[v]) for shot in strategy.shots]


def shot_labels(g: Graph, strategy: Strategy, order: NestOrder) -> list[list[str]]:
    """Like shot_vertex_lists but mapped through the graph's vertex labels."""
    labels = g.labels if g.labels is not None else tuple(str(v) for v in range(g.n))
    return [[labels[v] for v in shot] for shot in shot_vertex_lists(strategy, order)]


# ---------------------------------------------------------------------------
# Text format
#
#   kind bipartite|full
#   bipartite: one line of even-part vertices, one line of odd-part vertices
#   full:      one line of all vertices


def format_nest_order(order: NestOrder) -> str:
    lines = [f"kind {order.kind}"]
    if order.kind == BIPARTITE:
        lines.append(" ".join(str(v) for v in order.order_even))
        lines.append(" ".join(str(v) for v in order.order_odd))
    else:
        lines.append(" ".join(str(v) for v in order.order_all))
    return "\n".join(lines) + "\n"


def parse_nest_order(text: str) -> NestOrder:
    lines = [line for line in text.splitlines()]
    if not lines or not lines[0].startswith("kind"):
        raise FormatError(1, "expected 'kind bipartite|full' header")
    kind = lines[0].split(maxsplit=1)[1].strip() if len(lines[0].split(maxsplit=1)) > 1 else ""
    body: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            body.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise FormatError(lineno, "order lines must hold integers") from None
    try:
        if kind == BIPARTITE:
            if len(body) != 2:
                raise FormatError(1, "bipartite order needs exactly two part lines")
            return NestOrder(BIPARTITE, body[0], body[1])
        if kind == FULL:
            if len(body) != 1:
                raise FormatError(1, "full order needs exactly one vertex line")
            return NestOrder(FULL, order_all=body[0])
    except InvalidParameterError as exc:
        raise FormatError(1, str(exc)) from None
    raise FormatError(1, f"unknown kind {kind!r}")


def read_nest_order(path: str) -> NestOrder:
    with open(path, encoding="utf-8") as fh:
        return parse_nest_order(fh.read())


def write_nest_order(order: NestOrder, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_nest_order(order))
