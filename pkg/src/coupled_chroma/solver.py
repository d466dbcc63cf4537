"""Exact and constructive list-coloring engines for incidence graphs."""

from __future__ import annotations

import enum
import os
import sys
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .errors import BoundViolated, PreconditionViolated
from .incidence import IncidenceGraph, ListAssignment

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    """Node budget, overridable through ``COUPLED_CHROMA_BUDGET``."""
    raw = os.environ.get("COUPLED_CHROMA_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


class Status(enum.Enum):
    COLORED = "colored"
    UNSAT = "exhausted_unsat"
    ABORTED = "aborted"


@dataclass
class SolveOutcome:
    status: Status
    coloring: Optional[dict] = None
    nodes_expanded: int = 0
    wall_time: float = 0.0
    method: str = ""
    stats: dict = field(default_factory=dict)

    @property
    def colored(self) -> bool:
        return self.status is Status.COLORED


class _BudgetExceeded(Exception):
    pass


def _domains(x: IncidenceGraph, lists: ListAssignment) -> list[set[int]]:
    return [set(lists[node]) for node in x.nodes]


def _search_depth_guard(n: int) -> None:
    if sys.getrecursionlimit() < n + 200:
        sys.setrecursionlimit(n + 200)


def exact_color(
    x: IncidenceGraph, lists: ListAssignment, budget: Optional[int] = None
) -> SolveOutcome:
    """Complete backtracking search with forward checking.

    Picks the uncolored node with the fewest remaining colors (ties: node
    order) and tries its colors in ascending order. ``UNSAT`` is returned
    only after the whole tree has been explored, so it proves that no
    coloring from ``lists`` exists.

    Args:
        budget: Maximum number of color assignments tried; ``None`` uses
            :func:`default_budget`, ``0`` or a negative value means unlimited.
    """
    if budget is None:
        budget = default_budget()
    limit = budget if budget > 0 else float("inf")
    start = time.perf_counter()
    n = len(x)
    adj = x.adj
    dom = _domains(x, lists)
    color: list[Optional[int]] = [None] * n
    expanded = 0
    _search_depth_guard(n)

    def search(remaining: int) -> bool:
        nonlocal expanded
        if remaining == 0:
            return True
        best, best_size = -1, 1 << 30
        for i in range(n):
            if color[i] is None:
                s = len(dom[i])
                if s < best_size:
                    best, best_size = i, s
                    if s <= 1:
                        break
        if best_size == 0:
            return False
        for c in sorted(dom[best]):
            expanded += 1
            if expanded > limit:
                raise _BudgetExceeded
            pruned = []
            dead = False
            for j in adj[best]:
                if color[j] is None and c in dom[j]:
                    dom[j].discard(c)
                    pruned.append(j)
                    if not dom[j]:
                        dead = True
                        break
            color[best] = c
            if not dead and search(remaining - 1):
                return True
            color[best] = None
            for j in pruned:
                dom[j].add(c)
        return False

    try:
        found = search(n)
    except _BudgetExceeded:
        return SolveOutcome(Status.ABORTED, None, expanded, time.perf_counter() - start, "exact")
    elapsed = time.perf_counter() - start
    if not found:
        return SolveOutcome(Status.UNSAT, None, expanded, elapsed, "exact")
    return SolveOutcome(Status.COLORED, dict(zip(x.nodes, color)), expanded, elapsed, "exact")


def count_colorings(x: IncidenceGraph, lists: ListAssignment, cap: Optional[int] = None) -> int:
    """Number of proper colorings from ``lists``, saturating at ``cap``."""
    n = len(x)
    adj = x.adj
    dom = _domains(x, lists)
    color: list[Optional[int]] = [None] * n
    limit = cap if cap is not None else float("inf")
    total = 0
    _search_depth_guard(n)

    def search(remaining: int) -> None:
        nonlocal total
        if remaining == 0:
            total += 1
            return
        best, best_size = -1, 1 << 30
        for i in range(n):
            if color[i] is None and len(dom[i]) < best_size:
                best, best_size = i, len(dom[i])
        for c in sorted(dom[best]):
            if total >= limit:
                return
            pruned = []
            dead = False
            for j in adj[best]:
                if color[j] is None and c in dom[j]:
                    dom[j].discard(c)
                    pruned.append(j)
                    if not dom[j]:
                        dead = True
            color[best] = c
            if not dead:
                search(remaining - 1)
            color[best] = None
            for j in pruned:
                dom[j].add(c)

    search(n)
    return int(min(total, limit))


# ---------------------------------------------------------------------------
# Degree-choosability
# ---------------------------------------------------------------------------


def _is_complete(x: IncidenceGraph) -> bool:
    n = len(x)
    return all(len(row) == n - 1 for row in x.adj)


def _is_odd_cycle(x: IncidenceGraph) -> bool:
    return len(x) % 2 == 1 and len(x) >= 3 and all(len(row) == 2 for row in x.adj)


def _bfs_order(adj, root: int, banned: frozenset = frozenset()) -> list[int]:
    order = [root]
    seen = set(banned)
    seen.add(root)
    queue = deque([root])
    while queue:
        i = queue.popleft()
        for j in adj[i]:
            if j not in seen:
                seen.add(j)
                order.append(j)
                queue.append(j)
    return order


def _greedy(adj, dom, color, order) -> bool:
    for i in reversed(order):
        used = {color[j] for j in adj[i] if color[j] is not None}
        for c in sorted(dom[i]):
            if c not in used:
                color[i] = c
                break
        else:
            return False
    return True


def degree_choosable_color(x: IncidenceGraph, lists: ListAssignment) -> SolveOutcome:
    """Color a connected graph from lists of size at least its maximum degree.

    Valid when the graph is neither complete nor an odd cycle. Tries, in
    order:

    * ``slack``: a node whose list beats its degree is colored last after a
      greedy pass in reverse BFS order from it;
    * ``pair``: a node ``v`` with non-adjacent neighbors ``u, w`` sharing a
      color, such that removing ``u, w`` keeps the graph connected; ``u`` and
      ``w`` take the shared color and the rest is colored greedily towards
      ``v``;
    * ``unequal``: adjacent ``u, v`` with a color of ``u`` missing from
      ``v``'s list and ``x - u`` connected; ``u`` takes it and the greedy pass
      ends at ``v``;
    * ``exact``: complete search.

    Raises:
        PreconditionViolated: If the graph is disconnected, complete, an odd
            cycle, or some list is shorter than the maximum degree.
    """
    start = time.perf_counter()
    n = len(x)
    if n == 0:
        return SolveOutcome(Status.COLORED, {}, 0, 0.0, "slack")
    if not x.is_connected():
        raise PreconditionViolated("graph is disconnected")
    if _is_complete(x):
        raise PreconditionViolated("graph is complete")
    if _is_odd_cycle(x):
        raise PreconditionViolated("graph is an odd cycle")
    adj = x.adj
    delta = max(len(row) for row in adj)
    dom = [sorted(lists[node]) for node in x.nodes]
    if any(len(d) < delta for d in dom):
        raise PreconditionViolated(f"some list is shorter than the maximum degree {delta}")

    def done(color, method):
        return SolveOutcome(
            Status.COLORED, dict(zip(x.nodes, color)), n, time.perf_counter() - start, method
        )

    for v in range(n):
        if len(dom[v]) > len(adj[v]):
            color = [None] * n
            if _greedy(adj, dom, color, _bfs_order(adj, v)):
                return done(color, "slack")
            raise AssertionError("greedy pass failed despite slack")

    sets = [set(d) for d in dom]
    for v in range(n):
        row = adj[v]
        for a in range(len(row)):
            u = row[a]
            for b in range(a + 1, len(row)):
                w = row[b]
                if w in adj[u]:
                    continue
                shared = sets[u] & sets[w]
                if not shared:
                    continue
                order = _bfs_order(adj, v, frozenset((u, w)))
                if len(order) != n - 2:
                    continue
                alpha = min(shared)
                color = [None] * n
                color[u] = color[w] = alpha
                if _greedy(adj, dom, color, order):
                    return done(color, "pair")
                raise AssertionError("greedy pass failed after pairing")

    for v in range(n):
        for u in adj[v]:
            spare = sets[u] - sets[v]
            if not spare:
                continue
            order = _bfs_order(adj, v, frozenset((u,)))
            if len(order) != n - 1:
                continue
            color = [None] * n
            color[u] = min(spare)
            if _greedy(adj, dom, color, order):
                return done(color, "unequal")
            raise AssertionError("greedy pass failed after unequal pair")

    out = exact_color(x, lists, budget=0)
    if not out.colored:
        raise AssertionError("degree-choosable instance reported uncolorable")
    out.method = "exact"
    out.wall_time = time.perf_counter() - start
    return out


# ---------------------------------------------------------------------------
# Strip sweep
# ---------------------------------------------------------------------------


def color_strip(
    strip: IncidenceGraph, lists: ListAssignment, fixed: Mapping
) -> SolveOutcome:
    """Sweep-color a strip from its pre-colored end.

    ``strip.sigma`` orders the strip so that every node has at most two
    neighbors later in the order (the square of a path). The last two nodes
    of that order are pre-colored by ``fixed``; the sweep walks backwards and
    gives each node its smallest color not used by an already colored
    neighbor.

    Raises:
        BoundViolated: If a free node has fewer than three colors, or the
            fixed pair is not the adjacent tail of the order with distinct
            colors from their lists.
    """
    start = time.perf_counter()
    order = list(strip.sigma if strip.sigma is not None else strip.nodes)
    if len(order) < 2:
        raise BoundViolated("strip needs at least the two fixed nodes")
    tail = order[-2:]
    if set(fixed) != set(tail):
        raise BoundViolated(f"fixed nodes must be the strip tail {tail}")
    if not strip.has_edge(*tail):
        raise BoundViolated("fixed nodes must be adjacent")
    a, b = tail
    if fixed[a] == fixed[b] or fixed[a] not in lists[a] or fixed[b] not in lists[b]:
        raise BoundViolated("fixed colors must be distinct and drawn from their lists")
    for node in order[:-2]:
        if len(lists[node]) < 3:
            raise BoundViolated(f"{node} has {len(lists[node])} colors, needs 3")
    pos = {node: i for i, node in enumerate(order)}
    for node in order:
        later = [u for u in strip.neighbors(node) if pos[u] > pos[node]]
        if len(later) > 2:
            raise BoundViolated(f"{node} has {len(later)} neighbors later in the strip order")
    coloring = dict(fixed)
    for node in reversed(order[:-2]):
        used = {coloring[u] for u in strip.neighbors(node) if u in coloring}
        coloring[node] = min(c for c in lists[node] if c not in used)
    return SolveOutcome(
        Status.COLORED, coloring, len(order), time.perf_counter() - start, "strip"
    )
