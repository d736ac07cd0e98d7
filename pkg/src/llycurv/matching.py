"""Bipartite matching with Hall certificates, and the sharpness equivalence.

A maximum matching is computed by Hopcroft-Karp; when a balanced instance
has no perfect matching the alternating-reachability set is turned into an
explicit Hall violator, so callers get a checkable certificate instead of
a bare boolean.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InvalidParamsError,
    NotRegularError,
    TooLargeError,
    UnbalancedSidesError,
)
from .graphs import Graph, decompose_edge

_HALL_EXHAUSTIVE_CAP = 14


@dataclass(frozen=True)
class BipartiteInstance:
    """Bipartite graph given by side labels and index edges (left, right)."""

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for li, ri in self.edges:
            if not (0 <= li < len(self.left) and 0 <= ri < len(self.right)):
                raise InvalidParamsError(f"edge ({li},{ri}) out of range")
            if (li, ri) in seen:
                raise InvalidParamsError(f"duplicate edge ({li},{ri})")
            seen.add((li, ri))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.left]
        for li, ri in self.edges:
            adj[li].append(ri)
        for row in adj:
            row.sort()
        return adj


@dataclass(frozen=True)
class MatchingResult:
    """Maximum matching as index pairs, with a Hall violator when one exists."""

    pairs: tuple[tuple[int, int], ...]
    perfect: bool
    violator: tuple[int, ...] | None


def _hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> tuple[list[int], list[int]]:
    """Return (match_left, match_right) with -1 for unmatched."""
    n_left = len(adj)
    match_left = [-1] * n_left
    match_right = [-1] * n_right
    inf = n_left + n_right + 1
    dist = [0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for r in adj[u]:
                w = match_right[r]
                if w == -1:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for r in adj[u]:
            w = match_right[r]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = r
                match_right[r] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] == -1:
                dfs(u)
    return match_left, match_right


def _hall_violator(
    adj: Sequence[Sequence[int]], match_left: list[int], match_right: list[int]
) -> tuple[int, ...]:
    """Alternating reachability from unmatched left vertices.

    The reached left set Z satisfies |N(Z)| = |Z| - (number of unmatched
    left vertices) < |Z|, the standard deficiency certificate.
    """
    queue = deque(u for u in range(len(adj)) if match_left[u] == -1)
    seen_left = set(queue)
    seen_right: set[int] = set()
    while queue:
        u = queue.popleft()
        for r in adj[u]:
            if r in seen_right:
                continue
            seen_right.add(r)
            w = match_right[r]
            if w != -1 and w not in seen_left:
                seen_left.add(w)
                queue.append(w)
    return tuple(sorted(seen_left))


def max_matching(instance: BipartiteInstance) -> MatchingResult:
    """Maximum matching; on a deficient left side, also a Hall violator."""
    adj = instance.adjacency()
    match_left, match_right = _hopcroft_karp(adj, len(instance.right))
    pairs = tuple((u, match_left[u]) for u in range(len(adj)) if match_left[u] != -1)
    perfect = (
        len(pairs) == len(instance.left) == len(instance.right) and len(pairs) > 0
    ) or (len(instance.left) == len(instance.right) == 0)
    violator = None
    if len(pairs) < len(instance.left):
        violator = _hall_violator(adj, match_left, match_right)
    return MatchingResult(pairs=pairs, perfect=perfect, violator=violator)


def local_perfect_matching(g: Graph, x: int, y: int) -> tuple[BipartiteInstance, MatchingResult]:
    """Matching instance between N_x and N_y of the edge xy, and its result."""
    if not g.is_regular():
        raise NotRegularError("local matching is stated for regular graphs")
    parts = decompose_edge(g, x, y)
    right_index = {u: j for j, u in enumerate(parts.ny)}
    edges = tuple(
        (i, right_index[u])
        for i, v in enumerate(parts.nx)
        for u in g.neighbors(v)
        if u in right_index
    )
    instance = BipartiteInstance(left=parts.nx, right=parts.ny, edges=edges)
    return instance, max_matching(instance)


@dataclass(frozen=True)
class HallReduction:
    hypothesis_holds: bool
    full_hall_holds: bool


def hall_reduction_check(instance: BipartiteInstance) -> HallReduction:
    """Exhaustively test the half-size Hall hypothesis against full Hall.

    hypothesis: every subset of size <= (m+1)/2 on either side has enough
    neighbors; full: every left subset does.  The reduction lemma says the
    first implies the second; this brute-forces both flags so that can be
    tested.
    """
    m = len(instance.left)
    if m != len(instance.right):
        raise UnbalancedSidesError("sides must have equal size")
    if m > _HALL_EXHAUSTIVE_CAP:
        raise TooLargeError(f"subset enumeration capped at m = {_HALL_EXHAUSTIVE_CAP}")
    left_mask = [0] * m
    right_mask = [0] * m
    for li, ri in instance.edges:
        left_mask[li] |= 1 << ri
        right_mask[ri] |= 1 << li
    half = (m + 1) // 2  # |S| <= (m+1)/2 for integer sizes

    def neighbors_of(mask: int, table: list[int]) -> int:
        out = 0
        mm = mask
        while mm:
            low = mm & -mm
            out |= table[low.bit_length() - 1]
            mm ^= low
        return out

    hypothesis = True
    full = True
    for mask in range(1, 1 << m):
        size = mask.bit_count()
        ok = neighbors_of(mask, left_mask).bit_count() >= size
        if not ok:
            full = False
            if size <= half:
                hypothesis = False
        if size <= half and neighbors_of(mask, right_mask).bit_count() < size:
            hypothesis = False
        if not hypothesis and not full:
            break
    return HallReduction(hypothesis_holds=hypothesis, full_hall_holds=full)


@dataclass(frozen=True)
class SharpnessEquivalence:
    kappa_sharp: bool
    matching_perfect: bool
    agree: bool


def sharpness_equivalence(g: Graph, x: int, y: int) -> SharpnessEquivalence:
    """Curvature-meets-upper-bound vs perfect-local-matching, side by side."""
    from .transport import lly_curvature

    kappa_sharp = lly_curvature(g, x, y).sharp
    _, result = local_perfect_matching(g, x, y)
    return SharpnessEquivalence(
        kappa_sharp=kappa_sharp,
        matching_perfect=result.perfect,
        agree=kappa_sharp == result.perfect,
    )
