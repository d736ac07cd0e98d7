"""Immutable simple graphs and their local structure.

The graph type stores one sorted neighbor tuple per vertex; every other
module reads it and nothing mutates it.  Alongside the type live the
operations the curvature machinery leans on: breadth-first distances, the
four-way decomposition of the vertex set around an edge, regularity
classification, and the per-vertex neighbor profile of amply regular
graphs.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import (
    InvalidParamsError,
    InvalidVertexError,
    NotAmplyRegularError,
    NotAnEdgeError,
)

VertexId = int


@dataclass(frozen=True)
class SrgParams:
    """Parameter tuple (n, d, alpha, beta) of a strongly/amply regular graph.

    n vertices, degree d, alpha common neighbors across an edge, beta common
    neighbors across a distance-2 pair.
    """

    n: int
    d: int
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if not (self.n > self.d >= 1):
            raise InvalidParamsError(f"need n > d >= 1, got n={self.n}, d={self.d}")
        if not (0 <= self.alpha <= self.d - 1):
            raise InvalidParamsError(f"need 0 <= alpha <= d-1, got alpha={self.alpha}")
        if not (0 <= self.beta <= self.d):
            raise InvalidParamsError(f"need 0 <= beta <= d, got beta={self.beta}")

    @property
    def is_conference(self) -> bool:
        """True when (n, d, alpha, beta) = (4g+1, 2g, g-1, g) for some g >= 1."""
        g, r = divmod(self.n - 1, 4)
        return r == 0 and g >= 1 and (self.d, self.alpha, self.beta) == (2 * g, g - 1, g)

    @property
    def gamma(self) -> int:
        """The g of a conference tuple (n = 4g + 1); only defined for those."""
        if not self.is_conference:
            raise InvalidParamsError(f"{self.as_tuple()} is not a conference tuple")
        return (self.n - 1) // 4

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.d, self.alpha, self.beta)


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency lists."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]) -> None:
        if n < 0:
            raise InvalidParamsError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidParamsError(f"loop at vertex {u} not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Sequence[int]]) -> "Graph":
        n = len(adjacency)
        return cls(n, ((u, v) for u in range(n) for v in adjacency[u] if u < v))

    def neighbors(self, v: VertexId) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: VertexId) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        row = self._adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self._adj)

    def is_regular(self) -> bool:
        degs = self.degree_sequence()
        return self.n == 0 or all(d == degs[0] for d in degs)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InvalidVertexError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def merge_intersection(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Intersection of two ascending sequences by a single merge scan."""
    out: list[int] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            out.append(x)
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return tuple(out)


def common_neighbor_count(g: Graph, u: VertexId, v: VertexId) -> int:
    return len(merge_intersection(g.neighbors(u), g.neighbors(v)))


def bfs_distances(g: Graph, source: VertexId, max_depth: int | None = None) -> list[int | None]:
    """Distances from source; None marks vertices in other components.

    With max_depth set, vertices farther than the cutoff are also left as
    None (used by the curvature code, whose costs are capped anyway).
    """
    if not (0 <= source < g.n):
        raise InvalidVertexError(f"vertex {source} out of range for n={g.n}")
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    frontier = [source]
    depth = 0
    while frontier and (max_depth is None or depth < max_depth):
        depth += 1
        nxt: list[int] = []
        for u in frontier:
            for w in g.neighbors(u):
                if dist[w] is None:
                    dist[w] = depth
                    nxt.append(w)
        frontier = nxt
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return all(d is not None for d in bfs_distances(g, 0))


def all_pairs_distances(g: Graph) -> list[list[int | None]]:
    """One BFS per vertex; graphs here stay small enough to afford this."""
    return [bfs_distances(g, s) for s in range(g.n)]


@dataclass(frozen=True)
class EdgeNeighborhood:
    """The partition V = {x} + {y} + delta + nx + ny + pxy around an edge xy.

    delta holds the common neighbors, nx/ny the exclusive neighbors of x/y,
    and pxy everything adjacent to neither endpoint.
    """

    x: VertexId
    y: VertexId
    delta: tuple[int, ...]
    nx: tuple[int, ...]
    ny: tuple[int, ...]
    pxy: tuple[int, ...]


def decompose_edge(g: Graph, x: VertexId, y: VertexId) -> EdgeNeighborhood:
    """Split the vertex set into the four classes around the edge xy."""
    if not g.has_edge(x, y):
        raise NotAnEdgeError(f"({x},{y}) is not an edge")
    gx = g.neighbors(x)
    gy = g.neighbors(y)
    delta = merge_intersection(gx, gy)
    delta_set = set(delta)
    nx = tuple(v for v in gx if v not in delta_set and v != y)
    ny = tuple(v for v in gy if v not in delta_set and v != x)
    closed = delta_set.union(gx, gy, (x, y))
    pxy = tuple(v for v in range(g.n) if v not in closed)
    return EdgeNeighborhood(x=x, y=y, delta=delta, nx=nx, ny=ny, pxy=pxy)


class RegularityKind(Enum):
    IRREGULAR = "irregular"
    REGULAR = "regular"
    AMPLY_REGULAR = "amply_regular"
    STRONGLY_REGULAR = "strongly_regular"


@dataclass(frozen=True)
class RegularityClass:
    """Strongest regularity tag of a graph, with parameters when they exist."""

    kind: RegularityKind
    degree: int | None = None
    params: SrgParams | None = None

    @property
    def is_amply_regular(self) -> bool:
        return self.kind in (RegularityKind.AMPLY_REGULAR, RegularityKind.STRONGLY_REGULAR)

    @property
    def is_strongly_regular(self) -> bool:
        return self.kind is RegularityKind.STRONGLY_REGULAR


def classify_regularity(g: Graph) -> RegularityClass:
    """Return the strongest of Irregular / Regular / AmplyRegular / StronglyRegular.

    Amply regular means every adjacent pair shares exactly alpha neighbors
    and every distance-2 pair exactly beta; strongly regular additionally
    needs diameter <= 2 and the graph neither complete nor empty.  All
    O(n^2) pairs are checked, no sampling.
    """
    if g.n < 2:
        raise InvalidParamsError("classification needs at least two vertices")
    degs = g.degree_sequence()
    d = degs[0]
    if any(deg != d for deg in degs):
        return RegularityClass(RegularityKind.IRREGULAR)
    # Complete and empty graphs carry no (alpha, beta) data.
    if d == 0 or d == g.n - 1:
        return RegularityClass(RegularityKind.REGULAR, degree=d)

    alphas: set[int] = set()
    betas: set[int] = set()
    every_nonadjacent_close = True
    for u in range(g.n):
        row = g.neighbors(u)
        for v in range(u + 1, g.n):
            c = len(merge_intersection(row, g.neighbors(v)))
            if g.has_edge(u, v):
                alphas.add(c)
            elif c > 0:
                # Non-adjacent with a common neighbor is exactly distance 2.
                betas.add(c)
            else:
                every_nonadjacent_close = False
            if len(alphas) > 1 or len(betas) > 1:
                return RegularityClass(RegularityKind.REGULAR, degree=d)
    if not betas:
        # No distance-2 pair at all (disjoint unions of cliques): beta void.
        return RegularityClass(RegularityKind.REGULAR, degree=d)
    params = SrgParams(g.n, d, alphas.pop(), betas.pop())
    if every_nonadjacent_close:
        return RegularityClass(RegularityKind.STRONGLY_REGULAR, degree=d, params=params)
    return RegularityClass(RegularityKind.AMPLY_REGULAR, degree=d, params=params)


@dataclass(frozen=True)
class NeighborProfile:
    """How the d-1 non-x neighbors of some v in N_x split across the classes."""

    ell: int
    in_delta: int
    in_nx: int
    in_pxy: int


def neighbor_profile(
    g: Graph,
    x: VertexId,
    y: VertexId,
    v: VertexId,
    params: SrgParams | None = None,
) -> NeighborProfile:
    """Neighbor counts of v in N_x forced by the amply regular parameters.

    With ell = |G(v) n N_y| the parameters force beta-1-ell neighbors in
    delta, alpha-beta+1+ell in N_x and d-alpha-1-ell in P_xy.  The counts
    are recomputed from the adjacency and any disagreement raises, which is
    exactly the signal that the graph is not amply regular.
    """
    if params is None:
        rc = classify_regularity(g)
        if not rc.is_amply_regular or rc.params is None:
            raise NotAmplyRegularError("graph is not amply regular")
        params = rc.params
    parts = decompose_edge(g, x, y)
    if v not in parts.nx:
        raise InvalidVertexError(f"vertex {v} is not in N_x of edge ({x},{y})")
    gv = g.neighbors(v)
    ell = len(merge_intersection(gv, parts.ny))
    expected = NeighborProfile(
        ell=ell,
        in_delta=params.beta - 1 - ell,
        in_nx=params.alpha - params.beta + 1 + ell,
        in_pxy=params.d - params.alpha - 1 - ell,
    )
    actual = NeighborProfile(
        ell=ell,
        in_delta=len(merge_intersection(gv, parts.delta)),
        in_nx=len(merge_intersection(gv, parts.nx)),
        in_pxy=len(merge_intersection(gv, parts.pxy)),
    )
    if expected != actual:
        raise NotAmplyRegularError(
            f"profile mismatch at v={v} on edge ({x},{y}): "
            f"expected {expected}, adjacency gives {actual}"
        )
    return expected


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of the counting inequality d(d-alpha-1) <= (n-d-1)beta."""

    lhs: int
    rhs: int
    relation: str  # "equal" | "strict" | "violated"


def parameter_identity_check(g: Graph, params: SrgParams | None = None) -> IdentityCheck:
    """Evaluate d(d-alpha-1) vs (n-d-1)beta; equality characterizes SRGs."""
    rc = classify_regularity(g)
    if not rc.is_amply_regular or rc.params is None:
        raise NotAmplyRegularError("graph is not amply regular")
    p = params if params is not None else rc.params
    lhs = p.d * (p.d - p.alpha - 1)
    rhs = (p.n - p.d - 1) * p.beta
    if lhs == rhs:
        relation = "equal"
    elif lhs < rhs:
        relation = "strict"
    else:
        relation = "violated"
    return IdentityCheck(lhs=lhs, rhs=rhs, relation=relation)
