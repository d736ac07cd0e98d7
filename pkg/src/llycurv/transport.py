"""Exact optimal transport on graphs and the two curvature notions built on it.

Everything is rational: Wasserstein distances come from an integer min-cost
flow after clearing denominators, and the curvature of an edge of a
d-regular graph comes from an integer assignment problem between the
punctured neighborhoods N_x and N_y.  The two routes are deliberately
independent so they can cross-check each other through the identity
kappa = (d+1)/d * kappa_{1/(d+1)}.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DisconnectedError,
    InfiniteDistanceError,
    InvalidIdlenessError,
    InvalidParamsError,
    NotAnEdgeError,
    NotRegularError,
)
from .graphs import Graph, all_pairs_distances, bfs_distances, decompose_edge

Rational = Fraction

# Assignment costs are capped here: v-x-y-u is always a path of length 3.
_COST_CAP = 3


@dataclass(frozen=True)
class ProbabilityMeasure:
    """Finitely supported measure; masses are positive fractions summing to 1."""

    support: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        verts = [v for v, _ in self.support]
        if verts != sorted(set(verts)):
            raise InvalidParamsError("support must be sorted with distinct vertices")
        if any(mass <= 0 for _, mass in self.support):
            raise InvalidParamsError("masses must be positive")
        if sum((mass for _, mass in self.support), Fraction(0)) != 1:
            raise InvalidParamsError("masses must sum to exactly 1")

    @classmethod
    def point(cls, v: int) -> "ProbabilityMeasure":
        return cls(((v, Fraction(1)),))

    @classmethod
    def from_dict(cls, masses: dict[int, Fraction]) -> "ProbabilityMeasure":
        return cls(tuple(sorted((v, Fraction(m)) for v, m in masses.items() if m)))

    def mass(self, v: int) -> Fraction:
        for u, m in self.support:
            if u == v:
                return m
        return Fraction(0)


def lazy_walk_measure(g: Graph, x: int, p: Fraction | int) -> ProbabilityMeasure:
    """Mass p at x and (1-p)/deg(x) on each neighbor."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InvalidIdlenessError(f"idleness {p} outside [0, 1]")
    if p == 1:
        return ProbabilityMeasure.point(x)
    deg = g.degree(x)
    if deg == 0:
        raise InvalidParamsError(f"vertex {x} is isolated; only p = 1 is meaningful")
    masses: dict[int, Fraction] = {w: (1 - p) / deg for w in g.neighbors(x)}
    if p > 0:
        masses[x] = p
    return ProbabilityMeasure.from_dict(masses)


@dataclass(frozen=True)
class TransportPlan:
    """Coupling between two measures together with its (already minimal) cost."""

    entries: tuple[tuple[int, int, Fraction], ...]
    total_cost: Fraction


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature of one edge plus the quantities the upper bound is made of."""

    x: int
    y: int
    kappa: Fraction
    delta_size: int
    upper_bound: Fraction
    sharp: bool
    min_bijection_cost: int
    witness: tuple[tuple[int, int], ...] | None = None


@dataclass(frozen=True)
class CurvatureSpectrum:
    reports: tuple[CurvatureReport, ...]
    min_kappa: Fraction


def hungarian(cost: list[list[int]]) -> tuple[int, list[int]]:
    """Minimum-cost perfect assignment on a square integer matrix.

    Potential-based O(m^3) method; all arithmetic stays integral, so the
    optimum is exact.  Returns (total cost, column chosen for each row).
    """
    m = len(cost)
    if m == 0:
        return 0, []
    if any(len(row) != m for row in cost):
        raise InvalidParamsError("cost matrix must be square")
    big = sum(abs(c) for row in cost for c in row) + 1
    u = [0] * (m + 1)
    v = [0] * (m + 1)
    match = [0] * (m + 1)  # match[j] = row occupying column j (1-based)
    for i in range(1, m + 1):
        match[0] = i
        j0 = 0
        minv = [big] * (m + 1)
        used = [False] * (m + 1)
        way = [0] * (m + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = big
            j1 = 0
            for j in range(1, m + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(m + 1):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if match[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    row_to_col = [0] * m
    for j in range(1, m + 1):
        row_to_col[match[j] - 1] = j - 1
    total = sum(cost[i][row_to_col[i]] for i in range(m))
    return total, row_to_col


def lex_smallest_optimal_assignment(cost: list[list[int]]) -> tuple[int, list[int]]:
    """Among all minimum-cost assignments, the lexicographically first one.

    Fixes rows in order, keeping the smallest column whose forced choice
    still completes to the optimal total.
    """
    m = len(cost)
    total, _ = hungarian(cost)
    chosen: list[int] = []
    used: set[int] = set()
    prefix = 0
    for i in range(m):
        for j in range(m):
            if j in used:
                continue
            rem_cols = [c for c in range(m) if c not in used and c != j]
            sub = [[cost[r][c] for c in rem_cols] for r in range(i + 1, m)]
            rest, _ = hungarian(sub)
            if prefix + cost[i][j] + rest == total:
                chosen.append(j)
                used.add(j)
                prefix += cost[i][j]
                break
        else:
            raise AssertionError("no completing column found; solver bug")
    return total, chosen


def _transportation(
    supplies: list[int], demands: list[int], cost: list[list[int]]
) -> tuple[int, list[list[int]]]:
    """Integer transportation problem via successive shortest paths."""
    nl, nr = len(supplies), len(demands)
    flow = [[0] * nr for _ in range(nl)]
    sup = list(supplies)
    dem = list(demands)
    while True:
        sources = [i for i in range(nl) if sup[i] > 0]
        if not sources:
            break
        # Bellman-Ford over the residual bipartite graph.
        dist: list[int | None] = [None] * (nl + nr)
        parent = [-1] * (nl + nr)
        for i in sources:
            dist[i] = 0
        for _ in range(nl + nr):
            changed = False
            for i in range(nl):
                di = dist[i]
                if di is None:
                    continue
                row = cost[i]
                for j in range(nr):
                    nd = di + row[j]
                    dj = dist[nl + j]
                    if dj is None or nd < dj:
                        dist[nl + j] = nd
                        parent[nl + j] = i
                        changed = True
            for j in range(nr):
                dj = dist[nl + j]
                if dj is None:
                    continue
                for i in range(nl):
                    if flow[i][j] > 0:
                        nd = dj - cost[i][j]
                        di = dist[i]
                        if di is None or nd < di:
                            dist[i] = nd
                            parent[i] = nl + j
                            changed = True
            if not changed:
                break
        target = None
        best = None
        for j in range(nr):
            if dem[j] > 0 and dist[nl + j] is not None:
                if best is None or dist[nl + j] < best:
                    best = dist[nl + j]
                    target = j
        if target is None:
            raise InfiniteDistanceError("no residual path between remaining supports")
        # Trace back and find the bottleneck along the alternating path.
        path: list[tuple[int, int, bool]] = []  # (i, j, forward)
        node = nl + target
        while True:
            prev = parent[node]
            if node >= nl:
                path.append((prev, node - nl, True))
                node = prev
            else:
                if prev == -1:
                    break
                path.append((node, prev - nl, False))
                node = prev
        bottleneck = min(sup[node], dem[target])
        for i, j, forward in path:
            if not forward:
                bottleneck = min(bottleneck, flow[i][j])
        for i, j, forward in path:
            if forward:
                flow[i][j] += bottleneck
            else:
                flow[i][j] -= bottleneck
        sup[node] -= bottleneck
        dem[target] -= bottleneck
    total = sum(flow[i][j] * cost[i][j] for i in range(nl) for j in range(nr))
    return total, flow


def wasserstein_w1(
    g: Graph, mu1: ProbabilityMeasure, mu2: ProbabilityMeasure
) -> tuple[Fraction, TransportPlan]:
    """Exact W1 between two measures, with a plan achieving it."""
    s1 = [v for v, _ in mu1.support]
    s2 = [v for v, _ in mu2.support]
    for v in s1 + s2:
        if not 0 <= v < g.n:
            raise InvalidParamsError(f"support vertex {v} outside graph")
    reach = bfs_distances(g, s1[0])
    if any(reach[v] is None for v in s1 + s2):
        raise InfiniteDistanceError("measure supports span several components")
    dist_rows = [bfs_distances(g, v) for v in s1]
    cost = [[dist_rows[i][w] for w in s2] for i in range(len(s1))]
    denom = math.lcm(
        *(mass.denominator for _, mass in mu1.support),
        *(mass.denominator for _, mass in mu2.support),
    )
    supplies = [int(mass * denom) for _, mass in mu1.support]
    demands = [int(mass * denom) for _, mass in mu2.support]
    total, flow = _transportation(supplies, demands, cost)
    entries = tuple(
        (s1[i], s2[j], Fraction(flow[i][j], denom))
        for i in range(len(s1))
        for j in range(len(s2))
        if flow[i][j]
    )
    w1 = Fraction(total, denom)
    return w1, TransportPlan(entries=entries, total_cost=w1)


def ollivier_kappa_p(g: Graph, x: int, y: int, p: Fraction | int) -> Fraction:
    """p-Ollivier curvature 1 - W1(mu_x^p, mu_y^p) of the edge xy."""
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InvalidIdlenessError(f"idleness {p} outside [0, 1]")
    if not g.has_edge(x, y):
        raise NotAnEdgeError(f"({x},{y}) is not an edge")
    w1, _ = wasserstein_w1(g, lazy_walk_measure(g, x, p), lazy_walk_measure(g, y, p))
    return 1 - w1


def _assignment_costs(
    g: Graph,
    nx: tuple[int, ...],
    ny: tuple[int, ...],
    dist: list[list[int | None]] | None,
) -> list[list[int]]:
    if dist is not None:
        return [[min(_int(dist[v][u]), _COST_CAP) for u in ny] for v in nx]
    rows = []
    for v in nx:
        d = bfs_distances(g, v, max_depth=_COST_CAP)
        rows.append([_COST_CAP if d[u] is None else min(d[u], _COST_CAP) for u in ny])
    return rows


def _int(value: int | None) -> int:
    return _COST_CAP if value is None else value


def lly_curvature(
    g: Graph,
    x: int,
    y: int,
    want_witness: bool = False,
    dist: list[list[int | None]] | None = None,
) -> CurvatureReport:
    """Lin-Lu-Yau curvature of the edge xy of a regular graph.

    kappa = (d + 1 - C)/d where C is the minimum cost of a bijection
    N_x -> N_y under graph distance (entries lie in {1, 2, 3}).  When a
    witness is requested it is the lexicographically smallest optimal
    bijection, listed in N_x order.
    """
    if not g.is_regular():
        raise NotRegularError("Lin-Lu-Yau curvature is only computed for regular graphs")
    parts = decompose_edge(g, x, y)
    d = g.degree(x)
    nx, ny = parts.nx, parts.ny
    if len(nx) != len(ny):
        raise NotRegularError("exclusive neighborhoods differ in size")
    if not nx:
        min_cost = 0
        assignment: list[int] = []
    else:
        cost = _assignment_costs(g, nx, ny, dist)
        if want_witness:
            min_cost, assignment = lex_smallest_optimal_assignment(cost)
        else:
            min_cost, assignment = hungarian(cost)
    kappa = Fraction(d + 1 - min_cost, d)
    upper = Fraction(2 + len(parts.delta), d)
    witness = tuple((nx[i], ny[assignment[i]]) for i in range(len(nx))) if want_witness else None
    return CurvatureReport(
        x=x,
        y=y,
        kappa=kappa,
        delta_size=len(parts.delta),
        upper_bound=upper,
        sharp=kappa == upper,
        min_bijection_cost=min_cost,
        witness=witness,
    )


def _spectrum_chunk(g: Graph, edges: list[tuple[int, int]]) -> list[CurvatureReport]:
    dist = all_pairs_distances(g)
    return [lly_curvature(g, x, y, dist=dist) for x, y in edges]


def curvature_spectrum(g: Graph, processes: int = 1) -> CurvatureSpectrum:
    """One curvature report per edge (sorted edge order) plus the minimum."""
    if not g.is_regular():
        raise NotRegularError("curvature spectrum needs a regular graph")
    if any(dv is None for dv in bfs_distances(g, 0)):
        raise DisconnectedError("curvature spectrum needs a connected graph")
    edges = list(g.edges())
    if not edges:
        raise InvalidParamsError("graph has no edges")
    if processes <= 1 or len(edges) < 4:
        reports = _spectrum_chunk(g, edges)
    else:
        chunks = [edges[k::processes] for k in range(processes)]
        with ProcessPoolExecutor(max_workers=processes) as pool:
            parts = list(pool.map(_spectrum_chunk, [g] * processes, chunks))
        reports = [r for part in parts for r in part]
        reports.sort(key=lambda r: (r.x, r.y))
    return CurvatureSpectrum(
        reports=tuple(reports), min_kappa=min(r.kappa for r in reports)
    )


def idleness_identity_check(g: Graph, x: int, y: int) -> tuple[Fraction, Fraction]:
    """Both sides of kappa = (d+1)/d * kappa_{1/(d+1)}, computed independently."""
    if not g.is_regular():
        raise NotRegularError("the idleness identity is stated for regular graphs")
    d = g.degree(x)
    via_assignment = lly_curvature(g, x, y).kappa
    via_flow = Fraction(d + 1, d) * ollivier_kappa_p(g, x, y, Fraction(1, d + 1))
    return via_assignment, via_flow
