"""Constructions for every named graph family used by the tests and the CLI.

Each constructor yields a deterministic vertex numbering, so serialized
output is stable across runs.  ``catalog()`` bundles the standard instances
the verification suites sweep over.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    InvalidParamsError,
    NotPaleyOrderError,
    NotPrimePowerError,
    TooLargeError,
    UnknownFamilyError,
)
from .fields import is_nonzero_square, is_prime, make_field
from .graphs import Graph, SrgParams, bfs_distances

_PALEY_VERTEX_BOUND = 2**16


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q = p^m, or None when q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            break
        if q % p:
            continue
        m = 0
        rest = q
        while rest % p == 0:
            rest //= p
            m += 1
        return (p, m) if rest == 1 else None
    return (q, 1)  # q itself prime


def paley_graph(q: int) -> Graph:
    """Vertices GF(q), u ~ v iff u - v is a nonzero square; needs q = 1 mod 4."""
    pm = prime_power_decomposition(q)
    if pm is None:
        raise NotPrimePowerError(f"{q} is not a prime power")
    if q % 4 != 1:
        raise NotPaleyOrderError(f"{q} is not congruent to 1 mod 4")
    if q > _PALEY_VERTEX_BOUND:
        raise TooLargeError(f"Paley order {q} exceeds vertex bound {_PALEY_VERTEX_BOUND}")
    p, m = pm
    field = make_field(p, m)
    elements = list(field.elements())
    squares = [e for e in elements if is_nonzero_square(field, e)]
    # q = 1 mod 4 makes -1 a square, so u + s runs over all neighbors of u.
    edges = []
    for u in elements:
        iu = u.index
        for s in squares:
            iv = (u + s).index
            if iu < iv:
                edges.append((iu, iv))
    return Graph(q, edges)


def rook_graph(k: int) -> Graph:
    """Cartesian product of two complete graphs K_k; vertex (i,j) -> i*k+j."""
    if k < 2:
        raise InvalidParamsError("rook graph needs k >= 2")
    edges = []
    for i in range(k):
        for j in range(k):
            v = i * k + j
            for jj in range(j + 1, k):
                edges.append((v, i * k + jj))
            for ii in range(i + 1, k):
                edges.append((v, ii * k + j))
    return Graph(k * k, edges)


def shrikhande_graph() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = []
    for a in range(4):
        for b in range(4):
            v = 4 * a + b
            for da, db in conn:
                w = 4 * ((a + da) % 4) + (b + db) % 4
                if v < w:
                    edges.append((v, w))
    return Graph(16, edges)


def cocktail_party_graph(k: int) -> Graph:
    """K_{2k} minus the perfect matching {(2i, 2i+1)}."""
    if k < 2:
        raise InvalidParamsError("cocktail party graph needs k >= 2")
    n = 2 * k
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if v != u + 1 or u % 2 == 1]
    return Graph(n, edges)


def johnson_graph(n: int, k: int) -> Graph:
    """k-subsets of an n-set, adjacent iff the intersection has size k-1."""
    if not (1 <= k <= n):
        raise InvalidParamsError(f"johnson graph needs 1 <= k <= n, got ({n},{k})")
    verts = list(combinations(range(n), k))
    index = {s: i for i, s in enumerate(verts)}
    edges = []
    for i, s in enumerate(verts):
        sset = set(s)
        for t in verts[i + 1 :]:
            if len(sset.intersection(t)) == k - 1:
                edges.append((i, index[t]))
    return Graph(len(verts), edges)


def petersen_graph() -> Graph:
    """Kneser graph on 2-subsets of a 5-set: adjacent iff disjoint."""
    verts = list(combinations(range(5), 2))
    index = {s: i for i, s in enumerate(verts)}
    edges = []
    for i, s in enumerate(verts):
        for t in verts[i + 1 :]:
            if not set(s).intersection(t):
                edges.append((i, index[t]))
    return Graph(10, edges)


def clebsch_graph() -> Graph:
    """Halved 5-cube: even-weight 5-bit strings, adjacent at Hamming distance 2.

    This is the (16, 10, 6, 6) realization; since that parameter set has a
    unique graph, the classifier signature is the whole correctness check.
    """
    verts = [v for v in range(32) if bin(v).count("1") % 2 == 0]
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, v in enumerate(verts):
        for w in verts[i + 1 :]:
            if bin(v ^ w).count("1") == 2:
                edges.append((i, index[w]))
    return Graph(16, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParamsError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParamsError("complete graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def hypercube_graph(m: int) -> Graph:
    if m < 1:
        raise InvalidParamsError("hypercube needs m >= 1")
    if m > 16:
        raise TooLargeError("hypercube dimension capped at 16")
    n = 1 << m
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(m) if v < v ^ (1 << b)]
    return Graph(n, edges)


_FAMILIES = {
    "paley": (paley_graph, ("q",)),
    "rook": (rook_graph, ("k",)),
    "shrikhande": (shrikhande_graph, ()),
    "cocktail_party": (cocktail_party_graph, ("k",)),
    "johnson": (johnson_graph, ("n", "k")),
    "clebsch": (clebsch_graph, ()),
    "petersen": (petersen_graph, ()),
    "cycle": (cycle_graph, ("n",)),
    "complete": (complete_graph, ("n",)),
    "hypercube": (hypercube_graph, ("m",)),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(_FAMILIES))


def named_graph(name: str, **params: int) -> Graph:
    """Dispatch to a family constructor by name; see family_names()."""
    if name not in _FAMILIES:
        raise UnknownFamilyError(f"unknown family {name!r}; know {family_names()}")
    builder, wanted = _FAMILIES[name]
    missing = [w for w in wanted if w not in params]
    extra = [k for k in params if k not in wanted]
    if missing or extra:
        raise InvalidParamsError(
            f"family {name!r} takes {wanted}, missing {missing}, unexpected {extra}"
        )
    return builder(*(params[w] for w in wanted))


def random_regular_graph(n: int, d: int, seed: int) -> Graph:
    """Connected random d-regular simple graph, deterministic in the seed.

    Pairs stubs one edge at a time, restarting with a derived seed whenever
    the construction wedges or the result is disconnected.
    """
    if n * d % 2 or d >= n or d < 1:
        raise InvalidParamsError(f"no {d}-regular graph on {n} vertices")
    attempt = 0
    while True:
        rng = random.Random(f"{seed}:{attempt}")
        g = _try_regular(n, d, rng)
        if g is not None and all(dist is not None for dist in bfs_distances(g, 0)):
            return g
        attempt += 1


def _try_regular(n: int, d: int, rng: random.Random) -> Graph | None:
    remaining = {v: d for v in range(n)}
    adj: set[tuple[int, int]] = set()
    while remaining:
        verts = sorted(remaining)
        candidates = [
            (u, v)
            for i, u in enumerate(verts)
            for v in verts[i + 1 :]
            if (u, v) not in adj
        ]
        if not candidates:
            return None
        u, v = rng.choice(candidates)
        adj.add((u, v))
        for w in (u, v):
            remaining[w] -= 1
            if remaining[w] == 0:
                del remaining[w]
    return Graph(n, adj)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    params: SrgParams | None  # expected srg/amply parameters when known


def catalog() -> list[CatalogEntry]:
    """The named corpus the verification suites run over."""
    entries = [
        CatalogEntry("rook(4)", rook_graph(4), SrgParams(16, 6, 2, 2)),
        CatalogEntry("shrikhande", shrikhande_graph(), SrgParams(16, 6, 2, 2)),
        CatalogEntry("petersen", petersen_graph(), SrgParams(10, 3, 0, 1)),
        CatalogEntry("johnson(5,2)", johnson_graph(5, 2), SrgParams(10, 6, 3, 4)),
        CatalogEntry("johnson(6,2)", johnson_graph(6, 2), SrgParams(15, 8, 4, 4)),
        CatalogEntry("clebsch", clebsch_graph(), SrgParams(16, 10, 6, 6)),
        CatalogEntry("paley(9)", paley_graph(9), SrgParams(9, 4, 1, 2)),
        CatalogEntry("paley(13)", paley_graph(13), SrgParams(13, 6, 2, 3)),
        CatalogEntry("paley(17)", paley_graph(17), SrgParams(17, 8, 3, 4)),
        CatalogEntry("paley(25)", paley_graph(25), SrgParams(25, 12, 5, 6)),
        CatalogEntry("cycle(6)", cycle_graph(6), SrgParams(6, 2, 0, 1)),
        CatalogEntry("hypercube(3)", hypercube_graph(3), SrgParams(8, 3, 0, 2)),
        CatalogEntry("complete(5)", complete_graph(5), None),
    ]
    for k in range(2, 7):
        entries.append(
            CatalogEntry(
                f"cocktail_party({k})",
                cocktail_party_graph(k),
                SrgParams(2 * k, 2 * k - 2, 2 * k - 4, 2 * k - 2),
            )
        )
    return entries


def paley_gamma_orders(gamma_max: int) -> list[tuple[int, int]]:
    """All (gamma, q=4*gamma+1) with q a prime power, 2 <= gamma <= gamma_max."""
    out = []
    for g in range(2, gamma_max + 1):
        q = 4 * g + 1
        if prime_power_decomposition(q) is not None:
            out.append((g, q))
    return out


def is_prime_power(q: int) -> bool:
    return prime_power_decomposition(q) is not None


__all__ = [
    "CatalogEntry",
    "catalog",
    "clebsch_graph",
    "cocktail_party_graph",
    "complete_graph",
    "cycle_graph",
    "family_names",
    "hypercube_graph",
    "is_prime",
    "is_prime_power",
    "johnson_graph",
    "named_graph",
    "paley_gamma_orders",
    "paley_graph",
    "petersen_graph",
    "prime_power_decomposition",
    "random_regular_graph",
    "rook_graph",
    "shrikhande_graph",
]
