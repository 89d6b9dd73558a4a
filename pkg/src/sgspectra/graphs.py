"""Signed-graph representation: edges carry a +1/-1 sign.

Vertices are dense integers 0..n-1. Edges are stored once, canonically as
(u, v, sign) with u < v, sorted lexicographically, and queried symmetrically.
All values are immutable after construction; every operation here is a pure
function, so graphs can be shared freely across threads.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BadOrder,
    DuplicateEdge,
    EmptyGraph,
    LengthMismatch,
    SelfLoop,
    UnderlyingGraphMismatch,
    VertexOutOfRange,
)

PLUS = 1
MINUS = -1

_SIGN_TOKENS = {"+": PLUS, "-": MINUS, "1": PLUS, "-1": MINUS}


def parse_sign(token: str) -> int:
    """Map an edge-sign token (one of +, -, 1, -1) to +1/-1."""
    try:
        return _SIGN_TOKENS[token]
    except KeyError:
        raise ValueError(f"bad sign token {token!r}") from None


def sign_char(s: int) -> str:
    return "+" if s == PLUS else "-"


def _check_sign(s: int) -> int:
    if s not in (PLUS, MINUS):
        raise ValueError(f"edge sign must be +1 or -1, got {s!r}")
    return s


@dataclass(frozen=True)
class SignedGraph:
    """A simple undirected graph on vertices 0..n-1 with signed edges."""

    n: int
    edges: tuple[tuple[int, int, int], ...]
    _signs: dict = field(init=False, repr=False, compare=False)
    _adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        signs: dict[tuple[int, int], int] = {}
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) not canonical for n={self.n}")
            _check_sign(s)
            if (u, v) in signs:
                raise DuplicateEdge(f"edge ({u}, {v}) listed twice")
            signs[(u, v)] = s
            adj[u].append((v, s))
            adj[v].append((u, s))
        object.__setattr__(self, "_signs", signs)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._signs

    def sign(self, u: int, v: int) -> int:
        """Sign of edge {u, v}; raises KeyError if absent."""
        if u > v:
            u, v = v, u
        return self._signs[(u, v)]

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted (neighbor, sign) pairs of vertex v."""
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def unsigned_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._signs)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree bookkeeping: total, positive, negative, net."""

    degree: tuple[int, ...]
    pos_degree: tuple[int, ...]
    neg_degree: tuple[int, ...]
    net_degree: tuple[int, ...]


@dataclass(frozen=True)
class CoRegularity:
    """Common (degree, net degree) pair when every vertex shares both."""

    r: int
    s: int
    complete: bool


def build_graph(n: int, edge_list: Iterable[tuple[int, int, int]]) -> SignedGraph:
    """Construct a SignedGraph, canonicalizing each edge to u < v.

    Rejects self-loops, duplicate vertex pairs and out-of-range endpoints.
    """
    canonical = []
    for u, v, s in edge_list:
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
        if u > v:
            u, v = v, u
        canonical.append((u, v, _check_sign(s)))
    canonical.sort()
    for (u1, v1, _), (u2, v2, _) in zip(canonical, canonical[1:]):
        if (u1, v1) == (u2, v2):
            raise DuplicateEdge(f"edge ({u1}, {v1}) listed twice")
    return SignedGraph(n, tuple(canonical))


def degree_profile(g: SignedGraph) -> DegreeProfile:
    """Total, positive, negative and net degree of every vertex."""
    d = [0] * g.n
    dp = [0] * g.n
    dm = [0] * g.n
    for u, v, s in g.edges:
        d[u] += 1
        d[v] += 1
        if s == PLUS:
            dp[u] += 1
            dp[v] += 1
        else:
            dm[u] += 1
            dm[v] += 1
    net = [p - m for p, m in zip(dp, dm)]
    return DegreeProfile(tuple(d), tuple(dp), tuple(dm), tuple(net))


def min_max_neg_degree(g: SignedGraph) -> tuple[int, int]:
    """Minimum and maximum negative vertex degree."""
    if g.n == 0:
        raise EmptyGraph("negative-degree extremes need at least one vertex")
    dm = degree_profile(g).neg_degree
    return min(dm), max(dm)


def co_regularity(g: SignedGraph) -> CoRegularity | None:
    """The common (r, s) pair, or None unless all vertices share both values."""
    if g.n == 0:
        return None
    prof = degree_profile(g)
    r = prof.degree[0]
    s = prof.net_degree[0]
    if any(x != r for x in prof.degree) or any(x != s for x in prof.net_degree):
        return None
    return CoRegularity(r, s, complete=(r == g.n - 1))


def apply_switching(g: SignedGraph, alpha: Sequence[int]) -> SignedGraph:
    """Multiply each edge sign by the +-1 values of its endpoints.

    Applying the same alpha twice is the identity.
    """
    if len(alpha) != g.n:
        raise LengthMismatch(f"switching function has length {len(alpha)}, graph order is {g.n}")
    for a in alpha:
        _check_sign(a)
    edges = tuple((u, v, alpha[u] * s * alpha[v]) for u, v, s in g.edges)
    return SignedGraph(g.n, edges)


def balancing_switch(g: SignedGraph) -> tuple[int, ...] | None:
    """A per-vertex sign assignment that makes every edge positive, or None.

    Found by two-coloring a spanning forest: tree edges are switched positive
    by construction, then every non-tree edge must come out positive too.
    """
    theta = [0] * g.n
    for root in range(g.n):
        if theta[root] != 0:
            continue
        theta[root] = PLUS
        stack = [root]
        while stack:
            u = stack.pop()
            for v, s in g.neighbors(u):
                if theta[v] == 0:
                    theta[v] = s * theta[u]
                    stack.append(v)
    for u, v, s in g.edges:
        if theta[u] * s * theta[v] != PLUS:
            return None
    return tuple(theta)


def is_balanced(g: SignedGraph) -> bool:
    """True iff g is switching-equivalent to the all-positive signature."""
    return balancing_switch(g) is not None


def switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True iff the two signatures on the same underlying graph differ by a switching."""
    if g1.n != g2.n or g1.unsigned_edges() != g2.unsigned_edges():
        raise UnderlyingGraphMismatch("graphs must share vertex count and unsigned edge set")
    product = tuple((u, v, s * g2.sign(u, v)) for u, v, s in g1.edges)
    return is_balanced(SignedGraph(g1.n, product))


def all_positive(g: SignedGraph) -> SignedGraph:
    """Same underlying graph with every edge positive."""
    return SignedGraph(g.n, tuple((u, v, PLUS) for u, v, _ in g.edges))


def family_edge_pairs(family: str, n: int) -> list[tuple[int, int]]:
    """Canonical edge order of a generated family.

    cycle: (0,1), (1,2), ..., (n-2,n-1), then the closing edge (0,n-1) last.
    path:  (0,1), ..., (n-2,n-1).  star: center 0, spokes (0,1)..(0,n-1).
    complete: lexicographic pairs.  empty: none.
    """
    if family == "cycle":
        if n < 3:
            raise BadOrder(f"cycle needs n >= 3, got {n}")
        return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    if family == "path":
        if n < 1:
            raise BadOrder(f"path needs n >= 1, got {n}")
        return [(i, i + 1) for i in range(n - 1)]
    if family == "star":
        if n < 2:
            raise BadOrder(f"star needs n >= 2, got {n}")
        return [(0, i) for i in range(1, n)]
    if family == "complete":
        if n < 0:
            raise BadOrder(f"complete needs n >= 0, got {n}")
        return [(u, v) for u in range(n) for v in range(u + 1, n)]
    if family == "empty":
        if n < 0:
            raise BadOrder(f"empty needs n >= 0, got {n}")
        return []
    raise BadOrder(f"unknown family {family!r}")


def generate(
    family: str,
    n: int,
    signs: str | Sequence[int] = "all_plus",
    *,
    q: float = 0.5,
    seed: int = 0,
) -> SignedGraph:
    """Build a named family with a signature rule.

    signs is "all_plus", "all_minus", "random" (each edge negative with
    probability q, seeded), or an explicit sign sequence (+-1 values or a
    string of +/- characters) matching the family's canonical edge order.
    """
    pairs = family_edge_pairs(family, n)
    if isinstance(signs, str) and signs in ("all_plus", "all_minus", "random"):
        if signs == "all_plus":
            sig = [PLUS] * len(pairs)
        elif signs == "all_minus":
            sig = [MINUS] * len(pairs)
        else:
            rng = random.Random(seed)
            sig = [MINUS if rng.random() < q else PLUS for _ in pairs]
    else:
        if isinstance(signs, str):
            sig = [parse_sign(c) for c in signs]
        else:
            sig = [_check_sign(s) for s in signs]
        if len(sig) != len(pairs):
            raise LengthMismatch(
                f"{family} on {n} vertices has {len(pairs)} edges, got {len(sig)} signs"
            )
    return build_graph(n, [(u, v, s) for (u, v), s in zip(pairs, sig)])


def random_signed_graph(n: int, p: float, q: float, seed: int) -> SignedGraph:
    """Seeded random graph: each pair is an edge with probability p, each
    present edge negative with probability q.

    Pairs are visited in lexicographic order and only rng.random() is drawn
    (one draw per pair, plus one per present edge), so a fixed (n, p, q, seed)
    replays bit-exactly across platforms and Python versions.
    """
    if not (0.0 <= p <= 1.0 and 0.0 <= q <= 1.0):
        raise ValueError("edge and sign probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                s = MINUS if rng.random() < q else PLUS
                edges.append((u, v, s))
    return SignedGraph(n, tuple(edges))


def is_connected(g: SignedGraph) -> bool:
    """Connectivity of the underlying graph (breadth-first traversal)."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = [0]
    count = 1
    while queue:
        u = queue.pop()
        for v, _ in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n
