"""Immutable simple undirected graphs and their degree-like profiles.

Everything downstream (indices, bounds, spectral estimates, sweeps) consumes
either a :class:`Graph` or the :class:`DegreeProfile` computed from it.  All
quantities in this module are exact integers; floating point only appears
once exponents enter in :mod:`nbzagreb.indices`.

Input formats:

* edge lists: optional first line ``n <count>`` (allows isolated vertices),
  then one edge per line as two whitespace-separated decimal ids, ``#``
  starts a comment;
* graph6: the standard short form (n <= 62, 6-bit packing of the upper
  triangle in column-major order).
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    DuplicateEdge,
    InvalidGraph6,
    MalformedLine,
    NonContiguousIds,
    SelfLoop,
)

__all__ = [
    "Graph",
    "DegreeProfile",
    "parse_edge_list",
    "parse_graph6",
    "encode_graph6",
    "degree_profile",
    "diameter",
    "is_connected",
    "is_path",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adjacency[u]`` is the sorted tuple of neighbors of ``u``.  Instances
    are immutable and safe to share across threads.
    """

    n: int
    m: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match n")
        deg_total = 0
        for u, nbrs in enumerate(self.adjacency):
            deg_total += len(nbrs)
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"duplicate neighbor entries at vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise ValueError(f"neighbor {v} out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if deg_total != 2 * self.m:
            raise ValueError("edge count m inconsistent with adjacency")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u},{v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
            m += 1
        return cls(n, m, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def neighbor_bits(self) -> tuple[int, ...]:
        """Neighbor sets as bitmasks, for fast set algebra."""
        out = []
        for nbrs in self.adjacency:
            b = 0
            for v in nbrs:
                b |= 1 << v
            out.append(b)
        return tuple(out)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def adjacency_matrix(self):
        """Dense 0/1 adjacency matrix as a float numpy array."""
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a


@dataclass(frozen=True)
class DegreeProfile:
    """Every degree-like quantity of a graph, computed once.

    ``deg`` is the ordinary degree, ``nbr_deg[u]`` the neighborhood degree
    (sum of degrees over the neighbors of u) and ``dist2_deg[u]`` the sum of
    degrees over vertices at shortest-path distance exactly 2 from u.  The
    histograms map a degree value to the number of vertices attaining it.
    ``m1`` is the first Zagreb index, the sum of squared ordinary degrees.
    ``diameter`` is ``math.inf`` for disconnected graphs.
    """

    n: int
    m: int
    deg: tuple[int, ...]
    nbr_deg: tuple[int, ...]
    dist2_deg: tuple[int, ...]
    deg_hist: dict[int, int] = field(compare=False)
    nbr_hist: dict[int, int] = field(compare=False)
    dist2_hist: dict[int, int] = field(compare=False)
    delta_min: int
    delta_max: int
    d2_min: int
    d2_max: int
    m1: int
    diameter: int | float


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def degree_profile(g: Graph) -> DegreeProfile:
    """Compute all degree-like quantities of ``g``.

    The distance-2 set of u is the union of the neighbors' neighborhoods
    minus the closed neighborhood of u, i.e. exactly the vertices at
    shortest-path distance 2.
    """
    deg = tuple(len(nbrs) for nbrs in g.adjacency)
    bits = g.neighbor_bits
    nbr_deg = tuple(sum(deg[v] for v in g.adjacency[u]) for u in range(g.n))
    dist2_deg = []
    for u in range(g.n):
        two_hop = 0
        for v in g.adjacency[u]:
            two_hop |= bits[v]
        two_hop &= ~(bits[u] | (1 << u))
        dist2_deg.append(sum(deg[w] for w in _iter_bits(two_hop)))
    dist2_deg = tuple(dist2_deg)
    return DegreeProfile(
        n=g.n,
        m=g.m,
        deg=deg,
        nbr_deg=nbr_deg,
        dist2_deg=dist2_deg,
        deg_hist=dict(sorted(Counter(deg).items())),
        nbr_hist=dict(sorted(Counter(nbr_deg).items())),
        dist2_hist=dict(sorted(Counter(dist2_deg).items())),
        delta_min=min(nbr_deg),
        delta_max=max(nbr_deg),
        d2_min=min(dist2_deg),
        d2_max=max(dist2_deg),
        m1=sum(d * d for d in deg),
        diameter=diameter(g),
    )


def _bfs_eccentricity(g: Graph, src: int) -> tuple[int, int]:
    """Return (eccentricity, number of reached vertices) from ``src``."""
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    ecc = 0
    reached = 1
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                ecc = max(ecc, dist[v])
                reached += 1
                queue.append(v)
    return ecc, reached


def diameter(g: Graph) -> int | float:
    """Largest shortest-path distance; ``math.inf`` when disconnected."""
    best = 0
    for src in range(g.n):
        ecc, reached = _bfs_eccentricity(g, src)
        if reached != g.n:
            return math.inf
        best = max(best, ecc)
    return best


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0."""
    return _bfs_eccentricity(g, 0)[1] == g.n


def is_path(g: Graph) -> bool:
    """True when the graph is a simple path (includes single vertices)."""
    if g.n == 1:
        return g.m == 0
    if g.m != g.n - 1 or not is_connected(g):
        return False
    degs = sorted(len(nbrs) for nbrs in g.adjacency)
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


# ---------------------------------------------------------------------------
# Edge-list format


def parse_edge_list(text: str) -> Graph:
    """Parse an edge-list document into a :class:`Graph`.

    An optional first line ``n <count>`` declares the vertex count, which
    permits isolated vertices.  Without it, ids must cover 0..max exactly.
    """
    declared_n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    ids: set[int] = set()
    first_content = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if first_content and tokens[0] == "n":
            first_content = False
            if len(tokens) != 2:
                raise MalformedLine(f"line {lineno}: header must be 'n <count>'")
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise MalformedLine(f"line {lineno}: bad vertex count {tokens[1]!r}")
            if declared_n < 1:
                raise MalformedLine(f"line {lineno}: vertex count must be >= 1")
            continue
        first_content = False
        if len(tokens) != 2:
            raise MalformedLine(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise MalformedLine(f"line {lineno}: non-integer vertex id in {line!r}")
        if u < 0 or v < 0:
            raise MalformedLine(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append((u, v))
        ids.add(u)
        ids.add(v)

    if declared_n is None:
        if not ids:
            raise MalformedLine("empty input: no edges and no 'n <count>' header")
        n = max(ids) + 1
        if ids != set(range(n)):
            missing = sorted(set(range(n)) - ids)
            raise NonContiguousIds(f"ids must cover 0..{n - 1}; missing {missing}")
    else:
        n = declared_n
        if ids and max(ids) >= n:
            raise NonContiguousIds(f"vertex id {max(ids)} exceeds declared n={n}")
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6 short form


def _g6_pairs(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 bit order: (0,1),(0,2),(1,2),(0,3),..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Graph:
    """Decode one short-form graph6 line (n <= 62)."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise InvalidGraph6("empty graph6 input")
    first = ord(line[0])
    if first == 126:
        raise InvalidGraph6("extended graph6 sizes (n > 62) are not supported")
    if not 63 <= first <= 125:
        raise InvalidGraph6(f"bad size character {line[0]!r}")
    n = first - 63
    if n < 1:
        raise InvalidGraph6("graph6 with zero vertices")
    pairs = _g6_pairs(n)
    need_chars = (len(pairs) + 5) // 6
    data = line[1:]
    if len(data) != need_chars:
        raise InvalidGraph6(
            f"expected {need_chars} data characters for n={n}, got {len(data)}"
        )
    bits: list[int] = []
    for ch in data:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise InvalidGraph6(f"bad data character {ch!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = [pairs[k] for k in range(len(pairs)) if bits[k]]
    return Graph.from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    """Encode a graph in short-form graph6 (requires n <= 62)."""
    if g.n > 62:
        raise InvalidGraph6("short-form graph6 supports at most 62 vertices")
    pairs = _g6_pairs(g.n)
    bits = [1 if g.has_edge(i, j) else 0 for i, j in pairs]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


# ---------------------------------------------------------------------------
# Small named families


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def star_graph(leaves: int) -> Graph:
    """Star with one hub (vertex 0) and ``leaves`` pendant vertices."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
