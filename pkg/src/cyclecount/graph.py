"""Immutable bitset-backed simple graphs and exact rational degree statistics.

Vertices are dense integers 0..n-1. Each adjacency row is a Python int used
as a bitset, so neighborhood algebra is plain integer bit arithmetic and
popcounts, and all derived counts are exact.
"""

from __future__ import annotations

from fractions import Fraction

MAX_VERTICES = 1 << 16


class Graph:
    """Undirected simple graph with one bitset adjacency row per vertex.

    Instances are immutable after construction (rows are stored as a tuple
    and never mutated), so they can be shared freely across worker threads
    or processes. Construction validates symmetry and irreflexivity.
    """

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows) -> None:
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"adjacency row of vertex {v} leaves 0..{n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v in range(n):
            row = rows[v]
            while row:
                low = row & -row
                row ^= low
                w = low.bit_length() - 1
                if not (rows[w] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        # default pickling would go through __setattr__, which is blocked
        return (Graph, (self.n, self.rows))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, w: int) -> bool:
        return bool((self.rows[u] >> w) & 1)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of v in increasing order."""
        out = []
        row = self.rows[v]
        while row:
            low = row & -row
            row ^= low
            out.append(low.bit_length() - 1)
        return out

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, w) with u < w, lexicographically ordered."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            w = u + 1
            while row:
                if row & 1:
                    out.append((u, w))
                row >>= 1
                w += 1
        return out

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree_sequence(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree_vertex(self) -> int:
        """Lowest-index vertex of minimum degree."""
        degs = self.degree_sequence()
        return degs.index(min(degs))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def from_edge_list(n: int, edges) -> Graph:
    """Build a graph from an iterable of (u, w) pairs; duplicates collapse.

    Raises ValueError on loops or endpoints outside 0..n-1.
    """
    rows = [0] * n
    for u, w in edges:
        if u == w:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= w < n):
            raise ValueError(f"edge ({u}, {w}) leaves 0..{n - 1}")
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return Graph(n, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def codegree(g: Graph, u: int, w: int) -> int:
    """Number of common neighbors of the distinct vertices u and w."""
    if u == w:
        raise ValueError("codegree needs two distinct vertices")
    return (g.rows[u] & g.rows[w]).bit_count()


def triple_codegree(g: Graph, u: int, v: int, w: int) -> int:
    """Number of common neighbors of three pairwise distinct vertices."""
    if u == v or u == w or v == w:
        raise ValueError("triple codegree needs three distinct vertices")
    return (g.rows[u] & g.rows[v] & g.rows[w]).bit_count()


def nonadjacent_neighbor_pairs(g: Graph, v: int) -> list[tuple[int, int]]:
    """Ordered pairs (u, w) of distinct neighbors of v with u, w non-adjacent.

    Both orders of each unordered pair are returned, so the list has even
    length; it is the rooted ground set for cherry-based counting.
    """
    nbrs = g.neighbors(v)
    out = []
    for u in nbrs:
        for w in nbrs:
            if u != w and not g.has_edge(u, w):
                out.append((u, w))
    return out


class DegreeProfile:
    """Degree, codegree, and triple-codegree statistics scaled by k/n.

    All values are exact `fractions.Fraction`s: c(v) = k*deg(v)/n, and the
    pairwise/triple variants scale codegrees the same way. Per-vertex values
    are precomputed; the pairwise and triple maps are evaluated on demand
    (pure reads of the immutable graph, hence thread-safe without locks).
    """

    __slots__ = ("graph", "k", "c")

    def __init__(self, graph: Graph, k: int) -> None:
        if k < 4:
            raise ValueError(f"profile needs cycle length k >= 4, got {k}")
        self.graph = graph
        self.k = k
        self.c = {v: Fraction(k * graph.degree(v), graph.n) for v in range(graph.n)}

    def xbar(self, u: int, w: int) -> Fraction:
        """Scaled codegree k*|N(u) & N(w)|/n."""
        return Fraction(self.k * codegree(self.graph, u, w), self.graph.n)

    def zbar(self, u: int, v: int, w: int) -> Fraction:
        """Scaled triple codegree k*|N(u) & N(v) & N(w)|/n."""
        return Fraction(self.k * triple_codegree(self.graph, u, v, w), self.graph.n)


def profile(g: Graph, k: int) -> DegreeProfile:
    """Exact rational degree statistics of g scaled by k/n (needs k >= 4)."""
    return DegreeProfile(g, k)
