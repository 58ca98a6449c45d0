"""Reference graph constructions: cycles, complete (bi)partite graphs,
blow-ups, iterated balanced blow-ups, seeded random graphs, and the Kneser
graph on 2-subsets of a 5-set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graph import Graph, from_edge_list


def cycle(k: int) -> Graph:
    """The k-cycle 0-1-...-(k-1)-0; needs k >= 3."""
    if k < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A = 0..a-1 and side B = a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError("both sides of a complete bipartite graph need a vertex")
    mask_a = (1 << a) - 1
    mask_b = ((1 << (a + b)) - 1) ^ mask_a
    return Graph(a + b, [mask_b] * a + [mask_a] * b)


def _is_cycle_graph(g: Graph) -> bool:
    if g.n < 3 or any(row.bit_count() != 2 for row in g.rows):
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= g.rows[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def blow_up(base: Graph, part_sizes) -> Graph:
    """Replace vertex i of base by an independent set of part_sizes[i]
    vertices; parts of adjacent base vertices are completely joined.

    Parts are laid out contiguously in base-vertex order, so part i occupies
    indices sum(sizes[:i]) .. sum(sizes[:i+1])-1.
    """
    sizes = list(part_sizes)
    if len(sizes) != base.n:
        raise ValueError(f"need {base.n} part sizes, got {len(sizes)}")
    if any(t < 1 for t in sizes):
        raise ValueError("every part needs at least one vertex")
    offsets = [0]
    for t in sizes:
        offsets.append(offsets[-1] + t)
    n = offsets[-1]
    part_mask = [((1 << sizes[i]) - 1) << offsets[i] for i in range(base.n)]
    rows = []
    for i in range(base.n):
        row = 0
        nbrs = base.rows[i]
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            row |= part_mask[low.bit_length() - 1]
        rows.extend([row] * sizes[i])
    return Graph(n, rows)


def balanced_part_sizes(n: int, k: int) -> list[int]:
    """k part sizes summing to n, first n mod k parts one larger."""
    if n < k:
        raise ValueError(f"cannot split {n} vertices into {k} nonempty parts")
    q, r = divmod(n, k)
    return [q + 1] * r + [q] * (k - r)


def iterated_blow_up(base: Graph, depth: int) -> Graph:
    """Depth-m self-similar blow-up of a cycle.

    Depth 1 is the base k-cycle itself; depth m replaces each vertex of the
    base by a copy of the depth-(m-1) graph, with complete joins between
    copies sitting on adjacent base vertices. The result has k**m vertices.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    if not _is_cycle_graph(base):
        raise ValueError("iterated blow-up is defined over a cycle base")
    if depth == 1:
        return base
    sub = iterated_blow_up(base, depth - 1)
    k = base.n
    n_sub = sub.n
    n = k * n_sub
    sub_full = (1 << n_sub) - 1
    part_mask = [sub_full << (p * n_sub) for p in range(k)]
    rows = []
    for p in range(k):
        join = 0
        nbrs = base.rows[p]
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            join |= part_mask[low.bit_length() - 1]
        shift = p * n_sub
        for v in range(n_sub):
            rows.append((sub.rows[v] << shift) | join)
    return Graph(n, rows)


def iterated_blowup_cycle_count(k: int, depth: int) -> int:
    """Exact induced k-cycle count of the depth-m iterated blow-up of a
    k-cycle: one vertex per top-level part in every way, plus the cycles
    lying inside a single part. N(1) = 1, N(m) = (k**(m-1))**k + k*N(m-1).

    Requires k >= 5: at k = 4, two vertices from each of two adjacent parts
    induce a K_{2,2}, an extra 4-cycle the decomposition does not see.
    """
    if k < 5 or depth < 1:
        raise ValueError("need k >= 5 and depth >= 1")
    count = 1
    for m in range(2, depth + 1):
        count = (k ** (m - 1)) ** k + k * count
    return count


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from the pinned PCG64 generator.

    One uniform draw per vertex pair in row-major order ((0,1), (0,2), ...,
    (n-2,n-1)); the pair (u, w) becomes an edge iff its draw is < p. The
    generator family is fixed, so a (n, p, seed) triple names one graph on
    every platform.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = np.random.Generator(np.random.PCG64(seed))
    draws = rng.random(n * (n - 1) // 2)
    rows = [0] * n
    idx = 0
    for u in range(n):
        for w in range(u + 1, n):
            if draws[idx] < p:
                rows[u] |= 1 << w
                rows[w] |= 1 << u
            idx += 1
    return Graph(n, rows)


def petersen() -> Graph:
    """Kneser graph on the 2-subsets of a 5-set: vertices are the 10 pairs in
    lexicographic order, adjacent iff disjoint. 3-regular, girth 5.
    """
    pairs = list(itertools.combinations(range(5), 2))
    edges = [
        (i, j)
        for i in range(10)
        for j in range(i + 1, 10)
        if not set(pairs[i]) & set(pairs[j])
    ]
    return from_edge_list(10, edges)


@dataclass(frozen=True)
class BlowUpSpec:
    """Declarative recipe for (iterated) blow-ups of a cycle.

    base_k: cycle length of the base. part_sizes: one size per base vertex
    (ignored when depth > 1, which uses the self-similar balanced layout).
    """

    base_k: int
    part_sizes: tuple[int, ...] = ()
    depth: int = 1

    def build(self) -> Graph:
        base = cycle(self.base_k)
        if self.depth > 1:
            return iterated_blow_up(base, self.depth)
        sizes = self.part_sizes or tuple([1] * self.base_k)
        return blow_up(base, sizes)
