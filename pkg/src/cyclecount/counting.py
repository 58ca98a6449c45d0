"""Exact induced k-cycle counting: a subset oracle, a canonical-path
enumerator, rooted variants, and the neighborhood-swap graph transform.

The fast enumerator generates each induced k-cycle exactly once: the cycle is
rooted at its minimum-label vertex, traversal direction is broken by requiring
the second path vertex to carry a smaller label than the last one, and partial
paths grow only through vertices adjacent to the tip and outside a forbidden
bitset (the union of closed neighborhoods of all path vertices except the
tip). The path closes back to the root only through a vertex adjacent to both
tip and root and non-adjacent to every interior path vertex. Rooted counts
reuse the same machinery with the root pinned instead of minimal.

Python integers are arbitrary precision, so totals can never overflow.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import Graph


@dataclass
class CountReport:
    """Exact counting result; the rooted maps are filled only on request."""

    k: int
    total: int
    rooted: dict[int, int] | None = None
    edge_rooted: dict[tuple[int, int], int] | None = None
    cherry_rooted: dict[tuple[int, int, int], int] | None = None

    def to_json_dict(self) -> dict:
        out: dict = {"k": self.k, "total": self.total}
        if self.rooted is not None:
            out["rooted"] = {str(v): c for v, c in sorted(self.rooted.items())}
        if self.edge_rooted is not None:
            out["edge_rooted"] = {
                f"{u},{w}": c for (u, w), c in sorted(self.edge_rooted.items())
            }
        if self.cherry_rooted is not None:
            out["cherry_rooted"] = {
                f"{u},{v},{w}": c for (u, v, w), c in sorted(self.cherry_rooted.items())
            }
        return out


def _subset_is_cycle(rows, combo, mask) -> bool:
    # Induced subgraph on `mask` is a single cycle: all degrees 2, connected.
    for v in combo:
        if (rows[v] & mask).bit_count() != 2:
            return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nxt |= rows[low.bit_length() - 1]
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def is_induced_cycle(g: Graph, vertices) -> bool:
    """True iff the given vertex set induces a cycle in g (needs |set| >= 3)."""
    vertices = list(vertices)
    vs = sorted(set(vertices))
    if len(vs) != len(vertices):
        raise ValueError("duplicate vertices in claimed cycle")
    if len(vs) < 3:
        raise ValueError("an induced cycle needs at least 3 vertices")
    mask = 0
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} leaves 0..{g.n - 1}")
        mask |= 1 << v
    return _subset_is_cycle(g.rows, vs, mask)


def count_oracle(g: Graph, k: int, rooted: bool = False) -> CountReport:
    """Brute-force induced k-cycle count over all k-subsets (3 <= k <= n).

    Definitional reference implementation: no symmetry breaking, no pruning.
    """
    if not 3 <= k <= g.n:
        raise ValueError(f"need 3 <= k <= n={g.n}, got k={k}")
    rows = g.rows
    bit = [1 << v for v in range(g.n)]
    total = 0
    per_vertex = [0] * g.n if rooted else None
    for combo in itertools.combinations(range(g.n), k):
        mask = 0
        for v in combo:
            mask |= bit[v]
        if _subset_is_cycle(rows, combo, mask):
            total += 1
            if per_vertex is not None:
                for v in combo:
                    per_vertex[v] += 1
    report = CountReport(k=k, total=total)
    if per_vertex is not None:
        report.rooted = dict(enumerate(per_vertex))
    return report


def _complete(adj, tip, forb, root_closed, adj_root, close_mask, allowed, remaining, wbit):
    """Count induced completions of a partial cycle path back to its root.

    forb: union of closed neighborhoods of the non-root, non-tip path
    vertices. root_closed: closed neighborhood of the root. close_mask:
    extra bitmask applied to the final vertex (direction tie-break and root
    exclusion). allowed: label mask for all new vertices. wbit: if nonzero,
    a single obligatory vertex that must still appear.
    """
    if wbit and wbit & forb:
        return 0
    if remaining == 1:
        cand = adj[tip] & adj_root & ~forb & close_mask & allowed
        if wbit:
            cand &= wbit
        return cand.bit_count()
    total = 0
    cand = adj[tip] & ~forb & ~root_closed & allowed
    forb2 = forb | adj[tip] | (1 << tip)
    while cand:
        low = cand & -cand
        cand ^= low
        total += _complete(
            adj, low.bit_length() - 1, forb2, root_closed, adj_root,
            close_mask, allowed, remaining - 1, wbit & ~low,
        )
    return total


def _cycles_at_root(g: Graph, k: int, root: int, min_rooted: bool, wbit: int = 0) -> int:
    """Induced k-cycles through `root`, each counted exactly once.

    min_rooted restricts all other vertices to labels above the root (the
    global canonical form); otherwise the root is merely pinned. Direction
    symmetry is always broken by second-vertex < last-vertex.
    """
    adj = g.rows
    full = (1 << g.n) - 1
    allowed = full & ~((1 << (root + 1)) - 1) if min_rooted else full
    root_bit = 1 << root
    adj_root = adj[root]
    root_closed = adj_root | root_bit
    total = 0
    cand = adj_root & allowed
    while cand:
        low = cand & -cand
        cand ^= low
        p1 = low.bit_length() - 1
        close_mask = ~((1 << (p1 + 1)) - 1) & ~root_bit
        total += _complete(
            adj, p1, 0, root_closed, adj_root, close_mask, allowed, k - 2, wbit & ~low
        )
    return total


def _count_roots_block(args) -> int:
    g, k, roots = args
    return sum(_cycles_at_root(g, k, r, True) for r in roots)


def count_fast(g: Graph, k: int, rooted: bool = False, threads: int = 1) -> CountReport:
    """Induced k-cycle count via canonical path extension (4 <= k <= n).

    With threads > 1 the root loop is partitioned across worker processes;
    the reduction is integer addition, so results are identical regardless
    of thread count.
    """
    if not 4 <= k <= g.n:
        raise ValueError(f"need 4 <= k <= n={g.n}, got k={k}")
    if threads > 1:
        blocks = [(g, k, list(range(start, g.n, threads))) for start in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            total = sum(pool.map(_count_roots_block, blocks))
    else:
        total = sum(_cycles_at_root(g, k, r, True) for r in range(g.n))
    report = CountReport(k=k, total=total)
    if rooted:
        report.rooted = {v: count_rooted(g, k, v) for v in range(g.n)}
    return report


def count_rooted(g: Graph, k: int, v: int) -> int:
    """Number of induced k-cycles containing the vertex v."""
    if not 4 <= k <= g.n:
        raise ValueError(f"need 4 <= k <= n={g.n}, got k={k}")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} leaves 0..{g.n - 1}")
    return _cycles_at_root(g, k, v, False)


def count_edge_rooted(g: Graph, k: int, v: int, w: int) -> int:
    """Number of induced k-cycles containing both endpoints of the edge vw.

    Adjacent vertices inside an induced cycle are necessarily consecutive on
    it, so this equals the number of cycles traversing vw as a cycle edge.
    """
    if not 4 <= k <= g.n:
        raise ValueError(f"need 4 <= k <= n={g.n}, got k={k}")
    if not g.has_edge(v, w):
        raise ValueError(f"({v}, {w}) is not an edge")
    adj = g.rows
    full = (1 << g.n) - 1
    root_bit = 1 << v
    return _complete(
        adj, w, 0, adj[v] | root_bit, adj[v], ~root_bit, full, k - 2, 0
    )


def count_cherry_rooted(g: Graph, k: int, u: int, v: int, w: int) -> int:
    """Number of induced k-cycles containing the induced 2-path u-v-w.

    Requires u, w to be distinct non-adjacent neighbors of v. Since u and w
    are adjacent to v, any induced cycle through all three must use u and w
    as the cycle neighbors of v.
    """
    if not 4 <= k <= g.n:
        raise ValueError(f"need 4 <= k <= n={g.n}, got k={k}")
    if u == w:
        raise ValueError("cherry endpoints must be distinct")
    if not (g.has_edge(u, v) and g.has_edge(v, w)):
        raise ValueError(f"{u} and {w} must both be neighbors of {v}")
    if g.has_edge(u, w):
        raise ValueError(f"cherry endpoints {u}, {w} must be non-adjacent")
    adj = g.rows
    full = (1 << g.n) - 1
    root_bit = 1 << u
    return _complete(
        adj, w, adj[v] | (1 << v), adj[u] | root_bit, adj[u], ~root_bit, full, k - 3, 0
    )


def count_containing_pair(g: Graph, k: int, v: int, w: int) -> int:
    """Number of induced k-cycles containing both v and w (any adjacency)."""
    if v == w:
        raise ValueError("pair count needs two distinct vertices")
    if not 4 <= k <= g.n:
        raise ValueError(f"need 4 <= k <= n={g.n}, got k={k}")
    return _cycles_at_root(g, k, v, False, wbit=1 << w)


def symmetrise(g: Graph, v_minus: int, v_plus: int) -> Graph:
    """Replace v_minus by a non-adjacent twin of v_plus.

    All edges at v_minus are deleted and v_minus is reconnected to exactly
    the neighbors of v_plus (excluding v_plus itself), producing a
    non-adjacent pair with identical neighborhoods. For k >= 5 no induced
    k-cycle can contain such a twin pair, which yields the exact update
    identity for the global count; for k = 4 twins can share a cycle and the
    identity fails.
    """
    if v_minus == v_plus:
        raise ValueError("symmetrise needs two distinct vertices")
    twin_row = g.rows[v_plus] & ~(1 << v_minus)
    rows = []
    for u in range(g.n):
        if u == v_minus:
            rows.append(twin_row)
        else:
            row = g.rows[u] & ~(1 << v_minus)
            if (twin_row >> u) & 1:
                row |= 1 << v_minus
            rows.append(row)
    return Graph(g.n, rows)
