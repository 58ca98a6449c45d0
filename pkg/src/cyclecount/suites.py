"""Verification suites shared by the CLI and the acceptance tests.

Each suite returns a JSON-ready dict {"suite", "passed", "checks": [...]}
where every check carries a name, a passed flag, and enough detail to see
what was compared. All randomness is seeded, so suite output is
deterministic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import analytic
from .bounds import (
    RATIO_UPPER,
    REL_EPS,
    cherry_bound,
    edge_bound,
    global_pg_bound,
    vertex_bound,
)
from .corpus import random_instances, standard_corpus
from .counting import (
    count_cherry_rooted,
    count_containing_pair,
    count_edge_rooted,
    count_fast,
    count_rooted,
    is_induced_cycle,
    symmetrise,
)
from .graph import (
    codegree,
    from_edge_list,
    nonadjacent_neighbor_pairs,
    triple_codegree,
)

IDENTITY_SEED = 20240801
SYMMETRISE_SEED = 20240802


def _suite(name: str, checks: list[dict]) -> dict:
    return {
        "suite": name,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def identities_suite(num_graphs: int = 100, ks=(5, 6, 7),
                     pair_samples: int = 500) -> dict:
    """Exact combinatorial identities: vertex/edge/cherry handshakes on
    random graphs and the neighborhood-swap count identity (k >= 5),
    including its explicit k = 4 failure witness."""
    checks = []
    graphs = random_instances(num_graphs, 8, 14, IDENTITY_SEED)
    handshake_fail = []
    for i, (name, g) in enumerate(graphs):
        k = ks[i % len(ks)]
        report = count_fast(g, k, rooted=True)
        if k * report.total != sum(report.rooted.values()):
            handshake_fail.append((name, k, "vertex"))
        for v in range(g.n):
            edge_sum = sum(count_edge_rooted(g, k, v, w) for w in g.neighbors(v))
            if edge_sum != 2 * report.rooted[v]:
                handshake_fail.append((name, k, f"edge@{v}"))
            cherry_sum = sum(
                count_cherry_rooted(g, k, u, v, w)
                for u, w in nonadjacent_neighbor_pairs(g, v)
            )
            if cherry_sum != 2 * report.rooted[v]:
                handshake_fail.append((name, k, f"cherry@{v}"))
    checks.append({
        "name": "handshake_identities",
        "passed": not handshake_fail,
        "graphs": num_graphs,
        "ks": list(ks),
        "failures": handshake_fail,
    })

    sym_fail = []
    graphs = random_instances((pair_samples + 9) // 10, 8, 12, SYMMETRISE_SEED)
    done = 0
    gi = 0
    while done < pair_samples:
        name, g = graphs[gi % len(graphs)]
        k = (5, 6)[done % 2]
        v_minus = done % g.n
        v_plus = (done * 7 + 3) % g.n
        if v_minus == v_plus:
            v_plus = (v_plus + 1) % g.n
        g2 = symmetrise(g, v_minus, v_plus)
        lhs = count_fast(g2, k).total
        rhs = (
            count_fast(g, k).total
            - count_rooted(g, k, v_minus)
            + count_rooted(g, k, v_plus)
            - count_containing_pair(g, k, v_minus, v_plus)
        )
        if lhs != rhs:
            sym_fail.append((name, k, v_minus, v_plus, lhs, rhs))
        done += 1
        gi += 1
    checks.append({
        "name": "symmetrise_identity_k_ge_5",
        "passed": not sym_fail,
        "instances": pair_samples,
        "failures": sym_fail,
    })

    # k = 4 counterexample: an isolated vertex turned into a twin of the
    # middle of a path closes a brand-new 4-cycle through both twins
    g = from_edge_list(4, [(1, 2), (2, 3)])
    g2 = symmetrise(g, 0, 2)
    lhs = count_fast(g2, 4).total
    rhs = (
        count_fast(g, 4).total
        - count_rooted(g, 4, 0)
        + count_rooted(g, 4, 2)
        - count_containing_pair(g, 4, 0, 2)
    )
    twin_cycle = is_induced_cycle(g2, [0, 1, 2, 3])
    checks.append({
        "name": "symmetrise_identity_fails_at_k4",
        "passed": lhs != rhs and twin_cycle and lhs == 1 and rhs == 0,
        "lhs": lhs,
        "rhs": rhs,
        "twin_pair_shares_k4_cycle": twin_cycle,
    })
    return _suite("identities", checks)


def bounds_suite(ks=(5, 6, 7), rel_eps: float = REL_EPS) -> dict:
    """Zero tolerance soundness sweep of all four count ceilings over the
    corpus: per-vertex for every vertex, per-edge for every edge, cherry for
    every induced 2-path (skipped on heavy entries), and the global bound.
    """
    checks = []
    violations = []
    evaluated = {"vertex": 0, "edge": 0, "cherry": 0, "global": 0}
    for entry in standard_corpus():
        g = entry.graph
        n = g.n
        for k in ks:
            if k > n:
                continue
            report = count_fast(g, k, rooted=True)
            gb = global_pg_bound(n, k)
            evaluated["global"] += 1
            if report.total > gb * (1 + rel_eps):
                violations.append((entry.name, k, "global", report.total, gb))
            degs = g.degree_sequence()
            for v in range(n):
                vb = vertex_bound(n, k, degs[v])
                evaluated["vertex"] += 1
                if report.rooted[v] > vb * (1 + rel_eps):
                    violations.append((entry.name, k, f"vertex@{v}", report.rooted[v], vb))
            if entry.heavy:
                continue
            for u, w in g.edges():
                actual = count_edge_rooted(g, k, u, w)
                eb = edge_bound(n, k, degs[u], degs[w], codegree(g, u, w))
                evaluated["edge"] += 1
                if actual > eb * (1 + rel_eps):
                    violations.append((entry.name, k, f"edge@{u},{w}", actual, eb))
            if k < 6:
                continue
            for v in range(n):
                for u, w in nonadjacent_neighbor_pairs(g, v):
                    actual = count_cherry_rooted(g, k, u, v, w)
                    cb = cherry_bound(
                        n, k, degs[u], degs[v], degs[w],
                        codegree(g, u, v), codegree(g, v, w), codegree(g, u, w),
                        triple_codegree(g, u, v, w),
                    )
                    evaluated["cherry"] += 1
                    if actual > cb * (1 + rel_eps):
                        violations.append(
                            (entry.name, k, f"cherry@{u},{v},{w}", actual, cb)
                        )
    checks.append({
        "name": "bound_soundness_zero_violations",
        "passed": not violations,
        "evaluated": evaluated,
        "rel_eps": rel_eps,
        "violations": violations,
    })
    return _suite("bounds", checks)


def headline_suite(ks=(6, 7, 8)) -> dict:
    """Per-vertex ceiling at the minimum-degree vertex over the corpus.

    For each graph and k, the scaled degree c = k d / n of the minimum
    degree vertex is classified into the proof's case split (c < 1, the
    bracket 1 <= c < 2, or c >= 2) and the exact rooted count is checked
    against (128e/81)(n/k)^(k-1) (1 + 10/n).
    """
    checks = []
    failures = []
    cases = {"low": 0, "bracket": 0, "high": 0}
    for entry in standard_corpus():
        g = entry.graph
        n = g.n
        v = g.min_degree_vertex()
        d = g.degree(v)
        for k in ks:
            if k > n:
                continue
            c = Fraction(k * d, n)
            if c < 1:
                case = "low"
            elif c < 2:
                case = "bracket"
            else:
                case = "high"
            cases[case] += 1
            actual = count_rooted(g, k, v)
            ceiling = RATIO_UPPER * (n / k) ** (k - 1) * (1 + 10 / n)
            if actual > ceiling * (1 + REL_EPS):
                failures.append((entry.name, k, str(c), case, actual, ceiling))
    checks.append({
        "name": "min_degree_vertex_ceiling",
        "passed": not failures,
        "case_counts": cases,
        "failures": failures,
    })
    return _suite("headline", checks)


def analytic_suite() -> dict:
    """All scalar optimization verifications at their contract parameters."""
    checks = []

    def run(name, fn, expect=None):
        try:
            res = fn()
        except analytic.VerificationError as exc:
            checks.append({"name": name, "passed": False, "error": str(exc)})
            return
        entry = {"name": name, "passed": True, "max_value": res.max_value,
                 "argmax": list(res.argmax), "on_boundary": res.on_boundary,
                 "certified_upper": res.certified_upper}
        if expect is not None:
            err = abs(res.max_value - expect[0])
            entry["closed_form"] = expect[0]
            entry["abs_err"] = err
            if err > expect[1]:
                entry["passed"] = False
        checks.append(entry)

    run("f_shape", analytic.f_properties, (1 / math.e, 1e-12))
    run("degree_ratio_ranges", analytic.verify_rangec, (math.e**2 / 2, 1e-12))
    for c in (2.0, 2.5, 3.0, 4.0):
        run(f"slack_product_c{c}", lambda c=c: analytic.maximize_g_c(c))
    for params in ((1.0, 0.0, 0.0, 0.0), (1.5, 0.0, 0.0, 0.0),
                   (1.9, 0.3, 0.2, 0.1), (1.2, 1.0, 0.5, 0.25)):
        run(
            f"two_ended_slack_c{params[0]}",
            lambda p=params: analytic.maximize_g_uw(*p),
        )
    for c in (1.0, 1.2, 1.5, 2.0):
        for m in (1, 2):
            z = min(c, 1.5)
            closed = m * z**3 * math.exp(-2 * z)
            run(
                f"product_sum_c{c}_m{m}",
                lambda c=c, m=m: analytic.solve_A(c, m),
                (closed, 1e-3),
            )
    run("headline_constant", analytic.final_constant, (RATIO_UPPER, 1e-9))
    for c in (2.0, 3.0):
        run(f"mindeg_chain_c{c}", lambda c=c: analytic.verify_mindeg_chain(c))
    return _suite("analytic", checks)


def run_suites(which: str = "all") -> list[dict]:
    names = ("identities", "bounds", "analytic", "headline")
    if which != "all" and which not in names:
        raise ValueError(f"unknown suite {which!r}; choose from {names} or 'all'")
    out = []
    if which in ("all", "analytic"):
        out.append(analytic_suite())
    if which in ("all", "identities"):
        out.append(identities_suite())
    if which in ("all", "bounds"):
        out.append(bounds_suite())
    if which in ("all", "headline"):
        out.append(headline_suite())
    return out
