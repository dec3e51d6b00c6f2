"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion lines;
the slowest criterion (the m = 43 search corroboration) takes a few minutes.
"""

import math
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from stlab import (
    Graph,
    RotationMove,
    bound_value,
    certificate,
    complete_graph,
    connected_graphs,
    contains_subgraph,
    decode_graph6,
    extremal_construction,
    find_theta,
    inspect,
    is_complete_bipartite,
    k_join,
    local_search,
    random_connected_graph,
    rotate_edges,
    spectral_radius,
    theta_graph,
    verify_class,
)

from oracles import connected_table_is_consistent, labeled_level_certificates

SPEC_133 = (1, 3, 3)


def _report(number: int, description: str, ok: bool, elapsed: float) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"criterion {number:2d} {status} ({elapsed:6.1f}s) {description}")
    assert ok


def test_criterion_01_construction_value():
    start = time.time()
    lam = spectral_radius(k_join(2, 21)).lam
    elapsed = time.time() - start
    ok = abs(lam - 7.0) <= 1e-9 and elapsed < 1.0
    _report(1, "lambda(K_2 v 21K_1) = 7 within 1e-9 in under 1s", ok, elapsed)


def test_criterion_02_construction_family():
    start = time.time()
    ok = True
    for k in (2, 3, 4):
        for t in range(1, 11):
            g = k_join(k, t)
            lam = spectral_radius(g).lam
            if abs(lam - bound_value(k, g.m)) > 1e-8:
                ok = False
    elapsed = time.time() - start
    ok = ok and elapsed < 5.0
    _report(2, "lambda(K_k v tK_1) meets the bound for k in 2..4, t in 1..10", ok, elapsed)


def test_criterion_03_constructions_are_free():
    start = time.time()
    ok = all(find_theta(k_join(2, t), SPEC_133) is None for t in range(1, 31))
    ok = ok and all(find_theta(k_join(3, t), (1, 2, 5)) is None for t in range(1, 11))
    elapsed = time.time() - start
    ok = ok and elapsed < 10.0
    _report(3, "book graphs avoid (1,3,3) and K_3 joins avoid (1,2,5)", ok, elapsed)


def test_criterion_04_oracle_equivalence():
    start = time.time()
    specs = ((1, 3, 3), (1, 2, 3), (2, 2, 2))
    patterns = {spec: theta_graph(*spec) for spec in specs}
    ok = True
    for m in range(1, 9):
        for g in connected_graphs(m):
            for spec, pattern in patterns.items():
                if (find_theta(g, spec) is None) != (contains_subgraph(g, pattern) is None):
                    ok = False
    elapsed = time.time() - start
    ok = ok and elapsed < 120.0
    _report(4, "theta detector agrees with the generic matcher on all m <= 8", ok, elapsed)


def test_criterion_05_triangle_free_radius_cap():
    start = time.time()
    triangle = complete_graph(3)
    ok = True
    for m in range(1, 10):
        root = math.sqrt(m)
        for g in connected_graphs(m):
            if contains_subgraph(g, triangle) is not None:
                continue
            lam = spectral_radius(g).lam
            if lam > root + 1e-9:
                ok = False
            if (abs(lam - root) <= 1e-9) != is_complete_bipartite(g):
                ok = False
    elapsed = time.time() - start
    ok = ok and elapsed < 120.0
    _report(5, "triangle-free radius <= sqrt(m), tight exactly on complete bipartite",
            ok, elapsed)


def test_criterion_06_rotation_monotonicity():
    start = time.time()
    rng = random.Random(60601)
    cases = 0
    ok = True
    while cases < 200:
        n = rng.randint(4, 12)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        g = random_connected_graph(n, m, rng)
        result = spectral_radius(g)
        u, x = result.u_star, result.x
        choice = None
        for v in range(n):
            if v == u or x[v] > x[u] - 0.01:
                continue
            movable = g.adj[v] & ~g.adj[u] & ~(1 << u)
            if movable:
                choice = (v, movable)
                break
        if choice is None:
            continue
        v, movable = choice
        moved = frozenset(i for i in range(n) if (movable >> i) & 1)
        rotated = rotate_edges(g, RotationMove(u, v, moved))
        if spectral_radius(rotated).lam <= result.lam + 1e-9:
            ok = False
        cases += 1
    elapsed = time.time() - start
    ok = ok and elapsed < 60.0
    _report(6, "rotation toward the extremal vertex raised lambda in 200/200 cases",
            ok, elapsed)


def test_criterion_07_decomposition_identities():
    start = time.time()
    rng = random.Random(70701)
    ok = True
    for _ in range(300):
        n = rng.randint(3, 12)
        m = rng.randint(n - 1, n * (n - 1) // 2)
        report = inspect(random_connected_graph(n, m, rng))
        tolerance = 1e-8 * (1 + report.lam ** 2)
        if report.identity_gap != 0 or report.eig1_gap > tolerance or report.eig2_gap > tolerance:
            ok = False
    book = inspect(k_join(2, 21))
    if abs(book.lam ** 2 - book.lam - 42.0) > 1e-8:
        ok = False
    if book.edges_outside != 0 or book.tree_component_count != 1 or book.neighbors_isolated != ():
        ok = False
    elapsed = time.time() - start
    ok = ok and elapsed < 60.0
    _report(7, "edge identity exact and eigen identities within 1e-8(1+lambda^2); "
               "book graph in the tight configuration", ok, elapsed)


def test_criterion_08_small_m_landscape():
    start = time.time()
    ok = True
    reports = {m: verify_class(m, SPEC_133) for m in range(1, 10)}
    # the reference bound must fail at m = 7 with the argmax above 3
    if reports[7].bound_holds is not False or reports[7].max_lambda <= 3.0 + 1e-9:
        ok = False
    # bound failures are actually certified by counterexamples from m = 6 on
    for m in range(6, 10):
        if reports[m].bound_holds is not False or not reports[m].counterexamples:
            ok = False
    # K_5 at m = 10: pattern-free by the order guard, radius 4 above the bound
    k5 = complete_graph(5)
    if find_theta(k5, SPEC_133) is not None:
        ok = False
    if not spectral_radius(k5).lam > bound_value(2, 10) + 1e-9:
        ok = False
    extended = verify_class(10, SPEC_133)
    k5_cert = certificate(k5)
    if not any(certificate(decode_graph6(g6)) == k5_cert for g6, _ in extended.argmax):
        ok = False
    # the reports state the connected reduction and the desk-scale limitation
    joined = " ".join(reports[9].notes)
    if "connected" not in joined or "m >= 43" not in joined or "exhaustive" not in joined:
        ok = False
    elapsed = time.time() - start
    ok = ok and elapsed < 600.0
    _report(8, "landscape documents bound failure below the large-m regime "
               "(m=7 argmax > 3, K_5 at m=10) and states the desk-scale limits",
            ok, elapsed)


def _search_run(seed: int):
    report = local_search(43, SPEC_133, budget=100_000, seed=seed, start="random")
    best = decode_graph6(report.best_g6)
    contract = (
        best.m == 43
        and all(row != 0 for row in best.adj)
        and find_theta(best, SPEC_133) is None
    )
    return report.best_lambda, contract


def test_criterion_09_search_corroboration():
    start = time.time()
    ok = True
    with ProcessPoolExecutor(max_workers=2) as pool:
        outcomes = list(pool.map(_search_run, range(20)))
    for best_lambda, contract in outcomes:
        if best_lambda > 7.0 + 1e-9 or not contract:
            ok = False
    anchored = local_search(43, SPEC_133, budget=100_000, seed=0, start="construction")
    if anchored.accepted != 0:
        ok = False
    if abs(anchored.best_lambda - 7.0) > 1e-9:
        ok = False
    elapsed = time.time() - start
    ok = ok and elapsed < 1800.0
    _report(9, "20 seeded searches at m=43 never beat 7 and the construction "
               "is a local maximum", ok, elapsed)


def test_criterion_10_enumeration_regression():
    start = time.time()
    ok = True
    # exact set equality against the labeled brute-force oracle
    for m in range(1, 7):
        generated = {certificate(g) for g in connected_graphs(m)}
        if generated != labeled_level_certificates(m):
            ok = False
    # frozen regression constants, previously confirmed by the labeled oracle
    # (m = 7) and the cycle-index consistency check (m = 7 and 8)
    if sum(1 for _ in connected_graphs(7)) != 79:
        ok = False
    if sum(1 for _ in connected_graphs(8)) != 227:
        ok = False
    table = Counter()
    for m in range(1, 9):
        for g in connected_graphs(m):
            table[(g.n, m)] += 1
    if not connected_table_is_consistent(table, 8):
        ok = False
    elapsed = time.time() - start
    ok = ok and elapsed < 300.0
    _report(10, "enumeration matches the labeled oracle at m <= 6; 79 and 227 "
                "classes at m = 7, 8", ok, elapsed)
