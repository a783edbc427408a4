"""Acceptance suite: one test per criterion, each logging a PASS/FAIL line.

The lines are repeated in the "acceptance criteria" section of the pytest
terminal summary.
"""

import hashlib
import math
import random
import time

import numpy as np

from lgroot import Graph, NotALineGraph, SymBitMatrix, generate_er, lam_of, matrix_relabeling, reconstruct
from lgroot.bench import DEFAULT_NODE_COUNTS, DEFAULT_PROBABILITIES, BenchConfig, format_summary, run_bench, summarize
from lgroot.cli import main
from lgroot.graph import (ISO_NODE_LIMIT, connected_graphs_on_nodes, connected_graphs_with_edges,
                          isomorphic_small)
from lgroot.io import format_edge_list, parse_edge_list, parse_matrix
from lgroot.reference import (beineke_graphs, brute_force_root, is_line_graph_beineke, roussopoulos_root,
                              spectral_reject)
from oracles import relabel_violations

K3 = Graph.cycle(3)
CLAW = Graph.star(3)


def _root_matches(g, root):
    if isomorphic_small(g, root):
        return True
    # the triangle line graph has two roots
    return (isomorphic_small(g, K3) or isomorphic_small(g, CLAW)) and (
        isomorphic_small(root, K3) or isomorphic_small(root, CLAW))


def test_criterion_1_exhaustive_round_trip(criterion):
    t0 = time.perf_counter()
    total, failures = 0, []
    for m in range(2, 9):
        for g in connected_graphs_with_edges(m):
            total += 1
            c = lam_of(g)
            try:
                rep = reconstruct(c)
                ok = rep.verified and lam_of(rep.root) == c and _root_matches(g, rep.root)
            except NotALineGraph:
                ok = False
            if not ok:
                failures.append(g)
    elapsed = time.perf_counter() - t0
    ok = total == 357 and not failures and elapsed < 300
    criterion(1, ok, f"{total} connected graphs with 2..8 edges, {len(failures)} failures, {elapsed:.1f}s (< 300s)")
    assert ok


def test_criterion_2_recognizer_agreement(criterion):
    total = disagree = spectral_bad = lines = 0
    for n in range(1, 8):
        for g in connected_graphs_on_nodes(n):
            total += 1
            c = g.adjacency()
            try:
                reconstruct(c)
                recon = True
            except NotALineGraph:
                recon = False
            lines += recon
            if recon != is_line_graph_beineke(g):
                disagree += 1
            if spectral_reject(c) and recon:
                spectral_bad += 1
    ok = total == 996 and disagree == 0 and spectral_bad == 0
    criterion(2, ok, f"{total} connected graphs on <= 7 nodes ({lines} line graphs): "
                     f"{disagree} Beineke disagreements, {spectral_bad} spectral rejections of successes")
    assert ok


ROOT_SHA = "920969fcc69667ac61c7de5e76d383be9c9b666f4d6b2fee2872fb59e12515e0"
LAM_SHA = "4f5ded4203065aa9f2a41da920b174455b1380fa2bc02458318c09b1f6908512"


def _five_left_four_right():
    # link 0 = (0, 1), five more links at node 0, four at node 1, and a tail
    edges = [(0, 1)] + [(0, k) for k in range(2, 7)] + [(1, k) for k in range(7, 11)] + [(2, 7), (6, 11)]
    return Graph(12, tuple(edges))


def test_criterion_3_worked_example(criterion, fixtures):
    root_text = (fixtures / "worked_root.el").read_text()
    lam_text = (fixtures / "worked_lam.mat").read_text()
    checks = {}
    checks["fixture checksums"] = (hashlib.sha256(root_text.encode()).hexdigest() == ROOT_SHA
                                   and hashlib.sha256(lam_text.encode()).hexdigest() == LAM_SHA)
    root, lam = parse_edge_list(root_text), parse_matrix(lam_text)
    rep = reconstruct(lam)
    checks["30 nodes, 50 links, verified"] = (rep.verified and lam_of(rep.root) == lam
                                              and rep.root.node_count == 30 and rep.root.edge_count == 50)
    rel = matrix_relabeling(lam)
    checks["s1 = 9"] = rel.s1 == 9
    # links 2-5 on one end of link 1 and 6-10 on the other means s3 = 5 - 3
    checks["s3 = 2 (links 2-5 left, 6-10 right)"] = rel.s3 == 2
    fig = matrix_relabeling(lam_of(_five_left_four_right()))
    checks["s1 = 9, s3 = 3 on the five-left/four-right configuration"] = (fig.s1, fig.s3) == (9, 3)
    u, v = reconstruct(lam_of(root)).root.edges[35]
    checks["link 36 = nodes {12, 25} as in the final table"] = {u + 1, v + 1} == {12, 25}
    ok = all(checks.values())
    detail = "; ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in checks.items())
    criterion(3, ok, detail + " (the {12, 15} reading of link 36 conflicts with the table; see ledger)")
    assert ok


def _relabel_component_violations(c):
    bad = 0
    for mask in c.component_masks():
        nodes = [b for b in range(c.order) if mask >> b & 1]
        sub = c.submatrix(nodes)
        r = matrix_relabeling(sub)
        if relabel_violations(r.relabeled.to_dense(), r.s1, r.s2, r.s3):
            bad += 1
    return bad


def test_criterion_4_relabeling_post_conditions(criterion):
    per_cell = math.ceil(1000 / (len(DEFAULT_NODE_COUNTS) * len(DEFAULT_PROBABILITIES)))
    count = bad = 0
    for n_g in DEFAULT_NODE_COUNTS:
        for p in DEFAULT_PROBABILITIES:
            for t in range(per_cell):
                c = lam_of(generate_er(n_g, p, 7919 * n_g + 104729 * round(p * 10) + t))
                count += 1
                if c.order:
                    bad += _relabel_component_violations(c)
    ok = count >= 1000 and bad == 0
    criterion(4, ok, f"{count} ER line graphs over N_G x p = {DEFAULT_NODE_COUNTS} x 0.1..0.9, "
                     f"{bad} violations of the row bullets or the top-entry curve")
    assert ok


def test_criterion_5_complexity_scaling(criterion):
    xs, ys = [], []
    for n_g in range(20, 61, 5):
        for s in range(3):
            c = lam_of(generate_er(n_g, 0.5, 31 * n_g + s))
            reconstruct(c)
            best = math.inf
            for _ in range(3):
                t0 = time.perf_counter()
                reconstruct(c)
                best = min(best, time.perf_counter() - t0)
            xs.append(math.log(c.order))
            ys.append(math.log(best))
    slope = float(np.polyfit(xs, ys, 1)[0])
    ok = 1.5 <= slope <= 2.5
    criterion(5, ok, f"least-squares slope of log time vs log L over ER(20..60, 0.5): {slope:.3f} (target [1.5, 2.5])")
    assert ok


def test_criterion_6_benchmark_methodology(criterion):
    cfg = BenchConfig(node_counts=DEFAULT_NODE_COUNTS, probabilities=DEFAULT_PROBABILITIES,
                      trials=5, seed=2024, warmup=1, repeats=3)
    records = run_bench(cfg)
    summary = summarize(records)
    table = format_summary(summary)
    all_verified = len(records) == 36 * cfg.trials and all(r.both_verified for r in records)
    shape_ok = set(summary) == {(n, p) for n in DEFAULT_NODE_COUNTS for p in DEFAULT_PROBABILITIES}
    positive = [(n, p) for (n, p), cell in summary.items() if p >= 0.3 and n >= 20]
    faster = [k for k in positive if summary[k].mean_delta_t > 0]
    ok = all_verified and shape_ok
    print(table)
    criterion(6, ok, f"{len(records)} bench rows, both algorithms verified on all: {all_verified}; "
                     f"summary covers the 4 x 9 grid: {shape_ok}; hardware-dependent check "
                     f"E[dT] > 0 for p >= 0.3, N_G >= 20 holds in {len(faster)}/{len(positive)} cells (reported only)")
    assert ok


def _perturbed(c, rng):
    d = c.to_dense()
    i, j = rng.sample(range(c.order), 2)
    d[i, j] ^= 1
    d[j, i] ^= 1
    return SymBitMatrix.from_dense(d)


def test_criterion_7_oracle_cross_validation(criterion):
    rng = random.Random(77)
    disagreements = both_ok = both_reject = 0
    for k in range(500):
        g = generate_er(rng.randint(4, 10), rng.choice((0.3, 0.5, 0.7)), rng.getrandbits(32))
        c = lam_of(g)
        if k % 2 and c.order >= 2:
            c = _perturbed(c, rng)
        try:
            ours = reconstruct(c)
        except NotALineGraph:
            ours = None
        try:
            base = roussopoulos_root(c)
        except NotALineGraph:
            base = None
        if ours is None and base is None:
            both_reject += 1
            continue
        if ours is None or base is None:
            disagreements += 1
            continue
        same = lam_of(ours.root) == c and lam_of(base) == c
        if same and not ours.ambiguous_k3 and max(ours.root.node_count, base.node_count) <= ISO_NODE_LIMIT:
            same = isomorphic_small(ours.root, base)
        disagreements += not same
        both_ok += same
    ok = disagreements == 0
    criterion(7, ok, f"500 mixed inputs: {both_ok} both reconstructed, {both_reject} both rejected, "
                     f"{disagreements} disagreements")
    assert ok


def test_criterion_8_beineke_fixtures(criterion, tmp_path):
    results = []
    for idx, (name, g) in enumerate(beineke_graphs(), start=1):
        path = tmp_path / f"b{idx}.el"
        path.write_text(format_edge_list(g))
        code = main(["check", str(path)])
        brute = brute_force_root(g.adjacency()) if g.node_count <= 8 else None
        results.append((name, code == 2 and brute is None))
    ok = all(r for _, r in results)
    failed = [n for n, r in results if not r]
    criterion(8, ok, f"9 forbidden graphs: check exit 2 and brute force NotFound for "
                     f"{sum(r for _, r in results)}/9" + (f"; failed {failed}" if failed else ""))
    assert ok
