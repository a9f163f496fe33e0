"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""
import math
import time

import numpy as np
import pytest

from oracles import largest_component
from sparsels import bench
from sparsels.exact import exact_max_packing, exact_min_hitting
from sparsels.generators import cycle, grid, path, random_k_degenerate
from sparsels.local_search import local_search_hitting, local_search_packing
from sparsels.properties import FiniteFamily, RadiusBall, is_hitting_set, is_valid_packing
from sparsels.separators import balance_bound, balanced_separator, build_cover, cover_check
from sparsels.graph import diameter, induced_subgraph
from sparsels.structure import (
    VertexOrdering, build_shallow_collection, degeneracy_ordering, lemma_main_certificate, lemma_trial,
    rich_vertices, wcol_exact, wcol_of_ordering,
)

SPECS = [FiniteFamily.of("K2"), FiniteFamily.of("K3"), FiniteFamily.of("P3"), RadiusBall(1), RadiusBall(2)]
K2 = SPECS[0]


def _corpus():
    out = [(f"grid{w}x{h}", grid(w, h)) for w, h in [(2, 2), (2, 3), (2, 4), (3, 3), (4, 4), (4, 5),
                                                     (5, 5), (6, 6), (8, 8)]]
    out += [(f"path{n}", path(n)) for n in (4, 5, 6, 7, 8, 10, 20, 40, 60)]
    out += [(f"cycle{n}", cycle(n)) for n in (4, 5, 6, 7, 8, 10, 20, 40, 60)]
    out += [(f"deg3-60#{s}", random_k_degenerate(60, 3, seed=s)) for s in range(10)]
    # small degenerate graphs so the oracles see non-lattice instances too
    out += [(f"deg3-20#{s}", random_k_degenerate(20, 3, seed=s)) for s in range(10)]
    return out


CORPUS = _corpus()
ORACLE_N = 22


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
    return emit


@pytest.fixture(scope="module")
def oracle_table():
    """Exact gamma, alpha and induced alpha for every corpus instance with n <= 22."""
    t0 = time.perf_counter()
    rows = []
    for name, G in CORPUS:
        if G.n > ORACLE_N:
            continue
        for spec in SPECS:
            occ = spec.occurrences(G)
            h = exact_min_hitting(G, spec, occurrences=occ)
            p = exact_max_packing(G, spec, occurrences=occ)
            q = exact_max_packing(G, spec, True, occurrences=occ)
            rows.append(dict(name=name, G=G, spec=spec, occ=occ, h=h, p=p, q=q))
    return rows, time.perf_counter() - t0


def test_criterion_1_validity(report):
    t0 = time.perf_counter()
    runs = failures = 0
    for name, G in CORPUS:
        for spec in SPECS:
            occ = spec.occurrences(G)
            for c in (1, 2, 3):
                X, _ = local_search_hitting(G, spec, c, occurrences=occ)
                runs += 1
                failures += not is_hitting_set(G, spec, X)
                for induced in (False, True):
                    P, _ = local_search_packing(G, spec, c, induced, occurrences=occ)
                    runs += 1
                    failures += not is_valid_packing(G, spec, P)
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 300
    report(1, ok, f"{runs} runs, {failures} invalid, {elapsed:.1f}s of 300s")
    assert ok


def test_criterion_2_sandwich(report, oracle_table):
    rows, oracle_time = oracle_table
    t0 = time.perf_counter()
    violations = uncertified = 0
    worst_h = worst_p = 1.0
    for row in rows:
        G, spec, occ = row["G"], row["spec"], row["occ"]
        uncertified += not (row["h"].optimal and row["p"].optimal and row["q"].optimal)
        for c in (1, 2, 3):
            X, _ = local_search_hitting(G, spec, c, occurrences=occ)
            P, _ = local_search_packing(G, spec, c, occurrences=occ)
            Q, _ = local_search_packing(G, spec, c, True, occurrences=occ)
            violations += row["h"].size > len(X)
            violations += len(P) > row["p"].size
            violations += len(Q) > row["q"].size
            if c == 3 and spec == K2 and row["name"].startswith("grid"):
                if row["h"].size:
                    worst_h = max(worst_h, len(X) / row["h"].size)
                if len(P):
                    worst_p = max(worst_p, row["p"].size / len(P))
    elapsed = time.perf_counter() - t0 + oracle_time
    ok = violations == 0 and uncertified == 0 and worst_h <= 1.5 and worst_p <= 1.5 and elapsed < 600
    report(2, ok, f"{len(rows)} instance/spec pairs, {violations} violations, {uncertified} uncertified oracles, "
                  f"grid K2 c=3 worst ratio hitting {worst_h:.3f} packing {worst_p:.3f}, {elapsed:.1f}s of 600s")
    assert ok


def _trials(count=500, seed=2024):
    rng = np.random.default_rng(seed)
    pool = [G for _, G in CORPUS]
    for _ in range(count):
        G = pool[int(rng.integers(len(pool)))]
        r = int(rng.choice([1, 2, 3]))
        m = int(rng.choice([1, 2, 4, 8]))
        p = float(rng.uniform(0.05, 0.6))
        O = [v for v in range(G.n) if rng.random() < p]
        A = [v for v in range(G.n) if rng.random() < 0.5]
        yield G, r, m, O, A


def test_criterion_3_rich_bound(report):
    t0 = time.perf_counter()
    trials = bad = 0
    for G, r, m, O, _ in _trials():
        ordering = degeneracy_ordering(G)
        b = wcol_of_ordering(G, ordering, r)
        bad += m * len(rich_vertices(G, ordering, r, m, O)) > b * len(O)
        trials += 1
    elapsed = time.perf_counter() - t0
    ok = trials == 500 and bad == 0 and elapsed < 120
    report(3, ok, f"{trials} trials, {bad} violations of m*|O'| <= b*|O|, {elapsed:.1f}s of 120s")
    assert ok


def test_criterion_4_shallow_collection(report):
    t0 = time.perf_counter()
    trials = shallow_bad = certificates = failed = 0
    uncovered_case = 0
    occ_cache = {}
    for G, r, m, O, A in _trials():
        key = id(G)
        if key not in occ_cache:
            occ_cache[key] = sorted({Z for spec in SPECS for Z in spec.occurrences(G)})
        ordering = degeneracy_ordering(G)
        row = lemma_trial(G, ordering, r, m, O, A, occ_cache[key])
        certificates += row["certificates"]
        shallow_bad += not (row["omega_actual"] <= row["b"] * m + 1 and row["t_actual"] <= 2 * r)
        trials += 1
        if row["certificate_failures"]:
            failed += row["certificate_failures"]
            uncovered_case += _count_rich_only_failures(G, ordering, r, m, O, A, occ_cache[key])
    elapsed = time.perf_counter() - t0
    ok = trials == 500 and shallow_bad == 0 and failed == 0 and certificates > 0 and elapsed < 300
    report(4, ok, f"{trials} trials, shallowness violations {shallow_bad}, {certificates} certificates, "
                  f"{failed} without a witness ({uncovered_case} of them have Z & O inside O' and min(Z) "
                  f"outside O | O'), {elapsed:.1f}s of 300s")
    assert ok


def _count_rich_only_failures(G, ordering, r, m, O, A, occurrences):
    rich = set(rich_vertices(G, ordering, r, m, O))
    coll = build_shallow_collection(G, ordering, r, m, O, A)
    count = 0
    for Z in occurrences:
        if not set(Z) & set(O) or diameter(induced_subgraph(G, Z)[0]) > r:
            continue
        if lemma_main_certificate(G, ordering, r, m, O, A, Z, coll) is None:
            x = min(Z, key=lambda v: ordering.position[v])
            count += set(Z) & set(O) <= rich and x not in rich and x not in O
    return count


def _excess(H, pieces):
    count = [0] * H.n
    for K in pieces:
        for v in set(K):
            count[v] += 1
    return sum(1 for K in pieces for v in set(K) if count[v] > 1)


def test_criterion_5_separators_covers(report):
    t0 = time.perf_counter()
    bad_sep = bad_cover = bad_path = 0
    for _, G in CORPUS:
        S = balanced_separator(G)
        bad_sep += largest_component(G, S) > math.ceil(2 * G.n / 3)
        for cap in (4, 8, 16, 32):
            cover = build_cover(G, cap)
            ok, rep = cover_check(G, cover)
            bad_cover += not ok or rep["excess"] != _excess(G, cover.pieces) or cover.excess != rep["excess"]
    for cap in (4, 8, 16):
        for n in range(1, 61):
            cover = build_cover(path(n), cap)
            bad_path += not cover_check(path(n), cover)[0] or cover.excess > 2 * math.ceil(n / (cap - 1))
    elapsed = time.perf_counter() - t0
    ok = bad_sep == bad_cover == bad_path == 0 and elapsed < 120
    report(5, ok, f"separator failures {bad_sep}, cover failures {bad_cover}, path-bound failures {bad_path}, "
                  f"{elapsed:.1f}s of 120s")
    assert ok


def test_criterion_6_weak_duality(report, oracle_table):
    rows, _ = oracle_table
    bad = sum(1 for row in rows if not row["q"].size <= row["p"].size <= row["h"].size)
    report(6, bad == 0, f"{len(rows)} oracle pairs, {bad} with alpha > gamma")
    assert bad == 0


def test_criterion_7_wcol(report):
    t0 = time.perf_counter()
    below = []
    unequal = []
    for name, G in CORPUS:
        if G.n > 8:
            continue
        for r in (1, 2, 3):
            exact = wcol_exact(G, r)[0]
            if wcol_of_ordering(G, degeneracy_ordering(G), r) < exact:
                below.append((name, r))
            if name.startswith("path") and wcol_of_ordering(G, VertexOrdering.natural(G.n), r) != exact:
                unequal.append((name, r))
    for n in (1, 2, 3):
        for r in (1, 2, 3):
            if wcol_of_ordering(path(n), VertexOrdering.natural(n), r) != wcol_exact(path(n), r)[0]:
                unequal.append((f"path{n}", r))
    elapsed = time.perf_counter() - t0
    ok = not below and not unequal and elapsed < 180
    report(7, ok, f"degeneracy below optimum: {below or 'none'}; natural-order paths differing from optimum: "
                  f"{unequal or 'none'}; {elapsed:.1f}s of 180s")
    assert ok


def test_criterion_8_determinism(report):
    first = bench.run_experiment(bench.default_corpus())
    second = bench.run_experiment(bench.default_corpus())
    ok = first == second and len(first.splitlines()) > 1
    report(8, ok, f"{len(first.splitlines()) - 1} rows, byte-identical={first == second}")
    assert ok
