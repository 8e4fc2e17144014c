"""Exit criteria. Each test records one PASS/FAIL line, repeated in the terminal summary."""
import itertools
import time
from functools import lru_cache

import numpy as np
import pytest

from oddcolour.classes import (
    EngineTrace,
    bounded_degree_bound,
    bounded_degree_colouring,
    colour_components,
    girth7_bound,
    girth7_colouring,
    planar_girth11_colouring,
)
from oddcolour.exact import chi_odd_exact, chromatic_number_exact, is_odd_colourable
from oddcolour.gallai import even_even_partition, odd_even_partition
from oddcolour.generators import (
    cycle,
    k4_two_pendants,
    random_gnp,
    random_interval,
    random_modular,
    random_proper_interval,
    subdivided_complete,
)
from oddcolour.graph import Graph
from oddcolour.interval import IntervalTrace, interval_colouring, proper_interval_colouring
from oddcolour.modular import DecompositionTrace, ModulePartition, colour_modular
from oddcolour.verify import check_parity, verify_colouring

pytestmark = pytest.mark.acceptance


def gnp(n, p, rng):
    upper = np.triu(rng.random((n, n)) < p, k=1)
    us, vs = np.nonzero(upper)
    return Graph.from_edges(n, zip(us.tolist(), vs.tolist()))


def even_components(g):
    return all(c.bit_count() % 2 == 0 for c in g.component_masks())


def test_criterion_1_gallai_totality(record):
    rng = np.random.default_rng(1)
    start = time.perf_counter()
    failures = 0
    for i in range(1000):
        n = int(rng.integers(1, 65))
        g = gnp(n, (0.1, 0.3, 0.5)[i % 3], rng)
        a, b = even_even_partition(g)
        ok = a | b == set(range(n)) and not a & b
        ok &= not check_parity(g, a, False) and not check_parity(g, b, False)
        a, b = odd_even_partition(g)
        ok &= a | b == set(range(n)) and not a & b
        ok &= not check_parity(g, a, True) and not check_parity(g, b, False)
        failures += not ok
    elapsed = time.perf_counter() - start
    assert record(1, failures == 0 and elapsed < 10,
                  f"1000 graphs, {failures} parity failures, {elapsed:.2f}s (limit 10s)")


def test_criterion_2_known_constants(record):
    start = time.perf_counter()
    sk4 = subdivided_complete(4)
    got = {
        "C14": chi_odd_exact(cycle(14))[0],
        "SK4": chi_odd_exact(sk4)[0],
        "girth SK4": sk4.girth(),
        "K4+2 pendants": chi_odd_exact(k4_two_pendants()[0])[0],
    }
    elapsed = time.perf_counter() - start
    want = {"C14": 3, "SK4": 4, "girth SK4": 6, "K4+2 pendants": 3}
    assert record(2, got == want and elapsed < 5, f"{got}, {elapsed:.2f}s (limit 5s)")


def connected_bases(count, seed=3):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(1, 7))
        g = gnp(n, float(rng.uniform(0.3, 0.9)), rng)
        if g.is_connected() and (g.n + g.m) % 2 == 0:
            out.append(g)
    return out


def test_criterion_3_subdivided_cliques(record):
    start = time.perf_counter()
    cliques = {n: chi_odd_exact(subdivided_complete(n))[0] for n in (3, 4)}
    bad = []
    bases = connected_bases(120)
    for g in bases:
        h = g.subdivide()
        if chi_odd_exact(h, cap=20)[0] != chromatic_number_exact(g):
            bad.append(g.edges())
    elapsed = time.perf_counter() - start
    ok = cliques == {3: 3, 4: 4} and not bad and elapsed < 60
    assert record(3, ok, f"cliques {cliques}, {len(bases)} bases, {len(bad)} mismatches, {elapsed:.2f}s (limit 60s)")


# instance suites shared by criteria 4 and 5 ------------------------------------------

def double_subdivision_bases(count, seed, planar):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        if planar:
            side = int(rng.integers(2, 4))
            grid = [(r * side + c, r * side + c + 1) for r in range(side) for c in range(side - 1)]
            grid += [(r * side + c, (r + 1) * side + c) for r in range(side - 1) for c in range(side)]
            base = Graph.from_edges(side * side, [e for e in grid if rng.random() < 0.7])
        else:
            base = gnp(int(rng.integers(2, 8)), float(rng.uniform(0.2, 0.7)), rng)
        h = base.subdivide().subdivide()
        if h.n <= 120 and even_components(h):
            out.append(h)
    return out


@lru_cache(maxsize=None)
def suites():
    rng = np.random.default_rng(11)
    s = {}
    s["bounded-degree"] = [random_gnp(int(rng.integers(1, 16)) * 2, float(rng.choice([0.05, 0.1, 0.2, 0.4])), seed=i)
                           for i in range(200)]
    long_cycles = [cycle(n) for n in range(8, 108, 2)]
    s["girth7"] = long_cycles + double_subdivision_bases(150, 5, planar=False)
    s["planar-girth11"] = [cycle(n) for n in range(12, 112, 2)] + double_subdivision_bases(150, 6, planar=True)
    s["modular"] = [random_modular(2 + i % 14, max_size=1 + i % 5, seed=i) for i in range(200)]
    s["proper-interval"] = [random_proper_interval(4 + i % 36, length=1 + i % 6, seed=i) for i in range(200)]
    s["interval"] = [random_interval(2 * (1 + i % 30), seed=i) for i in range(200)]
    return s


def run_suite(name, inst):
    """Returns (graph, colouring, bound) for one instance of the named suite."""
    if name == "bounded-degree":
        return inst, bounded_degree_colouring(inst), bounded_degree_bound(inst)
    if name == "girth7":
        return inst, girth7_colouring(inst), girth7_bound(inst.n)
    if name == "planar-girth11":
        return inst, planar_girth11_colouring(inst), 3
    if name == "modular":
        g, parts = inst
        c, _ = colour_modular(g, ModulePartition.from_lists(g.n, parts))
        return g, c, 3 * len(parts)
    g, rep = inst
    if name == "proper-interval":
        return g, proper_interval_colouring(g, rep), 3
    return g, interval_colouring(g, rep), 6


@lru_cache(maxsize=None)
def suite_results():
    return {name: [run_suite(name, inst) for inst in insts] for name, insts in suites().items()}


def test_criterion_4_bound_compliance(record):
    lines = []
    ok = True
    for name, results in suite_results().items():
        over = sum(1 for g, c, b in results if len(c) > b)
        invalid = sum(1 for g, c, b in results if not verify_colouring(g, c).valid)
        worst = max(len(c) for _, c, _ in results)
        ok &= len(results) >= 200 and over == 0 and invalid == 0
        lines.append(f"{name}: {len(results)} runs, max {worst} classes, {over} over bound, {invalid} invalid")
    assert record(4, ok, "; ".join(lines))


def test_criterion_5_never_beats_the_oracle(record):
    small = [(name, g, c) for name, results in suite_results().items()
             for g, c, _ in results if g.n <= 16]
    extra = [cycle(n) for n in (4, 6, 8, 10, 12, 14, 16)] + [subdivided_complete(4), k4_two_pendants()[0]]
    for g in extra:
        small.append(("bounded-degree", g, bounded_degree_colouring(g)))
    beaten = 0
    bad_witness = 0
    for name, g, c in small:
        k, witness = chi_odd_exact(g)
        bad_witness += not verify_colouring(g, witness).valid
        beaten += len(c) < k
    ok = beaten == 0 and bad_witness == 0 and len(small) > 0
    assert record(5, ok, f"{len(small)} instances with n <= 16, {beaten} below the optimum, "
                         f"{bad_witness} bad witnesses")


def test_criterion_6_feasibility(record):
    rng = np.random.default_rng(6)
    disagree = infinite = checked = 0
    for i in range(1000):
        g = gnp(int(rng.integers(1, 17)), float(rng.choice([0.05, 0.15, 0.3, 0.5])), rng)
        feasible = is_odd_colourable(g)
        disagree += feasible != even_components(g)
        if feasible:
            checked += 1
            k, witness = chi_odd_exact(g)
            infinite += not (1 <= k <= g.n and verify_colouring(g, witness).valid)
    ok = disagree == 0 and infinite == 0
    assert record(6, ok, f"1000 graphs, {disagree} disagreements, {checked} feasible solved, {infinite} failures")


def test_criterion_7_engine_invariants(record):
    trace = EngineTrace()
    runs = 0
    for seed in range(300):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 16)) * 2
        g = random_gnp(n, float(rng.choice([0.05, 0.1, 0.15, 0.25])), seed=seed)
        for k in (max(2, 2 * g.max_degree()), 2 * g.max_degree() + 3):
            c = colour_components(g, k, trace)
            assert verify_colouring(g, c).valid
            runs += 1
    for g in double_subdivision_bases(40, 7, planar=False):
        if g.n <= 30:
            girth7_colouring(g, trace)
            runs += 1
    for n in range(12, 31, 2):
        planar_girth11_colouring(cycle(n), trace)
        runs += 1
    branches = dict(sorted(trace.branches.items()))
    ok = not trace.violations and trace.checks > 0
    assert record(7, ok, f"{runs} runs, {trace.checks} merge-time checks, {len(trace.violations)} violations, "
                         f"branches {branches}")


def test_criterion_8_interval_claims(record):
    trace = IntervalTrace()
    invalid = 0
    for seed in range(500):
        n = 2 * int(np.random.default_rng(seed).integers(1, 31))
        g, rep = random_interval(n, seed=seed)
        c = interval_colouring(g, rep, trace)
        invalid += not verify_colouring(g, c).valid or len(c) > 6
    events = dict(sorted(trace.events.items()))
    ok = not trace.violations and invalid == 0
    assert record(8, ok, f"500 instances, {trace.checks} invariant checks, {len(trace.violations)} violations, "
                         f"{invalid} invalid, events {events}")
