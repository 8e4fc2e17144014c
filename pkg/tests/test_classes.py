import pytest
from hypothesis import given, settings

from oddcolour.classes import (
    EngineTrace,
    LightEdge,
    PendantTwins,
    bounded_degree_bound,
    bounded_degree_colouring,
    colour_components,
    colour_with_budget,
    find_reduction,
    girth7_bound,
    girth7_colouring,
    planar_girth11_check,
    planar_girth11_colouring,
)
from oddcolour.errors import ClassError, InfeasibleError, PreconditionError, ReductionNotFoundError
from oddcolour.exact import chi_odd_exact
from oddcolour.generators import complete, cycle, path, petersen, random_gnp, star, subdivided_complete
from oddcolour.graph import Graph
from oddcolour.verify import verify_colouring

from conftest import graphs


def test_find_reduction_examples():
    assert find_reduction(star(3), 2) == PendantTwins(1, 2, 0)
    assert find_reduction(star(3), 50) == PendantTwins(1, 2, 0)
    assert find_reduction(cycle(6), 4) == LightEdge(0, 1)
    assert find_reduction(cycle(6), 3) is None
    with pytest.raises(PreconditionError):
        find_reduction(cycle(6), 1)


def test_budget_engine_examples():
    assert colour_with_budget(complete(2), 2).as_lists() == [[0, 1]]
    c = colour_with_budget(cycle(6), 4)
    assert len(c) <= 3 and verify_colouring(cycle(6), c).valid
    assert chi_odd_exact(cycle(6))[0] == 3
    with pytest.raises(ReductionNotFoundError) as info:
        colour_with_budget(cycle(6), 3)
    assert set(info.value.vertices) == set(range(6))


def test_budget_engine_preconditions():
    with pytest.raises(PreconditionError):
        colour_with_budget(Graph.from_edges(4, [(0, 1), (2, 3)]), 4)
    with pytest.raises(InfeasibleError):
        colour_with_budget(path(3), 4)


@pytest.mark.parametrize("g, most", [(cycle(6), 3), (petersen(), 5), (path(8), 3)])
def test_bounded_degree_examples(g, most):
    c = bounded_degree_colouring(g)
    assert len(c) <= most == bounded_degree_bound(g)
    assert verify_colouring(g, c).valid


def test_odd_component_is_infeasible():
    with pytest.raises(InfeasibleError):
        bounded_degree_colouring(complete(2).disjoint_union(Graph.empty(1)))


def test_girth7_examples():
    assert girth7_bound(14) == 6
    assert girth7_bound(100) == 16
    c = girth7_colouring(cycle(14))
    assert len(c) <= 6 and verify_colouring(cycle(14), c).valid
    c = girth7_colouring(path(8))
    assert len(c) <= 5 and verify_colouring(path(8), c).valid
    with pytest.raises(ClassError):
        girth7_colouring(subdivided_complete(4))


def test_planar_girth11_examples():
    for n in (12, 14):
        c = planar_girth11_colouring(cycle(n))
        assert len(c) <= 3 and verify_colouring(cycle(n), c).valid
    assert chi_odd_exact(cycle(12))[0] == 2
    assert chi_odd_exact(cycle(14))[0] == 3
    with pytest.raises(ClassError):
        planar_girth11_colouring(cycle(6))


def test_planar_edge_bound_is_checked_per_component():
    planar_girth11_check(cycle(12).disjoint_union(path(4)))
    # K8 with every edge cut into four: girth 12 but too many edges to be planar
    g = complete(8).subdivide().subdivide()
    assert (g.n, g.m, g.girth()) == (92, 112, 12)
    with pytest.raises(ClassError):
        planar_girth11_check(g)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=2, max_n=14))
def test_bounded_degree_on_random_graphs(g):
    if any(len(c) % 2 for c in g.components()):
        with pytest.raises(InfeasibleError):
            bounded_degree_colouring(g)
        return
    trace = EngineTrace()
    c = bounded_degree_colouring(g, trace)
    assert verify_colouring(g, c).valid
    assert len(c) <= bounded_degree_bound(g)
    assert not trace.violations


@pytest.mark.parametrize("seed", range(30))
def test_engine_reaches_every_branch_without_violations(seed):
    trace = EngineTrace()
    for p in (0.08, 0.15, 0.3):
        g = random_gnp(24, p, seed=seed)
        c = colour_components(g, max(2, 2 * g.max_degree()), trace)
        assert verify_colouring(g, c).valid
    assert trace.violations == []
    assert trace.checks > 0


def test_all_branches_are_exercised():
    seen = set()
    for seed in range(120):
        trace = EngineTrace()
        bounded_degree_colouring(random_gnp(20, 0.12, seed=seed), trace)
        seen |= set(trace.branches)
    assert seen >= {"base", "twins", "a", "b", "c-odd", "c-even", "d"}
