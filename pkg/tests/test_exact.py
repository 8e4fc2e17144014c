import numpy as np
import pytest
from hypothesis import given, settings

from oddcolour.errors import InfeasibleError, SizeError
from oddcolour.exact import chi_odd_exact, chromatic_number_exact, first_odd_component, is_odd_colourable
from oddcolour.generators import complete, cycle, k4_two_pendants, subdivided_complete
from oddcolour.graph import Graph
from oddcolour.verify import verify_colouring

from conftest import brute_chi_odd, brute_chromatic, graphs


def test_feasibility_examples():
    assert is_odd_colourable(complete(2))
    assert not is_odd_colourable(Graph.empty(1))
    assert not is_odd_colourable(complete(2).disjoint_union(complete(3)))
    assert first_odd_component(complete(2).disjoint_union(Graph.empty(1))) == 0b100


@pytest.mark.parametrize("g, k", [
    (cycle(4), 2),
    (cycle(14), 3),
    (subdivided_complete(4), 4),
    (subdivided_complete(3), 3),
    (k4_two_pendants()[0], 3),
    (cycle(6), 3),
    (cycle(12), 2),
])
def test_known_odd_chromatic_numbers(g, k):
    got, witness = chi_odd_exact(g)
    assert got == k == len(witness)
    assert verify_colouring(g, witness).valid


def test_c4_witness_is_adjacent_pairs():
    assert chi_odd_exact(cycle(4))[1].as_lists() == [[0, 1], [2, 3]]


def test_chromatic_examples():
    assert chromatic_number_exact(complete(4)) == 4
    assert chromatic_number_exact(cycle(5)) == 3
    assert chromatic_number_exact(Graph.empty(3)) == 1


def test_errors():
    with pytest.raises(InfeasibleError) as info:
        chi_odd_exact(complete(2).disjoint_union(Graph.empty(1)))
    assert info.value.component == frozenset({2})
    with pytest.raises(SizeError):
        chi_odd_exact(cycle(22))
    with pytest.raises(SizeError):
        chi_odd_exact(cycle(12), cap=10)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_oracle_matches_enumeration(g):
    want = brute_chi_odd(g)
    if want is None:
        with pytest.raises(InfeasibleError):
            chi_odd_exact(g)
        return
    k, witness = chi_odd_exact(g)
    assert k == want
    assert verify_colouring(g, witness).valid


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_chromatic_matches_enumeration(g):
    assert chromatic_number_exact(g) == brute_chromatic(g)
