import json

import pytest
from hypothesis import given

from oddcolour.generators import cycle
from oddcolour.graph import Colouring
from oddcolour.verify import check_parity, dumps_certificate, loads_certificate, verify_colouring

from conftest import graphs


def test_valid_c4():
    report = verify_colouring(cycle(4), [[0, 1], [2, 3]])
    assert report.valid and bool(report)
    assert report.summary() == "valid"


def test_independent_classes_report_four_violations():
    report = verify_colouring(cycle(4), [[0, 2], [1, 3]])
    assert not report.valid
    assert sorted(report.violations) == [(0, 0, 0), (0, 2, 0), (1, 1, 0), (1, 3, 0)]


def test_overlap_is_a_partition_error():
    report = verify_colouring(cycle(4), [[0, 1], [1, 2, 3]])
    assert any("vertex 1" in e for e in report.partition_errors)


def test_garbage_is_reported_not_raised():
    report = verify_colouring(cycle(4), [[0, 1, 9], ["x"]])
    assert not report.valid
    assert any("uncoloured" in e for e in report.partition_errors)
    assert not verify_colouring(cycle(4), Colouring.from_lists(5, [[0, 1], [2, 3]])).valid


@given(graphs(max_n=8))
def test_singletons_fail_exactly_on_every_vertex(g):
    report = verify_colouring(g, [[v] for v in range(g.n)])
    assert len(report.violations) == g.n
    assert check_parity(g, list(range(g.n)), odd=False) == [v for v in range(g.n) if g.degree(v) % 2]


def test_certificate_round_trip_is_byte_stable():
    c = Colouring.from_lists(4, [[3, 2], [1, 0]])
    text = dumps_certificate(c, "exact", 2)
    assert text == dumps_certificate(c, "exact", 2)
    again, data = loads_certificate(text)
    assert again.as_lists() == [[2, 3], [0, 1]]
    assert data["algorithm"] == "exact" and data["bound"] == 2
    assert json.loads(text) == {"n": 4, "classes": [[2, 3], [0, 1]], "algorithm": "exact", "bound": 2}


@pytest.mark.parametrize("text", ["{", "[]", '{"n": 2}', '{"n": "2", "classes": []}', '{"n": 2, "classes": [["a"]]}'])
def test_malformed_certificates(text):
    with pytest.raises(ValueError):
        loads_certificate(text)
