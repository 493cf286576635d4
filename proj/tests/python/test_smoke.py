import json

import pytest

import quatseq


def test_analyze_default_pairs():
    expected = {(5, 13): 41, (17, 5): 85, (5, 17): 65}
    for (p, q), lc in expected.items():
        report = json.loads(quatseq.analyze(p, q, oracle=True, verify_trace=True))
        assert report["lc_spectrum"] == lc
        assert report["lc_closed_form"] == lc
        assert report["lc_oracle"] == lc
        assert report["trace_verified"] is True


def test_system_and_sequence():
    sys = quatseq.CyclotomicSystem(5, 13)
    assert (sys.g, sys.h, sys.e, sys.ell) == (2, 27, 12, 12)
    assert sys.case == "Case55"
    seq = sys.sequence()
    assert len(seq) == 65
    for i in range(4):
        assert all(seq[u] == i for u in sys.cls(i))
    assert quatseq.CyclotomicSystem(5, 13, g=7).two_class() == 2


def test_spectrum_routes():
    sys = quatseq.CyclotomicSystem(17, 5)
    ring = quatseq.standard_ring(sys.ell)
    beta = quatseq.primitive_nth_root(ring, 85)
    seq = sys.sequence()
    assert quatseq.dft(seq, beta) == quatseq.ms_closed_form(sys, beta)
    assert quatseq.linear_complexity_spectrum(seq, beta) == 85
    assert quatseq.lc_closed_form(sys, beta)["lc_predicted"] == 85
    assert all(quatseq.trace_representation(sys, beta, u) == seq[u] for u in range(85))


def test_ring_elements():
    ring = quatseq.standard_ring(3)
    x = quatseq.element(ring, [0, 1, 0])
    one = quatseq.element(ring, [1, 0, 0])
    assert x ** 7 == one
    assert (x + one) * (x + one) == x * x + quatseq.element(ring, [0, 2, 0]) + one
    assert quatseq.trace(one, 1, 3).coeffs == [3, 0, 0]


def test_minimal_connection():
    length, poly = quatseq.minimal_connection([1, 0, 0, 0, 0, 0, 0])
    assert length == 7
    assert poly[0] == 1


def test_errors():
    with pytest.raises(quatseq.QuatseqError):
        quatseq.analyze(3, 7)
    with pytest.raises(ValueError):
        quatseq.CyclotomicSystem(5, 13, g=3)
    assert quatseq.mul_order(2, 65) == 12
    assert quatseq.crt_pair(2, 1, 5, 13) == 27
    assert quatseq.selftest(42)
