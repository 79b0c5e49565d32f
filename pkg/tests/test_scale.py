import time
from fractions import Fraction

from branchpolar.charclass import bbar, new_char_sequence
from branchpolar.diagram import elementary
from branchpolar.polar import predict
from branchpolar.puiseux import PuiseuxSeries
from branchpolar.verify import check_initial_form, check_lemma_nd, sample_witness, witness_from_root


def test_charclass_beyond_machine_words():
    big = 10 ** 30
    cs = new_char_sequence([4 * big, 6 * big, 7 * big, 7 * big + 1])
    assert cs.e == (4 * big, 2 * big, big, 1)
    assert cs.n_seq == (2, 2, big)
    assert bbar(cs, 2) == 7 * big + ((4 * big - 2 * big) // (2 * big)) * 6 * big
    assert all(v > 0 for v in cs.bbar)


def test_diagram_derivative_thousands():
    start = time.time()
    d = elementary(40009, 3000)
    d1 = d.symbolic_derivative(1)
    assert d1.height == 2999
    assert d.symbolic_derivative(1500).height == 1500
    parts = d1.canonical_rep(long=True).parts
    assert sum(n for _, n in parts) == 2999
    assert all(m * 3000 > n * 40009 for m, n in parts)
    assert time.time() - start < 5.0


def test_predict_large_multiplicity():
    cs = new_char_sequence([2048, 3072, 3073])
    for k in (1, 2, 1000, 2047):
        p = predict(cs, k)
        assert p.multiplicity_total() == 2048 - k


def test_witness_with_rational_coefficients():
    cs = new_char_sequence([2, 3])
    w = witness_from_root(cs, PuiseuxSeries.from_string("1/2*x^(3/2)+x^2"))
    assert w.f.coefficient(3, 0) == Fraction(-1, 4)
    res = check_lemma_nd(w, 1, 1)
    assert res.status == "ok"
    assert check_initial_form(w, 1)


def test_witness_without_padding_terms():
    cs = new_char_sequence([6, 9, 11])
    w = sample_witness(cs, 5, extra_terms=0)
    assert max(i for i, _ in w.root.terms) <= 11
    assert w.root.characteristic().b == (6, 9, 11)
