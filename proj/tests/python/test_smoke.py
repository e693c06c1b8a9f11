from fractions import Fraction

import pytest

import detgb


def test_generators_and_basis():
    r = detgb.Ring("square:2")
    g = detgb.generators(r)
    assert str(g[0]) == "x[1][1]*y[1] + x[1][2]*y[2]"
    B = detgb.MonomialOrder(r, "B")
    gb = detgb.reduced_gb(g, B)
    assert len(gb) == 3
    assert gb[2] == detgb.determinant(r) * r.parse("y[2]")
    assert detgb.is_groebner(gb, B) and detgb.is_reduced(gb, B)
    assert len(detgb.reduced_gb(g, detgb.MonomialOrder(r, "A"))) == 2


def test_parse_and_terms():
    r = detgb.Ring("wide:2", True)
    p = detgb.Polynomial(r, "-3/6*t*y[1] + 2")
    assert p.terms()[0][0] == Fraction(-1, 2)
    with pytest.raises(ValueError):
        r.parse("x[9][9]")


def test_colon_and_ideals():
    r = detgb.Ring("square:2")
    B = detgb.MonomialOrder(r, "B")
    I = detgb.Ideal(r, detgb.generators(r))
    c = detgb.colon(I, detgb.determinant(r), B)
    assert c.equals(detgb.Ideal(r, [r.parse("y[1]"), r.parse("y[2]")]), B)
    assert not I.contains(detgb.determinant(r), B)


def test_betti_and_hilbert():
    assert detgb.betti_J_totals(2) == [1, 3, 4, 2]
    table = detgb.betti_J_graded(2)
    assert table[(3, 5)] == 2
    assert detgb.table_numerator(table) == [1, 0, -3, 0, 4, -2]
    r = detgb.Ring("wide:2")
    assert detgb.hilbert_numerator_of(detgb.generators(r), detgb.MonomialOrder(r, "B")) == [1, 0, -3, 0, 4, -2]
    rep = detgb.cm_report("wide:2")
    assert rep["depth"] == 5 and not rep["is_cm"]


def test_syzygy_example():
    r = detgb.Ring("square:5")
    alpha = detgb.syzygy_phi(r, 2, "(1,3,4,5)")
    assert [str(a) for a in alpha] == ["0", "0", "0", "-x[5][2]", "x[4][2]", "-x[3][2]", "0", "0", "0", "x[1][2]"]


def test_suite_report():
    rep = detgb.run_suite("all", "symmetric:2")
    assert rep["shape"] == "symmetric:2"
    assert all(c["status"] == "pass" for c in rep["checks"])
    with pytest.raises(ValueError):
        detgb.run_suite("nope", "square:2")
