from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from injspec.errors import BadParameter, BadRange, EliminationFailure
from injspec.ncspec.qplane import QGeneric, QSimple, QuantumPlane, WeightHull, valuation
from qplane_oracle import hom_nonzero

qp = QuantumPlane(2)


def test_parameter_checks():
    for bad in (0, 1, -1):
        with pytest.raises(BadParameter):
            QuantumPlane(bad)
    with pytest.raises(BadRange):
        qp.weight_truncation(1, 3, 3)


def test_canonical_weights():
    assert qp.weight_hull(1) == qp.weight_hull(Fraction(1, 8)) == WeightHull(Fraction(1))
    assert qp.weight_hull(3) == qp.weight_hull(Fraction(3, 4)) == WeightHull(Fraction(3))
    q4 = QuantumPlane(Fraction(1, 4))
    assert q4.weight_hull(2) == q4.weight_hull(8) == q4.weight_hull(Fraction(1, 2)) == WeightHull(Fraction(2))
    assert q4.weight_hull(1) != q4.weight_hull(2)


def test_truncation_is_a_module_with_simple_socle():
    t = qp.weight_truncation(1, 0, 3)
    assert all(c == 0 for row in qp.relation_residual(t) for c in row)
    ((v, mu),) = qp.truncation_socle(t)
    assert mu == Fraction(1, 4) and v[2] != 0 and v[0] == v[1] == 0


def test_uniserial_truncation():
    assert qp.verify_uniserial_truncation(1, 5) == [0, 1, 2, 3, 4, 5]
    assert qp.cyclic_submodule_start(1, 4, [0, 3, 1, 0]) == 1
    with pytest.raises(EliminationFailure):
        qp.cyclic_submodule_start(1, 4, [0, 0, 0, 0])


def test_descending_chain():
    chain = qp.descending_chain_witness(1, 3)
    assert [w.mu for _, w in chain] == [1, Fraction(1, 2), Fraction(1, 4)]


def test_hom_examples():
    assert qp.hom_to_simple_hull(1, 0, 1)
    assert not qp.hom_to_simple_hull(1, 1, 1)
    assert qp.hom_to_simple_hull(1, 2, Fraction(1, 8))
    assert not qp.hom_to_simple_hull(1, 0, 2)
    assert not qp.hom_to_simple_hull(1, 0, 3)


def test_specialisation():
    hull, s = qp.weight_hull(1), qp.simple(1)
    assert qp.specializes(QGeneric(), hull) and qp.specializes(QGeneric(), s)
    for j in range(8):
        assert not qp.specializes(hull, QSimple(Fraction(1, 2 ** j)))
    assert not qp.specializes(s, hull)
    assert qp.specializes(hull, qp.weight_hull(4))
    assert [qp.critical_dimension(p) for p in (QGeneric(), hull, s)] == [2, 1, 0]


def test_basic_closed_membership():
    assert qp.in_basic_closed(1, 5, qp.weight_hull(1))
    assert qp.in_basic_closed(1, 2, QSimple(Fraction(1, 4)))
    assert not qp.in_basic_closed(1, 3, QSimple(Fraction(1, 4)))
    assert not qp.in_basic_closed(1, 0, QGeneric())


@pytest.mark.parametrize("q", [2, 3, Fraction(1, 2), Fraction(-2, 3)])
def test_hom_agrees_with_truncation_oracle(q):
    plane = QuantumPlane(q)
    lam = Fraction(3, 5)
    mus = [lam / Fraction(q) ** j for j in range(-2, 10)] + [Fraction(7), Fraction(-3, 5), Fraction(3, 7)]
    for n in range(0, 4):
        for mu in mus:
            assert plane.hom_to_simple_hull(lam, n, mu) == hom_nonzero(lam, q, n, mu, horizon=10)


nonzero = st.fractions(min_value=-50, max_value=50, max_denominator=30).filter(lambda x: x != 0)
qs = st.sampled_from([2, 3, 5, Fraction(1, 2), Fraction(2, 3), Fraction(-4, 9), 6, Fraction(-1, 12)])


@given(qs, nonzero, st.integers(-6, 6))
def test_canonical_weight_is_an_orbit_invariant(q, lam, k):
    plane = QuantumPlane(q)
    c = plane.canonical_weight(lam)
    assert plane.canonical_weight(lam * Fraction(q) ** k) == c
    assert plane.orbit_exponent(lam / c) is not None
    assert 0 <= valuation(c, plane.prime) < abs(plane.step)


@given(qs, nonzero, st.integers(0, 5), st.integers(-3, 8))
def test_hom_on_orbit(q, lam, n, j):
    plane = QuantumPlane(q)
    assert plane.hom_to_simple_hull(lam, n, lam / Fraction(q) ** j) == (j >= n)
