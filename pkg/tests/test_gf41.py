"""GF(41) arithmetic and the reduction from Q(zeta20)."""

import pytest
from hypothesis import given, settings, strategies as st

from tits27 import cyclo, gf41
from tits27.gf41 import OMEGA, OMEGA_INV, Gf41, evaluate_at, gf, lift_table, reduce_cyc

small_cyc = st.builds(
    cyclo.CycNum,
    st.tuples(*[st.integers(-4, 4) for _ in range(8)]),
    st.integers(1, 5),
)


def test_field_examples():
    assert gf(5).inverse() == gf(33)
    assert gf(9) * gf(9) == gf(40)
    assert gf(16) ** 5 == gf(1)


def test_division():
    assert gf(7) / gf(7) == gf(1)
    with pytest.raises(ZeroDivisionError):
        gf(3) / gf(0)
    with pytest.raises(ZeroDivisionError):
        gf(0).inverse()


def test_omega_is_unique_by_brute_force():
    hits = [w for w in range(1, 41) if pow(w, 4, 41) == 16 and pow(w, 5, 41) == 9]
    assert hits == [39]
    assert OMEGA == 39
    assert OMEGA == 9 * pow(16, -1, 41) % 41


def test_reduce_named_constants():
    assert reduce_cyc(cyclo.I) == gf(9)
    assert reduce_cyc(cyclo.Z) == gf(16)
    assert reduce_cyc(cyclo.Z ** 2) == gf(10)
    assert reduce_cyc(cyclo.Z ** 3) == gf(37)
    assert reduce_cyc(cyclo.Z ** 4) == gf(18)
    assert reduce_cyc(cyclo.SIGMA) == gf(7)
    assert reduce_cyc(cyclo.TAU) == gf(35)
    assert reduce_cyc(cyclo.FIFTH) == gf(33)
    assert reduce_cyc(cyclo.CycNum.zeta(1)) == gf(39)


def test_reduce_rejects_denominator_41():
    with pytest.raises(ZeroDivisionError):
        reduce_cyc(cyclo.CycNum.rational(1, 41))


def test_lift_table_round_trip():
    table = lift_table()
    for residue, value in table.items():
        assert reduce_cyc(value) == residue
    assert table[gf(16)] == cyclo.Z
    assert table[gf(10)] == cyclo.Z ** 2
    assert table[gf(37)] == cyclo.Z ** 3
    assert table[gf(18)] == cyclo.Z ** 4
    assert table[gf(33)] == cyclo.FIFTH


def test_fifth_roots_canonical():
    assert tuple(r.value for r in gf41.PRIMITIVE_FIFTH_ROOTS) == (16, 10, 37, 18)
    for r in gf41.PRIMITIVE_FIFTH_ROOTS:
        assert r ** 5 == gf(1) and r != gf(1)
    assert gf(-4) == gf(37)


@settings(max_examples=60, deadline=None)
@given(small_cyc, small_cyc)
def test_reduce_is_ring_homomorphism(a, b):
    assert reduce_cyc(a * b) == reduce_cyc(a) * reduce_cyc(b)
    assert reduce_cyc(a + b) == reduce_cyc(a) + reduce_cyc(b)


@settings(max_examples=60, deadline=None)
@given(small_cyc)
def test_reduce_commutes_with_conjugation(a):
    # conjugation downstairs is evaluation at omega^-1
    assert reduce_cyc(a.conj()) == evaluate_at(a, OMEGA_INV)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 40), st.integers(0, 40))
def test_field_axioms(x, y):
    a, b = gf(x), gf(y)
    assert a + b == b + a
    assert a * b == b * a
    assert -(-a) == a
    if y != 0:
        assert (a / b) * b == a


def test_interning_and_hash():
    assert gf(42) == gf(1)
    assert hash(gf(5)) == hash(Gf41(46))
    assert str(gf(40)) == "40"
