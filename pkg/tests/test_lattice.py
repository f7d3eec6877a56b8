from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kmroot import catalog
from kmroot.errors import (
    HostMismatch,
    IndexOutOfRange,
    NegativeCoordinates,
    NotAffine,
    NotNormTwo,
    SingularMatrix,
    TheoremHypothesisViolated,
)
from kmroot.lattice import (
    RootLattice,
    descend,
    fundamental_weights,
    is_positive_real_root,
    is_positive_real_root_descent,
    is_positive_real_root_norm,
    lattice_box,
    null_root,
    pairing,
    real_roots_by_reflection,
    real_roots_up_to_height,
    reflect_by,
    simple_reflection,
)

from conftest import lattice_of


def test_basic_pairings(e10):
    a = e10.simple_root
    assert pairing(a("-1"), a("-1")) == 2
    assert pairing(a("-1"), a("0")) == -1
    assert pairing(a("5"), a("8")) == -1
    assert pairing(a("-1"), a("8")) == 0


def test_vector_arithmetic(e10):
    x = e10.vector({"0": 2, "1": 1})
    y = e10.simple_root("1")
    assert (x - y).coords == e10.vector({"0": 2}).coords
    assert (x + y).height == 4
    assert (-x).coords[e10.index("0")] == -2
    assert (x * 3).height == 9
    assert x.norm() == pairing(x, x) == 8 - 4 + 2


def test_index_rules(e10):
    assert e10.index(0) == 0
    assert e10.index("0") == 1
    with pytest.raises(IndexOutOfRange):
        e10.index(10)
    with pytest.raises(IndexOutOfRange):
        e10.index("9")


def test_mixed_hosts_rejected(e10, ha1):
    with pytest.raises(HostMismatch):
        pairing(e10.simple_root(0), ha1.simple_root(0))


def test_simple_reflection_negates(e10):
    for i in range(e10.n):
        a = e10.simple_root(i)
        assert simple_reflection(i, a).coords == (-a).coords


small = st.lists(st.integers(-3, 3), min_size=10, max_size=10)


@given(small, small, st.integers(0, 9))
@settings(max_examples=300, deadline=None)
def test_reflection_is_an_isometric_involution(x, y, i):
    host = lattice_of("E10")
    u, v = host.vector(x), host.vector(y)
    su, sv = simple_reflection(i, u), simple_reflection(i, v)
    assert pairing(su, sv) == pairing(u, v)
    assert simple_reflection(i, su) == u


def test_reflect_by_matches_simple_reflection(e10):
    x = e10.vector(range(10))
    for i in range(10):
        assert reflect_by(e10.simple_root(i), x) == simple_reflection(i, x)


def test_reflect_by_needs_norm_two(e10):
    with pytest.raises(NotNormTwo):
        reflect_by(e10.vector({"0": 1, "1": 1, "2": 1, "-1": 1, "8": 1}) * 2, e10.zero())


def test_null_root_e8():
    host = lattice_of("E_8(1)")
    delta = null_root(host)
    # nodes 0..8: the familiar marks of the affine E8 diagram
    assert delta.coords == (1, 2, 3, 4, 5, 6, 4, 2, 3)
    assert all(pairing(delta, host.simple_root(i)) == 0 for i in range(host.n))


def test_null_root_a1():
    assert null_root(lattice_of("A_1(1)")).coords == (1, 1)


@pytest.mark.parametrize("name", catalog.DEFAULT.names(("affine",)))
def test_null_root_every_affine(name):
    host = lattice_of(name)
    delta = null_root(host)
    assert all(c > 0 for c in delta.coords)
    assert delta.coords[host.index("0")] == 1
    assert all(pairing(delta, host.simple_root(i)) == 0 for i in range(host.n))


def test_null_root_requires_affine(e10):
    with pytest.raises(NotAffine):
        null_root(e10)


def test_delta_pairs_with_extra_root(e10):
    # E8(1) sits in E10 on labels 0..8; its null root pairs to -1 with a_{-1}
    coeffs = dict(zip(map(str, range(9)), (1, 2, 3, 4, 5, 6, 4, 2, 3)))
    delta = e10.vector(coeffs)
    assert delta.norm() == 0
    assert pairing(delta, e10.simple_root("-1")) == -1


def test_fundamental_weights_dual_basis(e10):
    ws = fundamental_weights(e10)
    for i, w in enumerate(ws):
        for j in range(e10.n):
            assert pairing(w, e10.simple_root(j)) == (1 if i == j else 0)
    # E10 is unimodular, so every weight is in the root lattice
    assert all(w.is_integral() for w in ws)


def test_weight_combination_is_a_norm_two_root(e10):
    ws = fundamental_weights(e10)
    lam = lambda lab: ws[e10.index(lab)]
    v = (lam("7") - 3 * lam("0")).to_root_vector()
    assert v.coords == (1, 2, 6, 10, 14, 18, 22, 15, 8, 11)
    assert v.norm() == 2
    assert is_positive_real_root(v)


def test_weights_of_nonunimodular_host_are_fractional():
    ws = fundamental_weights(lattice_of("A2"))
    assert ws[0].coords == (Fraction(2, 3), Fraction(1, 3))
    with pytest.raises(ValueError):
        ws[0].to_root_vector()


def test_weights_need_nonsingular():
    with pytest.raises(SingularMatrix):
        fundamental_weights(lattice_of("A_1(1)"))


def test_affine_a1_roots_to_height_5():
    host = lattice_of("A_1(1)")
    got = {r.coords for r in real_roots_up_to_height(host, 5)}
    # |a - b| = 1 with a + b <= 5, checked by hand
    assert got == {(1, 0), (0, 1), (2, 1), (1, 2), (3, 2), (2, 3)}


@pytest.mark.parametrize("name", ["E10", "HA_1(1)", "T2", "A_3(1)", "A2"])
def test_norm_and_descent_agree(name):
    host = lattice_of(name)
    h = 8 if host.n > 3 else 12
    for x in lattice_box(host, h):
        assert is_positive_real_root_norm(x) == is_positive_real_root_descent(x), x


@pytest.mark.parametrize("name", ["E10", "HA_1(1)", "Y4", "D_4(1)"])
def test_box_and_climb_agree(name):
    host = lattice_of(name)
    assert real_roots_up_to_height(host, 8) == real_roots_by_reflection(host, 8)


def test_e10_root_count_regression(e10):
    assert len(real_roots_up_to_height(e10, 8)) == 75
    assert len(real_roots_up_to_height(lattice_of("HA_1(1)"), 8)) == 15


def test_descent_trace(e10):
    v = e10.vector({"0": 1, "1": 1})
    ok, trace = descend(v)
    assert ok and trace == [e10.index("0")]
    with pytest.raises(NegativeCoordinates):
        descend(-v)


def test_norm_test_out_of_scope():
    host = lattice_of("P10")
    assert host.in_norm_scope is False
    with pytest.raises(TheoremHypothesisViolated):
        is_positive_real_root_norm(host.simple_root(0))
    # descent still answers
    assert is_positive_real_root(host.simple_root(0))
    assert not is_positive_real_root(host.simple_root(0) * 2)
