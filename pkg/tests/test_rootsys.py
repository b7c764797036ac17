from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from d4check import rootsys
from d4check.linalg import determinant, to_matrix
from d4check.rootsys import RootVector, build_d4, compose, identity_element


@pytest.fixture(scope="module")
def rs():
    return build_d4(4)


@pytest.fixture(scope="module")
def gens(rs):
    return rootsys.simple_generators(rs)


@pytest.fixture(scope="module")
def group(gens):
    return rootsys.enumerate_group(gens.values())


def test_first_root(rs):
    assert rs.root(1) == RootVector.of(1, -1, 0, 0)


def test_twelve_positive_roots(rs):
    assert len(rs.positive_roots) == 12


def test_all_roots_have_squared_length_two(rs):
    assert all(a.inner(a) == 2 for a in rs.positive_roots)


def test_invalid_multiplicity():
    with pytest.raises(ValueError):
        build_d4(0)


def test_cartan_numbers(rs):
    assert rootsys.cartan_number(rs, 1, 2) == -1
    assert rootsys.cartan_number(rs, 1, 9) == 0
    assert all(rootsys.cartan_number(rs, i, i) == 2 for i in range(1, 13))


def test_simple_cartan_matrix(rs):
    m = rootsys.simple_cartan_matrix(rs)
    assert m == [
        [2, -1, 0, 0],
        [-1, 2, -1, -1],
        [0, -1, 2, 0],
        [0, -1, 0, 2],
    ]
    assert m == [list(col) for col in zip(*m)]  # symmetric


def test_cartan_determinant(rs):
    # oracle: exact determinant of the 4x4 integer matrix
    m = to_matrix(rootsys.simple_cartan_matrix(rs))
    assert determinant(m) == 4


def test_generator_actions(rs, gens):
    e1 = RootVector.of(1, 0, 0, 0)
    e2 = RootVector.of(0, 1, 0, 0)
    e3 = RootVector.of(0, 0, 1, 0)
    e4 = RootVector.of(0, 0, 0, 1)
    assert gens[1].apply(e1) == e2 and gens[1].apply(e2) == e1
    assert gens[9].apply(e3) == -e4 and gens[9].apply(e4) == -e3


def test_reflections_are_involutions(rs):
    ident = identity_element()
    for i in range(1, 13):
        s = rootsys.reflection(rs, i)
        sq = compose(s, s)
        assert (sq.perm, sq.signs) == (ident.perm, ident.signs)


def test_apply_examples(rs, gens):
    a1 = rs.root(1)
    assert gens[2].apply(a1) == rs.root(4)
    w = compose(gens[9], gens[2])
    assert w.apply(a1) == rs.root(12)
    assert identity_element().apply(a1) == a1


def test_group_order(group):
    assert len(group) == 192


def test_stabilizer_subgroup(rs, gens):
    sub = rootsys.enumerate_group([gens[1], gens[2], gens[3]])
    assert len(sub) == 24
    b = RootVector.of(1, 1, 1, 1)
    assert all(w.apply(b) == b for w in sub)


def test_stabilizer_is_exact(rs, gens, group):
    # nothing outside the order-24 subgroup fixes the chamber-edge point
    b = RootVector.of(1, 1, 1, 1)
    fixers = [w for w in group if w.apply(b) == b]
    assert len(fixers) == 24


def test_empty_generator_set():
    assert len(rootsys.enumerate_group([])) == 1


def test_orbit_of_first_root(rs, group):
    orb = rootsys.orbit(group, rs.root(1))
    assert len(orb) == 24
    full = {a for a in rs.positive_roots} | {-a for a in rs.positive_roots}
    assert orb == full


def test_orbit_of_identity(rs):
    v = RootVector.of(3, 1, 4, 1)
    assert rootsys.orbit([identity_element()], v) == {v}


def test_word_table(rs):
    assert all(rootsys.verify_word_table(rs).values())


def test_words_replay_to_elements(rs, gens, group):
    for w in group:
        replay = rootsys.element_from_word(w.word, gens)
        assert (replay.perm, replay.signs) == (w.perm, w.signs)


def test_even_sign_invariant(group):
    assert all(w.sign_product() == 1 for w in group)


def test_group_closure_and_inverses(group):
    keys = {(w.perm, w.signs) for w in group}
    for w in group[:20]:
        for v in group[:20]:
            c = compose(w, v)
            assert (c.perm, c.signs) in keys
        inv = w.inverse()
        assert (inv.perm, inv.signs) in keys


def test_roots_permuted_by_group(rs, group):
    full = {a for a in rs.positive_roots} | {-a for a in rs.positive_roots}
    for w in group:
        assert {w.apply(a) for a in full} == full


rational = st.fractions(
    min_value=-10, max_value=10, max_denominator=7
)
vectors = st.tuples(rational, rational, rational, rational).map(
    lambda t: RootVector(tuple(Fraction(x) for x in t))
)


@given(vectors, vectors, st.integers(min_value=0, max_value=191))
def test_group_acts_by_isometries(u, v, n):
    rs = build_d4(4)
    group = rootsys.enumerate_group(rootsys.simple_generators(rs).values())
    w = group[n]
    assert w.apply(u).inner(w.apply(v)) == u.inner(v)


def test_ambient_dims():
    spec = rootsys.ambient_dims(4)
    assert (spec.dim_M, spec.ambient_n) == (48, 52)
    spec2 = rootsys.ambient_dims(2)
    assert (spec2.dim_M, spec2.ambient_n) == (24, 28)
    with pytest.raises(ValueError):
        rootsys.ambient_dims(0)
