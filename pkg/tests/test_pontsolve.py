from fractions import Fraction

import pytest

from d4check import pontsolve as ps
from d4check.rootsys import build_d4


@pytest.fixture(scope="module")
def rs():
    return build_d4(4)


@pytest.fixture(scope="module")
def classes(rs):
    return ps.orbit_classes(rs, ps.generic_class())


def F(x):
    return Fraction(x)


def test_base_class_is_generic(classes):
    assert classes[1] == ps.generic_class()


def test_orbit_class_for_second_root(classes):
    # at k1=k2=k this is k3*t1 + k*t2 + k*t3 + k4*t4
    got = [ps._substitute(f, False) for f in classes[2]]
    assert got == [
        (F(0), F(1), F(0)),
        (F(1), F(0), F(0)),
        (F(1), F(0), F(0)),
        (F(0), F(0), F(1)),
    ]


def test_orbit_class_for_seventh_root(classes):
    # k*t1 - k*t2 + k3*t3 - k4*t4
    got = [ps._substitute(f, False) for f in classes[7]]
    assert got == [
        (F(1), F(0), F(0)),
        (F(-1), F(0), F(0)),
        (F(0), F(1), F(0)),
        (F(0), F(0), F(-1)),
    ]


def test_full_orbit_table(classes):
    assert all(ps.check_orbit_table(classes).values())


def test_focal_table(classes):
    assert all(ps.check_focal_table(classes).values())


def test_pullback_roundtrip(rs, classes):
    # applying a word then its reverse returns every class unchanged
    from d4check.cohomring import t_actions

    acts = t_actions(rs)
    for idx, word in ps.ORBIT_WORDS.items():
        cls = classes[idx]
        for label in word:
            cls = ps.apply_pullback(acts[label], cls)
        for label in reversed(word):
            cls = ps.apply_pullback(acts[label], cls)
        assert cls == classes[idx]


def test_leaf_sphere_constraint():
    eq = ps.leaf_sphere_constraint()
    assert eq.coeffs == (F(1), F(-1), F(0), F(0))


def test_sum_zero_constraints(classes):
    eqs = ps.sum_zero_constraint(classes)
    # t1 column: 6k + 6k3, the equation that forces k3 = -k
    assert eqs[0].coeffs == (F(6), F(0), F(6), F(0))
    # t2 and t3 columns are scalar multiples of it (redundant after k3 = -k)
    assert eqs[1].coeffs == (F(4), F(0), F(4), F(0))
    assert eqs[2].coeffs == (F(2), F(0), F(2), F(0))
    # t4 column cancels identically
    assert eqs[3].is_trivial()


def test_focal_sum_factors(classes):
    # with k3 = -k folded in, the focal sum is -(k + k4)(t2 + 2 t3 + 3 t4)
    fsum = ps.focal_sum_reduced(classes)
    assert fsum == [
        (F(0), F(0), F(0)),
        (F(-1), F(0), F(-1)),
        (F(-2), F(0), F(-2)),
        (F(-3), F(0), F(-3)),
    ]


def test_symmetry_constraints_reduce_to_k4(rs, classes):
    # together with the other constraints, symmetry forces k4 = -k
    eqs = ps.assemble_constraints(rs, include_symmetry=True)
    basis = ps.solve(eqs)
    assert len(basis) == 1
    v = basis[0]
    scaled = [x / v[0] for x in v]
    assert scaled == [F(1), F(1), F(-1), F(-1)]


def test_solution_annihilates_every_constraint(rs):
    eqs = ps.assemble_constraints(rs, include_symmetry=True)
    v = [F(1), F(1), F(-1), F(-1)]
    for eq in eqs:
        assert sum(c * x for c, x in zip(eq.coeffs, v)) == 0


def test_without_symmetry_dimension_two(rs):
    eqs = ps.assemble_constraints(rs, include_symmetry=False)
    basis = ps.solve(eqs)
    assert len(basis) == 2
    # the plane is { (k, k, -k, k4) }
    for v in basis:
        assert v[0] == v[1] and v[2] == -v[0]


def test_empty_system_is_four_dimensional():
    assert len(ps.solve([])) == 4


def test_lemma8_classes(rs):
    euler, p1_unit = ps.lemma8_classes(rs)
    assert euler.coords == (2, -1, 0, 0)
    assert p1_unit.coords == (0, 2, 0, -2)


def test_focal_sum_vanishes_at_solution(rs, classes):
    # substituting k1=k2=k, k3=k4=-k kills the focal sum entirely
    total = ps.focal_sum(classes)
    sol = [F(1), F(1), F(-1), F(-1)]
    for form in total:
        assert sum(c * x for c, x in zip(form, sol)) == 0
