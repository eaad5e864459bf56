import itertools

import numpy as np
import pytest

from conftest import magma
from invgroupoid import algebra, bridge, zoo
from invgroupoid.algebra import StructureConstantAlgebra

GROUPOIDS = zoo.standard_groupoids()


def test_pair_algebra_matrix_units():
    n = 3
    g = zoo.gen_pair_groupoid(n)
    a = algebra.groupoid_algebra(g)
    for x, y in itertools.product(range(g.order), repeat=2):
        i, j = divmod(x, n)
        k, l = divmod(y, n)
        assert a.constants[x, y] == (i * n + l if j == k else -1)


def test_group_algebra():
    a = algebra.groupoid_algebra(zoo.gen_cyclic_group(5))
    assert a.constants.tolist() == [[(i + j) % 5 for j in range(5)] for i in range(5)]


def test_empty_algebra():
    a = algebra.groupoid_algebra(zoo.empty_groupoid())
    assert a.dimension == 0
    assert algebra.algebras_identical(a, a, []) == (True, None)


def test_contracted_zero_e(zero_e):
    s = bridge.FiniteInverseSemigroup.from_magma(zero_e)
    a = algebra.contracted_semigroup_algebra(s)
    assert a.basis == ("e",) and a.constants.tolist() == [[0]]


def test_contracted_pair2_matches_groupoid():
    g = zoo.gen_pair_groupoid(2)
    a = algebra.contracted_semigroup_algebra(bridge.s_of_g(g))
    assert a.dimension == 4
    assert np.array_equal(a.constants, algebra.groupoid_algebra(g).constants)


def test_contracted_z3_is_group_algebra():
    a = algebra.contracted_semigroup_algebra(bridge.s_of_g(zoo.gen_cyclic_group(3)))
    assert a.constants.tolist() == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def test_contracted_needs_zero(z3):
    s = bridge.FiniteInverseSemigroup.from_magma(z3)
    with pytest.raises(ValueError, match="zero"):
        algebra.contracted_semigroup_algebra(s)


@pytest.mark.parametrize("g", GROUPOIDS, ids=lambda g: str(g.order))
def test_algebras_identical_and_associative(g):
    a = algebra.groupoid_algebra(g)
    b = algebra.contracted_semigroup_algebra(bridge.s_of_g(g))
    assert algebra.algebras_identical(a, b, algebra.canonical_bijection(g)) == (True, None)
    assert a.is_associative() and b.is_associative()


def test_pair_vs_cyclic_never_identical():
    a = algebra.groupoid_algebra(zoo.gen_pair_groupoid(2))
    b = algebra.groupoid_algebra(zoo.gen_cyclic_group(4))
    for perm in itertools.permutations(range(4)):
        same, mismatch = algebra.algebras_identical(a, b, perm)
        assert not same
        phi = np.array(perm)
        left = a.constants[mismatch.i, mismatch.j]
        assert (-1 if left < 0 else phi[left]) != b.constants[phi[mismatch.i], phi[mismatch.j]]


def test_algebras_identical_size_mismatch():
    a = algebra.groupoid_algebra(zoo.gen_cyclic_group(2))
    b = algebra.groupoid_algebra(zoo.gen_cyclic_group(3))
    with pytest.raises(ValueError):
        algebra.algebras_identical(a, b, [0, 1])


def test_nonassociative_constants_detected():
    bad = StructureConstantAlgebra(("x", "y"), [[1, -1], [0, 1]])
    assert bad.first_nonassociative() is not None


def test_regular_representation_trivial():
    pi = algebra.regular_representation(zoo.gen_cyclic_group(1))
    assert pi.tolist() == [[[1]]]


def test_regular_representation_pair2():
    g = zoo.gen_pair_groupoid(2)
    pi = algebra.regular_representation(g)
    idx = g.names.index
    m = pi[idx("1:2")]
    for b, name in enumerate(g.names):
        i, j = name.split(":")
        column = m[:, b]
        if i == "2":
            assert column.tolist() == np.eye(4, dtype=int)[idx(f"1:{j}")].tolist()
        else:
            assert not column.any()


def test_regular_representation_cyclic_permutations():
    pi = algebra.regular_representation(zoo.gen_cyclic_group(6))
    for m in pi:
        assert (m.sum(axis=0) == 1).all() and (m.sum(axis=1) == 1).all()


@pytest.mark.parametrize("g", GROUPOIDS, ids=lambda g: str(g.order))
def test_regular_representation_properties(g):
    pi = algebra.regular_representation(g)
    for x in range(g.order):
        assert algebra.is_partial_permutation(pi[x])
        assert np.array_equal(pi[g.inverse[x]], pi[x].T)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_pair_representation_entry_count(n):
    for m in algebra.regular_representation(zoo.gen_pair_groupoid(n)):
        assert int(m.sum()) == n


@pytest.mark.parametrize("g", GROUPOIDS, ids=lambda g: str(g.order))
def test_star_representation(g):
    s = bridge.s_of_g(g)
    pi = algebra.extend_by_zero(algebra.regular_representation(g), s)
    assert algebra.check_star_representation(s, pi)


def test_zero_representation_is_star():
    s = bridge.s_of_g(zoo.gen_pair_groupoid(2))
    report = algebra.check_star_representation(s, np.zeros((5, 3, 3), dtype=int))
    assert report.ok and report.multiplicative and report.star


def test_flipped_entry_detected():
    g = zoo.gen_pair_groupoid(2)
    s = bridge.s_of_g(g)
    base = algebra.extend_by_zero(algebra.regular_representation(g), s)
    for x in range(s.order):
        for i, j in itertools.product(range(4), repeat=2):
            pi = base.copy()
            pi[x, i, j] ^= 1
            report = algebra.check_star_representation(s, pi)
            assert not report
            w = report.witness
            if w.law == "product":
                a, b = w.elements
                assert not np.array_equal(pi[a] @ pi[b], pi[s.table[a, b]])
            elif w.law == "star":
                (a,) = w.elements
                assert not np.array_equal(pi[s.star[a]], pi[a].T)
            else:
                assert pi[s.designated.zero].any()


def test_representation_dimension_mismatch():
    s = bridge.s_of_g(zoo.gen_cyclic_group(2))
    with pytest.raises(ValueError):
        algebra.check_star_representation(s, np.zeros((2, 2, 2), dtype=int))
