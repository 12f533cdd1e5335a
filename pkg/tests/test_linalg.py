import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from azumaya.fields import QQ, PrimeField
from azumaya.linalg import ExactMatrix, LinAlgError

from oracles import cofactor_det, loop_kron


def mat(rows, field=QQ):
    return ExactMatrix.from_rows(field, rows)


def test_det_one_by_one():
    assert mat([[5]]).det() == 5


def test_det_permutation():
    assert mat([[0, 1], [1, 0]]).det() == -1


def test_det_non_square_raises():
    with pytest.raises(LinAlgError):
        mat([[1, 2, 3], [4, 5, 6]]).det()


def test_det_twisted_pairing_matrix_vs_cofactor_oracle(e1):
    # The 4x4 twisted pairing matrix at the unit parameter point; the
    # expected value is frozen from the cofactor-expansion oracle.
    from azumaya.braided import cleft_is_azumaya
    from azumaya.en_family import build_clifford, derive_cocycle_from_cleft, rform_en
    from conftest import params1

    p = params1(1, 0, 0, t=1)
    cl = build_clifford(p, e1, verify=False)
    sigma = derive_cocycle_from_cleft(cl, e1, verify=False)
    ev = cleft_is_azumaya(e1, sigma, rform_en(1, [[1]], QQ))
    theta = ev.r_twisted.as_matrix()
    oracle = cofactor_det(theta.to_rows())
    assert theta.det() == oracle == Fraction(-4)
    assert ev.pairing_det == -4 != 0


def test_kernel_identity_empty():
    assert ExactMatrix.identity(QQ, 3).kernel_basis() == []


def test_kernel_zero_two_vectors():
    basis = ExactMatrix.zeros(QQ, 2, 2).kernel_basis()
    assert len(basis) == 2


def test_kernel_criterion_matrix_rank_one_case():
    # 2*alpha*B + Gamma at alpha=1, B=(0), gamma=(1): the 1x1 matrix (1).
    m = mat([[2 * 1 * 0 + 1 * 1]])
    assert m.kernel_basis() == []


def test_kron_identities():
    i2 = ExactMatrix.identity(QQ, 2)
    i3 = ExactMatrix.identity(QQ, 3)
    assert i2.kron(i3) == ExactMatrix.identity(QQ, 6)
    assert mat([[2]]).kron(mat([[3]])) == mat([[6]])


def test_kron_matches_loop_oracle():
    rng = random.Random(5)
    a = mat([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)] for _ in range(2)])
    b = mat([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)] for _ in range(2)])
    assert a.kron(b) == loop_kron(a, b)


small_entry = st.integers(-6, 6)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small_entry, min_size=4, max_size=4), min_size=4, max_size=4),
       st.lists(st.lists(small_entry, min_size=4, max_size=4), min_size=4, max_size=4))
def test_det_multiplicative(rows_a, rows_b):
    a, b = mat(rows_a), mat(rows_b)
    assert (a @ b).det() == a.det() * b.det()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(small_entry, min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(st.lists(small_entry, min_size=2, max_size=2), min_size=2, max_size=2),
       st.lists(st.lists(small_entry, min_size=2, max_size=2), min_size=2, max_size=2))
def test_kron_associative(ra, rb, rc):
    a, b, c = mat(ra), mat(rb), mat(rc)
    assert a.kron(b).kron(c) == a.kron(b.kron(c))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small_entry, min_size=4, max_size=4), min_size=3, max_size=3))
def test_kernel_and_rank_nullity(rows):
    m = mat(rows)
    basis = m.kernel_basis()
    for v in basis:
        assert all(x == 0 for x in m.apply(v))
    assert m.cols == m.rank() + len(basis)


def test_det_against_cofactor_random_rationals():
    rng = random.Random(17)
    for _ in range(10):
        rows = [
            [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
            for _ in range(4)
        ]
        assert mat(rows).det() == cofactor_det(rows)


def test_prime_field_matrix_ops():
    f5 = PrimeField(5)
    m = mat([[1, 2], [3, 4]], f5)
    assert m.det() == f5(-2)
    inv = m.inverse()
    assert m @ inv == ExactMatrix.identity(f5, 2)
    singular = mat([[1, 2], [2, 4]], f5)
    assert singular.det() == 0
    assert len(singular.kernel_basis()) == 1
    with pytest.raises(LinAlgError):
        singular.inverse()


def test_solve_and_inverse_rational():
    m = mat([["1/2", 1, 0], [1, 0, 3], [0, "2/3", 1]])
    x = m.solve([1, 2, 3])
    assert list(m.apply(x)) == [1, 2, 3]
    assert m @ m.inverse() == ExactMatrix.identity(QQ, 3)
