import itertools

import pytest

from csmlap import LabeledMatrix, OrderedIndexSet, det_leibniz, laplace_det, laplace_terms
from csmlap.index import Label
from csmlap.laplace import det_minor

from conftest import rand_int_matrix


def all_row_sets(A):
    for k in range(len(A.rows) + 1):
        yield from itertools.combinations(A.rows.labels, k)


def test_examples():
    A = LabeledMatrix.from_rows([[1, 2], [3, 4]])
    assert laplace_det(A, [1], "rank") == -2
    terms = laplace_terms(A, [], "rank")
    assert len(terms) == 1 and terms[0].sign == 1 and terms[0].product == -2


def test_term_counts():
    assert len(laplace_terms(LabeledMatrix.identity(3), [2])) == 3
    assert len(laplace_terms(LabeledMatrix.identity(4), [1, 3])) == 6
    nz = [t for t in laplace_terms(LabeledMatrix.identity(3), [1]) if t.product]
    assert len(nz) == 1 and nz[0].subset == (Label(1),)


def test_terms_sum_to_det(rng):
    A = rand_int_matrix(rng, 4)
    for K in all_row_sets(A):
        for v in ("position", "rank"):
            terms = laplace_terms(A, K, v)
            assert sum(t.product for t in terms) == laplace_det(A, K, v)
            for t in terms:
                assert t.product == t.sign * t.minor_first * t.minor_second


def test_all_binary_3x3():
    for flat in itertools.product((0, 1), repeat=9):
        A = LabeledMatrix.from_rows([flat[0:3], flat[3:6], flat[6:9]])
        d = det_leibniz(A)
        for K in all_row_sets(A):
            for v in ("position", "rank"):
                assert laplace_det(A, K, v) == d


def test_random_5x5_every_row_set(rng):
    for _ in range(200):
        A = rand_int_matrix(rng, 5)
        d = det_leibniz(A)
        for K in all_row_sets(A):
            assert laplace_det(A, K, "position") == d
            assert laplace_det(A, K, "rank") == d
            assert laplace_det(A, K, "rank", complement_form=True) == d


def test_complement_form_termwise(rng):
    A = rand_int_matrix(rng, 5)
    for K in all_row_sets(A):
        a = laplace_terms(A, K)
        b = laplace_terms(A, K, complement_form=True)
        assert [t.product for t in a] == [t.product for t in b]


def test_general_labels(rng):
    A = rand_int_matrix(rng, 5)
    rows = OrderedIndexSet(["e", "b", "z", "a", "q"])
    cols = OrderedIndexSet([10, -3, 7, 0, 2])
    B = A.relabel(rows, cols)
    d = det_leibniz(A)
    for K in all_row_sets(A):
        KB = [rows.labels[A.rows.index(k)] for k in K]
        for v in ("position", "rank"):
            assert laplace_det(B, KB, v) == laplace_det(A, K, v) == d


def test_larger_minors_use_row_expansion(rng):
    A = rand_int_matrix(rng, 7)
    assert det_minor(A) == det_leibniz(A)
    assert laplace_det(A, [2, 5]) == det_leibniz(A)


def test_symbolic():
    A = LabeledMatrix.symbolic(4)
    d = det_leibniz(A)
    assert laplace_det(A, [1, 3], "position") == d
    assert len(d.terms) == 24


def test_errors():
    with pytest.raises(ValueError):
        laplace_det(LabeledMatrix.from_rows([[1, 2]]), [1])
    with pytest.raises(ValueError):
        laplace_det(LabeledMatrix.identity(2), [3])
    with pytest.raises(ValueError):
        laplace_det(LabeledMatrix.identity(2), [1], "pi")
