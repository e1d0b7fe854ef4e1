import random

import numpy as np
import pytest

from eisenflat.algebra import linalg
from eisenflat.errors import InternalError


def test_row_reduce_pivots_and_rank():
    m = [[0, 2, 4], [1, 1, 1], [1, 3, 5]]
    rref, pivots = linalg.row_reduce(m, 7)
    assert pivots == (0, 1)
    assert linalg.rank(m, 7) == 2
    assert rref[0].tolist() == [1, 0, 6]
    assert rref[1].tolist() == [0, 1, 2]


def test_nullspace_is_killed_by_the_matrix():
    rng = random.Random(3)
    for p in (3, 5, 101):
        for _ in range(10):
            rows, cols = rng.randint(1, 6), rng.randint(1, 8)
            m = np.array([[rng.randrange(p) for _ in range(cols)] for _ in range(rows)], dtype=np.int64)
            kernel = linalg.nullspace(m, p)
            assert kernel.shape == (cols, cols - linalg.rank(m, p))
            assert not ((m @ kernel) % p).any()


def test_solve_restricted_recovers_the_operator_on_an_invariant_subspace():
    p = 11
    a = np.array([[2, 1, 0], [0, 2, 0], [0, 0, 5]], dtype=np.int64)
    basis = np.array([[1, 0], [0, 1], [0, 0]], dtype=np.int64)
    x = linalg.solve_restricted(basis, linalg.matmul(a, basis, p), p)
    assert x.tolist() == [[2, 1], [0, 2]]


def test_solve_restricted_rejects_non_invariant_subspace():
    a = np.array([[0, 0], [1, 0]], dtype=np.int64)
    basis = np.array([[1], [0]], dtype=np.int64)
    with pytest.raises(InternalError):
        linalg.solve_restricted(basis, linalg.matmul(a, basis, 5), 5)


def test_matrix_power():
    m = np.array([[1, 1], [0, 1]], dtype=np.int64)
    assert linalg.matrix_power(m, 10, 7).tolist() == [[1, 3], [0, 1]]
    assert linalg.matrix_power(m, 0, 7).tolist() == [[1, 0], [0, 1]]


def test_span_tracker():
    span = linalg.SpanTracker(3, 3)
    assert span.add([1, 2, 0])
    assert not span.add([2, 1, 0])
    assert span.add([0, 0, 1])
    assert len(span) == 2
    assert span.contains([1, 2, 2])
    assert len(span.elements()) == 9
