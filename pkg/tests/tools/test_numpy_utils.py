import numpy as np

from lanq.tools.numpy_utils import is_hermitian, matrices_close, matrix_to_json, partial_trace


def test_matrices_close():
    assert matrices_close(np.eye(2), np.eye(2) + 1e-12)
    assert not matrices_close(np.eye(2), np.eye(3))
    assert not matrices_close(np.eye(2), np.zeros((2, 2)))


def test_is_hermitian():
    assert is_hermitian(np.array([[1, 1j], [-1j, 2]]))
    assert not is_hermitian(np.array([[1, 1j], [1j, 2]]))


def test_json_form():
    matrix = np.array([[1, 2j], [0.5, -1]])
    assert matrix_to_json(matrix) == [
        [[1.0, 0.0], [0.0, 2.0]],
        [[0.5, 0.0], [-1.0, 0.0]],
    ]


def test_partial_trace_of_a_product():
    first = np.diag([0.25, 0.75])
    second = np.full((3, 3), 1 / 3)
    rho = np.kron(first, second)
    assert matrices_close(partial_trace(rho, (2, 3), [0]), first)
    assert matrices_close(partial_trace(rho, (2, 3), [1]), second)
    assert matrices_close(partial_trace(rho, (2, 3), [1, 0]), np.kron(second, first))
