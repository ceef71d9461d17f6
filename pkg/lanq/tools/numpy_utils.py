import numpy as np

TOLERANCE = 1e-9


def matrices_close(first, second, tolerance=TOLERANCE):
    """
    Exact-shape comparison of two complex matrices within an absolute tolerance.

    Args:
        first: numpy array.
        second: numpy array.
        tolerance: Largest allowed absolute difference of any entry.
    """
    first, second = np.asarray(first), np.asarray(second)
    if first.shape != second.shape:
        return False
    return bool(np.max(np.abs(first - second), initial=0.0) <= tolerance)


def is_hermitian(matrix, tolerance=TOLERANCE):
    return matrices_close(matrix, np.asarray(matrix).conj().T, tolerance)


def matrix_to_json(matrix):
    """Row-major nested lists of [re, im] pairs."""
    return [[[float(entry.real), float(entry.imag)] for entry in row] for row in np.asarray(matrix)]


def partial_trace(rho, dims, keep):
    """
    Trace out every register of rho except those listed in keep.

    Args:
        rho: Density matrix over registers with the given dimensions.
        dims: Dimension of each register, in register order.
        keep: Registers to keep, in the order they appear in the result.

    Returns:
        The reduced density matrix.
    """
    n = len(dims)
    traced = [i for i in range(n) if i not in keep]
    order = list(keep) + traced
    tensor = np.asarray(rho).reshape(list(dims) * 2)
    tensor = tensor.transpose(order + [i + n for i in order])
    kept = int(np.prod([dims[i] for i in keep], dtype=int))
    rest = int(np.prod([dims[i] for i in traced], dtype=int))
    tensor = tensor.reshape(kept, rest, kept, rest)
    return np.trace(tensor, axis1=1, axis2=3)
