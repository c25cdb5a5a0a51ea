"""
Smith normal form over the integers

Matrices are numpy arrays of dtype object so entries stay arbitrary-precision
Python ints. Each step moves the entry of least nonzero magnitude into the
pivot position and clears its row and column by integer division; a pivot
that fails to divide the rest of the block absorbs the offending row.
"""

from typing import List, NamedTuple, Tuple

import numpy as np

from src.errors import InvariantViolation
from src.settings import get_logger

logger = get_logger(__name__)


class SmithForm(NamedTuple):
    factors: List[int]
    rank: int


def as_integer_matrix(M) -> np.ndarray:
    """Copy M as a 2-dimensional object-dtype matrix of Python ints"""
    A = np.array(M, dtype=object)
    if A.ndim != 2:
        raise ValueError(f"expected a 2-dimensional matrix, got shape {A.shape}")
    return np.vectorize(int, otypes=[object])(A) if A.size else A.copy()


def integer_identity(n: int) -> np.ndarray:
    I = np.zeros((n, n), dtype=object)
    for i in range(n):
        I[i, i] = 1
    return I


def _least_entry(A: np.ndarray, t: int):
    best = None
    rows, cols = A.shape
    for i in range(t, rows):
        for j in range(t, cols):
            if A[i, j] != 0 and (best is None or abs(A[i, j]) < best[0]):
                best = (abs(A[i, j]), i, j)
    return best


def _swap(A: np.ndarray, U: np.ndarray, V: np.ndarray, t: int, i: int, j: int) -> None:
    if i != t:
        A[[t, i], :] = A[[i, t], :]
        U[[t, i], :] = U[[i, t], :]
    if j != t:
        A[:, [t, j]] = A[:, [j, t]]
        V[:, [t, j]] = V[:, [j, t]]


def smith_decomposition(M) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Unimodular U, V and diagonal D with U·M·V = D

    Args:
        M: Integer matrix (array-like, 2-dimensional)

    Returns:
        (U, D, V); the nonzero diagonal of D is positive and each entry divides the next
    """
    A = as_integer_matrix(M)
    rows, cols = A.shape
    U, V = integer_identity(rows), integer_identity(cols)

    for t in range(min(rows, cols)):
        least = _least_entry(A, t)
        if least is None:
            break
        _, i, j = least
        _swap(A, U, V, t, i, j)
        while True:
            p = A[t, t]
            for i in range(t + 1, rows):
                q = A[i, t] // p
                if q:
                    A[i, :] -= q * A[t, :]
                    U[i, :] -= q * U[t, :]
            for j in range(t + 1, cols):
                q = A[t, j] // p
                if q:
                    A[:, j] -= q * A[:, t]
                    V[:, j] -= q * V[:, t]

            leftovers = [(abs(A[i, t]), i, t) for i in range(t + 1, rows) if A[i, t] != 0]
            leftovers += [(abs(A[t, j]), t, j) for j in range(t + 1, cols) if A[t, j] != 0]
            if leftovers:
                _, i, j = min(leftovers)
                _swap(A, U, V, t, i, j)
                continue

            stray = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i, j] % p), None)
            if stray is None:
                break
            A[t, :] += A[stray[0], :]
            U[t, :] += U[stray[0], :]

        if A[t, t] < 0:
            A[t, :] *= -1
            U[t, :] *= -1
    return U, A, V


def smith_normal_form(M) -> SmithForm:
    """
    Invariant factors and rank of an integer matrix

    Raises:
        InvariantViolation: when the diagonal fails the divisibility chain
    """
    _, D, _ = smith_decomposition(M)
    factors = [int(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0]
    if any(b % a for a, b in zip(factors, factors[1:])):
        raise InvariantViolation("invariant factors do not divide in sequence", locus=factors)
    logger.debug("Smith form of a %dx%d matrix has rank %d", D.shape[0], D.shape[1], len(factors))
    return SmithForm(factors, len(factors))
