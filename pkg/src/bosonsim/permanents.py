"""Exact permanent and determinant kernels.

The permanent of an n x n matrix A is

    per(A) = sum_sigma prod_j A[j, sigma(j)]

with sigma running over all n! permutations -- the determinant without the
alternating signs, and unlike the determinant there is no known polynomial
algorithm for it.  Three kernels are provided:

* ``permanent_naive``   -- direct enumeration of the n! permutations; slow,
  but so simple it serves as the oracle for everything else.
* ``permanent_ryser``   -- Ryser's inclusion-exclusion with Gray-code subset
  updates, O(2^n * n); the production kernel.
* ``permanent_glynn``   -- Glynn's formula over 2^(n-1) sign vectors, same
  contract and cost class as Ryser; kept as an independent second kernel.

``expand_submatrix`` builds the repeated-row/column square submatrices whose
permanents (or determinants) appear in many-particle transition amplitudes.

All accumulation is in double precision; roundoff grows roughly like 2^n
times machine epsilon, which motivates both the relative 1e-10 comparison
tolerance used in the tests and the hard size guard.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

import numpy as np

#: size guard for the factorial-cost oracle kernel
NAIVE_SIZE_LIMIT = 10
#: size guard for the 2^n-cost production kernels
RYSER_SIZE_LIMIT = 30


def as_square_matrix(matrix) -> np.ndarray:
    """Coerce to a square complex128 array with finite entries."""
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got {a.ndim}-D input")
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.size and not np.isfinite(a).all():
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return a


def permanent_naive(matrix) -> complex:
    """Permanent by direct enumeration of all n! permutations.

    Deliberately unoptimized: this is the reference implementation against
    which the fast kernels are checked.  Guarded at n <= 10.
    """
    a = as_square_matrix(matrix)
    n = a.shape[0]
    if n > NAIVE_SIZE_LIMIT:
        raise ValueError(f"permanent_naive is guarded at n <= {NAIVE_SIZE_LIMIT}, got n = {n}")
    if n == 0:
        return 1.0 + 0.0j
    total = 0.0 + 0.0j
    rows = range(n)
    for sigma in permutations(range(n)):
        term = 1.0 + 0.0j
        for i in rows:
            term *= a[i, sigma[i]]
        total += term
    return complex(total)


def permanent_ryser(matrix) -> complex:
    """Permanent via Ryser's formula with Gray-code subset iteration.

    per(A) = (-1)^n * sum over nonempty column subsets S of
             (-1)^|S| * prod_i sum_{j in S} A[i, j]

    Subsets are visited in Gray-code order so each step updates the vector
    of row sums by a single column add/subtract, giving O(2^n * n) total
    work.  Guarded at n <= 30.
    """
    a = as_square_matrix(matrix)
    n = a.shape[0]
    if n > RYSER_SIZE_LIMIT:
        raise ValueError(f"permanent_ryser is guarded at n <= {RYSER_SIZE_LIMIT}, got n = {n}")
    if n == 0:
        return 1.0 + 0.0j
    row_sums = np.zeros(n, dtype=np.complex128)
    total = 0.0 + 0.0j
    gray = 0
    for k in range(1, 1 << n):
        bit = k & -k
        j = bit.bit_length() - 1
        gray ^= bit
        if gray & bit:
            row_sums += a[:, j]
        else:
            row_sums -= a[:, j]
        # consecutive Gray codes differ in one bit, so |S| parity tracks k
        if k & 1:
            total -= row_sums.prod()
        else:
            total += row_sums.prod()
    if n & 1:
        total = -total
    return complex(total)


def permanent_glynn(matrix) -> complex:
    """Permanent via Glynn's formula, Gray-coded over sign vectors.

    per(A) = 2^(1-n) * sum over delta in {+-1}^n with delta_0 = +1 of
             (prod_i delta_i) * prod_j sum_i delta_i * A[i, j]

    Independent of Ryser's subset expansion; same O(2^n * n) cost class
    and the same size guard.
    """
    a = as_square_matrix(matrix)
    n = a.shape[0]
    if n > RYSER_SIZE_LIMIT:
        raise ValueError(f"permanent_glynn is guarded at n <= {RYSER_SIZE_LIMIT}, got n = {n}")
    if n == 0:
        return 1.0 + 0.0j
    col_sums = a.sum(axis=0).astype(np.complex128)
    total = col_sums.prod()
    sign = 1
    gray = 0
    for k in range(1, 1 << (n - 1)):
        bit = k & -k
        i = bit.bit_length()  # flip delta_i for row i (delta_0 stays +1)
        gray ^= bit
        if gray & bit:
            col_sums -= 2.0 * a[i, :]
        else:
            col_sums += 2.0 * a[i, :]
        sign = -sign
        total += sign * col_sums.prod()
    return complex(total / 2 ** (n - 1))


def determinant(matrix) -> complex:
    """Determinant via Gaussian elimination with partial pivoting, O(n^3)."""
    a = as_square_matrix(matrix).copy()
    n = a.shape[0]
    det = 1.0 + 0.0j
    for col in range(n):
        pivot = col + int(np.argmax(np.abs(a[col:, col])))
        if a[pivot, col] == 0:
            return 0.0 + 0.0j
        if pivot != col:
            a[[col, pivot], :] = a[[pivot, col], :]
            det = -det
        det *= a[col, col]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= np.outer(factors, a[col, col:])
    return complex(det)


def expand_submatrix(
    matrix,
    row_multiplicities: Sequence[int],
    col_multiplicities: Sequence[int],
) -> np.ndarray:
    """Square submatrix with rows/columns repeated by multiplicity.

    Row k of ``matrix`` is emitted ``row_multiplicities[k]`` times, rows in
    ascending source order, columns likewise.  Multiplicity totals must
    agree so the result is square.
    """
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows = np.asarray(row_multiplicities, dtype=int)
    cols = np.asarray(col_multiplicities, dtype=int)
    if rows.shape != (a.shape[0],) or cols.shape != (a.shape[1],):
        raise ValueError(f"multiplicity lengths do not match matrix shape {a.shape}")
    if (rows < 0).any() or (cols < 0).any():
        raise ValueError("multiplicities must be nonnegative")
    if rows.sum() != cols.sum():
        raise ValueError(
            f"row multiplicities sum to {rows.sum()} but column multiplicities to {cols.sum()}"
        )
    row_idx = np.repeat(np.arange(a.shape[0]), rows)
    col_idx = np.repeat(np.arange(a.shape[1]), cols)
    return a[np.ix_(row_idx, col_idx)]
