"""
Linear Algebra over F_p

Gaussian elimination on numpy int64 arrays with every row operation reduced
mod p. Products switch to Python integers (object dtype) for primes large
enough that an int64 dot product could overflow.
"""

from typing import List, Tuple

import numpy as np

INT64_SAFE_PRIME = 2 ** 26


def as_fp(matrix, p: int) -> np.ndarray:
    """Copy ``matrix`` into a 2-D int64 array reduced mod p."""
    arr = np.array(matrix, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    return arr % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Matrix product mod p."""
    if a.shape[1] == 0 or b.shape[0] == 0:
        return zeros(a.shape[0], b.shape[1])
    if p < INT64_SAFE_PRIME and a.shape[1] < 2 ** 11:
        return (a.astype(np.int64) @ b.astype(np.int64)) % p
    product = (a.astype(object) @ b.astype(object)) % p
    return product.astype(np.int64)


def rref(matrix, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns.

    Example:
        >>> rref([[2, 4], [1, 2]], 5)[1]
        [0]
    """
    a = as_fp(matrix, p)
    rows, cols = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(a[r:, c])[0]
        if nonzero.size == 0:
            continue
        k = r + int(nonzero[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        column = a[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            a[targets] = (a[targets] - np.outer(column[targets], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(matrix, p: int) -> int:
    arr = np.asarray(matrix)
    if arr.size == 0:
        return 0
    return len(rref(arr, p)[1])


def nullspace(matrix, p: int) -> np.ndarray:
    """Basis of the right kernel as the columns of an (ncols × k) array."""
    a = as_fp(matrix, p)
    cols = a.shape[1]
    if a.shape[0] == 0:
        return identity(cols)
    reduced, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros(cols, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-reduced[i, f]) % p
    return basis


def solve(a, b, p: int) -> np.ndarray:
    """One solution X of ``a @ X = b``.

    Raises:
        ValueError: if the system is inconsistent
    """
    a = as_fp(a, p)
    b = as_fp(b, p)
    if b.shape[0] != a.shape[0]:
        raise ValueError(f"Row mismatch: {a.shape} vs {b.shape}")
    n = a.shape[1]
    if a.shape[0] == 0:
        return zeros(n, b.shape[1])
    reduced, pivots = rref(np.hstack([a, b]), p)
    if any(pc >= n for pc in pivots):
        raise ValueError("Inconsistent linear system over F_p")
    x = zeros(n, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = reduced[i, n:]
    return x


def inverse(matrix, p: int) -> np.ndarray:
    a = as_fp(matrix, p)
    n = a.shape[0]
    if a.shape != (n, n) or rank(a, p) != n:
        raise ValueError("Matrix is not invertible over F_p")
    return solve(a, identity(n), p)


def column_basis(matrix, p: int) -> np.ndarray:
    """Columns of ``matrix`` forming a basis of its column space."""
    a = as_fp(matrix, p)
    if a.shape[1] == 0:
        return a
    _, pivots = rref(a, p)
    return a[:, pivots]


def complement_basis(subspace: np.ndarray, dim: int, p: int) -> np.ndarray:
    """Standard basis vectors completing the columns of ``subspace`` to F_p^dim."""
    a = subspace if subspace.size else zeros(dim, 0)
    _, pivots = rref(np.hstack([a, identity(dim)]), p)
    chosen = [pc - a.shape[1] for pc in pivots if pc >= a.shape[1]]
    return identity(dim)[:, chosen]


def block_diag(blocks: List[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r:r + b.shape[0], c:c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out


def matrix_power(matrix: np.ndarray, exponent: int, p: int) -> np.ndarray:
    result = identity(matrix.shape[0])
    base = matrix % p
    while exponent:
        if exponent & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        exponent >>= 1
    return result


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True
