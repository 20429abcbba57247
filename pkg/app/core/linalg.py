"""
Exact linear algebra over the rationals.

Matrices are numpy object arrays whose entries are Python ints or
fractions.Fraction, so every rank and null space is exact. Ranks use
fraction-free (Bareiss) elimination on row-scaled integer copies; null
spaces, bases and solves use Gauss-Jordan reduction over Fraction.

Example:
    >>> rank(as_matrix([[1, 2], [2, 4]]))
    1
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from app.types.errors import DomainError, InternalError

Matrix = np.ndarray

MODULUS = 2_147_483_647


def to_fraction(value) -> Fraction:
    """
    Convert an int, Fraction or "p/q" string to a Fraction.

    Floats are rejected: nothing inexact may enter a matrix.
    """
    if isinstance(value, (float, np.floating)):
        raise DomainError(f"inexact matrix entry {value!r}; use an int or a 'p/q' string")
    if isinstance(value, np.integer):
        value = int(value)
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as err:
        raise DomainError(f"malformed rational entry {value!r}") from err


def zeros(rows: int, cols: int) -> Matrix:
    return np.zeros((rows, cols), dtype=object)


def identity(size: int) -> Matrix:
    m = zeros(size, size)
    for k in range(size):
        m[k, k] = 1
    return m


def as_matrix(data: Sequence[Sequence], rows: int | None = None, cols: int | None = None) -> Matrix:
    """
    Build an exact matrix from nested rows.

    Args:
        data: Row lists of ints, Fractions or "p/q" strings.
        rows: Expected row count (needed when data is empty).
        cols: Expected column count (needed when there are no rows).

    Returns:
        An object array of Fractions.

    Raises:
        DomainError: On ragged rows, shape mismatch or malformed entries.
    """
    data = [list(r) for r in data]
    n_rows = len(data)
    n_cols = len(data[0]) if data else (cols or 0)
    if any(len(r) != n_cols for r in data):
        raise DomainError("ragged matrix rows")
    if rows is not None and n_rows != rows:
        raise DomainError(f"expected {rows} rows, got {n_rows}")
    if cols is not None and n_rows and n_cols != cols:
        raise DomainError(f"expected {cols} columns, got {n_cols}")
    m = zeros(n_rows, n_cols)
    for r, row in enumerate(data):
        for c, value in enumerate(row):
            m[r, c] = to_fraction(value)
    return m


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.shape[1] != b.shape[0]:
        raise DomainError(f"cannot multiply {a.shape} by {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return np.dot(a, b)


def vstack(mats: Iterable[Matrix], cols: int) -> Matrix:
    mats = [m for m in mats if m.shape[0]]
    if not mats:
        return zeros(0, cols)
    return np.vstack(mats)


def hstack(mats: Iterable[Matrix], rows: int) -> Matrix:
    mats = [m for m in mats if m.shape[1]]
    if not mats:
        return zeros(rows, 0)
    return np.hstack(mats)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    m = zeros(a.shape[0] + b.shape[0], a.shape[1] + b.shape[1])
    m[: a.shape[0], : a.shape[1]] = a
    m[a.shape[0]:, a.shape[1]:] = b
    return m


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for x in m.flat)


def equal(a: Matrix, b: Matrix) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def _integer_rows(m: Matrix) -> list[list[int]]:
    """Scale every row by the lcm of its denominators."""
    out = []
    for row in m:
        fr = [to_fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * scale) for f in fr])
    return out


def _rank_mod_prime(rows: list[list[int]], n_cols: int) -> int:
    """Rank of an integer matrix over GF(MODULUS), vectorized in int64."""
    a = np.array([[x % MODULUS for x in row] for row in rows], dtype=np.int64).reshape(len(rows), n_cols)
    r = 0
    for c in range(n_cols):
        if r == a.shape[0]:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if not nonzero.size:
            continue
        k = r + int(nonzero[0])
        a[[r, k]] = a[[k, r]]
        a[r] = a[r] * pow(int(a[r, c]), MODULUS - 2, MODULUS) % MODULUS
        # entries stay below 2**31, so every product fits in int64
        a[r + 1:] = (a[r + 1:] - np.outer(a[r + 1:, c], a[r]) % MODULUS) % MODULUS
        r += 1
    return r


def rank(m: Matrix) -> int:
    """
    Rank by fraction-free Gaussian elimination.

    Every intermediate entry is a minor of the scaled integer matrix, so the
    division by the previous pivot is exact. The rank modulo a prime never
    exceeds the rank over Q, so a full rank modulo MODULUS is returned
    without the exact elimination.
    """
    rows = _integer_rows(m)
    n_rows, n_cols = m.shape
    if n_rows == 0 or n_cols == 0:
        return 0
    if _rank_mod_prime(rows, n_cols) == min(n_rows, n_cols):
        return min(n_rows, n_cols)
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((k for k in range(r, n_rows) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        top = rows[r]
        for k in range(r + 1, n_rows):
            row = rows[k]
            f = row[c]
            for j in range(c + 1, n_cols):
                row[j] = (p * row[j] - f * top[j]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """
    Reduced row echelon form over Fraction.

    Returns:
        (rows, pivot_columns); rows below len(pivot_columns) are zero.
    """
    rows = [[to_fraction(x) for x in row] for row in m]
    n_rows, n_cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((k for k in range(r, n_rows) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for k in range(n_rows):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def _primitive(vec: list[Fraction]) -> list[int]:
    scale = lcm(*(f.denominator for f in vec))
    ints = [int(f * scale) for f in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


def nullspace(m: Matrix) -> list[list[int]]:
    """
    Basis of {x : m x = 0}, each vector scaled to a primitive integer vector.

    The order follows the free columns left to right.
    """
    n_cols = m.shape[1]
    if m.shape[0] == 0:
        return [[int(r == c) for r in range(n_cols)] for c in range(n_cols)]
    rows, pivots = rref(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(_primitive(vec))
    return basis


def kernel_matrix(m: Matrix) -> Matrix:
    """Columns span ker m."""
    basis = nullspace(m)
    k = zeros(m.shape[1], len(basis))
    for c, vec in enumerate(basis):
        for r, x in enumerate(vec):
            k[r, c] = x
    return k


def column_basis(m: Matrix) -> Matrix:
    """Pivot columns of m; they form a basis of its column space."""
    if m.shape[0] == 0 or m.shape[1] == 0:
        return zeros(m.shape[0], 0)
    _, pivots = rref(m)
    return m[:, pivots].copy() if pivots else zeros(m.shape[0], 0)


def row_basis(m: Matrix) -> Matrix:
    """Nonzero rows of the reduced form; same row space, independent rows."""
    if m.shape[0] == 0:
        return zeros(0, m.shape[1])
    if m.shape[0] >= m.shape[1] and rank(m) == m.shape[1]:
        return identity(m.shape[1])
    rows, pivots = rref(m)
    return as_matrix(rows[: len(pivots)], rows=len(pivots), cols=m.shape[1])


def solve_in_basis(basis: Matrix, m: Matrix) -> Matrix:
    """
    Coordinates of the columns of m in a basis with independent columns.

    Returns the unique C with basis @ C = m.

    Raises:
        InternalError: If some column of m lies outside the span.
    """
    s = basis.shape[1]
    if s == 0:
        if not is_zero(m):
            raise InternalError("column outside the span of an empty basis")
        return zeros(0, m.shape[1])
    rows, pivots = rref(hstack([basis, m], basis.shape[0]))
    if pivots[:s] != list(range(s)) or any(p >= s for p in pivots):
        raise InternalError("column outside the span of the basis")
    return as_matrix([row[s:] for row in rows[:s]], rows=s, cols=m.shape[1])


def inverse(m: Matrix) -> Matrix:
    size = m.shape[0]
    if m.shape != (size, size):
        raise DomainError(f"cannot invert a {m.shape} matrix")
    rows, pivots = rref(hstack([m, identity(size)], size))
    if pivots[:size] != list(range(size)):
        raise DomainError("matrix is singular")
    return as_matrix([row[size:] for row in rows], rows=size, cols=size)


def random_integer_matrix(rows: int, cols: int, rng: np.random.Generator, bound: int) -> Matrix:
    # object dtype holds Python ints; int64 would overflow in products
    return rng.integers(-bound, bound + 1, size=(rows, cols)).astype(object)


def random_invertible(size: int, rng: np.random.Generator, bound: int = 9) -> Matrix:
    while True:
        g = random_integer_matrix(size, size, rng, bound)
        if rank(g) == size:
            return g


def to_rows(m: Matrix) -> list[list[str]]:
    """Rational entries as "p" or "p/q" strings."""
    return [[str(to_fraction(x)) for x in row] for row in m]
