"""Finite-field linear algebra over GF(q) backed by galois."""

from functools import lru_cache

import galois
import numpy as np

from uniprior_coder.exceptions import UnsupportedFieldError
from uniprior_coder.models import SUPPORTED_FIELD_SIZES


@lru_cache(maxsize=None)
def field(q: int) -> type[galois.FieldArray]:
    """Return the galois field class GF(q).

    Elements of extension fields use galois' integer representation, so the
    coefficients 0..q-1 of a code file map directly to field elements.

    Raises:
        UnsupportedFieldError: If q is not one of the implemented sizes
    """
    if q not in SUPPORTED_FIELD_SIZES:
        raise UnsupportedFieldError(q, SUPPORTED_FIELD_SIZES)
    return galois.GF(q)


def matrix(q: int, rows: list[list[int]] | np.ndarray, columns: int) -> galois.FieldArray:
    """Build an r x columns matrix over GF(q); an empty row list gives a 0 x columns matrix."""
    gf = field(q)
    data = np.asarray(rows, dtype=np.int64).reshape(-1, columns)
    return gf(data)


def rank(values: galois.FieldArray) -> int:
    """Rank of a matrix over its field; 0 for a matrix without rows or columns."""
    if values.size == 0:
        return 0
    return int(np.linalg.matrix_rank(values))


def in_row_span(rows: galois.FieldArray, vector: galois.FieldArray) -> bool:
    """Return True if `vector` is a linear combination of the rows of `rows`."""
    if not np.any(vector):
        return True
    augmented = np.vstack([rows, vector.reshape(1, -1)])
    return rank(augmented) == rank(rows)


def solve_combination(rows: galois.FieldArray, vector: galois.FieldArray) -> galois.FieldArray:
    """Coefficients c with c @ rows == vector.

    Row-reduces [rows^T | vector] and reads one solution off the pivots,
    setting every free coefficient to zero.

    Raises:
        ValueError: If `vector` is not in the row span
    """
    gf = type(vector)
    count = rows.shape[0]
    augmented = np.hstack([rows.T, vector.reshape(-1, 1)]) if count else vector.reshape(-1, 1)
    reduced = augmented.row_reduce()
    coefficients = gf.Zeros(count)
    for row in reduced:
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            continue
        pivot = int(nonzero[0])
        if pivot == count:
            raise ValueError("vector is not in the row span")
        coefficients[pivot] = row[count]
    return coefficients
