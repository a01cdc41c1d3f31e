"""
Batch kernels over word matrices

A word matrix is an (N, n) int64 array whose rows are words over [0, q-1].
word_matrix() produces rows in lexicographic order, so row index equals the
base-q value of the word. Every kernel here agrees row by row with its scalar
counterpart in seqcore.
"""
from typing import List, Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..core.exceptions import InvalidReadLength, PreconditionViolated
from ..core.logger import get_logger
from .seqcore import Word, rank_table

logger = get_logger(__name__)

# Largest magnitude an int64 dot product may reach before promotion to exact ints
_INT64_SAFE = 2 ** 62


def word_matrix(n: int, q: int, start: int = 0, stop: int = None) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic enumeration of length-n words"""
    total = q ** n
    stop = total if stop is None else min(stop, total)
    return index_matrix(np.arange(start, stop, dtype=np.int64), n, q)


def index_matrix(index: np.ndarray, n: int, q: int) -> np.ndarray:
    """Rows of the lexicographic enumeration at the given indices"""
    index = np.asarray(index, dtype=np.int64)
    if n == 0:
        return np.zeros((len(index), 0), dtype=np.int64)
    powers = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (index[:, None] // powers[None, :]) % q


def words_to_matrix(words: Sequence[Word]) -> np.ndarray:
    if not words:
        return np.zeros((0, 0), dtype=np.int64)
    return np.array([w.symbols for w in words], dtype=np.int64).reshape(len(words), len(words[0]))


def matrix_to_words(W: np.ndarray, q: int) -> List[Word]:
    return [Word(q, tuple(int(s) for s in row)) for row in W]


def read_rank_matrix(W: np.ndarray, q: int, ell: int) -> np.ndarray:
    """Phi of every row's ell-read vector: an (N, n+ell-1) matrix of multiset ranks"""
    if ell < 2:
        raise InvalidReadLength(f"read length ell={ell} must be >= 2")
    N, n = W.shape
    padded = np.zeros((N, n + 2 * (ell - 1)), dtype=np.int64)
    padded[:, ell - 1:ell - 1 + n] = W
    windows = np.sort(sliding_window_view(padded, ell, axis=1), axis=2)

    table = rank_table(q, ell)
    lookup = np.full(q ** ell, -1, dtype=np.int64)
    weights = q ** np.arange(ell - 1, -1, -1, dtype=np.int64)
    for combo, rank in table.items():
        lookup[int(np.dot(combo, weights))] = rank
    return lookup[windows @ weights]


def vt_syndrome_batch(W: np.ndarray, k: int) -> np.ndarray:
    """VT^(k) of every row; int64 when provably safe, exact Python ints otherwise"""
    if k < 0:
        raise PreconditionViolated(f"syndrome order {k} must be >= 0")
    N, n = W.shape
    weights = [i ** k for i in range(1, n + 1)]
    max_symbol = int(W.max()) if W.size else 0
    if max_symbol * sum(weights) < _INT64_SAFE:
        return W @ np.array(weights, dtype=np.int64) if n else np.zeros(N, dtype=np.int64)
    logger.debug(f"Promoting VT^({k}) over n={n} to exact integers")
    return W.astype(object) @ np.array(weights, dtype=object)


def inversion_batch(W: np.ndarray) -> np.ndarray:
    N, n = W.shape
    total = np.zeros(N, dtype=np.int64)
    for i in range(n - 1):
        total += (W[:, i:i + 1] > W[:, i + 1:]).sum(axis=1)
    return total


def indicator_batch(W: np.ndarray, q: int) -> np.ndarray:
    previous = np.zeros_like(W)
    previous[:, 1:] = W[:, :-1]
    return (W + previous) % q


def odd_batch(W: np.ndarray) -> np.ndarray:
    return W[:, 0::2]


def max_alternating_run_batch(W: np.ndarray) -> np.ndarray:
    """Row-wise max_alternating_run; empty rows report 0"""
    N, n = W.shape
    if n == 0:
        return np.zeros(N, dtype=np.int64)
    current = np.ones(N, dtype=np.int64)
    best = np.ones(N, dtype=np.int64)
    for i in range(1, n):
        differs = W[:, i] != W[:, i - 1]
        if i >= 2:
            extends = differs & (W[:, i] == W[:, i - 2])
        else:
            extends = np.zeros(N, dtype=bool)
        current = np.where(extends, current + 1, np.where(differs, 2, 1))
        np.maximum(best, current, out=best)
    return best


def good_batch(W: np.ndarray, ell: int, T: int) -> np.ndarray:
    """Row-wise is_good(x, ell, T)"""
    if ell < 3:
        raise InvalidReadLength(f"read length ell={ell} must be >= 3")
    if T < 1:
        raise PreconditionViolated(f"goodness threshold T={T} must be >= 1")
    N, n = W.shape
    bad = np.zeros(N, dtype=bool)
    runs: List[np.ndarray] = []
    for j in range(n - 1):
        differs = W[:, j] != W[:, j + 1]
        run = differs.astype(np.int64)
        if j >= ell:
            same = differs & (W[:, j - ell] == W[:, j]) & (W[:, j - ell + 1] == W[:, j + 1])
            run = np.where(same, runs[j - ell] + 1, run)
        runs.append(run)
        bad |= run >= T + 1
    return ~bad
