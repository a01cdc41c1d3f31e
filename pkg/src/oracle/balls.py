"""
Error balls and their intersections, computed by direct enumeration

Insertion and deletion balls hold the words reachable by EXACTLY t edits;
substitution balls hold the words within AT MOST t substitutions.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Optional, Set, Tuple

import numpy as np

from config.config import resolve_budget
from ..core.exceptions import (
    BudgetExceeded,
    InvalidReadLength,
    MaxOverEmptySet,
    PreconditionViolated,
    RadiusTooLarge,
)
from ..core.logger import get_logger
from ..sequences.kernels import read_rank_matrix, word_matrix
from ..sequences.seqcore import Word, check_same_shape, q_ell

logger = get_logger(__name__)

Symbols = Tuple[int, ...]


class BallKind(str, Enum):
    SUBSTITUTION = "substitution"
    INSERTION = "insertion"
    DELETION = "deletion"


class Space(str, Enum):
    WORDS = "words"
    READ_VECTORS = "read_vectors"


@dataclass(frozen=True)
class BallSpec:
    kind: BallKind
    radius: int

    def __post_init__(self):
        object.__setattr__(self, "kind", BallKind(self.kind))
        if not isinstance(self.radius, int) or self.radius < 0:
            raise PreconditionViolated(f"ball radius {self.radius!r} must be an integer >= 0")


def _substitutions(symbols: Symbols, q: int, t: int) -> Set[Symbols]:
    found: Set[Symbols] = set()
    n = len(symbols)
    for k in range(min(t, n) + 1):
        for positions in itertools.combinations(range(n), k):
            choices = [[s for s in range(q) if s != symbols[p]] for p in positions]
            for replacement in itertools.product(*choices):
                z = list(symbols)
                for p, s in zip(positions, replacement):
                    z[p] = s
                found.add(tuple(z))
    return found


def _insertions(symbols: Symbols, q: int, t: int) -> Set[Symbols]:
    level = {symbols}
    for _ in range(t):
        level = {z[:i] + (s,) + z[i:] for z in level for i in range(len(z) + 1) for s in range(q)}
    return level


def _deletions(symbols: Symbols, t: int) -> Set[Symbols]:
    if t > len(symbols):
        raise RadiusTooLarge(f"cannot delete {t} symbols from a word of length {len(symbols)}")
    level = {symbols}
    for _ in range(t):
        level = {z[:i] + z[i + 1:] for z in level for i in range(len(z))}
    return level


def _ball(x: Word, spec: BallSpec) -> Set[Symbols]:
    if spec.kind is BallKind.SUBSTITUTION:
        return _substitutions(x.symbols, x.q, spec.radius)
    if spec.kind is BallKind.INSERTION:
        return _insertions(x.symbols, x.q, spec.radius)
    return _deletions(x.symbols, spec.radius)


def ball(x: Word, spec: BallSpec) -> FrozenSet[Word]:
    """The exact error ball of x"""
    return frozenset(Word(x.q, z) for z in _ball(x, spec))


def ball_intersection(x: Word, y: Word, spec: BallSpec) -> int:
    check_same_shape(x, y)
    return len(_ball(x, spec) & _ball(y, spec))


def run_count(x: Word) -> int:
    """Number of maximal runs of equal symbols"""
    s = x.symbols
    return sum(1 for i in range(len(s)) if i == 0 or s[i] != s[i - 1])


def pairwise_hamming(M: np.ndarray) -> np.ndarray:
    N, n = M.shape
    D = np.zeros((N, N), dtype=np.int32)
    for k in range(n):
        D += M[:, None, k] != M[None, :, k]
    return D


def _substitution_ball_rows(row: np.ndarray, Q: int, t: int) -> np.ndarray:
    return np.array(sorted(_substitutions(tuple(int(s) for s in row), Q, t)), dtype=np.int64)


def _words_maximum(n: int, q: int, t: int, d: int, budget: int) -> Optional[int]:
    total = q ** n
    if total > budget:
        raise BudgetExceeded("pairwise intersection matrix", total, budget, hint="words in Sigma_q^n")
    W = word_matrix(n, q)
    D = pairwise_hamming(W)
    inside = (D <= t).astype(np.float32)
    shared = inside @ inside.T
    qualifying = np.triu(D >= d, k=1)
    if not qualifying.any():
        return None
    return int(round(float(shared[qualifying].max())))


def _read_vector_maximum(n: int, q: int, ell: int, t: int, d: int, budget: int) -> Optional[int]:
    total = q ** n
    if total > budget:
        raise BudgetExceeded("pairwise intersection scan", total, budget, hint="words in Sigma_q^n")
    R = read_rank_matrix(word_matrix(n, q), q, ell)
    Q = q_ell(q, ell)
    D = pairwise_hamming(R)
    best: Optional[int] = None
    for i in range(total):
        partners = np.flatnonzero(D[i, i + 1:] >= d) + i + 1
        if partners.size == 0:
            continue
        around = _substitution_ball_rows(R[i], Q, t)
        distances = (around[:, None, :] != R[None, partners, :]).sum(axis=2)
        shared = int((distances <= t).sum(axis=0).max())
        best = shared if best is None else max(best, shared)
    return best


def max_ball_intersection(
    n: int,
    q: int,
    t: int,
    d: int,
    space=Space.WORDS,
    ell: Optional[int] = None,
    budget: Optional[int] = None,
) -> int:
    """
    Largest |S_t(x) ∩ S_t(y)| over all qualifying pairs of Sigma_q^n

    In the words space pairs qualify by Hamming distance >= d. In the
    read_vectors space they qualify by ell-read distance >= d and the balls
    are taken around the ranked read vectors over q_ell symbols.
    """
    space = Space(space)
    budget = resolve_budget(budget, "PAIR_MATRIX_BUDGET")
    if t < 0:
        raise PreconditionViolated(f"ball radius {t} must be >= 0")
    if space is Space.WORDS:
        best = _words_maximum(n, q, t, d, budget)
    else:
        if ell is None or ell < 2:
            raise InvalidReadLength(f"read_vectors space needs ell >= 2, got {ell!r}")
        best = _read_vector_maximum(n, q, ell, t, d, budget)
    if best is None:
        raise MaxOverEmptySet(f"no pair of length-{n} words over q={q} is at distance >= {d}")
    logger.debug(f"max |S_{t} ∩ S_{t}| over {space.value}, n={n} q={q} d={d}: {best}")
    return best
