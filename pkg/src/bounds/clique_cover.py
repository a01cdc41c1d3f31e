"""
Clique cover of the 2-read confusability graph

With n = 2mt + n' (n' < 2t), Lambda = {g_0, ..., g_2t} and ~Lambda its
complement in Sigma_q^{2t}, the cover consists of
  - singletons {x} for x in ~Lambda^m x Sigma_q^{n'};
  - cliques {(u, g_i, w) : i in [0, 2t]} for u in ~Lambda^{k-1}, w in Sigma_q^{n-2tk}, k in [1, m].
Every word lies in a clique, and any two members of one clique are at 2-read distance 2,
so the number of cliques bounds the size of every 2-read code of minimum distance 3.
"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from config.config import resolve_budget
from ..core.exceptions import BudgetExceeded, IndexOutOfRange, PreconditionViolated
from ..core.logger import get_logger
from ..sequences.seqcore import Word

logger = get_logger(__name__)

Symbols = Tuple[int, ...]


def _check_t(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise PreconditionViolated(f"clique parameter t={t!r} must be an integer >= 1")


def g_sequence(i: int, t: int, q: int = 2) -> Word:
    """g_{i,t}: the first i symbols of alpha_2t(01) followed by the last 2t-i of alpha_2t(10)"""
    _check_t(t)
    if not 0 <= i <= 2 * t:
        raise IndexOutOfRange(f"g-sequence index i={i} is outside [0, {2 * t}]")
    head = tuple(k % 2 for k in range(i))
    tail = tuple((k + 1) % 2 for k in range(i, 2 * t))
    return Word(q, head + tail)


def _split(n: int, t: int) -> Tuple[int, int]:
    return divmod(n, 2 * t)


@dataclass
class CliqueCover:
    n: int
    q: int
    t: int
    m: int
    n_rem: int
    cliques: List[Tuple[Word, ...]]

    @property
    def count(self) -> int:
        return len(self.cliques)

    @property
    def singletons(self) -> int:
        return sum(1 for c in self.cliques if len(c) == 1)


def _complement_blocks(q: int, t: int) -> List[Symbols]:
    lam = {g_sequence(i, t, q).symbols for i in range(2 * t + 1)}
    return [b for b in itertools.product(range(q), repeat=2 * t) if b not in lam]


def _concat(parts) -> Symbols:
    return tuple(s for part in parts for s in part)


def _iter_cliques(n: int, q: int, t: int) -> Iterator[Tuple[Symbols, ...]]:
    m, n_rem = _split(n, t)
    free = _complement_blocks(q, t)
    g = [g_sequence(i, t, q).symbols for i in range(2 * t + 1)]

    for blocks in itertools.product(free, repeat=m):
        for tail in itertools.product(range(q), repeat=n_rem):
            yield (_concat(blocks) + tail,)

    for k in range(1, m + 1):
        for prefix in itertools.product(free, repeat=k - 1):
            u = _concat(prefix)
            for w in itertools.product(range(q), repeat=n - 2 * t * k):
                yield tuple(u + gi + w for gi in g)


def build_clique_cover(n: int, q: int, t: int, budget: Optional[int] = None) -> CliqueCover:
    """Materialize every clique of the cover"""
    _check_t(t)
    budget = resolve_budget(budget)
    if q ** n > budget:
        raise BudgetExceeded("materialized clique cover", q ** n, budget,
                             hint="clique_cover_count() counts without materializing")
    m, n_rem = _split(n, t)
    cliques = [tuple(Word(q, s) for s in clique) for clique in _iter_cliques(n, q, t)]
    logger.debug(f"Clique cover n={n} q={q} t={t}: {len(cliques):,} clique(s)")
    return CliqueCover(n, q, t, m, n_rem, cliques)


def clique_cover_count(n: int, q: int, t: int) -> int:
    """Exact number of cliques by counting each type"""
    _check_t(t)
    m, n_rem = _split(n, t)
    free = q ** (2 * t) - (2 * t + 1)
    total = free ** m * q ** n_rem
    total += sum(free ** (k - 1) * q ** (n - 2 * t * k) for k in range(1, m + 1))
    return total


def clique_cover_size(n: int, q: int, t: int) -> Fraction:
    """q^n / (2t+1) * (1 + 2t (1 - (2t+1)/q^2t)^m), evaluated exactly"""
    _check_t(t)
    m, _ = _split(n, t)
    shrink = 1 - Fraction(2 * t + 1, q ** (2 * t))
    return Fraction(q ** n, 2 * t + 1) * (1 + 2 * t * shrink ** m)
