"""
Exact independence number of the read-distance-2 confusability graph

Vertices are the words of Sigma_q^n; x ~ y when their ell-read vectors are at
Hamming distance exactly 2. An independent set is an ell-read code of minimum
distance 3. The solver is a bitset branch and bound: a maximum clique search
in the complement graph whose bound is a greedy colouring, i.e. a greedy
partition of the candidates into cliques of the original graph.
"""
from typing import List, Optional

import numpy as np

from config.config import resolve_budget
from ..core.exceptions import BudgetExceeded
from ..core.logger import get_logger
from ..sequences.kernels import read_rank_matrix, word_matrix
from .balls import pairwise_hamming

logger = get_logger(__name__)


def confusability_graph(n: int, q: int, ell: int = 2, budget: Optional[int] = None) -> List[int]:
    """Adjacency bitsets, vertex i being the i-th word in lexicographic order"""
    budget = resolve_budget(budget, "EXACT_SOLVER_BUDGET")
    total = q ** n
    if total > budget:
        raise BudgetExceeded("exact independence number", total, budget, hint="vertices in Sigma_q^n")
    R = read_rank_matrix(word_matrix(n, q), q, ell)
    edges = pairwise_hamming(R) == 2
    return [sum(1 << int(j) for j in np.flatnonzero(row)) for row in edges]


def greedy_independent_set(adjacency: List[int]) -> List[int]:
    """Minimum-degree-first greedy independent set"""
    order = sorted(range(len(adjacency)), key=lambda v: (bin(adjacency[v]).count("1"), v))
    chosen: List[int] = []
    blocked = 0
    for v in order:
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= adjacency[v] | (1 << v)
    return sorted(chosen)


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


class _CliqueSearch:
    """Maximum clique of the complement graph, relabelled by non-increasing complement degree"""

    def __init__(self, adjacency: List[int], lower_bound: int):
        size = len(adjacency)
        everything = (1 << size) - 1
        complement = [everything & ~adjacency[v] & ~(1 << v) for v in range(size)]
        order = sorted(range(size), key=lambda v: (-bin(complement[v]).count("1"), v))
        position = {v: k for k, v in enumerate(order)}
        self.neighbours = []
        for v in order:
            bits = 0
            rest = complement[v]
            while rest:
                u = _lowest(rest)
                rest &= rest - 1
                bits |= 1 << position[u]
            self.neighbours.append(bits)
        self.best = lower_bound
        self.nodes = 0
        self.everything = everything

    def _colour(self, candidates: int):
        ordered, bounds = [], []
        uncoloured = candidates
        colour = 0
        while uncoloured:
            colour += 1
            available = uncoloured
            while available:
                v = _lowest(available)
                available &= ~self.neighbours[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                ordered.append(v)
                bounds.append(colour)
        return ordered, bounds

    def expand(self, depth: int, candidates: int) -> None:
        self.nodes += 1
        ordered, bounds = self._colour(candidates)
        for v, bound in zip(reversed(ordered), reversed(bounds)):
            if depth + bound <= self.best:
                return
            narrowed = candidates & self.neighbours[v]
            if narrowed:
                self.expand(depth + 1, narrowed)
            elif depth + 1 > self.best:
                self.best = depth + 1
            candidates &= ~(1 << v)

    def run(self) -> int:
        if self.everything:
            self.expand(0, self.everything)
        return self.best


def independence_number(n: int, q: int, ell: int = 2, budget: Optional[int] = None) -> int:
    """Exact alpha of the confusability graph"""
    adjacency = confusability_graph(n, q, ell, budget)
    seed = len(greedy_independent_set(adjacency))
    search = _CliqueSearch(adjacency, seed)
    alpha = search.run()
    logger.debug(f"alpha(n={n}, q={q}, ell={ell}) = {alpha} after {search.nodes:,} node(s), greedy seed {seed}")
    return alpha
