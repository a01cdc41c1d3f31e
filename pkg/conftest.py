"""
Shared fixtures for the readcodes test suite
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config.config import get_config
from src.oracle.reports import Counterexample
from src.oracle.sweeps import CHECKS, CheckOutcome, register_check
from src.sequences import kernels
from src.sequences.seqcore import read_distance


@pytest.fixture
def restore_config():
    """Undo update_config() changes made by a test"""
    enumeration = get_config().enumeration
    saved = dict(vars(enumeration))
    yield get_config()
    for key, value in saved.items():
        setattr(enumeration, key, value)


@pytest.fixture
def broken_check():
    """A deliberately false claim: every pair of distinct words is at 2-read distance >= 3"""
    name = "broken_min_distance"

    @register_check(name)
    def _broken(grid, workers, budget=None):
        outcome = CheckOutcome()
        for q in grid.qs:
            for n in grid.ns:
                words = kernels.matrix_to_words(kernels.word_matrix(n, q), q)
                hit = None
                pairs = 0
                for i in range(len(words)):
                    for j in range(i + 1, len(words)):
                        pairs += 1
                        d = read_distance(words[i], words[j], 2)
                        if d < 3:
                            hit = Counterexample.of(words[i], words[j], read_distance=d)
                            break
                    if hit is not None:
                        break
                if outcome.record(name, {"q": q, "n": n}, pairs, hit):
                    return outcome
        return outcome

    yield name
    CHECKS.pop(name, None)
