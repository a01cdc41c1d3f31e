"""
Brute-force ground truth: error balls, exact independence numbers and sweeps

Sweeps live in src.oracle.sweeps and are imported from there directly.
"""

from .reports import Counterexample, VerificationReport
from .balls import (
    BallKind,
    BallSpec,
    Space,
    ball,
    ball_intersection,
    max_ball_intersection,
    run_count,
)
from .independence import (
    confusability_graph,
    greedy_independent_set,
    independence_number,
)

__all__ = [
    'Counterexample',
    'VerificationReport',
    'BallKind',
    'BallSpec',
    'Space',
    'ball',
    'ball_intersection',
    'max_ball_intersection',
    'run_count',
    'confusability_graph',
    'greedy_independent_set',
    'independence_number',
]
