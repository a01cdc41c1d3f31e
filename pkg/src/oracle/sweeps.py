"""
Exhaustive property sweeps

Each check walks a parameter grid in order and, inside one instance, the
distinct word pairs in lexicographic order. The first failing instance stops
the sweep and its first failing pair becomes the counterexample, so identical
grids always produce identical reports.

Ground truth comes from seqcore, the batch kernels and the balls in this
package; characterize, codebook and bounds only appear as the subject of a check.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from config.config import resolve_workers
from ..analysis.characterize import (
    decompose_pair,
    l3_confusable,
    predicted_distance,
    alternating_swap,
    swap_inversion_gap,
    window_span,
)
from ..bounds.bounds import levenshtein_N, read_recon_upper
from ..bounds.clique_cover import build_clique_cover, clique_cover_count, clique_cover_size
from ..codes.codebook import best_residues, enumerate_code, verify_family
from ..codes.families import derive_params, guarded_ceil
from ..core.exceptions import (
    AnalysisError,
    InvalidFamilyParams,
    MaxOverEmptySet,
    UnknownCheck,
)
from ..core.logger import VerificationLogger, get_logger
from ..core.parallel import scan_pairs
from ..sequences import kernels
from ..sequences.seqcore import Word, q_ell
from .balls import BallKind, BallSpec, Space, _ball, _substitutions, max_ball_intersection, pairwise_hamming
from .independence import confusability_graph, greedy_independent_set, independence_number
from .reports import Counterexample, VerificationReport

logger = get_logger(__name__)
verification_logger = VerificationLogger()


@dataclass(frozen=True)
class SweepGrid:
    """Parameter ranges; every check reads the axes it needs"""
    qs: Tuple[int, ...] = (2,)
    ns: Tuple[int, ...] = (1, 2, 3, 4, 5)
    ells: Tuple[int, ...] = (2,)
    radii: Tuple[Tuple[int, int], ...] = ((1, 1), (1, 2), (2, 2), (2, 3), (2, 4))
    caps: Tuple[int, ...] = (1, 2, 3)
    families: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        grid = asdict(self)
        return {key: [list(v) if isinstance(v, tuple) else v for v in value] for key, value in grid.items()}


@dataclass
class CheckOutcome:
    """What one check accumulates while walking its grid"""
    pairs: int = 0
    instances: int = 0
    counterexample: Optional[Counterexample] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    def record(self, check: str, params: Dict[str, Any], pairs: int, hit: Optional[Counterexample]) -> bool:
        """Add one instance; True when the sweep must stop"""
        self.pairs += pairs
        self.instances += 1
        verification_logger.log_instance(check, params, pairs, hit is None)
        if hit is not None:
            hit.details.setdefault("instance", params)
            self.counterexample = hit
            return True
        return False


Check = Callable[[SweepGrid, int, Optional[int]], CheckOutcome]
CHECKS: Dict[str, Check] = {}


def register_check(name: str) -> Callable[[Check], Check]:
    def decorator(fn: Check) -> Check:
        CHECKS[name] = fn
        return fn
    return decorator


def _words(n: int, q: int) -> Tuple[np.ndarray, List[Word]]:
    W = kernels.word_matrix(n, q)
    return W, kernels.matrix_to_words(W, q)


def _instance_failure(params: Dict[str, Any], **details) -> Counterexample:
    return Counterexample((), "-", "-", dict(details, instance=params))


def _first_in_mask(mask: np.ndarray) -> Optional[Tuple[int, int]]:
    """First (i, j) with i < j in row-major order where mask holds"""
    hits = np.argwhere(np.triu(mask, k=1))
    return (int(hits[0][0]), int(hits[0][1])) if len(hits) else None


def _pair_count(size: int) -> int:
    return size * (size - 1) // 2


@register_check("char2")
def _char2(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """The alternating-block decomposition predicts the 2-read distance exactly"""
    outcome = CheckOutcome()
    for q, n in itertools.product(grid.qs, grid.ns):
        W, words = _words(n, q)
        R = kernels.read_rank_matrix(W, q, 2)

        def visit(i: int, j: int) -> Optional[Counterexample]:
            actual = int((R[i] != R[j]).sum())
            structure = decompose_pair(words[i], words[j])
            predicted = predicted_distance(structure)
            if (predicted != actual or structure.reassemble() != (words[i], words[j])
                    or not structure.boundary_holds()):
                return Counterexample.of(words[i], words[j], read_distance=actual, predicted=predicted)
            return None

        pairs, hit = scan_pairs(len(words), visit, workers)
        if outcome.record("char2", {"q": q, "n": n}, pairs, hit):
            break
    return outcome


@register_check("read_min_distance")
def _read_min_distance(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """Distinct words are at ell-read distance >= 2, and exactly ell when one symbol differs"""
    outcome = CheckOutcome()
    smallest: Optional[int] = None
    for q, n, ell in itertools.product(grid.qs, grid.ns, grid.ells):
        W, words = _words(n, q)
        D = pairwise_hamming(kernels.read_rank_matrix(W, q, ell))
        H = pairwise_hamming(W)
        distinct = np.triu(np.ones_like(D, dtype=bool), k=1)
        if distinct.any():
            low = int(D[distinct].min())
            smallest = low if smallest is None else min(smallest, low)
        bad = _first_in_mask((D < 2) | ((H == 1) & (D != ell)))
        hit = None
        if bad is not None:
            i, j = bad
            hit = Counterexample.of(words[i], words[j], read_distance=int(D[i, j]), hamming=int(H[i, j]))
        if outcome.record("read_min_distance", {"q": q, "n": n, "ell": ell}, _pair_count(len(words)), hit):
            break
    outcome.notes["min_read_distance"] = smallest
    return outcome


def _ball_equivalence(name: str, grid: SweepGrid, workers: int, kind: BallKind) -> CheckOutcome:
    outcome = CheckOutcome()
    spec = BallSpec(kind, 1)
    for q, n in itertools.product(grid.qs, grid.ns):
        W, words = _words(n, q)
        R = kernels.read_rank_matrix(W, q, 2)
        balls: List[Set] = [_ball(w, spec) for w in words]

        def visit(i: int, j: int) -> Optional[Counterexample]:
            shared = len(balls[i] & balls[j])
            if kind is BallKind.INSERTION:
                shape = int((R[i] != R[j]).sum()) == 2
            else:
                t = alternating_swap(words[i], words[j])
                shape = t is not None and t >= 2
            if shape != (shared == 2):
                return Counterexample.of(words[i], words[j], intersection=shared, shape=shape)
            return None

        pairs, hit = scan_pairs(len(words), visit, workers)
        if outcome.record(name, {"q": q, "n": n}, pairs, hit):
            break
    return outcome


@register_check("ins_equiv")
def _ins_equiv(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """2-read distance 2 iff the single-insertion balls share exactly two words"""
    return _ball_equivalence("ins_equiv", grid, workers, BallKind.INSERTION)


@register_check("del_equiv")
def _del_equiv(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """Single alternating swap of length >= 2 iff the single-deletion balls share exactly two words"""
    return _ball_equivalence("del_equiv", grid, workers, BallKind.DELETION)


def _indicator_hamming(W: np.ndarray, q: int) -> np.ndarray:
    return pairwise_hamming(kernels.indicator_batch(W, q))


@register_check("indicator_bound")
def _indicator_bound(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """
    1 <= d_H(1(x), 1(y)) <= 2-read distance, and for pairs at 2-read distance <= 3
    (or distance 4 with three blocks) the indicator differences span at most
    the total block length plus one
    """
    outcome = CheckOutcome()
    for q, n in itertools.product(grid.qs, grid.ns):
        W, words = _words(n, q)
        D = pairwise_hamming(kernels.read_rank_matrix(W, q, 2))
        I = _indicator_hamming(W, q)

        def visit(i: int, j: int) -> Optional[Counterexample]:
            d, h = int(D[i, j]), int(I[i, j])
            if not 1 <= h <= d:
                return Counterexample.of(words[i], words[j], read_distance=d, indicator_hamming=h)
            if d > 4:
                return None
            structure = decompose_pair(words[i], words[j])
            if d == 4 and structure.s != 2:
                return None
            span = window_span(words[i], words[j], "indicator")
            limit = sum(block.t for block in structure.blocks) + 1
            if span > limit:
                return Counterexample.of(words[i], words[j], read_distance=d, span=span, limit=limit)
            return None

        pairs, hit = scan_pairs(len(words), visit, workers)
        if outcome.record("indicator_bound", {"q": q, "n": n}, pairs, hit):
            break
    return outcome


@register_check("indicator_binary")
def _indicator_binary(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """
    Binary pairs at 2-read distance <= 3 have indicator sequences at Hamming
    distance exactly 2, or exactly 1 when the last swap block ends at position n

    Every swap block flips 1(x) at its first position and right after its last
    one; a block ending at n has no position after it. The last block ends at
    n exactly when the last symbols differ.
    """
    outcome = CheckOutcome()
    for n in grid.ns:
        W, words = _words(n, 2)
        D = pairwise_hamming(kernels.read_rank_matrix(W, 2, 2))
        I = _indicator_hamming(W, 2)
        last = W[:, n - 1] if n else np.zeros(len(W), dtype=W.dtype)
        expected = np.where(last[:, None] != last[None, :], 1, 2)
        bad = _first_in_mask((D <= 3) & (I != expected))
        hit = None
        if bad is not None:
            i, j = bad
            hit = Counterexample.of(
                words[i], words[j],
                read_distance=int(D[i, j]), indicator_hamming=int(I[i, j]), expected=int(expected[i, j]),
            )
        if outcome.record("indicator_binary", {"q": 2, "n": n}, _pair_count(len(words)), hit):
            break
    return outcome


@register_check("read_ball_overlap")
def _read_ball_overlap(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """ell-read distance >= 3 iff the radius-1 substitution balls of the ranked read vectors share <= 1 word"""
    outcome = CheckOutcome()
    for q, n, ell in itertools.product(grid.qs, grid.ns, grid.ells):
        W, words = _words(n, q)
        R = kernels.read_rank_matrix(W, q, ell)
        Q = q_ell(q, ell)
        balls = [_substitutions(tuple(int(s) for s in row), Q, 1) for row in R]

        def visit(i: int, j: int) -> Optional[Counterexample]:
            d = int((R[i] != R[j]).sum())
            shared = len(balls[i] & balls[j])
            if (d >= 3) != (shared <= 1):
                return Counterexample.of(words[i], words[j], read_distance=d, intersection=shared)
            return None

        pairs, hit = scan_pairs(len(words), visit, workers)
        if outcome.record("read_ball_overlap", {"q": q, "n": n, "ell": ell}, pairs, hit):
            break
    return outcome


@register_check("l3_structure")
def _l3_structure(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """For ell >= 3, pairs at ell-read distance <= 2 are evenly spaced (a, b) swaps"""
    outcome = CheckOutcome()
    for q, n, ell in itertools.product(grid.qs, grid.ns, grid.ells):
        if ell < 3:
            continue
        W, words = _words(n, q)
        R = kernels.read_rank_matrix(W, q, ell)

        def visit(i: int, j: int) -> Optional[Counterexample]:
            x, y = words[i], words[j]
            d = int((R[i] != R[j]).sum())
            try:
                structure = l3_confusable(x, y, ell)
            except AnalysisError as e:
                return Counterexample.of(x, y, read_distance=d, error=str(e))
            if (structure is None) != (d > 2):
                return Counterexample.of(x, y, read_distance=d, parsed=structure is not None)
            if structure is not None and structure.swap_count != swap_inversion_gap(x, y):
                return Counterexample.of(x, y, read_distance=d, swap_count=structure.swap_count)
            return None

        pairs, hit = scan_pairs(len(words), visit, workers)
        if outcome.record("l3_structure", {"q": q, "n": n, "ell": ell}, pairs, hit):
            break
    return outcome


@register_check("window_span")
def _window_span(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """Inside ALL(n, c), pairs at 2-read distance <= 3 differ in 1(x) within a window of 2c + 1"""
    outcome = CheckOutcome()
    for q, n, cap in itertools.product(grid.qs, grid.ns, grid.caps):
        W = kernels.word_matrix(n, q)
        W = W[kernels.max_alternating_run_batch(W) <= cap]
        words = kernels.matrix_to_words(W, q)
        D = pairwise_hamming(kernels.read_rank_matrix(W, q, 2))
        limit = 2 * cap + 1

        def visit(i: int, j: int) -> Optional[Counterexample]:
            if D[i, j] > 3:
                return None
            span = window_span(words[i], words[j], "indicator")
            if span > limit:
                return Counterexample.of(words[i], words[j], read_distance=int(D[i, j]), span=span, P=limit)
            return None

        pairs, hit = scan_pairs(len(words), visit, workers)
        if outcome.record("window_span", {"q": q, "n": n, "cap": cap}, pairs, hit):
            break
    return outcome


@register_check("read5_hamming3")
def _read5_hamming3(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """2-read distance >= 5 forces Hamming distance >= 3"""
    outcome = CheckOutcome()
    for q, n in itertools.product(grid.qs, grid.ns):
        W, words = _words(n, q)
        D = pairwise_hamming(kernels.read_rank_matrix(W, q, 2))
        H = pairwise_hamming(W)
        bad = _first_in_mask((D >= 5) & (H < 3))
        hit = None
        if bad is not None:
            i, j = bad
            hit = Counterexample.of(words[i], words[j], read_distance=int(D[i, j]), hamming=int(H[i, j]))
        if outcome.record("read5_hamming3", {"q": q, "n": n}, _pair_count(len(words)), hit):
            break
    return outcome


@register_check("all_density")
def _all_density(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """|ALL(n, P)| >= q^n / 2 once P >= ceil(log_q n) + 3"""
    outcome = CheckOutcome()
    for q, n in itertools.product(grid.qs, grid.ns):
        P = (guarded_ceil(math.log(n) / math.log(q)) if n > 1 else 0) + 3
        count = int((kernels.max_alternating_run_batch(kernels.word_matrix(n, q)) <= P).sum())
        params = {"q": q, "n": n, "P": P}
        hit = None if 2 * count >= q ** n else _instance_failure(params, size=count, total=q ** n)
        outcome.notes.setdefault("sizes", []).append({**params, "size": count})
        if outcome.record("all_density", params, 0, hit):
            break
    return outcome


@register_check("clique_cover")
def _clique_cover(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """The cover covers, its cliques are cliques, and its size matches both closed forms"""
    outcome = CheckOutcome()
    for q, n, t in itertools.product(grid.qs, grid.ns, sorted({t for t, _ in grid.radii})):
        cover = build_clique_cover(n, q, t, budget)
        params = {"q": q, "n": n, "t": t}
        covered = {w for clique in cover.cliques for w in clique}
        pairs = 0
        hit = None
        if len(covered) != q ** n:
            hit = _instance_failure(params, covered=len(covered), total=q ** n)
        elif not cover.count == clique_cover_count(n, q, t) == clique_cover_size(n, q, t):
            hit = _instance_failure(params, materialized=cover.count, counted=clique_cover_count(n, q, t),
                                    closed_form=str(clique_cover_size(n, q, t)))
        else:
            for clique in cover.cliques:
                if len(clique) == 1:
                    continue
                R = kernels.read_rank_matrix(kernels.words_to_matrix(list(clique)), q, 2)
                D = pairwise_hamming(R)
                pairs += _pair_count(len(clique))
                bad = _first_in_mask(D != 2)
                if bad is not None:
                    i, j = bad
                    hit = Counterexample.of(clique[i], clique[j], read_distance=int(D[i, j]), **params)
                    break
        if outcome.record("clique_cover", params, pairs, hit):
            break
    return outcome


@register_check("levenshtein")
def _levenshtein(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """The closed-form intersection size equals the exhaustive maximum"""
    outcome = CheckOutcome()
    skipped = []
    for q, n, (t, d) in itertools.product(grid.qs, grid.ns, grid.radii):
        params = {"q": q, "n": n, "t": t, "d": d}
        try:
            observed = max_ball_intersection(n, q, t, d, Space.WORDS)
        except MaxOverEmptySet:
            skipped.append(params)
            continue
        formula = levenshtein_N(n, q, t, d)
        hit = None if observed == formula else _instance_failure(params, observed=observed, formula=formula)
        if outcome.record("levenshtein", params, _pair_count(q ** n), hit):
            break
    outcome.notes["skipped"] = skipped
    return outcome


@register_check("recon_upper")
def _recon_upper(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """The exhaustive read-vector intersection maximum stays below N(n+ell-1, q_ell, t, d)"""
    outcome = CheckOutcome()
    skipped = []
    for q, n, ell, (t, d) in itertools.product(grid.qs, grid.ns, grid.ells, grid.radii):
        params = {"q": q, "n": n, "ell": ell, "t": t, "d": d}
        try:
            observed = max_ball_intersection(n, q, t, d, Space.READ_VECTORS, ell=ell)
        except MaxOverEmptySet:
            skipped.append(params)
            continue
        bound = read_recon_upper(n, ell, q, t, d)
        hit = None if observed <= bound else _instance_failure(params, observed=observed, bound=bound)
        if outcome.record("recon_upper", params, _pair_count(q ** n), hit):
            break
    outcome.notes["skipped"] = skipped
    return outcome


@register_check("sandwich")
def _sandwich(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """best constructed code <= exact independence number <= every clique cover size"""
    outcome = CheckOutcome()
    rows = []
    for q, n in itertools.product(grid.qs, grid.ns):
        params: Dict[str, Any] = {"q": q, "n": n}
        code_size = 0
        if n >= 2:
            code_size = enumerate_code(best_residues("cp", n, q, budget=budget, workers=workers), budget, workers).size
        greedy = len(greedy_independent_set(confusability_graph(n, q)))
        alpha = independence_number(n, q)
        covers = {t: clique_cover_size(n, q, t) for t in range(1, max(1, n // 2) + 1)}
        rows.append({**params, "code": code_size, "greedy": greedy, "alpha": alpha,
                     "cover": {t: str(v) for t, v in covers.items()}})
        hit = None
        if not (max(code_size, greedy) <= alpha and all(alpha <= v for v in covers.values())):
            hit = _instance_failure(params, code=code_size, greedy=greedy, alpha=alpha,
                                    cover={t: str(v) for t, v in covers.items()})
        if outcome.record("sandwich", params, 0, hit):
            break
    outcome.notes["rows"] = rows
    return outcome


@register_check("family")
def _family(grid: SweepGrid, workers: int, budget: Optional[int] = None) -> CheckOutcome:
    """Every family's best-residue code meets its guarantee"""
    outcome = CheckOutcome()
    skipped = []
    for family, q, n in itertools.product(grid.families, grid.qs, grid.ns):
        ell = 3 if family.lower() == "c33" else 2
        params = {"family": family, "q": q, "n": n, "ell": ell}
        try:
            derive_params(family, n, q, ell)
        except InvalidFamilyParams as e:
            skipped.append({**params, "reason": str(e)})
            continue
        report = verify_family(best_residues(family, n, q, ell, budget=budget, workers=workers), budget, workers)
        if outcome.record("family", params, report.pairs, report.counterexample):
            break
    outcome.notes["skipped"] = skipped
    return outcome


def sweep(
    check: str,
    grid: SweepGrid,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> VerificationReport:
    """Run one registered check over a grid"""
    if check not in CHECKS:
        raise UnknownCheck(f"unknown check {check!r}; registered: {', '.join(sorted(CHECKS))}")
    workers = resolve_workers(workers)
    verification_logger.log_sweep_start(check, len(grid.qs) * len(grid.ns))
    outcome = CHECKS[check](grid, workers, budget)
    report = VerificationReport(
        check=check,
        grid=grid.to_dict(),
        pairs=outcome.pairs,
        counterexample=outcome.counterexample,
        notes={"instances": outcome.instances, **outcome.notes},
    )
    if report.counterexample is not None:
        c = report.counterexample
        verification_logger.log_counterexample(check, c.x, c.y, c.details)
    verification_logger.log_result(check, report.passed, report.pairs)
    return report
