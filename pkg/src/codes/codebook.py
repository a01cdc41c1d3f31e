"""
Membership, enumeration, residue optimization and guarantee verification
for the code families in families.py
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.config import get_config, resolve_budget, resolve_workers
from ..analysis.characterize import D4Case, classify_d4
from ..core.exceptions import BudgetExceeded, InvalidFamilyParams, ShapeMismatch
from ..core.logger import get_logger
from ..core.parallel import map_ordered, scan_pairs, shard_ranges
from ..oracle.balls import BallKind, BallSpec, ball_intersection
from ..oracle.reports import Counterexample, VerificationReport
from ..sequences import kernels
from ..sequences.seqcore import (
    Word,
    in_all,
    indicator,
    inversion_number,
    is_good,
    odd_subword,
    vt_syndrome,
)
from .families import CodeFamilySpec, Congruence, Family, Functional, Transform, derive_params

logger = get_logger(__name__)

JOINT = "joint"
INDEPENDENT = "independent"


def _transform(x: Word, transform: Transform) -> Word:
    if transform is Transform.INDICATOR:
        return indicator(x)
    if transform is Transform.ODD:
        return odd_subword(x)
    return x


def congruence_value(x: Word, c: Congruence) -> int:
    z = _transform(x, c.transform)
    value = inversion_number(z) if c.functional is Functional.INV else vt_syndrome(z, c.order)
    return value % c.modulus


def _transform_batch(W: np.ndarray, q: int, transform: Transform) -> np.ndarray:
    if transform is Transform.INDICATOR:
        return kernels.indicator_batch(W, q)
    if transform is Transform.ODD:
        return kernels.odd_batch(W)
    return W


def signature_matrix(spec: CodeFamilySpec, W: np.ndarray) -> np.ndarray:
    """(N, k) residues of every row under every congruence"""
    columns = []
    for c in spec.congruences:
        Z = _transform_batch(W, spec.q, c.transform)
        if c.functional is Functional.INV:
            values = kernels.inversion_batch(Z)
        else:
            values = kernels.vt_syndrome_batch(Z, c.order)
        columns.append((values % c.modulus).astype(np.int64))
    if not columns:
        return np.zeros((W.shape[0], 0), dtype=np.int64)
    return np.stack(columns, axis=1)


def ambient_mask(spec: CodeFamilySpec, W: np.ndarray) -> np.ndarray:
    """Rows inside the family's constrained set: run cap and goodness"""
    mask = np.ones(W.shape[0], dtype=bool)
    if spec.run_cap is not None:
        mask &= kernels.max_alternating_run_batch(W) <= spec.run_cap
    if spec.T is not None:
        mask &= kernels.good_batch(W, spec.ell, spec.T)
    return mask


def in_ambient(spec: CodeFamilySpec, x: Word) -> bool:
    if spec.run_cap is not None and not in_all(x, spec.run_cap):
        return False
    if spec.T is not None and not is_good(x, spec.ell, spec.T):
        return False
    return True


def is_member(spec: CodeFamilySpec, x: Word) -> bool:
    """Exact conjunction of the family's conditions; pure arithmetic, no enumeration"""
    if x.q != spec.q or len(x) != spec.n:
        raise ShapeMismatch(f"word of length {len(x)} over q={x.q} checked against n={spec.n}, q={spec.q}")
    if spec.residues is None:
        raise InvalidFamilyParams("membership needs residues; use with_residues() or best_residues()")
    if not in_ambient(spec, x):
        return False
    return all(congruence_value(x, c) == r for c, r in zip(spec.congruences, spec.residues))


def _check_budget(spec: CodeFamilySpec, budget: Optional[int]) -> int:
    budget = resolve_budget(budget)
    required = spec.q ** spec.n
    if required > budget:
        raise BudgetExceeded(
            f"exhaustive scan of {spec.family.value} at n={spec.n}, q={spec.q}",
            required, budget, hint="raise --budget or READCODE_BUDGET",
        )
    return budget


def _shards(spec: CodeFamilySpec) -> List[Tuple[int, int]]:
    return shard_ranges(spec.q ** spec.n, get_config().enumeration.CHUNK_SIZE)


@dataclass
class EnumeratedCode:
    spec: CodeFamilySpec
    words: Tuple[Word, ...]

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def redundancy(self) -> Optional[float]:
        if not self.words:
            return None
        return self.spec.n - math.log(self.size) / math.log(self.spec.q)

    def header(self) -> Dict[str, Any]:
        return {"spec": self.spec.to_dict(), "size": self.size, "redundancy": self.redundancy}

    def to_lines(self) -> List[str]:
        return [json.dumps(self.header())] + [w.to_text() for w in self.words]


def member_indices(spec: CodeFamilySpec, budget: Optional[int] = None, workers: Optional[int] = None) -> np.ndarray:
    """Lexicographic indices of all members"""
    if spec.residues is None:
        raise InvalidFamilyParams("enumeration needs residues; use with_residues() or best_residues()")
    _check_budget(spec, budget)
    target = np.array(spec.residues, dtype=np.int64)

    def scan(bounds: Tuple[int, int]) -> np.ndarray:
        start, stop = bounds
        W = kernels.word_matrix(spec.n, spec.q, start, stop)
        keep = ambient_mask(spec, W) & (signature_matrix(spec, W) == target).all(axis=1)
        return np.flatnonzero(keep) + start

    parts = map_ordered(scan, _shards(spec), resolve_workers(workers))
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def enumerate_code(spec: CodeFamilySpec, budget: Optional[int] = None, workers: Optional[int] = None) -> EnumeratedCode:
    """All members in lexicographic order"""
    indices = member_indices(spec, budget, workers)
    words: List[Word] = []
    for bounds in shard_ranges(len(indices), get_config().enumeration.CHUNK_SIZE):
        W = kernels.index_matrix(indices[bounds[0]:bounds[1]], spec.n, spec.q)
        words.extend(kernels.matrix_to_words(W, spec.q))
    logger.info(f"Enumerated {spec.family.value} n={spec.n} q={spec.q}: {len(words):,} codeword(s)")
    return EnumeratedCode(spec, tuple(words))


def ambient_size(spec: CodeFamilySpec, budget: Optional[int] = None, workers: Optional[int] = None) -> int:
    """Size of the family's constrained ambient set"""
    _check_budget(spec, budget)

    def count(bounds: Tuple[int, int]) -> int:
        return int(ambient_mask(spec, kernels.word_matrix(spec.n, spec.q, *bounds)).sum())

    return sum(map_ordered(count, _shards(spec), resolve_workers(workers)))


@dataclass
class ResidueSearch:
    spec: CodeFamilySpec
    ambient_size: int
    buckets: int
    best_size: int
    guaranteed_size: int
    strategy: str = JOINT

    def to_dict(self) -> Dict[str, Any]:
        return {
            "spec": self.spec.to_dict(),
            "ambient_size": self.ambient_size,
            "buckets": self.buckets,
            "best_size": self.best_size,
            "guaranteed_size": self.guaranteed_size,
            "strategy": self.strategy,
        }


def _bucket_counts(
    spec: CodeFamilySpec,
    columns: Sequence[int],
    fixed: Dict[int, int],
    workers: int,
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Mixed-radix residue keys of the chosen columns and their bucket sizes

    Rows outside the ambient set, or violating a fixed residue, are skipped.
    The first column is the most significant digit, so key order is
    lexicographic residue-tuple order.
    """
    moduli = [spec.congruences[c].modulus for c in columns]
    radix = np.array([math.prod(moduli[k + 1:]) for k in range(len(moduli))], dtype=np.int64)

    def bucket(bounds: Tuple[int, int]) -> Tuple[np.ndarray, np.ndarray]:
        W = kernels.word_matrix(spec.n, spec.q, *bounds)
        S = signature_matrix(spec, W)
        keep = ambient_mask(spec, W)
        for column, residue in fixed.items():
            keep &= S[:, column] == residue
        keys = S[keep][:, list(columns)] @ radix if columns else np.zeros(int(keep.sum()), dtype=np.int64)
        return np.unique(keys, return_counts=True)

    parts = map_ordered(bucket, _shards(spec), workers)
    keys = np.concatenate([k for k, _ in parts])
    counts = np.concatenate([c for _, c in parts])
    merged, inverse = np.unique(keys, return_inverse=True)
    return merged, np.bincount(inverse, weights=counts, minlength=len(merged)).astype(np.int64)


def _decode(key: int, moduli: Sequence[int]) -> Tuple[int, ...]:
    digits = []
    for m in reversed(moduli):
        key, r = divmod(key, m)
        digits.append(r)
    return tuple(reversed(digits))


def _best_in(spec, columns, fixed, workers) -> Tuple[Tuple[int, ...], int, int]:
    keys, counts = _bucket_counts(spec, columns, fixed, workers)
    if len(keys) == 0:
        return (0,) * len(columns), 0, 0
    winner = int(np.argmax(counts))
    moduli = [spec.congruences[c].modulus for c in columns]
    return _decode(int(keys[winner]), moduli), int(counts[winner]), len(keys)


def residue_search(
    spec: CodeFamilySpec,
    strategy: Optional[str] = None,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> ResidueSearch:
    """
    Choose the residue tuple with the largest code

    One pass buckets every ambient word by its residue signature; ties go to
    the lexicographically smallest tuple. The independent strategy fixes the
    residues of each congruence group in turn (C25: first the aux1 group, then
    aux2 among its members).
    """
    _check_budget(spec, budget)
    workers = resolve_workers(workers)
    space_budget = get_config().enumeration.RESIDUE_SPACE_BUDGET
    groups = list(dict.fromkeys(c.group for c in spec.congruences))

    if strategy is None:
        strategy = INDEPENDENT if spec.residue_space > space_budget and len(groups) > 1 else JOINT
    if strategy not in (JOINT, INDEPENDENT):
        raise InvalidFamilyParams(f"unknown residue strategy {strategy!r}")
    if strategy == JOINT and spec.residue_space > space_budget:
        raise BudgetExceeded("joint residue space", spec.residue_space, space_budget)

    total = ambient_size(spec, budget, workers)
    if strategy == JOINT:
        residues, best, buckets = _best_in(spec, range(len(spec.congruences)), {}, workers)
    else:
        fixed: Dict[int, int] = {}
        for group in groups:
            columns = [k for k, c in enumerate(spec.congruences) if c.group == group]
            chosen, best, buckets = _best_in(spec, columns, fixed, workers)
            fixed.update(zip(columns, chosen))
        residues = tuple(fixed[k] for k in range(len(spec.congruences)))

    search = ResidueSearch(
        spec=spec.with_residues(residues),
        ambient_size=total,
        buckets=buckets,
        best_size=best,
        guaranteed_size=-(-total // spec.residue_space),
        strategy=strategy,
    )
    logger.info(
        f"Best residues for {spec.family.value} n={spec.n} q={spec.q}: {residues} "
        f"-> {best:,} word(s) ({strategy}, guaranteed >= {search.guaranteed_size:,})"
    )
    return search


def best_residues(
    family,
    n: int,
    q: int,
    ell: int = 2,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
    strategy: Optional[str] = None,
    **overrides,
) -> CodeFamilySpec:
    spec = derive_params(family, n, q, ell, **overrides)
    return residue_search(spec, strategy, budget, workers).spec


def pigeonhole_redundancy(search: ResidueSearch) -> Optional[float]:
    """n - log_q of the size the pigeonhole principle guarantees"""
    if search.guaranteed_size < 1:
        return None
    return search.spec.n - math.log(search.guaranteed_size) / math.log(search.spec.q)


# Pair guarantees: each takes the prepared pair context and returns failure details or None
PairRule = Callable[["_PairContext", int, int], Optional[Dict[str, Any]]]


@dataclass
class _PairContext:
    spec: CodeFamilySpec
    words: Tuple[Word, ...]
    W: np.ndarray
    R: Optional[np.ndarray] = None

    def read_distance(self, i: int, j: int) -> int:
        return int((self.R[i] != self.R[j]).sum())

    def span_and_hamming(self, i: int, j: int) -> Tuple[int, int]:
        differing = np.flatnonzero(self.W[i] != self.W[j])
        return int(differing[-1] - differing[0] + 1), len(differing)


def _min_read_distance(bound: int) -> PairRule:
    def rule(ctx: _PairContext, i: int, j: int):
        d = ctx.read_distance(i, j)
        return {"read_distance": d, "required": bound} if d < bound else None
    return rule


def _cp_rule(ctx: _PairContext, i: int, j: int):
    d = ctx.read_distance(i, j)
    if d < 3:
        return {"read_distance": d, "required": 3}
    shared = ball_intersection(ctx.words[i], ctx.words[j], BallSpec(BallKind.INSERTION, 1))
    return {"insertion_intersection": shared, "allowed": 1} if shared > 1 else None


def _cdel_rule(ctx: _PairContext, i: int, j: int):
    shared = ball_intersection(ctx.words[i], ctx.words[j], BallSpec(BallKind.DELETION, 1))
    return {"deletion_intersection": shared, "allowed": 1} if shared > 1 else None


def _window_rule(ctx: _PairContext, i: int, j: int):
    span, hamming = ctx.span_and_hamming(i, j)
    if span <= ctx.spec.P and hamming < ctx.spec.d:
        return {"window_span": span, "hamming_distance": hamming, "P": ctx.spec.P, "required": ctx.spec.d}
    return None


def _excludes(case: D4Case, also_min4: bool) -> PairRule:
    def rule(ctx: _PairContext, i: int, j: int):
        d = ctx.read_distance(i, j)
        if also_min4 and d < 4:
            return {"read_distance": d, "required": 4}
        if d == 4 and classify_d4(ctx.words[i], ctx.words[j]).tag is case:
            return {"read_distance": 4, "shape": case.value}
        return None
    return rule


_RULES: Dict[Family, PairRule] = {
    Family.C33: _min_read_distance(3),
    Family.CP: _cp_rule,
    Family.CDEL: _cdel_rule,
    Family.BOUNDED: _window_rule,
    Family.BOUNDED_BIN: _window_rule,
    Family.C24: _min_read_distance(4),
    Family.C24_BIN: _min_read_distance(4),
    Family.AUX1: _excludes(D4Case.CASE_B, also_min4=True),
    Family.AUX2: _excludes(D4Case.CASE_A, also_min4=False),
    Family.C25: _min_read_distance(5),
}


def verify_family(spec: CodeFamilySpec, budget: Optional[int] = None, workers: Optional[int] = None) -> VerificationReport:
    """Check the family's guarantee over every pair of codewords"""
    code = enumerate_code(spec, budget, workers)
    W = kernels.words_to_matrix(code.words)
    ctx = _PairContext(spec, code.words, W)
    if code.size > 1 and spec.family not in (Family.BOUNDED, Family.BOUNDED_BIN, Family.CDEL):
        ctx.R = kernels.read_rank_matrix(W, spec.q, spec.ell)
    rule = _RULES[spec.family]
    size = code.size

    def visit(i: int, j: int) -> Optional[Counterexample]:
        details = rule(ctx, i, j)
        if details is None:
            return None
        return Counterexample.of(code.words[i], code.words[j], **details)

    examined, counterexample = scan_pairs(size, visit, resolve_workers(workers))
    report = VerificationReport(
        check=f"family:{spec.family.value}",
        grid=spec.to_dict(),
        pairs=examined,
        counterexample=counterexample,
        notes={"size": size},
    )
    logger.info(report.summary())
    return report
