"""
Redundancy bounds and reconstruction intersection sizes
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from ..codes.families import guarded_floor
from ..core.exceptions import PreconditionViolated, PrescribedTNonpositive, ReadCodeError
from ..core.logger import get_logger
from ..sequences.seqcore import q_ell
from .clique_cover import clique_cover_size

logger = get_logger(__name__)

Number = Union[int, Fraction, float]

BOUND_COLUMNS = ["name", "n", "q", "t", "d", "value", "provenance"]


@dataclass
class BoundReport:
    name: str
    n: int
    q: int
    value: Number
    provenance: str
    t: Optional[int] = None
    d: Optional[int] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def formatted_value(self) -> str:
        if isinstance(self.value, Fraction):
            if self.value.denominator == 1:
                return str(self.value.numerator)
            return f"{self.value.numerator}/{self.value.denominator}"
        if isinstance(self.value, int):
            return str(self.value)
        return f"{self.value:.6f}"

    def to_row(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "n": self.n,
            "q": self.q,
            "t": self.t,
            "d": self.d,
            "value": self.formatted_value(),
            "provenance": self.provenance,
        }


def _log(value: Number, q: int) -> float:
    if isinstance(value, Fraction):
        return (math.log(value.numerator) - math.log(value.denominator)) / math.log(q)
    return math.log(value) / math.log(q)


def _binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def hamming_bound_redundancy(n: int, q: int) -> float:
    """log_q((q-1)n + 1)"""
    if n < 1:
        raise PreconditionViolated(f"Hamming bound needs n >= 1, got n={n}")
    return math.log((q - 1) * n + 1, q)


def levenshtein_N(n: int, q: int, t: int, d: int) -> int:
    """
    Largest |S_t(x) ∩ S_t(y)| over x, y in Sigma_q^n with Hamming distance >= d

    sum over i in [0, t - ceil(d/2)] of C(n-d, i) (q-1)^i
        * sum over k, l in [d-t+i, t-i] of C(d, k) C(d-k, l) (q-2)^(d-k-l)
    with C(a, b) = 0 outside 0 <= b <= a and 0^0 = 1.
    """
    if d < 1:
        raise PreconditionViolated(f"distance d={d} must be >= 1")
    half = -(-d // 2)
    if t < half:
        raise PreconditionViolated(f"radius t={t} must be >= ceil(d/2) = {half}")
    total = 0
    for i in range(t - half + 1):
        inner = 0
        for k in range(d - t + i, t - i + 1):
            for l in range(d - t + i, t - i + 1):
                ways = _binom(d, k) * _binom(d - k, l)
                if ways:
                    inner += ways * (q - 2) ** (d - k - l)
        total += _binom(n - d, i) * (q - 1) ** i * inner
    return total


def read_recon_upper(n: int, ell: int, q: int, t: int, d: int) -> int:
    """Upper bound on the largest read-vector ball intersection: N(n+ell-1, q_ell, t, d)"""
    return levenshtein_N(n + ell - 1, q_ell(q, ell), t, d)


def prescribed_t(n: int, q: int) -> int:
    """floor((log_q n - log_q(2 ln log_q n)) / 2)"""
    log_n = math.log(n) / math.log(q) if n >= 1 else 0.0
    if log_n <= 1:
        raise PrescribedTNonpositive(f"log_q n = {log_n:.4f} <= 1 at n={n}, q={q}; the prescribed t is undefined")
    t = guarded_floor((log_n - math.log(2 * math.log(log_n)) / math.log(q)) / 2)
    if t < 1:
        raise PrescribedTNonpositive(f"prescribed t = {t} < 1 at n={n}, q={q}; n is too small for this bound")
    return t


def redundancy_lower_bound_d3(n: int, q: int) -> float:
    """n - log_q |Q(t*)|: lower bound on the redundancy of 2-read (n,3)_q codes"""
    t = prescribed_t(n, q)
    return n - _log(clique_cover_size(n, q, t), q)


def _loglog(n: int, q: int) -> float:
    return math.log(math.log(n) / math.log(q)) / math.log(q)


def asymptotic_trends(n: int, q: int) -> List[BoundReport]:
    """Leading terms of the known redundancy bounds; meaningful as n grows, reported only"""
    if n < 2:
        return []
    loglog = _loglog(n, q)
    log2 = math.log(2, q)
    rows = [
        BoundReport("trend:l3_d3_lower", n, q, loglog - 1, "loglog_q n - 1", d=3),
        BoundReport("trend:l3_d3_upper", n, q, loglog - log2, "loglog_q n - log_q 2", d=3),
        BoundReport("trend:l2_d3_lower", n, q, loglog, "loglog_q n", d=3),
        BoundReport("trend:l2_d3_upper", n, q, loglog + 1 - log2, "loglog_q n + 1 - log_q 2", d=3),
    ]
    if q == 2:
        rows.append(BoundReport("trend:l2_d4_upper", n, q, loglog + math.log2(6), "log2 log2 n + log2 6", d=4))
    rows.append(BoundReport("trend:l2_d5_lower", n, q, hamming_bound_redundancy(n, q), "log_q((q-1)n+1)", d=5))
    rows.append(BoundReport(
        "trend:del_recon_upper", n, q, loglog + min(math.log(q - 1, q) - log2, 0.0),
        "loglog_q n + min(log_q(q-1) - log_q 2, 0)",
    ))
    try:
        gap = redundancy_lower_bound_d3(n, q) - loglog
        rows.append(BoundReport("trend:d3_lower_gap", n, q, gap, "(n - log_q|Q(t*)|) - loglog_q n", d=3))
    except PrescribedTNonpositive:
        pass
    return rows


def bound_reports(
    n: int,
    q: int,
    ell: int = 2,
    t: Optional[int] = None,
    d: Optional[int] = None,
) -> List[BoundReport]:
    """Every bound defined at (n, q), plus the reconstruction sizes when t and d are given"""
    rows = [BoundReport("hamming_redundancy", n, q, hamming_bound_redundancy(n, q), "log_q((q-1)n+1)", d=5)]
    for k in range(1, max(1, n // 2) + 1):
        rows.append(BoundReport(
            "clique_cover_size", n, q, clique_cover_size(n, q, k),
            "q^n/(2t+1) (1+2t(1-(2t+1)/q^2t)^m)", t=k, d=3,
        ))
    try:
        t_star = prescribed_t(n, q)
        rows.append(BoundReport(
            "redundancy_lower_bound_d3", n, q, redundancy_lower_bound_d3(n, q),
            "n - log_q clique_cover_size(n, q, t*)", t=t_star, d=3,
        ))
    except PrescribedTNonpositive as e:
        logger.info(f"Skipping the d=3 lower bound: {e}")
    if t is not None and d is not None:
        try:
            rows.append(BoundReport("levenshtein_N", n, q, levenshtein_N(n, q, t, d),
                                    "Levenshtein intersection size", t=t, d=d))
            rows.append(BoundReport(f"read_recon_upper(ell={ell})", n, q, read_recon_upper(n, ell, q, t, d),
                                    "N(n+ell-1, q_ell, t, d)", t=t, d=d))
        except ReadCodeError as e:
            logger.info(f"Skipping reconstruction bounds: {e}")
    rows.extend(asymptotic_trends(n, q))
    return rows


def reports_frame(reports: List[BoundReport]) -> pd.DataFrame:
    frame = pd.DataFrame([r.to_row() for r in reports], columns=BOUND_COLUMNS)
    return frame.astype({"t": "Int64", "d": "Int64"})
