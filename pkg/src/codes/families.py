"""
Code family definitions and parameter derivation

Every family is a conjunction of three kinds of condition on a word x:
a cap on alternating runs (membership in ALL(n, run_cap)), the goodness
condition for ell >= 3, and a list of syndrome congruences, each evaluated on
x, its indicator sequence 1(x) or its odd subsequence O(x).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.exceptions import InvalidFamilyParams
from ..core.logger import get_logger

logger = get_logger(__name__)

# Snap tolerance for ceilings and floors of real-valued logarithms
_LOG_EPSILON = 1e-9


class Family(str, Enum):
    C33 = "c33"
    CP = "cp"
    CDEL = "cdel"
    BOUNDED = "bounded"
    BOUNDED_BIN = "bounded_bin"
    C24 = "c24"
    C24_BIN = "c24_bin"
    AUX1 = "aux1"
    AUX2 = "aux2"
    C25 = "c25"

    @classmethod
    def parse(cls, text: str) -> "Family":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).strip().lower())
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise InvalidFamilyParams(f"unknown family {text!r}; expected one of {names}")


# Families whose guarantee is stated for 2-read vectors
_TWO_READ = {Family.CP, Family.CDEL, Family.C24, Family.C24_BIN, Family.AUX1, Family.AUX2, Family.C25}


class Transform(str, Enum):
    IDENTITY = "identity"
    INDICATOR = "indicator"
    ODD = "odd"


class Functional(str, Enum):
    VT = "vt"
    INV = "inv"


_TRANSFORM_LABEL = {Transform.IDENTITY: "x", Transform.INDICATOR: "1(x)", Transform.ODD: "O(x)"}


@dataclass(frozen=True)
class Congruence:
    """functional(transform(x)) = residue (mod modulus)"""
    transform: Transform
    functional: Functional
    order: int
    modulus: int
    group: str = ""

    def label(self) -> str:
        argument = _TRANSFORM_LABEL[self.transform]
        if self.functional is Functional.INV:
            return f"Inv({argument}) mod {self.modulus}"
        return f"VT{self.order}({argument}) mod {self.modulus}"


@dataclass(frozen=True)
class CodeFamilySpec:
    """Effective parameters of one family instance; residues are None until chosen"""
    family: Family
    n: int
    q: int
    ell: int
    P: Optional[int]
    run_cap: Optional[int]
    congruences: Tuple[Congruence, ...]
    T: Optional[int] = None
    d: Optional[int] = None
    residues: Optional[Tuple[int, ...]] = None

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(c.modulus for c in self.congruences)

    @property
    def residue_space(self) -> int:
        return math.prod(self.moduli)

    def with_residues(self, residues: Sequence[int]) -> "CodeFamilySpec":
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(self.congruences):
            raise InvalidFamilyParams(
                f"{self.family.value} takes {len(self.congruences)} residue(s), got {len(residues)}"
            )
        for r, m in zip(residues, self.moduli):
            if not 0 <= r < m:
                raise InvalidFamilyParams(f"residue {r} is outside [0, {m - 1}]")
        return replace(self, residues=residues)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "n": self.n,
            "q": self.q,
            "ell": self.ell,
            "P": self.P,
            "run_cap": self.run_cap,
            "T": self.T,
            "d": self.d,
            "moduli": list(self.moduli),
            "congruences": [c.label() for c in self.congruences],
            "residues": list(self.residues) if self.residues is not None else None,
        }


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    return all(k % f for f in range(3, math.isqrt(k) + 1, 2))


def prime_at_least(k: int) -> int:
    k = max(2, k)
    while not is_prime(k):
        k += 1
    return k


def prime_above(k: int) -> int:
    return prime_at_least(k + 1)


def _snap(value: float) -> Optional[int]:
    nearest = round(value)
    return int(nearest) if abs(value - nearest) < _LOG_EPSILON else None


def guarded_ceil(value: float) -> int:
    snapped = _snap(value)
    return snapped if snapped is not None else math.ceil(value)


def guarded_floor(value: float) -> int:
    snapped = _snap(value)
    return snapped if snapped is not None else math.floor(value)


def log_length(n: int, q: int) -> float:
    """log_q n + log_q log_q n"""
    if n < 2:
        raise InvalidFamilyParams(f"parameter formulas need n >= 2, got n={n}")
    log_n = math.log(n) / math.log(q)
    return log_n + math.log(log_n) / math.log(q)


def _vt(order: int, modulus: int, transform: Transform = Transform.IDENTITY, group: str = "") -> Congruence:
    return Congruence(transform, Functional.VT, order, modulus, group)


def _bounded_congruences(q: int, d: int, P: int, transform: Transform, group: str = "") -> List[Congruence]:
    p = prime_at_least(max(P, q))
    congruences = [_vt(0, (d - 1) * (q - 1) + 1, transform, group)]
    congruences += [_vt(i, p, transform, group) for i in range(1, d - 1)]
    return congruences


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidFamilyParams(message)


def _stride_P(n: int, q: int, stride: int, P: Optional[int]) -> int:
    if P is None:
        P = stride * max(1, guarded_ceil(log_length(n, q))) + 1
    _require((P - 1) % stride == 0, f"P={P} must satisfy {stride} | (P-1)")
    _require(P >= stride + 1, f"P={P} leaves an empty run cap (P-1)/{stride}")
    return P


def _aux1(n: int, q: int, P: int) -> List[Congruence]:
    return _bounded_congruences(q, 5, P, Transform.INDICATOR, group="aux1")


def _aux2(n: int, q: int, P: int) -> List[Congruence]:
    return [
        _vt(0, 2 * q - 1, group="aux2"),
        _vt(2, prime_above(4 * n), group="aux2"),
        _vt(0, (q - 1) * (P - 1) // 3 + 1, Transform.ODD, group="aux2"),
    ]


def derive_params(
    family,
    n: int,
    q: int,
    ell: int = 2,
    *,
    P: Optional[int] = None,
    T: Optional[int] = None,
    d: Optional[int] = None,
    moduli: Optional[Sequence[int]] = None,
) -> CodeFamilySpec:
    """
    Effective parameters of a family at (n, q, ell), residues unset

    P, T, d and the moduli list may be overridden; overrides are validated
    against the family's divisibility requirements.
    """
    family = family if isinstance(family, Family) else Family.parse(family)
    _require(isinstance(n, int) and n >= 1, f"length n={n!r} must be >= 1")
    _require(isinstance(q, int) and q >= 2, f"alphabet q={q!r} must be >= 2")
    if family is Family.C33:
        _require(ell >= 3, f"c33 is defined for ell >= 3 only, got ell={ell}")
    elif family in _TWO_READ:
        _require(ell == 2, f"{family.value} is a 2-read construction, got ell={ell}")
    else:
        _require(ell >= 2, f"read length ell={ell} must be >= 2")
    if family in (Family.BOUNDED_BIN, Family.C24_BIN):
        _require(q == 2, f"{family.value} is binary only, got q={q}")
    if P is not None:
        _require(P >= 1, f"P={P} must be >= 1")

    run_cap: Optional[int] = None
    congruences: List[Congruence]

    if family is Family.C33:
        half = log_length(n, q) / 2
        if T is None:
            T = max(1, guarded_ceil(half - 1))
        _require(T >= 1, f"goodness threshold T={T} must be >= 1")
        if P is None:
            P = max(max(1, guarded_ceil(half)), T + 1)
        _require(P > T, f"P={P} must exceed T={T} so the inversion congruence separates swap counts")
        congruences = [Congruence(Transform.IDENTITY, Functional.INV, 0, P)]

    elif family is Family.CP:
        if P is None:
            P = 2 * (guarded_floor(log_length(n, q)) // 2 + 1)
            P = max(2, P)
        _require(P % 2 == 0, f"cp needs an even P, got P={P}")
        run_cap = P
        congruences = [_vt(0, q), Congruence(Transform.IDENTITY, Functional.INV, 0, 1 + P // 2)]

    elif family is Family.CDEL:
        if P is None:
            length = log_length(n, q)
            P = max(1, guarded_floor(length))
            h = max(1, guarded_ceil(length / 2))
        else:
            h = (P + 1) // 2
        run_cap = P
        p = prime_above(h)
        _require(
            p > q - 1,
            f"cdel at n={n}, q={q}: prime {p} above ceil(P/2)={h} does not exceed q-1, "
            f"so swap differences (b-a)*k can vanish mod {p}",
        )
        congruences = [_vt(0, min(p, (q - 1) * h + 1), Transform.ODD)]

    elif family is Family.BOUNDED:
        d = 3 if d is None else d
        _require(d >= 2, f"bounded codes need d >= 2, got d={d}")
        P = n if P is None else P
        congruences = _bounded_congruences(q, d, P, Transform.IDENTITY)

    elif family is Family.BOUNDED_BIN:
        _require(d is None or d == 3, f"bounded_bin has fixed distance d=3, got d={d}")
        d = 3
        P = n if P is None else P
        congruences = [_vt(0, 3), _vt(1, P)]

    elif family is Family.C24:
        P = _stride_P(n, q, 2, P)
        d, run_cap = 4, (P - 1) // 2
        congruences = _bounded_congruences(q, 4, P, Transform.INDICATOR)

    elif family is Family.C24_BIN:
        P = _stride_P(n, q, 2, P)
        d, run_cap = 3, (P - 1) // 2
        congruences = [_vt(0, 3, Transform.INDICATOR), _vt(1, P, Transform.INDICATOR)]

    else:
        P = _stride_P(n, q, 3, P)
        run_cap = (P - 1) // 3
        if family is Family.AUX1:
            d, congruences = 5, _aux1(n, q, P)
        elif family is Family.AUX2:
            congruences = _aux2(n, q, P)
        else:
            d, congruences = 5, _aux1(n, q, P) + _aux2(n, q, P)

    if moduli is not None:
        moduli = [int(m) for m in moduli]
        _require(
            len(moduli) == len(congruences),
            f"{family.value} has {len(congruences)} congruence(s), got {len(moduli)} moduli",
        )
        _require(all(m >= 1 for m in moduli), f"moduli {moduli} must all be >= 1")
        congruences = [replace(c, modulus=m) for c, m in zip(congruences, moduli)]

    spec = CodeFamilySpec(
        family=family, n=n, q=q, ell=ell, P=P, run_cap=run_cap,
        congruences=tuple(congruences), T=T if family is Family.C33 else None, d=d,
    )
    logger.debug(f"Derived {family.value} parameters: {spec.to_dict()}")
    return spec
