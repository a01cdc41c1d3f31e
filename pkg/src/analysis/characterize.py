"""
Structural decomposition of word pairs by their read distance

Two distinct words of equal length always split as

    x = (u, alpha_t1(a1 b1), v1, ..., alpha_t(s+1)(a(s+1) b(s+1)), w)
    y = (u, alpha_t1(b1 a1), v1, ..., alpha_t(s+1)(b(s+1) a(s+1)), w)

and their 2-read distance is 2(s+1) minus the number of empty v_i, i in [1, s].
decompose_pair produces the greedy canonical split: each block is the longest
alternating swap starting at the first remaining difference.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from ..core.exceptions import (
    CharacterizationError,
    IdenticalWords,
    InvalidReadLength,
    NotDistanceFour,
)
from ..core.logger import get_logger
from ..sequences.seqcore import (
    Word,
    check_same_shape,
    indicator,
    inversion_number,
    read_distance,
)

logger = get_logger(__name__)


def _alternating(t: int, a: int, b: int) -> Tuple[int, ...]:
    return tuple(a if i % 2 == 0 else b for i in range(t))


@dataclass(frozen=True)
class SwapBlock:
    """alpha_t(ab) in x facing alpha_t(ba) in y, followed by the common stretch v"""
    a: int
    b: int
    t: int
    v: Word

    def to_dict(self) -> Dict[str, Any]:
        return {"a": self.a, "b": self.b, "t": self.t, "v": self.v.to_text()}


@dataclass(frozen=True)
class PairStructure:
    """Canonical alternating-block decomposition of a distinct pair"""
    q: int
    u: Word
    blocks: Tuple[SwapBlock, ...]
    w: Word

    @property
    def s(self) -> int:
        return len(self.blocks) - 1

    @property
    def predicted_d(self) -> int:
        return predicted_distance(self)

    def reassemble(self) -> Tuple[Word, Word]:
        x: List[int] = list(self.u.symbols)
        y: List[int] = list(self.u.symbols)
        for block in self.blocks:
            x.extend(_alternating(block.t, block.a, block.b))
            y.extend(_alternating(block.t, block.b, block.a))
            x.extend(block.v.symbols)
            y.extend(block.v.symbols)
        x.extend(self.w.symbols)
        y.extend(self.w.symbols)
        return Word(self.q, tuple(x)), Word(self.q, tuple(y))

    def boundary_holds(self) -> bool:
        """For every i in [1, s] with v_i empty, the junction multisets of x and y differ"""
        for current, following in zip(self.blocks, self.blocks[1:]):
            if current.v.symbols:
                continue
            last_x = _alternating(current.t, current.a, current.b)[-1]
            last_y = _alternating(current.t, current.b, current.a)[-1]
            if sorted((last_x, following.a)) == sorted((last_y, following.b)):
                return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return {
            "u": self.u.to_text(),
            "blocks": [block.to_dict() for block in self.blocks],
            "w": self.w.to_text(),
            "s": self.s,
            "predicted_d": self.predicted_d,
        }


class D4Case(str, Enum):
    CASE_A = "CaseA"
    CASE_B = "CaseB"


@dataclass(frozen=True)
class D4Shape:
    """
    One of the two shapes of a pair at 2-read distance 4

    CASE_A: two blocks separated by a non-empty middle v.
    CASE_B: three blocks with nothing between them.
    """
    tag: D4Case
    blocks: Tuple[SwapBlock, ...]
    middle: Optional[Word] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "tag": self.tag.value,
            "blocks": [block.to_dict() for block in self.blocks],
            "middle": self.middle.to_text() if self.middle is not None else None,
        }


@dataclass(frozen=True)
class L3Structure:
    """
    Pair at ell-read distance <= 2 for ell >= 3

    x = (u, a, b, v1, a, b, v2, ..., vt, a, b, w) and y swaps every (a, b) to (b, a);
    every middle has length ell - 2.
    """
    q: int
    u: Word
    a: int
    b: int
    middles: Tuple[Word, ...]
    w: Word

    @property
    def t(self) -> int:
        return len(self.middles)

    @property
    def swap_count(self) -> int:
        return self.t + 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "u": self.u.to_text(),
            "a": self.a,
            "b": self.b,
            "middles": [v.to_text() for v in self.middles],
            "w": self.w.to_text(),
            "t": self.t,
            "swap_count": self.swap_count,
        }


class Transform(str, Enum):
    IDENTITY = "identity"
    INDICATOR = "indicator"


def decompose_pair(x: Word, y: Word) -> PairStructure:
    """Greedy canonical decomposition of a distinct equal-length pair"""
    check_same_shape(x, y)
    if x == y:
        raise IdenticalWords(f"decompose_pair needs distinct words, got {x.to_text()} twice")

    xs, ys, q = x.symbols, y.symbols, x.q
    n = len(xs)
    pos = 0
    while xs[pos] == ys[pos]:
        pos += 1
    u = Word(q, xs[:pos])

    blocks: List[SwapBlock] = []
    while True:
        a, b = xs[pos], ys[pos]
        t = 1
        while pos + t < n:
            expect_x, expect_y = (a, b) if t % 2 == 0 else (b, a)
            if xs[pos + t] != expect_x or ys[pos + t] != expect_y:
                break
            t += 1
        pos += t

        if xs[pos:] == ys[pos:]:
            blocks.append(SwapBlock(a, b, t, Word(q, ())))
            return PairStructure(q, u, tuple(blocks), Word(q, xs[pos:]))

        start = pos
        while xs[pos] == ys[pos]:
            pos += 1
        blocks.append(SwapBlock(a, b, t, Word(q, xs[start:pos])))


def predicted_distance(ps: PairStructure) -> int:
    """2(s+1) - #{i in [1, s] : v_i empty}"""
    empty_middles = sum(1 for block in ps.blocks[:-1] if not block.v.symbols)
    return 2 * (ps.s + 1) - empty_middles


def classify_d4(x: Word, y: Word) -> D4Shape:
    """Case A or Case B for a pair at 2-read distance 4"""
    check_same_shape(x, y)
    if x == y:
        raise NotDistanceFour(f"{x.to_text()} and {y.to_text()} are identical (distance 0)")
    ps = decompose_pair(x, y)
    d = predicted_distance(ps)
    if d != 4:
        raise NotDistanceFour(f"{x.to_text()} and {y.to_text()} are at 2-read distance {d}, not 4")

    if ps.s == 1:
        return D4Shape(D4Case.CASE_A, ps.blocks, middle=ps.blocks[0].v)
    # d = 4 with s = 2 forces v1 = v2 = empty
    return D4Shape(D4Case.CASE_B, ps.blocks)


def alternating_swap(x: Word, y: Word) -> Optional[int]:
    """t when x = (u, alpha_t(ab), v) and y = (u, alpha_t(ba), v); None otherwise"""
    check_same_shape(x, y)
    if x == y:
        return None
    ps = decompose_pair(x, y)
    return ps.blocks[0].t if ps.s == 0 else None


def l3_confusable(x: Word, y: Word, ell: int) -> Optional[L3Structure]:
    """Alternating-swap structure of a pair at ell-read distance <= 2, or None"""
    if not isinstance(ell, int) or ell < 3:
        raise InvalidReadLength(f"l3_confusable needs ell >= 3, got {ell!r}")
    check_same_shape(x, y)
    if x == y:
        raise IdenticalWords(f"l3_confusable needs distinct words, got {x.to_text()} twice")
    if read_distance(x, y, ell) > 2:
        return None

    xs, ys, q = x.symbols, y.symbols, x.q
    differing = [i for i in range(len(xs)) if xs[i] != ys[i]]
    i = differing[0]
    a, b = xs[i], ys[i]
    pairs = len(differing) // 2
    expected = [i + j * ell + k for j in range(pairs) for k in (0, 1)]
    if len(differing) % 2 or differing != expected:
        raise CharacterizationError(
            f"{x.to_text()} / {y.to_text()} are at {ell}-read distance <= 2 "
            f"but differ at positions {[p + 1 for p in differing]}"
        )
    for p in expected[0::2]:
        if (xs[p], xs[p + 1], ys[p], ys[p + 1]) != (a, b, b, a):
            raise CharacterizationError(
                f"{x.to_text()} / {y.to_text()}: positions {p + 1},{p + 2} are not an ({a},{b}) swap"
            )

    t = pairs - 1
    middles = tuple(Word(q, xs[i + j * ell + 2:i + (j + 1) * ell]) for j in range(t))
    return L3Structure(q, Word(q, xs[:i]), a, b, middles, Word(q, xs[i + t * ell + 2:]))


def window_span(x: Word, y: Word, transform: Union[Transform, str] = Transform.IDENTITY) -> int:
    """largest - smallest + 1 over the positions where the (transformed) pair differs"""
    check_same_shape(x, y)
    if x == y:
        raise IdenticalWords(f"window_span needs distinct words, got {x.to_text()} twice")
    if Transform(transform) is Transform.INDICATOR:
        x, y = indicator(x), indicator(y)
    differing = [i for i, (a, b) in enumerate(zip(x.symbols, y.symbols)) if a != b]
    return differing[-1] - differing[0] + 1


def swap_inversion_gap(x: Word, y: Word) -> int:
    """|Inv(x) - Inv(y)|"""
    return abs(inversion_number(x) - inversion_number(y))
