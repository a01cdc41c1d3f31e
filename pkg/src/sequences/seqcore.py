"""
Sequences, read vectors and per-word functionals

Positions are 1-based in every docstring and error message: x[1] is the first
symbol and x[i] = 0 whenever i lies outside [1, n]. Python tuples hold the
symbols internally; use Word.at() for padded 1-based access.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

from ..core.exceptions import (
    EmptyWord,
    InvalidReadLength,
    InvalidSymbol,
    NotARealization,
    NotDistinct,
    ParseError,
    PreconditionViolated,
    RankOutOfRange,
    ShapeMismatch,
)
from ..core.logger import get_logger

logger = get_logger(__name__)

# Batch kernels store symbols as int64; 2**16 keeps every rank table small
MAX_ALPHABET = 2 ** 16


def _check_alphabet(q: int) -> None:
    if not isinstance(q, int) or isinstance(q, bool) or q < 2 or q > MAX_ALPHABET:
        raise InvalidSymbol(f"alphabet size q={q!r} must be an integer in [2, {MAX_ALPHABET}]")


def _check_read_length(ell: int, minimum: int = 2) -> None:
    if not isinstance(ell, int) or ell < minimum:
        raise InvalidReadLength(f"read length ell={ell!r} must be an integer >= {minimum}")


@dataclass(frozen=True, order=True)
class Word:
    """A q-ary sequence of length n with symbols in [0, q-1]"""
    q: int
    symbols: Tuple[int, ...] = ()

    def __post_init__(self):
        _check_alphabet(self.q)
        symbols = tuple(int(s) for s in self.symbols)
        for position, s in enumerate(symbols, start=1):
            if s < 0 or s >= self.q:
                raise InvalidSymbol(f"symbol {s} at position {position} is outside [0, {self.q - 1}]")
        object.__setattr__(self, "symbols", symbols)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def at(self, i: int) -> int:
        """x[i] with 1-based i; 0 outside [1, n]"""
        if 1 <= i <= len(self.symbols):
            return self.symbols[i - 1]
        return 0

    def to_text(self) -> str:
        if self.q <= 10:
            return "".join(str(s) for s in self.symbols)
        return ",".join(str(s) for s in self.symbols)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str, q: int) -> "Word":
        """Digit string for q <= 10 ("0101"), comma-separated integers otherwise ("10,0,3")"""
        _check_alphabet(q)
        text = (text or "").strip()
        if text == "":
            return cls(q, ())
        if "," in text:
            tokens = [token.strip() for token in text.split(",")]
        elif q <= 10:
            tokens = list(text)
        else:
            tokens = [text]
        try:
            symbols = [int(token) for token in tokens]
        except ValueError:
            raise ParseError(f"cannot parse {text!r} as a word over q={q}")
        if any(token.startswith(("+", "-")) for token in tokens):
            raise ParseError(f"signed symbols are not allowed in {text!r}")
        return cls(q, tuple(symbols))


@dataclass(frozen=True, order=True)
class Multiset:
    """An ell-element multiset over [0, q-1], stored sorted"""
    q: int
    elems: Tuple[int, ...]

    def __post_init__(self):
        _check_alphabet(self.q)
        elems = tuple(sorted(int(e) for e in self.elems))
        for e in elems:
            if e < 0 or e >= self.q:
                raise InvalidSymbol(f"multiset element {e} is outside [0, {self.q - 1}]")
        object.__setattr__(self, "elems", elems)

    @property
    def ell(self) -> int:
        return len(self.elems)

    def to_text(self) -> str:
        return "{" + ",".join(str(e) for e in self.elems) + "}"

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str, q: int) -> "Multiset":
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ParseError(f"multiset {text!r} must be written in braces, e.g. {{0,1}}")
        body = text[1:-1].strip()
        try:
            elems = [int(token) for token in body.split(",")] if body else []
        except ValueError:
            raise ParseError(f"cannot parse multiset {text!r}")
        return cls(q, tuple(elems))


@dataclass(frozen=True)
class ReadVector:
    """The ell-read vector of a length-n word: n + ell - 1 multisets of ell symbols"""
    q: int
    ell: int
    entries: Tuple[Multiset, ...]

    def __post_init__(self):
        _check_alphabet(self.q)
        _check_read_length(self.ell)
        entries = tuple(self.entries)
        if len(entries) < self.ell - 1:
            raise ShapeMismatch(
                f"a {self.ell}-read vector has at least {self.ell - 1} entries, got {len(entries)}"
            )
        for index, entry in enumerate(entries, start=1):
            if entry.q != self.q or entry.ell != self.ell:
                raise ShapeMismatch(
                    f"entry {index} {entry.to_text()} is not an {self.ell}-multiset over q={self.q}"
                )
        object.__setattr__(self, "entries", entries)

    @property
    def source_length(self) -> int:
        return len(self.entries) - self.ell + 1

    def __len__(self) -> int:
        return len(self.entries)

    def to_text(self) -> str:
        return "[" + ",".join(entry.to_text() for entry in self.entries) + "]"

    def to_json(self) -> List[List[int]]:
        return [list(entry.elems) for entry in self.entries]

    @classmethod
    def parse(cls, text: str, q: int, ell: int) -> "ReadVector":
        """Accepts "[{0,0},{0,1}]", "[[0,0],[0,1]]" or a JSON array of brace strings"""
        raw = text.strip().replace("{", "[").replace("}", "]")
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as e:
            raise ParseError(f"cannot parse read vector {text!r}: {e}")
        if not isinstance(data, list):
            raise ParseError(f"read vector {text!r} must be an array")
        entries = []
        for item in data:
            if isinstance(item, str):
                entries.append(Multiset.parse(item, q))
            elif isinstance(item, list) and all(isinstance(e, int) for e in item):
                entries.append(Multiset(q, tuple(item)))
            else:
                raise ParseError(f"read vector entry {item!r} is not a multiset")
        return cls(q, ell, tuple(entries))


@dataclass(frozen=True)
class SyndromeVector:
    """Triples (k, m, r) stating VT^(k)(x) = r (mod m)"""
    values: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        values = tuple((int(k), int(m), int(r)) for k, m, r in self.values)
        for k, m, r in values:
            if k < 0:
                raise PreconditionViolated(f"syndrome order {k} must be >= 0")
            if m < 1:
                raise PreconditionViolated(f"modulus {m} must be >= 1")
            if not 0 <= r < m:
                raise PreconditionViolated(f"residue {r} must lie in [0, {m - 1}]")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, x: Word, orders: Sequence[int], moduli: Sequence[int]) -> "SyndromeVector":
        if len(orders) != len(moduli):
            raise ShapeMismatch(f"{len(orders)} orders but {len(moduli)} moduli")
        return cls(tuple((k, m, vt_syndrome(x, k) % m) for k, m in zip(orders, moduli)))

    @property
    def residues(self) -> Tuple[int, ...]:
        return tuple(r for _, _, r in self.values)

    def holds(self, x: Word) -> bool:
        return all(vt_syndrome(x, k) % m == r for k, m, r in self.values)


def check_same_shape(x: Word, y: Word) -> None:
    """Raise ShapeMismatch unless x and y share length and alphabet"""
    if x.q != y.q:
        raise ShapeMismatch(f"alphabets differ: q={x.q} vs q={y.q}")
    if len(x) != len(y):
        raise ShapeMismatch(f"lengths differ: {len(x)} vs {len(y)}")


def read_windows(symbols: Sequence[int], ell: int) -> List[Tuple[int, ...]]:
    """Sorted windows x[i-ell+1..i] for i = 1..n+ell-1 with zero padding"""
    pad = (0,) * (ell - 1)
    padded = pad + tuple(symbols) + pad
    return [tuple(sorted(padded[i:i + ell])) for i in range(len(symbols) + ell - 1)]


def read_vector(x: Word, ell: int) -> ReadVector:
    """The ell-read vector of x"""
    _check_read_length(ell)
    return ReadVector(x.q, ell, tuple(Multiset(x.q, w) for w in read_windows(x.symbols, ell)))


def read_to_word(R: ReadVector) -> Word:
    """Invert read_vector, recovering x[1], x[2], ... left to right"""
    ell = R.ell
    recovered: List[int] = []
    for i in range(R.source_length):
        remaining = list(R.entries[i].elems)
        for j in range(i - ell + 1, i):
            s = recovered[j] if j >= 0 else 0
            try:
                remaining.remove(s)
            except ValueError:
                raise NotARealization(
                    f"entry {i + 1} {R.entries[i].to_text()} lacks symbol {s} "
                    f"forced by position {j + 1}"
                )
        recovered.append(remaining[0])

    word = Word(R.q, tuple(recovered))
    windows = read_windows(word.symbols, ell)
    for index, (entry, window) in enumerate(zip(R.entries, windows), start=1):
        if entry.elems != window:
            raise NotARealization(
                f"entry {index} {entry.to_text()} is inconsistent with the recovered word {word.to_text()}"
            )
    return word


def read_distance(x: Word, y: Word, ell: int) -> int:
    """Hamming distance between the ell-read vectors of x and y"""
    _check_read_length(ell)
    check_same_shape(x, y)
    return sum(a != b for a, b in zip(read_windows(x.symbols, ell), read_windows(y.symbols, ell)))


def hamming_distance(x: Word, y: Word) -> int:
    check_same_shape(x, y)
    return sum(a != b for a, b in zip(x.symbols, y.symbols))


def vt_syndrome(x: Word, k: int) -> int:
    """Exact VT^(k)(x) = sum of i^k * x[i] over i = 1..n"""
    if k < 0:
        raise PreconditionViolated(f"syndrome order {k} must be >= 0")
    return sum(i ** k * s for i, s in enumerate(x.symbols, start=1))


def inversion_number(x: Word) -> int:
    """Number of pairs i < j with x[i] > x[j]"""
    seen = [0] * x.q
    inversions = 0
    for s in x.symbols:
        inversions += sum(seen[s + 1:])
        seen[s] += 1
    return inversions


def indicator(x: Word) -> Word:
    """1(x)[i] = x[i] + x[i-1] (mod q) with x[0] = 0"""
    previous = (0,) + x.symbols[:-1]
    return Word(x.q, tuple((a + b) % x.q for a, b in zip(x.symbols, previous)))


def indicator_inverse(z: Word) -> Word:
    """The unique x with indicator(x) = z"""
    symbols: List[int] = []
    previous = 0
    for s in z.symbols:
        previous = (s - previous) % z.q
        symbols.append(previous)
    return Word(z.q, tuple(symbols))


def odd_subword(x: Word) -> Word:
    """x[1], x[3], ...; length ceil(n/2)"""
    return Word(x.q, x.symbols[0::2])


def even_subword(x: Word) -> Word:
    """x[2], x[4], ...; length floor(n/2)"""
    return Word(x.q, x.symbols[1::2])


def alternating(n: int, a: int, b: int, q: int = 2) -> Word:
    """alpha_n(ab) = abab... of length n"""
    if n < 0:
        raise PreconditionViolated(f"length {n} must be >= 0")
    if a == b:
        raise NotDistinct(f"alternating sequences need distinct symbols, got a = b = {a}")
    return Word(q, tuple(a if i % 2 == 0 else b for i in range(n)))


def max_alternating_run(x: Word) -> int:
    """Length of the longest alternating substring; single symbols count as 1"""
    s = x.symbols
    if not s:
        raise EmptyWord("max_alternating_run needs a non-empty word")
    best = current = 1
    for i in range(1, len(s)):
        if s[i] == s[i - 1]:
            current = 1
        elif i >= 2 and s[i] == s[i - 2]:
            current += 1
        else:
            current = 2
        best = max(best, current)
    return best


def in_all(x: Word, P: int) -> bool:
    """Membership in ALL(n, P)"""
    if not x.symbols:
        return True
    return max_alternating_run(x) <= P


def is_good(x: Word, ell: int, T: int) -> bool:
    """
    True iff no stride-ell run of T+1 or more identical pairs (a, b) with a != b

    Pair j is (x[j], x[j+1]); a run is pairs j, j+ell, ..., j+t*ell that are all equal.
    """
    _check_read_length(ell, minimum=3)
    if T < 1:
        raise PreconditionViolated(f"goodness threshold T={T} must be >= 1")
    s = x.symbols
    runs: List[int] = []
    for j in range(len(s) - 1):
        a, b = s[j], s[j + 1]
        if a == b:
            runs.append(0)
            continue
        if j >= ell and s[j - ell] == a and s[j - ell + 1] == b:
            runs.append(runs[j - ell] + 1)
        else:
            runs.append(1)
        if runs[j] >= T + 1:
            return False
    return True


def q_ell(q: int, ell: int) -> int:
    """Number of ell-multisets over [0, q-1]"""
    return comb(q + ell - 1, ell)


def multiset_rank(m: Multiset) -> int:
    """Lexicographic position of m among all non-decreasing ell-tuples over [0, q-1]"""
    q, ell = m.q, m.ell
    rank = 0
    low = 0
    for j, e in enumerate(m.elems):
        rest = ell - j - 1
        for v in range(low, e):
            rank += comb(q - v + rest - 1, rest)
        low = e
    return rank


def multiset_unrank(r: int, q: int, ell: int) -> Multiset:
    """Inverse of multiset_rank"""
    _check_alphabet(q)
    total = q_ell(q, ell)
    if not 0 <= r < total:
        raise RankOutOfRange(f"rank {r} is outside [0, {total - 1}] for q={q}, ell={ell}")
    elems: List[int] = []
    low = 0
    for j in range(ell):
        rest = ell - j - 1
        v = low
        while True:
            block = comb(q - v + rest - 1, rest)
            if r < block:
                break
            r -= block
            v += 1
        elems.append(v)
        low = v
    return Multiset(q, tuple(elems))


@lru_cache(maxsize=64)
def rank_table(q: int, ell: int) -> Dict[Tuple[int, ...], int]:
    """Sorted tuple -> rank; combinations_with_replacement yields exactly the lexicographic order"""
    return {combo: index for index, combo in
            enumerate(itertools.combinations_with_replacement(range(q), ell))}


def phi_map(R: ReadVector) -> Word:
    """Rank every entry of R, giving a word over q_ell symbols of length n + ell - 1"""
    return Word(q_ell(R.q, R.ell), tuple(multiset_rank(entry) for entry in R.entries))


def phi_inverse(z: Word, q: int, ell: int) -> ReadVector:
    """Unrank every symbol of a q_ell-ary word back into a read vector"""
    if z.q != q_ell(q, ell):
        raise ShapeMismatch(f"word alphabet {z.q} is not q_ell={q_ell(q, ell)} for q={q}, ell={ell}")
    return ReadVector(q, ell, tuple(multiset_unrank(r, q, ell) for r in z.symbols))


def all_words(n: int, q: int) -> Iterator[Word]:
    """Every word of length n over [0, q-1] in lexicographic order"""
    _check_alphabet(q)
    for symbols in itertools.product(range(q), repeat=n):
        yield Word(q, symbols)
