"""
Deterministic sharding of index ranges across worker threads
"""
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

from .logger import get_logger

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def shard_ranges(total: int, chunk_size: int) -> List[Tuple[int, int]]:
    """Split [0, total) into consecutive half-open ranges of at most chunk_size"""
    chunk_size = max(1, int(chunk_size))
    return [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]


def map_ordered(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Apply fn to every item and return results in item order

    The result is identical for every worker count; only wall time changes.
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug(f"Dispatching {len(items)} shard(s) to {workers} worker(s)")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def first_candidate(candidates: Iterable[Optional[T]]) -> Optional[T]:
    """Smallest non-None candidate; shards report their own first hit and this picks the global one"""
    present = [c for c in candidates if c is not None]
    return min(present) if present else None


# Rows of one pair-scan shard; fixed so results match for every worker count
PAIR_ROWS = 256


def scan_pairs(
    size: int,
    visit: Callable[[int, int], Optional[R]],
    workers: int = 1,
) -> Tuple[int, Optional[R]]:
    """
    Visit pairs i < j of range(size) in lexicographic order, stopping each shard at its first hit

    Returns the number of pairs visited and the smallest hit. Hits must order
    like their (i, j) pairs; shards are blocks of consecutive i, so the
    smallest shard-first hit is the first hit overall.
    """
    def run(bounds: Tuple[int, int]) -> Tuple[int, Optional[R]]:
        visited = 0
        for i in range(*bounds):
            for j in range(i + 1, size):
                visited += 1
                hit = visit(i, j)
                if hit is not None:
                    return visited, hit
        return visited, None

    results = map_ordered(run, shard_ranges(size, PAIR_ROWS), workers)
    return sum(visited for visited, _ in results), first_candidate(hit for _, hit in results)
