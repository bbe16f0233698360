"""
Positive Roots

Enumerates the positive roots of a simply-laced Dynkin diagram as the
vectors of Tits-form value 1 reachable from the simple roots by adding
simple roots one at a time.
"""

import logging
from collections import deque
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .diagrams import DynkinType

logger = logging.getLogger(__name__)

MAX_COORDINATE = 6


def tits_matrix(t: DynkinType) -> np.ndarray:
    """Symmetric Cartan matrix 2I - A; the Tits form is ``xᵀCx / 2``."""
    cartan = 2 * np.eye(t.rank, dtype=np.int64)
    for i, j in t.edges():
        cartan[i, j] = cartan[j, i] = -1
    return cartan


@lru_cache(maxsize=32)
def positive_roots(t: DynkinType) -> Tuple[Tuple[int, ...], ...]:
    """Φ⁺ sorted by height, then lexicographically.

    Example:
        >>> len(positive_roots(DynkinType("D", 4)))
        12
    """
    cartan = tits_matrix(t)
    simple = [tuple(int(k == i) for k in range(t.rank)) for i in range(t.rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        root = queue.popleft()
        for i in range(t.rank):
            candidate = list(root)
            candidate[i] += 1
            if candidate[i] > MAX_COORDINATE:
                continue
            vec = np.array(candidate, dtype=np.int64)
            key = tuple(candidate)
            if key not in seen and int(vec @ cartan @ vec) == 2:
                seen.add(key)
                queue.append(key)
    roots = sorted(seen, key=lambda r: (sum(r), r))
    logger.debug(f"{t}: {len(roots)} positive roots")
    return tuple(roots)


def root_count(t: DynkinType) -> int:
    return len(positive_roots(t))


def highest_root(t: DynkinType) -> Tuple[int, ...]:
    return positive_roots(t)[-1]


def expected_root_count(t: DynkinType) -> int:
    """Closed forms k(k+1)/2, k(k-1), 36, 63, 120."""
    k = t.rank
    if t.family == "A":
        return k * (k + 1) // 2
    if t.family == "D":
        return k * (k - 1)
    return {6: 36, 7: 63, 8: 120}[k]


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)

    print("\n=== Positive Root Test ===\n")
    types: List[DynkinType] = [DynkinType("A", 3), DynkinType("D", 4)]
    types += [DynkinType("E", k) for k in (6, 7, 8)]
    for t in types:
        print(f"{t}: {root_count(t)} roots (expected {expected_root_count(t)}), highest {highest_root(t)}")
    print("\n✓ Root test complete")
