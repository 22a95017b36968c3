# Copyright 2021 - 2024 Universität Tübingen, DKFZ, EMBL, and Universität zu Köln
# for the German Human Genome-Phenome Archive (GHGA)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""General testing utilities and brute-force oracles sharing no code with the
package.
"""

from collections.abc import Callable, Iterable
from itertools import combinations
from pathlib import Path

BASE_DIR = Path(__file__).parent.resolve()
MATRIX_DIR = BASE_DIR / "matrices"


def rank_of(rows: Iterable[int]) -> int:
    """Rank of integer-encoded rows by elimination on the highest bit."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def span_of(rows: Iterable[int]) -> set[int]:
    """All sums of the given rows."""
    span = {0}
    for row in rows:
        span |= {value ^ row for value in span}
    return span


def met_evenly(rows: Iterable[int], value: int) -> bool:
    """Whether ``value`` has even overlap with every row."""
    return all((row & value).bit_count() % 2 == 0 for row in rows)


def min_weight(length: int, qualifies: Callable[[int], bool]) -> int | None:
    """Least weight of a nonzero vector that qualifies, by increasing weight."""
    for weight in range(1, length + 1):
        for support in combinations(range(length), weight):
            if qualifies(sum(1 << i for i in support)):
                return weight
    return None


def neighborhood_rows(columns: Iterable[int], r: int) -> list[int]:
    """Rows of the adjacency matrix of the Cayley graph with the given columns."""
    columns = list(columns)
    return [sum(1 << (v ^ c) for c in columns) for v in range(1 << r)]


def is_t_pseudo_border_oracle(n: int, t: int, family: set[frozenset[int]]) -> bool:
    """Direct check of the t-pseudo-border conditions on element sets."""
    if frozenset() not in family or any(len(member) > t for member in family):
        return False
    universe = range(1, n + 1)
    for size in range(t):
        for center in combinations(universe, size):
            center_set = frozenset(center)
            touching = sum(
                1 for member in family if len(member ^ center_set) == 1
            )
            if touching % 2:
                return False
    return True


def brute_force_min_t_pseudo_border(n: int, t: int) -> int | None:
    """Least size of a t-pseudo-border, trying families by increasing size."""
    ball = [
        frozenset(subset)
        for size in range(1, t + 1)
        for subset in combinations(range(1, n + 1), size)
    ]
    for extra in range(len(ball) + 1):
        for chosen in combinations(ball, extra):
            if is_t_pseudo_border_oracle(n, t, {frozenset(), *chosen}):
                return extra + 1
    return None
