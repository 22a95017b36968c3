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

"""Families of subsets of ``[n] = {1, ..., n}`` seen as vertex sets of the hypercube.

A subset is an ``n``-bit mask whose bit ``i`` stands for the element ``i + 1``.
Subsets are ordered by size first and colexicographically within a size, which
for masks of equal size is plain integer order.
"""

import logging
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Self

import numpy as np

from cqc.core.exceptions import (
    ParameterRangeError,
    PreconditionError,
    ResourceLimitError,
)
from cqc.core.gf2 import (
    BitMatrix,
    BitVector,
    CosetSearchResult,
    SearchStatus,
    fixed_weight_masks,
    kernel_basis,
    min_weight_in_coset,
)

log = logging.getLogger(__name__)

DEFAULT_COLUMN_LIMIT = 4096
DEFAULT_FLIP_BUDGET = 10_000


def order_key(mask: int) -> tuple[int, int]:
    """Sort key for the (size, colex) order."""
    return mask.bit_count(), mask


def _elements(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class SubsetMask:
    """A subset of ``[n]``."""

    n: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < 1 << self.n:
            raise ValueError(f"Mask {self.bits} is not a subset of [{self.n}].")

    @classmethod
    def from_elements(cls, n: int, elements: Iterable[int]) -> Self:
        """Subset from elements counted from 1."""
        bits = 0
        for element in elements:
            if not 1 <= element <= n:
                raise ValueError(f"Element {element} is not in [{n}].")
            bits |= 1 << (element - 1)
        return cls(n, bits)

    @property
    def size(self) -> int:
        """Number of elements."""
        return self.bits.bit_count()

    def elements(self) -> list[int]:
        """Sorted elements, counted from 1."""
        return _elements(self.bits)


@dataclass(frozen=True)
class SetFamily:
    """A family of distinct subsets of ``[n]``."""

    n: int
    masks: frozenset[int]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Self:
        """Family from integer masks; repeated masks are kept once."""
        unique = frozenset(masks)
        limit = 1 << n
        if any(not 0 <= mask < limit for mask in unique):
            raise ValueError(f"Every member must be a subset of [{n}].")
        return cls(n, unique)

    @classmethod
    def from_subsets(cls, n: int, subsets: Iterable[Iterable[int]]) -> Self:
        """Family from element lists such as ``[[], [1], [2, 3]]``."""
        return cls.from_masks(
            n, (SubsetMask.from_elements(n, subset).bits for subset in subsets)
        )

    @classmethod
    def empty(cls, n: int) -> Self:
        """The family without members."""
        return cls(n, frozenset())

    @cached_property
    def ordered_masks(self) -> tuple[int, ...]:
        """Members in (size, colex) order."""
        return tuple(sorted(self.masks, key=order_key))

    @property
    def members(self) -> tuple[SubsetMask, ...]:
        """Members in (size, colex) order."""
        return tuple(SubsetMask(self.n, mask) for mask in self.ordered_masks)

    def layer(self, k: int) -> frozenset[int]:
        """Members with exactly ``k`` elements."""
        return frozenset(mask for mask in self.masks if mask.bit_count() == k)

    def symmetric_difference(self, other: "SetFamily") -> "SetFamily":
        """Members of exactly one of the two families."""
        if other.n != self.n:
            raise ParameterRangeError(
                name="n", value=other.n, requirement=f"both families need n = {self.n}"
            )
        return SetFamily(self.n, self.masks ^ other.masks)

    def to_json(self) -> list[list[int]]:
        """Members as sorted element lists in (size, colex) order."""
        return [_elements(mask) for mask in self.ordered_masks]

    def __xor__(self, other: "SetFamily") -> "SetFamily":
        return self.symmetric_difference(other)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, subset: object) -> bool:
        if isinstance(subset, SubsetMask):
            return subset.n == self.n and subset.bits in self.masks
        return subset in self.masks

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)


def _check_t(n: int, t: int):
    if not 1 <= t < n:
        raise ParameterRangeError(name="t", value=t, requirement=f"1 <= t < n = {n}")


def _neighbor_masks(mask: int, n: int) -> Iterator[int]:
    return (mask ^ 1 << i for i in range(n))


def neighborhood(subset: SubsetMask) -> SetFamily:
    """The ``n`` subsets differing from ``subset`` in exactly one element."""
    return SetFamily(subset.n, frozenset(_neighbor_masks(subset.bits, subset.n)))


def neighborhood_overlap(n: int, first: int, second: int) -> int:
    """``|N(S) ∩ N(T)|`` for masks ``S`` and ``T``."""
    return len(set(_neighbor_masks(first, n)) & set(_neighbor_masks(second, n)))


def _center_parities(family: SetFamily, max_center_size: int) -> Counter[int]:
    """How often every center up to the given size sees a member, mod 2."""
    parity: Counter[int] = Counter()
    for mask in family.masks:
        for center in _neighbor_masks(mask, family.n):
            if center.bit_count() <= max_center_size:
                parity[center] ^= 1
    return parity


def is_t_pseudo_border(family: SetFamily, t: int) -> bool:
    """Whether ``family`` contains the empty set, lies in the ball of radius ``t`` and
    meets the neighborhood of every subset of size at most ``t - 1`` evenly.
    """
    _check_t(family.n, t)
    if 0 not in family.masks:
        return False
    if any(mask.bit_count() > t for mask in family.masks):
        return False
    return not any(_center_parities(family, t - 1).values())


def flip(family: SetFamily, center: SubsetMask) -> SetFamily:
    """Symmetric difference of ``family`` with the neighborhood of ``center``."""
    return family ^ neighborhood(center)


def flip_many(family: SetFamily, centers: Iterable[int]) -> SetFamily:
    """Flip along every given center mask, one after the other."""
    masks = set(family.masks)
    for center in centers:
        masks.symmetric_difference_update(_neighbor_masks(center, family.n))
    return SetFamily(family.n, frozenset(masks))


def ball_masks(n: int, radius: int) -> list[int]:
    """Subsets of size at most ``radius`` in (size, colex) order."""
    return [mask for k in range(radius + 1) for mask in fixed_weight_masks(n, k)]


@dataclass(frozen=True)
class PseudoBorderInstance:
    """Linear system of the parity conditions of t-pseudo-borders.

    One row per center of size at most ``t - 1``, one column per subset in
    ``ball_index``. Its kernel intersected with ``x_∅ = 1`` is the set of
    t-pseudo-borders among the families supported on ``ball_index``.
    """

    n: int
    t: int
    ball_index: tuple[int, ...]
    centers: tuple[int, ...]
    constraint_rows: BitMatrix

    @cached_property
    def positions(self) -> dict[int, int]:
        """Column of every subset of the ball."""
        return {mask: column for column, mask in enumerate(self.ball_index)}

    @property
    def column_count(self) -> int:
        """Number of subsets in the ball."""
        return len(self.ball_index)

    def vector_from_family(self, family: SetFamily) -> BitVector:
        """Indicator of ``family``, which must lie in the ball."""
        return BitVector.from_indices(
            self.column_count, (self.positions[mask] for mask in family.masks)
        )

    def family_from_vector(self, vector: BitVector) -> SetFamily:
        """Family with the given indicator."""
        members = frozenset(self.ball_index[i] for i in vector.support())
        return SetFamily(self.n, members)


def build_constraints(
    n: int,
    t: int,
    *,
    even_layers_only: bool = False,
    column_limit: int = DEFAULT_COLUMN_LIMIT,
) -> PseudoBorderInstance:
    """Parity conditions of t-pseudo-borders on the ball of radius ``t``.

    With ``even_layers_only`` the columns are the subsets of even size and the rows
    the centers of odd size. Centers of even size only see subsets of odd size and
    impose homogeneous conditions, so this subsystem carries every minimal family.
    """
    _check_t(n, t)
    columns = ball_masks(n, t)
    centers = ball_masks(n, t - 1)
    if even_layers_only:
        columns = [mask for mask in columns if mask.bit_count() % 2 == 0]
        centers = [mask for mask in centers if mask.bit_count() % 2]
    if len(columns) > column_limit:
        raise ResourceLimitError(
            what="Ball of the hypercube", size=len(columns), limit=column_limit
        )
    positions = {mask: column for column, mask in enumerate(columns)}
    dense = np.zeros((len(centers), len(columns)), dtype=np.uint8)
    for row, center in enumerate(centers):
        for neighbor in _neighbor_masks(center, n):
            dense[row, positions[neighbor]] = 1
    return PseudoBorderInstance(
        n=n,
        t=t,
        ball_index=tuple(columns),
        centers=tuple(centers),
        constraint_rows=BitMatrix.from_dense(dense, cols=len(columns)),
    )


def _anchored_kernel(instance: PseudoBorderInstance) -> tuple[int, list[int]] | None:
    """A kernel vector with ``x_∅ = 1`` and a basis of the kernel part with
    ``x_∅ = 0``; ``None`` if every kernel vector has ``x_∅ = 0``.
    """
    rows = kernel_basis(instance.constraint_rows).to_int_rows()
    anchor_index = next((i for i, row in enumerate(rows) if row & 1), None)
    if anchor_index is None:
        return None
    anchor = rows[anchor_index]
    rest = [
        row ^ anchor if row & 1 else row
        for i, row in enumerate(rows)
        if i != anchor_index
    ]
    return anchor, rest


@dataclass(frozen=True)
class PseudoBorderSearch:
    """Outcome of the exact search for a smallest t-pseudo-border."""

    n: int
    t: int
    search: CosetSearchResult | None
    witness: SetFamily | None

    @property
    def status(self) -> SearchStatus:
        """``none-exists`` also covers parameters without any t-pseudo-border."""
        return SearchStatus.NONE_EXISTS if self.search is None else self.search.status

    @property
    def size(self) -> int | None:
        """Size of the witness."""
        return None if self.witness is None else len(self.witness)

    @property
    def lower_bound(self) -> int | None:
        """Proven lower bound on the minimum size."""
        return None if self.search is None else self.search.lower_bound


def minimal_t_pseudo_border(
    n: int,
    t: int,
    cap: int | None = None,
    *,
    column_limit: int = DEFAULT_COLUMN_LIMIT,
    **search_options,
) -> PseudoBorderSearch:
    """Exact smallest t-pseudo-border of the hypercube on ``[n]``.

    Kernel vectors with ``x_∅ = 0`` are the excluded subspace of a coset search, so
    every qualifying vector has ``x_∅ = 1``. Only subsets of even size can belong to
    a minimal family, so the search runs on the even layers.
    """
    instance = build_constraints(
        n, t, even_layers_only=True, column_limit=column_limit
    )
    anchored = _anchored_kernel(instance)
    if anchored is None:
        log.info(f"No {t}-pseudo-border exists for n = {n}.")
        return PseudoBorderSearch(n=n, t=t, search=None, witness=None)

    _, rest = anchored
    excluded = BitMatrix.from_int_rows(rest, instance.column_count)
    search = min_weight_in_coset(
        instance.constraint_rows, excluded, cap, **search_options
    )
    if search.witness is None:
        log.warning(
            f"No {t}-pseudo-border for n = {n} within the cap: {search.status}."
        )
        return PseudoBorderSearch(n=n, t=t, search=search, witness=None)

    witness = instance.family_from_vector(search.witness)
    if not is_t_pseudo_border(witness, t):
        raise RuntimeError(f"Search returned an invalid family {witness.to_json()}.")
    log.info(f"Smallest {t}-pseudo-border for n = {n} has {len(witness)} members.")
    return PseudoBorderSearch(n=n, t=t, search=search, witness=witness)


def random_t_pseudo_border(
    n: int,
    t: int,
    rng: np.random.Generator,
    *,
    column_limit: int = DEFAULT_COLUMN_LIMIT,
) -> SetFamily | None:
    """Uniformly drawn t-pseudo-border, ``None`` if none exists."""
    instance = build_constraints(n, t, column_limit=column_limit)
    anchored = _anchored_kernel(instance)
    if anchored is None:
        return None
    vector, rest = anchored
    for row, coefficient in zip(rest, rng.integers(0, 2, size=len(rest)), strict=True):
        if coefficient:
            vector ^= row
    return instance.family_from_vector(
        BitVector.from_int(instance.column_count, vector)
    )


def count_k_sets(family: SetFamily, k: int) -> int:
    """Number of members with exactly ``k`` elements."""
    return sum(1 for mask in family.masks if mask.bit_count() == k)


def odd_sets(family: SetFamily, k: int) -> SetFamily:
    """The k-subsets of ``[n]`` containing an odd number of ``(k-1)``-members."""
    if k < 1:
        raise ParameterRangeError(name="k", value=k, requirement="k >= 1")
    parity: Counter[int] = Counter()
    full = (1 << family.n) - 1
    for mask in family.layer(k - 1):
        missing = full ^ mask
        while missing:
            low = missing & -missing
            parity[mask | low] ^= 1
            missing ^= low
    return SetFamily(family.n, frozenset(mask for mask, odd in parity.items() if odd))


def one_sets_all_odd(family: SetFamily) -> bool:
    """Whether every 1-set is odd, as in any minimal t-pseudo-border."""
    return len(odd_sets(family, 1)) == family.n


class OddToNext(NamedTuple):
    """Odd k-sets against (k+1)-members."""

    s_odd: int
    s_next: int
    holds: bool


class SetsToOdd(NamedTuple):
    """k-members against odd (k+1)-sets."""

    s_k: int
    odd_next: int
    holds: bool


def verify_odd_to_next(family: SetFamily, k: int) -> OddToNext:
    """Check that there are at least ``s_odd / (k + 1)`` members of size ``k + 1``."""
    s_odd = len(odd_sets(family, k))
    s_next = count_k_sets(family, k + 1)
    return OddToNext(s_odd=s_odd, s_next=s_next, holds=(k + 1) * s_next >= s_odd)


def verify_sets_to_odd(family: SetFamily, k: int) -> SetsToOdd:
    """Check that there are at least ``(n - (k - 1)k) / (k + 1) * s_k`` odd
    ``(k + 1)``-sets.
    """
    s_k = count_k_sets(family, k)
    odd_next = len(odd_sets(family, k + 1))
    holds = (k + 1) * odd_next >= (family.n - (k - 1) * k) * s_k
    return SetsToOdd(s_k=s_k, odd_next=odd_next, holds=holds)


@dataclass(frozen=True)
class LayerFlipCertificate:
    """Flip of a family along the k-members through one element, made (k-1)-sets.

    For the element ``v`` minimizing ``|F_v| + (k - 1)|E_v|`` (``E_v``: k-members
    containing ``v``, ``F_v``: odd (k+1)-sets containing ``v``, both with ``v``
    removed) flipping along ``E_v`` leaves exactly ``F_v`` as k-members.
    """

    k: int
    element: int
    score: int
    k_members: int
    odd_next: int
    layer_matches: bool
    averaging_holds: bool
    size_before: int
    size_after: int
    flipped: SetFamily


def layer_flip_certificate(family: SetFamily, k: int) -> LayerFlipCertificate:
    """Build the flip of the vertex-averaging argument for layer ``k``."""
    if k < 1:
        raise ParameterRangeError(name="k", value=k, requirement="k >= 1")
    k_members = family.layer(k)
    odd_next = odd_sets(family, k + 1).masks
    best: tuple[int, int, list[int], list[int]] | None = None
    for index in range(family.n):
        bit = 1 << index
        through_e = [mask ^ bit for mask in k_members if mask & bit]
        through_f = [mask ^ bit for mask in odd_next if mask & bit]
        score = len(through_f) + (k - 1) * len(through_e)
        if best is None or score < best[1]:
            best = (index, score, through_e, through_f)
    if best is None:
        raise ParameterRangeError(name="n", value=family.n, requirement="n >= 1")

    index, score, through_e, through_f = best
    flipped = flip_many(family, through_e)
    return LayerFlipCertificate(
        k=k,
        element=index + 1,
        score=score,
        k_members=len(k_members),
        odd_next=len(odd_next),
        layer_matches=flipped.layer(k) == frozenset(through_f),
        averaging_holds=family.n * score
        <= (k + 1) * len(odd_next) + (k - 1) * k * len(k_members),
        size_before=len(family),
        size_after=len(flipped),
        flipped=flipped,
    )


def legal_centers(n: int, t: int) -> list[int]:
    """Centers with ``2 <= |S| <= t - 1`` in (size, colex) order."""
    return [mask for k in range(2, t) for mask in fixed_weight_masks(n, k)]


def flip_descent(
    family: SetFamily, t: int, budget: int = DEFAULT_FLIP_BUDGET
) -> SetFamily:
    """Apply the most decreasing legal flip until none decreases or ``budget`` flips
    were made. The result is an upper bound, not a certified minimum.
    """
    if not is_t_pseudo_border(family, t):
        raise PreconditionError(
            f"Flip descent needs a {t}-pseudo-border of the hypercube on [{family.n}]."
        )
    n = family.n
    current = family
    for step in range(budget):
        seen: Counter[int] = Counter()
        for mask in current.masks:
            for center in _neighbor_masks(mask, n):
                if 2 <= center.bit_count() <= t - 1:
                    seen[center] += 1
        # flipping along S changes the size by n - 2|N(S) ∩ family|
        best_change, best_center = 0, None
        for center in sorted(seen, key=order_key):
            change = n - 2 * seen[center]
            if change < best_change:
                best_change, best_center = change, center
        if best_center is None:
            log.debug(f"Flip descent stopped after {step} flips at {len(current)}.")
            return current
        current = flip_many(current, [best_center])
    log.debug(f"Flip budget of {budget} exhausted at size {len(current)}.")
    return current
