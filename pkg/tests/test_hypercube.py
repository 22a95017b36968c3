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

"""Tests for t-pseudo-borders of the hypercube and the flip operations."""

import json

import numpy as np
import pytest

from cqc.core.exceptions import (
    ParameterRangeError,
    PreconditionError,
    ResourceLimitError,
)
from cqc.core.gf2 import SearchStatus
from cqc.core.hypercube import (
    SetFamily,
    SubsetMask,
    build_constraints,
    count_k_sets,
    flip,
    flip_descent,
    is_t_pseudo_border,
    layer_flip_certificate,
    legal_centers,
    minimal_t_pseudo_border,
    neighborhood,
    neighborhood_overlap,
    odd_sets,
    one_sets_all_odd,
    random_t_pseudo_border,
    verify_odd_to_next,
    verify_sets_to_odd,
)
from tests.fixtures.utils import (
    BASE_DIR,
    brute_force_min_t_pseudo_border,
    is_t_pseudo_border_oracle,
)

MATCHING = SetFamily.from_subsets(4, [[], [1, 4], [2, 3]])
MINIMA = json.loads((BASE_DIR / "pseudoborder_minima.json").read_text())


def test_subsets_and_families():
    """Element lists, masks and the (size, colex) order."""
    subset = SubsetMask.from_elements(4, [2, 3])
    assert subset.bits == 0b0110
    assert subset.size == 2
    assert subset.elements() == [2, 3]
    assert MATCHING.to_json() == [[], [2, 3], [1, 4]]
    assert len(MATCHING) == 3
    assert subset in MATCHING
    assert MATCHING.layer(2) == frozenset({0b1001, 0b0110})
    with pytest.raises(ValueError):
        SubsetMask.from_elements(4, [5])


def test_neighborhoods():
    """N(S) has n members and neighborhoods overlap in n, 2 or 0 sets."""
    assert neighborhood(SubsetMask(4, 0)).to_json() == [[1], [2], [3], [4]]
    assert neighborhood_overlap(4, 0b0011, 0b0011) == 4
    assert neighborhood_overlap(4, 0, 0b0011) == 2
    assert neighborhood_overlap(4, 0, 0b0001) == 0


def test_t_pseudo_border_predicate():
    """The perfect matching plus the empty set is a t-pseudo-border for t = 2, 3."""
    assert is_t_pseudo_border(MATCHING, 2)
    assert is_t_pseudo_border(MATCHING, 3)
    assert not is_t_pseudo_border(SetFamily.from_subsets(4, [[]]), 2)
    assert not is_t_pseudo_border(SetFamily.from_subsets(4, [[1, 4], [2, 3]]), 2)
    with pytest.raises(ParameterRangeError):
        is_t_pseudo_border(MATCHING, 4)


def test_flip_keeps_the_property():
    """A legal flip keeps a 3-pseudo-border and changes the size by n - 2|overlap|."""
    flipped = flip(MATCHING, SubsetMask.from_elements(4, [1, 2]))
    assert is_t_pseudo_border(flipped, 3)
    assert len(flipped) == 7
    assert flip(flipped, SubsetMask.from_elements(4, [1, 2])) == MATCHING


def test_flip_descent_returns_to_the_minimum():
    """Descent undoes the size increasing flip and then stops."""
    start = flip(MATCHING, SubsetMask.from_elements(4, [1, 2]))
    assert flip_descent(start, 3) == MATCHING
    assert flip_descent(MATCHING, 3) == MATCHING
    with pytest.raises(PreconditionError):
        flip_descent(SetFamily.from_subsets(4, [[]]), 3)


def test_legal_centers():
    """Centers of size 2 to t - 1 in (size, colex) order."""
    assert legal_centers(4, 3) == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
    assert legal_centers(4, 2) == []


@pytest.mark.parametrize("case", MINIMA, ids=lambda case: f"n{case['n']}-t{case['t']}")
def test_minimal_t_pseudo_border_golden(case: dict):
    """Exact minima and colex-first witnesses."""
    search = minimal_t_pseudo_border(case["n"], case["t"])
    assert search.status == case["status"]
    assert search.size == case["size"]
    if "witness" in case:
        assert search.witness is not None
        assert search.witness.to_json() == case["witness"]
    if search.witness is not None:
        assert is_t_pseudo_border(search.witness, case["t"])


@pytest.mark.parametrize("n, t", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_minimal_t_pseudo_border_matches_brute_force(n: int, t: int):
    """The linear search agrees with trying every family."""
    search = minimal_t_pseudo_border(n, t)
    assert search.size == brute_force_min_t_pseudo_border(n, t)
    if search.witness is not None:
        members = {frozenset(member) for member in search.witness.to_json()}
        assert is_t_pseudo_border_oracle(n, t, members)


def test_cap_exhausted_search_keeps_a_lower_bound():
    """A cap below the minimum gives cap-exhausted with cap + 1 as lower bound."""
    search = minimal_t_pseudo_border(6, 3, cap=2)
    assert search.status is SearchStatus.CAP_EXHAUSTED
    assert search.witness is None
    assert search.lower_bound == 3


def test_column_limit():
    """Balls with more subsets than the limit are refused."""
    with pytest.raises(ResourceLimitError):
        build_constraints(6, 4, column_limit=10)
    assert build_constraints(4, 3).column_count == 15
    assert build_constraints(4, 3, even_layers_only=True).column_count == 7


def test_random_t_pseudo_border():
    """Random draws are valid and reproducible."""
    first = random_t_pseudo_border(6, 4, np.random.default_rng(11))
    second = random_t_pseudo_border(6, 4, np.random.default_rng(11))
    assert first is not None
    assert first == second
    assert is_t_pseudo_border(first, 4)
    assert random_t_pseudo_border(5, 3, np.random.default_rng(11)) is None


def test_odd_sets_and_layer_inequalities():
    """Layer counts of the perfect matching family."""
    assert len(odd_sets(MATCHING, 1)) == 4
    assert len(odd_sets(MATCHING, 2)) == 0
    assert len(odd_sets(MATCHING, 3)) == 4
    assert count_k_sets(MATCHING, 2) == 2
    assert one_sets_all_odd(MATCHING)

    odd_to_next = verify_odd_to_next(MATCHING, 1)
    assert (odd_to_next.s_odd, odd_to_next.s_next, odd_to_next.holds) == (4, 2, True)
    assert verify_sets_to_odd(MATCHING, 1).holds
    with pytest.raises(ParameterRangeError):
        odd_sets(MATCHING, 0)


def test_layer_flip_certificate():
    """Flipping along the 2-members through element 1 leaves the odd 3-sets
    through 1 as 2-members.
    """
    certificate = layer_flip_certificate(MATCHING, 2)
    assert certificate.element == 1
    assert certificate.score == 4
    assert certificate.k_members == 2
    assert certificate.odd_next == 4
    assert certificate.layer_matches
    assert certificate.averaging_holds
    assert certificate.size_before == 3
    assert certificate.size_after == 3
    assert certificate.flipped.to_json() == [[2, 3], [2, 4], [3, 4]]


def test_star_is_a_minimal_family_without_odd_triples():
    """For n = 6 the smallest 4-pseudo-border is ∅ and the five pairs through one
    element, which leaves no odd 3-set.
    """
    search = minimal_t_pseudo_border(6, 4)
    witness = search.witness
    assert witness is not None
    assert len(witness) == 6
    pairs = witness.layer(2)
    assert len(pairs) == 5
    shared = (1 << 6) - 1
    for mask in pairs:
        shared &= mask
    assert shared.bit_count() == 1

    assert len(odd_sets(witness, 3)) == 0
    assert not verify_sets_to_odd(witness, 2).holds
    assert verify_sets_to_odd(witness, 1).holds
    assert all(verify_odd_to_next(witness, k).holds for k in range(1, 4))

    star = SetFamily.from_subsets(6, [[], *([1, j] for j in range(2, 7))])
    assert is_t_pseudo_border(star, 4)
    assert is_t_pseudo_border(star, 5)
    assert minimal_t_pseudo_border(6, 5).size == 6
