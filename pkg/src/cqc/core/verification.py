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

"""Verification suites replaying the structural statements on exhaustive small
cases and seeded random samples.

Oracles in this module work on plain integer sets and ``itertools`` and share no
code with the searches they check.
"""

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from cqc.core import bounds
from cqc.core.border import VertexSet, border_of, is_border, is_pseudo_border
from cqc.core.cayley import (
    CayleyGraph,
    GeneratorSpec,
    classical_distance,
    random_generator_spec,
    verify_local_isomorphism,
)
from cqc.core.exceptions import TheoremViolationError
from cqc.core.csscode import (
    SearchLimits,
    generated_code_params,
    kernel_code_params,
    quantum_params,
)
from cqc.core.gf2 import BitVector, kernel_basis, rank, rows_self_orthogonal
from cqc.core.hypercube import (
    DEFAULT_COLUMN_LIMIT,
    SetFamily,
    SubsetMask,
    ball_masks,
    build_constraints,
    count_k_sets,
    flip,
    flip_descent,
    flip_many,
    is_t_pseudo_border,
    layer_flip_certificate,
    legal_centers,
    minimal_t_pseudo_border,
    neighborhood_overlap,
    odd_sets,
    one_sets_all_odd,
    random_t_pseudo_border,
    verify_odd_to_next,
    verify_sets_to_odd,
)
from cqc.core.models import CheckResult, QuantumParams

log = logging.getLogger(__name__)

HAMMING_COLUMNS = (1, 2, 3, 4, 5, 6, 7)

MINIMA_CASES = (
    (3, 2),
    (4, 2),
    (4, 3),
    (5, 2),
    (5, 3),
    (6, 3),
    (6, 4),
    (6, 5),
    (8, 3),
)

# r = 5 matrices with d = 6 and d = 5: the folded 6-cube, and five columns summing
# to zero next to a free generator
DISTANCE_FIVE_COLUMNS = ((1, 2, 4, 8, 16, 31), (1, 2, 4, 8, 15, 16))

MAX_COUNTEREXAMPLES = 5

# families on a ball with more columns are sampled instead of enumerated
EXHAUSTIVE_BALL_COLUMNS = 16


def hamming_spec() -> GeneratorSpec:
    """The 3 x 7 matrix whose columns are all nonzero vectors of F2^3."""
    return GeneratorSpec.from_columns(3, HAMMING_COLUMNS)


@dataclass(frozen=True)
class VerificationContext:
    """Inputs shared by all suites."""

    seed: int
    limits: SearchLimits = field(default_factory=SearchLimits)
    sample_size: int | None = None
    column_limit: int = DEFAULT_COLUMN_LIMIT

    def rng(self, salt: int) -> np.random.Generator:
        """Independent stream per suite, fixed by the seed."""
        return np.random.default_rng([self.seed, salt])


class _Tally:
    """Collects the outcomes of one check."""

    def __init__(self, suite: str, check: str, *, informational: bool = False):
        self._suite = suite
        self._check = check
        self._informational = informational
        self._checked = 0
        self._failures = 0
        self._examples: list[str] = []

    def record(self, ok: bool, example: str):
        self._checked += 1
        if not ok:
            self._failures += 1
            if len(self._examples) < MAX_COUNTEREXAMPLES:
                self._examples.append(example)

    def result(self) -> CheckResult:
        return CheckResult(
            suite=self._suite,
            check=self._check,
            checked=self._checked,
            failures=self._failures,
            counterexamples=self._examples,
            informational=self._informational,
        )


def _oracle_rank(rows: Iterable[int]) -> int:
    """Rank by elimination on the highest set bit."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                break
            row ^= pivots[top]
    return len(pivots)


def _oracle_span(rows: Iterable[int]) -> set[int]:
    span = {0}
    for row in rows:
        if row not in span:
            span |= {value ^ row for value in span}
    return span


def _oracle_min_weight(
    length: int, qualifies: Callable[[int], bool], cap: int
) -> int | None:
    for weight in range(1, cap + 1):
        for support in combinations(range(length), weight):
            if qualifies(sum(1 << i for i in support)):
                return weight
    return None


def _evenly_met(rows: list[int], value: int) -> bool:
    return all((row & value).bit_count() % 2 == 0 for row in rows)


def full_rank_specs(max_r: int, max_n: int) -> list[GeneratorSpec]:
    """Every full-rank spec with ``r <= max_r`` and even ``n <= max_n``, one per
    column set.
    """
    specs = []
    for r in range(1, max_r + 1):
        for n in range(2, min(max_n, (1 << r) - 1) + 1, 2):
            for columns in combinations(range(1, 1 << r), n):
                if _oracle_rank(columns) == r:
                    specs.append(GeneratorSpec.from_columns(r, columns))
    return specs


def _linear_maps(r: int) -> list[list[int]]:
    """Every invertible linear map of F2^r as the table of its values."""
    maps = []
    for images in permutations(range(1, 1 << r), r):
        if _oracle_rank(images) != r:
            continue
        table = [0]
        for image in images:
            table += [value ^ image for value in table]
        maps.append(table)
    return maps


def mapped_spec(spec: GeneratorSpec, table: list[int]) -> GeneratorSpec:
    """The spec whose columns are the images of the columns of ``spec``."""
    return GeneratorSpec.from_columns(
        spec.r, sorted(table[column] for column in spec.columns)
    )


def spec_classes(r: int, max_n: int) -> list[GeneratorSpec]:
    """One full-rank spec with ``r`` rows per class of column sets that an
    invertible linear map carries onto each other.
    """
    maps = _linear_maps(r)
    seen: set[tuple[int, ...]] = set()
    classes = []
    for spec in full_rank_specs(r, max_n):
        if spec.r != r or spec.columns in seen:
            continue
        seen |= {
            tuple(sorted(table[column] for column in spec.columns)) for table in maps
        }
        classes.append(spec)
    log.info(f"{len(classes)} classes of r = {r} generator matrices.")
    return classes


def _adjacency_rows(graph: CayleyGraph) -> list[int]:
    return [graph.neighborhood_int(vertex) for vertex in range(graph.vertex_count)]


def _vertex_set(size: int, value: int) -> VertexSet:
    return VertexSet(size, BitVector.from_int(size, value))


def suite_correspondance(context: VerificationContext) -> list[CheckResult]:
    """Borders are the row space of the adjacency matrix and pseudo-borders its
    kernel, checked on every subset for ``r <= 3``.
    """
    name = "correspondance"
    borders = _Tally(name, "is_border iff in row space")
    pseudo = _Tally(name, "is_pseudo_border iff in kernel")
    inclusion = _Tally(name, "borders are pseudo-borders for even n")
    linear = _Tally(name, "border_of is linear")
    rng = context.rng(1)
    for spec in full_rank_specs(3, 6):
        graph = CayleyGraph(spec=spec)
        size = graph.vertex_count
        rows = _adjacency_rows(graph)
        span = _oracle_span(rows)
        for value in range(1 << size):
            subset = _vertex_set(size, value)
            label = f"columns={spec.columns} x={value}"
            borders.record(is_border(graph, subset) == (value in span), label)
            pseudo.record(
                is_pseudo_border(graph, subset) == _evenly_met(rows, value), label
            )
        for value in sorted(span):
            inclusion.record(
                is_pseudo_border(graph, _vertex_set(size, value)),
                f"columns={spec.columns} border={value}",
            )
        for _ in range(4):
            first, second = (int(v) for v in rng.integers(0, 1 << size, size=2))
            left = border_of(graph, _vertex_set(size, first))
            right = border_of(graph, _vertex_set(size, second))
            both = border_of(graph, _vertex_set(size, first ^ second))
            linear.record(
                both == left ^ right, f"columns={spec.columns} X={first} Y={second}"
            )
    return [borders.result(), pseudo.result(), inclusion.result(), linear.result()]


def suite_self_orthogonality(context: VerificationContext) -> list[CheckResult]:
    """Adjacency matrices of random specs with even ``n`` generate self-orthogonal
    codes.
    """
    name = "self-orthogonality"
    implicit = _Tally(name, "is_self_orthogonal for even n")
    dense = _Tally(name, "A(H) · A(H)ᵀ = 0 for even n")
    odd = _Tally(name, "odd n is not self-orthogonal")
    rng = context.rng(2)
    for _ in range(100):
        r = int(rng.integers(2, 9))
        n = int(rng.choice([n for n in range(2, 13, 2) if r <= n < 1 << r]))
        spec = random_generator_spec(r, n, rng)
        graph = CayleyGraph(spec=spec)
        implicit.record(graph.is_self_orthogonal(), f"columns={spec.columns}")
        dense.record(
            rows_self_orthogonal(graph.adjacency_matrix()), f"columns={spec.columns}"
        )
    for n in (3, 5, 7):
        graph = CayleyGraph(spec=GeneratorSpec.identity(n))
        odd.record(not graph.is_self_orthogonal(), f"identity n={n}")
    return [implicit.result(), dense.result(), odd.result()]


def _random_distance_five_specs(
    rng: np.random.Generator, count: int, attempts: int = 5000
) -> list[GeneratorSpec]:
    specs: list[GeneratorSpec] = []
    for _ in range(attempts):
        if len(specs) == count:
            break
        spec = random_generator_spec(10, 16, rng)
        if classical_distance(spec, 4).weight is None:
            specs.append(spec)
    if len(specs) < count:
        log.warning(f"Only {len(specs)} random specs with d >= 5 were drawn.")
    return specs


def suite_local_isomorphism(context: VerificationContext) -> list[CheckResult]:
    """Balls of radius ``(d - 1) / 2`` look like hypercube balls."""
    name = "local-isomorphism"
    iso = _Tally(name, "ball maps isomorphically onto a hypercube ball")
    radius_check = _Tally(name, "radius is floor((d - 1) / 2)")
    boundary = _Tally(name, "no extra boundary edges", informational=True)
    regular = _Tally(name, "neighbors are n distinct vertices")
    transitive = _Tally(name, "translation maps N(u) onto N(v)")
    rng = context.rng(3)

    for spec in [hamming_spec(), *_random_distance_five_specs(rng, 20)]:
        distance = classical_distance(spec)
        expected_radius = (distance.weight - 1) // 2 if distance.weight else spec.n
        graph = CayleyGraph(spec=spec)
        for center in (int(v) for v in rng.integers(0, graph.vertex_count, size=5)):
            label = f"columns={spec.columns} center={center}"
            result = verify_local_isomorphism(spec, center, distance=distance)
            iso.record(result.ok, label)
            boundary.record(
                result.boundary_extra_edges == 0,
                f"{label} extra={result.boundary_extra_edges}",
            )
            radius_check.record(
                result.radius == expected_radius, f"{label} radius={result.radius}"
            )
            neighbors = graph.neighbors(center)
            regular.record(
                len(set(neighbors)) == spec.n and center not in neighbors, label
            )
            other = int(rng.integers(0, graph.vertex_count))
            moved = {vertex ^ center ^ other for vertex in neighbors}
            transitive.record(
                moved == set(graph.neighbors(other)), f"{label} v={other}"
            )
    return [
        iso.result(),
        radius_check.result(),
        boundary.result(),
        regular.result(),
        transitive.result(),
    ]


def _all_pseudo_borders(n: int, t: int, column_limit: int) -> list[SetFamily]:
    """Every t-pseudo-border, as the kernel vectors with ``x_∅ = 1``."""
    instance = build_constraints(n, t, column_limit=column_limit)
    span = _oracle_span(kernel_basis(instance.constraint_rows).to_int_rows())
    return [
        instance.family_from_vector(BitVector.from_int(instance.column_count, value))
        for value in sorted(span)
        if value & 1
    ]


def _check_linear_system(
    n: int, t: int, families: list[SetFamily], tally: _Tally, rng: np.random.Generator
):
    members = {family.masks for family in families}
    ball = ball_masks(n, t)
    if len(ball) <= EXHAUSTIVE_BALL_COLUMNS:
        candidates: Iterable[int] = range(1 << len(ball))
    else:
        candidates = (int(v) for v in rng.integers(0, 1 << len(ball), size=2000))
    for value in candidates:
        masks = frozenset(ball[i] for i in range(len(ball)) if value >> i & 1)
        tally.record(
            is_t_pseudo_border(SetFamily(n, masks), t) == (masks in members),
            f"n={n} t={t} family={sorted(masks)}",
        )


def _exact_minima(context: VerificationContext) -> dict[tuple[int, int], SetFamily]:
    minima = {}
    for n, t in MINIMA_CASES:
        search = minimal_t_pseudo_border(
            n, t, column_limit=context.column_limit, **context.limits.search_options()
        )
        if search.witness is not None:
            minima[n, t] = search.witness
    return minima


def suite_flip_closure(context: VerificationContext) -> list[CheckResult]:
    """Legal flips keep t-pseudo-borders and never shrink a minimal one."""
    name = "flip-closure"
    closure = _Tally(name, "single legal flip keeps a t-pseudo-border")
    iterated = _Tally(name, "iterated legal flips keep a t-pseudo-border")
    linear = _Tally(name, "predicate agrees with the linear system")
    minimal = _Tally(name, "no legal flip shrinks a minimal family")
    overlap = _Tally(name, "|N(S) ∩ N(T)| is n, 2 or 0")
    rng = context.rng(4)

    for n in range(3, 6):
        for t in range(2, min(3, n - 1) + 1):
            families = _all_pseudo_borders(n, t, context.column_limit)
            _check_linear_system(n, t, families, linear, rng)
            for family in families:
                for center in legal_centers(n, t):
                    flipped = flip(family, SubsetMask(n, center))
                    closure.record(
                        is_t_pseudo_border(flipped, t), f"n={n} t={t} S={center}"
                    )

    for n, t in ((6, 3), (8, 3), (6, 4)):
        centers = legal_centers(n, t)
        for _ in range(20):
            family = random_t_pseudo_border(
                n, t, rng, column_limit=context.column_limit
            )
            if family is None:
                continue
            for center in centers:
                closure.record(
                    is_t_pseudo_border(flip(family, SubsetMask(n, center)), t),
                    f"n={n} t={t} S={center}",
                )
            picks = [centers[int(i)] for i in rng.integers(0, len(centers), size=5)]
            iterated.record(
                is_t_pseudo_border(flip_many(family, picks), t),
                f"n={n} t={t} centers={picks}",
            )

    for (n, t), family in _exact_minima(context).items():
        for center in legal_centers(n, t):
            minimal.record(
                len(flip(family, SubsetMask(n, center))) >= len(family),
                f"n={n} t={t} S={center}",
            )

    for n in range(2, 7):
        small = ball_masks(n, min(3, n))
        for first in small:
            for second in small:
                size = neighborhood_overlap(n, first, second)
                expected = {n} if first == second else {0, 2}
                overlap.record(
                    size in expected, f"n={n} S={first} T={second} overlap={size}"
                )
    return [
        closure.result(),
        iterated.result(),
        linear.result(),
        minimal.result(),
        overlap.result(),
    ]


def suite_odd_sets(context: VerificationContext) -> list[CheckResult]:
    """Layer-to-layer inequalities on every exact minimal t-pseudo-border."""
    name = "odd-sets"
    odd_to_next = _Tally(name, "odd k-sets / (k + 1) <= (k + 1)-members")
    sets_to_odd = _Tally(name, "(n - (k - 1)k) / (k + 1) * s_k <= odd (k + 1)-sets")
    # ∅ and the n - 1 pairs through one element form a minimal t-pseudo-border for
    # n = 6 and t = 4, 5 without odd 3-sets or 4-sets
    pairs_to_odd = _Tally(
        name, "(n - 2) / 3 * s_2 <= odd 3-sets", informational=True
    )
    pairs = _Tally(name, "at least n / 2 2-sets for t >= 3")
    triples = _Tally(
        name, "at least n(n - 2) / 6 odd 3-sets for t >= 4", informational=True
    )
    quadruples = _Tally(
        name, "at least n(n - 2) / 24 4-sets for t >= 5", informational=True
    )
    layers = _Tally(name, "k-set count meets the even layer bound")
    ones = _Tally(name, "all 1-sets are odd")
    certificate = _Tally(name, "layer flip leaves exactly the odd sets through v")
    averaging = _Tally(name, "averaging inequality for the chosen v")
    growth = _Tally(name, "layer flip does not shrink the family", informational=True)
    unrestricted = _Tally(
        name, "sets-to-odd on non-minimal families", informational=True
    )
    rng = context.rng(5)

    for (n, t), family in _exact_minima(context).items():
        label = f"n={n} t={t}"
        for k in range(1, t):
            outcome = verify_odd_to_next(family, k)
            odd_to_next.record(outcome.holds, f"{label} k={k} {outcome}")
        for k in range(1, t - 1):
            counted = verify_sets_to_odd(family, k)
            tally = pairs_to_odd if k == 2 else sets_to_odd
            tally.record(counted.holds, f"{label} k={k} {counted}")
        if t >= 3:
            pairs.record(
                count_k_sets(family, 2) >= bounds.pair_count_bound(n).value, label
            )
        if t >= 4:
            triples.record(
                len(odd_sets(family, 3)) >= bounds.odd_triple_bound(n).value, label
            )
        if t >= 5:
            quadruples.record(
                count_k_sets(family, 4) >= bounds.quadruple_bound(n).value, label
            )
        for k in range(0, min(t - 1, bounds.half_root_floor(n)) + 1, 2):
            layers.record(
                count_k_sets(family, k) >= bounds.k_layer_bound(n, k).value,
                f"{label} k={k}",
            )
        ones.record(one_sets_all_odd(family), label)
        for k in range(1, t):
            cert = layer_flip_certificate(family, k)
            certificate.record(cert.layer_matches, f"{label} k={k}")
            averaging.record(cert.averaging_holds, f"{label} k={k}")
            growth.record(
                cert.size_after >= cert.size_before,
                f"{label} k={k} {cert.size_before}->{cert.size_after}",
            )

    for n, t in ((6, 3), (6, 4)):
        for _ in range(10):
            family = random_t_pseudo_border(
                n, t, rng, column_limit=context.column_limit
            )
            if family is None:
                continue
            for k in range(1, t - 1):
                unrestricted.record(
                    verify_sets_to_odd(family, k).holds, f"n={n} t={t} k={k}"
                )
    return [
        odd_to_next.result(),
        sets_to_odd.result(),
        pairs_to_odd.result(),
        pairs.result(),
        triples.result(),
        quadruples.result(),
        layers.result(),
        ones.result(),
        certificate.result(),
        averaging.result(),
        growth.result(),
        unrestricted.result(),
    ]


def suite_bounds(context: VerificationContext) -> list[CheckResult]:
    """Exact minima dominate the closed-form bounds, which behave as stated."""
    name = "bounds"
    theorem = _Tally(name, "exact minimum >= theorem bound")
    simple = _Tally(name, "exact minimum >= 1 + n / 2 for t >= 3")
    corollary = _Tally(name, "corollary bound <= theorem bound at t = (d + 1) / 2")
    saturation = _Tally(name, "theorem bound saturates at M = floor(sqrt(n / 2))")
    monotone = _Tally(name, "corollary bound nondecreasing in d")
    floor = _Tally(name, "bound values are at least 1 and decimals round down")
    descent = _Tally(name, "flip descent stays above the exact minimum")
    exponential = _Tally(name, "theorem bound reaches e^sqrt(n/2)", informational=True)
    rng = context.rng(6)

    for (n, t), family in _exact_minima(context).items():
        label = f"n={n} t={t}"
        theorem.record(len(family) >= bounds.theorem_bound(n, t).value, label)
        if t >= 3:
            simple.record(bounds.counting_floor_holds(len(family), n), label)
        for _ in range(5):
            start = random_t_pseudo_border(n, t, rng, column_limit=context.column_limit)
            if start is None:
                continue
            result = flip_descent(start, t)
            descent.record(
                len(result) >= len(family) and is_t_pseudo_border(result, t),
                f"{label} size={len(result)}",
            )

    for n in range(2, 65, 2):
        previous = None
        for d in range(3, 17, 2):
            value = bounds.corollary_bound(n, d).value
            corollary.record(
                value <= bounds.theorem_bound(n, (d - 1) // 2 + 1).value,
                f"n={n} d={d}",
            )
            monotone.record(previous is None or value >= previous, f"n={n} d={d}")
            previous = value
    for n in range(2, 65):
        root = bounds.half_root_floor(n)
        saturated = bounds.theorem_bound(n, root + 1).value
        for t in range(root + 2, root + 5):
            saturation.record(
                bounds.theorem_bound(n, t).value == saturated, f"n={n} t={t}"
            )
        for t in range(1, 8):
            report = bounds.theorem_bound(n, t)
            floor.record(
                report.value >= 1 and bounds.decimal_value(report) <= report.value,
                f"n={n} t={t} decimal={report.decimal}",
            )
            exponential.record(bool(report.exceeds_exponential), f"n={n} t={t}")
    return [
        theorem.result(),
        simple.result(),
        corollary.result(),
        saturation.result(),
        monotone.result(),
        floor.result(),
        descent.result(),
        exponential.result(),
    ]


def _quantum_specs(context: VerificationContext) -> list[GeneratorSpec]:
    """Every spec with ``r <= 3``, every class with ``r = 4`` unless a sample size
    is set, and the ``r = 5`` specs with ``d >= 5``.
    """
    specs = full_rank_specs(3, 6)
    if context.sample_size is None:
        specs += spec_classes(4, 14)
    else:
        rng = context.rng(7)
        for _ in range(context.sample_size):
            n = int(rng.choice([4, 6, 8, 10, 12, 14]))
            specs.append(random_generator_spec(4, n, rng))
    specs += [GeneratorSpec.from_columns(5, c) for c in DISTANCE_FIVE_COLUMNS]
    return specs


def _invariants(params: QuantumParams) -> tuple[int | None, ...]:
    return params.K, params.d, params.d_perp, params.D


def suite_quantum_distance(context: VerificationContext) -> list[CheckResult]:
    """``K``, ``d_perp`` and ``D`` agree with exhaustive oracles for ``r <= 4`` and
    for ``r = 5`` matrices with ``d >= 5``.
    """
    name = "quantum-distance"
    logical = _Tally(name, "K = N - 2 rank(A) by independent elimination")
    dual = _Tally(name, "d_perp matches exhaustive search")
    quantum = _Tally(name, "D matches exhaustive search")
    corollary = _Tally(name, "D >= corollary bound when d >= 5")
    ordered = _Tally(name, "d_perp <= D")
    invariant = _Tally(name, "parameters are invariant under GL(r, 2)")
    rng = context.rng(8)
    maps = _linear_maps(4) if context.sample_size is None else []
    for spec in _quantum_specs(context):
        label = f"r={spec.r} columns={spec.columns}"
        try:
            params = quantum_params(spec, limits=context.limits)
        except TheoremViolationError as error:
            corollary.record(False, f"{label} {error}")
            continue
        if spec.r == 4 and maps:
            image = mapped_spec(spec, maps[int(rng.integers(0, len(maps)))])
            moved = quantum_params(image, limits=context.limits)
            invariant.record(
                _invariants(moved) == _invariants(params),
                f"{label} image={image.columns}",
            )
        rows = _adjacency_rows(CayleyGraph(spec=spec))
        size = len(rows)
        cap = spec.n + 2
        logical.record(
            params.K == size - 2 * _oracle_rank(rows), f"{label} K={params.K}"
        )
        expected_perp = _oracle_min_weight(
            size, lambda v, rows=rows: _evenly_met(rows, v), cap
        )
        dual.record(params.d_perp == expected_perp, f"{label} d_perp={params.d_perp}")
        if params.K == 0:
            continue
        span = _oracle_span(rows)
        expected = _oracle_min_weight(
            size,
            lambda v, rows=rows, span=span: v not in span and _evenly_met(rows, v),
            cap,
        )
        quantum.record(params.D == expected, f"{label} D={params.D} oracle={expected}")
        if params.D is not None and params.d is not None and params.d >= 5:
            corollary.record(
                params.D >= bounds.corollary_bound(spec.n, params.d).value, label
            )
        if params.D is not None and params.d_perp is not None:
            ordered.record(params.d_perp <= params.D, label)
    return [
        logical.result(),
        dual.result(),
        quantum.result(),
        corollary.result(),
        ordered.result(),
        invariant.result(),
    ]


def suite_classical(context: VerificationContext) -> list[CheckResult]:
    """The 3 x 7 Hamming matrix: kernel code [7,4,3], row code [7,3,4]."""
    name = "classical"
    h = hamming_spec().h
    options = context.limits.search_options()
    kernel = kernel_code_params(h, **options)
    generated = generated_code_params(h, **options)
    checks = [
        ("rank is 3", rank(h) == 3, f"rank={rank(h)}"),
        (
            "kernel code is [7,4,3]",
            (kernel.n, kernel.k, kernel.d) == (7, 4, 3),
            str(kernel),
        ),
        (
            "row code is [7,3,4]",
            (generated.n, generated.k, generated.d) == (7, 3, 4),
            str(generated),
        ),
        ("row code is self-orthogonal", rows_self_orthogonal(h), "odd row overlap"),
    ]
    results = []
    for check, ok, detail in checks:
        tally = _Tally(name, check)
        tally.record(ok, detail)
        results.append(tally.result())
    return results


SUITES: dict[str, Callable[[VerificationContext], list[CheckResult]]] = {
    "classical": suite_classical,
    "correspondance": suite_correspondance,
    "self-orthogonality": suite_self_orthogonality,
    "local-isomorphism": suite_local_isomorphism,
    "flip-closure": suite_flip_closure,
    "odd-sets": suite_odd_sets,
    "bounds": suite_bounds,
    "quantum-distance": suite_quantum_distance,
}

ALIASES = {"correspondence": "correspondance"}


def suite_names() -> list[str]:
    """Names accepted by ``run_suite``."""
    return [*SUITES, *ALIASES, "all"]


def run_suite(name: str, context: VerificationContext) -> list[CheckResult]:
    """Run one suite, or every suite for ``all``."""
    name = ALIASES.get(name, name)
    if name != "all" and name not in SUITES:
        raise KeyError(name)
    selected = list(SUITES) if name == "all" else [name]
    results: list[CheckResult] = []
    for suite in selected:
        log.info(f"Running verification suite {suite}.")
        results.extend(SUITES[suite](context))
    return results
