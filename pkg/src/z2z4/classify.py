"""Lee-weight profiles and the code taxonomy built on them.

A nonzero code is one-weight when its nonzero words share a single Lee
weight, two-distance when its pairwise distances (equivalently, for an
additive code, its nonzero weights) take exactly two values, and relative
two-weight when some proper nonzero subcode C1 is one-weight (m1) while
everything outside C1 has a second constant weight (m != m1).

The relative-structure search never assumes a weight class is a subgroup;
it checks, so any code whose weight classes both fail the subgroup test
is reported as two-distance without a relative structure.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


from . import kernels
from .codes import (
    DEFAULT_ENUM_LIMIT,
    AdditiveCode,
    CapError,
    ContainmentError,
    SubcodeWitness,
    _closure_rows,
    _greedy_generators,
)
from .words import MixedWord, inner_product, word_str


def weight_profile(code: AdditiveCode, limit: int = DEFAULT_ENUM_LIMIT) -> Counter:
    """Histogram mapping Lee weight to the number of codewords carrying it."""
    mat = code.matrix(limit)
    weights = kernels.lee_weights(mat, code.alpha)
    return Counter(int(w) for w in weights)


def _nonzero_weights(code: AdditiveCode, limit: int) -> tuple[int, ...]:
    profile = weight_profile(code, limit)
    return tuple(sorted(w for w in profile if w != 0))


def is_one_weight(code: AdditiveCode, limit: int = DEFAULT_ENUM_LIMIT) -> int | None:
    """The common nonzero Lee weight, or None if there is more than one."""
    if code.is_zero_code():
        raise ValueError("the zero code has no nonzero weight")
    weights = _nonzero_weights(code, limit)
    return weights[0] if len(weights) == 1 else None


def is_two_distance(
    code: AdditiveCode, strict: bool = True, limit: int = DEFAULT_ENUM_LIMIT
) -> tuple[int, ...] | None:
    """Realized nonzero weights if they fit in a two-element distance set.

    For an additive code the pairwise distances are exactly the nonzero
    weights.  With ``strict`` both distances must be realized (a sorted
    pair comes back); without it a one-weight code also qualifies and the
    singleton tuple of its weight comes back.
    """
    if code.is_zero_code():
        raise ValueError("the zero code has no distances")
    weights = _nonzero_weights(code, limit)
    if len(weights) == 2 or (not strict and len(weights) == 1):
        return weights
    return None


@dataclass(frozen=True)
class RelativeStructure:
    """Witness that a code is relative two-weight: subcode C1 and weights.

    Nonzero words of the subcode all weigh ``m1``; words outside it all
    weigh ``m``.
    """

    subcode: SubcodeWitness
    m1: int
    m: int


def verify_relative(
    code: AdditiveCode, witness: SubcodeWitness, limit: int = DEFAULT_ENUM_LIMIT
) -> RelativeStructure | None:
    """Check a proposed subcode witness; None when the weights do not split."""
    sub = witness.sub
    if (sub.alpha, sub.beta) != (code.alpha, code.beta):
        raise ContainmentError("subcode shape differs from the code shape")
    sub_keys = sub.keys(limit)
    if not sub_keys <= code.keys(limit):
        raise ContainmentError("proposed subcode is not contained in the code")
    if len(sub_keys) == 1:
        raise ContainmentError("subcode must be nonzero")
    if len(sub_keys) == len(code.keys(limit)):
        raise ContainmentError("subcode must be proper")
    sub_w = _nonzero_weights(sub, limit)
    if len(sub_w) != 1:
        return None
    m1 = sub_w[0]
    mat = code.matrix(limit)
    row_weights = kernels.lee_weights(mat, code.alpha)
    outside = {
        int(w) for row, w in zip(mat, row_weights) if row.tobytes() not in sub_keys
    }
    if len(outside) != 1:
        return None
    m = outside.pop()
    if m1 == m:
        return None
    return RelativeStructure(subcode=witness, m1=m1, m=m)


def find_relative_structure(
    code: AdditiveCode, limit: int = DEFAULT_ENUM_LIMIT
) -> RelativeStructure | None:
    """Search for a relative two-weight structure.

    Needs exactly two nonzero weights.  Each weight class plus zero is
    tested for being a subgroup, smaller class first (ties: smaller
    weight); the first class that passes becomes C1.
    """
    if code.is_zero_code():
        return None
    weights = _nonzero_weights(code, limit)
    if len(weights) != 2:
        return None
    mat = code.matrix(limit)
    row_weights = kernels.lee_weights(mat, code.alpha)
    profile = Counter(int(w) for w in row_weights)
    for m1 in sorted(weights, key=lambda w: (profile[w], w)):
        rows = mat[(row_weights == m1) | (row_weights == 0)]
        # subgroup iff closing the class (plus zero) adds nothing; the
        # closure cap at len(rows) fires exactly when something is added
        try:
            _closure_rows(rows, code.mods, len(rows), code.ambient_size)
        except CapError:
            continue
        gens = _greedy_generators(rows, code.alpha, code.beta)
        sub = AdditiveCode._from_rows(code.alpha, code.beta, rows, gens)
        m = weights[0] if weights[1] == m1 else weights[1]
        return RelativeStructure(
            subcode=SubcodeWitness(parent=code, sub=sub), m1=m1, m=m
        )
    return None


@dataclass(frozen=True)
class EvenWeightCheck:
    """Both sides of the even-weight criterion, computed independently.

    ``all_even`` scans the weight profile; ``dual_member`` tests whether
    the all-ones/all-twos word (1...1|2...2) is orthogonal to every
    generator, i.e. lies in the dual.
    """

    all_even: bool
    dual_member: bool

    @property
    def agree(self) -> bool:
        return self.all_even == self.dual_member


def even_weight_criterion(
    code: AdditiveCode, limit: int = DEFAULT_ENUM_LIMIT
) -> EvenWeightCheck:
    profile = weight_profile(code, limit)
    all_even = all(w % 2 == 0 for w in profile)
    ones_twos = MixedWord((1,) * code.alpha, (2,) * code.beta)
    dual_member = all(inner_product(ones_twos, g) == 0 for g in code.generators)
    return EvenWeightCheck(all_even=all_even, dual_member=dual_member)


@dataclass(frozen=True)
class GeneratorStats:
    """Coordinate counts of a single generator word (u|v).

    ``units_binary`` counts 1s in u.  On the quaternary side the units
    are the 1s and 3s, the zero divisor is 2.  Two bodies of results use
    clashing letters for these counts, so the fields spell them out:
    the weight formulas take k = units_quaternary, s = zero_divisors,
    while the automorphism order formula takes k = zero_divisors,
    s = zeros_quaternary, q = ones, r = threes.
    """

    units_binary: int
    zero_divisors: int
    zeros_quaternary: int
    ones: int
    threes: int

    @property
    def units_quaternary(self) -> int:
        return self.ones + self.threes


def generator_stats(w: MixedWord) -> GeneratorStats:
    """Count units, zero divisors and zeros in each part of a word."""
    v = w.quaternary
    return GeneratorStats(
        units_binary=sum(w.binary),
        zero_divisors=sum(1 for x in v if x == 2),
        zeros_quaternary=sum(1 for x in v if x == 0),
        ones=sum(1 for x in v if x == 1),
        threes=sum(1 for x in v if x == 3),
    )


def predicted_single_gen_weights(stats: GeneratorStats) -> tuple[int, int]:
    """(m1, m) = (2k, l + 2s + k) for a single-generator code.

    Here k counts quaternary units, s zero divisors, l binary units.
    (0, 0) for the zero word marks a degenerate non-code.
    """
    k = stats.units_quaternary
    return (2 * k, stats.units_binary + 2 * stats.zero_divisors + k)


@dataclass(frozen=True)
class RowUnitsCheck:
    """One subcode generator row against the 0-or-m1/2 unit-count rule."""

    row: MixedWord
    units_quaternary: int
    allowed: tuple[int, ...]
    ok: bool


def check_g1_row_units(
    code: AdditiveCode, structure: RelativeStructure
) -> list[RowUnitsCheck]:
    """Each generator row of C1 must have 0 or m1/2 quaternary units."""
    allowed = tuple(sorted({0, structure.m1 // 2}))
    report = []
    for row in structure.subcode.sub.generators:
        units = generator_stats(row).units_quaternary
        report.append(
            RowUnitsCheck(row=row, units_quaternary=units, allowed=allowed, ok=units in allowed)
        )
    return report


def classification_report(code: AdditiveCode, limit: int = DEFAULT_ENUM_LIMIT) -> dict:
    """One JSON-ready dict with the full taxonomy of a code."""
    profile = weight_profile(code, limit)
    zero_code = code.is_zero_code()
    one_w = None if zero_code else is_one_weight(code, limit)
    two_d = None if zero_code else is_two_distance(code, strict=True, limit=limit)
    structure = None if zero_code else find_relative_structure(code, limit)
    even = even_weight_criterion(code, limit)
    return {
        "alpha": code.alpha,
        "beta": code.beta,
        "size": code.size(limit),
        "weight_profile": {str(w): profile[w] for w in sorted(profile)},
        "one_weight": one_w,
        "two_distance": list(two_d) if two_d else None,
        "relative": None
        if structure is None
        else {
            "m1": structure.m1,
            "m": structure.m,
            "subcode_generators": [word_str(g) for g in structure.subcode.sub.generators],
        },
        "even_weight": {"all_even": even.all_even, "dual_member": even.dual_member},
    }
