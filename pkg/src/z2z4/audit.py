"""Registry of theorem audits run against a single code by brute force.

Every entry computes both sides of one claim independently and reports
``holds``, ``fails`` or ``not-applicable``.  A failing claim is a
finding about the claim, never suppressed and never an error: two of the
registered statements are known to fail on small inputs and the whole
point of the audit is to surface that with a counterexample attached.

Entry ids are stable so downstream tooling can diff audit runs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classify import (
    check_g1_row_units,
    even_weight_criterion,
    find_relative_structure,
    generator_stats,
    is_two_distance,
    predicted_single_gen_weights,
    weight_profile,
)
from .codes import CapError, DEFAULT_ENUM_LIMIT, AdditiveCode, is_linear_binary
from .symmetry import DEFAULT_PAIR_LIMIT, _pair_space, paut, paut_order_formula
from .words import gray_word, hamming_weight, lee_distance, word_str

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"

PAIRWISE_BUDGET = 4_000_000  # max |C|^2 for all-pairs checks


@dataclass
class AuditEntry:
    id: str
    statement: str
    status: str
    details: dict


@dataclass
class _Ctx:
    code: AdditiveCode
    t: int
    enum_limit: int
    pair_limit: int
    structure: object  # RelativeStructure | None
    two_distance: tuple | None


def _na(reason: str) -> tuple[str, dict]:
    return NOT_APPLICABLE, {"reason": reason}


def _audit_gray_isometry(ctx: _Ctx):
    words = ctx.code.codewords(ctx.enum_limit)
    if len(words) ** 2 > PAIRWISE_BUDGET:
        return _na(f"|C|^2 = {len(words) ** 2} exceeds the pairwise budget")
    for a, b in itertools.product(words, repeat=2):
        lhs = sum(x != y for x, y in zip(gray_word(a), gray_word(b)))
        if lhs != lee_distance(a, b):
            return FAILS, {"counterexample": [word_str(a), word_str(b)]}
    return HOLDS, {"pairs_checked": len(words) ** 2}


def _audit_gray_two_distance(ctx: _Ctx):
    if ctx.two_distance is None:
        return _na("code is not two-distance")
    pair = set(ctx.two_distance)
    images = sorted(gray_word(w) for w in ctx.code.codewords(ctx.enum_limit))
    if len(images) ** 2 > PAIRWISE_BUDGET:
        return _na("image too large for the all-pairs check")
    realized = set()
    for x, y in itertools.combinations(images, 2):
        d = sum(a != b for a, b in zip(x, y))
        realized.add(d)
        if d not in pair:
            return FAILS, {
                "distance": d,
                "expected": sorted(pair),
                "counterexample": ["".join(map(str, x)), "".join(map(str, y))],
            }
    return HOLDS, {"distances": sorted(realized)}


def _audit_m1_even(ctx: _Ctx):
    if ctx.structure is None:
        return _na("no relative two-weight structure found")
    m1 = ctx.structure.m1
    if m1 % 2 == 0:
        return HOLDS, {"m1": m1}
    return FAILS, {"m1": m1}


def _audit_gray_relative(ctx: _Ctx):
    if ctx.structure is None:
        return _na("no relative two-weight structure found")
    st = ctx.structure
    sub_images = {gray_word(w) for w in st.subcode.sub.codewords(ctx.enum_limit)}
    image = ctx.code.gray_image(ctx.enum_limit)
    inside = {hamming_weight(x) for x in sub_images if any(x)}
    outside = {hamming_weight(x) for x in image.words - sub_images}
    ok = inside == {st.m1} and outside == {st.m}
    details = {
        "m1": st.m1,
        "m": st.m,
        "subcode_image_weights": sorted(inside),
        "outside_image_weights": sorted(outside),
        "gray_image_linear": is_linear_binary(image),
    }
    return (HOLDS if ok else FAILS), details


def _audit_replication(ctx: _Ctx):
    if ctx.structure is None:
        return _na("no relative two-weight structure found")
    st = ctx.structure
    replicated = ctx.code.replicate(ctx.t)
    found = find_relative_structure(replicated, ctx.enum_limit)
    expected = (ctx.t * st.m1, ctx.t * st.m)
    if found is not None and (found.m1, found.m) == expected:
        return HOLDS, {"t": ctx.t, "m1": found.m1, "m": found.m}
    return FAILS, {
        "t": ctx.t,
        "expected": list(expected),
        "found": None if found is None else [found.m1, found.m],
    }


def _audit_even_weight_iff(ctx: _Ctx):
    check = even_weight_criterion(ctx.code, ctx.enum_limit)
    details = {"all_even": check.all_even, "dual_member": check.dual_member}
    if check.agree:
        return HOLDS, details
    profile = weight_profile(ctx.code, ctx.enum_limit)
    details["odd_weights"] = sorted(w for w in profile if w % 2)
    return FAILS, details


def _audit_g1_row_units(ctx: _Ctx):
    if ctx.structure is None:
        return _na("no relative two-weight structure found")
    rows = check_g1_row_units(ctx.code, ctx.structure)
    details = {
        "rows": [
            {"row": word_str(r.row), "units": r.units_quaternary, "ok": r.ok}
            for r in rows
        ]
    }
    return (HOLDS if all(r.ok for r in rows) else FAILS), details


def _audit_single_gen_weights(ctx: _Ctx):
    if len(ctx.code.generators) != 1:
        return _na("code does not have exactly one generator")
    if ctx.structure is None:
        return _na("no relative two-weight structure found")
    stats = generator_stats(ctx.code.generators[0])
    predicted = predicted_single_gen_weights(stats)
    found = (ctx.structure.m1, ctx.structure.m)
    details = {"predicted": list(predicted), "found": list(found)}
    return (HOLDS if predicted == found else FAILS), details


def _audit_paut_order(ctx: _Ctx):
    if len(ctx.code.generators) != 1:
        return _na("order formula only applies to single-generator codes")
    try:
        group = paut(ctx.code, ctx.pair_limit, ctx.enum_limit)
    except CapError as exc:
        return _na(str(exc))
    formula = paut_order_formula(generator_stats(ctx.code.generators[0]), ctx.code.alpha)
    details = {"formula_order": formula, "exhaustive_order": group.order}
    return (HOLDS if formula == group.order else FAILS), details


def _audit_cyclic_paut(ctx: _Ctx):
    try:
        group = paut(ctx.code, ctx.pair_limit, ctx.enum_limit)
    except CapError as exc:
        return _na(str(exc))
    cyclic = ctx.code.is_cyclic(ctx.enum_limit)
    full = group.is_full(ctx.code.alpha, ctx.code.beta)
    details = {
        "cyclic": cyclic,
        "paut_full": full,
        "paut_order": group.order,
        "full_order": _pair_space(ctx.code.alpha, ctx.code.beta),
    }
    if cyclic == full:
        return HOLDS, details
    # only one failure shape is possible: cyclic but not fully symmetric
    # (the shift pair always lies in a full group); name the first pair
    # of coordinate permutations the code is not stable under
    members = {(p.sigma, p.tau) for p in group.elements}
    for sigma in itertools.permutations(range(ctx.code.alpha)):
        for tau in itertools.permutations(range(ctx.code.beta)):
            if (sigma, tau) not in members:
                details["missing_pair"] = {"sigma": list(sigma), "tau": list(tau)}
                return FAILS, details
    return FAILS, details


AUDITS = (
    ("thm-gray-isometry", "Gray images are at the Hamming distance equal to the Lee distance", _audit_gray_isometry),
    ("thm-gray-two-distance", "the Gray image of a two-distance code is two-distance with the same pair", _audit_gray_two_distance),
    ("thm-m1-even", "the subcode weight m1 of a relative two-weight structure is even", _audit_m1_even),
    ("thm-gray-relative", "the Gray image of a relative two-weight code is relative two-weight with the same weights", _audit_gray_relative),
    ("thm-replication", "t-fold replication scales a relative structure to (t*m1, t*m)", _audit_replication),
    ("thm-even-weight-iff", "all weights are even iff (1...1|2...2) lies in the dual", _audit_even_weight_iff),
    ("thm-g1-row-units", "every subcode generator row has 0 or m1/2 quaternary units", _audit_g1_row_units),
    ("thm-single-gen-weights", "a single-generator structure has m1 = 2k and m = l + 2s + k", _audit_single_gen_weights),
    ("prop-paut-order", "|PAut| equals (l!+(alpha-l)!-1)(k!+s!+q!+r!-3)", _audit_paut_order),
    ("thm-cyclic-paut", "a code is cyclic iff PAut is all of S_alpha x S_beta", _audit_cyclic_paut),
)


def run_audits(
    code: AdditiveCode,
    t: int = 2,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
    pair_limit: int = DEFAULT_PAIR_LIMIT,
) -> list[AuditEntry]:
    """Run every registered audit against one code."""
    if code.is_zero_code():
        return [
            AuditEntry(id=aid, statement=stmt, status=NOT_APPLICABLE, details={"reason": "zero code"})
            for aid, stmt, _ in AUDITS
        ]
    structure = find_relative_structure(code, enum_limit)
    two_d = is_two_distance(code, strict=True, limit=enum_limit)
    ctx = _Ctx(
        code=code,
        t=t,
        enum_limit=enum_limit,
        pair_limit=pair_limit,
        structure=structure,
        two_distance=two_d,
    )
    entries = []
    for aid, stmt, fn in AUDITS:
        try:
            status, details = fn(ctx)
        except CapError as exc:
            status, details = _na(str(exc))
        entries.append(AuditEntry(id=aid, statement=stmt, status=status, details=details))
    return entries
