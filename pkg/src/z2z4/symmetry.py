"""Permutation equivalence and permutation automorphism groups.

A pair (sigma, tau) permutes the binary and quaternary coordinates
separately.  One convention everywhere: coordinate i of the image is
coordinate perm[i] of the input (permutations are 0-based one-line
arrays).  Composition and inversion follow from that reading, so the
same pairs work for equivalence witnesses and for PAut elements.

Exhaustive scans run over S_alpha x S_beta.  Candidate permutations are
pruned first by a necessary condition: a coordinate can only move to a
coordinate whose column, read down the codeword matrix, has the same
value multiset.  The pruning never changes results, only skips pairs
that cannot possibly work.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

import numpy as np

from . import kernels
from .classify import GeneratorStats, weight_profile
from .codes import DEFAULT_ENUM_LIMIT, AdditiveCode, CapError, _lex_rows
from .words import MixedWord, ShapeError

DEFAULT_PAIR_LIMIT = factorial(6) * factorial(6)  # 518400 pairs


@dataclass(frozen=True)
class PermPair:
    """A coordinate permutation (sigma on the binary part, tau on the rest)."""

    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(i) for i in self.sigma))
        object.__setattr__(self, "tau", tuple(int(i) for i in self.tau))
        for name, p in (("sigma", self.sigma), ("tau", self.tau)):
            if sorted(p) != list(range(len(p))):
                raise ValueError(f"{name}={p} is not a permutation of 0..{len(p) - 1}")

    @classmethod
    def identity(cls, alpha: int, beta: int) -> "PermPair":
        return cls(tuple(range(alpha)), tuple(range(beta)))

    def is_identity(self) -> bool:
        return self.sigma == tuple(range(len(self.sigma))) and self.tau == tuple(
            range(len(self.tau))
        )

    def inverse(self) -> "PermPair":
        inv_s = [0] * len(self.sigma)
        inv_t = [0] * len(self.tau)
        for i, j in enumerate(self.sigma):
            inv_s[j] = i
        for i, j in enumerate(self.tau):
            inv_t[j] = i
        return PermPair(tuple(inv_s), tuple(inv_t))

    def compose(self, other: "PermPair") -> "PermPair":
        """The pair whose action is: apply self first, then other."""
        return PermPair(
            tuple(self.sigma[j] for j in other.sigma),
            tuple(self.tau[j] for j in other.tau),
        )

    def full_perm(self, alpha: int) -> np.ndarray:
        """One array permuting all alpha + beta coordinates at once."""
        return np.array(
            list(self.sigma) + [alpha + j for j in self.tau], dtype=np.int64
        )


def apply_perm_pair(pair: PermPair, w: MixedWord) -> MixedWord:
    """Image word: binary[i] = w.binary[sigma[i]], same for tau."""
    if (len(pair.sigma), len(pair.tau)) != w.shape:
        raise ShapeError(
            f"pair sized {(len(pair.sigma), len(pair.tau))} cannot act on shape {w.shape}"
        )
    return MixedWord(
        tuple(w.binary[i] for i in pair.sigma),
        tuple(w.quaternary[j] for j in pair.tau),
    )


def image_code(
    pair: PermPair, code: AdditiveCode, limit: int = DEFAULT_ENUM_LIMIT
) -> AdditiveCode:
    """The code of all images of codewords under the pair."""
    if (len(pair.sigma), len(pair.tau)) != (code.alpha, code.beta):
        raise ShapeError("pair does not match the code shape")
    rows = code.matrix(limit)[:, pair.full_perm(code.alpha)]
    gens = [apply_perm_pair(pair, g) for g in code.generators]
    return AdditiveCode._from_rows(code.alpha, code.beta, _lex_rows(rows), gens)


def _column_classes(mat: np.ndarray, lo: int, hi: int) -> list[tuple]:
    """Label each column in [lo, hi) by the multiset of its values."""
    return [tuple(sorted(int(x) for x in mat[:, j])) for j in range(lo, hi)]


def _matching_perms(src_labels: list, dst_labels: list) -> list[tuple[int, ...]]:
    """All one-line perms p with src_labels[p[i]] == dst_labels[i], lex sorted.

    Built classwise (positions of one label permute among themselves), so
    heavily symmetric inputs do not force a full n! sweep.
    """
    n = len(dst_labels)
    if sorted(src_labels) != sorted(dst_labels):
        return []
    src_positions: dict = {}
    for j, lab in enumerate(src_labels):
        src_positions.setdefault(lab, []).append(j)
    dst_positions: dict = {}
    for i, lab in enumerate(dst_labels):
        dst_positions.setdefault(lab, []).append(i)
    labels = list(src_positions)
    choices = []
    for lab in labels:
        if len(src_positions[lab]) != len(dst_positions.get(lab, [])):
            return []
        choices.append(itertools.permutations(src_positions[lab]))
    perms = []
    for combo in itertools.product(*choices):
        p = [0] * n
        for lab, assignment in zip(labels, combo):
            for i, j in zip(dst_positions[lab], assignment):
                p[i] = j
        perms.append(tuple(p))
    perms.sort()
    return perms


def _pair_space(alpha: int, beta: int) -> int:
    return factorial(alpha) * factorial(beta)


@dataclass(frozen=True)
class PAutGroup:
    """All coordinate-permutation symmetries of a code."""

    elements: tuple[PermPair, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, pair: PermPair) -> bool:
        return pair in set(self.elements)

    def is_full(self, alpha: int, beta: int) -> bool:
        return self.order == _pair_space(alpha, beta)


def _verify_group(elements: tuple[PermPair, ...]) -> None:
    """Assert the group axioms on a computed element set.

    Closure is checked on all pairs when that is affordable, otherwise on
    a deterministic sample; these assertions exist to catch scan bugs and
    must never fire.
    """
    members = set(elements)
    assert elements, "a permutation group cannot be empty"
    alpha = len(elements[0].sigma)
    beta = len(elements[0].tau)
    assert PermPair.identity(alpha, beta) in members, "identity missing"
    for p in elements:
        assert p.inverse() in members, f"inverse of {p} missing"
    n = len(elements)
    if n * n <= 1_000_000:
        pairs = itertools.product(elements, elements)
    else:
        rng = np.random.default_rng(0)
        idx = rng.integers(0, n, size=(200_000, 2))
        pairs = ((elements[i], elements[j]) for i, j in idx)
    for a, b in pairs:
        assert a.compose(b) in members, f"composition {a} * {b} escapes the set"


def paut(
    code: AdditiveCode,
    limit: int = DEFAULT_PAIR_LIMIT,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
) -> PAutGroup:
    """Exhaustive scan for every pair mapping the code onto itself."""
    space = _pair_space(code.alpha, code.beta)
    if space > limit:
        raise CapError(
            f"PAut scan over {space} permutation pairs exceeds cap {limit}"
        )
    mat = code.matrix(enum_limit)
    bin_labels = _column_classes(mat, 0, code.alpha)
    quat_labels = _column_classes(mat, code.alpha, code.alpha + code.beta)
    sigmas = _matching_perms(bin_labels, bin_labels)
    taus = _matching_perms(quat_labels, quat_labels)
    found = []
    for sigma in sigmas:
        for tau in taus:
            pair = PermPair(sigma, tau)
            if kernels.permuted_equals(mat, pair.full_perm(code.alpha), mat):
                found.append(pair)
    group = PAutGroup(elements=tuple(found))
    _verify_group(group.elements)
    return group


def find_equivalence(
    code1: AdditiveCode,
    code2: AdditiveCode,
    limit: int = DEFAULT_PAIR_LIMIT,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
) -> PermPair | None:
    """Lexicographically first pair carrying code1 onto code2, if any.

    Cheap invariants (size, weight profile, column multisets) filter
    before any permutations are tried.
    """
    if (code1.alpha, code1.beta) != (code2.alpha, code2.beta):
        raise ShapeError("codes live in different ambient spaces")
    space = _pair_space(code1.alpha, code1.beta)
    if space > limit:
        raise CapError(
            f"equivalence scan over {space} permutation pairs exceeds cap {limit}"
        )
    if code1.size(enum_limit) != code2.size(enum_limit):
        return None
    if weight_profile(code1, enum_limit) != weight_profile(code2, enum_limit):
        return None
    mat1 = code1.matrix(enum_limit)
    mat2 = code2.matrix(enum_limit)
    alpha = code1.alpha
    sigmas = _matching_perms(
        _column_classes(mat1, 0, alpha), _column_classes(mat2, 0, alpha)
    )
    taus = _matching_perms(
        _column_classes(mat1, alpha, alpha + code1.beta),
        _column_classes(mat2, alpha, alpha + code2.beta),
    )
    for sigma in sigmas:
        for tau in taus:
            pair = PermPair(sigma, tau)
            if kernels.permuted_equals(mat1, pair.full_perm(alpha), mat2):
                return pair
    return None


def paut_order_formula(stats: GeneratorStats, alpha: int) -> int:
    """(l! + (alpha-l)! - 1) * (k! + s! + q! + r! - 3) for a single generator.

    l counts binary units, k zero divisors, s quaternary zeros, q ones,
    r threes.  Evaluated verbatim; the exhaustive scan is the ground
    truth and callers are expected to compare the two.
    """
    l = stats.units_binary
    left = factorial(l) + factorial(alpha - l) - 1
    right = (
        factorial(stats.zero_divisors)
        + factorial(stats.zeros_quaternary)
        + factorial(stats.ones)
        + factorial(stats.threes)
        - 3
    )
    return left * right


@dataclass(frozen=True)
class CyclicPautAudit:
    """Both sides of the cyclic <-> full-PAut claim, computed independently."""

    cyclic: bool
    paut_full: bool
    paut_order: int
    full_order: int

    @property
    def theorem_holds(self) -> bool:
        return self.cyclic == self.paut_full


def audit_cyclic_paut(
    code: AdditiveCode,
    limit: int = DEFAULT_PAIR_LIMIT,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
) -> CyclicPautAudit:
    """Compare shift-stability with PAut being all of S_alpha x S_beta.

    The two sides are computed independently and reported as found; a
    disagreement is a finding, not an error.
    """
    cyclic = code.is_cyclic(enum_limit)
    group = paut(code, limit, enum_limit)
    return CyclicPautAudit(
        cyclic=cyclic,
        paut_full=group.is_full(code.alpha, code.beta),
        paut_order=group.order,
        full_order=_pair_space(code.alpha, code.beta),
    )


def paut_report(
    code: AdditiveCode,
    limit: int = DEFAULT_PAIR_LIMIT,
    enum_limit: int = DEFAULT_ENUM_LIMIT,
) -> dict:
    """JSON-ready PAut report with the formula comparison when it applies."""
    group = paut(code, limit, enum_limit)
    formula = None
    if len(code.generators) == 1:
        from .classify import generator_stats

        formula = paut_order_formula(generator_stats(code.generators[0]), code.alpha)
    return {
        "alpha": code.alpha,
        "beta": code.beta,
        "size": code.size(enum_limit),
        "order": group.order,
        "elements": [
            {"sigma": list(p.sigma), "tau": list(p.tau)} for p in sorted(
                group.elements, key=lambda p: (p.sigma, p.tau)
            )
        ],
        "formula_order": formula,
        "formula_matches": None if formula is None else formula == group.order,
    }
