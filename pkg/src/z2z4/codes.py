"""Additive codes in Z2^alpha x Z4^beta.

An :class:`AdditiveCode` is the subgroup generated by its generator words
under componentwise addition.  Enumeration is by breadth-first closure of
the generators, cached as a lex-sorted uint8 matrix, so every query after
the first is a read on an immutable value.  Concurrent first enumerations
may both compute; they produce the same matrix and either result wins.

Brute-force scans (enumeration, dual computation) are guarded by size
caps so a typo in a generator file cannot wedge the process.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .words import MixedWord, ShapeError, as_word, word_str

DEFAULT_ENUM_LIMIT = 1 << 20
DEFAULT_AMBIENT_LIMIT = 1 << 24


class CapError(RuntimeError):
    """A brute-force scan would exceed the configured cap."""


class ContainmentError(ValueError):
    """A word expected to lie in a code does not."""


def _lex_rows(mat: np.ndarray) -> np.ndarray:
    if len(mat) < 2:
        return mat
    return mat[np.lexsort(mat.T[::-1])]


def _word_to_row(w: MixedWord) -> np.ndarray:
    return np.array(w.binary + w.quaternary, dtype=np.uint8)


def _row_to_word(row, alpha: int) -> MixedWord:
    coords = tuple(int(x) for x in row)
    return MixedWord(coords[:alpha], coords[alpha:])


def _closure_rows(gen_rows: np.ndarray, mods: np.ndarray, limit: int, ambient: int) -> np.ndarray:
    """Smallest additive group containing the generator rows, lex-sorted.

    Raises CapError as soon as the closure passes ``limit``.
    """
    width = len(mods)
    zero = np.zeros(width, dtype=np.uint8)
    rows = [zero]
    seen = {zero.tobytes()}
    if gen_rows.size:
        gens = np.unique(gen_rows, axis=0)
        frontier = np.zeros((1, width), dtype=np.uint8)
        while len(frontier):
            cand = (frontier[:, None, :] + gens[None, :, :]) % mods
            cand = np.unique(cand.reshape(-1, width), axis=0)
            fresh = []
            for row in cand:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
            if len(seen) > limit:
                bound = min(ambient, 4 ** len(gens))
                raise CapError(
                    f"enumeration cap {limit} exceeded; "
                    f"projected size bound is {bound}"
                )
            rows.extend(fresh)
            frontier = np.array(fresh, dtype=np.uint8) if fresh else np.zeros((0, width), np.uint8)
    return _lex_rows(np.array(rows, dtype=np.uint8))


class AdditiveCode:
    """The additive code spanned by generator words in Z2^alpha x Z4^beta.

    Generators may be :class:`MixedWord` values or word literals like
    ``"10|11"``.  An empty generator list gives the zero code.
    """

    def __init__(self, alpha: int, beta: int, generators=()):
        if alpha < 0 or beta < 0 or alpha + beta == 0:
            raise ShapeError(f"need alpha, beta >= 0 with alpha + beta > 0, got ({alpha}, {beta})")
        self.alpha = int(alpha)
        self.beta = int(beta)
        self.generators = tuple(as_word(g, (self.alpha, self.beta)) for g in generators)
        self._matrix: np.ndarray | None = None
        self._keys: frozenset | None = None

    @classmethod
    def _from_rows(cls, alpha: int, beta: int, rows: np.ndarray, generators=()) -> "AdditiveCode":
        code = cls(alpha, beta, generators)
        mat = np.ascontiguousarray(rows, dtype=np.uint8)
        code._matrix = _lex_rows(mat)
        return code

    # -- enumeration ----------------------------------------------------

    @property
    def width(self) -> int:
        return self.alpha + self.beta

    @property
    def ambient_size(self) -> int:
        return (2**self.alpha) * (4**self.beta)

    @property
    def mods(self) -> np.ndarray:
        return np.array([2] * self.alpha + [4] * self.beta, dtype=np.uint8)

    def matrix(self, limit: int = DEFAULT_ENUM_LIMIT) -> np.ndarray:
        """Lex-sorted uint8 matrix of all codewords (cached after first call)."""
        if self._matrix is None:
            if self.generators:
                gen_rows = np.stack([_word_to_row(g) for g in self.generators])
            else:
                gen_rows = np.zeros((0, self.width), dtype=np.uint8)
            self._matrix = _closure_rows(gen_rows, self.mods, limit, self.ambient_size)
        return self._matrix

    def keys(self, limit: int = DEFAULT_ENUM_LIMIT) -> frozenset:
        if self._keys is None:
            mat = self.matrix(limit)
            self._keys = frozenset(row.tobytes() for row in mat)
        return self._keys

    def codewords(self, limit: int = DEFAULT_ENUM_LIMIT) -> tuple[MixedWord, ...]:
        """All codewords in lexicographic coordinate order."""
        return tuple(_row_to_word(row, self.alpha) for row in self.matrix(limit))

    def size(self, limit: int = DEFAULT_ENUM_LIMIT) -> int:
        return len(self.matrix(limit))

    def __len__(self) -> int:
        return self.size()

    def contains(self, word, limit: int = DEFAULT_ENUM_LIMIT) -> bool:
        w = as_word(word)
        if w.shape != (self.alpha, self.beta):
            raise ShapeError(f"word shape {w.shape} does not match code shape {(self.alpha, self.beta)}")
        return _word_to_row(w).tobytes() in self.keys(limit)

    def __contains__(self, word) -> bool:
        return self.contains(word)

    def is_zero_code(self) -> bool:
        return self.size() == 1

    def __eq__(self, other) -> bool:
        """Set equality of codeword sets (triggers enumeration)."""
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return (
            (self.alpha, self.beta) == (other.alpha, other.beta)
            and np.array_equal(self.matrix(), other.matrix())
        )

    __hash__ = None  # codes compare as sets, not identities

    def __repr__(self) -> str:
        gens = ",".join(word_str(g) for g in self.generators)
        return f"<AdditiveCode alpha={self.alpha} beta={self.beta} gens=[{gens}]>"

    # -- derived codes --------------------------------------------------

    def dual(self, limit: int = DEFAULT_AMBIENT_LIMIT) -> "AdditiveCode":
        """All ambient words orthogonal to every generator (hence to all of C).

        The returned code carries a minimal generating subset picked
        greedily in lex order; set equality is the contract, the
        generator list is one choice among many.
        """
        if self.ambient_size > limit:
            raise CapError(
                f"dual scan over {self.ambient_size} ambient words exceeds cap {limit}"
            )
        if self.generators:
            gen_rows = np.stack([_word_to_row(g) for g in self.generators])
        else:
            gen_rows = np.zeros((0, self.width), dtype=np.uint8)
        rows = kernels.ambient_orthogonal(gen_rows, self.alpha, self.beta)
        gens = _greedy_generators(rows, self.alpha, self.beta)
        return AdditiveCode._from_rows(self.alpha, self.beta, rows, gens)

    def subcode(self, generators) -> "SubcodeWitness":
        """Witness pairing this code with the span of member words."""
        gens = [as_word(g, (self.alpha, self.beta)) for g in generators]
        for g in gens:
            if g not in self:
                raise ContainmentError(f"generator {word_str(g)} is not a codeword")
        return SubcodeWitness(parent=self, sub=AdditiveCode(self.alpha, self.beta, gens))

    def replicate(self, t: int) -> "AdditiveCode":
        """Code of the words (x...x|y...y), each part repeated t times."""
        if t < 1:
            raise ValueError("replication count must be >= 1")
        gens = [
            MixedWord(g.binary * t, g.quaternary * t) for g in self.generators
        ]
        code = AdditiveCode(self.alpha * t, self.beta * t, gens)
        if self._matrix is not None:
            mat = self._matrix
            code._matrix = _lex_rows(
                np.hstack([np.tile(mat[:, : self.alpha], t), np.tile(mat[:, self.alpha :], t)])
            )
        return code

    def gray_image(self, limit: int = DEFAULT_ENUM_LIMIT) -> "BinaryCode":
        """Componentwise Gray image of the codeword set (not always linear)."""
        from .words import gray_word

        words = frozenset(gray_word(c) for c in self.codewords(limit))
        return BinaryCode(length=self.alpha + 2 * self.beta, words=words)

    def is_cyclic(self, limit: int = DEFAULT_ENUM_LIMIT) -> bool:
        """Is the codeword set stable under the simultaneous right rotation?"""
        mat = self.matrix(limit)
        shifted = np.hstack(
            [np.roll(mat[:, : self.alpha], 1, axis=1), np.roll(mat[:, self.alpha :], 1, axis=1)]
        )
        return bool(np.array_equal(_lex_rows(shifted), mat))


@dataclass(frozen=True)
class SubcodeWitness:
    """A code together with a subcode of it (same ambient shape)."""

    parent: AdditiveCode
    sub: AdditiveCode


@dataclass(frozen=True)
class BinaryCode:
    """A set of equal-length binary words, e.g. a Gray image."""

    length: int
    words: frozenset

    def __len__(self) -> int:
        return len(self.words)


def is_linear_binary(code: BinaryCode) -> bool:
    """True iff the word set contains zero and is closed under XOR."""
    words = code.words
    if (0,) * code.length not in words:
        return False
    return all(
        tuple(x ^ y for x, y in zip(a, b)) in words for a in words for b in words
    )


def cyclic_shift(w: MixedWord) -> MixedWord:
    """Simultaneous right rotation of the binary and quaternary parts."""
    u, v = w.binary, w.quaternary
    return MixedWord(u[-1:] + u[:-1], v[-1:] + v[:-1])


def _greedy_generators(rows: np.ndarray, alpha: int, beta: int) -> list[MixedWord]:
    """Minimal generating subset of a group matrix, scanned in lex order.

    ``rows`` must be the full (closed) codeword set.
    """
    mods = np.array([2] * alpha + [4] * beta, dtype=np.uint8)
    ambient = (2**alpha) * (4**beta)
    target = len(rows)
    span_keys = {np.zeros(len(mods), dtype=np.uint8).tobytes()}
    gen_rows: list[np.ndarray] = []
    gens: list[MixedWord] = []
    for row in _lex_rows(np.asarray(rows, dtype=np.uint8)):
        if len(span_keys) == target:
            break
        if row.tobytes() in span_keys:
            continue
        gen_rows.append(row)
        gens.append(_row_to_word(row, alpha))
        span = _closure_rows(np.array(gen_rows, dtype=np.uint8), mods, target, ambient)
        span_keys = {r.tobytes() for r in span}
    return gens
