"""Exact arithmetic on mixed binary/quaternary words.

A mixed word (u|v) has a binary part u of length alpha with entries mod 2
and a quaternary part v of length beta with entries mod 4.  Words are
immutable values; every operation returns a new word, so everything here
is safe for unrestricted concurrent use.

The text literal for a word is the binary digits, a ``|`` separator and
the quaternary digits, e.g. ``10|31``.  A part may be empty: ``|31`` has
alpha = 0 and ``10|`` has beta = 0.
"""

from __future__ import annotations

from dataclasses import dataclass

# Image of each Z4 digit under the Gray map, and its Lee weight.
GRAY_TABLE = {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
LEE_TABLE = {0: 0, 1: 1, 2: 2, 3: 1}


class ShapeError(ValueError):
    """Operands do not share the same (alpha, beta) shape."""


class WordSyntaxError(ValueError):
    """A word literal could not be parsed; ``column`` is 1-based."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


@dataclass(frozen=True)
class MixedWord:
    """An element (u|v) of Z2^alpha x Z4^beta."""

    binary: tuple[int, ...]
    quaternary: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "binary", tuple(int(x) for x in self.binary))
        object.__setattr__(self, "quaternary", tuple(int(x) for x in self.quaternary))
        if not self.binary and not self.quaternary:
            raise ShapeError("a word needs alpha + beta > 0")
        for x in self.binary:
            if x not in (0, 1):
                raise ValueError(f"binary entry {x} not in {{0,1}}")
        for x in self.quaternary:
            if x not in (0, 1, 2, 3):
                raise ValueError(f"quaternary entry {x} not in {{0,1,2,3}}")

    @property
    def alpha(self) -> int:
        return len(self.binary)

    @property
    def beta(self) -> int:
        return len(self.quaternary)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.binary), len(self.quaternary))

    @classmethod
    def zero(cls, alpha: int, beta: int) -> "MixedWord":
        return cls((0,) * alpha, (0,) * beta)

    def is_zero(self) -> bool:
        return not any(self.binary) and not any(self.quaternary)

    def __add__(self, other: "MixedWord") -> "MixedWord":
        return add_words(self, other)

    def __neg__(self) -> "MixedWord":
        return scalar_mul(3, self)

    def __sub__(self, other: "MixedWord") -> "MixedWord":
        return add_words(self, -other)

    def __rmul__(self, k: int) -> "MixedWord":
        return scalar_mul(k, self)

    def __str__(self) -> str:
        return word_str(self)

    def __repr__(self) -> str:
        return f"<word {word_str(self)}>"


def _check_shapes(a: MixedWord, b: MixedWord) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")


def add_words(a: MixedWord, b: MixedWord) -> MixedWord:
    """Componentwise sum, mod 2 on the binary part and mod 4 on the rest."""
    _check_shapes(a, b)
    return MixedWord(
        tuple((x + y) & 1 for x, y in zip(a.binary, b.binary)),
        tuple((x + y) & 3 for x, y in zip(a.quaternary, b.quaternary)),
    )


def scalar_mul(k: int, a: MixedWord) -> MixedWord:
    """k.a with k acting mod 2 on the binary part and mod 4 on the rest."""
    return MixedWord(
        tuple((k * x) & 1 for x in a.binary),
        tuple((k * x) & 3 for x in a.quaternary),
    )


def gray_scalar(x: int) -> tuple[int, int]:
    """Gray image of one Z4 digit: 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0)."""
    return GRAY_TABLE[x & 3]


def gray_word(a: MixedWord) -> tuple[int, ...]:
    """Binary image of (u|v): u followed by the Gray image of each v digit.

    The result has length alpha + 2*beta.
    """
    out = list(a.binary)
    for x in a.quaternary:
        out.extend(GRAY_TABLE[x])
    return tuple(out)


def hamming_weight(bits) -> int:
    """Number of nonzero entries of a binary word."""
    return sum(1 for b in bits if b)


def lee_weight(a: MixedWord) -> int:
    """Hamming weight of the binary part plus Lee weight of the quaternary part.

    Equals ``hamming_weight(gray_word(a))``.
    """
    return sum(a.binary) + sum(LEE_TABLE[x] for x in a.quaternary)


def lee_distance(a: MixedWord, b: MixedWord) -> int:
    """Lee weight of a - b."""
    _check_shapes(a, b)
    return lee_weight(a - b)


def hamming_distance_mixed(a: MixedWord, b: MixedWord) -> int:
    """Number of coordinates (both parts) where a and b differ."""
    _check_shapes(a, b)
    return sum(x != y for x, y in zip(a.binary, b.binary)) + sum(
        x != y for x, y in zip(a.quaternary, b.quaternary)
    )


def inner_product(a: MixedWord, b: MixedWord) -> int:
    """2<u1,u2> + <v1,v2> in Z4, with binary entries lifted to {0,1} in Z4."""
    _check_shapes(a, b)
    s = 2 * sum(x * y for x, y in zip(a.binary, b.binary))
    s += sum(x * y for x, y in zip(a.quaternary, b.quaternary))
    return s & 3


def parse_word(text: str) -> MixedWord:
    """Parse a word literal such as ``10|31``, ``|31`` or ``10|``."""
    bar = text.count("|")
    if bar != 1:
        raise WordSyntaxError(
            f"word literal needs exactly one '|', got {bar} in {text!r}"
        )
    left, right = text.split("|")
    binary, quaternary = [], []
    for col, ch in enumerate(left, start=1):
        if ch not in "01":
            raise WordSyntaxError(f"binary digit {ch!r} not in 0..1", column=col)
        binary.append(int(ch))
    for col, ch in enumerate(right, start=len(left) + 2):
        if ch not in "0123":
            raise WordSyntaxError(f"quaternary digit {ch!r} not in 0..3", column=col)
        quaternary.append(int(ch))
    if not binary and not quaternary:
        raise WordSyntaxError("empty word literal")
    return MixedWord(tuple(binary), tuple(quaternary))


def word_str(w: MixedWord) -> str:
    """Literal form of a word, e.g. ``10|31``."""
    return "".join(map(str, w.binary)) + "|" + "".join(map(str, w.quaternary))


def as_word(value, shape: tuple[int, int] | None = None) -> MixedWord:
    """Coerce a MixedWord or a word literal; optionally check its shape."""
    w = parse_word(value) if isinstance(value, str) else value
    if not isinstance(w, MixedWord):
        raise TypeError(f"expected MixedWord or literal, got {type(value).__name__}")
    if shape is not None and w.shape != shape:
        raise ShapeError(f"word {word_str(w)} has shape {w.shape}, expected {shape}")
    return w
