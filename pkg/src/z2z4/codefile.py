"""Text format for code files.

A code file holds ``alpha=<int>`` and ``beta=<int>`` lines followed by
one generator per line in word-literal syntax (``10|11``).  Anything
after ``#`` is a comment.  Export is canonical: the header followed by
every codeword in lexicographic order, which re-parses to a set-equal
code.
"""

from __future__ import annotations

from .codes import DEFAULT_ENUM_LIMIT, AdditiveCode
from .words import WordSyntaxError, parse_word, word_str


class ParseError(ValueError):
    """A code file is malformed; carries path, line and column."""

    def __init__(self, message: str, path: str = "<text>", line: int | None = None, column: int | None = None):
        where = path
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line
        self.column = column


def parse_code_text(text: str, path: str = "<text>") -> AdditiveCode:
    """Parse code-file content into a validated AdditiveCode."""
    alpha: int | None = None
    beta: int | None = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, value = line.partition("=")
            key = key.strip().lower()
            if key not in ("alpha", "beta"):
                raise ParseError(f"unknown header {key!r}", path, lineno)
            try:
                number = int(value.strip())
            except ValueError:
                raise ParseError(f"{key} needs an integer, got {value.strip()!r}", path, lineno) from None
            if number < 0:
                raise ParseError(f"{key} must be nonnegative", path, lineno)
            if key == "alpha":
                alpha = number
            else:
                beta = number
            continue
        if alpha is None or beta is None:
            raise ParseError("alpha= and beta= must come before generator rows", path, lineno)
        try:
            w = parse_word(line)
        except WordSyntaxError as exc:
            raise ParseError(str(exc), path, lineno, exc.column) from None
        if w.shape != (alpha, beta):
            raise ParseError(
                f"row shape {w.shape} does not match alpha={alpha}, beta={beta}", path, lineno
            )
        rows.append(w)
    if alpha is None or beta is None:
        raise ParseError("missing alpha= or beta= header", path)
    if alpha + beta == 0:
        raise ParseError("alpha + beta must be positive", path)
    return AdditiveCode(alpha, beta, rows)


def parse_code_file(path) -> AdditiveCode:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_code_text(handle.read(), str(path))


def export_code(code: AdditiveCode, limit: int = DEFAULT_ENUM_LIMIT) -> str:
    """Canonical text form: header plus all codewords in lex order."""
    lines = [f"alpha={code.alpha}", f"beta={code.beta}"]
    lines.extend(word_str(w) for w in code.codewords(limit))
    return "\n".join(lines) + "\n"
