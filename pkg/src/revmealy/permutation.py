"""Permutations as 0/1 matrices, and exact doubly stochastic matrices.

Matrix convention: row ``i`` holds its single 1 in column ``target[i]``,
i.e. ``M[i, j] = 1`` iff configuration ``i`` evolves to configuration ``j``
(row = source).  This is the transpose of the usual "acts on basis column
vectors" convention.  With it, a label vector evolves by
``out[i] = labels[target[i]]`` (see :func:`apply`).

Stochastic matrices are handled with :class:`fractions.Fraction` only.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterator, Sequence

import numpy as np

from .errors import DomainError, ParseError

__all__ = [
    "Permutation",
    "ConfigurationVector",
    "BirkhoffDecomposition",
    "compose",
    "inverse",
    "power",
    "order",
    "enumerate_permutations",
    "apply",
    "is_doubly_stochastic",
    "birkhoff_decompose",
    "parse_rational_matrix",
    "parse_permutation_matrix",
    "format_matrix",
    "format_rational",
]

MAX_ENUMERATE_DEGREE = 9


@dataclass(frozen=True)
class Permutation:
    target: tuple[int, ...]

    def __post_init__(self):
        target = tuple(int(t) for t in self.target)
        if sorted(target) != list(range(len(target))):
            raise DomainError(f"not a bijection on 0..{len(target) - 1}: {target}")
        object.__setattr__(self, "target", target)

    @property
    def n(self) -> int:
        return len(self.target)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_matrix(cls, m) -> "Permutation":
        m = np.asarray(m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DomainError(f"permutation matrix must be square, got shape {m.shape}")
        if not np.isin(m, (0, 1)).all():
            raise DomainError("permutation matrix entries must be 0 or 1")
        for r, row_sum in enumerate(m.sum(axis=1)):
            if row_sum != 1:
                raise DomainError(f"row {r} has {row_sum} nonzero entries")
        for c, col_sum in enumerate(m.sum(axis=0)):
            if col_sum != 1:
                raise DomainError(f"column {c} has {col_sum} nonzero entries")
        return cls(tuple(int(j) for j in m.argmax(axis=1)))

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        m[np.arange(self.n), self.target] = 1
        return m

    def __call__(self, i: int) -> int:
        return self.target[i]

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, fixed points included."""
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            k = start
            while not seen[k]:
                seen[k] = True
                cyc.append(k)
                k = self.target[k]
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(t == i for i, t in enumerate(self.target))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``: ``result(i) = q(p(i))``.

    In the row-source matrix convention this is the matrix product ``P @ Q``.
    """
    if p.n != q.n:
        raise DomainError(f"degree mismatch: {p.n} vs {q.n}")
    return Permutation(tuple(q.target[j] for j in p.target))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, j in enumerate(p.target):
        inv[j] = i
    return Permutation(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = Permutation.identity(p.n)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def order(p: Permutation) -> int:
    return math.lcm(*(len(c) for c in p.cycles())) if p.n else 1


def enumerate_permutations(n: int) -> list[Permutation]:
    """All ``n!`` permutations of degree ``n`` in lexicographic order of targets."""
    if not 1 <= n <= MAX_ENUMERATE_DEGREE:
        raise DomainError(f"degree must be in 1..{MAX_ENUMERATE_DEGREE}, got {n}")
    return [Permutation(t) for t in itertools.permutations(range(n))]


@dataclass(frozen=True)
class ConfigurationVector:
    labels: tuple[Hashable, ...]
    step: int = 0

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if self.step < 0:
            raise DomainError("step counter must be nonnegative")


def apply(p: Permutation, v: ConfigurationVector) -> ConfigurationVector:
    """One evolution step of a label vector: ``out[i] = v.labels[p(i)]``."""
    if len(v.labels) != p.n:
        raise DomainError(f"vector length {len(v.labels)} does not match degree {p.n}")
    return ConfigurationVector(tuple(v.labels[j] for j in p.target), v.step + 1)


# -- doubly stochastic matrices ---------------------------------------------

RationalMatrix = Sequence[Sequence[Fraction]]


def _as_fractions(m) -> list[list[Fraction]]:
    rows = [[Fraction(x) for x in row] for row in m]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise DomainError("matrix must be square and nonempty")
    return rows


def _stochastic_violation(rows: list[list[Fraction]]) -> str | None:
    n = len(rows)
    for r, row in enumerate(rows):
        for c, x in enumerate(row):
            if x < 0:
                return f"entry ({r},{c}) = {format_rational(x)} is negative"
    for r, row in enumerate(rows):
        s = sum(row, Fraction(0))
        if s != 1:
            return f"row {r} sums to {format_rational(s)}"
    for c in range(n):
        s = sum((rows[r][c] for r in range(n)), Fraction(0))
        if s != 1:
            return f"column {c} sums to {format_rational(s)}"
    return None


def is_doubly_stochastic(m) -> bool:
    return _stochastic_violation(_as_fractions(m)) is None


@dataclass(frozen=True)
class BirkhoffDecomposition:
    terms: tuple[tuple[Fraction, Permutation], ...]

    def matrix(self) -> list[list[Fraction]]:
        """Reconstruct ``sum(w * P)`` exactly."""
        n = self.terms[0][1].n
        out = [[Fraction(0)] * n for _ in range(n)]
        for w, p in self.terms:
            for i, j in enumerate(p.target):
                out[i][j] += w
        return out

    def total_weight(self) -> Fraction:
        return sum((w for w, _ in self.terms), Fraction(0))


def _augment(row: int, adj, match_col: dict[int, int], banned_cols: set[int], seen: set[int]) -> bool:
    for c in adj[row]:
        if c in banned_cols or c in seen:
            continue
        seen.add(c)
        if c not in match_col or _augment(match_col[c], adj, match_col, banned_cols, seen):
            match_col[c] = row
            return True
    return False


def _has_perfect_matching(rows: Sequence[int], adj, banned_cols: set[int]) -> bool:
    match_col: dict[int, int] = {}
    return all(_augment(r, adj, match_col, banned_cols, set()) for r in rows)


def _smallest_matching(support: list[list[bool]]) -> tuple[int, ...] | None:
    """Lexicographically smallest perfect matching on the positive-entry graph.

    Rows are fixed in order; each takes the smallest free column that still
    leaves a perfect matching for the remaining rows.
    """
    n = len(support)
    adj = [[c for c in range(n) if support[r][c]] for r in range(n)]
    used: set[int] = set()
    chosen = []
    for r in range(n):
        for c in adj[r]:
            if c in used:
                continue
            used.add(c)
            if _has_perfect_matching(range(r + 1, n), adj, used):
                chosen.append(c)
                break
            used.discard(c)
        else:
            return None
    return tuple(chosen)


def birkhoff_decompose(m) -> BirkhoffDecomposition:
    """Exact convex combination of permutation matrices equal to ``m``.

    Each round takes the lexicographically smallest perfect matching on the
    strictly positive entries and peels it off with weight equal to its
    smallest entry, zeroing at least one entry.  The remainder stays a
    multiple of a doubly stochastic matrix, so a matching always exists,
    and the number of rounds is at most ``(n - 1)**2 + 1``.
    """
    rows = _as_fractions(m)
    problem = _stochastic_violation(rows)
    if problem:
        raise DomainError(f"not doubly stochastic: {problem}")
    terms = []
    remaining = Fraction(1)
    while remaining > 0:
        match = _smallest_matching([[x > 0 for x in row] for row in rows])
        if match is None:  # unreachable for doubly stochastic input
            raise AssertionError("no perfect matching on positive entries")
        w = min(rows[i][j] for i, j in enumerate(match))
        for i, j in enumerate(match):
            rows[i][j] -= w
        terms.append((w, Permutation(match)))
        remaining -= w
    return BirkhoffDecomposition(tuple(terms))


# -- text formats ------------------------------------------------------------

_RATIONAL = re.compile(r"^[+-]?(\d+(/\d+)?|\d*\.\d+|\d+\.)$")


def _parse_rational(tok: str, lineno: int) -> Fraction:
    if not _RATIONAL.match(tok):
        raise ParseError(f"bad rational entry {tok!r}", lineno)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", lineno) from None


def _matrix_rows(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_rational_matrix(text: str) -> list[list[Fraction]]:
    """One row per line; entries ``p/q``, integers or finite decimals."""
    rows, width = [], None
    for lineno, toks in _matrix_rows(text):
        if width is None:
            width = len(toks)
        elif len(toks) != width:
            raise ParseError(f"row has {len(toks)} entries, expected {width}", lineno)
        rows.append([_parse_rational(t, lineno) for t in toks])
    if not rows:
        raise ParseError("empty matrix")
    if len(rows) != width:
        raise ParseError(f"matrix is {len(rows)}x{width}, not square")
    return rows


def parse_permutation_matrix(text: str) -> Permutation:
    rows = []
    for lineno, toks in _matrix_rows(text):
        if any(t not in ("0", "1") for t in toks):
            raise ParseError("permutation matrix entries must be 0 or 1", lineno)
        rows.append([int(t) for t in toks])
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ParseError("permutation matrix must be square")
    try:
        return Permutation.from_matrix(rows)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_matrix(m) -> str:
    if isinstance(m, Permutation):
        m = m.matrix()
    return "\n".join(" ".join(format_rational(x) for x in row) for row in m) + "\n"
