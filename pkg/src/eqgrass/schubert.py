"""Schubert cells of real Grassmannians and their equivariant weights.

A point of Gr_k(R^p) lies in exactly one Schubert cell, indexed by the
set of pivot columns of its reduced matrix.  We use the convention in
which the pivot of a row is its last nonzero entry, so the free entries
of row i sit at columns j < c_i not occupied by other pivots; this makes
Gr_k of a prefix of the coordinates a subcomplex, which the quotient
construction relies on.

Choosing an ordered identification of R^{p,q} as a sum of one-dimensional
representations (a sign word) makes each cell an equivariant disc: a free
entry acquires the sign action exactly when its own column and its row's
pivot column carry different letters.  The first page of the filtration
spectral sequence then has one generator per cell, placed at
(dimension, weight).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .modalg import Bidegree, FreeModule


@dataclass(frozen=True)
class SignWord:
    """An ordered sum of trivial (+) and sign (-) one-dimensional reps."""

    signs: tuple[bool, ...]  # True where the letter is the sign rep

    @classmethod
    def from_string(cls, text: str) -> "SignWord":
        signs = []
        for ch in text:
            if ch == "+":
                signs.append(False)
            elif ch == "-":
                signs.append(True)
            else:
                raise ValueError(f"sign word may contain only '+'/'-', got {ch!r}")
        return cls(tuple(signs))

    @property
    def p(self) -> int:
        return len(self.signs)

    @property
    def q(self) -> int:
        return sum(self.signs)

    def __str__(self) -> str:
        return "".join("-" if s else "+" for s in self.signs)

    def prefix(self, m: int) -> "SignWord":
        return SignWord(self.signs[:m])


class SchubertCell(NamedTuple):
    pivots: tuple[int, ...]  # strictly increasing, 1-based columns

    def dimension(self) -> int:
        return sum(c - i for i, c in enumerate(self.pivots, start=1))


def enumerate_cells(k: int, p: int) -> list[SchubertCell]:
    """All C(p, k) pivot sets in lexicographic order."""
    if k < 0 or p < 0 or k > p:
        raise ValueError(f"need 0 <= k <= p, got k={k}, p={p}")
    return [SchubertCell(c) for c in combinations(range(1, p + 1), k)]


def cell_bidegree(cell: SchubertCell, word: SignWord) -> Bidegree:
    """Dimension and weight of a cell under the given sign word.

    The dimension counts the free entries; the weight counts the free
    entries whose column letter differs from their row's pivot letter.
    """
    pivots = cell.pivots
    if pivots and word.p < pivots[-1]:
        raise ValueError(
            f"sign word of length {word.p} too short for pivots {pivots}"
        )
    signs = word.signs
    pivot_set = set(pivots)
    dim = 0
    weight = 0
    for row, c in enumerate(pivots, start=1):
        pivot_sign = signs[c - 1]
        for j in range(1, c):
            if j in pivot_set:
                continue
            dim += 1
            if signs[j - 1] != pivot_sign:
                weight += 1
    return Bidegree(dim, weight)


def e1_page(k: int, word: SignWord) -> FreeModule:
    """First page of the filtration spectral sequence: one generator
    per cell at (dimension, weight)."""
    gens = [cell_bidegree(c, word) for c in enumerate_cells(k, word.p)]
    assert all(0 <= b <= a for a, b in gens)
    return FreeModule(gens)


def sign_words(p: int, q: int) -> list[SignWord]:
    """All C(p, q) words with q sign letters, in lexicographic order."""
    if q < 0 or q > p:
        raise ValueError(f"need 0 <= q <= p, got q={q}, p={p}")
    words = []
    for minus_positions in combinations(range(p), q):
        signs = [False] * p
        for i in minus_positions:
            signs[i] = True
        words.append(SignWord(tuple(signs)))
    return words


def unique_e1_pages(
    k: int, p: int, q: int, max_words: int | None = None
) -> list[FreeModule]:
    """Deduplicated first pages over all sign words, sorted by tension
    ascending (ties broken by canonical module order).

    ``max_words`` caps how many of the C(p, q) sign words get examined;
    exceeding it raises BudgetExceededError rather than churning on a
    space whose downstream search is out of reach anyway.
    """
    from .search import BudgetExceededError  # cycle-free at call time

    words = sign_words(p, q)
    if max_words is not None and len(words) > max_words:
        raise BudgetExceededError(
            f"(k={k}, p={p}, q={q}) needs {len(words)} sign words, over the "
            f"budget of {max_words}; raise the word budget to continue"
        )
    seen: set[FreeModule] = set()
    for word in words:
        seen.add(e1_page(k, word))
    return sorted(seen, key=lambda m: (m.tension(), m.gens))


def e1_quotient_page(k: int, word: SignWord, m: int) -> FreeModule:
    """First page of the quotient by the sub-Grassmannian on the first
    m coordinates: the generators of cells with a pivot beyond column m.
    """
    if m >= word.p:
        raise ValueError(f"need m < p, got m={m}, p={word.p}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    gens = [
        cell_bidegree(c, word)
        for c in enumerate_cells(k, word.p)
        if c.pivots and c.pivots[-1] > m
    ]
    return FreeModule(gens)


def total_weight_formula(k: int, p: int, q: int) -> int:
    """Total weight of any first page of Gr_k(R^{p,q}):
    (p-q) * q * C(p-2, k-1), independent of the sign word."""
    if not (1 <= k <= p - 1):
        raise ValueError(f"need 1 <= k <= p-1, got k={k}, p={p}")
    if not (0 <= q <= p):
        raise ValueError(f"need 0 <= q <= p, got q={q}, p={p}")
    return (p - q) * q * math.comb(p - 2, k - 1)


def normalize_parameters(k: int, p: int, q: int) -> tuple[int, int, int]:
    """Smallest equivalent parameters under Gr_k = Gr_{p-k} and
    R^{p,q} = R^{p,p-q}.  Never applied silently; callers opt in."""
    return (min(k, p - k), p, min(q, p - q))
