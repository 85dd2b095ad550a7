"""Free bigraded modules as multisets of bidegrees, and shift moves.

A free module here is nothing but a finite multiset of bidegrees (a, b):
one entry per free summand shifted into that bidegree.  The bigraded
Poincare polynomial of the multiset is a complete invariant, and the
relaxation partial order ("can B be reached from A by shifts?") is decided
entirely by polynomial arithmetic: the difference of Poincare polynomials
must be divisible by the fundamental shift polynomial with a nonnegative
quotient.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .bipoly import BiPoly


class Bidegree(NamedTuple):
    a: int  # topological degree
    b: int  # weight


class ShiftMove(NamedTuple):
    """A single shift: src goes up in weight by s, tgt comes down by s.

    The magnitude is determined by the bidegrees: with src = (a, b) and
    tgt = (c, d), n = c - a and s = d - b - n, and both must be >= 1.
    """

    src: Bidegree
    tgt: Bidegree

    @property
    def n(self) -> int:
        return self.tgt.a - self.src.a

    @property
    def s(self) -> int:
        return (self.tgt.b - self.src.b) - self.n

    def is_legal(self) -> bool:
        return self.n >= 1 and self.s >= 1


class FreeModule:
    """An immutable multiset of bidegrees in canonical sorted order.

    Weights must be nonnegative; the stronger cell constraint b <= a is
    enforced where modules are built from Schubert data, not here, so
    hand-entered modules stay representable.
    """

    __slots__ = ("_gens", "_poly")

    def __init__(self, gens: Iterable[tuple[int, int]] = ()):
        cleaned = []
        for a, b in gens:
            if a < 0 or b < 0:
                raise ValueError(f"bidegree ({a}, {b}) has a negative entry")
            cleaned.append(Bidegree(a, b))
        object.__setattr__(self, "_gens", tuple(sorted(cleaned)))
        object.__setattr__(self, "_poly", None)

    def __setattr__(self, name, value):
        raise AttributeError("FreeModule is immutable")

    def __reduce__(self):
        return (FreeModule, (tuple((a, b) for a, b in self._gens),))

    @classmethod
    def from_counts(cls, counts: dict[tuple[int, int], int]) -> "FreeModule":
        gens = []
        for (a, b), k in counts.items():
            if k < 0:
                raise ValueError(f"negative multiplicity for ({a}, {b})")
            gens.extend([(a, b)] * k)
        return cls(gens)

    @property
    def gens(self) -> tuple[Bidegree, ...]:
        return self._gens

    def counts(self) -> dict[Bidegree, int]:
        out: dict[Bidegree, int] = {}
        for g in self._gens:
            out[g] = out.get(g, 0) + 1
        return out

    def __len__(self) -> int:
        return len(self._gens)

    def __iter__(self):
        return iter(self._gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeModule) and self._gens == other._gens

    def __lt__(self, other: "FreeModule") -> bool:
        return self._gens < other._gens

    def __hash__(self) -> int:
        return hash(self._gens)

    def __add__(self, other: "FreeModule") -> "FreeModule":
        """Direct sum: the multisets are merged."""
        if not isinstance(other, FreeModule):
            return NotImplemented
        return FreeModule(tuple(self._gens) + tuple(other._gens))

    def __repr__(self) -> str:
        inner = ", ".join(f"({a},{b})" for a, b in self._gens)
        return f"FreeModule([{inner}])"

    # -- invariants ------------------------------------------------------

    def poincare(self) -> BiPoly:
        if self._poly is None:
            terms: dict[tuple[int, int], int] = {}
            for a, b in self._gens:
                terms[(a, b)] = terms.get((a, b), 0) + 1
            object.__setattr__(self, "_poly", BiPoly(terms))
        return self._poly

    def tension(self) -> int:
        """poincare evaluated at (1, 2); strictly drops under every shift."""
        return sum(2**b for _, b in self._gens)

    def total_weight(self) -> int:
        return sum(b for _, b in self._gens)

    # -- shifts ----------------------------------------------------------

    def apply_shift(self, move: ShiftMove) -> "FreeModule":
        """Apply one shift; the Poincare polynomial changes by
        x^a y^b K_{n,s}."""
        src = Bidegree(*move.src)
        tgt = Bidegree(*move.tgt)
        move = ShiftMove(src, tgt)
        if src not in self._gens:
            raise ValueError(f"module has no generator at {tuple(src)}")
        if tgt not in self._gens or (src == tgt and self._gens.count(src) < 2):
            raise ValueError(f"module has no generator at {tuple(tgt)}")
        if not move.is_legal():
            raise ValueError(
                f"illegal shift {tuple(src)} -> {tuple(tgt)}: need n >= 1 and s >= 1"
            )
        gens = list(self._gens)
        gens.remove(src)
        gens.remove(tgt)
        gens.append(Bidegree(src.a, src.b + move.s))
        gens.append(Bidegree(tgt.a, src.b + move.n))
        return FreeModule(gens)

    def shift_story(self, other: "FreeModule") -> BiPoly | None:
        """(poincare(other) - poincare(self)) / K_{1,1}, or None.

        None means the two modules are not related by shifts at all; a
        story with a negative coefficient means some shifts would have to
        run backwards.
        """
        return (other.poincare() - self.poincare()).divide_by_k11()

    def can_relax_to(self, other: "FreeModule") -> bool:
        """True iff other is reachable from self by (possibly zero) shifts."""
        if self._gens == other._gens:
            return True
        # A nonzero nonnegative story strictly lowers tension.
        if other.tension() >= self.tension():
            return False
        story = self.shift_story(other)
        return story is not None and story.is_nonnegative()

    # -- encodings ---------------------------------------------------------

    def to_json(self) -> dict:
        gens_json = [
            [a, b, k] for (a, b), k in sorted(self.counts().items())
        ]
        return {"generators": gens_json}

    @classmethod
    def from_json(cls, data: dict) -> "FreeModule":
        if not isinstance(data, dict) or "generators" not in data:
            raise ValueError("module JSON must be an object with a 'generators' key")
        counts: dict[tuple[int, int], int] = {}
        for entry in data["generators"]:
            a, b, k = entry
            counts[(int(a), int(b))] = counts.get((int(a), int(b)), 0) + int(k)
        return cls.from_counts(counts)


def module_from_poly(f: BiPoly) -> FreeModule:
    """Inverse of poincare; rejects polynomials with negative coefficients."""
    bad = [e for e, c in f.terms() if c < 0]
    if bad:
        monos = ", ".join(f"x^{i}y^{j}" for i, j in bad)
        raise ValueError(f"negative coefficient on {monos}: not a module")
    counts = {e: c for e, c in f.terms()}
    return FreeModule.from_counts(counts)


def render_rank_table(module: FreeModule) -> str:
    """Plain-text rank table: topological degree rightward, weight upward.

    Counts the generators in each bidegree; zero cells are left blank.
    The origin sits at the lower left, matching the published tables, so
    output can be diffed against them by eye.  An empty module renders as
    an empty string.
    """
    counts = module.counts()
    if not counts:
        return ""
    max_a = max(a for a, _ in counts)
    max_b = max(b for _, b in counts)
    width = max(
        max(len(str(k)) for k in counts.values()),
        len(str(max_a)),
    )
    label_w = len(str(max_b))
    lines = []
    for b in range(max_b, -1, -1):
        cells = []
        for a in range(max_a + 1):
            k = counts.get(Bidegree(a, b), 0)
            cells.append(str(k).rjust(width) if k else " " * width)
        lines.append(f"{str(b).rjust(label_w)} | " + " ".join(cells))
    lines.append("-" * label_w + "-+-" + "-" * ((width + 1) * (max_a + 1) - 1))
    axis = " ".join(str(a).rjust(width) for a in range(max_a + 1))
    lines.append(" " * label_w + " | " + axis)
    return "\n".join(line.rstrip() for line in lines)
