"""Candidate enumeration and the pruned intersection search.

Given the first page of one construction, the spectral sequence can only
converge to modules reachable by shift moves, and every other construction
of the same space must reach the true answer as well.  The solver:

  a. builds the deduplicated first pages over all sign words,
  b. enumerates everything the lowest-tension page can converge to,
  c. discards pages that relax to other pages (their constraints are
     implied), and
  d. strikes every candidate some remaining page cannot relax to.

Two candidate-generation semantics ship.  ``closure`` replays single
shifts breadth-first, recomputing the possible differentials at every
intermediate module, so a summand shifted down by one move may support
the next; this models re-running the sequence after each cell attachment
and is the default.  ``matchings`` applies disjoint sets of differentials
simultaneously to the starting page and reaches strictly fewer outcomes.
Every move strictly decreases tension, so both enumerations terminate.
"""

from __future__ import annotations

import json
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal, Sequence

from .modalg import FreeModule, ShiftMove
from .schubert import unique_e1_pages

# A possible differential is exactly a legal shift move: src = (a, b),
# tgt = (c, d) with c - a >= 1 and (d - b) - (c - a) >= 1.  Equivalently
# the supporting element of the target summand in the bidegree just above
# src lies in the negative cone of the point cohomology.
DifferentialPair = ShiftMove

DEFAULT_MAX_MODULES = 1_000_000
DEFAULT_MAX_WORDS = 2_000


class BudgetExceededError(RuntimeError):
    """A search outgrew its configured budget and stopped cleanly."""


@dataclass(frozen=True)
class Strategy:
    """Candidate-generation semantics, plus an optional closure depth cap."""

    kind: Literal["closure", "matchings"] = "closure"
    depth: int | None = None

    def __post_init__(self):
        if self.kind not in ("closure", "matchings"):
            raise ValueError(f"unknown strategy kind {self.kind!r}")
        if self.depth is not None and self.depth < 0:
            raise ValueError("depth bound must be nonnegative")

    def describe(self) -> str:
        if self.depth is None:
            return self.kind
        return f"{self.kind}(depth={self.depth})"


DEFAULT_STRATEGY = Strategy("closure")


@dataclass(frozen=True)
class Budget:
    """Caps that turn a runaway search into a clean abort.

    ``max_modules`` bounds the number of distinct modules a candidate
    enumeration may visit; ``max_words`` bounds the number of sign words
    a page enumeration may examine; ``max_seconds`` optionally bounds
    wall-clock time for a candidate enumeration.  Any cap may be None
    for unlimited.
    """

    max_modules: int | None = DEFAULT_MAX_MODULES
    max_words: int | None = DEFAULT_MAX_WORDS
    max_seconds: float | None = None


DEFAULT_BUDGET = Budget()


def possible_differentials(module: FreeModule) -> list[DifferentialPair]:
    """All bidegree-level differentials the module could support.

    Pairs are collapsed to distinct bidegrees; multiplicities are read
    off the module itself.
    """
    distinct = sorted(set(module.gens))
    out = []
    for src in distinct:
        for tgt in distinct:
            n = tgt.a - src.a
            if n < 1:
                continue
            if (tgt.b - src.b) - n >= 1:
                out.append(DifferentialPair(src, tgt))
    return out


# -- closure enumeration ----------------------------------------------------
#
# States are byte strings: the sorted (a, b) pairs flattened two bytes per
# generator.  Desk-scale degrees stay below 256.  The byte form keeps the
# visited set small and hashing cheap.


def _encode(pairs: Iterable[tuple[int, int]]) -> bytes:
    flat = []
    for a, b in sorted(pairs):
        flat.append(a)
        flat.append(b)
    return bytes(flat)


def _decode(state: bytes) -> list[tuple[int, int]]:
    return [(state[i], state[i + 1]) for i in range(0, len(state), 2)]


def _legal_moves(pairs: Sequence[tuple[int, int]]) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    distinct = sorted(set(pairs))
    moves = []
    for a, b in distinct:
        for c, d in distinct:
            n = c - a
            if n >= 1 and (d - b) - n >= 1:
                moves.append(((a, b), (c, d)))
    return moves


def _apply_raw(pairs: list[tuple[int, int]], src, tgt) -> bytes:
    a, b = src
    c, d = tgt
    n = c - a
    s = (d - b) - n
    child = list(pairs)
    child.remove(src)
    child.remove(tgt)
    child.append((a, b + s))
    child.append((c, b + n))
    return _encode(child)


def _closure_states(module: FreeModule, depth: int | None, budget: Budget) -> set[bytes]:
    start = _encode((g.a, g.b) for g in module.gens)
    seen = {start}
    frontier: deque[tuple[bytes, int]] = deque([(start, 0)])
    max_modules = budget.max_modules
    deadline = None
    if budget.max_seconds is not None:
        deadline = time.monotonic() + budget.max_seconds
    while frontier:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError(
                f"candidate enumeration exceeded {budget.max_seconds} seconds"
            )
        state, level = frontier.popleft()
        if depth is not None and level >= depth:
            continue
        pairs = _decode(state)
        for src, tgt in _legal_moves(pairs):
            child = _apply_raw(pairs, src, tgt)
            if child in seen:
                continue
            seen.add(child)
            if max_modules is not None and len(seen) > max_modules:
                raise BudgetExceededError(
                    f"candidate enumeration exceeded {max_modules} modules"
                )
            frontier.append((child, level + 1))
    return seen


def _matchings_outcomes(module: FreeModule, budget: Budget) -> set[bytes]:
    gens = [(g.a, g.b) for g in module.gens]
    n_gens = len(gens)
    pairs = []
    for i in range(n_gens):
        a, b = gens[i]
        for j in range(n_gens):
            if i == j:
                continue
            c, d = gens[j]
            n = c - a
            if n >= 1 and (d - b) - n >= 1:
                pairs.append((i, j))
    outcomes: set[bytes] = set()
    max_modules = budget.max_modules
    explored = 0

    def emit(chosen: list[tuple[int, int]]):
        out = list(gens)
        for i, j in chosen:
            a, b = gens[i]
            c, d = gens[j]
            n = c - a
            s = (d - b) - n
            out[i] = (a, b + s)
            out[j] = (c, b + n)
        outcomes.add(_encode(out))

    def walk(start: int, used: set[int], chosen: list[tuple[int, int]]):
        nonlocal explored
        emit(chosen)
        explored += 1
        if max_modules is not None and explored > max_modules:
            raise BudgetExceededError(
                f"matching enumeration exceeded {max_modules} combinations"
            )
        for idx in range(start, len(pairs)):
            i, j = pairs[idx]
            if i in used or j in used:
                continue
            used.add(i)
            used.add(j)
            chosen.append((i, j))
            walk(idx + 1, used, chosen)
            chosen.pop()
            used.discard(i)
            used.discard(j)

    walk(0, set(), [])
    return outcomes


def candidate_outcomes(
    module: FreeModule,
    strategy: Strategy = DEFAULT_STRATEGY,
    budget: Budget = DEFAULT_BUDGET,
) -> list[FreeModule]:
    """Every module the starting page could converge to, the page itself
    included.  Deduplicated and canonically sorted."""
    if strategy.kind == "closure":
        states = _closure_states(module, strategy.depth, budget)
    else:
        states = _matchings_outcomes(module, budget)
    return sorted(FreeModule(_decode(s)) for s in states)


def _relaxes_to(src: FreeModule, tgt: FreeModule) -> bool:
    """Nonzero nonnegative story from src to tgt.  Such a story strictly
    lowers tension, so callers may prune on tension first."""
    story = src.shift_story(tgt)
    return story is not None and bool(story) and story.is_nonnegative()


def reduce_pages(pages: Sequence[FreeModule]) -> list[FreeModule]:
    """Drop every page that can shift to another page in the list; the
    target's outcomes are a subset, so the dropped page adds nothing."""
    tensions = [m.tension() for m in pages]
    kept = []
    for i, page in enumerate(pages):
        redundant = any(
            tensions[j] < tensions[i] and _relaxes_to(page, other)
            for j, other in enumerate(pages)
            if j != i
        )
        if not redundant:
            kept.append(page)
    return kept


def subspace_filter(
    candidates: Iterable[FreeModule],
    h_sub: FreeModule,
    e1_q: FreeModule,
) -> list[FreeModule]:
    """Keep candidates that are relaxations of (known subspace answer)
    direct-sum (quotient first page)."""
    lower_bound = h_sub + e1_q
    return [c for c in candidates if lower_bound.can_relax_to(c)]


@dataclass
class SolveReport:
    """Full trace of one solver run; serializes to byte-stable JSON."""

    k: int
    p: int
    q: int
    strategy: Strategy
    pages: list[FreeModule] = field(default_factory=list)
    tensions: list[int] = field(default_factory=list)
    chosen: int = 0
    candidates: list[FreeModule] = field(default_factory=list)
    filter_page_indices: list[int] = field(default_factory=list)
    filter_log: list[tuple[int, list[int]]] = field(default_factory=list)
    survivor_indices: list[int] = field(default_factory=list)
    incomplete: bool = False
    failure: str | None = None

    @property
    def survivors(self) -> list[FreeModule]:
        return [self.candidates[i] for i in self.survivor_indices]

    def replay_filters(self) -> list[int]:
        """Re-apply the logged removals to the raw candidate list; the
        result must reproduce the survivor indices exactly."""
        alive = set(range(len(self.candidates)))
        for _, removed in self.filter_log:
            alive -= set(removed)
        return sorted(alive)

    def to_json(self) -> dict:
        return {
            "parameters": {"k": self.k, "p": self.p, "q": self.q},
            "strategy": {"kind": self.strategy.kind, "depth": self.strategy.depth},
            "pages": [m.to_json() for m in self.pages],
            "tensions": list(self.tensions),
            "chosen": self.chosen,
            "candidates": [m.to_json() for m in self.candidates],
            "filter_page_indices": list(self.filter_page_indices),
            "filter_log": [
                {"page": page_idx, "removed": list(removed)}
                for page_idx, removed in self.filter_log
            ],
            "survivor_indices": list(self.survivor_indices),
            "incomplete": self.incomplete,
            "failure": self.failure,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SolveReport":
        params = data["parameters"]
        return cls(
            k=params["k"],
            p=params["p"],
            q=params["q"],
            strategy=Strategy(data["strategy"]["kind"], data["strategy"]["depth"]),
            pages=[FreeModule.from_json(m) for m in data["pages"]],
            tensions=list(data["tensions"]),
            chosen=data["chosen"],
            candidates=[FreeModule.from_json(m) for m in data["candidates"]],
            filter_page_indices=list(data["filter_page_indices"]),
            filter_log=[
                (entry["page"], list(entry["removed"]))
                for entry in data["filter_log"]
            ],
            survivor_indices=list(data["survivor_indices"]),
            incomplete=data["incomplete"],
            failure=data["failure"],
        )

    def to_json_bytes(self) -> bytes:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":")).encode()


def _filter_chunk(args) -> list[bool]:
    page, chunk = args
    return [page.can_relax_to(c) for c in chunk]


def solve(
    k: int,
    p: int,
    q: int,
    strategy: Strategy = DEFAULT_STRATEGY,
    budget: Budget = DEFAULT_BUDGET,
    jobs: int = 1,
) -> SolveReport:
    """Run the pruned intersection search for Gr_k(R^{p,q}).

    Deterministic for fixed arguments; worker count affects scheduling
    only.  Budget exhaustion produces a partial report with
    ``incomplete`` set instead of an exception.
    """
    if not (1 <= k <= p - 1):
        raise ValueError(f"need 1 <= k <= p-1, got k={k}, p={p}")
    if not (0 <= q <= p):
        raise ValueError(f"need 0 <= q <= p, got q={q}, p={p}")
    report = SolveReport(k=k, p=p, q=q, strategy=strategy)
    try:
        pages = unique_e1_pages(k, p, q, max_words=budget.max_words)
    except BudgetExceededError as exc:
        report.incomplete = True
        report.failure = str(exc)
        return report
    report.pages = pages
    report.tensions = [m.tension() for m in pages]
    report.chosen = 0
    try:
        candidates = candidate_outcomes(pages[0], strategy, budget)
    except BudgetExceededError as exc:
        report.incomplete = True
        report.failure = str(exc)
        return report
    report.candidates = candidates

    # Pages that can shift to any other page are redundant: the target
    # page filters at least as hard.  The chosen page filters nothing
    # (every candidate is reachable from it) so it is never used.
    # Relaxing strictly lowers tension, and pages are tension-sorted, so
    # only earlier pages can be targets.
    tensions = report.tensions
    filter_indices = []
    for i in range(1, len(pages)):
        redundant = any(
            tensions[j] < tensions[i] and _relaxes_to(pages[i], pages[j])
            for j in range(i)
        )
        if not redundant:
            filter_indices.append(i)
    # Filters run from the highest-tension page down; the order changes
    # only how removals split across the log, never the survivor set.
    filter_indices.reverse()
    report.filter_page_indices = filter_indices

    pool = None
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        pool = ProcessPoolExecutor(max_workers=jobs)
    try:
        alive = list(range(len(candidates)))
        for page_idx in filter_indices:
            page = pages[page_idx]
            flags = _relaxation_flags(page, [candidates[i] for i in alive], jobs, pool)
            removed = [i for i, ok in zip(alive, flags) if not ok]
            if removed:
                report.filter_log.append((page_idx, removed))
                alive = [i for i, ok in zip(alive, flags) if ok]
    finally:
        if pool is not None:
            pool.shutdown()
    report.survivor_indices = alive
    return report


def _relaxation_flags(page, cands, jobs, pool) -> list[bool]:
    if pool is None or len(cands) < 64:
        return [page.can_relax_to(c) for c in cands]
    chunk = (len(cands) + jobs - 1) // jobs
    batches = [(page, cands[i : i + chunk]) for i in range(0, len(cands), chunk)]
    flags: list[bool] = []
    for part in pool.map(_filter_chunk, batches):
        flags.extend(part)
    return flags
