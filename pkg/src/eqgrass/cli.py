"""Command-line front end.

Exit status: 0 on success, 1 when a unique-answer command ends with more
than one surviving candidate (survivors are still printed), 2 on usage
errors, 3 on budget aborts.  Output for a fixed invocation is
byte-for-byte deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cache as result_cache
from .bipoly import PolynomialParseError, parse_bipoly
from .modalg import FreeModule, module_from_poly, render_rank_table
from .oracle import validate_page
from .schubert import (
    SignWord,
    e1_page,
    e1_quotient_page,
    normalize_parameters,
    total_weight_formula,
    unique_e1_pages,
)
from .search import (
    Budget,
    BudgetExceededError,
    DEFAULT_MAX_MODULES,
    DEFAULT_MAX_WORDS,
    Strategy,
    candidate_outcomes,
    solve,
)

EXIT_OK = 0
EXIT_AMBIGUOUS = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _CliError(Exception):
    """Usage-level error; rendered as one diagnostic line, exit 2."""


def _parse_word(text: str) -> SignWord:
    try:
        return SignWord.from_string(text)
    except ValueError as exc:
        raise _CliError(f"bad sign word {text!r}: {exc}") from exc


def _parse_poly(text: str, flag: str):
    try:
        return parse_bipoly(text)
    except PolynomialParseError as exc:
        raise _CliError(f"bad polynomial for {flag}: {exc}") from exc


def _check_kpq(k: int, p: int, q: int):
    if not (1 <= k <= p - 1):
        raise _CliError(f"k={k} out of range: need 1 <= k <= p-1 with p={p}")
    if not (0 <= q <= p):
        raise _CliError(f"q={q} out of range: need 0 <= q <= p with p={p}")


def _emit_module(module: FreeModule, fmt: str, out) -> None:
    if fmt == "table":
        out.write(render_rank_table(module) + "\n")
    elif fmt == "poly":
        out.write(str(module.poincare()) + "\n")
    else:
        out.write(json.dumps(module.to_json(), sort_keys=True) + "\n")


def _add_format(parser, default="table"):
    parser.add_argument(
        "--format",
        choices=["table", "poly", "json"],
        default=default,
        help="output rendering",
    )


def _add_kpq(parser):
    parser.add_argument("--k", type=int, required=True, help="plane dimension k")
    parser.add_argument("--p", type=int, required=True, help="ambient dimension p")
    parser.add_argument("--q", type=int, required=True, help="sign dimensions q")


def _add_budget(parser):
    parser.add_argument(
        "--max-modules",
        type=int,
        default=DEFAULT_MAX_MODULES,
        help="candidate enumeration cap (default %(default)s)",
    )
    parser.add_argument(
        "--max-words",
        type=int,
        default=DEFAULT_MAX_WORDS,
        help="sign word cap for page enumeration (default %(default)s)",
    )
    parser.add_argument(
        "--max-seconds",
        type=float,
        default=None,
        help="wall-clock cap for candidate enumeration",
    )


def _add_strategy(parser):
    parser.add_argument(
        "--strategy",
        choices=["closure", "matchings"],
        default="closure",
        help="candidate generation semantics (default %(default)s)",
    )
    parser.add_argument(
        "--depth",
        type=int,
        default=None,
        help="optional depth bound for the closure strategy",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqgrass",
        description="Bredon cohomology of real Grassmannians from Schubert-cell first pages",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_e1 = sub.add_parser("e1", help="first page for one sign word")
    p_e1.add_argument("--k", type=int, required=True)
    p_e1.add_argument("--word", required=True, help="sign word over +/-, e.g. ++--")
    _add_format(p_e1)

    p_pages = sub.add_parser("pages", help="distinct first pages over all sign words")
    _add_kpq(p_pages)
    _add_budget(p_pages)
    _add_format(p_pages, default="poly")

    p_cand = sub.add_parser(
        "candidates", help="possible limits of the lowest-tension first page"
    )
    _add_kpq(p_cand)
    _add_strategy(p_cand)
    _add_budget(p_cand)
    _add_format(p_cand, default="poly")

    p_solve = sub.add_parser("solve", help="run the full pruned search")
    _add_kpq(p_solve)
    _add_strategy(p_solve)
    _add_budget(p_solve)
    _add_format(p_solve)
    p_solve.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_solve.add_argument("--no-cache", action="store_true", help="skip the result cache")
    p_solve.add_argument(
        "--cache-dir",
        type=Path,
        default=None,
        help=f"cache directory (default ${result_cache.CACHE_ENV_VAR} "
        f"or {result_cache.default_cache_dir()})",
    )
    p_solve.add_argument(
        "--normalize",
        action="store_true",
        help="replace (k, q) by the smaller equivalent parameters first",
    )

    p_story = sub.add_parser("story", help="shift story from one module to another")
    p_story.add_argument("--a", required=True, help="Poincare polynomial of the start")
    p_story.add_argument("--b", required=True, help="Poincare polynomial of the end")

    p_tw = sub.add_parser("totalweight", help="total weight of any first page")
    _add_kpq(p_tw)

    p_val = sub.add_parser("validate", help="classical cross-checks on a module")
    _add_kpq(p_val)
    group = p_val.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="validate the first page of this sign word")
    group.add_argument(
        "--module",
        help="module JSON file ('-' for stdin) or Poincare polynomial text",
    )

    p_quot = sub.add_parser(
        "quotient", help="first page of the quotient by a prefix sub-Grassmannian"
    )
    p_quot.add_argument("--k", type=int, required=True)
    p_quot.add_argument("--word", required=True)
    p_quot.add_argument("--m", type=int, required=True, help="prefix length")
    _add_format(p_quot)

    return parser


def _budget_from(args) -> Budget:
    return Budget(
        max_modules=args.max_modules,
        max_words=args.max_words,
        max_seconds=args.max_seconds,
    )


def _strategy_from(args) -> Strategy:
    return Strategy(args.strategy, args.depth)


def _cmd_e1(args, out) -> int:
    word = _parse_word(args.word)
    if args.k < 0 or args.k > word.p:
        raise _CliError(f"k={args.k} out of range for a length-{word.p} word")
    _emit_module(e1_page(args.k, word), args.format, out)
    return EXIT_OK


def _cmd_pages(args, out) -> int:
    _check_kpq(args.k, args.p, args.q)
    pages = unique_e1_pages(args.k, args.p, args.q, max_words=args.max_words)
    if args.format == "json":
        payload = {
            "count": len(pages),
            "pages": [m.to_json() for m in pages],
            "tensions": [m.tension() for m in pages],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return EXIT_OK
    for i, page in enumerate(pages):
        out.write(f"# page {i}: tension {page.tension()}\n")
        _emit_module(page, args.format, out)
    return EXIT_OK


def _cmd_candidates(args, out) -> int:
    _check_kpq(args.k, args.p, args.q)
    budget = _budget_from(args)
    pages = unique_e1_pages(args.k, args.p, args.q, max_words=budget.max_words)
    cands = candidate_outcomes(pages[0], _strategy_from(args), budget)
    if args.format == "json":
        payload = {"count": len(cands), "candidates": [m.to_json() for m in cands]}
        out.write(json.dumps(payload, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"# {len(cands)} candidates\n")
    for m in cands:
        _emit_module(m, args.format, out)
    return EXIT_OK


def _cmd_solve(args, out) -> int:
    k, p, q = args.k, args.p, args.q
    _check_kpq(k, p, q)
    if args.normalize:
        nk, np_, nq = normalize_parameters(k, p, q)
        if (nk, nq) != (k, q):
            print(f"normalized (k={k}, p={p}, q={q}) to (k={nk}, p={np_}, q={nq})",
                  file=sys.stderr)
        k, p, q = nk, np_, nq
    strategy = _strategy_from(args)
    budget = _budget_from(args)
    cache_dir = args.cache_dir or result_cache.default_cache_dir()
    report = None
    if not args.no_cache:
        report = result_cache.load(cache_dir, k, p, q, strategy)
    if report is None:
        report = solve(k, p, q, strategy=strategy, budget=budget, jobs=args.jobs)
        if not args.no_cache and not report.incomplete:
            result_cache.store(cache_dir, report)
    if report.incomplete:
        print(f"budget exceeded: {report.failure}", file=sys.stderr)
        return EXIT_BUDGET
    if args.format == "json":
        out.write(json.dumps(report.to_json(), sort_keys=True) + "\n")
    else:
        survivors = report.survivors
        # A unique answer prints bare, so table output can be diffed
        # against published tables directly.
        if len(survivors) == 1:
            _emit_module(survivors[0], args.format, out)
        else:
            out.write(f"# {len(survivors)} surviving candidates\n")
            for i, m in enumerate(survivors):
                out.write(f"# candidate {i}\n")
                _emit_module(m, args.format, out)
    return EXIT_OK if len(report.survivor_indices) == 1 else EXIT_AMBIGUOUS


def _cmd_story(args, out) -> int:
    fa = _parse_poly(args.a, "--a")
    fb = _parse_poly(args.b, "--b")
    story = (fb - fa).divide_by_k11()
    if story is None:
        out.write("not related by shifts\n")
    else:
        out.write(str(story) + "\n")
    return EXIT_OK


def _cmd_totalweight(args, out) -> int:
    _check_kpq(args.k, args.p, args.q)
    out.write(str(total_weight_formula(args.k, args.p, args.q)) + "\n")
    return EXIT_OK


def _cmd_validate(args, out) -> int:
    _check_kpq(args.k, args.p, args.q)
    if args.word is not None:
        word = _parse_word(args.word)
        if word.p != args.p or word.q != args.q:
            raise _CliError(
                f"word {args.word!r} has (p, q) = ({word.p}, {word.q}), "
                f"not ({args.p}, {args.q})"
            )
        module = e1_page(args.k, word)
    else:
        raw = sys.stdin.read() if args.module == "-" else None
        if raw is None:
            path = Path(args.module)
            if path.exists():
                raw = path.read_text()
            else:
                raw = args.module
        raw = raw.strip()
        try:
            if raw.startswith("{"):
                module = FreeModule.from_json(json.loads(raw))
            else:
                module = module_from_poly(parse_bipoly(raw))
        except (ValueError, KeyError) as exc:
            raise _CliError(f"bad module: {exc}") from exc
    diag = validate_page(module, args.k, args.p, args.q)
    for name, flag in [
        ("underlying", diag.underlying_ok),
        ("fixed-set", diag.fixed_set_ok),
        ("total-weight", diag.weight_ok),
    ]:
        out.write(f"{name}: {'pass' if flag else 'FAIL'}\n")
    for msg in diag.messages:
        out.write(f"  {msg}\n")
    return EXIT_OK if diag.ok else EXIT_AMBIGUOUS


def _cmd_quotient(args, out) -> int:
    word = _parse_word(args.word)
    if args.k < 0 or args.k > word.p:
        raise _CliError(f"k={args.k} out of range for a length-{word.p} word")
    if not (0 <= args.m < word.p):
        raise _CliError(f"m={args.m} out of range: need 0 <= m < {word.p}")
    _emit_module(e1_quotient_page(args.k, word, args.m), args.format, out)
    return EXIT_OK


_COMMANDS = {
    "e1": _cmd_e1,
    "pages": _cmd_pages,
    "candidates": _cmd_candidates,
    "solve": _cmd_solve,
    "story": _cmd_story,
    "totalweight": _cmd_totalweight,
    "validate": _cmd_validate,
    "quotient": _cmd_quotient,
}


def run(argv: list[str], out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
