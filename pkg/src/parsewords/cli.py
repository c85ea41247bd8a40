"""Command-line interface: ``parsewords <subcommand> ...``.

Exit codes: 0 on success/PASS, 1 on FAIL or when the requested object does
not exist (no parse, no common word), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import closed_forms as cf
from . import harness
from .enumeration import all_path_trees, all_trees, catalan, count_parse_words, fast_parse_words, parse_words
from .errors import ParseWordsError, UnknownClaim
from .grammar import parse, parses
from .reductions import splice_solve
from .trees import Family, deserialize, encode_path, is_path_tree, left_turn, make_family, right_turn, serialize


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _tree(text: str):
    return deserialize(text)


def cmd_parse(args) -> int:
    t = _tree(args.tree)
    lab = parse(t, args.word)
    if args.json:
        print(_dump({"tree": serialize(t), "word": args.word, "parses": lab is not None,
                     "labels": lab.as_dict() if lab else None}))
    elif lab is None:
        print(f"{args.word} is not a parse word of {serialize(t)}")
    else:
        print(lab.render())
    return 0 if lab is not None else 1


def _pair(args):
    return _tree(args.t1), _tree(args.t2)


def cmd_enumerate(args) -> int:
    t1, t2 = _pair(args)
    result = parse_words(t1, t2) if args.engine == "stream" else fast_parse_words(t1, t2)
    for c in result.classes:
        print(_dump({"class": c}) if args.json else c)
    return 0


def cmd_count(args) -> int:
    t1, t2 = _pair(args)
    n = count_parse_words(t1, t2)
    print(_dump({"count": n}) if args.json else n)
    return 0


_FAMILY_THEOREMS = {
    # name: (arity, closed form, brute force)
    "comb-comb": (1, lambda n: cf.comb_comb_words(n),
                  lambda n: parse_words(make_family("left-comb", n), make_family("right-comb", n))),
    "turn-turn": (2, lambda m, n: cf.turn_turn_words(m, n),
                  lambda m, n: parse_words(left_turn(m, n), right_turn(1, m + n - 1))),
    "comb-crooked": (1, lambda n: cf.comb_crooked_words(n),
                     lambda n: parse_words(make_family("left-comb", n), make_family("right-crooked", n))),
    "comb-crooked2": (1, lambda n: cf.comb_crooked2_words(n),
                      lambda n: parse_words(make_family("left-comb", n), make_family("left-crooked", n))),
    "crooked-crooked": (1, cf.crooked_crooked_count,
                        lambda n: count_parse_words(make_family("left-crooked", n),
                                                    make_family("right-crooked", n))),
    "turn-count": (3, cf.turn_pair_count,
                   lambda m, n, k: count_parse_words(left_turn(m, n), right_turn(k, m + n - k))),
    "a": (2, cf.a_of, lambda m, k: count_parse_words(left_turn(m, k + 1), right_turn(k, m + 1))),
    "alternating": (1, cf.alternating_counts, cf.alternating_counts_by_enumeration),
}


def _jsonable(value):
    if hasattr(value, "classes"):
        return list(value.classes)
    if isinstance(value, tuple):
        return list(value)
    return value


def cmd_families(args) -> int:
    if args.theorem == "comb-general":
        if not args.tree:
            raise argparse.ArgumentTypeError("comb-general needs --tree")
        t = _tree(args.tree)
        formula = cf.comb_general_count(t)
        brute = lambda: count_parse_words(t, make_family("left-comb", t.n_leaves))  # noqa: E731
        params = [serialize(t)]
    else:
        arity, formula_fn, brute_fn = _FAMILY_THEOREMS[args.theorem]
        if len(args.params) != arity:
            raise argparse.ArgumentTypeError(f"{args.theorem} takes {arity} integer parameter(s)")
        formula = formula_fn(*args.params)
        brute = lambda: brute_fn(*args.params)  # noqa: E731
        params = args.params
    out = {"theorem": args.theorem, "params": params, "closed_form": _jsonable(formula)}
    status = 0
    if args.check:
        observed = _jsonable(brute())
        out["brute_force"] = observed
        out["status"] = "PASS" if observed == out["closed_form"] else "FAIL"
        status = 0 if out["status"] == "PASS" else 1
    if args.json:
        print(_dump(out))
    else:
        value = out["closed_form"]
        print("\n".join(value) if isinstance(value, list) and value and isinstance(value[0], str)
              else value)
        if args.check:
            print(f"brute force: {out['brute_force']}")
            print(out["status"])
    return status


def cmd_reduce(args) -> int:
    t1, t2 = _pair(args)
    trace: list = []
    word = splice_solve(t1, t2, trace=trace)
    ok = word is not None and parses(t1, word) and parses(t2, word)
    if args.json:
        if args.trace:
            for step in trace:
                print(_dump({"step": step.kind, "n": step.n, "depth": step.depth,
                             "site": None if step.site is None else str(step.site),
                             "residue": [p.n for p in step.residue],
                             "alternatives": [str(a) for a in step.alternatives],
                             "word": step.word}))
        print(_dump({"word": word, "verified": ok}))
    else:
        if args.trace:
            for step in trace:
                print(step.describe())
        print(word if word is not None else "no common parse word")
    return 0 if ok else 1


def _settings(args) -> harness.Settings:
    kw = {}
    for name in ("max_n", "min_n", "exhaustive_max", "space"):
        value = getattr(args, name)
        if value is not None:
            kw[name] = value
    kw.update(samples=args.samples, seed=args.seed, reading=args.reading,
              budget=args.budget, force=args.force)
    return harness.Settings(**kw)


def _run_claim(args, kind: str) -> int:
    if args.list:
        sys.stdout.write(harness.claim_table())
        return 0
    claim = args.claim_opt or args.claim
    if not claim:
        raise argparse.ArgumentTypeError("name a claim (see --list)")
    runner = harness.verify_theorem if kind == "theorem" else harness.verify_conjecture
    report = runner(claim, settings=_settings(args), workers=args.workers)
    sys.stdout.write(report.to_jsonl() if args.json else report.to_text())
    if args.timing:
        print(f"wall time: {report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.status == "PASS" else 1


def cmd_gen(args) -> int:
    if args.space == "path":
        trees = all_path_trees(args.n)
    else:
        if catalan(args.n - 1) > 10**6:
            raise argparse.ArgumentTypeError("tree space too large to list")
        trees = all_trees(args.n)
    if args.count:
        print(len(trees))
        return 0
    for t in trees:
        if args.json:
            obj = {"tree": serialize(t)}
            if is_path_tree(t) and t.n_leaves >= 2:
                obj["path"] = encode_path(t)
            print(_dump(obj))
        else:
            print(serialize(t))
    return 0


def _claim_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("claim", nargs="?", help="claim id")
    p.add_argument("--claim", dest="claim_opt", help="claim id (alternative to the positional)")
    p.add_argument("--list", action="store_true", help="print the claim table")
    p.add_argument("--max-n", type=int)
    p.add_argument("--min-n", type=int)
    p.add_argument("--samples", type=int, default=1000, help="random pairs per n past the exhaustive range")
    p.add_argument("--seed", type=int, default=harness.Settings.seed)
    p.add_argument("--exhaustive-max", type=int)
    p.add_argument("--space", choices=["path", "binary", "config"])
    p.add_argument("--reading", choices=["invariant", "literal"], default="invariant")
    p.add_argument("--workers", type=int, help=f"worker processes (default ${harness.WORKERS_ENV} or 1)")
    p.add_argument("--budget", type=int, default=harness.DEFAULT_BUDGET)
    p.add_argument("--force", action="store_true", help="ignore the work budget")
    p.add_argument("--timing", action="store_true", help="print wall time to stderr")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parsewords", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="label a tree with a word")
    p.add_argument("--tree", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parse)

    for name, func, text in (("enumerate", cmd_enumerate, "list common word classes"),
                             ("count", cmd_count, "count common word classes"),
                             ("reduce", cmd_reduce, "find a common word by reductions")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--t1", required=True)
        p.add_argument("--t2", required=True)
        p.add_argument("--json", action="store_true")
        if name == "enumerate":
            p.add_argument("--engine", choices=["stream", "fast"], default="fast")
        if name == "reduce":
            p.add_argument("--trace", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("families", help="closed forms for the tree families")
    p.add_argument("--theorem", required=True, choices=sorted([*_FAMILY_THEOREMS, "comb-general"]))
    p.add_argument("--params", type=int, nargs="*", default=[])
    p.add_argument("--tree", help="tree for comb-general")
    p.add_argument("--check", action="store_true", help="compare with brute force")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("verify", help="run a theorem campaign")
    _claim_options(p)
    p.set_defaults(func=lambda a: _run_claim(a, "theorem"))

    p = sub.add_parser("conjecture", help="run a conjecture campaign")
    _claim_options(p)
    p.set_defaults(func=lambda a: _run_claim(a, "conjecture"))

    p = sub.add_parser("gen", help="list a tree space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--space", choices=["path", "binary"], default="binary")
    p.add_argument("--count", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (argparse.ArgumentTypeError, ParseWordsError, ValueError, IndexError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, (UnknownClaim, KeyError)) and exc.args else exc
        print(f"parsewords {args.command}: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
