"""Command-line entry points: computations and the verification suites.

Verbs: ``act``, ``normalize``, ``lcm``, ``gcd``, ``delta``, ``project``, and
``verify <suite>``.  Term and word grammars follow the library serializations
(terms like ``x1*(x2*x3)``, expansion atoms ``D:<bits>``, braid atoms
``s<i>``).  The environment variable GARSIDE_BUDGET overrides the default
reversing budget.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import braids, garside, mld, reversing, terms, verify
from .reversing import DEFAULT_BUDGET


def _env_budget() -> int:
    raw = os.environ.get("GARSIDE_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def _parse_ld_word(text: str):
    return mld.parse_word(text)


def _instance(name: str, budget: int) -> garside.Instance:
    if name == "ld":
        return garside.ld_instance(budget)
    return garside.braid_instance(budget)


def _parse_object(instance: str, text: str):
    if instance == "ld":
        return terms.parse_term(text)
    return int(text)


def _parse_instance_word(instance: str, text: str):
    if instance == "ld":
        return mld.parse_word(text)
    return braids.parse_word(text)


def _format_instance_word(instance: str, word) -> str:
    if instance == "ld":
        return mld.format_word(word)
    return braids.format_word(word)


def cmd_act(args) -> int:
    t = terms.parse_term(args.term)
    word = _parse_ld_word(args.word)
    result = terms.act_word(t, word)
    print("absent" if result is None else terms.format_term(result))
    return 0


def cmd_normalize(args) -> int:
    inst = _instance(args.instance, args.budget)
    obj = _parse_object(args.instance, args.object)
    word = _parse_instance_word(args.instance, args.word)
    if inst.act(obj, word) is None:
        print("absent: the word does not act at the given object", file=sys.stderr)
        return 2
    nf = garside.normal_form(inst, obj, word)
    if not nf.factors:
        print("(identity)")
        return 0
    for i, factor in enumerate(nf.factors, start=1):
        print(f"{i}: {_format_instance_word(args.instance, factor)}")
    return 0


def cmd_lcm(args) -> int:
    inst = _instance(args.instance, args.budget)
    u = _parse_instance_word(args.instance, args.word1)
    v = _parse_instance_word(args.instance, args.word2)
    print(_format_instance_word(args.instance, reversing.lcm(inst.complement, u, v, args.budget)))
    return 0


def cmd_gcd(args) -> int:
    inst = _instance(args.instance, args.budget)
    obj = _parse_object(args.instance, args.object)
    u = _parse_instance_word(args.instance, args.word1)
    v = _parse_instance_word(args.instance, args.word2)
    for w in (u, v):
        if inst.act(obj, w) is None:
            print("absent: a word does not act at the given object", file=sys.stderr)
            return 2
    g = reversing.gcd(
        inst.complement, u, v, inst.candidate_provider(obj), args.budget
    )
    print(_format_instance_word(args.instance, g) or "(identity)")
    return 0


def cmd_delta(args) -> int:
    t = terms.parse_term(args.term)
    word = mld.delta_small(t) if args.small else mld.delta_big(t)
    print(mld.format_word(word) or "(identity)")
    return 0


def cmd_project(args) -> int:
    t = terms.parse_term(args.term)
    word = _parse_ld_word(args.word)
    n, image, _ = braids.project_term_morphism(t, word)
    print(f"strands: {n}")
    print(braids.format_word(image) or "(identity)")
    return 0


def cmd_verify(args) -> int:
    params = verify.SuiteParams(
        max_size=args.max_size,
        max_addr_len=args.max_addr_len,
        samples=args.samples,
        seed=args.seed,
        budget=args.budget,
        case=args.case,
    )
    report = verify.run_suite(args.suite, params)
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    if report.status == "pass":
        return 0
    if report.status == "fail":
        return 1
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Symbolic engine for LD-expansions, braids, and their Garside structure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    budget_kwargs = dict(type=int, default=_env_budget(), help="reversing step budget")

    p = sub.add_parser("act", help="apply an expansion word to a term")
    p.add_argument("term")
    p.add_argument("word", help="whitespace-separated atoms, e.g. 'D: D:1 D:'")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("normalize", help="greedy normal form of a word")
    p.add_argument("instance", choices=["ld", "braid"])
    p.add_argument("object", help="a term for ld, a strand count for braid")
    p.add_argument("word")
    p.add_argument("--budget", **budget_kwargs)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("lcm", help="right-lcm of two words")
    p.add_argument("instance", choices=["ld", "braid"])
    p.add_argument("object", help="object at which both words act")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--budget", **budget_kwargs)
    p.set_defaults(func=cmd_lcm)

    p = sub.add_parser("gcd", help="left-gcd of two words at an object")
    p.add_argument("instance", choices=["ld", "braid"])
    p.add_argument("object")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--budget", **budget_kwargs)
    p.set_defaults(func=cmd_gcd)

    p = sub.add_parser("delta", help="the Garside word of a term")
    p.add_argument("term")
    p.add_argument("--small", action="store_true", help="the distribution word instead")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("project", help="project an expansion word to a braid word")
    p.add_argument("term")
    p.add_argument("word")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--max-addr-len", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", **budget_kwargs)
    p.add_argument("--case", default=None, help="only run the case with this id")
    p.add_argument("--report", default=None, help="write the JSON report here")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except reversing.BudgetExhausted as exc:
        print(f"exhausted: {exc}", file=sys.stderr)
        return 2
    except (terms.TermSyntaxError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
