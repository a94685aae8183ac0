"""Command-line front end."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import constructions as C
from .classification import UNBOUNDED, check_dichotomy, lemma31_r
from .group import BudgetExceeded, Group, derived_length, derived_series, is_simple, is_subgroup
from .lattice import subgroup_lattice
from .perm import format_cycles, parse_cycles
from .report import FAIL, PASS, SKIPPED, Report, witness_cycles
from .verify import CLAIM_SETS, Options, run_claims

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

# name -> number of integer parameters
CONSTRUCTORS = {
    "psl2": 1, "psl3_3": 0, "sz": 1, "sym": 1, "alt": 1, "cyclic": 1, "dihedral": 1,
    "quaternion8": 0, "sl2_3": 0, "gl2_3": 0, "remark_h": 0,
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """A named constructor with parameters, or an explicit generator list."""

    name: str
    params: tuple[int, ...] = ()
    degree: int = 0
    generators: tuple[str, ...] = ()

    @classmethod
    def parse(cls, tokens: Sequence[str]) -> "GroupSpec":
        if not tokens:
            raise UsageError("missing group specification")
        name, rest = tokens[0], list(tokens[1:])
        if name == "file":
            if len(rest) != 1:
                raise UsageError("usage: file PATH")
            try:
                text = Path(rest[0]).read_text()
            except OSError as exc:
                raise UsageError(str(exc)) from exc
            return cls.from_text(text)
        if name not in CONSTRUCTORS:
            raise UsageError(f"unknown group {name!r}; choose from {', '.join(sorted(CONSTRUCTORS))} or file")
        if len(rest) != CONSTRUCTORS[name]:
            raise UsageError(f"{name} takes {CONSTRUCTORS[name]} integer parameter(s)")
        try:
            params = tuple(int(t) for t in rest)
        except ValueError as exc:
            raise UsageError(f"bad parameter for {name}: {exc}") from exc
        return cls(name, params)

    @classmethod
    def from_text(cls, text: str) -> "GroupSpec":
        """Degree on the first line, then one generator per line in cycle notation."""
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise UsageError("empty group file")
        try:
            degree = int(lines[0])
        except ValueError as exc:
            raise UsageError(f"first line must be the degree, got {lines[0]!r}") from exc
        if degree < 1:
            raise UsageError("degree must be positive")
        gens = []
        for ln in lines[1:]:
            try:
                gens.append(format_cycles(parse_cycles(ln, degree)))
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        return cls("file", (), degree, tuple(gens))

    def to_text(self) -> str:
        if self.name != "file":
            raise ValueError("only explicit generator lists have a file form")
        return "\n".join([str(self.degree), *self.generators]) + "\n"

    def build(self) -> Group:
        if self.name == "file":
            return Group(self.degree, [parse_cycles(t, self.degree) for t in self.generators], name="file")
        if self.name == "remark_h":
            return C.remark_subgroup_H()[0]
        return getattr(C, self.name)(*self.params)

    def __str__(self) -> str:
        if self.name == "file":
            return f"file[{self.degree}; {' '.join(self.generators)}]"
        return " ".join([self.name, *map(str, self.params)])


def _spec_tokens(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("group", nargs="+", help="constructor name and parameters, or: file PATH")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit one JSON report per line")
    p.add_argument("--extended", action="store_true", help="run the long verifications")
    p.add_argument("--budget-order", type=int, default=None, metavar="N",
                   help="largest group order whose subgroup lattice may be enumerated")
    p.add_argument("--time-limit", type=float, default=None, metavar="S",
                   help="seconds allowed per lattice enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minsimple", description="Finite group engine and claim verifier.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("construct", help="build a group and summarize it")
    _spec_tokens(p)
    _add_common(p)

    p = verbs.add_parser("verify", help="run a claim suite")
    p.add_argument("claim_set", choices=[*CLAIM_SETS, "all"])
    _add_common(p)

    p = verbs.add_parser("dichotomy", help="check the subnormal-or-soluble hypothesis on a group")
    _spec_tokens(p)
    p.add_argument("--n", default="inf", help="defect bound, an integer or 'inf'")
    p.add_argument("--d", type=int, default=1, help="derived length bound")
    _add_common(p)

    p = verbs.add_parser("lemma31", help="derived-series index of subgroups with only subnormal overgroups")
    _spec_tokens(p)
    p.add_argument("--sub", action="append", default=[], metavar="PERM",
                   help="generator of the subgroup in cycle notation (repeatable); default checks all subgroups")
    _add_common(p)
    return parser


def _options(args) -> Options:
    return Options(extended=args.extended, budget_order=args.budget_order, time_limit=args.time_limit)


def _emit(report: Report, args, out) -> None:
    print(report.to_json() if args.json else report.line(), file=out)


def cmd_construct(args, out) -> int:
    spec = GroupSpec.parse(args.group)
    g = spec.build()
    dl = derived_length(g)
    info = {"group": str(spec), "degree": g.degree, "order": g.order(), "simple": is_simple(g),
            "derived_length": str(dl) if not isinstance(dl, int) else dl}
    if args.json:
        print(json.dumps(info, sort_keys=True), file=out)
    else:
        for k in ("group", "degree", "order", "simple", "derived_length"):
            print(f"{k}: {info[k]}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    options = _options(args)
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for report in run_claims(args.claim_set, options):
        counts[report.verdict] += 1
        _emit(report, args, out)
    if not args.json:
        print(f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped", file=out)
    if counts[FAIL]:
        return EXIT_FAIL
    if args.extended and counts[SKIPPED]:
        return EXIT_BUDGET
    return EXIT_OK


def _parse_n(text: str):
    if text.lower() in ("inf", "infinity", "unbounded"):
        return UNBOUNDED
    try:
        n = int(text)
    except ValueError as exc:
        raise UsageError(f"--n must be an integer or 'inf', got {text!r}") from exc
    if n < 0:
        raise UsageError("--n must be non-negative")
    return n


def cmd_dichotomy(args, out) -> int:
    spec = GroupSpec.parse(args.group)
    n = _parse_n(args.n)
    start = time.monotonic()
    g = spec.build()
    rep = check_dichotomy(g, n, args.d, _options(args).lattice_budget())
    millis = int((time.monotonic() - start) * 1000)
    holds = rep.hypothesis_holds()
    violations = rep.violations()
    c = rep.conclusion
    computed = {
        "hypothesis": "HOLDS" if holds else "FAILS",
        "classes": len(rep.records),
        "conclusion": c.kind,
        "derived_length": c.derived_length,
        "radical_order": c.radical.order() if c.radical is not None else None,
        "minimal_simple_order": c.minimal_simple.order() if c.minimal_simple is not None else None,
        "observed": rep.observed(),
    }
    witness = witness_cycles(violations[0].representative) if violations else None
    report = Report(f"dichotomy/{spec}", {"group": str(spec), "n": str(n), "d": args.d}, "HOLDS", computed,
                    PASS if holds else FAIL, witness, millis)
    if args.json:
        print(report.to_json(), file=out)
    else:
        print(f"{'order':>7} {'size':>6} {'defect':>14} {'derived':>12}  ok", file=out)
        for r in rep.records:
            mark = "yes" if r.satisfies(rep.n, rep.d) else "NO"
            print(f"{r.order:>7} {r.class_size:>6} {r.defect!s:>14} {r.derived_length!s:>12}  {mark}", file=out)
        print(f"hypothesis (n={n}, d={args.d}): {computed['hypothesis']} over {len(rep.records)} classes", file=out)
        if violations:
            v = violations[0]
            print(f"violating class: order {v.order}, generators {' '.join(witness)}", file=out)
        detail = f"S of order {computed['radical_order']}" if c.radical is not None else ""
        if c.minimal_simple is not None:
            detail += f", minimal simple M of order {computed['minimal_simple_order']}"
        print(f"conclusion: {c.kind}({c.derived_length}) {detail}".rstrip(), file=out)
    return EXIT_OK if holds else EXIT_FAIL


def _check_lemma31(g: Group, h: Group, budget) -> tuple[object, bool]:
    res = lemma31_r(g, h, budget)
    if not res.all_subnormal_above:
        return res, True
    terms = derived_series(g).terms
    r = res.r
    ok = (r is not None and is_subgroup(terms[r], h)
          and (r == 0 or not is_subgroup(terms[r - 1], h))
          and (r == 0) == (h.order() == g.order()))
    return res, ok


def cmd_lemma31(args, out) -> int:
    spec = GroupSpec.parse(args.group)
    start = time.monotonic()
    g = spec.build()
    budget = _options(args).lattice_budget()
    if args.sub:
        try:
            subs = [Group(g.degree, [parse_cycles(t, g.degree) for t in args.sub])]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        subs = [cl.representative for cl in subgroup_lattice(g, budget).classes]
    failed = False
    for h in subs:
        res, ok = _check_lemma31(g, h, budget)
        failed |= not ok
        gens = witness_cycles(h) or ["()"]
        report = Report(
            f"lemma3.1/{spec}/{'+'.join(gens)}",
            {"group": str(spec), "subgroup": gens, "subgroup_order": h.order()},
            True,
            {"all_subnormal_above": res.all_subnormal_above, "r": res.r, "consistent": ok},
            PASS if ok else FAIL,
            None if ok else gens,
            int((time.monotonic() - start) * 1000),
        )
        _emit(report, args, out)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify, "dichotomy": cmd_dichotomy, "lemma31": cmd_lemma31}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        # construction preconditions (GroupError is a ValueError)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
