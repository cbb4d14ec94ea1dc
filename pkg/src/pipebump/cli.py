"""Command-line front end: ``pipebump <command> ...``.

Output goes to stdout as JSON (default) or TSV and is deterministic; timing
goes to stderr.  Exit status is 0 when everything passes, 1 on a failed
verification and 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Sequence

from .bump import DEC, INC, bounded_bump
from .golden import replay_all
from .macdonald import inverse_macdonald, macdonald_map, verify_macdonald
from .perm import Permutation, all_permutations
from .pipedream import PipeDream, enumerate_pipe_dreams, schubert, schubert_via_transition
from .qanalog import comaj_table_rows, macmahon_check, verify_q_macdonald, verify_q_transition
from .tableaux import verify_fk
from .transition import (
    bounded_chain,
    bounded_transition,
    inverse_bounded_transition,
    inverse_transition_map,
    transition_chain,
    transition_map,
)
from .words import enumerate_reduced_words

N_CAP = 7
N_FAST_CAP = 5

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    rows: list[dict] = field(default_factory=list)
    columns: list[str] | None = None
    failures: int = 0

    def add(self, row: dict, passed: bool = True) -> None:
        self.rows.append(row)
        if not passed:
            self.failures += 1

    def summary(self) -> dict:
        return {"cases": len(self.rows), "failed": self.failures, "passed": len(self.rows) - self.failures}


# ---- parsing and formatting ----------------------------------------------------


def parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def parse_perm(text: str) -> Permutation:
    values = parse_ints(text)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise UsageError(f"{text!r} is not a permutation in one-line notation")
    return Permutation(values)


def check_n(n: int, slow: bool, fast_cap: int = N_FAST_CAP) -> int:
    cap = N_CAP if slow else fast_cap
    if not 1 <= n <= cap:
        hint = "" if slow or n > N_CAP else " (use --slow for larger n)"
        raise UsageError(f"n must lie in 1..{cap}{hint}")
    return n


def fmt_word(w: Sequence[int]) -> str:
    """Digit string when every letter is a single digit, else comma separated."""
    if all(0 <= x <= 9 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def _tsv_cell(v) -> str:
    if isinstance(v, bool):
        return "PASS" if v else "FAIL"
    if isinstance(v, (list, tuple)):
        if all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            return fmt_word(v)
        return " ".join(_tsv_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        body = {"command": report.command, "rows": report.rows, "summary": report.summary()}
        return json.dumps(body, indent=2, sort_keys=True)
    columns = report.columns or (list(report.rows[0]) if report.rows else [])
    lines = ["\t".join(columns)]
    for row in report.rows:
        lines.append("\t".join(_tsv_cell(row.get(c, "")) for c in columns))
    return "\n".join(lines)


def _dream(args) -> PipeDream:
    if args.r is None or args.j is None:
        raise UsageError("a pipe dream needs both --r and --j")
    try:
        return PipeDream.from_biword(parse_ints(args.r), parse_ints(args.j))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dream_json(d: PipeDream) -> dict:
    return {**d.to_json(), "rows": list(d.rows), "permutation": list(d.permutation.window)}


# ---- commands ------------------------------------------------------------------------


def cmd_reduced_words(args) -> Report:
    rep = Report("reduced-words", columns=["word"])
    for a in enumerate_reduced_words(parse_perm(args.pi)):
        rep.add({"word": list(a)})
    return rep


def cmd_pipe_dreams(args) -> Report:
    rep = Report("pipe-dreams", columns=["r", "j", "rows", "weight"])
    for d in enumerate_pipe_dreams(parse_perm(args.pi), strategy=args.strategy):
        r, j = d.biword
        rep.add({"r": list(r), "j": list(j), "rows": list(d.rows), "weight": repr(d.weight())})
    return rep


def cmd_schubert(args) -> Report:
    pi = parse_perm(args.pi)
    poly = schubert_via_transition(pi) if args.via == "transition" else schubert(pi)
    rep = Report("schubert", columns=["coeff", "exponents"])
    for term in poly.to_json():
        rep.add(term)
    return rep


def cmd_bump(args) -> Report:
    direction = DEC if args.direction == "dec" else INC
    a = parse_ints(args.a)
    b = parse_ints(args.b) if args.b else a
    res = bounded_bump(a, b, args.column, direction)
    rep = Report("bump")
    rep.add(
        {
            "a": list(res.a),
            "b": list(res.b),
            "row": res.row,
            "column": res.column,
            "outcome": res.outcome.value,
        }
    )
    return rep


def cmd_transition(args) -> Report:
    rep = Report("transition")
    bounded = args.a is not None
    if args.inverse:
        if args.branch is None:
            raise UsageError("--inverse needs --branch Q,R")
        q, r = _pair(args.branch)
        if bounded:
            e, f = parse_ints(args.a), parse_ints(args.b or "")
            pair = inverse_bounded_transition(e, f, q, r, args.k)
            rep.add({"a": list(pair.a), "b": list(pair.b)})
        else:
            d = inverse_transition_map(_dream(args), q, r)
            rep.add(_dream_json(d))
        return rep
    if bounded:
        step = bounded_transition(parse_ints(args.a), parse_ints(args.b or ""))
        out = {"a": list(step.result.a), "b": list(step.result.b)}
    else:
        step = transition_map(_dream(args))
        out = {"E": step.result.to_json()}
    rep.add({**out, "q": step.q, "r": step.r, "k": step.k})
    return rep


def _pair(text: str) -> tuple[int, int]:
    values = parse_ints(text)
    if len(values) != 2:
        raise UsageError(f"expected Q,R, got {text!r}")
    return values[0], values[1]


def cmd_chain(args) -> Report:
    if args.a is not None:
        chain = bounded_chain(parse_ints(args.a), parse_ints(args.b or ""))
    else:
        chain = transition_chain(_dream(args))
    rep = Report("chain", columns=["q", "r"])
    for q, r in chain:
        rep.add({"q": q, "r": r})
    return rep


def cmd_macdonald(args) -> Report:
    rep = Report("macdonald")
    if args.inverse:
        if args.c is None:
            raise UsageError("--inverse needs --c together with --r and --j")
        pair = inverse_macdonald(parse_ints(args.c), _dream(args))
        rep.add({"a": list(pair.a), "b": list(pair.b)})
        return rep
    if args.a is None or args.b is None:
        raise UsageError("macdonald needs --a and --b")
    cd = macdonald_map(parse_ints(args.a), parse_ints(args.b))
    rep.add({"c": list(cd.c), **_dream_json(cd.D)})
    return rep


def cmd_verify(args) -> Report:
    kind = args.kind
    rep = Report(f"verify {kind}")
    if kind == "macdonald":
        for row in verify_macdonald(check_n(args.n, args.slow), jobs=args.jobs):
            rep.add(row.to_json(), row.passed)
    elif kind == "q-macdonald":
        for chk in verify_q_macdonald(check_n(args.n, args.slow), sample=args.sample, seed=args.seed):
            rep.add(chk.to_json(), chk.passed)
    elif kind == "q-transition":
        for pi in all_permutations(check_n(args.n, args.slow)):
            if pi.is_identity:
                continue
            chk = verify_q_transition(pi)
            rep.add(chk.to_json(), chk.passed)
    elif kind == "fk":
        if args.shape is None:
            raise UsageError("verify fk needs --lambda")
        fk = verify_fk(parse_ints(args.shape), args.x)
        rep.add(fk.to_json(), fk.passed)
    elif kind == "macmahon":
        for n in range(2, check_n(args.n, args.slow, fast_cap=N_CAP) + 1):
            mm = macmahon_check(n)
            rep.add(mm.to_json(), mm.passed)
    return rep


COMAJ_TABLE_COLUMNS = ["i", "h", "insert", "y", "comaj(y)", "h-1", "v"]


def cmd_comaj_table(args) -> Report:
    word = parse_ints(args.word)
    lengths = range(1, len(word) + 1) if args.prefixes else [len(word)]
    columns = (["prefix"] if args.prefixes else []) + COMAJ_TABLE_COLUMNS
    rep = Report("appendix-table", columns=columns)
    for m in lengths:
        for row in comaj_table_rows(word[:m], args.wire):
            out = {"prefix": list(word[:m])} if args.prefixes else {}
            out.update(
                {
                    "i": row["i"],
                    "h": row["h"],
                    "insert": list(row["insert"]),
                    "y": list(row["y"]),
                    "comaj(y)": row["comaj_y"],
                    "h-1": row["h_minus_1"],
                    "v": row["v"],
                }
            )
            rep.add(out)
    return rep


def cmd_replay_examples(args) -> Report:
    rep = Report("replay-paper", columns=["group", "name", "pass", "detail"])
    for case in replay_all():
        rep.add({"group": case.group, "name": case.name, "pass": case.passed, "detail": case.detail}, case.passed)
    return rep


# ---- argument parser -----------------------------------------------------------------


def _add_dream_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", help="biword top row r_D")
    p.add_argument("--j", help="biword bottom row j_D")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv"], default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify runs")
    common.add_argument("--slow", action="store_true", help=f"allow n up to {N_CAP}")

    parser = argparse.ArgumentParser(prog="pipebump", description="Bounded bumping, pipe dreams and reduced word identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduced-words", parents=[common], help="list reduced words of PI")
    p.add_argument("pi")
    p.set_defaults(func=cmd_reduced_words)

    p = sub.add_parser("pipe-dreams", parents=[common], help="list reduced pipe dreams of PI")
    p.add_argument("pi")
    p.add_argument("--strategy", choices=["chains", "brute"], default="chains")
    p.set_defaults(func=cmd_pipe_dreams)

    p = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of PI")
    p.add_argument("pi")
    p.add_argument("--via", choices=["pipe-dreams", "transition"], default="pipe-dreams")
    p.set_defaults(func=cmd_schubert)

    p = sub.add_parser("bump", parents=[common], help="bounded bump of (a, b) from a column")
    p.add_argument("--a", required=True)
    p.add_argument("--b", help="bounded word (defaults to a, giving Little's bump)")
    p.add_argument("--column", type=int, required=True)
    p.add_argument("--direction", choices=["dec", "inc"], default="dec")
    p.set_defaults(func=cmd_bump)

    p = sub.add_parser("transition", parents=[common], help="T on a pipe dream or BT on a bounded pair")
    _add_dream_args(p)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--branch", help="Q,R for the inverse")
    p.add_argument("--k", type=int, default=0, help="deletion column for the bounded inverse")
    p.set_defaults(func=cmd_transition)

    p = sub.add_parser("chain", parents=[common], help="transition chain Y(D) or Y'(a, b)")
    _add_dream_args(p)
    p.add_argument("--a")
    p.add_argument("--b")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("macdonald", parents=[common], help="M(a, b) or its inverse")
    _add_dream_args(p)
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_macdonald)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("kind", choices=["macdonald", "q-macdonald", "q-transition", "fk", "macmahon"])
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--sample", type=int, help="check this many random permutations")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lambda", dest="shape", help="partition, e.g. 2,1")
    p.add_argument("--x", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("appendix-table", parents=[common], help="augmented comaj table of a word along a wire")
    p.add_argument("--word", required=True)
    p.add_argument("--wire", type=int, required=True)
    p.add_argument("--prefixes", action="store_true", help="one table per prefix of the word")
    p.set_defaults(func=cmd_comaj_table)

    p = sub.add_parser("replay-paper", parents=[common], help="replay the stored worked examples")
    p.set_defaults(func=cmd_replay_examples)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.jobs < 1:
        print("pipebump: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"pipebump: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(report, args.format))
    summary = report.summary()
    print(
        f"{report.command}: {summary['passed']}/{summary['cases']} ok in {time.perf_counter() - start:.2f}s",
        file=sys.stderr,
    )
    return EXIT_FAIL if report.failures else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
