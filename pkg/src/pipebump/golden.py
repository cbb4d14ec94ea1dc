"""Replays of the worked examples stored in ``data/golden.json``."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .bump import bounded_bump
from .macdonald import inverse_macdonald, macdonald_map
from .perm import Permutation
from .pipedream import PipeDream, trace_wires
from .polynomial import Polynomial
from .qanalog import comaj_table_rows, augmented_comaj_word, comaj_insertion_profile, q_factorial, specialized_bpoly
from .transition import bounded_chain, bounded_transition, from_chain, transition_chain, transition_map
from .words import comaj, evaluate, insert, wire_row


@lru_cache(maxsize=None)
def load_golden() -> dict:
    return json.loads(resources.files("pipebump").joinpath("data/golden.json").read_text())


@dataclass(frozen=True)
class Case:
    group: str
    name: str
    passed: bool
    detail: str = ""


def _digits(s: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in s)


def decode_printed_pipe_dream(r: str, second: str) -> PipeDream:
    """Read a printed ``(r, x)`` pair where ``x`` may be rows or columns.

    Exactly one reading must give a pipe dream (or both readings agree).
    """
    rr, xx = _digits(r), _digits(second)
    readings = set()
    for build in (PipeDream.from_rows, PipeDream.from_biword):
        try:
            readings.add(build(rr, xx))
        except ValueError:
            pass
    if len(readings) != 1:
        raise ValueError(f"({r}, {second}) does not decode to a unique pipe dream")
    return readings.pop()


def replay_bumps() -> list[Case]:
    g = load_golden()
    cases = []
    for n, ex in enumerate(g["bounded_bump"], start=1):
        res = bounded_bump(ex["a"], ex["b"], ex["column"], ex["direction"])
        got = (list(res.a), list(res.b), res.row, res.column, res.outcome.value)
        want = (ex["out_a"], ex["out_b"], ex["row"], ex["last_column"], ex["outcome"])
        cases.append(Case("bounded_bump", f"example {n}", got == want, f"got {got}"))
    ex = g["wire_insertion_trace"]
    a, j, i = tuple(ex["a"]), ex["wire"], ex["column"]
    h = wire_row(a, j, i)
    tilde = insert(a, i, h - 1)
    trace: list = []
    res = bounded_bump(tilde, tilde, i, +1, trace=trace)
    ok = [t for t, _ in trace] == ex["pushed_columns"] and list(res.a) == ex["y"]
    cases.append(Case("bounded_bump", "wire insertion pushes", ok, f"{[t for t, _ in trace]} {res.a}"))
    return cases


def replay_pipe_dream_example() -> list[Case]:
    ex = load_golden()["pipe_dream_example"]
    d = PipeDream.from_biword(ex["r"], ex["j"])
    weight = Polynomial({tuple(ex["weight"]["exponents"]): ex["weight"]["coeff"]})
    return [
        Case("pipe_dream", "rows", list(d.rows) == ex["i"], str(d.rows)),
        Case("pipe_dream", "permutation", list(d.permutation.window) == ex["permutation"], str(d.permutation)),
        Case("pipe_dream", "wire tracing", list(trace_wires(d).permutation().window) == ex["permutation"]),
        Case("pipe_dream", "reduced", d.is_reduced),
        Case("pipe_dream", "weight", d.weight() == weight, repr(d.weight())),
        Case("pipe_dream", "roundtrip", PipeDream.from_rows(ex["r"], ex["i"]) == d),
    ]


def replay_transitions() -> list[Case]:
    g = load_golden()
    cases = []
    ex = g["transition_example"]
    d = PipeDream.from_biword(ex["D"]["r"], ex["D"]["j"])
    step = transition_map(d)
    want = PipeDream.from_biword(ex["E"]["r"], ex["E"]["j"])
    cases.append(Case("transition", "example", (step.result, step.q, step.r) == (want, ex["q"], ex["r"]), repr(step)))
    tab = g["transition_chain_table"]
    for n, row in enumerate(tab["rows"], start=1):
        d = decode_printed_pipe_dream(*row["D"])
        e = decode_printed_pipe_dream(*row["E"])
        step = transition_map(d)
        pi = Permutation(row["pi"])
        ok = (
            d.permutation == pi
            and list(pi.lex_largest_inversion()) == row["rs"]
            and step.result == e
            and [step.q, step.r] == row["qr"]
        )
        cases.append(Case("transition", f"chain table row {n}", ok, repr(step)))
    first = decode_printed_pipe_dream(*tab["rows"][0]["D"])
    chain = [list(x) for x in transition_chain(first)]
    cases.append(Case("transition", "chain", chain == tab["chain"], str(chain)))
    cases.append(Case("transition", "chain replay", from_chain(tab["chain"]) == first))
    six = g["shared_chain_pairs"]
    for a, b in six["pairs"]:
        ok = [list(x) for x in bounded_chain(a, b)] == six["chain"]
        cases.append(Case("shared_chain", f"{a} {b}", ok and evaluate(a) == Permutation(six["pi"])))
    return cases


def _replay_trace(group: str, rows: list[dict]) -> list[Case]:
    cases = []
    for n, row in enumerate(rows, start=1):
        a, b = tuple(row["a"]), tuple(row["b"])
        pi = Permutation(row["pi"])
        ok = evaluate(a) == pi
        detail = []
        if row["qr"] is not None:
            step = bounded_transition(a, b)
            ok &= [step.q, step.r] == row["qr"] and step.k == row["k"]
            nxt = rows[n] if n < len(rows) else None
            if nxt is not None:
                ok &= step.result.a == tuple(nxt["a"]) and step.result.b == tuple(nxt["b"])
            detail.append(f"step {step.branch} k={step.k}")
        cd = macdonald_map(a, b)
        want_d = PipeDream.from_biword(row["r"], row["j"])
        ok &= cd.c == tuple(row["c"]) and cd.D == want_d
        ok &= tuple(inverse_macdonald(cd.c, cd.D)) == (a, b)
        detail.append(f"c={cd.c} D={cd.D}")
        cases.append(Case(group, f"row {n}", bool(ok), "; ".join(detail)))
    return cases


def replay_macdonald_tables() -> list[Case]:
    g = load_golden()
    return _replay_trace("table_short", g["macdonald_trace_short"]) + _replay_trace(
        "table_long", g["macdonald_trace_long"]
    )


def replay_comaj_tables() -> list[Case]:
    g = load_golden()
    cases = []
    for n, tab in enumerate(g["comaj_tables"], start=1):
        rows = comaj_table_rows(tab["a"], tab["wire"])
        got = [{k: (list(v) if isinstance(v, tuple) else v) for k, v in r.items()} for r in rows]
        prof = augmented_comaj_word(tab["a"], tab["wire"])
        ok = got == tab["rows"] and list(prof.values) == tab["v"] and prof.is_record_permutation()
        cases.append(Case("comaj_table", f"table {n} a={tab['a']}", ok))
    ex = g["gupta_example"]
    prof = comaj_insertion_profile(ex["a"], ex["j"])
    ok = comaj(ex["a"]) == ex["comaj_a"] and list(prof) == ex["profile"]
    ok &= all(comaj(word) == cm for word, cm, _ in ex["rows"])
    cases.append(Case("gupta", "example", ok, str(prof)))
    q = g["q_example"]
    pi = Permutation(q["pi"])
    lhs = specialized_bpoly(pi)
    ok = list(lhs.coeffs) == q["coeffs"] and lhs == q_factorial(3).shift(1)
    cases.append(Case("q_example", "[3,2,1]", ok, repr(lhs)))
    return cases


def replay_all() -> list[Case]:
    return (
        replay_bumps()
        + replay_pipe_dream_example()
        + replay_transitions()
        + replay_macdonald_tables()
        + replay_comaj_tables()
    )
