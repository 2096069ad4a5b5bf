"""Command-line front end: compute, verify, render, and benchmark."""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import closedforms, elimination, oeis, recurrences, walks
from .boards import Board, PartialKind, enumerate_partial_tilings, enumerate_tilings
from .errors import TileWalksError, UnknownSequence
from .qsqrt5 import ALPHA, BETA, SQRT5
from .render import svg_for_tiling


@dataclass
class RunReport:
    command: list
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    def add(self, name, passed, expected=None, actual=None, first_failure=None):
        self.checks.append(
            {
                "name": name,
                "passed": bool(passed),
                "expected": None if expected is None else str(expected),
                "actual": None if actual is None else str(actual),
                "first_failure": first_failure,
            }
        )

    @property
    def ok(self):
        return all(c["passed"] for c in self.checks)

    def to_json(self):
        payload = {
            "command": self.command,
            "checks": self.checks,
            "ok": self.ok,
            "timings": {k: round(v, 6) for k, v in sorted(self.timings.items())},
        }
        return json.dumps(payload, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# sequence routes


def _brute_fib(n, budget):
    if n == 0:
        return 0
    return len(enumerate_tilings(Board(1, n - 1)))


def _brute_partial(kind):
    def inner(n, budget):
        if n == 0:
            return 0
        return len(enumerate_partial_tilings(Board(2, n), kind))

    return inner


def _system_column(system, member):
    def inner(upto):
        return list(recurrences.eval_system(system(), upto)[member].values)

    return inner


def _spec_column(spec_factory):
    def inner(upto):
        return list(recurrences.eval_recurrence(spec_factory(), upto).values)

    return inner


def _fib_closed(n):
    return int(((ALPHA**n - BETA**n) / SQRT5).rational_value())


SEQUENCES = {
    "v": {
        "brute": lambda n, budget: walks.brute_v(n, budget=budget),
        "recurrence": _spec_column(recurrences.v_theorem_spec),
        "closed": closedforms.v_fibonacci_form,
    },
    "w": {
        "brute": lambda n, budget: walks.brute_w_by_line(n, budget=budget).w2,
        "recurrence": _system_column(recurrences.walk_system, "r2"),
    },
    "w-domino": {
        "brute": lambda n, budget: walks.brute_w_by_line(
            n, squares_allowed=False, budget=budget
        ).w2,
        "recurrence": _spec_column(recurrences.domino_only_recurrence),
        "closed": closedforms.w_domino_fibonacci_form,
    },
    "r": {
        "brute": lambda n, budget: len(enumerate_tilings(Board(2, n))),
        "recurrence": _system_column(recurrences.tiling_system, "r"),
    },
    "a": {
        "brute": _brute_partial(PartialKind.A),
        "recurrence": _system_column(recurrences.tiling_system, "a"),
    },
    "c": {
        "brute": _brute_partial(PartialKind.C),
        "recurrence": _system_column(recurrences.tiling_system, "c"),
    },
    "d": {
        "brute": _brute_partial(PartialKind.D),
        "recurrence": _system_column(recurrences.tiling_system, "d"),
    },
    "r1": {
        "brute": lambda n, budget: walks.brute_w_by_line(n, budget=budget).w1,
        "recurrence": _system_column(recurrences.walk_system, "r1"),
    },
    "fib": {
        "brute": _brute_fib,
        "recurrence": _spec_column(recurrences.fibonacci_spec),
        "closed": _fib_closed,
    },
}

BY_LINE_MEMBERS = ("r", "r1", "r2")  # columns of the w-by-line pseudo-sequence


def _route_values(name, route, upto, budget, shards=1):
    table = SEQUENCES[name][route]
    if route == "recurrence":
        return table(upto)
    if route == "closed":
        return [table(n) for n in range(upto + 1)]
    if name in ("w", "r1") and shards > 1:
        return [
            getattr(walks.brute_w_by_line(n, budget=budget, shards=shards),
                    "w2" if name == "w" else "w1")
            for n in range(upto + 1)
        ]
    return [table(n, budget) for n in range(upto + 1)]


def cmd_seq(args):
    report = RunReport(command=["seq", args.name] + _echo(args))
    if args.name == "w-by-line":
        columns = {}
        routes = ["brute", "recurrence"] if args.route == "all" else [args.route]
        for route in routes:
            t0 = time.perf_counter()
            if route == "brute":
                by = [walks.brute_w_by_line(n, budget=args.budget, shards=args.shards)
                      for n in range(args.upto + 1)]
                for i, member in enumerate(BY_LINE_MEMBERS):
                    columns[f"{route}:{member}"] = [
                        (b.w0, b.w1, b.w2)[i] for b in by
                    ]
            elif route == "recurrence":
                tables = recurrences.eval_system(recurrences.walk_system(), args.upto)
                for member in BY_LINE_MEMBERS:
                    columns[f"{route}:{member}"] = list(tables[member].values)
            else:
                raise UnknownSequence("w-by-line has brute and recurrence routes only")
            report.timings[route] = time.perf_counter() - t0
    else:
        if args.name not in SEQUENCES:
            raise UnknownSequence(f"unknown sequence {args.name!r}")
        available = SEQUENCES[args.name]
        routes = list(available) if args.route == "all" else [args.route]
        for route in routes:
            if route not in available:
                raise UnknownSequence(
                    f"sequence {args.name!r} has no {route!r} route "
                    f"(available: {', '.join(available)})"
                )
        columns = {}
        for route in routes:
            t0 = time.perf_counter()
            columns[route] = _route_values(
                args.name, route, args.upto, args.budget, args.shards
            )
            report.timings[route] = time.perf_counter() - t0
    _check_column_agreement(report, columns)
    _emit_table(args, report, columns)
    return report


def _check_column_agreement(report, columns):
    # keys are "route" or "route:member"; only same-member columns must agree
    groups = {}
    for key in sorted(columns):
        member = key.split(":", 1)[1] if ":" in key else ""
        groups.setdefault(member, []).append(key)
    for keys in groups.values():
        for other in keys[1:]:
            first_bad = next(
                (i for i, (x, y) in enumerate(zip(columns[keys[0]], columns[other]))
                 if x != y),
                None,
            )
            report.add(
                f"agree:{keys[0]}={other}",
                first_bad is None,
                first_failure=first_bad,
            )


def _emit_table(args, report, columns, out=None):
    out = out if out is not None else sys.stdout
    keys = sorted(columns)
    length = min(len(columns[k]) for k in keys)
    if args.format == "json":
        payload = {
            "name": args.name,
            "columns": {k: [str(v) for v in columns[k][:length]] for k in keys},
        }
        print(json.dumps(payload, sort_keys=True, indent=2), file=out)
    elif args.format == "csv":
        print(",".join(["n"] + keys), file=out)
        for n in range(length):
            print(",".join([str(n)] + [str(columns[k][n]) for k in keys]), file=out)
    elif args.format == "bfile":
        if len(keys) != 1:
            print("# b-file output uses the first route only", file=out)
        for n in range(length):
            print(f"{n} {columns[keys[0]][n]}", file=out)
    else:
        header = "n\t" + "\t".join(keys)
        print(header, file=out)
        for n in range(length):
            print("\t".join([str(n)] + [str(columns[k][n]) for k in keys]), file=out)


def _echo(args):
    echo = []
    for k in ("upto", "route", "format", "budget", "shards", "n_max", "suite"):
        if hasattr(args, k) and getattr(args, k) is not None:
            echo.append(f"--{k.replace('_', '-')}={getattr(args, k)}")
    return echo


# ---------------------------------------------------------------------------
# verify suites


def _verify_theorems(report):
    upto = 200
    specs = recurrences.v_closed_recurrences()
    tables = [list(recurrences.eval_v_route(s, upto).values) for s in specs]
    report.add("v-three-routes-agree", tables[0] == tables[1] == tables[2])
    closed = [closedforms.v_fibonacci_form(n) for n in range(upto + 1)]
    report.add("v-fibonacci-closed-form", closed == tables[0])
    divisible = all(
        ((n + 1) * tables[0][n - 1] + (n + 2) * tables[0][n - 2]) % n == 0
        for n in range(2, upto + 1)
    )
    report.add("v-polynomial-step-divisibility", divisible)
    w9 = recurrences.eval_recurrence(recurrences.w_ninth_order_spec(), 50)
    sys_r2 = recurrences.eval_system(recurrences.walk_system(), 50)["r2"]
    report.add("w-ninth-order-equals-system", w9.values == sys_r2.values)
    report.add("w-composed-form", recurrences.composed_form_check(w9, 50))


def _verify_lemmas(report):
    from math import comb

    for n in range(17):
        hist = {}
        for t in enumerate_tilings(Board(1, n)):
            k = len(t.dominoes())
            hist[k] = hist.get(k, 0) + 1
        expected = {k: comb(n - k, k) for k in range(n // 2 + 1) if comb(n - k, k)}
        report.add(f"domino-count-histogram-n{n}", hist == expected)
    for check in recurrences.verify_intermediate_identities(30):
        report.add(f"identity:{check.name}", check.passed,
                   first_failure=check.first_failure)


def _verify_elimination(report):
    m = elimination.build_matrix_m()
    printed = tuple(tuple(int(x) for x in row) for row in m.entries)
    report.add("matrix-matches-printed", printed == elimination.PRINTED_M)
    basis = elimination.kernel(m)
    expected = (1, -5, 7, -3, -4, 2, 1, -3, 5, -2, -1)
    report.add("kernel-dimension-one", len(basis) == 1, expected=1, actual=len(basis))
    report.add("kernel-vector", basis == [expected], expected=expected,
               actual=basis[0] if basis else None)
    mv = m.mul_vector(basis[0]) if basis else None
    report.add("kernel-annihilated", mv is not None and all(x == 0 for x in mv))
    for check in elimination.verify_la_lb_combination(30):
        report.add(f"elimination:{check.name}", check.passed,
                   first_failure=check.first_failure)
    for check in elimination.charpoly_factorization_check():
        report.add(check.name, check.passed, actual=check.detail)


def _verify_closed_forms(report):
    report.add("alpha-beta-product", ALPHA * BETA == -1)
    report.add("alpha-beta-sum", ALPHA + BETA == 1)
    binet = closedforms.binet_identity_check(100)
    report.add("binet-identities", binet.passed, first_failure=binet.first_failure)
    rec = list(recurrences.eval_recurrence(recurrences.domino_only_recurrence(), 50).values)
    sys_w = list(recurrences.eval_system(recurrences.domino_only_system(), 50)["r2"].values)
    fibo = [closedforms.w_domino_fibonacci_form(n) for n in range(51)]
    expl = [closedforms.w_domino_explicit(n) for n in range(51)]
    ceil = [closedforms.w_domino_ceiling(n) for n in range(51)]
    report.add("domino-system-vs-recurrence", sys_w == rec)
    report.add("domino-fibonacci-vs-recurrence", fibo == rec)
    report.add("domino-explicit-vs-recurrence", expl == rec)
    report.add("domino-ceiling-vs-recurrence", ceil == rec)
    splits = all(
        closedforms.w_domino_even_form(k) == rec[2 * k]
        and closedforms.w_domino_odd_form(k) == rec[2 * k + 1]
        for k in range(25)
    )
    report.add("domino-even-odd-splits", splits)


def _verify_oeis(report):
    pairs = [
        ("fib", "A000045", _spec_column(recurrences.fibonacci_spec)(45)),
        ("v", "A001629", _spec_column(recurrences.v_theorem_spec)(40)),
        ("r", "A030186", _system_column(recurrences.tiling_system, "r")(40)),
        ("w-domino", "A054454",
         _spec_column(recurrences.domino_only_recurrence)(40)),
    ]
    for name, seq_id, values in pairs:
        bfile = oeis.load_fixture(seq_id)
        match = oeis.find_offset_shift(values, bfile)
        report.add(
            f"oeis:{name}-vs-{seq_id}",
            match.passed and match.matched >= 20,
            expected=">=20 matched terms",
            actual=f"shift {match.offset_shift}, matched {match.matched}",
        )


VERIFY_SUITES = {
    "theorems": _verify_theorems,
    "lemmas": _verify_lemmas,
    "elimination": _verify_elimination,
    "closed-forms": _verify_closed_forms,
    "oeis": _verify_oeis,
}


def cmd_verify(args):
    report = RunReport(command=["verify", args.suite])
    suites = VERIFY_SUITES if args.suite == "all" else {args.suite: VERIFY_SUITES[args.suite]}
    for name, fn in suites.items():
        t0 = time.perf_counter()
        fn(report)
        report.timings[name] = time.perf_counter() - t0
    return report


# ---------------------------------------------------------------------------
# render and bench


def cmd_render(args):
    rows, cols = (int(x) for x in args.board.lower().split("x"))
    svg = svg_for_tiling(Board(rows, cols), args.index,
                         squares_allowed=not args.dominoes_only)
    with open(args.out, "w") as fh:
        fh.write(svg)
    report = RunReport(command=["render", args.board, str(args.index)])
    report.add("svg-written", True, actual=args.out)
    return report


def cmd_bench(args):
    report = RunReport(command=["bench"] + _echo(args))
    n_max = args.n_max
    t0 = time.perf_counter()
    v_brute = [walks.brute_v(n, budget=args.budget) for n in range(min(n_max, 20) + 1)]
    report.timings["v:brute"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    v_rec = list(recurrences.eval_recurrence(recurrences.v_theorem_spec(), n_max).values)
    report.timings["v:recurrence"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    v_closed = [closedforms.v_fibonacci_form(n) for n in range(n_max + 1)]
    report.timings["v:closed"] = time.perf_counter() - t0
    report.add("v-routes-agree",
               v_brute == v_rec[: len(v_brute)] == v_closed[: len(v_brute)]
               and v_rec == v_closed)

    t0 = time.perf_counter()
    wd_brute = [
        walks.brute_w_by_line(n, squares_allowed=False, budget=args.budget,
                              shards=args.shards).w2
        for n in range(n_max + 1)
    ]
    report.timings["w-domino:brute"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    wd_rec = list(
        recurrences.eval_recurrence(recurrences.domino_only_recurrence(), n_max).values
    )
    report.timings["w-domino:recurrence"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    wd_closed = [closedforms.w_domino_fibonacci_form(n) for n in range(n_max + 1)]
    report.timings["w-domino:closed"] = time.perf_counter() - t0
    report.add("w-domino-routes-agree", wd_brute == wd_rec == wd_closed)
    if args.shards > 1:
        unsharded = [
            walks.brute_w_by_line(n, squares_allowed=False, budget=args.budget).w2
            for n in range(n_max + 1)
        ]
        report.add("shard-independence", unsharded == wd_brute)
    return report


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tilewalks",
        description="Exact walk counts over square/domino tilings of 1xn and 2xn boards",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_seq = sub.add_parser("seq", help="emit a sequence table by one or all routes")
    p_seq.add_argument("name", help=f"one of: {', '.join(SEQUENCES)}, w-by-line")
    p_seq.add_argument("--upto", type=int, default=10)
    p_seq.add_argument("--route", choices=["brute", "recurrence", "closed", "all"],
                       default="recurrence")
    p_seq.add_argument("--format", choices=["json", "csv", "bfile", "text"],
                       default="text")
    p_seq.add_argument("--budget", type=int, default=walks.DEFAULT_BUDGET,
                       help="tiling-count cap for the brute route")
    p_seq.add_argument("--shards", type=int, default=1)
    p_seq.set_defaults(fn=cmd_seq)

    p_ver = sub.add_parser("verify", help="run an invariant suite")
    p_ver.add_argument("suite", choices=list(VERIFY_SUITES) + ["all"])
    p_ver.add_argument("--offline", action="store_true",
                       help="never touch the network (suites are offline anyway)")
    p_ver.set_defaults(fn=cmd_verify)

    p_ren = sub.add_parser("render", help="render one tiling and its walks as SVG")
    p_ren.add_argument("board", help="ROWSxCOLS, e.g. 2x3")
    p_ren.add_argument("index", type=int)
    p_ren.add_argument("--out", required=True)
    p_ren.add_argument("--dominoes-only", action="store_true")
    p_ren.set_defaults(fn=cmd_render)

    p_ben = sub.add_parser("bench", help="time brute vs recurrence vs closed routes")
    p_ben.add_argument("--n-max", type=int, default=10)
    p_ben.add_argument("--budget", type=int, default=walks.DEFAULT_BUDGET)
    p_ben.add_argument("--shards", type=int, default=1)
    p_ben.set_defaults(fn=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        report = args.fn(args)
    except TileWalksError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.cmd != "seq":
        print(report.to_json())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
