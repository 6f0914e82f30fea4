"""Command-line entry point: ``subcount <command> ...``.

Exit status is the worst verdict of the run: 0 Verified, 1 Mismatch or
CounterexampleFound, 2 Undecided, 64 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

from . import verify
from .exact import DEFAULT_MAX_LEVEL, CertifiedReal, Decision, compare, is_prime
from .groups import NodeCapExceeded, OrderCapExceeded, read_group_file, verify_pair
from .groups.corpus import Corpus, load_corpus, only_pgroups, probe_cases, run_corpus
from .groups.fileio import GroupFileError
from .qfunc import (MAIN_CONSTANT, ceiling_constant, euler_product, gauss_binom, gauss_binom_product,
                    sub_ceiling, sum_gauss_le_ceiling)
from .report import (Verdict, VerificationReport, bundle, dumps, format_enclosure, jsonable, worst)

EXIT_USAGE = 64
DISPLAY_LEVEL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


@dataclass
class RunConfig:
    command: str
    precision: Optional[int]
    workers: int
    fmt: str

    def __post_init__(self):
        if self.precision is not None and self.precision < 1:
            raise UsageError("precision cap must be >= 1")
        if self.workers < 1:
            raise UsageError("worker count must be >= 1")

    @property
    def max_level(self) -> int:
        return DEFAULT_MAX_LEVEL if self.precision is None else self.precision

    @property
    def display_level(self) -> int:
        return DISPLAY_LEVEL if self.precision is None else self.precision


@dataclass
class Outcome:
    reports: list[VerificationReport]
    human: list[str]
    extra: Optional[dict[str, Any]] = None
    csv_rows: Optional[list[dict[str, Any]]] = None

    @property
    def verdict(self) -> Verdict:
        return worst(r.verdict for r in self.reports)


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


# -- human rendering ---------------------------------------------------------

def _fmt_value(v: Any) -> str:
    if isinstance(v, CertifiedReal):
        return format_enclosure(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (Verdict, Decision)):
        return v.value
    if isinstance(v, (set, frozenset)):
        v = sorted(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt_value(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt_value(x)}" for k, x in v.items()) + "}"
    return str(v)


def render_report(r: VerificationReport, max_witnesses: int = 12) -> list[str]:
    inputs = " ".join(f"{k}={_fmt_value(v)}" for k, v in r.inputs.items())
    lines = [f"{r.verdict.value:<20} {r.statement_id:<18} {inputs}"]
    for w in r.witnesses[:max_witnesses]:
        lines.append("    " + ", ".join(f"{k}: {_fmt_value(v)}" for k, v in w.items()))
    if len(r.witnesses) > max_witnesses:
        lines.append(f"    ... {len(r.witnesses) - max_witnesses} more")
    return lines


# -- commands ----------------------------------------------------------------

def cmd_qbinom(args, cfg: RunConfig) -> Outcome:
    if args.r > args.m:
        raise UsageError(f"need 0 <= r <= m, got m={args.m}, r={args.r}")
    value = gauss_binom(args.m, args.r, args.p)
    other = gauss_binom_product(args.m, args.r, args.p)
    verdict = Verdict.VERIFIED if value == other else Verdict.MISMATCH
    rep = VerificationReport("qbinom", {"m": args.m, "r": args.r, "p": args.p}, verdict,
                             [{"recurrence": value, "product_formula": other}])
    return Outcome([rep], [str(value)])


def cmd_sbound(args, cfg: RunConfig) -> Outcome:
    s = sub_ceiling(args.p, args.a, cfg.display_level)
    rep = sum_gauss_le_ceiling(args.p, args.a, cfg.max_level)
    rep.witnesses[0]["S"] = s.value
    return Outcome([rep], [f"S({args.p}, {args.a}) = {format_enclosure(s.value)}", *render_report(rep)])


def cmd_capc(args, cfg: RunConfig) -> Outcome:
    level = cfg.display_level
    big = euler_product(args.p, level)
    small = ceiling_constant(args.p, level)
    cmp = compare(lambda lv: ceiling_constant(args.p, lv), MAIN_CONSTANT, cfg.max_level)
    verdict = {Decision.HOLDS: Verdict.VERIFIED, Decision.FAILS: Verdict.COUNTEREXAMPLE,
               Decision.UNDECIDED: Verdict.UNDECIDED}[cmp.decision]
    rep = VerificationReport("capc", {"p": args.p}, verdict,
                             [{"C(p)": big, "c(p)": small, "width": float(small.width),
                               "below": MAIN_CONSTANT}], cmp.level)
    lines = [f"C({args.p}) = {format_enclosure(big)}",
             f"c({args.p}) = {format_enclosure(small)}",
             f"c({args.p}) < 7.3722: {rep.verdict.value}"]
    return Outcome([rep], lines)


def cmd_table1(args, cfg: RunConfig) -> Outcome:
    reports = verify.check_table1(cfg.max_level, completeness=not args.no_completeness)
    lines = []
    for r in reports:
        lines.extend(render_report(r))
    return Outcome(reports, lines)


def _default_sweep_max(p: int, c: int, max_level: int) -> int:
    for rp, rc, top in verify.sweep_rows(max_level):
        if (rp, rc) == (p, c):
            return top
    row = verify.exception_threshold(p, c, max_level)
    if row.kind == "threshold" and row.max_rt:
        return row.max_rt
    if row.kind == "finite_set" and row.values:
        return max(row.values)
    raise UsageError(f"no finite exception range for p={p}, c={c}; pass --max")


def cmd_sweep(args, cfg: RunConfig) -> Outcome:
    if args.c < 1:
        raise UsageError("c must be >= 1")
    top = args.max if args.max is not None else _default_sweep_max(args.p, args.c, cfg.max_level)
    if top < args.p**args.c:
        raise UsageError(f"--max must be at least p^c = {args.p ** args.c}")
    rep = verify.sweep_prop34(args.p, args.c, top, cfg.workers, cfg.max_level)
    return Outcome([rep], render_report(rep))


def cmd_lemma0(args, cfg: RunConfig) -> Outcome:
    if args.p is None:
        rep = verify.lemma0_grid([q for q in range(2, 24) if is_prime(q)], 12, cfg.max_level)
        return Outcome([rep], render_report(rep))
    if args.c is None or args.c < 1:
        raise UsageError("lemma0 needs p and c >= 1")
    rt = args.rt if args.rt is not None else args.p**args.c
    try:
        rep = verify.check_lemma0(args.p, args.c, rt, cfg.max_level)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return Outcome([rep], render_report(rep))


def cmd_alpha(args, cfg: RunConfig) -> Outcome:
    threshold = args.threshold if args.threshold is not None else verify.ALPHA_PUBLISHED
    search = verify.alpha_optimum(threshold, cfg.max_level)
    rep = search.report
    best = search.best
    lines = [f"maximiser {{{', '.join(f'{p}^{c}' if c > 1 else str(p) for p, c in best.exponents)}}}",
             f"maximum    {format_enclosure(rep.witnesses[0]['objective'])}",
             f"threshold  {threshold} ({float(threshold)})",
             *render_report(rep)]
    extra = None
    rows = None
    if args.list_all:
        rows = [{"configuration": " ".join(f"{p}^{c}" for p, c in cfg_.exponents),
                 "objective": format_enclosure(cfg_.objective)} for cfg_ in search.configs]
        extra = {"configurations": rows}
        lines.append("")
        lines.extend(f"{r['objective']:<32} {r['configuration']}" for r in rows)
    return Outcome([rep], lines, extra, rows)


def cmd_verify_group(args, cfg: RunConfig) -> Outcome:
    try:
        data = read_group_file(args.group_file)
    except OrderCapExceeded as exc:
        rep = VerificationReport("verify-group", {"file": args.group_file}, Verdict.COUNTEREXAMPLE,
                                 [{"error": str(exc)}])
        return Outcome([rep], [f"error: {exc}"])
    G, T = data.group, data.subgroup
    try:
        reports = verify_pair(G, T, cfg.max_level)
    except NodeCapExceeded as exc:
        rep = VerificationReport("verify-group", {"file": args.group_file}, Verdict.COUNTEREXAMPLE,
                                 [{"error": str(exc)}])
        return Outcome([rep], [f"error: {exc}"])
    count = reports[0].witnesses[0]["count"]
    lines = [f"|G| = {G.order}, |T| = {T.order}, [G:T] = {G.order // T.order}, |sub(G,T)| = {count}"]
    for r in reports:
        lines.extend(render_report(r))
    return Outcome(reports, lines)


def _read_corpus(path) -> Corpus:
    try:
        return load_corpus(path)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot load corpus: {exc}") from exc


def cmd_corpus(args, cfg: RunConfig) -> Outcome:
    corpus = _read_corpus(args.corpus_file)
    if args.pgroups_only:
        corpus = only_pgroups(corpus)
    try:
        results = run_corpus(corpus, cfg.workers, cfg.max_level)
    except (OrderCapExceeded, NodeCapExceeded, KeyError, ValueError) as exc:
        raise UsageError(f"bad corpus entry: {exc}") from exc
    reports = [rep for res in results for rep in res.reports]
    probe = verify.conjecture_probe([verify.ProbeCase(r.label, r.sub_count, r.index) for r in results])
    reports.append(probe)
    rows = []
    for res in results:
        main = res.reports[0]
        tight = [rep.witnesses[0].get("tight") for rep in res.reports if rep.statement_id == "pgroup-bound"]
        rows.append({
            "pair": res.label, "order": res.order, "t_order": res.t_order, "index": res.index,
            "sub": res.sub_count, "main_margin": main.witnesses[0]["margin_lo"],
            "pgroup": ("tight" if tight[0] else "ok") if tight else "-",
            "verdict": res.verdict.value,
        })
    lines = [f"{'pair':<14} {'|G|':>5} {'|T|':>5} {'index':>6} {'|sub|':>6} {'margin':>14} {'p-grp':>6}  verdict"]
    for r in rows:
        lines.append(f"{r['pair']:<14} {r['order']:>5} {r['t_order']:>5} {r['index']:>6} {r['sub']:>6} "
                     f"{r['main_margin']:>14} {r['pgroup']:>6}  {r['verdict']}")
    counts = {}
    for res in results:
        counts[res.verdict.value] = counts.get(res.verdict.value, 0) + 1
    lines.append(f"{len(results)} pairs: " + (", ".join(f"{v} {k}" for k, v in sorted(counts.items())) or "none"))
    if probe.witnesses[0].get("max_case"):
        lines.append(f"largest observed exponent excess: {probe.witnesses[0]['max_case']} "
                     f"{format_enclosure(probe.witnesses[0]['max_observed'])}")
    return Outcome(reports, lines, {"summary": rows}, rows)


def cmd_conjecture_probe(args, cfg: RunConfig) -> Outcome:
    corpus = _read_corpus(args.corpus_file)
    rep = verify.conjecture_probe(probe_cases(corpus), cfg.display_level)
    return Outcome([rep], render_report(rep, max_witnesses=10**6))


# -- driver --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "json", "csv"], default=argparse.SUPPRESS,
                        help="output format (default human)")
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS,
                        help="precision cap: highest ladder level tried (env SUBCOUNT_PRECISION)")
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="worker processes (env SUBCOUNT_WORKERS)")

    parser = _Parser(prog="subcount", description="Certified checks of subgroup-count bounds.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial [m choose r]_p")
    p.add_argument("m", type=_nonneg)
    p.add_argument("r", type=_nonneg)
    p.add_argument("p", type=_prime)
    p.set_defaults(func=cmd_qbinom)

    p = sub.add_parser("sbound", parents=[common], help="S(p, a) and the Gaussian-sum check")
    p.add_argument("p", type=_prime)
    p.add_argument("a", type=_nonneg)
    p.set_defaults(func=cmd_sbound)

    p = sub.add_parser("capc", parents=[common], help="C(p) and c(p) enclosures")
    p.add_argument("p", type=_prime, nargs="?", default=2)
    p.set_defaults(func=cmd_capc)

    p = sub.add_parser("table1", parents=[common], help="recompute the exception table")
    p.add_argument("--no-completeness", action="store_true", help="skip the completeness scan")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive check over one exception row")
    p.add_argument("p", type=_prime)
    p.add_argument("c", type=int)
    p.add_argument("--max", type=_positive, default=None, help="largest multiple of p^c to check")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemma0", parents=[common], help="S(p,c) against 7.3722 p^(c log2(rt)/4)")
    p.add_argument("p", type=_prime, nargs="?")
    p.add_argument("c", type=int, nargs="?")
    p.add_argument("rt", type=_positive, nargs="?")
    p.set_defaults(func=cmd_lemma0)

    p = sub.add_parser("alpha", parents=[common], help="maximise the exponent constant")
    p.add_argument("--threshold", type=_rational, default=None, help="value to certify against (default 1.8919)")
    p.add_argument("--list-all", action="store_true", help="list every configuration")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("verify-group", parents=[common], help="all checks for one group file")
    p.add_argument("group_file")
    p.set_defaults(func=cmd_verify_group)

    p = sub.add_parser("corpus", parents=[common], help="all checks over a corpus")
    p.add_argument("corpus_file", nargs="?", default=None, help="corpus JSON (default: bundled)")
    p.add_argument("--pgroups-only", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("conjecture-probe", parents=[common], help="observed exponents over a corpus")
    p.add_argument("corpus_file", nargs="?", default=None)
    p.set_defaults(func=cmd_conjecture_probe)
    return parser


def _emit(outcome: Outcome, cfg: RunConfig, out) -> None:
    if cfg.fmt == "json":
        data = bundle(outcome.reports, cfg.command)
        if outcome.extra:
            data.update(jsonable(outcome.extra))
        out.write(dumps(data) + "\n")
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        if outcome.csv_rows:
            writer = csv.DictWriter(buf, fieldnames=list(outcome.csv_rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(outcome.csv_rows)
        else:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["statement_id", "verdict", "precision_used", "inputs", "witnesses"])
            for r in outcome.reports:
                d = r.to_dict()
                writer.writerow([d["statement_id"], d["verdict"], d["precision_used"],
                                 json.dumps(d["inputs"], sort_keys=True),
                                 json.dumps(d["witnesses"], sort_keys=True)])
        out.write(buf.getvalue())
    else:
        out.write("\n".join(outcome.human) + "\n")


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        precision = getattr(args, "precision", None)
        if precision is None:
            precision = _env_int("SUBCOUNT_PRECISION")
        workers = getattr(args, "workers", None)
        if workers is None:
            workers = _env_int("SUBCOUNT_WORKERS") or 1
        cfg = RunConfig(args.command, precision, workers, getattr(args, "format", "human"))
        outcome = args.func(args, cfg)
    except (UsageError, GroupFileError) as exc:
        print(f"subcount: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(outcome, cfg, out)
    return outcome.verdict.exit_code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
