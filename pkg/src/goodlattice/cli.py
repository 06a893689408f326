"""Command-line front end: ``goodlattice {cf,discrepancy,subgroup,verify,charsum}``.

Exit status: 0 when every check passes, 1 when a mathematical check fails,
2 on usage errors.  Worker count comes from ``GOODLATTICE_THREADS``
(default: number of logical cores); results never depend on it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np
from sympy import primerange

from . import __version__
from .characters import (
    Character,
    burgess_bound,
    interval_sum,
    lemma1_bound,
    lemma1_sum,
    lemma1_sums_all,
)
from .contfrac import cf_stats, expand
from .lattice import EXACT_LIMIT, LatticePointSet, discrepancy_bound, discrepancy_exact
from .modmath import DLOG_LIMIT, coset, is_prime, make_context, subgroup
from .theorems import (
    hypothesis_check,
    theorem1_fraction,
    theorem1_proofstep_check,
    theorem2_search,
    threshold_t,
)

THREADS_ENV = "GOODLATTICE_THREADS"
CSV_VERSION = 1

CSV_HEADERS = {
    "cf": ["p", "a", "length", "sum", "max", "quotients"],
    "discrepancy": ["p", "a", "d", "d_decimal", "gamma1", "gamma2", "mode", "cf_bound"],
    "subgroup": ["p", "order", "v", "element"],
    "verify": ["p", "theorem", "order", "v", "value", "bound", "pass"],
    "charsum": ["p", "j", "param", "re", "im", "abs", "bound", "pass"],
}


class UsageError(Exception):
    pass


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _pmap(fn, items, threads):
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def rational(q: Fraction) -> dict:
    q = Fraction(q)
    return {"exact": f"{q.numerator}/{q.denominator}", "decimal": float(q)}


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if p < 2 or not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def _prime_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    if lo_i > hi_i or lo_i < 1:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo_i, hi_i


# --- commands ----------------------------------------------------------------


def cmd_cf(args, threads):
    p = args.p
    if args.all:
        a_vals = np.arange(1, p)
        rows = []
        for a in a_vals.tolist():
            cf = expand(a, p)
            rows.append([p, a, cf.length, sum(cf.quotients), max(cf.quotients), ",".join(map(str, cf.quotients))])
        sums, biggest, _ = cf_stats(a_vals, p)
        results = {
            "rows": [dict(zip(CSV_HEADERS["cf"], r)) for r in rows],
            "min_sum": int(sums.min()),
            "max_max_quotient": int(biggest.max()),
        }
        return {"p": p, "all": True}, results, rows, True
    if args.a is None:
        raise UsageError("give a residue a or --all")
    try:
        cf = expand(args.a, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    quotients = ",".join(map(str, cf.quotients))
    results = {
        "quotients": list(cf.quotients),
        "convergents": [f"{h}/{k}" for h, k in cf.convergents],
        "sum": sum(cf.quotients),
        "max": max(cf.quotients),
        "length": cf.length,
    }
    row = [p, args.a, cf.length, results["sum"], results["max"], quotients]
    return {"p": p, "a": args.a}, results, [row], True


def cmd_discrepancy(args, threads):
    p, a = args.p, args.a
    if not 1 <= a <= p - 1:
        raise UsageError(f"a must lie in [1, {p - 1}]")
    params = {"p": p, "a": a, "mode": "bound" if args.bound else "exact", "max_p_exact": args.max_p_exact}
    cf = expand(a, p)
    if args.bound:
        b = discrepancy_bound(cf)
        results = {"cf_bound": b, "sum_quotients": sum(cf.quotients), "cf_constant": 3}
        return params, results, [[p, a, "", "", "", "", "", b]], True
    if p > args.max_p_exact:
        raise UsageError(f"p={p} exceeds --max-p-exact={args.max_p_exact}; use --bound")
    rep = discrepancy_exact(LatticePointSet(p, a), max_p=args.max_p_exact)
    g1, g2, mode = rep.argmax_box
    results = {
        "d": rational(rep.d_value),
        "box": {"gamma1": rational(g1), "gamma2": rational(g2), "mode": mode},
        "cf_bound": rep.cf_bound,
        "cf_constant": rep.cf_constant,
        "sum_quotients": sum(cf.quotients),
    }
    ok = rep.d_value <= rep.cf_bound
    row = [p, a, f"{rep.d_value.numerator}/{rep.d_value.denominator}", float(rep.d_value), str(g1), str(g2), mode, rep.cf_bound]
    return params, results, [row], ok


def cmd_subgroup(args, threads):
    p = args.p
    ctx = make_context(p, max_p=args.max_p_dlog)
    try:
        U = subgroup(ctx, args.order)
        R = coset(U, args.coset)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    elems = [int(e) for e in R.elements]
    results = {"p": p, "order": R.order, "v": R.v, "index": R.index, "generator": ctx.g, "elements": elems}
    rows = [[p, R.order, R.v, e] for e in elems]
    return {"p": p, "order": args.order, "v": args.coset}, results, rows, True


def _verify_prime(job):
    """Worker: one prime of a ``verify`` run.  Returns a JSON-ready dict."""
    p, theorem, order, index, v, opts = job
    if p == 2:
        return {"p": p, "skipped": "p must be odd"}
    if order is None:
        order = (p - 1) // index if (p - 1) % index == 0 else None
    if order is None or (p - 1) % order:
        return {"p": p, "skipped": "order does not divide p-1"}
    if v % p == 0:
        return {"p": p, "skipped": "coset representative is 0 mod p"}
    ctx = make_context(p, max_p=opts["max_p_dlog"])
    R = coset(subgroup(ctx, order), v)
    h1, h2 = hypothesis_check(p, len(R))
    out = {"p": p, "order": order, "v": R.v, "hypothesis_thm1": h1, "hypothesis_thm2": h2}
    if theorem == "1":
        f = theorem1_fraction(R)
        out.update(t=f.t, t_log2=16 * math.log2(p), omega_fraction=rational(f.fraction), value=float(f.fraction), bound=0.5)
        out["pass"] = f.fraction >= Fraction(1, 2)
    elif theorem in ("2", "corollary"):
        f = theorem2_search(R)
        out.update(best_a=f.best_a, best_sum=f.best_sum, t2_bound=f.t2_bound)
        if theorem == "2":
            out.update(value=f.best_sum, bound=f.t2_bound, **{"pass": f.holds})
        else:
            if p > opts["max_p_exact"]:
                return {"p": p, "skipped": "p exceeds --max-p-exact"}
            d = discrepancy_exact(LatticePointSet(p, f.best_a), max_p=opts["max_p_exact"]).d_value
            ratio = float(d) / (math.log(p) * math.log(math.log(p)))
            out.update(d=rational(d), corollary_ratio=ratio, value=ratio, bound=500.0, **{"pass": ratio <= 500})
    elif theorem == "lemma1":
        c = opts["c"] if opts["c"] is not None else threshold_t(p)
        sums = np.abs(lemma1_sums_all(ctx, c)[1:])
        bound = lemma1_bound(p, c)
        worst = int(np.argmax(sums)) + 1
        out.update(c=float(c), max_abs=float(sums.max()), worst_j=worst, value=float(sums.max()), bound=bound)
        out["pass"] = bool(sums.max() <= bound)
    elif theorem == "burgess":
        worst_ratio = 0.0
        Ns = np.arange(1, p)
        bounds = {r: np.array([burgess_bound(p, int(N), r) for N in Ns]) for r in (1, 2, 3)}
        for j in range(1, p - 1):
            partial = np.abs(np.cumsum(Character(ctx, j).values(Ns)))
            for r in (1, 2, 3):
                worst_ratio = max(worst_ratio, float((partial / bounds[r]).max()))
        out.update(value=worst_ratio, bound=1.0, **{"pass": worst_ratio <= 1.0})
    elif theorem == "proofstep":
        t = opts["t"] if opts["t"] is not None else threshold_t(p)
        bad = [a for a in R if not theorem1_proofstep_check(p, a, t)]
        out.update(t=float(t), counterexamples=bad, value=len(bad), bound=0, **{"pass": not bad})
    return out


def cmd_verify(args, threads):
    lo, hi = args.range
    if args.order is None and args.index is None:
        args.index = 1
    primes = [p for p in primerange(max(lo, 3), hi + 1)]
    opts = {"max_p_exact": args.max_p_exact, "max_p_dlog": args.max_p_dlog, "c": args.c, "t": args.t}
    jobs = [(p, args.theorem, args.order, args.index, args.coset, opts) for p in primes]
    per_prime = _pmap(_verify_prime, jobs, threads)
    skipped = [r for r in per_prime if "skipped" in r]
    for r in skipped:
        print(f"warning: p={r['p']} skipped ({r['skipped']})", file=sys.stderr)
    checked = [r for r in per_prime if "skipped" not in r]
    ok = all(r["pass"] for r in checked)
    rows = [[r["p"], args.theorem, r["order"], r["v"], r["value"], r["bound"], r["pass"]] for r in checked]
    params = {
        "range": [lo, hi],
        "theorem": args.theorem,
        "order": args.order,
        "index": args.index,
        "coset": args.coset,
        "c": args.c,
        "t": args.t,
        "max_p_exact": args.max_p_exact,
    }
    results = {"primes": checked, "skipped": [r["p"] for r in skipped], "all_pass": ok}
    return params, results, rows, ok


def cmd_charsum(args, threads):
    p = args.p
    ctx = make_context(p, max_p=args.max_p_dlog)
    if args.char is not None and not 0 <= args.char <= p - 2:
        raise UsageError(f"character index must lie in [0, {p - 2}]")
    params = {"p": p, "char": args.char, "sweep": args.sweep, "interval": args.interval, "lemma1": args.lemma1}
    rows = []
    if args.interval is not None:
        N = args.interval
        if N < 1:
            raise UsageError("--interval must be >= 1")
        js = range(p - 1) if args.sweep else [args.char]
        entries = []
        for j in js:
            s = interval_sum(Character(ctx, j), N)
            b = burgess_bound(p, N, 2)
            good = j == 0 or abs(s) <= b
            entries.append({"j": j, "sum": {"re": s.real, "im": s.imag}, "abs": abs(s), "burgess_r2": b, "pass": good})
            rows.append([p, j, N, s.real, s.imag, abs(s), b, good])
        ok = all(e["pass"] for e in entries)
        results = {"N": N, "entries": entries, "all_pass": ok}
        if not args.sweep:
            results["value"] = entries[0]["sum"]
        return params, results, rows, ok
    c = args.lemma1
    if c < 1:
        raise UsageError("--lemma1 c must be >= 1")
    bound = lemma1_bound(p, c)
    if args.sweep:
        sums = lemma1_sums_all(ctx, c)[1:]
        js = range(1, p - 1)
    else:
        if args.char == 0:
            raise UsageError("lemma1 needs a non-principal character")
        sums = np.array([lemma1_sum(p, c, Character(ctx, args.char))])
        js = [args.char]
    entries = []
    for j, s in zip(js, sums):
        s = complex(s)
        entries.append({"j": j, "sum": {"re": s.real, "im": s.imag}, "abs": abs(s), "pass": abs(s) <= bound})
        rows.append([p, j, c, s.real, s.imag, abs(s), bound, abs(s) <= bound])
    mx = max(e["abs"] for e in entries)
    ok = mx <= bound
    results = {"c": c, "bound": bound, "bound_log2": 1e4 * p**0.875 * math.log2(p) ** 2 / math.sqrt(c), "max_abs": mx, "all_pass": ok}
    if not args.sweep:
        results["entries"] = entries
    return params, results, rows, ok


COMMANDS = {
    "cf": cmd_cf,
    "discrepancy": cmd_discrepancy,
    "subgroup": cmd_subgroup,
    "verify": cmd_verify,
    "charsum": cmd_charsum,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="goodlattice", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    g = fmt.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="emit one JSON report")
    g.add_argument("--csv", action="store_true", help="emit CSV rows")
    fmt.add_argument("--max-p-exact", type=int, default=EXACT_LIMIT, help="largest p for the O(p^2) discrepancy scan")
    fmt.add_argument("--max-p-dlog", type=int, default=DLOG_LIMIT, help="largest p for the discrete-log table")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cf", parents=[fmt], help="continued fraction of a/p")
    s.add_argument("p", type=_prime)
    s.add_argument("a", type=int, nargs="?")
    s.add_argument("--all", action="store_true", help="one row per a in [1, p-1]")

    s = sub.add_parser("discrepancy", parents=[fmt], help="discrepancy of x -> (x/p, {ax/p})")
    s.add_argument("p", type=_prime)
    s.add_argument("a", type=int)
    m = s.add_mutually_exclusive_group()
    m.add_argument("--exact", action="store_true", help="exact O(p^2) scan (default)")
    m.add_argument("--bound", action="store_true", help="continued-fraction upper bound only")

    s = sub.add_parser("subgroup", parents=[fmt], help="list a coset v*U of the order-m subgroup")
    s.add_argument("p", type=_prime)
    s.add_argument("order", type=int)
    s.add_argument("--coset", type=int, default=1)

    s = sub.add_parser("verify", parents=[fmt], help="empirical checks over a range of primes")
    s.add_argument("range", type=_prime_range, help="LO..HI or a single prime")
    o = s.add_mutually_exclusive_group()
    o.add_argument("--order", type=int, help="subgroup order m")
    o.add_argument("--index", type=int, help="subgroup index (p-1)/m; default 1")
    s.add_argument("--coset", type=int, default=1)
    s.add_argument("--theorem", required=True, choices=["1", "2", "corollary", "lemma1", "burgess", "proofstep"])
    s.add_argument("--c", type=float, help="rectangle parameter for lemma1 (default 16 ln p)")
    s.add_argument("--t", type=float, help="threshold for proofstep (default 16 ln p)")

    s = sub.add_parser("charsum", parents=[fmt], help="character sums and the Lemma-1 double sum")
    s.add_argument("p", type=_prime)
    w = s.add_mutually_exclusive_group(required=True)
    w.add_argument("--char", type=int, help="character index j")
    w.add_argument("--sweep", action="store_true", help="all characters")
    q = s.add_mutually_exclusive_group(required=True)
    q.add_argument("--interval", type=int, help="sum over x = 1..N")
    q.add_argument("--lemma1", type=float, help="double sum over the rectangle family for c")
    return ap


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [[_fmt(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    return "\n".join(lines)


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def render(command, report, rows, as_json, as_csv) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2)
    header = CSV_HEADERS[command]
    if as_csv:
        buf = io.StringIO()
        buf.write(f"# goodlattice csv v{CSV_VERSION} {command}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return _table(header, rows)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on usage errors
    start = time.perf_counter()
    try:
        threads = thread_count()
        params, results, rows, ok = COMMANDS[args.command](args, threads)
    except (UsageError, ValueError) as exc:
        print(f"goodlattice {args.command}: error: {exc}", file=sys.stderr)
        return 2
    params["threads"] = threads
    report = {
        "command": args.command,
        "argv": argv,
        "parameters": params,
        "results": results,
        "ok": ok,
        "wall_time": time.perf_counter() - start,
        "version": __version__,
    }
    print(render(args.command, report, rows, args.json, args.csv))
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
