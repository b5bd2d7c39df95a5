"""Command-line entry point.

Exit codes: 0 when every requested check passes, 1 when an identity fails
(the failing case is printed), 2 for usage errors.  Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import checks
from .classify import BlowupSpec, classify, sweep
from . import cohomology as co
from . import gw
from . import mirror
from . import quantum as qh
from . import schubert as sc
from . import weyl

OK, FAILED, USAGE = 0, 1, 2


class Failure(Exception):
    """An identity did not hold; carries the counterexample."""

    def __init__(self, detail):
        super().__init__(json.dumps(detail, default=str))
        self.detail = detail


# ---------------------------------------------------------------------------
# argument parsing helpers


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"^(?:(E)(?:\^(\d+))?|(sb|s)\[([\d,\s]*)\]|(\d+(?:/\d+)?))$")


def parse_class(text: str, k: int, n: int, basis: str) -> co.CohomClass:
    """Parse ``"E*s[2,1] - 2*E^2 + 1"``: s[...] is sigma, sb[...] is sigmabar.

    Which of s or sb is allowed follows the basis (B1 or B2).
    """
    text = text.replace(" ", "")
    if not text or text == "0":
        return co.CohomClass(k, n, basis, {})
    want = "s" if basis == "B1" else "sb"
    build = co.b1 if basis == "B1" else co.b2
    total = co.CohomClass(k, n, basis, {})
    pos = 0
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse class {text!r}")
        pos = m.end()
        coeff, power, part = Fraction(-1 if m.group(1) == "-" else 1), 0, ()
        for f in m.group(2).split("*"):
            fm = _FACTOR.match(f)
            if not fm:
                raise ValueError(f"bad factor {f!r} in {text!r}")
            if fm.group(1):
                power += int(fm.group(2) or 1)
            elif fm.group(3):
                if fm.group(3) != want:
                    raise ValueError(f"basis {basis} uses {want}[...], got {fm.group(3)}[...]")
                part = parse_partition(fm.group(4))
            else:
                coeff *= Fraction(fm.group(5))
        total = total + build(k, n, power, part, coeff)
    if pos != len(text):
        raise ValueError(f"cannot parse class {text!r}")
    return total


def emit(obj, fmt: str = "json", out=None):
    out = out or sys.stdout
    if fmt == "csv":
        rows = obj if isinstance(obj, list) else [obj]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else [],
                           lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v
                        for k, v in r.items()})
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(obj, indent=2, default=str) + "\n")


def _fail_on(report: dict, context: dict):
    bad = [k for k, v in report.items() if v is False]
    if bad:
        raise Failure({**context, "failed": bad})


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args):
    if args.sweep:
        if args.max_n is None:
            raise ValueError("--sweep needs --max-n")
        rows = []
        for r in sweep(args.max_n, args.min_n):
            s = r.spec
            rows.append({"k": s.k, "n": s.n, "a": s.a, "b": s.b, "centerK": r.centerK,
                         "centerN": r.centerN, "codim": r.codim, "isFano": r.isFano,
                         "fanoIndex": r.fanoIndex if r.fanoIndex is not None else "",
                         "bundleType": "+".join(sorted(r.bundleType)),
                         "fibrationNumber": r.fibrationNumber})
        emit(rows, args.format or "csv")
        return
    for opt in ("k", "n", "a", "b"):
        if getattr(args, opt) is None:
            raise ValueError(f"classify needs --{opt} (or --sweep)")
    emit(classify(BlowupSpec(args.k, args.n, args.a, args.b)).to_json())


def cmd_schubert(args):
    box = sc.BoxSpec(args.k, args.n)
    a = sc.sigma(box, parse_partition(args.left))
    b = sc.sigma(box, parse_partition(args.right))
    prod = sc.product(a, b)
    if args.check and prod != sc.lr_product(a, b):
        raise Failure({"left": args.left, "right": args.right, "pieri": str(prod),
                       "lr": str(sc.lr_product(a, b))})
    emit({"product": str(prod), **prod.to_json()})


def cmd_xkn(args):
    basis = args.basis
    a = parse_class(args.left, args.k, args.n, basis)
    if args.action == "convert":
        emit(co.convert(a, args.to).to_json())
        return
    if args.right is None:
        raise ValueError(f"xkn {args.action} needs --right")
    b = parse_class(args.right, args.k, args.n, basis)
    if args.action == "pair":
        emit({"pairing": str(co.pair(a, b))})
    else:
        prod = co.b1_mul(a, b) if basis == "B1" else co.b2_mul(a, b)
        emit({"product": str(prod), **prod.to_json()})


def cmd_gw(args):
    rows = [e.to_json() for e in gw.table(args.k, args.n, args.degree)]
    emit(rows, args.format or "json")


def cmd_weyl(args):
    if args.action == "zd":
        P = weyl.ParabolicSpec(args.k, args.n)
        a = weyl.z_d_hecke(args.d1, args.d2, args.k, args.n)
        b = weyl.z_d_closed(args.d1, args.d2, args.k, args.n)
        if a != b:
            raise Failure({"hecke": list(a), "closed": list(b)})
        zp = weyl.min_coset_rep(a, P)
        emit({"d": [args.d1, args.d2], "k": args.k, "n": args.n, "z_d": list(a),
              "reducedWord": list(weyl.reduced_word(a)), "z_dP": list(zp),
              "length": weyl.length(a), "lengthP": weyl.length(zp)})
        return
    if args.sweep:
        cases = [(d1, d2, k, n) for n in range(4, args.max_n + 1) for k in range(2, n - 1)
                 for d1 in range(args.max_d + 1) for d2 in range(args.max_d + 1)
                 if d1 >= 2 or d2 >= 2]
    else:
        for opt in ("d1", "d2", "k", "n"):
            if getattr(args, opt) is None:
                raise ValueError(f"weyl bound needs --{opt} (or --sweep)")
        cases = [(args.d1, args.d2, args.k, args.n)]
    rows = []
    for d1, d2, k, n in cases:
        r = weyl.verify_len_bound((d1, d2), k, n)
        rows.append({"d1": d1, "d2": d2, "k": k, "n": n, "lhs": r.lhs, "bound": r.bound,
                     "gap": r.gap, "ok": r.ok, "exceptionalCase": r.exceptionalCase})
    emit(rows if args.sweep else rows[0], (args.format or "csv") if args.sweep else "json")
    bad = [r for r in rows if not r["ok"]]
    if bad:
        raise Failure(bad[0])


def cmd_qh(args):
    if args.action == "present":
        emit(qh.presentation(args.n).to_json())
        return
    if args.action == "mul":
        if args.left is None or args.right is None:
            raise ValueError("qh mul needs --left and --right")
        a = parse_class(args.left, 2, args.n, "B2")
        b = parse_class(args.right, 2, args.n, "B2")
        p = qh.qmul(a, b)
        emit({"product": str(p), **p.to_json()})
        return
    lo, hi = _range(args, 3)
    out = []
    for n in range(lo, hi + 1):
        rep = {"n": n,
               "relations": qh.verify_presentation_relations(n),
               "divisorLemmas": qh.verify_divisor_lemmas(n),
               "phi": qh.verify_phi_consistency(n)}
        out.append(rep)
    emit(out)
    for rep in out:
        for fam in ("relations", "divisorLemmas", "phi"):
            _fail_on(rep[fam], {"n": rep["n"], "family": fam})


def cmd_mirror(args):
    if args.action == "chain":
        if args.n < 4:
            raise ValueError("the elimination chain needs n >= 4")
        emit(mirror.build_chain(args.n).to_json())
        return
    lo, hi = _range(args, 3)
    out = []
    for n in range(lo, hi + 1):
        rep = {"n": n}
        if n >= 4:
            rep["theorem62"] = mirror.verify_theorem62(n)
        rep["jacobi"] = mirror.jacobi_ideal_isomorphism(n, seed=args.seed)
        rep["fTorClass"] = mirror.f_tor_class(n)
        if n <= 5:
            rep["criticalCount"] = {"q": ["1", "1"], "count": mirror.critical_count(n, 1, 1),
                                    "expected": (n - 1) ** 2}
        out.append(rep)
    emit(out)
    for rep in out:
        n = rep["n"]
        if "theorem62" in rep:
            _fail_on(rep["theorem62"], {"n": n, "family": "theorem62"})
        if not rep["jacobi"]["equal"]:
            raise Failure({"n": n, "family": "jacobi"})
        if rep["jacobi"]["axisHits"]:
            print(f"warning: n={n} axis hits at {rep['jacobi']['axisHits']}", file=sys.stderr)
        if not rep["fTorClass"]["equal"]:
            raise Failure({"n": n, "family": "fTorClass"})
        cc = rep.get("criticalCount")
        if cc and cc["count"] != cc["expected"]:
            raise Failure({"n": n, "family": "criticalCount", "count": cc["count"]})


def _range(args, floor: int) -> tuple[int, int]:
    lo = args.n_min if args.n_min is not None else floor
    hi = args.n_max if args.n_max is not None else lo
    if lo < floor or hi < lo:
        raise ValueError(f"need {floor} <= n-min <= n-max")
    return lo, hi


def _run_item(item):
    name, fn, fargs = item
    return checks.run_check(name, fn, fargs)


def cmd_verify_all(args):
    if args.max_n < 3:
        raise ValueError("--max-n must be at least 3")
    items = checks.suite(args.max_n, seed=args.seed)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_run_item, items))
    else:
        results = [_run_item(i) for i in items]
    results.sort(key=lambda c: c.name)
    for c in results:
        print(f"{'PASS' if c.ok else 'FAIL'} {c.name} {c.seconds:.2f}s", file=sys.stderr)
    failed = [c for c in results if not c.ok]
    if args.format == "csv":
        emit([{"name": c.name, "ok": c.ok, "detail": c.detail} for c in results], "csv")
    else:
        emit({"maxN": args.max_n, "seed": args.seed, "passed": len(results) - len(failed),
              "failed": len(failed), "checks": [c.to_json() for c in results]})
    if failed:
        raise Failure(failed[0].to_json())


# ---------------------------------------------------------------------------


def _global_options(suppress: bool) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    common.add_argument("--format", choices=("json", "csv"), default=default(None),
                        help="default: csv for sweeps, json otherwise")
    common.add_argument("--seed", type=int, default=default(0),
                        help="seed for randomized sample points")
    common.add_argument("--jobs", type=int, default=default(1), help="worker processes")
    return common


def build_parser() -> argparse.ArgumentParser:
    top = _global_options(suppress=False)
    # options repeated after the subcommand must not reset earlier ones
    common = _global_options(suppress=True)

    p = argparse.ArgumentParser(prog="grassblow", parents=[top],
                                description="Blowups of Grassmannians: exact verification runs.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="classify Bl_Z G(k,n)")
    for opt in ("k", "n", "a", "b"):
        c.add_argument(f"--{opt}", type=int)
    c.add_argument("--sweep", action="store_true")
    c.add_argument("--max-n", type=int)
    c.add_argument("--min-n", type=int, default=2)
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("schubert", parents=[common], help="Schubert calculus on G(k,n)")
    s.add_argument("action", choices=("mult",))
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--left", required=True, help="partition, e.g. 2,1")
    s.add_argument("--right", required=True)
    s.add_argument("--check", action="store_true", help="compare with Littlewood-Richardson")
    s.set_defaults(func=cmd_schubert)

    x = sub.add_parser("xkn", parents=[common], help="cohomology of X_{k,n}")
    x.add_argument("action", choices=("pair", "mult", "convert"))
    x.add_argument("--k", type=int, required=True)
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--basis", choices=("B1", "B2"), default="B1")
    x.add_argument("--left", required=True, help='class, e.g. "E*s[1] - 2*s[2,1]"')
    x.add_argument("--right")
    x.add_argument("--to", choices=("B1", "B2"), default="B2")
    x.set_defaults(func=cmd_xkn)

    g = sub.add_parser("gw", parents=[common], help="two-point Gromov-Witten tables")
    g.add_argument("action", choices=("table",))
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--degree", choices=("e", "l-e", "l"), required=True)
    g.set_defaults(func=cmd_gw)

    w = sub.add_parser("weyl", parents=[common], help="Hecke products and length bounds")
    w.add_argument("action", choices=("zd", "bound"))
    for opt in ("d1", "d2", "k", "n"):
        w.add_argument(f"--{opt}", type=int)
    w.add_argument("--sweep", action="store_true")
    w.add_argument("--max-d", type=int, default=5)
    w.add_argument("--max-n", type=int, default=10)
    w.set_defaults(func=cmd_weyl)

    q = sub.add_parser("qh", parents=[common], help="quantum cohomology of X_{2,n}")
    q.add_argument("action", choices=("present", "mul", "verify"))
    q.add_argument("--n", type=int)
    q.add_argument("--left")
    q.add_argument("--right")
    q.add_argument("--n-min", type=int)
    q.add_argument("--n-max", type=int)
    q.set_defaults(func=cmd_qh)

    m = sub.add_parser("mirror", parents=[common], help="Jacobi ring of the superpotential")
    m.add_argument("action", choices=("verify", "chain"))
    m.add_argument("--n", type=int)
    m.add_argument("--n-min", type=int)
    m.add_argument("--n-max", type=int)
    m.set_defaults(func=cmd_mirror)

    v = sub.add_parser("verify-all", parents=[common], help="run the full check suite")
    v.add_argument("--max-n", type=int, required=True)
    v.set_defaults(func=cmd_verify_all)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    if args.command in ("qh", "mirror") and args.action in ("present", "mul", "chain"):
        if args.n is None:
            parser.error(f"{args.command} {args.action} needs --n")
        if args.n < 3:
            parser.error("--n must be at least 3")
    if args.command in ("qh", "mirror") and args.action == "verify" and args.n is not None:
        args.n_min = args.n_min or args.n
    try:
        args.func(args)
    except Failure as f:
        print(f"FAILED: {f}", file=sys.stderr)
        return FAILED
    except (ValueError, KeyError, co.UnsupportedFeature, gw.DeferredDegree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    return OK


if __name__ == "__main__":
    sys.exit(main())
