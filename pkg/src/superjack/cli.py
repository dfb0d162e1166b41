"""Command-line front end.

Exit status: 0 on success, 1 for a structured error or a failed check, 2 for
usage errors.  Reports go to standard output; with ``--theta p/q`` every
coefficient is specialized to a rational number after the exact computation.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .cache import DiskCache, default_cache_dir
from .checks import verify_all
from .coeffs import ExcludedParameterError, PoleError, ThetaFunction, ThetaGuard, parse_rational
from .deformed import bound_check, super_jack
from .forms import GramReport, gram_matrix, hermite_gram, reproducing_check
from .mpoly import MPoly
from .operators import NotDivisibleError, NotEigenfunctionError, super_hermite, trig_eigenvalue
from .partitions import Partition, enumerate_partitions, in_fat_hook
from .symfunc import MONOMIAL, POWERSUM, SymFunc, jack, set_jack_store


class CliError(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _theta(text: str):
    if text == "symbolic":
        return None
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"theta must be 'symbolic' or p/q, got {text!r}") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        v = -1
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


# -- rendering -------------------------------------------------------------------

class Renderer:
    """Coefficient printing, symbolic or specialized at a guarded rational theta."""

    def __init__(self, theta: Fraction | None, guard: ThetaGuard):
        self.theta, self.guard = theta, guard
        if theta is not None:
            guard.check(theta)

    def __call__(self, c: ThetaFunction) -> str:
        if self.theta is None:
            return str(c)
        return str(c.specialize(self.theta, self.guard))

    @property
    def theta_label(self) -> str:
        return "symbolic" if self.theta is None else str(self.theta)


def _symfunc_json(f: SymFunc, r: Renderer) -> dict:
    out = f.to_json()
    for t, (_, c) in zip(out["terms"], f.sorted_terms()):
        t["coeff"] = r(c)
    out["terms"] = [t for t in out["terms"] if t["coeff"] != "0"]
    return out


def _mpoly_json(p: MPoly, r: Renderer) -> dict:
    out = p.to_json()
    for t, (_, c) in zip(out["terms"], p.sorted_terms()):
        t["coeff"] = r(c)
    out["terms"] = [t for t in out["terms"] if t["coeff"] != "0"]
    return out


def _label(lam) -> str:
    return ",".join(map(str, lam)) if lam else "[]"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _csv_symfunc(doc: dict) -> str:
    return _csv([["partition", "coeff"]] + [[_label(t["partition"]), t["coeff"]] for t in doc["terms"]])


def _csv_mpoly(doc: dict) -> str:
    names = MPoly.zero(doc["n"], doc["m"]).var_names()
    return _csv([names + ["coeff"]] + [t["exps"] + [t["coeff"]] for t in doc["terms"]])


def _csv_gram(doc: dict) -> str:
    labels = [_label(lam) for lam in doc["labels"]]
    rows = [[""] + labels]
    rows += [[lab] + row for lab, row in zip(labels, doc["matrix"])]
    rows.append(["expected_diagonal"] + doc["expected_diagonal"])
    rows.append(["pass", str(doc["pass"]).lower()])
    return _csv(rows)


def _csv_flat(doc: dict) -> str:
    rows = [["key", "value"]]
    for k, v in doc.items():
        rows.append([k, v if isinstance(v, str) else json.dumps(v, sort_keys=True)])
    return _csv(rows)


def _csv_checks(doc: dict) -> str:
    rows = [["check", "pass", "detail"]]
    rows += [[c["name"], str(c["pass"]).lower(), c.get("detail", "")] for c in doc["checks"]]
    rows.append(["summary", str(doc["pass"]).lower(), ""])
    return _csv(rows)


# -- commands ----------------------------------------------------------------------

def _require(args, *names):
    missing = [f"--{n.replace('_', '-') if n != 'lam' else 'lambda'}" for n in names
               if getattr(args, n) is None]
    if missing:
        raise CliError("usage", f"{args.command} requires {', '.join(missing)}")


def _hook_renderer(args) -> Renderer:
    return Renderer(args.theta, ThetaGuard.fat_hook(args.n, args.m))


def cmd_jack(args):
    _require(args, "lam")
    r = Renderer(args.theta, ThetaGuard.jack())
    f = jack(args.lam).to(args.basis)
    doc = _symfunc_json(f, r)
    doc.update({"partition": list(args.lam), "theta": r.theta_label})
    return doc, _csv_symfunc, True


def cmd_superjack(args):
    _require(args, "lam")
    r = _hook_renderer(args)
    sp = super_jack(args.lam, args.n, args.m)
    doc = _mpoly_json(sp.poly, r)
    doc.update({"partition": list(args.lam), "kernel": sp.kernel, "theta": r.theta_label})
    return doc, _csv_mpoly, True


def cmd_hermite(args):
    _require(args, "lam")
    r = _hook_renderer(args)
    if not in_fat_hook(args.lam, args.n, args.m):
        raise CliError("not-in-fat-hook",
                       f"partition {_label(args.lam)} is outside H_{{{args.n},{args.m}}}")
    doc = _mpoly_json(super_hermite(args.lam, args.n, args.m), r)
    doc.update({"partition": list(args.lam), "theta": r.theta_label})
    return doc, _csv_mpoly, True


def _gram_doc(report: GramReport, r: Renderer):
    doc = report.to_json(render=r)
    doc["theta"] = r.theta_label
    return doc, _csv_gram, report.passed


def cmd_gram(args):
    _require(args, "degree")
    r = _hook_renderer(args)
    return _gram_doc(gram_matrix(args.n, args.m, args.degree), r)


def cmd_hermite_gram(args):
    _require(args, "degree")
    r = _hook_renderer(args)
    return _gram_doc(hermite_gram(args.n, args.m, args.degree), r)


def cmd_eigen(args):
    _require(args, "lam")
    r = _hook_renderer(args)
    if not in_fat_hook(args.lam, args.n, args.m):
        raise CliError("not-in-fat-hook",
                       f"partition {_label(args.lam)} is outside H_{{{args.n},{args.m}}}")
    orders = [args.order] if args.order is not None else [1, 2, 3]
    values = [{"order": k, "value": r(trig_eigenvalue(args.lam, k, args.n, args.m))} for k in orders]
    doc = {"n": args.n, "m": args.m, "partition": list(args.lam),
           "eigenvalues": values, "theta": r.theta_label}

    def to_csv(d):
        return _csv([["order", "value"]] + [[v["order"], v["value"]] for v in d["eigenvalues"]])

    return doc, to_csv, True


def cmd_kernel_check(args):
    _require(args, "degree")
    rows = []
    for k in range(args.degree + 1):
        for lam in enumerate_partitions(k):
            sp = super_jack(lam, args.n, args.m)
            inside = in_fat_hook(lam, args.n, args.m)
            rows.append({"partition": list(lam), "in_fat_hook": inside,
                         "vanishes": sp.is_zero(), "pass": sp.is_zero() != inside})
    ok = all(row["pass"] for row in rows)
    doc = {"n": args.n, "m": args.m, "degree": args.degree, "cases": rows, "pass": ok}

    def to_csv(d):
        out = [["partition", "in_fat_hook", "vanishes", "pass"]]
        out += [[_label(c["partition"]), str(c["in_fat_hook"]).lower(), str(c["vanishes"]).lower(),
                 str(c["pass"]).lower()] for c in d["cases"]]
        return _csv(out)

    return doc, to_csv, ok


def cmd_reproducing_check(args):
    if args.lam is None and args.degree is None:
        raise CliError("usage", "reproducing-check requires --lambda or --degree")
    if args.lam is not None:
        mus = [args.lam]
    else:
        mus = [mu for k in range(args.degree + 1) for mu in enumerate_partitions(k, (args.n, args.m))]
    rows = []
    for mu in mus:
        if not in_fat_hook(mu, args.n, args.m):
            raise CliError("not-in-fat-hook",
                           f"partition {_label(mu)} is outside H_{{{args.n},{args.m}}}")
        rows.append({"partition": list(mu), "pass": reproducing_check(mu, args.n, args.m)})
    ok = all(row["pass"] for row in rows)
    doc = {"n": args.n, "m": args.m, "cases": rows, "pass": ok}

    def to_csv(d):
        return _csv([["partition", "pass"]] +
                    [[_label(c["partition"]), str(c["pass"]).lower()] for c in d["cases"]])

    return doc, to_csv, ok


def cmd_bound_check(args):
    _require(args, "degree")
    if args.theta is None:
        raise CliError("usage", "bound-check needs a rational --theta p/q")
    ThetaGuard.fat_hook(args.n, args.m).check(args.theta)
    rep = bound_check(args.n, args.m, args.theta, args.degree,
                      count=args.points, radius=args.radius, seed=args.seed)
    doc = {
        "n": args.n, "m": args.m, "degree": args.degree, "theta": str(rep.theta),
        "points": args.points, "radius": args.radius, "seed": args.seed,
        "checked": rep.checked, "worst_ratio": rep.worst_ratio,
        "failures": [{"partition": list(lam), "lhs": lhs, "rhs": rhs} for lam, _, lhs, rhs in rep.failures],
        "pass": rep.passed,
    }
    return doc, _csv_flat, rep.passed


def cmd_verify_all(args):
    _require(args, "degree")
    rep = verify_all(args.n, args.m, args.degree, seed=args.seed)
    doc = rep.to_json()
    for c in doc["checks"]:
        c.pop("seconds")
    return doc, _csv_checks, rep.passed


COMMANDS: dict[str, Callable] = {
    "jack": cmd_jack,
    "superjack": cmd_superjack,
    "hermite": cmd_hermite,
    "gram": cmd_gram,
    "hermite-gram": cmd_hermite_gram,
    "eigen": cmd_eigen,
    "kernel-check": cmd_kernel_check,
    "reproducing-check": cmd_reproducing_check,
    "bound-check": cmd_bound_check,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_nonneg, default=1, help="number of x variables (default 1)")
    common.add_argument("--m", type=_nonneg, default=1, help="number of y variables (default 1)")
    common.add_argument("--lambda", dest="lam", type=_partition, help='partition such as "3,1,1"')
    common.add_argument("--degree", type=_nonneg)
    common.add_argument("--theta", type=_theta, default=None, metavar="symbolic|p/q",
                        help="keep theta symbolic (default) or specialize to a rational")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cache-dir", help=f"coefficient cache (default ${'{'}SUPERJACK_CACHE_DIR{'}'} "
                                            f"or {default_cache_dir()})")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the disk cache")

    parser = argparse.ArgumentParser(prog="superjack", description="Exact Jack, super-Jack and "
                                     "super-Hermite computations with theorem checks.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    specs = {
        "jack": "Jack symmetric function P_lambda",
        "superjack": "super-Jack polynomial SP_lambda in (x, y)",
        "hermite": "super-Hermite polynomial SH_lambda",
        "gram": "Gram matrix of super-Jack polynomials in one degree",
        "hermite-gram": "Gram matrix of super-Hermite polynomials via the isometry",
        "eigen": "eigenvalues of the trigonometric integrals on SP_lambda",
        "kernel-check": "SP_lambda vanishes exactly outside the fat hook",
        "reproducing-check": "reproducing property of the kernel components",
        "bound-check": "numeric growth bound on random complex points",
        "verify-all": "run every invariant check and summarize",
    }
    for name, text in specs.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        if name == "jack":
            p.add_argument("--basis", choices=(MONOMIAL, POWERSUM), default=MONOMIAL)
        if name == "eigen":
            p.add_argument("--order", type=_positive, help="order r (default: 1, 2 and 3)")
        if name == "bound-check":
            p.add_argument("--points", type=_positive, default=50)
            p.add_argument("--radius", type=float, default=2.0)
        if name in ("bound-check", "verify-all"):
            p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if not args.no_cache:
        set_jack_store(DiskCache(args.cache_dir) if args.cache_dir else DiskCache())
    try:
        doc, to_csv, ok = COMMANDS[args.command](args)
    except CliError as exc:
        if exc.kind == "usage":
            print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
            return 2
        return _emit_error(out, args.command, exc.kind, str(exc))
    except ExcludedParameterError as exc:
        return _emit_error(out, args.command, "excluded-theta", str(exc))
    except PoleError as exc:
        return _emit_error(out, args.command, "pole", str(exc))
    except (NotDivisibleError, NotEigenfunctionError) as exc:
        return _emit_error(out, args.command, "theorem-check-failed", str(exc))
    except ValueError as exc:
        return _emit_error(out, args.command, "invalid-input", str(exc))
    finally:
        set_jack_store(None)

    if args.format == "csv":
        out.write(to_csv(doc))
    else:
        out.write(json.dumps(doc, sort_keys=False) + "\n")
    return 0 if ok else 1


def _emit_error(out, command: str, kind: str, message: str) -> int:
    out.write(json.dumps({"command": command, "error": kind, "message": message}) + "\n")
    return 1


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
