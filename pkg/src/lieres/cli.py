"""Command-line entry point.

Exit codes: 0 computed / PASS, 1 verification FAIL, 2 usage error.

JSON reports share one envelope (tool, version, command, config, status,
result, timing).  ``timing`` is the only field that varies between
identical runs; :data:`TIMING_MASK` names it for determinism checks.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from . import ce_complex, coefficients, freelie, symfun
from .characters import character_table, cf_inner, class_table, irreducible
from .partitions import Partition, pad, parse_partition, partitions_of, partitions_up_to, to_text, z_of

TIMING_MASK = ("timing",)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fmt_partition(lam) -> str:
    return to_text(lam) or "∅"


# -- commands -----------------------------------------------------------------
# Each returns (status, result dict, text lines, csv rows or None).

def cmd_coeff_a(args):
    lam, mu = args.lam, args.mu
    if args.unpadded:
        n = None
    else:
        n = args.n if args.n is not None else coefficients.stable_n(lam, mu)
    target = mu if n is None else pad(mu, n)
    value = coefficients.a_coeff(lam, mu, args.method, n=n)
    result = {
        "lambda": list(lam),
        "mu": list(mu),
        "indexing": "unpadded" if n is None else "padded",
        "n": target.size,
        "irreducible": list(target),
        "method": args.method,
        "value": value,
    }
    return "OK", result, [str(value)], [["lambda", "mu", "n", "indexing", "method", "value"],
                                         [to_text(lam), to_text(mu), target.size, result["indexing"], args.method, value]]


def cmd_coeff_b(args):
    value = coefficients.b_coeff(args.lam, args.mu)
    result = {"lambda": list(args.lam), "mu": list(args.mu), "value": value}
    return "OK", result, [str(value)], [["lambda", "mu", "value"], [to_text(args.lam), to_text(args.mu), value]]


def cmd_expand_m(args):
    exp = coefficients.m_expansion(args.mu)
    text = [f"{c:+d} Res S^({_fmt_partition(lam)})" for lam, c in exp.terms]
    rows = [["lambda", "coeff"]] + [[to_text(lam), c] for lam, c in exp.terms]
    return "OK", exp.to_json(), text, rows


def cmd_lyndon(args):
    if args.k < 1:
        raise ValueError("--k must be at least 1")
    f = symfun.lyndon_sym(args.k).to_basis(args.basis)
    data = f.to_json()
    text = [repr(f)]
    rows = [["idx", "num", "den"]] + [[to_text(t["idx"]), t["num"], t["den"]] for t in data["terms"]]
    return "OK", data, text, rows


def cmd_chartable(args):
    if args.n < 1:
        raise ValueError("--n must be at least 1")
    classes = partitions_of(args.n)
    table = character_table(args.n)
    result = {
        "n": args.n,
        "irreducibles": [list(lam) for lam in classes],
        "classes": [{"cycle_type": list(rho), "size": size} for rho, size in class_table(args.n)],
        "table": table,
    }
    header = ["lambda"] + [to_text(rho) for rho in classes]
    rows = [header] + [[to_text(lam)] + row for lam, row in zip(classes, table)]
    width = max(len(h) for h in header) + 1
    text = ["".join(h.rjust(width) for h in header)]
    text += ["".join(str(x).rjust(width) for x in row) for row in rows[1:]]
    return "OK", result, text, rows


def cmd_freelie(args):
    if args.m < 1 or args.max_degree < 1 or args.copies < 1:
        raise ValueError("--m, --max-degree and --copies must be positive")
    g = freelie.GAlgebra(args.m, args.copies, args.max_degree)
    data = g.to_json()
    text = [f"dim = {len(g)}"] + [
        f"{b['index']}: {b['word']} (copy {b['copy']}, degree {b['degree']})" for b in data["basis"]
    ]
    return "OK", data, text, None


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def cmd_verify_inversion(args):
    rep = coefficients.verify_inversion(args.mu, args.n)
    text = [f"{_status(rep.passed)} inversion mu={_fmt_partition(args.mu)} n={args.n} terms={rep.terms}"]
    if rep.witness:
        text.append(f"  witness: {rep.witness}")
    return _status(rep.passed), rep.to_json(), text, None


def cmd_verify_littlewood(args):
    rep = coefficients.verify_littlewood(args.max_size)
    text = [f"{_status(rep.passed)} littlewood max-size={args.max_size} pairs={rep.pairs} checks={rep.checks}"]
    text += [f"  failure: {f}" for f in rep.failures]
    return _status(rep.passed), rep.to_json(), text, None


def cmd_verify_exactness(args):
    rep = ce_complex.verify_exactness(args.m, args.n, args.i)
    text = [
        f"{_status(rep.passed)} exactness m={args.m} n={args.n} i={args.i}",
        f"  dims={rep.dims} ranks={rep.ranks} cohomology={rep.cohomology} expected far-left={rep.expected_far_left}",
    ]
    return _status(rep.passed), rep.to_json(), text, None


def cmd_verify_resolution(args):
    rep = ce_complex.verify_resolution(args.mu, args.m, args.n)
    text = [f"{_status(rep.passed)} resolution mu={_fmt_partition(args.mu)} m={args.m} n={args.n}"]
    for t in rep.terms:
        terms = " + ".join(f"{c}*Res S^({k or '∅'})" for k, c in t.restriction_terms.items()) or "0"
        text.append(f"  step {t.step} (wedge {t.k}): {terms}")
    if rep.witness:
        text.append(f"  witness: {rep.witness}")
    return _status(rep.passed), rep.to_json(), text, None


def orthogonality_report(max_n: int) -> dict:
    failures = []
    for n in range(1, max_n + 1):
        chars = [irreducible(lam) for lam in partitions_of(n)]
        for a, x in enumerate(chars):
            for b, y in enumerate(chars):
                if cf_inner(x, y) != (a == b):
                    failures.append({"n": n, "rows": [a, b]})
        table = character_table(n)
        classes = partitions_of(n)
        for a, rho in enumerate(classes):
            for b, tau in enumerate(classes):
                col = sum(row[a] * row[b] for row in table)
                if col != (z_of(rho) if a == b else 0):
                    failures.append({"n": n, "columns": [a, b]})
    return {"check": "orthogonality", "max_n": max_n, "passed": not failures, "failures": failures}


def cmd_verify_orthogonality(args):
    rep = orthogonality_report(args.max_n)
    text = [f"{_status(rep['passed'])} orthogonality n<={args.max_n}"]
    return _status(rep["passed"]), rep, text, None


def _inversion_cell(cell):
    mu, n = cell
    return coefficients.verify_inversion(mu, n).to_json()


def _exactness_cell(cell):
    m, n, i = cell
    return ce_complex.verify_exactness(m, n, i).to_json()


def sweep(max_mu_size: int, max_n: int, threads: int = 1) -> dict:
    """Inversion over all admissible (mu, n), Littlewood, and a CE exactness grid."""
    inv_cells = [
        (mu, n)
        for mu in partitions_up_to(max_mu_size)
        for n in range(max(1, mu.size + mu.part(0)), max_n + 1)
    ]
    ex_cells = list(ce_complex.iter_exactness_grid((1, 2), range(1, min(max_n, 3) + 1)))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            inversion = list(pool.map(_inversion_cell, inv_cells))
            exactness = list(pool.map(_exactness_cell, ex_cells))
    else:
        inversion = [_inversion_cell(c) for c in inv_cells]
        exactness = [_exactness_cell(c) for c in ex_cells]
    littlewood = coefficients.verify_littlewood(max_mu_size).to_json() if max_mu_size >= 1 else None
    cells = inversion + exactness + ([littlewood] if littlewood else [])
    passed = sum(1 for c in cells if c["passed"])
    return {
        "check": "sweep",
        "max_mu_size": max_mu_size,
        "max_n": max_n,
        "passed": passed == len(cells),
        "pass_count": passed,
        "fail_count": len(cells) - passed,
        "inversion": inversion,
        "exactness": exactness,
        "littlewood": littlewood,
    }


def cmd_sweep(args):
    if args.max_mu_size < 0 or args.max_n < 1:
        raise ValueError("--max-mu-size must be >= 0 and --max-n >= 1")
    rep = sweep(args.max_mu_size, args.max_n, args.threads)
    status = _status(rep["passed"])
    text = [f"{status} sweep max-mu-size={args.max_mu_size} max-n={args.max_n} pass={rep['pass_count']} fail={rep['fail_count']}"]
    rows = [["check", "params", "status"]]
    for c in rep["inversion"]:
        rows.append(["inversion", f"mu={to_text(c['mu'])};n={c['n']}", _status(c["passed"])])
    for c in rep["exactness"]:
        rows.append(["exactness", f"m={c['m']};n={c['n']};i={c['i']}", _status(c["passed"])])
    if rep["littlewood"]:
        rows.append(["littlewood", f"max_size={args.max_mu_size}", _status(rep["littlewood"]["passed"])])
    for c in rep["inversion"]:
        if not c["passed"]:
            text.append(f"  FAIL inversion mu={_fmt_partition(c['mu'])} n={c['n']} witness={c['witness']}")
    for c in rep["exactness"]:
        if not c["passed"]:
            text.append(f"  FAIL exactness m={c['m']} n={c['n']} i={c['i']} cohomology={c['cohomology']}")
    if rep["littlewood"] and not rep["littlewood"]["passed"]:
        text.append(f"  FAIL littlewood failures={rep['littlewood']['failures']}")
    return status, rep, text, rows


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", default=None, help="write to this file instead of standard output")
    common.add_argument("--threads", type=int, default=1)

    parser = _Parser(prog="lieres", description="Restriction coefficients and CE-complex verification.")
    parser.add_argument("--version", action="version", version=f"lieres {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    coeff = sub.add_parser("coeff", help="restriction coefficients").add_subparsers(dest="which", required=True)
    a = coeff.add_parser("a", parents=[common], help="a-coefficient (multiplicity of S^mu in Res S^lambda)")
    a.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    a.add_argument("--mu", type=_partition_arg, required=True)
    a.add_argument("--method", choices=coefficients.METHODS, default="plethysm")
    grp = a.add_mutually_exclusive_group()
    grp.add_argument("--n", type=int, default=None, help="pad mu to mu[n] (default: stable n)")
    grp.add_argument("--unpadded", action="store_true", help="mu itself indexes an irreducible of S_|mu|")
    a.set_defaults(func=cmd_coeff_a)
    b = coeff.add_parser("b", parents=[common], help="signed inverse coefficient")
    b.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    b.add_argument("--mu", type=_partition_arg, required=True)
    b.set_defaults(func=cmd_coeff_b)

    expand = sub.add_parser("expand", help="expansions").add_subparsers(dest="which", required=True)
    em = expand.add_parser("m", parents=[common], help="M_n^mu in restricted Schur functors")
    em.add_argument("--mu", type=_partition_arg, required=True)
    em.set_defaults(func=cmd_expand_m)

    ly = sub.add_parser("lyndon", parents=[common], help="Lyndon symmetric function L_k")
    ly.add_argument("--k", type=int, required=True)
    ly.add_argument("--basis", choices=symfun.BASES, default="p")
    ly.set_defaults(func=cmd_lyndon)

    ct = sub.add_parser("chartable", parents=[common], help="character table of S_n")
    ct.add_argument("--n", type=int, required=True)
    ct.set_defaults(func=cmd_chartable)

    fl = sub.add_parser("freelie", parents=[common], help="basis and brackets of L tensor C^n")
    fl.add_argument("--m", type=int, required=True)
    fl.add_argument("--max-degree", type=int, required=True)
    fl.add_argument("--copies", type=int, default=1)
    fl.set_defaults(func=cmd_freelie)

    verify = sub.add_parser("verify", help="exact verifications").add_subparsers(dest="which", required=True)
    vi = verify.add_parser("inversion", parents=[common])
    vi.add_argument("--mu", type=_partition_arg, required=True)
    vi.add_argument("--n", type=int, required=True)
    vi.set_defaults(func=cmd_verify_inversion)
    vl = verify.add_parser("littlewood", parents=[common])
    vl.add_argument("--max-size", type=int, required=True)
    vl.set_defaults(func=cmd_verify_littlewood)
    ve = verify.add_parser("exactness", parents=[common])
    ve.add_argument("--m", type=int, required=True)
    ve.add_argument("--n", type=int, required=True)
    ve.add_argument("--i", type=int, required=True)
    ve.set_defaults(func=cmd_verify_exactness)
    vr = verify.add_parser("resolution", parents=[common])
    vr.add_argument("--mu", type=_partition_arg, required=True)
    vr.add_argument("--m", type=int, required=True)
    vr.add_argument("--n", type=int, required=True)
    vr.set_defaults(func=cmd_verify_resolution)
    vo = verify.add_parser("orthogonality", parents=[common])
    vo.add_argument("--max-n", type=int, default=8)
    vo.set_defaults(func=cmd_verify_orthogonality)

    sw = sub.add_parser("sweep", parents=[common], help="aggregate verification sweep")
    sw.add_argument("--max-mu-size", type=int, required=True)
    sw.add_argument("--max-n", type=int, required=True)
    sw.set_defaults(func=cmd_sweep)
    return parser


def _config(args) -> dict:
    skip = {"func", "output", "format", "threads"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip:
            continue
        if isinstance(v, Partition):
            v = to_text(v)
        out[k] = v
    return out


def _command_name(args) -> str:
    which = getattr(args, "which", None)
    return f"{args.command} {which}" if which else args.command


def render(args, status, result, text, rows, elapsed) -> str:
    if args.format == "json":
        envelope = {
            "tool": "lieres",
            "version": __version__,
            "command": _command_name(args),
            "config": _config(args),
            "status": status,
            "result": result,
            "timing": {"elapsed_seconds": round(elapsed, 6)},
        }
        return json.dumps(envelope, indent=2, ensure_ascii=False) + "\n"
    if args.format == "csv":
        if rows is None:
            raise UsageError(f"csv output is not available for '{_command_name(args)}'")
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    return "\n".join(text) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        start = time.perf_counter()
        status, result, text, rows = args.func(args)
        output = render(args, status, result, text, rows, time.perf_counter() - start)
    except (UsageError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"lieres: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return EXIT_FAIL if status == "FAIL" else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
