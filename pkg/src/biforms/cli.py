"""Command-line interface: reproducible experiments, machine-readable output.

Every command prints a config header recording its parameters (seed
included), so identical configurations give byte-identical output.
Single-form verdict commands signal the verdict through the exit code
(0 soluble / ELS, 1 insoluble / not ELS, 2 undetermined, 3 singular
discriminant, 64 parse error), letting pipelines partition forms
without parsing.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census as census_mod
from . import densities, els, gbq, mc, pvineq
from .padic import AllZeroForm, PadicApprox, ZpForm, parse_form_line
from .solver import decide_qp

EX_PARSE = 64


def _config_line(cmd, args, keys):
    parts = [f"# biforms {cmd}"]
    for k in keys:
        parts.append(f"{k}={getattr(args, k)}")
    return " ".join(parts)


def _emit(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _forms_from(args):
    """Forms from the command line (one) or stdin (batch)."""
    if args.form:
        if len(args.form) != 9:
            raise ValueError("expected exactly 9 coefficients")
        yield tuple(args.form)
        return
    for line in sys.stdin:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield parse_form_line(line)


def cmd_decide(args):
    header = _config_line("decide", args, ["p", "precision", "depth"])
    rows = [header] if not args.json else []
    code = 0
    single = bool(args.form)
    results = []
    try:
        for nine in _forms_from(args):
            if args.precision:
                form = ZpForm(args.p, [PadicApprox(args.p, v, args.precision)
                                       for v in nine])
            else:
                form = ZpForm.from_ints(args.p, nine)
            try:
                v = decide_qp(form, max_depth=args.depth)
            except AllZeroForm:
                rows.append("error\tall-zero-form")
                code = EX_PARSE
                continue
            if args.json:
                results.append(v.as_json_dict())
            else:
                rows.append(v.as_tsv())
            if single:
                code = v.exit_code()
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_PARSE
    if args.json:
        _emit(args, json.dumps({"config": {"command": "decide", "p": args.p,
                                           "precision": args.precision,
                                           "depth": args.depth},
                                "results": results}, indent=1, sort_keys=True))
    else:
        _emit(args, "\n".join(rows))
    return code


def cmd_els(args):
    header = _config_line("els", args, ["depth"])
    rows = [header] if not args.json else []
    code = 0
    single = bool(args.form)
    results = []
    try:
        for nine in _forms_from(args):
            try:
                if args.fallback:
                    r = els.els_decide_with_fallback(nine, max_depth=args.depth)
                else:
                    r = els.els_decide(nine, max_depth=args.depth)
            except els.SingularDiscriminantZero:
                rows.append("error\tsingular-discriminant-zero")
                results.append({"status": "singular"})
                if single:
                    code = 3
                continue
            if args.json:
                results.append({"status": r.status, "place": r.place,
                                "primes": list(r.primes_checked),
                                "discriminant": str(r.discriminant)})
            else:
                rows.append(r.as_tsv())
            if single:
                code = r.exit_code()
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_PARSE
    if args.json:
        _emit(args, json.dumps({"config": {"command": "els", "depth": args.depth},
                                "results": results}, indent=1, sort_keys=True))
    else:
        _emit(args, "\n".join(rows))
    return code


def cmd_rho(args):
    r = densities.rho_closed(args.p)
    a = densities.rho_assembled(args.p)
    if args.json:
        _emit(args, json.dumps({"config": {"command": "rho", "p": args.p},
                                "rho_closed": str(r), "rho_assembled": str(a),
                                "equal": r == a}, indent=1, sort_keys=True))
    else:
        _emit(args, "\n".join([
            _config_line("rho", args, ["p"]),
            f"rho_closed\t{r.numerator}/{r.denominator}",
            f"rho_assembled\t{a.numerator}/{a.denominator}",
            f"equal\t{r == a}",
        ]))
    return 0 if r == a else 1


def cmd_table(args):
    t = densities.build_case_table(args.p)
    if args.json:
        _emit(args, json.dumps({"config": {"command": "table", "p": args.p},
                                "table": t.as_json_dict()}, indent=1, sort_keys=True))
        return 0
    rows = [_config_line("table", args, ["p"])]
    for group_name, group in (("n", t.n), ("xi", t.xi), ("xi_prime", t.xi_prime),
                              ("aux", t.aux), ("bq", t.bq), ("r", t.r), ("s", t.s)):
        for k, v in group.items():
            rows.append(f"{group_name}.{k}\t{v}")
    rows.append(f"rho\t{t.rho}")
    _emit(args, "\n".join(rows))
    return 0


def cmd_mc(args):
    if args.selector:
        est = mc.mc_conditional(args.p, args.selector, args.samples, args.seed,
                                max_depth=args.depth, threads=args.threads)
    else:
        est = mc.mc_rho(args.p, args.samples, args.seed,
                        max_depth=args.depth, threads=args.threads)
    if args.json:
        _emit(args, json.dumps({"config": {"command": "mc", "p": args.p,
                                           "selector": args.selector,
                                           "samples": args.samples,
                                           "seed": args.seed,
                                           "depth": args.depth,
                                           "threads": args.threads},
                                "estimate": est.estimate, "stderr": est.stderr,
                                "extras": est.extras}, indent=1, sort_keys=True))
    else:
        _emit(args, "\n".join([
            _config_line("mc", args, ["p", "selector", "samples", "seed",
                                      "depth", "threads"]),
            "estimate\tstderr\tsamples\tseed",
            est.as_tsv(),
        ]))
    return 0


def cmd_product(args):
    (lo, hi), tail = densities.prime_product(args.pmax)
    flo, fhi = densities.prime_product_interval(args.pmax)
    if args.json:
        _emit(args, json.dumps({"config": {"command": "product", "pmax": args.pmax},
                                "partial": [lo, hi], "tail_lo": tail,
                                "full": [flo, fhi], "width": fhi - flo},
                               indent=1, sort_keys=True))
    else:
        _emit(args, "\n".join([
            _config_line("product", args, ["pmax"]),
            f"partial\t{lo:.12f}\t{hi:.12f}",
            f"tail_lo\t{tail:.12f}",
            f"full\t{flo:.12f}\t{fhi:.12f}",
            f"width\t{fhi - flo:.3e}",
        ]))
    return 0


def cmd_real(args):
    est = mc.mc_real_density(args.samples, args.seed, threads=args.threads)
    if args.json:
        _emit(args, json.dumps({"config": {"command": "real",
                                           "samples": args.samples,
                                           "seed": args.seed,
                                           "threads": args.threads},
                                "estimate": est.estimate, "stderr": est.stderr,
                                "extras": est.extras}, indent=1, sort_keys=True))
    else:
        _emit(args, "\n".join([
            _config_line("real", args, ["samples", "seed", "threads"]),
            "estimate\tstderr\tsamples\tseed",
            est.as_tsv(),
        ]))
    return 0


def cmd_census(args):
    rep = census_mod.run_census(args.q, threads=args.threads)
    if args.json:
        _emit(args, json.dumps({"config": {"command": "census", "q": args.q},
                                "total": rep.total,
                                "type_counts": rep.type_counts,
                                "sub_counts": rep.sub_counts,
                                "m_values": rep.m_values,
                                "line_counts": rep.line_counts,
                                "delta_counts": rep.delta_counts,
                                "mismatches": rep.mismatches},
                               indent=1, sort_keys=True))
    else:
        _emit(args, _config_line("census", args, ["q", "threads"]) + "\n" + rep.to_tsv())
    return 0 if rep.ok else 1


def cmd_scan(args):
    hf, bf = pvineq.scan(args.kmax, args.nmax, args.dmax)
    rows = [_config_line("scan", args, ["kmax", "nmax", "dmax"]),
            "kind\tn\td\tr"]
    for inst in hf:
        rows.append("HYPOTHESIS-VIOLATION\t%s\t%s\t%s" % (inst.n, inst.d, inst.r))
    for inst in bf:
        rows.append("boundary\t%s\t%s\t%s" % (inst.n, inst.d, inst.r))
    rows.append(f"# hypothesis_violations\t{len(hf)}")
    rows.append(f"# boundary_failures\t{len(bf)}")
    _emit(args, "\n".join(rows))
    return 1 if hf else 0


def _add_common(sp, *, form=False, p=False, q=False, samples=False, seed=False):
    sp.add_argument("--depth", type=int, default=64)
    sp.add_argument("--precision", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--out", default=None)
    if form:
        sp.add_argument("form", nargs="*", type=int,
                        help="nine coefficients, row-major; omit to read stdin")
    if p:
        sp.add_argument("--p", type=int, required=True)
    if q:
        sp.add_argument("--q", type=int, required=True)
    if samples:
        sp.add_argument("--samples", type=int, default=100_000)
    if seed:
        sp.add_argument("--seed", type=int, default=1)


def build_parser():
    ap = argparse.ArgumentParser(prog="biforms",
                                 description="local solubility of (2,2)-forms")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("decide", help="Q_p-solubility of one form (or stdin batch)")
    _add_common(sp, form=True, p=True)
    sp.set_defaults(fn=cmd_decide)

    sp = sub.add_parser("els", help="everywhere-locally-soluble check")
    _add_common(sp, form=True)
    sp.add_argument("--fallback", action="store_true",
                    help="apply the singular-form fallback instead of erroring")
    sp.set_defaults(fn=cmd_els)

    sp = sub.add_parser("rho", help="exact local density, both derivations")
    _add_common(sp, p=True)
    sp.set_defaults(fn=cmd_rho)

    sp = sub.add_parser("table", help="full exact case-density table")
    _add_common(sp, p=True)
    sp.set_defaults(fn=cmd_table)

    sp = sub.add_parser("mc", help="Monte Carlo solubility rate")
    _add_common(sp, p=True, samples=True, seed=True)
    sp.add_argument("--selector", default=None,
                    help="conditional class (case1i, case3, lemma42-s, ...)")
    sp.set_defaults(fn=cmd_mc)

    sp = sub.add_parser("product", help="Euler product of rho(p) with tail bound")
    _add_common(sp)
    sp.add_argument("--pmax", type=int, default=100_000)
    sp.set_defaults(fn=cmd_product)

    sp = sub.add_parser("real", help="real-place Monte Carlo density")
    _add_common(sp, samples=True, seed=True)
    sp.set_defaults(fn=cmd_real)

    sp = sub.add_parser("census", help="exhaustive census over F_q")
    _add_common(sp, q=True)
    sp.set_defaults(fn=cmd_census)

    sp = sub.add_parser("scan", help="binomial inequality scan")
    _add_common(sp)
    sp.add_argument("--kmax", type=int, default=3)
    sp.add_argument("--nmax", type=int, default=6)
    sp.add_argument("--dmax", type=int, default=6)
    sp.set_defaults(fn=cmd_scan)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; map to the parse-error code
        if exc.code not in (0, None):
            raise SystemExit(EX_PARSE)
        raise
    try:
        rc = args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        rc = EX_PARSE
    raise SystemExit(rc)


if __name__ == "__main__":
    main()
