"""Command-line front end.

Exit codes: 0 every check passed, 1 a mathematical check failed, 2 bad
input, 3 dimension cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from caryb import checks
from caryb.artifact import (
    ArtifactError,
    dumps_matrix,
    load_matrix,
    load_rack,
    save_rack,
)
from caryb.constructions import (
    DEFAULT_CAP,
    CapExceeded,
    adjoint_rack,
    double_rack,
    heap_rack,
    power_rack,
)
from caryb.groups import GroupTable, GroupTableError, builtin
from caryb.hopf import check_hopf, function_algebra, group_algebra, is_cocommutative, is_involutory
from caryb.report import CertificationError, Check, Report
from caryb.scalars import ScalarError, default_field, field_from_name
from caryb.settheoretic import adjoint_aug_rack, heap_aug_rack, oracle_compare
from caryb.ybe import (
    InverseError,
    braiding,
    check_braiding_decomposition,
    check_hexagons,
    check_inverse,
    check_sd_comult_compatibility,
    check_self_distributive,
    check_ybe,
    r_matrix,
    sd_map,
)

OK, FAIL, BAD_INPUT, CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_group(src: str) -> GroupTable:
    """``builtin:S3`` or ``file:path.json``."""
    kind, _, rest = src.partition(":")
    if kind == "builtin" and rest:
        return builtin(rest)
    if kind == "file" and rest:
        try:
            with open(rest, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise InputError("cannot read %s: %s" % (rest, e.strerror)) from None
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError("%s:%d:%d: invalid JSON (%s)" % (rest, e.lineno, e.colno, e.msg)) from None
        name = os.path.basename(rest).split(".")[0]
        try:
            return GroupTable.from_json(data, name=name)
        except GroupTableError as e:
            raise InputError("%s: %s" % (rest, e)) from None
    raise InputError("group source must be builtin:NAME or file:PATH, got %r" % src)


def _load_rack(path):
    try:
        return load_rack(path)
    except ArtifactError:
        raise
    except (ValueError, KeyError, TypeError) as e:
        raise InputError("%s: malformed rack artifact (%s)" % (path, e)) from None


def _hopf(G, args, field):
    return function_algebra(G, field) if getattr(args, "hopf", "group") == "function" else group_algebra(G, field)


def _emit(args, reports, extra=None):
    """Print reports in the chosen format and optionally save JSON to ``-o``."""
    doc = {"status": "pass" if all(r.passed for r in reports) else "fail", "reports": [r.to_dict() for r in reports]}
    if extra:
        doc.update(extra)
    if args.format == "json":
        print(json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=1))
    else:
        for r in reports:
            print(r)
        for k, v in sorted((extra or {}).items()):
            print("%s: %s" % (k, v))
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(doc, ensure_ascii=False, sort_keys=True, indent=1) + "\n")
    return OK if doc["status"] == "pass" else FAIL


# -- commands ------------------------------------------------------------------


def cmd_hopf_check(args, field):
    H = _hopf(load_group(args.group), args, field)
    rep = check_hopf(H)
    return _emit(args, [rep], {"cocommutative": is_cocommutative(H), "involutory": is_involutory(H), "dim": H.dim})


def _construct(kind, base, args):
    cap, strict = args.cap, not args.allow_uncertified
    if kind == "heap":
        return heap_rack(base, cap, strict)
    if kind == "adjoint":
        return adjoint_rack(base, cap, strict)
    if kind == "double":
        return double_rack(base, cap, strict)
    return power_rack(base, int(kind.split(":")[1]), cap, strict)


def _check_construction(c):
    if c in ("heap", "adjoint", "double"):
        return
    if c.startswith("power:") and c[6:].isdigit() and int(c[6:]) >= 1:
        return
    raise InputError("unknown construction %r (heap, adjoint, double, power:n)" % c)


def cmd_build(args, field):
    c = args.construction
    _check_construction(c)
    if args.iterate < 1:
        raise InputError("--iterate must be >= 1")
    if c in ("heap", "adjoint"):
        if not args.group or args.rack:
            raise InputError("%s needs --group" % c)
        if args.iterate != 1:
            raise InputError("--iterate applies to double and power only")
        R = _construct(c, _hopf(load_group(args.group), args, field), args)
    else:
        if not args.rack or args.group:
            raise InputError("%s needs --rack" % c)
        R = _load_rack(args.rack).rack
        for _ in range(args.iterate):
            R = _construct(c, R, args)
    save_rack(R, args.output)
    status = "certified" if R.certified else "UNCERTIFIED"
    print("%s: dim %d, %s, %s -> %s" % (R.name, R.dim, status, R.certification.mode or "exact", args.output))
    if not R.certified:
        print("  first failure: %s" % R.certification.first_failure().id)
    return OK if R.certified else FAIL


def _parse_ints(spec, n, prop):
    try:
        vals = [int(v) for v in spec.split(",")]
    except ValueError:
        vals = []
    if len(vals) != n or min(vals) < 1:
        raise InputError("property %s needs %d positive integers" % (prop, n))
    return vals


def _parse_properties(text):
    props = []
    for p in text.split(";") if ";" in text else [text]:
        p = p.strip()
        name, _, params = p.partition(":")
        if name in ("cert", "sd", "compat", "ybe", "inverse", "all") and not params:
            props.append((name, ()))
        elif name == "hexagon":
            props.append((name, tuple(_parse_ints(params, 3, p))))
        elif name == "decomp":
            props.append((name, tuple(_parse_ints(params, 2, p))))
        else:
            raise InputError("unknown property %r" % p)
    return props


def _cert_report(art):
    rep = Report("certification-reproduced[%s]" % art.rack.name)
    fresh = art.rack.certification.to_dict()
    embedded = art.embedded.to_dict() if art.embedded is not None else None
    same = fresh == embedded
    w = None if same else {"embedded": embedded and embedded["status"], "rerun": fresh["status"]}
    rep.add(Check("artifact.certification-reproduced", "re-run certification equals the embedded report", same, w))
    return rep


def _run_property(art, name, params, args):
    R = art.rack
    cap = args.cap
    if name == "cert":
        return [art.rack.certification, _cert_report(art)]
    if name == "sd":
        return [check_self_distributive(sd_map(R))]
    if name == "compat":
        return [check_sd_comult_compatibility(sd_map(R))]
    if name == "ybe":
        return [check_ybe(r_matrix(R, verify=False))]
    if name == "inverse":
        return [check_inverse(r_matrix(R, verify=False))]
    if name == "hexagon":
        return [check_hexagons(R, *params, cap=cap)]
    if name == "decomp":
        return [check_braiding_decomposition(R, *params, cap=cap)]
    raise InputError(name)


def cmd_verify(args, field):
    props = _parse_properties(args.property)
    art = _load_rack(args.artifact)
    reports, skipped = [], []
    for name, params in props:
        if name != "all":
            reports += _run_property(art, name, params, args)
            continue
        for sub, p in (("cert", ()), ("sd", ()), ("compat", ()), ("ybe", ()), ("inverse", ()),
                       ("hexagon", (1, 1, 1)), ("decomp", (2, 2))):
            try:
                reports += _run_property(art, sub, p, args)
            except CapExceeded as e:
                skipped.append("%s%s: %s" % (sub, list(p), e))
    extra = {"artifact": args.artifact}
    if skipped:
        extra["skipped"] = skipped
    return _emit(args, reports, extra)


def cmd_export_r(args, field):
    art = _load_rack(args.artifact)
    R = art.rack
    if args.m < 1 or args.n < 1:
        raise InputError("m and n must be >= 1")
    op = braiding(R, args.m, args.n, cap=args.cap)
    prov = {"rack": R.descriptor.to_dict() if R.descriptor else R.name, "braiding": [args.m, args.n]}
    text = dumps_matrix(op.forward_map(), prov, args.format)
    _write(text, args.output)
    return OK


def _write(text, path):
    if path and path != "-":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_import_r(args, field):
    f, head = load_matrix(args.matrix)
    if args.output:
        _write(dumps_matrix(f, head.get("provenance"), args.format), args.output)
    else:
        print("%d x %d, %d entries, %s, provenance %s" % (head["rows"], head["cols"], f.nnz, head["scalar"],
                                                         json.dumps(head.get("provenance"), ensure_ascii=False)))
    return OK


def cmd_oracle(args, field):
    G = load_group(args.group)
    H = group_algebra(G, field)
    if args.family == "heap":
        s, c = heap_aug_rack(G), heap_rack(H, args.cap)
    else:
        s, c = adjoint_aug_rack(G), adjoint_rack(H, args.cap)
    return _emit(args, [oracle_compare(s, c)])


# -- parser --------------------------------------------------------------------


def _jobs(text):
    if text == "auto":
        return os.cpu_count() or 1
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("--jobs takes a positive integer or 'auto'") from None
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs takes a positive integer or 'auto'")
    return n


def _cap(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("--cap takes a positive integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("--cap must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scalar", help="QQ (default) or GF(p); defaults to $CARYB_SCALAR")
    common.add_argument("--cap", type=_cap, default=DEFAULT_CAP, help="largest carrier dimension to build (default %(default)s)")
    common.add_argument("--jobs", type=_jobs, default=1, help="worker processes for non-permutation checks, or 'auto'")

    report_fmt = argparse.ArgumentParser(add_help=False)
    report_fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="caryb", description="Exact augmented racks and Yang-Baxter operators.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hopf-check", parents=[common, report_fmt], help="check Hopf axioms for k[G] or k^G")
    s.add_argument("--group", required=True, help="builtin:NAME or file:PATH")
    s.add_argument("--hopf", choices=("group", "function"), default="group")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_hopf_check)

    s = sub.add_parser("build", parents=[common], help="construct and certify an augmented rack")
    s.add_argument("--construction", required=True, help="heap, adjoint, double or power:n")
    s.add_argument("--group")
    s.add_argument("--hopf", choices=("group", "function"), default="group")
    s.add_argument("--rack")
    s.add_argument("--iterate", type=int, default=1)
    s.add_argument("--allow-uncertified", action="store_true", help="write the artifact even if certification fails")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("verify", parents=[common, report_fmt], help="run checks on a rack artifact")
    s.add_argument("artifact")
    s.add_argument("--property", default="all",
                   help="cert, sd, compat, ybe, inverse, hexagon:l,m,n, decomp:m,n or all (';' separates several)")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export-r", parents=[common], help="write the braiding R_{m,n} as a sparse matrix")
    s.add_argument("artifact")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_export_r)

    s = sub.add_parser("import-r", parents=[common], help="read a sparse matrix file and re-export it")
    s.add_argument("matrix")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_import_r)

    s = sub.add_parser("oracle", parents=[common, report_fmt], help="compare with the set-theoretic construction")
    s.add_argument("--group", required=True)
    s.add_argument("--family", choices=("heap", "adjoint"), required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        field = field_from_name(args.scalar) if args.scalar else default_field()
        checks.set_jobs(args.jobs)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args, field)
    except CapExceeded as e:
        print("caryb: %s" % e, file=sys.stderr)
        return CAP
    except CertificationError as e:
        print("caryb: %s" % e, file=sys.stderr)
        return FAIL
    except InverseError as e:
        print("caryb: %s" % e, file=sys.stderr)
        return FAIL
    except (InputError, ArtifactError, GroupTableError, ScalarError, OSError) as e:
        print("caryb: %s" % e, file=sys.stderr)
        return BAD_INPUT
    finally:
        checks.set_jobs(1)


if __name__ == "__main__":
    sys.exit(main())
