"""Command-line front end.

Every subcommand prints one document: JSON (default) or CSV.  Exit status is 0
on success, 2 for bad arguments and 3 when a computation exceeds its
documented resource bound.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .linalg import format_rational, primitive_ray

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


@dataclass
class OutputDocument:
    subject: str
    n: Optional[int]
    payload: Dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return {"schema_version": self.schema_version, "subject": self.subject, "n": self.n,
                "payload": _plain(self.payload)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        _csv_rows(w, "", _plain(self.payload))
        return buf.getvalue()


def _plain(x):
    """Serializable copy: rationals become strings, tuples become lists."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _csv_rows(w, prefix: str, obj):
    if isinstance(obj, dict) and "basis" in obj and "rays" in obj:
        w.writerow([prefix] + obj["basis"])
        for r in obj["rays"]:
            w.writerow([prefix] + r)
        return
    if isinstance(obj, dict) and "basis" in obj and "coords" in obj:
        w.writerow([prefix] + obj["basis"])
        w.writerow([prefix] + obj["coords"])
        return
    if isinstance(obj, dict):
        for k in sorted(obj):
            _csv_rows(w, f"{prefix}.{k}" if prefix else k, obj[k])
        return
    if isinstance(obj, list):
        w.writerow([prefix] + [json.dumps(v) if isinstance(v, (dict, list)) else v for v in obj])
        return
    w.writerow([prefix, obj])


def _strs(v) -> List[str]:
    return [format_rational(x) for x in v]


def ray_block(basis: Sequence[str], rays) -> Dict[str, Any]:
    """Rays as primitive integer vectors, sorted, with their coordinates written as strings."""
    return {"basis": list(basis), "rays": [_strs(r) for r in sorted(primitive_ray(r) for r in rays)]}


def coord_block(basis: Sequence[str], coords) -> Dict[str, Any]:
    return {"basis": list(basis), "coords": _strs(coords)}


def _report(r) -> Dict[str, Any]:
    out = {"is_fano": r.is_fano, "is_weak_fano": r.is_weak_fano, "provenance": r.provenance}
    out.update(r.extra)
    return out


# -- subcommands -----------------------------------------------------------------


def _tl_cones(args) -> OutputDocument:
    from .tl import cones as tc
    from .tl.picard import CurveClass, basis_labels, curve_basis_labels, to_curve_basis

    n = args.n
    divisor = {"eff": tc.effective_cone, "nef": tc.nef_cone, "mov": tc.movable_cone}
    curve = {"ne": tc.mori_cone, "mov1": tc.moving_curve_cone}
    which = ["eff", "nef", "mov", "ne", "mov1"] if args.which == "all" else [args.which]
    payload = {}
    for w in which:
        if w in divisor:
            payload[w] = ray_block(basis_labels(n), divisor[w](n).rays)
        elif args.curve_basis == "pairing":
            payload[w] = ray_block([f"<{b},.>" for b in basis_labels(n)], curve[w](n).rays)
        else:
            rays = [to_curve_basis(CurveClass(n, r), args.curve_basis) for r in curve[w](n).rays]
            payload[w] = ray_block(curve_basis_labels(n), rays)
    if any(w in curve for w in which):
        payload["curve_convention"] = args.curve_basis
    return OutputDocument("tl", n, payload)


def _tl_canonical(args) -> OutputDocument:
    from .tl.picard import basis_labels, canonical_class, canonical_class_from_boundary

    K = canonical_class(args.n)
    if K != canonical_class_from_boundary(args.n):
        raise AssertionError("the two expressions of K disagree")
    return OutputDocument("tl", args.n, {"K": coord_block(basis_labels(args.n), K.coords),
                                         "minus_K": coord_block(basis_labels(args.n), (-K).coords)})


def _tl_classify(args) -> OutputDocument:
    from .tl.cones import classify_tl

    return OutputDocument("tl", args.n, _report(classify_tl(args.n)))


def _tl_cox(args) -> OutputDocument:
    from .tl.cones import cox_data
    from .tl.picard import basis_labels

    cox = cox_data(args.n)
    return OutputDocument("tl", args.n, {
        "generator_count": cox.generator_count,
        "generators": list(cox.labels),
        "grading": {"basis": basis_labels(args.n), "columns": [_strs(c) for c in cox.columns]},
    })


def _gkz_chambers(args) -> OutputDocument:
    from . import gkz

    if args.config_file is not None:
        try:
            with open(args.config_file) as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read configuration: {e}")
        if (not isinstance(raw, list) or not raw
                or not all(isinstance(v, list) and v and all(type(x) is int for x in v) for v in raw)):
            raise UsageError("configuration must be a non-empty JSON array of integer arrays")
        cfg = gkz.VectorConfiguration.from_vectors(raw)
        n = None
        if args.method == "arrangement":
            count = gkz.chamber_count(cfg)
        else:
            count = gkz.chamber_complex_count(cfg)
    else:
        n = args.n
        cfg = gkz.tl_configuration(n)
        if args.method == "arrangement":
            count = gkz.chamber_count_tl(n)
        else:
            count = gkz.chamber_complex_count_tl(n)
    return OutputDocument("gkz", n, {
        "chambers": count,
        "method": args.method,
        "vectors": len(cfg.vectors),
        "walls": len(gkz.wall_hyperplanes(cfg)),
    })


def _conics_cones(args) -> OutputDocument:
    from . import conics as cc

    return OutputDocument("conics", args.n, {
        "eff": ray_block(cc.BASIS, cc.eff_cone_conics(args.n).rays),
        "nef": ray_block(cc.BASIS, cc.nef_cone_conics(args.n).rays),
        "mov": ray_block(cc.BASIS, cc.movable_cone_conics(args.n).rays),
        "chambers_cover_eff": cc.chambers_cover_eff(args.n),
    })


def _conics_canonical(args) -> OutputDocument:
    from . import conics as cc

    mk = cc.anticanonical_conics(args.n)
    return OutputDocument("conics", args.n, {
        "minus_K": coord_block(cc.BASIS, mk.coords),
        "K": coord_block(cc.BASIS, (-mk).coords),
        "restricted_minus_K": coord_block(cc.BLOWUP_BASIS, cc.restrict_to_blowup(mk).coords),
    })


def _conics_classify(args) -> OutputDocument:
    from . import conics as cc

    r = cc.classify_conics(args.n)
    payload = _report(r)
    payload["restricted_anticanonical"] = coord_block(cc.BLOWUP_BASIS, payload["restricted_anticanonical"])
    return OutputDocument("conics", args.n, payload)


def _to_classify(args) -> OutputDocument:
    from .isotropic import classify_to

    return OutputDocument("to", args.n, _report(classify_to(args.n)))


def _dims(args) -> OutputDocument:
    from . import isotropic as iso

    if args.quantity == "osc":
        value = iso.dim_osculating_locus(args.n, args.d)
        params = {"d": args.d}
    elif args.quantity == "kontsevich":
        value = iso.dim_kontsevich(args.n, args.d, args.k)
        params = {"d": args.d, "k": args.k}
    else:
        value = iso.section_dimension_rk(args.n, args.k)
        params = {"k": args.k}
    return OutputDocument("dims", args.n, {"quantity": args.quantity, "parameters": params, "value": value})


def _selftest(args) -> int:
    from .selftest import run_selftest

    return run_selftest(quick=args.quick)


# -- parser ------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(lo: int) -> Callable[[str], int]:
    def conv(s: str) -> int:
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {s!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}")
        return v
    return conv


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bircones", description="Divisor and curve cones of TL_n and pointed conic spaces.")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    # accepted after the subcommand too; SUPPRESS keeps it from resetting the top-level value
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["json", "csv"], default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    tl = sub.add_parser("tl", help="the compactifications TL_n")
    tls = tl.add_subparsers(dest="command", required=True, parser_class=_Parser)
    c = tls.add_parser("cones", parents=[fmt])
    c.add_argument("--n", type=_positive(2), required=True)
    c.add_argument("--which", choices=["eff", "nef", "ne", "mov1", "mov", "all"], default="all")
    c.add_argument("--curve-basis", choices=["epsilon", "literal", "pairing"], default="epsilon")
    c.set_defaults(func=_tl_cones)
    for name, func in (("canonical", _tl_canonical), ("classify", _tl_classify), ("cox", _tl_cox)):
        q = tls.add_parser(name, parents=[fmt])
        q.add_argument("--n", type=_positive(2), required=True)
        q.set_defaults(func=func)

    g = sub.add_parser("gkz", help="chamber counts of vector configurations")
    gs = g.add_subparsers(dest="command", required=True, parser_class=_Parser)
    ch = gs.add_parser("chambers", parents=[fmt])
    src = ch.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=_positive(2))
    src.add_argument("--config-file")
    ch.add_argument("--method", choices=["arrangement", "complex"], default="arrangement")
    ch.set_defaults(func=_gkz_chambers)

    co = sub.add_parser("conics", help="pointed conic spaces")
    cos = co.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, func in (("cones", _conics_cones), ("canonical", _conics_canonical), ("classify", _conics_classify)):
        q = cos.add_parser(name, parents=[fmt])
        q.add_argument("--n", type=_positive(2), required=True)
        q.set_defaults(func=func)

    to = sub.add_parser("to", help="orthogonal analogues TO_n")
    tos = to.add_subparsers(dest="command", required=True, parser_class=_Parser)
    q = tos.add_parser("classify", parents=[fmt])
    q.add_argument("--n", type=_positive(2), required=True)
    q.set_defaults(func=_to_classify)

    d = sub.add_parser("dims", help="closed-form dimensions")
    ds = d.add_subparsers(dest="quantity", required=True, parser_class=_Parser)
    q = ds.add_parser("osc", parents=[fmt])
    q.add_argument("--n", type=_positive(1), required=True)
    q.add_argument("--d", type=_positive(1), required=True)
    q = ds.add_parser("kontsevich", parents=[fmt])
    q.add_argument("--n", type=_positive(2), required=True)
    q.add_argument("--d", type=_positive(1), required=True)
    q.add_argument("--k", type=_positive(0), required=True)
    q = ds.add_parser("rk", parents=[fmt])
    q.add_argument("--n", type=_positive(2), required=True)
    q.add_argument("--k", type=_positive(1), required=True)
    for q in ds.choices.values():
        q.set_defaults(func=_dims)

    st = sub.add_parser("selftest", help="run the built-in checks")
    st.add_argument("--quick", action="store_true", help="skip chamber counts for n >= 3")
    st.set_defaults(func=_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> Tuple[int, str]:
    """Run one command; returns the exit code and the serialized document (empty on error)."""
    from .gkz import DegenerateConfiguration, ResourceBoundError

    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else EXIT_USAGE), ""
    if args.group == "selftest":
        return args.func(args), ""
    try:
        doc = args.func(args)
    except ResourceBoundError as e:
        print(f"bircones: resource bound: {e}", file=stderr)
        return EXIT_RESOURCE, ""
    except (UsageError, DegenerateConfiguration, ValueError) as e:
        parser.print_usage(stderr)
        print(f"bircones: error: {e}", file=stderr)
        return EXIT_USAGE, ""
    text = doc.to_csv() if args.format == "csv" else doc.to_json()
    stdout.write(text)
    return EXIT_OK, text


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
