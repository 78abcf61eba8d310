"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or input error, 3 an
enumeration or search budget was exceeded, 4 internal inconsistency.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import moonshine_data as md
from .errors import (
    BudgetExceededError,
    CodeFormatError,
    FramedCodesError,
    InternalConsistencyError,
    UnsupportedFusionError,
)
from .gf2 import Codeword, LinearCode, format_code, read_code, sum_codes, weight_enumerator, write_code
from .modules import (
    ModuleLabel,
    dual_label,
    fuse,
    is_self_dual_module,
    is_simple_current,
    make_label,
    top_level_dimension,
    top_weight,
)
from .moonshine import build_moonshine_codes, run_demo
from .qseries import mckay_thompson, trunc_to_prec
from .selfdual import find_self_dual_subcode_wrt
from .stabilizer import describe_stabilizer, graded_split, order_of_lift
from .structcheck import is_f_admissible, is_f_admissible_via_dual, validate_structure_codes

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


# JSON output schemas, one per subcommand
_CLAUSES = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["clause", "passed", "witness", "detail"],
        "properties": {
            "clause": {"type": "string"},
            "passed": {"type": "boolean"},
            "witness": {"type": ["string", "null"], "pattern": "^[01]+$"},
            "detail": {"type": "string"},
        },
    },
}
_BITS = {"type": "string", "pattern": "^[01]+$"}
_LABEL = {"type": "string", "pattern": "^[0-9a-f]+:[0-9a-f]+(@.*)?$"}

SCHEMAS: dict[str, dict] = {
    "check-pair": {
        "type": "object",
        "required": ["passed", "clauses"],
        "properties": {"passed": {"type": "boolean"}, "clauses": _CLAUSES},
    },
    "check-admissible": {
        "type": "object",
        "required": ["passed", "via_dual", "clauses"],
        "properties": {
            "passed": {"type": "boolean"},
            "via_dual": {"type": "boolean"},
            "clauses": _CLAUSES,
        },
    },
    "selfdual-subcode": {
        "type": "object",
        "required": ["found", "beta", "doubly_even", "basis"],
        "properties": {
            "found": {"type": "boolean"},
            "beta": _BITS,
            "doubly_even": {"type": "boolean"},
            "basis": {"type": "array", "items": _BITS},
        },
    },
    "stabilizer": {
        "type": "object",
        "required": ["dim_P", "tau_rank", "sigma_rank", "log2_order", "transversal", "orders", "commutator"],
        "properties": {
            "dim_P": {"type": "integer"},
            "tau_rank": {"type": "integer"},
            "sigma_rank": {"type": "integer"},
            "log2_order": {"type": "integer"},
            "transversal": {"type": "array", "items": _BITS},
            "orders": {"type": "array", "items": {"enum": [1, 2, 4]}},
            "commutator": {"type": "array", "items": {"type": "array", "items": {"enum": [0, 1]}}},
            "xi": {
                "type": "object",
                "required": ["word", "order", "C0_basis", "D0_basis", "C1_rep", "D1_rep"],
                "properties": {
                    "word": _BITS,
                    "order": {"enum": [1, 2, 4]},
                    "C0_basis": {"type": "array", "items": _BITS},
                    "D0_basis": {"type": "array", "items": _BITS},
                    "C1_rep": {"type": ["string", "null"]},
                    "D1_rep": {"type": ["string", "null"]},
                },
            },
        },
    },
    "fusion": {
        "type": "object",
        "required": ["terms"],
        "properties": {
            "terms": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["label", "multiplicity"],
                    "properties": {"label": _LABEL, "multiplicity": {"type": "integer", "minimum": 1}},
                },
            }
        },
    },
    "module-info": {
        "type": "object",
        "required": ["label", "top_weight", "top_level_dimension", "dual", "self_dual", "simple_current"],
        "properties": {
            "label": _LABEL,
            "top_weight": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
            "top_level_dimension": {"type": "integer", "minimum": 1},
            "dual": _LABEL,
            "self_dual": {"type": "boolean"},
            "simple_current": {"type": "boolean"},
        },
    },
    "mt-series": {
        "type": "object",
        "required": ["trunc", "unit", "coefficients"],
        "properties": {
            "trunc": {"type": "integer"},
            "unit": {"const": 48},
            "coefficients": {
                "type": "array",
                "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
            },
        },
    },
    "moonshine-demo": {
        "type": "object",
        "required": ["passed", "steps", "mckay_thompson"],
        "properties": {
            "passed": {"type": "boolean"},
            "steps": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["step", "name", "passed", "detail", "seconds"],
                },
            },
            "mckay_thompson": {"type": "array"},
        },
    },
}


def _load(path: str) -> LinearCode:
    try:
        return read_code(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def parse_word(text: str, n: int) -> Codeword:
    """A bit string of length n, or a hex string (optionally 0x-prefixed)."""
    t = text.strip().lower()
    if len(t) == n and set(t) <= {"0", "1"}:
        return Codeword(n, int(t, 2) if n else 0)
    h = t[2:] if t.startswith("0x") else t
    try:
        v = int(h, 16)
    except ValueError:
        raise UsageError(f"{text!r} is neither a {n}-bit string nor hex") from None
    if v >> n:
        raise UsageError(f"{text!r} does not fit in length {n}")
    return Codeword(n, v)


def parse_label(text: str, code: LinearCode) -> ModuleLabel:
    """'beta:gamma', optionally followed by '@codefile' (ignored here)."""
    body = text.split("@", 1)[0]
    if body.count(":") != 1:
        raise UsageError(f"label {text!r} must look like beta:gamma")
    b, g = body.split(":")
    return make_label(code, parse_word(b, code.n), parse_word(g, code.n))


def _label_str(label: ModuleLabel, path: str) -> str:
    return f"{label}@{path}"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_check_pair(args) -> int:
    c, d = _load(args.C), _load(args.D)
    if c.n != d.n:
        raise UsageError("C and D have different lengths")
    rep = validate_structure_codes(c, d)
    _emit(args, rep.to_dict(), str(rep) + ("\nPASS" if rep.passed else "\nFAIL"))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_check_admissible(args) -> int:
    c = _load(args.C)
    rep = is_f_admissible(c)
    via = is_f_admissible_via_dual(c)
    if via != rep.passed:
        raise InternalConsistencyError(
            f"clause check says {rep.passed} but the triply even dual test says {via}"
        )
    payload = rep.to_dict() | {"via_dual": via}
    _emit(args, payload, f"{rep}\ntriply even dual route: {via}\n{'PASS' if rep.passed else 'FAIL'}")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_selfdual(args) -> int:
    c = _load(args.C)
    beta = parse_word(args.beta, c.n)
    h = find_self_dual_subcode_wrt(c, beta, args.doubly_even)
    payload = {
        "found": h is not None,
        "beta": str(beta),
        "doubly_even": args.doubly_even,
        "basis": [] if h is None else [str(w) for w in h.basis],
    }
    text = "none" if h is None else format_code(h, f"self-dual w.r.t. {beta}").rstrip()
    _emit(args, payload, text)
    return EXIT_OK if h is not None else EXIT_FAIL


def cmd_stabilizer(args) -> int:
    c, d = _load(args.C), _load(args.D)
    if c.n != d.n:
        raise UsageError("C and D have different lengths")
    desc = describe_stabilizer(c, d)
    payload = desc.to_dict()
    lines = [
        f"dim P = {desc.P.dim}",
        f"tau rank = {desc.tau_rank}",
        f"sigma rank = {desc.sigma_rank}",
        f"group order = 2^{desc.log2_order}",
        f"orders of transversal lifts: {list(desc.orders)}",
        f"non-commuting basis pairs: {len(desc.noncommuting_pairs())}",
    ]
    if args.xi:
        xi = parse_word(args.xi, c.n)
        order = order_of_lift(c, d, xi, desc.P)
        s = graded_split(c, d, xi, desc.P)
        payload["xi"] = {
            "word": str(xi),
            "order": order,
            "C0_basis": [str(w) for w in s.c0.basis],
            "D0_basis": [str(w) for w in s.d0.basis],
            "C1_rep": None if s.c1_rep is None else str(s.c1_rep),
            "D1_rep": None if s.d1_rep is None else str(s.d1_rep),
        }
        lines += [
            f"xi = {xi}: order {order}",
            f"dim C^0 = {s.c0.dim}, dim D^0 = {s.d0.dim}",
            "D^0 basis:",
            *(f"  {w}" for w in s.d0.basis),
            f"D^1 representative: {s.d1_rep}",
        ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_fusion(args) -> int:
    c = _load(args.C)
    m1, m2 = parse_label(args.m1, c), parse_label(args.m2, c)
    out = fuse(m1, m2)
    payload = {"terms": [{"label": _label_str(l, args.C), "multiplicity": m} for l, m in out.terms]}
    text = "\n".join(f"{m} x M({_label_str(l, args.C)})" for l, m in out.terms)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_module_info(args) -> int:
    c = _load(args.C)
    m = parse_label(args.label, c)
    tw, dim = top_weight(m), top_level_dimension(m)
    dl = dual_label(m)
    payload = {
        "label": _label_str(m, args.C),
        "top_weight": str(tw),
        "top_level_dimension": dim,
        "dual": _label_str(dl, args.C),
        "self_dual": is_self_dual_module(m),
        "simple_current": is_simple_current(m),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    _emit(args, payload, text)
    return EXIT_OK


def cmd_mt_series(args) -> int:
    d = _load(args.D)
    xi = parse_word(args.xi, d.n)
    if args.trunc < -1:
        raise UsageError("--trunc must be at least -1")
    wd = weight_enumerator(d)
    wx = weight_enumerator(sum_codes(d, LinearCode(d.n, [xi.bits])))
    s = mckay_thompson(wd, wx, trunc_to_prec(args.trunc))
    payload = {"trunc": args.trunc, "unit": 48, "coefficients": [[e, c] for e, c in s.pairs()]}
    _emit(args, payload, "\n".join(s.lines()) or "0")
    return EXIT_OK


def cmd_moonshine_demo(args) -> int:
    rep = run_demo(args.trunc)
    _emit(args, rep.to_dict(), str(rep))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_moonshine_codes(args) -> int:
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    c, d = build_moonshine_codes()
    write_code(c, out / "C.code", "moonshine frame C = D^perp")
    write_code(d, out / "D.code", "moonshine frame D")
    (out / "xi.txt").write_text(md.XI + "\n")
    (out / "kappa.txt").write_text(md.KAPPA + "\n")
    print(f"wrote C.code, D.code, xi.txt, kappa.txt to {out}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="framedcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check-pair", cmd_check_pair, "validate structure codes (C, D)")
    sp.add_argument("C")
    sp.add_argument("D")
    sp = add("check-admissible", cmd_check_admissible, "F-admissibility of C, by clauses and via C^perp")
    sp.add_argument("C")
    sp = add("selfdual-subcode", cmd_selfdual, "subcode of C_beta self-dual w.r.t. beta")
    sp.add_argument("C")
    sp.add_argument("--beta", required=True)
    sp.add_argument("--doubly-even", action="store_true")
    sp = add("stabilizer", cmd_stabilizer, "pointwise frame stabilizer data")
    sp.add_argument("C")
    sp.add_argument("D")
    sp.add_argument("--xi")
    sp = add("fusion", cmd_fusion, "fusion product of two module labels beta:gamma")
    sp.add_argument("C")
    sp.add_argument("--m1", required=True)
    sp.add_argument("--m2", required=True)
    sp = add("module-info", cmd_module_info, "top weight, top level, dual and simple-current flag")
    sp.add_argument("C")
    sp.add_argument("--label", required=True)
    sp = add("mt-series", cmd_mt_series, "McKay-Thompson series of the order-4 lift of xi")
    sp.add_argument("D")
    sp.add_argument("--xi", required=True)
    sp.add_argument("--trunc", type=int, default=8, help="last power of q to report (default 8)")
    sp = add("moonshine-demo", cmd_moonshine_demo, "run every moonshine-frame check")
    sp.add_argument("--trunc", type=int, default=8)
    sp = sub.add_parser("moonshine-codes", help="write the moonshine code files to a directory")
    sp.add_argument("outdir")
    sp.set_defaults(func=cmd_moonshine_codes, json=False)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0, parse errors exit EXIT_USAGE
        return EXIT_USAGE if exc.code is None else int(exc.code)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except UnsupportedFusionError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, CodeFormatError, FramedCodesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
