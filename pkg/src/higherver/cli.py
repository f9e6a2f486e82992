"""Command line front end.

Every command prints a JSON envelope ``{command, parameters, warnings,
payload, version}`` (or TSV with ``--format tsv``).  Exit codes: 0 success,
2 validation error, 3 mathematical consistency failure, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .charring import LaurentPoly, check_prime, decompose, tilting_char
from .cyclo import CyclotomicIndex, vanishes_at_root
from .errors import ConsistencyError, FusionConsistency, ValidationError
from .plot import region_labels, render_svg
from .principal import PrincipalMap, phi_star, restriction_ideal_level, steinberg_restriction, weyl_restriction_char
from .rootdatum import build, check_regime, classify_region, parse_weight
from .sl2tilt import hom_dim, ideal_level, tensor_decompose
from .versl2 import (
    VerCtx,
    cartan_matrix,
    embed_check,
    fusion,
    image_comp_factors,
    is_symmetric,
    projective_of,
    simple_dim,
)

EXIT_OK, EXIT_VALIDATION, EXIT_CONSISTENCY, EXIT_INTERNAL = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def _terms(d: dict[int, int]) -> dict[str, int]:
    return {str(a): m for a, m in sorted(d.items(), reverse=True)}


# -- sl2 ------------------------------------------------------------------


def cmd_sl2_tilt_char(args):
    f = tilting_char(args.a, args.p)
    return {"index": args.a, "character": f.to_json(), "dimension": str(f.dim())}, []


def cmd_sl2_factors(args):
    return {"index": args.a, "basis": args.basis, "terms": _terms(decompose(tilting_char(args.a, args.p), args.basis, args.p).terms)}, []


def cmd_sl2_tensor(args):
    return {"factors": [args.a, args.b], "terms": _terms(tensor_decompose([args.a, args.b], args.p).terms)}, []


def cmd_sl2_hom(args):
    return {"a": args.a, "b": args.b, "hom_dim": hom_dim(args.a, args.b, args.p)}, []


def cmd_sl2_ideal(args):
    level = ideal_level(args.a, args.p)
    return {
        "index": args.a,
        "level": str(level),
        "in_I_n": level.in_I(args.n),
        "cyclotomic_vanishes": vanishes_at_root(tilting_char(args.a, args.p), CyclotomicIndex(args.p, args.n)),
    }, []


# -- ver ------------------------------------------------------------------


def cmd_ver_simples(args):
    ctx = VerCtx(args.p, args.n)
    rows = []
    for i in range(ctx.num_simples):
        d, r = simple_dim(i, ctx)
        rows.append({"i": i, "dim": str(d), "dim_mod_p": r, "projective": projective_of(i, ctx)})
    return rows, []


def cmd_ver_cartan(args):
    c = cartan_matrix(VerCtx(args.p, args.n))
    return {"matrix": [list(r) for r in c], "symmetric": is_symmetric(c)}, []


def cmd_ver_fusion(args):
    table = fusion(VerCtx(args.p, args.n))
    return table, []


def cmd_ver_image(args):
    data = json.loads(Path(args.char).read_text())
    if isinstance(data, dict) and "character" in data:
        data = data["character"]
    f = LaurentPoly.from_json(data)
    cls = image_comp_factors(f, VerCtx(args.p, args.n))
    return cls.to_json(), []


def cmd_ver_embed_check(args):
    ctx = VerCtx(args.p, args.n)
    problems = embed_check(ctx)
    if problems:
        raise FusionConsistency("Frobenius embedding check failed: " + "; ".join(problems[:5]))
    return {"from": [ctx.p, ctx.n], "to": [ctx.p, ctx.n + 1], "result": "pass"}, []


# -- group ----------------------------------------------------------------


def cmd_group_region(args):
    datum = build(args.type)
    warnings = check_regime(datum, args.p)
    rows = []
    for text in args.weight:
        lam = parse_weight(text)
        label = classify_region(lam, datum, args.p, args.n)
        rows.append(
            {
                "weight": list(lam),
                "label": label.chain,
                "kind": label.kind,
                "in_T_n": label.in_Tn,
                "chain": {str(k): classify_region(lam, datum, args.p, k).chain for k in range(1, args.n + 1)},
            }
        )
    return (rows[0] if len(rows) == 1 else rows), warnings


def cmd_group_region_plot(args):
    datum = build(args.type)
    warnings = check_regime(datum, args.p)
    svg = render_svg(datum, args.p, args.n, args.max)
    counts: dict[str, int] = {}
    for lab in region_labels(datum, args.p, args.n, args.max).values():
        counts[lab] = counts.get(lab, 0) + 1
    payload = {"counts": dict(sorted(counts.items())), "points": sum(counts.values())}
    if args.out:
        Path(args.out).write_text(svg)
        payload["out"] = args.out
        return payload, warnings
    return _Raw(svg), warnings


def cmd_group_restrict(args):
    datum = build(args.type)
    pm = PrincipalMap.of(datum)
    lam = datum.weight(parse_weight(args.weight))
    f = weyl_restriction_char(lam, pm)
    payload = {"weight": list(lam), "phi_star": phi_star(lam, pm), "character": f.to_json(), "dimension": str(f.dim())}
    warnings = []
    if args.p is not None:
        check_prime(args.p)
        payload["tilting_terms"] = _terms(decompose(f, "tilting", args.p).terms)
    return payload, warnings


def cmd_group_steinberg(args):
    datum = build(args.type)
    warnings = check_regime(datum, args.p)
    f = steinberg_restriction(PrincipalMap.of(datum), args.p, args.n)
    payload = {"character": f.to_json(), "dimension": str(f.dim())}
    if args.ideal_check:
        all_in, some_below = restriction_ideal_level(f, args.p, args.n)
        payload[f"in_I_{args.n}"] = all_in
        payload[f"in_I_{args.n + 1}"] = not some_below
    return payload, warnings


class _Raw(str):
    """Payload printed verbatim instead of inside an envelope."""


# -- output ---------------------------------------------------------------


def _tsv(payload) -> str:
    if hasattr(payload, "tsv_rows"):
        return "\n".join(payload.tsv_rows()) + "\n"
    if isinstance(payload, dict) and "matrix" in payload:
        return "\n".join("\t".join(str(x) for x in row) for row in payload["matrix"]) + "\n"
    if isinstance(payload, dict) and "terms" in payload:
        return "".join(f"{a}\t{m}\n" for a, m in payload["terms"].items())
    if isinstance(payload, dict) and "character" in payload:
        return "".join(f"{e}\t{c}\n" for e, c in payload["character"])
    rows = payload if isinstance(payload, list) else [payload]
    if rows and isinstance(rows[0], dict):
        keys = list(rows[0])
        lines = ["\t".join(keys)]
        for r in rows:
            lines.append("\t".join(v if isinstance(v, str) else json.dumps(v) for v in (r[k] for k in keys)))
        return "\n".join(lines) + "\n"
    return json.dumps(payload) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="higherver", description="Higher Verlinde category combinatorics.")
    parser.add_argument("--version", action="version", version=__version__)
    top = parser.add_subparsers(dest="group", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=["json", "tsv"], default="json")

    sl2 = top.add_parser("sl2", help="SL2 tilting modules").add_subparsers(dest="command", required=True)
    sp = sl2.add_parser("tilt-char")
    sp.add_argument("a", type=int)
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_sl2_tilt_char)
    sp = sl2.add_parser("factors")
    sp.add_argument("a", type=int)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--basis", choices=["weyl", "simple", "tilting"], default="simple")
    sp.set_defaults(func=cmd_sl2_factors)
    sp = sl2.add_parser("tensor")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_sl2_tensor)
    sp = sl2.add_parser("hom")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_sl2_hom)
    sp = sl2.add_parser("ideal")
    sp.add_argument("a", type=int)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.set_defaults(func=cmd_sl2_ideal)

    ver = top.add_parser("ver", help="Ver_{p^n} tables").add_subparsers(dest="command", required=True)
    for name, func in [
        ("simples", cmd_ver_simples),
        ("cartan", cmd_ver_cartan),
        ("fusion", cmd_ver_fusion),
        ("image", cmd_ver_image),
        ("embed-check", cmd_ver_embed_check),
    ]:
        sp = ver.add_parser(name)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.set_defaults(func=func)
        if name == "image":
            sp.add_argument("--char", required=True, help="JSON file with a serialized character")

    grp = top.add_parser("group", help="root data and principal SL2").add_subparsers(dest="command", required=True)
    sp = grp.add_parser("region")
    sp.add_argument("--type", required=True)
    sp.add_argument("--weight", required=True, action="append")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.set_defaults(func=cmd_group_region)
    sp = grp.add_parser("region-plot")
    sp.add_argument("--type", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--max", type=int, default=31)
    sp.set_defaults(func=cmd_group_region_plot)
    sp = grp.add_parser("restrict")
    sp.add_argument("--type", required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--p", type=int)
    sp.set_defaults(func=cmd_group_restrict)
    sp = grp.add_parser("steinberg")
    sp.add_argument("--type", required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--ideal-check", action="store_true")
    sp.set_defaults(func=cmd_group_steinberg)

    for sub in (sl2, ver, grp):
        for sp in sub.choices.values():
            fmt(sp)
            sp.add_argument("--out", help="write output to this path instead of stdout")
    return parser


def _params(args) -> dict:
    skip = {"func", "group", "command", "format", "out"}
    return {k.replace("_", "-"): v for k, v in vars(args).items() if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except ValidationError as exc:
        _print_error(exc, EXIT_VALIDATION)
        return EXIT_VALIDATION
    try:
        payload, warnings = args.func(args)
    except ConsistencyError as exc:
        _print_error(exc, EXIT_CONSISTENCY)
        return EXIT_CONSISTENCY
    except (ValidationError, ValueError, OSError) as exc:
        _print_error(exc, EXIT_VALIDATION)
        return EXIT_VALIDATION
    except Exception as exc:  # noqa: BLE001
        _print_error(exc, EXIT_INTERNAL)
        return EXIT_INTERNAL

    out = None if args.command == "region-plot" else args.out
    if isinstance(payload, _Raw):
        _emit(str(payload), out)
        return EXIT_OK
    if args.format == "tsv":
        header = f"# {args.group} {args.command} {json.dumps(_params(args))}\n"
        header += "".join(f"# warning: {w}\n" for w in warnings)
        _emit(header + _tsv(payload), out)
        return EXIT_OK
    if hasattr(payload, "to_json"):
        payload = payload.to_json()
    envelope = {
        "command": f"{args.group} {args.command}",
        "parameters": _params(args),
        "warnings": warnings,
        "payload": payload,
        "version": __version__,
    }
    _emit(json.dumps(envelope, indent=2) + "\n", out)
    return EXIT_OK


def _print_error(exc: Exception, code: int) -> None:
    err = {"error": {"type": type(exc).__name__, "message": str(exc), "exit_code": code}}
    sys.stdout.write(json.dumps(err, indent=2) + "\n")


if __name__ == "__main__":
    sys.exit(main())
