"""Command-line front end.

    boolfn analyze "x1*x2 + x3*x4" -n 4 --json
    boolfn walsh n=2:08
    boolfn weight --algorithm1 "x1*x2*x3 + x1*x4 + x2"
    boolfn vbf analyze example.vbf
    boolfn search -n 4 --samples 100000 --seed 1 --target apn

Exit codes: 0 success, 1 other domain error, 2 parse error, 3 size cap
exceeded, 4 infeasible search configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import TruthTable, fourier, is_balanced, tt_to_anf, weight
from .errors import BoolFnError, InfeasibleConfigError, ParseError, SizeCapError
from .quadratic import GENERIC_SCAN_MAX_N, classify_quadratic, linear_space
from .search import SearchConfig, search
from .spectra import is_bent, is_semi_bent, linearity, wht
from .splitcubic import algorithm1_weight
from .textio import format_anf, parse_function, parse_vbf, tt_to_hex
from . import vbf as V

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_CAP, EXIT_INFEASIBLE = 0, 1, 2, 3, 4


def _dim_v(t: TruthTable, anf) -> int | None:
    if anf.degree <= 2:
        return linear_space(anf).dim
    if t.n <= GENERIC_SCAN_MAX_N:
        return linear_space(t).dim
    return None


def _m_or_none(t: TruthTable, degree: int) -> int | None:
    if degree <= 3 and t.n <= V.M_ALGEBRAIC_MAX_N:
        return V.m_value(t, "algebraic")
    if t.n <= V.M_GENERIC_MAX_N:
        return V.m_value(t, "generic")
    return None


def analysis_report(t: TruthTable) -> dict:
    """Every property of a single function that the library can compute at this n."""
    anf = tt_to_anf(t)
    deg = anf.degree
    spectrum = wht(t)
    lin = linearity(spectrum)
    report = {
        "n": t.n,
        "anf": format_anf(anf),
        "hex": tt_to_hex(t),
        "degree": deg,
        "weight": weight(t),
        "balanced": is_balanced(t),
        "fourier": fourier(t),
        "linearity": lin,
        "nl": (1 << (t.n - 1)) - lin // 2,
        "bent": is_bent(t) if t.n % 2 == 0 else None,
        "semi_bent": is_semi_bent(t) if t.n % 2 else None,
        "dimV": _dim_v(t, anf),
        "partially_bent": V.is_partially_bent(t) if t.n <= V.PARTIALLY_BENT_MAX_N else None,
        "M": _m_or_none(t, deg),
        "classification": None,
        "algorithm1": None,
    }
    if deg == 2:
        c = classify_quadratic(anf)
        report["classification"] = {"k": c.k, "kind": c.kind.value, "dimV": c.dim_v}
    if deg == 3:
        report["algorithm1"] = _algorithm1(anf)
    return report


def _algorithm1(anf) -> dict:
    trace: list = []
    w = algorithm1_weight(anf, trace)
    return {
        "weight": w,
        "trace": [
            {"path": node.path, "n": node.n, "pivot": node.pivot, "case": node.case, "weight": node.weight}
            for node in trace
        ],
    }


def vbf_report(F) -> dict:
    n = F.n
    deg = V.degree(F)
    comps = V.components(F)
    per = []
    for lam, c in enumerate(comps, start=1):
        anf = tt_to_anf(c)
        per.append(
            {
                "lambda": lam,
                "weight": weight(c),
                "nl": (1 << (n - 1)) - linearity(wht(c)) // 2,
                "dimV": _dim_v(c, anf),
                "M": _m_or_none(c, anf.degree),
            }
        )
    ms = [p["M"] for p in per]
    delta = V.ddt(F).delta if n <= V.DDT_MAX_N else None
    return {
        "n": n,
        "degree": deg,
        "permutation": V.is_permutation(F),
        "delta": delta,
        "apn": None if delta is None else delta == 2,
        "L4": V.power_moment_L4(F) if n <= V.L4_MAX_N else None,
        "M": None if None in ms else sum(ms),
        "bent_components": V.bent_component_count(F) if n % 2 == 0 else None,
        "ab": V.is_ab(F) if n % 2 else None,
        "per_component": per,
    }


def _emit(args, payload, text_lines) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _kv_lines(d: dict) -> list[str]:
    out = []
    for key, val in d.items():
        if isinstance(val, (dict, list)):
            val = json.dumps(val, ensure_ascii=False)
        out.append(f"{key}: {val}")
    return out


def cmd_analyze(args) -> int:
    t = parse_function(args.input, args.n)
    report = analysis_report(t)
    _emit(args, report, _kv_lines(report))
    return EXIT_OK


def cmd_walsh(args) -> int:
    t = parse_function(args.input, args.n)
    values = wht(t).tolist()
    _emit(args, values, [" ".join(map(str, values))])
    return EXIT_OK


def cmd_weight(args) -> int:
    t = parse_function(args.input, args.n)
    if not args.algorithm1:
        w = weight(t)
        _emit(args, {"weight": w}, [str(w)])
        return EXIT_OK
    result = _algorithm1(tt_to_anf(t))
    lines = [f"weight: {result['weight']}"]
    for node in result["trace"]:
        case = node["case"] or "split"
        lines.append(f"  {node['path']}: n={node['n']} pivot=x{node['pivot']} {case} -> {node['weight']}")
    _emit(args, result, lines)
    return EXIT_OK


def cmd_vbf(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.file}: {exc.strerror}") from None
    report = vbf_report(parse_vbf(text))
    _emit(args, report, _kv_lines(report))
    return EXIT_OK


def _target(value: str) -> int | None:
    if value == "apn":
        return None
    if value.startswith("bent-components="):
        try:
            return int(value.split("=", 1)[1])
        except ValueError:
            pass
    raise InfeasibleConfigError(f"unknown target {value!r}; use 'apn' or 'bent-components=K'")


def cmd_search(args) -> int:
    if args.n is None:
        raise InfeasibleConfigError("search needs -n")
    cfg = SearchConfig(
        n=args.n,
        mode=args.mode,
        samples=args.samples,
        seed=args.seed,
        bent_components=_target(args.target),
        workers=args.threads,
    )
    count = 0
    for hit in search(cfg):
        count += 1
        if args.json:
            print(json.dumps(hit.to_json(), ensure_ascii=False), flush=True)
        else:
            extra = (
                f"bent_components={hit.bent_components}" if hit.ab is None else f"ab={hit.ab}"
            )
            coords = "; ".join(hit.to_json()["coordinates"])
            print(f"#{hit.index}: [{coords}] delta={hit.delta} M={hit.M} {extra}", flush=True)
        if args.max_hits and count >= args.max_hits:
            print(f"stopped after {count} hit(s)", file=sys.stderr)
            return EXIT_OK
    print(f"{count} hit(s) among {cfg.total} candidate(s)", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker count for searches")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed")
    common.add_argument("-n", type=int, default=argparse.SUPPRESS, help="number of variables")

    parser = argparse.ArgumentParser(prog="boolfn", parents=[common], description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="report on one Boolean function")
    p.add_argument("input", help="ANF such as 'x1*x2 + x3' or a table 'n=<k>:<hex>'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("walsh", parents=[common], help="Walsh spectrum")
    p.add_argument("input")
    p.set_defaults(func=cmd_walsh)

    p = sub.add_parser("weight", parents=[common], help="Hamming weight")
    p.add_argument("input")
    p.add_argument("--algorithm1", action="store_true", help="recursive cubic weight with trace")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("vbf", parents=[common], help="vectorial functions")
    vsub = p.add_subparsers(dest="vbf_command", required=True)
    va = vsub.add_parser("analyze", parents=[common], help="report on a vBf file")
    va.add_argument("file")
    va.set_defaults(func=cmd_vbf)

    p = sub.add_parser("search", parents=[common], help="pure-quadratic APN search")
    p.add_argument("--mode", choices=["random", "exhaustive"], default="random")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--target", default="apn", help="'apn' or 'bent-components=K'")
    p.add_argument("--max-hits", type=int, default=0, help="stop after this many hits")
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("json", False), ("threads", 1), ("seed", 0), ("n", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapError as exc:
        print(f"size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InfeasibleConfigError as exc:
        print(f"infeasible configuration: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except BoolFnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
