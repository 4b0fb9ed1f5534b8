"""Command line interface.

Every subcommand prints one JSON report document on stdout (machine
readable, keys sorted, exact rationals as {"rational", "decimal"}
pairs) and a short human summary on stderr.  Exit codes: 0 on success,
1 for invalid input or a data-dependent failure, 2 for an internal
error.  The verify subcommand also exits 1 when some property suite
fails.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .checks import run_instance_checks
from .errors import ContractViolation, GhkError, InputError, UnboundedRegion
from .families import ToricInstance, parse_family
from .fmt import exact_decimal, rational_json
from .geometry import Cone2, Corner, staircase_complement_area
from .ideals import (
    is_saturated,
    new_ideal,
    ordinary_power,
    saturation_thresholds,
    torsion_factorization,
)
from .invariants import (
    convergence_constant,
    eghk,
    fit_quasi_polynomial,
    frobenius_gap_split,
    ghk_function,
    h0_powers,
    newton_multiplicity,
)
from .reptype import TorTable, a_tor_table, eghk_from_type
from .svgplot import render_region_svg


def _load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path} must contain a JSON object")
    return doc


def _int_pair_list(value, what: str) -> list[tuple[int, int]]:
    if not isinstance(value, list) or not value:
        raise InputError(f"{what} must be a nonempty list of [x, y] pairs")
    pairs = []
    for item in value:
        if not isinstance(item, list) or len(item) != 2:
            raise InputError(f"{what} entries must be [x, y] pairs, got {item!r}")
        try:
            pairs.append((int(item[0]), int(item[1])))
        except (TypeError, ValueError):
            raise InputError(f"{what} entries must be integers, got {item!r}") from None
    return pairs


def _instance_from_document(doc: dict) -> ToricInstance:
    if "cone" not in doc or "generators" not in doc:
        raise InputError('input document needs "cone" and "generators" keys')
    cone_doc = doc["cone"]
    if not isinstance(cone_doc, dict) or "rays" not in cone_doc:
        raise InputError('"cone" must be an object with a "rays" key')
    rays = _int_pair_list(cone_doc["rays"], "cone.rays")
    if len(rays) != 2:
        raise InputError("cone.rays must list exactly two rays")
    gens = _int_pair_list(doc["generators"], "generators")
    cone = Cone2.from_rays(*rays)
    ideal = new_ideal(cone, gens)
    label = doc.get("label")
    if label is not None and not isinstance(label, str):
        raise InputError('"label" must be a string')
    return ToricInstance(label or "input", ideal)


def _toric_instance(args) -> tuple[ToricInstance, dict]:
    if args.family is not None:
        return parse_family(args.family), {"family": args.family}
    doc = _load_document(args.file)
    return _instance_from_document(doc), doc


def _int_list(values, what: str) -> list[int]:
    try:
        return [int(v) for v in values]
    except (TypeError, ValueError):
        raise InputError(f"{what} must be a list of integers, got {values!r}") from None


def _parse_rational(value, what: str) -> Fraction:
    try:
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, bool):
            raise ValueError
        if isinstance(value, int):
            return Fraction(value)
    except (ValueError, ZeroDivisionError):
        pass
    raise InputError(f'{what} must be an integer or a "p/q" string, got {value!r}')


def _emit(report: dict, summary: list[str]) -> None:
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    for line in summary:
        print(line, file=sys.stderr)


def _cmd_eghk(args) -> int:
    instance, echo = _toric_instance(args)
    ideal = instance.ideal
    value = eghk(ideal)
    c1, c2 = saturation_thresholds(ideal)
    results = {
        "eghk": rational_json(value),
        "thresholds": [c1, c2],
        "saturated": is_saturated(ideal),
        "det_abs": ideal.cone.det_abs,
    }
    if instance.closed_form is not None:
        results["closed_form"] = rational_json(instance.closed_form)
    _emit(
        {"command": "eghk", "input": echo, "results": results},
        [f"{instance.label}: e_gHK = {value} = {exact_decimal(value)}"],
    )
    return 0


def _cmd_function(args) -> int:
    instance, echo = _toric_instance(args)
    ideal = instance.ideal
    values = ghk_function(ideal, args.prime, args.max_n)
    limit = eghk(ideal)
    normalized = [
        rational_json(Fraction(v, (args.prime**n) ** 2)) for n, v in enumerate(values)
    ]
    results = {
        "prime": args.prime,
        "values": values,
        "normalized": normalized,
        "limit": rational_json(limit),
        "convergence_constant": convergence_constant(ideal),
    }
    _emit(
        {"command": "function", "input": echo, "results": results},
        [
            f"{instance.label}: gap counts at q = {args.prime}^0 .. "
            f"{args.prime}^{args.max_n}: {values}",
            f"limit of count / q^2 is {limit} = {exact_decimal(limit)}",
        ],
    )
    return 0


def _cmd_split(args) -> int:
    instance, echo = _toric_instance(args)
    split = frobenius_gap_split(instance.ideal, args.q)
    results = {
        "q": args.q,
        "total_gap": split.total_gap,
        "sym_vs_ord": split.sym_vs_ord,
        "ord_vs_frob": split.ord_vs_frob,
        "additive": split.total_gap == split.sym_vs_ord + split.ord_vs_frob,
    }
    _emit(
        {"command": "split", "input": echo, "results": results},
        [
            f"{instance.label}: q = {args.q}: total gap {split.total_gap} = "
            f"{split.sym_vs_ord} (ordinary) + {split.ord_vs_frob} (band)"
        ],
    )
    return 0


def _cmd_powers(args) -> int:
    instance, echo = _toric_instance(args)
    ideal = instance.ideal
    values = h0_powers(ideal, args.max_n)
    results: dict = {"values": values, "max_n": args.max_n}
    summary = [f"{instance.label}: power gap lengths {values[:12]}"]
    period = args.period
    if is_saturated(ideal):
        fact = torsion_factorization(ideal, args.max_order)
        newton = newton_multiplicity(fact.primary)
        predicted = Fraction(newton, 2 * fact.order * fact.order)
        results["torsion"] = {
            "order": fact.order,
            "shift": list(fact.shift),
            "primary_generators": [list(g) for g in fact.primary.gens],
            "newton_multiplicity": newton,
            "predicted_leading": rational_json(predicted),
        }
        summary.append(
            f"torsion order {fact.order}, Newton multiplicity {newton}, "
            f"predicted leading coefficient {predicted}"
        )
        if period is None:
            period = fact.order
    if period is not None:
        fit = fit_quasi_polynomial(values, period)
        results["fit"] = {
            "period": period,
            "onset": fit.onset,
            "classes": [
                {
                    "residue": c.residue,
                    "coefficients": [rational_json(x) for x in c.coeffs],
                    "onset": c.onset,
                }
                for c in fit.classes
            ],
        }
        lead = ", ".join(str(c.coeffs[0]) for c in fit.classes)
        summary.append(f"quasi-polynomial of period {period}: leading {lead}")
    results["epsilon_estimate"] = rational_json(
        Fraction(values[-1], args.max_n * args.max_n)
    )
    _emit({"command": "powers", "input": echo, "results": results}, summary)
    return 0


def _cmd_reptype(args) -> int:
    if args.file is not None:
        doc = _load_document(args.file)
        section = doc.get("reptype")
        if not isinstance(section, dict):
            raise InputError('input document needs a "reptype" object')
        echo = doc
    else:
        if args.r is None or args.u is None:
            raise InputError("reptype needs either --file or both --r and --u")
        section = {"r": args.r, "multiplicities": _int_list(args.u.split(","), "--u")}
        if args.v is not None:
            section["weights"] = [w.strip() for w in args.v.split(",")]
        echo = {"reptype": section}

    r = section.get("r")
    if r is not None:
        try:
            r = int(r)
        except (TypeError, ValueError):
            raise InputError(f'"r" must be an integer, got {r!r}') from None
    if "table" in section:
        rows = section["table"]
        if not isinstance(rows, list):
            raise InputError('"table" must be a list of rows')
        table = TorTable(tuple(tuple(_int_list(row, "table row")) for row in rows))
    elif r is not None:
        table = a_tor_table(r)
    else:
        raise InputError('reptype needs "r" or an explicit "table"')
    if "multiplicities" not in section:
        raise InputError('reptype needs "multiplicities"')
    mults = _int_list(section["multiplicities"], "multiplicities")
    if "weights" in section:
        weights = [_parse_rational(w, "weight") for w in section["weights"]]
    elif r is not None:
        weights = [Fraction(1, r)] * table.dim
    else:
        raise InputError('reptype needs "weights" when no "r" is given')
    value = eghk_from_type(mults, weights, table)
    results = {
        "eghk": rational_json(value),
        "dim": table.dim,
        "multiplicities": mults,
        "weights": [rational_json(w) for w in weights],
    }
    if r is not None:
        results["r"] = r
    _emit(
        {"command": "reptype", "input": echo, "results": results},
        [f"module pairing gives e_gHK = {value} = {exact_decimal(value)}"],
    )
    return 0


def _cmd_verify(args) -> int:
    instance, echo = _toric_instance(args)
    checks = run_instance_checks(instance.ideal)
    all_passed = all(c.passed for c in checks)
    results = {
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ],
        "all_passed": all_passed,
    }
    summary = [
        f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}" for c in checks
    ]
    summary.append(
        f"{instance.label}: {sum(c.passed for c in checks)}/{len(checks)} suites passed"
    )
    _emit({"command": "verify", "input": echo, "results": results}, summary)
    return 0 if all_passed else 1


def _cmd_plot(args) -> int:
    instance, echo = _toric_instance(args)
    ideal = instance.ideal
    svg = render_region_svg(ideal, args.q_mark)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    q = args.q_mark or 1
    c1, c2 = ideal.thresholds
    threshold = Corner(q * c1, q * c2)
    fine = ordinary_power(ideal, q).stair if q > 1 else ideal.stair
    total = eghk(ideal)
    ordinary = staircase_complement_area(ideal.cone, threshold, fine) / (q * q)
    results = {
        "out": args.out,
        "power_scale": q,
        "areas": {
            "total_gap": rational_json(total),
            "ordinary_gap": rational_json(ordinary),
            "band": rational_json(total - ordinary),
        },
    }
    _emit(
        {"command": "plot", "input": echo, "results": results},
        [f"{instance.label}: wrote {args.out} (power scale {q})"],
    )
    return 0


def _add_toric_input(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help='family spec like "veronese:3,1" or "a:5,2"')
    group.add_argument("--file", help="path of a JSON input document")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghk",
        description=(
            "Exact generalized Hilbert-Kunz multiplicities of monomial ideals "
            "in two-dimensional normal toric rings"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eghk", help="exact multiplicity of the quotient")
    _add_toric_input(p)
    p.set_defaults(func=_cmd_eghk)

    p = sub.add_parser("function", help="gap counts along a prime-power tower")
    _add_toric_input(p)
    p.add_argument("--prime", type=int, required=True, help="characteristic, a prime")
    p.add_argument("--max-n", type=int, required=True, help="largest exponent n")
    p.set_defaults(func=_cmd_function)

    p = sub.add_parser("split", help="bracket power gap split at one q")
    _add_toric_input(p)
    p.add_argument("--q", type=int, required=True, help="bracket power exponent")
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("powers", help="ordinary power lengths, torsion, and fit")
    _add_toric_input(p)
    p.add_argument("--max-n", type=int, required=True, help="largest power")
    p.add_argument("--period", type=int, help="override the fit period")
    p.add_argument("--max-order", type=int, help="torsion search bound")
    p.set_defaults(func=_cmd_powers)

    p = sub.add_parser("reptype", help="multiplicity from a module decomposition")
    p.add_argument("--file", help="path of a JSON input document")
    p.add_argument("--r", type=int, help="index of the type A singularity")
    p.add_argument("--u", help="comma-separated module multiplicities")
    p.add_argument("--v", help="comma-separated limit weights (rationals)")
    p.set_defaults(func=_cmd_reptype)

    p = sub.add_parser("verify", help="run the property suites on an input")
    _add_toric_input(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("plot", help="write the region picture as SVG")
    _add_toric_input(p)
    p.add_argument("--out", required=True, help="output SVG path")
    p.add_argument("--q-mark", type=int, help="draw the q-th bracket power")
    p.set_defaults(func=_cmd_plot)

    return parser


def run_command(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnboundedRegion, ContractViolation) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    except GhkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())
