"""Command line front end.

Subcommands cover the admissible-prime list, local splitting data, the
cyclic constructor, both realizations, the index divisibility test and
the ramified-cubic discriminants. Output is a single deterministic JSON
document per run (or an aligned key/value table with --format table), so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .config import DEFAULT_CONFIG, Config, config_from_env
from .dedekind import (DedekindReport, IndexScanReport, dedekind_index_test,
                       eisenstein_cubic, monogenic_index_scan)
from .errors import (CapExceededError, SearchExhaustedError, ValidationError)
from .fields import (AbelianField, field_from_document, fixed_field,
                     splitting_data, to_document)
from .grunwald import ConstructionTrace, CyclicFieldRequest, construct_cyclic
from .intpoly import discriminant, int_poly, is_eisenstein
from .realizations import (RealizationReport, bounded_realization,
                           squarefree_primes, unbounded_realization)


def _int_list(text: str | None) -> list[int]:
    """Parse a comma separated integer list; empty or missing gives []."""
    if not text or not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"expected comma separated integers, "
                              f"got {text!r}") from exc


def _field_doc(field: AbelianField) -> dict:
    return to_document(field)


def _trace_doc(trace: ConstructionTrace) -> dict:
    return {
        "order": trace.order,
        "split_primes": list(trace.split_primes),
        "avoid_conductor": trace.avoid_conductor,
        "chosen_primes": list(trace.chosen_primes),
        "modulus": trace.modulus,
        "frobenius_vectors": [[p, list(vec)]
                              for p, vec in trace.frobenius_vectors],
        "character": list(trace.character),
        "conductor": trace.conductor,
    }


def _realization_doc(report: RealizationReport) -> dict:
    return {
        "kind": report.kind,
        "depth": report.depth,
        "group_primes": list(report.group_primes),
        "split_primes": list(report.split_primes),
        "components": [
            {
                "stage": c.stage,
                "group_prime": c.group_prime,
                "cyclic_order": c.cyclic_order,
                "field": _field_doc(c.field),
                "trace": _trace_doc(c.trace) if c.trace else None,
            }
            for c in report.components
        ],
        "compositum": _field_doc(report.compositum),
        "degree": report.degree,
        "local_degrees": [[p, d] for p, d in report.local_degrees],
        "claimed_bounds": [[p, b] for p, b in report.claimed_bounds],
        "torsion_order": report.torsion_order,
        "verdicts": {name: ok for name, ok in report.verdicts},
    }


def _dedekind_doc(report: DedekindReport) -> dict:
    return {
        "polynomial": list(report.polynomial.coefficients),
        "prime": report.prime,
        "factors": [[list(g.coefficients), e] for g, e in report.factors],
        "index_divisible": report.index_divisible,
        "splitting": ([[e, f] for e, f in report.splitting]
                      if report.splitting is not None else None),
        "irreducibility": report.irreducibility,
    }


def _scan_doc(report: IndexScanReport) -> dict:
    return {
        "prime": report.prime,
        "degree_parameter": report.degree_parameter,
        "degree_bound": report.degree_bound,
        "entries": [
            {
                "label": entry.label,
                "degree": entry.degree,
                "index_divisible": entry.index_divisible,
                "splitting": ([[e, f] for e, f in entry.splitting]
                              if entry.splitting is not None else None),
            }
            for entry in report.entries
        ],
        "witnesses": list(report.witnesses),
    }


def cmd_lambda(args: argparse.Namespace, cfg: Config) -> dict:
    entries = squarefree_primes(args.count, bound=cfg.prime_search_bound)
    return {
        "count": args.count,
        "primes": [sq.prime for sq in entries],
        "entries": [
            {"prime": sq.prime, "shift_factors": list(sq.shift_factors)}
            for sq in entries
        ],
    }


def cmd_local_degree(args: argparse.Namespace, cfg: Config) -> dict:
    generators = _int_list(args.subgroup) or [1]
    field = fixed_field(args.conductor, generators, cfg)
    data = splitting_data(field, args.prime, cfg)
    return {
        "field": _field_doc(field),
        "prime": args.prime,
        "ramification_index": data.e,
        "residue_degree": data.f,
        "primes_above": data.g,
        "local_degree": data.local_degree,
    }


def cmd_construct_cyclic(args: argparse.Namespace, cfg: Config) -> dict:
    avoid = None
    if args.avoid:
        avoid = field_from_document(json.loads(args.avoid), cfg)
    request = CyclicFieldRequest(
        order=args.q,
        split_primes=tuple(_int_list(args.split)),
        avoid=avoid,
        search_bound=args.search_bound,
    )
    field, trace = construct_cyclic(request, cfg)
    return {"field": _field_doc(field), "trace": _trace_doc(trace)}


def cmd_realize(args: argparse.Namespace, cfg: Config) -> dict:
    probes = _int_list(args.probe)
    if args.kind == "unbounded":
        if args.primes:
            raise ValidationError("--primes only applies to the bounded "
                                  "realization")
        report = unbounded_realization(args.depth, probes, cfg)
    else:
        split = _int_list(args.primes) or None
        report = bounded_realization(args.depth, split, probes, cfg)
    return _realization_doc(report)


def cmd_dedekind(args: argparse.Namespace, cfg: Config) -> dict:
    if args.family:
        if args.bound is None:
            raise ValidationError("--family requires --bound")
        with open(args.family, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
        family = [(str(label), int_poly(coeffs)) for label, coeffs in raw]
        report = monogenic_index_scan(family, args.prime, args.bound,
                                      seed=cfg.seed, config=cfg)
        return _scan_doc(report)
    if not args.poly:
        raise ValidationError("provide --poly or --family")
    f = int_poly(_int_list(args.poly))
    report = dedekind_index_test(f, args.prime, seed=cfg.seed, config=cfg)
    return _dedekind_doc(report)


def cmd_eisenstein_disc(args: argparse.Namespace, cfg: Config) -> dict:
    f = eisenstein_cubic(args.p)
    return {
        "prime": args.p,
        "polynomial": list(f.coefficients),
        "eisenstein": is_eisenstein(f, args.p),
        "discriminant": discriminant(f),
    }


def _render_table(doc: dict, indent: int = 0) -> list[str]:
    lines = []
    pad = "  " * indent
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_table(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.extend(_render_table(item, indent + 1))
                lines.append(f"{pad}  -")
            lines.pop()
        else:
            lines.append(f"{pad}{key}: "
                         f"{json.dumps(value, sort_keys=True)}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locfields",
        description="Local splitting data and explicit abelian "
                    "constructions over the rationals.")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for the randomized polynomial "
                             "factorization steps")
    parser.add_argument("--format", choices=("json", "table"), default=None,
                        help="output format (default from config)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lambda",
                       help="primes whose shifted value is squarefree")
    p.add_argument("--count", type=int, required=True)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("local-degree",
                       help="splitting data of a prime in an abelian field")
    p.add_argument("--conductor", type=int, required=True)
    p.add_argument("--subgroup", type=str, default="",
                   help="comma separated generators of the fixing subgroup")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_local_degree)

    p = sub.add_parser("construct-cyclic",
                       help="cyclic field of prime degree with prescribed "
                            "split primes")
    p.add_argument("--q", type=int, required=True,
                   help="prime degree of the extension")
    p.add_argument("--split", type=str, default="",
                   help="comma separated primes that must split completely")
    p.add_argument("--avoid", type=str, default="",
                   help="JSON field document to stay linearly disjoint from")
    p.add_argument("--search-bound", type=int, default=None)
    p.set_defaults(func=cmd_construct_cyclic)

    p = sub.add_parser("realize",
                       help="realize a product of cyclic groups C_{q-1}")
    p.add_argument("--kind", choices=("bounded", "unbounded"), required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--primes", type=str, default="",
                   help="auxiliary split primes for the bounded realization")
    p.add_argument("--probe", type=str, default="",
                   help="primes at which to report local degrees")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("dedekind",
                       help="index divisibility test for a monic polynomial")
    p.add_argument("--poly", type=str, default="",
                   help="comma separated coefficients, constant term first")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--family", type=str, default="",
                   help="JSON file of [label, coefficients] pairs to scan")
    p.add_argument("--bound", type=int, default=None,
                   help="degree parameter for the family scan")
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("eisenstein-disc",
                       help="discriminant of the standard ramified cubic")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_eisenstein_disc)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_env(DEFAULT_CONFIG)
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.format is not None:
        overrides["output_format"] = args.format
    if overrides:
        cfg = dataclasses.replace(cfg, **overrides)
    try:
        doc = args.func(args, cfg)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SearchExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    if cfg.output_format == "table":
        print("\n".join(_render_table(doc)))
    else:
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
