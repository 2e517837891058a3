"""Command-line front end: analyze a case, verify the corpus, print weights.

Output is either human-readable text or JSON.  Both renderings are produced
from the same report document, so their numeric content coincides; rationals
are serialized as [numerator, denominator] pairs in lowest terms and never
as floats.  Exit codes: 0 success / all passed, 1 computational or
verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cartan import CartanData, DiagramAutomorphism, DynkinType, automorphism_power, cartan_matrix, pi1_automorphisms
from .corpus import corpus_cases, corpus_export, verify_case
from .engine import CoxeterAnalysis, analyze, moduli_weights
from .errors import DomainError, StructuralError

USAGE_ERROR = 2
FAILURE = 1

_GAMMA_NODE = {"A": lambda n: 1, "B": lambda n: 1, "C": lambda n: n,
               "E": lambda n: {6: 6, 7: 7}.get(n)}


def _rational(x) -> list:
    f = Fraction(x)
    return [f.numerator, f.denominator]


def _jsonable(value):
    if isinstance(value, Fraction):
        return _rational(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


def resolve_automorphism(c: CartanData, name: str) -> DiagramAutomorphism:
    """Map an automorphism name (id, gamma, gamma^l, tau) onto the group
    realized by the fundamental-group quotient for this type."""
    autos = pi1_automorphisms(c)
    identity = autos[0]
    if name == "id":
        return identity
    by_node = {a.permutation[0]: a for a in autos}
    family, n = c.type.family, c.rank

    def gamma():
        if family == "D":
            if n % 2 == 1:
                return by_node.get(n)
            raise DomainError("gamma is not an alcove automorphism for even D ranks; use gamma^2 or tau")
        node_of = _GAMMA_NODE.get(family, lambda n: None)(n)
        if node_of is None or node_of not in by_node:
            raise DomainError(f"{c.type} has no gamma automorphism")
        return by_node[node_of]

    if name == "gamma":
        return gamma()
    if name == "tau":
        if family == "D" and n % 2 == 0:
            return by_node[n]
        raise DomainError("tau is only defined for even D ranks")
    if name.startswith("gamma^"):
        try:
            power = int(name.split("^", 1)[1])
        except ValueError:
            raise DomainError(f"bad automorphism power in {name!r}") from None
        if family == "D" and n % 2 == 0:
            # gamma itself is absent; gamma^2 means the vector-node involution
            if power % 2 == 0 and power % 4 != 0:
                return by_node[1]
            if power % 4 == 0:
                return identity
            raise DomainError("odd powers of gamma are not alcove automorphisms for even D ranks")
        return automorphism_power(gamma(), power)
    raise DomainError(f"unknown automorphism {name!r}")


def analysis_document(an: CoxeterAnalysis, name: str) -> dict:
    return {
        "command": "analyze",
        "type": an.cartan.type.family,
        "rank": an.cartan.type.rank,
        "automorphism": name,
        "reps": list(an.reps),
        "m": an.m,
        "b_check": [_rational(x) for x in an.b_check],
        "orbits": [
            {
                "roots": [list(r) for r in o.roots],
                "size": o.size,
                "degree": o.degree,
                "sign": o.sign_class,
            }
            for o in an.orbits
        ],
        "partition": {
            "positive": an.partition[0],
            "zero": an.partition[1],
            "negative": an.partition[2],
        },
        "levi_base": [list(r) for r in an.levi.base],
        "levi": {
            "rank": an.levi.rank,
            "maximal": an.levi.maximal,
            "coxeter_verdict": an.levi.coxeter_verdict,
        },
        "parabolic": None
        if an.parabolic_root is None
        else {"root": list(an.parabolic_root), "sign": an.parabolic_sign},
        "dim_aut_plus": an.dim_aut_plus,
        "fixed_space_dim": an.fixed_space_dim,
        "step2": [[p, e] for p, e in an.step2],
        "step2_pass": an.step2_pass,
        "sigma_orbit_count": an.sigma_orbit_count,
        "weights": list(an.moduli_weights),
        "discrepancy_flags": list(an.discrepancy_flags),
    }


def render_text(doc, indent: int = 0, out=None) -> str:
    lines = [] if out is None else out
    pad = "  " * indent
    if isinstance(doc, dict):
        for key, value in doc.items():
            if isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                render_text(value, indent + 1, lines)
            elif isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"{pad}{key}:")
                for item in value:
                    lines.append(f"{pad}  -")
                    render_text(item, indent + 2, lines)
            else:
                lines.append(f"{pad}{key}: {_scalar_text(value)}")
    else:
        lines.append(f"{pad}{_scalar_text(doc)}")
    return "\n".join(lines)


def _scalar_text(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_scalar_text(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def _emit(doc: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(_jsonable(doc), indent=2, sort_keys=False))
    else:
        print(render_text(doc))


def _cartan_from_args(args) -> CartanData:
    return cartan_matrix(DynkinType(args.type, args.rank))


def cmd_analyze(args) -> int:
    c = _cartan_from_args(args)
    sigma = resolve_automorphism(c, args.auto)
    reps = None
    if args.reps:
        reps = tuple(int(x) for x in args.reps.split(","))
    an = analyze(c, sigma, reps=reps)
    _emit(analysis_document(an, args.auto), args.format)
    return 0


def cmd_weights(args) -> int:
    c = _cartan_from_args(args)
    sigma = resolve_automorphism(c, args.auto)
    weights = moduli_weights(c, sigma)
    doc = {
        "command": "weights",
        "type": args.type,
        "rank": args.rank,
        "automorphism": args.auto,
        "weights": list(weights),
        "dimension": len(weights) - 1,
    }
    _emit(doc, args.format)
    return 0


def cmd_verify(args) -> int:
    cases = corpus_cases()
    if args.case is not None:
        cases = tuple(c for c in cases if c.id == args.case)
        if not cases:
            known = ", ".join(c.id for c in corpus_cases())
            print(f"error: unknown case {args.case!r}; known cases: {known}", file=sys.stderr)
            return USAGE_ERROR
    results = [verify_case(c) for c in cases]
    results.sort(key=lambda r: r.case_id)
    doc = {
        "command": "verify",
        "cases": [
            {
                "id": r.case_id,
                "passed": r.passed,
                "fields": [
                    {
                        "field": f.field,
                        "status": f.status,
                        "expected": _jsonable(f.expected),
                        "computed": _jsonable(f.computed),
                    }
                    for f in r.fields
                ],
            }
            for r in results
        ],
        "summary": {
            "total": len(results),
            "passed": sum(r.passed for r in results),
            "failed": sum(not r.passed for r in results),
        },
    }
    _emit(doc, args.format)
    return 0 if all(r.passed for r in results) else FAILURE


def cmd_export_corpus(args) -> int:
    doc = {"command": "export-corpus", "cases": corpus_export()}
    _emit(doc, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylcox",
        description="Exact twisted-Coxeter orbit analysis and bundle moduli weights",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_auto=True):
        p.add_argument("--type", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)
        if with_auto:
            p.add_argument("--auto", default="id",
                           help="diagram automorphism: id, gamma, gamma^l, tau")
        p.add_argument("--format", default="text", choices=["text", "json"])

    p_an = sub.add_parser("analyze", help="run the full pipeline for one case")
    common(p_an)
    p_an.add_argument("--reps", default=None,
                      help="comma-separated affine nodes, one per automorphism orbit, in product order")
    p_an.set_defaults(func=cmd_analyze)

    p_wt = sub.add_parser("weights", help="weighted projective moduli weights")
    common(p_wt)
    p_wt.set_defaults(func=cmd_weights)

    p_vf = sub.add_parser("verify", help="verify the tabulated regression corpus")
    p_vf.add_argument("--case", default=None, help="restrict to a single case id, e.g. E_8/id")
    p_vf.add_argument("--format", default="text", choices=["text", "json"])
    p_vf.set_defaults(func=cmd_verify)

    p_ex = sub.add_parser("export-corpus", help="emit the embedded corpus data")
    p_ex.add_argument("--format", default="json", choices=["text", "json"])
    p_ex.set_defaults(func=cmd_export_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except StructuralError as err:
        print(f"error: {err}", file=sys.stderr)
        return FAILURE


if __name__ == "__main__":
    sys.exit(main())
