"""Command line front end: instance files in, canonical JSON reports out.

An instance file is a JSON object with "vars" (variable names, fixing the
index order), "J" and "a" (arrays of monomials written as {name: exponent}
objects), an optional "field" ("Q" or "Fp:<prime>") and an optional "box"
({"lower": [...], "upper": [...]}).  Reports are emitted as canonical JSON
followed by a short human summary; --quiet keeps just the JSON and --pretty
keeps just the summary.

Exit codes: 0 success, 1 a verification/checklist failure, 2 invalid input,
3 a resource guard exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .annihilator import (
    AnnBoundsReport,
    HeightReport,
    annihilator_bounds,
    height_report,
    torsion_ideal,
)
from .cech import (
    AnnihilationVerdict,
    CechReport,
    DegreeBox,
    annihilation_check,
    cech_ranks,
)
from .cohomdim import CdReport, cohomological_dimension
from .errors import GuardExceededError, InvalidInputError
from .linalg import FieldSpec
from .lynch import (
    LynchReport,
    build_instance,
    fixture,
    search_family,
    verify_instance,
)
from .monomial import Monomial, MonomialIdeal, VarSet, minimalize
from .stanley_reisner import QuotientIdeal, QuotientRing, krull_dim

FORMAT_VERSION = 1

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_GUARD_EXCEEDED = 3


# ---------------------------------------------------------------- serialization

def monomial_to_obj(m: Monomial, names: list[str]) -> dict[str, int]:
    return {names[i]: e for i, e in enumerate(m.exponents) if e}


def ideal_to_list(ideal: MonomialIdeal, names: list[str]) -> list[dict[str, int]]:
    return [monomial_to_obj(g, names) for g in ideal.gens]


def varset_to_list(s: VarSet, names: list[str]) -> list[str]:
    return [names[i - 1] for i in sorted(s)]


def monomial_from_obj(obj: dict[str, int], names: list[str]) -> Monomial:
    if not isinstance(obj, dict):
        raise InvalidInputError(f"monomials must be objects mapping name to exponent, got {obj!r}")
    index = {name: i for i, name in enumerate(names)}
    exps = [0] * len(names)
    for name, e in obj.items():
        if name not in index:
            raise InvalidInputError(f"monomial references undeclared variable {name!r}")
        if not isinstance(e, int) or e < 0:
            raise InvalidInputError(f"exponent of {name!r} must be a nonnegative integer")
        exps[index[name]] = e
    return Monomial(tuple(exps))


def parse_monomial_text(text: str, names: list[str]) -> Monomial:
    """Parse compact monomial syntax like x*y^2*z1 (or 1 for the identity)."""
    text = text.strip()
    if text in ("1", ""):
        return Monomial.identity(len(names))
    obj: dict[str, int] = {}
    for token in text.replace("·", "*").split("*"):
        token = token.strip()
        name, _, exp = token.partition("^")
        try:
            e = int(exp) if exp else 1
        except ValueError as exc:
            raise InvalidInputError(f"cannot parse exponent in {token!r}") from exc
        obj[name] = obj.get(name, 0) + e
    return monomial_from_obj(obj, names)


class Instance:
    def __init__(self, names, ring, acting, field, box):
        self.names: list[str] = names
        self.ring: QuotientRing = ring
        self.acting: QuotientIdeal = acting
        self.field: FieldSpec = field
        self.box: DegreeBox | None = box


def load_instance(path: str, field_override: str | None, box_override: str | None) -> Instance:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read instance file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"instance file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInputError("instance file must be a JSON object")
    names = data.get("vars")
    if (
        not isinstance(names, list)
        or not names
        or not all(isinstance(n, str) for n in names)
        or len(set(names)) != len(names)
    ):
        raise InvalidInputError("\"vars\" must be a nonempty list of unique names")
    d = len(names)
    for key in ("J", "a"):
        if key in data and not isinstance(data[key], list):
            raise InvalidInputError(f"\"{key}\" must be an array of monomial objects")
    j_gens = [monomial_from_obj(o, names) for o in data.get("J", [])]
    a_gens = [monomial_from_obj(o, names) for o in data.get("a", [])]
    relations = minimalize(j_gens, d)
    if not relations.is_squarefree():
        raise InvalidInputError("J must be squarefree")
    ring = QuotientRing(d, relations)
    acting = QuotientIdeal(ring, minimalize(a_gens, d))
    field = FieldSpec.parse(field_override or data.get("field", "Q"))
    box = None
    if box_override is not None:
        box = parse_box_text(box_override, d)
    elif "box" in data:
        raw = data["box"]
        try:
            box = DegreeBox(tuple(map(int, raw["lower"])), tuple(map(int, raw["upper"])))
        except (TypeError, KeyError, ValueError) as exc:
            raise InvalidInputError(f"malformed box: {exc}") from exc
        if len(box.lower) != d:
            raise InvalidInputError("box dimension does not match vars")
    return Instance(names, ring, acting, field, box)


def parse_box_text(text: str, d: int) -> DegreeBox:
    try:
        lo, hi = text.split(":")
        return DegreeBox((int(lo),) * d, (int(hi),) * d)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse box {text!r}; use lo:hi") from exc


def cd_report_dict(rep: CdReport, names) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "report": "cd",
        "field": rep.field.label(),
        "c": rep.c,
        "per_prime": [
            {"prime": varset_to_list(p, names), "cd": v} for p, v in rep.per_prime
        ],
    }


def ann_report_dict(rep: AnnBoundsReport, heights: HeightReport, names) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "report": "annihilator-bounds",
        "field": rep.field.label(),
        "c": rep.c,
        "delta": [varset_to_list(p, names) for p in rep.delta],
        "witnesses": [
            {
                "prime": varset_to_list(p, names),
                "witness": varset_to_list(q, names) if q is not None else None,
            }
            for p, q in rep.sigma_witnesses
        ],
        "lower": ideal_to_list(rep.lower, names),
        "upper": ideal_to_list(rep.upper, names) if rep.upper is not None else None,
        "exact": rep.exact,
        "exactness_reason": rep.exactness_reason,
        "heights": {
            "upper": heights.ht_upper,
            "annihilator": heights.ht_ann,
            "checks": [
                {"name": name, "holds": holds} for name, holds in heights.corollary_checks
            ],
        },
    }


def lynch_report_dict(rep: LynchReport, names) -> dict:
    inst = rep.instance
    return {
        "format_version": FORMAT_VERSION,
        "report": "lynch",
        "field": rep.field.label(),
        "params": {
            "d": inst.d,
            "X": varset_to_list(inst.X, names),
            "Y": varset_to_list(inst.Y, names),
            "Z": varset_to_list(inst.Z, names),
            "Xp": varset_to_list(inst.Xp, names),
            "Yp": varset_to_list(inst.Yp, names),
        },
        "claims": [
            {
                "claim": c.claim,
                "expected": _jsonable(c.expected),
                "computed": _jsonable(c.computed),
                "pass": c.passed,
            }
            for c in rep.checklist
        ],
        "c": rep.c,
        "annihilator": ideal_to_list(rep.annihilator_lift, names),
        "dim_modulo_torsion": rep.dim_modulo_torsion,
        "dim_modulo_annihilator": rep.dim_modulo_annihilator,
        "gap": rep.gap,
        "violated": rep.conjecture_violated,
        "all_claims_pass": rep.all_claims_pass(),
    }


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def cech_report_dict(rep: CechReport, names) -> dict:
    nonzero = [
        {"degree": list(deg), "ranks": list(ranks)}
        for deg, ranks in sorted(rep.ranks.items())
        if any(ranks)
    ]
    return {
        "format_version": FORMAT_VERSION,
        "report": "cech-ranks",
        "field": rep.field.label(),
        "generators": ideal_to_list(
            MonomialIdeal(len(names), rep.generators), names
        ),
        "box": {"lower": list(rep.box.lower), "upper": list(rep.box.upper)},
        "top_nonvanishing": rep.top_nonvanishing,
        "nonzero_slices": nonzero,
    }


def annihilation_dict(v: AnnihilationVerdict, m: Monomial, i: int, names, field) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "report": "cech-annihilation",
        "field": field.label(),
        "monomial": monomial_to_obj(m, names),
        "index": i,
        "verdict": v.verdict,
        "witness_degree": list(v.witness_degree) if v.witness_degree else None,
        "degrees_checked": v.degrees_checked,
        "coverage_gaps": v.coverage_gaps,
    }


# ------------------------------------------------------------------- commands

def _emit(doc: dict, summary_lines: list[str], args) -> None:
    chunks = []
    if not getattr(args, "pretty", False):
        chunks.append(json.dumps(doc, sort_keys=True, indent=2))
    if not args.quiet and summary_lines:
        chunks.append("\n".join(summary_lines))
    sys.stdout.write("\n".join(chunks) + "\n")


def _cmd_cd(args) -> int:
    inst = load_instance(args.instance, args.field, None)
    rep = cohomological_dimension(inst.acting, inst.field)
    doc = cd_report_dict(rep, inst.names)
    lines = [f"cd = {rep.c} over {rep.field.label()}"] + [
        f"  cd on R/({', '.join(varset_to_list(p, inst.names))}) = {v}"
        for p, v in rep.per_prime
    ]
    _emit(doc, lines, args)
    return EXIT_OK


def _cmd_ann_bounds(args) -> int:
    inst = load_instance(args.instance, args.field, None)
    rep = annihilator_bounds(inst.acting, inst.field)
    heights = height_report(rep, inst.ring)
    doc = ann_report_dict(rep, heights, inst.names)
    lines = [
        f"c = {rep.c} over {rep.field.label()}",
        f"lower bound (lift): {rep.lower.pretty(inst.names)} + J",
        "upper bound (lift): "
        + (f"{rep.upper.pretty(inst.names)} + J" if rep.upper is not None else "none found"),
        f"exact: {rep.exact} ({rep.exactness_reason})",
    ]
    _emit(doc, lines, args)
    return EXIT_OK


def _cmd_gamma(args) -> int:
    inst = load_instance(args.instance, args.field, None)
    lift = torsion_ideal(inst.acting)
    is_zero = lift == inst.ring.relations
    doc = {
        "format_version": FORMAT_VERSION,
        "report": "torsion",
        "field": inst.field.label(),
        "torsion_lift": ideal_to_list(lift, inst.names),
        "torsion_is_zero": is_zero,
        "dim_modulo_torsion": krull_dim(lift),
    }
    lines = [
        f"torsion submodule lift: {lift.pretty(inst.names)}"
        + (" (torsion is zero)" if is_zero else ""),
        f"dim R/torsion = {krull_dim(lift)}",
    ]
    _emit(doc, lines, args)
    return EXIT_OK


def _parse_indexset(text: str, d: int, what: str) -> frozenset[int]:
    try:
        out = frozenset(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise InvalidInputError(f"{what} must be comma separated indices") from exc
    if not out <= frozenset(range(1, d + 1)):
        raise InvalidInputError(f"{what} has indices outside 1..{d}")
    return out


def _lynch_summary(rep: LynchReport, names) -> list[str]:
    marks = "  ".join(
        f"{c.claim} {'ok' if c.passed else 'FAIL'}" for c in rep.checklist
    )
    return [
        f"c = {rep.c}; ann(H^c) = {rep.annihilator_lift.pretty(names)} + J",
        f"dim(R/torsion) = {rep.dim_modulo_torsion}, "
        f"dim(R/ann) = {rep.dim_modulo_annihilator}, gap = {rep.gap}",
        f"conjecture violated: {rep.conjecture_violated}",
        f"claims: {marks}",
    ]


def _cmd_lynch(args) -> int:
    field = FieldSpec.parse(args.field or "Q")
    if args.lynch_cmd == "verify":
        d = args.d
        inst = build_instance(
            d,
            _parse_indexset(args.X, d, "X"),
            _parse_indexset(args.Y, d, "Y"),
            _parse_indexset(args.Z, d, "Z"),
            _parse_indexset(args.Xp, d, "Xp"),
            _parse_indexset(args.Yp, d, "Yp"),
        )
        names = [f"u{i}" for i in range(1, d + 1)]
        rep = verify_instance(inst, field)
        _emit(lynch_report_dict(rep, names), _lynch_summary(rep, names), args)
        return EXIT_OK if rep.all_claims_pass() else EXIT_VERIFICATION_FAILED
    if args.lynch_cmd == "fixture":
        inst, names = fixture(args.name, d=args.d, l=args.l)
        rep = verify_instance(inst, field)
        _emit(lynch_report_dict(rep, names), _lynch_summary(rep, names), args)
        return EXIT_OK if rep.all_claims_pass() else EXIT_VERIFICATION_FAILED
    if args.lynch_cmd == "search":
        reports = search_family(args.max_d, field, guard=args.guard)
        docs = []
        for rep in reports:
            names = [f"u{i}" for i in range(1, rep.instance.d + 1)]
            docs.append(lynch_report_dict(rep, names))
        violated = sum(1 for r in reports if r.conjecture_violated)
        all_pass = all(r.all_claims_pass() for r in reports)
        doc = {
            "format_version": FORMAT_VERSION,
            "report": "lynch-search",
            "field": field.label(),
            "max_d": args.max_d,
            "instances": len(reports),
            "violations": violated,
            "all_claims_pass": all_pass,
            "reports": docs,
        }
        lines = [
            f"{len(reports)} canonical instances with d <= {args.max_d}",
            f"claims pass on all instances: {all_pass}",
            f"conjecture violated on {violated} instances "
            f"(exactly those with |Z| > |X|: "
            f"{violated == sum(1 for r in reports if r.instance.gap_formula > 0)})",
        ]
        _emit(doc, lines, args)
        return EXIT_OK if all_pass else EXIT_VERIFICATION_FAILED
    raise InvalidInputError("unknown lynch subcommand")


def _cmd_oracle(args) -> int:
    inst = load_instance(args.instance, args.field, args.box)
    box = inst.box or DegreeBox.uniform(inst.ring.ambient)
    if args.oracle_cmd == "ranks":
        rep = cech_ranks(inst.acting, box, inst.field, guard=args.guard)
        doc = cech_report_dict(rep, inst.names)
        lines = [
            f"top nonvanishing index in box: {rep.top_nonvanishing} over {inst.field.label()}",
            f"nonzero slices: {sum(1 for r in rep.ranks.values() if any(r))}"
            f" of {len(rep.ranks)} degrees",
        ]
        _emit(doc, lines, args)
        return EXIT_OK
    if args.oracle_cmd == "ann":
        m = parse_monomial_text(args.monomial, inst.names)
        verdict = annihilation_check(m, inst.acting, args.i, box, inst.field, guard=args.guard)
        doc = annihilation_dict(verdict, m, args.i, inst.names, inst.field)
        lines = [
            f"{m.pretty(inst.names)} on H^{args.i}: {verdict.verdict}"
            + (
                f" at degree {list(verdict.witness_degree)}"
                if verdict.witness_degree
                else ""
            ),
            f"degrees checked: {verdict.degrees_checked}, coverage gaps: {verdict.coverage_gaps}",
        ]
        _emit(doc, lines, args)
        return EXIT_OK
    raise InvalidInputError("unknown oracle subcommand")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topann",
        description="Annihilators of top local cohomology over Stanley-Reisner rings.",
    )
    parser.add_argument("--field", default=None, help="coefficient field: Q or Fp:<prime>")
    parser.add_argument("--quiet", action="store_true", help="suppress the human summary")
    parser.add_argument(
        "--pretty", action="store_true", help="human summary only, no JSON block"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cd = sub.add_parser("cd", help="cohomological dimension report")
    p_cd.add_argument("instance")
    p_cd.set_defaults(func=_cmd_cd)

    p_ann = sub.add_parser("ann-bounds", help="annihilator bounds with exactness certificate")
    p_ann.add_argument("instance")
    p_ann.set_defaults(func=_cmd_ann_bounds)

    p_gamma = sub.add_parser("gamma", help="torsion submodule (H^0) lift")
    p_gamma.add_argument("instance")
    p_gamma.set_defaults(func=_cmd_gamma)

    p_lynch = sub.add_parser("lynch", help="counterexample family commands")
    lynch_sub = p_lynch.add_subparsers(dest="lynch_cmd", required=True)
    p_verify = lynch_sub.add_parser("verify", help="verify one parameter tuple")
    p_verify.add_argument("--d", type=int, required=True)
    for flag in ("--X", "--Y", "--Z", "--Xp", "--Yp"):
        p_verify.add_argument(flag, dest=flag.lstrip("-"), required=True)
    p_verify.set_defaults(func=_cmd_lynch)
    p_fixture = lynch_sub.add_parser("fixture", help="verify a named fixture")
    p_fixture.add_argument("name")
    p_fixture.add_argument("--d", type=int, default=None)
    p_fixture.add_argument("--l", type=int, default=None)
    p_fixture.set_defaults(func=_cmd_lynch)
    p_search = lynch_sub.add_parser("search", help="sweep the canonical family")
    p_search.add_argument("--max-d", dest="max_d", type=int, required=True)
    p_search.add_argument("--guard", type=int, default=8)
    p_search.set_defaults(func=_cmd_lynch)

    p_oracle = sub.add_parser("oracle", help="multigraded Cech verification")
    oracle_sub = p_oracle.add_subparsers(dest="oracle_cmd", required=True)
    p_ranks = oracle_sub.add_parser("ranks", help="cohomology ranks per degree in a box")
    p_ranks.add_argument("instance")
    p_ranks.add_argument("--box", default=None, help="uniform box lo:hi")
    p_ranks.add_argument("--guard", type=int, default=10)
    p_ranks.set_defaults(func=_cmd_oracle)
    p_oann = oracle_sub.add_parser("ann", help="does a monomial annihilate H^i in the box?")
    p_oann.add_argument("instance")
    p_oann.add_argument("--monomial", required=True)
    p_oann.add_argument("--i", type=int, required=True)
    p_oann.add_argument("--box", default=None, help="uniform box lo:hi")
    p_oann.add_argument("--guard", type=int, default=10)
    p_oann.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceededError as exc:
        print(f"error (guard): {exc}", file=sys.stderr)
        return EXIT_GUARD_EXCEEDED
    except InvalidInputError as exc:
        print(f"error (invalid input): {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
