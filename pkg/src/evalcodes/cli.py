"""Command-line front end.

Every verb prints one JSON object (or a plain-text rendering with
``--format text``) on standard output. Exit status is 0 on success, 1 for
domain errors such as an exceeded budget or a violated precondition, and 2
for malformed input. Errors go to standard error as ``{"error": code,
"message": text}``.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .duality import DualityError, algebraic_dual, combinatorial_pairing
from .evalcode import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CodeError,
    PointSet,
    dual_code,
    evaluate_space,
    min_distance,
    reed_muller_space,
    standard_function_space,
)
from .families import (
    CartesianSpec,
    FamilyError,
    affine_monomial_dual,
    cartesian_pointset,
    duality_criterion,
    reed_muller,
    self_dual_code,
    torus_monomial_dual,
    weakly_divisor_closed,
)
from .field import FieldError, field_from_descriptor
from .groebner import GroebnerError
from .invariants import (
    InvariantError,
    essential_monomials,
    hilbert_profile,
    indicator_functions,
    reg_delta,
    symmetry_and_duality_condition,
    v_numbers,
)
from .polyring import PolynomialError, get_order, monomial_text, parse_polynomial, polynomial_from_json

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

_RM_SPACE = re.compile(r"^\s*(?:basis\s+of\s+)?S\s*<=\s*(-?\d+)\s*$")


class UsageError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


# --- input parsing -----------------------------------------------------------

def _load_json(arg: str, what: str):
    """Inline JSON, or the path of a file holding JSON."""
    text = arg
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("bad-json", f"{what}: not a JSON file or inline JSON ({exc.msg})") from None


def _field(args):
    if args.field is None:
        return None
    return field_from_descriptor(_load_json(args.field, "--field"))


def _points(args) -> PointSet:
    if args.points is None:
        raise UsageError("missing-points", "--points is required for this verb")
    obj = _load_json(args.points, "--points")
    F = _field(args)
    if isinstance(obj, list):
        if F is None:
            raise UsageError("missing-field", "a bare point list needs --field")
        return PointSet(F, obj)
    if not isinstance(obj, dict) or "points" not in obj:
        raise UsageError("bad-points", "--points must be a list or an object with a 'points' key")
    if F is None and "field" not in obj:
        raise UsageError("missing-field", "no field given in --points or --field")
    return PointSet.from_json(obj, F)


def _space(args, X: PointSet):
    """Polynomials from --space (file, inline list, or 'S<=d') or --degree."""
    if args.space is not None and args.degree is not None:
        raise UsageError("conflicting-space", "give --space or --degree, not both")
    if args.degree is not None:
        return reed_muller_space(X.nvars, args.degree, X.field, args.order)
    if args.space is None:
        raise UsageError("missing-space", "this verb needs --space or --degree")
    m = _RM_SPACE.match(args.space)
    if m:
        return reed_muller_space(X.nvars, int(m.group(1)), X.field, args.order)
    text = args.space
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    if text.lstrip().startswith("["):
        # JSON alternative: a list of term lists
        obj = _load_json(text, "--space")
        return [polynomial_from_json(f, X.field, X.nvars) for f in obj]
    lines = [ln.strip() for ln in re.split(r"[;\n]", text)]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    return [parse_polynomial(ln, X.field, X.nvars) for ln in lines]


def _exponents(arg: str, what: str):
    obj = _load_json(arg, what)
    if not isinstance(obj, list) or not all(isinstance(a, list) for a in obj):
        raise UsageError("bad-monomials", f"{what} must be a list of exponent lists")
    return [tuple(int(c) for c in a) for a in obj]


def _texts(polys, order):
    return [f.to_text(order) for f in polys]


def _budget(args):
    return None if args.budget is not None and args.budget <= 0 else (args.budget or DEFAULT_BUDGET)


# --- verbs -------------------------------------------------------------------

def cmd_vanishing_ideal(args):
    X = _points(args)
    G, D = X.ideal(args.order)
    return {"groebner_basis": G.to_text(), "footprint": D.to_text()}


def cmd_footprint(args):
    X = _points(args)
    return {"footprint": X.footprint(args.order).to_text()}


def cmd_code(args):
    X = _points(args)
    std = standard_function_space(_space(args, X), X, args.order)
    return {"standard_space": _texts(std, args.order), "code": evaluate_space(std, X).to_json()}


def cmd_min_distance(args):
    X = _points(args)
    C = evaluate_space(_space(args, X), X)
    if args.dual:
        C = dual_code(C)
    return {"length": C.length, "k": C.k, "min_distance": min_distance(C, _budget(args))}


def cmd_dual(args):
    X = _points(args)
    return {"dual": dual_code(evaluate_space(_space(args, X), X)).to_json()}


def cmd_algebraic_dual(args):
    X = _points(args)
    return {"basis": _texts(algebraic_dual(_space(args, X), X, args.order).basis, args.order)}


def cmd_indicators(args):
    X = _points(args)
    ind = indicator_functions(X, args.order)
    return {"indicators": _texts(ind.functions, args.order), "degrees": list(ind.degrees),
            "essential": [monomial_text(m) for m in essential_monomials(ind)]}


def cmd_vnumber(args):
    X = _points(args)
    local, v = v_numbers(X, args.order)
    out = {"v_local": local, "v_global": v}
    if args.brute_force:
        out["reg_delta"] = reg_delta(X, args.order, "brute-force", _budget(args))
    return out


def cmd_hvector(args):
    X = _points(args)
    prof = hilbert_profile(X, args.order)
    cond = symmetry_and_duality_condition(prof)
    return {"h_vector": list(prof.counts), "hilbert": list(prof.cumulative), "r0": prof.r0,
            "symmetric": cond["h_symmetric"],
            "complement": {str(d): v for d, v in cond["complement_values"].items()}}


def cmd_criterion(args):
    X = _points(args)
    rep = duality_criterion(X, args.order)
    out = dict(rep)
    if rep["g"] is not None:
        out["g"] = rep["g"].to_text(args.order)
        out["beta"] = [X.field.literal(b) for b in rep["beta"]]
    if args.require and not rep["holds"]:
        raise DomainFailure("criterion-fails", "the duality criterion does not hold", out)
    return out


def cmd_pairing(args):
    X = _points(args)
    g1 = _exponents(args.gamma1, "--gamma1")
    g2 = _exponents(args.gamma2, "--gamma2")
    beta = combinatorial_pairing(g1, g2, X, args.order)
    return {"beta": [X.field.literal(b) for b in beta]}


def _cartesian_spec(args) -> CartesianSpec:
    F = _field(args)
    if F is None:
        raise UsageError("missing-field", "family verbs need --field")
    if args.orders is None:
        raise UsageError("missing-orders", "family verbs need --orders")
    orders = tuple(int(d) for d in _load_json(args.orders, "--orders"))
    if args.kind == "torus":
        return CartesianSpec.torus(F, orders)
    if args.kind == "affine":
        return CartesianSpec.affine(F, orders)
    if args.with_zero is None:
        raise UsageError("missing-with-zero", "family cartesian needs --with-zero")
    flags = tuple(bool(z) for z in _load_json(args.with_zero, "--with-zero"))
    return CartesianSpec(F, orders, flags)


def cmd_family(args):
    spec = _cartesian_spec(args)
    X = cartesian_pointset(spec)
    out = {"kind": spec.kind, "points": X.to_json()["points"], "r0": spec.r0,
           "footprint": X.footprint(args.order).to_text()}
    if args.monomials is not None:
        A = _exponents(args.monomials, "--monomials")
        if spec.kind == "torus":
            dual = torus_monomial_dual(A, spec, args.order)
        elif spec.kind == "affine":
            out["weakly_divisor_closed"] = weakly_divisor_closed(A, spec)
            dual = affine_monomial_dual(A, spec, args.order)
        else:
            raise UsageError("no-closed-form", "closed-form duals exist for torus and affine families only")
        out["dual_monomials"] = None if dual is None else [monomial_text(m) for m in dual]
    return out


def cmd_rm(args):
    if args.degree is None:
        raise UsageError("missing-degree", "rm needs --degree")
    X = _points(args)
    C = reed_muller(X, args.degree, args.order)
    out = {"degree": args.degree, "code": C.to_json()}
    if args.distance and C.k:
        out["min_distance"] = min_distance(C, _budget(args))
    return out


def cmd_self_dual(args):
    X = _points(args)
    return {"code": self_dual_code(X, args.order).to_json()}


VERBS = {
    "vanishing-ideal": (cmd_vanishing_ideal, "reduced Gröbner basis and footprint of I(X)"),
    "footprint": (cmd_footprint, "standard monomials of I(X)"),
    "code": (cmd_code, "standard function space and generator matrix of L_X"),
    "min-distance": (cmd_min_distance, "minimum distance of L_X (or its dual with --dual)"),
    "dual": (cmd_dual, "generator matrix of the dual code"),
    "algebraic-dual": (cmd_algebraic_dual, "basis of the algebraic dual inside the footprint span"),
    "indicators": (cmd_indicators, "standard indicator functions"),
    "vnumber": (cmd_vnumber, "local and global v-numbers"),
    "hvector": (cmd_hvector, "h-vector, Hilbert function and regularity index"),
    "criterion": (cmd_criterion, "Reed-Muller duality criterion"),
    "pairing": (cmd_pairing, "scaling vector for a pair of monomial sets"),
    "family": (cmd_family, "degenerate torus, affine space or Cartesian set"),
    "rm": (cmd_rm, "Reed-Muller-type code of a given degree"),
    "self-dual": (cmd_self_dual, "self-dual code in characteristic 2"),
}


class DomainFailure(Exception):
    def __init__(self, code: str, message: str, report=None):
        super().__init__(message)
        self.code = code
        self.report = report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("bad-arguments", message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field descriptor JSON, inline or file")
    common.add_argument("--points", help="point set JSON, inline or file")
    common.add_argument("--space", help="polynomial file (one per line), inline list separated by ';', or 'S<=d'")
    common.add_argument("--degree", type=int, help="use S_{<=d} as the space")
    common.add_argument("--budget", type=int, help=f"enumeration budget for q^k (default {DEFAULT_BUDGET}, <=0 disables)")
    common.add_argument("--order", choices=["grevlex", "grlex"], default="grevlex")
    common.add_argument("--format", choices=["json", "text"], default="json")

    parser = _Parser(prog="evalcodes", description="Evaluation codes over finite fields.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for name, (_, help_text) in VERBS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "min-distance":
            p.add_argument("--dual", action="store_true", help="measure the dual code")
        if name == "vnumber":
            p.add_argument("--brute-force", action="store_true", help="also compute reg(delta_X) by enumeration")
        if name == "criterion":
            p.add_argument("--require", action="store_true", help="exit 1 when the criterion fails")
        if name == "pairing":
            p.add_argument("--gamma1", required=True, help="exponent list JSON")
            p.add_argument("--gamma2", required=True, help="exponent list JSON")
        if name == "family":
            p.add_argument("kind", choices=["torus", "affine", "cartesian"])
            p.add_argument("--orders", help="subgroup orders d_i as a JSON list")
            p.add_argument("--with-zero", help="per-axis flags for adjoining 0 (cartesian)")
            p.add_argument("--monomials", help="exponent list JSON of a monomial space")
        if name == "rm":
            p.add_argument("--distance", action="store_true", help="include the minimum distance")
    return parser


def render_text(obj) -> str:
    lines = []
    for key, val in obj.items():
        if isinstance(val, list) and val and all(isinstance(v, str) for v in val):
            lines.append(f"{key}:")
            lines.extend(f"  {v}" for v in val)
        else:
            lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines)


def _emit(obj, fmt, stream):
    if fmt == "text":
        print(render_text(obj), file=stream)
    else:
        print(json.dumps(obj, sort_keys=False, separators=(",", ":")), file=stream)


def _fail(code, message, status):
    print(json.dumps({"error": code, "message": message}), file=sys.stderr)
    return status


_USAGE_ERRORS = (PolynomialError, GroebnerError, FieldError)
_DOMAIN_ERRORS = (CodeError, InvariantError)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.order = get_order(args.order)
        handler = VERBS[args.verb][0]
        out = handler(args)
    except UsageError as exc:
        return _fail(exc.code, str(exc), EXIT_USAGE)
    except _USAGE_ERRORS as exc:
        return _fail(type(exc).__name__.replace("Error", "").lower() + "-input", str(exc), EXIT_USAGE)
    except DomainFailure as exc:
        if exc.report is not None:
            _emit(exc.report, args.format, sys.stdout)
        return _fail(exc.code, str(exc), EXIT_DOMAIN)
    except BudgetExceeded as exc:
        return _fail("budget-exceeded", str(exc), EXIT_DOMAIN)
    except (DualityError, FamilyError) as exc:
        return _fail(exc.code, str(exc), EXIT_DOMAIN)
    except _DOMAIN_ERRORS as exc:
        return _fail(type(exc).__name__.replace("Error", "").lower() + "-error", str(exc), EXIT_DOMAIN)
    _emit(out, args.format, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
