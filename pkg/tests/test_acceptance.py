"""Acceptance checks on the reference point sets plus the property and oracle sweeps.

Every criterion prints one line, PASS or FAIL with the failing sub-checks.
Run ``pytest tests/test_acceptance.py -s`` (or ``-v``) to see them.
"""

import itertools
import random

import pytest

from evalcodes import PointSet, make_field
from evalcodes.duality import algebraic_dual, double_dual_check, is_dual_monomial, monomial_space
from evalcodes.evalcode import (
    LinearCode,
    canonical_space,
    dual_code,
    evaluate_space,
    min_distance,
    reed_muller_space,
    same_space,
    standard_function_space,
)
from evalcodes.families import (
    CartesianSpec,
    affine_monomial_dual,
    affine_rm_dual,
    cartesian_pointset,
    duality_criterion,
    reed_muller,
    self_dual_code,
    torus_monomial_dual,
    weakly_divisor_closed,
)
from evalcodes.groebner import vanishing_ideal, vanishing_ideal_buchberger
from evalcodes.invariants import hilbert_profile, indicator_functions, reg_delta, v_numbers
from evalcodes.linalg import basis_algorithm, rank, span_rank
from evalcodes.polyring import Polynomial

from conftest import PTS8, PTS5, PTS7, LINE4, PLANE5, polys
from test_invariants import min_indicator_degree, projectively_equal

F2, F3, F4, F7 = make_field(2), make_field(3), make_field(2, 2), make_field(7)


def verdict(n, checks, capsys, expected_fail=()):
    """Print the criterion line and assert every sub-check not listed in expected_fail."""
    bad = [name for name, ok in checks.items() if not ok]
    line = f"criterion {n}: " + ("PASS" if not bad else "FAIL [" + ", ".join(bad) + "]")
    if bad and all(b in expected_fail for b in bad):
        line += f" (known conflict in the reference data; other {len(checks) - len(bad)} sub-checks pass)"
    with capsys.disabled():
        print("\n" + line)
    assert not [b for b in bad if b not in expected_fail], line


def texts(fs):
    return [f.to_text() for f in fs]


def rm_space(X, d):
    return reed_muller_space(X.nvars, d, X.field)


def mono(X, text):
    (m,) = polys(X, [text])[0].terms
    return m


def code(X, rows):
    return LinearCode(X.field, len(X), [[X.field.element(c) for c in r] for r in rows])


def all_projective(X, got, expected):
    return len(got) == len(expected) and all(projectively_equal(f, g) for f, g in zip(got, polys(X, expected)))


# reference dual vector for pts8; it is not orthogonal to C_X(2), see the tests below
PTS8_DUAL_REFERENCE = [0, 0, 1, 1, 1, 1, 1, 1]


def pts8_checks():
    X = PointSet(F3, PTS8)
    D = X.footprint()
    C2 = reed_muller(X, 2)
    L2 = rm_space(X, 2)
    A1 = algebraic_dual(rm_space(X, 1), X)
    prof = hilbert_profile(X)
    local, v = v_numbers(X)
    return {
        "groebner_basis": texts(X.groebner()) == ["t2^2-t2", "t1*t2-t1", "t1^2-t1", "t3^3-t3", "t1*t3^2-t1"],
        "standard_space_C2": same_space(standard_function_space(L2, X), polys(X, ["1", "t3", "t2", "t1", "t3^2", "t2*t3", "t1*t3"]), D, F3),
        "algebraic_dual_C2": texts(algebraic_dual(L2, X).basis) == ["t1+t2+1"],
        "dual_code_equals_ev_of_algebraic_dual": dual_code(C2) == evaluate_space(polys(X, ["t1+t2+1"]), X),
        "reference_dual_vector": dual_code(C2) == code(X, [PTS8_DUAL_REFERENCE]),
        "algebraic_dual_C1": same_space(A1.basis, polys(X, ["t1*t3+t2*t3-t1-t2-t3-1", "t1+t2+t3+1", "t2+t3-1", "t3"]), D, F3),
        "distances_C1": (min_distance(reed_muller(X, 1)), min_distance(dual_code(reed_muller(X, 1)))) == (2, 3),
        "h_vector": prof.h_vector == (1, 3, 3, 1) and prof.r0 == 3,
        "v_numbers": (local[0], local[2], v) == (2, 3, 2),
        "reg_delta_both_modes": reg_delta(X) == 2 and reg_delta(X, mode="brute-force") == 2,
        "indicators_projective": all_projective(X, list(indicator_functions(X)), [
            "t1*t3+t1", "t1*t3-t1", "t2*t3^2-t3^2-t2+1", "t2*t3^2+t2*t3-t3^2-t3",
            "t2*t3^2-t2*t3-t3^2+t3", "t2*t3^2-t2", "t2*t3^2-t1*t3+t2*t3-t1", "t2*t3^2+t1*t3-t2*t3-t1"]),
        "criterion_fails": duality_criterion(X)["holds"] is False,
    }


def test_criterion_1(capsys):
    verdict(1, pts8_checks(), capsys, expected_fail=("reference_dual_vector",))


@pytest.mark.xfail(strict=True, reason="reference vector has inner product 1 with ev(t3^2), so it is not in C_X(2)^perp")
def test_criterion_1_reference_dual_vector():
    X = PointSet(F3, PTS8)
    assert dual_code(reed_muller(X, 2)) == code(X, [PTS8_DUAL_REFERENCE])


def test_criterion_1_reference_vector_is_not_orthogonal():
    X = PointSet(F3, PTS8)
    t3sq = X.evaluate(polys(X, ["t3^2"])[0])
    assert sum(a * b for a, b in zip(t3sq, PTS8_DUAL_REFERENCE)) % 3 == 1
    assert dual_code(reed_muller(X, 2)) == code(X, [[0, 0, 1, 1, 1, -1, -1, -1]])


def test_criterion_2(capsys):
    X = PointSet(F3, PTS5)
    rep = duality_criterion(X)
    prof = hilbert_profile(X)
    checks = {
        "groebner_basis": texts(X.groebner()) == [
            "t2*t3+t3^2-t3", "t1*t3+t3^2-t3", "t2^2-t3^2-t2+t3", "t1*t2+t3^2-t3", "t1^2-t3^2-t1+t3", "t3^3-t3"],
        "footprint": X.footprint().to_text() == ["1", "t3", "t2", "t1", "t3^2"],
        "indicators_exact": list(indicator_functions(X)) == polys(X, [
            "t3+t1-t3^2", "t3+t2-t3^2", "-t3-t3^2", "1+t3-t2-t1+t3^2", "t3-t3^2"]),
        "h_vector": prof.h_vector == (1, 3, 1) and prof.r0 == 2,
        "criterion_holds": rep["holds"],
        "beta": rep["beta"] == [F3.element(c) for c in (-1, -1, -1, 1, -1)],
        "dual_C1": dual_code(reed_muller(X, 1)) == code(X, [[-1, -1, -1, 1, -1]]),
    }
    verdict(2, checks, capsys)


def test_criterion_3(capsys):
    X = PointSet(F3, PTS7)
    D = X.footprint()
    prof = hilbert_profile(X)
    expected = {
        0: ["t2*t3^2-t2*t3-t3^2-t1-t2-t3-1", "t2*t3+t3^2+t1+t2+t3+1", "t3^2+t1+t2+t3", "t1+t2+t3-1", "t2+t3", "t3+1"],
        1: ["t2*t3-t1-t2+t3+1", "t1+t2+1", "t2-1"],
        2: ["t1+t2+1"],
    }
    checks = {
        f"algebraic_dual_C{d}": same_space(algebraic_dual(rm_space(X, d), X).basis, polys(X, p), D, F3)
        for d, p in expected.items()
    }
    dist = lambda C: min_distance(C)
    checks.update({
        "distances": (dist(reed_muller(X, 1)), dist(dual_code(reed_muller(X, 1))), dist(dual_code(reed_muller(X, 2))),
                      dist(dual_code(reed_muller(X, 0))), dist(reed_muller(X, 2))) == (1, 3, 6, 2, 1),
        "r0": prof.r0 == 3,
        "complement_excess": prof.H(1) + prof.H(1) == 8 > len(X),
        "complement_d2": prof.H(2) + prof.H(0) == len(X),
        "criterion_fails": duality_criterion(X)["holds"] is False,
        "v_profile": v_numbers(X) == ([1, 3, 3, 3, 3, 3, 3], 1),
        "reg_delta": reg_delta(X, mode="brute-force") == 1,
    })
    verdict(3, checks, capsys)


def test_criterion_4(capsys):
    X = PointSet(F7, LINE4)
    L = rm_space(X, 2)
    A = algebraic_dual(L, X)
    checks = {
        "footprint": X.footprint().to_text() == ["1", "t1", "t1^2", "t1^3"],
        "dual_C2": dual_code(reed_muller(X, 2)) == code(X, [[2, 2, 2, 1]]),
        "algebraic_dual": texts(A.basis) == ["t1^3-t1^2-2*t1"],
        "ev_algebraic_dual": X.evaluate(A.basis[0]) == [F7.element(c) for c in (-2, -2, -2, -1)],
        "indicators_projective": all_projective(X, list(indicator_functions(X)), [
            "t1^3+2*t1^2-2*t1+3", "t1^3-3*t1^2+t1+1", "t1^3-2*t1^2+2*t1-1", "t1^3-t1^2-2*t1+2"]),
        "v_numbers": v_numbers(X) == ([3, 3, 3, 3], 3),
        "criterion_holds": duality_criterion(X)["holds"],
    }
    verdict(4, checks, capsys)


def test_criterion_5(capsys):
    X = PointSet(F3, PLANE5)
    L = polys(X, ["1", "t1", "t2"])
    prof = hilbert_profile(X)
    C = evaluate_space(L, X)
    checks = {
        "groebner_basis": texts(X.groebner()) == ["t1^2-t1", "t2^3-t2", "t1*t2^2-t1*t2"],
        "algebraic_dual": same_space(algebraic_dual(L, X).basis, polys(X, ["t1*t2-t1+t2", "t1-1"]), X.footprint(), F3),
        "code_is_C1": C == reed_muller(X, 1),
        "dual_code_rows": dual_code(C) == code(X, [[1, 0, 1, 0, 1], [0, 1, -1, -1, 1]]),
        "distances": (min_distance(C), min_distance(dual_code(C))) == (2, 3),
        "v_numbers": v_numbers(X) == ([2] * 5, 2),
        "hilbert": (prof.r0, prof.H(1), prof.H(2)) == (2, 3, 5),
        "complement_fails": prof.H(1) + prof.H(0) == 4 < len(X) and not duality_criterion(X)["holds"],
        "indicators_projective": all_projective(X, list(indicator_functions(X)), [
            "t1*t2-t2^2-t1+1", "t1*t2-t1", "t1*t2+t2^2+t2", "t1*t2", "t2^2-t2"]),
    }
    verdict(5, checks, capsys)


def test_criterion_6(capsys):
    spec = CartesianSpec.torus(F7, (3, 2))
    X = cartesian_pointset(spec)
    D = X.footprint()
    A = [mono(X, t) for t in ("1", "t1", "t2", "t1*t2")]
    dual = torus_monomial_dual(A, spec)
    L = monomial_space(A, F7)
    checks = {
        "groebner_basis": texts(X.groebner()) == ["t2^2-1", "t1^3-1"],
        "footprint": set(D) == {mono(X, t) for t in ("1", "t1", "t2", "t1^2", "t1*t2", "t1^2*t2")},
        "r0": spec.r0 == 3,
        "monomial_dual": set(dual) == {mono(X, "t1"), mono(X, "t1*t2")},
        "distances": (min_distance(evaluate_space(L, X)), min_distance(dual_code(evaluate_space(L, X)))) == (2, 3),
        "closed_form_matches_generic": same_space(algebraic_dual(L, X).basis, monomial_space(dual, F7), D, F7),
        "ev_of_dual_is_dual_code": evaluate_space(monomial_space(dual, F7), X) == dual_code(evaluate_space(L, X)),
    }
    verdict(6, checks, capsys)


def test_criterion_7(capsys):
    spec = CartesianSpec.affine(F4, (3, 3))
    X = cartesian_pointset(spec)
    m = lambda ts: [mono(X, t) for t in ts]
    A = m(["1", "t1", "t2", "t2^2", "t2^3", "t1*t2^2"])
    ext1 = A + m(["t1^3*t2^3", "t1^3"])
    ext2 = ext1 + m(["t1^2*t2^3", "t1^2"])
    dual = affine_monomial_dual(A, spec)
    expected = m(["1", "t1", "t2", "t2^2", "t1*t2", "t1^2", "t2^3", "t1*t2^2", "t1*t2^3", "t1^2*t2^2"])
    L = monomial_space(A, F4)
    checks = {
        "points": len(X) == 16 and len(set(X)) == 16,
        "footprint": len(X.footprint()) == 16 and spec.r0 == 6,
        "weakly_divisor_closed": all(weakly_divisor_closed(S, spec) for S in (A, ext1, ext2)),
        "monomial_dual": dual is not None and len(dual) == 10 and set(dual) == set(expected),
        "ev_of_dual_is_dual_code": evaluate_space(monomial_space(dual, F4), X) == dual_code(evaluate_space(L, X)),
        "distance": min_distance(evaluate_space(L, X)) == 4,
    }
    verdict(7, checks, capsys)


def random_points(rng, F, s, m):
    space = list(itertools.product(range(F.q), repeat=s))
    return PointSet(F, rng.sample(space, m), encoded=True)


def random_poly(rng, X, terms=4, maxexp=2):
    F = X.field
    out = {}
    for _ in range(rng.randint(0, terms)):
        out[tuple(rng.randint(0, maxexp) for _ in range(X.nvars))] = rng.randrange(F.q)
    return Polynomial(F, X.nvars, {k: v for k, v in out.items() if v})


def random_instances(seed, count, mmax=9):
    rng = random.Random(seed)
    for _ in range(count):
        F = rng.choice([F2, F3, F4])
        s = rng.randint(1, 3)
        m = rng.randint(2, min(mmax, F.q ** s))
        X = random_points(rng, F, s, m)
        L = [random_poly(rng, X) for _ in range(rng.randint(0, len(X)))]
        yield rng, X, L


def generic_duality_holds():
    for _, X, L in random_instances(1, 60):
        F, D = X.field, X.footprint()
        A = algebraic_dual(L, X)
        std = standard_function_space(L, X)
        C = evaluate_space(L, X)
        if len(std) + A.dim != len(X) or A.code() != dual_code(C) or not double_dual_check(L, X):
            return False
        # trivial intersection, full sum, self-duality of code and of space
        a, b = canonical_space(std, D, F), canonical_space(A.basis, D, F)
        total = rank(a + b, F) if a or b else 0
        meet_trivial = total == len(a) + len(b)
        if meet_trivial != (total == len(X)):
            return False
        if (C == dual_code(C)) != (a == b):
            return False
    return True


def v_number_is_reg_delta():
    for _, X, _ in random_instances(2, 40):
        if reg_delta(X) != reg_delta(X, mode="brute-force"):
            return False
    return True


def monomial_dual_biconditional():
    spec = CartesianSpec.affine(F2, (1, 1))
    X = cartesian_pointset(spec)
    mons = list(X.footprint())
    for r in range(len(mons) + 1):
        for A in itertools.combinations(mons, r):
            monomial, _ = is_dual_monomial(monomial_space(A, F2), X)
            if weakly_divisor_closed(A, spec) != monomial:
                return False
            closed = affine_monomial_dual(A, spec)
            if monomial != (closed is not None):
                return False
            if closed is not None and not same_space(
                    algebraic_dual(monomial_space(A, F2), X).basis, monomial_space(closed, F2), X.footprint(), F2):
                return False
    return True


def rm_exact_duality():
    for spec in (CartesianSpec.affine(F2, (1, 1)), CartesianSpec.affine(F4, (3,))):
        X = cartesian_pointset(spec)
        for d in range(-1, spec.r0 + 1):
            if dual_code(reed_muller(X, d)) != reed_muller(X, spec.r0 - d - 1):
                return False
            if evaluate_space(monomial_space(affine_rm_dual(d, spec), X.field), X) != dual_code(reed_muller(X, d)):
                return False
    return True


def self_dual_constructions():
    for F, orders in ((F2, (1,)), (F2, (1, 1, 1)), (F4, (3,))):
        C = self_dual_code(cartesian_pointset(CartesianSpec.affine(F, orders)))
        if C != dual_code(C) or 2 * C.k != C.length:
            return False
    return True


def cartesian_distances():
    specs = [CartesianSpec.torus(F7, (3, 2)), CartesianSpec.affine(F3, (2, 2)),
             CartesianSpec(F7, (2, 2), (True, False)), CartesianSpec.affine(F4, (3,))]
    for spec in specs:
        X = cartesian_pointset(spec)
        r0 = spec.r0
        if min_distance(reed_muller(X, r0 - 1)) != 2:
            return False
        if any(min_distance(reed_muller(X, d)) < r0 - d + 1 for d in range(1, r0)):
            return False
    return True


def test_criterion_8(capsys):
    checks = {
        "dimension_double_dual_null_space_complementarity": generic_duality_holds(),
        "v_number_equals_brute_force_reg_delta": v_number_is_reg_delta(),
        "monomial_dual_iff_weakly_divisor_closed_gf2_squared": monomial_dual_biconditional(),
        "affine_rm_exact_duality": rm_exact_duality(),
        "self_dual_codes": self_dual_constructions(),
        "cartesian_distance_bounds": cartesian_distances(),
    }
    verdict(8, checks, capsys)


def bm_matches_buchberger():
    rng = random.Random(3)
    for _ in range(40):
        F = rng.choice([F2, F3, F4, F7])
        s = rng.randint(1, 3)
        m = rng.randint(1, min(8, F.q ** s))
        pts = rng.sample(list(itertools.product(range(F.q), repeat=s)), m)
        order = rng.choice(["grevlex", "grlex"])
        G, _ = vanishing_ideal(pts, F, order)
        if G != vanishing_ideal_buchberger(pts, F, order):
            return False
    return True


def basis_algorithm_rank():
    rng = random.Random(4)
    X = PointSet(F3, [(0, 0, 0)])
    for _ in range(60):
        A = [random_poly(rng, X, terms=4, maxexp=3) for _ in range(rng.randint(0, 7))]
        if len(basis_algorithm(A)) != span_rank(A, F3):
            return False
    return True


def indicator_degrees_minimal():
    for _, X, _ in random_instances(5, 25, mmax=6):
        ind = indicator_functions(X)
        for i, f in enumerate(ind):
            if f.total_degree() != min_indicator_degree(X, i):
                return False
    return True


def test_criterion_9(capsys):
    checks = {
        "buchberger_moller_equals_buchberger": bm_matches_buchberger(),
        "basis_algorithm_cardinality_is_rank": basis_algorithm_rank(),
        "indicator_degree_is_minimal": indicator_degrees_minimal(),
    }
    verdict(9, checks, capsys)
