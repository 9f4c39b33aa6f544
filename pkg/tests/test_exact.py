import random
from fractions import Fraction

import pytest

from quartic15.exact import (
    LinearMap,
    MultiPoly,
    nullspace,
    perfect_square_factor,
    primitive_integer_vector,
    rank_fraction_free,
    rank_rational,
    rref,
    solve_linear,
)


def poly_sum_cubes(n=6):
    return sum(
        (MultiPoly.variable(n, i) ** 3 for i in range(n)), MultiPoly.zero(n)
    )


def cr_form():
    n = 6
    u = [MultiPoly.variable(n, i) for i in range(n)]
    s4 = sum((ui**4 for ui in u), MultiPoly.zero(n))
    s2 = sum((ui**2 for ui in u), MultiPoly.zero(n))
    return s4 * 4 - s2 * s2


def random_poly(rng, nvars=3, nterms=4, deg=3):
    terms = {}
    for _ in range(nterms):
        exp = tuple(rng.randint(0, deg) for _ in range(nvars))
        terms[exp] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return MultiPoly(nvars, terms)


def test_evaluate_reference_points():
    f = poly_sum_cubes()
    assert f.evaluate([1, 1, 1, -1, -1, -1]) == 0
    assert f.evaluate([1, -1, 0, 0, 0, 0]) == 0
    assert cr_form().evaluate([2, 2, -1, -1, -1, -1]) == 0


def test_evaluate_dimension_mismatch():
    with pytest.raises(ValueError):
        poly_sum_cubes().evaluate([1, 2, 3])


def test_gradient():
    f = MultiPoly(2, {(2, 1): Fraction(1)})  # x^2 y
    gx, gy = f.gradient()
    assert gx == MultiPoly(2, {(1, 1): Fraction(2)})
    assert gy == MultiPoly(2, {(2, 0): Fraction(1)})
    g = poly_sum_cubes().gradient()
    for i, gi in enumerate(g):
        exp = [0] * 6
        exp[i] = 2
        assert gi == MultiPoly(6, {tuple(exp): Fraction(3)})


def test_hessian_at():
    f = poly_sum_cubes()
    h = f.hessian_at([1, 1, 1, -1, -1, -1])
    for i in range(6):
        for j in range(6):
            expected = (6 if i < 3 else -6) if i == j else 0
            assert h[i][j] == expected
    g = MultiPoly(2, {(2, 0): Fraction(1), (0, 2): Fraction(1)})
    assert g.hessian_at([5, -7]) == [[2, 0], [0, 2]]


def test_substitute_identity_and_degree():
    f = MultiPoly.variable(2, 0) + MultiPoly.variable(2, 1)
    assert f.substitute_linear(LinearMap.identity(2)) == f
    rng = random.Random(1)
    quartic = cr_form()
    m = LinearMap([[rng.randint(-3, 3) for _ in range(3)] for _ in range(6)])
    g = quartic.substitute_linear(m)
    assert not g or (g.is_homogeneous() and g.total_degree() == 4)


def test_substitute_functorial():
    rng = random.Random(7)
    for _ in range(10):
        f = random_poly(rng, nvars=3)
        m = LinearMap([[rng.randint(-2, 2) for _ in range(2)] for _ in range(3)])
        n = LinearMap([[rng.randint(-2, 2) for _ in range(4)] for _ in range(2)])
        assert f.substitute_linear(m.compose(n)) == f.substitute_linear(m).substitute_linear(n)


def test_ring_axioms_randomized():
    rng = random.Random(42)
    for _ in range(20):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_taylor_expansion_matches_symbolic():
    # f(p + t v) as a univariate polynomial: degree-1 coefficient is grad·v
    rng = random.Random(21)
    for _ in range(10):
        f = random_poly(rng, nvars=3)
        p = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        v = [Fraction(rng.randint(-3, 3)) for _ in range(3)]
        # substitution matrix: row i = (p_i, v_i) for variables (s, t), then s=1
        line = f.substitute_linear([[p[i], v[i]] for i in range(3)])
        # collect the coefficient of s^(d-1) t^1 summed over degrees: evaluate
        # at s=1 symbolically by summing coefficients with matching t-power
        coeff_t1 = sum(
            (c for (es, et), c in line.terms.items() if et == 1), Fraction(0)
        )
        grad_dot_v = sum(f.partial(i).evaluate(p) * v[i] for i in range(3))
        assert coeff_t1 == grad_dot_v
        coeff_t0 = sum(
            (c for (es, et), c in line.terms.items() if et == 0), Fraction(0)
        )
        assert coeff_t0 == f.evaluate(p)


def test_euler_identity():
    # homogeneous f of degree d: sum_i z_i df/dz_i = d f, exactly
    rng = random.Random(3)
    for d in (2, 3, 4):
        terms = {}
        for _ in range(5):
            e = [0, 0, 0]
            for _ in range(d):
                e[rng.randint(0, 2)] += 1
            terms[tuple(e)] = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
        f = MultiPoly(3, terms)
        p = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
        lhs = sum(p[i] * f.partial(i).evaluate(p) for i in range(3))
        assert lhs == d * f.evaluate(p)


def test_mod_p():
    x = MultiPoly.variable(1, 0)
    f = x * x * Fraction(1, 2)
    assert f.mod_p(3).terms == {(2,): 2}
    assert x.mod_p(2).terms == {(1,): 1}
    with pytest.raises(ValueError):
        f.mod_p(2)


def test_mod_p_evaluate_matches_rational():
    rng = random.Random(11)
    f = random_poly(rng, nvars=3, nterms=6)
    fp = f.mod_p(13)
    for _ in range(10):
        pt = [rng.randint(0, 12) for _ in range(3)]
        exact = f.evaluate(pt)
        assert fp.evaluate(pt) == (exact.numerator * pow(exact.denominator, -1, 13)) % 13


def test_perfect_square_trivial_cases():
    x = MultiPoly.variable(2, 0)
    y = MultiPoly.variable(2, 1)
    f = (x + y) * (x + y)
    c, q = perfect_square_factor(f)
    assert c == 1 and q == x + y
    assert perfect_square_factor(x * x + y * y) is None
    c, q = perfect_square_factor((x * 2 + y * 3) ** 2)
    assert c == 4 and q == x + y * Fraction(3, 2)
    assert c * q * q == (x * 2 + y * 3) ** 2


def test_perfect_square_random_roundtrip():
    rng = random.Random(5)
    for _ in range(15):
        terms = {}
        for _ in range(4):
            e = [0, 0, 0]
            for _ in range(2):
                e[rng.randint(0, 2)] += 1
            terms[tuple(e)] = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        q0 = MultiPoly(3, terms)
        if not q0:
            continue
        scale = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        f = q0 * q0 * scale
        got = perfect_square_factor(f)
        assert got is not None
        c, q = got
        assert c * q * q == f
        # evaluation cross-check at 10 points
        for _ in range(10):
            pt = [rng.randint(-5, 5) for _ in range(3)]
            assert f.evaluate(pt) == c * q.evaluate(pt) ** 2


def test_perfect_square_requires_even_homogeneous():
    x = MultiPoly.variable(2, 0)
    with pytest.raises(ValueError):
        perfect_square_factor(x ** 3)
    with pytest.raises(ValueError):
        perfect_square_factor(x * x + x)


def test_permute_variables():
    f = cr_form()
    assert f.permute_variables([1, 0, 2, 3, 4, 5]) == f
    g = MultiPoly(3, {(2, 1, 0): Fraction(1)})
    assert g.permute_variables([2, 0, 1]) == MultiPoly(3, {(1, 0, 2): Fraction(1)})


def test_json_roundtrip_and_order():
    f = cr_form()
    data = f.to_jsonable()
    assert MultiPoly.from_jsonable(data) == f
    degrees = [sum(t["exp"]) for t in data["terms"]]
    assert degrees == sorted(degrees, reverse=True)
    exps = [tuple(t["exp"]) for t in data["terms"]]
    assert exps == sorted(exps, key=lambda e: (sum(e), e), reverse=True)


def test_linear_map_compose_apply():
    m = LinearMap([[1, 2], [3, 4]])
    n = LinearMap([[0, 1], [1, 0]])
    assert m.compose(n) == LinearMap([[2, 1], [4, 3]])
    assert m.apply([1, 1]) == [3, 7]


def test_rref_nullspace_solve():
    m = [[1, 2, 3], [2, 4, 6], [1, 1, 1]]
    assert rank_rational(m) == 2
    assert rank_fraction_free(m) == 2
    ns = nullspace(m)
    assert len(ns) == 1
    v = ns[0]
    for row in m:
        assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
    x = solve_linear([[1, 1], [1, -1]], [2, 0])
    assert x == [1, 1]
    assert solve_linear([[1, 1], [1, 1]], [0, 1]) is None


def test_rank_two_paths_agree_random():
    rng = random.Random(9)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(cols)]
            for _ in range(rows)
        ]
        assert rank_rational(m) == rank_fraction_free(m)


def test_primitive_integer_vector():
    assert primitive_integer_vector([Fraction(1), Fraction(1, 2)]) == [2, 1]
    assert primitive_integer_vector([Fraction(-2), Fraction(4)]) == [1, -2]
    assert primitive_integer_vector([0, Fraction(-3, 7)]) == [0, 1]
