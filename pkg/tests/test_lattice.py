import random
from fractions import Fraction

import pytest

from quartic15.lattice import (
    IntegerLattice,
    det_bareiss,
    direct_sum,
    discriminant_group,
    discriminant_q_multiset,
    hermite_normal_form,
    mat_identity,
    mat_mul,
    named_lattice,
    orthogonal_complement,
    overlattice,
    reflection_isometry,
    smith_normal_form,
    vector_in_lattice,
    verify_isometry,
)


def test_named_lattices():
    assert named_lattice("U").gram == ((0, 1), (1, 0))
    assert named_lattice("U(2)").gram == ((0, 2), (2, 0))
    assert named_lattice("A1").gram == ((-2,),)
    assert named_lattice("A1(2)").gram == ((-4,),)
    assert named_lattice("A1(-1)").gram == ((2,),)
    e8 = named_lattice("E8")
    assert e8.rank == 8 and e8.det() == 1 and e8.signature() == (0, 8)
    assert named_lattice("diag(4,-2)").gram == ((4, 0), (0, -2))
    with pytest.raises(ValueError):
        named_lattice("E7")


def test_direct_sum_det():
    l = direct_sum(
        named_lattice("U(2)"), named_lattice("U(2)"), named_lattice("A1(2)"), named_lattice("A1")
    )
    assert l.rank == 6
    assert l.det() == (-4) * (-4) * (-4) * (-2)
    assert l.signature() == (2, 4)


def test_signature():
    assert named_lattice("U").signature() == (1, 1)
    assert IntegerLattice(((4,),)).signature() == (1, 0)
    assert IntegerLattice(((0, 0), (0, 0))).signature() == (0, 0)


def test_smith_normal_form_basic():
    d, u, v = smith_normal_form(mat_identity(3))
    assert d == mat_identity(3)
    d, u, v = smith_normal_form([[2, 0], [0, 4]])
    assert [d[0][0], d[1][1]] == [2, 4]
    d, u, v = smith_normal_form([[4, 0], [0, 2]])
    assert [d[0][0], d[1][1]] == [2, 4]


def test_smith_normal_form_random():
    rng = random.Random(6)
    for _ in range(30):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        d, u, v = smith_normal_form(m)
        assert mat_mul(mat_mul(u, m), v) == d
        diag = [d[i][i] for i in range(min(rows, cols))]
        for i in range(len(diag) - 1):
            if diag[i]:
                assert diag[i + 1] % diag[i] == 0
            else:
                assert diag[i + 1] == 0
        assert abs(det_bareiss(u)) == 1
        assert abs(det_bareiss(v)) == 1
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert d[i][j] == 0


def test_hermite_normal_form_random():
    rng = random.Random(8)
    for _ in range(30):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        h, u = hermite_normal_form(m)
        assert mat_mul(u, m) == h
        assert abs(det_bareiss(u)) == 1
        # echelon with positive pivots, reduced above
        last = -1
        for row in h:
            nz = [j for j, x in enumerate(row) if x]
            if not nz:
                continue
            assert nz[0] > last
            last = nz[0]
            assert row[nz[0]] > 0


def test_discriminant_group_small():
    assert discriminant_group(named_lattice("U")).invariant_factors == ()
    a1 = discriminant_group(named_lattice("A1"))
    assert a1.invariant_factors == (2,)
    assert a1.q_values == (Fraction(3, 2),)  # -1/2 mod 2Z
    four = discriminant_group(named_lattice("diag(4)"))
    assert four.invariant_factors == (4,)
    assert four.q_values == (Fraction(1, 4),)


def test_discriminant_group_item47_lattice():
    l = direct_sum(
        named_lattice("U(2)"), named_lattice("U(2)"), named_lattice("A1(2)"), named_lattice("A1")
    )
    inv = discriminant_group(l)
    assert inv.order == 128
    assert list(inv.invariant_factors) == [2, 2, 2, 2, 2, 4]


def test_discriminant_of_direct_sum_merges():
    a = named_lattice("A1")
    b = named_lattice("diag(4)")
    ab = discriminant_group(direct_sum(a, b))
    assert sorted(ab.invariant_factors) == [2, 4]
    # q-multiset of a sum is the convolution of the summands'
    qa = discriminant_q_multiset(a)
    qb = discriminant_q_multiset(b)
    conv = {}
    for x, cx in qa.items():
        for y, cy in qb.items():
            key = (x + y) % 2
            conv[key] = conv.get(key, 0) + cx * cy
    assert conv == discriminant_q_multiset(direct_sum(a, b))


def test_overlattice_rejects_odd_norm():
    l = direct_sum(named_lattice("A1"), named_lattice("A1"))
    with pytest.raises(ValueError, match="non-even norm"):
        overlattice(l, [[Fraction(1, 2), Fraction(1, 2)]])


def test_overlattice_valid_rank7():
    l = direct_sum(named_lattice("diag(4)"), *[named_lattice("A1")] * 6)
    glue = [Fraction(1, 2)] * 7
    res = overlattice(l, [glue])
    assert res.lattice.rank == 7
    assert res.index == 2
    assert abs(l.det()) == res.index**2 * abs(res.lattice.det())
    assert res.lattice.is_even()
    assert vector_in_lattice(res.basis, glue) is not None
    assert vector_in_lattice(res.basis, [Fraction(1, 2)] + [0] * 6) is None


def test_overlattice_index_det_relation_random():
    rng = random.Random(4)
    for _ in range(5):
        l = direct_sum(*[named_lattice("A1")] * 4, named_lattice("diag(4)"))
        # glue: half sum of an even-norm subset
        glue = [Fraction(1, 2)] * 4 + [Fraction(0)]
        res = overlattice(l, [glue])
        assert abs(l.det()) == res.index**2 * abs(res.lattice.det())


def test_orthogonal_complement():
    u = named_lattice("U")
    comp, basis = orthogonal_complement(u, [[1, 0]])
    assert comp.rank == 1
    assert comp.gram == ((0,),)  # (0,1)·(0,1) = 0... complement of isotropic e is Z e
    assert basis == [[1, 0]] or basis == [[-1, 0]]
    full, _ = orthogonal_complement(u, [])
    assert full.rank == 2
    zero, b = orthogonal_complement(u, [[1, 0], [0, 1]])
    assert zero.rank == 0 and b == []


def test_orthogonal_complement_primitive():
    # complement inside diag(2,2) of (1,1) is generated by (1,-1), not (2,-2)
    l = named_lattice("diag(2,2)")
    comp, basis = orthogonal_complement(l, [[1, 1]])
    assert comp.rank == 1
    assert abs(basis[0][0]) == 1 and basis[0][0] == -basis[0][1]
    assert comp.gram == ((4,),)


def test_reflection_a1():
    a1 = named_lattice("A1")
    m = reflection_isometry(a1, [1])
    assert m == [[-1]]
    cert = verify_isometry(a1, m)
    assert cert.gram_preserved and cert.order == 2


def test_reflection_fixes_mirror_and_involutive():
    l = direct_sum(named_lattice("A1"), named_lattice("A1"))
    m = reflection_isometry(l, [1, 0])
    assert m[1] == [0, 1]  # orthogonal vector fixed
    cert = verify_isometry(l, m)
    assert cert.gram_preserved and cert.order == 2


def test_reflection_norm4_parity_guard():
    with pytest.raises(ValueError, match="norm -2 or -4"):
        reflection_isometry(named_lattice("diag(-4,-2)"), [1, 1])  # norm -6
    # norm -4 vector pairing oddly with a basis vector is rejected by name
    l = IntegerLattice(((-4, 1), (1, -2)))
    with pytest.raises(ValueError, match="basis vector 1"):
        reflection_isometry(l, [1, 0])


def test_reflections_in_orthogonal_vectors_commute():
    l = direct_sum(*[named_lattice("A1")] * 3)
    m1 = reflection_isometry(l, [1, 0, 0])
    m2 = reflection_isometry(l, [0, 1, 0])
    assert mat_mul(m1, m2) == mat_mul(m2, m1)


def test_verify_isometry_reports_higher_order():
    u = named_lattice("U")
    swap = [[0, 1], [1, 0]]
    cert = verify_isometry(u, swap)
    assert cert.gram_preserved and cert.order == 2
    not_iso = [[1, 1], [0, 1]]
    assert not verify_isometry(u, not_iso).gram_preserved
