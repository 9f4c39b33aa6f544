import itertools
import random
from fractions import Fraction

from quartic15 import nodal_surface as ns
from quartic15.configs import s6_elements
from quartic15.nodal_surface import (
    E,
    L_SET,
    DivisorClass,
    b_tilde,
    class_invariants,
    discriminant_comparison,
    even_set_code,
    eta_star,
    is_pic_integral,
    kummer_add,
    kummer_embedding_check,
    kummer_model,
    kummer_node_trope_pairings,
    picard_lattice,
    sigma_class,
    standard_classes,
    verify_class_identities,
    word_of_nodes,
)


def test_code_dimension_and_enumerator():
    code = even_set_code()
    assert code.dimension == 5
    assert code.node_weight_enumerator() == {0: 1, 6: 10, 8: 15, 10: 6}


def test_code_generator_sigma12():
    # sigma(E_12) is half of eta minus the six nodes 12,34,35,45,16,26
    word = sigma_class((1, 2)).mod2_word()
    expected = word_of_nodes([(1, 2), (3, 4), (3, 5), (4, 5), (1, 6), (2, 6)], eta_bit=True)
    assert word == expected


def test_weight6_words_are_trope_sets():
    from quartic15.configs import trope_node_sets

    code = even_set_code()
    weight6 = {w for w in code.words if bin(w >> 1).count("1") == 6}
    assert len(weight6) == 10
    assert all(w & 1 for w in weight6)  # eta marker set
    expected = {
        word_of_nodes(sorted(nodes), eta_bit=True) for nodes in trope_node_sets().values()
    }
    assert weight6 == expected


def test_weight8_words_lack_eta_marker():
    code = even_set_code()
    weight8 = {w for w in code.words if bin(w >> 1).count("1") == 8}
    assert len(weight8) == 15
    assert all(not (w & 1) for w in weight8)


def test_weight10_words_are_l_sets():
    # one weight-10 word per total: the complement of a five-star
    code = even_set_code()
    weight10 = {w for w in code.words if bin(w >> 1).count("1") == 10}
    assert word_of_nodes(L_SET, eta_bit=True) in weight10
    assert len(weight10) == 6


def test_code_words_orbit_structure():
    # S6 orbit/stabilizer bookkeeping for the three nontrivial weights
    from quartic15.configs import s6_orbits
    from quartic15.nodal_surface import nodes_of_word

    code = even_set_code()

    def act(g, w):
        nodes = nodes_of_word(w)
        imgs = [tuple(sorted((g[a - 1], g[b - 1]))) for a, b in nodes]
        return word_of_nodes(imgs, eta_bit=bool(w & 1))

    for weight, orbit_size, stab in ((6, 10, 72), (8, 15, 48), (10, 6, 120)):
        words = sorted(w for w in code.words if bin(w >> 1).count("1") == weight)
        orbits = s6_orbits(act, words)
        assert len(orbits) == 1
        assert orbits[0].size == orbit_size and orbits[0].stabilizer_order == stab


def test_pic_membership_words_and_nonwords():
    code = even_set_code()
    model = picard_lattice()
    rng = random.Random(13)
    # all 32 words give Pic-integral half-classes, confirmed against the
    # overlattice itself (code membership <=> coordinates in the lattice)
    for w in code.words:
        coords = [Fraction(1, 2) if w & (1 << i) else Fraction(0) for i in range(16)]
        cls = DivisorClass(tuple(coords))
        assert is_pic_integral(cls)
        assert model.in_lattice(cls) is not None
    # 100 random non-words do not
    nonwords = 0
    while nonwords < 100:
        w = rng.getrandbits(16)
        if w in code.words:
            continue
        nonwords += 1
        coords = [Fraction(1, 2) if w & (1 << i) else Fraction(0) for i in range(16)]
        cls = DivisorClass(tuple(coords))
        assert not is_pic_integral(cls)
        if nonwords <= 10:
            assert model.in_lattice(cls) is None


def test_named_class_norm_table():
    # every named class norm re-derived from the pairing, none cached
    classes = standard_classes()
    expected = {"eta": 4, "eta_star": 4, "B_tilde": 10, "map10": 10, "deg20": 20,
                "deg10_rey": 10, "reye_root": -4, "goepel_root": -4}
    for name, cls in classes.items():
        if name.startswith("E") or name.startswith("sigma_E"):
            assert cls.norm() == -2, name
        elif name.startswith("F"):
            assert cls.norm() == 0, name
        else:
            assert cls.norm() == expected[name], name


def test_picard_lattice_rank_det_index():
    model = picard_lattice()
    assert model.lattice.rank == 16
    assert abs(model.lattice.det()) == 128
    assert model.index == 32  # code dimension 5
    assert model.lattice.is_even()
    assert model.lattice.signature() == (1, 15)


def test_degree_even_on_pic():
    # the degree functional is even on the whole Picard lattice
    model = picard_lattice()
    for row in model.basis:
        deg = 4 * row[0]
        assert deg.denominator == 1 and int(deg) % 2 == 0


def test_class_invariants_examples():
    norm, degree, member = class_invariants(b_tilde())
    assert (norm, degree, member) == (10, 10, True)
    norm, degree, member = class_invariants(standard_classes()["deg20"])
    assert norm == 20 and member
    norm, degree, member = class_invariants(sigma_class((1, 2)))
    assert (norm, degree, member) == (-2, 2, True)
    norm, degree, member = class_invariants(E[(1, 2)])
    assert (norm, degree, member) == (-2, 0, True)
    norm, degree, member = class_invariants(sigma_class((1, 6)))
    assert (norm, degree, member) == (-2, 4, True)


def test_class_identities():
    results = verify_class_identities()
    assert all(results.values()), results


def test_f_class_pairings():
    classes = standard_classes()
    # ten conic-type pencils: F_x = eta_star - E_x
    for x in L_SET:
        f = classes[f"F{x[0]}{x[1]}"]
        assert f.norm() == 0 and f.degree() == 6
    for x, y in itertools.combinations(L_SET, 2):
        assert classes[f"F{x[0]}{x[1]}"].dot(classes[f"F{y[0]}{y[1]}"]) == 2
    # five quartic-type pencils
    for a in range(1, 6):
        f = classes[f"F{a}6"]
        assert f.norm() == 0 and f.degree() == 8 and is_pic_integral(f)
    for a, b in itertools.combinations(range(1, 6), 2):
        assert classes[f"F{a}6"].dot(classes[f"F{b}6"]) == 2


def test_sigma_classes_s6_equivariant():
    # the ten conic classes are a single S6 orbit of divisor classes
    conics = {sigma_class(x) for x in L_SET}
    for g in s6_elements()[:60]:
        assert {c.permuted(g) for c in conics} == conics


def test_discriminant_comparison():
    comp = discriminant_comparison()
    assert comp.groups_match
    assert list(comp.pic_invariants.invariant_factors) == [2, 2, 2, 2, 2, 4]
    assert comp.pic_invariants.order == 128
    # q(Pic) = -q(transcendental); the direct match must fail
    assert comp.q_match_negated and not comp.q_match_direct
    # the classically quoted generator list carries typos: exactly the
    # first, fifth and sixth vectors are dual as transcribed
    assert comp.classical_generator_duality == (True, False, False, False, True, True)
    assert comp.weight4_duals_are_four_cycles
    assert comp.snf_generators_generate


def test_kummer_group_structure():
    assert len(ns.KUMMER_GROUP) == 16
    assert kummer_add((1, 2), (1, 6)) == (2, 6)
    assert kummer_add((1, 2), (3, 6)) == (4, 5)  # complement of {1,2,3,6}
    assert kummer_add((1, 2), (1, 2)) == ()


def test_kummer_model_basics():
    model = kummer_model()
    assert model.lattice.rank == 17
    assert model.index == 64  # the 16-node even-set code has dimension 6
    assert abs(model.lattice.det()) == 64
    assert kummer_node_trope_pairings()
    for beta, t in model.tropes.items():
        assert sum(1 for x in t[1:] if x) == 6


def test_kummer_embedding():
    cert = kummer_embedding_check()
    assert cert.pairings_preserved
    assert cert.image_in_lattice
    assert cert.image_orthogonal_to_n0
    assert cert.image_equals_complement
    assert cert.gram_match


def test_class_table_json():
    table = ns.class_table_jsonable()
    assert table["B_tilde"]["norm"] == "10"
    assert all(v["pic_integral"] for v in table.values())
