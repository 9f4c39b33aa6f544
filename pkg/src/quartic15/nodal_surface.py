"""Arithmetic model of the minimal resolution of a general 15-nodal quartic.

The Picard lattice is realized as an overlattice of <4> + A1^15 glued by the
binary even-set code: basis eta (the hyperplane class, eta^2 = 4) and one
exceptional class E_x of norm -2 per node x, nodes indexed by the duads of
{1,...,6}.  The splitting fixed once here is L = duads avoiding 6 (the ten
conic-type nodes) and C = duads containing 6 (the five quartic-type nodes);
every other splitting is an S6 translate.

Also builds the rank-17 lattice of a 16-nodal (Kummer) quartic and certifies
the embedding of the 15-nodal Picard lattice onto the orthogonal complement
of the sixteenth exceptional class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .configs import Duad, duads, trope_node_sets
from .lattice import (
    FiniteAbelianInvariants,
    IntegerLattice,
    direct_sum,
    discriminant_group,
    discriminant_q_multiset,
    named_lattice,
    orthogonal_complement,
    overlattice,
    vector_in_lattice,
)

NODES: tuple[Duad, ...] = tuple(duads())  # 15 node labels, sorted
NODE_INDEX = {d: i for i, d in enumerate(NODES)}
L_SET: tuple[Duad, ...] = tuple(d for d in NODES if 6 not in d)
C_SET: tuple[Duad, ...] = tuple(d for d in NODES if 6 in d)
RANK = 16  # eta plus 15 exceptional classes

BASIS_LABELS = ("eta",) + tuple(f"E{a}{b}" for a, b in NODES)


def ambient_lattice() -> IntegerLattice:
    """<4> + A1^15 on the basis (eta, E_x)."""
    return direct_sum(named_lattice("diag(4)"), *[named_lattice("A1")] * 15)


@dataclass(frozen=True)
class DivisorClass:
    """Divisor class in coordinates over (eta, E_x).

    Classes of the model have half-integer entries; intermediate rational
    combinations are allowed and simply fail the membership test.
    """

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != RANK:
            raise ValueError("divisor class needs 16 coordinates")

    @classmethod
    def make(cls, eta=0, nodes: Mapping[Duad, object] | None = None) -> "DivisorClass":
        coords = [Fraction(eta)] + [Fraction(0)] * 15
        for d, c in (nodes or {}).items():
            coords[1 + NODE_INDEX[d]] = Fraction(c)
        return cls(tuple(coords))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, c) -> "DivisorClass":
        return DivisorClass(tuple(Fraction(c) * x for x in self.coords))

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def dot(self, other: "DivisorClass") -> Fraction:
        # Gram of (eta, E_x) is diag(4, -2, ..., -2)
        return 4 * self.coords[0] * other.coords[0] - 2 * sum(
            a * b for a, b in zip(self.coords[1:], other.coords[1:])
        )

    def norm(self) -> Fraction:
        return self.dot(self)

    def degree(self) -> Fraction:
        return 4 * self.coords[0]

    def mod2_word(self) -> Optional[int]:
        """Fractional-part pattern as a 16-bit word (eta bit = bit 0), or None
        if some coordinate is not a half-integer multiple."""
        word = 0
        for i, c in enumerate(self.coords):
            if c.denominator == 1:
                continue
            if c.denominator == 2:
                word |= 1 << i
            else:
                return None
        return word

    def times2_int(self) -> tuple[int, ...]:
        doubled = [2 * c for c in self.coords]
        if any(x.denominator != 1 for x in doubled):
            raise ValueError("coordinates are not half-integers")
        return tuple(int(x) for x in doubled)

    def permuted(self, g: Sequence[int]) -> "DivisorClass":
        """Relabel nodes by a permutation of {1,...,6} (eta fixed)."""
        coords = [self.coords[0]] + [Fraction(0)] * 15
        for d in NODES:
            img = tuple(sorted((g[d[0] - 1], g[d[1] - 1])))
            coords[1 + NODE_INDEX[img]] = self.coords[1 + NODE_INDEX[d]]
        return DivisorClass(tuple(coords))


ETA = DivisorClass.make(eta=1)
E = {d: DivisorClass.make(nodes={d: 1}) for d in NODES}


def _half(cls: DivisorClass) -> DivisorClass:
    return cls * Fraction(1, 2)


def sigma_class(d: Duad) -> DivisorClass:
    """Image class sigma(E_x): a trope-conic for x in L, a trope-quartic for x in C."""
    if 6 not in d:
        word = trope_node_sets()[d]
        return _half(ETA - sum((E[x] for x in sorted(word)), DivisorClass.make()))
    a = d[0]
    others_c = [x for x in C_SET if x != d]
    arm = [tuple(sorted((a, b))) for b in range(1, 6) if b != a]
    total = 2 * ETA - 2 * E[d]
    for x in others_c:
        total = total - E[x]
    for x in arm:
        total = total - E[x]
    return _half(total)


def eta_star() -> DivisorClass:
    """Hyperplane class of the dual sextic model: 2*eta_star = 3*eta − sum_L E."""
    return _half(3 * ETA - sum((E[x] for x in L_SET), DivisorClass.make()))


def b_tilde() -> DivisorClass:
    """Branch-curve class: half of 5*eta − sum_L E − 2*sum_C E; norm and degree 10."""
    total = 5 * ETA
    for x in L_SET:
        total = total - E[x]
    for x in C_SET:
        total = total - 2 * E[x]
    return _half(total)


# -- even-set code -------------------------------------------------------------


@dataclass(frozen=True)
class EvenSetCode:
    """Binary code of (weakly) even node sets; bit 0 marks the eta coefficient."""

    generators: tuple[int, ...]
    words: frozenset[int]

    @property
    def dimension(self) -> int:
        n = len(self.words)
        return n.bit_length() - 1

    def node_weight_enumerator(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for w in self.words:
            k = bin(w >> 1).count("1")
            counts[k] = counts.get(k, 0) + 1
        return counts

    def __contains__(self, word: int) -> bool:
        return word in self.words


CODE_BASIS_DUADS = ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))


@lru_cache(maxsize=None)
def even_set_code() -> EvenSetCode:
    """Code spanned by the five trope-conic words sigma(E_12), ..., sigma(E_15)."""
    gens = []
    for d in CODE_BASIS_DUADS:
        word = sigma_class(d).mod2_word()
        assert word is not None and word & 1, "trope words carry the eta marker bit"
        gens.append(word)
    words = {0}
    for g in gens:
        words |= {w ^ g for w in words}
    assert len(words) == 32
    return EvenSetCode(tuple(gens), frozenset(words))


def word_of_nodes(nodes: Iterable[Duad], eta_bit: bool = False) -> int:
    w = 1 if eta_bit else 0
    for d in nodes:
        w |= 1 << (1 + NODE_INDEX[d])
    return w


def nodes_of_word(word: int) -> tuple[Duad, ...]:
    return tuple(d for d in NODES if word & (1 << (1 + NODE_INDEX[d])))


def is_pic_integral(cls: DivisorClass) -> bool:
    word = cls.mod2_word()
    return word is not None and word in even_set_code()


def class_invariants(cls: DivisorClass) -> tuple[Fraction, Fraction, bool]:
    """(self-intersection, degree against eta, membership in the Picard lattice)."""
    return cls.norm(), cls.degree(), is_pic_integral(cls)


# -- the Picard lattice ----------------------------------------------------------


@dataclass(frozen=True)
class PicardModel:
    ambient: IntegerLattice  # <4> + A1^15 on (eta, E_x)
    lattice: IntegerLattice  # rank-16 overlattice Gram (integral, even)
    basis: tuple[tuple[Fraction, ...], ...]  # rows: lattice basis in (eta, E_x) coords
    index: int  # = 2**dim(code) / 2 ... index of N in Pic
    code: EvenSetCode
    named: dict[str, DivisorClass]

    def in_lattice(self, cls: DivisorClass) -> Optional[list[int]]:
        return vector_in_lattice(self.basis, cls.coords)


def standard_classes() -> dict[str, DivisorClass]:
    """Every named divisor class used by the checks, certified Pic-integral."""
    classes: dict[str, DivisorClass] = {"eta": ETA, "eta_star": eta_star()}
    for d in NODES:
        classes[f"E{d[0]}{d[1]}"] = E[d]
        classes[f"sigma_E{d[0]}{d[1]}"] = sigma_class(d)
    classes["B_tilde"] = b_tilde()
    classes["reye_root"] = 2 * ETA - sum((E[x] for x in L_SET), DivisorClass.make())
    classes["goepel_root"] = 3 * ETA - sum((2 * E[x] for x in C_SET), DivisorClass.make())
    for x in L_SET:
        classes[f"F{x[0]}{x[1]}"] = eta_star() - E[x]
    for a in range(1, 6):
        # elliptic pencil through the quartic-type node (a,6)
        total = 2 * ETA
        for b in range(1, 6):
            if b != a:
                total = total - _half(E[tuple(sorted((b, 6)))]) - _half(E[tuple(sorted((a, b)))])
        for c, d in itertools.combinations([x for x in range(1, 6) if x != a], 2):
            total = total - E[(c, d)]
        classes[f"F{a}6"] = total
    classes["map10"] = ETA + eta_star() - sum((E[x] for x in C_SET), DivisorClass.make())
    classes["deg20"] = 4 * eta_star() - ETA
    classes["deg10_rey"] = (
        5 * ETA
        - sum((E[x] for x in C_SET), DivisorClass.make())
        - sum((2 * E[x] for x in L_SET), DivisorClass.make())
    )
    return classes


@lru_cache(maxsize=None)
def picard_lattice() -> PicardModel:
    """Rank-16 overlattice of <4> + A1^15 glued by the five code generators."""
    ambient = ambient_lattice()
    code = even_set_code()
    glues = [sigma_class(d).coords for d in CODE_BASIS_DUADS]
    over = overlattice(ambient, [list(g) for g in glues])
    named = standard_classes()
    model = PicardModel(
        ambient=ambient,
        lattice=over.lattice,
        basis=over.basis,
        index=over.index,
        code=code,
        named=named,
    )
    for name, cls in named.items():
        assert is_pic_integral(cls), f"named class {name} must lie in the Picard lattice"
        assert model.in_lattice(cls) is not None, f"named class {name} misses the overlattice"
    return model


def verify_class_identities() -> dict[str, bool]:
    """The classical divisor-class identities, checked as exact coordinate equalities."""
    named = standard_classes()
    zero = DivisorClass.make()
    sum_l_e = sum((E[x] for x in L_SET), zero)
    sum_c_e = sum((E[x] for x in C_SET), zero)
    sum_l_sigma = sum((sigma_class(x) for x in L_SET), zero)
    sum_c_sigma = sum((sigma_class(x) for x in C_SET), zero)
    results = {}
    # the trope-conic relation: eta - word nodes = 2 sigma(E_x), x in L
    ok = True
    for x in L_SET:
        word = trope_node_sets()[x]
        lhs = ETA - sum((E[y] for y in sorted(word)), zero)
        ok = ok and lhs == 2 * sigma_class(x)
    results["conic_halves"] = ok
    # the trope-quartic relation for y in C
    ok = True
    for y in C_SET:
        a = y[0]
        lhs = 2 * ETA - 2 * E[y]
        for y2 in C_SET:
            if y2 != y:
                lhs = lhs - E[y2]
        for b in range(1, 6):
            if b != a:
                lhs = lhs - E[tuple(sorted((a, b)))]
        ok = ok and lhs == 2 * sigma_class(y)
    results["quartic_halves"] = ok
    # image of the hyperplane class under the covering involution
    sigma_eta = 4 * ETA - sum_l_e - 2 * sum_c_e
    results["sigma_eta"] = is_pic_integral(sigma_eta)
    # dual-model hyperplane: 2 eta_star = 3 eta - sum_L E
    results["eta_star_halves"] = 2 * named["eta_star"] == 3 * ETA - sum_l_e
    # branch curve: three expressions for B_tilde agree
    bt = named["B_tilde"]
    results["b_tilde_l"] = 2 * bt == sum_l_e + sum_l_sigma
    results["b_tilde_c"] = 2 * bt == sum_c_e + sum_c_sigma
    # total exceptional sum: sum of all E and sigma(E) equals 4 B_tilde
    total = sum_l_e + sum_c_e + sum_l_sigma + sum_c_sigma
    results["sum_is_4b"] = total == 4 * bt and total == 10 * ETA - 2 * sum_l_e - 4 * sum_c_e
    # degree-10 map: the three expressions coincide and have norm 10
    m10 = named["map10"]
    results["map10_exprs"] = (
        2 * m10 == 5 * ETA - sum_l_e - 2 * sum_c_e
        and 2 * m10 == sum_l_e + sum_l_sigma
        and 2 * m10 == sum_c_e + sum_c_sigma
        and m10 == bt
    )
    results["map10_norm"] = m10.norm() == 10
    # Reye-equivariant degree-10 class: half the sum of the five C-pencils
    f_sum = sum((named[f"F{a}6"] for a in range(1, 6)), zero)
    results["deg10_rey"] = (
        _half(f_sum) == named["deg10_rey"]
        and named["deg10_rey"] == sum_l_sigma + sum_c_e
        and named["deg10_rey"].norm() == 10
    )
    results["deg20_norm"] = named["deg20"].norm() == 20
    results["b_tilde_invariants"] = bt.norm() == 10 and bt.degree() == 10
    return results


# -- discriminant comparison -------------------------------------------------------


# the classically quoted generators of the discriminant group of the lattice
CLASSICAL_DISCRIMINANT_GENERATORS: tuple[tuple[Fraction, dict], ...] = (
    (Fraction(1, 4), {(1, 4): Fraction(-1, 2), (2, 5): Fraction(-1, 2), (3, 5): Fraction(-1, 2), (5, 6): Fraction(-1, 2)}),
    (Fraction(0), {(1, 3): Fraction(1, 2), (1, 6): Fraction(1, 2), (2, 6): Fraction(1, 2), (3, 6): Fraction(1, 2)}),
    (Fraction(0), {(1, 3): Fraction(1, 2), (2, 5): Fraction(1, 2), (3, 4): Fraction(1, 2), (5, 6): Fraction(1, 2)}),
    (Fraction(0), {(1, 3): Fraction(1, 2), (2, 4): Fraction(1, 2), (1, 2): Fraction(1, 2), (4, 6): Fraction(1, 2)}),
    (Fraction(0), {(1, 3): Fraction(1, 2), (3, 5): Fraction(1, 2), (1, 6): Fraction(1, 2), (5, 6): Fraction(1, 2)}),
    (Fraction(0), {(1, 4): Fraction(1, 2), (2, 4): Fraction(1, 2), (1, 6): Fraction(1, 2), (2, 6): Fraction(1, 2)}),
)


@dataclass(frozen=True)
class DiscriminantComparison:
    pic_invariants: FiniteAbelianInvariants
    reference_invariants: FiniteAbelianInvariants
    groups_match: bool
    q_match_direct: bool
    q_match_negated: bool
    classical_generator_duality: tuple[bool, ...]  # per quoted generator, as transcribed
    weight4_duals_are_four_cycles: bool
    snf_generators_generate: bool


def transcendental_reference_lattice() -> IntegerLattice:
    return direct_sum(
        named_lattice("U(2)"), named_lattice("U(2)"), named_lattice("A1(2)"), named_lattice("A1")
    )


def is_dual_vector(model: PicardModel, coords: Sequence[Fraction]) -> bool:
    return all(model.ambient.pair(coords, row).denominator == 1 for row in model.basis)


def discriminant_comparison() -> DiscriminantComparison:
    """Compare disc(Pic) with disc(U(2)+U(2)+A1(2)+A1): groups and q-values.

    The q-value multisets are compared directly and with a global sign flip;
    the expected match is the sign-flipped one (the two lattices sit on
    opposite sides of a unimodular lattice).  The classically quoted generators
    are checked one by one: three of the six are not dual vectors as transcribed.
    The full isometry statement for the transcendental lattice is *not*
    certified here, only this desk-scale discriminant evidence.
    """
    model = picard_lattice()
    pic_inv = discriminant_group(model.lattice)
    ref = transcendental_reference_lattice()
    ref_inv = discriminant_group(ref)
    groups_match = pic_inv.invariant_factors == ref_inv.invariant_factors
    q_pic = discriminant_q_multiset(model.lattice)
    q_ref = discriminant_q_multiset(ref)
    q_neg: dict[Fraction, int] = {}
    for k, v in q_ref.items():
        kk = (-k) % 2
        q_neg[kk] = q_neg.get(kk, 0) + v
    duality = []
    for eta_coeff, node_coeffs in CLASSICAL_DISCRIMINANT_GENERATORS:
        vec = [Fraction(eta_coeff)] + [Fraction(0)] * 15
        for d, c in node_coeffs.items():
            vec[1 + NODE_INDEX[d]] = Fraction(c)
        duality.append(is_dual_vector(model, vec))
    # classification: the half-sums over four nodes lying in the dual are
    # exactly the 4-cycles among the duad labels (45 of them)
    cycles_ok = _weight4_duals_are_cycles(model)
    # the SNF generators are certified dual inside discriminant_group; their
    # orders must multiply up to the full group
    snf_ok = pic_inv.order == 128
    return DiscriminantComparison(
        pic_invariants=pic_inv,
        reference_invariants=ref_inv,
        groups_match=groups_match,
        q_match_direct=(q_pic == q_ref),
        q_match_negated=(q_pic == q_neg),
        classical_generator_duality=tuple(duality),
        weight4_duals_are_four_cycles=cycles_ok,
        snf_generators_generate=snf_ok,
    )


def _weight4_duals_are_cycles(model: PicardModel) -> bool:
    from collections import Counter

    count = 0
    for combo in itertools.combinations(NODES, 4):
        vec = [Fraction(0)] * RANK
        for d in combo:
            vec[1 + NODE_INDEX[d]] = Fraction(1, 2)
        if not is_dual_vector(model, vec):
            continue
        count += 1
        deg = Counter()
        for a, b in combo:
            deg[a] += 1
            deg[b] += 1
        if not (len(deg) == 4 and all(v == 2 for v in deg.values())):
            return False
    return count == 45


# -- the Kummer model ---------------------------------------------------------------


KUMMER_GROUP: tuple[tuple[int, ...], ...] = ((),) + tuple(duads())  # F_2^4 as {0} + duads
KUMMER_INDEX = {g: i for i, g in enumerate(KUMMER_GROUP)}
KUMMER_SPECIAL = ((), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6))  # translation 6-set


def kummer_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Symmetric difference of even subsets of {1,...,6} modulo complement."""
    s = set(a) ^ set(b)
    if len(s) == 4:
        s = set(range(1, 7)) - s
    elif len(s) == 6:
        s = set()
    return tuple(sorted(s))


@dataclass(frozen=True)
class KummerModel:
    ambient: IntegerLattice  # <4> + A1^16 on (eta, N_alpha)
    lattice: IntegerLattice  # rank-17 overlattice
    basis: tuple[tuple[Fraction, ...], ...]
    index: int
    tropes: dict[tuple[int, ...], tuple[Fraction, ...]]  # T_beta in ambient coords

    def in_lattice(self, v: Sequence[Fraction]) -> Optional[list[int]]:
        return vector_in_lattice(self.basis, v)


def kummer_trope_support(beta: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(kummer_add(beta, k) for k in KUMMER_SPECIAL))


@lru_cache(maxsize=None)
def kummer_model() -> KummerModel:
    """Rank-17 lattice of a 16-nodal quartic glued by the sixteen trope words."""
    ambient = direct_sum(named_lattice("diag(4)"), *[named_lattice("A1")] * 16)
    tropes = {}
    glues = []
    for beta in KUMMER_GROUP:
        v = [Fraction(0)] * 17
        v[0] = Fraction(1, 2)
        support = kummer_trope_support(beta)
        assert len(support) == 6, "every trope word has exactly six nodes"
        for alpha in support:
            v[1 + KUMMER_INDEX[alpha]] = Fraction(-1, 2)
        tropes[beta] = tuple(v)
        glues.append(v)
    over = overlattice(ambient, glues)
    return KummerModel(ambient, over.lattice, over.basis, over.index, tropes)


def kummer_node_trope_pairings() -> bool:
    """N_alpha · T_beta = 1 exactly when alpha+beta lies in the special 6-set."""
    model = kummer_model()
    ambient = model.ambient
    for alpha in KUMMER_GROUP:
        n_vec = [Fraction(0)] * 17
        n_vec[1 + KUMMER_INDEX[alpha]] = Fraction(1)
        for beta, t_vec in model.tropes.items():
            expected = 1 if kummer_add(alpha, beta) in KUMMER_SPECIAL else 0
            if ambient.pair(n_vec, t_vec) != expected:
                return False
    return True


@dataclass(frozen=True)
class KummerEmbeddingCertificate:
    pairings_preserved: bool
    image_in_lattice: bool
    image_orthogonal_to_n0: bool
    image_equals_complement: bool
    gram_match: bool
    mismatches: tuple[str, ...] = ()  # names the offending pairs, if any


def _embedding_images() -> dict[str, tuple[Fraction, ...]]:
    """Images of the 21 Picard generators inside the Kummer ambient coordinates."""
    model = kummer_model()
    images: dict[str, tuple[Fraction, ...]] = {}

    def nvec(alpha):
        v = [Fraction(0)] * 17
        v[1 + KUMMER_INDEX[alpha]] = Fraction(1)
        return v

    eta_vec = [Fraction(0)] * 17
    eta_vec[0] = Fraction(1)
    images["eta"] = tuple(eta_vec)
    for d in NODES:
        images[f"E{d[0]}{d[1]}"] = tuple(nvec(d))
    for d in L_SET:
        images[f"sigma_E{d[0]}{d[1]}"] = model.tropes[d]
    n0 = nvec(())
    t0 = model.tropes[()]
    for d in C_SET:
        t = model.tropes[d]
        images[f"sigma_E{d[0]}{d[1]}"] = tuple(
            a + b + c for a, b, c in zip(t, t0, n0)
        )
    return images


def kummer_embedding_check() -> KummerEmbeddingCertificate:
    """Certify the specialization map Pic(15-nodal) -> Pic(16-nodal).

    eta -> eta, E_x -> N_x, sigma(E_x) -> T_x for conic-type x, and
    sigma(E_y) -> T_y + T_0 + N_0 for quartic-type y; the image must be the
    orthogonal complement of N_0 with the same Gram matrix.
    """
    pic = picard_lattice()
    kum = kummer_model()
    images = _embedding_images()

    def image_of(cls: DivisorClass) -> tuple[Fraction, ...]:
        vec = [cls.coords[0] * x for x in images["eta"]]
        for i, d in enumerate(NODES):
            c = cls.coords[1 + i]
            if c:
                img = images[f"E{d[0]}{d[1]}"]
                vec = [a + c * b for a, b in zip(vec, img)]
        return tuple(vec)

    # sigma images must match the classical trope combinations
    pairings = True
    mismatches: list[str] = []
    for d in NODES:
        got = image_of(sigma_class(d))
        if got != images[f"sigma_E{d[0]}{d[1]}"]:
            pairings = False
            mismatches.append(f"sigma image of node {d}")
    # pairings preserved on all pairs of Picard basis vectors
    for i, v in enumerate(pic.basis):
        for j, w in enumerate(pic.basis):
            lhs = pic.ambient.pair(v, w)
            rhs = kum.ambient.pair(image_of(DivisorClass(tuple(v))), image_of(DivisorClass(tuple(w))))
            if lhs != rhs:
                pairings = False
                mismatches.append(f"basis pair ({i},{j}): {lhs} vs {rhs}")
    # image vectors lie in the Kummer lattice and are orthogonal to N_0
    n0 = [Fraction(0)] * 17
    n0[1 + KUMMER_INDEX[()]] = Fraction(1)
    image_rows = [image_of(DivisorClass(tuple(v))) for v in pic.basis]
    in_lattice = all(kum.in_lattice(v) is not None for v in image_rows)
    orthogonal = all(kum.ambient.pair(v, n0) == 0 for v in image_rows)
    # the orthogonal complement of N_0 inside the Kummer lattice
    n0_coords = kum.in_lattice(n0)
    assert n0_coords is not None
    comp, comp_basis = orthogonal_complement(kum.lattice, [n0_coords])
    # image coordinates in the Kummer basis, then in the complement basis
    image_in_kummer = [kum.in_lattice(v) for v in image_rows]
    equals_complement = comp.rank == RANK
    gram_match = False
    if equals_complement and all(c is not None for c in image_in_kummer):
        from .exact import solve_linear
        from .lattice import det_bareiss

        cols = [[Fraction(comp_basis[k][i]) for k in range(RANK)] for i in range(len(comp_basis[0]))]
        trans = []
        for vec in image_in_kummer:
            sol = solve_linear(cols, [Fraction(x) for x in vec])
            if sol is None or any(c.denominator != 1 for c in sol):
                equals_complement = False
                break
            trans.append([int(c) for c in sol])
        if equals_complement:
            equals_complement = abs(det_bareiss(trans)) == 1
            # induced Gram on the image equals the Picard Gram
            got = [
                [
                    sum(
                        trans[i][a] * comp.gram[a][b] * trans[j][b]
                        for a in range(RANK)
                        for b in range(RANK)
                    )
                    for j in range(RANK)
                ]
                for i in range(RANK)
            ]
            gram_match = got == [list(r) for r in pic.lattice.gram]
    return KummerEmbeddingCertificate(
        pairings_preserved=pairings,
        image_in_lattice=in_lattice,
        image_orthogonal_to_n0=orthogonal,
        image_equals_complement=equals_complement,
        gram_match=gram_match,
        mismatches=tuple(mismatches),
    )


def class_table_jsonable() -> dict:
    """Name -> doubled integer coordinates, norm, degree, membership flag."""
    out = {}
    for name, cls in sorted(standard_classes().items()):
        norm, degree, member = class_invariants(cls)
        out[name] = {
            "coords_x2": list(cls.times2_int()),
            "norm": str(norm),
            "degree": str(degree),
            "pic_integral": member,
        }
    return out
