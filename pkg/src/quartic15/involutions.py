"""Certified involutive isometries of the rank-16 Picard lattice.

Three families: the covering involution sigma* (determined by its images on
the hyperplane and exceptional classes), the Reye reflection in the norm -4
vector 2*eta - sum_L E, and one pentad reflection in 3*eta - 2*sum_P E per
5-subset P of nodes.  Every matrix is expressed on the fixed Z-basis of the
Picard lattice, and certified integral, Gram-preserving and involutive by
direct matrix arithmetic.

Matrices act on row coordinate vectors: v -> v·M, so row i is the image of
the i-th basis vector and the isometry condition reads M·G·M^T = G.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .configs import Duad, s6_elements
from .exact import rank_fraction_free, solve_linear
from .lattice import mat_identity, mat_mul, mat_transpose
from .nodal_surface import (
    C_SET,
    E,
    ETA,
    L_SET,
    NODES,
    RANK,
    DivisorClass,
    PicardModel,
    eta_star,
    picard_lattice,
    sigma_class,
)

Pentad = tuple[Duad, Duad, Duad, Duad, Duad]


@dataclass(frozen=True)
class PicIsometry:
    name: str
    matrix: tuple[tuple[int, ...], ...]  # on the Picard basis, row convention

    def apply(self, v: Sequence[int]) -> list[int]:
        return [
            sum(v[i] * self.matrix[i][j] for i in range(RANK)) for j in range(RANK)
        ]

    def compose(self, other: "PicIsometry") -> "PicIsometry":
        return PicIsometry(
            f"{self.name};{other.name}",
            tuple(tuple(r) for r in mat_mul(self.matrix, other.matrix)),
        )

    def is_involution(self) -> bool:
        return mat_mul(self.matrix, self.matrix) == mat_identity(RANK)

    def preserves_gram(self, gram: Sequence[Sequence[int]]) -> bool:
        m = [list(r) for r in self.matrix]
        return mat_mul(mat_mul(m, [list(r) for r in gram]), mat_transpose(m)) == [
            list(r) for r in gram
        ]

    def trace(self) -> int:
        return sum(self.matrix[i][i] for i in range(RANK))

    def invariant_rank(self) -> int:
        delta = [
            [self.matrix[i][j] - (1 if i == j else 0) for j in range(RANK)]
            for i in range(RANK)
        ]
        return RANK - rank_fraction_free(delta)

    def to_jsonable(self) -> dict:
        return {"name": self.name, "matrix": [list(r) for r in self.matrix]}


class _Basis:
    """Cached conversion data between (eta, E_x) coordinates and the Pic basis."""

    def __init__(self, model: PicardModel):
        self.model = model
        self.rows = [list(r) for r in model.basis]  # 16 rows in ambient coords
        # columns of the basis matrix, for solving  x · B = v
        self.cols = [[self.rows[k][i] for k in range(RANK)] for i in range(RANK)]

    def to_pic(self, coords: Sequence[Fraction]) -> Optional[list[Fraction]]:
        return solve_linear(self.cols, list(coords))

    def to_pic_int(self, coords: Sequence[Fraction]) -> Optional[list[int]]:
        sol = self.to_pic(coords)
        if sol is None or any(c.denominator != 1 for c in sol):
            return None
        return [int(c) for c in sol]

    def class_rows(self) -> list[DivisorClass]:
        return [DivisorClass(tuple(r)) for r in self.model.basis]


_BASIS_CACHE: dict[int, _Basis] = {}


def _basis(model: PicardModel | None = None) -> _Basis:
    model = model or picard_lattice()
    key = id(model)
    if key not in _BASIS_CACHE:
        _BASIS_CACHE[key] = _Basis(model)
    return _BASIS_CACHE[key]


def _isometry_from_class_images(
    name: str, images: Sequence[DivisorClass], model: PicardModel | None = None
) -> PicIsometry:
    """Matrix rows from the images of the Picard basis, certified integral."""
    basis = _basis(model)
    rows = []
    for i, img in enumerate(images):
        pic = basis.to_pic_int(img.coords)
        if pic is None:
            raise ValueError(f"{name}: image of basis vector {i} is not in the lattice")
        rows.append(tuple(pic))
    iso = PicIsometry(name, tuple(rows))
    if not iso.preserves_gram(basis.model.lattice.gram):
        raise ValueError(f"{name}: Gram form not preserved")
    return iso


def sigma_star(model: PicardModel | None = None) -> PicIsometry:
    """The covering involution: eta and every E_x map to their sigma-classes."""
    model = model or picard_lattice()
    basis = _basis(model)
    sigma_eta = (
        4 * ETA
        - sum((E[x] for x in L_SET), DivisorClass.make())
        - sum((2 * E[x] for x in C_SET), DivisorClass.make())
    )
    sigma_images = {d: sigma_class(d) for d in NODES}

    def image_of(cls: DivisorClass) -> DivisorClass:
        out = cls.coords[0] * sigma_eta
        for i, d in enumerate(NODES):
            c = cls.coords[1 + i]
            if c:
                out = out + c * sigma_images[d]
        return out

    images = [image_of(b) for b in basis.class_rows()]
    iso = _isometry_from_class_images("sigma", images, model)
    assert iso.is_involution(), "sigma* must square to the identity"
    return iso


def reye_root() -> DivisorClass:
    return 2 * ETA - sum((E[x] for x in L_SET), DivisorClass.make())


def pentad_root(pentad: Iterable[Duad]) -> DivisorClass:
    return 3 * ETA - sum((2 * E[x] for x in pentad), DivisorClass.make())


def _reflection_norm4(name: str, root: DivisorClass, model: PicardModel | None = None) -> PicIsometry:
    """Reflection v -> v + (v·root)/2 · root for a norm -4 root in the lattice."""
    model = model or picard_lattice()
    basis = _basis(model)
    assert root.norm() == -4, "reflection root must have norm -4"
    w = basis.to_pic_int(root.coords)
    assert w is not None, "root must lie in the Picard lattice"
    rows = []
    for i, b in enumerate(basis.class_rows()):
        s = b.dot(root)
        if s.denominator != 1 or int(s) % 2:
            raise ValueError(f"{name}: basis vector {i} pairs oddly with the root")
        half = int(s) // 2
        row = [
            (1 if i == j else 0) + half * w[j] for j in range(RANK)
        ]
        rows.append(tuple(row))
    return PicIsometry(name, tuple(rows))


def tau_rey_star(model: PicardModel | None = None) -> PicIsometry:
    """The Reye reflection, in the root 2*eta − sum over conic-type nodes."""
    iso = _reflection_norm4("tau_rey", reye_root(), model)
    basis = _basis(model)
    assert iso.preserves_gram(basis.model.lattice.gram)
    assert iso.is_involution()
    return iso


def tau_pentad_star(pentad: Sequence[Duad], model: PicardModel | None = None) -> PicIsometry:
    """Reflection attached to a pentad of nodes (admissibility not required)."""
    p = tuple(sorted(pentad))
    if len(p) != 5 or len(set(p)) != 5:
        raise ValueError("a pentad consists of five distinct node labels")
    name = "tau_P(" + ",".join(f"{a}{b}" for a, b in p) + ")"
    return _reflection_norm4(name, pentad_root(p), model)


def s6_isometry(g: Sequence[int], model: PicardModel | None = None) -> PicIsometry:
    """Node-relabeling action of a permutation of {1,...,6} on the lattice."""
    basis = _basis(model)
    images = [b.permuted(g) for b in basis.class_rows()]
    return _isometry_from_class_images(f"perm{tuple(g)}", images, model)


# -- verification of the classical identities ---------------------------------


@dataclass(frozen=True)
class ReyeImageReport:
    """The six classical image formulas of the Reye reflection, as exact checks."""

    e_conic: bool        # E_x -> 2*eta - sum of the other conic-type E, x in L
    e_conic_alt: bool    # ... and the same class written as E_x + 2*eta_star - eta
    e_quartic: bool      # E_y fixed, y in C
    sigma_conic: bool    # sigma(E_x) fixed, x in L
    sigma_quartic: bool  # sigma(E_y) -> sigma(E_y) + 4*eta - 2*sum_L E
    eta_image: bool      # eta -> 9*eta - 4*sum_L E = 8*eta_star - 3*eta
    eta_star_image: bool  # eta_star -> 3*eta_star - eta

    def all_hold(self) -> bool:
        return all(getattr(self, f) for f in self.__dataclass_fields__)


def _apply_to_class(iso: PicIsometry, cls: DivisorClass, model: PicardModel | None = None) -> DivisorClass:
    basis = _basis(model)
    pic = basis.to_pic(cls.coords)
    assert pic is not None
    img = [
        sum(pic[i] * iso.matrix[i][j] for i in range(RANK)) for j in range(RANK)
    ]
    coords = [
        sum(img[k] * basis.model.basis[k][i] for k in range(RANK)) for i in range(RANK)
    ]
    return DivisorClass(tuple(coords))


def reye_image_report(model: PicardModel | None = None) -> ReyeImageReport:
    tau = tau_rey_star(model)
    zero = DivisorClass.make()
    sum_l = sum((E[x] for x in L_SET), zero)
    es = eta_star()

    def img(cls):
        return _apply_to_class(tau, cls, model)

    e_conic = all(
        img(E[x]) == 2 * ETA - (sum_l - E[x]) for x in L_SET
    )
    e_conic_alt = all(
        img(E[x]) == E[x] + 2 * es - ETA for x in L_SET
    )
    e_quartic = all(img(E[y]) == E[y] for y in C_SET)
    sigma_conic = all(img(sigma_class(x)) == sigma_class(x) for x in L_SET)
    sigma_quartic = all(
        img(sigma_class(y)) == sigma_class(y) + 4 * ETA - 2 * sum_l for y in C_SET
    )
    eta_image = img(ETA) == 9 * ETA - 4 * sum_l and img(ETA) == 8 * es - 3 * ETA
    eta_star_image = img(es) == 3 * es - ETA
    return ReyeImageReport(
        e_conic, e_conic_alt, e_quartic, sigma_conic, sigma_quartic, eta_image, eta_star_image
    )


@dataclass(frozen=True)
class RelationReport:
    goepel_conjugation: bool     # sigma · tau_rey · sigma = tau_{Goepel pentad}
    reye_invariant_rank: int
    goepel_invariant_rank: int
    sigma_involution: bool
    lefschetz_reye: int          # 2 + trace on Pic - 6, transcendental part at -1
    lefschetz_goepel: int
    pencil_norms: bool           # F_i^2 = 0, F_i·F_j = 2 for the Goepel pentad
    reye_fixes_pencils: bool     # tau_rey fixes the ten classes eta_star - E_x
    reflection_routes_agree: bool  # conjugated sigma route equals the root route


GOEPEL_PENTAD: Pentad = tuple(C_SET)


def verify_relations(model: PicardModel | None = None) -> RelationReport:
    """The conjugation identity, invariant ranks, Lefschetz numbers and
    pencil pairings, all as exact integer computations.

    The Lefschetz numbers assume the involutions act as -1 on the rank-6
    transcendental part; that assumption is recorded here, not derived.
    """
    model = model or picard_lattice()
    sig = sigma_star(model)
    tau = tau_rey_star(model)
    goepel = tau_pentad_star(GOEPEL_PENTAD, model)
    conj = sig.compose(tau).compose(sig)
    goepel_conj = conj.matrix == goepel.matrix
    # independent route: sigma maps the Reye root to the Goepel root
    routes = _apply_to_class(sig, reye_root(), model) == pentad_root(GOEPEL_PENTAD)
    zero = DivisorClass.make()
    pencils = [
        2 * ETA - 2 * E[x] - sum((E[y] for y in GOEPEL_PENTAD if y != x), zero)
        for x in GOEPEL_PENTAD
    ]
    pencil_norms = all(f.norm() == 0 and f.degree() == 8 for f in pencils) and all(
        pencils[i].dot(pencils[j]) == 2
        for i in range(5)
        for j in range(i + 1, 5)
    )
    es = eta_star()
    fixes = all(
        _apply_to_class(tau, es - E[x], model) == es - E[x] for x in L_SET
    )
    return RelationReport(
        goepel_conjugation=goepel_conj,
        reye_invariant_rank=tau.invariant_rank(),
        goepel_invariant_rank=goepel.invariant_rank(),
        sigma_involution=sig.is_involution(),
        lefschetz_reye=2 + tau.trace() - 6,
        lefschetz_goepel=2 + goepel.trace() - 6,
        pencil_norms=pencil_norms,
        reye_fixes_pencils=fixes,
        reflection_routes_agree=routes,
    )


def verify_all_pentad_reflections(model: PicardModel | None = None):
    """Certify every one of the 3003 pentad reflections.

    Returns (count, all_integral, all_gram_preserving, all_involutive).
    """
    model = model or picard_lattice()
    gram = model.lattice.gram
    count = integral = isometric = involutive = 0
    for pentad in itertools.combinations(NODES, 5):
        count += 1
        try:
            iso = tau_pentad_star(pentad, model)
        except ValueError:
            continue
        integral += 1
        if iso.preserves_gram(gram):
            isometric += 1
        if iso.is_involution():
            involutive += 1
    return count, integral, isometric, involutive


def pentad_naturality_spot_check(model: PicardModel | None = None, sample: int = 12) -> bool:
    """g · tau_P · g^{-1} = tau_{g(P)} on a deterministic sample of pairs."""
    model = model or picard_lattice()
    perms = s6_elements()
    pentads = list(itertools.combinations(NODES, 5))
    for k in range(sample):
        g = perms[(37 * k + 11) % len(perms)]
        p = pentads[(211 * k + 5) % len(pentads)]
        gp = tuple(sorted(tuple(sorted((g[a - 1], g[b - 1]))) for a, b in p))
        giso = s6_isometry(g, model)
        ginv = s6_isometry(_inverse_perm(g), model)
        lhs = ginv.compose(tau_pentad_star(p, model)).compose(giso)
        if lhs.matrix != tau_pentad_star(gp, model).matrix:
            return False
    return True


def _inverse_perm(g: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * 6
    for i, x in enumerate(g):
        inv[x - 1] = i + 1
    return tuple(inv)


def isometries_jsonable(model: PicardModel | None = None) -> dict:
    """The three named involutions with the basis manifest they act on."""
    model = model or picard_lattice()
    return {
        "basis_in_ambient_x2": [
            [int(2 * x) for x in row] for row in model.basis
        ],
        "ambient_labels": ["eta"] + [f"E{a}{b}" for a, b in NODES],
        "isometries": [
            sigma_star(model).to_jsonable(),
            tau_rey_star(model).to_jsonable(),
            tau_pentad_star(GOEPEL_PENTAD, model).to_jsonable(),
        ],
    }
