"""The Segre cubic and the Castelnuovo-Richmond-Igusa quartic.

Both are built in symmetric 6-coordinate models inside the hyperplane
u1+...+u6 = 0, so that the S6 symmetry is literal coordinate permutation:

    cubic:    sum u_i = 0,  sum u_i^3 = 0
    quartic:  sum u_i = 0,  4*sum u_i^4 - (sum u_i^2)^2 = 0

This module certifies their special loci (nodes, double lines, cardinal
tangent hyperplanes), the polar duality map between them, hyperplane and
tangent sections as 15- and 16-nodal quartic surfaces, and runs exhaustive
singular-point scans over small prime fields as an independent oracle.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .configs import (
    Duad,
    Syntheme,
    duads,
    synthemes,
    three_subsets,
)
from .exact import (
    LinearMap,
    MultiPoly,
    nullspace,
    primitive_integer_vector,
    rank_fraction_free,
    rank_rational,
    rref,
    solve_linear,
)

NVARS = 6
ONES = tuple(Fraction(1) for _ in range(NVARS))


class NotOnVarietyError(ValueError):
    """The point violates the defining equations or ambient constraints."""


class GenericityError(ValueError):
    """A named genericity condition failed; `condition` says which."""

    def __init__(self, condition: str, detail=None):
        self.condition = condition
        self.detail = detail
        super().__init__(f"{condition}" + (f": {detail}" if detail is not None else ""))


# -- points and subspaces -----------------------------------------------------


class ProjectivePoint:
    """Point of projective space, stored by the canonical representative
    whose first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        fr = [Fraction(x) for x in coords]
        lead = next((x for x in fr if x), None)
        if lead is None:
            raise ValueError("projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", tuple(x / lead for x in fr))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ProjectivePoint is immutable")

    def primitive(self) -> tuple[int, ...]:
        return tuple(primitive_integer_vector(self.coords))

    def __eq__(self, other):
        return isinstance(other, ProjectivePoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"ProjectivePoint{self.primitive()}"


@dataclass(frozen=True)
class LinearSubspace:
    """Linear subspace kept both as row-reduced equations and a parametrization.

    `equations` are coefficient rows cutting the subspace; `parametrization`
    is a matrix whose columns span the solution cone.  Consistency (ranks add
    up, columns satisfy the equations) is checked at construction.
    """

    equations: tuple[tuple[Fraction, ...], ...]
    parametrization: LinearMap

    def __post_init__(self):
        n = self.parametrization.rows
        eq_rank = rank_rational([list(e) for e in self.equations]) if self.equations else 0
        if eq_rank + self.parametrization.cols != n:
            raise ValueError("rank of equations plus parametrization dimension must fill the space")
        for eq in self.equations:
            for j in range(self.parametrization.cols):
                col = [self.parametrization.entries[i][j] for i in range(n)]
                if sum(a * b for a, b in zip(eq, col)) != 0:
                    raise ValueError("parametrization does not satisfy the equations")

    @classmethod
    def from_equations(cls, rows: Sequence[Sequence], nvars: int) -> "LinearSubspace":
        red, pivots = rref(rows)
        eqs = tuple(tuple(r) for r in red[: len(pivots)])
        basis = nullspace(rows, nvars)
        param = LinearMap([[basis[k][i] for k in range(len(basis))] for i in range(nvars)])
        return cls(eqs, param)

    @classmethod
    def from_span(cls, vectors: Sequence[Sequence]) -> "LinearSubspace":
        """Subspace spanned by the given (independent) coordinate vectors."""
        nvars = len(vectors[0])
        eq_rows = nullspace([list(v) for v in vectors], nvars)
        red, pivots = rref(eq_rows) if eq_rows else ([], [])
        eqs = tuple(tuple(r) for r in red[: len(pivots)])
        param = LinearMap([[Fraction(v[i]) for v in vectors] for i in range(nvars)])
        return cls(eqs, param)

    def contains_point(self, p: ProjectivePoint) -> bool:
        return all(
            sum(a * b for a, b in zip(eq, p.coords)) == 0 for eq in self.equations
        )

    @property
    def dim_cone(self) -> int:
        return self.parametrization.cols


@dataclass(frozen=True)
class Hypersurface:
    """Homogeneous form together with ambient linear constraints."""

    form: MultiPoly
    ambient_constraints: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.form.is_homogeneous():
            raise ValueError("form must be homogeneous")
        if self.ambient_constraints:
            if rank_rational([list(c) for c in self.ambient_constraints]) != len(
                self.ambient_constraints
            ):
                raise ValueError("ambient constraints must be independent")

    def satisfies_constraints(self, coords: Sequence[Fraction]) -> bool:
        return all(
            sum(a * b for a, b in zip(c, coords)) == 0 for c in self.ambient_constraints
        )

    def is_s6_invariant(self) -> bool:
        """Exact invariance of the form under all 720 coordinate permutations."""
        for perm in itertools.permutations(range(NVARS)):
            if self.form.permute_variables(list(perm)) != self.form:
                return False
        return True


def segre_form() -> MultiPoly:
    u = [MultiPoly.variable(NVARS, i) for i in range(NVARS)]
    return sum((ui**3 for ui in u), MultiPoly.zero(NVARS))


def cr_quartic_form() -> MultiPoly:
    u = [MultiPoly.variable(NVARS, i) for i in range(NVARS)]
    s4 = sum((ui**4 for ui in u), MultiPoly.zero(NVARS))
    s2 = sum((ui**2 for ui in u), MultiPoly.zero(NVARS))
    return s4 * 4 - s2 * s2


def build_variety(kind: str) -> Hypersurface:
    if kind == "segre":
        return Hypersurface(segre_form(), (ONES,))
    if kind == "cr":
        return Hypersurface(cr_quartic_form(), (ONES,))
    raise ValueError(f"unknown variety kind {kind!r}")


# -- special loci --------------------------------------------------------------


def node_point(subset: Sequence[int]) -> ProjectivePoint:
    """Cubic node for a 3-subset: +1 on the subset, −1 on the complement."""
    return ProjectivePoint([1 if i + 1 in subset else -1 for i in range(NVARS)])


def cardinal_coefficients(subset: Sequence[int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if i + 1 in subset else -1) for i in range(NVARS))


def syntheme_line(s: Syntheme) -> LinearSubspace:
    """Double line of the quartic for a syntheme: equal coordinates on each duad."""
    rows = [list(ONES)]
    for a, b in s:
        row = [Fraction(0)] * NVARS
        row[a - 1], row[b - 1] = Fraction(1), Fraction(-1)
        rows.append(row)
    return LinearSubspace.from_equations(rows, NVARS)


def syntheme_plane(s: Syntheme) -> LinearSubspace:
    """Plane of the cubic for a syntheme: opposite coordinates on each duad."""
    rows = []
    for a, b in s:
        row = [Fraction(0)] * NVARS
        row[a - 1], row[b - 1] = Fraction(1), Fraction(1)
        rows.append(row)
    return LinearSubspace.from_equations(rows, NVARS)


def duad_point(d: Duad) -> ProjectivePoint:
    """Common point of the three double lines through a duad: −2 on it, 1 off."""
    return ProjectivePoint([-2 if i + 1 in d else 1 for i in range(NVARS)])


def derive_duad_point(d: Duad) -> ProjectivePoint:
    """Independent derivation: intersect the three syntheme lines containing d."""
    rows: list[list[Fraction]] = []
    for s in synthemes():
        if d in s:
            line = syntheme_line(s)
            rows.extend([list(e) for e in line.equations])
    basis = nullspace(rows, NVARS)
    if len(basis) != 1:
        raise AssertionError("three lines through a duad must meet in one point")
    return ProjectivePoint(basis[0])


@dataclass(frozen=True)
class SpecialLoci:
    kind: str
    nodes: dict | None = None            # 3-subset -> ProjectivePoint (cubic)
    planes: dict | None = None           # syntheme -> LinearSubspace (cubic)
    double_lines: dict | None = None     # syntheme -> LinearSubspace (quartic)
    line_points: dict | None = None      # duad -> ProjectivePoint (quartic)
    cardinal_hyperplanes: dict | None = None  # 3-subset -> coefficient row (quartic)


def special_loci(kind: str) -> SpecialLoci:
    if kind == "segre":
        return SpecialLoci(
            kind,
            nodes={a: node_point(a) for a in three_subsets()},
            planes={s: syntheme_plane(s) for s in synthemes()},
        )
    if kind == "cr":
        return SpecialLoci(
            kind,
            double_lines={s: syntheme_line(s) for s in synthemes()},
            line_points={d: duad_point(d) for d in duads()},
            cardinal_hyperplanes={a: cardinal_coefficients(a) for a in three_subsets()},
        )
    raise ValueError(f"unknown variety kind {kind!r}")


# -- node certification ---------------------------------------------------------


@dataclass(frozen=True)
class SmoothPointFailure:
    """Typed failure: the point lies on the variety but is smooth there."""

    point: ProjectivePoint
    gradient: tuple[Fraction, ...]


@dataclass(frozen=True)
class NodeCertificate:
    point: ProjectivePoint
    value: Fraction
    gradient: tuple[Fraction, ...]
    gradient_multipliers: tuple[Fraction, ...]  # gradient = sum(mult_i * constraint_i)
    hessian_rank: int
    is_ordinary: bool
    chart: tuple[tuple[Fraction, ...], ...]  # chart direction vectors


def _constrained_gradient_multipliers(
    gradient: Sequence[Fraction], constraints: Sequence[Sequence[Fraction]]
) -> Optional[list[Fraction]]:
    """Multipliers writing the gradient in the span of the constraint rows."""
    if not constraints:
        return [] if all(g == 0 for g in gradient) else None
    cols = [[c[i] for c in constraints] for i in range(len(gradient))]
    sol = solve_linear(cols, list(gradient))
    return sol


def _chart_basis(
    point: Sequence[Fraction], constraints: Sequence[Sequence[Fraction]], nvars: int
) -> list[list[Fraction]]:
    """Directions completing the point to a basis of the constraint subspace."""
    if constraints:
        space = nullspace([list(c) for c in constraints], nvars)
    else:
        space = [[Fraction(1 if i == j else 0) for j in range(nvars)] for i in range(nvars)]
    chosen: list[list[Fraction]] = [list(point)]
    for cand in space:
        trial = chosen + [cand]
        if rank_rational(trial) == len(trial):
            chosen.append(cand)
    assert len(chosen) == len(space), "point must lie inside the constraint subspace"
    return chosen[1:]


def certify_ordinary_node(v: Hypersurface, p: ProjectivePoint) -> NodeCertificate | SmoothPointFailure:
    """Exact ordinary-node certificate at p, or a typed smooth-point failure.

    The Hessian is evaluated on a chart of the constrained tangent space;
    its rank is computed twice, by rational elimination and by fraction-free
    integer elimination, and the two must agree.  Ordinary means full rank,
    i.e. rank equal to the dimension of the ambient projective space.
    """
    coords = p.coords
    if not v.satisfies_constraints(coords):
        raise NotOnVarietyError("point violates the ambient constraints")
    value = v.form.evaluate(coords)
    if value != 0:
        raise NotOnVarietyError("point is not on the variety")
    grad = tuple(g.evaluate(coords) for g in v.form.gradient())
    mults = _constrained_gradient_multipliers(grad, v.ambient_constraints)
    if mults is None:
        return SmoothPointFailure(p, grad)
    chart = _chart_basis(coords, v.ambient_constraints, v.form.nvars)
    hess = v.form.hessian_at(coords)
    n = v.form.nvars
    chart_hess = [
        [
            sum(w1[a] * hess[a][b] * w2[b] for a in range(n) for b in range(n))
            for w2 in chart
        ]
        for w1 in chart
    ]
    r1 = rank_rational(chart_hess)
    r2 = rank_fraction_free(chart_hess)
    assert r1 == r2, "rank cross-check failed"
    expected = len(chart)  # = projective dimension of the ambient space
    return NodeCertificate(
        point=p,
        value=value,
        gradient=grad,
        gradient_multipliers=tuple(mults),
        hessian_rank=r1,
        is_ordinary=(r1 == expected),
        chart=tuple(tuple(w) for w in chart),
    )


def verify_double_line(v: Hypersurface, line: LinearSubspace) -> bool:
    """True iff the form and its constrained gradient vanish identically on the line.

    The gradient is required to be proportional, as a polynomial identity
    along the line, to the ambient-constraint direction.
    """
    if len(v.ambient_constraints) != 1:
        raise ValueError("double-line check implemented for one ambient constraint")
    constraint = v.ambient_constraints[0]
    param = line.parametrization
    for eq_row in [constraint]:
        for j in range(param.cols):
            col = [param.entries[i][j] for i in range(param.rows)]
            if sum(a * b for a, b in zip(eq_row, col)) != 0:
                raise ValueError("line does not lie inside the ambient constraints")
    if v.form.substitute_linear(param):
        return False
    partials = [g.substitute_linear(param) for g in v.form.gradient()]
    # gradient parallel to the constraint row along the whole line
    for i in range(len(partials)):
        for j in range(i + 1, len(partials)):
            if partials[i] * constraint[j] != partials[j] * constraint[i]:
                return False
    return True


# -- duality -------------------------------------------------------------------


@dataclass(frozen=True)
class DualityImage:
    source: ProjectivePoint
    point: ProjectivePoint
    quartic_value: Fraction  # exact CR value at the image, must be 0


def duality_image(z: ProjectivePoint) -> DualityImage:
    """Polar duality from the cubic to the quartic: traceless coordinate square.

    y_i = z_i^2 − (sum_j z_j^2)/6.  Undefined exactly at the ten nodes, where
    the traceless square collapses to zero.
    """
    coords = z.coords
    if sum(coords) != 0 or sum(c**3 for c in coords) != 0:
        raise NotOnVarietyError("point is not on the cubic")
    s = sum(c**2 for c in coords)
    y = [c**2 - s / 6 for c in coords]
    if all(v == 0 for v in y):
        raise NotOnVarietyError("duality image undefined at a node of the cubic")
    image = ProjectivePoint(y)
    value = cr_quartic_form().evaluate(image.coords)
    assert value == 0, "duality image must land on the quartic"
    return DualityImage(z, image, value)


def duality_plane_to_line(s: Syntheme) -> bool:
    """Symbolic check: the cubic's plane for s maps into the quartic's line for s."""
    plane = syntheme_plane(s)
    param = plane.parametrization
    nparams = param.cols
    substituted = [MultiPoly.linear_form(row) for row in param.entries]
    squares = [f * f for f in substituted]
    total = sum(squares, MultiPoly.zero(nparams))
    images = [sq - total * Fraction(1, 6) for sq in squares]
    for a, b in s:
        if images[a - 1] != images[b - 1]:
            return False
    return True


# -- cardinal restrictions -------------------------------------------------------


@dataclass(frozen=True)
class CardinalRestriction:
    subset: tuple[int, int, int]
    scale: Fraction
    square_root: MultiPoly  # conic q with restriction = scale * q^2
    chart: LinearMap  # 6 x 4 parametrization of the cardinal 3-plane


def cardinal_tangency_quadric() -> MultiPoly:
    """The classical tangency quadric of the cardinal hyperplane for {1,2,3}."""
    u = [MultiPoly.variable(NVARS, i) for i in range(NVARS)]
    return u[0] * u[1] + u[0] * u[2] + u[1] * u[2] - u[3] * u[4] - u[3] * u[5] - u[4] * u[5]


def cardinal_restriction(subset: Sequence[int]) -> CardinalRestriction:
    """Restrict the quartic to a cardinal 3-plane; must be a perfect square."""
    subset = tuple(sorted(subset))
    rows = [list(ONES), list(cardinal_coefficients(subset))]
    basis = nullspace(rows, NVARS)
    chart = LinearMap([[basis[k][i] for k in range(len(basis))] for i in range(NVARS)])
    restricted = cr_quartic_form().substitute_linear(chart)
    from .exact import perfect_square_factor

    result = perfect_square_factor(restricted)
    if result is None:
        raise AssertionError(
            f"cardinal restriction for {subset} is not a perfect square; model falsified"
        )
    c, q = result
    return CardinalRestriction(subset, c, q, chart)


# -- hyperplane sections -----------------------------------------------------------


@dataclass(frozen=True)
class TropeRecord:
    subset: tuple[int, int, int]
    plane_chart: tuple[tuple[Fraction, ...], ...]  # 4 x 3: plane params -> section chart
    conic: MultiPoly  # in the 3 plane parameters
    scale: Fraction
    incident_nodes: tuple[Syntheme, ...]


@dataclass(frozen=True)
class SectionNode:
    syntheme: Syntheme | None  # None for the tangency node of a tangent section
    ambient: ProjectivePoint  # 6-coordinate representative
    chart_point: ProjectivePoint  # 4-coordinate representative in the section chart
    certificate: NodeCertificate


@dataclass(frozen=True)
class SectionModel:
    """A hyperplane section of the quartic as a nodal surface in P^3."""

    hyperplane: tuple[int, ...]  # primitive integer coefficients, sum zero
    chart: LinearMap  # 6 x 4, columns span {sum=0, hyperplane=0}
    quartic3: MultiPoly  # the restricted quartic in the 4 chart variables
    nodes: tuple[SectionNode, ...]
    tropes: tuple[TropeRecord, ...]

    def incidence_matrix(self) -> tuple[tuple[bool, ...], ...]:
        trope_sets = {t.subset: set(t.incident_nodes) for t in self.tropes}
        return tuple(
            tuple(node.syntheme in trope_sets[t.subset] for t in self.tropes)
            for node in self.nodes
            if node.syntheme is not None
        )

    def to_jsonable(self) -> dict:
        return {
            "hyperplane": list(self.hyperplane),
            "chart": [[str(x) for x in row] for row in self.chart.entries],
            "quartic3": self.quartic3.to_jsonable([f"x{i}" for i in range(4)]),
            "nodes": [
                {
                    "syntheme": None if n.syntheme is None else [list(d) for d in n.syntheme],
                    "ambient": [str(x) for x in n.ambient.coords],
                    "chart_point": [str(x) for x in n.chart_point.coords],
                    "hessian_rank": n.certificate.hessian_rank,
                    "ordinary": n.certificate.is_ordinary,
                }
                for n in self.nodes
            ],
            "tropes": [
                {
                    "subset": list(t.subset),
                    "conic": t.conic.to_jsonable([f"t{i}" for i in range(3)]),
                    "scale": str(t.scale),
                    "incident_nodes": [[list(d) for d in s] for s in t.incident_nodes],
                }
                for t in self.tropes
            ],
        }


def _normalize_hyperplane(coeffs: Sequence) -> tuple[int, ...]:
    """Reduce coefficients modulo the all-ones vector to a primitive integer row."""
    fr = [Fraction(x) for x in coeffs]
    if len(fr) != NVARS:
        raise ValueError("hyperplane needs 6 coefficients")
    mean = sum(fr) / NVARS
    reduced = [x - mean for x in fr]
    if all(x == 0 for x in reduced):
        raise GenericityError("hyperplane proportional to the ambient constraint")
    return tuple(primitive_integer_vector(reduced))


def hyperplane_section(coeffs: Sequence, tangent_at: ProjectivePoint | None = None) -> SectionModel:
    """Section of the quartic by a hyperplane inside {sum u = 0}.

    Checks the genericity conditions exactly and names every violation:
    the hyperplane must avoid the 15 line-intersection points, meet every
    double line in a single point, and be non-tangent there (each of the 15
    points must be an ordinary node of the restricted surface).  With
    `tangent_at`, that point is certified as a sixteenth node.
    """
    hp = _normalize_hyperplane(coeffs)
    form = cr_quartic_form()
    for subset in three_subsets():
        card = primitive_integer_vector(cardinal_coefficients(subset))
        if hp == tuple(card) or hp == tuple(-x for x in card):
            raise GenericityError("hyperplane is a cardinal hyperplane", subset)
    for d in duads():
        pt = duad_point(d)
        if sum(Fraction(a) * b for a, b in zip(hp, pt.coords)) == 0:
            raise GenericityError("hyperplane passes through a line-intersection point", d)
    basis = nullspace([list(ONES), [Fraction(x) for x in hp]], NVARS)
    assert len(basis) == 4
    chart = LinearMap([[basis[k][i] for k in range(len(basis))] for i in range(NVARS)])
    quartic3 = form.substitute_linear(chart)
    surface = Hypersurface(quartic3, ())

    def chart_coords(p6: Sequence[Fraction]) -> ProjectivePoint:
        cols = [[chart.entries[i][j] for j in range(4)] for i in range(NVARS)]
        sol = solve_linear(cols, list(p6))
        assert sol is not None, "point must lie in the section chart"
        return ProjectivePoint(sol)

    nodes: list[SectionNode] = []
    for s in synthemes():
        line = syntheme_line(s)
        param = line.parametrization
        a = [
            sum(Fraction(hp[i]) * param.entries[i][j] for i in range(NVARS))
            for j in range(2)
        ]
        if a[0] == 0 and a[1] == 0:
            raise GenericityError("hyperplane contains a double line", s)
        t = (a[1], -a[0])
        p6 = [
            param.entries[i][0] * t[0] + param.entries[i][1] * t[1] for i in range(NVARS)
        ]
        ambient = ProjectivePoint(p6)
        xp = chart_coords(ambient.coords)
        cert = certify_ordinary_node(surface, xp)
        if isinstance(cert, SmoothPointFailure):
            raise GenericityError("section is smooth where a node was expected", s)
        if not cert.is_ordinary:
            raise GenericityError("hyperplane tangent to the quartic on a double line", s)
        nodes.append(SectionNode(s, ambient, xp, cert))
    if len({n.chart_point for n in nodes}) != len(nodes):
        raise GenericityError("two double lines meet the hyperplane in the same point")

    if tangent_at is not None:
        ambient = tangent_at
        xp = chart_coords(ambient.coords)
        cert = certify_ordinary_node(surface, xp)
        if isinstance(cert, SmoothPointFailure):
            raise GenericityError("tangency point is not a node of the section")
        if not cert.is_ordinary:
            raise GenericityError("degenerate tangency at the section point")
        nodes.append(SectionNode(None, ambient, xp, cert))

    from .exact import perfect_square_factor

    tropes: list[TropeRecord] = []
    for subset in three_subsets():
        rows = [list(ONES), [Fraction(x) for x in hp], list(cardinal_coefficients(subset))]
        if rank_rational(rows) != 3:
            raise GenericityError("hyperplane coincides with a cardinal hyperplane", subset)
        pbasis = nullspace(rows, NVARS)
        plane6 = LinearMap([[pbasis[k][i] for k in range(len(pbasis))] for i in range(NVARS)])
        restricted = form.substitute_linear(plane6)
        sq = perfect_square_factor(restricted)
        assert sq is not None, "restriction to a cardinal plane must be a perfect square"
        scale, conic = sq
        # plane parameters -> section chart coordinates (4 x 3 matrix)
        cols = [[chart.entries[i][j] for j in range(4)] for i in range(NVARS)]
        plane_chart = []
        for j in range(3):
            col6 = [plane6.entries[i][j] for i in range(NVARS)]
            sol = solve_linear(cols, col6)
            assert sol is not None
            plane_chart.append(sol)
        plane_chart_t = tuple(
            tuple(plane_chart[j][i] for j in range(3)) for i in range(4)
        )
        card = cardinal_coefficients(subset)
        incident = []
        for node in nodes:
            on_plane = sum(a * b for a, b in zip(card, node.ambient.coords)) == 0
            if node.syntheme is None:
                if on_plane:
                    raise GenericityError("tangency point lies on a cardinal plane", subset)
                continue
            if on_plane:
                incident.append(node.syntheme)
                # the node must sit on the trope conic itself
                sol = solve_linear(
                    [list(row) for row in plane_chart_t], list(node.chart_point.coords)
                )
                assert sol is not None, "incident node must lie on the trope plane"
                assert conic.evaluate(sol) == 0, "incident node must lie on the trope conic"
        expected = {s for s in synthemes() if all(len(set(subset) & set(d)) == 1 for d in s)}
        if set(incident) != expected:
            raise GenericityError("trope incidence differs from the matching rule", subset)
        tropes.append(
            TropeRecord(subset, plane_chart_t, conic, scale, tuple(sorted(incident)))
        )

    return SectionModel(hp, chart, quartic3, tuple(nodes), tuple(tropes))


def tangent_section(q: ProjectivePoint) -> SectionModel:
    """Section by the tangent hyperplane at a smooth rational point: 16 nodes."""
    form = cr_quartic_form()
    if sum(q.coords) != 0:
        raise NotOnVarietyError("point violates the ambient constraint")
    if form.evaluate(q.coords) != 0:
        raise NotOnVarietyError("point is not on the quartic")
    grad = [g.evaluate(q.coords) for g in form.gradient()]
    mults = _constrained_gradient_multipliers(grad, (ONES,))
    if mults is not None:
        raise NotOnVarietyError("point is singular on the quartic")
    return hyperplane_section(grad, tangent_at=q)


# -- finite-field scans --------------------------------------------------------


def _projective_reps_constrained(p: int):
    """Canonical representatives of points in P^5(F_p) with coordinate sum zero."""
    # the first five coordinates determine the sixth; enumerate their
    # canonical P^4 representatives (first nonzero coordinate equal to 1)
    for k in range(5):
        for combo in itertools.product(range(p), repeat=4 - k):
            v = [0] * NVARS
            v[k] = 1
            for idx, val in enumerate(combo):
                v[k + 1 + idx] = val
            v[5] = (-sum(v[:5])) % p
            yield tuple(v)


def _projective_reps(p: int, n: int):
    """Canonical representatives of P^{n-1}(F_p): first nonzero coordinate 1."""
    for k in range(n):
        for combo in itertools.product(range(p), repeat=n - 1 - k):
            v = [0] * n
            v[k] = 1
            for idx, val in enumerate(combo):
                v[k + 1 + idx] = val
            yield tuple(v)


def singular_scan_fp(target, p: int) -> list[tuple[int, ...]]:
    """Exhaustive list of F_p singular points, deduplicated canonically.

    For a constrained hypersurface a point is singular when the gradient is
    proportional to the constraint direction; for a section surface in P^3
    the gradient must vanish outright.  Primes below 5 and primes dividing
    any coefficient denominator are rejected as bad.
    """
    if p < 5:
        raise ValueError("bad prime: need p >= 5")
    if isinstance(target, Hypersurface):
        if target.ambient_constraints != (ONES,):
            raise ValueError("scan supports the sum-zero ambient constraint")
        try:
            fp = target.form.mod_p(p)
        except ValueError as exc:
            raise ValueError(f"bad prime: {exc}") from exc
        partials = [fp.partial(i) for i in range(NVARS)]
        found = []
        for v in _projective_reps_constrained(p):
            if fp.evaluate(v):
                continue
            g = [gi.evaluate(v) for gi in partials]
            if all(x == g[0] for x in g):  # gradient parallel to (1,...,1)
                found.append(v)
        return found
    if isinstance(target, SectionModel):
        try:
            fp = target.quartic3.mod_p(p)
        except ValueError as exc:
            raise ValueError(f"bad prime: {exc}") from exc
        partials = [fp.partial(i) for i in range(4)]
        found = []
        for v in _projective_reps(p, 4):
            if fp.evaluate(v):
                continue
            if all(gi.evaluate(v) == 0 for gi in partials):
                found.append(v)
        return found
    raise TypeError("scan target must be a Hypersurface or SectionModel")


# -- rational point sampling ------------------------------------------------------


def plane_point(s: Syntheme, params: Sequence) -> list[Fraction]:
    """Point of the cubic's plane for syntheme s with the given 3 parameters."""
    plane = syntheme_plane(s)
    return plane.parametrization.apply(list(params))


def sample_smooth_cubic_point(
    rng: random.Random, max_height: int = 50, avoid_planes: bool = False
) -> ProjectivePoint:
    """Seeded chord construction: the third intersection of a line through
    two random plane points is a rational point of the cubic.

    Retries with growing coefficient height until the point is smooth (and,
    if requested, off all 15 planes); heights are capped by `max_height`.
    """
    form = segre_form()
    all_synthemes = synthemes()
    planes = [syntheme_plane(s) for s in all_synthemes]
    height = 3
    for attempt in range(400):
        if attempt and attempt % 40 == 0:
            height = min(height + 4, max_height)
        s1, s2 = rng.sample(all_synthemes, 2)
        pa = plane_point(s1, [Fraction(rng.randint(-height, height)) for _ in range(3)])
        pb = plane_point(s2, [Fraction(rng.randint(-height, height)) for _ in range(3)])
        if all(x == 0 for x in pa) or all(x == 0 for x in pb):
            continue
        chord = LinearMap([[pa[i], pb[i]] for i in range(NVARS)])
        cubic = form.substitute_linear(chord)  # binary cubic in (alpha, beta)
        c21 = cubic.terms.get((2, 1), Fraction(0))
        c12 = cubic.terms.get((1, 2), Fraction(0))
        if cubic.terms.get((3, 0)) or cubic.terms.get((0, 3)):
            continue  # endpoints not on the cubic: degenerate sample
        if c21 == 0:
            continue
        coords = [pa[i] * c12 - pb[i] * c21 for i in range(NVARS)]
        if all(x == 0 for x in coords):
            continue
        point = ProjectivePoint(coords)
        grad = [g.evaluate(point.coords) for g in form.gradient()]
        if _constrained_gradient_multipliers(grad, (ONES,)) is not None:
            continue  # singular (a node)
        if avoid_planes and any(pl.contains_point(point) for pl in planes):
            continue
        return point
    raise RuntimeError("failed to sample a smooth rational point of the cubic")


def sample_tangent_section(rng: random.Random, max_height: int = 50) -> SectionModel:
    """Seeded search for a smooth quartic point whose tangent section certifies."""
    lines = [syntheme_line(s) for s in synthemes()]
    for _ in range(60):
        z = sample_smooth_cubic_point(rng, max_height, avoid_planes=True)
        image = duality_image(z)
        y = image.point
        if any(l.contains_point(y) for l in lines):
            continue
        try:
            return tangent_section(y)
        except (GenericityError, NotOnVarietyError):
            continue
    raise RuntimeError("failed to find a certifying tangent section")
