"""Classification of the 3003 pentads of nodes.

A pentad (five nodes, labelled by duads) is admissible when no trope-conic
contains four of them; it is a Goepel pentad when no trope-conic contains
even three.  This module classifies every pentad, computes the orbit table
under node relabeling, evaluates the ambiguous graph-theoretic admissibility
criterion under its possible readings, and materializes the elliptic-pencil
divisor classes with their exact degeneration identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .configs import Duad, S6_GENERATORS, trope_node_sets
from .nodal_surface import (
    E,
    ETA,
    NODES,
    DivisorClass,
    is_pic_integral,
    sigma_class,
)

Pentad = tuple[Duad, ...]

TROPES = trope_node_sets()  # conic label (duad of [1,5]) -> frozenset of 6 nodes


@dataclass(frozen=True)
class PentadClass:
    pentad: Pentad
    admissible: bool
    goepel: bool
    trope_triples: tuple[tuple[Duad, tuple[Duad, Duad, Duad]], ...]
    gamma_edges: Pentad  # the pentad viewed as a 5-edge graph on {1,...,6}

    @property
    def trope_triple_count(self) -> int:
        return len(self.trope_triples)


def classify(pentad: Sequence[Duad]) -> PentadClass:
    p = tuple(sorted(pentad))
    if len(p) != 5 or len(set(p)) != 5:
        raise ValueError("a pentad consists of five distinct node labels")
    pset = set(p)
    triples = []
    admissible = True
    for label, nodes in sorted(TROPES.items()):
        meet = sorted(pset & nodes)
        if len(meet) >= 4:
            admissible = False
        for triple in itertools.combinations(meet, 3):
            triples.append((label, triple))
    goepel = admissible and not triples
    return PentadClass(p, admissible, goepel, tuple(triples), p)


def all_pentads() -> list[Pentad]:
    return [tuple(sorted(c)) for c in itertools.combinations(NODES, 5)]


def classify_all() -> dict[Pentad, PentadClass]:
    return dict(_classify_all_cached())


@lru_cache(maxsize=1)
def _classify_all_cached() -> tuple[tuple[Pentad, PentadClass], ...]:
    return tuple((p, classify(p)) for p in all_pentads())


# -- orbits --------------------------------------------------------------------


def permute_pentad(g: Sequence[int], p: Pentad) -> Pentad:
    return tuple(sorted(tuple(sorted((g[a - 1], g[b - 1]))) for a, b in p))


@dataclass(frozen=True)
class PentadOrbit:
    orbit_id: int
    representative: Pentad
    size: int
    admissible: bool
    goepel: bool
    trope_triple_count: int
    fiber_hints: tuple[str, ...]  # one hint per pencil of the representative


def pencil_fiber_hints(cls: PentadClass) -> tuple[str, ...]:
    """Combinatorial degeneration hints for the five pencils of a pentad.

    For the pencil attached to node x_i, each trope-triple through x_i
    contributes a D4-type reducible fiber; two triples through x_i whose
    remaining pairs share a node merge bookkeeping into a single fiber
    pattern, and complementary pairs indicate a D6-type fiber.  Goepel
    pentads carry one D4-type fiber per pencil through the trope-quartic
    class instead.  These are derived hints, not certified fiber types.
    """
    hints = []
    for x in cls.pentad:
        pairs = [
            tuple(sorted(set(t[1]) - {x})) for t in cls.trope_triples if x in t[1]
        ]
        if cls.goepel:
            hints.append("D4(quartic)")
            continue
        if not pairs:
            hints.append("generic")
            continue
        rest = [y for y in cls.pentad if y != x]
        tags = []
        used = set()
        for i, pr in enumerate(pairs):
            if i in used:
                continue
            comp = tuple(sorted(set(rest) - set(pr)))
            if comp in pairs[i + 1 :]:
                tags.append("D6")
                used.add(pairs.index(comp, i + 1))
            else:
                tags.append("D4")
        hints.append("+".join(sorted(tags)))
    return tuple(hints)


def orbit_partition() -> tuple[list[tuple[Pentad, frozenset[Pentad]]], dict[Pentad, Pentad]]:
    """Orbits under node relabeling and the pentad -> representative map."""
    seen: set[Pentad] = set()
    orbits = []
    rep_of: dict[Pentad, Pentad] = {}
    for p in all_pentads():
        if p in seen:
            continue
        orbit = {p}
        frontier = [p]
        while frontier:
            q = frontier.pop()
            for g in S6_GENERATORS:
                img = permute_pentad(g, q)
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        rep = min(orbit)
        orbits.append((rep, frozenset(orbit)))
        for q in orbit:
            rep_of[q] = rep
        seen |= orbit
    return orbits, rep_of


def orbit_table() -> list[PentadOrbit]:
    """S6 orbits of all pentads with their classification data."""
    classes = classify_all()
    orbits, _ = orbit_partition()
    table: list[PentadOrbit] = []
    for rep, orbit in orbits:
        cls = classes[rep]
        # classification must be constant on the orbit
        for q in orbit:
            cq = classes[q]
            assert (cq.admissible, cq.goepel, cq.trope_triple_count) == (
                cls.admissible,
                cls.goepel,
                cls.trope_triple_count,
            ), "pentad classification must be an orbit invariant"
        table.append(
            PentadOrbit(
                orbit_id=len(table),
                representative=rep,
                size=len(orbit),
                admissible=cls.admissible,
                goepel=cls.goepel,
                trope_triple_count=cls.trope_triple_count,
                fiber_hints=pencil_fiber_hints(cls),
            )
        )
    return table


def orbit_table_jsonable() -> list[dict]:
    return [
        {
            "orbit_id": o.orbit_id,
            "representative": [list(d) for d in o.representative],
            "size": o.size,
            "admissible": o.admissible,
            "goepel": o.goepel,
            "trope_triple_count": o.trope_triple_count,
            "fiber_hints": list(o.fiber_hints),
        }
        for o in orbit_table()
    ]


def goepel_pentads() -> list[Pentad]:
    return [p for p, c in classify_all().items() if c.goepel]


# -- the graph criterion -----------------------------------------------------------


def _components(edges: Sequence[Duad]) -> list[set[Duad]]:
    remaining = set(edges)
    comps = []
    while remaining:
        e = remaining.pop()
        comp = {e}
        grew = True
        while grew:
            grew = False
            for f in list(remaining):
                if any(set(f) & set(g) for g in comp):
                    comp.add(f)
                    remaining.remove(f)
                    grew = True
        comps.append(comp)
    return comps


def _is_triangle(edges: Iterable[Duad]) -> bool:
    es = list(edges)
    verts = set(v for e in es for v in e)
    return len(es) == 3 and len(verts) == 3


def _is_triangle_plus_segment(edges: Sequence[Duad]) -> bool:
    """Exactly a 3-cycle plus one vertex-disjoint edge (4 edges in all)."""
    if len(edges) != 4:
        return False
    comps = _components(edges)
    if len(comps) != 2:
        return False
    comps.sort(key=len)
    return len(comps[0]) == 1 and _is_triangle(comps[1])


def graph_criterion(pentad: Pentad, reading: str) -> bool:
    """The classical one-edge-deletion criterion under a chosen reading.

    reading='exists': some edge deletion leaves a disjoint triangle+segment;
    reading='forall': every edge deletion does.
    """
    results = [
        _is_triangle_plus_segment([e for e in pentad if e != edge]) for edge in pentad
    ]
    if reading == "exists":
        return any(results)
    if reading == "forall":
        return all(results)
    raise ValueError(f"unknown reading {reading!r}")


def triple_criterion(pentad: Pentad, triple: Sequence[Duad]) -> bool:
    """Two-edge-deletion criterion for 'these three nodes lie on a trope-conic':
    the three remaining edges form a disconnected triangle, or a disconnected
    union of a segment and a chain."""
    edges = list(triple)
    comps = _components(edges)
    if len(comps) == 1:
        return _is_triangle(edges)  # a triangle is one component
    if len(comps) == 2:
        comps.sort(key=len)
        return len(comps[0]) == 1 and len(comps[1]) == 2
    return False


@dataclass(frozen=True)
class CriterionReport:
    total: int
    agree_exists: int
    agree_forall: int
    mismatch_orbits_exists: tuple[tuple[Pentad, bool, bool], ...]
    mismatch_orbits_forall: tuple[tuple[Pentad, bool, bool], ...]
    triple_rule_agrees: bool


def graph_criterion_crosscheck() -> CriterionReport:
    """Exhaustive comparison of the graph criterion with incidence admissibility.

    Both readings disagree with the incidence definition (the Goepel five-star
    graph never leaves a triangle after one deletion), so mismatches are
    tallied per orbit rather than asserted away.  The two-edge-deletion rule
    for triples is checked as well; it does agree exactly.
    """
    classes = classify_all()
    _, rep_of = orbit_partition()
    agree_e = agree_f = 0
    mism_e: dict[Pentad, tuple[Pentad, bool, bool]] = {}
    mism_f: dict[Pentad, tuple[Pentad, bool, bool]] = {}
    for p, cls in classes.items():
        ge = graph_criterion(p, "exists")
        gf = graph_criterion(p, "forall")
        if ge == cls.admissible:
            agree_e += 1
        if gf == cls.admissible:
            agree_f += 1
        rep = rep_of[p]
        if ge != cls.admissible and rep not in mism_e:
            mism_e[rep] = (rep, cls.admissible, ge)
        if gf != cls.admissible and rep not in mism_f:
            mism_f[rep] = (rep, cls.admissible, gf)
    triple_ok = True
    for p, cls in classes.items():
        recorded = {tuple(sorted(t[1])) for t in cls.trope_triples}
        for triple in itertools.combinations(p, 3):
            on_trope = tuple(sorted(triple)) in recorded
            if triple_criterion(p, triple) != on_trope:
                triple_ok = False
    return CriterionReport(
        total=len(classes),
        agree_exists=agree_e,
        agree_forall=agree_f,
        mismatch_orbits_exists=tuple(sorted(mism_e.values())),
        mismatch_orbits_forall=tuple(sorted(mism_f.values())),
        triple_rule_agrees=triple_ok,
    )


# -- geometric coplanarity cross-check ----------------------------------------------


@dataclass(frozen=True)
class CoplanarityReport:
    coplanar_quadruples: int
    trope_quadruples: int  # quadruples inside some trope's six nodes
    accidental_quadruples: int
    geometric_admissible: int
    combinatorial_admissible: int

    @property
    def agrees(self) -> bool:
        return (
            self.accidental_quadruples == 0
            and self.geometric_admissible == self.combinatorial_admissible
        )


def geometric_admissibility_crosscheck(section) -> CoplanarityReport:
    """Compare coplanarity-based admissibility on a section with the trope rule.

    On the section surface, four nodes are coplanar exactly when the 4x4
    matrix of their chart coordinates is singular; a pentad is admissible
    when none of its five quadruples is coplanar.  For a sufficiently
    general section the coplanar quadruples are exactly those lying on a
    trope-conic, so the two admissibility counts agree.
    """
    from .exact import primitive_integer_vector
    from .lattice import det_bareiss

    pts = {
        n.syntheme: primitive_integer_vector(n.chart_point.coords)
        for n in section.nodes
        if n.syntheme is not None
    }
    trope_sets = [set(t.incident_nodes) for t in section.tropes]
    synths = sorted(pts)
    coplanar: dict[tuple, bool] = {}
    trope_quads = accidental = 0
    for quad in itertools.combinations(synths, 4):
        flat = det_bareiss([pts[s] for s in quad]) == 0
        coplanar[quad] = flat
        on_trope = any(set(quad) <= ts for ts in trope_sets)
        if flat and on_trope:
            trope_quads += 1
        elif flat:
            accidental += 1
        elif on_trope:
            raise AssertionError("a quadruple on a trope-conic must be coplanar")
    geometric = sum(
        1
        for pent in itertools.combinations(synths, 5)
        if not any(coplanar[q] for q in itertools.combinations(pent, 4))
    )
    combinatorial = sum(1 for c in classify_all().values() if c.admissible)
    return CoplanarityReport(
        coplanar_quadruples=sum(coplanar.values()),
        trope_quadruples=trope_quads,
        accidental_quadruples=accidental,
        geometric_admissible=geometric,
        combinatorial_admissible=combinatorial,
    )


# -- elliptic pencil classes --------------------------------------------------------


@dataclass(frozen=True)
class PencilData:
    pentad: Pentad
    classes: tuple[DivisorClass, ...]  # F_1, ..., F_5
    degenerations: tuple[tuple[Duad, tuple[Duad, Duad, Duad]], ...]
    half_sum: DivisorClass


def pencil_classes(pentad: Sequence[Duad]) -> PencilData:
    """The five elliptic-pencil classes of an admissible pentad.

    Exact checks: each F_i has norm 0 and degree 8, F_i·F_j = 2, every F_i
    splits as two classes of shape eta − E − E − E, half the sum is the
    degree-10 polarization 5*eta − 3*sum_P E, and each trope-triple yields
    the degeneration identity eta − E_i − E_j − E_k = 2*sigma + remaining
    three nodes of that trope.
    """
    cls = classify(pentad)
    if not cls.admissible:
        raise ValueError("pentad is not admissible")
    p = cls.pentad
    zero = DivisorClass.make()
    fs = []
    for x in p:
        f = 2 * ETA - 2 * E[x] - sum((E[y] for y in p if y != x), zero)
        assert f.norm() == 0 and f.degree() == 8 and is_pic_integral(f)
        fs.append(f)
    for i in range(5):
        for j in range(i + 1, 5):
            assert fs[i].dot(fs[j]) == 2
    # each pencil splits into two plane sections through three pentad nodes
    for i, x in enumerate(p):
        others = [y for y in p if y != x]
        a = ETA - E[x] - E[others[0]] - E[others[1]]
        b = ETA - E[x] - E[others[2]] - E[others[3]]
        assert fs[i] == a + b
    half_sum = Fraction(1, 2) * sum(fs, zero)
    expected = 5 * ETA - sum((3 * E[x] for x in p), zero)
    assert half_sum == expected
    assert half_sum.norm() == 10 and is_pic_integral(half_sum)
    # degeneration identities from the trope-triples
    for label, triple in cls.trope_triples:
        rest = sorted(TROPES[label] - set(triple))
        lhs = ETA - sum((E[x] for x in triple), zero)
        rhs = 2 * sigma_class(label) + sum((E[y] for y in rest), zero)
        assert lhs == rhs
    return PencilData(p, tuple(fs), cls.trope_triples, half_sum)
