"""Finite combinatorics of the set {1,...,6}.

Duads, synthemes and totals, the marked conjugacy graph of an order-2
congruence, trope incidence, orbits of the symmetric group S6, and a
backtracking isomorphism test for small incidence structures.

Canonical labels: duads are sorted pairs, synthemes sorted triples of
sorted pairs, 3-subsets are represented by whichever of {set, complement}
contains the smallest element.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Optional

Duad = tuple[int, int]
Syntheme = tuple[Duad, Duad, Duad]
Total = tuple[Syntheme, ...]
Perm = tuple[int, ...]  # perm[i-1] = image of i, on {1,...,6}

POINTS = (1, 2, 3, 4, 5, 6)


def duads() -> list[Duad]:
    return [tuple(sorted(d)) for d in itertools.combinations(POINTS, 2)]


def synthemes() -> list[Syntheme]:
    """All perfect matchings of {1,...,6} into three duads."""
    result = []

    def extend(remaining: tuple[int, ...], acc: tuple[Duad, ...]):
        if not remaining:
            result.append(tuple(sorted(acc)))
            return
        a = remaining[0]
        for b in remaining[1:]:
            rest = tuple(x for x in remaining if x not in (a, b))
            extend(rest, acc + ((a, b),))

    extend(POINTS, ())
    return sorted(set(result))


def totals() -> list[Total]:
    """The six sets of 5 pairwise-disjoint synthemes covering all duads."""
    synth = synthemes()
    result: list[Total] = []

    def extend(start: int, acc: list[Syntheme], used: set[Duad]):
        if len(acc) == 5:
            result.append(tuple(acc))
            return
        for i in range(start, len(synth)):
            s = synth[i]
            if any(d in used for d in s):
                continue
            extend(i + 1, acc + [s], used | set(s))

    extend(0, [], set())
    return result


def three_subsets() -> list[tuple[int, int, int]]:
    """The 10 cardinality-3 subsets up to complement; representative contains 1."""
    return [tuple(sorted((1,) + pair)) for pair in itertools.combinations(range(2, 7), 2)]


def canonical_three_subset(s: Iterable[int]) -> tuple[int, int, int]:
    s = tuple(sorted(s))
    comp = tuple(x for x in POINTS if x not in s)
    return s if min(s) < min(comp) else comp


def apply_perm_point(g: Perm, x: int) -> int:
    return g[x - 1]

def apply_perm_duad(g: Perm, d: Duad) -> Duad:
    return tuple(sorted((g[d[0] - 1], g[d[1] - 1])))


def apply_perm_duad_set(g: Perm, ds: Iterable[Duad]) -> tuple[Duad, ...]:
    return tuple(sorted(apply_perm_duad(g, d) for d in ds))


def apply_perm_syntheme(g: Perm, s: Syntheme) -> Syntheme:
    return apply_perm_duad_set(g, s)


def s6_elements() -> list[Perm]:
    return list(itertools.permutations(POINTS))


S6_GENERATORS: tuple[Perm, ...] = (
    (2, 1, 3, 4, 5, 6),
    (1, 3, 2, 4, 5, 6),
    (1, 2, 4, 3, 5, 6),
    (1, 2, 3, 5, 4, 6),
    (1, 2, 3, 4, 6, 5),
)


def trope_node_sets() -> dict[Duad, frozenset[Duad]]:
    """Node sets of the 10 trope-conics, nodes indexed by duads of [1,6].

    The conic attached to a duad (a,b) of [1,5] passes through the node (a,b),
    the three nodes given by duads of [1,5]\\{a,b}, and the nodes (a,6),(b,6).
    The ten sets form a single S6-orbit.
    """
    result = {}
    for a, b in itertools.combinations(range(1, 6), 2):
        rest = [x for x in range(1, 6) if x not in (a, b)]
        nodes = {(a, b), (a, 6), (b, 6)}
        nodes.update(itertools.combinations(rest, 2))
        result[(a, b)] = frozenset(nodes)
    return result


# -- marked graphs -----------------------------------------------------------


@dataclass(frozen=True)
class MarkedGraph:
    """Vertices with integer marks h(x); edges carry multiplicities."""

    vertices: tuple[Hashable, ...]
    marks: dict[Hashable, int]
    edges: dict[frozenset, int]
    complete: bool = True

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v) -> set:
        return {w for e in self.edges for w in e if v in e} - {v}

    def girth(self) -> Optional[int]:
        best = None
        verts = list(self.vertices)
        adj = {v: self.neighbors(v) for v in verts}
        for start in verts:
            # BFS shortest cycle through start
            dist = {start: 0}
            parent = {start: None}
            queue = [start]
            while queue:
                u = queue.pop(0)
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        cycle = dist[u] + dist[w] + 1
                        if best is None or cycle < best:
                            best = cycle
        return best


TABLE1_COLUMNS: dict[str, dict[int, int]] = {
    "(2,2)": {1: 16},
    "(2,3)": {1: 10, 2: 5},
    "(2,4)": {1: 6, 2: 6, 3: 2},
    "(2,5)": {1: 3, 2: 6, 3: 3, 4: 1},
    "(2,6)_I": {1: 1, 2: 4, 3: 6, 5: 1},
    "(2,6)_II": {2: 8, 4: 4},
    "(2,7)": {3: 10, 6: 1},
}


def conjugacy_graph(n: int, variant: str | None = None) -> MarkedGraph:
    """Marked conjugacy graph of a bidegree-(2,n) congruence.

    n=3 is fully determined: Petersen graph on the 10 duads of [1,5] with
    mark 1, K(5) on the vertices (a6) with mark 2, and cross edges
    (ab)-(a6), (ab)-(b6).  Stored edge multiplicity is max(h+h'-n, 0).
    For other n only the vertex marks (from the singular-point table) and
    the forced edges with h+h' > n are known; such graphs carry
    complete=False.
    """
    if n == 3:
        l_vertices = [tuple(sorted(d)) for d in itertools.combinations(range(1, 6), 2)]
        c_vertices = [(a, 6) for a in range(1, 6)]
        marks = {v: 1 for v in l_vertices}
        marks.update({v: 2 for v in c_vertices})
        edges: dict[frozenset, int] = {}
        for u, v in itertools.combinations(l_vertices, 2):
            if not set(u) & set(v):  # Petersen adjacency: disjoint duads
                edges[frozenset((u, v))] = 0
        for u, v in itertools.combinations(c_vertices, 2):  # K(5)
            edges[frozenset((u, v))] = 1
        for a, b in l_vertices:
            edges[frozenset(((a, b), (a, 6)))] = 0
            edges[frozenset(((a, b), (b, 6)))] = 0
        return MarkedGraph(tuple(l_vertices + c_vertices), marks, edges, complete=True)
    key = f"(2,{n})"
    if n == 6:
        if variant not in ("I", "II"):
            raise ValueError("n=6 has two singular-point columns; pass variant='I' or 'II'")
        key = f"(2,6)_{variant}"
    if key not in TABLE1_COLUMNS:
        raise ValueError(f"unsupported class n={n}")
    col = TABLE1_COLUMNS[key]
    vertices = []
    marks = {}
    for h in sorted(col):
        for i in range(col[h]):
            v = (h, i)
            vertices.append(v)
            marks[v] = h
    edges = {}
    for u, v in itertools.combinations(vertices, 2):
        mult = marks[u] + marks[v] - n
        if mult > 0:  # forced conjugate pairs only
            edges[frozenset((u, v))] = mult
    return MarkedGraph(tuple(vertices), marks, edges, complete=False)


# -- incidence structures ----------------------------------------------------


@dataclass(frozen=True)
class IncidenceStructure:
    points: tuple[Hashable, ...]
    blocks: tuple[Hashable, ...]
    matrix: tuple[tuple[bool, ...], ...]  # rows = points, cols = blocks

    def point_degree(self, i: int) -> int:
        return sum(self.matrix[i])

    def block_degree(self, j: int) -> int:
        return sum(row[j] for row in self.matrix)

    def is_configuration(self, r: int, k: int) -> bool:
        return all(self.point_degree(i) == r for i in range(len(self.points))) and all(
            self.block_degree(j) == k for j in range(len(self.blocks))
        )

    def to_jsonable(self) -> dict:
        return {
            "points": [str(p) for p in self.points],
            "blocks": [str(b) for b in self.blocks],
            "matrix": [[bool(x) for x in row] for row in self.matrix],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True)


def trope_incidence_model() -> IncidenceStructure:
    """Nodes (synthemes) vs trope planes (3-subsets): type (15_4, 10_6).

    A syntheme is on the block {a,b,c} iff it matches {a,b,c} with its
    complement, i.e. every duad has one endpoint on each side.
    """
    pts = synthemes()
    blocks = three_subsets()
    matrix = []
    for s in pts:
        row = []
        for blk in blocks:
            side = set(blk)
            row.append(all(len(side & set(d)) == 1 for d in s))
        matrix.append(tuple(row))
    return IncidenceStructure(tuple(pts), tuple(blocks), tuple(matrix))


def cremona_richmond_model() -> IncidenceStructure:
    """Intersection points (duads) vs double lines (synthemes): type (15_3)."""
    pts = duads()
    blocks = synthemes()
    matrix = tuple(
        tuple(d in s for s in blocks) for d in pts
    )
    return IncidenceStructure(tuple(pts), tuple(blocks), matrix)


# -- S6 orbits ---------------------------------------------------------------


@dataclass(frozen=True)
class Orbit:
    representative: Hashable
    elements: tuple
    stabilizer_order: int

    @property
    def size(self) -> int:
        return len(self.elements)


def s6_orbits(action: Callable[[Perm, Hashable], Hashable], elements: Iterable) -> list[Orbit]:
    """Orbit partition with stabilizer orders; checks the action axioms.

    `action(g, x)` must define a left action of S6 on the elements.  The
    identity and compatibility axioms are checked on the generators, and the
    orbit-stabilizer identity |orbit|*|stab| = 720 is verified for every orbit.
    """
    elements = list(elements)
    identity = POINTS
    for x in elements[: min(3, len(elements))]:
        if action(identity, x) != x:
            raise ValueError("identity permutation does not act trivially")
        for g in S6_GENERATORS[:2]:
            for h in S6_GENERATORS[:2]:
                gh = tuple(g[h[i] - 1] for i in range(6))
                if action(gh, x) != action(g, action(h, x)):
                    raise ValueError("not a group action (compatibility fails)")
    element_set = set(elements)
    seen: set = set()
    orbits = []
    full_group = s6_elements()
    for x in elements:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in S6_GENERATORS:
                z = action(g, y)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        if not orbit <= element_set:
            raise ValueError("element set is not closed under the action")
        rep = min(orbit)
        stab = sum(1 for g in full_group if action(g, rep) == rep)
        if stab * len(orbit) != 720:
            raise AssertionError("orbit-stabilizer identity failed")
        orbits.append(Orbit(rep, tuple(sorted(orbit)), stab))
        seen |= orbit
    return orbits


# -- incidence isomorphism ---------------------------------------------------


def incidence_isomorphic(
    a: IncidenceStructure, b: IncidenceStructure
) -> Optional[tuple[dict, dict]]:
    """Point/block relabeling of `a` onto `b`, or None.

    Backtracking over point images; each partially-mapped block keeps the set
    of blocks of `b` it could still land on, which prunes hard enough for the
    15-point instances used here.
    """
    np_, nb = len(a.points), len(a.blocks)
    if (np_, nb) != (len(b.points), len(b.blocks)):
        return None

    def signature(struct, i):
        degs = sorted(
            sum(row[j] for row in struct.matrix)
            for j in range(len(struct.blocks))
            if struct.matrix[i][j]
        )
        return (sum(struct.matrix[i]), tuple(degs))

    sig_a = [signature(a, i) for i in range(np_)]
    sig_b = [signature(b, i) for i in range(np_)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    blocks_a = [frozenset(i for i in range(np_) if a.matrix[i][j]) for j in range(nb)]
    blocks_b = [frozenset(i for i in range(np_) if b.matrix[i][j]) for j in range(nb)]
    block_lookup = {blk: j for j, blk in enumerate(blocks_b)}
    if len(block_lookup) != nb or len(set(blocks_a)) != nb:
        return None  # repeated blocks: out of scope for these instances
    a_blocks_of = [[j for j in range(nb) if i in blocks_a[j]] for i in range(np_)]

    mapping: dict[int, int] = {}
    used: set[int] = set()
    # candidate b-block indices for each a-block, narrowed as points are mapped
    bcand: list[set[int]] = [
        {j for j in range(nb) if len(blocks_b[j]) == len(blocks_a[k])}
        for k in range(nb)
    ]

    def choose_next() -> Optional[int]:
        best, best_score = None, None
        for i in range(np_):
            if i in mapping:
                continue
            constrained = sum(1 for k in a_blocks_of[i] if any(x in mapping for x in blocks_a[k]))
            score = (-constrained, i)
            if best_score is None or score < best_score:
                best, best_score = i, score
        return best

    def candidates_for(i: int) -> list[int]:
        cands = {j for j in range(np_) if j not in used and sig_b[j] == sig_a[i]}
        for k in a_blocks_of[i]:
            allowed = set()
            for jb in bcand[k]:
                allowed |= blocks_b[jb]
            cands &= allowed
            if not cands:
                break
        return sorted(cands)

    def backtrack() -> bool:
        if len(mapping) == np_:
            return True
        i = choose_next()
        for j in candidates_for(i):
            narrowed = []
            ok = True
            for k in a_blocks_of[i]:
                new = {jb for jb in bcand[k] if j in blocks_b[jb]}
                if not new:
                    ok = False
                    break
                narrowed.append((k, bcand[k]))
                bcand[k] = new
            if ok:
                mapping[i] = j
                used.add(j)
                if backtrack():
                    return True
                del mapping[i]
                used.remove(j)
            for k, old in reversed(narrowed):
                bcand[k] = old
        return False

    if not backtrack():
        return None
    point_map = {a.points[i]: b.points[j] for i, j in mapping.items()}
    block_map = {}
    for jdx, blk in enumerate(blocks_a):
        img = frozenset(mapping[x] for x in blk)
        block_map[a.blocks[jdx]] = b.blocks[block_lookup[img]]
    return point_map, block_map
