import itertools

import pytest

from quartic15.configs import trope_node_sets
from quartic15.nodal_surface import C_SET, NODES
from quartic15.pentads import (
    all_pentads,
    classify,
    classify_all,
    goepel_pentads,
    graph_criterion,
    graph_criterion_crosscheck,
    orbit_table,
    pencil_classes,
    permute_pentad,
    triple_criterion,
)

TYPE_II = ((1, 5), (2, 3), (3, 4), (3, 5), (4, 5))


def test_total_count():
    assert len(all_pentads()) == 3003


def test_goepel_pentads_are_five_stars():
    gs = goepel_pentads()
    assert len(gs) == 6
    assert tuple(sorted(C_SET)) in gs
    for p in gs:
        # a five-star: some vertex lies on every edge
        common = set.intersection(*[set(d) for d in p])
        assert len(common) == 1


def test_goepel_independent_oracle():
    # direct enumeration: pentads where every trope meets in at most 2 nodes
    tropes = list(trope_node_sets().values())
    count = 0
    for p in itertools.combinations(NODES, 5):
        s = set(p)
        if all(len(s & t) <= 2 for t in tropes):
            count += 1
    assert count == 6 == len(goepel_pentads())


def test_type_ii_example():
    cls = classify(TYPE_II)
    assert cls.admissible and not cls.goepel
    assert cls.trope_triple_count == 3
    labels = sorted(t[0] for t in cls.trope_triples)
    assert labels == [(1, 2), (1, 5), (2, 3)]


def test_inadmissible_four_on_trope():
    # four nodes of the trope for (1,2) plus a fifth node
    trope = sorted(trope_node_sets()[(1, 2)])
    pentad = tuple(sorted(trope[:4] + [(1, 3)]))
    cls = classify(pentad)
    assert not cls.admissible and not cls.goepel
    assert cls.trope_triples  # the contained triples are recorded


def test_admissibility_is_orbit_invariant():
    table = orbit_table()
    assert sum(o.size for o in table) == 3003
    goepel_orbits = [o for o in table if o.goepel]
    assert len(goepel_orbits) == 1 and goepel_orbits[0].size == 6


def test_orbit_table_counts():
    table = orbit_table()
    admissible_total = sum(o.size for o in table if o.admissible)
    assert admissible_total == sum(1 for c in classify_all().values() if c.admissible)
    # the type-II pentad's orbit carries 3 trope-triples
    rep_counts = {o.representative: o.trope_triple_count for o in table}
    rep = min(permute_pentad(g, TYPE_II) for g in __import__("quartic15.configs", fromlist=["s6_elements"]).s6_elements())
    assert rep_counts[rep] == 3


def test_orbit_table_jsonable():
    from quartic15.pentads import orbit_table_jsonable

    rows = orbit_table_jsonable()
    assert sum(r["size"] for r in rows) == 3003
    assert all(
        set(r) == {"orbit_id", "representative", "size", "admissible", "goepel",
                   "trope_triple_count", "fiber_hints"}
        for r in rows
    )
    import json

    json.dumps(rows)  # serializable as-is


def test_graph_criterion_readings_disagree_on_goepel():
    goepel = tuple(sorted(C_SET))
    assert classify(goepel).admissible
    assert not graph_criterion(goepel, "exists")
    assert not graph_criterion(goepel, "forall")


def test_triple_criterion_examples():
    # triangle: {34,35,45} within the type-II pentad is on a trope
    assert triple_criterion(TYPE_II, ((3, 4), (3, 5), (4, 5)))
    # chain 1-5-4-3 is not
    assert not triple_criterion(TYPE_II, ((1, 5), (4, 5), (3, 4)))
    # segment + chain: {15, 23, 34}
    assert triple_criterion(TYPE_II, ((1, 5), (2, 3), (3, 4)))


def test_crosscheck_report():
    rep = graph_criterion_crosscheck()
    assert rep.total == 3003
    assert rep.triple_rule_agrees
    # both one-edge readings disagree with incidence admissibility somewhere
    assert rep.agree_exists < 3003
    assert rep.agree_forall < 3003
    # the Goepel orbit (admissible, but a star graph never leaves a triangle)
    # appears among the mismatches of both readings; its orbit representative
    # is the star at vertex 1
    goepel_rep = ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6))
    assert goepel_rep in [m[0] for m in rep.mismatch_orbits_exists]
    assert goepel_rep in [m[0] for m in rep.mismatch_orbits_forall]


def test_pencil_classes_goepel():
    data = pencil_classes(tuple(sorted(C_SET)))
    assert len(data.classes) == 5
    assert data.half_sum.norm() == 10


def test_pencil_classes_type_ii():
    data = pencil_classes(TYPE_II)
    assert len(data.degenerations) == 3


def test_geometric_admissibility_crosscheck():
    from quartic15.pentads import geometric_admissibility_crosscheck
    from quartic15.varieties import hyperplane_section

    report = geometric_admissibility_crosscheck(hyperplane_section((1, 2, 3, 5, 7, 11)))
    assert report.agrees
    assert report.coplanar_quadruples == 150 == 10 * 15  # C(6,4) per trope
    assert report.accidental_quadruples == 0
    assert report.geometric_admissible == report.combinatorial_admissible == 1593


def test_pencil_classes_every_admissible_orbit():
    # the exact pencil identities hold for one representative per orbit
    for o in orbit_table():
        if o.admissible:
            data = pencil_classes(o.representative)
            assert data.half_sum.norm() == 10
            assert len(data.degenerations) == o.trope_triple_count


def test_pencil_classes_reject_inadmissible():
    trope = sorted(trope_node_sets()[(1, 2)])
    pentad = tuple(sorted(trope[:4] + [(1, 3)]))
    with pytest.raises(ValueError, match="not admissible"):
        pencil_classes(pentad)
