import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdq import catalog
from gdq.quiver_core import (InvalidInputError, Quiver, SearchBudgetError, TriangulationQuiver,
                             compute_orbit_data, corner_words, cycles_of,
                             enumerate_triangulation_quivers, f_orbit_census, quiver_isomorphic,
                             random_triangulation_quiver, triangulation_quiver_from_words,
                             validate_triangulation_quiver)

from oracles import brute_force_classes, connected


def cyclic_equal(a, b):
    a, b = list(a), list(b)
    return len(a) == len(b) and any(a[k:] + a[:k] == b for k in range(len(a)))


def relabel(tq, rng):
    q = tq.quiver
    vs = list(q.vertices)
    vmap = dict(zip(vs, rng.sample([f"v{k}" for k in range(len(vs))], len(vs))))
    ids = list(q.arrow_ids)
    amap = dict(zip(ids, rng.sample([f"x{k}" for k in range(len(ids))], len(ids))))
    arrows = tuple((amap[a], vmap[s], vmap[t]) for a, s, t in q.arrows)
    f = {amap[a]: amap[b] for a, b in tq.f.items()}
    return TriangulationQuiver(Quiver(tuple(vmap[v] for v in vs), arrows), f), vmap, amap


# validation ------------------------------------------------------------------

def test_triangle_quiver_is_valid():
    tq = catalog.triangle_quiver()
    assert validate_triangulation_quiver(tq.quiver, tq.f).ok


def test_single_vertex_two_loops_rejected_for_vertex_count():
    q = Quiver(("1",), (("a", "1", "1"), ("b", "1", "1")))
    report = validate_triangulation_quiver(q, {"a": "a", "b": "b"})
    assert not report.ok
    assert any("at least 2 vertices" in p for p in report.problems)
    assert not any("s(f(a))" in p or "f^3" in p for p in report.problems)


def test_double_arrows_both_ways_admit_no_f():
    q = Quiver(("1", "2"), (("a", "1", "2"), ("b", "1", "2"), ("c", "2", "1"), ("d", "2", "1")))
    ids = q.arrow_ids
    # oracle: no permutation at all satisfies both axioms
    good = [p for p in itertools.permutations(ids)
            if all(q.source(dict(zip(ids, p))[a]) == q.target(a) for a in ids)
            and all(dict(zip(ids, p))[dict(zip(ids, p))[dict(zip(ids, p))[a]]] == a for a in ids)]
    assert good == []
    for p in itertools.permutations(ids):
        assert not validate_triangulation_quiver(q, dict(zip(ids, p))).ok
    report = validate_triangulation_quiver(q, {"a": "c", "c": "a", "b": "d", "d": "b"})
    assert any("f^3" in p for p in report.problems)


def test_validator_reports_every_problem():
    q = Quiver(("1", "2", "3"), (("a", "1", "2"), ("b", "2", "1")))
    report = validate_triangulation_quiver(q, {"a": "a"})
    text = str(report)
    assert "2-regular" in text and "permutation" in text and "connected" in text


def test_disconnected_structure_flagged_but_constructible():
    tq = triangulation_quiver_from_words(list("1234"), [("1", "1", "2"), ("2",), ("3", "3", "4"), ("4",)])
    assert not tq.connected
    assert any("connected" in p for p in validate_triangulation_quiver(tq.quiver, tq.f).problems)


def test_construction_refuses_invalid_f():
    q = catalog.triangle_quiver().quiver
    with pytest.raises(InvalidInputError):
        TriangulationQuiver(q, {a: a for a in q.arrow_ids})


# orbits -----------------------------------------------------------------------

def test_triangle_single_g_orbit():
    od = compute_orbit_data(catalog.triangle_quiver())
    assert len(od.orbits) == 1
    assert cyclic_equal(od.orbits[0], ["alpha", "eta", "beta", "mu", "gamma", "eps"])
    assert od.lengths == (6,)


def test_markov_single_g_orbit():
    od = compute_orbit_data(catalog.markov_quiver())
    assert len(od.orbits) == 1
    assert cyclic_equal(od.orbits[0], ["a1", "b2", "a3", "b1", "a2", "b3"])


def test_two_disk_orbits():
    od = compute_orbit_data(catalog.two_disk_quiver())
    assert sorted(od.lengths) == [2, 2, 3, 9]
    eta = od.orbit_of("eta")
    assert cyclic_equal(eta, ["eta", "xi", "mu", "delta", "pi", "eps", "rho", "zeta", "lambda"])


def test_orbit_data_axioms():
    tq = catalog.two_disk_quiver()
    od = tq.orbit_data
    q = tq.quiver
    for a in q.arrow_ids:
        assert od.bar[od.bar[a]] == a and od.bar[a] != a
        assert q.source(od.bar[a]) == q.source(a)
        assert od.g[a] == od.bar[tq.f[a]]
    assert sorted(x for o in od.orbits for x in o) == sorted(q.arrow_ids)
    assert [min(o) for o in od.orbits] == sorted(min(o) for o in od.orbits)


def test_census_examples():
    assert f_orbit_census(catalog.triangle_quiver()) == (3, 0, 1)
    assert f_orbit_census(catalog.markov_quiver()) == (0, 0, 2)
    for n in (2, 3, 4, 5):
        assert f_orbit_census(catalog.disk_chain_quiver(n)) == (0, 0, 2 * n)


# isomorphism ----------------------------------------------------------------------

def test_isomorphic_to_itself_by_identity():
    tq = catalog.triangle_quiver()
    iso = quiver_isomorphic(tq, tq)
    assert iso is not None
    assert all(iso.vertex_map[v] == v for v in tq.quiver.vertices)
    assert all(iso.arrow_map[a] == a for a in tq.quiver.arrow_ids)


def test_lambda_with_swapped_vertices():
    arrows = (("A", "2", "2"), ("B", "2", "1"), ("C", "1", "2"), ("E", "1", "1"))
    swapped = TriangulationQuiver(Quiver(("1", "2"), arrows), {"A": "B", "B": "C", "C": "A", "E": "E"})
    iso = quiver_isomorphic(catalog.lambda_quiver(), swapped)
    assert iso.vertex_map == {"1": "2", "2": "1"}
    assert iso.arrow_map == {"alpha": "A", "beta": "B", "gamma": "C", "eta": "E"}


def test_non_isomorphic_pairs():
    assert quiver_isomorphic(catalog.lambda_quiver(), catalog.triangle_quiver()) is None
    assert quiver_isomorphic(catalog.markov_quiver(), catalog.omega_quiver()) is None
    assert quiver_isomorphic(catalog.gamma_quiver(), catalog.triangle_quiver()) is None


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 8), seed=st.integers(0, 10**6))
def test_isomorphism_properties(n, seed):
    rng = random.Random(seed)
    tq = random_triangulation_quiver(n, rng)
    other, vmap, amap = relabel(tq, rng)
    fwd = quiver_isomorphic(tq, other)
    back = quiver_isomorphic(other, tq)
    assert fwd is not None and back is not None
    q2 = other.quiver
    for a in tq.quiver.arrow_ids:
        b = fwd.arrow_map[a]
        assert q2.source(b) == fwd.vertex_map[tq.quiver.source(a)]
        assert q2.target(b) == fwd.vertex_map[tq.quiver.target(a)]
        assert other.f[b] == fwd.arrow_map[tq.f[a]]


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 9), seed=st.integers(0, 10**6))
def test_orbit_and_census_invariants(n, seed):
    tq = random_triangulation_quiver(n, random.Random(seed))
    od = tq.orbit_data
    assert sum(od.lengths) == 2 * n == len(tq.quiver.arrows)
    assert sorted(od.g.values()) == sorted(od.g)
    assert f_orbit_census(tq)[1] == 0
    assert all(len(c) in (1, 3) for c in cycles_of(tq.f))


# enumeration ------------------------------------------------------------------------

def test_enumerate_two_vertices_is_lambda():
    found = enumerate_triangulation_quivers(2)
    assert len(found) == 1
    assert quiver_isomorphic(found[0], catalog.lambda_quiver()) is not None


def test_enumerate_three_contains_named_quivers():
    found = enumerate_triangulation_quivers(3)
    for named in (catalog.triangle_quiver(), catalog.markov_quiver(),
                  catalog.gamma_quiver(), catalog.omega_quiver()):
        assert sum(quiver_isomorphic(named, tq) is not None for tq in found) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_enumeration_matches_brute_force(n):
    ours = [tq for tq in enumerate_triangulation_quivers(n) if len(tq.quiver.vertices) == n]
    assert len(ours) == len(brute_force_classes(n, full_permutations=n <= 3))


def test_enumeration_five_vertices_matches_brute_force():
    ours = [tq for tq in enumerate_triangulation_quivers(5, min_vertices=5)]
    assert len(ours) == len(brute_force_classes(5, full_permutations=False))


def test_enumeration_is_duplicate_free_and_connected():
    found = enumerate_triangulation_quivers(5)
    for a, b in itertools.combinations(found, 2):
        assert quiver_isomorphic(a, b) is None
    for tq in found:
        assert connected(tq.quiver.vertices, tq.quiver.arrows)


def test_enumeration_deterministic():
    one = [corner_words(tq) for tq in enumerate_triangulation_quivers(4)]
    two = [corner_words(tq) for tq in enumerate_triangulation_quivers(4)]
    assert one == two


@pytest.mark.parametrize("bad", [0, 1])
def test_enumeration_below_two_vertices(bad):
    with pytest.raises(SearchBudgetError, match="at least 2 vertices"):
        enumerate_triangulation_quivers(bad)


def test_enumeration_budget():
    with pytest.raises(SearchBudgetError, match="search budget"):
        enumerate_triangulation_quivers(7)


def test_corner_words_round_trip():
    tq = catalog.two_disk_quiver()
    words = corner_words(tq)
    rebuilt = triangulation_quiver_from_words(sorted(tq.quiver.vertices), words)
    assert quiver_isomorphic(tq, rebuilt) is not None
