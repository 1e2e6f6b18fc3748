import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdq import catalog
from gdq.algebra import GDPresentation
from gdq.disks import contract, find_disks
from gdq.homology import (arrow_module, growth_class, omega_period, primitive_walk,
                          right_ideal_dimension, simple_periodicity, gabriel_two_regular,
                          reduced_walk_avoids_relations, syzygy_arrow, syzygy_item, tau_arrow,
                          tube_census, walk_has_backtrack, walk_is_bipartite, walk_runs)
from gdq.quiver_core import InvalidInputError, Quiver

from helpers import random_weighted


def one_vertex_presentation():
    q = Quiver(("1", "2"), (("beta", "1", "2"), ("gamma", "2", "1"), ("eta", "2", "2")))
    return GDPresentation(q, {"1": "beta", "beta": "gamma", "gamma": "1", "eta": "eta"}, 1, {})


def test_lambda_syzygy_numbers():
    p = catalog.lambda_algebra(1, 1)
    assert syzygy_arrow(p, "alpha") == "beta"
    assert arrow_module(p, "alpha").dimension == 1
    assert len(p.basis.of_vertex("2")) == 6
    assert right_ideal_dimension(p, p.arrow("beta")) == 3
    assert len(p.basis.of_vertex("1")) - 1 == 3


def test_fixed_loop_has_period_one():
    for b in (0, 3):
        p = catalog.lambda_algebra(1, 2, b)
        assert syzygy_arrow(p, "eta") == "eta"
        assert omega_period(p, "eta") == 1


def test_contracted_two_cycles_have_period_two():
    p = catalog.two_disk_algebra()
    c = contract(p, find_disks(p))
    for x, y in c.two_cycles():
        assert syzygy_arrow(c, x) == y and syzygy_arrow(c, y) == x
        assert omega_period(c, x) == 2


def test_tube_census_examples():
    t = tube_census(catalog.triangle_algebra())
    assert (t.rank3_count, t.rank1_arrow_count) == (1, 3)
    assert tube_census(catalog.markov_algebra()).rank3_count == 2
    for n in (2, 3, 4):
        p = catalog.disk_chain_algebra(n)
        c = tube_census(contract(p, find_disks(p)))
        assert (c.rank3_count, c.period2_pairs) == (0, n)


def test_tau_is_omega_squared():
    p = catalog.two_disk_algebra(1, 2, 1, 1)
    for a in p.quiver.arrow_ids:
        if p.cycle_length(a) and len(next(c for c in p.fprime_cycles() if a in c)) == 3:
            assert tau_arrow(p, a) == p.fprime[p.fprime[a]]


def test_one_vertex_syzygies():
    p = one_vertex_presentation()
    assert syzygy_item(p, "1") == "beta"
    assert syzygy_arrow(p, "gamma") == "1"
    assert omega_period(p, "beta") == 3
    assert simple_periodicity(p) == {"1": "periodic", "2": "non-periodic"}


def test_simple_periodicity_examples():
    assert simple_periodicity(catalog.lambda_algebra(1, 3))["1"] == "periodic"
    assert set(simple_periodicity(catalog.markov_algebra(2)).values()) == {"non-periodic"}
    assert set(simple_periodicity(catalog.lambda_algebra(2, 1)).values()) == {"non-periodic"}
    assert gabriel_two_regular(catalog.lambda_algebra(2, 1))
    assert not gabriel_two_regular(catalog.lambda_algebra(1, 1))


def test_triangle_walks():
    p = catalog.triangle_algebra()
    for a in ("alpha", "beta", "gamma"):
        w = primitive_walk(p, a)
        assert w.closed and walk_is_bipartite(w.steps)
        assert reduced_walk_avoids_relations(p, w)


def test_markov_walk_is_even_and_uses_double_arrows():
    w = primitive_walk(catalog.markov_quiver(), "a1")
    assert w.closed and len(w.steps) % 2 == 0
    arrows = {a for a, _ in w.steps}
    assert arrows & {"a1", "a2", "a3"} and arrows & {"b1", "b2", "b3"}


def test_lambda_walk_drops_weight_one_loop():
    w1 = primitive_walk(catalog.lambda_algebra(1, 1), "beta")
    assert any(a == "alpha" for a, _ in w1.steps)
    assert all(a != "alpha" for a, _ in w1.reduced)
    w2 = primitive_walk(catalog.lambda_algebra(2, 1), "beta")
    assert w2.reduced == w2.steps


def test_walk_refuses_loops():
    with pytest.raises(InvalidInputError, match="loop"):
        primitive_walk(catalog.lambda_quiver(), "alpha")


def test_walk_runs_split_directions():
    steps = [("a", 1), ("b", 1), ("c", -1), ("d", -1)]
    assert walk_runs(steps) == [(1, ("a", "b")), (-1, ("d", "c"))]
    assert walk_has_backtrack([("a", 1), ("a", -1)])


def test_growth_examples():
    assert growth_class(catalog.lambda_algebra(1, 1, 0)) == "polynomial"
    assert growth_class(catalog.lambda_algebra(1, 1, 1)) == "polynomial"
    assert growth_class(catalog.lambda_algebra(2, 1, 0)) == "nonpolynomial"
    assert growth_class(catalog.markov_algebra()) == "nonpolynomial"
    assert growth_class(catalog.gamma_algebra()) == "polynomial"
    assert growth_class(catalog.omega_algebra(1, 1, 2)) == "nonpolynomial"


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_random_syzygy_periods(seed):
    rng = random.Random(seed)
    p = random_weighted(rng, rng.randint(2, 6))
    census = tube_census(p)  # checks kernels and periods numerically
    assert census.rank3_count == sum(len(c) == 3 for c in p.fprime_cycles())
    for a in p.quiver.arrow_ids:
        t = p.quiver.target(a)
        nxt = p.fprime[a]
        assert arrow_module(p, a).dimension + p.cycle_length(nxt) == len(p.basis.of_vertex(t))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_random_walks(seed):
    rng = random.Random(seed)
    p = random_weighted(rng, rng.randint(2, 7))
    for a in p.quiver.arrow_ids:
        if p.quiver.is_loop(a):
            continue
        w = primitive_walk(p, a)
        assert w.closed and walk_is_bipartite(w.steps)
        assert reduced_walk_avoids_relations(p, w)
