import importlib

import pytest

from gdq import catalog
from gdq.algebra import cartan_matrix
from gdq.classify import Family, classify, match_family, random_sweep, exhaustive_sweep
from gdq.disks import contract, find_disks
from gdq.homology import InconsistencyError
from gdq.quiver_core import SearchBudgetError

classify_module = importlib.import_module("gdq.classify")


def test_match_family_examples():
    assert match_family(catalog.lambda_algebra(2, 3)) == Family("Lambda", (2, 3, 0))
    assert match_family(catalog.lambda_algebra(1, 2, 1)) == Family("Lambda", (1, 2, 1))
    assert match_family(catalog.gamma_algebra()) == Family("Gamma", (1, 1, 1))
    assert match_family(catalog.omega_algebra(1, 2, 3)).name == "Omega"
    assert match_family(catalog.triangle_algebra()) is None
    assert match_family(catalog.markov_algebra()) is None


def test_omega_parameters_up_to_rotation():
    a = match_family(catalog.omega_algebra(1, 2, 3))
    b = match_family(catalog.omega_algebra(2, 3, 1))
    assert a == b


def test_family_polynomial_flag():
    assert Family("Lambda", (1, 1, 0)).polynomial
    assert not Family("Lambda", (1, 2, 0)).polynomial
    assert Family("Gamma", (1, 1, 1)).polynomial
    assert not Family("Omega", (1, 1, 2)).polynomial


def test_classify_records():
    assert classify(catalog.lambda_algebra(2, 3)).record() == \
        "family=Lambda r=2 s=3 b=0 det=24 strict=true growth=nonpolynomial"
    rep = classify(catalog.omega_algebra())
    assert rep.cartan_det == 4 and rep.growth == "polynomial"
    for p in (catalog.markov_algebra(), catalog.triangle_algebra()):
        rep = classify(p)
        assert rep.cartan_det == 0 and rep.family is None and not rep.strict_dihedral
    p = catalog.disk_chain_algebra(2)
    c = contract(p, find_disks(p))
    assert classify(c).record() == "family=none det=0 strict=false growth=nonpolynomial"


@pytest.mark.parametrize("r,s", [(1, 1), (1, 3), (2, 2), (3, 1)])
def test_lambda_determinant(r, s):
    assert cartan_matrix(catalog.lambda_algebra(r, s)).determinant == 4 * r * s


def test_two_vertex_sweep_is_lambda_only():
    rep = exhaustive_sweep(2, weights=(1, 2, 3), borders=(0, 1))
    assert rep.exceptions == []
    assert rep.instances == rep.strict == 18
    assert set(rep.families) == {"Lambda"}
    dets = {int(rec.split("det=")[1].split()[0]) for _, rec in rep.records}
    assert dets == {4 * r * s for r in (1, 2, 3) for s in (1, 2, 3)}


def test_sweep_up_to_four_vertices():
    rep = exhaustive_sweep(4, weights=(1, 2), borders=(0, 1))
    assert rep.exceptions == []
    assert set(rep.families) == {"Lambda", "Gamma", "Omega"}
    assert sorted(set(rep.polynomial)) == ["Gamma(1,1,1)", "Lambda(1,1,0)", "Lambda(1,1,1)", "Omega(1,1,1)"]


def test_random_sweep_finds_nothing_strict():
    rep = random_sweep(25, seed=7)
    assert rep.instances == 25 and rep.strict == 0 and rep.exceptions == []


def test_sweep_budgets():
    with pytest.raises(SearchBudgetError):
        exhaustive_sweep(7)
    with pytest.raises(SearchBudgetError, match="budget"):
        exhaustive_sweep(4, weights=(1, 2, 3, 4), budget=10)


def test_disagreement_raises(monkeypatch):
    monkeypatch.setattr(classify_module, "match_family", lambda p: None)
    with pytest.raises(InconsistencyError):
        classify(catalog.lambda_algebra())
    rep = exhaustive_sweep(2, weights=(1,), borders=(0,))
    assert rep.instances == 0 and len(rep.exceptions) == 1
