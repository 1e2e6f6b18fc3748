"""Strict dihedral type: Cartan non-singularity, family matching, batch sweeps."""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import catalog
from .algebra import GDPresentation, build_presentation, cartan_matrix
from .disks import expand
from .fields import QQ, Field
from .homology import (InconsistencyError, gabriel_out_degrees,
                       gabriel_two_regular, simple_periodicity)
from .quiver_core import (MAX_ENUMERATION_VERTICES, SearchBudgetError,
                          all_structure_isomorphisms, enumerate_triangulation_quivers,
                          random_triangulation_quiver)


@dataclass(frozen=True, order=True)
class Family:
    name: str
    params: tuple

    LABELS = {"Lambda": ("r", "s", "b"), "Gamma": ("r", "s", "t"), "Omega": ("m1", "m2", "m3")}

    @property
    def polynomial(self) -> bool:
        if self.name == "Lambda":
            return self.params[:2] == (1, 1)
        return self.params == (1, 1, 1)

    def record(self) -> str:
        labels = self.LABELS[self.name]
        return " ".join([f"family={self.name}"] + [f"{k}={v}" for k, v in zip(labels, self.params)])

    def __str__(self):
        return f"{self.name}({','.join(str(x) for x in self.params)})"


# template quiver, arrows whose weights are the parameters, border vertex (Lambda only)
_TEMPLATES = (
    ("Lambda", catalog.lambda_quiver, ("alpha", "beta"), "2"),
    ("Gamma", catalog.gamma_quiver, ("alpha", "beta", "xi"), None),
    ("Omega", catalog.omega_quiver, ("alpha1", "alpha2", "alpha3"), None),
)


def match_family(p: GDPresentation) -> Family | None:
    """Match the presentation against the Lambda, Gamma and Omega templates."""
    if not p.is_triangulation_type:
        if p.two_cycles():
            return None
        p = expand(p).presentation()
    found = []
    for name, template, arrows, bvert in _TEMPLATES:
        tq = template()
        for iso in all_structure_isomorphisms(tq.quiver, tq.f, p.quiver, p.fprime):
            params = tuple(p.weights[iso.arrow_map[a]] for a in arrows)
            if bvert is not None:
                b = p.b(iso.vertex_map[bvert])
                params += (b if p.field.characteristic else _plain(b),)
            found.append(Family(name, params))
    return min(found, key=lambda f: tuple(str(x) for x in f.params)) if found else None


def _plain(x):
    return int(x) if getattr(x, "denominator", 1) == 1 else x


@dataclass(frozen=True)
class ClassificationReport:
    cartan_det: int
    strict_dihedral: bool
    family: Family | None
    growth: str
    generalized_dihedral: bool = True
    biserial: bool = True
    citation: str = ("strictness is read off the Cartan determinant; "
                     "tube and component conditions are not recomputed")

    def record(self) -> str:
        fam = self.family.record() if self.family else "family=none"
        return (f"{fam} det={self.cartan_det} strict={str(self.strict_dihedral).lower()} "
                f"growth={self.growth}")


def classify(p: GDPresentation) -> ClassificationReport:
    det = cartan_matrix(p).determinant
    fam = match_family(p)
    strict = det != 0
    if (fam is not None) != strict:
        raise InconsistencyError(
            f"Cartan determinant {det} but family match {fam}: non-singularity and family disagree")
    growth = "polynomial" if fam is not None and fam.polynomial else "nonpolynomial"
    return ClassificationReport(det, strict, fam, growth)


# ---------------------------------------------------------------------------
# sweeps

@dataclass
class SweepReport:
    instances: int = 0
    strict: int = 0
    families: Counter = field(default_factory=Counter)
    polynomial: list = field(default_factory=list)
    exceptions: list = field(default_factory=list)
    records: list = field(default_factory=list)

    def summary(self) -> str:
        fams = ", ".join(f"{k}:{v}" for k, v in sorted(self.families.items()))
        return (f"instances={self.instances} strict={self.strict} families=[{fams}] "
                f"polynomial={len(self.polynomial)} exceptions={len(self.exceptions)}")


def _check_instance(p: GDPresentation, report: SweepReport, label: str) -> None:
    try:
        rep = classify(p)
    except InconsistencyError as exc:
        report.exceptions.append(f"{label}: {exc}")
        return
    report.instances += 1
    report.records.append((label, rep.record()))
    n = len(p.quiver.vertices)
    if rep.strict_dihedral:
        report.strict += 1
        report.families[rep.family.name] += 1
        if rep.growth == "polynomial":
            report.polynomial.append(str(rep.family))
        if n >= 4:
            report.exceptions.append(f"{label}: {n} vertices but non-singular Cartan matrix")
    # all simples non-periodic <=> Gabriel quiver 2-regular, with periodicity taken
    # from rad/rad^2 of the algebra itself
    numeric = all(d == 2 for d in gabriel_out_degrees(p).values())
    combinatorial = all(v == "non-periodic" for v in simple_periodicity(p).values())
    if numeric != combinatorial or combinatorial != gabriel_two_regular(p):
        report.exceptions.append(f"{label}: simple periodicity disagrees with the Gabriel quiver")


SWEEP_BUDGET = 50_000


def exhaustive_sweep(max_vertices: int = 3, weights: Sequence[int] = (1, 2),
                   borders: Sequence[object] = (0, 1), field: Field = QQ,
                   budget: int = SWEEP_BUDGET) -> SweepReport:
    """Classify every weighted, bordered triangulation quiver up to ``max_vertices``."""
    if max_vertices > MAX_ENUMERATION_VERTICES:
        raise SearchBudgetError(f"search budget: sweeps are limited to {MAX_ENUMERATION_VERTICES} vertices")
    quivers = enumerate_triangulation_quivers(max_vertices)
    total = sum(len(weights) ** len(tq.orbit_data.orbits) * len(borders) ** len(tq.border())
                for tq in quivers)
    if total > budget:
        raise SearchBudgetError(f"search budget: sweep needs {total} instances, budget is {budget}")
    report = SweepReport()
    for k, tq in enumerate(quivers, 1):
        orbits = tq.orbit_data.orbits
        bverts = tq.border()
        for ws in itertools.product(weights, repeat=len(orbits)):
            m = {o[0]: w for o, w in zip(orbits, ws)}
            for bs in itertools.product(borders, repeat=len(bverts)):
                p = build_presentation(tq, m, dict(zip(bverts, bs)), field)
                _check_instance(p, report, f"quiver#{k} m={ws} b={bs}")
    return report


def random_presentation(rng: random.Random, min_vertices: int = 4, max_vertices: int = 7,
                        max_weight: int = 3, borders: Sequence[object] = (0, 1),
                        field: Field = QQ) -> GDPresentation:
    n = rng.randint(min_vertices, max_vertices)
    tq = random_triangulation_quiver(n, rng)
    m = {o[0]: rng.randint(1, max_weight) for o in tq.orbit_data.orbits}
    b = {v: rng.choice(list(borders)) for v in tq.border()}
    return build_presentation(tq, m, b, field)


def random_sweep(samples: int, seed: int = 0, min_vertices: int = 4, max_vertices: int = 7,
                 max_weight: int = 3, field: Field = QQ) -> SweepReport:
    rng = random.Random(seed)
    report = SweepReport()
    for k in range(samples):
        p = random_presentation(rng, min_vertices, max_vertices, max_weight, field=field)
        _check_instance(p, report, f"random#{k} seed={seed}")
    return report
