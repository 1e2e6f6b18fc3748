"""Named quivers, surfaces and algebras used throughout the docs and tests.

Arrow names follow the customary Greek letters, spelled out in ASCII.
"""

from __future__ import annotations

from .algebra import GDPresentation, build_presentation
from .fields import QQ, Field
from .quiver_core import Quiver, TriangulationQuiver
from .surface import SurfaceTriangulation


def _tq(vertices, arrows, cycles) -> TriangulationQuiver:
    f = {}
    for cyc in cycles:
        for i, a in enumerate(cyc):
            f[a] = cyc[(i + 1) % len(cyc)]
    return TriangulationQuiver(Quiver(tuple(vertices), tuple(arrows)), f)


# -- one triangle with three boundary edges ---------------------------------

def triangle_surface() -> SurfaceTriangulation:
    return SurfaceTriangulation(("1", "2", "3"), (("1", "2", "3"),))


def triangle_quiver() -> TriangulationQuiver:
    return _tq("123", [("alpha", "1", "2"), ("beta", "2", "3"), ("gamma", "3", "1"),
                       ("eps", "1", "1"), ("eta", "2", "2"), ("mu", "3", "3")],
               [("alpha", "beta", "gamma"), ("eps",), ("eta",), ("mu",)])


def triangle_algebra(b1=0, b2=0, b3=0, m: int = 1, field: Field = QQ) -> GDPresentation:
    return build_presentation(triangle_quiver(), m, {"1": b1, "2": b2, "3": b3}, field)


# -- the Markov quiver: sphere made of two triangles ------------------------

def markov_surface() -> SurfaceTriangulation:
    return SurfaceTriangulation(("1", "2", "3"), (("1", "2", "3"), ("1", "2", "3")))


def markov_quiver() -> TriangulationQuiver:
    arrows = [("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "1"),
              ("b1", "1", "2"), ("b2", "2", "3"), ("b3", "3", "1")]
    return _tq("123", arrows, [("a1", "a2", "a3"), ("b1", "b2", "b3")])


def markov_algebra(m: int = 1, field: Field = QQ) -> GDPresentation:
    return build_presentation(markov_quiver(), m, None, field)


# -- eight edges, two 2-triangle disks, one boundary edge -------------------

TWO_DISK_ARROWS = [
    ("chi", "1", "2"), ("pi", "2", "3"), ("kappa", "3", "1"),
    ("nu", "1", "3"), ("eps", "3", "4"), ("theta", "4", "1"),
    ("omega", "2", "4"), ("rho", "4", "5"), ("delta", "5", "2"),
    ("zeta", "5", "6"), ("psi", "6", "7"), ("mu", "7", "5"),
    ("xi", "8", "7"), ("phi", "7", "6"), ("lambda", "6", "8"),
    ("eta", "8", "8"),
]


def two_disk_surface() -> SurfaceTriangulation:
    return SurfaceTriangulation(tuple("12345678"), (("1", "2", "3"), ("1", "3", "4"), ("2", "4", "5"),
                                                   ("5", "6", "7"), ("8", "7", "6")))


def two_disk_quiver() -> TriangulationQuiver:
    return _tq("12345678", TWO_DISK_ARROWS,
               [("chi", "pi", "kappa"), ("nu", "eps", "theta"), ("omega", "rho", "delta"),
                ("zeta", "psi", "mu"), ("xi", "phi", "lambda"), ("eta",)])


def two_disk_algebra(m: int = 1, n: int = 1, p: int = 1, q: int = 1, b: object = 0,
                     field: Field = QQ) -> GDPresentation:
    """Weights m, n, p, q on the orbits of eta, omega, kappa, phi; border scalar b at 8."""
    weights = {"eta": m, "omega": n, "kappa": p, "phi": q}
    return build_presentation(two_disk_quiver(), weights, {"8": b}, field)


# -- the sphere T(n) built from n disks around the equator -------------------

def disk_chain_surface(n: int) -> SurfaceTriangulation:
    edges = [f"{x}{i}" for i in range(1, n + 1) for x in "acd"]
    tris = []
    for i in range(1, n + 1):
        j = i % n + 1
        tris += [(f"a{i}", f"c{i}", f"d{i}"), (f"d{i}", f"c{i}", f"a{j}")]
    return SurfaceTriangulation(tuple(edges), tuple(tris))


def disk_chain_quiver(n: int) -> TriangulationQuiver:
    if n < 2:
        raise ValueError("the disk chain needs n >= 2")
    verts, arrows, cycles = [], [], []
    for i in range(1, n + 1):
        j = i % n + 1
        a, c, d, a2 = f"a{i}", f"c{i}", f"d{i}", f"a{j}"
        verts += [a, c, d]
        arrows += [(f"gamma{i}", a, c), (f"xi{i}", c, d), (f"delta{i}", d, a),
                   (f"eta{i}", d, c), (f"sigma{i}", c, a2), (f"rho{i}", a2, d)]
        cycles += [(f"gamma{i}", f"xi{i}", f"delta{i}"), (f"eta{i}", f"sigma{i}", f"rho{i}")]
    return _tq(verts, arrows, cycles)


def disk_chain_algebra(n: int, p: int = 1, q: int = 1, field: Field = QQ) -> GDPresentation:
    weights = {"gamma1": p, f"rho{n}": q}
    weights.update({f"xi{i}": 1 for i in range(1, n + 1)})
    return build_presentation(disk_chain_quiver(n), weights, None, field)


# -- the three families of strict dihedral type ----------------------------

def lambda_surface() -> SurfaceTriangulation:
    return SurfaceTriangulation(("1", "2"), (("1", "1", "2"),))


def lambda_quiver() -> TriangulationQuiver:
    return _tq("12", [("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "1"), ("eta", "2", "2")],
               [("alpha", "beta", "gamma"), ("eta",)])


def lambda_algebra(r: int = 1, s: int = 1, b: object = 0, field: Field = QQ) -> GDPresentation:
    return build_presentation(lambda_quiver(), {"alpha": r, "beta": s}, {"2": b}, field)


def gamma_surface() -> SurfaceTriangulation:
    return SurfaceTriangulation(("1", "2", "3"), (("1", "1", "2"), ("3", "3", "2")))


def gamma_quiver() -> TriangulationQuiver:
    return _tq("123", [("alpha", "1", "1"), ("beta", "1", "2"), ("gamma", "2", "1"),
                       ("delta", "2", "3"), ("eta", "3", "2"), ("xi", "3", "3")],
               [("alpha", "beta", "gamma"), ("xi", "eta", "delta")])


def gamma_algebra(r: int = 1, s: int = 1, t: int = 1, field: Field = QQ) -> GDPresentation:
    return build_presentation(gamma_quiver(), {"alpha": r, "beta": s, "xi": t}, None, field)


def omega_surface() -> SurfaceTriangulation:
    return SurfaceTriangulation(("1", "2", "3"), (("1", "2", "3"), ("3", "2", "1")))


def omega_quiver() -> TriangulationQuiver:
    return _tq("123", [("alpha1", "1", "2"), ("alpha2", "2", "3"), ("alpha3", "3", "1"),
                       ("beta1", "2", "1"), ("beta3", "1", "3"), ("beta2", "3", "2")],
               [("alpha1", "alpha2", "alpha3"), ("beta1", "beta3", "beta2")])


def omega_algebra(m1: int = 1, m2: int = 1, m3: int = 1, field: Field = QQ) -> GDPresentation:
    return build_presentation(omega_quiver(), {"alpha1": m1, "alpha2": m2, "alpha3": m3}, None, field)


SURFACES = {
    "triangle": triangle_surface,
    "markov": markov_surface,
    "two-disk": two_disk_surface,
    "lambda": lambda_surface,
    "gamma": gamma_surface,
    "omega": omega_surface,
}

QUIVERS = {
    "triangle": triangle_quiver,
    "markov": markov_quiver,
    "two-disk": two_disk_quiver,
    "lambda": lambda_quiver,
    "gamma": gamma_quiver,
    "omega": omega_quiver,
}
