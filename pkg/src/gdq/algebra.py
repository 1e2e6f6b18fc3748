"""Weighted triangulation algebras, their socle deformations and contractions.

Every algebra here is presented by a :class:`GDPresentation`: a quiver whose
vertices have one or two arrows in each direction, a permutation ``fprime``
of arrows and valency-one vertices, orbit weights, and border scalars.

A path is nonzero exactly when it is an initial piece of a cycle
``B_a = (a g(a) ... g^{n-1}(a))^m`` where ``g`` follows the *other* arrow at
each vertex.  Walks of full length ``m*n`` are the socle element of their start
vertex, and anything longer vanishes.  The one exception is a border loop,
whose square is ``b`` times the socle.  That description gives the monomial
basis and a closed-form multiplication rule, implemented below.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .fields import QQ, Field
from .quiver_core import (InvalidInputError, Quiver, TriangulationQuiver,
                          ValidationReport, cycles_of)


# ---------------------------------------------------------------------------
# presentations

def validate_presentation(q: Quiver, fprime: Mapping[str, str]) -> ValidationReport:
    """Structural checks for a generalized presentation (weights aside)."""
    problems = []
    arrows = set(q.arrow_ids)
    verts = set(q.vertices)
    clash = sorted(arrows & verts)
    if clash:
        problems.append("ids used both as vertex and arrow: " + ", ".join(clash))
    if len(verts) < 2:
        problems.append(f"needs at least 2 vertices, found {len(verts)}")
    ones = set()
    for v in q.vertices:
        o, i = len(q.out_arrows(v)), len(q.in_arrows(v))
        if (o, i) == (1, 1):
            ones.add(v)
        elif (o, i) != (2, 2):
            problems.append(f"vertex {v} has {o} outgoing and {i} incoming arrows")
    if not q.is_connected():
        problems.append("quiver is not connected")
    if problems:
        return ValidationReport(problems)
    fp = completed_fprime(q, fprime)
    items = arrows | ones
    if set(fp) != items:
        problems.append("f' must be defined exactly on arrows and 1-vertices; missing "
                        + ", ".join(sorted(items - set(fp))) + "; extra " + ", ".join(sorted(set(fp) - items)))
        return ValidationReport(problems)
    if set(fp.values()) != items:
        problems.append("f' is not a permutation of arrows and 1-vertices")
        return ValidationReport(problems)
    for a in sorted(arrows):
        b = fp[a]
        t = q.target(a)
        if t in ones:
            if b != t:
                problems.append(f"f'({a}) must be the 1-vertex {t}")
        elif b not in arrows or q.source(b) != t:
            problems.append(f"f'({a}) = {b} does not start at t({a}) = {t}")
    for v in sorted(ones):
        if fp[v] != q.out_arrows(v)[0]:
            problems.append(f"f'({v}) must be the arrow leaving the 1-vertex {v}")
    if problems:
        return ValidationReport(problems)
    for cyc in cycles_of(fp):
        if len(cyc) > 3:
            problems.append(f"f' cycle {'(' + ' '.join(cyc) + ')'} is longer than 3")
        if len(cyc) == 2 and any(c in ones or q.is_loop(c) for c in cyc):
            problems.append(f"f' 2-cycle ({' '.join(cyc)}) must join two distinct vertices")
    return ValidationReport(problems)


def completed_fprime(q: Quiver, fprime: Mapping[str, str]) -> dict[str, str]:
    """Fill in the forced values of f' around 1-vertices."""
    fp = dict(fprime)
    for v in q.vertices:
        if len(q.out_arrows(v)) == 1 and len(q.in_arrows(v)) == 1:
            fp.setdefault(v, q.out_arrows(v)[0])
            fp.setdefault(q.in_arrows(v)[0], v)
    return fp


@dataclass(frozen=True, eq=False)
class GDPresentation:
    """Quiver, f', weights and border of an algebra.

    ``weights`` maps arrows to positive integers; one arrow per g'-orbit is
    enough, a single int sets every orbit.  ``border`` maps border vertices
    (those with an f'-fixed loop) to field scalars.
    """

    quiver: Quiver
    fprime: Mapping[str, str]
    weights: Mapping[str, int] | int = 1
    border: Mapping[str, object] = field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        q = self.quiver
        report = validate_presentation(q, self.fprime)
        if not report:
            raise InvalidInputError("invalid presentation", report.problems)
        fp = completed_fprime(q, self.fprime)
        object.__setattr__(self, "fprime", fp)
        ones = tuple(sorted(v for v in q.vertices if len(q.out_arrows(v)) == 1))
        object.__setattr__(self, "one_vertices", ones)
        gp = {}
        for a in q.arrow_ids:
            outs = q.out_arrows(q.target(a))
            if len(outs) == 1:
                gp[a] = outs[0]
            else:
                gp[a] = outs[1] if outs[0] == fp[a] else outs[0]
        object.__setattr__(self, "gprime", gp)
        orbits = tuple(cycles_of(gp))
        object.__setattr__(self, "orbits", orbits)
        object.__setattr__(self, "weights", self._normalise_weights(self.weights, orbits))
        object.__setattr__(self, "border", self._normalise_border(self.border))

    def _normalise_weights(self, weights, orbits):
        out = {}
        for orb in orbits:
            if isinstance(weights, int):
                vals = {weights}
            else:
                vals = {int(weights[a]) for a in orb if a in weights}
            if not vals:
                raise InvalidInputError(f"weight missing for the orbit of {orb[0]}")
            if len(vals) > 1:
                raise InvalidInputError(f"conflicting weights {sorted(vals)} on the orbit of {orb[0]}")
            m = vals.pop()
            if m < 1:
                raise InvalidInputError(f"weight {m} on the orbit of {orb[0]} is not positive")
            for a in orb:
                out[a] = m
        if not isinstance(weights, int):
            unknown = sorted(set(weights) - set(self.quiver.arrow_ids))
            if unknown:
                raise InvalidInputError("weights given for unknown arrows " + ", ".join(unknown))
        return out

    def _normalise_border(self, border):
        bv = set(self.border_loops)
        out = {}
        for v, c in dict(border).items():
            v = str(v)
            if v not in bv:
                raise InvalidInputError(f"border scalar given at {v}, which is not a border vertex")
            out[v] = self.field(c)
        return out

    # -- combinatorial data -------------------------------------------------

    @cached_property
    def border_loops(self) -> dict[str, str]:
        """Border vertex -> its f'-fixed loop."""
        return {self.quiver.source(a): a for a in self.quiver.arrow_ids if self.fprime[a] == a}

    def b(self, v: str):
        return self.border.get(v, self.field(0))

    def bar(self, a: str) -> str | None:
        outs = self.quiver.out_arrows(self.quiver.source(a))
        if len(outs) == 1:
            return None
        return outs[1] if outs[0] == a else outs[0]

    def star(self, a: str) -> str | None:
        ins = self.quiver.in_arrows(self.quiver.target(a))
        if len(ins) == 1:
            return None
        return ins[1] if ins[0] == a else ins[0]

    def orbit_of(self, a: str) -> tuple[str, ...]:
        return self._orbit_index[a]

    @cached_property
    def _orbit_index(self):
        return {a: o for o in self.orbits for a in o}

    def cycle_length(self, a: str) -> int:
        """m_a * n_a, the length of B_a."""
        return self.weights[a] * len(self.orbit_of(a))

    @cached_property
    def _walks(self) -> dict[str, tuple[str, ...]]:
        out = {}
        for a in self.quiver.arrow_ids:
            w = [a]
            for _ in range(self.cycle_length(a) - 1):
                w.append(self.gprime[w[-1]])
            out[a] = tuple(w)
        return out

    def socle_arrow(self, v: str) -> str:
        """Arrow whose cycle represents the socle element at ``v``."""
        return self.quiver.out_arrows(v)[0]

    @property
    def is_triangulation_type(self) -> bool:
        return not self.one_vertices and not self.two_cycles()

    def two_cycles(self) -> list[tuple[str, str]]:
        return [c for c in cycles_of(self.fprime) if len(c) == 2]

    def fprime_cycles(self) -> list[tuple[str, ...]]:
        return cycles_of(self.fprime)

    def triangulation_quiver(self) -> TriangulationQuiver:
        if not self.is_triangulation_type:
            raise InvalidInputError("presentation has 1-vertices or f'-2-cycles")
        return TriangulationQuiver(self.quiver, self.fprime)

    def with_field(self, fld: Field) -> "GDPresentation":
        return replace(self, field=fld, border=dict(self.border))

    def with_border(self, border: Mapping[str, object]) -> "GDPresentation":
        return replace(self, border=dict(border))

    def with_weights(self, weights) -> "GDPresentation":
        return replace(self, weights=weights)

    # -- elements -----------------------------------------------------------

    @cached_property
    def basis(self) -> "PathBasis":
        return path_basis(self)

    def element(self, terms: Mapping["BasisPath", object]) -> "Element":
        return Element(self, terms)

    def zero(self) -> "Element":
        return Element(self, {})

    def e(self, v: str) -> "Element":
        return Element(self, {BasisPath("e", v): 1})

    def omega(self, v: str) -> "Element":
        return Element(self, {BasisPath("w", v): 1})

    def one(self) -> "Element":
        return Element(self, {BasisPath("e", v): 1 for v in self.quiver.vertices})

    def arrow(self, a: str) -> "Element":
        if self.cycle_length(a) == 1:
            return self.omega(self.quiver.source(a))
        return Element(self, {BasisPath("p", self.quiver.source(a), a, 1): 1})

    def path(self, arrows: Sequence[str], start: str | None = None) -> "Element":
        """Product of arrows; the empty path needs ``start``."""
        if not arrows:
            if start is None:
                raise ValueError("empty path needs a start vertex")
            return self.e(start)
        out = self.arrow(arrows[0])
        for a in arrows[1:]:
            out = out * self.arrow(a)
        return out

    def __repr__(self):
        q = self.quiver
        return (f"GDPresentation({len(q.vertices)} vertices, {len(q.arrows)} arrows, "
                f"{len(self.orbits)} orbits, field={self.field!r})")


def build_presentation(tq: TriangulationQuiver, m: Mapping[str, int] | int = 1,
                       b: Mapping[str, object] | None = None, field: Field = QQ) -> GDPresentation:
    if not tq.connected:
        raise InvalidInputError("algebras are only built on connected quivers")
    return GDPresentation(tq.quiver, tq.f, m, dict(b or {}), field)


def gabriel_quiver(p: GDPresentation) -> Quiver:
    """Drop every g'-fixed loop of weight 1 (it equals the socle element)."""
    q = p.quiver
    drop = {a for a in q.arrow_ids if p.cycle_length(a) == 1}
    return Quiver(q.vertices, tuple(x for x in q.arrows if x[0] not in drop))


def cycle_B(p: GDPresentation, a: str) -> tuple[str, ...]:
    return p._walks[a]


def cycle_A(p: GDPresentation, a: str) -> tuple[str, ...]:
    """B_a without its last arrow; empty means the idempotent at s(a)."""
    return p._walks[a][:-1]


# ---------------------------------------------------------------------------
# basis and multiplication

@dataclass(frozen=True, order=True)
class BasisPath:
    """``e`` idempotent, ``p`` proper prefix of B_arrow of given length, ``w`` socle."""

    kind: str
    vertex: str
    arrow: str = ""
    length: int = 0

    def __repr__(self):
        if self.kind == "e":
            return f"e[{self.vertex}]"
        if self.kind == "w":
            return f"w[{self.vertex}]"
        return f"p[{self.arrow}^{self.length}]"


@dataclass(frozen=True)
class PathBasis:
    paths: tuple[BasisPath, ...]
    targets: Mapping[BasisPath, str]
    words: Mapping[BasisPath, tuple[str, ...]]

    def __len__(self):
        return len(self.paths)

    def __iter__(self) -> Iterator[BasisPath]:
        return iter(self.paths)

    def of_vertex(self, v: str) -> tuple[BasisPath, ...]:
        """Basis of the projective e_v A (paths starting at v)."""
        return tuple(x for x in self.paths if x.vertex == v)

    def target(self, x: BasisPath) -> str:
        return self.targets[x]


def path_basis(p: GDPresentation) -> PathBasis:
    q = p.quiver
    paths, targets, words = [], {}, {}
    for v in sorted(q.vertices):
        e = BasisPath("e", v)
        paths.append(e)
        targets[e] = v
        words[e] = ()
        for a in q.out_arrows(v):
            walk = p._walks[a]
            for k in range(1, len(walk)):
                x = BasisPath("p", v, a, k)
                paths.append(x)
                targets[x] = q.target(walk[k - 1])
                words[x] = walk[:k]
        w = BasisPath("w", v)
        paths.append(w)
        targets[w] = v
        words[w] = p._walks[p.socle_arrow(v)]
    return PathBasis(tuple(paths), targets, words)


def dimension(p: GDPresentation) -> int:
    """Sum of m*n^2 over g'-orbits, plus one for each 1-vertex."""
    return sum(p.weights[o[0]] * len(o) ** 2 for o in p.orbits) + len(p.one_vertices)


def _mul_basis(p: GDPresentation, u: BasisPath, v: BasisPath):
    """Product of two basis paths as (coefficient, basis path) or None."""
    basis = p.basis
    if u.kind == "e":
        return (1, v) if v.vertex == u.vertex else None
    if basis.target(u) != v.vertex:
        return None
    if v.kind == "e":
        return (1, u)
    if u.kind == "w" or v.kind == "w":
        return None
    a, k = u.arrow, u.length
    last = p._walks[a][k - 1]
    if v.arrow == p.gprime[last]:
        total = k + v.length
        L = p.cycle_length(a)
        if total < L:
            return (1, BasisPath("p", u.vertex, a, total))
        if total == L:
            return (1, BasisPath("w", u.vertex))
        return None
    if k == 1 and v.length == 1 and a == v.arrow and p.fprime[a] == a:
        c = p.b(u.vertex)
        return (c, BasisPath("w", u.vertex)) if c else None
    return None


def multiply(p: GDPresentation, u: "Element", v: "Element") -> "Element":
    fld = p.field
    out: dict[BasisPath, object] = {}
    for x, cx in u.terms.items():
        for y, cy in v.terms.items():
            r = _mul_basis(p, x, y)
            if r is None:
                continue
            c, z = r
            out[z] = fld.reduce(out.get(z, 0) + cx * cy * c)
    return Element(p, out)


class Element:
    """Linear combination of basis paths with nonzero coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GDPresentation, terms: Mapping[BasisPath, object]):
        fld = algebra.field
        self.algebra = algebra
        self.terms = {}
        for k, c in terms.items():
            c = fld(c)
            if c:
                self.terms[k] = c

    def _coerce(self, other):
        if isinstance(other, Element):
            return other
        return Element(self.algebra, {k: other for k in self.algebra.one().terms})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self.algebra, self, other)
        return Element(self.algebra, {k: c * self.algebra.field(other) for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        return Element(self.algebra, {k: c * self.algebra.field(scalar) for k, c in self.terms.items()})

    def __pow__(self, n: int):
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{k!r}" for k, c in sorted(self.terms.items()))


def symmetrizing_form(p: GDPresentation, x: Element):
    """Sum of the socle coefficients."""
    total = p.field(0)
    for k, c in x.terms.items():
        if k.kind == "w":
            total = p.field.reduce(total + c)
    return total


# ---------------------------------------------------------------------------
# Cartan matrix

def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    a = [[int(x) for x in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class CartanMatrix:
    vertices: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def determinant(self) -> int:
        return bareiss_determinant(self.rows)

    def entry(self, i: str, j: str) -> int:
        return self.rows[self.vertices.index(i)][self.vertices.index(j)]

    def is_symmetric(self) -> bool:
        n = len(self.rows)
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(n))

    def __str__(self):
        w = max(len(str(x)) for row in self.rows for x in row)
        return "\n".join(" ".join(str(x).rjust(w) for x in row) for row in self.rows)


def cartan_matrix(p: GDPresentation) -> CartanMatrix:
    verts = tuple(sorted(p.quiver.vertices))
    idx = {v: i for i, v in enumerate(verts)}
    rows = [[0] * len(verts) for _ in verts]
    basis = p.basis
    for x in basis:
        rows[idx[x.vertex]][idx[basis.target(x)]] += 1
    return CartanMatrix(verts, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# relations and the characteristic-not-2 isomorphism

def undeformed_relations(p: GDPresentation) -> list[tuple[str, list[tuple[int, tuple[str, ...]]]]]:
    """Generators of the ideal with every border scalar set to zero.

    Each relation is a name plus ``(coefficient, arrow word)`` terms.
    """
    rels = []
    for a in sorted(p.quiver.arrow_ids):
        b = p.fprime[a]
        if b in p.gprime:
            rels.append((f"{a}*{b}", [(1, (a, b))]))
    for v in sorted(p.quiver.vertices):
        outs = p.quiver.out_arrows(v)
        if len(outs) == 2:
            x, y = outs
            rels.append((f"B[{x}]-B[{y}]", [(1, cycle_B(p, x)), (-1, cycle_B(p, y))]))
    return rels


def evaluate_word(p: GDPresentation, word: Sequence[str], start: str, subst: Mapping[str, Element]) -> Element:
    if not word:
        return p.e(start)
    out = subst[word[0]]
    for a in word[1:]:
        out = out * subst[a]
    return out


def deformation_substitution(p: GDPresentation) -> dict[str, Element]:
    """h(a) = a - (b/2) A_{bar a} on border loops, identity elsewhere."""
    fld = p.field
    half = fld.inverse(fld(2))
    subst = {a: p.arrow(a) for a in p.quiver.arrow_ids}
    for v, loop in p.border_loops.items():
        c = fld.reduce(p.b(v) * half)
        if not c:
            continue
        other = p.bar(loop)
        subst[loop] = p.arrow(loop) - c * p.path(cycle_A(p, other), start=v)
    return subst


def verify_char_not_2_iso(p_deformed: GDPresentation) -> bool:
    """Check that h maps every undeformed relation to zero in the deformed algebra."""
    p = p_deformed
    if p.field.characteristic == 2:
        raise ValueError("the substitution divides by 2; characteristic 2 is refused")
    subst = deformation_substitution(p)
    for _, terms in undeformed_relations(p):
        total = p.zero()
        for c, word in terms:
            total = total + c * evaluate_word(p, word, p.quiver.source(word[0]), subst)
        if total:
            return False
    undeformed = p.with_border({})
    return len(path_basis(undeformed)) == len(path_basis(p))


def presentation_isomorphism(p: GDPresentation, q: GDPresentation, respect_data: bool = True):
    """Isomorphism of quivers with f' that also carries weights and border scalars."""
    from .quiver_core import structure_isomorphism
    if not respect_data:
        return structure_isomorphism(p.quiver, p.fprime, q.quiver, q.fprime)
    return structure_isomorphism(
        p.quiver, p.fprime, q.quiver, q.fprime,
        arrow_label1=p.weights.get, arrow_label2=q.weights.get,
        vertex_label1=lambda v: str(p.b(v)), vertex_label2=lambda v: str(q.b(v)))
