"""Rational polyhedral cones via the double description method.

A :class:`Cone` is given by an H-representation (``A x >= 0``, ``E x = 0``)
or a V-representation (rays plus a lineality basis); the other one is
computed on demand.  All vectors are kept as primitive integer tuples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .exactnum import format_rational, to_rational

Vector = tuple[int, ...]


def primitive(vec: Sequence) -> Vector:
    """Scale a rational vector to the integer vector with coprime entries (sign kept)."""
    qs = [to_rational(x) for x in vec]
    den = reduce(lcm, (q.denominator for q in qs), 1)
    ints = [int(q * den) for q in qs]
    g = reduce(gcd, ints, 0)
    return tuple(x // g for x in ints) if g else tuple(ints)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def rref(rows: Iterable[Sequence]) -> list[list[Fraction]]:
    """Reduced row echelon form with zero rows dropped."""
    m = [[to_rational(x) for x in r] for r in rows]
    out: list[list[Fraction]] = []
    if not m:
        return out
    ncols = len(m[0])
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[row])]
        row += 1
        if row == len(m):
            break
    return [r for r in m[:row]]


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows))


def canonical_basis(rows: Iterable[Sequence]) -> list[Vector]:
    return [primitive(r) for r in rref(rows)]


def _double_description(dim: int, inequalities: Sequence[Vector], equations: Sequence[Vector]):
    """Extreme rays and lineality basis of {x : A x >= 0, E x = 0}."""
    lineality: list[list[int]] = [[int(i == j) for j in range(dim)] for i in range(dim)]
    rays: list[tuple[list[int], frozenset]] = []
    constraints = [(tuple(a), False) for a in inequalities] + [(tuple(e), True) for e in equations]
    for idx, (a, is_eq) in enumerate(constraints):
        pivot = next((k for k, l in enumerate(lineality) if dot(a, l)), None)
        if pivot is not None:
            l0 = lineality.pop(pivot)
            v0 = dot(a, l0)
            if v0 < 0:
                l0, v0 = [-x for x in l0], -v0
            lineality = [
                list(primitive([v0 * x - dot(a, l) * y for x, y in zip(l, l0)])) for l in lineality
            ]
            rays = [
                (list(primitive([v0 * x - dot(a, r) * y for x, y in zip(r, l0)])), z | {idx})
                for r, z in rays
            ]
            if not is_eq:
                rays.append((list(primitive(l0)), frozenset(range(idx))))
            continue
        pos, zero, neg = [], [], []
        for k, (r, z) in enumerate(rays):
            v = dot(a, r)
            (pos if v > 0 else neg if v < 0 else zero).append((k, r, z, v))
        threshold = dim - len(lineality) - 2
        new_rays = [] if is_eq else [(r, z) for _, r, z, _ in pos]
        new_rays += [(r, z | {idx}) for _, r, z, _ in zero]
        for kp, rp, zp, vp in pos:
            for kn, rn, zn, vn in neg:
                common = zp & zn
                if len(common) < threshold:
                    continue
                # combinatorial adjacency test
                if any(common <= z for k, (_, z) in enumerate(rays) if k != kp and k != kn):
                    continue
                combo = [vp * x - vn * y for x, y in zip(rn, rp)]
                new_rays.append((list(primitive(combo)), common | {idx}))
        rays = new_rays
    ray_set = sorted({tuple(r) for r, _ in rays if any(r)}, reverse=True)
    return ray_set, canonical_basis(lineality)


class Cone:
    """Rational polyhedral cone in R^dim."""

    def __init__(
        self,
        dim: int,
        inequalities: Iterable[Sequence] | None = None,
        equations: Iterable[Sequence] | None = None,
        rays: Iterable[Sequence] | None = None,
        lineality: Iterable[Sequence] | None = None,
    ):
        self.dim = dim
        has_h = inequalities is not None or equations is not None
        has_v = rays is not None or lineality is not None
        if has_h == has_v and has_h:
            raise ValueError("give either an H- or a V-representation, not both")
        self._raw_h = None
        self._raw_v = None
        if has_h:
            self._raw_h = (self._vectors(inequalities or ()), self._vectors(equations or ()))
        elif has_v:
            self._raw_v = (self._vectors(rays or ()), self._vectors(lineality or ()))
        else:
            # no data at all: the whole space
            self._raw_h = ([], [])
        self._h = None
        self._v = None

    def _vectors(self, rows) -> list[Vector]:
        out = []
        for r in rows:
            if len(r) != self.dim:
                raise ValueError(f"vector {list(r)} has length {len(r)}, expected {self.dim}")
            v = primitive(r)
            if any(v):
                out.append(v)
        return out

    @classmethod
    def from_h(cls, dim, inequalities=(), equations=()) -> "Cone":
        return cls(dim, inequalities=list(inequalities), equations=list(equations))

    @classmethod
    def from_v(cls, dim, rays=(), lineality=()) -> "Cone":
        return cls(dim, rays=list(rays), lineality=list(lineality))

    @classmethod
    def whole_space(cls, dim) -> "Cone":
        return cls.from_h(dim)

    @classmethod
    def orthant(cls, dim) -> "Cone":
        return cls.from_h(dim, [[int(i == j) for j in range(dim)] for i in range(dim)])

    # representations -------------------------------------------------

    def _vrep(self):
        if self._v is None:
            if self._raw_h is not None:
                self._v = _double_description(self.dim, *self._raw_h)
            else:
                facets, eqs = self._hrep()
                self._v = _double_description(self.dim, facets, eqs)
        return self._v

    def _hrep(self):
        if self._h is None:
            rays, lin = self._raw_v if self._raw_v is not None else self._vrep()
            self._h = _double_description(self.dim, rays, lin)
        return self._h

    def extreme_rays(self) -> list[Vector]:
        return list(self._vrep()[0])

    def lineality_space(self) -> list[Vector]:
        return list(self._vrep()[1])

    def facets(self) -> list[Vector]:
        return list(self._hrep()[0])

    def equations(self) -> list[Vector]:
        return list(self._hrep()[1])

    def _constraints(self):
        return self._raw_h if self._raw_h is not None else self._hrep()

    def _generators(self):
        return self._raw_v if self._raw_v is not None else self._vrep()

    # predicates --------------------------------------------------------

    def contains_point(self, x: Sequence) -> bool:
        if len(x) != self.dim:
            raise ValueError("dimension mismatch")
        ineqs, eqs = self._constraints()
        x = [to_rational(v) for v in x]
        return all(dot(a, x) >= 0 for a in ineqs) and all(dot(e, x) == 0 for e in eqs)

    def violated(self, x: Sequence) -> list[Vector]:
        x = [to_rational(v) for v in x]
        return [a for a in self.facets() if dot(a, x) < 0]

    def contains(self, other: "Cone") -> bool:
        _same_dim(self, other)
        ineqs, eqs = self._constraints()
        rays, lin = other._generators()
        for r in rays:
            if any(dot(a, r) < 0 for a in ineqs) or any(dot(e, r) for e in eqs):
                return False
        for l in lin:
            if any(dot(a, l) for a in ineqs) or any(dot(e, l) for e in eqs):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return cone_equal(self, other)

    __hash__ = None

    def is_full_dimensional(self) -> bool:
        return not self.equations()

    # serialization -----------------------------------------------------

    def to_json(self) -> dict:
        def fmt(rows):
            return [[format_rational(x) for x in r] for r in rows]

        return {
            "dim": self.dim,
            "inequalities": fmt(self.facets()),
            "equations": fmt(self.equations()),
            "rays": fmt(self.extreme_rays()),
            "lineality": fmt(self.lineality_space()),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cone":
        dim = data["dim"]
        if data.get("inequalities") or data.get("equations"):
            return cls.from_h(dim, [[Fraction(x) for x in r] for r in data.get("inequalities", [])],
                              [[Fraction(x) for x in r] for r in data.get("equations", [])])
        return cls.from_v(dim, [[Fraction(x) for x in r] for r in data.get("rays", [])],
                          [[Fraction(x) for x in r] for r in data.get("lineality", [])])

    def __repr__(self):
        return f"Cone(dim={self.dim}, facets={self.facets()}, equations={self.equations()})"


def _same_dim(a: Cone, b: Cone) -> None:
    if a.dim != b.dim:
        raise ValueError(f"ambient dimension mismatch: {a.dim} vs {b.dim}")


def dd_convert(c: Cone, direction: str) -> Cone:
    """Return the cone in the requested representation ("H->V" or "V->H"), irredundant."""
    if direction in ("H->V", "HV"):
        rays, lin = c._vrep()
        return Cone.from_v(c.dim, rays, lin)
    if direction in ("V->H", "VH"):
        facets, eqs = c._hrep()
        return Cone.from_h(c.dim, facets, eqs)
    raise ValueError(f"unknown direction {direction!r}")


def dual(c: Cone) -> Cone:
    """{a : a.x >= 0 for every x in c}."""
    rays, lin = c._generators()
    return Cone.from_h(c.dim, rays, lin)


def intersect(*cones: Cone) -> Cone:
    for other in cones[1:]:
        _same_dim(cones[0], other)
    ineqs, eqs = [], []
    for c in cones:
        a, e = c._constraints()
        ineqs += a
        eqs += e
    return Cone.from_h(cones[0].dim, ineqs, eqs)


def minkowski_sum(*cones: Cone) -> Cone:
    for other in cones[1:]:
        _same_dim(cones[0], other)
    rays, lin = [], []
    for c in cones:
        r, l = c._generators()
        rays += r
        lin += l
    return Cone.from_v(cones[0].dim, rays, lin)


def contains_point(c: Cone, x: Sequence) -> bool:
    return c.contains_point(x)


def cone_equal(a: Cone, b: Cone) -> bool:
    _same_dim(a, b)
    return a.contains(b) and b.contains(a)


def facets(c: Cone) -> list[Vector]:
    return c.facets()


def extreme_rays(c: Cone) -> list[Vector]:
    return c.extreme_rays()


def lineality_space(c: Cone) -> list[Vector]:
    return c.lineality_space()


def in_span(vec: Sequence, basis: Sequence[Sequence]) -> bool:
    return rank(list(basis) + [list(vec)]) == rank(basis)
