"""Tropical convexity on rational cones and the tropicalized moment cones.

Coordinates of the degree-2d cones are the even partitions of 2d in revlex
order (equivalently the partitions of d, doubled).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Sequence

from .partitions import Partition, enum_partitions, even_partitions, fuse, power, superdominates
from .polyhedra import Cone, cone_equal, in_span, intersect, minkowski_sum, primitive


def orthant_q(dim: int, i: int) -> Cone:
    """{x : x_i <= 0 and x_j >= 0 for j != i}."""
    rays = [[-1 if j == i else 0 for j in range(dim)]]
    rays += [[int(j == k) for j in range(dim)] for k in range(dim) if k != i]
    return Cone.from_v(dim, rays)


def tropical_sum(a: Sequence, b: Sequence) -> tuple:
    """Coordinatewise maximum."""
    return tuple(max(x, y) for x, y in zip(a, b))


def tropical_scale(c, a: Sequence) -> tuple:
    """Tropical scalar multiplication: add c to every coordinate."""
    return tuple(x + c for x in a)


def max_closure(m: Cone, v: Sequence) -> Cone:
    """Smallest max-closed set containing m, given a strictly positive v in its lineality space."""
    if len(v) != m.dim:
        raise ValueError("dimension mismatch")
    if not all(Fraction(x) > 0 for x in v):
        raise ValueError(f"lineality vector {list(v)} is not strictly positive")
    if not in_span(v, m.lineality_space()):
        raise ValueError(f"{list(v)} is not in the lineality space of the cone")
    pieces = [minkowski_sum(m, orthant_q(m.dim, i)) for i in range(m.dim)]
    out = intersect(*pieces)
    return Cone.from_h(m.dim, out.facets(), out.equations())


def tcone(m: Cone) -> Cone:
    """Tropical conical hull: intersection over j of m + R*1 + Q_j."""
    ones = Cone.from_v(m.dim, lineality=[[1] * m.dim])
    base = minkowski_sum(m, ones)
    pieces = [minkowski_sum(base, orthant_q(m.dim, j)) for j in range(m.dim)]
    out = intersect(*pieces)
    return Cone.from_h(m.dim, out.facets(), out.equations())


def _positive_lineality_vector(c: Cone):
    basis = c.lineality_space()
    candidates = [b for b in basis] + [tuple(-x for x in b) for b in basis]
    if basis:
        candidates.append(tuple(sum(col) for col in zip(*basis)))
    for v in candidates:
        if all(x > 0 for x in v):
            return v
    return None


def double_hull(s: Cone, v: Sequence | None = None, max_rounds: int = 10, with_rounds: bool = False):
    """Smallest closed, convex, max-closed cone containing s."""
    if v is None:
        v = _positive_lineality_vector(s)
        if v is None:
            raise ValueError("no strictly positive vector found in the lineality space")
    current = Cone.from_h(s.dim, s.facets(), s.equations())
    for rounds in range(1, max_rounds + 1):
        nxt = max_closure(current, v)
        if cone_equal(nxt, current):
            return (current, rounds) if with_rounds else current
        current = nxt
    raise RuntimeError("double hull did not stabilize")


def trop_vandermonde_inequalities(d: int) -> list[tuple[int, ...]]:
    rows = []
    for k in range(d - 2):
        row = [0] * d
        row[k], row[k + 1], row[k + 2] = 1, -2, 1
        rows.append(tuple(row))
    row = [0] * d
    row[d - 2], row[d - 1] = d, -(d - 1)
    rows.append(tuple(row))
    return rows


def trop_vandermonde_generators(d: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Rays (k, k-1, ..., 1, 0, ..., 0) for k < d-1, the all-ones ray, lineality (1..d)."""
    rays = [tuple(max(k - i, 0) for i in range(d)) for k in range(1, d - 1)]
    rays.append((1,) * d)
    return rays, [tuple(range(1, d + 1))]


@lru_cache(maxsize=None)
def trop_vandermonde(d: int) -> Cone:
    if d < 2:
        raise ValueError("d must be at least 2")
    cone = Cone.from_h(d, trop_vandermonde_inequalities(d))
    rays, lin = trop_vandermonde_generators(d)
    if not cone_equal(cone, Cone.from_v(d, rays, lin)):
        raise AssertionError("inequality and generator descriptions disagree")
    return cone


def tropicalized_moment_map(d: int) -> list[tuple[int, ...]]:
    """Rows lam(1..d) for lam |- d in revlex order."""
    return [lam.multiplicity_vector(d) for lam in enum_partitions(d)]


def apply_moment_map(d: int, vec: Sequence) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, vec)) for row in tropicalized_moment_map(d))


@lru_cache(maxsize=None)
def trop_bp_dual(d: int) -> Cone:
    """tcone of the image of trop(N_d) under the tropicalized moment map."""
    if not 2 <= d <= 5:
        raise ValueError("trop_bp_dual supports 2 <= d <= 5")
    base = trop_vandermonde(d)
    rays = [apply_moment_map(d, r) for r in base.extreme_rays()]
    lin = [apply_moment_map(d, l) for l in base.lineality_space()]
    dim = len(enum_partitions(d))
    return tcone(Cone.from_v(dim, rays, lin))


def t_k_inequalities(d: int, k: int) -> list[tuple[int, ...]]:
    if d < 2 or k < 1:
        raise ValueError("need d >= 2 and k >= 1")
    coords = even_partitions(d)
    seen: dict[tuple[int, ...], None] = {}
    for combo in combinations_with_replacement(range(len(coords)), k):
        fused = fuse(coords[i] for i in combo)
        for j, mu in enumerate(coords):
            if not superdominates(fused, power(mu, k)):
                continue
            row = [0] * len(coords)
            for i in combo:
                row[i] += 1
            row[j] -= k
            if any(row):
                seen.setdefault(primitive(row))
    return list(seen)


@lru_cache(maxsize=None)
def t_k_cone(d: int, k: int) -> Cone:
    ineqs = t_k_inequalities(d, k)
    raw = Cone.from_h(len(even_partitions(d)), ineqs)
    return Cone.from_h(raw.dim, raw.facets(), raw.equations())


def stabilization_tau(d: int, k_max: int = 4) -> tuple[int | None, bool]:
    """Smallest k <= k_max with T^(k) equal to trop_bp_dual(d)."""
    target = trop_bp_dual(d)
    for k in range(1, k_max + 1):
        if cone_equal(t_k_cone(d, k), target):
            return k, True
    return None, False


def coordinate_labels(d: int) -> list[str]:
    return ["y[" + ",".join(map(str, lam)) + "]" for lam in even_partitions(d)]


def format_inequality(normal: Sequence[int], labels: Sequence[str]) -> str:
    """Render a . y >= 0 as 'lhs >= rhs' with nonnegative coefficients on both sides."""

    def side(pairs):
        if not pairs:
            return "0"
        return " + ".join(name if c == 1 else f"{c}*{name}" for c, name in pairs)

    lhs = [(c, labels[i]) for i, c in enumerate(normal) if c > 0]
    rhs = [(-c, labels[i]) for i, c in enumerate(normal) if c < 0]
    return f"{side(lhs)} >= {side(rhs)}"


def parse_inequality(text: str, labels: Sequence[str]) -> tuple[int, ...]:
    """Inverse of :func:`format_inequality`."""
    lhs, rhs = text.split(">=")
    index = {name: i for i, name in enumerate(labels)}
    row = [0] * len(labels)
    for sign, chunk in ((1, lhs), (-1, rhs)):
        for term in chunk.split(" + "):
            term = term.strip()
            if term == "0":
                continue
            coeff, _, name = term.rpartition("*")
            row[index[name]] += sign * (int(coeff) if coeff else 1)
    return primitive(row)


def inequality_strings(cone: Cone, d: int) -> list[str]:
    labels = coordinate_labels(d)
    return [format_inequality(f, labels) for f in cone.facets()]


def facet_set(cone: Cone) -> set[tuple[int, ...]]:
    return set(cone.facets())
