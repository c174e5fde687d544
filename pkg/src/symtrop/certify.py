"""Exact PSD tests, dual-cone membership and the explicit certificates."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt
from typing import Sequence

from .exactnum import QuadExt, UniPoly, format_rational, globally_nonnegative, sign, sqrt_of, to_rational
from .symfunc import SymFn, evaluate, p
from .symreduce import GramPencil, build_pencil

Matrix = list[list[Fraction]]


@dataclass
class Report:
    check_name: str
    status: str
    witness: dict = field(default_factory=dict)
    details: list["Report"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"check_name": self.check_name, "status": self.status, "witness": self.witness}
        if self.details:
            out["details"] = [d.to_json() for d in self.details]
        return out

    def summary(self, indent: int = 0) -> str:
        pad = "  " * indent
        lines = [f"{pad}[{self.status.upper()}] {self.check_name}"]
        for d in self.details:
            lines.append(d.summary(indent + 1))
        return "\n".join(lines)


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _combine(name: str, parts: list[Report], witness: dict | None = None) -> Report:
    return Report(name, _status(all(r.passed for r in parts)), witness or {}, parts)


# PSD ---------------------------------------------------------------------

def _as_matrix(m: Sequence[Sequence]) -> Matrix:
    out = [[to_rational(x) for x in row] for row in m]
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if out[i][j] != out[j][i]:
                raise ValueError("matrix is not symmetric")
    return out


def charpoly_shifted(m: Sequence[Sequence]) -> list[Fraction]:
    """[e_0, e_1, ..., e_n] with det(tI + M) = sum e_k t^(n-k) (Faddeev-LeVerrier)."""
    a = _as_matrix(m)
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)  # det(tI - A) = sum coeffs[i] t^i
    coeffs[n] = Fraction(1)
    prev = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        cur = [
            [sum(a[i][l] * prev[l][j] for l in range(n)) + (coeffs[n - k + 1] if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(sum(a[i][l] * cur[l][i] for l in range(n)) for i in range(n))
        coeffs[n - k] = -trace / k
        prev = cur
    return [(-1) ** k * coeffs[n - k] for k in range(n + 1)]


def is_psd(m: Sequence[Sequence]) -> bool:
    """Exact test: every coefficient of det(tI + M) is nonnegative."""
    return all(c >= 0 for c in charpoly_shifted(m))


def determinant(m: Sequence[Sequence]) -> Fraction:
    a = [[to_rational(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def principal_minors_nonnegative(m: Sequence[Sequence]) -> bool:
    """Independent PSD test: all principal minors are >= 0."""
    a = _as_matrix(m)
    n = len(a)
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            if determinant([[a[i][j] for j in idx] for i in idx]) < 0:
                return False
    return True


def dual_membership(point: Sequence, pencil: GramPencil) -> bool:
    return all(is_psd(block) for block in pencil.evaluate([to_rational(x) for x in point]))


def dual_membership_report(point: Sequence, pencil: GramPencil, name: str = "dual membership") -> Report:
    blocks = pencil.evaluate([to_rational(x) for x in point])
    parts = []
    for b, mat in zip(pencil.blocks, blocks):
        coeffs = charpoly_shifted(mat)
        parts.append(Report(
            f"block v{b.label} PSD",
            _status(all(c >= 0 for c in coeffs)),
            {"matrix": [[format_rational(x) for x in row] for row in mat],
             "charpoly_coefficients": [format_rational(c) for c in coeffs]},
        ))
    return _combine(name, parts, {"point": [format_rational(x) for x in point], "pencil": pencil.kind})


def moment_vector(coordinates: Sequence, x: Sequence) -> list[Fraction]:
    """Point evaluation x -> (p_lam(x))_lam; lies in the dual of every nonnegativity cone."""
    return [evaluate(SymFn.basis_element(lam), x) for lam in coordinates]


# decic -------------------------------------------------------------------

DECIC_DUAL_POINT = (450228, 75326, 24986, 12656, 8325, 4159, 2803)
DECIC_COEFFS = (Fraction(1, 18), 0, -3, 0, 3, 6, 0)
DECIC_WEIGHTS = (Fraction(1, 18), Fraction(6), Fraction(3))  # on p(2^5), p(6,4), p(8,2)


def decic_form() -> SymFn:
    return Fraction(1, 18) * p(2, 2, 2, 2, 2) + 3 * p(8, 2) + 6 * p(6, 4) - 3 * p(6, 2, 2)


def random_nonnegative_point(rng: random.Random, max_n: int = 6, max_num: int = 30, max_den: int = 10) -> tuple:
    n = rng.randint(1, max_n)
    return tuple(Fraction(rng.randint(0, max_num), rng.randint(1, max_den)) for _ in range(n))


def decic_chain(x: Sequence) -> dict:
    """Exact instance of the Lyapunov/AM-GM chain bounding 3 p(6,2^2) at x."""
    ps = {k: sum((Fraction(v) ** k for v in x), Fraction(0)) for k in (2, 4, 6, 8)}
    big = ps[2] ** 5
    mid = ps[6] * ps[4]
    top = ps[8] * ps[2]
    target = ps[6] * ps[2] ** 2
    a1, a2, a3 = DECIC_WEIGHTS
    terms = (a1 * big, a2 * mid, a3 * top)
    lyapunov_slack = big * mid * top - target ** 3
    amgm_slack = sum(terms) ** 3 - 27 * terms[0] * terms[1] * terms[2]
    value = sum(terms) - 3 * target
    return {"lyapunov_slack": lyapunov_slack, "amgm_slack": amgm_slack, "value": value}


def verify_decic(samples: int = 1000, seed: int = 20240610) -> Report:
    a = [Fraction(v) for v in DECIC_DUAL_POINT]
    pairing = sum((x * Fraction(c) for x, c in zip(a, DECIC_COEFFS)), Fraction(0))
    form = decic_form()
    pencil = build_pencil("B(10)")
    form_pairing = pencil.pair(form, a)
    r1 = Report("pairing <a, c> = -49/3", _status(pairing == Fraction(-49, 3) and form_pairing == pairing),
                {"value": format_rational(pairing)})
    r2 = dual_membership_report(a, pencil, "a lies in the dual of the B(10) SOS cone")
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        x = random_nonnegative_point(rng)
        chain = decic_chain(x)
        direct = evaluate(form, x)
        if direct != chain["value"] or min(chain.values()) < 0:
            bad.append([format_rational(v) for v in x])
    weights_ok = DECIC_WEIGHTS[0] * DECIC_WEIGHTS[1] * DECIC_WEIGHTS[2] == 1
    r3 = Report("decic nonnegative on random samples via the AM-GM chain", _status(not bad and weights_ok),
                {"samples": samples, "violations": bad[:5], "weight_product": "1/1" if weights_ok else "wrong"})
    return _combine("decic certificate", [r1, r2, r3], {"pairing": format_rational(pairing)})


# quartic -----------------------------------------------------------------

QUARTIC_SLOPE = Fraction(139, 20)


def quartic_g(x, u):
    """g_x(u) = 4u^2 - (139/20) x u + 4x^4 - 5x^2 + 4."""
    return 4 * u * u - QUARTIC_SLOPE * x * u + 4 * x ** 4 - 5 * x * x + 4


def quartic_discriminant() -> UniPoly:
    """Discriminant in u of g_x(u), as a polynomial in x."""
    b = UniPoly([0, -QUARTIC_SLOPE])
    c = UniPoly([4, 0, -5, 0, 4])
    return b * b - 16 * c


def reduction_quartics() -> list[UniPoly]:
    """(c - (139/20) x)^2 - discriminant(x) for c = 4*sqrt(2) and c = 8."""
    disc = quartic_discriminant()
    out = []
    for c in (4 * sqrt_of(2), Fraction(8)):
        lin = UniPoly([c, -QUARTIC_SLOPE])
        out.append(lin * lin - disc)
    return out


def _square_free_split(n: int) -> tuple[int, int]:
    """n = s^2 * r with r square-free."""
    s, r = 1, n
    k = 2
    while k * k <= r:
        while r % (k * k) == 0:
            r //= k * k
            s *= k
        k += 1
    return s, r


def quartic_at_inverse_root(x: Fraction, n: int):
    """g_x(n^(-1/2)) exactly, as a rational or an element of Q(sqrt r)."""
    root = isqrt(n)
    if root * root == n:
        return quartic_g(x, Fraction(1, root))
    s, r = _square_free_split(n)
    u = QuadExt(Fraction(0), Fraction(1, s * r), r)  # 1/(s sqrt r) = sqrt(r)/(s r)
    return quartic_g(x, u)


class _BiPoly(dict):
    """Polynomial in (x, u) as {(i, j): coeff}."""

    def __add__(self, other):
        out = _BiPoly(self)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return _BiPoly({k: v for k, v in out.items() if v != 0})

    def __mul__(self, other):
        if not isinstance(other, _BiPoly):
            return _BiPoly({k: v * other for k, v in self.items() if v * other != 0})
        out: dict = {}
        for (i, j), a in self.items():
            for (k, l), b in other.items():
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + a * b
        return _BiPoly({k: v for k, v in out.items() if v != 0})

    __rmul__ = __mul__


def boundary_identity() -> tuple[bool, list]:
    r3 = sqrt_of(3)
    x, u = _BiPoly({(1, 0): 1}), _BiPoly({(0, 1): 1})
    one = _BiPoly({(0, 0): 1})
    lhs = 4 * (u * u) + (-4 * r3) * (x * u) + 4 * (x * x * x * x) + (-5) * (x * x) + 4 * one
    first = 2 * u + (-r3) * x
    second = x * x + (-1) * one
    rhs = first * first + 4 * (second * second)
    half = r3 * Fraction(1, 2)
    zeros = [(Fraction(1), half), (Fraction(-1), -half)]

    def g(xv, uv):
        return 4 * uv * uv - 4 * r3 * xv * uv + 4 * xv ** 4 - 5 * xv * xv + 4

    vanish = all(g(xv, uv) == 0 for xv, uv in zeros)
    off = [(Fraction(1), -half), (Fraction(-1), half)]
    positive_elsewhere = all(sign(g(xv, uv)) > 0 for xv, uv in off)
    same = {k: v for k, v in lhs.items()} == {k: v for k, v in rhs.items()}
    return same and vanish and positive_elsewhere, zeros


def verify_quartic(grid_step: Fraction = Fraction(1, 20), grid_bound: int = 3, max_n: int = 50) -> Report:
    g_val = quartic_g(Fraction(1), Fraction(9, 10))
    r1 = Report("g_1(9/10) = -3/200", _status(g_val == Fraction(-3, 200)), {"value": format_rational(g_val)})

    expected = [
        UniPoly([96, QuadExt(0, Fraction(-278, 5), 2), -80, 0, 64]),
        UniPoly([128, Fraction(-556, 5), -80, 0, 64]),
    ]
    derived = reduction_quartics()
    nonneg = [globally_nonnegative(q) for q in expected]
    r2 = Report(
        "reduction quartics globally nonnegative",
        _status(all(nonneg) and derived == expected),
        {"quartics": ["64x^4 - 80x^2 - (278/5)sqrt(2)x + 96", "64x^4 - 80x^2 - (556/5)x + 128"],
         "nonnegative": nonneg, "match_discriminant_derivation": derived == expected},
    )

    ok, zeros = boundary_identity()
    r3 = Report("boundary identity (2u - sqrt3 x)^2 + 4(x^2-1)^2", _status(ok),
                {"zeros": [[str(a), str(b)] for a, b in zeros]})

    bad = []
    steps = int(2 * grid_bound / grid_step)
    count = 0
    for k in range(steps + 1):
        x = -grid_bound + k * grid_step
        for n in range(1, max_n + 1):
            count += 1
            if sign(quartic_at_inverse_root(x, n)) < 0:
                bad.append([format_rational(x), n])
    r4 = Report("g_x(n^(-1/2)) >= 0 on the grid", _status(not bad), {"points": count, "violations": bad[:5]})
    return _combine("quartic certificate", [r1, r2, r3, r4])


# SOS4 extreme rays --------------------------------------------------------

def sos4_matrices(point: Sequence) -> list[Matrix]:
    a, b, c, d, e = (to_rational(v) for v in point)
    return [[[a, b], [b, d]], [[b, c], [c, e]], [[d - e]]]


def verify_sos4_extreme_rays(samples: Sequence[tuple] | None = None) -> Report:
    if samples is None:
        samples = [(Fraction(t, 4), Fraction(s, 4)) for t in range(0, 13) for s in range(-t, t + 1)]
    pencil = build_pencil("S(4)")
    points = []
    for t, s in samples:
        t, s = to_rational(t), to_rational(s)
        if t < 0 or abs(s) > t:
            raise ValueError(f"sample (t={t}, s={s}) needs t >= 0 and |s| <= t")
        points.append((1, t * t, s * t * t, t ** 4, s * s * t * t))
    points += [(0, 0, 0, 1, 0), (0, 0, 0, 1, 1)]
    bad = []
    for pt in points:
        explicit = sos4_matrices(pt)
        from_pencil = pencil.evaluate([to_rational(v) for v in pt])
        if explicit != from_pencil or not all(is_psd(m) for m in explicit):
            bad.append([format_rational(v) for v in pt])
    return Report("extreme rays of the dual quartic SOS cone satisfy the spectrahedral constraints",
                  _status(not bad), {"points": len(points), "violations": bad})
