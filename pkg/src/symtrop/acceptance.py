"""The ten acceptance checks, runnable from the CLI and from pytest."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

from . import certify, partitions as pt, polyhedra as ph, symfunc as sf, symreduce as sr, tropical as tr
from .partitions import Partition, parse_partition as P

SEED = 1729
PROPERTY_CASES = 200


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"criterion {self.number:2d} [{'PASS' if self.passed else 'FAIL'}] {self.title}: {self.detail}"


# fixtures ------------------------------------------------------------------

LAMBDA5_CHAIN = ["1^5", "2,1^3", "3,1^2", "2^2,1", "4,1", "3,2", "5"]

LAMBDA8_NODES = {
    "a": "1^8", "b": "2,1^6", "c": "3,1^5", "d": "2^2,1^4", "e": "4,1^4", "f": "3,2,1^3",
    "g": "2^3,1^2", "h": "5,1^3", "i": "4,2,1^2", "j": "3^2,1^2", "k": "3,2^2,1", "u": "2^4",
    "l": "6,1^2", "m": "5,2,1", "n": "4,3,1", "o": "4,2^2", "v": "3^2,2", "p": "7,1",
    "q": "6,2", "r": "5,3", "s": "4^2", "t": "8",
}
LAMBDA8_EDGES = (
    "a-b b-c c-d d-e e-f f-g f-h h-i g-i i-j j-k k-u u-o o-v v-q j-l "
    "l-m m-n n-o k-m n-p p-q q-r r-s s-t"
).split()

TROP_N = {
    3: ["y1 + y3 >= 2*y2", "3*y2 >= 2*y3"],
    4: ["y1 + y3 >= 2*y2", "y2 + y4 >= 2*y3", "4*y3 >= 3*y4"],
    5: ["y1 + y3 >= 2*y2", "y2 + y4 >= 2*y3", "y3 + y5 >= 2*y4", "5*y4 >= 4*y5"],
}

L_SETS = {
    2: ["y[2,2] >= y[4]"],
    3: ["y[2,2,2] + y[6] >= 2*y[4,2]", "y[4,2] >= y[6]"],
    4: [
        "y[2,2,2,2] + y[4,4] >= 2*y[4,2,2]",
        "y[4,2,2] + y[8] >= 2*y[6,2]",
        "y[6,2] >= y[4,4]",
        "y[4,4] >= y[8]",
    ],
    5: [
        "y[6,2,2] >= y[4,4,2]",
        "y[8,2] >= y[6,4]",
        "y[6,4] >= y[10]",
        "y[6,2,2] + y[10] >= 2*y[8,2]",
        "y[4,4,2] + y[10] >= 2*y[6,4]",
        "y[4,4,2] >= y[8,2]",
        "y[4,2,2,2] + y[6,4] >= 2*y[4,4,2]",
        "y[4,2,2,2] + y[8,2] >= 2*y[6,2,2]",
        "y[2,2,2,2,2] + y[4,4,2] >= 2*y[4,2,2,2]",
    ],
}
EXTRA_DECIC_FACET = "y[2,2,2,2,2] + y[6,4] + y[8,2] >= 3*y[6,2,2]"
GAMMA5 = (0, -3, -5, -6, -7, -9, -9)

# Reference pencil blocks; letters a..g name p over the even partitions of 10 in revlex order.
DECIC_LETTERS = dict(zip("abcdefg", (P("2^5"), P("4,2^3"), P("6,2^2"), P("4^2,2"), P("8,2"), P("6,4"), P("10"))))


def _letters(expr: str) -> sf.SymFn:
    """Parse a combination like '3/2*c - d' over the letters a..g."""
    out = sf.SymFn.zero(10)
    for chunk in expr.replace("-", "+-").split("+"):
        chunk = chunk.strip()
        if not chunk or chunk == "0":
            continue
        neg = chunk.startswith("-")
        chunk = chunk.lstrip("-").strip()
        coeff, _, name = chunk.rpartition("*")
        c = Fraction(coeff) if coeff else Fraction(1)
        out = out + (-c if neg else c) * sf.SymFn.basis_element(DECIC_LETTERS[name])
    return out


def _p(*specs: tuple) -> sf.SymFn:
    acc = None
    for c, lam in specs:
        term = Fraction(c) * sf.SymFn.basis_element(P(lam))
        acc = term if acc is None else acc + term
    return acc


REFERENCE_PENCILS = {
    "B(6)": {
        "(1,0)": [[_p((1, "2^3")), _p((1, "4,2"))], [_p((1, "4,2")), _p((1, "6"))]],
        "(1,1)": [[_p((1, "4,2"), (-1, "6"))]],
        "(3,0)": [[_p((1, "2^3"), (-3, "4,2"), (2, "6"))]],
    },
    "B(8)": {
        "(0,0)": [[_p((1, "2^4")), _p((1, "4,2^2"))], [_p((1, "4,2^2")), _p((1, "4^2"))]],
        "(0,1)": [[_p((1, "4,2^2")), _p((1, "6,2"))], [_p((1, "6,2")), _p((1, "8"))]],
        "(2,0)": [
            [_p((1, "2^4"), (-1, "4,2^2")), _p((1, "4,2^2"), (-1, "6,2")), sf.SymFn.zero(8)],
            [_p((1, "4,2^2"), (-1, "6,2")), _p(("1/2", "6,2"), ("1/2", "4^2"), (-1, "8")), sf.SymFn.zero(8)],
            [sf.SymFn.zero(8), sf.SymFn.zero(8), _p((2, "6,2"), (-2, "4^2"))],
        ],
        "(0,2)": [[_p((1, "4^2"), (-1, "8"))]],
        "(2,1)": [[_p((1, "4,2^2"), (-2, "6,2"), (-1, "4^2"), (2, "8"))]],
        "(4,0)": [[_p((1, "2^4"), (-6, "4,2^2"), (8, "6,2"), (3, "4^2"), (-6, "8"))]],
    },
    "B(10)": {
        "(1,0)": [["a", "b", "b", "c"], ["b", "c", "d", "e"], ["b", "d", "d", "f"], ["c", "e", "f", "g"]],
        "(1,1)": [["b-c", "c-e", "d-e"], ["c-e", "e-g", "f-g"], ["d-e", "f-g", "f-g"]],
        "(3,0)": [
            ["a-3*b+2*c", "b-2*c-d+2*e", "0", "0"],
            ["b-2*c-d+2*e", "1/3*c+2/3*d-4/3*e-5/3*f+2*g", "0", "0"],
            ["0", "0", "3/2*c-3/2*d-3/2*e+3/2*f", "0"],
            ["0", "0", "0", "2*c-2*d-2*e+2*f"],
        ],
        "(1,2)": [["d-e-2*f+2*g"]],
        "(3,1)": [["b-3*c-3*d+6*e+5*f-6*g"]],
        "(5,0)": [["a-10*b+20*c+15*d-30*e-20*f+24*g"]],
    },
}


def reference_matrix(kind: str, label: str) -> list[list[sf.SymFn]]:
    rows = REFERENCE_PENCILS[kind][label]
    return [[_letters(e) if isinstance(e, str) else e for e in row] for row in rows]


# criteria ------------------------------------------------------------------

def criterion_1() -> Outcome:
    chain = [P(x) for x in LAMBDA5_CHAIN]
    ok_chain = list(pt.enum_partitions(5)) == chain and pt.hasse(5) == list(zip(chain, chain[1:]))
    ok_chain &= all(pt.superdominates(a, b) for a, b in combinations(chain, 2))
    lam6 = pt.enum_partitions(6)
    incomparable = [(a, b) for a, b in combinations(lam6, 2)
                    if not pt.superdominates(a, b) and not pt.superdominates(b, a)]
    fixture = {frozenset((P(LAMBDA8_NODES[e[0]]), P(LAMBDA8_NODES[e[2]]))) for e in LAMBDA8_EDGES}
    computed = {frozenset(e) for e in pt.hasse(8)}
    ok_hasse = fixture == computed and len(pt.enum_partitions(8)) == 22
    detail = (f"chain(5)={ok_chain}, incomparable pairs in Lambda_6={len(incomparable)} "
              f"e.g. {incomparable[0][0].label()} vs {incomparable[0][1].label()}, "
              f"Lambda_8 edges {len(computed)} vs fixture {len(fixture)} equal={ok_hasse}")
    return Outcome(1, "order structure", ok_chain and bool(incomparable) and ok_hasse, detail)


def criterion_2(points: int = 500) -> Outcome:
    rng = random.Random(SEED)
    pts = [certify.random_nonnegative_point(rng) for _ in range(points)]
    sound_fail = []
    comparable = 0
    incomparable = 0
    missing = []
    for d in range(1, 9):
        lam_d = pt.enum_partitions(d)
        values = []
        for x in pts:
            sums = [sum((v ** k for v in x), Fraction(0)) for k in range(d + 1)]
            row = {}
            for lam in lam_d:
                acc = Fraction(1)
                for k in lam:
                    acc *= sums[k]
                row[lam] = acc
            values.append(row)
        for lam in lam_d:
            for mu in lam_d:
                if lam == mu:
                    continue
                if pt.superdominates(lam, mu):
                    comparable += 1
                    if any(row[lam] < row[mu] for row in values):
                        sound_fail.append((lam.label(), mu.label()))
                else:
                    incomparable += 1
                    if sf.find_binomial_violation(lam, mu) is None:
                        missing.append((lam.label(), mu.label()))
    ok = not sound_fail and not missing
    detail = (f"{comparable} comparable pairs x {points} points, violations={len(sound_fail)}; "
              f"{incomparable} non-superdominating pairs, witnesses missing={len(missing)}")
    return Outcome(2, "power-sum order (both directions)", ok, detail)


def criterion_3() -> Outcome:
    notes = []
    ok = True
    for d, strings in TROP_N.items():
        labels = [f"y{i}" for i in range(1, d + 1)]
        expected = {tr.parse_inequality(s, labels) for s in strings}
        cone = tr.trop_vandermonde(d)
        facets_ok = set(cone.facets()) == expected
        lin_ok = cone.lineality_space() == [tuple(range(1, d + 1))]
        rays, lin = tr.trop_vandermonde_generators(d)
        computed_rays = cone.extreme_rays()
        rays_ok = len(computed_rays) == d - 1 and all(
            any(_same_ray_mod(r, c, lin) for c in computed_rays) for r in rays
        )
        alpha = tuple(range(1, d + 1))
        hull, rounds = tr.double_hull(ph.Cone.from_v(d, [(1,) * d], [alpha]), with_rounds=True)
        dh_ok = ph.cone_equal(hull, cone)
        ok &= facets_ok and lin_ok and rays_ok and dh_ok
        notes.append(f"d={d}: facets={facets_ok} lineality={lin_ok} rays={rays_ok} double-hull={dh_ok} ({rounds} rounds)")
    return Outcome(3, "tropicalized Vandermonde cells", ok, "; ".join(notes))


def _same_ray_mod(r, s, lin) -> bool:
    """Whether r and s span the same ray modulo span(lin)."""
    complement = ph.Cone.from_h(len(r), equations=lin).lineality_space() if lin else [
        tuple(int(i == j) for j in range(len(r))) for i in range(len(r))
    ]
    a = [ph.dot(w, r) for w in complement]
    b = [ph.dot(w, s) for w in complement]
    return ph.primitive(a) == ph.primitive(b)


def _facets_from_strings(strings, d):
    labels = tr.coordinate_labels(d)
    return {tr.parse_inequality(s, labels) for s in strings}


def criterion_4() -> Outcome:
    notes = []
    ok = True
    for d in (2, 3, 4, 5):
        cone = sr.trop_of_sos(sr.build_pencil(f"B({2 * d})"))
        got = set(cone.facets())
        want = _facets_from_strings(L_SETS[d], d)
        ok &= got == want
        notes.append(f"B({2 * d}): {len(got)} facets, equal to L_{d - 1}={got == want}")
    return Outcome(4, "trop of the SOS dual cones", ok, "; ".join(notes))


def criterion_5() -> Outcome:
    notes = []
    ok = True
    for d in (3, 4):
        got = set(tr.trop_bp_dual(d).facets())
        eq = got == _facets_from_strings(L_SETS[d], d)
        ok &= eq
        notes.append(f"d={d}: equal to L_{d - 1}={eq}")
    got = set(tr.trop_bp_dual(5).facets())
    l4 = _facets_from_strings(L_SETS[5], 5)
    extra = _facets_from_strings([EXTRA_DECIC_FACET], 5)
    eq5 = got == l4 | extra and not (extra & l4)
    ok &= eq5
    notes.append(f"d=5: L_4 plus the extra facet only={eq5} ({len(got)} facets)")
    return Outcome(5, "trop of the nonnegativity dual cones", ok, "; ".join(notes))


def criterion_6() -> Outcome:
    notes = []
    t61 = set(tr.t_k_cone(3, 1).facets()) == _facets_from_strings(["y[2,2,2] >= y[4,2]", "y[4,2] >= y[6]"], 3)
    t62 = set(tr.t_k_cone(3, 2).facets()) == _facets_from_strings(L_SETS[3], 3)
    gamma = tr.t_k_cone(5, 2).contains_point(GAMMA5) and not tr.t_k_cone(5, 3).contains_point(GAMMA5)
    strict = tr.t_k_cone(5, 2).contains(tr.t_k_cone(5, 3)) and not ph.cone_equal(tr.t_k_cone(5, 2), tr.t_k_cone(5, 3))
    nested = all(tr.t_k_cone(d, k).contains(tr.t_k_cone(d, k + 1)) for d in range(2, 6) for k in range(1, 4))
    inside = all(tr.t_k_cone(d, k).contains(tr.trop_bp_dual(d)) for d in range(2, 6) for k in range(1, 5))
    notes.append(f"T6(1) chain={t61}, T6(2)=L_2={t62}, gamma_5 separates={gamma}, strict={strict}, "
                 f"nested k<=4={nested}, trop(BP*) inside every T(k)={inside}")
    tau = {d: tr.stabilization_tau(d, 4) for d in (3, 4, 5)}
    notes.append("tau: " + ", ".join(f"d={d}->{t[0]}" for d, t in tau.items()))
    return Outcome(6, "T-hierarchy", t61 and t62 and gamma and strict and nested and inside, "; ".join(notes))


def criterion_7() -> Outcome:
    mismatches = []
    for kind in ("B(6)", "B(8)", "B(10)"):
        pencil = sr.build_pencil(kind)
        labels = [b.label for b in pencil.blocks]
        if labels != list(REFERENCE_PENCILS[kind]):
            mismatches.append(f"{kind} block order {labels}")
            continue
        for block in pencil.blocks:
            if block.matrix != reference_matrix(kind, block.label):
                mismatches.append(f"{kind} v{block.label}")
    # finite-n symmetrization of the degree-6 rows
    prefactor_ok = True
    for n in (6, 8, 10):
        nf = Fraction(n)
        two = sr.finite_gram_entry(((1, 2), ()), ((1, 2), ()), n)
        three = sr.finite_gram_entry(((1, 1, 1), ()), ((1, 1, 1), ()), n)
        prefactor_ok &= two.terms == ((P("4,2"), P(""), nf ** 2 / (2 * Fraction(n * (n - 1), 2))),)
        prefactor_ok &= three.terms == ((P("2^3"), P(""), nf ** 3 / Fraction(n * (n - 1) * (n - 2), 6)),)
        v1 = sr.build_pencil("B(6)").blocks[0].vector.terms
        for s in v1:
            for t in v1:
                prefactor_ok &= sr.finite_gram_entry(s, t, n).to_powersum() == sr.limit_gram_entry(s, t)
    detail = f"reference block mismatches={mismatches or 'none'}; finite-n prefactors at n=6,8,10 ok={prefactor_ok}"
    return Outcome(7, "limit Gram pencils", not mismatches and prefactor_ok, detail)


def criterion_8() -> Outcome:
    report = certify.verify_decic(samples=1000)
    r1, r2, r3 = report.details
    detail = (f"<a,c>={r1.witness['value']} ({r1.status}); blocks PSD at a: "
              f"{sum(b.passed for b in r2.details)}/{len(r2.details)}; samples: {r3.witness['samples']} "
              f"violations={len(r3.witness['violations'])}")
    return Outcome(8, "decic certificate", report.passed and len(r2.details) == 6, detail)


def criterion_9() -> Outcome:
    report = certify.verify_quartic()
    detail = "; ".join(f"{d.check_name}: {d.status}" for d in report.details)
    return Outcome(9, "quartic certificate", report.passed, detail)


# property suites -------------------------------------------------------------

def _random_partition(rng: random.Random, d: int) -> Partition:
    return rng.choice(pt.enum_partitions(d))


def partitions_properties(cases: int = PROPERTY_CASES, seed: int = SEED) -> list[str]:
    rng = random.Random(seed)
    failures = []
    for case in range(cases):
        d = rng.randint(1, 10)
        lam, mu, nu = (_random_partition(rng, d) for _ in range(3))
        sd = pt.superdominates
        if not sd(lam, lam):
            failures.append(f"reflexive {lam}")
        if sd(lam, mu) and sd(mu, lam) and lam != mu:
            failures.append(f"antisymmetric {lam} {mu}")
        if sd(lam, mu) and sd(mu, nu) and not sd(lam, nu):
            failures.append(f"transitive {lam} {mu} {nu}")
        if sd(lam, mu) and lam != mu and not (len(lam) >= len(mu) and pt.revlex_cmp(lam, mu) > 0):
            failures.append(f"length/revlex {lam} {mu}")
        if len(lam) == len(mu) and sd(lam, mu) != pt.dominates(lam, mu):
            failures.append(f"equal-length dominance {lam} {mu}")
        if len(lam) > 1:
            st = pt.star(lam)
            if not (sd(lam, st) and lam != st):
                failures.append(f"star {lam}")
            if pt.covers(lam, st) != (lam[0] - lam[1] <= 1):
                failures.append(f"star cover {lam}")
        if d <= 9 and pt.covers(lam, mu) != pt.covers_brute_force(lam, mu):
            failures.append(f"covers {lam} {mu}")
        k = rng.randint(1, 3)
        dd = rng.randint(1, 8)
        pairs = []
        for _ in range(k):
            a, b = _random_partition(rng, dd), _random_partition(rng, dd)
            if not sd(a, b):
                a, b = b, a
            pairs.append((a, b))
        if all(sd(a, b) for a, b in pairs):
            if not sd(pt.fuse(a for a, _ in pairs), pt.fuse(b for _, b in pairs)):
                failures.append(f"fusion {pairs}")
        tail = _random_partition(rng, rng.randint(1, 6))
        if sd(pt.fuse((lam, tail)), pt.fuse((mu, tail))) != sd(lam, mu):
            failures.append(f"cancellation {lam} {mu} {tail}")
    return failures


def symfunc_properties(cases: int = PROPERTY_CASES, seed: int = SEED) -> list[str]:
    rng = random.Random(seed)
    failures = []
    for case in range(cases):
        d = rng.randint(1, 10)
        lam = _random_partition(rng, d)
        expansion = sf.monomial_to_powersum(lam)
        back = sf.powersum_to_monomial_fn(expansion)
        if back != {lam: 1}:
            failures.append(f"round trip {lam}")
        merges = {Partition(x) for x in _coarsenings(lam)}
        for mu, c in expansion.coeffs.items():
            if mu not in merges or (c > 0) != ((len(lam) - len(mu)) % 2 == 0):
                failures.append(f"sign pattern {lam} {mu}")
        if set(expansion.coeffs) != merges:
            failures.append(f"support {lam}")
        pos, neg = expansion.positive_support(), expansion.negative_support()
        if sr.greatest(pos) != lam or (neg and sr.greatest(neg) != pt.star(lam)):
            failures.append(f"extremes {lam}")
        f = _random_symfn(rng, rng.randint(1, 5))
        g = _random_symfn(rng, rng.randint(1, 5))
        x = certify.random_nonnegative_point(rng, max_n=4, max_num=6, max_den=3)
        x = tuple(v if rng.random() < 0.5 else -v for v in x)
        if sf.evaluate(f * g, x) != sf.evaluate(f, x) * sf.evaluate(g, x):
            failures.append(f"homomorphism {f} {g}")
        dd = rng.randint(1, 8)
        a, b = _random_partition(rng, dd), _random_partition(rng, dd)
        y = certify.random_nonnegative_point(rng)
        if pt.superdominates(a, b) and sf.power_sum_value(a, y) < sf.power_sum_value(b, y):
            failures.append(f"binomial {a} {b} at {y}")
    return failures


def _coarsenings(lam):
    seen = set()

    def rec(parts):
        key = tuple(sorted(parts, reverse=True))
        if key in seen:
            return
        seen.add(key)
        for i, j in combinations(range(len(parts)), 2):
            merged = [p for k, p in enumerate(parts) if k not in (i, j)] + [parts[i] + parts[j]]
            rec(merged)

    rec(list(lam))
    return seen


def _random_symfn(rng: random.Random, d: int) -> sf.SymFn:
    parts = pt.enum_partitions(d)
    return sf.SymFn({rng.choice(parts): Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)}, d)


def _random_cone(rng: random.Random, dim: int, count: int, lineality: int = 0) -> ph.Cone:
    rays = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(count)]
    lin = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(lineality)]
    return ph.Cone.from_v(dim, rays, lin)


def polyhedra_properties(cases: int = PROPERTY_CASES, seed: int = SEED) -> list[str]:
    rng = random.Random(seed)
    failures = []
    for case in range(cases):
        dim = rng.randint(1, 5)
        a = _random_cone(rng, dim, rng.randint(1, 6), rng.randint(0, 1))
        b = _random_cone(rng, dim, rng.randint(1, 6))
        facets, eqs = a.facets(), a.equations()
        rays, lin = a.extreme_rays(), a.lineality_space()
        for f in facets:
            if any(ph.dot(f, r) < 0 for r in rays) or any(ph.dot(f, l) for l in lin):
                failures.append(f"H.V cross-check {case}")
        for e in eqs:
            if any(ph.dot(e, r) for r in rays) or any(ph.dot(e, l) for l in lin):
                failures.append(f"equation cross-check {case}")
        if not ph.cone_equal(ph.dd_convert(ph.dd_convert(a, "V->H"), "H->V"), a):
            failures.append(f"round trip {case}")
        if not ph.cone_equal(ph.dual(ph.dual(a)), a):
            failures.append(f"double dual {case}")
        if not ph.cone_equal(ph.dual(ph.minkowski_sum(a, b)), ph.intersect(ph.dual(a), ph.dual(b))):
            failures.append(f"dual of sum {case}")
        if not ph.cone_equal(ph.dual(ph.intersect(a, b)), ph.minkowski_sum(ph.dual(a), ph.dual(b))):
            failures.append(f"dual of intersection {case}")
        for i in range(len(facets)):
            smaller = ph.Cone.from_h(dim, facets[:i] + facets[i + 1:], eqs)
            if ph.cone_equal(smaller, a):
                failures.append(f"redundant facet {case}")
        for i in range(len(rays)):
            smaller = ph.Cone.from_v(dim, rays[:i] + rays[i + 1:], lin)
            if ph.cone_equal(smaller, a):
                failures.append(f"redundant ray {case}")
    return failures


def _member(rng: random.Random, cone: ph.Cone) -> tuple:
    x = [Fraction(0)] * cone.dim
    for r in cone.extreme_rays():
        c = Fraction(rng.randint(0, 5), rng.randint(1, 3))
        x = [a + c * b for a, b in zip(x, r)]
    for l in cone.lineality_space():
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        x = [a + c * b for a, b in zip(x, l)]
    return tuple(x)


def tropical_properties(cases: int = PROPERTY_CASES, seed: int = SEED) -> list[str]:
    rng = random.Random(seed)
    failures = []
    bp = {d: tr.trop_bp_dual(d) for d in (3, 4, 5)}
    for case in range(cases):
        dim = rng.randint(2, 4)
        v = [rng.randint(1, 4) for _ in range(dim)]
        m = ph.Cone.from_v(dim, [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(rng.randint(1, 3))], [v])
        closure = tr.max_closure(m, v)
        a, b = _member(rng, m), _member(rng, m)
        if not closure.contains(m):
            failures.append(f"closure contains input {case}")
        if not closure.contains_point(tr.tropical_sum(a, b)):
            failures.append(f"closed under max {case}")
        x, y = _member(rng, closure), _member(rng, closure)
        if not closure.contains_point(tr.tropical_sum(x, y)):
            failures.append(f"closure closed under max {case}")
        if any(sum(1 for c in ray if c < 0) != 1 for ray in ph.dual(closure).extreme_rays()):
            failures.append(f"dual rays sign pattern {case}")
        d = rng.choice((3, 4, 5))
        p1, p2 = _member(rng, bp[d]), _member(rng, bp[d])
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if not bp[d].contains_point(tr.tropical_sum(p1, tr.tropical_scale(c, p2))):
            failures.append(f"tropical cone closure d={d} {case}")
    return failures


def criterion_10(cases: int = PROPERTY_CASES) -> Outcome:
    suites: dict[str, Callable[[int], list[str]]] = {
        "partitions": partitions_properties,
        "symfunc": symfunc_properties,
        "polyhedra": polyhedra_properties,
        "tropical": tropical_properties,
    }
    results = {name: fn(cases) for name, fn in suites.items()}
    detail = ", ".join(f"{name}: {cases} cases, {len(f)} failures" for name, f in results.items())
    bad = [f for fs in results.values() for f in fs]
    if bad:
        detail += f" (first: {bad[0]})"
    return Outcome(10, "randomized property suites", not bad, detail)


CRITERIA: dict[int, Callable[[], Outcome]] = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}


def run_all() -> list[Outcome]:
    return [CRITERIA[k]() for k in sorted(CRITERIA)]
