"""Symmetric functions stored in the power-sum basis.

A :class:`SymFn` is a sparse map ``Partition -> Fraction``; the key ``lam``
stands for the power sum p_lam = p_{lam_1} p_{lam_2} ...  Products are fusions
of partitions.  The same container with ``basis="e"`` holds expansions in
elementary symmetric functions (used by the Newton identities).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Mapping, Sequence

from .exactnum import format_rational, to_rational
from .partitions import Partition, enum_partitions, fuse, revlex_key, superdominates


class SymFn:
    """Homogeneous symmetric function, coefficients keyed by partitions."""

    __slots__ = ("degree", "coeffs", "basis")

    def __init__(self, coeffs: Mapping | Iterable = (), degree: int | None = None, basis: str = "p"):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = Partition(lam)
            c = to_rational(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
                if not clean[lam]:
                    del clean[lam]
        sizes = {lam.size for lam in clean}
        if degree is None:
            if len(sizes) > 1:
                raise ValueError(f"inhomogeneous symmetric function (degrees {sorted(sizes)})")
            degree = sizes.pop() if sizes else 0
        elif sizes - {degree}:
            raise ValueError(f"terms of degree {sorted(sizes)} in a degree-{degree} function")
        self.degree = degree
        self.coeffs = clean
        self.basis = basis

    @classmethod
    def basis_element(cls, lam: Sequence[int], basis: str = "p") -> "SymFn":
        lam = Partition(lam)
        return cls({lam: 1}, lam.size, basis)

    @classmethod
    def zero(cls, degree: int, basis: str = "p") -> "SymFn":
        return cls({}, degree, basis)

    def _check(self, other: "SymFn") -> None:
        if self.basis != other.basis:
            raise ValueError("mixing bases")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        if self.coeffs and other.coeffs and self.degree != other.degree:
            raise ValueError("adding symmetric functions of different degree")
        degree = self.degree if self.coeffs else other.degree
        merged = defaultdict(Fraction, self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] += c
        return SymFn(merged, degree, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return SymFn({lam: -c for lam, c in self.coeffs.items()}, self.degree, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFn):
            return p_multiply(self, other)
        c = to_rational(other)
        return SymFn({lam: c * v for lam, v in self.coeffs.items()}, self.degree, self.basis)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (1 / to_rational(other))

    def __pow__(self, k: int):
        out = SymFn({Partition(): 1}, 0, self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, SymFn):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs and (
            self.degree == other.degree or not self.coeffs
        )

    def __hash__(self):
        return hash((self.basis, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms in revlex order, largest partition first."""
        return sorted(self.coeffs.items(), key=lambda kv: revlex_key(kv[0]))

    def coefficient(self, lam: Sequence[int]) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def positive_support(self) -> list[Partition]:
        return [lam for lam, c in self.terms() if c > 0]

    def negative_support(self) -> list[Partition]:
        return [lam for lam, c in self.terms() if c < 0]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"partition": list(lam), "coeff": format_rational(c)} for lam, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: dict, basis: str = "p") -> "SymFn":
        return cls(
            ((t["partition"], to_rational(t["coeff"])) for t in data["terms"]),
            data["degree"],
            basis,
        )

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for lam, c in self.terms():
            mag = abs(c)
            head = "" if mag == 1 else f"{mag}*"
            out.append(("- " if c < 0 else "+ ") + f"{head}{self.basis}{lam.label()}")
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[1:]

    def __repr__(self):
        return f"SymFn({self})"


def p(*parts: int) -> SymFn:
    """Shorthand for the power sum p_(parts)."""
    return SymFn.basis_element(parts)


def p_multiply(f: SymFn, g: SymFn) -> SymFn:
    f._check(g)
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            out[fuse((lam, mu))] += a * b
    return SymFn(out, f.degree + g.degree, f.basis)


def _times_power_sum(k: int, lam: Partition) -> dict[Partition, int]:
    """Monomial expansion of p_k * m_lam."""
    candidates = {Partition(lam + (k,))}
    for v in set(lam):
        parts = list(lam)
        parts.remove(v)
        candidates.add(Partition(parts + [v + k]))
    out = {}
    for nu in candidates:
        hits = 0
        for i, part in enumerate(nu):
            if part < k:
                continue
            rest = list(nu)
            rest[i] -= k
            if Partition(x for x in rest if x) == lam:
                hits += 1
        if hits:
            out[nu] = hits
    return out


@lru_cache(maxsize=None)
def _powersum_in_monomials(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    current = {Partition(): 1}
    for k in mu:
        nxt: dict[Partition, int] = defaultdict(int)
        for lam, c in current.items():
            for nu, h in _times_power_sum(k, lam).items():
                nxt[nu] += c * h
        current = nxt
    return tuple(sorted(current.items(), key=lambda kv: revlex_key(kv[0])))


def powersum_to_monomial(mu: Sequence[int]) -> dict[Partition, int]:
    """p_mu = sum over coarsenings nu of mu of L[mu, nu] * m_nu."""
    return dict(_powersum_in_monomials(Partition(mu)))


@lru_cache(maxsize=None)
def _monomial_in_powersums(lam: Partition) -> SymFn:
    expansion = powersum_to_monomial(lam)
    diagonal = expansion.pop(lam)
    acc = SymFn.basis_element(lam)
    for nu, c in expansion.items():
        acc = acc - c * _monomial_in_powersums(nu)
    return acc / diagonal


def monomial_to_powersum(lam: Sequence[int]) -> SymFn:
    """Power-sum expansion of the monomial symmetric function m_lam."""
    return _monomial_in_powersums(Partition(lam))


def monomial_combination_to_powersum(coeffs: Mapping[Sequence[int], Fraction]) -> SymFn:
    """Power-sum expansion of sum_beta c_beta m_beta."""
    out = None
    for beta, c in coeffs.items():
        term = to_rational(c) * monomial_to_powersum(beta)
        out = term if out is None else out + term
    return out if out is not None else SymFn()


def powersum_to_monomial_fn(f: SymFn) -> dict[Partition, Fraction]:
    """Monomial-basis coefficients of a power-sum expansion."""
    out: dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, c in f.coeffs.items():
        for nu, k in powersum_to_monomial(mu).items():
            out[nu] += c * k
    return {nu: c for nu, c in out.items() if c}


def _power_sums(point: Sequence, top: int) -> list:
    xs = [to_rational(x) if not hasattr(x, "radicand") else x for x in point]
    sums = [Fraction(len(xs))]
    powers = [Fraction(1)] * len(xs)
    for _ in range(top):
        powers = [a * b for a, b in zip(powers, xs)]
        sums.append(sum(powers, Fraction(0)))
    return sums


def evaluate(f: SymFn, point: Sequence) -> Fraction:
    """Value of f at a point of R^n (p_k becomes the k-th power sum of the coordinates)."""
    if f.basis != "p":
        raise ValueError("evaluate expects a power-sum expansion")
    top = max((max(lam) for lam in f.coeffs if lam), default=0)
    sums = _power_sums(point, top)
    return sum((c * prod((sums[k] for k in lam), start=Fraction(1)) for lam, c in f.coeffs.items()), Fraction(0))


def power_sum_value(lam: Sequence[int], point: Sequence) -> Fraction:
    return evaluate(SymFn.basis_element(lam), point)


def binomial_inequality_holds(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether p_lam >= p_mu on the nonnegative orthant in every number of variables."""
    return superdominates(lam, mu)


def binomial_witness_candidates(max_ones: int = 40):
    """Structured nonnegative test points (t, 1, ..., 1) and (t, t, 1, ..., 1)."""
    grid = sorted({Fraction(a, b) for a in range(0, 41) for b in (1, 2, 4, 10)} | {Fraction(k) for k in (50, 100, 1000)})
    for ones in range(max_ones + 1):
        for t in grid:
            yield (t,) + (Fraction(1),) * ones
            yield (t, t) + (Fraction(1),) * ones


def find_binomial_violation(lam: Sequence[int], mu: Sequence[int], max_ones: int = 40):
    """A structured nonnegative point with p_lam < p_mu, or None."""
    lam, mu = Partition(lam), Partition(mu)
    top = max(lam + mu)
    for x in binomial_witness_candidates(max_ones):
        sums = _power_sums(x, top)
        if prod(sums[k] for k in lam) < prod(sums[k] for k in mu):
            return x
    return None


# Newton identities -------------------------------------------------------

NEWTON_MAX_DEGREE = 4


def _check_newton_range(d: int) -> None:
    if not 1 <= d <= NEWTON_MAX_DEGREE:
        raise ValueError(f"Newton identities supported for 1 <= d <= {NEWTON_MAX_DEGREE}, got {d}")


def newton_p_from_e(d: int) -> list[SymFn]:
    """[p_1, ..., p_d] written in the elementary basis (keys index products of e_k)."""
    _check_newton_range(d)
    ps: list[SymFn] = []
    for k in range(1, d + 1):
        acc = SymFn({Partition([k]): (-1) ** (k - 1) * k}, k, "e")
        for i in range(1, k):
            e_i = SymFn.basis_element([i], "e")
            acc = acc + (-1) ** (i - 1) * (e_i * ps[k - i - 1])
        ps.append(acc)
    return ps


def e_from_p(d: int) -> list[SymFn]:
    """[e_1, ..., e_d] written in the power-sum basis."""
    _check_newton_range(d)
    es: list[SymFn] = [SymFn({Partition(): 1}, 0)]
    for k in range(1, d + 1):
        acc = SymFn.zero(k)
        for i in range(1, k + 1):
            acc = acc + (-1) ** (i - 1) * (es[k - i] * p(i))
        es.append(acc / k)
    return es[1:]


def substitute_e(f: SymFn, e_values: Sequence[SymFn]) -> SymFn:
    """Rewrite an e-basis expansion in the power-sum basis using e_k = e_values[k-1]."""
    out = SymFn.zero(f.degree)
    for lam, c in f.coeffs.items():
        term = SymFn({Partition(): 1}, 0)
        for k in lam:
            term = term * e_values[k - 1]
        out = out + c * term
    return out


# Finite symmetrization ---------------------------------------------------

@dataclass(frozen=True)
class FiniteSymmetrization:
    """sum over (beta, lam) of coeff * m_beta(x_1..x_n) * p_lam(x_1..x_n)."""

    n: int
    group: str
    terms: tuple[tuple[Partition, Partition, Fraction], ...]

    def monomial_coefficient(self, beta: Sequence[int], lam: Sequence[int] = ()) -> Fraction:
        beta, lam = Partition(beta), Partition(lam)
        return sum((c for b, l, c in self.terms if b == beta and l == lam), Fraction(0))

    def scaled(self, factor) -> "FiniteSymmetrization":
        f = to_rational(factor)
        return FiniteSymmetrization(self.n, self.group, tuple((b, l, c * f) for b, l, c in self.terms))

    def to_powersum(self) -> SymFn:
        """Identify with a power-sum expansion (faithful once n is at least the degree)."""
        out = None
        for beta, lam, c in self.terms:
            term = c * (monomial_to_powersum(beta) * SymFn.basis_element(lam))
            out = term if out is None else out + term
        return out if out is not None else SymFn()


def _distinct_permutations(items: Sequence[int]):
    counts: dict[int, int] = defaultdict(int)
    for x in items:
        counts[x] += 1
    keys = sorted(counts)
    n = len(items)
    buf = [0] * n

    def rec(pos: int):
        if pos == n:
            yield tuple(buf)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                buf[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


def finite_symmetrize(alpha: Sequence[int], lam: Sequence[int], n: int, group: str = "B") -> FiniteSymmetrization:
    """Reynolds average of x^alpha * p_lam over S_n or the hyperoctahedral group B_n.

    Brute force: every distinct coordinate permutation of alpha is listed and,
    for B_n, every sign pattern on its support; no closed form is used.
    """
    if group not in ("S", "B"):
        raise ValueError(f"group must be 'S' or 'B', got {group!r}")
    alpha = tuple(int(a) for a in alpha)
    while alpha and alpha[-1] == 0:
        alpha = alpha[:-1]
    if len(alpha) > n:
        raise ValueError(f"exponent support {len(alpha)} exceeds n = {n}")
    padded = alpha + (0,) * (n - len(alpha))
    monomials: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    images = list(_distinct_permutations(padded))
    for image in images:
        weight = Fraction(1)
        if group == "B":
            support = [e for e in image if e]
            total = sum(
                prod((-1) ** (e * s) for e, s in zip(support, signs))
                for signs in product((0, 1), repeat=len(support))
            )
            weight = Fraction(total, 2 ** len(support))
        if weight:
            monomials[image] += weight / len(images)
    by_shape: dict[Partition, set] = defaultdict(set)
    for image, c in monomials.items():
        by_shape[Partition(e for e in image if e)].add(c)
    lam = Partition(lam)
    terms = []
    for beta, values in by_shape.items():
        if len(values) != 1:
            raise AssertionError("symmetrized polynomial is not symmetric")
        (c,) = values
        if c:
            terms.append((beta, lam, c))
    terms.sort(key=lambda t: revlex_key(t[0]))
    return FiniteSymmetrization(n, group, tuple(terms))


def orbit_size(beta: Sequence[int], n: int) -> int:
    beta = Partition(beta)
    return factorial(n) // (factorial(n - len(beta)) * prod(factorial(m) for m in beta.multiplicities().values()))


def all_partition_pairs(max_size: int):
    for d in range(1, max_size + 1):
        parts = enum_partitions(d)
        for lam in parts:
            for mu in parts:
                yield lam, mu
