"""Limit Gram pencils from partial symmetry reduction.

A term ``(alpha, lam)`` stands for x^alpha * p_lam.  Products of two terms are
symmetrized over S_n or B_n, scaled by n^(l(alpha)) and sent to n -> oo; the
result is :func:`limit_gram_entry`.  Terms are grouped into blocks by the
support of alpha (and, for B_n, by which coordinates carry odd exponents).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .partitions import Partition, enum_partitions, even_partitions, fuse, revlex_key, superdominates
from .polyhedra import Cone
from .symfunc import SymFn, finite_symmetrize, monomial_to_powersum

Term = tuple[tuple[int, ...], Partition]


def make_term(alpha: Sequence[int], lam: Sequence[int] = ()) -> Term:
    return tuple(int(a) for a in alpha), Partition(lam)


def term_degree(t: Term) -> int:
    return sum(t[0]) + sum(t[1])


def _support(alpha: Sequence[int]) -> frozenset:
    return frozenset(i for i, a in enumerate(alpha) if a)


def _add(alpha: Sequence[int], beta: Sequence[int]) -> tuple[int, ...]:
    n = max(len(alpha), len(beta))
    a = tuple(alpha) + (0,) * (n - len(alpha))
    b = tuple(beta) + (0,) * (n - len(beta))
    return tuple(x + y for x, y in zip(a, b))


def limit_gram_entry(t1: Term, t2: Term, group: str = "B") -> SymFn:
    """lim n^(l/2 + l'/2) sym(x^(alpha+alpha') p_lam p_lam') in the power-sum basis."""
    (a1, l1), (a2, l2) = make_term(*t1), make_term(*t2)
    if term_degree((a1, l1)) != term_degree((a2, l2)):
        raise ValueError("terms of different degree")
    degree = term_degree((a1, l1)) * 2
    if _support(a1) != _support(a2):
        return SymFn.zero(degree)
    beta = _add(a1, a2)
    if group == "B" and any(b % 2 for b in beta):
        return SymFn.zero(degree)
    shape = Partition(b for b in beta if b)
    weight = prod(factorial(m) for m in shape.multiplicities().values())
    return weight * (monomial_to_powersum(shape) * SymFn.basis_element(fuse((l1, l2))))


def finite_gram_entry(t1: Term, t2: Term, n: int, group: str = "B"):
    """The finite-n counterpart of :func:`limit_gram_entry`, by brute-force symmetrization."""
    (a1, l1), (a2, l2) = make_term(*t1), make_term(*t2)
    if len(_support(a1)) != len(_support(a2)):
        raise ValueError("finite oracle needs supports of equal size")
    raw = finite_symmetrize(_add(a1, a2), fuse((l1, l2)), n, group)
    return raw.scaled(Fraction(n) ** len(_support(a1)))


@dataclass(frozen=True)
class TermVector:
    label: str
    terms: tuple[Term, ...]

    def gram(self, group: str) -> list[list[SymFn]]:
        return [[limit_gram_entry(s, t, group) for t in self.terms] for s in self.terms]

    def describe(self) -> str:
        def one(term):
            alpha, lam = term
            xs = "*".join(f"X{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(alpha) if a)
            ps = "*".join(f"p{k}" for k in lam)
            return "*".join(x for x in (xs, ps) if x) or "1"

        return f"v{self.label} = (" + ", ".join(one(t) for t in self.terms) + ")"


def _diagonal_key(term: Term):
    alpha, lam = term
    diag = fuse(([2 * a for a in alpha if a], lam, lam))
    return revlex_key(diag), tuple(-a for a in alpha)


def _compositions(count: int, parity: int, budget: int, least: int):
    """Tuples of `count` integers >= least with the given parity and sum <= budget."""
    if count == 0:
        yield ()
        return
    for first in range(least, budget + 1):
        if first % 2 != parity:
            continue
        for rest in _compositions(count - 1, parity, budget - first, least):
            yield (first,) + rest


def b_term_vectors(d: int) -> list[TermVector]:
    """Blocks v_(i,j) for B_n: i odd exponents then j positive even exponents, times even p_lam."""
    groups = []
    for size in range(d + 1):
        for i in range(size, -1, -1):
            j = size - i
            if i % 2 != d % 2 or i + 2 * j > d:
                continue
            terms = []
            for odd in _compositions(i, 1, d, 1):
                for even in _compositions(j, 0, d - sum(odd), 2):
                    alpha = odd + even
                    for lam in enum_partitions(d - sum(alpha), even=True):
                        terms.append((alpha, lam))
            if terms:
                terms.sort(key=_diagonal_key)
                groups.append(TermVector(f"({i},{j})", tuple(terms)))
    return groups


def s_term_vectors(d: int) -> list[TermVector]:
    if d != 2:
        raise ValueError("symmetric-group pencils are only provided in degree 4")
    groups = []
    for size in range(d + 1):
        terms = []
        for alpha in _all_positive(size, d):
            for lam in enum_partitions(d - sum(alpha)):
                terms.append((alpha, lam))
        terms.sort(key=_diagonal_key)
        groups.append(TermVector(str(size), tuple(terms)))
    return groups


def _all_positive(count: int, budget: int):
    if count == 0:
        yield ()
        return
    for first in range(1, budget + 1):
        for rest in _all_positive(count - 1, budget - first):
            yield (first,) + rest


F = Fraction

# Congruences that block-diagonalize the larger Gram blocks.
CONGRUENCES: dict[tuple[int, str], list[list[Fraction]]] = {
    (4, "(2,0)"): [[F(1), F(0), F(0)], [F(0), F(1, 2), F(1, 2)], [F(0), F(1), F(-1)]],
    (5, "(3,0)"): [
        [F(1), F(0), F(0), F(0)],
        [F(0), F(1, 3), F(1, 3), F(1, 3)],
        [F(0), F(-1), F(1, 2), F(1, 2)],
        [F(0), F(0), F(-1), F(1)],
    ],
}


def apply_congruence(block: Sequence[Sequence[SymFn]], a: Sequence[Sequence]) -> list[list[SymFn]]:
    """A * M * A^T with exact arithmetic."""
    n = len(block)
    if any(len(row) != n for row in block) or any(len(row) != n for row in a) or len(a) != n:
        raise ValueError("congruence and block dimensions do not match")
    degree = next((e.degree for row in block for e in row if e), 0)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = SymFn.zero(degree)
            for k in range(n):
                if not a[i][k]:
                    continue
                for l in range(n):
                    if a[j][l] and block[k][l]:
                        acc = acc + (Fraction(a[i][k]) * Fraction(a[j][l])) * block[k][l]
            row.append(acc)
        out.append(row)
    return out


@dataclass
class PencilBlock:
    vector: TermVector
    raw: list[list[SymFn]]
    matrix: list[list[SymFn]]
    congruence: list[list[Fraction]] | None = None

    @property
    def label(self) -> str:
        return self.vector.label

    @property
    def size(self) -> int:
        return len(self.matrix)


@dataclass
class GramPencil:
    kind: str
    group: str
    half_degree: int
    coordinates: tuple[Partition, ...]
    blocks: list[PencilBlock] = field(default_factory=list)

    def pair(self, f: SymFn, point: Sequence) -> Fraction:
        index = {lam: i for i, lam in enumerate(self.coordinates)}
        return sum((c * Fraction(point[index[lam]]) for lam, c in f.coeffs.items()), Fraction(0))

    def evaluate(self, point: Sequence) -> list[list[list[Fraction]]]:
        if len(point) != len(self.coordinates):
            raise ValueError(f"point has {len(point)} coordinates, expected {len(self.coordinates)}")
        return [[[self.pair(e, point) for e in row] for row in b.matrix] for b in self.blocks]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "coordinates": [list(lam) for lam in self.coordinates],
            "blocks": [
                {
                    "label": b.label,
                    "terms": [{"alpha": list(a), "lambda": list(l)} for a, l in b.vector.terms],
                    "congruence": None if b.congruence is None else [[str(x) for x in r] for r in b.congruence],
                    "matrix": [[e.to_json() for e in row] for row in b.matrix],
                }
                for b in self.blocks
            ],
        }

    def pretty(self) -> str:
        lines = [f"pencil {self.kind}"]
        for b in self.blocks:
            lines.append("")
            lines.append(b.vector.describe())
            if b.congruence is not None:
                lines.append("  after congruence A = " + str([[str(x) for x in r] for r in b.congruence]))
            cells = [[str(e) for e in row] for row in b.matrix]
            width = max(len(c) for row in cells for c in row)
            for row in cells:
                lines.append("  [ " + " | ".join(c.ljust(width) for c in row) + " ]")
        return "\n".join(lines) + "\n"


def parse_kind(kind: str) -> tuple[str, int]:
    text = kind.strip().upper().replace(" ", "")
    if len(text) > 3 and text[1] == "(" and text.endswith(")") and text[0] in "BS":
        group, total = text[0], text[2:-1]
    elif text[:1] in ("B", "S") and text[1:].isdigit():
        group, total = text[0], text[1:]
    else:
        raise ValueError(f"unsupported pencil kind {kind!r}")
    total = int(total)
    if group == "B" and total in (4, 6, 8, 10):
        return group, total // 2
    if group == "S" and total == 4:
        return group, 2
    raise ValueError(f"unsupported pencil kind {kind!r}; use B(4), B(6), B(8), B(10) or S(4)")


def build_pencil(kind: str) -> GramPencil:
    group, d = parse_kind(kind)
    vectors = b_term_vectors(d) if group == "B" else s_term_vectors(d)
    coords = even_partitions(d) if group == "B" else enum_partitions(2 * d)
    pencil = GramPencil(f"{group}({2 * d})", group, d, coords)
    for v in vectors:
        raw = v.gram(group)
        a = CONGRUENCES.get((d, v.label)) if group == "B" else None
        matrix = apply_congruence(raw, a) if a is not None else raw
        pencil.blocks.append(PencilBlock(v, raw, matrix, a))
    return pencil


class PreconditionError(ValueError):
    pass


def greatest(parts: Sequence[Partition]) -> Partition | None:
    """The superdominance-greatest element, if there is one."""
    for cand in parts:
        if all(superdominates(cand, other) for other in parts):
            return cand
    return None


def superdominance_chain_inequalities(coords: Sequence[Partition]) -> list[tuple[int, ...]]:
    rows = []
    for i, lam in enumerate(coords):
        for j, mu in enumerate(coords):
            if i != j and superdominates(lam, mu):
                row = [0] * len(coords)
                row[i], row[j] = 1, -1
                rows.append(tuple(row))
    return rows


def trop_of_sos_inequalities(pencil: GramPencil) -> list[tuple[int, ...]]:
    """Linearized max-inequalities read off the diagonal and off-diagonal entries.

    Each comparison of maxima is replaced by one comparing the superdominance
    greatest element of the positive side; this is exact on the region where
    y respects superdominance, which is added by :func:`trop_of_sos`.
    """
    index = {lam: i for i, lam in enumerate(pencil.coordinates)}
    dim = len(pencil.coordinates)
    rows: list[tuple[int, ...]] = []

    def row(plus: Sequence[tuple[Partition, int]], minus: tuple[Partition, int]):
        r = [0] * dim
        for lam, c in plus:
            r[index[lam]] += c
        r[index[minus[0]]] -= minus[1]
        if any(r):
            rows.append(tuple(r))

    for block in pencil.blocks:
        m = block.matrix
        tops = []
        for i in range(len(m)):
            entry = m[i][i]
            pos = entry.positive_support()
            top = greatest(pos)
            if top is None:
                raise PreconditionError(
                    f"block {block.label}, diagonal {i}: positive support {[x.label() for x in pos]} has no greatest element"
                )
            tops.append(top)
            for nu in entry.negative_support():
                row([(top, 1)], (nu, 1))
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                for nu, _ in m[i][j].terms():
                    row([(tops[i], 1), (tops[j], 1)], (nu, 2))
    return rows


def trop_of_sos(pencil: GramPencil, include_chain: bool = True) -> Cone:
    rows = trop_of_sos_inequalities(pencil)
    if include_chain:
        rows += superdominance_chain_inequalities(pencil.coordinates)
    raw = Cone.from_h(len(pencil.coordinates), rows)
    return Cone.from_h(raw.dim, raw.facets(), raw.equations())


def block_is_diagonalized(block: PencilBlock, pieces: Sequence[int]) -> bool:
    """Whether the block is block-diagonal for the given consecutive piece sizes."""
    owner = [k for k, size in enumerate(pieces) for _ in range(size)]
    n = block.size
    return sum(pieces) == n and all(
        not block.matrix[i][j] for i in range(n) for j in range(n) if owner[i] != owner[j]
    )
