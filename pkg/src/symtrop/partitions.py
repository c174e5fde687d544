"""Integer partitions with the revlex, dominance and superdominance orders."""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import accumulate, groupby
from typing import Iterable, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Any iterable of positive integers is accepted and sorted, so
    ``Partition([1, 3, 2]) == (3, 2, 1)``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def increasing(self) -> tuple[int, ...]:
        return tuple(reversed(self))

    def multiplicity(self, k: int) -> int:
        return self.count(k)

    def multiplicities(self) -> dict[int, int]:
        return {k: len(list(g)) for k, g in groupby(self)}

    def multiplicity_vector(self, d: int | None = None) -> tuple[int, ...]:
        d = self.size if d is None else d
        return tuple(self.count(k) for k in range(1, d + 1))

    def is_even(self) -> bool:
        return all(p % 2 == 0 for p in self)

    def halved(self) -> "Partition":
        if not self.is_even():
            raise ValueError(f"{self.label()} has an odd part")
        return Partition(p // 2 for p in self)

    def doubled(self) -> "Partition":
        return Partition(2 * p for p in self)

    def label(self) -> str:
        """Exponent notation, e.g. ``(4,2^2)``; the empty partition is ``()``."""
        chunks = []
        for k, g in groupby(self):
            m = len(list(g))
            chunks.append(str(k) if m == 1 else f"{k}^{m}")
        return "(" + ",".join(chunks) + ")"

    def __repr__(self):
        return f"Partition({list(self)})"


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text: str) -> Partition:
    """Parse "4,2,2" or "4,2^2" (brackets/parentheses tolerated)."""
    body = text.strip().strip("()[]")
    if not body:
        return Partition()
    parts = []
    for token in body.split(","):
        m = _TOKEN.match(token)
        if not m or int(m.group(1)) <= 0 or (m.group(2) is not None and int(m.group(2)) <= 0):
            raise ValueError(f"malformed partition token {token.strip()!r} in {text!r}")
        parts.extend([int(m.group(1))] * int(m.group(2) or 1))
    return Partition(parts)


def _same_size(lam: Sequence[int], mu: Sequence[int]) -> None:
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{list(lam)}| = {sum(lam)} but |{list(mu)}| = {sum(mu)}")


def revlex_key(lam: Sequence[int]) -> tuple[int, ...]:
    """Sorting by this key ascending lists partitions of one size largest-first in revlex."""
    return tuple(sorted(lam))


def revlex_cmp(lam: Sequence[int], mu: Sequence[int]) -> int:
    """+1 if lam >_revlex mu, -1 if smaller, 0 if equal."""
    a, b = revlex_key(lam), revlex_key(mu)
    return (a < b) - (a > b)


def _generate(total: int, largest: int, step: int):
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        if first % step:
            continue
        for rest in _generate(total - first, first, step):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enum_partitions(d: int, even: bool = False) -> tuple[Partition, ...]:
    """All partitions of d (only those with even parts if ``even``), revlex-descending."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    parts = [Partition(p) for p in _generate(d, d, 2 if even else 1)]
    return tuple(sorted(parts, key=revlex_key))


def even_partitions(d: int) -> tuple[Partition, ...]:
    """Even partitions of 2d in revlex order; these index the coordinates of the degree-2d cones."""
    return enum_partitions(2 * d, even=True)


def superdominance_trace(lam: Sequence[int], mu: Sequence[int]) -> list[tuple[int, int]]:
    """Prefix sums of the increasing parts of lam and mu, up to the shorter length."""
    _same_size(lam, mu)
    a = accumulate(sorted(lam))
    b = accumulate(sorted(mu))
    return list(zip(a, b))


def superdominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return all(x <= y for x, y in superdominance_trace(lam, mu))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    _same_size(lam, mu)
    a = list(accumulate(sorted(lam, reverse=True)))
    b = list(accumulate(sorted(mu, reverse=True)))
    n = max(len(a), len(b))
    a += [a[-1] if a else 0] * (n - len(a))
    b += [b[-1] if b else 0] * (n - len(b))
    return all(x >= y for x, y in zip(a, b))


def fuse(parts: Iterable[Sequence[int]]) -> Partition:
    return Partition(p for lam in parts for p in lam)


def power(lam: Sequence[int], k: int) -> Partition:
    """The k-fold fusion of lam with itself."""
    return fuse([lam] * k)


def star(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if len(lam) < 2:
        raise ValueError(f"star needs at least two parts, got {lam.label()}")
    return Partition((lam[0] + lam[1],) + lam[2:])


def _dominance_cover_same_length(lam: Partition, mu: Partition) -> bool:
    # covers inside the set of partitions of fixed size and length
    if not dominates(lam, mu) or lam == mu:
        return False
    n = lam.size
    for nu in enum_partitions(n):
        if len(nu) == len(lam) and nu != lam and nu != mu and dominates(lam, nu) and dominates(nu, mu):
            return False
    return True


def covers(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Cover relation of superdominance, decided by the length/merge criterion."""
    _same_size(lam, mu)
    lam, mu = Partition(lam), Partition(mu)
    if len(lam) == len(mu):
        return _dominance_cover_same_length(lam, mu)
    return len(lam) > 1 and lam[0] - lam[1] <= 1 and mu == star(lam)


def covers_brute_force(lam: Sequence[int], mu: Sequence[int]) -> bool:
    _same_size(lam, mu)
    lam, mu = Partition(lam), Partition(mu)
    if lam == mu or not superdominates(lam, mu):
        return False
    return not any(
        nu != lam and nu != mu and superdominates(lam, nu) and superdominates(nu, mu)
        for nu in enum_partitions(lam.size)
    )


def hasse(d: int) -> list[tuple[Partition, Partition]]:
    """Cover pairs (upper, lower) of superdominance on partitions of d, in revlex order."""
    if d < 1:
        raise ValueError("d must be at least 1")
    nodes = enum_partitions(d)
    return [(a, b) for i, a in enumerate(nodes) for b in nodes[i + 1:] if covers(a, b)]


def hasse_dot(d: int) -> str:
    nodes = enum_partitions(d)
    lines = [f'digraph superdominance_{d} {{', "  rankdir=BT;"]
    for i, lam in enumerate(nodes):
        lines.append(f'  n{i} [label="{lam.label()}"];')
    index = {lam: i for i, lam in enumerate(nodes)}
    for upper, lower in hasse(d):
        lines.append(f"  n{index[lower]} -> n{index[upper]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
