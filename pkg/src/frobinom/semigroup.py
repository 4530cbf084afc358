"""Generic numerical-semigroup engine.

A numerical semigroup is an additively closed, co-finite subset of the
nonnegative integers containing 0.  This module computes with arbitrary
generating sets: minimal generators, Apery tables, Frobenius number, genus,
gaps, pseudo-Frobenius numbers, symmetry and the telescopic chain condition.
It serves as the brute-force oracle against which the closed forms in
`binomial` are cross-checked.
"""

import heapq
from dataclasses import dataclass
from math import gcd, inf


class NotANumericalSemigroup(ValueError):
    """The generating set has gcd > 1, so the complement is infinite."""

    def __init__(self, gcd_value: int):
        super().__init__(
            f"generators have gcd {gcd_value}; a numerical semigroup requires gcd 1")
        self.gcd = gcd_value


@dataclass(frozen=True)
class AperyTable:
    """Least element of the semigroup in each residue class mod `base`.

    entries[r] is the smallest element congruent to r; entries[0] is 0.
    """
    base: int
    entries: tuple[int, ...]

    def __getitem__(self, residue: int) -> int:
        return self.entries[residue % self.base]

    def max(self) -> int:
        return max(self.entries)


def _shortest_per_residue(generators, base):
    """Least nonnegative combination of the generators in each class mod base.

    Dijkstra on the graph whose nodes are residues mod base, with an edge
    r -> (r + g) mod base of weight g per generator.  Unreachable classes
    (possible while the running gcd exceeds 1) come back as math.inf.
    """
    dist = [inf] * base
    dist[0] = 0
    heap = [(0, 0)]
    steps = [g for g in generators if g % base]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in steps:
            r2 = (r + g) % base
            d2 = d + g
            if d2 < dist[r2]:
                dist[r2] = d2
                heapq.heappush(heap, (d2, r2))
    return dist


def _minimal_system(gens):
    # gens: sorted, deduplicated, positive.  An element is redundant iff it is
    # a nonnegative combination of the smaller kept ones, which we read off a
    # running per-residue table of the kept prefix.
    kept = [gens[0]]
    base = gens[0]
    if base == 1:
        return kept
    table = _shortest_per_residue(kept, base)
    for v in gens[1:]:
        if v >= table[v % base]:
            continue
        kept.append(v)
        table = _shortest_per_residue(kept, base)
    return kept


def minimal_generators(raw) -> list[int]:
    """The unique inclusion-minimal subset of `raw` generating the same monoid."""
    gens = sorted(set(raw))
    if not gens:
        raise ValueError("need at least one generator")
    if gens[0] < 1:
        raise ValueError("generators must be positive integers")
    g = gcd(*gens)
    if g != 1:
        raise NotANumericalSemigroup(g)
    return _minimal_system(gens)


class NumericalSemigroup:
    """Numerical semigroup given by any generating set with gcd 1.

    The constructor extracts the minimal system of generators and eagerly
    computes the Apery table at the multiplicity; instances are immutable
    afterwards and safe to share.
    """

    def __init__(self, generators):
        self.generators = tuple(minimal_generators(generators))
        self.multiplicity = self.generators[0]
        self.apery = AperyTable(
            self.multiplicity,
            tuple(_shortest_per_residue(self.generators, self.multiplicity)))

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"

    def apery_set(self, x: int | None = None) -> AperyTable:
        """Apery table at x, which must be a nonzero element (default: multiplicity)."""
        if x is None or x == self.multiplicity:
            return self.apery
        if x < 1 or not self.contains(x):
            raise ValueError(f"{x} is not a nonzero element of {self!r}")
        return AperyTable(x, tuple(_shortest_per_residue(self.generators, x)))

    def contains(self, m: int) -> bool:
        if m < 0:
            return False
        return m >= self.apery.entries[m % self.multiplicity]

    __contains__ = contains

    def frobenius(self) -> int:
        """Largest integer not in the semigroup; -1 when there are no gaps."""
        return self.apery.max() - self.multiplicity

    def genus(self) -> int:
        """Number of gaps, from the Apery table: sum(entries)/x - (x-1)/2."""
        x = self.multiplicity
        num = 2 * sum(self.apery.entries) - x * (x - 1)
        q, r = divmod(num, 2 * x)
        if r:
            raise RuntimeError(f"inconsistent Apery table for {self!r}: fractional genus")
        return q

    def gaps(self) -> list[int]:
        """All nonnegative integers outside the semigroup, ascending."""
        x = self.multiplicity
        out = []
        for r, w in enumerate(self.apery.entries):
            out.extend(range(r, w, x))
        out.sort()
        return out

    def pseudo_frobenius(self) -> list[int]:
        """Integers v not in S with v + s in S for every nonzero s in S.

        Computed as {w - multiplicity : w maximal in the Apery set}, where w
        is maximal iff no other Apery element exceeds it by an element of S.
        """
        ents = self.apery.entries
        out = [w - self.multiplicity
               for w in ents
               if not any(w2 != w and self.contains(w2 - w) for w2 in ents)]
        out.sort()
        return out

    def type(self) -> int:
        """Number of pseudo-Frobenius numbers."""
        return len(self.pseudo_frobenius())

    def is_symmetric(self) -> bool:
        """True iff the genus is exactly (frobenius + 1)/2."""
        return 2 * self.genus() == self.frobenius() + 1

    def is_telescopic(self) -> bool:
        """Chain condition on the sorted generators n_1 < ... < n_e.

        With d_1 = n_1 and d_i = gcd(d_{i-1}, n_i), every n_i/d_i must lie in
        the semigroup generated by n_1/d_{i-1}, ..., n_{i-1}/d_{i-1}.  The
        scaled prefix always has gcd 1, so membership is decided by this
        same engine.  ⟨1⟩ is telescopic by convention.
        """
        gens = self.generators
        d = gens[0]
        for i in range(1, len(gens)):
            d_next = gcd(d, gens[i])
            prefix = NumericalSemigroup([g // d for g in gens[:i]])
            if not prefix.contains(gens[i] // d_next):
                return False
            d = d_next
        return True
