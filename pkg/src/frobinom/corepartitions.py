"""Numerical sets, associated partitions, hook sets and admissible pairs.

A numerical set is a co-finite subset of the nonnegative integers containing
0, with no closure requirement.  Each one has an associated partition (one
part per gap, counting the smaller members), whose hook-length set is the
complement of the stabilizer set A(S) = {x : x + s in S for all s in S}.
The triple-core machinery asks whether s, s+1 and s+p all lie in A(S) with
s + p below the Frobenius number; the closed-form Apery tables from
`binomial` let those questions be answered for the binomial-coefficient
semigroups at sizes where the gap set itself is astronomically large.
"""

from bisect import bisect_left
from dataclasses import dataclass

from .binomial import bn_apery_closed, bn_frobenius, bn_spec

SET_BOUND = 10**6    # largest Frobenius number a NumericalSet will materialize
ENUM_BOUND = 10**4   # largest Frobenius number enumerate_admissible will sweep


class NumericalSet:
    """Co-finite subset of N containing 0, stored as a bitmap up to its Frobenius number."""

    def __init__(self, gaps=(), bound: int = SET_BOUND):
        gaps = sorted(set(gaps))
        if gaps and gaps[0] < 1:
            raise ValueError("gaps must be positive (0 always belongs to the set)")
        frobenius = gaps[-1] if gaps else -1
        if frobenius > bound:
            raise ValueError(f"Frobenius number {frobenius} exceeds the bound {bound}")
        self.frobenius = frobenius
        self._member = bytearray(b"\x01" * (frobenius + 1))
        for g in gaps:
            self._member[g] = 0

    @classmethod
    def from_semigroup(cls, semigroup, bound: int = SET_BOUND) -> "NumericalSet":
        if semigroup.frobenius() > bound:
            raise ValueError(
                f"Frobenius number {semigroup.frobenius()} exceeds the bound {bound}")
        return cls(semigroup.gaps(), bound)

    def contains(self, m: int) -> bool:
        if m < 0:
            return False
        if m > self.frobenius:
            return True
        return bool(self._member[m])

    __contains__ = contains

    def gaps(self) -> list[int]:
        return [i for i in range(self.frobenius + 1) if not self._member[i]]

    def members_below_frobenius(self) -> list[int]:
        return [i for i in range(self.frobenius + 1) if self._member[i]]

    def __eq__(self, other):
        if not isinstance(other, NumericalSet):
            return NotImplemented
        return self.frobenius == other.frobenius and self._member == other._member

    def __hash__(self):
        return hash((self.frobenius, bytes(self._member)))

    def __repr__(self):
        shown = self.members_below_frobenius()[:8]
        return f"NumericalSet(members {shown}..., F={self.frobenius})"


class Partition:
    """Integer partition as a weakly decreasing tuple of positive parts."""

    def __init__(self, parts=()):
        parts = tuple(parts)
        if any(p < 1 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        self.parts = parts

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)


def numerical_set_from_gaps(gaps, bound: int = SET_BOUND) -> NumericalSet:
    """The numerical set whose complement in N is exactly `gaps`."""
    return NumericalSet(gaps, bound)


def a_set(S: NumericalSet) -> NumericalSet:
    """A(S) = {x >= 0 : x + s in S for all s in S}; a subset of S, equal to S
    when S is additively closed.  Only s up to F(S) need checking."""
    f = S.frobenius
    members = S.members_below_frobenius()
    new_gaps = [x for x in range(1, f + 1)
                if any(not S.contains(x + s) for s in members)]
    return NumericalSet(new_gaps)


def partition_of(S: NumericalSet) -> Partition:
    """Associated partition: one part per gap, counting the members below it."""
    parts = []
    members_seen = 0
    for x in range(S.frobenius + 1):
        if S.contains(x):
            members_seen += 1
        else:
            parts.append(members_seen)
    parts.reverse()
    return Partition(parts)


def hook_set(partition: Partition) -> list[int]:
    """Distinct hook lengths over the cells of the Young diagram, ascending."""
    parts = partition.parts
    conj = partition.conjugate().parts
    hooks = {parts[i] + conj[j] - i - j - 1
             for i in range(len(parts)) for j in range(parts[i])}
    return sorted(hooks)


def is_s_core(partition: Partition, s: int) -> bool:
    """True iff no hook length of the partition is divisible by s."""
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    return all(h % s for h in hook_set(partition))


def is_triple_core(S: NumericalSet, s: int, p: int) -> bool:
    """True iff s, s+1 and s+p all lie in A(S).

    Equivalently the associated partition has no hook divisible by any of
    s, s+1, s+p.
    """
    if s < 1 or p < 2:
        raise ValueError(f"need s >= 1 and p >= 2, got s={s}, p={p}")
    A = a_set(S)
    return s in A and s + 1 in A and s + p in A


def is_admissible(S: NumericalSet, s: int, p: int) -> bool:
    """Triple-core condition plus the strict bound s + p < F(S)."""
    return is_triple_core(S, s, p) and s + p < S.frobenius


def enumerate_admissible(S: NumericalSet, bound: int = ENUM_BOUND) -> list[tuple[int, int]]:
    """All admissible pairs (s, p), sorted by s then p, by finite brute force."""
    f = S.frobenius
    if f > bound:
        raise ValueError(f"Frobenius number {f} exceeds the enumeration bound {bound}")
    A = a_set(S)
    members = [x for x in range(f) if x in A]
    out = []
    for s in members:
        if s < 1 or (s + 1) not in A:
            continue
        for q in members[bisect_left(members, s + 2):]:
            out.append((s, q - s))
    return out


@dataclass(frozen=True)
class AdmissiblePairResult:
    """Output of the triple-completion algorithm: the triple (s, s+1, s+p) and
    its associated count."""
    triple: tuple[int, int, int]
    count: int


def _closed_tables(n: int, force_base: bool):
    spec = bn_spec(n)
    if spec.is_prime_power and spec.factorization[0][1] > 1 and not force_base:
        raise ValueError(
            f"n = {n} is a prime power; its Apery base is {spec.factorization[0][0]}"
            f"**{spec.factorization[0][1] - 1}, not n. Pass force_base=True to run "
            "against that base")
    base, ap = bn_apery_closed(n)
    return base, bn_frobenius(n), {w % base: w for w in ap}


def algorithm1(n: int, s_seed: int, p: int, force_base: bool = False) -> AdmissiblePairResult:
    """Triple completion over the closed-form Apery set of the binomial semigroup.

    The three target residues s_seed, s_seed+1, s_seed+p (mod the Apery base)
    each select one Apery element; the largest of the three is completed into
    a triple congruent to (s, s+1, s+p) by index-specific shifts, then pushed
    below the Frobenius number when needed.  The returned count is F - triple[2],
    plus one when the difference is not a multiple of the base.  A count <= 0
    signals that the run did not land on an admissible triple.

    Prime powers use base p^(m-1) instead of n and require force_base=True,
    as that substitution goes beyond the construction the count is defined for.
    """
    base, f, by_residue = _closed_tables(n, force_base)
    residues = (s_seed % base, (s_seed + 1) % base, (s_seed + p) % base)
    if len(set(residues)) != 3:
        raise ValueError(
            f"target residues {residues} collide mod {base}; s={s_seed}, p={p}")
    lst = [s_seed, by_residue[residues[0]], by_residue[residues[1]], by_residue[residues[2]]]
    maxvalue = max(lst[1:])
    maxindex = lst.index(maxvalue, 1)
    if maxvalue < f:
        if maxindex == 1:
            lst[2] = maxvalue + 1
            lst[3] = maxvalue + p
        elif maxindex == 2:
            lst[1] = maxvalue + (base - 1)
            lst[2] = lst[1] + 1
            lst[3] = lst[1] + p
        else:
            lst[1] = maxvalue + (base - p)
            lst[2] = lst[1] + 1
            lst[3] = lst[1] + p
    diff = f - lst[3]
    if diff <= 0:
        # floor division, so diff in (-base, 0) yields a zero shift
        shift = (diff // base + 1) * base
        lst[1] -= shift
        lst[2] -= shift
        lst[3] -= shift
        diff = f - lst[3]
    count = diff if diff % base == 0 else diff + 1
    return AdmissiblePairResult((lst[1], lst[2], lst[3]), count)


def exists_admissible_bn(n: int, p: int) -> int:
    """A verified s making (s, p) admissible for the binomial semigroup of n.

    Seeds every residue class in turn, completes the class maxima into a
    candidate triple (shifting below the Frobenius number when necessary) and
    returns the first s whose triple passes the membership and bound checks.

    Raises after exhausting every seed class.  That is a real outcome, not
    only a bug guard: elements in the class of max(Ap) all exceed the
    Frobenius number, so when the Apery base is 3 a residue-distinct triple
    (which covers all classes) can never be admissible - S(B_9) has no
    admissible pair for any p == 2 (mod 3).
    """
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    base, f, by_residue = _closed_tables(n, force_base=True)
    if p % base == 0 or (p - 1) % base == 0:
        raise ValueError(
            f"residues of (s, s+1, s+{p}) collide mod {base} for every s")

    def member(x):
        return x >= 0 and x >= by_residue[x % base]

    for seed in range(base):
        w = [by_residue[(seed + d) % base] for d in (0, 1, p)]
        top = max(w)
        at = w.index(top)
        if at == 0:
            triple = (top, top + 1, top + p)
        elif at == 1:
            triple = (top + base - 1, top + base, top + base - 1 + p)
        else:
            triple = (top + base - p, top + base - p + 1, top + base)
        if triple[2] >= f:
            k = (triple[2] - f) // base + 1
            triple = tuple(x - k * base for x in triple)
        if triple[0] >= 1 and triple[2] < f and all(member(x) for x in triple):
            return triple[0]
    raise RuntimeError(
        f"exhausted all {base} seed classes without an admissible s for n={n}, p={p}")
