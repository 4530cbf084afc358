"""Closed-form structure of the semigroup generated by C(n,1), ..., C(n,n-1).

For n with at least two prime factors the family has gcd 1 and generates a
numerical semigroup directly; for n = p^m the gcd is p and the family is
scaled by 1/p first.  Minimal generators, Apery set, Frobenius number, genus
and pseudo-Frobenius set all have closed forms in terms of the C(n, p^j) for
the prime powers p^j dividing n; everything in this module evaluates those
forms exactly and can be cross-checked against the generic engine in
`semigroup`.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .exactmath import binomial, factorize, is_prime
from .semigroup import NumericalSemigroup


class DegenerateSemigroupError(ValueError):
    """For prime n the scaled family contains 1 and the semigroup is all of N."""

    def __init__(self, n: int):
        super().__init__(
            f"n = {n} is prime: the scaled binomial family generates all of N, "
            "so the closed forms do not apply")
        self.n = n


@dataclass(frozen=True)
class BinomialSemigroupSpec:
    """Factorization-level data for the family of binomials with upper index n."""
    n: int
    factorization: tuple[tuple[int, int], ...]
    is_prime_power: bool
    scale: int  # gcd of the family: p when n = p^m, else 1


@dataclass(frozen=True)
class BinomialSemigroupReport:
    """All closed-form quantities for the semigroup of one upper index n."""
    n: int
    minimal_generators: tuple[int, ...]
    embedding_dimension: int
    apery_base: int
    apery_set: tuple[int, ...]
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]
    type: int
    symmetric: bool
    telescopic: bool


@dataclass(frozen=True)
class Representation:
    """One binomial written as a nonnegative combination of the minimal system.

    coefficients[i] multiplies basis[i]; the weighted sum equals `value`,
    which is C(n, m) itself, or C(n, m)/p in the scaled prime-power case
    (`scaled` records which).
    """
    target: tuple[int, int]
    basis: tuple[int, ...]
    coefficients: tuple[int, ...]
    value: int
    scaled: bool


def bn_spec(n: int) -> BinomialSemigroupSpec:
    """Factor n and record the family's gcd (p for prime powers, else 1)."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    fac = tuple(factorize(n))
    prime_power = len(fac) == 1
    return BinomialSemigroupSpec(n, fac, prime_power, fac[0][0] if prime_power else 1)


def bn_family(n: int) -> list[int]:
    """The full generating family C(n,1), ..., C(n,n-1), divided by its gcd."""
    spec = bn_spec(n)
    vals = [binomial(n, k) for k in range(1, n)]
    if spec.scale == 1:
        return vals
    return [v // spec.scale for v in vals]


def _checked_spec(n: int) -> BinomialSemigroupSpec:
    spec = bn_spec(n)
    if spec.is_prime_power and spec.factorization[0][1] == 1:
        raise DegenerateSemigroupError(n)
    return spec


def bn_minimal_system(n: int) -> list[int]:
    """Minimal generators: C(n,1) plus C(n, p^j) over prime powers p^j | n.

    In the prime-power case n = p^m the family is scaled by 1/p and the
    system is C(n, p^i)/p for 0 <= i < m.  For prime n this degenerates
    to [1].
    """
    spec = bn_spec(n)
    if spec.is_prime_power:
        p, m = spec.factorization[0]
        return sorted(binomial(n, p**i) // p for i in range(m))
    gens = [n]
    for p, k in spec.factorization:
        gens.extend(binomial(n, p**j) for j in range(1, k + 1))
    return sorted(gens)


def bn_embedding_dimension(n: int) -> int:
    """Size of the minimal system: 1 + sum of exponents, or m for n = p^m."""
    spec = bn_spec(n)
    if spec.is_prime_power:
        return spec.factorization[0][1]
    return 1 + sum(k for _, k in spec.factorization)


@lru_cache(maxsize=None)
def _apery_boxes(n):
    """Closed-form Apery data: (base, ((generator, bound), ...), residue table).

    The non-multiplicity generators carry per-coordinate coefficient bounds
    (0 <= c < p for the generators coming from prime p); the distinct sums of
    the bounded boxes are exactly the Apery set at the multiplicity.  The
    residue table maps w mod base -> (w, coefficient tuple).
    """
    spec = _checked_spec(n)
    if spec.is_prime_power:
        p, m = spec.factorization[0]
        base = p ** (m - 1)
        boxed = sorted((binomial(n, p**i) // p, p) for i in range(1, m))
    else:
        base = n
        boxed = sorted((binomial(n, p**j), p)
                       for p, k in spec.factorization for j in range(1, k + 1))
    table = {}
    values = [v for v, _ in boxed]
    for coeffs in product(*[range(bound) for _, bound in boxed]):
        w = sum(c * v for c, v in zip(coeffs, values))
        table[w % base] = (w, coeffs)
    if len(table) != base:
        raise RuntimeError(
            f"closed-form Apery residues collide for n = {n}; this contradicts "
            "the construction")
    return base, tuple(boxed), table


def bn_apery_closed(n: int) -> tuple[int, tuple[int, ...]]:
    """Apery set at the multiplicity, by the bounded-coefficient closed form."""
    base, _, table = _apery_boxes(n)
    return base, tuple(sorted(w for w, _ in table.values()))


def bn_frobenius(n: int) -> int:
    """Frobenius number: sum over p^j | n of (p-1)*C(n, p^j), minus n.

    Prime-power case: the same sum over 1 <= i < m of (p-1)*C(n, p^i)/p,
    minus p^(m-1).
    """
    spec = _checked_spec(n)
    if spec.is_prime_power:
        p, m = spec.factorization[0]
        return (p - 1) * sum(binomial(n, p**i) // p for i in range(1, m)) - p ** (m - 1)
    return sum((p - 1) * binomial(n, p**j)
               for p, k in spec.factorization for j in range(1, k + 1)) - n


def bn_genus(n: int) -> int:
    """Number of gaps; always (frobenius + 1)/2 since these semigroups are symmetric."""
    spec = _checked_spec(n)
    if spec.is_prime_power:
        p, m = spec.factorization[0]
        num = (p - 1) * sum(binomial(n, p**i) // p for i in range(1, m)) - (p ** (m - 1) - 1)
    else:
        num = sum((p - 1) * binomial(n, p**j)
                  for p, k in spec.factorization for j in range(1, k + 1)) - (n - 1)
    q, r = divmod(num, 2)
    if r:
        raise RuntimeError(f"closed-form genus for n = {n} is not an integer")
    return q


def bn_pseudo_frobenius(n: int) -> list[int]:
    """The pseudo-Frobenius set, always the singleton {frobenius}."""
    return [bn_frobenius(n)]


def bn_report(n: int) -> BinomialSemigroupReport:
    """All closed-form quantities in one record."""
    gens = tuple(bn_minimal_system(n))
    base, ap = bn_apery_closed(n)
    f = bn_frobenius(n)
    return BinomialSemigroupReport(
        n=n,
        minimal_generators=gens,
        embedding_dimension=bn_embedding_dimension(n),
        apery_base=base,
        apery_set=ap,
        frobenius=f,
        genus=bn_genus(n),
        pseudo_frobenius=(f,),
        type=1,
        symmetric=True,
        telescopic=True,
    )


def decompose(n: int, m: int) -> Representation:
    """Write C(n, m) as a nonnegative combination of the minimal system.

    Canonical choice: the non-multiplicity coefficients are the bounded box
    coordinates of the Apery representative of C(n, m)'s residue class, and
    the remainder (necessarily a nonnegative multiple of the multiplicity)
    goes on the multiplicity generator.  In the prime-power case the target
    is C(n, m)/p and the basis is the scaled system.
    """
    if n < 2 or not 1 <= m <= n - 1:
        raise ValueError(f"decompose({n}, {m}) requires n >= 2 and 1 <= m <= n-1")
    base, boxed, table = _apery_boxes(n)
    spec = bn_spec(n)
    value = binomial(n, m) // spec.scale
    w, box_coeffs = table[value % base]
    q, r = divmod(value - w, base)
    if r or q < 0:
        raise RuntimeError(
            f"C({n},{m}) has no nonnegative representation over the minimal system; "
            "this contradicts the closed form")
    basis = (base, *(v for v, _ in boxed))
    coefficients = (q, *box_coeffs)
    if sum(c * b for c, b in zip(coefficients, basis)) != value:
        raise RuntimeError(f"representation of C({n},{m}) failed its reconstruction check")
    return Representation((n, m), basis, coefficients, value, spec.scale > 1)


def identity_pq_check(p: int, q: int, r: int) -> tuple[int, bool]:
    """Evaluate the two-prime binomial identity at n = pq.

    lead = (C(pq,r) - p*C(pq,p) - q*C(pq,q)) / pq, which is an exact integer
    for every r coprime to pq (possibly negative); holds reports whether
    lead*C(pq,1) + p*C(pq,p) + q*C(pq,q) reproduces C(pq,r).
    """
    if p == q or not (is_prime(p) and is_prime(q)):
        raise ValueError(f"need two distinct primes, got {p}, {q}")
    if not 0 <= r <= p * q or r % p == 0 or r % q == 0:
        raise ValueError(f"r = {r} must lie in [0, {p * q}] and be coprime to {p * q}")
    n = p * q
    target = binomial(n, r)
    fixed = p * binomial(n, p) + q * binomial(n, q)
    lead, rem = divmod(target - fixed, n)
    if rem:
        raise RuntimeError(
            f"(C({n},{r}) - {fixed})/{n} is not an integer; arithmetic bug")
    return lead, lead * n + fixed == target


def identity_pm_check(p: int, m: int, r: int) -> tuple[int, bool]:
    """Evaluate the prime-power binomial identity at n = p^m.

    lead = (C(n,r) - sum_{i=2..m} p^(i-2)*C(n, p^(i-1))) / n.  The published
    form asserts integrality for every r coprime to p, but the residue lemma
    forces lead to be integral only when p divides m - 1; outside that case
    this raises rather than return a fractional coefficient.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p = {p} must be an odd prime")
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    n = p**m
    if not 0 <= r <= n or r % p == 0:
        raise ValueError(f"r = {r} must lie in [0, {n}] and not be a multiple of {p}")
    target = binomial(n, r)
    fixed = sum(p ** (i - 2) * binomial(n, p ** (i - 1)) for i in range(2, m + 1))
    lead, rem = divmod(target - fixed, n)
    if rem:
        raise RuntimeError(
            f"(C({n},{r}) - {fixed})/{n} is not an integer: the identity's leading "
            f"coefficient fails integrality at p={p}, m={m}, r={r} (it is integral "
            "exactly when p divides m - 1)")
    return lead, lead * n + fixed == target


@dataclass(frozen=True)
class OracleComparison:
    """Field-by-field comparison of the closed forms against the generic engine."""
    n: int
    fields: dict

    @property
    def mismatches(self) -> list[str]:
        return sorted(name for name, (a, b) in self.fields.items() if a != b)

    @property
    def all_match(self) -> bool:
        return not self.mismatches


def verify_closed_vs_oracle(n: int, max_n: int = 30) -> OracleComparison:
    """Run the generic engine on the full scaled family and diff every field.

    Mismatches are reported, not raised.  Bounded because the engine works
    with the complete family of n - 1 generators.
    """
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the verification bound {max_n}")
    report = bn_report(n)
    engine = NumericalSemigroup(bn_family(n))
    oracle_apery = engine.apery_set(report.apery_base)
    fields = {
        "minimal_generators": (report.minimal_generators, engine.generators),
        "embedding_dimension": (report.embedding_dimension, len(engine.generators)),
        "apery_set": (report.apery_set, tuple(sorted(oracle_apery.entries))),
        "frobenius": (report.frobenius, engine.frobenius()),
        "genus": (report.genus, engine.genus()),
        "pseudo_frobenius": (report.pseudo_frobenius, tuple(engine.pseudo_frobenius())),
        "type": (report.type, engine.type()),
        "symmetric": (report.symmetric, engine.is_symmetric()),
        "telescopic": (report.telescopic, engine.is_telescopic()),
    }
    return OracleComparison(n, fields)
