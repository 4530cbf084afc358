"""Exact big-integer combinatorics: binomials, factorization, p-adic valuations.

Everything here is pure integer arithmetic; no floats, no rounding.  Indices
(n, k, primes, exponents) are expected to be machine-scale, while values
(binomial coefficients) may be arbitrarily large.
"""

from math import comb, gcd


def binomial(n: int, k: int) -> int:
    """C(n, k), exactly.  Raises for k outside [0, n]."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) requires 0 <= k <= n")
    return comb(n, k)


def is_prime(n: int) -> bool:
    """Trial-division primality test; adequate for desk-scale inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 2 as [(p, multiplicity), ...], primes ascending."""
    if n < 2:
        raise ValueError(f"cannot factor {n}: need n >= 2")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def p_adic_valuation(p: int, x: int) -> int:
    """Largest v with p^v dividing x, for x >= 1."""
    if x < 1:
        raise ValueError(f"p-adic valuation of {x} is undefined here")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def binomial_valuation_kummer(p: int, n: int, k: int) -> int:
    """v_p(C(n, k)) counted as the carries when adding k and n-k in base p.

    Independent of any factorization of the binomial coefficient itself,
    which makes it a useful cross-check for p_adic_valuation.
    """
    if k < 0 or k > n:
        raise ValueError(f"binomial_valuation_kummer({p}, {n}, {k}) requires 0 <= k <= n")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a, b = k, n - k
    carry = carries = 0
    while a or b or carry:
        carry = 1 if a % p + b % p + carry >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def sun_congruence_holds(p: int, a: int, m: int, n2: int) -> bool:
    """Check C(p^a*m, p^a*n2) / C(m, n2) == 1 + [p=2]*p*n2*(m-n2) mod p^(2+v_p(n2)).

    Carry counting gives the numerator and denominator equal p-adic
    valuation, so the quotient is a p-adic integer even when it is not a
    rational one (e.g. C(8,4)/C(4,2) = 70/6); the congruence is therefore
    evaluated p-adically: with A the big binomial, B the small one and R the
    right-hand side, it holds iff v_p(A - R*B) >= 2 + v_p(n2) + v_p(B).
    For n2 = 0 the modulus exponent is taken as 2 and the statement
    degenerates to 1 == 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not m >= n2 >= 0 or a < 0:
        raise ValueError(f"need m >= n2 >= 0 and a >= 0, got a={a}, m={m}, n2={n2}")
    big = binomial(p**a * m, p**a * n2)
    small = binomial(m, n2)
    if p_adic_valuation(p, big) < p_adic_valuation(p, small):
        raise RuntimeError(
            f"C({p**a * m},{p**a * n2})/C({m},{n2}) is not a {p}-adic integer; "
            "arithmetic bug")
    exponent = 2 + (p_adic_valuation(p, n2) if n2 else 0)
    rhs = 1 + (p * n2 * (m - n2) if p == 2 else 0)
    diff = big - rhs * small
    if diff == 0:
        return True
    return p_adic_valuation(p, abs(diff)) >= exponent + p_adic_valuation(p, small)


def binom_residue_lemma(n: int, p: int, k: int) -> tuple[int, int]:
    """Both sides of C(n, p^k) == n/p^k (mod n), reduced mod n.

    Returns (C(n, p^k) mod n, (n/p^k) mod n) so callers can assert they agree.
    Requires k >= 1 and p^k | n.
    """
    if k < 1:
        raise ValueError("exponent k must be at least 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pk = p**k
    if n % pk:
        raise ValueError(f"{p}^{k} does not divide {n}")
    return binomial(n, pk) % n, (n // pk) % n


def gcd_list(values) -> int:
    """Greatest common divisor of a nonempty collection of integers."""
    values = list(values)
    if not values:
        raise ValueError("gcd of an empty list")
    return gcd(*values)


def _legendre_valuation(p: int, n: int, k: int) -> int:
    # sum of floor(n/p^i) - floor(k/p^i) - floor((n-k)/p^i)
    total = 0
    q = p
    while q <= n:
        total += n // q - k // q - (n - k) // q
        q *= p
    return total


def invariant_report(pascal_max: int = 60, kummer_max: int = 60,
                     residue_max: int = 300, sun_m_max: int = 12,
                     gcd_max: int = 200) -> list[tuple[str, bool]]:
    """Run this module's self-consistency sweeps; returns (label, passed) rows.

    Used by the CLI `verify` command.  The pytest suite runs the same checks
    with independent in-test oracles.
    """
    rows = []

    ok = True
    row = [1]
    for n in range(1, pascal_max + 1):
        row = [1] + [row[k - 1] + row[k] for k in range(1, n)] + [1]
        for k in range(n + 1):
            if binomial(n, k) != row[k] or binomial(n, k) != binomial(n, n - k):
                ok = False
    rows.append((f"pascal recurrence and symmetry, n <= {pascal_max}", ok))

    ok = True
    for p in (2, 3, 5, 7, 11, 13):
        for n in range(kummer_max + 1):
            for k in range(n + 1):
                v = binomial_valuation_kummer(p, n, k)
                if v != _legendre_valuation(p, n, k):
                    ok = False
                b = binomial(n, k)
                if b >= 1 and v != p_adic_valuation(p, b):
                    ok = False
    rows.append((f"carry count = divide-out valuation = floor-sum formula, n <= {kummer_max}", ok))

    # The residue congruence C(n, p^k) == n/p^k (mod n) is provable only for
    # k <= 2 with p odd, or k = 1 with p = 2 (the p = 2 correction term breaks
    # it otherwise: C(8,4) = 70 == 6 (mod 8), not 2).  Sweep that domain.
    ok = True
    for n in range(2, residue_max + 1):
        for p, kmax in factorize(n):
            for k in range(1, kmax + 1):
                if (p == 2 and k >= 2) or k >= 3:
                    continue
                lhs, rhs = binom_residue_lemma(n, p, k)
                if lhs != rhs:
                    ok = False
    rows.append((f"binomial residue congruence on its provable domain, n <= {residue_max}", ok))

    # At a = 0 the quotient is 1 while the p = 2 right-hand side is not, so
    # the congruence only holds from a >= 1 for p = 2.
    ok = True
    for p in (2, 3, 5, 7):
        for a in range(3):
            if p == 2 and a == 0:
                continue
            for m in range(sun_m_max + 1):
                for n2 in range(m + 1):
                    if not sun_congruence_holds(p, a, m, n2):
                        ok = False
    rows.append((f"prime-power quotient congruence (a >= 1 for p = 2), p in 2..7, m <= {sun_m_max}", ok))

    ok = True
    for n in range(2, gcd_max + 1):
        fac = factorize(n)
        expected = fac[0][0] if len(fac) == 1 else 1
        if gcd_list([binomial(n, k) for k in range(1, n)]) != expected:
            ok = False
    rows.append((f"gcd of binomial family: p for prime powers else 1, n <= {gcd_max}", ok))

    return rows
