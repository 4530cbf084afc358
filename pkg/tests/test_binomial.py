"""Closed forms for the binomial-coefficient semigroups vs the generic engine."""

import pytest

from frobinom.binomial import (
    DegenerateSemigroupError,
    bn_apery_closed,
    bn_embedding_dimension,
    bn_family,
    bn_frobenius,
    bn_genus,
    bn_minimal_system,
    bn_pseudo_frobenius,
    bn_report,
    bn_spec,
    decompose,
    identity_pm_check,
    identity_pq_check,
    verify_closed_vs_oracle,
)
from frobinom.exactmath import binomial, gcd_list, is_prime
from frobinom.semigroup import NumericalSemigroup, minimal_generators

COMPOSITES_30 = [n for n in range(4, 31) if not is_prime(n)]
COMPOSITES_100 = [n for n in range(4, 101) if not is_prime(n)]


class TestSpec:
    def test_examples(self):
        spec = bn_spec(50)
        assert (spec.scale, spec.is_prime_power) == (1, False)
        assert spec.factorization == ((2, 1), (5, 2))
        assert bn_spec(8).scale == 2
        assert bn_spec(9).scale == 3
        assert bn_spec(9).is_prime_power

    def test_domain_error(self):
        with pytest.raises(ValueError):
            bn_spec(1)

    def test_scale_equals_family_gcd_up_to_200(self):
        for n in range(2, 201):
            raw = [binomial(n, k) for k in range(1, n)]
            assert bn_spec(n).scale == gcd_list(raw), n

    def test_family_is_scaled(self):
        assert bn_family(9) == [3, 12, 28, 42, 42, 28, 12, 3]
        assert bn_family(6) == [6, 15, 20, 15, 6]


class TestMinimalSystem:
    def test_examples(self):
        assert bn_minimal_system(12) == [12, 66, 220, 495]
        assert bn_minimal_system(9) == [3, 28]
        assert bn_minimal_system(6) == [6, 15, 20]
        assert bn_minimal_system(5) == [1]  # prime: everything collapses to N

    def test_embedding_dimension_examples(self):
        assert bn_embedding_dimension(12) == 4
        assert bn_embedding_dimension(70) == 4
        assert bn_embedding_dimension(9) == 2

    def test_dimension_matches_system_size_up_to_100(self):
        for n in range(2, 101):
            assert bn_embedding_dimension(n) == len(bn_minimal_system(n)), n

    def test_matches_engine_up_to_30(self):
        for n in COMPOSITES_30:
            assert bn_minimal_system(n) == minimal_generators(bn_family(n)), n


class TestAperyClosed:
    def test_examples(self):
        assert bn_apery_closed(6) == (6, (0, 15, 20, 35, 40, 55))
        assert bn_apery_closed(9) == (3, (0, 28, 56))
        assert bn_apery_closed(4) == (2, (0, 3))

    def test_prime_rejected(self):
        with pytest.raises(DegenerateSemigroupError):
            bn_apery_closed(11)

    def test_structure_up_to_100(self):
        for n in COMPOSITES_100:
            base, ap = bn_apery_closed(n)
            assert len(ap) == base
            assert len({w % base for w in ap}) == base
            assert ap[0] == 0
            assert max(ap) - base == bn_frobenius(n)


class TestClosedQuantities:
    def test_frobenius_golden_values(self):
        assert bn_frobenius(50) == 505642434227223
        assert bn_frobenius(70) == 7241062721
        assert bn_frobenius(4) == 1

    def test_frobenius_rejects_primes(self):
        for p in (2, 3, 7, 97):
            with pytest.raises(DegenerateSemigroupError):
                bn_frobenius(p)

    def test_genus_examples(self):
        assert bn_genus(6) == 25
        assert bn_genus(50) == 252821217113612
        assert bn_genus(4) == 1

    def test_symmetry_identity_up_to_100(self):
        for n in COMPOSITES_100:
            assert 2 * bn_genus(n) == bn_frobenius(n) + 1, n

    def test_pseudo_frobenius_examples(self):
        assert bn_pseudo_frobenius(6) == [49]
        assert bn_pseudo_frobenius(9) == [53]  # Sylvester on <3,28>: 3*28-3-28
        assert bn_pseudo_frobenius(70) == [7241062721]

    def test_report_fields(self):
        rep = bn_report(6)
        assert rep.minimal_generators == (6, 15, 20)
        assert (rep.frobenius, rep.genus, rep.embedding_dimension) == (49, 25, 3)
        assert rep.pseudo_frobenius == (49,)
        assert rep.type == 1 and rep.symmetric and rep.telescopic
        assert bn_report(50).frobenius == 505642434227223
        assert bn_report(9).minimal_generators == (3, 28)
        assert bn_report(9).frobenius == 53


class TestDecompose:
    def test_canonical_examples(self):
        rep = decompose(10, 3)
        assert rep.basis == (10, 45, 252)
        assert rep.coefficients == (12, 0, 0)  # Apery class of 120 is 0 mod 10
        assert rep.value == 120 and not rep.scaled

        rep = decompose(6, 3)
        assert rep.coefficients == (0, 0, 1)  # the target is the generator 20
        assert rep.value == 20

        rep = decompose(50, 7)
        assert sum(c * b for c, b in zip(rep.coefficients, rep.basis)) == binomial(50, 7)

    def test_scaled_prime_power(self):
        rep = decompose(9, 2)
        assert rep.scaled and rep.basis == (3, 28)
        assert rep.value == binomial(9, 2) // 3
        assert sum(c * b for c, b in zip(rep.coefficients, rep.basis)) == rep.value

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            decompose(10, 0)
        with pytest.raises(ValueError):
            decompose(10, 10)
        with pytest.raises(DegenerateSemigroupError):
            decompose(7, 3)

    def test_soundness_sweep_up_to_40(self):
        for n in range(4, 41):
            if is_prime(n):
                continue
            scale = bn_spec(n).scale
            for m in range(1, n):
                rep = decompose(n, m)
                assert all(c >= 0 for c in rep.coefficients), (n, m)
                total = sum(c * b for c, b in zip(rep.coefficients, rep.basis))
                assert total == rep.value == binomial(n, m) // scale, (n, m)

    def test_box_coefficients_stay_in_bounds(self):
        # non-multiplicity coefficients never reach their prime's bound
        for n in (12, 30, 36):
            bounds = _bounds_by_value(n)
            for m in range(1, n):
                rep = decompose(n, m)
                assert len(rep.coefficients) == len(bounds) + 1
                for c, p in zip(rep.coefficients[1:], bounds):
                    assert 0 <= c < p, (n, m)


def _bounds_by_value(n):
    spec = bn_spec(n)
    pairs = sorted((binomial(n, p**j), p)
                   for p, k in spec.factorization for j in range(1, k + 1))
    return [p for _, p in pairs]


class TestIdentityPQ:
    def test_example_3_5_2(self):
        lead, holds = identity_pq_check(3, 5, 2)
        assert (lead, holds) == (-1085, True)

    def test_r_one(self):
        lead, holds = identity_pq_check(2, 5, 1)
        assert holds
        assert lead * 10 + 2 * binomial(10, 2) + 5 * binomial(10, 5) == 10

    def test_example_3_5_7(self):
        assert identity_pq_check(3, 5, 7)[1]

    def test_exhaustive_prime_pairs_up_to_13(self):
        primes = [2, 3, 5, 7, 11, 13]
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                for r in range(p * q + 1):
                    if r % p == 0 or r % q == 0:
                        continue
                    lead, holds = identity_pq_check(p, q, r)
                    assert holds, (p, q, r)
                    assert lead * p * q + p * binomial(p * q, p) + q * binomial(p * q, q) \
                        == binomial(p * q, r)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            identity_pq_check(4, 5, 3)
        with pytest.raises(ValueError):
            identity_pq_check(3, 3, 2)
        with pytest.raises(ValueError):
            identity_pq_check(3, 5, 6)  # multiple of 3


class TestIdentityPM:
    def test_lead_integral_exactly_when_p_divides_m_minus_1(self):
        # the numerator is == -(m-1)*p^(m-1) mod p^m for every r coprime to p,
        # so integrality is an (p, m) property, independent of r
        for p, m in [(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3)]:
            n = p**m
            for r in range(1, n):
                if r % p == 0:
                    continue
                with pytest.raises(RuntimeError):
                    identity_pm_check(p, m, r)

    def test_holds_at_p3_m4(self):
        # first odd-prime case with p | m-1: every valid r is integral
        n = 3**4
        for r in range(1, n):
            if r % 3 == 0:
                continue
            lead, holds = identity_pm_check(3, 4, r)
            assert holds, r

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            identity_pm_check(2, 3, 1)
        with pytest.raises(ValueError):
            identity_pm_check(3, 1, 1)
        with pytest.raises(ValueError):
            identity_pm_check(3, 2, 6)


class TestOracleEquivalence:
    @pytest.mark.parametrize("n", [6, 9, 30])
    def test_single(self, n):
        cmp = verify_closed_vs_oracle(n)
        assert cmp.all_match, cmp.mismatches

    def test_full_sweep_4_to_30(self):
        for n in COMPOSITES_30:
            cmp = verify_closed_vs_oracle(n)
            assert cmp.all_match, (n, cmp.mismatches)

    def test_bound_enforced(self):
        with pytest.raises(ValueError):
            verify_closed_vs_oracle(36)

    def test_closed_telescopic_claim_matches_engine_up_to_30(self):
        for n in COMPOSITES_30:
            assert NumericalSemigroup(bn_family(n)).is_telescopic(), n
