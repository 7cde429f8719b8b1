import random

import pytest

from checks import (check_charpoly_oracle, check_criterion_closed_form,
                    check_factor_roundtrip, naive_charpoly)
from psicert.homology import HVector, IntMatrix, transvection
from psicert.polylab import (CERTIFIED, INCONCLUSIVE, IntPolynomial, casson_bleiler,
                             charpoly, criterion, cyclotomic, euler_phi, factor_z,
                             find_certificate, has_root_of_unity, irreducible_mod_p,
                             is_power_substitution, squarefree_decomposition)

QUINTIC = IntPolynomial.of_coeffs([151200, -13500, 3837, 107, -21, 1])
OCTIC = IntPolynomial.of_coeffs([553, -558, 241, -76, -18, 26, -8, 0, 1])


def poly(*asc):
    return IntPolynomial.of_coeffs(asc)


def companion(p: IntPolynomial) -> IntMatrix:
    n = p.degree
    assert p.is_monic()
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p.coeffs[i]
    return IntMatrix.from_rows(rows)


class TestCharpoly:
    def test_diagonal(self):
        assert charpoly(IntMatrix.diagonal([3, 3, 0, 0])) == poly(0, 0, 9, -6, 1)

    def test_worked_four_by_four(self):
        m = IntMatrix.from_rows([[-3, 0, 3, 3], [0, -3, 3, -3], [-3, -3, 3, 0], [-3, 3, 0, 3]])
        chi = charpoly(m)
        assert chi == poly(81, 0, 18, 0, 1)
        assert chi == (poly(9, 0, 1)) * (poly(9, 0, 1))

    def test_zero_matrix(self):
        assert charpoly(IntMatrix.zero(5)) == poly(0, 0, 0, 0, 0, 1)

    def test_cofactor_oracle_suite(self):
        check_charpoly_oracle(200)

    def test_companion_matrix(self):
        p = poly(4, -2, 0, 1)
        assert charpoly(companion(p)) == p


class TestFactorZ:
    def test_difference_of_squares(self):
        fz = factor_z(poly(-1, 0, 1))
        assert fz.constant == 1
        assert [(q.coeffs, m) for q, m in fz.factors] == [((-1, 1), 1), ((1, 1), 1)]

    def test_repeated_quadratic(self):
        fz = factor_z(poly(9, 0, 1) * poly(9, 0, 1))
        assert [(q.coeffs, m) for q, m in fz.factors] == [((9, 0, 1), 2)]

    def test_quintic_square(self):
        fz = factor_z(QUINTIC * QUINTIC)
        assert [(q, m) for q, m in fz.factors] == [(QUINTIC, 2)]

    def test_content_and_sign(self):
        p = poly(-6, 0, 6).scale(2)  # 12(x^2 - 1)
        fz = factor_z(p)
        assert fz.expand() == p
        assert fz.constant == 12

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            factor_z(IntPolynomial.zero())

    def test_roundtrip_suite(self):
        check_factor_roundtrip(60)

    def test_swinnerton_dyer_style_recombination(self):
        # (x^2-2)(x^2-3): reducible over Z but every prime splits it further;
        # forces the lifting/recombination path rather than any certificate
        p = poly(-2, 0, 1) * poly(-3, 0, 1)
        fz = factor_z(p)
        assert [(q.coeffs, m) for q, m in fz.factors] == [((-3, 0, 1), 1), ((-2, 0, 1), 1)]

    def test_irreducible_quartic_without_small_certificate(self):
        # x^4+1 is reducible modulo every prime; only exhaustive recombination
        # can prove it irreducible
        p = poly(1, 0, 0, 0, 1)
        fz = factor_z(p)
        assert [(q.coeffs, m) for q, m in fz.factors] == [((1, 0, 0, 0, 1), 1)]
        assert find_certificate(p) is None

    def test_non_monic(self):
        p = poly(3, 5, 2)  # (x+1)(2x+3)
        fz = factor_z(p)
        assert fz.expand() == p
        assert sorted(q.coeffs for q, _ in fz.factors) == [(1, 1), (3, 2)]

    @pytest.mark.parametrize("n", [6, 12, 18, 24, 30])
    def test_cyclotomic_oracle(self, n):
        # x^n - 1 factors into exactly the cyclotomics of the divisors of n
        p = poly(*([-1] + [0] * (n - 1) + [1]))
        fz = factor_z(p)
        expected = sorted((cyclotomic(d) for d in range(1, n + 1) if n % d == 0),
                          key=lambda q: (q.degree, q.coeffs))
        assert [q for q, m in fz.factors] == expected
        assert all(m == 1 for _, m in fz.factors)

    def test_everywhere_locally_reducible_product(self):
        # x^4 - 10x^2 + 1 is irreducible over Z yet reducible modulo every
        # prime, so recombination must reassemble it out of the modular pieces
        hard = poly(1, 0, -10, 0, 1)
        p = hard * poly(1, 0, 0, 0, 1)
        fz = factor_z(p)
        assert sorted(q.coeffs for q, _ in fz.factors) == [
            (1, 0, -10, 0, 1), (1, 0, 0, 0, 1)]
        assert find_certificate(hard) is None

    def test_repeated_cyclotomic_square(self):
        p = (cyclotomic(5) * cyclotomic(8)) ** 2
        fz = factor_z(p)
        assert [(q, m) for q, m in fz.factors] == [
            (cyclotomic(8), 2), (cyclotomic(5), 2)]


class TestSquarefree:
    def test_multiplicities(self):
        p = poly(-1, 1) ** 2 * poly(2, 1)
        decomp = squarefree_decomposition(p)
        assert decomp == [(poly(2, 1), 1), (poly(-1, 1), 2)]

    def test_random_reconstruction(self):
        rng = random.Random(8)
        for _ in range(30):
            parts = []
            for mult in (1, 2, 3):
                if rng.random() < 0.7:
                    deg = rng.randrange(1, 3)
                    parts.append((IntPolynomial.of_coeffs(
                        [rng.randrange(-4, 5) for _ in range(deg)] + [1]), mult))
            if not parts:
                continue
            p = IntPolynomial.one()
            for q, m in parts:
                p = p * q ** m
            if p.degree < 1:
                continue
            rebuilt = IntPolynomial.one()
            for q, m in squarefree_decomposition(p):
                rebuilt = rebuilt * q ** m
            assert rebuilt == p.primitive_part()


class TestIrreducibleModP:
    def test_quintic_mod_17(self):
        assert irreducible_mod_p(QUINTIC, 17) is True

    def test_octic_mod_11(self):
        assert irreducible_mod_p(OCTIC, 11) is True

    def test_x2_plus_1_mod_2(self):
        assert irreducible_mod_p(poly(1, 0, 1), 2) is False  # (x+1)^2

    def test_prime_validation(self):
        with pytest.raises(ValueError):
            irreducible_mod_p(poly(1, 0, 1), 9)

    def test_leading_coefficient_guard(self):
        with pytest.raises(ValueError):
            irreducible_mod_p(poly(1, 0, 3), 3)


class TestCriterion:
    def test_even_degree_square(self):
        rep = criterion(poly(9, 0, 1) * poly(9, 0, 1))
        assert rep.verdict == INCONCLUSIVE
        assert rep.reasons["even_degree_split"] is True

    def test_two_odd_factors(self):
        rep = criterion(QUINTIC * QUINTIC)
        assert rep.verdict == CERTIFIED
        assert rep.reasons["two_odd_irreducible_factors"] is True

    def test_irreducible_octic(self):
        rep = criterion(OCTIC)
        assert rep.verdict == CERTIFIED
        assert rep.reasons["irreducible"] is True

    def test_linear_factors(self):
        rep = criterion(poly(-1, 0, 1))
        assert rep.verdict == INCONCLUSIVE
        assert rep.reasons["degree_one_factor"] is True

    def test_non_monic_rejected(self):
        with pytest.raises(ValueError):
            criterion(poly(1, 0, 2))

    def test_closed_form_suite(self):
        check_criterion_closed_form(12)

    def test_certificate_selection(self):
        rep = criterion(QUINTIC * QUINTIC, primes=[17])
        assert rep.certificates[0].prime == 17
        assert rep.certificates[0].method == "distinct-degree-gcd"

    def test_scaling_robustness(self):
        rng = random.Random(13)
        for _ in range(20):
            n = rng.choice((4, 6))
            m = IntMatrix.from_rows([[2 * rng.randrange(-3, 4) for _ in range(n)]
                                     for _ in range(n)])
            half = m.exact_divide(2)
            assert criterion(charpoly(m)).verdict == criterion(charpoly(half)).verdict


class TestRootsOfUnity:
    def test_cyclotomic_detected(self):
        assert has_root_of_unity(poly(1, 1, 1)) is True

    def test_shifted_linear(self):
        assert has_root_of_unity(poly(-2, 1)) is False

    def test_golden_quadratic(self):
        assert has_root_of_unity(poly(1, -3, 1)) is False

    def test_larger_order(self):
        assert has_root_of_unity(cyclotomic(12) * poly(1, -3, 1)) is True

    def test_cyclotomic_table(self):
        assert cyclotomic(1) == poly(-1, 1)
        assert cyclotomic(2) == poly(1, 1)
        assert cyclotomic(6) == poly(1, -1, 1)
        assert cyclotomic(12) == poly(1, 0, -1, 0, 1)

    def test_cyclotomic_product(self):
        for n in (1, 2, 6, 12, 18, 20):
            prod = IntPolynomial.one()
            for d in range(1, n + 1):
                if n % d == 0:
                    prod = prod * cyclotomic(d)
            assert prod == poly(*([-1] + [0] * (n - 1) + [1]))

    def test_phi(self):
        assert [euler_phi(d) for d in (1, 2, 6, 12, 17)] == [1, 1, 2, 4, 16]


class TestPowerSubstitution:
    def test_detected(self):
        assert is_power_substitution(poly(1, 0, 3, 0, 1)) == 2

    def test_absent(self):
        assert is_power_substitution(poly(1, -3, 1)) is None

    def test_constant_convention(self):
        assert is_power_substitution(poly(5)) is None


class TestCassonBleiler:
    def test_certified(self):
        rep = casson_bleiler(companion(poly(1, -3, 1)))
        assert rep.verdict == CERTIFIED
        assert rep.irreducible and not rep.root_of_unity and rep.power_substitution is None

    def test_identity_inconclusive(self):
        rep = casson_bleiler(IntMatrix.identity(4))
        assert rep.verdict == INCONCLUSIVE
        assert rep.root_of_unity is True

    def test_power_substitution_inconclusive(self):
        rep = casson_bleiler(companion(poly(1, 0, 3, 0, 1)))
        assert rep.verdict == INCONCLUSIVE
        assert rep.power_substitution == 2


class TestPolynomialBasics:
    def test_divmod_exact(self):
        q, r = poly(-1, 0, 1).divmod_exact(poly(-1, 1))
        assert q == poly(1, 1) and r.is_zero()

    def test_divmod_non_divisible(self):
        assert poly(1, 1).divmod_exact(poly(0, 2)) is None

    def test_str(self):
        assert str(poly(81, 0, 18, 0, 1)) == "x^4 + 18x^2 + 81"
        assert str(poly(-1, 1)) == "x - 1"
        assert str(IntPolynomial.zero()) == "0"

    def test_oracle_agreement_small(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert charpoly(m) == naive_charpoly(m)

    def test_transvection_charpoly_unipotent(self):
        t = transvection(HVector(2, (1, 2, 0, -1)))
        assert charpoly(t) == poly(1, -4, 6, -4, 1)  # (x-1)^4
