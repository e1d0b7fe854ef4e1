import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import comb, factorial, prod

import pytest
from sympy import primerange

from eisenflat.algebra.padic import PadicApprox
from eisenflat.bernoulli import (
    bernoulli_exact,
    bernoulli_mod,
    gen_bernoulli_omega,
    hypothesis_report,
    irregular_pairs,
    lang_congruence_check,
    teichmuller,
)
from eisenflat.constants import LEVEL_GAMMA0_P2
from eisenflat.errors import (
    NotIntegralError,
    NotPrimeError,
    ParameterError,
    PrecisionError,
    SizeBoundError,
    VonStaudtPoleError,
)


@pytest.mark.parametrize(
    "n,value",
    [
        (0, Fraction(1)),
        (1, Fraction(1, 2)),
        (2, Fraction(1, 6)),
        (3, Fraction(0)),
        (4, Fraction(-1, 30)),
        (12, Fraction(-691, 2730)),
        (20, Fraction(-174611, 330)),
    ],
)
def test_small_bernoulli_numbers(n, value):
    assert bernoulli_exact(n) == value


def test_odd_indices_vanish():
    assert all(bernoulli_exact(n) == 0 for n in range(3, 60, 2))


def test_von_staudt_denominators():
    for n in range(2, 201, 2):
        expected = prod(q for q in primerange(2, n + 2) if n % (q - 1) == 0)
        assert bernoulli_exact(n).denominator == expected


@pytest.mark.parametrize("n", [1, 2, 9, 60, 120, 502, 520])
def test_values_satisfy_the_defining_recurrence(n):
    assert sum(comb(n + 1, j) * bernoulli_exact(j) for j in range(n + 1)) == n + 1


def test_largest_index_is_fast_and_exact():
    b = bernoulli_exact(5000)
    assert b < 0
    assert b.denominator == prod(q for q in primerange(2, 5002) if 5000 % (q - 1) == 0)
    assert bernoulli_exact(4998) > 0


def test_index_bounds():
    with pytest.raises(ParameterError):
        bernoulli_exact(-1)
    with pytest.raises(SizeBoundError):
        bernoulli_exact(5001)


def test_concurrent_cache_fill_is_consistent():
    indices = list(range(0, 161, 2))
    with ThreadPoolExecutor(max_workers=4) as pool:
        values = list(pool.map(bernoulli_exact, reversed(indices)))
    assert list(reversed(values)) == [bernoulli_exact(n) for n in indices]


def test_bernoulli_mod_and_pole():
    assert bernoulli_mod(12, 691).residue == 0
    assert bernoulli_mod(4, 7).residue == PadicApprox.from_fraction(7, 1, Fraction(-1, 30)).residue
    with pytest.raises(VonStaudtPoleError):
        bernoulli_mod(6, 7)
    with pytest.raises(VonStaudtPoleError):
        bernoulli_mod(12, 5)
    with pytest.raises(NotPrimeError):
        bernoulli_mod(4, 9)


def test_teichmuller_values():
    assert teichmuller(2, 5, 2).residue == 7
    assert teichmuller(4, 5, 3).residue == 124  # omega(-1) = -1
    for a in range(1, 7):
        w = teichmuller(a, 7, 3)
        assert pow(w.residue, 6, 343) == 1
        assert (w.residue - a) % 7 == 0
    with pytest.raises(ParameterError):
        teichmuller(7, 7, 2)


def _omega_by_iteration(a, p, digits):
    # omega(a) is the limit of a^(p^m); the sequence is stable after `digits` steps
    mod = p ** digits
    x = a % mod
    for _ in range(digits):
        x = pow(x, p, mod)
    return x


def _twisted_series_values(a, p, n_max):
    """n! [t^n] t e^{at} / (e^{pt} - 1) for n = 0..n_max, exactly."""
    num = [Fraction(a ** i, factorial(i)) for i in range(n_max + 1)]
    den = [Fraction(p ** (i + 1), factorial(i + 1)) for i in range(n_max + 1)]
    quotient = []
    for i in range(n_max + 1):
        acc = num[i] - sum(quotient[j] * den[i - j] for j in range(i))
        quotient.append(acc / den[0])
    return [quotient[n] * factorial(n) for n in range(n_max + 1)]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_generalized_bernoulli_matches_generating_series(p):
    precision, n_max = 2, 8
    digits = precision + 2
    mod = p ** digits
    series = {a: _twisted_series_values(a, p, n_max) for a in range(1, p)}
    for n in range(1, n_max + 1):
        for j in range(p - 1):
            total = 0
            for a in range(1, p):
                scaled = p * series[a][n]
                chi = pow(_omega_by_iteration(a, p, digits), j, mod)
                total += chi * (scaled.numerator * pow(scaled.denominator, -1, mod))
            total %= mod
            if total % p:
                with pytest.raises(NotIntegralError):
                    gen_bernoulli_omega(n, j, p, precision)
                continue
            got = gen_bernoulli_omega(n, j, p, precision)
            assert got.precision == precision
            assert got.residue == (total // p) % p ** precision, (p, n, j)


@pytest.mark.parametrize("p,n", [(5, 2), (7, 4), (11, 6), (13, 8), (7, 2)])
def test_trivial_character_gives_the_imprimitive_value(p, n):
    expected = PadicApprox.from_fraction(p, 2, (1 - p ** (n - 1)) * bernoulli_exact(n))
    assert gen_bernoulli_omega(n, 0, p, 2).congruent(expected)


def test_weight_two_trivial_character_at_seven():
    # 7 * sum_a B_2(a/7) = (1 - 7) / 6 = -1
    assert gen_bernoulli_omega(2, 0, 7, 2).residue == 48


def test_generalized_bernoulli_precision_bounds():
    with pytest.raises(PrecisionError):
        gen_bernoulli_omega(2, 1, 5, 0)
    with pytest.raises(PrecisionError):
        gen_bernoulli_omega(2, 1, 5, 5)
    with pytest.raises(ParameterError):
        gen_bernoulli_omega(0, 1, 5, 1)


@pytest.mark.parametrize("p,k,n", [(7, 4, 1), (7, 4, 2), (11, 6, 6), (13, 4, 3), (37, 32, 2)])
def test_lang_congruence_examples(p, k, n):
    assert lang_congruence_check(p, k, n)


def test_lang_congruence_sweep():
    for p in primerange(7, 50):
        for k in range(4, p - 1, 2):
            for n in range(1, 11):
                assert lang_congruence_check(p, k, n), (p, k, n)


def test_lang_congruence_when_p_divides_n():
    assert lang_congruence_check(7, 4, 7)
    assert lang_congruence_check(5, 2, 5)


def test_lang_congruence_rejects_bad_weights():
    with pytest.raises(ParameterError):
        lang_congruence_check(7, 3, 1)
    with pytest.raises(ParameterError):
        lang_congruence_check(7, 6, 1)


def test_kummer_congruences():
    rng = random.Random(17)
    primes = list(primerange(5, 50))
    for _ in range(50):
        p = rng.choice(primes)
        n = rng.randrange(2, p - 1, 2)
        m = n + (p - 1) * rng.randint(1, 6)
        left = PadicApprox.from_fraction(p, 1, bernoulli_exact(m) / m)
        right = PadicApprox.from_fraction(p, 1, bernoulli_exact(n) / n)
        assert left.congruent(right), (p, m, n)


def test_irregular_pairs_below_110():
    expected = {37: [32], 59: [44], 67: [58], 101: [68], 103: [24]}
    for p in primerange(3, 110):
        assert irregular_pairs(p) == expected.get(p, []), p


def test_gamma1_report_at_an_irregular_pair():
    report = hypothesis_report(37, 32)
    assert report.divides_Bk
    assert report.exactly_divides_Bk
    assert report.divides_B2_omega
    assert report.predicts_monogenic
    assert report.as_dict()["level"] == "gamma1"


def test_gamma1_report_at_a_regular_pair():
    report = hypothesis_report(37, 20)
    assert not report.divides_Bk
    assert not report.divides_B2_omega
    assert not report.predicts_dvr


def test_gamma1_weight_two_predicate_follows_the_weight_k_one():
    for p in primerange(7, 70):
        for k in range(4, p - 1, 2):
            report = hypothesis_report(p, k)
            assert report.divides_B2_omega == report.divides_Bk, (p, k)
            assert not report.exactly_divides_Bk or report.divides_Bk
            assert not report.exactly_divides_B2_omega or report.divides_B2_omega


@pytest.mark.parametrize("k", [2, 3, 36])
def test_gamma1_report_range(k):
    with pytest.raises(ParameterError):
        hypothesis_report(37, k)


def test_gamma0_report_gross_lubin_case():
    report = hypothesis_report(7, 5, LEVEL_GAMMA0_P2)
    assert report.k_prime == 5
    assert report.k_admissible
    assert report.gross_lubin_case
    assert report.coprime_B2k and report.coprime_Bp1m2k
    assert (report.tested_index_B2k, report.tested_index_Bp1m2k) == (10, 4)
    assert report.notes
    assert "divides_Bk" not in report.as_dict()


def test_gamma0_report_exceptional_weight():
    report = hypothesis_report(7, 4, LEVEL_GAMMA0_P2)
    assert report.k_prime is None
    assert not report.k_admissible


def test_gamma0_report_pole_is_noted():
    # 2k = 6 = p - 1 at p = 7
    report = hypothesis_report(7, 3, LEVEL_GAMMA0_P2)
    assert report.coprime_B2k
    assert any("not 7-integral" in note for note in report.notes)


def test_unknown_level():
    with pytest.raises(ParameterError):
        hypothesis_report(7, 4, "gamma2")
