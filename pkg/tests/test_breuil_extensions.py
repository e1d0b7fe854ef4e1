import random

import pytest

from eisenflat.algebra.fields import fq_make
from eisenflat.algebra.upoly import UPoly
from eisenflat.breuil import (
    ExtensionWitness,
    RankOneModule,
    canonical_examples,
    classify_eta,
    group_scheme_sequence,
    is_killed_by_p,
    p2_extension_exists,
    p_torsion_is_finite_flat,
    solve_extensions_oracle,
    validate_extension,
)
from eisenflat.errors import ParameterError, SizeBoundError

TAME_E = {3: (1, 2, 4, 5, 7), 5: (1, 2, 3, 4, 6, 7)}


def _witness(field, e, r, s, x, eta, a=1, b=1):
    return ExtensionWitness(
        RankOneModule.of(field, e, r, a),
        RankOneModule.of(field, e, s, b),
        UPoly.from_coeffs(field, e, x),
        UPoly.from_coeffs(field, e, eta),
    )


@pytest.mark.parametrize("p", [3, 5, 7])
def test_mu_p_by_z_mod_p_is_not_killed_by_p(p):
    field = fq_make(p, 1)
    e = p - 1
    w = _witness(field, e, e, 0, {}, {p: 1})
    assert validate_extension(w)
    assert group_scheme_sequence(w) == ("mu_p", "Z/pZ")
    assert not is_killed_by_p(w)
    assert not p_torsion_is_finite_flat(w)


def test_trivial_data_is_always_an_extension():
    rng = random.Random(5)
    field = fq_make(5, 1)
    for _ in range(30):
        e = rng.choice(TAME_E[5])
        r, s = rng.randint(0, e), rng.randint(0, e)
        w = _witness(field, e, r, s, {}, {}, rng.randint(1, 4), rng.randint(1, 4))
        assert validate_extension(w)
        assert is_killed_by_p(w)
        assert p_torsion_is_finite_flat(w)


def test_eta_outside_the_filtration_is_rejected():
    field = fq_make(3, 1)
    check = validate_extension(_witness(field, 7, 4, 2, {}, {3: 1}))
    assert not check
    assert "(u^4)" in check.diagnostic


def test_wrong_scalar_fails_the_master_equation():
    field = fq_make(5, 1)
    check = validate_extension(_witness(field, 4, 4, 0, {}, {5: 1}, a=1, b=2))
    assert not check
    assert check.diagnostic == "master equation fails"


def test_unit_eta_has_finite_flat_p_torsion():
    field = fq_make(3, 1)
    w = _witness(field, 2, 0, 0, {}, {0: 1})
    assert validate_extension(w)
    assert not is_killed_by_p(w)
    assert p_torsion_is_finite_flat(w)


@pytest.mark.parametrize("p,f,tame", [(3, 1, (2, 4, 5)), (3, 2, (1, 2, 4)), (5, 2, (1, 2, 3))])
def test_random_data_never_splits_the_two_checks(p, f, tame):
    # validate_extension raises InternalError when its two derivations disagree
    rng = random.Random(99 + 10 * p + f)
    field = fq_make(p, f)
    units = list(field.units())
    valid = 0
    for _ in range(1000 if f == 1 else 500):
        e = rng.choice(tame)
        r, s = rng.randint(0, e), rng.randint(0, e)
        n = p * e
        x = {rng.randrange(n): rng.choice(units) for _ in range(rng.randint(0, 2))}
        eta = {rng.randrange(n): rng.choice(units) for _ in range(rng.randint(0, 2))}
        valid += bool(validate_extension(_witness(field, e, r, s, x, eta, rng.choice(units), rng.choice(units))))
    assert valid > 0


def test_classify_etale_by_multiplicative():
    field = fq_make(3, 1)
    etas = classify_eta(2, 2, 0, field.one(), field.one())
    assert [str(eta) for eta in etas] == ["u^3", "2u^3"]


@pytest.mark.parametrize("e,r,s", [(4, 2, 2), (7, 4, 2), (5, 1, 0)])
def test_classify_empty_cases(e, r, s):
    field = fq_make(3, 1)
    assert classify_eta(e, r, s, field.one(), field.one()) == ()


def test_classify_needs_a_pm1_power_ratio():
    field = fq_make(5, 1)
    assert classify_eta(4, 0, 0, field.one(), field.element(2)) == ()
    assert len(classify_eta(4, 0, 0, field.one(), field.one())) == 4


def test_oracle_examples():
    field = fq_make(3, 1)
    one = field.one()
    result = solve_extensions_oracle(2, 2, 0, one, one)
    assert {str(eta) for eta in result.etas} == {"0", "u^3", "2u^3"}
    assert solve_extensions_oracle(7, 4, 2, one, one).nonzero_etas() == frozenset()


def test_oracle_size_bound():
    field = fq_make(101, 1)
    with pytest.raises(SizeBoundError):
        solve_extensions_oracle(50, 0, 0, field.one(), field.one())


def _assert_oracle_agrees(e, r, s, a, b):
    expected = set(classify_eta(e, r, s, a, b)) | {UPoly.zero(a.field, e)}
    assert set(solve_extensions_oracle(e, r, s, a, b).etas) == expected, (a.field, e, r, s, a, b)


@pytest.mark.slow
@pytest.mark.parametrize("p", [3, 5])
def test_oracle_matches_classification_over_prime_fields(p):
    field = fq_make(p, 1)
    for e in TAME_E[p]:
        for r in range(e + 1):
            for s in range(e + 1):
                for a in field.units():
                    for b in field.units():
                        _assert_oracle_agrees(e, r, s, a, b)


@pytest.mark.slow
def test_oracle_matches_classification_over_f9_for_every_pair():
    field = fq_make(3, 2)
    for e in TAME_E[3]:
        for r in range(e + 1):
            for s in range(e + 1):
                for a in field.units():
                    for b in field.units():
                        _assert_oracle_agrees(e, r, s, a, b)


@pytest.mark.slow
def test_oracle_matches_classification_over_f25():
    field = fq_make(5, 2)
    for e in TAME_E[5]:
        for r in range(e + 1):
            for s in range(e + 1):
                for b in field.units():
                    _assert_oracle_agrees(e, r, s, field.one(), b)


def test_oracle_depends_only_on_the_ratio():
    field = fq_make(3, 2)
    for a in field.units():
        for b in field.units():
            _assert_oracle_agrees(2, 2, 0, a, b)
            _assert_oracle_agrees(2, 0, 0, a, b)


@pytest.mark.parametrize("p", [3, 5])
def test_existence_criterion_forms_are_equivalent(p):
    for e in TAME_E[p]:
        for r in range(e + 1):
            for s in range(r + 1):
                if (r - s) % (p - 1):
                    continue
                k = (r - s) // (p - 1)
                assert (r >= p * s) == (k >= s)
                assert ((e - s) >= p * (e - r)) == (k >= e - r)


@pytest.mark.parametrize("p", [3, 5])
def test_existence_agrees_with_classification(p):
    field = fq_make(p, 1)
    for e in TAME_E[p]:
        for r in range(e + 1):
            for s in range(e + 1):
                for b in field.units():
                    exists = p2_extension_exists(e, (r, field.one()), (s, b))
                    assert exists == bool(classify_eta(e, r, s, field.one(), b))


def test_existence_examples():
    field = fq_make(3, 1)
    one = field.one()
    assert p2_extension_exists(2, (0, one), (0, one))
    assert p2_extension_exists(2, (2, one), (0, one))
    assert not p2_extension_exists(7, (4, one), (2, one))
    with pytest.raises(ParameterError):
        p2_extension_exists(2, (3, one), (0, one))


@pytest.mark.parametrize("p,f,es", [(3, 1, (1, 2, 4, 5, 7, 8)), (5, 1, (1, 2, 4, 6)), (7, 1, (6, 8)), (3, 2, (2, 4))])
def test_canonical_examples_validate(p, f, es):
    field = fq_make(p, f)
    for e in es:
        examples = canonical_examples(p, e, field)
        assert examples
        for named in examples:
            assert validate_extension(named.witness), named.name
            assert not is_killed_by_p(named.witness)
            if named.case == 2:
                assert named.witness.y.is_zero()


def test_canonical_examples_include_mu_p_by_z_mod_p():
    for p in (3, 5, 7):
        e = p - 1
        field = fq_make(p, 1)
        found = [
            n for n in canonical_examples(p, e)
            if n.case == 1 and n.witness.sub.r == e and n.witness.quot.r == 0
            and n.witness.sub.a == field.one() and n.witness.quot.a == field.one()
        ]
        assert len(found) == 1
        assert found[0].witness.eta == UPoly.monomial(field, e, p)
        assert group_scheme_sequence(found[0].witness) == ("mu_p", "Z/pZ")
