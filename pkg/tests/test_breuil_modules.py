import pytest

from eisenflat.algebra.fields import fq_make
from eisenflat.algebra.upoly import UPoly
from eisenflat.breuil import HomWitness, RankOneModule, hom_space, oort_tate_of
from eisenflat.constants import KIND_ETALE, KIND_LOCAL_LOCAL, KIND_MULTIPLICATIVE
from eisenflat.errors import FieldMismatchError, ParameterError

TAME_E = {3: (1, 2, 4, 5, 7), 5: (1, 2, 3, 4, 6, 7)}


def test_etale_and_multiplicative_labels():
    field = fq_make(3, 1)
    etale = oort_tate_of(RankOneModule.of(field, 2, 2))
    mult = oort_tate_of(RankOneModule.of(field, 2, 0))
    other = oort_tate_of(RankOneModule.of(field, 2, 1, 2))
    assert (etale.kind, etale.label) == (KIND_ETALE, "Z/pZ")
    assert (mult.kind, mult.label) == (KIND_MULTIPLICATIVE, "mu_p")
    assert (other.kind, other.label) == (KIND_LOCAL_LOCAL, "G_{1,2}")
    assert mult.affine_algebra_exponent == 2
    assert other.to_module() == RankOneModule.of(field, 2, 1, 2)


def test_module_validation():
    field = fq_make(5, 1)
    with pytest.raises(ParameterError):
        RankOneModule.of(field, 2, 3)
    with pytest.raises(ParameterError):
        RankOneModule.of(field, 5, 1)
    with pytest.raises(ParameterError):
        RankOneModule.of(field, 2, 1, 0)


def test_phi1_on_the_filtration():
    field = fq_make(3, 1)
    m = RankOneModule.of(field, 2, 1, 2)
    assert m.phi1(UPoly.monomial(field, 2, 1)) == UPoly.monomial(field, 2, 0, 2)
    assert m.phi1(UPoly.monomial(field, 2, 2)) == UPoly.monomial(field, 2, 3, 2)
    with pytest.raises(ParameterError):
        m.phi1(UPoly.monomial(field, 2, 0))


def test_hom_from_mu_p_to_etale():
    field = fq_make(3, 1)
    hom = hom_space(RankOneModule.of(field, 2, 0), RankOneModule.of(field, 2, 2))
    assert hom.dimension == 1
    assert hom.m == 3
    assert {str(w.image()) for w in hom.witnesses} == {"u^3", "2u^3"}


def test_hom_vanishes_off_the_degree_condition():
    field = fq_make(3, 1)
    assert not hom_space(RankOneModule.of(field, 2, 1), RankOneModule.of(field, 2, 2))
    assert not hom_space(RankOneModule.of(field, 2, 2), RankOneModule.of(field, 2, 0))


def test_endomorphisms_are_the_scalars():
    field = fq_make(3, 2)
    m = RankOneModule.of(field, 2, 1, field.gen())
    hom = hom_space(m, m)
    assert hom.m == 0
    assert {w.c for w in hom.witnesses} == {field.one(), field.element(2)}


def test_hom_needs_a_pm1_power_ratio():
    field = fq_make(5, 1)
    assert not hom_space(RankOneModule.of(field, 2, 0, 2), RankOneModule.of(field, 2, 0, 1))


def test_witness_validation():
    field = fq_make(3, 1)
    src, dst = RankOneModule.of(field, 2, 0), RankOneModule.of(field, 2, 2)
    with pytest.raises(ParameterError):
        HomWitness(src, dst, 2, field.one())
    with pytest.raises(FieldMismatchError):
        hom_space(src, RankOneModule.of(fq_make(5, 1), 2, 2))


def _brute_force_dimension(src, dst):
    field, e, p = src.field, src.e, src.p
    count = 0
    for m in range(e * p):
        for c in field.units():
            image = UPoly.monomial(field, e, m, c)
            fil = image.shift(src.r)
            if not fil.in_ideal(dst.r):
                continue
            if dst.phi1(fil) == image.scale(src.a):
                count += 1
    dim = 0
    while p ** dim < count + 1:
        dim += 1
    assert p ** dim == count + 1
    return dim


@pytest.mark.slow
@pytest.mark.parametrize("p", [3, 5])
def test_hom_matches_brute_force(p):
    field = fq_make(p, 1)
    sources = [1] if p == 5 else list(range(1, p))
    for e in TAME_E[p]:
        for r in range(e + 1):
            for s in range(e + 1):
                for a in sources:
                    for b in range(1, p):
                        src = RankOneModule.of(field, e, s, b)
                        dst = RankOneModule.of(field, e, r, a)
                        assert hom_space(src, dst).dimension == _brute_force_dimension(src, dst), (e, r, s, a, b)
